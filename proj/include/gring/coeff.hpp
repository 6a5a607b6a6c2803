#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/gmp.hpp>

namespace gring {

using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

/// A coefficient value.  Storage is always an exact rational; the active
/// CoeffDomain keeps values canonical (lowest terms over Q, residues in
/// [0,p) over F_p, integers over Z).  No floating point anywhere.
using Coeff = Rat;

/// One of Q, F_p (p prime, checked by trial division), or Z.
class CoeffDomain {
public:
    enum class Kind { rationals, prime_field, integers };

    static CoeffDomain rationals();
    static CoeffDomain prime_field(std::uint64_t p);
    static CoeffDomain integers();

    Kind kind() const noexcept { return kind_; }
    std::uint64_t prime() const;
    bool is_field() const noexcept { return kind_ != Kind::integers; }
    std::string name() const;

    /// Canonical representative of a rational in this domain.  Over F_p a
    /// denominator is inverted mod p; over Z non-integers are rejected.
    Coeff canon(const Rat& v) const;

    Coeff add(const Coeff& a, const Coeff& b) const;
    Coeff sub(const Coeff& a, const Coeff& b) const;
    Coeff mul(const Coeff& a, const Coeff& b) const;
    Coeff neg(const Coeff& a) const;
    /// Multiplicative inverse; throws on zero and over Z.
    Coeff inv(const Coeff& a) const;
    static bool is_zero(const Coeff& a) { return a == 0; }

    Coeff one() const { return Coeff(1); }
    Coeff zero() const { return Coeff(0); }

    bool operator==(const CoeffDomain&) const = default;

private:
    CoeffDomain(Kind k, std::uint64_t p) : kind_(k), p_(p) {}
    Kind kind_;
    std::uint64_t p_;
};

bool is_prime_u64(std::uint64_t n);

} // namespace gring
