#include "gring/coeff.hpp"

#include <stdexcept>

namespace gring {

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    if (n > (1ull << 40))
        throw std::invalid_argument("prime modulus too large for trial division");
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

CoeffDomain CoeffDomain::rationals() { return CoeffDomain(Kind::rationals, 0); }

CoeffDomain CoeffDomain::prime_field(std::uint64_t p) {
    if (!is_prime_u64(p)) throw std::invalid_argument("modulus is not prime");
    return CoeffDomain(Kind::prime_field, p);
}

CoeffDomain CoeffDomain::integers() { return CoeffDomain(Kind::integers, 0); }

std::uint64_t CoeffDomain::prime() const {
    if (kind_ != Kind::prime_field) throw std::logic_error("domain has no prime modulus");
    return p_;
}

std::string CoeffDomain::name() const {
    switch (kind_) {
    case Kind::rationals: return "Q";
    case Kind::prime_field: return "F" + std::to_string(p_);
    case Kind::integers: return "Z";
    }
    return "?";
}

Coeff CoeffDomain::canon(const Rat& v) const {
    switch (kind_) {
    case Kind::rationals: return v; // mpq_rational is always in lowest terms
    case Kind::integers:
        if (denominator(v) != 1)
            throw std::domain_error("non-integral coefficient in Z domain");
        return v;
    case Kind::prime_field: {
        Int p(p_);
        Int num = numerator(v) % p;
        if (num < 0) num += p;
        Int den = denominator(v) % p;
        if (den == 0) throw std::domain_error("denominator divisible by p in F_p domain");
        if (den == 1) return Coeff(num);
        Int deninv = boost::multiprecision::powm(den, p - 2, p);
        return Coeff((num * deninv) % p);
    }
    }
    return v;
}

Coeff CoeffDomain::add(const Coeff& a, const Coeff& b) const { return canon(a + b); }
Coeff CoeffDomain::sub(const Coeff& a, const Coeff& b) const { return canon(a - b); }
Coeff CoeffDomain::mul(const Coeff& a, const Coeff& b) const { return canon(a * b); }
Coeff CoeffDomain::neg(const Coeff& a) const { return canon(-a); }

Coeff CoeffDomain::inv(const Coeff& a) const {
    if (a == 0) throw std::domain_error("inversion of zero");
    switch (kind_) {
    case Kind::rationals: return 1 / a;
    case Kind::integers: throw std::domain_error("Z is not a field: no inverses");
    case Kind::prime_field: {
        Int p(p_);
        Int num = numerator(canon(a));
        return Coeff(boost::multiprecision::powm(num, p - 2, p));
    }
    }
    throw std::logic_error("unreachable");
}

} // namespace gring
