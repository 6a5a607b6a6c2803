#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "gring/ring.hpp"

namespace gring {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
          position_(position) {}
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// Grammar:  element := [sign] term (sign term)*
///           term    := coeff ['*' word] | word
///           coeff   := ['-'] int ['/' int]
///           word    := '1' | (letter ['\''] ['^' ['-'] int])+
/// Whitespace is insignificant.  `'` marks an inverse, `^` integer powers.
RingElement parse_element(std::string_view text, const CoeffDomain& domain,
                          const Alphabet& alphabet);

/// Terms in (length, lexicographic) order, `'` for inverses, runs of a
/// letter collapsed to powers.  parse(format(x)) == x.
std::string format_element(const RingElement& x);

std::string format_word(const Word& w, const Alphabet& alphabet);

std::string format_coeff(const Rat& c);

/// Rational literal "p/q" or integer.
Rat parse_rational(std::string_view text);

/// ';'-separated element list (vector entries).
std::vector<RingElement> parse_vector(std::string_view text, const CoeffDomain& domain,
                                      const Alphabet& alphabet);

} // namespace gring
