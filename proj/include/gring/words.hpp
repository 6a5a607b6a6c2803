#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace gring {

/// Signed generator index: +i is generator i (1-based), -i its inverse.
using Letter = std::int16_t;

/// Generator alphabet of the free group F_n, together with the letter
/// names used for parsing and printing.  Names default to a, b, c, ...
/// in rank order and can be overridden (e.g. "gh" for the rank-2
/// convention used throughout the docs).
class Alphabet {
public:
    explicit Alphabet(int rank);
    Alphabet(int rank, std::string letters);

    int rank() const noexcept { return rank_; }
    const std::string& letters() const noexcept { return letters_; }

    /// Printable name of generator i (1-based).
    char name_of(int generator) const;
    /// Generator index for a letter name, if it is part of this alphabet.
    std::optional<int> generator_of(char c) const;

    bool operator==(const Alphabet&) const = default;

private:
    int rank_;
    std::string letters_;
};

/// A reduced word in F_n.  The empty word is the identity.  Words are
/// immutable values; all operations return fresh words in reduced form.
class Word {
public:
    Word() = default;

    /// Free reduction of an arbitrary letter sequence.  Validates that
    /// every letter references a generator within `rank`.
    static Word reduce(std::span<const Letter> raw, int rank);
    static Word generator(int index, bool inverse = false);

    /// Letters are trusted to be reduced; used by internal fast paths.
    static Word from_reduced(std::vector<Letter> letters);

    bool is_identity() const noexcept { return letters_.empty(); }
    std::size_t length() const noexcept { return letters_.size(); }
    std::span<const Letter> letters() const noexcept { return letters_; }
    Letter letter(std::size_t i) const { return letters_[i]; }

    Word inverse() const;
    Word prefix(std::size_t len) const;

    friend Word operator*(const Word& u, const Word& v);

    bool operator==(const Word&) const = default;

private:
    std::vector<Letter> letters_;
};

/// (length, lexicographic) order; the lexicographic tie-break orders a
/// generator before its inverse, then by generator index.
bool shortlex_less(const Word& u, const Word& v);

struct ShortlexLess {
    bool operator()(const Word& u, const Word& v) const { return shortlex_less(u, v); }
};

/// Length of the longest common prefix of two reduced words.
std::size_t common_prefix_length(const Word& u, const Word& v);

} // namespace gring
