#include "gring/words.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace gring {

namespace {

std::string default_letters(int rank) {
    static const std::string all = "abcdefghijklmnopqrstuvwxyz";
    if (rank < 1 || rank > 26)
        throw std::invalid_argument("alphabet rank must be between 1 and 26");
    return all.substr(0, static_cast<std::size_t>(rank));
}

} // namespace

Alphabet::Alphabet(int rank) : rank_(rank), letters_(default_letters(rank)) {}

Alphabet::Alphabet(int rank, std::string letters) : rank_(rank), letters_(std::move(letters)) {
    if (rank_ < 1 || rank_ > 26)
        throw std::invalid_argument("alphabet rank must be between 1 and 26");
    if (letters_.size() != static_cast<std::size_t>(rank_))
        throw std::invalid_argument("alphabet needs exactly one letter per generator");
    for (char c : letters_) {
        if (c < 'a' || c > 'z')
            throw std::invalid_argument("alphabet letters must be lowercase a-z");
        if (std::count(letters_.begin(), letters_.end(), c) != 1)
            throw std::invalid_argument("alphabet letters must be distinct");
    }
}

char Alphabet::name_of(int generator) const {
    if (generator < 1 || generator > rank_)
        throw std::out_of_range("generator index out of range");
    return letters_[static_cast<std::size_t>(generator - 1)];
}

std::optional<int> Alphabet::generator_of(char c) const {
    auto pos = letters_.find(c);
    if (pos == std::string::npos) return std::nullopt;
    return static_cast<int>(pos) + 1;
}

Word Word::reduce(std::span<const Letter> raw, int rank) {
    std::vector<Letter> out;
    out.reserve(raw.size());
    for (Letter s : raw) {
        if (s == 0 || std::abs(s) > rank)
            throw std::out_of_range("letter index out of range for alphabet rank");
        if (!out.empty() && out.back() == static_cast<Letter>(-s))
            out.pop_back();
        else
            out.push_back(s);
    }
    return Word::from_reduced(std::move(out));
}

Word Word::generator(int index, bool inverse) {
    if (index < 1) throw std::out_of_range("generator index must be positive");
    Word w;
    w.letters_.push_back(static_cast<Letter>(inverse ? -index : index));
    return w;
}

Word Word::from_reduced(std::vector<Letter> letters) {
    Word w;
    w.letters_ = std::move(letters);
    return w;
}

Word Word::inverse() const {
    std::vector<Letter> out(letters_.rbegin(), letters_.rend());
    for (Letter& s : out) s = static_cast<Letter>(-s);
    return Word::from_reduced(std::move(out));
}

Word Word::prefix(std::size_t len) const {
    return Word::from_reduced(std::vector<Letter>(letters_.begin(),
                                                  letters_.begin() + static_cast<std::ptrdiff_t>(len)));
}

Word operator*(const Word& u, const Word& v) {
    // Cancellation happens only at the seam.
    std::size_t i = u.letters_.size();
    std::size_t j = 0;
    while (i > 0 && j < v.letters_.size() &&
           u.letters_[i - 1] == static_cast<Letter>(-v.letters_[j])) {
        --i;
        ++j;
    }
    std::vector<Letter> out;
    out.reserve(i + (v.letters_.size() - j));
    out.insert(out.end(), u.letters_.begin(), u.letters_.begin() + static_cast<std::ptrdiff_t>(i));
    out.insert(out.end(), v.letters_.begin() + static_cast<std::ptrdiff_t>(j), v.letters_.end());
    return Word::from_reduced(std::move(out));
}

namespace {

// Orders g < g' < h < h' < ...
inline int letter_key(Letter s) {
    int base = std::abs(static_cast<int>(s)) * 2;
    return s < 0 ? base + 1 : base;
}

} // namespace

bool shortlex_less(const Word& u, const Word& v) {
    if (u.length() != v.length()) return u.length() < v.length();
    auto a = u.letters();
    auto b = v.letters();
    for (std::size_t i = 0; i < a.size(); ++i) {
        int ka = letter_key(a[i]);
        int kb = letter_key(b[i]);
        if (ka != kb) return ka < kb;
    }
    return false;
}

std::size_t common_prefix_length(const Word& u, const Word& v) {
    std::size_t n = std::min(u.length(), v.length());
    std::size_t k = 0;
    while (k < n && u.letter(k) == v.letter(k)) ++k;
    return k;
}

} // namespace gring
