#include "gring/parse.hpp"

#include <cctype>
#include <sstream>

namespace gring {

namespace {

class Cursor {
public:
    Cursor(std::string_view text) : text_(text) {}

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool done() {
        skip_ws();
        return pos_ >= text_.size();
    }
    char peek() {
        skip_ws();
        if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
        return text_[pos_];
    }
    char take() {
        char c = peek();
        ++pos_;
        return c;
    }
    bool accept(char c) {
        if (!done() && peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    std::size_t pos() const { return pos_; }

    Int integer() {
        skip_ws();
        std::string digits;
        if (pos_ < text_.size() && text_[pos_] == '-') {
            digits.push_back('-');
            ++pos_;
        }
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            digits.push_back(text_[pos_++]);
        if (pos_ == start) throw ParseError("expected an integer", pos_);
        return Int(digits);
    }

private:
    std::string_view text_;
    std::size_t pos_{0};
};

bool starts_number(char c) { return std::isdigit(static_cast<unsigned char>(c)) || c == '-'; }

Rat parse_coeff(Cursor& cur) {
    Int num = cur.integer();
    if (cur.accept('/')) {
        std::size_t at = cur.pos();
        Int den = cur.integer();
        if (den == 0) throw ParseError("zero denominator", at);
        return Rat(num, den);
    }
    return Rat(num);
}

Word parse_word(Cursor& cur, const Alphabet& alphabet) {
    std::size_t at = cur.pos();
    if (cur.accept('1')) return Word{};
    std::vector<Letter> raw;
    bool any = false;
    while (!cur.done()) {
        char c = cur.peek();
        if (c < 'a' || c > 'z') break;
        auto gen = alphabet.generator_of(c);
        if (!gen) throw ParseError(std::string("unknown generator letter '") + c + "'", cur.pos());
        cur.take();
        bool inverse = cur.accept('\'');
        Int power(1);
        if (cur.accept('^')) power = cur.integer();
        if (power < 0) {
            inverse = !inverse;
            power = -power;
        }
        if (power > 4096) throw ParseError("exponent too large", cur.pos());
        Letter s = static_cast<Letter>(inverse ? -*gen : *gen);
        for (Int i = 0; i < power; ++i) raw.push_back(s);
        any = true;
    }
    if (!any) throw ParseError("expected a word", at);
    return Word::reduce(raw, alphabet.rank());
}

} // namespace

RingElement parse_element(std::string_view text, const CoeffDomain& domain,
                          const Alphabet& alphabet) {
    Cursor cur(text);
    RingElement out(domain, alphabet);
    bool first = true;
    while (true) {
        int sign = 1;
        if (first) {
            if (cur.done()) throw ParseError("empty element", cur.pos());
            if (cur.peek() == '+' || cur.peek() == '-') sign = (cur.take() == '-') ? -1 : 1;
        } else {
            if (cur.done()) break;
            char op = cur.take();
            if (op != '+' && op != '-')
                throw ParseError("expected '+' or '-' between terms", cur.pos() - 1);
            sign = (op == '-') ? -1 : 1;
        }

        Rat coeff(1);
        Word w;
        char c = cur.peek();
        if (starts_number(c)) {
            coeff = parse_coeff(cur);
            if (cur.accept('*'))
                w = parse_word(cur, alphabet);
        } else {
            w = parse_word(cur, alphabet);
        }
        if (sign < 0) coeff = -coeff;
        out.accumulate(w, domain.canon(coeff));
        first = false;
    }
    return out;
}

std::string format_word(const Word& w, const Alphabet& alphabet) {
    if (w.is_identity()) return "1";
    std::string out;
    auto letters = w.letters();
    std::size_t i = 0;
    while (i < letters.size()) {
        Letter s = letters[i];
        std::size_t run = 1;
        while (i + run < letters.size() && letters[i + run] == s) ++run;
        out.push_back(alphabet.name_of(std::abs(static_cast<int>(s))));
        if (s < 0) out.push_back('\'');
        if (run > 1) {
            out.push_back('^');
            out += std::to_string(run);
        }
        i += run;
    }
    return out;
}

std::string format_coeff(const Rat& c) {
    std::ostringstream os;
    os << numerator(c);
    if (denominator(c) != 1) os << '/' << denominator(c);
    return os.str();
}

std::string format_element(const RingElement& x) {
    if (x.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [w, c] : x.terms()) {
        Rat mag = c;
        if (first) {
            if (c < 0) {
                out += "-";
                mag = -c;
            }
        } else {
            out += (c < 0) ? "-" : "+";
            if (c < 0) mag = -c;
        }
        if (w.is_identity()) {
            out += format_coeff(mag);
        } else if (mag == 1) {
            out += format_word(w, x.alphabet());
        } else {
            out += format_coeff(mag);
            out += "*";
            out += format_word(w, x.alphabet());
        }
        first = false;
    }
    return out;
}

Rat parse_rational(std::string_view text) {
    Cursor cur(text);
    Rat v = parse_coeff(cur);
    if (!cur.done()) throw ParseError("trailing characters after rational", cur.pos());
    return v;
}

std::vector<RingElement> parse_vector(std::string_view text, const CoeffDomain& domain,
                                      const Alphabet& alphabet) {
    std::vector<RingElement> out;
    std::size_t start = 0;
    while (true) {
        std::size_t sep = text.find(';', start);
        std::string_view piece =
            sep == std::string_view::npos ? text.substr(start) : text.substr(start, sep - start);
        out.push_back(parse_element(piece, domain, alphabet));
        if (sep == std::string_view::npos) break;
        start = sep + 1;
    }
    return out;
}

} // namespace gring
