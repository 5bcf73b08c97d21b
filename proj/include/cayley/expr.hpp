#pragma once

// Nonassociative words and their rational linear combinations, with the
// input grammar and canonical printer.
//
//   expr    := term (("+" | "-") term)*
//   term    := ["-"] rational | ["-"] [rational "*"] factor ("*" factor)*
//   factor  := "t" index ["^" ("-1" | integer >= 2)] | "(" expr ")" ["^" integer >= 2]
//   rational:= integer ["/" positive-integer]
//
// In strict mode a term may hold at most two factors; "a*b*c" must be
// parenthesized. Left mode folds longer chains as ((a*b)*c)*...

#include "laurent_poly.hpp"
#include "rational.hpp"

#include <cctype>
#include <compare>
#include <cstddef>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cayley {

class Word {
public:
    /// Generator t_index, or its inverse when exponent == -1.
    static Word gen(int index, int exponent = 1) {
        if (index < 1)
            throw std::invalid_argument("generator index must be >= 1");
        if (exponent != 1 && exponent != -1)
            throw std::invalid_argument("generator exponent must be +1 or -1");
        return Word(std::make_shared<const Node>(Node{index, exponent, nullptr, nullptr}));
    }

    static Word mul(Word left, Word right) {
        return Word(std::make_shared<const Node>(
            Node{0, 0, std::move(left.node_), std::move(right.node_)}));
    }

    [[nodiscard]] bool is_gen() const noexcept { return node_->index != 0; }
    [[nodiscard]] int index() const noexcept { return node_->index; }
    [[nodiscard]] int exponent() const noexcept { return node_->exponent; }
    [[nodiscard]] Word left() const { return Word(node_->left); }
    [[nodiscard]] Word right() const { return Word(node_->right); }

    /// Number of generator leaves.
    [[nodiscard]] std::size_t length() const {
        return is_gen() ? 1 : left().length() + right().length();
    }

    [[nodiscard]] int max_index() const {
        return is_gen() ? index() : std::max(left().max_index(), right().max_index());
    }

    [[nodiscard]] bool has_inverse() const {
        return is_gen() ? exponent() < 0 : left().has_inverse() || right().has_inverse();
    }

    friend std::strong_ordering operator<=>(const Word &a, const Word &b) {
        if (a.node_ == b.node_)
            return std::strong_ordering::equal;
        if (a.is_gen() != b.is_gen())
            return a.is_gen() ? std::strong_ordering::less : std::strong_ordering::greater;
        if (a.is_gen()) {
            if (auto c = a.index() <=> b.index(); c != 0)
                return c;
            return a.exponent() <=> b.exponent();
        }
        if (auto c = a.left() <=> b.left(); c != 0)
            return c;
        return a.right() <=> b.right();
    }

    friend bool operator==(const Word &a, const Word &b) {
        return (a <=> b) == std::strong_ordering::equal;
    }

private:
    struct Node {
        int index; // 0 for a product node
        int exponent;
        std::shared_ptr<const Node> left;
        std::shared_ptr<const Node> right;
    };

    explicit Word(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

    std::shared_ptr<const Node> node_;
};

inline Word operator*(const Word &a, const Word &b) { return Word::mul(a, b); }

inline std::string to_string(const Word &w) {
    if (w.is_gen())
        return "t" + std::to_string(w.index()) + (w.exponent() < 0 ? "^-1" : "");
    auto side = [](const Word &c) { return c.is_gen() ? to_string(c) : "(" + to_string(c) + ")"; };
    return side(w.left()) + "*" + side(w.right());
}

/// scalar + sum of coef * word; no stored zero coefficients.
class Expr {
public:
    Expr() = default;
    explicit Expr(const Word &w, const Rational &c = 1) { add(w, c); }
    static Expr constant(const Rational &c) {
        Expr e;
        e.scalar_ = c;
        return e;
    }

    [[nodiscard]] const Rational &scalar() const noexcept { return scalar_; }
    [[nodiscard]] const std::map<Word, Rational> &terms() const noexcept { return terms_; }
    [[nodiscard]] bool is_zero() const { return scalar_.is_zero() && terms_.empty(); }

    void add(const Word &w, const Rational &c) {
        if (c.is_zero())
            return;
        auto [it, inserted] = terms_.try_emplace(w, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero())
                terms_.erase(it);
        }
    }

    void add_scalar(const Rational &c) { scalar_ += c; }

    Expr &operator+=(const Expr &o) {
        scalar_ += o.scalar_;
        for (const auto &[w, c] : o.terms_)
            add(w, c);
        return *this;
    }

    friend Expr operator+(Expr a, const Expr &b) { return a += b; }
    friend Expr operator*(const Rational &s, const Expr &e) {
        Expr r;
        r.scalar_ = s * e.scalar_;
        for (const auto &[w, c] : e.terms_)
            r.add(w, s * c);
        return r;
    }
    friend Expr operator-(const Expr &e) { return Rational(-1) * e; }
    friend Expr operator-(Expr a, const Expr &b) { return a += -b; }

    /// Bilinear extension of Word::mul; scalars act as the identity.
    friend Expr operator*(const Expr &a, const Expr &b) {
        Expr r;
        r.scalar_ = a.scalar_ * b.scalar_;
        for (const auto &[w, c] : b.terms_)
            r.add(w, a.scalar_ * c);
        for (const auto &[w, c] : a.terms_)
            r.add(w, b.scalar_ * c);
        for (const auto &[wa, ca] : a.terms_)
            for (const auto &[wb, cb] : b.terms_)
                r.add(Word::mul(wa, wb), ca * cb);
        return r;
    }

    friend bool operator==(const Expr &, const Expr &) = default;

private:
    Rational scalar_ = 0;
    std::map<Word, Rational> terms_;
};

namespace detail {

inline std::string coef_word(const Rational &c, const std::string &word) {
    if (c == 1)
        return word;
    return to_string(c) + "*" + word;
}

} // namespace detail

inline std::string to_string(const Expr &e) {
    std::vector<std::pair<Rational, std::string>> parts;
    if (!e.scalar().is_zero())
        parts.emplace_back(e.scalar(), "");
    for (const auto &[w, c] : e.terms())
        parts.emplace_back(c, to_string(w));
    if (parts.empty())
        return "0";
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        const auto &[c, w] = parts[i];
        const bool neg = c < 0;
        const Rational mag = neg ? Rational(-c) : c;
        std::string body = w.empty() ? to_string(mag) : detail::coef_word(mag, w);
        if (i == 0)
            out = (neg ? "-" : "") + body;
        else
            out += (neg ? " - " : " + ") + body;
    }
    return out;
}

inline std::string format(const Expr &e) { return to_string(e); }

enum class Assoc { strict, left };

struct ParseOptions {
    int nvars = 3;
    RingMode mode = RingMode::poly;
    Assoc assoc = Assoc::strict;
};

namespace detail {

class ExprParser {
public:
    ExprParser(std::string_view text, ParseOptions opts) : text_(text), opts_(opts) {
        if (opts_.nvars < 1)
            throw std::invalid_argument("variable count must be >= 1");
    }

    Expr parse() {
        Expr e = expr();
        skip_ws();
        if (pos_ != text_.size())
            fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return e;
    }

    bool reassociated() const noexcept { return reassociated_; }

private:
    [[noreturn]] void fail(const std::string &msg) const { throw parse_error(msg, pos_); }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    bool accept(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!accept(c))
            fail(std::string("expected '") + c + "'");
    }

    Integer integer() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (start == pos_)
            fail("expected integer");
        return Integer(std::string(text_.substr(start, pos_ - start)));
    }

    Rational rational() {
        Integer num = integer();
        if (peek() == '/') {
            ++pos_;
            std::size_t at = pos_;
            Integer den = integer();
            if (den == 0) {
                pos_ = at;
                fail("zero denominator");
            }
            return Rational(num, den);
        }
        return Rational(num);
    }

    Expr expr() {
        Expr e = term();
        for (;;) {
            char c = peek();
            if (c == '+') {
                ++pos_;
                e += term();
            } else if (c == '-') {
                ++pos_;
                e += -term();
            } else {
                return e;
            }
        }
    }

    Expr term() {
        Rational sign = 1;
        if (peek() == '-') {
            ++pos_;
            sign = -1;
        } else if (peek() == '+') {
            ++pos_;
        }
        Rational coef = 1;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            coef = rational();
            if (!accept('*'))
                return Expr::constant(sign * coef);
        }
        std::size_t start = pos_;
        std::vector<Expr> factors;
        factors.push_back(factor());
        while (peek() == '*') {
            ++pos_;
            factors.push_back(factor());
        }
        if (factors.size() > 2) {
            if (opts_.assoc == Assoc::strict) {
                pos_ = start;
                fail("ambiguous product: parenthesize products of three or more factors");
            }
            reassociated_ = true;
        }
        Expr acc = factors.front();
        for (std::size_t i = 1; i < factors.size(); ++i)
            acc = acc * factors[i];
        return (sign * coef) * acc;
    }

    int power_suffix(bool allow_inverse) {
        if (peek() != '^')
            return 1;
        ++pos_;
        std::size_t at = pos_;
        if (peek() == '-') {
            ++pos_;
            Integer k = integer();
            if (k != 1) {
                pos_ = at;
                fail("only ^-1 is allowed as a negative power");
            }
            if (!allow_inverse) {
                pos_ = at;
                fail("^-1 applies to generators only");
            }
            if (opts_.mode != RingMode::torus) {
                pos_ = at;
                fail("inverse outside torus mode");
            }
            return -1;
        }
        Integer k = integer();
        if (k < 2 || k > 64) {
            pos_ = at;
            fail("power must be an integer between 2 and 64");
        }
        return static_cast<int>(k);
    }

    static Expr power(const Expr &base, int k) {
        Expr acc = base;
        for (int i = 1; i < k; ++i)
            acc = acc * base;
        return acc;
    }

    Expr factor() {
        char c = peek();
        if (c == '(') {
            ++pos_;
            Expr inner = expr();
            expect(')');
            int k = power_suffix(false);
            return k == 1 ? inner : power(inner, k);
        }
        if (c == 't') {
            ++pos_;
            std::size_t at = pos_;
            Integer idx = integer();
            if (idx < 1 || idx > opts_.nvars) {
                pos_ = at;
                fail("generator index out of range 1.." + std::to_string(opts_.nvars));
            }
            int k = power_suffix(true);
            Word g = Word::gen(static_cast<int>(idx), k == -1 ? -1 : 1);
            return k <= 1 ? Expr(g) : power(Expr(g), k);
        }
        if (c == '\0')
            fail("unexpected end of input");
        fail("unexpected '" + std::string(1, c) + "'");
    }

    std::string_view text_;
    ParseOptions opts_;
    std::size_t pos_ = 0;
    bool reassociated_ = false;
};

} // namespace detail

inline Expr parse(std::string_view text, const ParseOptions &opts = {}) {
    return detail::ExprParser(text, opts).parse();
}

/// As parse; `reassociated` reports whether a product of three or more
/// factors was folded to the left (Assoc::left only).
inline Expr parse(std::string_view text, const ParseOptions &opts, bool &reassociated) {
    detail::ExprParser p(text, opts);
    Expr e = p.parse();
    reassociated = p.reassociated();
    return e;
}

/// Parses an expression that must be a single word with coefficient 1.
inline Word parse_word(std::string_view text, const ParseOptions &opts = {}) {
    Expr e = parse(text, opts);
    if (!e.scalar().is_zero() || e.terms().size() != 1 || e.terms().begin()->second != 1)
        throw parse_error("expected a single word", 0);
    return e.terms().begin()->first;
}

} // namespace cayley
