#pragma once

// Sparse multivariate (Laurent) polynomials over Q.
//
// The same type serves as Q[z1..zn] and Q[z1^±1..zn^±1]; which ring an
// element is read in only matters for unit detection (poly_unit).

#include "rational.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cayley {

using ExponentVector = std::vector<int>;

enum class RingMode { poly, torus };

inline const char *to_string(RingMode m) { return m == RingMode::poly ? "poly" : "torus"; }

class LaurentPoly {
public:
    using TermMap = std::map<ExponentVector, Rational>;

    LaurentPoly() = default;
    explicit LaurentPoly(std::size_t nvars) : nvars_(nvars) {}

    static LaurentPoly constant(std::size_t nvars, const Rational &c) {
        LaurentPoly p(nvars);
        if (!c.is_zero())
            p.terms_.emplace(ExponentVector(nvars, 0), c);
        return p;
    }

    static LaurentPoly monomial(const Rational &c, ExponentVector exps) {
        LaurentPoly p(exps.size());
        if (!c.is_zero())
            p.terms_.emplace(std::move(exps), c);
        return p;
    }

    /// The variable z_{index}, 1-based.
    static LaurentPoly variable(std::size_t nvars, std::size_t index, int power = 1) {
        if (index == 0 || index > nvars)
            throw std::out_of_range("variable index out of range");
        ExponentVector e(nvars, 0);
        e[index - 1] = power;
        return monomial(Rational(1), std::move(e));
    }

    [[nodiscard]] std::size_t nvars() const noexcept { return nvars_; }
    [[nodiscard]] const TermMap &terms() const noexcept { return terms_; }
    [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }
    [[nodiscard]] std::size_t size() const noexcept { return terms_.size(); }

    [[nodiscard]] bool is_constant() const {
        if (terms_.empty())
            return true;
        if (terms_.size() != 1)
            return false;
        for (int e : terms_.begin()->first)
            if (e != 0)
                return false;
        return true;
    }

    [[nodiscard]] bool is_one() const {
        return is_constant() && !terms_.empty() && terms_.begin()->second == 1;
    }

    /// Coefficient of the given monomial (zero when absent).
    [[nodiscard]] Rational coefficient(const ExponentVector &e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    [[nodiscard]] Rational constant_term() const { return coefficient(ExponentVector(nvars_, 0)); }

    [[nodiscard]] bool has_negative_exponent() const {
        for (const auto &[e, c] : terms_)
            for (int x : e)
                if (x < 0)
                    return true;
        return false;
    }

    /// Adds c * z^e in place, pruning a cancelled coefficient.
    void add_term(const ExponentVector &e, const Rational &c) {
        if (e.size() != nvars_)
            throw std::invalid_argument("exponent vector length does not match variable count");
        if (is_zero_coef(c))
            return;
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (is_zero_coef(it->second))
                terms_.erase(it);
        }
    }

    LaurentPoly &operator+=(const LaurentPoly &q) {
        check_compatible(q);
        for (const auto &[e, c] : q.terms_)
            add_term(e, c);
        return *this;
    }

    LaurentPoly &operator-=(const LaurentPoly &q) {
        check_compatible(q);
        for (const auto &[e, c] : q.terms_)
            add_term(e, -c);
        return *this;
    }

    friend LaurentPoly operator+(LaurentPoly p, const LaurentPoly &q) { return p += q; }
    friend LaurentPoly operator-(LaurentPoly p, const LaurentPoly &q) { return p -= q; }

    friend LaurentPoly operator-(LaurentPoly p) {
        for (auto &[e, c] : p.terms_)
            c = -c;
        return p;
    }

    friend LaurentPoly operator*(const LaurentPoly &p, const LaurentPoly &q) {
        p.check_compatible(q);
        LaurentPoly r(p.nvars_);
        if (p.is_zero() || q.is_zero())
            return r;
        ExponentVector e(p.nvars_);
        for (const auto &[ep, cp] : p.terms_) {
            for (const auto &[eq, cq] : q.terms_) {
                for (std::size_t i = 0; i < e.size(); ++i)
                    e[i] = ep[i] + eq[i];
                r.add_term(e, cp * cq);
            }
        }
        return r;
    }

    LaurentPoly &operator*=(const LaurentPoly &q) { return *this = *this * q; }

    friend LaurentPoly operator*(const Rational &c, LaurentPoly p) {
        if (is_zero_coef(c))
            return LaurentPoly(p.nvars_);
        for (auto &[e, x] : p.terms_)
            x *= c;
        return p;
    }

    friend bool operator==(const LaurentPoly &p, const LaurentPoly &q) {
        return p.nvars_ == q.nvars_ && p.terms_ == q.terms_;
    }

    /// Substitutes z_i -> values[i]. Negative exponents need nonzero values.
    [[nodiscard]] Rational evaluate(const std::vector<Rational> &values) const {
        if (values.size() != nvars_)
            throw std::invalid_argument("evaluate: wrong number of values");
        Rational sum = 0;
        for (const auto &[e, c] : terms_) {
            Rational term = c;
            for (std::size_t i = 0; i < nvars_; ++i) {
                if (e[i] != 0 && is_zero_coef(values[i]) && e[i] < 0)
                    throw std::domain_error("evaluate: negative power of zero");
                for (int k = 0; k < e[i]; ++k)
                    term *= values[i];
                for (int k = 0; k < -e[i]; ++k)
                    term /= values[i];
            }
            sum += term;
        }
        return sum;
    }

    /// Divides out the rational content (gcd of numerators over lcm of
    /// denominators) and makes the leading coefficient positive.
    [[nodiscard]] LaurentPoly primitive_part() const {
        if (is_zero())
            return *this;
        Integer g = 0;
        Integer l = 1;
        for (const auto &[e, c] : terms_) {
            g = gcd(g, Integer(abs(boost::multiprecision::numerator(c))));
            l = lcm(l, Integer(boost::multiprecision::denominator(c)));
        }
        Rational scale(l, g);
        if (terms_.begin()->second < 0)
            scale = -scale;
        return scale * *this;
    }

private:
    static bool is_zero_coef(const Rational &c) { return c.is_zero(); }

    void check_compatible(const LaurentPoly &q) const {
        if (nvars_ != q.nvars_)
            throw std::invalid_argument("polynomial variable count mismatch: " +
                                        std::to_string(nvars_) + " vs " +
                                        std::to_string(q.nvars_));
    }

    std::size_t nvars_ = 0;
    TermMap terms_;
};

enum class PolyOp { add, sub, mul, neg };

/// Ring operations by name; `neg` ignores q.
inline LaurentPoly poly_arith(PolyOp op, const LaurentPoly &p, const LaurentPoly &q) {
    if (p.nvars() != q.nvars())
        throw std::invalid_argument("polynomial variable count mismatch");
    switch (op) {
    case PolyOp::add:
        return p + q;
    case PolyOp::sub:
        return p - q;
    case PolyOp::mul:
        return p * q;
    case PolyOp::neg:
        return -p;
    }
    throw std::invalid_argument("unknown polynomial operation");
}

/// Multiplicative inverse if p is a unit: a nonzero constant in poly mode,
/// a single nonzero term in torus mode.
inline std::optional<LaurentPoly> poly_unit(const LaurentPoly &p, RingMode mode) {
    if (p.size() != 1)
        return std::nullopt;
    const auto &[e, c] = *p.terms().begin();
    ExponentVector inv(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (mode == RingMode::poly && e[i] != 0)
            return std::nullopt;
        inv[i] = -e[i];
    }
    return LaurentPoly::monomial(Rational(1) / c, std::move(inv));
}

namespace detail {

inline std::string monomial_vars(const ExponentVector &e) {
    std::string out;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0)
            continue;
        if (!out.empty())
            out += '*';
        out += 'z' + std::to_string(i + 1);
        if (e[i] != 1)
            out += '^' + std::to_string(e[i]);
    }
    return out;
}

// Coefficient 1 is left implicit on non-constant monomials; every other
// coefficient, including -1, is written out.
inline std::string term_text(const Rational &c, const ExponentVector &e) {
    std::string vars = monomial_vars(e);
    if (vars.empty())
        return to_string(c);
    if (c == 1)
        return vars;
    return to_string(c) + "*" + vars;
}

} // namespace detail

/// Canonical text form: terms in ascending lexicographic exponent order.
inline std::string to_string(const LaurentPoly &p) {
    if (p.is_zero())
        return "0";
    std::string out;
    bool first = true;
    for (const auto &[e, c] : p.terms()) {
        if (first) {
            out = detail::term_text(c, e);
            first = false;
        } else if (c < 0) {
            out += " - " + detail::term_text(-c, e);
        } else {
            out += " + " + detail::term_text(c, e);
        }
    }
    return out;
}

} // namespace cayley
