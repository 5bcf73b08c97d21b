#pragma once

// Lazy fraction field over LaurentPoly. Fractions are never reduced;
// equality is decided by cross-multiplication.

#include "laurent_poly.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace cayley {

class Fraction {
public:
    Fraction() = default;

    explicit Fraction(LaurentPoly num)
        : num_(std::move(num)), den_(LaurentPoly::constant(num_.nvars(), Rational(1))) {}

    Fraction(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero())
            throw std::domain_error("fraction with zero denominator");
        if (num_.nvars() != den_.nvars())
            throw std::invalid_argument("fraction variable count mismatch");
    }

    static Fraction constant(std::size_t nvars, const Rational &c) {
        return Fraction(LaurentPoly::constant(nvars, c));
    }

    [[nodiscard]] const LaurentPoly &num() const noexcept { return num_; }
    [[nodiscard]] const LaurentPoly &den() const noexcept { return den_; }
    [[nodiscard]] std::size_t nvars() const noexcept { return num_.nvars(); }
    [[nodiscard]] bool is_zero() const noexcept { return num_.is_zero(); }

    friend Fraction operator+(const Fraction &a, const Fraction &b) {
        if (a.den_ == b.den_)
            return {a.num_ + b.num_, a.den_};
        return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
    }
    friend Fraction operator-(const Fraction &a) { return {-a.num_, a.den_}; }
    friend Fraction operator-(const Fraction &a, const Fraction &b) { return a + (-b); }
    friend Fraction operator*(const Fraction &a, const Fraction &b) {
        return {a.num_ * b.num_, a.den_ * b.den_};
    }
    friend Fraction operator/(const Fraction &a, const Fraction &b) {
        if (b.is_zero())
            throw std::domain_error("division by zero fraction");
        return {a.num_ * b.den_, a.den_ * b.num_};
    }
    Fraction &operator+=(const Fraction &b) { return *this = *this + b; }
    Fraction &operator-=(const Fraction &b) { return *this = *this - b; }

    friend bool operator==(const Fraction &a, const Fraction &b) {
        return a.num_ * b.den_ == b.num_ * a.den_;
    }

    /// Both sides with rational content stripped; display only.
    [[nodiscard]] Fraction tidy() const {
        if (num_.is_zero())
            return Fraction(LaurentPoly(nvars()));
        LaurentPoly n = num_.primitive_part();
        LaurentPoly d = den_.primitive_part();
        // (c_n * n') / (c_d * d') -> keep the scalar ratio on the numerator
        const auto &[en, cn] = *num_.terms().begin();
        const auto &[ed, cd] = *den_.terms().begin();
        Rational ratio = (cn / n.coefficient(en)) / (cd / d.coefficient(ed));
        return {ratio * n, d};
    }

private:
    LaurentPoly num_;
    LaurentPoly den_;
};

/// a.num * b.den == b.num * a.den
inline bool frac_eq(const Fraction &a, const Fraction &b) { return a == b; }

inline std::string to_string(const Fraction &f) {
    if (f.den().is_one())
        return to_string(f.num());
    return "(" + to_string(f.num()) + ")/(" + to_string(f.den()) + ")";
}

} // namespace cayley
