#pragma once

// Cayley-Dickson towers over a commutative base ring.
//
// An element of the k-fold tower (B, mu_1, ..., mu_k) is stored as 2^k base
// ring coefficients indexed by subsets S of {1..k} (bit i-1 <-> v_i). The
// basis element e_S is the left-nested product of the basic generators in
// increasing order, e.g. e_{1,2,3} = (v1 v2) v3.
//
// Multiplication follows the doubling rule on B + vB:
//
//     (a + v b)(c + v d) = (a c + mu d b*) + v (a* d + c b),
//     (a + v b)*         = a* - v b.
//
// Internally the recursion works in "doubling coordinates" f_S (f_S = v_k f_S'
// for the top generator v_k), which differ from e_S by the sign
// (-1)^(|S|-1) for nonempty S.

#include "fraction.hpp"
#include "laurent_poly.hpp"
#include "rational.hpp"

#include <bit>
#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace cayley {

struct BaseRing {
    enum class Kind { rationals, polynomial, laurent, fraction_field };
    Kind kind = Kind::rationals;
    std::size_t nvars = 0;

    static BaseRing rationals() { return {Kind::rationals, 0}; }
    static BaseRing polynomial(std::size_t n) { return {Kind::polynomial, n}; }
    static BaseRing laurent(std::size_t n) { return {Kind::laurent, n}; }
    static BaseRing fraction_field(std::size_t n) { return {Kind::fraction_field, n}; }

    friend bool operator==(const BaseRing &, const BaseRing &) = default;
};

inline std::string to_string(const BaseRing &b) {
    switch (b.kind) {
    case BaseRing::Kind::rationals:
        return "Q";
    case BaseRing::Kind::polynomial:
        return "Q[z1..z" + std::to_string(b.nvars) + "]";
    case BaseRing::Kind::laurent:
        return "Q[z1^±1..z" + std::to_string(b.nvars) + "^±1]";
    case BaseRing::Kind::fraction_field:
        return "Q(z1..z" + std::to_string(b.nvars) + ")";
    }
    return "?";
}

template <class R>
struct ring_traits;

template <>
struct ring_traits<Rational> {
    static Rational zero(const BaseRing &) { return 0; }
    static Rational from_rational(const Rational &q, const BaseRing &) { return q; }
    static bool is_zero(const Rational &x) { return x.is_zero(); }
    static std::optional<Rational> inverse(const Rational &x, const BaseRing &) {
        if (x.is_zero())
            return std::nullopt;
        return Rational(1) / x;
    }
    static std::string str(const Rational &x) { return to_string(x); }
    static bool belongs(const Rational &, const BaseRing &b) {
        return b.kind == BaseRing::Kind::rationals;
    }
};

template <>
struct ring_traits<LaurentPoly> {
    static LaurentPoly zero(const BaseRing &b) { return LaurentPoly(b.nvars); }
    static LaurentPoly from_rational(const Rational &q, const BaseRing &b) {
        return LaurentPoly::constant(b.nvars, q);
    }
    static bool is_zero(const LaurentPoly &x) { return x.is_zero(); }
    static std::optional<LaurentPoly> inverse(const LaurentPoly &x, const BaseRing &b) {
        return poly_unit(x, b.kind == BaseRing::Kind::laurent ? RingMode::torus : RingMode::poly);
    }
    static std::string str(const LaurentPoly &x) { return to_string(x); }
    static bool belongs(const LaurentPoly &x, const BaseRing &b) {
        if (x.nvars() != b.nvars)
            return false;
        if (b.kind == BaseRing::Kind::polynomial)
            return !x.has_negative_exponent();
        return b.kind == BaseRing::Kind::laurent;
    }
};

template <>
struct ring_traits<Fraction> {
    static Fraction zero(const BaseRing &b) { return Fraction(LaurentPoly(b.nvars)); }
    static Fraction from_rational(const Rational &q, const BaseRing &b) {
        return Fraction::constant(b.nvars, q);
    }
    static bool is_zero(const Fraction &x) { return x.is_zero(); }
    static std::optional<Fraction> inverse(const Fraction &x, const BaseRing &b) {
        if (x.is_zero())
            return std::nullopt;
        return Fraction::constant(b.nvars, 1) / x;
    }
    static std::string str(const Fraction &x) { return to_string(x.tidy()); }
    static bool belongs(const Fraction &x, const BaseRing &b) {
        return b.kind == BaseRing::Kind::fraction_field && x.nvars() == b.nvars;
    }
};

/// (base, mu_1, ..., mu_k). Each mu must be cancellable; over the supported
/// integral domains that means nonzero.
template <class R>
class CDSpec {
public:
    CDSpec(BaseRing base, std::vector<R> mus) : base_(base), mus_(std::move(mus)) {
        for (const R &mu : mus_) {
            if (ring_traits<R>::is_zero(mu))
                throw std::invalid_argument("structure constant must be cancellable (nonzero)");
            if (!ring_traits<R>::belongs(mu, base_))
                throw std::invalid_argument("structure constant is not in the base ring " +
                                            to_string(base_));
        }
        if (mus_.size() > 4)
            throw std::invalid_argument("towers above 4 doublings are not supported");
    }

    [[nodiscard]] const BaseRing &base() const noexcept { return base_; }
    [[nodiscard]] const std::vector<R> &mus() const noexcept { return mus_; }
    [[nodiscard]] std::size_t k() const noexcept { return mus_.size(); }
    [[nodiscard]] std::size_t dim() const noexcept { return std::size_t{1} << mus_.size(); }

    friend bool operator==(const CDSpec &a, const CDSpec &b) {
        return a.base_ == b.base_ && a.mus_ == b.mus_;
    }

private:
    BaseRing base_;
    std::vector<R> mus_;
};

template <class R>
using CDSpecPtr = std::shared_ptr<const CDSpec<R>>;

template <class R>
CDSpecPtr<R> make_spec(BaseRing base, std::vector<R> mus) {
    return std::make_shared<const CDSpec<R>>(base, std::move(mus));
}

namespace detail {

// e_S = sign * f_S
inline int doubling_sign(std::size_t subset) {
    if (subset == 0)
        return 1;
    return (std::popcount(subset) % 2 == 1) ? 1 : -1;
}

template <class R>
bool all_zero(std::span<const R> xs) {
    for (const R &x : xs)
        if (!ring_traits<R>::is_zero(x))
            return false;
    return true;
}

template <class R>
std::vector<R> conj_doubling(std::span<const R> x) {
    std::vector<R> out(x.begin(), x.end());
    for (std::size_t i = 1; i < out.size(); ++i)
        out[i] = -out[i];
    return out;
}

template <class R>
void accumulate(std::vector<R> &acc, std::size_t offset, const std::vector<R> &part) {
    for (std::size_t i = 0; i < part.size(); ++i)
        acc[offset + i] += part[i];
}

template <class R>
std::vector<R> mul_doubling(std::span<const R> x, std::span<const R> y, std::span<const R> mus,
                            const BaseRing &base) {
    const std::size_t n = x.size();
    if (n == 1)
        return {x[0] * y[0]};
    std::vector<R> out(n, ring_traits<R>::zero(base));
    if (all_zero(x) || all_zero(y))
        return out;
    const std::size_t h = n / 2;
    auto a = x.first(h), b = x.subspan(h);
    auto c = y.first(h), d = y.subspan(h);
    auto lower = mus.first(mus.size() - 1);
    const R &mu = mus.back();
    const bool za = all_zero(a), zb = all_zero(b), zc = all_zero(c), zd = all_zero(d);

    if (!za && !zc)
        accumulate(out, 0, mul_doubling<R>(a, c, lower, base));
    if (!zd && !zb) {
        auto bc = conj_doubling<R>(b);
        auto t = mul_doubling<R>(d, std::span<const R>(bc), lower, base);
        for (R &v : t)
            v = mu * v;
        accumulate(out, 0, t);
    }
    if (!za && !zd) {
        auto ac = conj_doubling<R>(a);
        accumulate(out, h, mul_doubling<R>(std::span<const R>(ac), d, lower, base));
    }
    if (!zc && !zb)
        accumulate(out, h, mul_doubling<R>(c, b, lower, base));
    return out;
}

} // namespace detail

template <class R>
class CDElement {
public:
    CDElement(CDSpecPtr<R> spec, std::vector<R> coeffs) : spec_(std::move(spec)), coeffs_(std::move(coeffs)) {
        if (coeffs_.size() != spec_->dim())
            throw std::invalid_argument("coefficient vector length must be 2^k");
    }

    static CDElement zero(CDSpecPtr<R> spec) {
        std::vector<R> c(spec->dim(), ring_traits<R>::zero(spec->base()));
        return CDElement(std::move(spec), std::move(c));
    }

    static CDElement scalar(CDSpecPtr<R> spec, R value) {
        CDElement x = zero(spec);
        x.coeffs_[0] = std::move(value);
        return x;
    }

    static CDElement one(CDSpecPtr<R> spec) {
        R u = ring_traits<R>::from_rational(Rational(1), spec->base());
        return scalar(std::move(spec), std::move(u));
    }

    /// c * e_S
    static CDElement basis(CDSpecPtr<R> spec, std::size_t subset, R coef) {
        if (subset >= spec->dim())
            throw std::out_of_range("basis subset outside the tower");
        CDElement x = zero(spec);
        x.coeffs_[subset] = std::move(coef);
        return x;
    }

    static CDElement basis(CDSpecPtr<R> spec, std::size_t subset) {
        R u = ring_traits<R>::from_rational(Rational(1), spec->base());
        return basis(std::move(spec), subset, std::move(u));
    }

    /// The basic generator v_i (1-based).
    static CDElement generator(CDSpecPtr<R> spec, std::size_t i) {
        return basis(std::move(spec), std::size_t{1} << (i - 1));
    }

    [[nodiscard]] const CDSpec<R> &spec() const noexcept { return *spec_; }
    [[nodiscard]] const CDSpecPtr<R> &spec_ptr() const noexcept { return spec_; }
    [[nodiscard]] const std::vector<R> &coeffs() const noexcept { return coeffs_; }
    [[nodiscard]] const R &operator[](std::size_t subset) const { return coeffs_.at(subset); }
    [[nodiscard]] std::size_t k() const noexcept { return spec_->k(); }

    [[nodiscard]] bool is_zero() const { return detail::all_zero<R>(coeffs_); }

    /// Nonzero only on e_0.
    [[nodiscard]] bool is_scalar() const {
        return detail::all_zero<R>(std::span<const R>(coeffs_).subspan(1));
    }

    friend bool operator==(const CDElement &x, const CDElement &y) {
        return x.same_spec(y) && x.coeffs_ == y.coeffs_;
    }

    friend CDElement operator+(const CDElement &x, const CDElement &y) {
        x.require_same_spec(y);
        CDElement r = x;
        for (std::size_t i = 0; i < r.coeffs_.size(); ++i)
            r.coeffs_[i] += y.coeffs_[i];
        return r;
    }

    friend CDElement operator-(const CDElement &x) {
        CDElement r = x;
        for (R &c : r.coeffs_)
            c = -c;
        return r;
    }

    friend CDElement operator-(const CDElement &x, const CDElement &y) { return x + (-y); }

    friend CDElement operator*(const R &s, const CDElement &x) {
        CDElement r = x;
        for (R &c : r.coeffs_)
            c = s * c;
        return r;
    }

    friend CDElement operator*(const CDElement &x, const CDElement &y) { return cd_mul(x, y); }

    [[nodiscard]] bool same_spec(const CDElement &y) const {
        return spec_ == y.spec_ || *spec_ == *y.spec_;
    }

    void require_same_spec(const CDElement &y) const {
        if (!same_spec(y))
            throw std::invalid_argument("Cayley-Dickson spec mismatch");
    }

    friend CDElement cd_mul(const CDElement &x, const CDElement &y) {
        x.require_same_spec(y);
        const std::size_t n = x.coeffs_.size();
        std::vector<R> xi(x.coeffs_), yi(y.coeffs_);
        for (std::size_t s = 0; s < n; ++s) {
            if (detail::doubling_sign(s) < 0) {
                xi[s] = -xi[s];
                yi[s] = -yi[s];
            }
        }
        std::vector<R> out = detail::mul_doubling<R>(xi, yi, x.spec_->mus(), x.spec_->base());
        for (std::size_t s = 0; s < n; ++s)
            if (detail::doubling_sign(s) < 0)
                out[s] = -out[s];
        return CDElement(x.spec_, std::move(out));
    }

private:
    CDSpecPtr<R> spec_;
    std::vector<R> coeffs_;
};

/// Involution: fixes the identity component, negates every other basis coefficient.
template <class R>
CDElement<R> cd_conj(const CDElement<R> &x) {
    std::vector<R> c(x.coeffs());
    for (std::size_t i = 1; i < c.size(); ++i)
        c[i] = -c[i];
    return CDElement<R>(x.spec_ptr(), std::move(c));
}

template <class R>
CDElement<R> commutator(const CDElement<R> &a, const CDElement<R> &b) {
    return a * b - b * a;
}

/// (a b) c - a (b c)
template <class R>
CDElement<R> associator(const CDElement<R> &a, const CDElement<R> &b, const CDElement<R> &c) {
    return (a * b) * c - a * (b * c);
}

/// n(e_S) = prod over i in S of (-mu_i).
template <class R>
R basis_norm(const CDSpec<R> &spec, std::size_t subset) {
    R n = ring_traits<R>::from_rational(Rational(1), spec.base());
    for (std::size_t i = 0; i < spec.k(); ++i)
        if (subset & (std::size_t{1} << i))
            n = -(spec.mus()[i] * n);
    return n;
}

/// x x* computed as a product; must be scalar for k <= 3.
template <class R>
R cd_norm_by_product(const CDElement<R> &x) {
    if (x.k() > 3)
        throw std::domain_error("norm is only defined for towers of height <= 3");
    CDElement<R> p = x * cd_conj(x);
    if (!p.is_scalar())
        throw std::logic_error("x x* is not scalar in a tower of height <= 3");
    return p[0];
}

/// n(x) = x x*, evaluated as the diagonal form sum n(e_S) x_S^2 (the basis
/// is orthogonal for the norm). Requires k <= 3.
template <class R>
R cd_norm(const CDElement<R> &x) {
    if (x.k() > 3)
        throw std::domain_error("norm is only defined for towers of height <= 3");
    R n = ring_traits<R>::zero(x.spec().base());
    for (std::size_t s = 0; s < x.coeffs().size(); ++s)
        if (!ring_traits<R>::is_zero(x[s]))
            n += basis_norm(x.spec(), s) * (x[s] * x[s]);
    return n;
}

/// Identity coefficient of x + x*.
template <class R>
R cd_trace(const CDElement<R> &x) {
    if (x.k() > 3)
        throw std::domain_error("trace is only defined for towers of height <= 3");
    return x[0] + x[0];
}

/// n(x)^-1 x* when n(x) is a unit of the base ring.
template <class R>
std::optional<CDElement<R>> cd_invert(const CDElement<R> &x) {
    if (x.k() > 3)
        throw std::domain_error("inversion is only defined for towers of height <= 3");
    auto inv_norm = ring_traits<R>::inverse(cd_norm(x), x.spec().base());
    if (!inv_norm)
        return std::nullopt;
    CDElement<R> y = *inv_norm * cd_conj(x);
    auto one = CDElement<R>::one(x.spec_ptr());
    if (!(x * y == one) || !(y * x == one))
        throw std::logic_error("computed inverse fails x x^-1 = x^-1 x = 1");
    return y;
}

/// Left-nested label: "1", "v1", "v1v2", "(v1v2)v3", "((v1v2)v3)v4".
inline std::string basis_label(std::size_t subset) {
    if (subset == 0)
        return "1";
    std::string out;
    int factors = 0;
    for (std::size_t i = 0; (std::size_t{1} << i) <= subset; ++i) {
        if (!(subset & (std::size_t{1} << i)))
            continue;
        std::string v = "v" + std::to_string(i + 1);
        if (factors >= 2)
            out = "(" + out + ")" + v;
        else
            out += v;
        ++factors;
    }
    return out;
}

template <class R>
std::string to_string(const CDElement<R> &x) {
    std::string out;
    for (std::size_t s = 0; s < x.coeffs().size(); ++s) {
        const R &c = x[s];
        if (ring_traits<R>::is_zero(c))
            continue;
        std::string cs = ring_traits<R>::str(c);
        // compound coefficients keep their parentheses
        const bool atomic = cs.find_first_of(" /", 1) == std::string::npos;
        bool neg = atomic && cs.front() == '-';
        if (neg)
            cs.erase(0, 1);
        if (!out.empty())
            out += neg ? " - " : " + ";
        else if (neg)
            out += "-";
        if (s == 0)
            out += cs;
        else if (cs == "1")
            out += basis_label(s);
        else
            out += (atomic ? cs : "(" + cs + ")") + "*" + basis_label(s);
    }
    return out.empty() ? "0" : out;
}

template <class R>
struct BasisProduct {
    R coef;
    std::size_t subset;
};

/// Entry (S, T) is e_S e_T = coef * e_{S xor T}.
template <class R>
std::vector<std::vector<BasisProduct<R>>> cd_basis_table(const CDSpecPtr<R> &spec) {
    const std::size_t n = spec->dim();
    std::vector<std::vector<BasisProduct<R>>> table(n);
    for (std::size_t s = 0; s < n; ++s) {
        auto es = CDElement<R>::basis(spec, s);
        for (std::size_t t = 0; t < n; ++t) {
            auto p = es * CDElement<R>::basis(spec, t);
            const std::size_t target = s ^ t;
            for (std::size_t u = 0; u < n; ++u)
                if (u != target && !ring_traits<R>::is_zero(p[u]))
                    throw std::logic_error("basis product is not a single scaled basis element");
            table[s].push_back({p[target], target});
        }
    }
    return table;
}

} // namespace cayley
