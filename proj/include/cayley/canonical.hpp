#pragma once

// Canonical elements of the Cayley polynomial ring (and its torus): a
// center-ring polynomial on each of the eight basis labels
//
//     1, t1, t2, t3, t1t2, t1t3, t2t3, (t1t2)t3.
//
// Labels are bit-subsets of {t1, t2, t3} (bit 0 = t1), the same indexing the
// Cayley-Dickson towers use for e_S. Center variables are z_i = t_i^2 for the
// core generators and z_i = t_i for the central generators t4..tn.

#include "laurent_poly.hpp"

#include <array>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace cayley {

enum class AlgebraKind { quaternion, octonion };

inline int core_generators(AlgebraKind k) { return k == AlgebraKind::octonion ? 3 : 2; }

using Label = unsigned;

/// Display order of the basis labels.
inline constexpr std::array<Label, 8> label_order{0, 1, 2, 4, 3, 5, 6, 7};

inline std::string label_name(Label s) {
    static const std::array<const char *, 8> names{"1",    "t1",   "t2",   "t1t2",
                                                   "t3",   "t1t3", "t2t3", "(t1t2)t3"};
    if (s >= 8)
        throw std::out_of_range("basis label out of range");
    return names[s];
}

inline Label label_from_name(const std::string &name) {
    for (Label s = 0; s < 8; ++s)
        if (label_name(s) == name)
            return s;
    throw std::invalid_argument("unknown basis label '" + name + "'");
}

using DegreeVector = std::vector<int>;

class CanonicalElement {
public:
    CanonicalElement() = default;
    CanonicalElement(int nvars, RingMode mode, AlgebraKind kind = AlgebraKind::octonion)
        : nvars_(nvars), mode_(mode), kind_(kind) {
        if (nvars < core_generators(kind))
            throw std::invalid_argument("too few variables for this algebra");
    }

    [[nodiscard]] int nvars() const noexcept { return nvars_; }
    [[nodiscard]] RingMode mode() const noexcept { return mode_; }
    [[nodiscard]] AlgebraKind kind() const noexcept { return kind_; }
    [[nodiscard]] const std::map<Label, LaurentPoly> &components() const noexcept { return comps_; }
    [[nodiscard]] bool is_zero() const noexcept { return comps_.empty(); }

    [[nodiscard]] LaurentPoly component(Label s) const {
        auto it = comps_.find(s);
        return it == comps_.end() ? LaurentPoly(nvars_) : it->second;
    }

    void add(Label s, const LaurentPoly &p) {
        if (s >= (1u << core_generators(kind_)))
            throw std::invalid_argument("basis label outside the algebra");
        if (p.nvars() != static_cast<std::size_t>(nvars_))
            throw std::invalid_argument("center polynomial has wrong variable count");
        if (mode_ == RingMode::poly && p.has_negative_exponent())
            throw std::invalid_argument("negative center exponent in polynomial mode");
        if (p.is_zero())
            return;
        auto [it, inserted] = comps_.try_emplace(s, p);
        if (!inserted) {
            it->second += p;
            if (it->second.is_zero())
                comps_.erase(it);
        }
    }

    CanonicalElement &operator+=(const CanonicalElement &o) {
        require_compatible(o);
        for (const auto &[s, p] : o.comps_)
            add(s, p);
        return *this;
    }

    friend CanonicalElement operator+(CanonicalElement a, const CanonicalElement &b) { return a += b; }

    friend CanonicalElement operator-(const CanonicalElement &a) {
        CanonicalElement r(a.nvars_, a.mode_, a.kind_);
        for (const auto &[s, p] : a.comps_)
            r.comps_.emplace(s, -p);
        return r;
    }

    friend CanonicalElement operator-(CanonicalElement a, const CanonicalElement &b) { return a += -b; }

    friend CanonicalElement operator*(const LaurentPoly &c, const CanonicalElement &a) {
        CanonicalElement r(a.nvars_, a.mode_, a.kind_);
        for (const auto &[s, p] : a.comps_)
            r.add(s, c * p);
        return r;
    }

    friend bool operator==(const CanonicalElement &a, const CanonicalElement &b) {
        return a.nvars_ == b.nvars_ && a.mode_ == b.mode_ && a.kind_ == b.kind_ &&
               a.comps_ == b.comps_;
    }

    void require_compatible(const CanonicalElement &o) const {
        if (nvars_ != o.nvars_ || mode_ != o.mode_ || kind_ != o.kind_)
            throw std::invalid_argument("canonical elements belong to different algebras");
    }

    /// Single label carrying a single center monomial.
    [[nodiscard]] bool is_homogeneous() const {
        return comps_.size() == 1 && comps_.begin()->second.size() == 1;
    }

    /// Degree of a homogeneous element: t_i contributes e_i, z_i = t_i^2
    /// contributes 2e_i for core generators, z_i = t_i contributes e_i otherwise.
    [[nodiscard]] DegreeVector degree() const {
        if (!is_homogeneous())
            throw std::logic_error("degree of a non-homogeneous element");
        const auto &[label, poly] = *comps_.begin();
        const ExponentVector &e = poly.terms().begin()->first;
        const int core = core_generators(kind_);
        DegreeVector d(nvars_);
        for (int i = 0; i < nvars_; ++i)
            d[i] = (i < core ? 2 : 1) * e[i] + ((label >> i) & 1u && i < core ? 1 : 0);
        return d;
    }

private:
    int nvars_ = 3;
    RingMode mode_ = RingMode::poly;
    AlgebraKind kind_ = AlgebraKind::octonion;
    std::map<Label, LaurentPoly> comps_;
};

/// True iff nothing lives outside basis label 1.
inline bool center_membership(const CanonicalElement &c) {
    for (const auto &[s, p] : c.components())
        if (s != 0)
            return false;
    return true;
}

/// Sum of (center polynomial)*label in label display order, e.g.
/// "-1*z1*z2", "2*t1 - t1t2", "(1 + z1)*t3".
inline std::string to_string(const CanonicalElement &c) {
    std::string out;
    bool first = true;
    for (Label s : label_order) {
        auto it = c.components().find(s);
        if (it == c.components().end())
            continue;
        const LaurentPoly &p = it->second;
        std::string piece;
        bool negative = false;
        if (s == 0) {
            piece = to_string(p);
            if (!first && p.size() == 1 && p.terms().begin()->second < 0) {
                negative = true;
                piece = to_string(-p);
            }
        } else if (p.size() == 1) {
            const auto &[e, coef] = *p.terms().begin();
            Rational k = coef;
            if (!first && k < 0) {
                negative = true;
                k = -k;
            }
            std::string t = detail::term_text(k, e);
            piece = (t == "1") ? label_name(s) : t + "*" + label_name(s);
        } else {
            piece = "(" + to_string(p) + ")*" + label_name(s);
        }
        if (first)
            out = piece;
        else
            out += (negative ? " - " : " + ") + piece;
        first = false;
    }
    return first ? "0" : out;
}

inline std::string format(const CanonicalElement &c) { return to_string(c); }

} // namespace cayley
