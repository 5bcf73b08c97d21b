#pragma once

// Presentations as executable constructions: specialization t_i^2 -> mu_i,
// Hamilton polynomials, quaternion/octonion tori, and the check that three
// elements satisfy the Cayley relations.

#include "cayley_dickson.hpp"
#include "normalizer.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cayley {

struct PresentationSpec {
    AlgebraKind kind = AlgebraKind::octonion;
    RingMode mode = RingMode::poly;
    int n = 3;
    std::optional<std::vector<Rational>> mus;

    void validate() const {
        const int core = core_generators(kind);
        if (n < core)
            throw std::invalid_argument(std::string(kind == AlgebraKind::octonion ? "octonion" : "quaternion") +
                                        " presentations need n >= " + std::to_string(core));
        if (mus) {
            if (static_cast<int>(mus->size()) != core)
                throw std::invalid_argument("expected " + std::to_string(core) + " structure constants");
            for (const auto &m : *mus)
                if (m.is_zero())
                    throw std::invalid_argument("structure constants must be nonzero");
        }
    }

    [[nodiscard]] AlgebraConfig config() const { return {mode, n, kind}; }
};

/// Substitutes z_i -> mu_i and sends label S to e_S in (Q, mu_1, ..., mu_k),
/// k = 2 or 3 by the element's kind. Polynomial mode and n = k only.
inline CDElement<Rational> specialize(const CanonicalElement &c, const std::vector<Rational> &mus) {
    if (c.mode() != RingMode::poly)
        throw std::invalid_argument("specialization takes polynomial-mode elements");
    const int core = core_generators(c.kind());
    if (c.nvars() != core)
        throw std::invalid_argument("specialization needs exactly " + std::to_string(core) + " variables");
    if (static_cast<int>(mus.size()) != core)
        throw std::invalid_argument("wrong number of structure constants");
    auto spec = make_spec<Rational>(BaseRing::rationals(), mus);
    std::vector<Rational> coeffs(spec->dim(), Rational(0));
    for (const auto &[s, p] : c.components())
        coeffs[s] = p.evaluate(mus);
    return CDElement<Rational>(spec, std::move(coeffs));
}

inline CDElement<Rational> specialize_octonion(const CanonicalElement &c, const std::vector<Rational> &mus) {
    if (c.kind() != AlgebraKind::octonion)
        throw std::invalid_argument("expected an octonion canonical element");
    return specialize(c, mus);
}

// ---------------------------------------------------------------------------
// Hamilton polynomials: associative, generated by t1, t2 with t1 t2 = -t2 t1.

struct HamiltonMonomial {
    Rational coef = 1;
    int l = 0; // exponent of t1
    int m = 0; // exponent of t2

    friend bool operator==(const HamiltonMonomial &, const HamiltonMonomial &) = default;
};

/// w = coef * t1^l t2^m. Parenthesization is irrelevant; the sign counts the
/// t2-before-t1 pairs that must be swapped.
inline HamiltonMonomial hamilton_normalize(const Word &w, RingMode mode) {
    std::vector<Word> leaves;
    auto flatten = [&](auto &&self, const Word &u) -> void {
        if (u.is_gen()) {
            leaves.push_back(u);
            return;
        }
        self(self, u.left());
        self(self, u.right());
    };
    flatten(flatten, w);
    HamiltonMonomial h;
    int seen_t2 = 0;
    int swaps = 0;
    for (const Word &g : leaves) {
        if (g.index() > 2)
            throw std::invalid_argument("Hamilton words use t1 and t2 only");
        if (g.exponent() < 0 && mode != RingMode::torus)
            throw std::invalid_argument("inverse outside torus mode");
        if (g.index() == 1) {
            h.l += g.exponent();
            swaps += seen_t2;
        } else {
            h.m += g.exponent();
            ++seen_t2;
        }
    }
    h.coef = (swaps % 2 == 0) ? 1 : -1;
    return h;
}

// ---------------------------------------------------------------------------
// Tori.

/// Quaternion or octonion n-torus: normalizer in torus mode plus the model
/// over the Laurent base. Carries configuration only.
class TorusAlgebra {
public:
    explicit TorusAlgebra(PresentationSpec spec) : spec_(std::move(spec)) {
        spec_.mode = RingMode::torus;
        spec_.validate();
    }

    [[nodiscard]] AlgebraConfig config() const { return spec_.config(); }
    [[nodiscard]] const PresentationSpec &spec() const noexcept { return spec_; }

    [[nodiscard]] CanonicalElement normalize(const Word &w) const { return normalize_word(w, config()); }
    [[nodiscard]] CanonicalElement normalize(const Expr &e) const { return normalize_expr(e, config()); }

    [[nodiscard]] CanonicalElement generator(int i, int exponent = 1) const {
        return normalize(Word::gen(i, exponent));
    }

    [[nodiscard]] CanonicalElement one() const {
        CanonicalElement c(spec_.n, RingMode::torus, spec_.kind);
        c.add(0, LaurentPoly::constant(spec_.n, 1));
        return c;
    }

    [[nodiscard]] CanonicalElement mul(const CanonicalElement &x, const CanonicalElement &y) const {
        return canonical_mul(x, y);
    }

    [[nodiscard]] std::optional<CanonicalElement> invert(const CanonicalElement &x) const {
        return canonical_invert(x);
    }

    [[nodiscard]] DegreeVector degree(const CanonicalElement &x) const { return x.degree(); }

    [[nodiscard]] OracleElement model(const CanonicalElement &x) const { return to_oracle(x); }

private:
    PresentationSpec spec_;
};

inline TorusAlgebra build_torus(const PresentationSpec &spec) { return TorusAlgebra(spec); }

// ---------------------------------------------------------------------------
// Cayley relations for concrete elements.

struct RelationWitness {
    std::string relation;
    std::string lhs;
    std::string rhs;
};

struct CayleyReport {
    bool relations_hold = false;
    bool squares_central = false;
    std::vector<std::string> constants; // a_i^2 as scalars, when central
    std::vector<RelationWitness> witnesses;
};

template <class R>
CayleyReport check_cayley_generators(const CDElement<R> &a1, const CDElement<R> &a2, const CDElement<R> &a3) {
    a1.require_same_spec(a2);
    a1.require_same_spec(a3);
    if (a1.k() > 3)
        throw std::invalid_argument("Cayley relations are checked in towers of height <= 3");
    CayleyReport rep;
    auto check = [&](const char *name, const CDElement<R> &lhs, const CDElement<R> &rhs) {
        if (!(lhs == rhs)) {
            rep.witnesses.push_back({name, to_string(lhs), to_string(rhs)});
            return false;
        }
        return true;
    };
    bool ok = true;
    ok &= check("a2a1 = -a1a2", a2 * a1, -(a1 * a2));
    ok &= check("a3a1 = -a1a3", a3 * a1, -(a1 * a3));
    ok &= check("a3a2 = -a2a3", a3 * a2, -(a2 * a3));
    ok &= check("(a1a2)a3 = -a1(a2a3)", (a1 * a2) * a3, -(a1 * (a2 * a3)));
    rep.relations_hold = ok;
    rep.squares_central = true;
    for (const auto *a : {&a1, &a2, &a3}) {
        auto sq = *a * *a;
        if (!sq.is_scalar()) {
            rep.squares_central = false;
            rep.witnesses.push_back({"square is scalar", to_string(sq), "scalar"});
        } else {
            rep.constants.push_back(ring_traits<R>::str(sq[0]));
        }
    }
    if (!rep.squares_central)
        rep.constants.clear();
    return rep;
}

} // namespace cayley
