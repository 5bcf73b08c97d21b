#pragma once

// Normal forms in the Cayley polynomial ring Q_C[t1..tn] and the octonion
// torus, plus the independent semantic model used to check them.
//
// normalize_word works by structural recursion: each factor is reduced to
// +-z^e * (basis monomial), then the two basis monomials are combined with the
// rule-derived product table (rewrite.hpp). Central generators t4..tn are
// pulled out as center variables first; t_i^-1 = z_i^-1 t_i in the torus.
//
// evaluate_oracle instead folds the word through the Cayley-Dickson product
// in D = (Q[z1..zn], z1, z2, z3) (Laurent base in the torus), sending t_i to
// v_i. The two must agree on every word.

#include "canonical.hpp"
#include "cayley_dickson.hpp"
#include "expr.hpp"
#include "rewrite.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace cayley {

struct AlgebraConfig {
    RingMode mode = RingMode::poly;
    int nvars = 3;
    AlgebraKind kind = AlgebraKind::octonion;

    [[nodiscard]] int core() const { return core_generators(kind); }

    void validate() const {
        if (nvars < core())
            throw std::invalid_argument("need at least " + std::to_string(core()) + " generators");
    }
};

namespace detail {

struct SignedMonomial {
    int sign = 1;
    ExponentVector exps;
    Label label = 0;
};

inline void check_word(const Word &w, const AlgebraConfig &cfg) {
    if (w.max_index() > cfg.nvars)
        throw std::invalid_argument("word uses a generator beyond t" + std::to_string(cfg.nvars));
    if (cfg.mode == RingMode::poly && w.has_inverse())
        throw std::invalid_argument("inverse outside torus mode");
}

inline SignedMonomial reduce(const Word &w, const AlgebraConfig &cfg,
                             const rewrite::ProductTable &table) {
    if (w.is_gen()) {
        SignedMonomial m{1, ExponentVector(cfg.nvars, 0), 0};
        const int i = w.index();
        if (i <= cfg.core()) {
            m.label = 1u << (i - 1);
            if (w.exponent() < 0)
                m.exps[i - 1] = -1;
        } else {
            m.exps[i - 1] = w.exponent();
        }
        return m;
    }
    SignedMonomial a = reduce(w.left(), cfg, table);
    SignedMonomial b = reduce(w.right(), cfg, table);
    const rewrite::TableEntry &e = table[a.label][b.label];
    SignedMonomial r{a.sign * b.sign * e.sign, std::move(a.exps), e.label};
    for (int i = 0; i < cfg.nvars; ++i)
        r.exps[i] += b.exps[i] + (i < 3 ? e.z[i] : 0);
    return r;
}

} // namespace detail

inline CanonicalElement normalize_word(const Word &w, const AlgebraConfig &cfg) {
    cfg.validate();
    detail::check_word(w, cfg);
    auto m = detail::reduce(w, cfg, rewrite::product_table());
    CanonicalElement c(cfg.nvars, cfg.mode, cfg.kind);
    c.add(m.label, LaurentPoly::monomial(Rational(m.sign), std::move(m.exps)));
    return c;
}

inline CanonicalElement normalize_expr(const Expr &e, const AlgebraConfig &cfg) {
    cfg.validate();
    CanonicalElement c(cfg.nvars, cfg.mode, cfg.kind);
    c.add(0, LaurentPoly::constant(cfg.nvars, e.scalar()));
    for (const auto &[w, coef] : e.terms())
        c += LaurentPoly::constant(cfg.nvars, coef) * normalize_word(w, cfg);
    return c;
}

/// Product of canonical elements through the rule-derived basis table.
inline CanonicalElement canonical_mul(const CanonicalElement &x, const CanonicalElement &y) {
    x.require_compatible(y);
    const auto &table = rewrite::product_table();
    const int n = x.nvars();
    CanonicalElement r(n, x.mode(), x.kind());
    for (const auto &[s, p] : x.components()) {
        for (const auto &[t, q] : y.components()) {
            const auto &e = table[s][t];
            ExponentVector z(n, 0);
            for (int i = 0; i < 3 && i < n; ++i)
                z[i] = e.z[i];
            r.add(e.label, LaurentPoly::monomial(Rational(e.sign), std::move(z)) * p * q);
        }
    }
    return r;
}

inline DegreeVector word_degree(const Word &w, int nvars) {
    DegreeVector d(nvars, 0);
    auto walk = [&](auto &&self, const Word &u) -> void {
        if (u.is_gen()) {
            if (u.index() > nvars)
                throw std::invalid_argument("generator beyond the variable count");
            d[u.index() - 1] += u.exponent();
            return;
        }
        self(self, u.left());
        self(self, u.right());
    };
    walk(walk, w);
    return d;
}

// ---------------------------------------------------------------------------
// Oracle: evaluation in the Cayley-Dickson model.

inline CDSpecPtr<LaurentPoly> oracle_spec(const AlgebraConfig &cfg) {
    cfg.validate();
    const std::size_t n = cfg.nvars;
    BaseRing base = cfg.mode == RingMode::poly ? BaseRing::polynomial(n) : BaseRing::laurent(n);
    std::vector<LaurentPoly> mus;
    for (int i = 1; i <= cfg.core(); ++i)
        mus.push_back(LaurentPoly::variable(n, i));
    return make_spec<LaurentPoly>(base, std::move(mus));
}

using OracleElement = CDElement<LaurentPoly>;

inline OracleElement evaluate_oracle(const Word &w, const CDSpecPtr<LaurentPoly> &spec,
                                     const AlgebraConfig &cfg) {
    if (w.is_gen()) {
        const int i = w.index();
        OracleElement g = i <= cfg.core()
                              ? OracleElement::generator(spec, i)
                              : OracleElement::scalar(spec, LaurentPoly::variable(cfg.nvars, i));
        if (w.exponent() > 0)
            return g;
        auto inv = cd_invert(g);
        if (!inv)
            throw std::domain_error("generator is not invertible in this base ring");
        return *inv;
    }
    return evaluate_oracle(w.left(), spec, cfg) * evaluate_oracle(w.right(), spec, cfg);
}

inline OracleElement evaluate_oracle(const Word &w, const AlgebraConfig &cfg) {
    detail::check_word(w, cfg);
    return evaluate_oracle(w, oracle_spec(cfg), cfg);
}

inline OracleElement evaluate_oracle(const Expr &e, const AlgebraConfig &cfg) {
    auto spec = oracle_spec(cfg);
    auto acc = OracleElement::scalar(spec, LaurentPoly::constant(cfg.nvars, e.scalar()));
    for (const auto &[w, c] : e.terms()) {
        detail::check_word(w, cfg);
        acc = acc + LaurentPoly::constant(cfg.nvars, c) * evaluate_oracle(w, spec, cfg);
    }
    return acc;
}

/// Basis label S <-> e_S.
inline OracleElement to_oracle(const CanonicalElement &c) {
    AlgebraConfig cfg{c.mode(), c.nvars(), c.kind()};
    auto x = OracleElement::zero(oracle_spec(cfg));
    std::vector<LaurentPoly> coeffs = x.coeffs();
    for (const auto &[s, p] : c.components())
        coeffs[s] = p;
    return OracleElement(x.spec_ptr(), std::move(coeffs));
}

inline CanonicalElement from_oracle(const OracleElement &x, const AlgebraConfig &cfg) {
    CanonicalElement c(cfg.nvars, cfg.mode, cfg.kind);
    for (std::size_t s = 0; s < x.coeffs().size(); ++s)
        c.add(static_cast<Label>(s), x[s]);
    return c;
}

/// Product on canonical elements computed in the model.
inline CanonicalElement oracle_mul(const CanonicalElement &x, const CanonicalElement &y) {
    x.require_compatible(y);
    AlgebraConfig cfg{x.mode(), x.nvars(), x.kind()};
    return from_oracle(to_oracle(x) * to_oracle(y), cfg);
}

/// Inverse through the model; empty when the norm is not a unit.
inline std::optional<CanonicalElement> canonical_invert(const CanonicalElement &x) {
    AlgebraConfig cfg{x.mode(), x.nvars(), x.kind()};
    auto inv = cd_invert(to_oracle(x));
    if (!inv)
        return std::nullopt;
    return from_oracle(*inv, cfg);
}

// ---------------------------------------------------------------------------
// Rewrite traces.

struct RewriteStep {
    std::string rule;
    rewrite::State before;
    rewrite::State after;
};

namespace detail {

inline std::string word_to_tree(const Word &w) {
    if (w.is_gen()) {
        if (w.index() > 3 || w.exponent() < 0)
            throw std::invalid_argument("traces cover words over t1, t2, t3 in polynomial mode");
        return rewrite::leaf(w.index());
    }
    return "*" + word_to_tree(w.left()) + word_to_tree(w.right());
}

// Path (sequence of 'l'/'r') to the leftmost innermost non-canonical product
// whose factors are canonical; empty optional when the tree is canonical.
inline bool find_redex(const std::string &t, std::string &path) {
    if (rewrite::is_canonical(t))
        return false;
    auto [l, r] = rewrite::split(t);
    path.push_back('l');
    if (find_redex(l, path))
        return true;
    path.back() = 'r';
    if (find_redex(r, path))
        return true;
    path.pop_back();
    return true; // both factors canonical: this node is the redex
}

inline std::string subtree_at(const std::string &t, std::string_view path) {
    if (path.empty())
        return t;
    auto [l, r] = rewrite::split(t);
    return subtree_at(path[0] == 'l' ? l : r, path.substr(1));
}

inline std::string replace_at(const std::string &t, std::string_view path, const std::string &sub) {
    if (path.empty())
        return sub;
    auto [l, r] = rewrite::split(t);
    if (path[0] == 'l')
        return rewrite::mul(replace_at(l, path.substr(1), sub), r);
    return rewrite::mul(l, replace_at(r, path.substr(1), sub));
}

} // namespace detail

/// Innermost-first reduction of a word over t1, t2, t3 (polynomial mode),
/// one named rule per step.
inline std::vector<RewriteStep> rewrite_trace(const Word &w) {
    const auto &table = rewrite::product_table();
    rewrite::State cur{1, {0, 0, 0}, detail::word_to_tree(w)};
    std::vector<RewriteStep> steps;
    std::string path;
    while (detail::find_redex(cur.tree, path)) {
        std::string redex = detail::subtree_at(cur.tree, path);
        auto [l, r] = rewrite::split(redex);
        const auto &entry = table[rewrite::label_of_canonical(l)][rewrite::label_of_canonical(r)];
        // derivation states are cumulative from the bare redex (sign 1, no scalar)
        const rewrite::State base = cur;
        for (const auto &m : entry.derivation) {
            rewrite::State next{base.sign * m.next.sign, base.z,
                                detail::replace_at(base.tree, path, m.next.tree)};
            for (int i = 0; i < 3; ++i)
                next.z[i] += m.next.z[i];
            steps.push_back({m.rule, cur, next});
            cur = std::move(next);
            // drop a detour that returns to an earlier state
            for (std::size_t i = 0; i < steps.size(); ++i) {
                if (steps[i].before == cur) {
                    steps.resize(i);
                    break;
                }
            }
        }
        path.clear();
    }
    return steps;
}

inline CanonicalElement state_to_canonical(const rewrite::State &s) {
    CanonicalElement c(3, RingMode::poly);
    c.add(rewrite::label_of_canonical(s.tree),
          LaurentPoly::monomial(Rational(s.sign), ExponentVector{s.z[0], s.z[1], s.z[2]}));
    return c;
}

} // namespace cayley
