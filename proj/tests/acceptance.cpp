// Acceptance run: one line per criterion, nonzero exit if any fails.

#include <cayley/cayley.hpp>

#include "words.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>

using namespace cayley;

namespace {

using Q = CDElement<Rational>;

const AlgebraConfig poly3{RingMode::poly, 3};
const std::vector<std::vector<Rational>> mu_sets{{-1, -1, -1}, {1, 1, 1}, {2, 3, 5}};

CanonicalElement norm(const std::string &text, const AlgebraConfig &cfg = poly3) {
    return normalize_expr(parse(text, {cfg.nvars, cfg.mode}), cfg);
}

CDSpecPtr<Rational> rat(const std::vector<Rational> &mus) { return make_spec<Rational>(BaseRing::rationals(), mus); }

// Shared by criteria 1 and 4.
const std::vector<Word> &words6() {
    static const std::vector<Word> w = testing::words_upto(6);
    return w;
}

std::string c1(std::ostringstream &note) {
    std::size_t bad = 0;
    for (const Word &w : words6())
        if (to_oracle(normalize_word(w, poly3)) != evaluate_oracle(w, poly3))
            ++bad;
    note << words6().size() << " words, " << bad << " mismatches";
    return bad == 0 ? "" : "mismatch";
}

std::string c2(std::ostringstream &note) {
    const int perms[6][3] = {{1, 2, 3}, {1, 3, 2}, {2, 1, 3}, {2, 3, 1}, {3, 1, 2}, {3, 2, 1}};
    int zero = 0;
    for (const auto &p : perms) {
        auto ti = Word::gen(p[0]), tj = Word::gen(p[1]), tk = Word::gen(p[2]);
        zero += normalize_expr(Expr((ti * tj) * tk) + Expr(ti * (tj * tk)), poly3).is_zero();
        zero += normalize_expr(Expr((ti * tj) * tk) + Expr(tk * (ti * tj)), poly3).is_zero();
    }
    note << zero << "/12 anti-identities reduce to 0";
    return zero == 12 ? "" : "nonzero difference";
}

std::string c3(std::ostringstream &note) {
    const std::pair<const char *, const char *> cases[] = {{"(t1*t2)^2", "-1*z1*z2"},
                                                           {"(t1*t3)^2", "-1*z1*z3"},
                                                           {"(t2*t3)^2", "-1*z2*z3"},
                                                           {"(t1*(t2*t3))^2", "z1*z2*z3"}};
    int ok = 0;
    for (const auto &[word, expect] : cases) {
        auto c = norm(word);
        ok += format(c) == expect && center_membership(c);
        note << word << " = " << format(c) << "; ";
    }
    return ok == 4 ? "" : "wrong square";
}

std::string c4(std::ostringstream &note) {
    std::map<DegreeVector, CanonicalElement> rep;
    std::size_t bad = 0;
    for (const Word &w : words6()) {
        auto c = normalize_word(w, poly3);
        auto d = word_degree(w, 3);
        auto [it, fresh] = rep.try_emplace(d, c);
        if (!fresh && c != it->second && c != -it->second)
            ++bad;
        if (c.components().size() != 1)
            ++bad;
    }
    note << rep.size() << " degree vectors, " << bad << " violations";
    return bad == 0 ? "" : "rank exceeds 1";
}

std::string c5(std::ostringstream &note) {
    std::string fail;
    const auto assoc = norm("(t1*t2)*t3 - t1*(t2*t3)");
    if (assoc != norm("2*((t1*t2)*t3)"))
        fail = "associator (t1,t2,t3) is not 2(t1t2)t3";
    for (const auto &mus : mu_sets) {
        auto spec = rat(mus);
        auto table = cd_basis_table(spec);
        bool table_ok = table.size() == 8;
        for (std::size_t s = 0; s < table.size(); ++s)
            table_ok = table_ok && table[s].size() == 8;
        std::size_t hom = 0;
        for (std::uint64_t i = 0; i < 100; ++i) {
            Sampler rng(500, i);
            auto x = rng.canonical(poly3), y = rng.canonical(poly3);
            hom += specialize_octonion(canonical_mul(x, y), mus) ==
                   specialize_octonion(x, mus) * specialize_octonion(y, mus);
        }
        auto left = check_identity("alternative-left", spec, 200, 501);
        auto right = check_identity("alternative-right", spec, 200, 502);
        const bool nonassoc = !specialize_octonion(assoc, mus).is_zero();
        note << "(" << to_string(mus[0]) << "," << to_string(mus[1]) << "," << to_string(mus[2]) << "): hom "
             << hom << "/100, alternative " << (left.passed && right.passed) << ", nonassociative " << nonassoc
             << "; ";
        if (!table_ok || hom != 100 || !left.passed || !right.passed || !nonassoc)
            fail = "specialization check failed";
    }
    return fail;
}

std::string c6(std::ostringstream &note) {
    std::string fail;
    std::size_t pairs = 0;
    for (int n = 3; n <= 5; ++n) {
        auto torus = build_torus({AlgebraKind::octonion, RingMode::torus, n});
        for (int i = 1; i <= n; ++i) {
            auto g = torus.generator(i), gi = torus.generator(i, -1);
            if (torus.mul(g, gi) != torus.one() || torus.mul(gi, g) != torus.one())
                fail = "t_i t_i^-1 != 1";
            if (i < 4)
                continue;
            auto inv = torus.invert(g);
            if (!inv || *inv != gi)
                fail = "central generator not invertible";
            for (int a = 1; a <= n; ++a) {
                auto ta = torus.generator(a);
                if (torus.mul(g, ta) != torus.mul(ta, g))
                    fail = "central generator does not commute";
                for (int b = 1; b <= n; ++b) {
                    auto tb = torus.generator(b);
                    if (torus.mul(torus.mul(g, ta), tb) != torus.mul(g, torus.mul(ta, tb)) ||
                        torus.mul(torus.mul(ta, g), tb) != torus.mul(ta, torus.mul(g, tb)))
                        fail = "central generator does not associate";
                }
            }
        }
        for (std::uint64_t i = 0; i < 200; ++i, ++pairs) {
            Sampler rng(600 + static_cast<std::uint64_t>(n), i);
            auto x = rng.homogeneous(torus.config()), y = rng.homogeneous(torus.config());
            auto p = torus.mul(x, y);
            auto dx = torus.degree(x), dy = torus.degree(y), dp = torus.degree(p);
            for (int v = 0; v < n; ++v)
                if (dp[v] != dx[v] + dy[v])
                    fail = "degree not additive";
        }
    }
    note << "n = 3, 4, 5; " << pairs << " homogeneous pairs";
    return fail;
}

std::string c7(std::ostringstream &note) {
    const AlgebraConfig cfg{RingMode::poly, 2, AlgebraKind::quaternion};
    auto spec = oracle_spec(cfg);
    std::size_t words = 0, bad = 0;
    for (int len = 1; len <= 8; ++len)
        for (const Word &w : testing::words_of_length(len, 2)) {
            ++words;
            auto h = hamilton_normalize(w, RingMode::poly);
            auto expect = OracleElement::scalar(spec, LaurentPoly::constant(2, h.coef));
            for (int i = 0; i < h.l; ++i)
                expect = expect * OracleElement::generator(spec, 1);
            for (int i = 0; i < h.m; ++i)
                expect = expect * OracleElement::generator(spec, 2);
            bad += evaluate_oracle(w, cfg) != expect;
        }
    const bool central = evaluate_oracle(parse_word("t1*t1", {2}), cfg).is_scalar() &&
                         evaluate_oracle(parse_word("t2*t2", {2}), cfg).is_scalar();
    auto qs = rat({-1, -1});
    bool assoc = true, comm = true;
    for (std::size_t a = 0; a < 4; ++a)
        for (std::size_t b = 0; b < 4; ++b) {
            auto ea = Q::basis(qs, a), eb = Q::basis(qs, b);
            comm = comm && ea * eb == eb * ea;
            for (std::size_t c = 0; c < 4; ++c)
                assoc = assoc && associator(ea, eb, Q::basis(qs, c)).is_zero();
        }
    note << words << " words, " << bad << " mismatches; t1^2, t2^2 central " << central << "; (Q,-1,-1) dim "
         << qs->dim() << ", associative " << assoc << ", commutative " << comm;
    return bad == 0 && central && assoc && !comm && qs->dim() == 4 ? "" : "quaternion check failed";
}

std::string c8(std::ostringstream &note) {
    std::string fail;
    for (const std::vector<Rational> &mus : {std::vector<Rational>{1, 1, 1}, std::vector<Rational>{-1, -1, -1}}) {
        auto s = dorofeev_suite(mus, 100, 800);
        note << "(" << to_string(mus[0]) << ",...): " << s.relations_hold << "/" << s.triples - s.degenerate
             << " non-degenerate triples hold; ";
        if (!s.passed())
            fail = "Cayley relation failed";
    }
    return fail;
}

std::string c9(std::ostringstream &note) {
    auto sed = alternativity_search(rat({-1, -1, -1, -1}));
    auto oct = alternativity_search(rat({-1, -1, -1}));
    note << "k=4: single basis triples " << sed.single_failures << "/" << sed.single_pairs << " fail, "
         << sed.sum_failures << "/" << sed.sum_tuples << " basis-pair tuples fail, witness x = "
         << basis_label(sed.witness_s) << " + " << basis_label(sed.witness_t) << ", y = " << basis_label(sed.witness_u)
         << "; k=3: " << oct.sum_failures << " failures";
    return !sed.passed() && sed.witness && oct.passed() ? "" : "negative control did not separate k=3 from k=4";
}

std::string c10(std::ostringstream &note) {
    auto r = example43_report();
    auto c = central_closure_demo();
    note << r.closed << "/" << r.products.size() << " products closed, witness coefficient " << r.witness_coefficient
         << "; closure dimension " << c.dimension << ", zt1 coefficient " << c.zt1_coefficient;
    return r.passed() && c.passed() ? "" : "example check failed";
}

std::string c11(std::ostringstream &note) {
    auto q = composition_check(rat({-1, 2, 5}), 200, 1100);
    auto spec = make_spec<LaurentPoly>(BaseRing::polynomial(3), {LaurentPoly::variable(3, 1),
                                                                 LaurentPoly::variable(3, 2),
                                                                 LaurentPoly::variable(3, 3)});
    auto p = composition_check(spec, 200, 1101);
    note << "Q: " << q.failures << "/" << q.samples << " failures; Q[z1,z2,z3]: " << p.failures << "/" << p.samples
         << " failures";
    return q.failures == 0 && p.failures == 0 ? "" : "norm not multiplicative";
}

} // namespace

int main() {
    const std::pair<const char *, std::function<std::string(std::ostringstream &)>> criteria[] = {
        {"oracle equivalence, words of length <= 6", c1},
        {"anti-identities", c2},
        {"central squares", c3},
        {"rank-1 grading, total degree <= 6", c4},
        {"octonion specialization", c5},
        {"torus", c6},
        {"Hamilton normal form", c7},
        {"Dorofeev triples", c8},
        {"sedenion negative control", c9},
        {"12-generator example and central closure", c10},
        {"composition", c11},
    };
    int failed = 0, index = 0;
    for (const auto &[title, fn] : criteria) {
        ++index;
        std::ostringstream note;
        note << std::boolalpha;
        std::string err;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            err = fn(note);
        } catch (const std::exception &e) {
            err = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        failed += !err.empty();
        std::printf("criterion %2d %s  %s (%.2f s): %s%s%s\n", index, err.empty() ? "PASS" : "FAIL", title, secs,
                    note.str().c_str(), err.empty() ? "" : " | ", err.c_str());
    }
    std::printf("%d of %d criteria passed\n", index - failed, index);
    return failed == 0 ? 0 : 1;
}
