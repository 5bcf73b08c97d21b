#include <cayley/presentations.hpp>
#include <cayley/verify.hpp>

#include "words.hpp"

#include <catch_amalgamated.hpp>

using namespace cayley;

namespace {

using Q = CDElement<Rational>;

const AlgebraConfig poly3{RingMode::poly, 3};
const std::vector<Rational> hamilton{-1, -1, -1};

CanonicalElement norm(std::string_view text, const AlgebraConfig &cfg = poly3) {
    return normalize_expr(parse(text, {cfg.nvars, cfg.mode}), cfg);
}

} // namespace

TEST_CASE("specialization substitutes the structure constants") {
    auto spec = make_spec<Rational>(BaseRing::rationals(), hamilton);
    CHECK(specialize_octonion(norm("(t1*t2)^2"), hamilton) == Q::scalar(spec, -1));
    CHECK(specialize_octonion(norm("1"), hamilton) == Q::one(spec));
    for (const auto &mus : {hamilton, std::vector<Rational>{2, 3, 5}})
        CHECK(specialize_octonion(norm("t1"), mus) == Q::generator(make_spec<Rational>(BaseRing::rationals(), mus), 1));
    CHECK_THROWS_AS(specialize_octonion(norm("t1", {RingMode::torus, 3}), hamilton), std::invalid_argument);
    CHECK_THROWS_AS(specialize_octonion(norm("t1", {RingMode::poly, 4}), hamilton), std::invalid_argument);
}

TEST_CASE("specialization is a homomorphism and a basis bijection") {
    for (const auto &mus : {hamilton, std::vector<Rational>{1, 1, 1}, std::vector<Rational>{2, 3, 5}}) {
        auto spec = make_spec<Rational>(BaseRing::rationals(), mus);
        for (Label s = 0; s < 8; ++s) {
            CanonicalElement c(3, RingMode::poly);
            c.add(s, LaurentPoly::constant(3, 1));
            CHECK(specialize_octonion(c, mus) == Q::basis(spec, s));
        }
        for (std::uint64_t i = 0; i < 40; ++i) {
            Sampler rng(61, i);
            auto x = rng.canonical(poly3), y = rng.canonical(poly3);
            CHECK(specialize_octonion(canonical_mul(x, y), mus) ==
                  specialize_octonion(x, mus) * specialize_octonion(y, mus));
        }
    }
}

TEST_CASE("Hamilton normal form") {
    auto h = [](const char *text, RingMode mode = RingMode::poly) {
        return hamilton_normalize(parse_word(text, {2, mode}), mode);
    };
    CHECK(h("t2*t1") == HamiltonMonomial{-1, 1, 1});
    CHECK(h("(t1*t2)*(t1*t2)") == HamiltonMonomial{-1, 2, 2});
    CHECK(h("t1*t1") == HamiltonMonomial{1, 2, 0});
    CHECK(h("t2^-1*(t1^-1*t2)", RingMode::torus) == HamiltonMonomial{-1, -1, 0});
    CHECK_THROWS_AS(hamilton_normalize(parse_word("t1*t3"), RingMode::poly), std::invalid_argument);
}

TEST_CASE("Hamilton normal form agrees with the quaternion model") {
    const AlgebraConfig cfg{RingMode::poly, 2, AlgebraKind::quaternion};
    auto spec = oracle_spec(cfg);
    using P = OracleElement;
    for (const Word &w : testing::words_upto(6, 2)) {
        auto h = hamilton_normalize(w, RingMode::poly);
        P expect = P::scalar(spec, LaurentPoly::constant(2, h.coef));
        for (int i = 0; i < h.l; ++i)
            expect = expect * P::generator(spec, 1);
        for (int i = 0; i < h.m; ++i)
            expect = expect * P::generator(spec, 2);
        CHECK(evaluate_oracle(w, cfg) == expect);
    }
}

TEST_CASE("octonion and quaternion tori") {
    auto oct = build_torus({AlgebraKind::octonion, RingMode::torus, 3});
    CHECK(oct.normalize(parse_word("t1^-1*t1", {3, RingMode::torus})) == oct.one());

    auto oct4 = build_torus({AlgebraKind::octonion, RingMode::torus, 4});
    auto t4 = oct4.generator(4);
    auto inv = oct4.invert(t4);
    REQUIRE(inv);
    CHECK(oct4.mul(t4, *inv) == oct4.one());
    CHECK(*inv == oct4.generator(4, -1));
    for (int i = 1; i <= 3; ++i) {
        auto ti = oct4.generator(i);
        CHECK(oct4.mul(t4, ti) == oct4.mul(ti, t4));
        for (int j = 1; j <= 3; ++j) {
            auto tj = oct4.generator(j);
            CHECK(oct4.mul(oct4.mul(ti, t4), tj) == oct4.mul(ti, oct4.mul(t4, tj)));
        }
    }

    auto quat = build_torus({AlgebraKind::quaternion, RingMode::torus, 2});
    auto t1 = quat.generator(1), t2 = quat.generator(2);
    CHECK(quat.mul(t1, t2) == -quat.mul(t2, t1));
    for (const auto &g : {t1, t2}) {
        auto gi = quat.invert(g);
        REQUIRE(gi);
        CHECK(quat.mul(g, *gi) == quat.one());
    }
    CHECK_THROWS_AS(build_torus({AlgebraKind::octonion, RingMode::torus, 2}), std::invalid_argument);
    CHECK_THROWS_AS(build_torus({AlgebraKind::quaternion, RingMode::torus, 1}), std::invalid_argument);
}

TEST_CASE("torus degrees add") {
    for (int n = 3; n <= 5; ++n) {
        auto torus = build_torus({AlgebraKind::octonion, RingMode::torus, n});
        for (std::uint64_t i = 0; i < 40; ++i) {
            Sampler rng(71, i);
            auto x = rng.homogeneous(torus.config()), y = rng.homogeneous(torus.config());
            auto p = torus.mul(x, y);
            REQUIRE(p.is_homogeneous());
            auto dx = torus.degree(x), dy = torus.degree(y), dp = torus.degree(p);
            for (int v = 0; v < n; ++v)
                CHECK(dp[v] == dx[v] + dy[v]);
        }
    }
}

TEST_CASE("Cayley relations on concrete generators") {
    auto spec = make_spec<Rational>(BaseRing::rationals(), {2, 3, 5});
    auto v1 = Q::generator(spec, 1), v2 = Q::generator(spec, 2), v3 = Q::generator(spec, 3);
    auto ok = check_cayley_generators(v1, v2, v3);
    CHECK(ok.relations_hold);
    CHECK(ok.squares_central);
    CHECK(ok.constants == std::vector<std::string>{"2", "3", "5"});
    CHECK(ok.witnesses.empty());

    auto bad = check_cayley_generators(v1, v2, v1);
    CHECK_FALSE(bad.relations_hold);
    REQUIRE_FALSE(bad.witnesses.empty());
    CHECK(bad.witnesses.front().relation == "a3a1 = -a1a3");

    auto other = Q::generator(make_spec<Rational>(BaseRing::rationals(), {1, 1, 1}), 1);
    CHECK_THROWS_AS(check_cayley_generators(v1, v2, other), std::invalid_argument);
}

TEST_CASE("Dorofeev triples satisfy the Cayley relations") {
    auto spec = make_spec<Rational>(BaseRing::rationals(), hamilton);
    Sampler rng(5);
    auto t = dorofeev_triple(rng.element(spec), rng.element(spec), rng.element(spec));
    CHECK_FALSE(t.degenerate);
    CHECK(t.relations.relations_hold);
    CHECK(t.relations.squares_central);
}

TEST_CASE("presentation specs validate") {
    CHECK_NOTHROW(PresentationSpec{AlgebraKind::quaternion, RingMode::poly, 2}.validate());
    CHECK_THROWS(PresentationSpec{AlgebraKind::octonion, RingMode::poly, 2}.validate());
    CHECK_THROWS(PresentationSpec{AlgebraKind::octonion, RingMode::poly, 3, std::vector<Rational>{1, 0, 1}}.validate());
    CHECK_THROWS(PresentationSpec{AlgebraKind::quaternion, RingMode::poly, 2, std::vector<Rational>{1, 1, 1}}.validate());
}
