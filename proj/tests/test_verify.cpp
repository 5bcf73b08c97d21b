#include <cayley/json_io.hpp>
#include <cayley/verify.hpp>

#include <catch_amalgamated.hpp>

using namespace cayley;

namespace {

using Q = CDElement<Rational>;

CDSpecPtr<Rational> rat(std::vector<Rational> mus) { return make_spec<Rational>(BaseRing::rationals(), std::move(mus)); }

} // namespace

TEST_CASE("named identities hold in octonion towers") {
    for (const auto &mus : {std::vector<Rational>{-1, -1, -1}, std::vector<Rational>{2, -3, 5}}) {
        auto spec = rat(mus);
        for (const auto &name : identity_names()) {
            const std::size_t samples = name == "artin-2gen" ? 20 : 200;
            auto r = check_identity(name, spec, samples, 7);
            INFO(name);
            CHECK(r.passed);
            CHECK_FALSE(r.witness);
            CHECK(r.random_samples == samples);
        }
    }
    auto m = check_identity("moufang-middle", rat({-1, -1, -1}), 1, 0);
    CHECK(m.basis_tuples == 512);
    CHECK(m.passed);
}

TEST_CASE("sedenions fail left alternativity with a reproducible witness") {
    auto sed = rat({-1, -1, -1, -1});
    auto r = check_identity("alternative-left", sed, 10, 3);
    CHECK_FALSE(r.passed);
    REQUIRE(r.witness);
    CHECK(r.witness->lhs != r.witness->rhs);
    CHECK(r.stage == "basis-pair-sum");
    auto again = check_identity("alternative-left", sed, 10, 3);
    CHECK(to_json(again) == to_json(r));

    auto search = alternativity_search(sed);
    CHECK(search.single_pairs == 256);
    CHECK(search.single_failures == 0);
    CHECK(search.sum_failures > 0);
    REQUIRE(search.witness);
    auto x = Q::basis(sed, search.witness_s) + Q::basis(sed, search.witness_t);
    CHECK_FALSE(associator(x, x, Q::basis(sed, search.witness_u)).is_zero());

    auto oct = alternativity_search(rat({-1, -1, -1}));
    CHECK(oct.passed());
}

TEST_CASE("identity checks reject bad input") {
    auto spec = rat({-1, -1, -1});
    CHECK_THROWS_AS(check_identity("commutative", spec, 10, 0), std::invalid_argument);
    CHECK_THROWS_AS(check_identity("flexible", spec, 0, 0), std::invalid_argument);
}

TEST_CASE("random samples are seeded") {
    auto spec = rat({-1, -1, -1});
    Sampler a(99, 4), b(99, 4), c(99, 5);
    auto x = a.element(spec);
    CHECK(x == b.element(spec));
    CHECK_FALSE(x == c.element(spec));
    for (const auto &q : x.coeffs()) {
        CHECK(abs(numerator(q)) <= 10);
        CHECK(denominator(q) <= 10);
    }
}

TEST_CASE("centrality via generators") {
    auto spec = rat({-1, 2, 3});
    auto v1 = Q::generator(spec, 1), v2 = Q::generator(spec, 2), v3 = Q::generator(spec, 3);
    const std::vector<Q> gens{v1, v2, v3};
    auto sq = center_via_generators(v1 * v1, gens);
    CHECK(sq.central);
    CHECK(sq.cross_validated);
    auto gen = center_via_generators(v1, gens);
    CHECK_FALSE(gen.central);
    CHECK(gen.cross_validated);
    auto one = center_via_generators(Q::one(spec), gens);
    CHECK(one.central);
    CHECK(one.cross_validated);
    for (std::uint64_t i = 0; i < 10; ++i) {
        Sampler rng(13, i);
        auto r = center_via_generators(rng.element(spec), gens, 10, i);
        CHECK(r.cross_validated);
    }
}

TEST_CASE("Dorofeev suites") {
    for (const auto &mus : {std::vector<Rational>{1, 1, 1}, std::vector<Rational>{-1, -1, -1}}) {
        auto s = dorofeev_suite(mus, 30, 11);
        CHECK(s.passed());
        CHECK(s.triples == 30);
        CHECK(s.relations_hold + s.degenerate == 30);
    }
    auto spec = rat({-1, -1, -1});
    Sampler rng(1);
    auto a = rng.element(spec), c = rng.element(spec);
    auto same = dorofeev_triple(a, a, c);
    CHECK(same.degenerate);
    CHECK(same.u.is_zero());
    CHECK(same.relations.relations_hold);
    auto s1 = Q::scalar(spec, 2), s2 = Q::scalar(spec, 3), s3 = Q::scalar(spec, -1);
    auto scalars = dorofeev_triple(s1, s2, s3);
    CHECK(scalars.degenerate);
    CHECK(scalars.u.is_zero());
    CHECK(scalars.v.is_zero());
    CHECK(scalars.w.is_zero());
    CHECK_THROWS_AS(dorofeev_triple(Q::one(rat({-1, -1})), Q::one(rat({-1, -1})), Q::one(rat({-1, -1}))),
                    std::invalid_argument);
}

TEST_CASE("square-associator identity") {
    // (a^2, b, c) = (a, ab + ba, c)
    auto spec = rat({-1, 2, -3});
    for (std::uint64_t i = 0; i < 50; ++i) {
        Sampler rng(23, i);
        auto a = rng.element(spec), b = rng.element(spec), c = rng.element(spec);
        CHECK(associator(a * a, b, c) == associator(a, a * b + b * a, c));
    }
}

TEST_CASE("composition over Q and Q[z1,z2,z3]") {
    auto q = composition_check(rat({-1, 2, 5}), 50, 1);
    CHECK(q.failures == 0);
    auto poly = make_spec<LaurentPoly>(BaseRing::polynomial(3), {LaurentPoly::variable(3, 1),
                                                                 LaurentPoly::variable(3, 2),
                                                                 LaurentPoly::variable(3, 3)});
    auto p = composition_check(poly, 20, 1);
    CHECK(p.failures == 0);
    CHECK(p.samples == 20);
}

TEST_CASE("center membership rule for the 12-generator example") {
    for (int a = 0; a <= 6; ++a)
        for (int b = 0; b <= 6; ++b)
            CHECK(in_example_center({b, 0, 0, a}) == center_monomial_brute_force(a, b));
    CHECK(in_example_center({1, 0, 0, 1}));   // z t1^2
    CHECK(in_example_center({1, 0, 0, 2}));   // z^2 t1^2
    CHECK_FALSE(in_example_center({0, 0, 0, 1}));
    CHECK_FALSE(in_example_center({1, 0, 0, 3}));
    CHECK(in_example_center({2, 0, 0, 3}));
}

TEST_CASE("12-generator example closes under products") {
    auto r = example43_report();
    CHECK(r.passed());
    CHECK(r.generators.size() == 12);
    CHECK(r.products.size() == 144);
    CHECK(r.closed == 144);
    CHECK(r.rule_validated);
    CHECK(r.witness_coefficient == "z4");
    CHECK_FALSE(r.witness_coefficient_in_center);

    auto find = [&](const std::string &a, const std::string &b) {
        for (const auto &p : r.products)
            if (r.generators[p.left] == a && r.generators[p.right] == b)
                return p;
        FAIL("product not found");
        return ProductCheck{};
    };
    auto p1 = find("zt1", "t1");
    CHECK(p1.center == "z1*z4");
    CHECK(r.generators[p1.generator] == "1");
    auto p2 = find("t2", "zt1");
    CHECK(p2.sign == -1);
    CHECK(r.generators[p2.generator] == "zt1t2");
    CHECK(p2.center == "1");
    auto p3 = find("zt1t2", "t3");
    CHECK(p3.product == "z4*(t1t2)t3");
    CHECK(r.generators[p3.generator] == "zt1(t2t3)");
    CHECK(p3.sign == -1);
}

TEST_CASE("central closure is eight-dimensional") {
    auto r = central_closure_demo();
    CHECK(r.passed());
    CHECK(r.dimension == 8);
    CHECK(r.zt1_coefficient == "(z1*z4)/(z1)");
    CHECK(r.matches_alternative);
    CHECK(r.one_is_itself);
    CHECK(r.tower_product_agrees);
    REQUIRE(r.entries.size() == 12);
    CHECK(r.entries[8].label == 1);
    CHECK(r.entries[8].numerator_center == "z1*z4");
    CHECK(r.entries[8].denominator_center == "z1");
}

TEST_CASE("sedenion demo") {
    auto r = sedenion_demo(1, 5);
    CHECK(r.passed());
    CHECK(r.octonion.passed());
    CHECK_FALSE(r.sedenion.passed());
}
