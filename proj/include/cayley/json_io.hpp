#pragma once

// JSON forms of canonical elements, basis tables and reports.
//
// Canonical elements:
//   {"mode": "poly"|"torus", "nvars": n,
//    "terms": [{"basis": "<label>", "center": [{"exp": [...], "coef": "p/q"}]}]}
// Quaternion elements add "kind": "quaternion".

#include "canonical.hpp"
#include "cayley_dickson.hpp"
#include "normalizer.hpp"
#include "presentations.hpp"
#include "verify.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace cayley {

using json = nlohmann::ordered_json;

inline json to_json(const LaurentPoly &p) {
    json out = json::array();
    for (const auto &[e, c] : p.terms())
        out.push_back({{"exp", e}, {"coef", to_string(c)}});
    return out;
}

inline json to_json(const CanonicalElement &c) {
    json j;
    j["mode"] = to_string(c.mode());
    j["nvars"] = c.nvars();
    if (c.kind() == AlgebraKind::quaternion)
        j["kind"] = "quaternion";
    j["terms"] = json::array();
    for (Label s : label_order) {
        auto it = c.components().find(s);
        if (it != c.components().end())
            j["terms"].push_back({{"basis", label_name(s)}, {"center", to_json(it->second)}});
    }
    return j;
}

inline CanonicalElement canonical_from_json(const json &j) {
    const std::string mode = j.at("mode").get<std::string>();
    if (mode != "poly" && mode != "torus")
        throw std::invalid_argument("mode must be \"poly\" or \"torus\"");
    const int n = j.at("nvars").get<int>();
    AlgebraKind kind = AlgebraKind::octonion;
    if (j.contains("kind")) {
        const auto k = j.at("kind").get<std::string>();
        if (k == "quaternion")
            kind = AlgebraKind::quaternion;
        else if (k != "octonion")
            throw std::invalid_argument("unknown algebra kind '" + k + "'");
    }
    CanonicalElement c(n, mode == "poly" ? RingMode::poly : RingMode::torus, kind);
    for (const auto &t : j.at("terms")) {
        const Label s = label_from_name(t.at("basis").get<std::string>());
        LaurentPoly p(n);
        for (const auto &m : t.at("center")) {
            auto e = m.at("exp").get<ExponentVector>();
            if (static_cast<int>(e.size()) != n)
                throw std::invalid_argument("exponent vector has wrong length");
            p.add_term(e, parse_rational(m.at("coef").get<std::string>()));
        }
        c.add(s, p);
    }
    return c;
}

template <class R>
json to_json(const CDElement<R> &x) {
    json terms = json::array();
    for (std::size_t s = 0; s < x.coeffs().size(); ++s)
        if (!ring_traits<R>::is_zero(x[s]))
            terms.push_back({{"basis", basis_label(s)}, {"coef", ring_traits<R>::str(x[s])}});
    return {{"k", x.k()}, {"terms", terms}};
}

template <class R>
json table_json(const std::vector<std::vector<BasisProduct<R>>> &table) {
    json rows = json::array();
    for (const auto &row : table) {
        json r = json::array();
        for (const auto &e : row)
            r.push_back({{"coef", ring_traits<R>::str(e.coef)}, {"basis", basis_label(e.subset)}});
        rows.push_back(r);
    }
    return rows;
}

inline json to_json(const RewriteStep &s) {
    return {{"rule", s.rule}, {"before", rewrite::to_string(s.before)}, {"after", rewrite::to_string(s.after)}};
}

inline json to_json(const Witness &w) { return {{"inputs", w.inputs}, {"lhs", w.lhs}, {"rhs", w.rhs}}; }

inline json to_json(const IdentityReport &r) {
    json j{{"identity", r.name},
           {"k", r.k},
           {"seed", r.seed},
           {"passed", r.passed},
           {"samples_tested", r.samples_tested},
           {"basis_tuples", r.basis_tuples},
           {"sum_tuples", r.sum_tuples},
           {"random_samples", r.random_samples}};
    if (r.witness) {
        j["stage"] = r.stage;
        j["witness"] = to_json(*r.witness);
    }
    return j;
}

inline json to_json(const CayleyReport &r) {
    json w = json::array();
    for (const auto &x : r.witnesses)
        w.push_back({{"relation", x.relation}, {"lhs", x.lhs}, {"rhs", x.rhs}});
    return {{"relations_hold", r.relations_hold},
            {"squares_central", r.squares_central},
            {"constants", r.constants},
            {"witnesses", w}};
}

inline json to_json(const AlternativitySearch &s) {
    json j{{"k", s.k},
           {"passed", s.passed()},
           {"single_pairs", s.single_pairs},
           {"single_failures", s.single_failures},
           {"sum_tuples", s.sum_tuples},
           {"sum_failures", s.sum_failures}};
    if (s.witness) {
        j["witness"] = to_json(*s.witness);
        j["witness"]["pair"] = {basis_label(s.witness_s), basis_label(s.witness_t)};
        j["witness"]["y"] = basis_label(s.witness_u);
    }
    return j;
}

inline json to_json(const SedenionReport &r) {
    return {{"passed", r.passed()},
            {"octonion", to_json(r.octonion)},
            {"sedenion", to_json(r.sedenion)},
            {"alternative_left_k4", to_json(r.identity)}};
}

inline json to_json(const DorofeevSuite &s) {
    std::vector<std::string> mus;
    for (const auto &m : s.mus)
        mus.push_back(to_string(m));
    json j{{"mus", mus},
           {"seed", s.seed},
           {"passed", s.passed()},
           {"triples", s.triples},
           {"degenerate", s.degenerate},
           {"relations_hold", s.relations_hold},
           {"squares_scalar", s.squares_scalar}};
    if (s.failure)
        j["failure"] = *s.failure;
    return j;
}

inline json to_json(const Example43Report &r) {
    json open = json::array();
    for (const auto &p : r.products)
        if (!p.closed)
            open.push_back({{"left", r.generators[p.left]}, {"right", r.generators[p.right]}, {"product", p.product}});
    json sample = json::array();
    for (const auto &p : r.products)
        if (p.closed && p.left >= 8)
            sample.push_back({{"left", r.generators[p.left]},
                              {"right", r.generators[p.right]},
                              {"product", p.product},
                              {"center", p.center},
                              {"sign", p.sign},
                              {"generator", r.generators[p.generator]}});
    return {{"passed", r.passed()},
            {"generators", r.generators},
            {"membership_rule_validated", r.rule_validated},
            {"membership_rule_checked", r.rule_checked},
            {"products", r.products.size()},
            {"closed", r.closed},
            {"unclosed", open},
            {"z_generator_products", sample},
            {"non_octonion_witness",
             {{"element", r.witness_element},
              {"coefficient_on_t1", r.witness_coefficient},
              {"coefficient_in_center", r.witness_coefficient_in_center},
              {"coefficient_in_octonion_scalars", r.witness_coefficient_in_octonion_scalars}}}};
}

inline json to_json(const CentralClosureReport &r) {
    json entries = json::array();
    for (const auto &e : r.entries)
        entries.push_back({{"generator", e.generator},
                           {"basis", label_name(e.label)},
                           {"coefficient", to_string(e.coefficient)},
                           {"numerator", e.numerator_center},
                           {"denominator", e.denominator_center},
                           {"from_center", e.from_center}});
    return {{"passed", r.passed()},
            {"dimension", r.dimension},
            {"zt1_coefficient", r.zt1_coefficient},
            {"matches_alternative_form", r.matches_alternative},
            {"tower_product_agrees", r.tower_product_agrees},
            {"one_is_itself", r.one_is_itself},
            {"decompositions", entries}};
}

} // namespace cayley
