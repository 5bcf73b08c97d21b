#pragma once

// Command-line front end. `run` is separate from main so tests can drive it
// in-process and compare streams.
//
// Exit codes: 0 all checks pass, 1 a mathematical check failed, 2 usage error.

#include <cayley/cayley.hpp>

#include <CLI11.hpp>

#include <cstdint>
#include <cstdlib>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace cayley::cli {

struct CliConfig {
    std::string mode = "poly";
    int nvars = 3;
    std::string assoc = "strict";
    std::string output = "text";
    std::optional<std::uint64_t> seed;
};

class usage_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {

inline std::uint64_t resolve_seed(const CliConfig &cfg) {
    if (cfg.seed)
        return *cfg.seed;
    if (const char *env = std::getenv("CAYLEY_SEED")) {
        try {
            std::size_t used = 0;
            auto v = std::stoull(env, &used);
            if (used != std::string(env).size())
                throw std::invalid_argument(env);
            return v;
        } catch (const std::exception &) {
            throw usage_error(std::string("CAYLEY_SEED is not an unsigned integer: ") + env);
        }
    }
    return 1;
}

inline std::vector<Rational> parse_mus(const std::string &text) {
    std::vector<Rational> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            out.push_back(parse_rational(item));
        } catch (const parse_error &e) {
            throw usage_error("bad structure constant '" + item + "': " + e.what());
        }
        if (out.back().is_zero())
            throw usage_error("structure constants must be nonzero");
    }
    if (out.empty())
        throw usage_error("--mus needs at least one value");
    return out;
}

// Indented "key: value" rendering of a JSON report.
inline void print_text(std::ostream &out, const json &j, int indent = 0) {
    const std::string pad(indent, ' ');
    auto scalar = [](const json &v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
    if (j.is_object()) {
        for (const auto &[k, v] : j.items()) {
            if (v.is_structured() && !v.empty()) {
                out << pad << k << ":\n";
                print_text(out, v, indent + 2);
            } else {
                out << pad << k << ": " << (v.is_structured() ? v.dump() : scalar(v)) << "\n";
            }
        }
    } else if (j.is_array()) {
        for (const auto &v : j) {
            if (v.is_structured() && !v.empty()) {
                out << pad << "-\n";
                print_text(out, v, indent + 2);
            } else {
                out << pad << "- " << scalar(v) << "\n";
            }
        }
    } else {
        out << pad << scalar(j) << "\n";
    }
}

struct Context {
    CliConfig cfg;
    std::ostream &out;
    std::ostream &err;

    [[nodiscard]] bool as_json() const { return cfg.output == "json"; }

    [[nodiscard]] AlgebraConfig algebra() const {
        AlgebraConfig a{cfg.mode == "torus" ? RingMode::torus : RingMode::poly, cfg.nvars, AlgebraKind::octonion};
        if (a.nvars < 3)
            throw usage_error("--nvars must be at least 3");
        return a;
    }

    Expr parse_expr(const std::string &text) const {
        ParseOptions opts{cfg.nvars, algebra().mode, cfg.assoc == "left" ? Assoc::left : Assoc::strict};
        bool reassociated = false;
        Expr e = parse(text, opts, reassociated);
        if (reassociated)
            err << "warning: unparenthesized product in \"" << text << "\" was grouped to the left\n";
        return e;
    }

    void emit(const json &j) const {
        if (as_json())
            out << j.dump(2) << "\n";
        else
            print_text(out, j);
    }
};

inline int cmd_normalize(const Context &ctx, const std::string &text) {
    auto c = normalize_expr(ctx.parse_expr(text), ctx.algebra());
    if (ctx.as_json())
        ctx.out << to_json(c).dump(2) << "\n";
    else
        ctx.out << format(c) << "\n";
    return 0;
}

inline int cmd_mul(const Context &ctx, const std::string &a, const std::string &b) {
    const auto cfg = ctx.algebra();
    auto c = canonical_mul(normalize_expr(ctx.parse_expr(a), cfg), normalize_expr(ctx.parse_expr(b), cfg));
    if (ctx.as_json())
        ctx.out << to_json(c).dump(2) << "\n";
    else
        ctx.out << format(c) << "\n";
    return 0;
}

inline int cmd_trace(const Context &ctx, const std::string &text) {
    if (ctx.cfg.mode != "poly")
        throw usage_error("trace works in polynomial mode");
    Expr e = ctx.parse_expr(text);
    if (!e.scalar().is_zero() || e.terms().size() != 1 || e.terms().begin()->second != 1)
        throw usage_error("trace takes a single word");
    const Word w = e.terms().begin()->first;
    if (w.max_index() > 3)
        throw usage_error("trace covers words over t1, t2, t3");
    auto steps = rewrite_trace(w);
    auto result = normalize_word(w, {RingMode::poly, 3});
    const rewrite::State start{1, {0, 0, 0}, cayley::detail::word_to_tree(w)};
    const auto &end = steps.empty() ? start : steps.back().after;
    const bool agrees = state_to_canonical(end) == result;
    if (ctx.as_json()) {
        json j{{"word", to_string(w)}, {"steps", json::array()}};
        for (const auto &s : steps)
            j["steps"].push_back(to_json(s));
        j["result"] = to_json(result);
        j["agrees_with_normalizer"] = agrees;
        ctx.out << j.dump(2) << "\n";
    } else {
        ctx.out << rewrite::to_string(start) << "\n";
        for (const auto &s : steps)
            ctx.out << "  = " << rewrite::to_string(s.after) << "    [" << s.rule << "]\n";
        ctx.out << "result: " << format(result) << "\n";
    }
    return agrees ? 0 : 1;
}

inline int cmd_table(const Context &ctx, const std::string &mus_text, int k) {
    auto mus = parse_mus(mus_text);
    if (k == 0)
        k = static_cast<int>(mus.size());
    if (k < 1 || k > 4)
        throw usage_error("--k must be between 1 and 4");
    if (static_cast<int>(mus.size()) != k)
        throw usage_error("--mus needs exactly " + std::to_string(k) + " values");
    auto spec = make_spec<Rational>(BaseRing::rationals(), mus);
    auto table = cd_basis_table(spec);
    if (ctx.as_json()) {
        ctx.out << json{{"k", k}, {"table", table_json(table)}}.dump(2) << "\n";
        return 0;
    }
    std::vector<std::vector<std::string>> cells;
    std::size_t width = 0;
    for (const auto &row : table) {
        cells.emplace_back();
        for (const auto &e : row) {
            std::string c = e.coef == 1 ? basis_label(e.subset)
                            : e.coef == -1 ? "-" + basis_label(e.subset)
                                           : to_string(e.coef) + "*" + basis_label(e.subset);
            width = std::max(width, c.size());
            cells.back().push_back(std::move(c));
        }
    }
    for (std::size_t t = 0; t < table.size(); ++t)
        width = std::max(width, basis_label(t).size());
    ctx.out << std::setw(static_cast<int>(width)) << "" << " |";
    for (std::size_t t = 0; t < table.size(); ++t)
        ctx.out << " " << std::setw(static_cast<int>(width)) << basis_label(t);
    ctx.out << "\n";
    for (std::size_t s = 0; s < table.size(); ++s) {
        ctx.out << std::setw(static_cast<int>(width)) << basis_label(s) << " |";
        for (const auto &c : cells[s])
            ctx.out << " " << std::setw(static_cast<int>(width)) << c;
        ctx.out << "\n";
    }
    return 0;
}

inline int cmd_check(const Context &ctx, const std::string &name, int k, std::size_t samples,
                     const std::string &mus_text) {
    bool known = false;
    for (const auto &n : identity_names())
        known = known || n == name;
    if (!known)
        throw usage_error("unknown identity '" + name + "'");
    if (k < 1 || k > 4)
        throw usage_error("--k must be between 1 and 4");
    if (samples < 1)
        throw usage_error("--samples must be at least 1");
    std::vector<Rational> mus = mus_text.empty() ? std::vector<Rational>(k, Rational(-1)) : parse_mus(mus_text);
    if (static_cast<int>(mus.size()) != k)
        throw usage_error("--mus needs exactly " + std::to_string(k) + " values");
    auto rep = check_identity(name, make_spec<Rational>(BaseRing::rationals(), mus), samples, resolve_seed(ctx.cfg));
    ctx.emit(to_json(rep));
    return rep.passed ? 0 : 1;
}

inline json octonion_presentation(const std::vector<Rational> &mus, std::uint64_t seed, std::size_t samples,
                                  bool &ok) {
    auto spec = make_spec<Rational>(BaseRing::rationals(), mus);
    using E = CDElement<Rational>;
    auto gens = check_cayley_generators(E::generator(spec, 1), E::generator(spec, 2), E::generator(spec, 3));
    const AlgebraConfig cfg{RingMode::poly, 3};
    // relations (C) on the canonical side
    bool relations = true;
    for (const char *zero : {"t2*t1 + t1*t2", "t3*t1 + t1*t3", "t3*t2 + t2*t3", "(t1*t2)*t3 + t1*(t2*t3)"})
        relations = relations && normalize_expr(parse(zero), cfg).is_zero();
    // labels go bijectively onto the basis
    bool bijective = true;
    for (Label s = 0; s < 8; ++s) {
        CanonicalElement c(3, RingMode::poly);
        c.add(s, LaurentPoly::constant(3, 1));
        bijective = bijective && specialize_octonion(c, mus) == E::basis(spec, s);
    }
    std::size_t hom = 0;
    for (std::size_t i = 0; i < samples; ++i) {
        Sampler rng(seed, i);
        auto x = rng.canonical(cfg), y = rng.canonical(cfg);
        if (specialize_octonion(canonical_mul(x, y), mus) == specialize_octonion(x, mus) * specialize_octonion(y, mus))
            ++hom;
    }
    auto alt = check_identity("alternative-left", spec, samples, seed);
    auto altr = check_identity("alternative-right", spec, samples, seed);
    auto a = associator(E::generator(spec, 1), E::generator(spec, 2), E::generator(spec, 3));
    const bool nonassoc = a == Rational(2) * E::basis(spec, 7);
    ok = gens.relations_hold && gens.squares_central && relations && bijective && hom == samples && alt.passed &&
         altr.passed && nonassoc;
    return {{"algebra", "octonion"},
            {"passed", ok},
            {"generators", to_json(gens)},
            {"canonical_relations_hold", relations},
            {"basis_bijection", bijective},
            {"homomorphism_samples", samples},
            {"homomorphism_passed", hom},
            {"alternative_left", to_json(alt)},
            {"alternative_right", to_json(altr)},
            {"associator_t1_t2_t3", to_string(a)},
            {"nonassociative", nonassoc}};
}

inline json quaternion_presentation(const std::vector<Rational> &mus, std::uint64_t seed, std::size_t samples,
                                    bool &ok) {
    auto spec = make_spec<Rational>(BaseRing::rationals(), mus);
    using E = CDElement<Rational>;
    const AlgebraConfig cfg{RingMode::poly, 2, AlgebraKind::quaternion};
    const bool anticommute = normalize_expr(parse("t2*t1 + t1*t2", {2}), cfg).is_zero();
    const bool squares = center_membership(normalize_word(parse_word("t1*t1", {2}), cfg)) &&
                         center_membership(normalize_word(parse_word("t2*t2", {2}), cfg));
    bool assoc = true, commutative = true;
    for (std::size_t s = 0; s < 4; ++s)
        for (std::size_t t = 0; t < 4; ++t) {
            auto x = E::basis(spec, s), y = E::basis(spec, t);
            commutative = commutative && x * y == y * x;
            for (std::size_t u = 0; u < 4; ++u)
                assoc = assoc && associator(x, y, E::basis(spec, u)).is_zero();
        }
    std::size_t hom = 0;
    for (std::size_t i = 0; i < samples; ++i) {
        Sampler rng(seed, i);
        auto x = rng.canonical(cfg), y = rng.canonical(cfg);
        if (specialize(canonical_mul(x, y), mus) == specialize(x, mus) * specialize(y, mus))
            ++hom;
    }
    ok = anticommute && squares && assoc && !commutative && hom == samples;
    return {{"algebra", "quaternion"},
            {"passed", ok},
            {"dimension", spec->dim()},
            {"anticommute", anticommute},
            {"squares_central", squares},
            {"associative", assoc},
            {"commutative", commutative},
            {"homomorphism_samples", samples},
            {"homomorphism_passed", hom},
            {"table", table_json(cd_basis_table(spec))}};
}

inline int cmd_presentation(const Context &ctx, const std::string &kind, const std::string &mus_text,
                            std::size_t samples) {
    const bool oct = kind == "octonion";
    if (!oct && kind != "quaternion")
        throw usage_error("presentation takes 'octonion' or 'quaternion'");
    const std::size_t core = oct ? 3 : 2;
    std::vector<Rational> mus = mus_text.empty() ? std::vector<Rational>(core, Rational(-1)) : parse_mus(mus_text);
    if (mus.size() != core)
        throw usage_error("--mus needs exactly " + std::to_string(core) + " values");
    bool ok = false;
    const auto seed = resolve_seed(ctx.cfg);
    ctx.emit(oct ? octonion_presentation(mus, seed, samples, ok) : quaternion_presentation(mus, seed, samples, ok));
    return ok ? 0 : 1;
}

inline int cmd_demo(const Context &ctx, const std::string &which) {
    const auto seed = resolve_seed(ctx.cfg);
    if (which == "dorofeev") {
        auto a = dorofeev_suite({1, 1, 1}, 100, seed);
        auto b = dorofeev_suite({-1, -1, -1}, 100, seed);
        ctx.emit({{"passed", a.passed() && b.passed()}, {"suites", {to_json(a), to_json(b)}}});
        return a.passed() && b.passed() ? 0 : 1;
    }
    if (which == "example43") {
        auto r = example43_report();
        ctx.emit(to_json(r));
        return r.passed() ? 0 : 1;
    }
    if (which == "closure") {
        auto r = central_closure_demo();
        ctx.emit(to_json(r));
        return r.passed() ? 0 : 1;
    }
    if (which == "sedenion") {
        auto r = sedenion_demo(seed);
        ctx.emit(to_json(r));
        return r.passed() ? 0 : 1;
    }
    throw usage_error("unknown demo '" + which + "'");
}

} // namespace detail

inline int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"Cayley polynomials, octonion tori and Cayley-Dickson towers", "cayley"};
    app.require_subcommand(1);
    app.fallthrough();

    CliConfig cfg;
    std::uint64_t seed = 0;
    app.add_option("--mode", cfg.mode, "poly or torus")->check(CLI::IsMember({"poly", "torus"}));
    app.add_option("--nvars", cfg.nvars, "number of generators t1..tn")->check(CLI::Range(2, 64));
    app.add_option("--assoc", cfg.assoc, "strict or left grouping of a*b*c")->check(CLI::IsMember({"strict", "left"}));
    app.add_option("--output", cfg.output, "text or json")->check(CLI::IsMember({"text", "json"}));
    auto *seed_opt = app.add_option("--seed", seed, "random seed (fallback: CAYLEY_SEED)");

    std::string a, b, name, kind, which, mus;
    int table_k = 0, check_k = 3;
    std::size_t check_samples = 200, presentation_samples = 100;

    auto *normalize = app.add_subcommand("normalize", "canonical form of an expression");
    normalize->add_option("expr", a)->required();
    auto *trace = app.add_subcommand("trace", "rewrite steps from a word to its canonical form");
    trace->add_option("expr", a)->required();
    auto *mul = app.add_subcommand("mul", "normalized product of two expressions");
    mul->add_option("left", a)->required();
    mul->add_option("right", b)->required();
    auto *table = app.add_subcommand("table", "basis multiplication table of (Q, mu_1, ..., mu_k)");
    table->add_option("--mus", mus, "comma-separated structure constants")->required();
    table->add_option("--k", table_k, "tower height (default: number of --mus)");
    auto *check = app.add_subcommand("check", "test a named identity in a tower over Q");
    check->add_option("identity", name)->required();
    check->add_option("--k", check_k, "tower height")->capture_default_str();
    check->add_option("--samples", check_samples, "random samples")->capture_default_str();
    check->add_option("--mus", mus, "structure constants (default: all -1)");
    auto *presentation = app.add_subcommand("presentation", "verify a presentation against its model");
    presentation->add_option("kind", kind, "octonion or quaternion")->required();
    presentation->add_option("--mus", mus, "structure constants (default: all -1)");
    presentation->add_option("--samples", presentation_samples, "random pairs for the homomorphism check")->capture_default_str();
    auto *demo = app.add_subcommand("demo", "worked examples: dorofeev, example43, closure, sedenion");
    demo->add_option("which", which)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }
    if (*seed_opt)
        cfg.seed = seed;

    detail::Context ctx{cfg, out, err};
    try {
        if (*normalize)
            return detail::cmd_normalize(ctx, a);
        if (*trace)
            return detail::cmd_trace(ctx, a);
        if (*mul)
            return detail::cmd_mul(ctx, a, b);
        if (*table)
            return detail::cmd_table(ctx, mus, table_k);
        if (*check)
            return detail::cmd_check(ctx, name, check_k, check_samples, mus);
        if (*presentation)
            return detail::cmd_presentation(ctx, kind, mus, presentation_samples);
        if (*demo)
            return detail::cmd_demo(ctx, which);
    } catch (const parse_error &e) {
        err << "error: " << e.what() << " at position " << e.position() << "\n";
        return 2;
    } catch (const usage_error &e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

} // namespace cayley::cli
