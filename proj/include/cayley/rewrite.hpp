#pragma once

// Rewriting of words over t1, t2, t3 by identities that hold in the Cayley
// polynomial ring:
//
//   C-anticommute(i,j)  t_j t_i = -t_i t_j
//   C-antiassoc, a1..a5 (t_i t_j) t_k = -t_i (t_j t_k)       (i,j,k distinct)
//   ac1..ac3            (t_i t_j) t_k = -t_k (t_i t_j)       (named by k)
//   square-central(i)   t_i t_i = z_i, a central scalar
//   Artin-regroup       (XY)Z = X(YZ) when X, Y, Z lie in a 2-generated subalgebra
//   Moufang-middle      (AB)(CA) = (A(BC))A
//
// Every rule is used in both directions. A state is sign * z^e * word, with
// the word in prefix encoding: '1'..'3' for generators, '*' for a product,
// "" for the identity.
//
// The products of canonical basis monomials are derived once by
// breadth-first search over these rules; the resulting table drives
// normalization, and the derivations double as the human-readable trace.

#include <algorithm>
#include <array>
#include <cstddef>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cayley::rewrite {

struct State {
    int sign = 1;
    std::array<int, 3> z{0, 0, 0};
    std::string tree;

    friend auto operator<=>(const State &, const State &) = default;
};

struct Move {
    std::string rule;
    State next;
};

inline std::size_t subtree_end(const std::string &s, std::size_t start) {
    int need = 1;
    std::size_t i = start;
    while (need > 0) {
        if (i >= s.size())
            throw std::logic_error("malformed word encoding");
        need += (s[i] == '*') ? 1 : -1;
        ++i;
    }
    return i;
}

inline bool is_leaf(const std::string &s) { return s.size() == 1 && s[0] != '*'; }

inline std::pair<std::string, std::string> split(const std::string &s) {
    std::size_t mid = subtree_end(s, 1);
    return {s.substr(1, mid - 1), s.substr(mid)};
}

/// Product with the identity eliminated.
inline std::string mul(const std::string &a, const std::string &b) {
    if (a.empty())
        return b;
    if (b.empty())
        return a;
    return "*" + a + b;
}

inline std::string leaf(int i) { return std::string(1, static_cast<char>('0' + i)); }

/// Canonical basis word for a label: "", "1", "*12", "**123", ...
inline std::string canonical_tree(unsigned label) {
    std::string t;
    for (int i = 0; i < 3; ++i)
        if (label & (1u << i))
            t = mul(t, leaf(i + 1));
    return t;
}

inline bool is_canonical(const std::string &t) {
    for (unsigned s = 0; s < 8; ++s)
        if (canonical_tree(s) == t)
            return true;
    return false;
}

inline unsigned label_of_canonical(const std::string &t) {
    for (unsigned s = 0; s < 8; ++s)
        if (canonical_tree(s) == t)
            return s;
    throw std::logic_error("not a canonical basis word");
}

/// Infix rendering, e.g. "(t1*t2)*t3".
inline std::string infix(const std::string &t) {
    if (t.empty())
        return "1";
    if (is_leaf(t))
        return "t" + t;
    auto [l, r] = split(t);
    auto side = [](const std::string &c) { return is_leaf(c) ? infix(c) : "(" + infix(c) + ")"; };
    return side(l) + "*" + side(r);
}

inline std::string to_string(const State &s) {
    std::string scalar;
    for (int i = 0; i < 3; ++i) {
        if (s.z[i] == 0)
            continue;
        if (!scalar.empty())
            scalar += "*";
        scalar += "z" + std::to_string(i + 1);
        if (s.z[i] != 1)
            scalar += "^" + std::to_string(s.z[i]);
    }
    std::string body = s.tree.empty() ? "" : infix(s.tree);
    std::string out = s.sign < 0 ? "-" : "";
    if (scalar.empty())
        return out + (body.empty() ? "1" : body);
    return out + scalar + (body.empty() ? "" : "*" + body);
}

namespace detail {

struct LocalMove {
    std::string rule;
    int sign;
    std::array<int, 3> z;
    std::string tree;
};

inline bool distinct3(char a, char b, char c) { return a != b && b != c && a != c; }

// Name of (t_i t_j) t_k = -t_i (t_j t_k) for the permutation (i, j, k).
inline std::string antiassoc_name(char i, char j, char k) {
    std::string p{i, j, k};
    if (p == "123")
        return "C-antiassoc";
    if (p == "213")
        return "a1";
    if (p == "132")
        return "a2";
    if (p == "312")
        return "a3";
    if (p == "321")
        return "a4";
    return "a5"; // "231"
}

inline bool leaf_pair(const std::string &s) { return s.size() == 3 && s[0] == '*' && s[1] != '*' && s[2] != '*'; }

inline void collect_subtrees(const std::string &t, std::set<std::string> &out) {
    out.insert(t);
    if (!is_leaf(t)) {
        auto [l, r] = split(t);
        collect_subtrees(l, out);
        collect_subtrees(r, out);
    }
}

inline bool word_in(const std::string &t, const std::string &a, const std::string &b) {
    if (t == a || t == b)
        return true;
    if (is_leaf(t))
        return false;
    auto [l, r] = split(t);
    return word_in(l, a, b) && word_in(r, a, b);
}

// X, Y, Z all lie in the subalgebra generated by some two elements.
inline bool two_generated(const std::string &x, const std::string &y, const std::string &z) {
    std::set<char> gens;
    for (const std::string *w : {&x, &y, &z})
        for (char c : *w)
            if (c != '*')
                gens.insert(c);
    if (gens.size() <= 2)
        return true;
    std::set<std::string> cand;
    collect_subtrees(x, cand);
    collect_subtrees(y, cand);
    collect_subtrees(z, cand);
    std::vector<std::string> c(cand.begin(), cand.end());
    for (std::size_t i = 0; i < c.size(); ++i)
        for (std::size_t j = i; j < c.size(); ++j)
            if (word_in(x, c[i], c[j]) && word_in(y, c[i], c[j]) && word_in(z, c[i], c[j]))
                return true;
    return false;
}

inline void root_moves(const std::string &s, std::vector<LocalMove> &out) {
    auto [l, r] = split(s);
    const std::array<int, 3> none{0, 0, 0};

    if (is_leaf(l) && is_leaf(r)) {
        if (l == r) {
            std::array<int, 3> z{0, 0, 0};
            z[l[0] - '1'] = 1;
            out.push_back({"square-central(" + l + ")", 1, z, ""});
        } else {
            char lo = std::min(l[0], r[0]), hi = std::max(l[0], r[0]);
            out.push_back({std::string("C-anticommute(") + lo + "," + hi + ")", -1, none, "*" + r + l});
        }
    }
    // (t_i t_j) t_k -> -t_i (t_j t_k)  and  -> -t_k (t_i t_j)
    if (leaf_pair(l) && is_leaf(r) && distinct3(l[1], l[2], r[0])) {
        out.push_back({antiassoc_name(l[1], l[2], r[0]), -1, none, "*" + std::string(1, l[1]) + "*" + l[2] + r});
        out.push_back({std::string("ac") + r[0], -1, none, "*" + r + l});
    }
    if (is_leaf(l) && leaf_pair(r) && distinct3(l[0], r[1], r[2])) {
        // t_i (t_j t_k) -> -(t_i t_j) t_k
        out.push_back({antiassoc_name(l[0], r[1], r[2]), -1, none, "**" + l + r[1] + r[2]});
        // t_k (t_i t_j) -> -(t_i t_j) t_k
        out.push_back({std::string("ac") + l[0], -1, none, "*" + r + l});
    }
    // Artin: reassociate inside a 2-generated subalgebra.
    if (!is_leaf(l)) {
        auto [x, y] = split(l);
        if (two_generated(x, y, r))
            out.push_back({"Artin-regroup", 1, none, mul(x, mul(y, r))});
    }
    if (!is_leaf(r)) {
        auto [y, z] = split(r);
        if (two_generated(l, y, z))
            out.push_back({"Artin-regroup", 1, none, mul(mul(l, y), z)});
    }
    // (AB)(CA) -> (A(BC))A
    if (!is_leaf(l) && !is_leaf(r)) {
        auto [a, b] = split(l);
        auto [c, a2] = split(r);
        if (a == a2)
            out.push_back({"Moufang-middle", 1, none, mul(mul(a, mul(b, c)), a)});
    }
    // (A(BC))A -> (AB)(CA)
    if (!is_leaf(l)) {
        auto [a, bc] = split(l);
        if (a == r && !is_leaf(bc)) {
            auto [b, c] = split(bc);
            out.push_back({"Moufang-middle", 1, none, mul(mul(a, b), mul(c, a))});
        }
    }
}

inline std::vector<LocalMove> moves(const std::string &s) {
    std::vector<LocalMove> out;
    if (s.empty() || is_leaf(s))
        return out;
    root_moves(s, out);
    auto [l, r] = split(s);
    for (auto &m : moves(l))
        out.push_back({m.rule, m.sign, m.z, mul(m.tree, r)});
    for (auto &m : moves(r))
        out.push_back({m.rule, m.sign, m.z, mul(l, m.tree)});
    return out;
}

} // namespace detail

/// All single-rule rewrites of the state, at every position.
inline std::vector<Move> successors(const State &s) {
    std::vector<Move> out;
    for (auto &m : detail::moves(s.tree)) {
        State n{s.sign * m.sign, s.z, std::move(m.tree)};
        for (int i = 0; i < 3; ++i)
            n.z[i] += m.z[i];
        out.push_back({std::move(m.rule), std::move(n)});
    }
    return out;
}

/// Whether `after` is obtained from `before` by one application of `rule`.
inline bool is_valid_step(const std::string &rule, const State &before, const State &after) {
    for (const auto &m : successors(before))
        if (m.rule == rule && m.next == after)
            return true;
    return false;
}

/// Shortest rule sequence taking `start` to a canonical basis word.
inline std::vector<Move> derive(const State &start, std::size_t max_states = 2'000'000) {
    if (is_canonical(start.tree))
        return {};
    std::map<State, std::pair<State, std::string>> parent;
    std::deque<State> queue{start};
    parent.emplace(start, std::make_pair(start, std::string()));
    while (!queue.empty()) {
        State cur = std::move(queue.front());
        queue.pop_front();
        for (auto &m : successors(cur)) {
            if (parent.count(m.next))
                continue;
            parent.emplace(m.next, std::make_pair(cur, m.rule));
            if (is_canonical(m.next.tree)) {
                std::vector<Move> path;
                State at = m.next;
                while (!(at == start)) {
                    const auto &[prev, rule] = parent.at(at);
                    path.push_back({rule, at});
                    at = prev;
                }
                std::reverse(path.begin(), path.end());
                return path;
            }
            if (parent.size() > max_states)
                throw std::runtime_error("rewrite search exceeded its state budget");
            queue.push_back(m.next);
        }
    }
    throw std::runtime_error("no derivation to a canonical word from " + to_string(start));
}

struct TableEntry {
    int sign = 1;
    std::array<int, 3> z{0, 0, 0};
    unsigned label = 0;
    std::vector<Move> derivation; // from (canon(S))(canon(T)) with sign 1
};

using ProductTable = std::array<std::array<TableEntry, 8>, 8>;

inline ProductTable derive_table() {
    ProductTable table;
    for (unsigned s = 0; s < 8; ++s) {
        for (unsigned t = 0; t < 8; ++t) {
            State start{1, {0, 0, 0}, mul(canonical_tree(s), canonical_tree(t))};
            TableEntry e;
            e.derivation = derive(start);
            const State &end = e.derivation.empty() ? start : e.derivation.back().next;
            e.sign = end.sign;
            e.z = end.z;
            e.label = label_of_canonical(end.tree);
            table[s][t] = std::move(e);
        }
    }
    return table;
}

/// Derived once per process; immutable afterwards.
inline const ProductTable &product_table() {
    static const ProductTable table = derive_table();
    return table;
}

} // namespace cayley::rewrite
