#pragma once

// Enumeration of fully parenthesized words, shared by the normalizer tests
// and the acceptance run.

#include <cayley/expr.hpp>

#include <map>
#include <vector>

namespace cayley::testing {

/// Every word with exactly `len` leaves over t1..t_gens (all Catalan shapes
/// times all generator assignments).
inline const std::vector<Word> &words_of_length(int len, int gens = 3) {
    static std::map<std::pair<int, int>, std::vector<Word>> cache;
    auto key = std::make_pair(len, gens);
    if (auto it = cache.find(key); it != cache.end())
        return it->second;
    std::vector<Word> out;
    if (len == 1) {
        for (int i = 1; i <= gens; ++i)
            out.push_back(Word::gen(i));
    } else {
        for (int l = 1; l < len; ++l) {
            const auto &left = words_of_length(l, gens);
            const auto &right = words_of_length(len - l, gens);
            for (const auto &a : left)
                for (const auto &b : right)
                    out.push_back(a * b);
        }
    }
    return cache.emplace(key, std::move(out)).first->second;
}

inline std::vector<Word> words_upto(int max_len, int gens = 3) {
    std::vector<Word> out;
    for (int l = 1; l <= max_len; ++l) {
        const auto &w = words_of_length(l, gens);
        out.insert(out.end(), w.begin(), w.end());
    }
    return out;
}

} // namespace cayley::testing
