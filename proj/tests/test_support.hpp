#pragma once

#include "quandle/cayley.hpp"
#include "quandle/parser.hpp"
#include "quandle/winker.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>
#include <vector>

namespace quandle::testing {

/// Dihedral quandle on Z/n: i > j = 2j - i mod n. Independent reference
/// model for small enumerations.
inline QuandleOpTable dihedral_op_table(int n) {
    QuandleOpTable q;
    q.size = n;
    q.table.resize(static_cast<size_t>(n) * static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            q.table[static_cast<size_t>(i) * static_cast<size_t>(n) + static_cast<size_t>(j)] =
                ((2 * j - i) % n + n) % n;
        }
    }
    return q;
}

/// Brute-force isomorphism of op tables by checking every bijection.
/// Only usable for very small sizes; this is the oracle the search-based
/// implementation is tested against.
inline bool op_tables_isomorphic_bruteforce(const QuandleOpTable& s, const QuandleOpTable& t) {
    if (s.size != t.size) return false;
    std::vector<int> perm(static_cast<size_t>(s.size));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (int x = 0; x < s.size && ok; ++x) {
            for (int y = 0; y < s.size && ok; ++y) {
                ok = perm[static_cast<size_t>(s.op(x, y))] ==
                     t.op(perm[static_cast<size_t>(x)], perm[static_cast<size_t>(y)]);
            }
        }
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

inline CayleyTable enumerate_text(const std::string& text, EnumerationBudget budget = {}) {
    const EnumerationResult res = enumerate(parse_presentation(text), budget);
    if (!res.finite()) {
        throw std::runtime_error("enumeration unexpectedly hit the budget");
    }
    return *res.table;
}

/// Deterministic generator of random normalized Words.
inline Word random_word(std::mt19937& rng, int num_generators, int max_len) {
    std::uniform_int_distribution<int> len_dist(0, max_len);
    std::uniform_int_distribution<int> gen_dist(0, num_generators - 1);
    Word w;
    const int len = len_dist(rng);
    for (int i = 0; i < len; ++i) {
        w.letters.push_back(gen_dist(rng));
    }
    return w;
}

} // namespace quandle::testing
