#pragma once

#include "quandle/word.hpp"

#include <vector>

namespace quandle {

/// An enumerated involutory quandle: the Cayley graph as a table.
/// action(v, j) is the result of acting on element v by generator j;
/// every generator column is an involution and the generator's own seed
/// is a fixed point of its column.
struct CayleyTable {
    /// Representative expression for an element: seed[base] ^ word.
    struct Rep {
        int base = 0;
        Word word;

        friend bool operator==(const Rep&, const Rep&) = default;
    };

    int num_generators = 0;
    std::vector<int> action; // size() * num_generators, row-major
    std::vector<int> seed;   // element index of each generator
    std::vector<Rep> reps;   // one per element, in element order

    int size() const { return static_cast<int>(reps.size()); }

    int act(int v, int j) const {
        return action[static_cast<size_t>(v) * static_cast<size_t>(num_generators) +
                      static_cast<size_t>(j)];
    }

    friend bool operator==(const CayleyTable&, const CayleyTable&) = default;
};

/// Materialized binary operation table: table[x][y] = x > y.
struct QuandleOpTable {
    int size = 0;
    std::vector<int> table; // size * size, row-major

    int op(int x, int y) const {
        return table[static_cast<size_t>(x) * static_cast<size_t>(size) + static_cast<size_t>(y)];
    }
};

/// Folds the action table over w starting from v.
/// Throws std::out_of_range for bad element or generator indices.
int apply_word(const CayleyTable& t, int v, const Word& w);

/// x > y, computed through y's representative: if y = b^v then
/// x > y = x ^ (reversed(v) b v).
int quandle_op(const CayleyTable& t, int x, int y);

/// Materializes quandle_op for all pairs.
QuandleOpTable full_op_table(const CayleyTable& t);

} // namespace quandle
