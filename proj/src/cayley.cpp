#include "quandle/cayley.hpp"

#include <stdexcept>
#include <string>

namespace quandle {

int apply_word(const CayleyTable& t, int v, const Word& w) {
    if (v < 0 || v >= t.size()) {
        throw std::out_of_range("apply_word: element " + std::to_string(v) + " out of range");
    }
    for (int g : w.letters) {
        if (g < 0 || g >= t.num_generators) {
            throw std::out_of_range("apply_word: generator " + std::to_string(g) +
                                    " out of range");
        }
        v = t.act(v, g);
    }
    return v;
}

int quandle_op(const CayleyTable& t, int x, int y) {
    if (x < 0 || x >= t.size() || y < 0 || y >= t.size()) {
        throw std::out_of_range("quandle_op: element out of range");
    }
    const CayleyTable::Rep& r = t.reps[static_cast<size_t>(y)];
    // x ^ (reversed(v) b v)
    for (auto it = r.word.letters.rbegin(); it != r.word.letters.rend(); ++it) {
        x = t.act(x, *it);
    }
    x = t.act(x, r.base);
    for (int g : r.word.letters) {
        x = t.act(x, g);
    }
    return x;
}

QuandleOpTable full_op_table(const CayleyTable& t) {
    const int n = t.size();
    QuandleOpTable out;
    out.size = n;
    out.table.resize(static_cast<size_t>(n) * static_cast<size_t>(n));
    for (int y = 0; y < n; ++y) {
        // The conjugation column of y is the same for every x; walk it once.
        for (int x = 0; x < n; ++x) {
            out.table[static_cast<size_t>(x) * static_cast<size_t>(n) + static_cast<size_t>(y)] =
                quandle_op(t, x, y);
        }
    }
    return out;
}

} // namespace quandle
