#pragma once

#include <vector>

#include "ccpair/catalog.hpp"
#include "ccpair/linear_code.hpp"
#include "ccpair/philox.hpp"

namespace ccpair::testing {

inline Word make_word(const Field& f, const std::vector<int>& codes) {
    Word w(f, codes.size());
    for (size_t i = 0; i < codes.size(); ++i) w.set(i, static_cast<uint32_t>(codes[i]));
    return w;
}

inline Matrix make_matrix(const Field& f, const std::vector<std::vector<int>>& rows) {
    Matrix m(f, rows.size(), rows.empty() ? 0 : rows[0].size());
    for (size_t r = 0; r < rows.size(); ++r)
        for (size_t c = 0; c < rows[r].size(); ++c) m.set(r, c, static_cast<uint32_t>(rows[r][c]));
    return m;
}

inline LinearCode random_code(const Field& f, size_t n, size_t rows, CounterRng& rng) {
    Matrix m(f, rows, n);
    for (size_t r = 0; r < rows; ++r)
        for (size_t c = 0; c < n; ++c) m.set(r, c, rng.uniform_below(f.order()));
    return LinearCode(f, n, m);
}

// Random valid conjugate pair: pick C1 at random, take a random subset of its
// rows as dual(C2), and set C2 = dual of that.
inline ConjugatePair random_conjugate_pair(const Field& f, size_t n, CounterRng& rng) {
    for (;;) {
        LinearCode c1 = random_code(f, n, 1 + rng.uniform_below(static_cast<uint32_t>(n)), rng);
        if (c1.k() == 0) continue;
        size_t sub_rows = rng.uniform_below(static_cast<uint32_t>(c1.k()) + 1);
        Matrix sub(f, sub_rows, n);
        for (size_t r = 0; r < sub_rows; ++r) {
            // random combination of C1's generators
            Word acc(f, n);
            for (size_t g = 0; g < c1.k(); ++g)
                acc = acc + c1.generator().row(g).scaled(rng.uniform_below(f.order()));
            sub.set_row(r, acc);
        }
        LinearCode c2_dual(f, n, sub);
        LinearCode c2 = c2_dual.dual();
        return ConjugatePair(c1, c2);
    }
}

} // namespace ccpair::testing
