#include "ccpair/catalog.hpp"

namespace ccpair {

namespace {
Matrix bit_matrix(const Field& f, const std::vector<std::vector<int>>& rows) {
    Matrix m(f, rows.size(), rows.empty() ? 0 : rows[0].size());
    for (size_t r = 0; r < rows.size(); ++r)
        for (size_t c = 0; c < rows[r].size(); ++c) m.set(r, c, static_cast<uint32_t>(rows[r][c]));
    return m;
}
} // namespace

LinearCode hamming74() {
    Field f2(2, 1);
    return LinearCode(f2, 7,
                      bit_matrix(f2, {{1, 0, 0, 0, 0, 1, 1},
                                      {0, 1, 0, 0, 1, 0, 1},
                                      {0, 0, 1, 0, 1, 1, 0},
                                      {0, 0, 0, 1, 1, 1, 1}}));
}

LinearCode even_weight_code(size_t n) {
    Field f2(2, 1);
    Matrix m(f2, n - 1, n);
    for (size_t r = 0; r + 1 < n; ++r) {
        m.set(r, r, 1);
        m.set(r, n - 1, 1);
    }
    return LinearCode(f2, n, m);
}

LinearCode repetition_code(size_t n) {
    Field f2(2, 1);
    Matrix m(f2, 1, n);
    for (size_t c = 0; c < n; ++c) m.set(0, c, 1);
    return LinearCode(f2, n, m);
}

ConjugatePair steane_pair() {
    LinearCode h = hamming74();
    return ConjugatePair(h, h);
}

ConjugatePair four_two_pair() {
    LinearCode e = even_weight_code(4);
    return ConjugatePair(e, e);
}

ConjugatePair trivial_pair(size_t n) {
    Field f2(2, 1);
    LinearCode full = LinearCode::full_space(f2, n);
    return ConjugatePair(full, full);
}

ConjugatePair gf4_selfdual_pair() {
    Field f4(2, 2);
    Matrix m(f4, 1, 2);
    m.set(0, 0, 1);
    m.set(0, 1, 1);
    LinearCode c(f4, 2, m);
    return ConjugatePair(c, c);
}

std::vector<NamedPair> builtin_pairs() {
    return {
        {"steane", steane_pair()},
        {"four_two", four_two_pair()},
        {"trivial1", trivial_pair(1)},
        {"gf4_selfdual", gf4_selfdual_pair()},
    };
}

} // namespace ccpair
