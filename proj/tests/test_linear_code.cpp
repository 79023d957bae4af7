#include <doctest.h>

#include <map>

#include "test_helpers.hpp"

using namespace ccpair;
using namespace ccpair::testing;

TEST_CASE("dot product over GF(2)") {
    Field f2(2, 1);
    CHECK(make_word(f2, {1, 1, 0}).dot(make_word(f2, {1, 1, 1})).code() == 0);
    CHECK(make_word(f2, {1, 0, 1}).dot(make_word(f2, {1, 1, 1})).code() == 0);
    CHECK(make_word(f2, {1, 1, 1}).dot(Word(f2, 3)).code() == 0);
    CHECK_THROWS_AS(make_word(f2, {1}).dot(make_word(f2, {1, 0})), Error);
}

TEST_CASE("rref canonicalization and rank") {
    Field f2(2, 1);
    Matrix id = make_matrix(f2, {{1, 0}, {0, 1}});
    Matrix id2 = id;
    auto rr = id2.rref();
    CHECK(rr.rank == 2);
    CHECK(id2 == id);

    Matrix dep = make_matrix(f2, {{1, 1, 0}, {0, 1, 1}, {1, 0, 1}});
    CHECK(dep.rref().rank == 2);

    Matrix zero(f2, 2, 3);
    CHECK(zero.rref().rank == 0);

    // Canonical: any spanning set of the same row space reduces identically.
    Field f3(3, 1);
    Matrix a = make_matrix(f3, {{1, 2, 0}, {0, 1, 1}});
    Matrix b = make_matrix(f3, {{2, 1, 0}, {1, 0, 1}}); // {2*r1, r1+r2}
    CHECK(LinearCode(f3, 3, a) == LinearCode(f3, 3, b));
}

TEST_CASE("dual: examples and involution") {
    Field f2(2, 1);
    CHECK(LinearCode::full_space(f2, 4).dual() == LinearCode::zero_code(f2, 4));
    CHECK(LinearCode::zero_code(f2, 4).dual() == LinearCode::full_space(f2, 4));

    LinearCode h = hamming74();
    LinearCode hd = h.dual();
    CHECK(hd.k() == 3);
    for (size_t r = 0; r < hd.k(); ++r) CHECK(h.contains(hd.generator().row(r)));

    CounterRng rng(7);
    for (auto q : {2u, 3u, 4u}) {
        Field f = q == 4 ? Field(2, 2) : Field(q, 1);
        for (int t = 0; t < 20; ++t) {
            size_t n = 1 + rng.uniform_below(9);
            LinearCode c = random_code(f, n, 1 + rng.uniform_below(static_cast<uint32_t>(n)), rng);
            CHECK(c.k() + c.dual().k() == n);
            CHECK(c.dual().dual() == c);
        }
    }
}

TEST_CASE("is_subcode: examples and dual reversal") {
    Field f2(2, 1);
    LinearCode h = hamming74();
    CHECK(is_subcode(LinearCode::zero_code(f2, 7), h));
    CHECK(is_subcode(h.dual(), h));
    CHECK_FALSE(is_subcode(LinearCode::full_space(f2, 3), repetition_code(3)));

    CounterRng rng(11);
    for (int t = 0; t < 30; ++t) {
        size_t n = 1 + rng.uniform_below(7);
        LinearCode a = random_code(f2, n, 1 + rng.uniform_below(static_cast<uint32_t>(n)), rng);
        LinearCode b = random_code(f2, n, 1 + rng.uniform_below(static_cast<uint32_t>(n)), rng);
        CHECK(is_subcode(a, b) == is_subcode(b.dual(), a.dual()));
    }
}

TEST_CASE("syndrome table: repetition, full space, Hamming") {
    Field f2(2, 1);

    SyndromeTable rep(repetition_code(3));
    CHECK(rep.size() == 4);
    std::vector<Word> expected = {make_word(f2, {0, 0, 0}), make_word(f2, {1, 0, 0}),
                                  make_word(f2, {0, 1, 0}), make_word(f2, {0, 0, 1})};
    for (const Word& e : expected) CHECK(rep.leader_for(e) == e);

    SyndromeTable full(LinearCode::full_space(f2, 3));
    CHECK(full.size() == 1);
    CHECK(full.leaders()[0].is_zero());

    SyndromeTable ham(hamming74());
    CHECK(ham.size() == 8);
    size_t weight_one = 0;
    for (const Word& l : ham.leaders()) {
        CHECK(l.weight() <= 1);
        if (l.weight() == 1) ++weight_one;
    }
    CHECK(weight_one == 7);
}

TEST_CASE("leaders are minimum weight with lex tie-break, exhaustively") {
    CounterRng rng(13);
    for (auto q : {2u, 3u}) {
        Field f(q, 1);
        for (int t = 0; t < 10; ++t) {
            size_t n = 1 + rng.uniform_below(4);
            LinearCode c = random_code(f, n, 1 + rng.uniform_below(static_cast<uint32_t>(n)), rng);
            SyndromeTable table(c);
            // Every vector maps to a leader in its own coset...
            std::map<uint64_t, std::vector<Word>> cosets;
            enumerate_all(f, n, [&](const Word& w) {
                cosets[table.syndrome(w).index()].push_back(w);
            });
            CHECK(cosets.size() == table.size());
            for (auto& [synd, members] : cosets) {
                const Word& leader = table.leader_by_index(synd);
                Word best = members[0];
                for (const Word& m : members)
                    if (Word::weight_lex_less(m, best)) best = m;
                CHECK(leader == best);
                for (const Word& m : members) CHECK(leader.weight() <= m.weight());
            }
        }
    }
}

TEST_CASE("decode_coset: examples") {
    Field f2(2, 1);
    LinearCode rep = repetition_code(3);
    SyndromeTable table(rep);

    Word x = make_word(f2, {1, 0, 0});
    Word transmitted = x + make_word(f2, {1, 1, 1});
    CHECK(decode_coset(rep, x, transmitted, table) == transmitted); // no error
    Word received = transmitted + make_word(f2, {0, 0, 1});
    CHECK(decode_coset(rep, x, received, table) == make_word(f2, {0, 1, 1}));

    LinearCode h = hamming74();
    SyndromeTable ht(h);
    Word zero(f2, 7);
    for (size_t i = 0; i < 7; ++i) {
        Word e(f2, 7);
        e.set(i, 1);
        Word c = h.codeword(9); // arbitrary codeword
        CHECK(decode_coset(h, zero, c + e, ht) == c);
    }
}

TEST_CASE("decode_coset recovers every codeword against every leader") {
    Field f2(2, 1);
    LinearCode h = hamming74();
    SyndromeTable table(h);
    std::vector<Word> shifts = {Word(f2, 7), make_word(f2, {1, 1, 0, 0, 0, 0, 0})};
    for (const Word& x : shifts) {
        for (uint64_t m = 0; m < 16; ++m) {
            Word word = x + h.codeword(m);
            for (const Word& leader : table.leaders())
                CHECK(decode_coset(h, x, word + leader, table) == word);
        }
    }
}

TEST_CASE("syndrome table size cap fails fast") {
    CHECK_THROWS_AS(SyndromeTable(repetition_code(25)), Error); // 2^24 cosets
}

TEST_CASE("min distance at desk scale") {
    CHECK(hamming74().min_distance() == 3);
    CHECK(repetition_code(5).min_distance() == 5);
    CHECK(even_weight_code(6).min_distance() == 2);
    CHECK_FALSE(LinearCode::zero_code(Field(2, 1), 4).min_distance().has_value());
}
