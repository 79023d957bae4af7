#include <doctest.h>

#include <map>
#include <set>

#include "test_helpers.hpp"

using namespace ccpair;
using namespace ccpair::testing;

TEST_CASE("make_pair: accepted and rejected constructions") {
    Field f2(2, 1);

    ConjugatePair full = trivial_pair(3);
    CHECK(full.k() == 3);

    ConjugatePair steane = steane_pair();
    CHECK(steane.k() == 1);
    CHECK(steane.k1() == 4);
    CHECK(steane.k2() == 4);

    LinearCode rep = repetition_code(3);
    CHECK_THROWS_AS(ConjugatePair(rep, rep), Error); // dual is the even-weight code

    LinearCode h = hamming74();
    CHECK_THROWS_AS(ConjugatePair(h, repetition_code(4)), Error); // length mismatch
}

TEST_CASE("pair validity is symmetric in (C1, C2)") {
    Field f2(2, 1);
    CounterRng rng(17);
    for (int t = 0; t < 40; ++t) {
        size_t n = 1 + rng.uniform_below(6);
        LinearCode a = random_code(f2, n, 1 + rng.uniform_below(static_cast<uint32_t>(n)), rng);
        LinearCode b = random_code(f2, n, 1 + rng.uniform_below(static_cast<uint32_t>(n)), rng);
        bool forward = true, backward = true;
        try {
            ConjugatePair p(a, b);
        } catch (const Error&) {
            forward = false;
        }
        try {
            ConjugatePair p(b, a);
        } catch (const Error&) {
            backward = false;
        }
        CHECK(forward == backward);
    }
}

TEST_CASE("message representatives") {
    Field f2(2, 1);

    // k = 0: single representative, the zero word.
    ConjugatePair zero_msg(repetition_code(2), repetition_code(2));
    CHECK(zero_msg.k() == 0);
    CHECK(zero_msg.message_representatives().size() == 1);
    CHECK(zero_msg.message_representatives()[0].is_zero());

    // Steane: two representatives; the nonzero one lies in C1 but not dual(C2).
    ConjugatePair steane = steane_pair();
    auto reps = steane.message_representatives();
    REQUIRE(reps.size() == 2);
    CHECK(reps[0].is_zero());
    CHECK(steane.c1().contains(reps[1]));
    CHECK_FALSE(steane.c2_dual().contains(reps[1]));

    // Full-space pair over F_2^2: all four words.
    ConjugatePair full = trivial_pair(2);
    CHECK(full.message_representatives().size() == 4);

    // Pairwise differences never fall into dual(C2).
    for (const auto& named : builtin_pairs()) {
        auto rs = named.pair.message_representatives();
        for (size_t i = 0; i < rs.size(); ++i)
            for (size_t j = i + 1; j < rs.size(); ++j)
                CHECK_FALSE(named.pair.c2_dual().contains(rs[i] - rs[j]));
    }
}

TEST_CASE("representative count is q^k, exhaustively at small n") {
    Field f2(2, 1);
    CounterRng rng(19);
    for (int t = 0; t < 25; ++t) {
        size_t n = 1 + rng.uniform_below(7);
        ConjugatePair p = random_conjugate_pair(f2, n, rng);
        uint64_t expect = 1ull << p.k();
        CHECK(p.message_representatives().size() == expect);
    }
}

TEST_CASE("canonicalize_message maps cosets to their representative") {
    ConjugatePair steane = steane_pair();
    auto reps = steane.message_representatives();
    for (const Word& rep : reps) {
        for (uint64_t i = 0; i < 8; ++i) {
            Word member = rep + steane.c2_dual().codeword(i);
            CHECK(steane.canonicalize_message(member) == rep);
        }
    }
    Field f2(2, 1);
    Word outside(f2, 7);
    outside.set(0, 1); // weight-1 word is not in the Hamming code
    CHECK_THROWS_AS(steane.message_index(outside), Error);
}

TEST_CASE("self-orthogonality check") {
    Field f2(2, 1);
    CHECK(self_orthogonality_check(LinearCode::zero_code(f2, 5)));
    CHECK(self_orthogonality_check(hamming74().dual())); // the simplex code
    CHECK_FALSE(self_orthogonality_check(LinearCode::full_space(f2, 3)));

    // When C is self-orthogonal, (dual(C), dual(C)) is a valid pair.
    LinearCode simplex = hamming74().dual();
    REQUIRE(self_orthogonality_check(simplex));
    ConjugatePair p(simplex.dual(), simplex.dual());
    CHECK(p.k() == 1);
}

namespace {

// Brute-force decoding oracle for quotient codes: C/B with error set J is
// correctable iff no received word is reachable from two different message
// cosets.
bool quotient_correctable_oracle(const QuotientCode& q, const std::vector<Word>& j_set) {
    auto b_count = *q.b().codeword_count();
    std::map<uint64_t, std::set<size_t>> reachable; // received word -> message ids
    for (size_t msg = 0; msg < q.representatives().size(); ++msg) {
        for (uint64_t bi = 0; bi < b_count; ++bi) {
            Word sent = q.representatives()[msg] + q.b().codeword(bi);
            for (const Word& e : j_set) reachable[(sent + e).index()].insert(msg);
        }
    }
    for (const auto& [idx, msgs] : reachable)
        if (msgs.size() > 1) return false;
    return true;
}

std::vector<Word> weight_at_most_one(const Field& f, size_t n) {
    std::vector<Word> out;
    out.push_back(Word(f, n));
    for (size_t i = 0; i < n; ++i)
        for (uint32_t v = 1; v < f.order(); ++v) {
            Word w(f, n);
            w.set(i, v);
            out.push_back(w);
        }
    return out;
}

} // namespace

TEST_CASE("quotient correctability: examples") {
    Field f2(2, 1);

    LinearCode h = hamming74();
    QuotientCode steane_q(h, h.dual());
    CHECK(quotient_correctable(steane_q, {Word(f2, 7)}));
    CHECK(quotient_correctable(steane_q, weight_at_most_one(f2, 7)));

    QuotientCode plain(LinearCode::full_space(f2, 3), LinearCode::zero_code(f2, 3));
    CHECK_FALSE(quotient_correctable(plain, weight_at_most_one(f2, 3)));
}

TEST_CASE("quotient correctability agrees with the decoding oracle") {
    Field f2(2, 1);
    CounterRng rng(23);
    for (int t = 0; t < 30; ++t) {
        size_t n = 2 + rng.uniform_below(3); // n in 2..4
        LinearCode c = random_code(f2, n, 1 + rng.uniform_below(static_cast<uint32_t>(n)), rng);
        // random subcode B <= C
        size_t sub_rows = rng.uniform_below(static_cast<uint32_t>(c.k()) + 1);
        Matrix sub(f2, sub_rows, n);
        for (size_t r = 0; r < sub_rows; ++r) {
            Word acc(f2, n);
            for (size_t g = 0; g < c.k(); ++g)
                if (rng.uniform_below(2)) acc = acc + c.generator().row(g);
            sub.set_row(r, acc);
        }
        QuotientCode q(c, LinearCode(f2, n, sub));
        // error sets: weight <= 1, and a random handful of words
        std::vector<std::vector<Word>> j_sets = {weight_at_most_one(f2, n)};
        std::vector<Word> random_j;
        for (int i = 0; i < 3; ++i)
            random_j.push_back(Word::from_index(f2, n, rng.uniform_below(1u << n)));
        j_sets.push_back(random_j);
        for (const auto& j : j_sets)
            CHECK(quotient_correctable(q, j) == quotient_correctable_oracle(q, j));
    }
}

TEST_CASE("expansion to the prime field") {
    // Full spaces expand to full spaces.
    Field f4(2, 2);
    ConjugatePair full4(LinearCode::full_space(f4, 2), LinearCode::full_space(f4, 2));
    ConjugatePair expanded = expand_pair(full4);
    CHECK(expanded.n() == 4);
    CHECK(expanded.k1() == 4);
    CHECK(expanded.field().order() == 2);

    // The GF(4) span{(1,1)} pair expands to a valid [4,2] pair over GF(2).
    ConjugatePair small = gf4_selfdual_pair();
    CHECK(small.k() == 0);
    ConjugatePair small2 = expand_pair(small);
    CHECK(small2.n() == 4);
    CHECK(small2.k1() == 2);
    CHECK(small2.k2() == 2);
    CHECK(small2.k() == 0);

    // Prime-field pairs cannot be expanded further.
    CHECK_THROWS_AS(expand_pair(trivial_pair(2)), Error);
}

TEST_CASE("expansion preserves conjugacy on random GF(4) pairs") {
    Field f4(2, 2);
    CounterRng rng(29);
    for (int t = 0; t < 100; ++t) {
        size_t n = 1 + rng.uniform_below(4);
        ConjugatePair p = random_conjugate_pair(f4, n, rng);
        ConjugatePair e = expand_pair(p); // constructor revalidates containment
        CHECK(e.n() == 2 * n);
        CHECK(e.k1() == 2 * p.k1());
        CHECK(e.k2() == 2 * p.k2());
        CHECK(e.k() == 2 * p.k());
    }
}
