#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "ccpair/linear_code.hpp"

namespace ccpair {

// A validated conjugate (CSS) code pair: linear codes (C1, C2) of the same
// length with dual(C2) <= C1, equivalently dual(C1) <= C2. The message space
// is the quotient C1 / dual(C2), of dimension k = k1 + k2 - n.
class ConjugatePair {
public:
    // Raises NotConjugate when dual(C2) is not contained in C1.
    ConjugatePair(const LinearCode& c1, const LinearCode& c2);

    const Field& field() const { return c1_.field(); }
    size_t n() const { return c1_.n(); }
    size_t k1() const { return c1_.k(); }
    size_t k2() const { return c2_.k(); }
    size_t k() const { return k_; } // message dimension, k1 + k2 - n

    const LinearCode& c1() const { return c1_; }
    const LinearCode& c2() const { return c2_; }
    const LinearCode& c1_dual() const { return c1_dual_; }
    const LinearCode& c2_dual() const { return c2_dual_; }

    // Canonical transversal of C1 / dual(C2): per coset the minimum-weight
    // word, ties broken lexicographically. Sorted in (weight, lex) order;
    // index 0 is always the zero word.
    const std::vector<Word>& message_representatives(uint64_t cap = 1ull << 20) const;

    // Canonical representative of w + dual(C2) for w in C1.
    const Word& canonicalize_message(const Word& word_in_c1) const;
    // Index of that representative in message_representatives().
    size_t message_index(const Word& word_in_c1) const;

private:
    LinearCode c1_, c2_, c1_dual_, c2_dual_;
    size_t k_;
    mutable std::vector<Word> reps_;
    mutable std::unordered_map<uint64_t, size_t> rep_by_coset_;

    uint64_t coset_key(const Word& w) const;
    void build_representatives(uint64_t cap) const;
};

// True iff all generator pairs of C are orthogonal, i.e. C <= dual(C). When
// true, (dual(C), dual(C)) is a valid conjugate pair.
bool self_orthogonality_check(const LinearCode& c);

// An additive quotient C/B with B <= C: messages are cosets of B in C and the
// sender may transmit any member of the chosen coset.
class QuotientCode {
public:
    QuotientCode(const LinearCode& c, const LinearCode& b, uint64_t cap = 1ull << 20);

    const LinearCode& c() const { return c_; }
    const LinearCode& b() const { return b_; }
    const std::vector<Word>& representatives() const { return reps_; }

private:
    LinearCode c_, b_;
    std::vector<Word> reps_;
};

// True iff errors in J + B never carry one code-coset into another:
// for all e != e' in J + B, e - e' in C implies e - e' in B.
bool quotient_correctable(const QuotientCode& q, const std::vector<Word>& j_set,
                          uint64_t cap = 1ull << 20);

// The non-prime-alphabet expansion: C1 is expanded coordinate-wise in the
// polynomial basis, C2 in its trace-dual, giving a conjugate pair over F_p of
// length n*m. Requires m > 1.
ConjugatePair expand_pair(const ConjugatePair& pair);

// Expansion of a single code in an explicit basis (exposed for tests).
LinearCode expand_code(const LinearCode& code, const Basis& basis);

} // namespace ccpair
