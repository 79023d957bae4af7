#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "ccpair/gf_matrix.hpp"

namespace ccpair {

// A k-dimensional subspace of F_q^n. The canonical representation is the
// RREF of the generator matrix: two codes are equal iff their RREFs are.
class LinearCode {
public:
    // Rows may be any spanning set; they are reduced to RREF and zero rows
    // dropped.
    LinearCode(const Field& field, size_t n, const Matrix& generators);

    static LinearCode full_space(const Field& field, size_t n);
    static LinearCode zero_code(const Field& field, size_t n);

    const Field& field() const { return field_; }
    size_t n() const { return n_; }
    size_t k() const { return gen_.rows(); }
    const Matrix& generator() const { return gen_; }
    const std::vector<size_t>& pivots() const { return pivots_; }

    LinearCode dual() const;
    bool contains(const Word& w) const;
    bool operator==(const LinearCode& o) const {
        return n_ == o.n_ && field_.same(o.field_) && gen_ == o.gen_;
    }

    // message has length k; returns sum_r message_r * row_r.
    Word encode(const Word& message) const;
    // Enumeration helper: the codeword for the base-q message index.
    Word codeword(uint64_t message_index) const;
    // q^k, or nullopt when it does not fit in 63 bits.
    std::optional<uint64_t> codeword_count() const;

    // Exhaustive minimum distance; nullopt when q^k exceeds the cap or k = 0.
    std::optional<size_t> min_distance(uint64_t enumeration_cap = (1u << 20)) const;

private:
    Field field_;
    size_t n_;
    Matrix gen_;
    std::vector<size_t> pivots_;
};

// B <= C as subspaces (same n, same field required).
bool is_subcode(const LinearCode& b, const LinearCode& c);

// Complete coset-leader table for F_q^n / C. Leaders are the minimum-weight
// words of each coset, ties broken lexicographically on entry codes, so the
// leader set is a complete system of coset representatives.
class SyndromeTable {
public:
    explicit SyndromeTable(const LinearCode& code, uint64_t max_table_size = kDefaultMaxTable);

    static constexpr uint64_t kDefaultMaxTable = 1ull << 20;

    const LinearCode& code() const { return code_; }
    const Matrix& parity() const { return parity_; } // (n-k) x n, rows span dual(C)

    Word syndrome(const Word& v) const { return parity_.apply(v); }
    uint64_t syndrome_index(const Word& syndrome_word) const { return syndrome_word.index(); }

    size_t size() const { return leaders_.size(); } // q^{n-k}
    const Word& leader_by_index(uint64_t syndrome_idx) const { return leaders_[syndrome_idx]; }
    const Word& leader_for(const Word& v) const { return leaders_[syndrome(v).index()]; }
    const std::vector<Word>& leaders() const { return leaders_; }

private:
    LinearCode code_;
    Matrix parity_;
    std::vector<Word> leaders_;
};

// Syndrome decoding of the coset code x + C: returns the unique word of
// x + C whose difference from `received` is a coset leader.
Word decode_coset(const LinearCode& code, const Word& shift, const Word& received,
                  const SyndromeTable& table);

// Visits every word of F_q^n in (weight, lex) ascending order until the
// callback returns true. Returns whether the callback ever did.
bool enumerate_weight_lex(const Field& field, size_t n,
                          const std::function<bool(const Word&)>& visit);

// Visits all q^n words in plain index order (0 .. q^n-1).
void enumerate_all(const Field& field, size_t n, const std::function<void(const Word&)>& visit);

} // namespace ccpair
