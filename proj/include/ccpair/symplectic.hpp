#pragma once

#include <cstdint>
#include <vector>

#include "ccpair/conjugate_pair.hpp"

namespace ccpair {

// An element [u,w] of F_q^{2n}, stored interleaved as
// (u_1, w_1, ..., u_n, w_n). These index the Weyl basis.
class SympVector {
public:
    SympVector(const Field& field, size_t n) : word_(field, 2 * n) {}
    explicit SympVector(Word interleaved);

    static SympVector from_parts(const Word& u, const Word& w);

    const Field& field() const { return word_.field(); }
    size_t n() const { return word_.size() / 2; }
    uint16_t u_code(size_t i) const { return word_.code(2 * i); }
    uint16_t w_code(size_t i) const { return word_.code(2 * i + 1); }
    void set_u(size_t i, uint32_t c) { word_.set(2 * i, c); }
    void set_w(size_t i, uint32_t c) { word_.set(2 * i + 1, c); }

    Word u_part() const;
    Word w_part() const;
    const Word& interleaved() const { return word_; }

    SympVector operator+(const SympVector& o) const { return SympVector(word_ + o.word_); }
    SympVector operator-(const SympVector& o) const { return SympVector(word_ - o.word_); }
    bool operator==(const SympVector& o) const { return word_ == o.word_; }
    bool is_zero() const { return word_.is_zero(); }

private:
    Word word_;
};

// The standard symplectic form f_sp([u,w],[u',w']) = u.w' - w.u'. Vanishes
// exactly when the Weyl operators N_[u,w] and N_[u',w'] commute.
FieldElement symp_form(const SympVector& a, const SympVector& b);

// A subspace L of F_q^{2n} in interleaved coordinates, canonical RREF.
class SympCode {
public:
    SympCode(const Field& field, size_t n, const Matrix& generators);

    const Field& field() const { return code_.field(); }
    size_t n() const { return n_; }
    size_t dim() const { return code_.k(); }
    const Matrix& generator() const { return code_.generator(); }

    bool contains(const SympVector& v) const { return code_.contains(v.interleaved()); }
    bool operator==(const SympCode& o) const { return code_ == o.code_; }

    // { y : f_sp(x, y) = 0 for all x in L }; dimension 2n - dim L.
    SympCode symp_dual() const;
    // L^perp_sp <= L, the dual-containing condition.
    bool is_dual_containing() const;

private:
    LinearCode code_;
    size_t n_;
};

struct CssLift {
    SympCode l;     // {[u,w] : u in C1, w in C2}
    SympCode lperp; // its symplectic dual, {[u,w] : u in dual(C2), w in dual(C1)}
};

// The symplectic picture of a conjugate pair; lperp <= l always holds.
CssLift css_lift(const ConjugatePair& pair);

// K(Gamma1, Gamma2) = { [x,z] : x in Gamma1, z in Gamma2 }, materialized.
std::vector<SympVector> error_set(const std::vector<Word>& gamma1,
                                  const std::vector<Word>& gamma2,
                                  uint64_t cap = 1ull << 20);

// Membership predicate for K(Gamma1', Gamma2') with Gamma1' = Gamma1 + dual(C2)
// and Gamma2' = Gamma2 + dual(C1). Never materialized: the enlarged sets are
// exponentially large.
class EnlargedErrorSet {
public:
    // Generic form: scans the Gamma lists.
    EnlargedErrorSet(const ConjugatePair& pair, std::vector<Word> gamma1,
                     std::vector<Word> gamma2);
    // Fast form for complete leader tables: x in Gamma1' iff
    // x - leader1(x) in dual(C2), and similarly for z.
    EnlargedErrorSet(const ConjugatePair& pair, const SyndromeTable& t1,
                     const SyndromeTable& t2);

    bool contains_x(const Word& x) const;
    bool contains_z(const Word& z) const;
    bool contains(const SympVector& e) const {
        return contains_x(e.u_part()) && contains_z(e.w_part());
    }

private:
    const ConjugatePair* pair_;
    std::vector<Word> gamma1_, gamma2_;
    const SyndromeTable* t1_ = nullptr;
    const SyndromeTable* t2_ = nullptr;
};

// The classical correctability criterion behind Lemma 1: for all e != e' in
// the set, e - e' in L implies e - e' in L^perp_sp. Under this condition the
// symplectic code corrects N_{I + L^perp_sp} with a suitable recovery
// operator.
bool correctable_error_set(const SympCode& l, const SympCode& lperp,
                           const std::vector<SympVector>& error_set,
                           uint64_t cap = 1ull << 20);

} // namespace ccpair
