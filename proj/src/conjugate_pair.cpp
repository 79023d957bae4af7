#include "ccpair/conjugate_pair.hpp"

#include <algorithm>

namespace ccpair {

ConjugatePair::ConjugatePair(const LinearCode& c1, const LinearCode& c2)
    : c1_(c1), c2_(c2), c1_dual_(c1.dual()), c2_dual_(c2.dual()), k_(0) {
    if (c1.n() != c2.n()) raise(ErrorCode::LengthMismatch, "codes have different lengths");
    if (!c1.field().same(c2.field())) raise(ErrorCode::MismatchedField, "codes over different fields");
    if (!is_subcode(c2_dual_, c1_))
        raise(ErrorCode::NotConjugate,
              "dual(C2) is not contained in C1: not a conjugate pair");
    k_ = c1.k() + c2.k() - c1.n();
}

uint64_t ConjugatePair::coset_key(const Word& w) const {
    // Cosets of dual(C2) are separated by the syndrome w.r.t. the parity
    // check of dual(C2), whose rows generate C2 itself.
    return c2_.generator().apply(w).index();
}

void ConjugatePair::build_representatives(uint64_t cap) const {
    if (!reps_.empty()) return;
    if (k_ == 0) {
        // C1 = dual(C2): the message space is the single coset of 0.
        reps_.push_back(Word(field(), n()));
        rep_by_coset_[coset_key(reps_[0])] = 0;
        return;
    }
    auto count = c1_.codeword_count();
    if (!count || *count > cap)
        raise(ErrorCode::TooLarge, "message transversal needs enumerating q^k1 codewords");
    // Walk the codewords of C1 in (weight, lex) order; the first word seen in
    // each coset of dual(C2) is its canonical representative.
    std::vector<Word> codewords;
    codewords.reserve(*count);
    for (uint64_t i = 0; i < *count; ++i) codewords.push_back(c1_.codeword(i));
    std::sort(codewords.begin(), codewords.end(), Word::weight_lex_less);
    for (const Word& w : codewords) {
        uint64_t key = coset_key(w);
        if (rep_by_coset_.find(key) == rep_by_coset_.end()) {
            rep_by_coset_[key] = reps_.size();
            reps_.push_back(w);
        }
    }
}

const std::vector<Word>& ConjugatePair::message_representatives(uint64_t cap) const {
    build_representatives(cap);
    return reps_;
}

const Word& ConjugatePair::canonicalize_message(const Word& word_in_c1) const {
    return reps_[message_index(word_in_c1)];
}

size_t ConjugatePair::message_index(const Word& word_in_c1) const {
    build_representatives(1ull << 20);
    auto it = rep_by_coset_.find(coset_key(word_in_c1));
    if (it == rep_by_coset_.end())
        raise(ErrorCode::InvalidMessage, "word is not in C1");
    return it->second;
}

bool self_orthogonality_check(const LinearCode& c) {
    for (size_t i = 0; i < c.k(); ++i)
        for (size_t j = i; j < c.k(); ++j)
            if (!c.generator().row(i).dot(c.generator().row(j)).is_zero()) return false;
    return true;
}

QuotientCode::QuotientCode(const LinearCode& c, const LinearCode& b, uint64_t cap)
    : c_(c), b_(b) {
    if (!is_subcode(b, c)) raise(ErrorCode::BadInput, "B is not a subcode of C");
    // Transversal of C/B with the same (weight, lex) convention as coset
    // leaders and message representatives.
    auto count = c.codeword_count();
    if (!count || *count > cap) raise(ErrorCode::TooLarge, "quotient transversal enumeration too large");
    std::vector<Word> codewords;
    codewords.reserve(*count);
    for (uint64_t i = 0; i < *count; ++i) codewords.push_back(c.codeword(i));
    std::sort(codewords.begin(), codewords.end(), Word::weight_lex_less);
    const Matrix parity = b.dual().generator();
    std::unordered_map<uint64_t, bool> seen;
    for (const Word& w : codewords) {
        uint64_t key = parity.apply(w).index();
        if (!seen[key]) {
            seen[key] = true;
            reps_.push_back(w);
        }
    }
}

bool quotient_correctable(const QuotientCode& q, const std::vector<Word>& j_set, uint64_t cap) {
    // Materialize J + B and test pairwise differences.
    auto b_count = q.b().codeword_count();
    if (!b_count || *b_count * j_set.size() > cap)
        raise(ErrorCode::TooLarge, "J + B enumeration too large");
    std::vector<Word> jb;
    std::unordered_map<uint64_t, bool> seen;
    for (const Word& j : j_set) {
        for (uint64_t i = 0; i < *b_count; ++i) {
            Word e = j + q.b().codeword(i);
            uint64_t idx = e.index();
            if (!seen[idx]) {
                seen[idx] = true;
                jb.push_back(e);
            }
        }
    }
    for (size_t a = 0; a < jb.size(); ++a) {
        for (size_t b = a + 1; b < jb.size(); ++b) {
            Word d = jb[a] - jb[b];
            if (q.c().contains(d) && !q.b().contains(d)) return false;
        }
    }
    return true;
}

LinearCode expand_code(const LinearCode& code, const Basis& basis) {
    const Field& f = code.field();
    const uint32_t m = f.degree();
    Field fp(f.characteristic(), 1);
    // F_p-generators of the code: alpha^j * g_i, expanded coordinate-wise.
    std::vector<Word> rows;
    for (size_t r = 0; r < code.k(); ++r) {
        Word g = code.generator().row(r);
        uint32_t scale = 1;
        for (uint32_t j = 0; j < m; ++j) {
            Word scaled = g.scaled(scale);
            Word expanded(fp, code.n() * m);
            for (size_t i = 0; i < code.n(); ++i) {
                std::vector<uint32_t> coeffs = basis.expand(scaled.code(i));
                for (uint32_t t = 0; t < m; ++t) expanded.set(i * m + t, coeffs[t]);
            }
            rows.push_back(expanded);
            scale = f.mul(scale, f.alpha().code());
        }
    }
    if (rows.empty()) return LinearCode::zero_code(fp, code.n() * m);
    return LinearCode(fp, code.n() * m, Matrix::from_rows(fp, rows));
}

ConjugatePair expand_pair(const ConjugatePair& pair) {
    const Field& f = pair.field();
    if (f.degree() <= 1)
        raise(ErrorCode::BadInput, "expansion applies to extension fields only (m > 1)");
    Basis poly = Basis::polynomial(f);
    Basis dual = poly.dual();
    // C1 in the polynomial basis, C2 in the trace-dual: the pairing
    // Tr(x y) = sum_i x_i y_i turns F_q-orthogonality into F_p-orthogonality,
    // so conjugacy is preserved.
    LinearCode c1p = expand_code(pair.c1(), poly);
    LinearCode c2p = expand_code(pair.c2(), dual);
    return ConjugatePair(c1p, c2p);
}

} // namespace ccpair
