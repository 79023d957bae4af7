#include "ccpair/symplectic.hpp"

namespace ccpair {

SympVector::SympVector(Word interleaved) : word_(std::move(interleaved)) {
    if (word_.size() % 2 != 0)
        raise(ErrorCode::LengthMismatch, "symplectic vector needs an even number of coordinates");
}

SympVector SympVector::from_parts(const Word& u, const Word& w) {
    if (u.size() != w.size()) raise(ErrorCode::LengthMismatch, "u and w lengths differ");
    if (!u.field().same(w.field())) raise(ErrorCode::MismatchedField, "u and w in different fields");
    SympVector v(u.field(), u.size());
    for (size_t i = 0; i < u.size(); ++i) {
        v.set_u(i, u.code(i));
        v.set_w(i, w.code(i));
    }
    return v;
}

Word SympVector::u_part() const {
    Word u(field(), n());
    for (size_t i = 0; i < n(); ++i) u.set(i, u_code(i));
    return u;
}

Word SympVector::w_part() const {
    Word w(field(), n());
    for (size_t i = 0; i < n(); ++i) w.set(i, w_code(i));
    return w;
}

FieldElement symp_form(const SympVector& a, const SympVector& b) {
    if (a.n() != b.n()) raise(ErrorCode::LengthMismatch, "symplectic vectors have different lengths");
    if (!a.field().same(b.field())) raise(ErrorCode::MismatchedField, "symplectic vectors in different fields");
    const Field& f = a.field();
    uint32_t acc = 0;
    for (size_t i = 0; i < a.n(); ++i) {
        acc = f.add(acc, f.mul(a.u_code(i), b.w_code(i)));
        acc = f.sub(acc, f.mul(a.w_code(i), b.u_code(i)));
    }
    return f.el(acc);
}

SympCode::SympCode(const Field& field, size_t n, const Matrix& generators)
    : code_(field, 2 * n, generators), n_(n) {
    if (generators.cols() != 2 * n)
        raise(ErrorCode::LengthMismatch, "symplectic generators must have 2n columns");
}

SympCode SympCode::symp_dual() const {
    // f_sp(g, y) = sum_i g_{2i} y_{2i+1} - g_{2i+1} y_{2i} = (G J) y, so the
    // dual is the kernel of G J with J the blockwise (0 1 / -1 0) matrix.
    const Field& f = field();
    const Matrix& g = code_.generator();
    Matrix gj(f, g.rows(), g.cols());
    for (size_t r = 0; r < g.rows(); ++r) {
        for (size_t i = 0; i < n_; ++i) {
            gj.set(r, 2 * i, f.neg(g.at(r, 2 * i + 1)));
            gj.set(r, 2 * i + 1, g.at(r, 2 * i));
        }
    }
    return SympCode(f, n_, gj.kernel());
}

bool SympCode::is_dual_containing() const {
    SympCode dual = symp_dual();
    for (size_t r = 0; r < dual.generator().rows(); ++r)
        if (!code_.contains(dual.generator().row(r))) return false;
    return true;
}

CssLift css_lift(const ConjugatePair& pair) {
    const Field& f = pair.field();
    const size_t n = pair.n();
    std::vector<Word> rows;
    for (size_t r = 0; r < pair.c1().k(); ++r) {
        Word u = pair.c1().generator().row(r);
        rows.push_back(SympVector::from_parts(u, Word(f, n)).interleaved());
    }
    for (size_t r = 0; r < pair.c2().k(); ++r) {
        Word w = pair.c2().generator().row(r);
        rows.push_back(SympVector::from_parts(Word(f, n), w).interleaved());
    }
    Matrix gens = rows.empty() ? Matrix(f, 0, 2 * n) : Matrix::from_rows(f, rows);
    SympCode l(f, n, gens);
    return CssLift{l, l.symp_dual()};
}

std::vector<SympVector> error_set(const std::vector<Word>& gamma1,
                                  const std::vector<Word>& gamma2, uint64_t cap) {
    if (static_cast<uint64_t>(gamma1.size()) * gamma2.size() > cap)
        raise(ErrorCode::TooLarge, "error set materialization exceeds cap");
    std::vector<SympVector> out;
    out.reserve(gamma1.size() * gamma2.size());
    for (const Word& x : gamma1)
        for (const Word& z : gamma2) out.push_back(SympVector::from_parts(x, z));
    return out;
}

EnlargedErrorSet::EnlargedErrorSet(const ConjugatePair& pair, std::vector<Word> gamma1,
                                   std::vector<Word> gamma2)
    : pair_(&pair), gamma1_(std::move(gamma1)), gamma2_(std::move(gamma2)) {}

EnlargedErrorSet::EnlargedErrorSet(const ConjugatePair& pair, const SyndromeTable& t1,
                                   const SyndromeTable& t2)
    : pair_(&pair), t1_(&t1), t2_(&t2) {
    if (!(t1.code() == pair.c1()) || !(t2.code() == pair.c2()))
        raise(ErrorCode::BadInput, "tables must decode C1 and C2 of the pair");
}

bool EnlargedErrorSet::contains_x(const Word& x) const {
    if (t1_) {
        // The unique candidate with x - gamma in C1 is the coset leader;
        // since dual(C2) <= C1 it decides membership in Gamma1 + dual(C2).
        return pair_->c2_dual().contains(x - t1_->leader_for(x));
    }
    for (const Word& g : gamma1_)
        if (pair_->c2_dual().contains(x - g)) return true;
    return false;
}

bool EnlargedErrorSet::contains_z(const Word& z) const {
    if (t2_) return pair_->c1_dual().contains(z - t2_->leader_for(z));
    for (const Word& g : gamma2_)
        if (pair_->c1_dual().contains(z - g)) return true;
    return false;
}

bool correctable_error_set(const SympCode& l, const SympCode& lperp,
                           const std::vector<SympVector>& error_set, uint64_t cap) {
    if (static_cast<uint64_t>(error_set.size()) * error_set.size() > cap)
        raise(ErrorCode::TooLarge, "pairwise correctability check exceeds cap");
    for (size_t a = 0; a < error_set.size(); ++a) {
        for (size_t b = a + 1; b < error_set.size(); ++b) {
            SympVector d = error_set[a] - error_set[b];
            if (l.contains(d) && !lperp.contains(d)) return false;
        }
    }
    return true;
}

} // namespace ccpair
