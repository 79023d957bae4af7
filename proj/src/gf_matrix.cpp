#include "ccpair/gf_matrix.hpp"

#include <algorithm>
#include <limits>

namespace ccpair {

namespace {
void check_compatible(const Word& a, const Word& b) {
    if (!a.field().same(b.field()))
        raise(ErrorCode::MismatchedField, "vectors live in different fields");
    if (a.size() != b.size())
        raise(ErrorCode::LengthMismatch, "vector lengths differ: " + std::to_string(a.size()) +
                                             " vs " + std::to_string(b.size()));
}
} // namespace

bool Word::is_zero() const {
    return std::all_of(codes_.begin(), codes_.end(), [](uint16_t c) { return c == 0; });
}

size_t Word::weight() const {
    size_t w = 0;
    for (uint16_t c : codes_)
        if (c != 0) ++w;
    return w;
}

Word Word::operator+(const Word& o) const {
    check_compatible(*this, o);
    Word out(field_, codes_.size());
    for (size_t i = 0; i < codes_.size(); ++i) out.codes_[i] = static_cast<uint16_t>(field_.add(codes_[i], o.codes_[i]));
    return out;
}

Word Word::operator-(const Word& o) const {
    check_compatible(*this, o);
    Word out(field_, codes_.size());
    for (size_t i = 0; i < codes_.size(); ++i) out.codes_[i] = static_cast<uint16_t>(field_.sub(codes_[i], o.codes_[i]));
    return out;
}

Word Word::operator-() const {
    Word out(field_, codes_.size());
    for (size_t i = 0; i < codes_.size(); ++i) out.codes_[i] = static_cast<uint16_t>(field_.neg(codes_[i]));
    return out;
}

Word Word::scaled(uint32_t code) const {
    Word out(field_, codes_.size());
    for (size_t i = 0; i < codes_.size(); ++i) out.codes_[i] = static_cast<uint16_t>(field_.mul(codes_[i], code));
    return out;
}

FieldElement Word::dot(const Word& o) const {
    check_compatible(*this, o);
    uint32_t acc = 0;
    for (size_t i = 0; i < codes_.size(); ++i)
        acc = field_.add(acc, field_.mul(codes_[i], o.codes_[i]));
    return field_.el(acc);
}

bool Word::lex_less(const Word& a, const Word& b) {
    return std::lexicographical_compare(a.codes_.begin(), a.codes_.end(),
                                        b.codes_.begin(), b.codes_.end());
}

bool Word::weight_lex_less(const Word& a, const Word& b) {
    size_t wa = a.weight(), wb = b.weight();
    if (wa != wb) return wa < wb;
    return lex_less(a, b);
}

uint64_t Word::index() const {
    uint64_t idx = 0;
    const uint64_t q = field_.order();
    for (uint16_t c : codes_) {
        if (idx > (std::numeric_limits<uint64_t>::max() - c) / q)
            raise(ErrorCode::TooLarge, "q^n exceeds 64-bit indexing range");
        idx = idx * q + c;
    }
    return idx;
}

Word Word::from_index(const Field& field, size_t n, uint64_t idx) {
    Word w(field, n);
    for (size_t i = n; i > 0; --i) {
        w.codes_[i - 1] = static_cast<uint16_t>(idx % field.order());
        idx /= field.order();
    }
    return w;
}

Matrix Matrix::from_rows(const Field& field, const std::vector<Word>& rows) {
    size_t cols = rows.empty() ? 0 : rows[0].size();
    Matrix m(field, rows.size(), cols);
    for (size_t r = 0; r < rows.size(); ++r) m.set_row(r, rows[r]);
    return m;
}

Word Matrix::row(size_t r) const {
    Word w(field_, cols_);
    for (size_t c = 0; c < cols_; ++c) w.set(c, at(r, c));
    return w;
}

void Matrix::set_row(size_t r, const Word& w) {
    if (w.size() != cols_) raise(ErrorCode::LengthMismatch, "row length mismatch");
    for (size_t c = 0; c < cols_; ++c) a_[r * cols_ + c] = w.code(c);
}

RrefResult Matrix::rref() {
    RrefResult res;
    size_t lead = 0;
    for (size_t col = 0; col < cols_ && lead < rows_; ++col) {
        size_t piv = lead;
        while (piv < rows_ && at(piv, col) == 0) ++piv;
        if (piv == rows_) continue;
        for (size_t c = 0; c < cols_; ++c) std::swap(a_[piv * cols_ + c], a_[lead * cols_ + c]);
        uint32_t s = field_.inv(at(lead, col));
        for (size_t c = 0; c < cols_; ++c) set(lead, c, field_.mul(at(lead, c), s));
        for (size_t r = 0; r < rows_; ++r) {
            if (r == lead) continue;
            uint32_t f = at(r, col);
            if (f == 0) continue;
            for (size_t c = 0; c < cols_; ++c)
                set(r, c, field_.sub(at(r, c), field_.mul(f, at(lead, c))));
        }
        res.pivots.push_back(col);
        ++lead;
    }
    res.rank = static_cast<uint32_t>(res.pivots.size());
    return res;
}

Matrix Matrix::nonzero_rows() const {
    std::vector<Word> keep;
    for (size_t r = 0; r < rows_; ++r) {
        Word w = row(r);
        if (!w.is_zero()) keep.push_back(w);
    }
    Matrix out = from_rows(field_, keep);
    if (keep.empty()) out = Matrix(field_, 0, cols_);
    return out;
}

Matrix Matrix::kernel() const {
    Matrix r = *this;
    RrefResult rr = r.rref();
    std::vector<bool> is_pivot(cols_, false);
    for (size_t p : rr.pivots) is_pivot[p] = true;
    std::vector<size_t> free_cols;
    for (size_t c = 0; c < cols_; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);

    Matrix null(field_, free_cols.size(), cols_);
    for (size_t i = 0; i < free_cols.size(); ++i) {
        size_t f = free_cols[i];
        null.set(i, f, 1);
        for (size_t pr = 0; pr < rr.pivots.size(); ++pr)
            null.set(i, rr.pivots[pr], field_.neg(r.at(pr, f)));
    }
    null.rref();
    return null;
}

Word Matrix::apply(const Word& v) const {
    if (v.size() != cols_) raise(ErrorCode::LengthMismatch, "matrix/vector size mismatch");
    Word out(field_, rows_);
    for (size_t r = 0; r < rows_; ++r) {
        uint32_t acc = 0;
        for (size_t c = 0; c < cols_; ++c) acc = field_.add(acc, field_.mul(at(r, c), v.code(c)));
        out.set(r, acc);
    }
    return out;
}

} // namespace ccpair
