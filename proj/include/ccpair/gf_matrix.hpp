#pragma once

#include <cstdint>
#include <vector>

#include "ccpair/field.hpp"

namespace ccpair {

// Length-n vector over F_q. Entries are element codes (q <= 2^16 so they fit
// in 16 bits).
class Word {
public:
    Word(const Field& field, size_t n) : field_(field), codes_(n, 0) {}
    Word(const Field& field, std::vector<uint16_t> codes)
        : field_(field), codes_(std::move(codes)) {}

    const Field& field() const { return field_; }
    size_t size() const { return codes_.size(); }
    uint16_t code(size_t i) const { return codes_[i]; }
    void set(size_t i, uint32_t code) { codes_[i] = static_cast<uint16_t>(code); }
    const std::vector<uint16_t>& codes() const { return codes_; }
    FieldElement at(size_t i) const { return field_.el(codes_[i]); }

    bool is_zero() const;
    size_t weight() const; // Hamming weight

    Word operator+(const Word& o) const;
    Word operator-(const Word& o) const;
    Word operator-() const;
    Word scaled(uint32_t code) const;
    bool operator==(const Word& o) const { return codes_ == o.codes_; }
    bool operator!=(const Word& o) const { return codes_ != o.codes_; }

    // The dot product sum_i x_i y_i.
    FieldElement dot(const Word& o) const;

    // Entrywise lexicographic order on element codes; the canonical
    // tie-break everywhere (coset leaders, transversals).
    static bool lex_less(const Word& a, const Word& b);
    // (weight, lex) order used for canonical representatives.
    static bool weight_lex_less(const Word& a, const Word& b);

    // Big-endian base-q integer (first entry most significant). Used as the
    // computational-basis index; requires q^n to fit in 64 bits.
    uint64_t index() const;
    static Word from_index(const Field& field, size_t n, uint64_t idx);

private:
    Field field_;
    std::vector<uint16_t> codes_;
};

struct RrefResult {
    uint32_t rank = 0;
    std::vector<size_t> pivots;
};

// Dense row-major matrix over F_q.
class Matrix {
public:
    Matrix(const Field& field, size_t rows, size_t cols)
        : field_(field), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

    static Matrix from_rows(const Field& field, const std::vector<Word>& rows);

    const Field& field() const { return field_; }
    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    uint16_t at(size_t r, size_t c) const { return a_[r * cols_ + c]; }
    void set(size_t r, size_t c, uint32_t code) { a_[r * cols_ + c] = static_cast<uint16_t>(code); }
    Word row(size_t r) const;
    void set_row(size_t r, const Word& w);

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

    // In-place reduced row echelon form. Canonical: two row spaces are equal
    // iff their RREFs (with zero rows dropped) are equal.
    RrefResult rref();

    // Rows spanning { x : M x^T = 0 }, returned in RREF.
    Matrix kernel() const;

    // Drops all-zero rows (use after rref()).
    Matrix nonzero_rows() const;

    // M * v^T as a column, returned as a Word of length rows().
    Word apply(const Word& v) const;

private:
    Field field_;
    size_t rows_, cols_;
    std::vector<uint16_t> a_;
};

} // namespace ccpair
