#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "ccpair/errors.hpp"

namespace ccpair {

class FieldElement;

// GF(p^m) in a fixed polynomial basis 1, alpha, ..., alpha^{m-1}.
//
// Elements are canonical integer codes in [0, q): code = sum_i c_i * p^i where
// (c_0, ..., c_{m-1}) are the coefficients of the element in the polynomial
// basis. That code is also the serialized form in files and reports.
//
// Field is cheap to copy; the parameters are immutable and shared.
class Field {
public:
    // Uses the default modulus: the lexicographically smallest monic
    // irreducible polynomial of degree m, comparing ascending coefficient
    // lists (c_0, c_1, ..., c_{m-1}).
    Field(uint32_t p, uint32_t m);

    // Caller-supplied modulus: ascending coefficients, length m+1, monic.
    Field(uint32_t p, uint32_t m, const std::vector<uint32_t>& modulus);

    uint32_t characteristic() const { return impl_->p; }
    uint32_t degree() const { return impl_->m; }
    uint32_t order() const { return impl_->q; }
    bool prime_field() const { return impl_->m == 1; }
    const std::vector<uint32_t>& modulus() const { return impl_->modulus; }

    // Arithmetic on raw element codes. This is the hot path used by the
    // linear-algebra layer; FieldElement wraps it for callers that want
    // checked operator syntax.
    uint32_t add(uint32_t a, uint32_t b) const;
    uint32_t sub(uint32_t a, uint32_t b) const;
    uint32_t neg(uint32_t a) const;
    uint32_t mul(uint32_t a, uint32_t b) const;
    uint32_t inv(uint32_t a) const;           // DivisionByZero on 0
    uint32_t div(uint32_t a, uint32_t b) const;
    uint32_t pow(uint32_t a, uint64_t e) const;

    // Tr(a) = a + a^p + ... + a^{p^(m-1)}, always an element of the prime
    // subfield; returned as an integer in [0, p).
    uint32_t trace(uint32_t a) const;

    uint32_t coeff(uint32_t code, uint32_t i) const; // i-th polynomial-basis coefficient
    uint32_t from_coeffs(const std::vector<uint32_t>& coeffs) const;
    std::vector<uint32_t> to_coeffs(uint32_t code) const;

    FieldElement el(uint32_t code) const; // bounds-checked
    FieldElement zero() const;
    FieldElement one() const;
    FieldElement alpha() const; // the class of x; equals 1 when m == 1

    // Same (p, m, modulus). Distinct Field objects with equal parameters are
    // interchangeable.
    bool same(const Field& o) const;

    std::string spec() const;                    // "p^m", e.g. "2^2"
    static Field parse(const std::string& spec); // accepts "p" or "p^m"

    static bool is_prime(uint32_t p);
    // Irreducibility over F_p by trial division with all monic polynomials of
    // degree <= deg/2. Sized for p^m <= 2^16.
    static bool is_irreducible(uint32_t p, const std::vector<uint32_t>& poly);
    static std::vector<uint32_t> default_modulus(uint32_t p, uint32_t m);

    static constexpr uint32_t kMaxOrder = 1u << 16;

private:
    struct Impl {
        uint32_t p = 0;
        uint32_t m = 0;
        uint32_t q = 0;
        std::vector<uint32_t> modulus;            // ascending, size m+1, monic
        std::vector<std::vector<uint32_t>> alpha_pow; // digits of alpha^{m+j}, j in [0, m-1)
    };

    std::shared_ptr<const Impl> impl_;

    std::vector<uint32_t> digits(uint32_t code) const;
    uint32_t undigits(const std::vector<uint32_t>& d) const;
};

// A single element of GF(p^m). Operators check for matching fields and raise
// MismatchedField / DivisionByZero.
class FieldElement {
public:
    FieldElement(const Field& field, uint32_t code) : field_(field), code_(code) {}

    const Field& field() const { return field_; }
    uint32_t code() const { return code_; }
    bool is_zero() const { return code_ == 0; }

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator/(const FieldElement& o) const;
    FieldElement operator-() const;
    bool operator==(const FieldElement& o) const;
    bool operator!=(const FieldElement& o) const { return !(*this == o); }

    FieldElement pow(uint64_t e) const { return FieldElement(field_, field_.pow(code_, e)); }
    uint32_t trace() const { return field_.trace(code_); }

private:
    Field field_;
    uint32_t code_;
};

// An F_p-basis of GF(p^m), used for the expansion to the prime-field
// alphabet. Construction checks linear independence.
class Basis {
public:
    Basis(const Field& field, const std::vector<uint32_t>& element_codes);

    static Basis polynomial(const Field& field); // {1, alpha, ..., alpha^{m-1}}

    const Field& field() const { return field_; }
    uint32_t size() const { return static_cast<uint32_t>(codes_.size()); }
    uint32_t code(uint32_t i) const { return codes_[i]; }
    FieldElement element(uint32_t i) const { return FieldElement(field_, codes_[i]); }

    // The trace-dual basis: Tr(b_i * dual_j) = delta_ij.
    Basis dual() const;

    // Coefficients of x over F_p in this basis; exact round trip with
    // combine().
    std::vector<uint32_t> expand(uint32_t code) const;
    uint32_t combine(const std::vector<uint32_t>& coeffs) const;

private:
    Field field_;
    std::vector<uint32_t> codes_;
    // Precomputed inverse of the coefficient matrix, for expand().
    std::vector<std::vector<uint32_t>> inv_coeff_matrix_;
};

} // namespace ccpair
