#include "ccpair/field.hpp"

#include <algorithm>

namespace ccpair {

namespace {

// Small dense linear algebra over the prime field Z_p, used only for basis
// handling. The general F_q layer lives in gf_matrix.*.
using PVec = std::vector<uint32_t>;
using PMat = std::vector<PVec>;

uint32_t pmod(int64_t v, uint32_t p) {
    int64_t r = v % static_cast<int64_t>(p);
    return static_cast<uint32_t>(r < 0 ? r + p : r);
}

uint32_t p_inv(uint32_t a, uint32_t p) {
    // Fermat: a^(p-2) mod p.
    uint64_t result = 1, base = a % p;
    uint32_t e = p - 2;
    while (e) {
        if (e & 1) result = result * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return static_cast<uint32_t>(result);
}

// Gauss-Jordan inverse of an m x m matrix over Z_p. Returns false when
// singular.
bool p_invert(PMat a, uint32_t p, PMat& out) {
    size_t m = a.size();
    out.assign(m, PVec(m, 0));
    for (size_t i = 0; i < m; ++i) out[i][i] = 1;
    for (size_t col = 0; col < m; ++col) {
        size_t piv = col;
        while (piv < m && a[piv][col] == 0) ++piv;
        if (piv == m) return false;
        std::swap(a[piv], a[col]);
        std::swap(out[piv], out[col]);
        uint64_t s = p_inv(a[col][col], p);
        for (size_t j = 0; j < m; ++j) {
            a[col][j] = static_cast<uint32_t>(a[col][j] * s % p);
            out[col][j] = static_cast<uint32_t>(out[col][j] * s % p);
        }
        for (size_t r = 0; r < m; ++r) {
            if (r == col || a[r][col] == 0) continue;
            uint64_t f = a[r][col];
            for (size_t j = 0; j < m; ++j) {
                a[r][j] = pmod(static_cast<int64_t>(a[r][j]) - static_cast<int64_t>(f * a[col][j] % p), p);
                out[r][j] = pmod(static_cast<int64_t>(out[r][j]) - static_cast<int64_t>(f * out[col][j] % p), p);
            }
        }
    }
    return true;
}

uint32_t p_rank(PMat a, uint32_t p) {
    size_t rows = a.size();
    if (rows == 0) return 0;
    size_t cols = a[0].size();
    uint32_t rank = 0;
    for (size_t col = 0; col < cols && rank < rows; ++col) {
        size_t piv = rank;
        while (piv < rows && a[piv][col] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(a[piv], a[rank]);
        uint64_t s = p_inv(a[rank][col], p);
        for (size_t j = 0; j < cols; ++j) a[rank][j] = static_cast<uint32_t>(a[rank][j] * s % p);
        for (size_t r = 0; r < rows; ++r) {
            if (r == rank || a[r][col] == 0) continue;
            uint64_t f = a[r][col];
            for (size_t j = 0; j < cols; ++j)
                a[r][j] = pmod(static_cast<int64_t>(a[r][j]) - static_cast<int64_t>(f * a[rank][j] % p), p);
        }
        ++rank;
    }
    return rank;
}

// Polynomial helpers over Z_p, coefficients ascending.
void poly_trim(PVec& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a mod b, b monic-normalized inside.
PVec poly_rem(PVec a, const PVec& b, uint32_t p) {
    poly_trim(a);
    PVec bb = b;
    poly_trim(bb);
    uint32_t lead_inv = p_inv(bb.back(), p);
    while (a.size() >= bb.size() && !a.empty()) {
        uint64_t f = static_cast<uint64_t>(a.back()) * lead_inv % p;
        size_t shift = a.size() - bb.size();
        for (size_t i = 0; i < bb.size(); ++i)
            a[shift + i] = pmod(static_cast<int64_t>(a[shift + i]) - static_cast<int64_t>(f * bb[i] % p), p);
        poly_trim(a);
    }
    return a;
}

} // namespace

bool Field::is_prime(uint32_t p) {
    if (p < 2) return false;
    for (uint32_t d = 2; static_cast<uint64_t>(d) * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

bool Field::is_irreducible(uint32_t p, const std::vector<uint32_t>& poly) {
    PVec f = poly;
    poly_trim(f);
    if (f.size() < 2) return false; // constants are not irreducible
    uint32_t deg = static_cast<uint32_t>(f.size()) - 1;
    if (deg == 1) return true;
    // Trial division by every monic polynomial of degree 1..deg/2.
    for (uint32_t d = 1; 2 * d <= deg; ++d) {
        uint64_t count = 1;
        for (uint32_t i = 0; i < d; ++i) count *= p;
        for (uint64_t c = 0; c < count; ++c) {
            PVec div(d + 1, 0);
            uint64_t t = c;
            for (uint32_t i = 0; i < d; ++i) {
                div[i] = static_cast<uint32_t>(t % p);
                t /= p;
            }
            div[d] = 1;
            if (poly_rem(f, div, p).empty()) return false;
        }
    }
    return true;
}

std::vector<uint32_t> Field::default_modulus(uint32_t p, uint32_t m) {
    // Enumerate all monic degree-m polynomials, keep irreducibles, pick the
    // lexicographically smallest ascending coefficient list.
    uint64_t count = 1;
    for (uint32_t i = 0; i < m; ++i) count *= p;
    std::vector<uint32_t> best;
    for (uint64_t c = 0; c < count; ++c) {
        std::vector<uint32_t> cand(m + 1, 0);
        uint64_t t = c;
        for (uint32_t i = 0; i < m; ++i) {
            cand[i] = static_cast<uint32_t>(t % p);
            t /= p;
        }
        cand[m] = 1;
        if (!is_irreducible(p, cand)) continue;
        if (best.empty() || std::lexicographical_compare(cand.begin(), cand.end() - 1,
                                                         best.begin(), best.end() - 1)) {
            best = cand;
        }
    }
    if (best.empty()) raise(ErrorCode::BadInput, "no irreducible polynomial found");
    return best;
}

Field::Field(uint32_t p, uint32_t m) : Field(p, m, default_modulus(p, m)) {}

Field::Field(uint32_t p, uint32_t m, const std::vector<uint32_t>& modulus) {
    if (!is_prime(p)) raise(ErrorCode::BadInput, "field characteristic must be prime: " + std::to_string(p));
    if (m < 1) raise(ErrorCode::BadInput, "extension degree must be >= 1");
    uint64_t q = 1;
    for (uint32_t i = 0; i < m; ++i) {
        q *= p;
        if (q > kMaxOrder) raise(ErrorCode::TooLarge, "field order exceeds 2^16");
    }
    if (modulus.size() != m + 1 || modulus[m] != 1)
        raise(ErrorCode::BadInput, "modulus must be monic of degree m");
    for (uint32_t c : modulus)
        if (c >= p) raise(ErrorCode::BadInput, "modulus coefficient out of range");
    if (!is_irreducible(p, modulus))
        raise(ErrorCode::BadInput, "modulus is reducible over F_p");

    auto impl = std::make_shared<Impl>();
    impl->p = p;
    impl->m = m;
    impl->q = static_cast<uint32_t>(q);
    impl->modulus = modulus;
    impl_ = impl;

    // alpha^{m+j} reduced, used by mul().
    if (m > 1) {
        auto mut = std::const_pointer_cast<Impl>(impl_);
        std::vector<uint32_t> cur(m, 0); // digits of alpha^{m-1+...}, start with alpha^{m-1}
        cur[m - 1] = 1;
        for (uint32_t j = 0; j + 1 < m; ++j) {
            // multiply cur by alpha, reduce with modulus
            std::vector<uint32_t> next(m, 0);
            uint32_t carry = cur[m - 1];
            for (uint32_t i = m - 1; i > 0; --i) next[i] = cur[i - 1];
            next[0] = 0;
            if (carry) {
                // alpha^m = -modulus[0..m-1]
                for (uint32_t i = 0; i < m; ++i)
                    next[i] = pmod(static_cast<int64_t>(next[i]) -
                                       static_cast<int64_t>(static_cast<uint64_t>(carry) * modulus[i] % p),
                                   p);
            }
            mut->alpha_pow.push_back(next);
            cur = next;
        }
    }
}

std::vector<uint32_t> Field::digits(uint32_t code) const {
    std::vector<uint32_t> d(impl_->m);
    for (uint32_t i = 0; i < impl_->m; ++i) {
        d[i] = code % impl_->p;
        code /= impl_->p;
    }
    return d;
}

uint32_t Field::undigits(const std::vector<uint32_t>& d) const {
    uint32_t code = 0;
    for (uint32_t i = impl_->m; i > 0; --i) code = code * impl_->p + d[i - 1];
    return code;
}

uint32_t Field::add(uint32_t a, uint32_t b) const {
    const uint32_t p = impl_->p;
    if (impl_->m == 1) return (a + b) % p;
    uint32_t out = 0, mul = 1;
    for (uint32_t i = 0; i < impl_->m; ++i) {
        out += (a % p + b % p) % p * mul;
        a /= p;
        b /= p;
        mul *= p;
    }
    return out;
}

uint32_t Field::neg(uint32_t a) const {
    const uint32_t p = impl_->p;
    if (impl_->m == 1) return a == 0 ? 0 : p - a;
    uint32_t out = 0, mul = 1;
    for (uint32_t i = 0; i < impl_->m; ++i) {
        uint32_t d = a % p;
        out += (d == 0 ? 0 : p - d) * mul;
        a /= p;
        mul *= p;
    }
    return out;
}

uint32_t Field::sub(uint32_t a, uint32_t b) const { return add(a, neg(b)); }

uint32_t Field::mul(uint32_t a, uint32_t b) const {
    const uint32_t p = impl_->p;
    const uint32_t m = impl_->m;
    if (m == 1) return static_cast<uint32_t>(static_cast<uint64_t>(a) * b % p);
    if (a == 0 || b == 0) return 0;
    std::vector<uint32_t> da = digits(a), db = digits(b);
    // Convolution, degrees 0 .. 2m-2.
    std::vector<uint32_t> conv(2 * m - 1, 0);
    for (uint32_t i = 0; i < m; ++i) {
        if (da[i] == 0) continue;
        for (uint32_t j = 0; j < m; ++j)
            conv[i + j] = static_cast<uint32_t>((conv[i + j] + static_cast<uint64_t>(da[i]) * db[j]) % p);
    }
    // Fold alpha^{m+j} terms back with the precomputed reductions.
    std::vector<uint32_t> out(conv.begin(), conv.begin() + m);
    for (uint32_t j = 0; j + 1 < m; ++j) {
        uint32_t c = conv[m + j];
        if (c == 0) continue;
        const auto& red = impl_->alpha_pow[j];
        for (uint32_t i = 0; i < m; ++i)
            out[i] = static_cast<uint32_t>((out[i] + static_cast<uint64_t>(c) * red[i]) % p);
    }
    return undigits(out);
}

uint32_t Field::pow(uint32_t a, uint64_t e) const {
    uint32_t result = 1;
    uint32_t base = a;
    while (e) {
        if (e & 1) result = mul(result, base);
        base = mul(base, base);
        e >>= 1;
    }
    return result;
}

uint32_t Field::inv(uint32_t a) const {
    if (a == 0) raise(ErrorCode::DivisionByZero, "division by zero in GF(" + spec() + ")");
    return pow(a, impl_->q - 2);
}

uint32_t Field::div(uint32_t a, uint32_t b) const { return mul(a, inv(b)); }

uint32_t Field::trace(uint32_t a) const {
    uint32_t acc = a;
    uint32_t frob = a;
    for (uint32_t i = 1; i < impl_->m; ++i) {
        frob = pow(frob, impl_->p);
        acc = add(acc, frob);
    }
    // Trace lands in the prime subfield: only the degree-0 digit survives.
    return acc % impl_->p;
}

uint32_t Field::coeff(uint32_t code, uint32_t i) const {
    for (uint32_t j = 0; j < i; ++j) code /= impl_->p;
    return code % impl_->p;
}

uint32_t Field::from_coeffs(const std::vector<uint32_t>& coeffs) const {
    if (coeffs.size() != impl_->m) raise(ErrorCode::BadInput, "coefficient vector has wrong length");
    for (uint32_t c : coeffs)
        if (c >= impl_->p) raise(ErrorCode::BadInput, "coefficient out of range");
    return undigits(coeffs);
}

std::vector<uint32_t> Field::to_coeffs(uint32_t code) const { return digits(code); }

FieldElement Field::el(uint32_t code) const {
    if (code >= impl_->q) raise(ErrorCode::BadInput, "element code out of range for GF(" + spec() + ")");
    return FieldElement(*this, code);
}

FieldElement Field::zero() const { return FieldElement(*this, 0); }
FieldElement Field::one() const { return FieldElement(*this, 1); }
FieldElement Field::alpha() const { return FieldElement(*this, impl_->m == 1 ? 1 : impl_->p); }

bool Field::same(const Field& o) const {
    return impl_ == o.impl_ ||
           (impl_->p == o.impl_->p && impl_->m == o.impl_->m && impl_->modulus == o.impl_->modulus);
}

std::string Field::spec() const {
    return std::to_string(impl_->p) + "^" + std::to_string(impl_->m);
}

Field Field::parse(const std::string& spec) {
    size_t caret = spec.find('^');
    try {
        if (caret == std::string::npos) {
            return Field(static_cast<uint32_t>(std::stoul(spec)), 1);
        }
        uint32_t p = static_cast<uint32_t>(std::stoul(spec.substr(0, caret)));
        uint32_t m = static_cast<uint32_t>(std::stoul(spec.substr(caret + 1)));
        return Field(p, m);
    } catch (const std::invalid_argument&) {
        raise(ErrorCode::BadInput, "cannot parse field spec: " + spec);
    } catch (const std::out_of_range&) {
        raise(ErrorCode::BadInput, "cannot parse field spec: " + spec);
    }
}

namespace {
void check_same_field(const Field& a, const Field& b) {
    if (!a.same(b)) raise(ErrorCode::MismatchedField, "operands live in different fields");
}
} // namespace

FieldElement FieldElement::operator+(const FieldElement& o) const {
    check_same_field(field_, o.field_);
    return FieldElement(field_, field_.add(code_, o.code_));
}
FieldElement FieldElement::operator-(const FieldElement& o) const {
    check_same_field(field_, o.field_);
    return FieldElement(field_, field_.sub(code_, o.code_));
}
FieldElement FieldElement::operator*(const FieldElement& o) const {
    check_same_field(field_, o.field_);
    return FieldElement(field_, field_.mul(code_, o.code_));
}
FieldElement FieldElement::operator/(const FieldElement& o) const {
    check_same_field(field_, o.field_);
    return FieldElement(field_, field_.div(code_, o.code_));
}
FieldElement FieldElement::operator-() const { return FieldElement(field_, field_.neg(code_)); }
bool FieldElement::operator==(const FieldElement& o) const {
    check_same_field(field_, o.field_);
    return code_ == o.code_;
}

Basis::Basis(const Field& field, const std::vector<uint32_t>& element_codes)
    : field_(field), codes_(element_codes) {
    const uint32_t m = field.degree();
    const uint32_t p = field.characteristic();
    if (codes_.size() != m) raise(ErrorCode::SingularBasis, "basis must have m elements");
    // Columns are the polynomial-basis coefficient vectors.
    PMat cols(m, PVec(m, 0));
    for (uint32_t j = 0; j < m; ++j) {
        if (codes_[j] >= field.order()) raise(ErrorCode::BadInput, "basis element out of range");
        for (uint32_t i = 0; i < m; ++i) cols[i][j] = field.coeff(codes_[j], i);
    }
    if (!p_invert(cols, p, inv_coeff_matrix_))
        raise(ErrorCode::SingularBasis, "basis elements are linearly dependent over F_p");
}

Basis Basis::polynomial(const Field& field) {
    if (field.degree() == 1) return Basis(field, {1});
    std::vector<uint32_t> codes(field.degree());
    uint32_t power = 1;
    for (uint32_t i = 0; i < field.degree(); ++i) {
        codes[i] = power;
        power = field.mul(power, field.alpha().code());
    }
    return Basis(field, codes);
}

Basis Basis::dual() const {
    const uint32_t m = field_.degree();
    const uint32_t p = field_.characteristic();
    // Gram matrix of the trace form, T_ij = Tr(b_i b_j).
    PMat gram(m, PVec(m, 0));
    for (uint32_t i = 0; i < m; ++i)
        for (uint32_t j = 0; j < m; ++j)
            gram[i][j] = field_.trace(field_.mul(codes_[i], codes_[j]));
    PMat gram_inv;
    if (!p_invert(gram, p, gram_inv))
        raise(ErrorCode::SingularBasis, "trace form is singular on the given elements");
    // dual_j = sum_k (T^-1)_{jk} b_k  satisfies Tr(b_i dual_j) = delta_ij.
    std::vector<uint32_t> dual_codes(m, 0);
    for (uint32_t j = 0; j < m; ++j) {
        uint32_t acc = 0;
        for (uint32_t k = 0; k < m; ++k) {
            uint32_t scaled = field_.mul(gram_inv[j][k] % p, codes_[k]);
            acc = field_.add(acc, scaled);
        }
        dual_codes[j] = acc;
    }
    return Basis(field_, dual_codes);
}

std::vector<uint32_t> Basis::expand(uint32_t code) const {
    const uint32_t m = field_.degree();
    const uint32_t p = field_.characteristic();
    std::vector<uint32_t> rhs(m);
    for (uint32_t i = 0; i < m; ++i) rhs[i] = field_.coeff(code, i);
    std::vector<uint32_t> out(m, 0);
    for (uint32_t i = 0; i < m; ++i) {
        uint64_t acc = 0;
        for (uint32_t j = 0; j < m; ++j) acc += static_cast<uint64_t>(inv_coeff_matrix_[i][j]) * rhs[j];
        out[i] = static_cast<uint32_t>(acc % p);
    }
    return out;
}

uint32_t Basis::combine(const std::vector<uint32_t>& coeffs) const {
    if (coeffs.size() != codes_.size()) raise(ErrorCode::BadInput, "coefficient vector has wrong length");
    uint32_t acc = 0;
    for (uint32_t j = 0; j < codes_.size(); ++j) {
        uint32_t c = coeffs[j] % field_.characteristic();
        acc = field_.add(acc, field_.mul(c, codes_[j]));
    }
    return acc;
}

} // namespace ccpair
