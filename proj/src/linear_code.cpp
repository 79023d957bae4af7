#include "ccpair/linear_code.hpp"

#include <algorithm>

namespace ccpair {

LinearCode::LinearCode(const Field& field, size_t n, const Matrix& generators)
    : field_(field), n_(n), gen_(field, 0, n) {
    if (generators.cols() != n) raise(ErrorCode::LengthMismatch, "generator width differs from n");
    Matrix r = generators;
    RrefResult rr = r.rref();
    gen_ = r.nonzero_rows();
    if (gen_.rows() == 0) gen_ = Matrix(field, 0, n);
    pivots_ = rr.pivots;
}

LinearCode LinearCode::full_space(const Field& field, size_t n) {
    Matrix id(field, n, n);
    for (size_t i = 0; i < n; ++i) id.set(i, i, 1);
    return LinearCode(field, n, id);
}

LinearCode LinearCode::zero_code(const Field& field, size_t n) {
    return LinearCode(field, n, Matrix(field, 0, n));
}

LinearCode LinearCode::dual() const {
    // dual(C) = kernel of the generator matrix.
    return LinearCode(field_, n_, gen_.kernel());
}

bool LinearCode::contains(const Word& w) const {
    if (w.size() != n_) raise(ErrorCode::LengthMismatch, "word length differs from n");
    if (!w.field().same(field_)) raise(ErrorCode::MismatchedField, "word in wrong field");
    // Reduce against the RREF rows; member iff the residual vanishes.
    Word r = w;
    for (size_t i = 0; i < gen_.rows(); ++i) {
        uint32_t c = r.code(pivots_[i]);
        if (c != 0) r = r - gen_.row(i).scaled(c);
    }
    return r.is_zero();
}

Word LinearCode::encode(const Word& message) const {
    if (message.size() != k()) raise(ErrorCode::LengthMismatch, "message length differs from k");
    Word out(field_, n_);
    for (size_t r = 0; r < gen_.rows(); ++r) {
        uint32_t c = message.code(r);
        if (c != 0) out = out + gen_.row(r).scaled(c);
    }
    return out;
}

Word LinearCode::codeword(uint64_t message_index) const {
    return encode(Word::from_index(field_, k(), message_index));
}

std::optional<uint64_t> LinearCode::codeword_count() const {
    uint64_t count = 1;
    for (size_t i = 0; i < k(); ++i) {
        if (count > (1ull << 63) / field_.order()) return std::nullopt;
        count *= field_.order();
    }
    return count;
}

std::optional<size_t> LinearCode::min_distance(uint64_t enumeration_cap) const {
    if (k() == 0) return std::nullopt;
    auto count = codeword_count();
    if (!count || *count > enumeration_cap) return std::nullopt;
    size_t best = n_ + 1;
    for (uint64_t i = 1; i < *count; ++i) best = std::min(best, codeword(i).weight());
    return best;
}

bool is_subcode(const LinearCode& b, const LinearCode& c) {
    if (b.n() != c.n()) raise(ErrorCode::LengthMismatch, "codes have different lengths");
    if (!b.field().same(c.field())) raise(ErrorCode::MismatchedField, "codes over different fields");
    for (size_t r = 0; r < b.k(); ++r)
        if (!c.contains(b.generator().row(r))) return false;
    return true;
}

bool enumerate_weight_lex(const Field& field, size_t n,
                          const std::function<bool(const Word&)>& visit) {
    Word w(field, n);
    const uint32_t q = field.order();
    // Fix the weight, then emit words of that weight in lex order: at each
    // position zero sorts before every nonzero value.
    for (size_t target = 0; target <= n; ++target) {
        std::function<bool(size_t, size_t)> rec = [&](size_t pos, size_t remaining) -> bool {
            if (remaining > n - pos) return false; // cannot place the rest
            if (pos == n) return visit(w);
            if (remaining < n - pos) {
                w.set(pos, 0);
                if (rec(pos + 1, remaining)) return true;
            }
            if (remaining > 0) {
                for (uint32_t v = 1; v < q; ++v) {
                    w.set(pos, v);
                    if (rec(pos + 1, remaining - 1)) return true;
                }
            }
            w.set(pos, 0);
            return false;
        };
        if (rec(0, target)) return true;
    }
    return false;
}

void enumerate_all(const Field& field, size_t n, const std::function<void(const Word&)>& visit) {
    uint64_t total = 1;
    for (size_t i = 0; i < n; ++i) total *= field.order();
    for (uint64_t idx = 0; idx < total; ++idx) visit(Word::from_index(field, n, idx));
}

SyndromeTable::SyndromeTable(const LinearCode& code, uint64_t max_table_size)
    : code_(code), parity_(code.dual().generator()) {
    const uint32_t q = code.field().order();
    const size_t redundancy = code.n() - code.k();
    uint64_t table = 1;
    for (size_t i = 0; i < redundancy; ++i) {
        table *= q; // q <= 2^16 and the cap is checked each step, so no overflow
        if (table > max_table_size)
            raise(ErrorCode::TooLarge, "syndrome table would need q^(n-k) = " +
                                           std::to_string(q) + "^" + std::to_string(redundancy) +
                                           " entries (cap " + std::to_string(max_table_size) + ")");
    }

    leaders_.assign(table, Word(code.field(), code.n()));
    std::vector<bool> seen(table, false);
    uint64_t found = 0;
    // First visit in (weight, lex) order wins: that is exactly the canonical
    // leader rule.
    enumerate_weight_lex(code.field(), code.n(), [&](const Word& w) {
        uint64_t s = syndrome(w).index();
        if (!seen[s]) {
            seen[s] = true;
            leaders_[s] = w;
            ++found;
        }
        return found == table;
    });
}

Word decode_coset(const LinearCode& code, const Word& shift, const Word& received,
                  const SyndromeTable& table) {
    if (!(table.code() == code))
        raise(ErrorCode::BadInput, "syndrome table was built for a different code");
    const Word& leader = table.leader_for(received - shift);
    return received - leader;
}

} // namespace ccpair
