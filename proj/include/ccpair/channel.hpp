#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "ccpair/philox.hpp"
#include "ccpair/symplectic.hpp"

namespace ccpair {

// A probability distribution over Weyl labels [u,w] on n symbols. Two forms:
// i.i.d. with a per-symbol table over (u,w) in F_q x F_q, or an explicit
// joint support list. Probabilities are validated to be nonnegative and sum
// to one within 1e-12.
class PauliChannel {
public:
    // symbol_probs has q*q entries indexed u*q + w.
    static PauliChannel iid(const Field& field, size_t n, std::vector<double> symbol_probs);
    static PauliChannel from_support(const Field& field, size_t n,
                                     std::vector<std::pair<SympVector, double>> support);

    const Field& field() const { return field_; }
    size_t n() const { return n_; }
    bool is_iid() const { return iid_; }

    // Number of labels with nonzero probability.
    uint64_t support_size() const;

    // Visits every (label, probability) of the support. For i.i.d. channels
    // this expands the product distribution.
    void for_each(const std::function<void(const SympVector&, double)>& visit) const;

    // Per-symbol marginals of the X part (xi) and Z part (zeta); i.i.d. only.
    std::vector<double> x_symbol_marginal() const;
    std::vector<double> z_symbol_marginal() const;

    SympVector sample(CounterRng& rng) const;
    // Sample only the X-part error pattern (what the classical decoder sees).
    Word sample_x(CounterRng& rng) const;

private:
    PauliChannel(const Field& field, size_t n) : field_(field), n_(n) {}

    Field field_;
    size_t n_;
    bool iid_ = true;
    std::vector<double> symbol_probs_;                       // iid mode
    std::vector<std::pair<SympVector, double>> support_;     // joint mode
};

// Channel families exposed on the CLI. All are Weyl-covariant by
// construction: conjugation by any Weyl operator permutes the error labels
// without changing their probabilities.
struct ChannelSpec {
    enum class Kind { Depolarizing, IndependentXZ, Custom };

    Kind kind = Kind::Depolarizing;
    double p = 0.0;            // depolarizing strength
    double px = 0.0, pz = 0.0; // independent-XZ strengths
    std::vector<double> custom_symbol_probs; // q*q table for Kind::Custom

    // i.i.d. per-symbol channel over n symbols.
    PauliChannel to_channel(const Field& field, size_t n) const;

    // "depolarizing:0.05", "independent-xz:0.01,0.02", "custom:<path>".
    static ChannelSpec parse(const std::string& text);
    std::string describe() const;
};

} // namespace ccpair
