#pragma once

#include <optional>
#include <string>

#include "ccpair/quantum.hpp"

namespace ccpair {

// h2(t) in bits, with the 0 log 0 = 0 convention.
double binary_entropy(double t);

struct WilsonInterval {
    double low = 0.0;
    double high = 1.0;
};
// 95% by default (z = 1.95996...).
WilsonInterval wilson_interval(uint64_t successes, uint64_t trials,
                               double z = 1.959963984540054);

// The quantum-Fano leakage budget: h2(F) + (1-F) * 2nR * log2(q) bits, with
// R the rate in log_q units (k/n). Also reports the -2t log2 t overestimate
// of h2(t) for t = 1-F <= 1/2, the step used to make the bound exponential.
struct LeakageBound {
    double bits = 0.0;
    double h2_term = 0.0;
    double rate_term = 0.0;
    std::optional<double> overestimate_bits; // set when 1-F <= 1/2
};
LeakageBound leakage_bound(double fidelity, size_t n, double rate_log_q, uint32_t q);

enum class XDistribution {
    PointMassZero, // the best-fixed-x choice for a known channel
    Uniform,       // uniform over the coset representatives of F^n/C1
};

// The conjugate-code cryptographic scheme: a pair with complete leader
// tables for both codes, message transversal, and the x-randomness policy.
class SchemeInstance {
public:
    explicit SchemeInstance(const ConjugatePair& pair,
                            XDistribution x_dist = XDistribution::PointMassZero,
                            uint64_t max_table_size = SyndromeTable::kDefaultMaxTable);

    const ConjugatePair& pair() const { return pair_; }
    const SyndromeTable& t1() const { return t1_; }
    const SyndromeTable& t2() const { return t2_; }
    const Field& field() const { return pair_.field(); }
    size_t n() const { return pair_.n(); }
    size_t k() const { return pair_.k(); }
    XDistribution x_dist() const { return x_dist_; }
    double rate_log_q() const { return static_cast<double>(k()) / static_cast<double>(n()); }

    const std::vector<Word>& messages() const { return pair_.message_representatives(); }

    struct Encryption {
        Word x;           // shared coset randomness
        Word dual_word;   // w drawn uniformly from dual(C2)
        Word transmitted; // w + v + x
    };
    // InvalidMessage unless v is a canonical message representative.
    Encryption encrypt(const Word& v, CounterRng& rng) const;

    // Decodes in the coset code x + C1 and canonicalizes modulo dual(C2).
    Word decrypt(const Word& x, const Word& received) const;

private:
    ConjugatePair pair_;
    SyndromeTable t1_, t2_;
    XDistribution x_dist_;
};

struct ErrorProbabilities {
    double p_xi_out = 0.0;   // Pr{ xi not in Gamma1' }
    double p_zeta_out = 0.0; // Pr{ zeta not in Gamma2' }
};
// Exact marginal failure probabilities by enumeration.
ErrorProbabilities error_probabilities(const SchemeInstance& s, const PauliChannel& channel,
                                       const SimLimits& limits = {});

// P_A(K(Gamma1',Gamma2')^c): exact joint enumeration of the channel support.
double pa_outside_enlarged(const SchemeInstance& s, const PauliChannel& channel,
                           const SimLimits& limits = {});

struct FidelityAccounting {
    double one_minus_ef = 0.0; // 1 - E F_{xz}, exact, uniform (x,z) average
    double pa_out = 0.0;       // P_A(K'^c), classical enumeration
    double split_bound = 0.0;  // p_xi_out + p_zeta_out
    double p_xi_out = 0.0;
    double p_zeta_out = 0.0;
};
// Checks the accounting identities: |(1-EF) - P_A(K'^c)| <= 1e-9 must hold
// with complete leader tables (EqualityViolation otherwise), and both sit
// under the split bound.
FidelityAccounting fidelity_accounting(const SchemeInstance& s, const PauliChannel& channel,
                                       const SimLimits& limits = {});

struct EntropyLeakage {
    double entropy_exchange_bits = 0.0;
    double fidelity = 1.0;
    double fano_bound_bits = 0.0;
};
// S_e and F of the composed channel (recovery after noise) on pi_{Q_xz},
// with the Fano bound h2(F) + (1-F) 2nR log2 q. EqualityViolation if the
// bound fails beyond 1e-9.
EntropyLeakage entropy_exchange_leakage(const SchemeInstance& s,
                                        const std::vector<Eigen::MatrixXcd>& channel_kraus_list,
                                        size_t xi, size_t zi, const SimLimits& limits = {});
EntropyLeakage entropy_exchange_leakage(const SchemeInstance& s, const PauliChannel& channel,
                                        size_t xi, size_t zi, const SimLimits& limits = {});

// One Monte Carlo run of the classical scheme. All derived exact quantities
// are included when enumerable (null otherwise).
struct SimulationReport {
    size_t n = 0;
    size_t k = 0;
    std::string q; // field spec, e.g. "2^1"
    uint64_t trials = 0;
    uint64_t seed = 0;
    double error_rate = 0.0;
    double ci_low = 0.0;
    double ci_high = 0.0;
    std::optional<double> p_xi_out;
    std::optional<double> p_zeta_out;
    std::optional<double> fidelity_gap; // 1 - EF = P_A(K'^c), classical route
    std::optional<double> leakage_bound_bits;

    std::string to_json() const; // fixed field order, byte-stable per seed
    static std::string csv_header();
    std::string to_csv_row() const;
};

// encrypt -> sample X-part error -> decrypt, `trials` times. Deterministic
// for a fixed seed; trial i draws from the seed's unit-i substream, so shards
// merge by summation.
SimulationReport simulate(const SchemeInstance& s, const PauliChannel& channel, uint64_t trials,
                          uint64_t seed, const SimLimits& limits = {});

} // namespace ccpair
