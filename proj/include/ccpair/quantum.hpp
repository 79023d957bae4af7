#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "ccpair/channel.hpp"
#include "ccpair/conjugate_pair.hpp"
#include "ccpair/linear_code.hpp"
#include "ccpair/symplectic.hpp"

namespace ccpair {

using Complex = std::complex<double>;

// Dimension caps for the exact simulator. Dense only: the simulator is a
// verification oracle, not a performance artifact.
struct SimLimits {
    uint64_t max_state_dim = 1ull << 14;   // q^n for state vectors
    uint64_t max_density_dim = 1ull << 12; // q^n for density operators / bases
    uint64_t max_kraus = 1ull << 12;       // Kraus list length for entropy exchange
    uint64_t max_channel_support = 1ull << 20;
};

constexpr double kSimTol = 1e-9;

// Exact amplitudes over the q^n-dimensional space, basis indexed by words of
// F_q^n (big-endian base-q integer). Requires a prime field: for extension
// fields, expand the pair to the prime alphabet first.
class StateVector {
public:
    StateVector(const Field& field, size_t n, const SimLimits& limits = {});
    static StateVector computational(const Field& field, size_t n, const Word& basis_word,
                                     const SimLimits& limits = {});

    const Field& field() const { return field_; }
    size_t n() const { return n_; }
    uint64_t dim() const { return amps_.size(); }
    Complex amp(uint64_t idx) const { return amps_[idx]; }
    void set_amp(uint64_t idx, Complex a) { amps_[idx] = a; }
    const std::vector<Complex>& amps() const { return amps_; }
    std::vector<Complex>& amps() { return amps_; }

    double norm() const;
    // <this|other>
    Complex inner(const StateVector& other) const;

private:
    Field field_;
    size_t n_;
    std::vector<Complex> amps_;
};

// A Hermitian, unit-trace, PSD operator on the q^n-dimensional space.
class DensityOperator {
public:
    DensityOperator(const Field& field, size_t n, Eigen::MatrixXcd mat,
                    const SimLimits& limits = {});
    static DensityOperator from_state(const StateVector& s, const SimLimits& limits = {});

    const Field& field() const { return field_; }
    size_t n() const { return n_; }
    const Eigen::MatrixXcd& mat() const { return mat_; }

    // Hermitian within 1e-9, trace 1 within 1e-9, eigenvalues >= -1e-9.
    void validate() const;

private:
    Field field_;
    size_t n_;
    Eigen::MatrixXcd mat_;
};

// Weyl labels are symplectic vectors: N_[u,w] = X^u Z^w with
// X|j> = |j-1>, Z|j> = omega^j |j>, omega = exp(2*pi*i/q).
using WeylLabel = SympVector;

// The action of N_[u,w] as a generalized permutation:
// out[perm[j]] = phase[j] * in[j].
struct WeylAction {
    std::vector<uint32_t> perm;
    std::vector<Complex> phase;
};
WeylAction weyl_action(const Field& field, size_t n, const WeylLabel& label);

StateVector weyl_apply(const StateVector& s, const WeylLabel& label, bool adjoint = false,
                       const SimLimits& limits = {});

// Dense matrix of N_[u,w]; sized for small n only.
Eigen::MatrixXcd weyl_matrix(const Field& field, size_t n, const WeylLabel& label,
                             const SimLimits& limits = {});

// Verifies N_a N_b = omega^{f_sp(a,b)} N_b N_a as matrices (columnwise, to
// 1e-9) and returns the exponent. PhaseMismatch signals an implementation
// bug; it doubles as a self test of the Weyl machinery.
uint32_t commutation_check(const WeylLabel& a, const WeylLabel& b, const SimLimits& limits = {});

// |phi_xzv> = |dual(C2)|^{-1/2} sum_{w in dual(C2)} omega^{z.w} |x+v+w>.
StateVector encoded_state(const ConjugatePair& pair, const Word& x, const Word& z, const Word& v,
                          const SimLimits& limits = {});

// The encoded basis over complete transversals: x runs over the coset
// leaders of F^n/C1 (table t1), z over those of F^n/C2 (t2), v over the
// message representatives. The q^n states form an orthonormal basis; states
// with equal (x,z) span the code space Q_xz.
class CssBasis {
public:
    CssBasis(const ConjugatePair& pair, const SyndromeTable& t1, const SyndromeTable& t2,
             const SimLimits& limits = {});

    const ConjugatePair& pair() const { return pair_; }
    const SyndromeTable& t1() const { return t1_; }
    const SyndromeTable& t2() const { return t2_; }
    const Field& field() const { return pair_.field(); }
    size_t n() const { return pair_.n(); }
    uint64_t dim() const { return dim_; }

    size_t x_count() const { return t1_.leaders().size(); }
    size_t z_count() const { return t2_.leaders().size(); }
    size_t v_count() const { return vs_.size(); }

    const Word& x_rep(size_t xi) const { return t1_.leaders()[xi]; }
    const Word& z_rep(size_t zi) const { return t2_.leaders()[zi]; }
    const Word& v_rep(size_t vi) const { return vs_[vi]; }

    const StateVector& state(size_t xi, size_t zi, size_t vi) const;
    // Validates that (x, z, v) are the canonical representatives
    // (NotRepresentative otherwise) and returns the stored state.
    const StateVector& state_for(const Word& x, const Word& z, const Word& v) const;

    // Stabilizer generator exponents of an eigenstate: (x.h_j) for the Z-type
    // checks and (z.g_j) for the X-type checks. EigenvalueMismatch when the
    // state is not a simultaneous eigenvector within 1e-9.
    struct Syndrome {
        std::vector<uint32_t> z_checks; // from Zbar_{h_j}, h_j basis of dual(C1)
        std::vector<uint32_t> x_checks; // from Xbar_{g_j}, g_j basis of dual(C2)
        uint64_t x_index = 0;           // index of the measured x-coset
        uint64_t z_index = 0;
    };
    Syndrome measure_syndrome(const StateVector& s) const;

private:
    ConjugatePair pair_;
    SyndromeTable t1_, t2_;
    std::vector<Word> vs_;
    uint64_t dim_;
    std::vector<StateVector> states_; // [xi][zi][vi] flattened
};

// Verifies both eigenvalue relations for an encoded state against the claimed
// representatives and returns the exponent vectors. EigenvalueMismatch on any
// violation beyond 1e-9.
CssBasis::Syndrome stabilizer_check(const CssBasis& basis, const StateVector& s, const Word& x,
                                    const Word& z);

// Both sides of the Shor-Preskill mixture identity: the z-average of encoded
// states equals the classical mixture over the dual-codeword coset.
// MixtureMismatch if they differ anywhere beyond 1e-9.
struct MixtureResult {
    DensityOperator op;
    double max_entry_diff;
};
MixtureResult sp_mixture(const ConjugatePair& pair, const SyndromeTable& t2, const Word& x,
                         const Word& v, const SimLimits& limits = {});

// Syndrome-extraction recovery targeting Q_{xz}: measures both syndromes,
// applies the inverse of the coset-leader Weyl correction. Exact (up to
// global phase) on any error in K(Gamma1', Gamma2').
StateVector recover(const CssBasis& basis, const StateVector& noisy, size_t xi, size_t zi);

// The same map on density operators, as the full Kraus sum.
DensityOperator recover_density(const CssBasis& basis, const DensityOperator& rho, size_t xi,
                                size_t zi, const SimLimits& limits = {});

// Kraus operators of the recovery channel for target (xi, zi): one per
// measured syndrome pair, K_s = N_c(s)^dagger Pi_s.
std::vector<Eigen::MatrixXcd> recovery_kraus(const CssBasis& basis, size_t xi, size_t zi,
                                             const SimLimits& limits = {});

// Kraus operators {sqrt(P(e)) N_e} of a Pauli channel.
std::vector<Eigen::MatrixXcd> channel_kraus(const PauliChannel& channel,
                                            const SimLimits& limits = {});

// Entanglement fidelity F_e(pi_Qxz, R o A) for a Pauli channel A and the
// syndrome-table recovery R, computed exactly from amplitudes.
double entanglement_fidelity(const CssBasis& basis, size_t xi, size_t zi,
                             const PauliChannel& channel, const SimLimits& limits = {});

// Uniform average over all syndrome pairs (x, z).
double average_entanglement_fidelity(const CssBasis& basis, const PauliChannel& channel,
                                     const SimLimits& limits = {});

// F_e(rho, channel) = sum_i |Tr(rho K_i)|^2 for an explicit Kraus list.
double entanglement_fidelity_kraus(const DensityOperator& rho,
                                   const std::vector<Eigen::MatrixXcd>& kraus);

// Entropy exchange S_e = -Tr W log2 W, W_ij = Tr(K_i rho K_j^dagger), in
// bits. The Kraus list must be trace preserving on rho's space.
double entropy_exchange(const DensityOperator& rho, const std::vector<Eigen::MatrixXcd>& kraus,
                        const SimLimits& limits = {});

// Knill-Laflamme conditions on Q_xz for an explicit error set:
// <phi_a| N_e^dag N_e' |phi_b> = lambda_{e,e'} delta_ab. This is the
// simulator-side oracle for correctable_error_set.
bool knill_laflamme_correctable(const CssBasis& basis, size_t xi, size_t zi,
                                const std::vector<SympVector>& errors, double tol = kSimTol);

} // namespace ccpair
