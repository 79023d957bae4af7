#include "ccpair/quantum.hpp"

#include <algorithm>
#include <cmath>

namespace ccpair {

namespace {

constexpr double kPi = 3.14159265358979323846;

void require_prime_field(const Field& f) {
    if (!f.prime_field())
        raise(ErrorCode::BadInput,
              "quantum simulation works over prime alphabets; expand the pair to GF(p) first");
}

uint64_t checked_dim(const Field& f, size_t n, uint64_t cap, const char* what) {
    uint64_t dim = 1;
    for (size_t i = 0; i < n; ++i) {
        dim *= f.order();
        if (dim > cap)
            raise(ErrorCode::TooLarge, std::string(what) + ": q^n exceeds cap " + std::to_string(cap));
    }
    return dim;
}

std::vector<Complex> omega_powers(uint32_t q) {
    std::vector<Complex> w(q);
    for (uint32_t t = 0; t < q; ++t) w[t] = std::polar(1.0, 2.0 * kPi * t / q);
    return w;
}

// Base-q digit odometer in big-endian index order.
struct Odometer {
    explicit Odometer(uint32_t q, size_t n) : q(q), digits(n, 0) {}
    uint32_t q;
    std::vector<uint32_t> digits;
    bool advance() {
        size_t i = digits.size();
        while (i > 0) {
            if (++digits[i - 1] < q) return true;
            digits[i - 1] = 0;
            --i;
        }
        return false;
    }
};

std::vector<uint32_t> index_digits(uint64_t idx, size_t len, uint32_t q) {
    std::vector<uint32_t> d(len, 0);
    for (size_t i = len; i > 0; --i) {
        d[i - 1] = static_cast<uint32_t>(idx % q);
        idx /= q;
    }
    return d;
}

uint64_t digits_index(const std::vector<uint32_t>& d, uint32_t q) {
    uint64_t idx = 0;
    for (uint32_t v : d) idx = idx * q + v;
    return idx;
}

} // namespace

StateVector::StateVector(const Field& field, size_t n, const SimLimits& limits)
    : field_(field), n_(n) {
    require_prime_field(field);
    amps_.assign(checked_dim(field, n, limits.max_state_dim, "state vector"), Complex(0, 0));
}

StateVector StateVector::computational(const Field& field, size_t n, const Word& basis_word,
                                       const SimLimits& limits) {
    StateVector s(field, n, limits);
    s.amps_[basis_word.index()] = Complex(1, 0);
    return s;
}

double StateVector::norm() const {
    double acc = 0.0;
    for (const Complex& a : amps_) acc += std::norm(a);
    return std::sqrt(acc);
}

Complex StateVector::inner(const StateVector& other) const {
    if (dim() != other.dim()) raise(ErrorCode::LengthMismatch, "state dimensions differ");
    Complex acc(0, 0);
    for (uint64_t i = 0; i < dim(); ++i) acc += std::conj(amps_[i]) * other.amps_[i];
    return acc;
}

DensityOperator::DensityOperator(const Field& field, size_t n, Eigen::MatrixXcd mat,
                                 const SimLimits& limits)
    : field_(field), n_(n), mat_(std::move(mat)) {
    require_prime_field(field);
    uint64_t dim = checked_dim(field, n, limits.max_density_dim, "density operator");
    if (static_cast<uint64_t>(mat_.rows()) != dim || static_cast<uint64_t>(mat_.cols()) != dim)
        raise(ErrorCode::LengthMismatch, "density matrix has wrong dimensions");
}

DensityOperator DensityOperator::from_state(const StateVector& s, const SimLimits& limits) {
    Eigen::VectorXcd v(s.dim());
    for (uint64_t i = 0; i < s.dim(); ++i) v(static_cast<Eigen::Index>(i)) = s.amp(i);
    return DensityOperator(s.field(), s.n(), v * v.adjoint(), limits);
}

void DensityOperator::validate() const {
    double herm = (mat_ - mat_.adjoint()).cwiseAbs().maxCoeff();
    if (herm > kSimTol) raise(ErrorCode::DomainError, "density operator is not Hermitian");
    if (std::abs(mat_.trace().real() - 1.0) > kSimTol || std::abs(mat_.trace().imag()) > kSimTol)
        raise(ErrorCode::DomainError, "density operator trace differs from 1");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(mat_, Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < -kSimTol)
        raise(ErrorCode::DomainError, "density operator has a negative eigenvalue");
}

WeylAction weyl_action(const Field& field, size_t n, const WeylLabel& label) {
    require_prime_field(field);
    if (label.n() != n) raise(ErrorCode::LengthMismatch, "label length differs from n");
    const uint32_t q = field.order();
    uint64_t dim = 1;
    for (size_t i = 0; i < n; ++i) dim *= q;
    auto omega = omega_powers(q);

    WeylAction act;
    act.perm.resize(dim);
    act.phase.resize(dim);
    Odometer od(q, n);
    uint64_t j = 0;
    do {
        // X^u sends |j> to |j-u>; Z^w contributes omega^{w.j} first.
        uint64_t shifted = 0;
        uint32_t dot = 0;
        for (size_t i = 0; i < n; ++i) {
            uint32_t d = od.digits[i];
            shifted = shifted * q + field.sub(d, label.u_code(i));
            dot = field.add(dot, field.mul(label.w_code(i), d));
        }
        act.perm[j] = static_cast<uint32_t>(shifted);
        act.phase[j] = omega[dot];
        ++j;
    } while (od.advance());
    return act;
}

StateVector weyl_apply(const StateVector& s, const WeylLabel& label, bool adjoint,
                       const SimLimits& limits) {
    if (label.n() != s.n()) raise(ErrorCode::LengthMismatch, "label length differs from n");
    checked_dim(s.field(), s.n(), limits.max_state_dim, "weyl apply");
    StateVector out(s.field(), s.n(), limits);
    if (!adjoint) {
        WeylAction act = weyl_action(s.field(), s.n(), label);
        for (uint64_t j = 0; j < s.dim(); ++j) out.amps()[act.perm[j]] = act.phase[j] * s.amp(j);
        return out;
    }
    // (X^u Z^w)^dagger = omega^{-w.u} X^{-u} Z^{-w}.
    const Field& f = s.field();
    SympVector neg(f, s.n());
    uint32_t wu = 0;
    for (size_t i = 0; i < s.n(); ++i) {
        neg.set_u(i, f.neg(label.u_code(i)));
        neg.set_w(i, f.neg(label.w_code(i)));
        wu = f.add(wu, f.mul(label.w_code(i), label.u_code(i)));
    }
    Complex global = std::polar(1.0, -2.0 * kPi * wu / f.order());
    WeylAction act = weyl_action(f, s.n(), neg);
    for (uint64_t j = 0; j < s.dim(); ++j)
        out.amps()[act.perm[j]] = global * act.phase[j] * s.amp(j);
    return out;
}

Eigen::MatrixXcd weyl_matrix(const Field& field, size_t n, const WeylLabel& label,
                             const SimLimits& limits) {
    uint64_t dim = checked_dim(field, n, limits.max_density_dim, "weyl matrix");
    WeylAction act = weyl_action(field, n, label);
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(dim),
                                                static_cast<Eigen::Index>(dim));
    for (uint64_t j = 0; j < dim; ++j)
        m(static_cast<Eigen::Index>(act.perm[j]), static_cast<Eigen::Index>(j)) = act.phase[j];
    return m;
}

uint32_t commutation_check(const WeylLabel& a, const WeylLabel& b, const SimLimits& limits) {
    if (a.n() != b.n()) raise(ErrorCode::LengthMismatch, "labels have different lengths");
    const Field& f = a.field();
    require_prime_field(f);
    checked_dim(f, a.n(), std::min<uint64_t>(limits.max_state_dim, 1u << 10), "commutation check");
    uint32_t expo = symp_form(a, b).code();
    auto omega = omega_powers(f.order());

    WeylAction na = weyl_action(f, a.n(), a);
    WeylAction nb = weyl_action(f, b.n(), b);
    uint64_t dim = na.perm.size();
    for (uint64_t j = 0; j < dim; ++j) {
        // Column j of N_a N_b vs omega^expo times column j of N_b N_a.
        uint32_t lhs_row = na.perm[nb.perm[j]];
        Complex lhs = nb.phase[j] * na.phase[nb.perm[j]];
        uint32_t rhs_row = nb.perm[na.perm[j]];
        Complex rhs = omega[expo] * na.phase[j] * nb.phase[na.perm[j]];
        if (lhs_row != rhs_row || std::abs(lhs - rhs) > kSimTol)
            raise(ErrorCode::PhaseMismatch,
                  "Weyl commutation relation violated; simulator self-test failed");
    }
    return expo;
}

StateVector encoded_state(const ConjugatePair& pair, const Word& x, const Word& z, const Word& v,
                          const SimLimits& limits) {
    const Field& f = pair.field();
    require_prime_field(f);
    if (x.size() != pair.n() || z.size() != pair.n() || v.size() != pair.n())
        raise(ErrorCode::LengthMismatch, "x, z, v must have length n");
    StateVector s(f, pair.n(), limits);
    const LinearCode& dual2 = pair.c2_dual();
    uint64_t count = *dual2.codeword_count();
    double amp = 1.0 / std::sqrt(static_cast<double>(count));
    Word base = x + v;
    for (uint64_t i = 0; i < count; ++i) {
        Word w = dual2.codeword(i);
        uint32_t phase = z.dot(w).code();
        s.set_amp((base + w).index(), std::polar(amp, 2.0 * kPi * phase / f.order()));
    }
    return s;
}

CssBasis::CssBasis(const ConjugatePair& pair, const SyndromeTable& t1, const SyndromeTable& t2,
                   const SimLimits& limits)
    : pair_(pair), t1_(t1), t2_(t2), vs_(pair.message_representatives()) {
    require_prime_field(pair.field());
    if (!(t1.code() == pair.c1()) || !(t2.code() == pair.c2()))
        raise(ErrorCode::BadInput, "tables must decode C1 and C2 of the pair");
    dim_ = checked_dim(pair.field(), pair.n(), limits.max_density_dim, "encoded basis");
    states_.reserve(dim_);
    for (const Word& x : t1_.leaders())
        for (const Word& z : t2_.leaders())
            for (const Word& v : vs_) states_.push_back(encoded_state(pair_, x, z, v, limits));
}

const StateVector& CssBasis::state(size_t xi, size_t zi, size_t vi) const {
    return states_[(xi * z_count() + zi) * v_count() + vi];
}

const StateVector& CssBasis::state_for(const Word& x, const Word& z, const Word& v) const {
    uint64_t xi = t1_.syndrome(x).index();
    if (!(t1_.leaders()[xi] == x))
        raise(ErrorCode::NotRepresentative, "x is not the canonical coset representative");
    uint64_t zi = t2_.syndrome(z).index();
    if (!(t2_.leaders()[zi] == z))
        raise(ErrorCode::NotRepresentative, "z is not the canonical coset representative");
    size_t vi = pair_.message_index(v);
    if (!(vs_[vi] == v))
        raise(ErrorCode::NotRepresentative, "v is not the canonical message representative");
    return state(xi, zi, vi);
}

namespace {

// Eigenphase exponent of a Weyl generator on an eigenstate, by comparing the
// transformed amplitudes against the originals.
uint32_t eigenphase_exponent(const StateVector& s, const StateVector& transformed) {
    const uint32_t q = s.field().order();
    // Largest amplitude gives the most stable phase ratio.
    uint64_t best = 0;
    double best_mag = 0.0;
    for (uint64_t i = 0; i < s.dim(); ++i) {
        double m = std::abs(s.amp(i));
        if (m > best_mag) {
            best_mag = m;
            best = i;
        }
    }
    if (best_mag < kSimTol)
        raise(ErrorCode::EigenvalueMismatch, "zero state has no eigenphase");
    Complex ratio = transformed.amp(best) / s.amp(best);
    double angle = std::arg(ratio);
    if (angle < 0) angle += 2.0 * kPi;
    uint32_t r = static_cast<uint32_t>(std::llround(angle * q / (2.0 * kPi))) % q;
    Complex omega_r = std::polar(1.0, 2.0 * kPi * r / q);
    for (uint64_t i = 0; i < s.dim(); ++i)
        if (std::abs(transformed.amp(i) - omega_r * s.amp(i)) > kSimTol)
            raise(ErrorCode::EigenvalueMismatch,
                  "state is not an eigenvector of the stabilizer generator");
    return r;
}

} // namespace

CssBasis::Syndrome CssBasis::measure_syndrome(const StateVector& s) const {
    const Field& f = field();
    Syndrome out;
    for (size_t j = 0; j < t1_.parity().rows(); ++j) {
        Word h = t1_.parity().row(j);
        StateVector t = weyl_apply(s, SympVector::from_parts(Word(f, n()), h));
        out.z_checks.push_back(eigenphase_exponent(s, t));
    }
    for (size_t j = 0; j < t2_.parity().rows(); ++j) {
        Word g = t2_.parity().row(j);
        StateVector t = weyl_apply(s, SympVector::from_parts(g, Word(f, n())));
        out.x_checks.push_back(eigenphase_exponent(s, t));
    }
    out.x_index = digits_index(out.z_checks, f.order());
    out.z_index = digits_index(out.x_checks, f.order());
    return out;
}

CssBasis::Syndrome stabilizer_check(const CssBasis& basis, const StateVector& s, const Word& x,
                                    const Word& z) {
    CssBasis::Syndrome measured = basis.measure_syndrome(s);
    for (size_t j = 0; j < measured.z_checks.size(); ++j) {
        uint32_t expect = x.dot(basis.t1().parity().row(j)).code();
        if (measured.z_checks[j] != expect)
            raise(ErrorCode::EigenvalueMismatch, "Z-type stabilizer eigenvalue differs from x.h_j");
    }
    for (size_t j = 0; j < measured.x_checks.size(); ++j) {
        uint32_t expect = z.dot(basis.t2().parity().row(j)).code();
        if (measured.x_checks[j] != expect)
            raise(ErrorCode::EigenvalueMismatch, "X-type stabilizer eigenvalue differs from z.g_j");
    }
    return measured;
}

MixtureResult sp_mixture(const ConjugatePair& pair, const SyndromeTable& t2, const Word& x,
                         const Word& v, const SimLimits& limits) {
    const Field& f = pair.field();
    require_prime_field(f);
    uint64_t dim = checked_dim(f, pair.n(), limits.max_density_dim, "mixture");
    const Eigen::Index d = static_cast<Eigen::Index>(dim);

    // Left side: average of |phi_xzv><phi_xzv| over the z transversal.
    Eigen::MatrixXcd mixture = Eigen::MatrixXcd::Zero(d, d);
    const auto& zs = t2.leaders();
    for (const Word& z : zs) {
        StateVector s = encoded_state(pair, x, z, v, limits);
        Eigen::VectorXcd vec(d);
        for (uint64_t i = 0; i < dim; ++i) vec(static_cast<Eigen::Index>(i)) = s.amp(i);
        mixture += vec * vec.adjoint();
    }
    mixture /= static_cast<double>(zs.size());

    // Right side: the classical mixture over the dual-codeword coset.
    Eigen::MatrixXcd classical = Eigen::MatrixXcd::Zero(d, d);
    uint64_t count = *pair.c2_dual().codeword_count();
    Word base = x + v;
    for (uint64_t i = 0; i < count; ++i) {
        uint64_t idx = (base + pair.c2_dual().codeword(i)).index();
        classical(static_cast<Eigen::Index>(idx), static_cast<Eigen::Index>(idx)) +=
            1.0 / static_cast<double>(count);
    }

    double diff = (mixture - classical).cwiseAbs().maxCoeff();
    if (diff > kSimTol)
        raise(ErrorCode::MixtureMismatch,
              "mixture of encoded states differs from the classical mixture by " +
                  std::to_string(diff));
    DensityOperator op(f, pair.n(), mixture, limits);
    op.validate();
    return MixtureResult{std::move(op), diff};
}

namespace {

// Correction labels for recovery targeting (xi, zi) when the measured
// syndrome pair is (mxi, mzi). X errors shift eigenphases down, Z errors up.
std::pair<Word, Word> correction_labels(const CssBasis& basis, size_t xi, size_t zi, uint64_t mxi,
                                        uint64_t mzi) {
    const uint32_t q = basis.field().order();
    size_t rows1 = basis.t1().parity().rows();
    size_t rows2 = basis.t2().parity().rows();
    auto sx = index_digits(xi, rows1, q);
    auto mx = index_digits(mxi, rows1, q);
    auto sz = index_digits(zi, rows2, q);
    auto mz = index_digits(mzi, rows2, q);
    const Field& f = basis.field();
    std::vector<uint32_t> su(rows1), sw(rows2);
    for (size_t j = 0; j < rows1; ++j) su[j] = f.sub(sx[j], mx[j]);
    for (size_t j = 0; j < rows2; ++j) sw[j] = f.sub(mz[j], sz[j]);
    Word gamma1 = basis.t1().leader_by_index(digits_index(su, q));
    Word gamma2 = basis.t2().leader_by_index(digits_index(sw, q));
    return {gamma1, gamma2};
}

} // namespace

StateVector recover(const CssBasis& basis, const StateVector& noisy, size_t xi, size_t zi) {
    CssBasis::Syndrome syn = basis.measure_syndrome(noisy);
    auto [gamma1, gamma2] = correction_labels(basis, xi, zi, syn.x_index, syn.z_index);
    return weyl_apply(noisy, SympVector::from_parts(gamma1, gamma2), /*adjoint=*/true);
}

std::vector<Eigen::MatrixXcd> recovery_kraus(const CssBasis& basis, size_t xi, size_t zi,
                                             const SimLimits& limits) {
    uint64_t dim = basis.dim();
    if (dim > limits.max_density_dim) raise(ErrorCode::TooLarge, "recovery Kraus dimension");
    uint64_t count = basis.x_count() * basis.z_count();
    if (count > limits.max_kraus) raise(ErrorCode::TooLarge, "recovery Kraus count");
    const Eigen::Index d = static_cast<Eigen::Index>(dim);

    std::vector<Eigen::MatrixXcd> kraus;
    kraus.reserve(count);
    for (size_t mxi = 0; mxi < basis.x_count(); ++mxi) {
        for (size_t mzi = 0; mzi < basis.z_count(); ++mzi) {
            auto [gamma1, gamma2] = correction_labels(basis, xi, zi, mxi, mzi);
            SympVector corr = SympVector::from_parts(gamma1, gamma2);
            Eigen::MatrixXcd k = Eigen::MatrixXcd::Zero(d, d);
            for (size_t vi = 0; vi < basis.v_count(); ++vi) {
                const StateVector& phi = basis.state(mxi, mzi, vi);
                StateVector corrected = weyl_apply(phi, corr, /*adjoint=*/true);
                Eigen::VectorXcd ket(d), bra(d);
                for (uint64_t i = 0; i < dim; ++i) {
                    ket(static_cast<Eigen::Index>(i)) = corrected.amp(i);
                    bra(static_cast<Eigen::Index>(i)) = phi.amp(i);
                }
                k += ket * bra.adjoint();
            }
            kraus.push_back(std::move(k));
        }
    }
    return kraus;
}

DensityOperator recover_density(const CssBasis& basis, const DensityOperator& rho, size_t xi,
                                size_t zi, const SimLimits& limits) {
    auto kraus = recovery_kraus(basis, xi, zi, limits);
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(rho.mat().rows(), rho.mat().cols());
    for (const auto& k : kraus) out += k * rho.mat() * k.adjoint();
    return DensityOperator(rho.field(), rho.n(), std::move(out), limits);
}

std::vector<Eigen::MatrixXcd> channel_kraus(const PauliChannel& channel, const SimLimits& limits) {
    if (channel.support_size() > limits.max_kraus)
        raise(ErrorCode::TooLarge, "channel support exceeds Kraus cap");
    std::vector<Eigen::MatrixXcd> kraus;
    channel.for_each([&](const SympVector& label, double p) {
        kraus.push_back(std::sqrt(p) * weyl_matrix(channel.field(), channel.n(), label, limits));
    });
    return kraus;
}

namespace {

// <phi| N_residual |phi> evaluated through the precomputed action tables.
Complex residual_trace(const StateVector& phi, const WeylAction& act) {
    Complex acc(0, 0);
    for (uint64_t j = 0; j < phi.dim(); ++j)
        acc += std::conj(phi.amp(act.perm[j])) * act.phase[j] * phi.amp(j);
    return acc;
}

// Shared core of the fidelity routines: accumulates P(e) |Tr(pi K_e)|^2 into
// per-(x,z) cells. After leader correction the surviving Kraus term of error
// e acts on Q_xz as a global phase times N_{[u-gamma1, w-gamma2]}, and the
// phase cancels in the modulus.
std::vector<double> fidelity_by_syndrome(const CssBasis& basis, const PauliChannel& channel,
                                         const SimLimits& limits,
                                         const std::vector<std::pair<size_t, size_t>>& targets) {
    if (channel.support_size() > limits.max_channel_support)
        raise(ErrorCode::TooLarge, "channel support too large for exact fidelity");
    const Field& f = basis.field();
    std::vector<double> fidelities(targets.size(), 0.0);
    channel.for_each([&](const SympVector& e, double p) {
        Word u = e.u_part(), w = e.w_part();
        Word gamma1 = basis.t1().leader_for(u);
        Word gamma2 = basis.t2().leader_for(w);
        SympVector residual = SympVector::from_parts(u - gamma1, w - gamma2);
        WeylAction act = weyl_action(f, basis.n(), residual);
        for (size_t t = 0; t < targets.size(); ++t) {
            auto [xi, zi] = targets[t];
            Complex tr(0, 0);
            for (size_t vi = 0; vi < basis.v_count(); ++vi)
                tr += residual_trace(basis.state(xi, zi, vi), act);
            tr /= static_cast<double>(basis.v_count());
            fidelities[t] += p * std::norm(tr);
        }
    });
    return fidelities;
}

} // namespace

double entanglement_fidelity(const CssBasis& basis, size_t xi, size_t zi,
                             const PauliChannel& channel, const SimLimits& limits) {
    return fidelity_by_syndrome(basis, channel, limits, {{xi, zi}})[0];
}

double average_entanglement_fidelity(const CssBasis& basis, const PauliChannel& channel,
                                     const SimLimits& limits) {
    std::vector<std::pair<size_t, size_t>> targets;
    for (size_t xi = 0; xi < basis.x_count(); ++xi)
        for (size_t zi = 0; zi < basis.z_count(); ++zi) targets.emplace_back(xi, zi);
    auto f = fidelity_by_syndrome(basis, channel, limits, targets);
    double acc = 0.0;
    for (double v : f) acc += v;
    return acc / static_cast<double>(f.size());
}

double entanglement_fidelity_kraus(const DensityOperator& rho,
                                   const std::vector<Eigen::MatrixXcd>& kraus) {
    double acc = 0.0;
    for (const auto& k : kraus) acc += std::norm((rho.mat() * k).trace());
    return acc;
}

double entropy_exchange(const DensityOperator& rho, const std::vector<Eigen::MatrixXcd>& kraus,
                        const SimLimits& limits) {
    if (kraus.size() > limits.max_kraus)
        raise(ErrorCode::TooLarge, "Kraus list exceeds entropy-exchange cap");
    // Kraus operators that annihilate rho give zero rows and columns of W, so
    // they cannot shift the spectrum; drop them before the eigendecomposition.
    std::vector<const Eigen::MatrixXcd*> kept;
    std::vector<Eigen::MatrixXcd> products; // M_i = K_i rho
    for (const auto& k : kraus) {
        Eigen::MatrixXcd kr = k * rho.mat();
        if (kr.cwiseAbs().maxCoeff() > 1e-15) {
            kept.push_back(&k);
            products.push_back(std::move(kr));
        }
    }
    // W_ij = Tr(K_i rho K_j^dagger) = sum_ab M_i(a,b) conj(K_j(a,b)).
    const Eigen::Index sz = static_cast<Eigen::Index>(kept.size());
    Eigen::MatrixXcd wm(sz, sz);
    for (Eigen::Index i = 0; i < sz; ++i)
        for (Eigen::Index j = 0; j < sz; ++j)
            wm(i, j) = (products[static_cast<size_t>(i)].array() *
                        kept[static_cast<size_t>(j)]->array().conjugate())
                           .sum();
    double trace = wm.trace().real();
    if (std::abs(trace - 1.0) > kSimTol)
        raise(ErrorCode::DomainError, "Kraus list is not trace preserving on rho (Tr W = " +
                                          std::to_string(trace) + ")");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(wm, Eigen::EigenvaluesOnly);
    double entropy = 0.0;
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
        double lambda = es.eigenvalues()(i);
        if (lambda < -kSimTol) raise(ErrorCode::DomainError, "W matrix has a negative eigenvalue");
        if (lambda > 1e-15) entropy -= lambda * std::log2(lambda);
    }
    return entropy;
}

bool knill_laflamme_correctable(const CssBasis& basis, size_t xi, size_t zi,
                                const std::vector<SympVector>& errors, double tol) {
    const size_t d = basis.v_count();
    for (size_t a = 0; a < errors.size(); ++a) {
        for (size_t b = 0; b < errors.size(); ++b) {
            // N_e^dag N_e' is a global phase times N_{e'-e}; the phase cannot
            // affect the lambda * identity structure.
            SympVector diff = errors[b] - errors[a];
            WeylAction act = weyl_action(basis.field(), basis.n(), diff);
            Complex lambda(0, 0);
            bool first = true;
            for (size_t va = 0; va < d; ++va) {
                for (size_t vb = 0; vb < d; ++vb) {
                    StateVector rhs = basis.state(xi, zi, vb);
                    // <phi_a | N_diff | phi_b>
                    Complex m(0, 0);
                    const StateVector& lhs = basis.state(xi, zi, va);
                    for (uint64_t j = 0; j < rhs.dim(); ++j)
                        m += std::conj(lhs.amp(act.perm[j])) * act.phase[j] * rhs.amp(j);
                    if (va == vb) {
                        if (first) {
                            lambda = m;
                            first = false;
                        } else if (std::abs(m - lambda) > tol) {
                            return false;
                        }
                    } else if (std::abs(m) > tol) {
                        return false;
                    }
                }
            }
        }
    }
    return true;
}

} // namespace ccpair
