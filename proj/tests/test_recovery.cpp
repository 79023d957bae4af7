#include <doctest.h>

#include "ccpair/quantum.hpp"
#include "test_helpers.hpp"

using namespace ccpair;
using namespace ccpair::testing;

namespace {

double overlap(const StateVector& a, const StateVector& b) { return std::abs(a.inner(b)); }

SympVector xz_label(const Field& f, size_t n, const std::vector<int>& u,
                    const std::vector<int>& w) {
    return SympVector::from_parts(make_word(f, u), make_word(f, w));
}

std::vector<SympVector> weight_one_labels(const Field& f, size_t n) {
    std::vector<SympVector> out;
    out.push_back(SympVector(f, n));
    for (size_t i = 0; i < n; ++i) {
        for (uint32_t c = 1; c < f.order(); ++c) {
            SympVector x(f, n);
            x.set_u(i, c);
            out.push_back(x);
            SympVector z(f, n);
            z.set_w(i, c);
            out.push_back(z);
        }
    }
    return out;
}

} // namespace

TEST_CASE("recovery restores codewords hit by leader-pair errors") {
    Field f2(2, 1);
    ConjugatePair steane = steane_pair();
    SyndromeTable t1(steane.c1()), t2(steane.c2());
    CssBasis basis(steane, t1, t2);
    const StateVector& code = basis.state(0, 0, 0);

    // No error: recovery leaves the state unchanged.
    StateVector same = recover(basis, code, 0, 0);
    CHECK(overlap(code, same) > 1.0 - kSimTol);

    // Single X error on digit 3.
    StateVector e3 = weyl_apply(code, xz_label(f2, 7, {0, 0, 1, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 0, 0}));
    CHECK(overlap(code, recover(basis, e3, 0, 0)) > 1.0 - kSimTol);

    // Independent X and Z errors on different digits.
    StateVector exz =
        weyl_apply(code, xz_label(f2, 7, {1, 0, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 1, 0, 0}));
    CHECK(overlap(code, recover(basis, exz, 0, 0)) > 1.0 - kSimTol);

    // Every leader-pair error, every code state.
    for (const Word& gu : t1.leaders()) {
        for (const Word& gw : t2.leaders()) {
            SympVector e = SympVector::from_parts(gu, gw);
            for (size_t vi = 0; vi < basis.v_count(); ++vi) {
                const StateVector& phi = basis.state(0, 0, vi);
                StateVector recovered = recover(basis, weyl_apply(phi, e), 0, 0);
                CHECK(overlap(phi, recovered) > 1.0 - kSimTol);
            }
        }
    }
}

TEST_CASE("recovery absorbs dual-codeword shifts (the enlarged error set)") {
    Field f2(2, 1);
    ConjugatePair steane = steane_pair();
    SyndromeTable t1(steane.c1()), t2(steane.c2());
    CssBasis basis(steane, t1, t2);
    const StateVector& code = basis.state(0, 0, 1);

    // u = leader + word of dual(C2): still in Gamma1', so recovery is exact.
    Word u = t1.leaders()[3] + steane.c2_dual().codeword(5);
    Word w = t2.leaders()[6] + steane.c1_dual().codeword(2);
    StateVector noisy = weyl_apply(code, SympVector::from_parts(u, w));
    CHECK(overlap(code, recover(basis, noisy, 0, 0)) > 1.0 - kSimTol);
}

TEST_CASE("a weight-2 X pattern defeats Steane recovery with a logical flip") {
    Field f2(2, 1);
    ConjugatePair steane = steane_pair();
    SyndromeTable t1(steane.c1()), t2(steane.c2());
    CssBasis basis(steane, t1, t2);
    const StateVector& code = basis.state(0, 0, 0);

    Word u(f2, 7);
    u.set(0, 1);
    u.set(1, 1); // weight 2: its syndrome leader is some single-bit word
    REQUIRE(t1.leader_for(u).weight() == 1);
    StateVector noisy = weyl_apply(code, SympVector::from_parts(u, Word(f2, 7)));
    StateVector recovered = recover(basis, noisy, 0, 0);
    // The residual u - leader is a weight-3 Hamming codeword outside the
    // dual: a logical X, carrying |phi_0> onto the other basis state.
    CHECK(overlap(code, recovered) < kSimTol);
    CHECK(overlap(basis.state(0, 0, 1), recovered) > 1.0 - kSimTol);
}

TEST_CASE("recovery targets any syndrome pair, not just (0,0)") {
    ConjugatePair ft = four_two_pair();
    SyndromeTable t1(ft.c1()), t2(ft.c2());
    CssBasis basis(ft, t1, t2);
    for (size_t xi = 0; xi < basis.x_count(); ++xi)
        for (size_t zi = 0; zi < basis.z_count(); ++zi)
            for (size_t vi = 0; vi < basis.v_count(); ++vi) {
                const StateVector& phi = basis.state(xi, zi, vi);
                StateVector noisy = weyl_apply(
                    phi, SympVector::from_parts(t1.leaders()[1], t2.leaders()[1]));
                CHECK(overlap(phi, recover(basis, noisy, xi, zi)) > 1.0 - kSimTol);
            }
}

TEST_CASE("recover_density matches the pure-state recovery on eigenvectors") {
    ConjugatePair ft = four_two_pair();
    SyndromeTable t1(ft.c1()), t2(ft.c2());
    CssBasis basis(ft, t1, t2);
    Field f2(2, 1);

    const StateVector& phi = basis.state(0, 0, 2);
    SympVector e = xz_label(f2, 4, {0, 1, 0, 0}, {0, 0, 1, 0});
    StateVector noisy = weyl_apply(phi, e);
    StateVector pure = recover(basis, noisy, 0, 0);
    DensityOperator rho = recover_density(basis, DensityOperator::from_state(noisy), 0, 0);
    rho.validate();
    Eigen::VectorXcd v(pure.dim());
    for (uint64_t i = 0; i < pure.dim(); ++i) v(static_cast<Eigen::Index>(i)) = pure.amp(i);
    CHECK((rho.mat() - v * v.adjoint()).cwiseAbs().maxCoeff() < kSimTol);
}

TEST_CASE("recovery Kraus operators form a trace-preserving channel") {
    ConjugatePair ft = four_two_pair();
    SyndromeTable t1(ft.c1()), t2(ft.c2());
    CssBasis basis(ft, t1, t2);
    auto kraus = recovery_kraus(basis, 1, 1);
    Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(16, 16);
    for (const auto& k : kraus) acc += k.adjoint() * k;
    CHECK((acc - Eigen::MatrixXcd::Identity(16, 16)).cwiseAbs().maxCoeff() < kSimTol);
}

TEST_CASE("Knill-Laflamme oracle agrees with the classical criterion") {
    Field f2(2, 1);
    std::vector<ConjugatePair> pairs = {trivial_pair(1), trivial_pair(2), four_two_pair(),
                                        ConjugatePair(repetition_code(2), repetition_code(2))};
    CounterRng rng(53);
    for (const ConjugatePair& pair : pairs) {
        SyndromeTable t1(pair.c1()), t2(pair.c2());
        CssBasis basis(pair, t1, t2);
        CssLift lift = css_lift(pair);
        auto singles = weight_one_labels(f2, pair.n());

        std::vector<std::vector<SympVector>> error_sets;
        error_sets.push_back({SympVector(f2, pair.n())});
        error_sets.push_back(singles);
        for (int t = 0; t < 12; ++t) {
            std::vector<SympVector> random_set;
            size_t count = 1 + rng.uniform_below(3);
            for (size_t i = 0; i < count; ++i)
                random_set.push_back(singles[rng.uniform_below(static_cast<uint32_t>(singles.size()))]);
            error_sets.push_back(random_set);
        }
        for (const auto& errs : error_sets) {
            bool classical = correctable_error_set(lift.l, lift.lperp, errs);
            bool quantum = knill_laflamme_correctable(basis, 0, 0, errs);
            CHECK(classical == quantum);
            // The verdict is syndrome independent.
            if (basis.x_count() > 1 && basis.z_count() > 1)
                CHECK(knill_laflamme_correctable(basis, 1, 1, errs) == quantum);
        }
    }
}

TEST_CASE("entanglement fidelity: identity and deterministic errors") {
    Field f2(2, 1);
    ConjugatePair steane = steane_pair();
    SyndromeTable t1(steane.c1()), t2(steane.c2());
    CssBasis basis(steane, t1, t2);

    PauliChannel identity =
        PauliChannel::from_support(f2, 7, {{SympVector(f2, 7), 1.0}});
    CHECK(entanglement_fidelity(basis, 0, 0, identity) == doctest::Approx(1.0).epsilon(1e-12));

    // Deterministic correctable error.
    SympVector good = SympVector::from_parts(t1.leaders()[2], t2.leaders()[5]);
    PauliChannel det_good = PauliChannel::from_support(f2, 7, {{good, 1.0}});
    CHECK(entanglement_fidelity(basis, 0, 0, det_good) == doctest::Approx(1.0).epsilon(1e-12));

    // Deterministic uncorrectable weight-2 X pattern: logical flip, F = 0.
    Word u(f2, 7);
    u.set(0, 1);
    u.set(1, 1);
    PauliChannel det_bad =
        PauliChannel::from_support(f2, 7, {{SympVector::from_parts(u, Word(f2, 7)), 1.0}});
    double f = entanglement_fidelity(basis, 0, 0, det_bad);
    CHECK(f < kSimTol);
}

TEST_CASE("fast fidelity equals the explicit Kraus computation") {
    ConjugatePair ft = four_two_pair();
    SyndromeTable t1(ft.c1()), t2(ft.c2());
    CssBasis basis(ft, t1, t2);
    Field f2(2, 1);
    ChannelSpec spec;
    spec.kind = ChannelSpec::Kind::Depolarizing;
    spec.p = 0.1;
    PauliChannel channel = spec.to_channel(f2, 4);
    auto ch_kraus = channel_kraus(channel);

    double total = 0.0;
    for (size_t xi = 0; xi < basis.x_count(); ++xi) {
        for (size_t zi = 0; zi < basis.z_count(); ++zi) {
            // rho = normalized projector onto Q_xz
            Eigen::MatrixXcd proj = Eigen::MatrixXcd::Zero(16, 16);
            for (size_t vi = 0; vi < basis.v_count(); ++vi) {
                const StateVector& phi = basis.state(xi, zi, vi);
                Eigen::VectorXcd v(16);
                for (uint64_t i = 0; i < 16; ++i) v(static_cast<Eigen::Index>(i)) = phi.amp(i);
                proj += v * v.adjoint();
            }
            proj /= 4.0;
            DensityOperator rho(f2, 4, proj);

            std::vector<Eigen::MatrixXcd> composed;
            for (const auto& r : recovery_kraus(basis, xi, zi))
                for (const auto& c : ch_kraus) composed.push_back(r * c);
            double direct = entanglement_fidelity_kraus(rho, composed);
            double fast = entanglement_fidelity(basis, xi, zi, channel);
            CHECK(fast == doctest::Approx(direct).epsilon(1e-10));
            total += fast;
        }
    }
    CHECK(average_entanglement_fidelity(basis, channel) ==
          doctest::Approx(total / 4.0).epsilon(1e-12));
}

TEST_CASE("entropy exchange: identity, unitary, and depolarizing oracle") {
    Field f2(2, 1);
    StateVector zero = StateVector::computational(f2, 1, Word(f2, 1));
    DensityOperator rho = DensityOperator::from_state(zero);

    std::vector<Eigen::MatrixXcd> id_kraus = {Eigen::MatrixXcd::Identity(2, 2)};
    CHECK(entropy_exchange(rho, id_kraus) == doctest::Approx(0.0).epsilon(1e-12));

    // A single unitary Kraus operator still gives zero entropy exchange.
    std::vector<Eigen::MatrixXcd> unitary = {
        weyl_matrix(f2, 1, SympVector::from_parts(make_word(f2, {1}), make_word(f2, {1})))};
    CHECK(entropy_exchange(rho, unitary) == doctest::Approx(0.0).epsilon(1e-12));

    // Full single-qubit depolarizing on |0><0|: for a pure input the entropy
    // exchange equals the output entropy, here h2(2p/3).
    double p = 0.3;
    ChannelSpec spec;
    spec.kind = ChannelSpec::Kind::Depolarizing;
    spec.p = p;
    PauliChannel depol = spec.to_channel(f2, 1);
    auto kraus = channel_kraus(depol);
    double se = entropy_exchange(rho, kraus);

    // Independent oracle: eigen-entropy of the output density operator.
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(2, 2);
    for (const auto& k : kraus) out += k * rho.mat() * k.adjoint();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(out, Eigen::EigenvaluesOnly);
    double oracle = 0.0;
    for (Eigen::Index i = 0; i < 2; ++i) {
        double lambda = es.eigenvalues()(i);
        if (lambda > 1e-15) oracle -= lambda * std::log2(lambda);
    }
    CHECK(se == doctest::Approx(oracle).epsilon(1e-10));

    double t = 2.0 * p / 3.0;
    double h2 = -t * std::log2(t) - (1.0 - t) * std::log2(1.0 - t);
    CHECK(se == doctest::Approx(h2).epsilon(1e-10));
}

TEST_CASE("non-trace-preserving Kraus lists are rejected") {
    Field f2(2, 1);
    StateVector zero = StateVector::computational(f2, 1, Word(f2, 1));
    DensityOperator rho = DensityOperator::from_state(zero);
    std::vector<Eigen::MatrixXcd> bad = {0.5 * Eigen::MatrixXcd::Identity(2, 2)};
    CHECK_THROWS_AS(entropy_exchange(rho, bad), Error);
}
