#include "ccpair/scheme.hpp"

#include <cmath>
#include <sstream>

#include <json.hpp>

namespace ccpair {

double binary_entropy(double t) {
    if (t < 0.0 || t > 1.0) raise(ErrorCode::DomainError, "binary entropy argument outside [0,1]");
    double acc = 0.0;
    if (t > 0.0) acc -= t * std::log2(t);
    if (t < 1.0) acc -= (1.0 - t) * std::log2(1.0 - t);
    return acc;
}

WilsonInterval wilson_interval(uint64_t successes, uint64_t trials, double z) {
    if (trials == 0) return {0.0, 1.0};
    double nd = static_cast<double>(trials);
    double phat = static_cast<double>(successes) / nd;
    double z2 = z * z;
    double denom = 1.0 + z2 / nd;
    double center = (phat + z2 / (2.0 * nd)) / denom;
    double half = z * std::sqrt(phat * (1.0 - phat) / nd + z2 / (4.0 * nd * nd)) / denom;
    return {std::max(0.0, center - half), std::min(1.0, center + half)};
}

LeakageBound leakage_bound(double fidelity, size_t n, double rate_log_q, uint32_t q) {
    if (fidelity < 0.0 || fidelity > 1.0)
        raise(ErrorCode::DomainError, "fidelity outside [0,1]");
    LeakageBound out;
    out.h2_term = binary_entropy(fidelity);
    out.rate_term = (1.0 - fidelity) * 2.0 * static_cast<double>(n) * rate_log_q * std::log2(q);
    out.bits = out.h2_term + out.rate_term;
    double t = 1.0 - fidelity;
    if (t <= 0.5) {
        double h_over = t > 0.0 ? -2.0 * t * std::log2(t) : 0.0;
        out.overestimate_bits = h_over + out.rate_term;
    }
    return out;
}

SchemeInstance::SchemeInstance(const ConjugatePair& pair, XDistribution x_dist,
                               uint64_t max_table_size)
    : pair_(pair),
      t1_(pair.c1(), max_table_size),
      t2_(pair.c2(), max_table_size),
      x_dist_(x_dist) {
    pair_.message_representatives(); // force the transversal (fails fast when too large)
}

SchemeInstance::Encryption SchemeInstance::encrypt(const Word& v, CounterRng& rng) const {
    const auto& msgs = messages();
    size_t idx;
    try {
        idx = pair_.message_index(v);
    } catch (const Error&) {
        raise(ErrorCode::InvalidMessage, "message word is not in C1");
    }
    if (!(msgs[idx] == v))
        raise(ErrorCode::InvalidMessage, "message is not a canonical representative");

    Word x(field(), n());
    if (x_dist_ == XDistribution::Uniform) {
        uint64_t xi = rng.uniform_below(static_cast<uint32_t>(t1_.leaders().size()));
        x = t1_.leaders()[xi];
    }
    // Uniform word of dual(C2) via uniform coefficients on its generators.
    const LinearCode& dual2 = pair_.c2_dual();
    Word w(field(), n());
    for (size_t r = 0; r < dual2.k(); ++r) {
        uint32_t c = rng.uniform_below(field().order());
        if (c != 0) w = w + dual2.generator().row(r).scaled(c);
    }
    return Encryption{x, w, w + v + x};
}

Word SchemeInstance::decrypt(const Word& x, const Word& received) const {
    Word in_coset = decode_coset(pair_.c1(), x, received, t1_);
    return pair_.canonicalize_message(in_coset - x);
}

namespace {

uint64_t checked_pow(uint64_t base, size_t exp, uint64_t cap, const char* what) {
    uint64_t out = 1;
    for (size_t i = 0; i < exp; ++i) {
        out *= base;
        if (out > cap) raise(ErrorCode::TooLarge, std::string(what) + " enumeration too large");
    }
    return out;
}

// Enumerates all q^n patterns with i.i.d. per-symbol probabilities and sums
// the probability of patterns failing the predicate.
double marginal_failure(const Field& f, size_t n, const std::vector<double>& symbol_marginal,
                        const std::function<bool(const Word&)>& inside, uint64_t cap) {
    checked_pow(f.order(), n, cap, "marginal");
    double fail = 0.0;
    Word w(f, n);
    std::function<void(size_t, double)> rec = [&](size_t pos, double p) {
        if (p == 0.0) return;
        if (pos == n) {
            if (!inside(w)) fail += p;
            return;
        }
        for (uint32_t c = 0; c < f.order(); ++c) {
            w.set(pos, c);
            rec(pos + 1, p * symbol_marginal[c]);
        }
        w.set(pos, 0);
    };
    rec(0, 1.0);
    return fail;
}

} // namespace

ErrorProbabilities error_probabilities(const SchemeInstance& s, const PauliChannel& channel,
                                       const SimLimits& limits) {
    EnlargedErrorSet enlarged(s.pair(), s.t1(), s.t2());
    ErrorProbabilities out;
    if (channel.is_iid()) {
        out.p_xi_out = marginal_failure(
            s.field(), s.n(), channel.x_symbol_marginal(),
            [&](const Word& u) { return enlarged.contains_x(u); }, limits.max_channel_support);
        out.p_zeta_out = marginal_failure(
            s.field(), s.n(), channel.z_symbol_marginal(),
            [&](const Word& w) { return enlarged.contains_z(w); }, limits.max_channel_support);
        return out;
    }
    if (channel.support_size() > limits.max_channel_support)
        raise(ErrorCode::TooLarge, "channel support enumeration too large");
    channel.for_each([&](const SympVector& e, double p) {
        if (!enlarged.contains_x(e.u_part())) out.p_xi_out += p;
        if (!enlarged.contains_z(e.w_part())) out.p_zeta_out += p;
    });
    return out;
}

double pa_outside_enlarged(const SchemeInstance& s, const PauliChannel& channel,
                           const SimLimits& limits) {
    if (channel.support_size() > limits.max_channel_support)
        raise(ErrorCode::TooLarge, "channel support enumeration too large");
    EnlargedErrorSet enlarged(s.pair(), s.t1(), s.t2());
    double outside = 0.0;
    channel.for_each([&](const SympVector& e, double p) {
        if (!enlarged.contains(e)) outside += p;
    });
    return outside;
}

FidelityAccounting fidelity_accounting(const SchemeInstance& s, const PauliChannel& channel,
                                       const SimLimits& limits) {
    FidelityAccounting out;
    ErrorProbabilities probs = error_probabilities(s, channel, limits);
    out.p_xi_out = probs.p_xi_out;
    out.p_zeta_out = probs.p_zeta_out;
    out.split_bound = probs.p_xi_out + probs.p_zeta_out;
    out.pa_out = pa_outside_enlarged(s, channel, limits);

    CssBasis basis(s.pair(), s.t1(), s.t2(), limits);
    out.one_minus_ef = 1.0 - average_entanglement_fidelity(basis, channel, limits);

    // With complete leader tables the fidelity statement is an equality.
    if (std::abs(out.one_minus_ef - out.pa_out) > kSimTol)
        raise(ErrorCode::EqualityViolation,
              "1-EF = " + std::to_string(out.one_minus_ef) + " differs from P_A(K'^c) = " +
                  std::to_string(out.pa_out));
    if (out.pa_out > out.split_bound + 1e-12)
        raise(ErrorCode::EqualityViolation, "split bound fell below P_A(K'^c)");
    return out;
}

EntropyLeakage entropy_exchange_leakage(const SchemeInstance& s,
                                        const std::vector<Eigen::MatrixXcd>& channel_kraus_list,
                                        size_t xi, size_t zi, const SimLimits& limits) {
    CssBasis basis(s.pair(), s.t1(), s.t2(), limits);
    std::vector<Eigen::MatrixXcd> rec = recovery_kraus(basis, xi, zi, limits);
    if (rec.size() * channel_kraus_list.size() > limits.max_kraus)
        raise(ErrorCode::TooLarge, "composed Kraus list exceeds cap");
    std::vector<Eigen::MatrixXcd> composed;
    composed.reserve(rec.size() * channel_kraus_list.size());
    for (const auto& r : rec)
        for (const auto& c : channel_kraus_list) composed.push_back(r * c);

    // rho = normalized projector onto Q_xz.
    const Eigen::Index d = static_cast<Eigen::Index>(basis.dim());
    Eigen::MatrixXcd proj = Eigen::MatrixXcd::Zero(d, d);
    for (size_t vi = 0; vi < basis.v_count(); ++vi) {
        const StateVector& phi = basis.state(xi, zi, vi);
        Eigen::VectorXcd vec(d);
        for (uint64_t i = 0; i < basis.dim(); ++i) vec(static_cast<Eigen::Index>(i)) = phi.amp(i);
        proj += vec * vec.adjoint();
    }
    proj /= static_cast<double>(basis.v_count());
    DensityOperator rho(s.field(), s.n(), std::move(proj), limits);

    EntropyLeakage out;
    out.fidelity = entanglement_fidelity_kraus(rho, composed);
    out.entropy_exchange_bits = entropy_exchange(rho, composed, limits);
    out.fano_bound_bits =
        leakage_bound(out.fidelity, s.n(), s.rate_log_q(), s.field().order()).bits;
    if (out.entropy_exchange_bits > out.fano_bound_bits + kSimTol)
        raise(ErrorCode::EqualityViolation, "entropy exchange exceeds the Fano bound");
    return out;
}

EntropyLeakage entropy_exchange_leakage(const SchemeInstance& s, const PauliChannel& channel,
                                        size_t xi, size_t zi, const SimLimits& limits) {
    return entropy_exchange_leakage(s, channel_kraus(channel, limits), xi, zi, limits);
}

std::string SimulationReport::to_json() const {
    nlohmann::ordered_json j;
    j["n"] = n;
    j["k"] = k;
    j["q"] = q;
    j["trials"] = trials;
    j["seed"] = seed;
    j["error_rate"] = error_rate;
    j["ci_low"] = ci_low;
    j["ci_high"] = ci_high;
    j["p_xi_out"] = p_xi_out ? nlohmann::ordered_json(*p_xi_out) : nlohmann::ordered_json(nullptr);
    j["p_zeta_out"] =
        p_zeta_out ? nlohmann::ordered_json(*p_zeta_out) : nlohmann::ordered_json(nullptr);
    j["fidelity_gap"] =
        fidelity_gap ? nlohmann::ordered_json(*fidelity_gap) : nlohmann::ordered_json(nullptr);
    j["leakage_bound_bits"] = leakage_bound_bits ? nlohmann::ordered_json(*leakage_bound_bits)
                                                 : nlohmann::ordered_json(nullptr);
    return j.dump(2);
}

std::string SimulationReport::csv_header() {
    return "n,k,q,trials,seed,error_rate,ci_low,ci_high,p_xi_out,p_zeta_out,fidelity_gap,"
           "leakage_bound_bits";
}

namespace {
std::string opt_str(const std::optional<double>& v) {
    if (!v) return "";
    std::ostringstream out;
    out.precision(17);
    out << *v;
    return out.str();
}
} // namespace

std::string SimulationReport::to_csv_row() const {
    std::ostringstream out;
    out.precision(17);
    out << n << ',' << k << ',' << q << ',' << trials << ',' << seed << ',' << error_rate << ','
        << ci_low << ',' << ci_high << ',' << opt_str(p_xi_out) << ',' << opt_str(p_zeta_out)
        << ',' << opt_str(fidelity_gap) << ',' << opt_str(leakage_bound_bits);
    return out.str();
}

SimulationReport simulate(const SchemeInstance& s, const PauliChannel& channel, uint64_t trials,
                          uint64_t seed, const SimLimits& limits) {
    if (trials < 1) raise(ErrorCode::BadInput, "at least one trial required");
    const auto& msgs = s.messages();
    uint64_t failures = 0;
    CounterRng rng(seed);
    for (uint64_t t = 0; t < trials; ++t) {
        rng.seek(t); // one substream per trial: shards merge by summation
        const Word& v = msgs[rng.uniform_below(static_cast<uint32_t>(msgs.size()))];
        SchemeInstance::Encryption enc = s.encrypt(v, rng);
        Word error = channel.sample_x(rng);
        Word decoded = s.decrypt(enc.x, enc.transmitted + error);
        if (!(decoded == v)) ++failures;
    }

    SimulationReport report;
    report.n = s.n();
    report.k = s.k();
    report.q = s.field().spec();
    report.trials = trials;
    report.seed = seed;
    report.error_rate = static_cast<double>(failures) / static_cast<double>(trials);
    WilsonInterval ci = wilson_interval(failures, trials);
    report.ci_low = ci.low;
    report.ci_high = ci.high;
    try {
        ErrorProbabilities probs = error_probabilities(s, channel, limits);
        report.p_xi_out = probs.p_xi_out;
        report.p_zeta_out = probs.p_zeta_out;
    } catch (const Error& e) {
        if (e.code() != ErrorCode::TooLarge) throw;
    }
    try {
        double gap = pa_outside_enlarged(s, channel, limits);
        report.fidelity_gap = gap;
        report.leakage_bound_bits =
            leakage_bound(1.0 - gap, s.n(), s.rate_log_q(), s.field().order()).bits;
    } catch (const Error& e) {
        if (e.code() != ErrorCode::TooLarge) throw;
    }
    return report;
}

} // namespace ccpair
