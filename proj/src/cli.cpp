#include "ccpair/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <ostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ccpair/catalog.hpp"
#include "ccpair/io.hpp"
#include "ccpair/scheme.hpp"

namespace ccpair {

namespace {

using Json = nlohmann::ordered_json;

Json word_json(const Word& w) {
    Json arr = Json::array();
    for (size_t i = 0; i < w.size(); ++i) arr.push_back(w.code(i));
    return arr;
}

SimLimits make_limits(uint64_t max_dim) {
    SimLimits limits;
    if (max_dim > 0) {
        limits.max_state_dim = max_dim;
        limits.max_density_dim = max_dim;
    }
    return limits;
}

struct VerifyOutput {
    Json json;
};

Json verify_pair(const PairBundle& bundle) {
    const ConjugatePair& p = bundle.pair;
    Json j;
    j["name"] = bundle.name;
    j["q"] = p.field().spec();
    j["n"] = p.n();
    j["k1"] = p.k1();
    j["k2"] = p.k2();
    j["k"] = p.k();
    auto d1 = p.c1().min_distance();
    auto d2 = p.c2().min_distance();
    j["c1_min_distance"] = d1 ? Json(*d1) : Json(nullptr);
    j["c2_min_distance"] = d2 ? Json(*d2) : Json(nullptr);
    j["valid"] = true;
    if (p.k() == 0) j["warning"] = "k = 0: the pair is valid but carries no message";
    return j;
}

void emit(std::ostream& out, const Json& j, const std::string& json_path) {
    std::string text = j.dump(2);
    out << text << "\n";
    if (!json_path.empty()) {
        std::ofstream f(json_path);
        if (!f) raise(ErrorCode::BadInput, "cannot write JSON file: " + json_path);
        f << text << "\n";
    }
}

// One selftest line; failures collect into the summary.
struct CheckLog {
    Json checks = Json::array();
    bool all_ok = true;
    std::ostream& err;

    explicit CheckLog(std::ostream& err) : err(err) {}

    template <typename Fn>
    void run(const std::string& pair, const std::string& name, Fn&& fn) {
        bool ok = true;
        std::string detail;
        try {
            fn();
        } catch (const std::exception& e) {
            ok = false;
            detail = e.what();
        }
        all_ok = all_ok && ok;
        err << (ok ? "  ok   " : "  FAIL ") << pair << ": " << name
            << (detail.empty() ? "" : " (" + detail + ")") << "\n";
        Json entry;
        entry["pair"] = pair;
        entry["check"] = name;
        entry["ok"] = ok;
        if (!detail.empty()) entry["detail"] = detail;
        checks.push_back(entry);
    }
};

void selftest_quantum_checks(CheckLog& log, const std::string& name, const ConjugatePair& pair,
                             const SimLimits& limits) {
    SyndromeTable t1(pair.c1()), t2(pair.c2());
    CssBasis basis(pair, t1, t2, limits);

    log.run(name, "encoded basis orthonormal and complete", [&] {
        std::vector<const StateVector*> all;
        for (size_t xi = 0; xi < basis.x_count(); ++xi)
            for (size_t zi = 0; zi < basis.z_count(); ++zi)
                for (size_t vi = 0; vi < basis.v_count(); ++vi)
                    all.push_back(&basis.state(xi, zi, vi));
        if (all.size() != basis.dim()) raise(ErrorCode::EigenvalueMismatch, "state count != q^n");
        for (size_t a = 0; a < all.size(); ++a) {
            if (std::abs(all[a]->norm() - 1.0) > kSimTol)
                raise(ErrorCode::EigenvalueMismatch, "state norm off");
            for (size_t b = a + 1; b < all.size(); ++b)
                if (std::abs(all[a]->inner(*all[b])) > kSimTol)
                    raise(ErrorCode::EigenvalueMismatch, "states not orthogonal");
        }
    });

    log.run(name, "stabilizer relations", [&] {
        for (size_t xi = 0; xi < basis.x_count(); ++xi)
            for (size_t zi = 0; zi < basis.z_count(); ++zi)
                for (size_t vi = 0; vi < basis.v_count(); ++vi)
                    stabilizer_check(basis, basis.state(xi, zi, vi), basis.x_rep(xi),
                                     basis.z_rep(zi));
    });

    log.run(name, "mixture identity", [&] {
        for (const Word& x : t1.leaders())
            for (const Word& v : pair.message_representatives())
                sp_mixture(pair, t2, x, v, limits);
    });

    log.run(name, "recovery on leader-pair errors", [&] {
        for (const Word& gu : t1.leaders()) {
            for (const Word& gw : t2.leaders()) {
                SympVector e = SympVector::from_parts(gu, gw);
                for (size_t vi = 0; vi < basis.v_count(); ++vi) {
                    const StateVector& phi = basis.state(0, 0, vi);
                    StateVector rec = recover(basis, weyl_apply(phi, e, false, limits), 0, 0);
                    if (std::abs(std::abs(phi.inner(rec)) - 1.0) > kSimTol)
                        raise(ErrorCode::EigenvalueMismatch, "recovery missed a leader error");
                }
            }
        }
    });

    log.run(name, "fidelity equality under depolarizing 0.05", [&] {
        SchemeInstance s(pair);
        ChannelSpec spec;
        spec.kind = ChannelSpec::Kind::Depolarizing;
        spec.p = 0.05;
        fidelity_accounting(s, spec.to_channel(pair.field(), pair.n()), limits);
    });
}

int cmd_selftest(const std::vector<std::string>& pair_paths, uint64_t max_dim, std::ostream& out,
                 std::ostream& err) {
    SimLimits limits = make_limits(max_dim);
    CheckLog log(err);

    log.run("weyl", "commutation relation on random labels", [&] {
        for (uint32_t q : {2u, 3u}) {
            Field f(q, 1);
            CounterRng rng(0xC0FFEE + q);
            for (int t = 0; t < 300; ++t) {
                size_t n = 1 + rng.uniform_below(3);
                SympVector a(f, n), b(f, n);
                for (size_t i = 0; i < n; ++i) {
                    a.set_u(i, rng.uniform_below(q));
                    a.set_w(i, rng.uniform_below(q));
                    b.set_u(i, rng.uniform_below(q));
                    b.set_w(i, rng.uniform_below(q));
                }
                commutation_check(a, b, limits);
            }
        }
    });

    for (const auto& named : builtin_pairs()) {
        if (named.pair.field().prime_field()) {
            selftest_quantum_checks(log, named.name, named.pair, limits);
        } else {
            log.run(named.name, "prime-field expansion stays conjugate", [&] {
                ConjugatePair expanded = expand_pair(named.pair);
                if (expanded.k() != named.pair.k() * named.pair.field().degree())
                    raise(ErrorCode::NotConjugate, "expanded k mismatch");
            });
        }
    }
    for (const std::string& path : pair_paths) {
        PairBundle bundle = load_pair_bundle(path);
        log.run(bundle.name, "manifest validates", [&] { verify_pair(bundle); });
        uint64_t dim = 1;
        bool small = true;
        for (size_t i = 0; i < bundle.pair.n() && small; ++i) {
            dim *= bundle.pair.field().order();
            if (dim > (1u << 10)) small = false;
        }
        if (bundle.pair.field().prime_field() && small)
            selftest_quantum_checks(log, bundle.name, bundle.pair, limits);
    }

    Json j;
    j["config"] = Json{{"command", "selftest"}, {"pairs", pair_paths}, {"max_dim", max_dim}};
    j["checks"] = log.checks;
    j["all_ok"] = log.all_ok;
    out << j.dump(2) << "\n";
    return log.all_ok ? 0 : 1;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"ccpair: conjugate (CSS) code pairs, their exact simulator, and the "
                 "cryptographic-scheme bounds"};
    app.require_subcommand(1);

    std::string pair_path, channel_text, json_path, csv_path, out_dir, new_name;
    std::vector<std::string> selftest_pairs;
    uint64_t trials = 10000, seed = 0;
    uint64_t max_dim = 0;
    if (const char* env = std::getenv("CC_MAX_DIM")) max_dim = std::strtoull(env, nullptr, 10);
    bool uniform_x = false;
    size_t message_index = 0;
    double bound_fidelity = 1.0, bound_rate = 0.0;
    size_t bound_n = 1;
    uint32_t bound_q = 2;

    CLI::App* verify = app.add_subcommand("verify", "validate a pair manifest and print n, k1, k2, k");
    verify->add_option("--pair", pair_path, "pair manifest JSON")->required();
    verify->add_option("--json", json_path, "also write the report to this path");

    CLI::App* expand = app.add_subcommand("expand", "expand an extension-field pair to GF(p)");
    expand->add_option("--pair", pair_path, "pair manifest JSON")->required();
    expand->add_option("--out", out_dir, "output directory for the new bundle")->required();
    expand->add_option("--name", new_name, "name of the expanded bundle");

    CLI::App* demo = app.add_subcommand("encode-demo", "one encrypt/decrypt round trip");
    demo->add_option("--pair", pair_path, "pair manifest JSON")->required();
    demo->add_option("--message", message_index, "message representative index");
    demo->add_option("--seed", seed, "RNG seed");

    CLI::App* simulate_cmd = app.add_subcommand("simulate", "Monte Carlo run of the scheme");
    simulate_cmd->add_option("--pair", pair_path, "pair manifest JSON")->required();
    simulate_cmd->add_option("--channel", channel_text, "channel, e.g. depolarizing:0.05")->required();
    simulate_cmd->add_option("--trials", trials, "number of trials");
    simulate_cmd->add_option("--seed", seed, "RNG seed (recorded in the report)");
    simulate_cmd->add_option("--json", json_path, "also write the report to this path");
    simulate_cmd->add_option("--csv", csv_path, "append a CSV row to this path");
    simulate_cmd->add_option("--max-dim", max_dim, "simulator dimension cap (overrides CC_MAX_DIM)");
    simulate_cmd->add_flag("--uniform-x", uniform_x, "draw x uniformly instead of fixing x = 0");

    CLI::App* fidelity_cmd = app.add_subcommand("fidelity", "exact fidelity accounting");
    fidelity_cmd->add_option("--pair", pair_path, "pair manifest JSON")->required();
    fidelity_cmd->add_option("--channel", channel_text, "channel spec")->required();
    fidelity_cmd->add_option("--json", json_path, "also write the report to this path");
    fidelity_cmd->add_option("--max-dim", max_dim, "simulator dimension cap");

    CLI::App* bounds = app.add_subcommand("bounds", "evaluate the leakage bound");
    bounds->add_option("--fidelity", bound_fidelity, "fidelity F in [0,1]")->required();
    bounds->add_option("--n", bound_n, "block length")->required();
    bounds->add_option("--rate", bound_rate, "rate k/n in log_q units")->required();
    bounds->add_option("--q", bound_q, "alphabet size");
    bounds->add_option("--json", json_path, "also write the report to this path");

    CLI::App* selftest = app.add_subcommand("selftest", "run the simulator invariant suite");
    selftest->add_option("--pair", selftest_pairs, "additional pair manifests to check");
    selftest->add_option("--max-dim", max_dim, "simulator dimension cap");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help() << "\n";
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        SimLimits limits = make_limits(max_dim);
        if (verify->parsed()) {
            PairBundle bundle = load_pair_bundle(pair_path);
            Json j;
            j["config"] = Json{{"command", "verify"}, {"pair", pair_path}};
            j["report"] = verify_pair(bundle);
            err << "pair '" << bundle.name << "': [[" << bundle.pair.n() << ","
                << bundle.pair.k() << "]] over GF(" << bundle.pair.field().spec() << ")\n";
            emit(out, j, json_path);
            return 0;
        }
        if (expand->parsed()) {
            PairBundle bundle = load_pair_bundle(pair_path);
            ConjugatePair expanded = expand_pair(bundle.pair);
            std::string name = new_name.empty() ? bundle.name + "_expanded" : new_name;
            std::string manifest = write_pair_bundle(out_dir, name, expanded);
            Json j;
            j["config"] = Json{{"command", "expand"},
                               {"pair", pair_path},
                               {"out", out_dir},
                               {"name", name}};
            j["manifest"] = manifest;
            j["field"] = expanded.field().spec();
            j["n"] = expanded.n();
            j["k1"] = expanded.k1();
            j["k2"] = expanded.k2();
            j["k"] = expanded.k();
            emit(out, j, json_path);
            return 0;
        }
        if (demo->parsed()) {
            PairBundle bundle = load_pair_bundle(pair_path);
            SchemeInstance scheme(bundle.pair);
            const auto& msgs = scheme.messages();
            if (message_index >= msgs.size())
                raise(ErrorCode::InvalidMessage,
                      "message index " + std::to_string(message_index) + " out of range (q^k = " +
                          std::to_string(msgs.size()) + ")");
            CounterRng rng(seed);
            auto enc = scheme.encrypt(msgs[message_index], rng);
            Word decoded = scheme.decrypt(enc.x, enc.transmitted);
            Json j;
            j["config"] = Json{{"command", "encode-demo"},
                               {"pair", pair_path},
                               {"message", message_index},
                               {"seed", seed}};
            j["message"] = word_json(msgs[message_index]);
            j["x"] = word_json(enc.x);
            j["dual_word"] = word_json(enc.dual_word);
            j["transmitted"] = word_json(enc.transmitted);
            j["decoded"] = word_json(decoded);
            j["roundtrip_ok"] = decoded == msgs[message_index];
            emit(out, j, json_path);
            return 0;
        }
        if (simulate_cmd->parsed()) {
            PairBundle bundle = load_pair_bundle(pair_path);
            ChannelSpec spec = ChannelSpec::parse(channel_text);
            SchemeInstance scheme(bundle.pair, uniform_x ? XDistribution::Uniform
                                                         : XDistribution::PointMassZero);
            PauliChannel channel = spec.to_channel(bundle.pair.field(), bundle.pair.n());
            SimulationReport report = simulate(scheme, channel, trials, seed, limits);
            Json j = Json::parse(report.to_json());
            j["config"] = Json{{"command", "simulate"}, {"pair", pair_path},
                               {"channel", spec.describe()}, {"trials", trials},
                               {"seed", seed},           {"uniform_x", uniform_x},
                               {"max_dim", max_dim}};
            err << "simulate: " << trials << " trials, error rate " << report.error_rate << "\n";
            emit(out, j, json_path);
            if (!csv_path.empty()) {
                bool fresh = !std::ifstream(csv_path).good();
                std::ofstream csv(csv_path, std::ios::app);
                if (!csv) raise(ErrorCode::BadInput, "cannot write CSV file: " + csv_path);
                if (fresh) csv << SimulationReport::csv_header() << "\n";
                csv << report.to_csv_row() << "\n";
            }
            return 0;
        }
        if (fidelity_cmd->parsed()) {
            PairBundle bundle = load_pair_bundle(pair_path);
            ChannelSpec spec = ChannelSpec::parse(channel_text);
            SchemeInstance scheme(bundle.pair);
            PauliChannel channel = spec.to_channel(bundle.pair.field(), bundle.pair.n());
            FidelityAccounting acc = fidelity_accounting(scheme, channel, limits);
            Json j;
            j["config"] = Json{{"command", "fidelity"},
                               {"pair", pair_path},
                               {"channel", spec.describe()},
                               {"max_dim", max_dim}};
            j["one_minus_ef"] = acc.one_minus_ef;
            j["pa_kprime_complement"] = acc.pa_out;
            j["split_bound"] = acc.split_bound;
            j["p_xi_out"] = acc.p_xi_out;
            j["p_zeta_out"] = acc.p_zeta_out;
            j["equality_ok"] = true; // fidelity_accounting raises otherwise
            emit(out, j, json_path);
            return 0;
        }
        if (bounds->parsed()) {
            LeakageBound b = leakage_bound(bound_fidelity, bound_n, bound_rate, bound_q);
            Json j;
            j["config"] = Json{{"command", "bounds"},
                               {"fidelity", bound_fidelity},
                               {"n", bound_n},
                               {"rate", bound_rate},
                               {"q", bound_q}};
            j["leakage_bound_bits"] = b.bits;
            j["h2_term"] = b.h2_term;
            j["rate_term"] = b.rate_term;
            j["overestimate_bits"] =
                b.overestimate_bits ? Json(*b.overestimate_bits) : Json(nullptr);
            emit(out, j, json_path);
            return 0;
        }
        if (selftest->parsed()) {
            return cmd_selftest(selftest_pairs, max_dim, out, err);
        }
    } catch (const Error& e) {
        Json j;
        j["error"] = e.code_name();
        j["message"] = e.what();
        out << j.dump(2) << "\n";
        return 1;
    } catch (const std::exception& e) {
        Json j;
        j["error"] = "InternalError";
        j["message"] = e.what();
        out << j.dump(2) << "\n";
        return 1;
    }
    err << "usage error: no subcommand\n";
    return 2;
}

} // namespace ccpair
