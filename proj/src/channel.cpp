#include "ccpair/channel.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace ccpair {

namespace {
void check_distribution(const std::vector<double>& probs) {
    double sum = 0.0;
    for (double p : probs) {
        if (p < 0.0) raise(ErrorCode::BadInput, "negative probability in channel table");
        sum += p;
    }
    if (std::abs(sum - 1.0) > 1e-12)
        raise(ErrorCode::BadInput, "channel probabilities sum to " + std::to_string(sum));
}
} // namespace

PauliChannel PauliChannel::iid(const Field& field, size_t n, std::vector<double> symbol_probs) {
    const uint64_t q = field.order();
    if (symbol_probs.size() != q * q)
        raise(ErrorCode::BadInput, "per-symbol table must have q^2 entries");
    check_distribution(symbol_probs);
    PauliChannel ch(field, n);
    ch.iid_ = true;
    ch.symbol_probs_ = std::move(symbol_probs);
    return ch;
}

PauliChannel PauliChannel::from_support(const Field& field, size_t n,
                                        std::vector<std::pair<SympVector, double>> support) {
    std::vector<double> probs;
    for (const auto& [label, p] : support) {
        if (label.n() != n) raise(ErrorCode::LengthMismatch, "channel label has wrong length");
        probs.push_back(p);
    }
    check_distribution(probs);
    PauliChannel ch(field, n);
    ch.iid_ = false;
    ch.support_ = std::move(support);
    return ch;
}

uint64_t PauliChannel::support_size() const {
    if (!iid_) return support_.size();
    uint64_t per_symbol = 0;
    for (double p : symbol_probs_)
        if (p > 0.0) ++per_symbol;
    uint64_t total = 1;
    for (size_t i = 0; i < n_; ++i) {
        if (total > (1ull << 62) / (per_symbol ? per_symbol : 1)) return 1ull << 62;
        total *= per_symbol;
    }
    return total;
}

void PauliChannel::for_each(const std::function<void(const SympVector&, double)>& visit) const {
    if (!iid_) {
        for (const auto& [label, p] : support_)
            if (p > 0.0) visit(label, p);
        return;
    }
    const uint32_t q = field_.order();
    std::vector<uint32_t> nonzero;
    for (uint32_t i = 0; i < q * q; ++i)
        if (symbol_probs_[i] > 0.0) nonzero.push_back(i);
    // Odometer over the per-symbol support.
    std::vector<size_t> digit(n_, 0);
    SympVector label(field_, n_);
    for (;;) {
        double p = 1.0;
        for (size_t i = 0; i < n_; ++i) {
            uint32_t code = nonzero[digit[i]];
            label.set_u(i, code / q);
            label.set_w(i, code % q);
            p *= symbol_probs_[code];
        }
        visit(label, p);
        size_t i = n_;
        while (i > 0) {
            if (++digit[i - 1] < nonzero.size()) break;
            digit[i - 1] = 0;
            --i;
        }
        if (i == 0) break;
    }
}

std::vector<double> PauliChannel::x_symbol_marginal() const {
    if (!iid_) raise(ErrorCode::BadInput, "per-symbol marginal requires an i.i.d. channel");
    const uint32_t q = field_.order();
    std::vector<double> marg(q, 0.0);
    for (uint32_t u = 0; u < q; ++u)
        for (uint32_t w = 0; w < q; ++w) marg[u] += symbol_probs_[u * q + w];
    return marg;
}

std::vector<double> PauliChannel::z_symbol_marginal() const {
    if (!iid_) raise(ErrorCode::BadInput, "per-symbol marginal requires an i.i.d. channel");
    const uint32_t q = field_.order();
    std::vector<double> marg(q, 0.0);
    for (uint32_t u = 0; u < q; ++u)
        for (uint32_t w = 0; w < q; ++w) marg[w] += symbol_probs_[u * q + w];
    return marg;
}

namespace {
size_t sample_index(const std::vector<double>& probs, CounterRng& rng) {
    double r = rng.next_double();
    double acc = 0.0;
    for (size_t i = 0; i < probs.size(); ++i) {
        acc += probs[i];
        if (r < acc) return i;
    }
    // r landed in the rounding tail; return the last nonzero entry.
    for (size_t i = probs.size(); i > 0; --i)
        if (probs[i - 1] > 0.0) return i - 1;
    return 0;
}
} // namespace

SympVector PauliChannel::sample(CounterRng& rng) const {
    if (!iid_) {
        std::vector<double> probs;
        probs.reserve(support_.size());
        for (const auto& [label, p] : support_) probs.push_back(p);
        return support_[sample_index(probs, rng)].first;
    }
    const uint32_t q = field_.order();
    SympVector label(field_, n_);
    for (size_t i = 0; i < n_; ++i) {
        uint32_t code = static_cast<uint32_t>(sample_index(symbol_probs_, rng));
        label.set_u(i, code / q);
        label.set_w(i, code % q);
    }
    return label;
}

Word PauliChannel::sample_x(CounterRng& rng) const {
    if (!iid_) return sample(rng).u_part();
    std::vector<double> marg = x_symbol_marginal();
    Word u(field_, n_);
    for (size_t i = 0; i < n_; ++i) u.set(i, static_cast<uint32_t>(sample_index(marg, rng)));
    return u;
}

PauliChannel ChannelSpec::to_channel(const Field& field, size_t n) const {
    const uint32_t q = field.order();
    std::vector<double> table(static_cast<size_t>(q) * q, 0.0);
    switch (kind) {
        case Kind::Depolarizing: {
            if (p < 0.0 || p > 1.0) raise(ErrorCode::DomainError, "depolarizing p outside [0,1]");
            for (uint32_t i = 1; i < q * q; ++i) table[i] = p / (q * q - 1);
            table[0] = 1.0 - p;
            break;
        }
        case Kind::IndependentXZ: {
            if (px < 0.0 || px > 1.0 || pz < 0.0 || pz > 1.0)
                raise(ErrorCode::DomainError, "independent-xz probabilities outside [0,1]");
            for (uint32_t u = 0; u < q; ++u)
                for (uint32_t w = 0; w < q; ++w) {
                    double pu = u == 0 ? 1.0 - px : px / (q - 1);
                    double pw = w == 0 ? 1.0 - pz : pz / (q - 1);
                    table[u * q + w] = pu * pw;
                }
            break;
        }
        case Kind::Custom:
            table = custom_symbol_probs;
            break;
    }
    return PauliChannel::iid(field, n, std::move(table));
}

ChannelSpec ChannelSpec::parse(const std::string& text) {
    size_t colon = text.find(':');
    std::string kind = colon == std::string::npos ? text : text.substr(0, colon);
    std::string args = colon == std::string::npos ? "" : text.substr(colon + 1);
    ChannelSpec spec;
    try {
        if (kind == "depolarizing") {
            spec.kind = Kind::Depolarizing;
            spec.p = std::stod(args);
        } else if (kind == "independent-xz") {
            spec.kind = Kind::IndependentXZ;
            size_t comma = args.find(',');
            if (comma == std::string::npos)
                raise(ErrorCode::BadInput, "independent-xz needs px,pz");
            spec.px = std::stod(args.substr(0, comma));
            spec.pz = std::stod(args.substr(comma + 1));
        } else if (kind == "custom") {
            // JSON file: {"entries": [{"u": int, "w": int, "p": float}, ...]},
            // a per-symbol table; unlisted labels get probability zero.
            spec.kind = Kind::Custom;
            std::ifstream in(args);
            if (!in) raise(ErrorCode::BadInput, "cannot open channel file: " + args);
            nlohmann::json j = nlohmann::json::parse(in);
            size_t q = 0;
            for (const auto& e : j.at("entries"))
                q = std::max({q, e.at("u").get<size_t>() + 1, e.at("w").get<size_t>() + 1});
            std::vector<double> table(q * q, 0.0);
            for (const auto& e : j.at("entries"))
                table[e.at("u").get<size_t>() * q + e.at("w").get<size_t>()] = e.at("p").get<double>();
            spec.custom_symbol_probs = std::move(table);
        } else {
            raise(ErrorCode::BadInput, "unknown channel kind: " + kind);
        }
    } catch (const nlohmann::json::exception& e) {
        raise(ErrorCode::BadInput, std::string("bad channel file: ") + e.what());
    } catch (const std::invalid_argument&) {
        raise(ErrorCode::BadInput, "cannot parse channel parameters: " + text);
    }
    return spec;
}

std::string ChannelSpec::describe() const {
    std::ostringstream out;
    switch (kind) {
        case Kind::Depolarizing: out << "depolarizing:" << p; break;
        case Kind::IndependentXZ: out << "independent-xz:" << px << "," << pz; break;
        case Kind::Custom: out << "custom"; break;
    }
    return out.str();
}

} // namespace ccpair
