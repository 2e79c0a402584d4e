#include "cyclift/decoder.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "cyclift/errors.hpp"

namespace cyclift {

namespace {

bool syndrome_is_zero(const TannerGraph& G, std::span<const std::uint8_t> word) {
    for (int c = 0; c < G.n_checks(); ++c) {
        unsigned parity = 0;
        for (int e : G.check_edges(c)) parity ^= word[G.edge(e).var];
        if (parity & 1u) return false;
    }
    return true;
}

std::vector<int> support_vs(std::span<const std::uint8_t> decision,
                            std::span<const std::uint8_t> transmitted) {
    std::vector<int> sup;
    for (std::size_t v = 0; v < decision.size(); ++v) {
        std::uint8_t ref = transmitted.empty() ? 0 : transmitted[v];
        if (decision[v] != ref) sup.push_back(static_cast<int>(v));
    }
    return sup;
}

std::uint64_t fnv1a(const void* data, std::size_t bytes) {
    const auto* p = static_cast<const unsigned char*>(data);
    std::uint64_t h = 0xCBF29CE484222325ULL;
    for (std::size_t i = 0; i < bytes; ++i) {
        h ^= p[i];
        h *= 0x100000001B3ULL;
    }
    return h;
}

}  // namespace

HardDecisionDecoder::HardDecisionDecoder(const TannerGraph& G, DecoderConfig config)
    : graph_(&G), config_(std::move(config)) {
    if (config_.max_iterations < 1) throw validation_error("max_iterations must be >= 1");
    int max_deg = 0;
    for (int v = 0; v < G.n_vars(); ++v) max_deg = std::max(max_deg, G.var_degree(v));
    thresholds_.resize(max_deg + 1);
    for (int d = 0; d <= max_deg; ++d) thresholds_[d] = flip_threshold(d);
    msg_vc_.resize(G.n_edges());
    msg_cv_.resize(G.n_edges());
    decision_.resize(G.n_vars());
    received_.resize(G.n_vars());
}

int HardDecisionDecoder::flip_threshold(int degree) const {
    if (config_.algorithm == DecoderAlgorithm::GallagerA) return gallager_a_threshold(degree);
    if (degree < static_cast<int>(config_.gb_thresholds.size()) &&
        config_.gb_thresholds[degree] > 0) {
        return config_.gb_thresholds[degree];
    }
    return std::max(1, default_gb_threshold(degree));
}

void HardDecisionDecoder::start(std::span<const std::uint8_t> received) {
    const TannerGraph& G = *graph_;
    if (static_cast<int>(received.size()) != G.n_vars()) {
        throw validation_error("received word length " + std::to_string(received.size()) +
                               " does not match n = " + std::to_string(G.n_vars()));
    }
    std::copy(received.begin(), received.end(), received_.begin());
    std::copy(received.begin(), received.end(), decision_.begin());
    for (int e = 0; e < G.n_edges(); ++e) msg_vc_[e] = received_[G.edge(e).var];
}

bool HardDecisionDecoder::syndrome_ok() const { return syndrome_is_zero(*graph_, decision_); }

void HardDecisionDecoder::step() {
    const TannerGraph& G = *graph_;
    // Check pass: extrinsic XOR. A degree-1 check has no extrinsic input and
    // sends 0.
    for (int c = 0; c < G.n_checks(); ++c) {
        auto edges = G.check_edges(c);
        unsigned total = 0;
        for (int e : edges) total ^= msg_vc_[e];
        if (edges.size() == 1) {
            msg_cv_[edges[0]] = 0;
        } else {
            for (int e : edges) msg_cv_[e] = static_cast<std::uint8_t>(total ^ msg_vc_[e]);
        }
    }
    // Variable pass: messages flip on >= threshold extrinsic disagreements;
    // the tentative decision is the majority vote over all incoming messages
    // plus the channel value, ties keeping the channel value.
    for (int v = 0; v < G.n_vars(); ++v) {
        auto edges = G.var_edges(v);
        const std::uint8_t r = received_[v];
        int disagreements = 0;
        for (int e : edges) disagreements += (msg_cv_[e] != r);
        const int dv = static_cast<int>(edges.size());
        decision_[v] = (2 * disagreements > dv + 1) ? static_cast<std::uint8_t>(r ^ 1u) : r;
        const int t = thresholds_[dv];
        for (int e : edges) {
            int extrinsic = disagreements - (msg_cv_[e] != r);
            msg_vc_[e] = (extrinsic >= t) ? static_cast<std::uint8_t>(r ^ 1u) : r;
        }
    }
}

std::uint64_t HardDecisionDecoder::state_hash() const {
    return fnv1a(msg_vc_.data(), msg_vc_.size());
}

DecodeOutcome HardDecisionDecoder::decode(std::span<const std::uint8_t> received,
                                          std::span<const std::uint8_t> transmitted) {
    start(received);
    DecodeOutcome out;
    if (syndrome_ok()) {
        out.success = true;
    } else {
        for (int it = 1; it <= config_.max_iterations; ++it) {
            step();
            out.iterations = it;
            if (config_.record_trace) {
                out.error_trace.push_back(
                    static_cast<int>(support_vs(decision_, transmitted).size()));
            }
            if (syndrome_ok()) {
                out.success = true;
                break;
            }
        }
    }
    out.decision.assign(decision_.begin(), decision_.end());
    out.error_support = support_vs(out.decision, transmitted);
    return out;
}

DecodeOutcome HardDecisionDecoder::decode_support(std::span<const int> error_support) {
    std::vector<std::uint8_t> received(graph_->n_vars(), 0);
    for (int v : error_support) received[v] = 1;
    return decode(received);
}

MinSumDecoder::MinSumDecoder(const TannerGraph& G, DecoderConfig config)
    : graph_(&G), config_(std::move(config)) {
    if (config_.max_iterations < 1) throw validation_error("max_iterations must be >= 1");
    llr_.resize(G.n_vars());
    msg_vc_.resize(G.n_edges());
    msg_cv_.resize(G.n_edges());
    decision_.resize(G.n_vars());
}

void MinSumDecoder::start(std::span<const double> llrs) {
    const TannerGraph& G = *graph_;
    if (static_cast<int>(llrs.size()) != G.n_vars()) {
        throw validation_error("LLR vector length " + std::to_string(llrs.size()) +
                               " does not match n = " + std::to_string(G.n_vars()));
    }
    for (double l : llrs) {
        if (!std::isfinite(l)) throw validation_error("LLR input contains a non-finite value");
    }
    std::copy(llrs.begin(), llrs.end(), llr_.begin());
    for (int v = 0; v < G.n_vars(); ++v) decision_[v] = llr_[v] < 0.0;
    for (int e = 0; e < G.n_edges(); ++e) msg_vc_[e] = llr_[G.edge(e).var];
}

bool MinSumDecoder::syndrome_ok() const { return syndrome_is_zero(*graph_, decision_); }

void MinSumDecoder::step() {
    const TannerGraph& G = *graph_;
    for (int c = 0; c < G.n_checks(); ++c) {
        auto edges = G.check_edges(c);
        if (edges.size() == 1) {
            msg_cv_[edges[0]] = 0.0;
            continue;
        }
        double min1 = std::numeric_limits<double>::infinity();
        double min2 = std::numeric_limits<double>::infinity();
        int argmin = -1;
        unsigned sign_bits = 0;
        for (int e : edges) {
            double m = msg_vc_[e];
            sign_bits ^= std::signbit(m) ? 1u : 0u;
            double mag = std::fabs(m);
            if (mag < min1) {
                min2 = min1;
                min1 = mag;
                argmin = e;
            } else if (mag < min2) {
                min2 = mag;
            }
        }
        for (int e : edges) {
            unsigned sign = sign_bits ^ (std::signbit(msg_vc_[e]) ? 1u : 0u);
            double mag = (e == argmin ? min2 : min1) * config_.min_sum_scale;
            msg_cv_[e] = sign ? -mag : mag;
        }
    }
    for (int v = 0; v < G.n_vars(); ++v) {
        auto edges = G.var_edges(v);
        double total = llr_[v];
        for (int e : edges) total += msg_cv_[e];
        decision_[v] = total < 0.0;
        for (int e : edges) msg_vc_[e] = total - msg_cv_[e];
    }
}

std::uint64_t MinSumDecoder::state_hash() const {
    return fnv1a(msg_vc_.data(), msg_vc_.size() * sizeof(double));
}

DecodeOutcome MinSumDecoder::decode(std::span<const double> llrs,
                                    std::span<const std::uint8_t> transmitted) {
    start(llrs);
    DecodeOutcome out;
    if (syndrome_ok()) {
        out.success = true;
    } else {
        for (int it = 1; it <= config_.max_iterations; ++it) {
            step();
            out.iterations = it;
            if (config_.record_trace) {
                out.error_trace.push_back(
                    static_cast<int>(support_vs(decision_, transmitted).size()));
            }
            if (syndrome_ok()) {
                out.success = true;
                break;
            }
        }
    }
    out.decision.assign(decision_.begin(), decision_.end());
    out.error_support = support_vs(out.decision, transmitted);
    return out;
}

DecodeOutcome gallager_a_decode(const ParityCheckMatrix& H, std::span<const std::uint8_t> received,
                                DecoderConfig config) {
    config.algorithm = DecoderAlgorithm::GallagerA;
    TannerGraph G(H);
    return HardDecisionDecoder(G, config).decode(received);
}

DecodeOutcome gallager_b_decode(const ParityCheckMatrix& H, std::span<const std::uint8_t> received,
                                DecoderConfig config) {
    config.algorithm = DecoderAlgorithm::GallagerB;
    TannerGraph G(H);
    return HardDecisionDecoder(G, config).decode(received);
}

DecodeOutcome min_sum_decode(const ParityCheckMatrix& H, std::span<const double> llrs,
                             DecoderConfig config) {
    config.algorithm = DecoderAlgorithm::MinSum;
    TannerGraph G(H);
    return MinSumDecoder(G, config).decode(llrs);
}

}  // namespace cyclift
