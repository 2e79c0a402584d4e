#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "cyclift/parity_check.hpp"
#include "cyclift/tanner_graph.hpp"

namespace cyclift {

enum class DecoderAlgorithm { GallagerA, GallagerB, MinSum };

// Default Gallager B flip threshold: strict majority of the d_v - 1
// extrinsic messages. Gallager A is the d_v - 1 ("all disagree") threshold.
inline int default_gb_threshold(int var_degree) { return (var_degree - 1) / 2 + 1; }
inline int gallager_a_threshold(int var_degree) { return var_degree < 2 ? 1 : var_degree - 1; }

struct DecoderConfig {
    DecoderAlgorithm algorithm = DecoderAlgorithm::GallagerB;
    int max_iterations = 50;
    // Per-degree Gallager B threshold override, indexed by variable degree;
    // entries <= 0 (or degrees past the end) fall back to the default rule.
    std::vector<int> gb_thresholds;
    double min_sum_scale = 1.0;  // 1.0 = plain min-sum
    bool record_trace = false;
};

struct DecodeOutcome {
    bool success = false;  // syndrome of the final decision is zero
    int iterations = 0;
    std::vector<std::uint8_t> decision;
    std::vector<int> error_support;  // vs the transmitted word (all-zero when unspecified)
    std::vector<int> error_trace;    // per-iteration error counts when record_trace is set
};

// Gallager A/B message-passing engine over a fixed graph. Buffers are reused
// across calls, so one engine per thread decodes many words cheaply. The
// step interface exposes per-iteration state for failure analysis.
class HardDecisionDecoder {
public:
    HardDecisionDecoder(const TannerGraph& G, DecoderConfig config);

    DecodeOutcome decode(std::span<const std::uint8_t> received,
                         std::span<const std::uint8_t> transmitted = {});

    // Decodes all-zero + flips at the support positions; avoids building the
    // received vector on the caller's side.
    DecodeOutcome decode_support(std::span<const int> error_support);

    // Step interface. start() primes the engine and computes the iteration-0
    // decision (the received word itself).
    void start(std::span<const std::uint8_t> received);
    bool syndrome_ok() const;
    void step();  // one check+variable pass, updates decision
    std::span<const std::uint8_t> decision() const { return decision_; }
    std::uint64_t state_hash() const;  // hash of the variable-to-check messages

    const TannerGraph& graph() const { return *graph_; }
    const DecoderConfig& config() const { return config_; }

private:
    int flip_threshold(int degree) const;

    const TannerGraph* graph_;
    DecoderConfig config_;
    std::vector<int> thresholds_;  // by degree
    std::vector<std::uint8_t> received_;
    std::vector<std::uint8_t> msg_vc_;
    std::vector<std::uint8_t> msg_cv_;
    std::vector<std::uint8_t> decision_;
};

// Plain (optionally scaled) min-sum over LLRs. Hard decision by total LLR
// sign, ties to bit 0.
class MinSumDecoder {
public:
    MinSumDecoder(const TannerGraph& G, DecoderConfig config);

    DecodeOutcome decode(std::span<const double> llrs,
                         std::span<const std::uint8_t> transmitted = {});

    void start(std::span<const double> llrs);
    bool syndrome_ok() const;
    void step();
    std::span<const std::uint8_t> decision() const { return decision_; }
    std::uint64_t state_hash() const;

    const TannerGraph& graph() const { return *graph_; }

private:
    const TannerGraph* graph_;
    DecoderConfig config_;
    std::vector<double> llr_;
    std::vector<double> msg_vc_;
    std::vector<double> msg_cv_;
    std::vector<std::uint8_t> decision_;
};

// One-shot conveniences; they build the graph per call.
DecodeOutcome gallager_a_decode(const ParityCheckMatrix& H, std::span<const std::uint8_t> received,
                                DecoderConfig config = {});
DecodeOutcome gallager_b_decode(const ParityCheckMatrix& H, std::span<const std::uint8_t> received,
                                DecoderConfig config = {});
DecodeOutcome min_sum_decode(const ParityCheckMatrix& H, std::span<const double> llrs,
                             DecoderConfig config = {});

}  // namespace cyclift
