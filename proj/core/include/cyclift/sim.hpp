#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cyclift/channel.hpp"
#include "cyclift/critical.hpp"
#include "cyclift/decoder.hpp"
#include "cyclift/parity_check.hpp"

namespace cyclift {

// Stop at min_frame_errors collected errors or max_frames, whichever first.
struct StopRule {
    std::uint64_t min_frame_errors = 100;
    std::uint64_t max_frames = 10'000'000;
};

struct SimResult {
    double channel_param = 0.0;
    std::uint64_t frames = 0;
    std::uint64_t frame_errors = 0;
    std::uint64_t bit_errors = 0;
    double fer = 0.0;
    double ber = 0.0;
    double ci_lo = 0.0;  // 95% normal-approximation interval on FER
    double ci_hi = 0.0;
    double elapsed_seconds = 0.0;  // wall clock, not part of reproducibility
    std::uint64_t seed = 0;
};

// All-zero-codeword Monte Carlo (licensed by decoder symmetry). Frame k
// always uses the seed derived from (seed, k), and the stop rule is applied
// in frame order, so the result is bit-identical for any thread count.
SimResult monte_carlo(const ParityCheckMatrix& H, const DecoderConfig& decoder,
                      const ChannelModel& channel, const StopRule& stop, std::uint64_t seed,
                      int n_threads = 0);

struct FloorEstimate {
    std::optional<int> J;       // nullopt: no failure up to the search depth
    std::uint64_t N_J = 0;      // number of weight-J failing patterns
    bool below_search_depth = false;
    std::vector<std::pair<double, double>> predicted;  // (epsilon, N_J * epsilon^J)
};

// Exhaustive all-variables search up to max_weight, then the error-floor
// prediction FER(eps) = N_J * eps^J on the given grid.
FloorEstimate estimate_floor(const ParityCheckMatrix& H, const DecoderConfig& decoder,
                             int max_weight, const std::vector<double>& eps_grid,
                             std::uint64_t pattern_cap = 50'000'000, int n_threads = 0);

std::vector<double> log_grid(double lo, double hi, int points);

// CSV schema shared by the simulate subcommand and the tests.
std::string csv_header();
std::string csv_row(const std::string& code_name, const ParityCheckMatrix& H,
                    const std::string& decoder_name, const ChannelModel& channel,
                    const SimResult& result);

std::string decoder_short_name(DecoderAlgorithm algorithm);

}  // namespace cyclift
