#include "cyclift/sim.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <sstream>
#include <thread>

#include "cyclift/errors.hpp"
#include "cyclift/rng.hpp"
#include "cyclift/tanner_graph.hpp"

namespace cyclift {

namespace {

struct FrameOutcome {
    std::uint8_t frame_error;
    std::uint32_t bit_errors;
};

}  // namespace

SimResult monte_carlo(const ParityCheckMatrix& H, const DecoderConfig& decoder,
                      const ChannelModel& channel, const StopRule& stop, std::uint64_t seed,
                      int n_threads) {
    validate_channel(channel);
    if (stop.min_frame_errors < 1 || stop.max_frames < 1) {
        throw validation_error("stop rule needs min_frame_errors >= 1 and max_frames >= 1");
    }
    const bool soft = decoder.algorithm == DecoderAlgorithm::MinSum;
    if (soft && !std::holds_alternative<BiAwgnChannel>(channel)) {
        throw validation_error("min-sum decoding expects the AWGN channel");
    }
    if (!soft && !std::holds_alternative<BscChannel>(channel)) {
        throw validation_error("hard-decision decoding expects the BSC");
    }

    const auto t0 = std::chrono::steady_clock::now();
    const TannerGraph G(H);
    const std::vector<std::uint8_t> zero(H.n(), 0);
    const int workers =
        n_threads > 0 ? n_threads : std::max(1u, std::thread::hardware_concurrency());

    SimResult result;
    result.channel_param = channel_parameter(channel);
    result.seed = seed;

    // Frames are evaluated in fixed-size blocks; each block is scanned in
    // frame order for the stop point, so scheduling cannot change the result.
    const std::uint64_t kBlock = 4096;
    std::vector<FrameOutcome> outcomes(kBlock);

    std::uint64_t frame_base = 0;
    bool done = false;
    while (!done && frame_base < stop.max_frames) {
        const std::uint64_t block = std::min(kBlock, stop.max_frames - frame_base);

        auto work = [&](int worker) {
            HardDecisionDecoder hd(G, decoder);
            MinSumDecoder ms(G, decoder);
            for (std::uint64_t k = worker; k < block; k += static_cast<std::uint64_t>(workers)) {
                const std::uint64_t frame_seed = derive_seed(seed, frame_base + k);
                DecodeOutcome out;
                if (soft) {
                    auto llrs = transmit_biawgn(zero, std::get<BiAwgnChannel>(channel).sigma,
                                                frame_seed);
                    out = ms.decode(llrs);
                } else {
                    auto bits = transmit_bsc(zero, std::get<BscChannel>(channel).epsilon,
                                             frame_seed);
                    out = hd.decode(bits);
                }
                const auto bits_wrong = static_cast<std::uint32_t>(out.error_support.size());
                outcomes[k] = {static_cast<std::uint8_t>(bits_wrong > 0 ? 1 : 0), bits_wrong};
            }
        };

        if (workers <= 1) {
            work(0);
        } else {
            std::vector<std::thread> threads;
            threads.reserve(workers);
            for (int t = 0; t < workers; ++t) threads.emplace_back(work, t);
            for (auto& th : threads) th.join();
        }

        for (std::uint64_t k = 0; k < block; ++k) {
            result.frames += 1;
            result.frame_errors += outcomes[k].frame_error;
            result.bit_errors += outcomes[k].bit_errors;
            if (result.frame_errors >= stop.min_frame_errors) {
                done = true;
                break;
            }
        }
        frame_base += block;
    }

    result.fer = result.frames ? static_cast<double>(result.frame_errors) /
                                     static_cast<double>(result.frames)
                               : 0.0;
    result.ber = result.frames ? static_cast<double>(result.bit_errors) /
                                     (static_cast<double>(result.frames) * H.n())
                               : 0.0;
    const double stderr_fer =
        result.frames ? std::sqrt(std::max(0.0, result.fer * (1.0 - result.fer) /
                                                     static_cast<double>(result.frames)))
                      : 0.0;
    result.ci_lo = std::max(0.0, result.fer - 1.96 * stderr_fer);
    result.ci_hi = std::min(1.0, result.fer + 1.96 * stderr_fer);
    result.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return result;
}

FloorEstimate estimate_floor(const ParityCheckMatrix& H, const DecoderConfig& decoder,
                             int max_weight, const std::vector<double>& eps_grid,
                             std::uint64_t pattern_cap, int n_threads) {
    TannerGraph G(H);
    CriticalSearchOptions options;
    options.max_weight = max_weight;
    options.pattern_cap = pattern_cap;
    options.n_threads = n_threads;
    auto search = critical_number_search(G, decoder, options);

    FloorEstimate estimate;
    if (!search.J) {
        estimate.below_search_depth = true;
        return estimate;
    }
    estimate.J = search.J;
    estimate.N_J = search.failures.size();
    for (double eps : eps_grid) {
        estimate.predicted.emplace_back(
            eps, static_cast<double>(estimate.N_J) * std::pow(eps, *search.J));
    }
    return estimate;
}

std::vector<double> log_grid(double lo, double hi, int points) {
    if (!(lo > 0.0) || !(hi > lo) || points < 2) {
        throw validation_error("log grid needs 0 < lo < hi and points >= 2");
    }
    std::vector<double> grid(points);
    const double step = std::log(hi / lo) / (points - 1);
    for (int k = 0; k < points; ++k) grid[k] = lo * std::exp(step * k);
    return grid;
}

std::string csv_header() {
    return "code,n,m,decoder,channel,param,frames,frame_errors,bit_errors,fer,ber,ci_lo,ci_hi,seed";
}

std::string csv_row(const std::string& code_name, const ParityCheckMatrix& H,
                    const std::string& decoder_name, const ChannelModel& channel,
                    const SimResult& result) {
    std::ostringstream out;
    out.precision(10);
    out << code_name << ',' << H.n() << ',' << H.m() << ',' << decoder_name << ','
        << channel_name(channel) << ',' << result.channel_param << ',' << result.frames << ','
        << result.frame_errors << ',' << result.bit_errors << ',' << result.fer << ','
        << result.ber << ',' << result.ci_lo << ',' << result.ci_hi << ',' << result.seed;
    return out.str();
}

std::string decoder_short_name(DecoderAlgorithm algorithm) {
    switch (algorithm) {
        case DecoderAlgorithm::GallagerA: return "ga";
        case DecoderAlgorithm::GallagerB: return "gb";
        case DecoderAlgorithm::MinSum: return "ms";
    }
    return "?";
}

}  // namespace cyclift
