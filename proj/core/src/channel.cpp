#include "cyclift/channel.hpp"

#include <cmath>

#include "cyclift/errors.hpp"
#include "cyclift/rng.hpp"

namespace cyclift {

BiAwgnChannel biawgn_from_ebn0(double ebn0_db, double rate) {
    if (rate <= 0.0 || rate > 1.0) {
        throw validation_error("code rate must be in (0, 1] to convert Eb/N0");
    }
    double snr = std::pow(10.0, ebn0_db / 10.0);
    return BiAwgnChannel{std::sqrt(1.0 / (2.0 * rate * snr))};
}

void validate_channel(const ChannelModel& channel) {
    if (const auto* bsc = std::get_if<BscChannel>(&channel)) {
        if (!(bsc->epsilon >= 0.0) || !(bsc->epsilon < 0.5)) {
            throw validation_error("BSC crossover probability must be in [0, 1/2)");
        }
    } else {
        const auto& awgn = std::get<BiAwgnChannel>(channel);
        if (!(awgn.sigma > 0.0) || !std::isfinite(awgn.sigma)) {
            throw validation_error("AWGN noise deviation must be positive and finite");
        }
    }
}

std::string channel_name(const ChannelModel& channel) {
    return std::holds_alternative<BscChannel>(channel) ? "bsc" : "awgn";
}

double channel_parameter(const ChannelModel& channel) {
    if (const auto* bsc = std::get_if<BscChannel>(&channel)) return bsc->epsilon;
    return std::get<BiAwgnChannel>(channel).sigma;
}

std::vector<std::uint8_t> transmit_bsc(std::span<const std::uint8_t> codeword, double epsilon,
                                       std::uint64_t seed) {
    validate_channel(BscChannel{epsilon});
    SplitMix64 rng(seed);
    std::vector<std::uint8_t> out(codeword.begin(), codeword.end());
    // Compare raw 64-bit draws against a fixed-point threshold; exact for
    // epsilon = 0 and reproducible everywhere.
    const double scaled = epsilon * 18446744073709551616.0;  // 2^64
    const std::uint64_t threshold =
        scaled >= 18446744073709551615.0 ? ~0ULL : static_cast<std::uint64_t>(scaled);
    for (auto& bit : out) {
        if (rng.next() < threshold) bit ^= 1u;
    }
    return out;
}

std::vector<double> transmit_biawgn(std::span<const std::uint8_t> codeword, double sigma,
                                    std::uint64_t seed) {
    validate_channel(BiAwgnChannel{sigma});
    SplitMix64 rng(seed);
    std::vector<double> llrs(codeword.size());
    const double two_over_var = 2.0 / (sigma * sigma);
    for (std::size_t k = 0; k < codeword.size(); ++k) {
        double x = codeword[k] ? -1.0 : 1.0;
        double y = x + sigma * rng.next_gaussian();
        llrs[k] = two_over_var * y;
    }
    return llrs;
}

Received transmit(std::span<const std::uint8_t> codeword, const ChannelModel& channel,
                  std::uint64_t seed) {
    Received r;
    if (const auto* bsc = std::get_if<BscChannel>(&channel)) {
        r.bits = transmit_bsc(codeword, bsc->epsilon, seed);
    } else {
        r.llrs = transmit_biawgn(codeword, std::get<BiAwgnChannel>(channel).sigma, seed);
    }
    return r;
}

}  // namespace cyclift
