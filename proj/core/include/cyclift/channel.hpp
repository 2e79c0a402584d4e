#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace cyclift {

// Binary symmetric channel with crossover probability epsilon in [0, 1/2).
struct BscChannel {
    double epsilon = 0.0;
};

// Binary-input AWGN: x = 1 - 2c, y = x + noise(sigma), llr = 2y / sigma^2.
struct BiAwgnChannel {
    double sigma = 1.0;
};

using ChannelModel = std::variant<BscChannel, BiAwgnChannel>;

// sigma from Eb/N0 in dB at a given code rate: sigma^2 = 1/(2 r 10^(dB/10)).
BiAwgnChannel biawgn_from_ebn0(double ebn0_db, double rate);

// Throws validation_error on an out-of-range parameter.
void validate_channel(const ChannelModel& channel);

std::string channel_name(const ChannelModel& channel);
double channel_parameter(const ChannelModel& channel);

std::vector<std::uint8_t> transmit_bsc(std::span<const std::uint8_t> codeword, double epsilon,
                                       std::uint64_t seed);
std::vector<double> transmit_biawgn(std::span<const std::uint8_t> codeword, double sigma,
                                    std::uint64_t seed);

// Received word of either kind, depending on the channel.
struct Received {
    std::vector<std::uint8_t> bits;  // BSC
    std::vector<double> llrs;        // BIAWGN
    bool is_soft() const { return !llrs.empty(); }
};

Received transmit(std::span<const std::uint8_t> codeword, const ChannelModel& channel,
                  std::uint64_t seed);

}  // namespace cyclift
