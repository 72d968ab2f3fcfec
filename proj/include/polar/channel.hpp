#pragma once

#include <cstdint>
#include <random>

#include "polar/types.hpp"

namespace polar {

// BPSK over AWGN at a given Eb/N0; sigma2 is the per-dimension noise
// variance 1 / (2 * rate * 10^(ebn0_db/10)).
struct ChannelParams {
    double ebn0_db = 0.0;
    double rate = 0.5;
    double sigma2 = 0.0;

    ChannelParams(double ebn0_db, double rate);
};

// bit 0 -> +1.0, bit 1 -> -1.0, so positive LLRs favor bit 0 end to end.
std::vector<double> modulate_bpsk(const BitVector& x);

std::vector<double> add_awgn(const std::vector<double>& symbols, double sigma2,
                             std::mt19937_64& rng);
std::vector<double> add_awgn(const std::vector<double>& symbols, double sigma2,
                             std::uint64_t seed);

// llr_i = 2*y_i / sigma2.
LlrFrame llr_from_observation(const std::vector<double>& y, double sigma2);

// splitmix64 step; used to derive independent per-trial seeds from a master
// seed without correlated streams.
std::uint64_t splitmix64(std::uint64_t& state);
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream, std::uint64_t index);

} // namespace polar
