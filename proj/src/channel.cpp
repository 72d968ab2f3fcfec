#include "polar/channel.hpp"

#include <cmath>
#include <stdexcept>

namespace polar {

ChannelParams::ChannelParams(double ebn0_db_, double rate_)
    : ebn0_db(ebn0_db_), rate(rate_) {
    if (!(rate > 0.0 && rate <= 1.0)) {
        throw std::invalid_argument("ChannelParams: rate must lie in (0,1]");
    }
    sigma2 = 1.0 / (2.0 * rate * std::pow(10.0, ebn0_db / 10.0));
}

std::vector<double> modulate_bpsk(const BitVector& x) {
    std::vector<double> symbols(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        symbols[i] = x[i] ? -1.0 : 1.0;
    }
    return symbols;
}

std::vector<double> add_awgn(const std::vector<double>& symbols, double sigma2,
                             std::mt19937_64& rng) {
    if (!(sigma2 > 0.0)) {
        throw std::invalid_argument("add_awgn: variance must be positive");
    }
    std::normal_distribution<double> noise(0.0, std::sqrt(sigma2));
    std::vector<double> y(symbols.size());
    for (std::size_t i = 0; i < symbols.size(); ++i) {
        y[i] = symbols[i] + noise(rng);
    }
    return y;
}

std::vector<double> add_awgn(const std::vector<double>& symbols, double sigma2,
                             std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    return add_awgn(symbols, sigma2, rng);
}

LlrFrame llr_from_observation(const std::vector<double>& y, double sigma2) {
    if (!(sigma2 > 0.0)) {
        throw std::invalid_argument("llr_from_observation: variance must be positive");
    }
    LlrFrame llrs(y.size());
    const double scale = 2.0 / sigma2;
    for (std::size_t i = 0; i < y.size(); ++i) {
        llrs[i] = scale * y[i];
    }
    return llrs;
}

std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream, std::uint64_t index) {
    std::uint64_t state = master;
    std::uint64_t mixed = splitmix64(state);
    state = mixed ^ stream;
    mixed = splitmix64(state);
    state = mixed ^ index;
    return splitmix64(state);
}

} // namespace polar
