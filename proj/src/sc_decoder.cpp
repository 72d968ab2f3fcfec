#include "polar/sc_decoder.hpp"

#include <stdexcept>

namespace polar {

std::uint8_t hard_decision(double llr, std::size_t index, const CodeSpec& spec) {
    if (index >= spec.n) {
        throw std::invalid_argument("hard_decision: index out of range");
    }
    if (spec.frozen[index]) {
        return 0;
    }
    return llr < 0.0 ? 1 : 0;
}

ScDecoder::ScDecoder(const CodeSpec& spec, NodeRoute route)
    : spec_(spec), route_(route) {
    llr_.resize(spec_.m + 1);
    sums_.resize(spec_.m + 1);
    left_sums_.resize(spec_.m + 1);
    for (unsigned d = 0; d <= spec_.m; ++d) {
        const std::size_t len = spec_.n >> d;
        llr_[d].resize(len);
        sums_[d].resize(len);
        left_sums_[d].resize(len / 2);
    }
    u_hat_.resize(spec_.n);
}

BitVector ScDecoder::decode(const LlrFrame& llrs) {
    if (llrs.size() != spec_.n) {
        throw std::invalid_argument("sc_decode: length mismatch");
    }
    llr_[0].assign(llrs.begin(), llrs.end());
    decode_segment(0, 0);
    return u_hat_;
}

// Decides u[base .. base+len) from llr_[depth]; leaves the segment's
// re-encoded bits in sums_[depth] for the caller's g stage.
void ScDecoder::decode_segment(unsigned depth, std::size_t base) {
    const std::size_t len = spec_.n >> depth;
    if (len == 1) {
        const std::uint8_t bit = hard_decision(llr_[depth][0], base, spec_);
        u_hat_[base] = bit;
        sums_[depth][0] = bit;
        return;
    }

    const std::size_t half = len / 2;
    const std::vector<double>& in = llr_[depth];
    std::vector<double>& child = llr_[depth + 1];

    if (route_ == NodeRoute::Direct) {
        for (std::size_t j = 0; j < half; ++j) {
            child[j] = f_node(in[j], in[j + half]);
        }
    } else {
        const PeConfig cfg{PeMode::ScF, 1.0, 0};
        for (std::size_t j = 0; j < half; ++j) {
            child[j] = unified_type1(cfg, in[j], in[j + half], 0.0);
        }
    }
    decode_segment(depth + 1, base);

    BitVector& left = left_sums_[depth];
    left.assign(sums_[depth + 1].begin(), sums_[depth + 1].end());

    if (route_ == NodeRoute::Direct) {
        for (std::size_t j = 0; j < half; ++j) {
            child[j] = g_node(in[j], in[j + half], left[j]);
        }
    } else {
        for (std::size_t j = 0; j < half; ++j) {
            const PeConfig cfg{PeMode::ScG, 1.0, left[j]};
            child[j] = unified_type2(cfg, in[j], in[j + half], 0.0);
        }
    }
    decode_segment(depth + 1, base + half);

    BitVector& out = sums_[depth];
    const BitVector& right = sums_[depth + 1];
    for (std::size_t j = 0; j < half; ++j) {
        out[j] = left[j] ^ right[j];
        out[j + half] = right[j];
    }
}

BitVector sc_decode(const LlrFrame& llrs, const CodeSpec& spec, NodeRoute route) {
    ScDecoder decoder(spec, route);
    return decoder.decode(llrs);
}

} // namespace polar
