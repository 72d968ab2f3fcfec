#pragma once

#include "polar/codec.hpp"
#include "polar/node_math.hpp"
#include "polar/types.hpp"
#include "polar/unified_pe.hpp"

namespace polar {

// Frozen positions decode to 0; otherwise 0 iff llr >= 0.
std::uint8_t hard_decision(double llr, std::size_t index, const CodeSpec& spec);

// Bit-serial successive cancellation over the m-stage butterfly. Each
// instance owns its scratch state; instances are independent, a single
// instance is not thread-safe.
class ScDecoder {
public:
    explicit ScDecoder(const CodeSpec& spec, NodeRoute route = NodeRoute::Direct);

    // Decodes one frame and returns the full u-vector.
    BitVector decode(const LlrFrame& llrs);

    const CodeSpec& spec() const { return spec_; }

private:
    void decode_segment(unsigned depth, std::size_t base);

    CodeSpec spec_;
    NodeRoute route_;
    // Per-depth scratch in the recursive layout: llr_[d] holds the n>>d
    // segment LLRs, sums_[d] the segment's re-encoded partial sums, and
    // left_sums_[d] the left-child sums kept alive across the right descent.
    std::vector<std::vector<double>> llr_;
    std::vector<BitVector> sums_;
    std::vector<BitVector> left_sums_;
    BitVector u_hat_;
};

// One-shot convenience wrapper.
BitVector sc_decode(const LlrFrame& llrs, const CodeSpec& spec,
                    NodeRoute route = NodeRoute::Direct);

} // namespace polar
