#pragma once

#include <cstdint>

#include "polar/bp_decoder.hpp"
#include "polar/sc_decoder.hpp"

namespace polar {

enum class DecodeSource { BpEarly, ScFallback };

// Cycle model inputs: m = log2(n); sc_output_bits_log2 = k in the 2^k-bit
// output SC back end (default 8-bit output).
struct LatencyParams {
    unsigned m = 10;
    unsigned sc_output_bits_log2 = 3;
};

// BpEarly:    2v + m cycles (v = BP iterations used).
// ScFallback: 2v + m + n / 2^(k-2) cycles, v being the exhausted max_iter.
std::uint64_t latency_cycles(DecodeSource kind, std::uint64_t v,
                             const LatencyParams& params, std::size_t n);

struct DecodeOutcome {
    BitVector u_hat;
    BitVector info_hat;
    DecodeSource source = DecodeSource::BpEarly;
    std::size_t iterations = 0;
    std::uint64_t cycles = 0;
};

// BP front end with early stopping; on exhaustion the denoised right-end
// LLRs (not the raw channel LLRs) go to the SC back end. Single pass: SC
// never feeds back into BP.
class HybridDecoder {
public:
    HybridDecoder(const CodeSpec& spec, BpConfig bp_cfg = {},
                  LatencyParams latency = {});

    DecodeOutcome decode(const LlrFrame& llrs);

    const CodeSpec& spec() const { return bp_.spec(); }
    const LatencyParams& latency_params() const { return latency_; }

private:
    BpDecoder bp_;
    ScDecoder sc_;
    LatencyParams latency_;
};

// One-shot convenience wrapper.
DecodeOutcome hybrid_decode(const LlrFrame& llrs, const CodeSpec& spec,
                            std::size_t max_iter, BpConfig bp_cfg = {});

} // namespace polar
