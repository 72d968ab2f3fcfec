#include "polar/hybrid_decoder.hpp"

#include <stdexcept>

namespace polar {

std::uint64_t latency_cycles(DecodeSource kind, std::uint64_t v,
                             const LatencyParams& params, std::size_t n) {
    if (!is_power_of_two(n) || (std::size_t{1} << params.m) != n) {
        throw std::invalid_argument("latency_cycles: m does not match n");
    }
    if (params.sc_output_bits_log2 < 2) {
        throw std::invalid_argument("latency_cycles: sc_output_bits_log2 must be >= 2");
    }
    const std::uint64_t bp_cycles = 2 * v + params.m;
    if (kind == DecodeSource::BpEarly) {
        return bp_cycles;
    }
    const std::uint64_t sc_cycles = n >> (params.sc_output_bits_log2 - 2);
    return bp_cycles + sc_cycles;
}

HybridDecoder::HybridDecoder(const CodeSpec& spec, BpConfig bp_cfg,
                             LatencyParams latency)
    : bp_(spec, bp_cfg), sc_(spec), latency_(latency) {
    latency_.m = spec.m;
}

DecodeOutcome HybridDecoder::decode(const LlrFrame& llrs) {
    const CodeSpec& code = bp_.spec();
    BpOutput front = bp_.decode(llrs);

    DecodeOutcome outcome;
    outcome.iterations = front.iterations_used;
    if (front.stopped_early) {
        // Valid codeword found: the SC back end is not activated at all.
        outcome.u_hat = std::move(front.u_hat);
        outcome.source = DecodeSource::BpEarly;
        outcome.cycles = latency_cycles(DecodeSource::BpEarly,
                                        front.iterations_used, latency_, code.n);
    } else {
        outcome.u_hat = sc_.decode(front.denoised_llrs);
        outcome.source = DecodeSource::ScFallback;
        outcome.cycles = latency_cycles(DecodeSource::ScFallback,
                                        front.iterations_used, latency_, code.n);
    }
    outcome.info_hat = extract_info_bits(outcome.u_hat, code);
    return outcome;
}

DecodeOutcome hybrid_decode(const LlrFrame& llrs, const CodeSpec& spec,
                            std::size_t max_iter, BpConfig bp_cfg) {
    bp_cfg.max_iter = max_iter;
    HybridDecoder decoder(spec, bp_cfg);
    return decoder.decode(llrs);
}

} // namespace polar
