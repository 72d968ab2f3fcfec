#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "polar/node_math.hpp"

namespace polar {

// Operating mode of a unified computation block. The same datapath serves the
// SC f/g nodes and the BP Type-I/Type-II messages; the mode selects the input
// wiring.
enum class PeMode { ScF, ScG, BpType1, BpType2 };

struct PeConfig {
    PeMode mode = PeMode::ScF;
    double s = 1.0;          // scale (BP modes); forced to 1 for ScF
    std::uint8_t u_sum = 0;  // partial-sum bit, ScG only
};

// Whether a decoder evaluates its node functions directly or through the
// unified blocks. Outputs are bit-identical either way.
enum class NodeRoute { Direct, Unified };

// Type-I block: ScF ignores c and computes f(a,b); BpType1 computes the
// scaled Type-I message on (a,b,c).
inline double unified_type1(const PeConfig& cfg, double a, double b, double c) {
    switch (cfg.mode) {
    case PeMode::ScF:
        return msg_type1(1.0, a, b, 0.0);
    case PeMode::BpType1:
        return msg_type1(cfg.s, a, b, c);
    default:
        throw std::invalid_argument("unified_type1: mode mismatch");
    }
}

// Type-II block: ScG takes the original SC operands (a, b, cfg.u_sum) and
// reduces them internally; BpType2 computes the Type-II message on (a,b,c).
inline double unified_type2(const PeConfig& cfg, double a, double b, double c) {
    switch (cfg.mode) {
    case PeMode::ScG:
        return msg_type2(sign_of(b), cfg.u_sum ? -a : a, b, b);
    case PeMode::BpType2:
        return msg_type2(cfg.s, a, b, c);
    default:
        (void)c;
        throw std::invalid_argument("unified_type2: mode mismatch");
    }
}

// Reference hardware footprint for the unified (1024, 512) decoder: every
// stage's PE bank instantiated (m * n/2 blocks), 4 adder delays on the
// critical path after retiming. Documented constants; nothing here
// simulates gate-level timing.
inline constexpr std::size_t kReferencePeCount = 5120;
inline constexpr unsigned kReferenceCriticalPathAdders = 4;

enum class DecoderAlg { Sc, Bp };

// One step of a decoding schedule: either a bank of identical node
// operations firing in parallel, or a serial bit decision (SC only).
struct ScheduleStep {
    enum class Kind { Node, Decide };
    Kind kind = Kind::Node;
    PeMode mode = PeMode::ScF;   // valid when kind == Node
    unsigned level = 0;          // graph stage, 0 = u side
    std::size_t activations = 0; // PEs firing at this step
    std::size_t u_index = 0;     // valid when kind == Decide
};

// Emits the mode plan a configurable controller would sequence: the serial
// f/g activation order for SC, or `iterations` round-trip sweeps for BP.
std::vector<ScheduleStep> schedule_modes(DecoderAlg alg, std::size_t n,
                                         std::size_t iterations = 1);

std::size_t total_activations(const std::vector<ScheduleStep>& plan);

} // namespace polar
