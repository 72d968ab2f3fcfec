#include "polar/unified_pe.hpp"

#include "polar/codec.hpp"

namespace polar {

namespace {

// Mirrors the SC recursion: f across the half-block, descend left, g across
// the half-block, descend right. Leaves are serial bit decisions.
void emit_sc(std::vector<ScheduleStep>& plan, std::size_t n, unsigned m,
             unsigned depth, std::size_t base) {
    const std::size_t len = n >> depth;
    if (len == 1) {
        ScheduleStep decide;
        decide.kind = ScheduleStep::Kind::Decide;
        decide.u_index = base;
        plan.push_back(decide);
        return;
    }
    const unsigned level = m - depth - 1;
    plan.push_back({ScheduleStep::Kind::Node, PeMode::ScF, level, len / 2, 0});
    emit_sc(plan, n, m, depth + 1, base);
    plan.push_back({ScheduleStep::Kind::Node, PeMode::ScG, level, len / 2, 0});
    emit_sc(plan, n, m, depth + 1, base + len / 2);
}

} // namespace

std::vector<ScheduleStep> schedule_modes(DecoderAlg alg, std::size_t n,
                                         std::size_t iterations) {
    if (!is_power_of_two(n) || n < 2) {
        throw std::invalid_argument("schedule_modes: n must be a power of two >= 2");
    }
    const unsigned m = log2_exact(n);
    std::vector<ScheduleStep> plan;

    if (alg == DecoderAlg::Sc) {
        emit_sc(plan, n, m, 0, 0);
        return plan;
    }

    for (std::size_t it = 0; it < iterations; ++it) {
        for (unsigned level = m; level-- > 0;) { // right-to-left sweep
            plan.push_back({ScheduleStep::Kind::Node, PeMode::BpType1, level, n / 2, 0});
            plan.push_back({ScheduleStep::Kind::Node, PeMode::BpType2, level, n / 2, 0});
        }
        for (unsigned level = 0; level < m; ++level) { // left-to-right sweep
            plan.push_back({ScheduleStep::Kind::Node, PeMode::BpType1, level, n / 2, 0});
            plan.push_back({ScheduleStep::Kind::Node, PeMode::BpType2, level, n / 2, 0});
        }
    }
    return plan;
}

std::size_t total_activations(const std::vector<ScheduleStep>& plan) {
    std::size_t total = 0;
    for (const auto& step : plan) {
        if (step.kind == ScheduleStep::Kind::Node) {
            total += step.activations;
        }
    }
    return total;
}

} // namespace polar
