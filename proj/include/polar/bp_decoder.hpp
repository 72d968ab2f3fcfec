#pragma once

#include <cstddef>

#include "polar/codec.hpp"
#include "polar/node_math.hpp"
#include "polar/types.hpp"
#include "polar/unified_pe.hpp"

namespace polar {

struct BpConfig {
    double scale = 0.9375;     // s in the Type-I/Type-II messages
    double saturation = 20.0;  // clamp bound applied after every node update
    double frozen_prior = 0.0; // 0 -> auto: 2x saturation
    std::size_t max_iter = 60;
    NodeRoute route = NodeRoute::Direct;
};

struct BpOutput {
    BitVector u_hat;        // left-end hard decisions, frozen forced to 0
    BitVector x_hat;        // right-end hard decisions
    LlrFrame denoised_llrs; // channel LLR + right-end extrinsic
    std::size_t iterations_used = 0;
    bool stopped_early = false;
};

// G-matrix re-encoding criterion: true iff encode(u_hat) = x_hat.
bool stop_check(const BitVector& u_hat, const BitVector& x_hat, const CodeSpec& spec);

// Min-sum belief propagation on the (m+1)-stage polar factor graph. Messages
// live on two (m+1) x n grids: left[] propagating toward u, right[]
// propagating toward x. Channel LLRs pin left row m, frozen priors pin right
// row 0. One iteration is a full right-to-left sweep followed by a full
// left-to-right sweep.
class BpDecoder {
public:
    explicit BpDecoder(const CodeSpec& spec, BpConfig cfg = {});

    // Runs up to cfg.max_iter iterations with the stop check after each.
    BpOutput decode(const LlrFrame& llrs);

    // Runs exactly `iterations` rounds with no stop checks (plain BP).
    BpOutput decode_fixed(const LlrFrame& llrs, std::size_t iterations);

    // Stepwise interface.
    void init(const LlrFrame& llrs);
    void iterate();
    std::size_t iterations() const { return iteration_; }
    BitVector current_u_hat() const;
    BitVector current_x_hat() const;
    LlrFrame denoised_llrs() const;

    // Row-major (m+1) x n grids, for inspection.
    const std::vector<double>& left_messages() const { return left_; }
    const std::vector<double>& right_messages() const { return right_; }

    const CodeSpec& spec() const { return spec_; }
    const BpConfig& config() const { return cfg_; }

private:
    void sweep_left();
    void sweep_right();
    bool converged();
    BpOutput finish(bool stopped_early);

    CodeSpec spec_;
    BpConfig cfg_;
    double prior_ = 0.0;
    std::vector<double> left_;  // (m+1) x n, row r at offset r*n
    std::vector<double> right_;
    std::size_t iteration_ = 0;
    bool initialized_ = false;
    BitVector u_scratch_;
    BitVector x_scratch_;
};

// One-shot convenience wrapper.
BpOutput bp_decode(const LlrFrame& llrs, const CodeSpec& spec, std::size_t max_iter,
                   BpConfig cfg = {});

} // namespace polar
