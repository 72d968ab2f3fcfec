#include "polar/bp_decoder.hpp"

#include <stdexcept>

namespace polar {

bool stop_check(const BitVector& u_hat, const BitVector& x_hat, const CodeSpec& spec) {
    if (u_hat.size() != spec.n || x_hat.size() != spec.n) {
        throw std::invalid_argument("stop_check: length mismatch");
    }
    return polar_transform(u_hat) == x_hat;
}

BpDecoder::BpDecoder(const CodeSpec& spec, BpConfig cfg) : spec_(spec), cfg_(cfg) {
    if (!(cfg_.saturation > 0.0)) {
        throw std::invalid_argument("BpDecoder: saturation bound must be positive");
    }
    if (!(cfg_.scale > 0.0 && cfg_.scale <= 1.0)) {
        throw std::invalid_argument("BpDecoder: scale must lie in (0,1]");
    }
    prior_ = cfg_.frozen_prior > 0.0 ? cfg_.frozen_prior : 2.0 * cfg_.saturation;
    const std::size_t cells = (spec_.m + 1) * spec_.n;
    left_.resize(cells);
    right_.resize(cells);
    u_scratch_.resize(spec_.n);
    x_scratch_.resize(spec_.n);
}

void BpDecoder::init(const LlrFrame& llrs) {
    if (llrs.size() != spec_.n) {
        throw std::invalid_argument("bp_decode: length mismatch");
    }
    std::fill(left_.begin(), left_.end(), 0.0);
    std::fill(right_.begin(), right_.end(), 0.0);
    // Pinned boundaries: channel LLRs on the right, frozen priors on the left.
    double* chan = left_.data() + spec_.m * spec_.n;
    for (std::size_t i = 0; i < spec_.n; ++i) {
        chan[i] = llrs[i];
    }
    for (std::size_t i = 0; i < spec_.n; ++i) {
        right_[i] = spec_.frozen[i] ? prior_ : 0.0;
    }
    iteration_ = 0;
    initialized_ = true;
}

// PE at level i joins (t, t + 2^i) across rows i and i+1; both sweeps visit
// stages in propagation order so fresh values carry across the whole graph
// within one sweep.
void BpDecoder::sweep_left() {
    const std::size_t n = spec_.n;
    const double s = cfg_.scale;
    const double bound = cfg_.saturation;
    for (unsigned i = spec_.m; i-- > 0;) {
        double* lo = left_.data() + i * n;        // output row
        const double* hi = left_.data() + (i + 1) * n;
        const double* ri = right_.data() + i * n;
        const std::size_t dist = std::size_t{1} << i;
        for (std::size_t blk = 0; blk < n; blk += 2 * dist) {
            for (std::size_t j = 0; j < dist; ++j) {
                const std::size_t t = blk + j;
                const std::size_t b = t + dist;
                lo[t] = clamp_llr(msg_type1(s, hi[t], hi[b], ri[b]), bound);
                lo[b] = clamp_llr(msg_type2(s, hi[b], hi[t], ri[t]), bound);
            }
        }
    }
}

void BpDecoder::sweep_right() {
    const std::size_t n = spec_.n;
    const double s = cfg_.scale;
    const double bound = cfg_.saturation;
    for (unsigned i = 0; i < spec_.m; ++i) {
        const double* lo = right_.data() + i * n;
        double* hi = right_.data() + (i + 1) * n;  // output row
        const double* li = left_.data() + (i + 1) * n;
        const std::size_t dist = std::size_t{1} << i;
        for (std::size_t blk = 0; blk < n; blk += 2 * dist) {
            for (std::size_t j = 0; j < dist; ++j) {
                const std::size_t t = blk + j;
                const std::size_t b = t + dist;
                hi[t] = clamp_llr(msg_type1(s, lo[t], li[b], lo[b]), bound);
                hi[b] = clamp_llr(msg_type2(s, lo[b], li[t], lo[t]), bound);
            }
        }
    }
}

void BpDecoder::iterate() {
    if (!initialized_) {
        throw std::logic_error("bp_iteration: state not initialized");
    }
    if (cfg_.route == NodeRoute::Direct) {
        sweep_left();
        sweep_right();
        ++iteration_;
        return;
    }
    // Unified-block routing: same sweeps, node math through the Type-I/II
    // entry points.
    const std::size_t n = spec_.n;
    const double bound = cfg_.saturation;
    const PeConfig t1{PeMode::BpType1, cfg_.scale, 0};
    const PeConfig t2{PeMode::BpType2, cfg_.scale, 0};
    for (unsigned i = spec_.m; i-- > 0;) {
        double* lo = left_.data() + i * n;
        const double* hi = left_.data() + (i + 1) * n;
        const double* ri = right_.data() + i * n;
        const std::size_t dist = std::size_t{1} << i;
        for (std::size_t blk = 0; blk < n; blk += 2 * dist) {
            for (std::size_t j = 0; j < dist; ++j) {
                const std::size_t t = blk + j;
                const std::size_t b = t + dist;
                lo[t] = clamp_llr(unified_type1(t1, hi[t], hi[b], ri[b]), bound);
                lo[b] = clamp_llr(unified_type2(t2, hi[b], hi[t], ri[t]), bound);
            }
        }
    }
    for (unsigned i = 0; i < spec_.m; ++i) {
        const double* lo = right_.data() + i * n;
        double* hi = right_.data() + (i + 1) * n;
        const double* li = left_.data() + (i + 1) * n;
        const std::size_t dist = std::size_t{1} << i;
        for (std::size_t blk = 0; blk < n; blk += 2 * dist) {
            for (std::size_t j = 0; j < dist; ++j) {
                const std::size_t t = blk + j;
                const std::size_t b = t + dist;
                hi[t] = clamp_llr(unified_type1(t1, lo[t], li[b], lo[b]), bound);
                hi[b] = clamp_llr(unified_type2(t2, lo[b], li[t], lo[t]), bound);
            }
        }
    }
    ++iteration_;
}

BitVector BpDecoder::current_u_hat() const {
    BitVector u(spec_.n);
    const double* ext = left_.data(); // row 0
    const double* prior = right_.data();
    for (std::size_t i = 0; i < spec_.n; ++i) {
        u[i] = spec_.frozen[i] ? 0 : (ext[i] + prior[i] < 0.0 ? 1 : 0);
    }
    return u;
}

BitVector BpDecoder::current_x_hat() const {
    BitVector x(spec_.n);
    const double* chan = left_.data() + spec_.m * spec_.n;
    const double* ext = right_.data() + spec_.m * spec_.n;
    for (std::size_t i = 0; i < spec_.n; ++i) {
        x[i] = chan[i] + ext[i] < 0.0 ? 1 : 0;
    }
    return x;
}

LlrFrame BpDecoder::denoised_llrs() const {
    if (iteration_ == 0) {
        throw std::logic_error("extract_denoised: called before any iteration");
    }
    LlrFrame out(spec_.n);
    const double* chan = left_.data() + spec_.m * spec_.n;
    const double* ext = right_.data() + spec_.m * spec_.n;
    for (std::size_t i = 0; i < spec_.n; ++i) {
        out[i] = chan[i] + ext[i];
    }
    return out;
}

bool BpDecoder::converged() {
    const double* l0 = left_.data();
    const double* r0 = right_.data();
    const double* chan = left_.data() + spec_.m * spec_.n;
    const double* ext = right_.data() + spec_.m * spec_.n;
    for (std::size_t i = 0; i < spec_.n; ++i) {
        u_scratch_[i] = spec_.frozen[i] ? 0 : (l0[i] + r0[i] < 0.0 ? 1 : 0);
        x_scratch_[i] = chan[i] + ext[i] < 0.0 ? 1 : 0;
    }
    return polar_transform(u_scratch_) == x_scratch_;
}

BpOutput BpDecoder::finish(bool stopped_early) {
    BpOutput out;
    out.u_hat = current_u_hat();
    out.x_hat = current_x_hat();
    out.denoised_llrs = denoised_llrs();
    out.iterations_used = iteration_;
    out.stopped_early = stopped_early;
    return out;
}

BpOutput BpDecoder::decode(const LlrFrame& llrs) {
    if (cfg_.max_iter < 1) {
        throw std::invalid_argument("bp_decode: max_iter must be >= 1");
    }
    init(llrs);
    for (std::size_t it = 0; it < cfg_.max_iter; ++it) {
        iterate();
        if (converged()) {
            return finish(true);
        }
    }
    return finish(false);
}

BpOutput BpDecoder::decode_fixed(const LlrFrame& llrs, std::size_t iterations) {
    if (iterations < 1) {
        throw std::invalid_argument("decode_fixed: iterations must be >= 1");
    }
    init(llrs);
    for (std::size_t it = 0; it < iterations; ++it) {
        iterate();
    }
    return finish(false);
}

BpOutput bp_decode(const LlrFrame& llrs, const CodeSpec& spec, std::size_t max_iter,
                   BpConfig cfg) {
    cfg.max_iter = max_iter;
    BpDecoder decoder(spec, cfg);
    return decoder.decode(llrs);
}

} // namespace polar
