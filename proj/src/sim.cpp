#include "polar/sim.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <stdexcept>
#include <thread>

#include "polar/channel.hpp"
#include "polar/hybrid_decoder.hpp"

namespace polar {

namespace {

// Trials per scheduling batch. Stop conditions are evaluated only on batch
// boundaries, which keeps the trial set independent of the worker count.
constexpr std::uint64_t kBatchSize = 512;

struct TrialResult {
    std::uint8_t frame_error = 0;
    std::uint32_t bit_errors = 0;
    std::uint32_t iterations = 0;
    std::uint64_t cycles = 0;
};

// Per-worker decode state, reused across trials.
struct WorkerContext {
    ScDecoder sc;
    BpDecoder bp;
    HybridDecoder hybrid;

    WorkerContext(const CodeSpec& spec, const BpConfig& bp_cfg)
        : sc(spec), bp(spec, bp_cfg), hybrid(spec, bp_cfg) {}
};

TrialResult run_trial(WorkerContext& ctx, const ExperimentConfig& cfg,
                      const CodeSpec& code, DecoderKind decoder, double sigma2,
                      std::uint64_t snr_stream, std::uint64_t trial) {
    std::mt19937_64 rng(derive_seed(cfg.seed, snr_stream, trial));

    BitVector info(code.k);
    for (std::size_t i = 0; i < code.k; ++i) {
        info[i] = static_cast<std::uint8_t>(rng() & 1u);
    }
    const BitVector u = insert_info_bits(info, code);
    const BitVector x = polar_transform(u);
    std::vector<double> y = modulate_bpsk(x);
    if (!cfg.noiseless) {
        y = add_awgn(y, sigma2, rng);
    }
    const LlrFrame llrs = llr_from_observation(y, sigma2);

    const LatencyParams latency{code.m, 3};
    BitVector info_hat;
    TrialResult result;
    switch (decoder) {
    case DecoderKind::Sc: {
        info_hat = extract_info_bits(ctx.sc.decode(llrs), code);
        result.cycles = code.n >> (latency.sc_output_bits_log2 - 2);
        break;
    }
    case DecoderKind::Bp: {
        BpOutput out = ctx.bp.decode_fixed(llrs, cfg.max_iter);
        info_hat = extract_info_bits(out.u_hat, code);
        result.iterations = static_cast<std::uint32_t>(out.iterations_used);
        result.cycles = latency_cycles(DecodeSource::BpEarly, out.iterations_used,
                                       latency, code.n);
        break;
    }
    case DecoderKind::BpEs: {
        BpOutput out = ctx.bp.decode(llrs);
        info_hat = extract_info_bits(out.u_hat, code);
        result.iterations = static_cast<std::uint32_t>(out.iterations_used);
        result.cycles = latency_cycles(DecodeSource::BpEarly, out.iterations_used,
                                       latency, code.n);
        break;
    }
    case DecoderKind::Hybrid: {
        DecodeOutcome out = ctx.hybrid.decode(llrs);
        info_hat = std::move(out.info_hat);
        result.iterations = static_cast<std::uint32_t>(out.iterations);
        result.cycles = out.cycles;
        break;
    }
    }

    for (std::size_t i = 0; i < code.k; ++i) {
        result.bit_errors += info_hat[i] != info[i];
    }
    result.frame_error = result.bit_errors > 0;
    return result;
}

} // namespace

std::string decoder_name(DecoderKind kind) {
    switch (kind) {
    case DecoderKind::Sc: return "SC";
    case DecoderKind::Bp: return "BP";
    case DecoderKind::BpEs: return "BP_ES";
    case DecoderKind::Hybrid: return "Hybrid";
    }
    return "?";
}

std::optional<DecoderKind> parse_decoder_name(const std::string& name) {
    std::string lower(name);
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (lower == "sc") return DecoderKind::Sc;
    if (lower == "bp") return DecoderKind::Bp;
    if (lower == "bp_es" || lower == "bpes") return DecoderKind::BpEs;
    if (lower == "hybrid") return DecoderKind::Hybrid;
    return std::nullopt;
}

void ExperimentConfig::validate() const {
    if (snr_points_db.empty()) {
        throw std::invalid_argument("ExperimentConfig: snr_points must not be empty");
    }
    if (decoders.empty()) {
        throw std::invalid_argument("ExperimentConfig: decoder list must not be empty");
    }
    if (min_frame_errors < 1) {
        throw std::invalid_argument("ExperimentConfig: min_frame_errors must be >= 1");
    }
    if (max_frames < min_frame_errors) {
        throw std::invalid_argument("ExperimentConfig: max_frames must be >= min_frame_errors");
    }
    if (!(bp_scale > 0.0 && bp_scale <= 1.0)) {
        throw std::invalid_argument("ExperimentConfig: bp_scale must lie in (0,1]");
    }
    if (!code) {
        if (!is_power_of_two(n)) {
            throw std::invalid_argument("ExperimentConfig: n must be a power of two");
        }
        if (k < 1 || k > n) {
            throw std::invalid_argument("ExperimentConfig: k out of range");
        }
    }
}

CodeSpec ExperimentConfig::resolve_code() const {
    if (code) {
        return *code;
    }
    return construct_frozen_set(n, k, z0);
}

TrialStats run_point(const ExperimentConfig& cfg, DecoderKind decoder, double snr_db) {
    cfg.validate();
    const CodeSpec code = cfg.resolve_code();
    const ChannelParams channel(snr_db, static_cast<double>(code.k) /
                                            static_cast<double>(code.n));
    const std::uint64_t snr_stream = std::bit_cast<std::uint64_t>(snr_db);

    BpConfig bp_cfg;
    bp_cfg.scale = cfg.bp_scale;
    bp_cfg.max_iter = cfg.max_iter;

    unsigned workers = cfg.workers != 0 ? cfg.workers
                                        : std::max(1u, std::thread::hardware_concurrency());

    std::vector<WorkerContext> contexts;
    contexts.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        contexts.emplace_back(code, bp_cfg);
    }

    TrialStats stats;
    stats.decoder = decoder;
    stats.snr_db = snr_db;

    std::uint64_t total_iterations = 0;
    std::uint64_t total_cycles = 0;
    std::vector<TrialResult> results(kBatchSize);

    std::uint64_t next_trial = 0;
    while (stats.frames < cfg.max_frames && stats.frame_errors < cfg.min_frame_errors) {
        const std::uint64_t batch = std::min<std::uint64_t>(kBatchSize,
                                                            cfg.max_frames - stats.frames);
        const unsigned active = static_cast<unsigned>(
            std::min<std::uint64_t>(workers, batch));

        auto work = [&](unsigned w) {
            for (std::uint64_t t = w; t < batch; t += active) {
                results[t] = run_trial(contexts[w], cfg, code, decoder,
                                       channel.sigma2, snr_stream, next_trial + t);
            }
        };
        if (active == 1) {
            work(0);
        } else {
            std::vector<std::thread> pool;
            pool.reserve(active);
            for (unsigned w = 0; w < active; ++w) {
                pool.emplace_back(work, w);
            }
            for (auto& th : pool) {
                th.join();
            }
        }

        for (std::uint64_t t = 0; t < batch; ++t) {
            const TrialResult& r = results[t];
            stats.frame_errors += r.frame_error;
            stats.bit_errors += r.bit_errors;
            total_iterations += r.iterations;
            total_cycles += r.cycles;
            stats.worst_cycles = std::max(stats.worst_cycles, r.cycles);
        }
        stats.frames += batch;
        next_trial += batch;
    }

    const double frames = static_cast<double>(stats.frames);
    stats.fer = static_cast<double>(stats.frame_errors) / frames;
    stats.ber = static_cast<double>(stats.bit_errors) / (frames * static_cast<double>(code.k));
    stats.mean_iterations = static_cast<double>(total_iterations) / frames;
    stats.mean_cycles = static_cast<double>(total_cycles) / frames;
    return stats;
}

std::vector<TrialStats> run_experiment(const ExperimentConfig& cfg) {
    cfg.validate();

    // Resolve the code once so every point shares the same mask.
    ExperimentConfig resolved = cfg;
    resolved.code = cfg.resolve_code();

    std::vector<TrialStats> rows;
    rows.reserve(cfg.decoders.size() * cfg.snr_points_db.size());
    for (DecoderKind decoder : cfg.decoders) {
        for (double snr : cfg.snr_points_db) {
            TrialStats row = run_point(resolved, decoder, snr);
            std::cout << csv_row(row) << '\n';
            rows.push_back(row);
        }
    }
    if (!cfg.output_path.empty()) {
        write_csv(cfg.output_path, rows);
    }
    return rows;
}

std::string csv_header() {
    return "decoder,snr_db,frames,frame_errors,bit_errors,fer,ber,"
           "mean_iterations,mean_cycles,worst_cycles";
}

std::string csv_row(const TrialStats& row) {
    char buf[256];
    std::snprintf(buf, sizeof(buf),
                  "%s,%g,%llu,%llu,%llu,%.8g,%.8g,%.8g,%.8g,%llu",
                  decoder_name(row.decoder).c_str(), row.snr_db,
                  static_cast<unsigned long long>(row.frames),
                  static_cast<unsigned long long>(row.frame_errors),
                  static_cast<unsigned long long>(row.bit_errors),
                  row.fer, row.ber, row.mean_iterations, row.mean_cycles,
                  static_cast<unsigned long long>(row.worst_cycles));
    return buf;
}

void write_csv(const std::string& path, const std::vector<TrialStats>& rows) {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("write_csv: cannot open " + path);
    }
    out << csv_header() << '\n';
    for (const TrialStats& row : rows) {
        out << csv_row(row) << '\n';
    }
    if (!out) {
        throw std::runtime_error("write_csv: write failed for " + path);
    }
}

} // namespace polar
