#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "polar/codec.hpp"
#include "polar/types.hpp"

namespace polar {

// Sc: bit-serial SC on raw channel LLRs, fixed-latency 8-bit-output model.
// Bp: plain BP, always max_iter iterations.
// BpEs: BP with the re-encoding early-stopping check.
// Hybrid: BP front end with early stopping, SC fallback on denoised LLRs.
enum class DecoderKind { Sc, Bp, BpEs, Hybrid };

std::string decoder_name(DecoderKind kind);
std::optional<DecoderKind> parse_decoder_name(const std::string& name);

struct ExperimentConfig {
    std::size_t n = 1024;
    std::size_t k = 512;
    double z0 = kDefaultDesignZ0;
    std::vector<double> snr_points_db;
    std::vector<DecoderKind> decoders;
    std::size_t max_iter = 60;
    std::uint64_t min_frame_errors = 100;
    std::uint64_t max_frames = 10'000'000;
    std::uint64_t seed = 1;
    std::string output_path;        // empty: no CSV file
    double bp_scale = 0.9375;
    unsigned workers = 0;           // 0: hardware concurrency
    bool noiseless = false;         // debug: skip the noise draw
    std::optional<CodeSpec> code;   // overrides (n, k, z0) construction

    void validate() const;
    CodeSpec resolve_code() const;
};

struct TrialStats {
    DecoderKind decoder = DecoderKind::Sc;
    double snr_db = 0.0;
    std::uint64_t frames = 0;
    std::uint64_t frame_errors = 0;
    std::uint64_t bit_errors = 0;
    double fer = 0.0;
    double ber = 0.0;
    double mean_iterations = 0.0;
    double mean_cycles = 0.0;
    std::uint64_t worst_cycles = 0;
};

// Monte Carlo loop for one (decoder, SNR) point: random info bits, encode,
// BPSK, AWGN, decode, compare, until min_frame_errors or max_frames. Results
// are identical for a fixed master seed regardless of worker count.
TrialStats run_point(const ExperimentConfig& cfg, DecoderKind decoder, double snr_db);

// Every (decoder, snr) pair, decoder-major; writes the CSV when configured
// and echoes a summary table to stdout.
std::vector<TrialStats> run_experiment(const ExperimentConfig& cfg);

std::string csv_header();
std::string csv_row(const TrialStats& row);
void write_csv(const std::string& path, const std::vector<TrialStats>& rows);

} // namespace polar
