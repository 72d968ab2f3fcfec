// Command-line front end: code construction, single-frame decoding, and
// Monte Carlo FER/latency sweeps.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "polar/channel.hpp"
#include "polar/hybrid_decoder.hpp"
#include "polar/sim.hpp"

namespace {

std::string join(const std::vector<std::string>& parts, char sep) {
    std::string out;
    for (const auto& p : parts) {
        if (!out.empty()) {
            out.push_back(sep);
        }
        out += p;
    }
    return out;
}

std::vector<double> parse_snr_list(const std::string& text) {
    std::vector<double> points;
    if (text.find(':') != std::string::npos) {
        // a:b:step, inclusive of b up to rounding slack
        double a = 0.0;
        double b = 0.0;
        double step = 0.0;
        char c1 = 0;
        char c2 = 0;
        std::istringstream in(text);
        if (!(in >> a >> c1 >> b >> c2 >> step) || c1 != ':' || c2 != ':' || step <= 0.0) {
            throw CLI::ValidationError("--snr", "expected a:b:step with step > 0");
        }
        for (double v = a; v <= b + 1e-9; v += step) {
            points.push_back(v);
        }
        return points;
    }
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item.empty()) {
            continue;
        }
        points.push_back(std::stod(item));
    }
    return points;
}

std::vector<polar::DecoderKind> parse_decoder_list(const std::string& text) {
    std::vector<polar::DecoderKind> kinds;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item.empty()) {
            continue;
        }
        auto kind = polar::parse_decoder_name(item);
        if (!kind) {
            throw CLI::ValidationError("--decoders", "unknown decoder '" + item + "'");
        }
        kinds.push_back(*kind);
    }
    return kinds;
}

polar::CodeSpec resolve_code(const std::string& frozen_file, std::size_t n,
                             std::size_t k, double z0) {
    if (!frozen_file.empty()) {
        return polar::load_frozen_mask(frozen_file);
    }
    return polar::construct_frozen_set(n, k, z0);
}

polar::LlrFrame read_llr_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open LLR file " + path);
    }
    polar::LlrFrame llrs;
    double v = 0.0;
    while (in >> v) {
        llrs.push_back(v);
    }
    return llrs;
}

std::string bits_to_string(const polar::BitVector& bits) {
    std::string s;
    s.reserve(bits.size());
    for (auto b : bits) {
        s.push_back(b ? '1' : '0');
    }
    return s;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Polar code hybrid BP-SC decoding toolkit"};
    app.require_subcommand(1);
    // Key-value config file; keys live in a section named after the
    // subcommand, e.g. [sweep]. Flags given on the command line win.
    app.set_config("--config", "", "Config file (INI: [subcommand] sections)");

    std::size_t n = 1024;
    std::size_t k = 512;
    double z0 = polar::kDefaultDesignZ0;
    std::string frozen_file;
    std::string out_path;
    std::size_t max_iter = 60;
    double bp_scale = 0.9375;

    auto* construct = app.add_subcommand("construct", "Build a code and emit its frozen-mask file");
    construct->add_option("--n", n, "Block length (power of two)");
    construct->add_option("--k", k, "Information length");
    construct->add_option("--z0", z0, "Initial Bhattacharyya value in (0,1)");
    construct->add_option("--out", out_path, "Frozen-mask output path")->required();

    std::string llr_path;
    std::string decoder_name = "hybrid";
    auto* decode = app.add_subcommand("decode", "Decode one LLR frame from a file");
    decode->add_option("--n", n, "Block length (power of two)");
    decode->add_option("--k", k, "Information length");
    decode->add_option("--z0", z0, "Initial Bhattacharyya value in (0,1)");
    decode->add_option("--frozen-file", frozen_file, "Frozen-mask file (overrides --n/--k/--z0)");
    decode->add_option("--in", llr_path, "Whitespace-separated channel LLRs, one frame")->required();
    decode->add_option("--decoder", decoder_name, "sc | bp | bp_es | hybrid");
    decode->add_option("--max-iter", max_iter, "BP iteration cap");
    decode->add_option("--bp-scale", bp_scale, "BP message scale s in (0,1]");

    std::vector<std::string> snr_text{"1.0:4.0:0.5"};
    std::vector<std::string> decoders_text{"hybrid"};
    polar::ExperimentConfig cfg;
    auto* sweep = app.add_subcommand("sweep", "Monte Carlo FER/latency sweep, CSV output");
    sweep->add_option("--n", n, "Block length (power of two)");
    sweep->add_option("--k", k, "Information length");
    sweep->add_option("--z0", z0, "Initial Bhattacharyya value in (0,1)");
    sweep->add_option("--frozen-file", frozen_file, "Frozen-mask file (overrides --n/--k/--z0)");
    sweep->add_option("--snr", snr_text, "Eb/N0 points: comma list or a:b:step [dB]");
    sweep->add_option("--decoders", decoders_text, "Comma list of sc,bp,bp_es,hybrid");
    sweep->add_option("--max-iter", max_iter, "BP iteration cap");
    sweep->add_option("--min-frame-errors", cfg.min_frame_errors, "Frame errors to collect per point");
    sweep->add_option("--max-frames", cfg.max_frames, "Frame cap per point");
    sweep->add_option("--seed", cfg.seed, "Master seed");
    sweep->add_option("--out", out_path, "CSV output path");
    sweep->add_option("--bp-scale", bp_scale, "BP message scale s in (0,1]");
    sweep->add_option("--threads", cfg.workers, "Worker threads (0 = all cores)");
    sweep->add_flag("--noiseless", cfg.noiseless, "Debug: skip the noise draw");

    CLI11_PARSE(app, argc, argv);

    try {
        if (construct->parsed()) {
            polar::CodeSpec spec = polar::construct_frozen_set(n, k, z0);
            polar::save_frozen_mask(spec, out_path);
            std::cout << "wrote (" << spec.n << ", " << spec.k << ") mask to "
                      << out_path << '\n';
            return 0;
        }

        if (decode->parsed()) {
            polar::CodeSpec spec = resolve_code(frozen_file, n, k, z0);
            polar::LlrFrame llrs = read_llr_file(llr_path);
            if (llrs.size() != spec.n) {
                throw std::runtime_error("LLR frame length does not match the code");
            }
            auto kind = polar::parse_decoder_name(decoder_name);
            if (!kind) {
                throw std::runtime_error("unknown decoder '" + decoder_name + "'");
            }
            polar::BpConfig bp_cfg;
            bp_cfg.scale = bp_scale;
            bp_cfg.max_iter = max_iter;
            const polar::LatencyParams latency{spec.m, 3};

            std::string source;
            polar::BitVector u_hat;
            std::size_t iterations = 0;
            std::uint64_t cycles = 0;
            switch (*kind) {
            case polar::DecoderKind::Sc: {
                u_hat = polar::sc_decode(llrs, spec);
                source = "SC";
                cycles = spec.n >> (latency.sc_output_bits_log2 - 2);
                break;
            }
            case polar::DecoderKind::Bp: {
                polar::BpDecoder bp(spec, bp_cfg);
                polar::BpOutput out = bp.decode_fixed(llrs, max_iter);
                u_hat = std::move(out.u_hat);
                source = "BP";
                iterations = out.iterations_used;
                cycles = polar::latency_cycles(polar::DecodeSource::BpEarly,
                                               iterations, latency, spec.n);
                break;
            }
            case polar::DecoderKind::BpEs: {
                polar::BpOutput out = polar::bp_decode(llrs, spec, max_iter, bp_cfg);
                u_hat = std::move(out.u_hat);
                source = out.stopped_early ? "BP (early stop)" : "BP (exhausted)";
                iterations = out.iterations_used;
                cycles = polar::latency_cycles(polar::DecodeSource::BpEarly,
                                               iterations, latency, spec.n);
                break;
            }
            case polar::DecoderKind::Hybrid: {
                polar::DecodeOutcome out = polar::hybrid_decode(llrs, spec, max_iter, bp_cfg);
                u_hat = std::move(out.u_hat);
                source = out.source == polar::DecodeSource::BpEarly ? "hybrid: BP early"
                                                                    : "hybrid: SC fallback";
                iterations = out.iterations;
                cycles = out.cycles;
                break;
            }
            }
            std::cout << "source:     " << source << '\n'
                      << "iterations: " << iterations << '\n'
                      << "cycles:     " << cycles << '\n'
                      << "info bits:  " << bits_to_string(polar::extract_info_bits(u_hat, spec))
                      << '\n'
                      << "u vector:   " << bits_to_string(u_hat) << '\n';
            return 0;
        }

        // sweep
        cfg.snr_points_db = parse_snr_list(join(snr_text, ','));
        cfg.decoders = parse_decoder_list(join(decoders_text, ','));
        cfg.n = n;
        cfg.k = k;
        cfg.z0 = z0;
        cfg.max_iter = max_iter;
        cfg.bp_scale = bp_scale;
        cfg.output_path = out_path;
        if (!frozen_file.empty()) {
            cfg.code = polar::load_frozen_mask(frozen_file);
        }
        std::cout << polar::csv_header() << '\n';
        polar::run_experiment(cfg);
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
