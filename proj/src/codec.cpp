#include "polar/codec.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace polar {

bool is_power_of_two(std::size_t v) {
    return v != 0 && (v & (v - 1)) == 0;
}

unsigned log2_exact(std::size_t v) {
    unsigned m = 0;
    while ((std::size_t{1} << m) < v) {
        ++m;
    }
    return m;
}

std::size_t CodeSpec::frozen_count() const {
    return static_cast<std::size_t>(std::count(frozen.begin(), frozen.end(), std::uint8_t{1}));
}

std::vector<std::size_t> CodeSpec::info_positions() const {
    std::vector<std::size_t> pos;
    pos.reserve(k);
    for (std::size_t i = 0; i < n; ++i) {
        if (!frozen[i]) {
            pos.push_back(i);
        }
    }
    return pos;
}

CodeSpec construct_frozen_set(std::size_t n, std::size_t k, double z0) {
    if (!is_power_of_two(n)) {
        throw std::invalid_argument("construct_frozen_set: n must be a power of two");
    }
    if (k < 1 || k > n) {
        throw std::invalid_argument("construct_frozen_set: k out of range");
    }
    if (!(z0 > 0.0 && z0 < 1.0)) {
        throw std::invalid_argument("construct_frozen_set: z0 must lie in (0,1)");
    }

    const unsigned m = log2_exact(n);

    // Doubling step: z[2i] = 2z[i] - z[i]^2 (minus channel), z[2i+1] = z[i]^2.
    // After m steps index i's binary digits, MSB first, spell its -/+ path.
    std::vector<double> z{z0};
    for (unsigned step = 0; step < m; ++step) {
        std::vector<double> next(z.size() * 2);
        for (std::size_t i = 0; i < z.size(); ++i) {
            next[2 * i] = 2.0 * z[i] - z[i] * z[i];
            next[2 * i + 1] = z[i] * z[i];
        }
        z = std::move(next);
    }

    // Freeze the n-k least reliable indices; on equal Z the lower index
    // freezes first.
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&z](std::size_t a, std::size_t b) {
        if (z[a] != z[b]) {
            return z[a] > z[b];
        }
        return a < b;
    });

    CodeSpec spec;
    spec.n = n;
    spec.k = k;
    spec.m = m;
    spec.design_param = z0;
    spec.frozen.assign(n, 0);
    for (std::size_t i = 0; i < n - k; ++i) {
        spec.frozen[order[i]] = 1;
    }
    return spec;
}

CodeSpec spec_from_mask(BitVector frozen_mask) {
    if (!is_power_of_two(frozen_mask.size())) {
        throw std::invalid_argument("spec_from_mask: mask length must be a power of two");
    }
    CodeSpec spec;
    spec.n = frozen_mask.size();
    spec.m = log2_exact(spec.n);
    spec.frozen = std::move(frozen_mask);
    spec.k = spec.n - spec.frozen_count();
    spec.design_param = std::numeric_limits<double>::quiet_NaN();
    if (spec.k < 1) {
        throw std::invalid_argument("spec_from_mask: mask leaves no information positions");
    }
    return spec;
}

BitVector polar_transform(const BitVector& bits) {
    if (!is_power_of_two(bits.size())) {
        throw std::invalid_argument("polar_transform: length must be a power of two");
    }
    BitVector out = bits;
    const std::size_t n = out.size();
    for (std::size_t half = 1; half < n; half <<= 1) {
        for (std::size_t blk = 0; blk < n; blk += 2 * half) {
            for (std::size_t j = 0; j < half; ++j) {
                out[blk + j] ^= out[blk + j + half];
            }
        }
    }
    return out;
}

BitVector encode(const BitVector& u, const CodeSpec& spec) {
    if (u.size() != spec.n) {
        throw std::invalid_argument("encode: length mismatch");
    }
    for (std::size_t i = 0; i < spec.n; ++i) {
        if (spec.frozen[i] && u[i] != 0) {
            throw std::invalid_argument("encode: nonzero value at frozen position");
        }
    }
    return polar_transform(u);
}

BitVector insert_info_bits(const BitVector& info, const CodeSpec& spec) {
    if (info.size() != spec.k) {
        throw std::invalid_argument("insert_info_bits: length mismatch");
    }
    BitVector u(spec.n, 0);
    std::size_t next = 0;
    for (std::size_t i = 0; i < spec.n; ++i) {
        if (!spec.frozen[i]) {
            u[i] = info[next++];
        }
    }
    return u;
}

BitVector extract_info_bits(const BitVector& u, const CodeSpec& spec) {
    if (u.size() != spec.n) {
        throw std::invalid_argument("extract_info_bits: length mismatch");
    }
    BitVector info;
    info.reserve(spec.k);
    for (std::size_t i = 0; i < spec.n; ++i) {
        if (!spec.frozen[i]) {
            info.push_back(u[i]);
        }
    }
    return info;
}

void save_frozen_mask(const CodeSpec& spec, const std::string& path) {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("save_frozen_mask: cannot open " + path);
    }
    out << spec.n << ' ' << spec.k << '\n';
    for (std::size_t i = 0; i < spec.n; ++i) {
        out << (spec.frozen[i] ? '1' : '0');
    }
    out << '\n';
    if (!out) {
        throw std::runtime_error("save_frozen_mask: write failed for " + path);
    }
}

CodeSpec load_frozen_mask(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("load_frozen_mask: cannot open " + path);
    }
    std::size_t n = 0;
    std::size_t k = 0;
    if (!(in >> n >> k)) {
        throw std::runtime_error("load_frozen_mask: malformed header in " + path);
    }
    std::string mask;
    if (!(in >> mask)) {
        throw std::runtime_error("load_frozen_mask: missing mask line in " + path);
    }
    if (mask.size() != n) {
        throw std::runtime_error("load_frozen_mask: mask length does not match n");
    }
    BitVector frozen(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        if (mask[i] == '1') {
            frozen[i] = 1;
        } else if (mask[i] != '0') {
            throw std::runtime_error("load_frozen_mask: mask must be '0'/'1' characters");
        }
    }
    CodeSpec spec = spec_from_mask(std::move(frozen));
    if (spec.k != k) {
        throw std::runtime_error("load_frozen_mask: header k disagrees with mask");
    }
    return spec;
}

} // namespace polar
