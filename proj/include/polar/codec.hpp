#pragma once

#include <cstddef>
#include <string>

#include "polar/types.hpp"

namespace polar {

// A polar code: block length n = 2^m, k information positions, and a frozen
// mask over the u-domain (natural index order, no bit-reversal anywhere).
struct CodeSpec {
    std::size_t n = 0;
    std::size_t k = 0;
    unsigned m = 0;
    BitVector frozen;        // length n, 1 = frozen position
    double design_param = 0; // Bhattacharyya start value used to build the mask

    std::size_t frozen_count() const;
    // Ascending indices of the k information (non-frozen) positions.
    std::vector<std::size_t> info_positions() const;
};

bool is_power_of_two(std::size_t v);
unsigned log2_exact(std::size_t v);

// Default BEC-proxy erasure parameter for code construction.
inline constexpr double kDefaultDesignZ0 = 0.36787944117144233; // exp(-1)

// Builds an (n, k) code by the Bhattacharyya recursion Z- = 2Z - Z^2,
// Z+ = Z^2 from z0, freezing the n-k indices with the largest Z.
// Ties freeze the lower index first.
CodeSpec construct_frozen_set(std::size_t n, std::size_t k,
                              double z0 = kDefaultDesignZ0);

// Builds a CodeSpec around an externally supplied mask (k derived from it).
CodeSpec spec_from_mask(BitVector frozen_mask);

// The n x n polar transform x = u * F^(tensor m) in natural order, computed
// by the butterfly in O(n log n). Self-inverse over GF(2).
BitVector polar_transform(const BitVector& bits);

// Frozen-validated encoding: requires u to be 0 at every frozen position.
BitVector encode(const BitVector& u, const CodeSpec& spec);

// Places info bits at the non-frozen positions in ascending index order.
BitVector insert_info_bits(const BitVector& info, const CodeSpec& spec);
BitVector extract_info_bits(const BitVector& u, const CodeSpec& spec);

// Frozen-mask file: one line "n k", then n characters '0'/'1' ('1' = frozen),
// newline-terminated ASCII.
void save_frozen_mask(const CodeSpec& spec, const std::string& path);
CodeSpec load_frozen_mask(const std::string& path);

} // namespace polar
