#pragma once

#include <cstdint>
#include <vector>

namespace polar {

// Bits are stored one per byte; valid values are 0 and 1.
using BitVector = std::vector<std::uint8_t>;

// Log-likelihood ratios, log(P(bit=0)/P(bit=1)): positive favors bit 0.
using LlrFrame = std::vector<double>;

} // namespace polar
