#pragma once

#include <cstddef>

#include "kronmul/ksint.hpp"

namespace kronmul::detail {

/// Core of reconstruct_overlapped on flat digit storage. `u` and `w` hold
/// items + 1 digits of width_bits each, indexed as in OverlapDigits.
CoeffVec reconstruct_digits(const CoeffVec& u, const CoeffVec& w, std::size_t width_bits, std::size_t items,
                            ReconstructionTrace* trace);

/// Digits of a forward/reversed product pair, then reconstruct_digits.
CoeffVec reconstruct_products(const BigNat& forward, const BigNat& reversed, std::size_t width_bits,
                              std::size_t items);

}  // namespace kronmul::detail
