#pragma once

// Limb-level helpers shared by the packing, reconstruction and bignum code.
// Not installed.

#include <algorithm>
#include <cstddef>
#include <span>

#include "kronmul/bignat.hpp"

namespace kronmul::detail {

using u128 = unsigned __int128;

constexpr std::size_t limbs_for_bits(std::size_t bits) { return (bits + kLimbBits - 1) / kLimbBits; }

/// Mask selecting the valid bits of the top limb of a width-bit field.
constexpr Limb top_mask(std::size_t width_bits) {
  const std::size_t r = width_bits % kLimbBits;
  return r == 0 ? ~Limb{0} : (Limb{1} << r) - 1;
}

inline std::span<const Limb> trim(std::span<const Limb> s) {
  while (!s.empty() && s.back() == 0) s = s.first(s.size() - 1);
  return s;
}

/// dst |= src << bit_offset. dst must be wide enough to hold every set bit.
inline void deposit_bits(std::span<Limb> dst, std::size_t bit_offset, std::span<const Limb> src) {
  const std::size_t q = bit_offset / kLimbBits;
  const unsigned r = bit_offset % kLimbBits;
  if (r == 0) {
    for (std::size_t i = 0; i < src.size(); ++i) {
      if (src[i] != 0) dst[q + i] |= src[i];
    }
    return;
  }
  for (std::size_t i = 0; i < src.size(); ++i) {
    const Limb v = src[i];
    if (v == 0) continue;
    dst[q + i] |= v << r;
    const Limb hi = v >> (kLimbBits - r);
    if (hi != 0) dst[q + i + 1] |= hi;
  }
}

/// out = (src >> bit_offset) mod 2^width, with out sized limbs_for_bits(width).
/// Bits past the end of src read as zero.
inline void extract_bits(std::span<const Limb> src, std::size_t bit_offset, std::size_t width,
                         std::span<Limb> out) {
  const std::size_t q = bit_offset / kLimbBits;
  const unsigned r = bit_offset % kLimbBits;
  const std::size_t n = out.size();
  auto at = [&](std::size_t i) -> Limb { return i < src.size() ? src[i] : 0; };
  if (r == 0) {
    for (std::size_t i = 0; i < n; ++i) out[i] = at(q + i);
  } else {
    for (std::size_t i = 0; i < n; ++i) out[i] = (at(q + i) >> r) | (at(q + i + 1) << (kLimbBits - r));
  }
  if (n != 0) out[n - 1] &= top_mask(width);
}

/// dst += src, returns the carry out of dst's top limb. dst.size() >= src.size().
inline Limb add_in_place(std::span<Limb> dst, std::span<const Limb> src) {
  Limb carry = 0;
  std::size_t i = 0;
  for (; i < src.size(); ++i) {
    const u128 s = u128{dst[i]} + src[i] + carry;
    dst[i] = static_cast<Limb>(s);
    carry = static_cast<Limb>(s >> kLimbBits);
  }
  for (; carry != 0 && i < dst.size(); ++i) {
    dst[i] += 1;
    carry = dst[i] == 0 ? 1 : 0;
  }
  return carry;
}

/// dst -= src, returns the borrow out of dst's top limb. dst.size() >= src.size().
inline Limb sub_in_place(std::span<Limb> dst, std::span<const Limb> src) {
  Limb borrow = 0;
  std::size_t i = 0;
  for (; i < src.size(); ++i) {
    const Limb a = dst[i];
    const Limb d = a - src[i] - borrow;
    borrow = (a < src[i] || (a == src[i] && borrow != 0)) ? 1 : 0;
    dst[i] = d;
  }
  for (; borrow != 0 && i < dst.size(); ++i) {
    borrow = dst[i] == 0 ? 1 : 0;
    dst[i] -= 1;
  }
  return borrow;
}

inline int compare(std::span<const Limb> a, std::span<const Limb> b) {
  a = trim(a);
  b = trim(b);
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

}  // namespace kronmul::detail
