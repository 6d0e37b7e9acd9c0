#pragma once

// Evaluation of coefficient vectors at 2^N, 2^-N and -2^N by bit packing,
// and the inverse digit extraction.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "kronmul/bignat.hpp"

namespace kronmul {

/// Non-empty vector of natural-number coefficients, each below 2^width_bits.
///
/// Coefficients are stored in one flat limb buffer, `stride()` limbs apiece,
/// so packing and unpacking touch contiguous memory only.
class CoeffVec {
 public:
  /// Throws PreconditionError if `coeffs` is empty, width_bits is zero, or a
  /// coefficient needs more than width_bits bits.
  CoeffVec(std::span<const BigNat> coeffs, std::size_t width_bits);
  /// Width defaults to the largest coefficient bit length (at least 1).
  explicit CoeffVec(std::span<const BigNat> coeffs);

  static CoeffVec from_words(std::span<const std::uint64_t> words, std::size_t width_bits);
  /// Zero coefficients of the given width.
  static CoeffVec zeros(std::size_t length, std::size_t width_bits);

  std::size_t size() const { return size_; }
  std::size_t width_bits() const { return width_bits_; }
  std::size_t stride() const { return stride_; }

  std::span<const Limb> limbs(std::size_t i) const { return {data_.data() + i * stride_, stride_}; }
  std::span<Limb> mutable_limbs(std::size_t i) { return {data_.data() + i * stride_, stride_}; }
  BigNat at(std::size_t i) const { return BigNat::from_limbs(limbs(i)); }
  std::vector<BigNat> to_vector() const;
  /// Low word of each coefficient; only meaningful when width_bits <= 64.
  std::vector<std::uint64_t> low_words() const;

  CoeffVec reversed() const;
  /// Largest bit length among the coefficients.
  std::size_t max_bit_length() const;

  /// Value equality; the declared widths may differ.
  friend bool operator==(const CoeffVec& a, const CoeffVec& b);

 private:
  CoeffVec(std::size_t length, std::size_t width_bits);

  std::size_t size_ = 0;
  std::size_t width_bits_ = 0;
  std::size_t stride_ = 0;
  std::vector<Limb> data_;
};

/// Sum of coeffs[i] * 2^(i*width). Throws PreconditionError when width < v.width_bits().
BigNat pack(const CoeffVec& v, std::size_t width);
/// 2^(width*(L-1)) * f(2^-width): the packing of the reversed sequence.
BigNat pack_reversed(const CoeffVec& v, std::size_t width);
/// f(-2^width) = f_even(2^(2*width)) - 2^width * f_odd(2^(2*width)).
SignedBig pack_negated(const CoeffVec& v, std::size_t width);
/// 2^(width*(L-1)) * f(-2^-width).
SignedBig pack_negated_reversed(const CoeffVec& v, std::size_t width);

/// Even and odd halves of an evaluation at +-2^width, packed separately at
/// 2*width so that coefficients wider than `width` still do not overlap:
///   f(+-2^width) = even +- odd_shifted.
/// When `reversed` is set the halves are those of 2^(width*(L-1)) f(+-2^-width).
/// Requires 2*width >= v.width_bits().
struct EvenOddPacking {
  BigNat even;
  BigNat odd_shifted;
};
EvenOddPacking pack_even_odd(const CoeffVec& v, std::size_t width, bool reversed);

/// Splits `value` into `count` digits of `width` bits, returned as a CoeffVec
/// of that width. Throws PreconditionError if value >= 2^(width*count).
CoeffVec unpack(const BigNat& value, std::size_t width, std::size_t count);

}  // namespace kronmul
