#pragma once

// Arbitrary-precision natural numbers on 64-bit limbs, with instrumented
// classical and Karatsuba multiplication.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace kronmul {

using Limb = std::uint64_t;
inline constexpr std::size_t kLimbBits = 64;

/// Counts single-word products. One counter per logical task; sum afterwards.
struct MulStats {
  std::uint64_t limb_products = 0;

  void reset() { limb_products = 0; }
  MulStats& operator+=(const MulStats& other) {
    limb_products += other.limb_products;
    return *this;
  }
};

/// Karatsuba threshold value that disables Karatsuba altogether.
inline constexpr std::size_t kClassicalOnly = std::numeric_limits<std::size_t>::max();
inline constexpr std::size_t kDefaultKaratsubaThreshold = 16;

/// Process-wide threshold (in limbs) below which mul() uses the classical
/// algorithm. Initialised from KRONMUL_KARATSUBA_THRESHOLD when set; the
/// values "classical", "off" and "0" select kClassicalOnly.
std::size_t karatsuba_threshold();
void set_karatsuba_threshold(std::size_t limbs);

/// Restores the previous threshold on scope exit.
class ScopedKaratsubaThreshold {
 public:
  explicit ScopedKaratsubaThreshold(std::size_t limbs) : saved_(karatsuba_threshold()) {
    set_karatsuba_threshold(limbs);
  }
  ~ScopedKaratsubaThreshold() { set_karatsuba_threshold(saved_); }
  ScopedKaratsubaThreshold(const ScopedKaratsubaThreshold&) = delete;
  ScopedKaratsubaThreshold& operator=(const ScopedKaratsubaThreshold&) = delete;

 private:
  std::size_t saved_;
};

class BigNat {
 public:
  BigNat() = default;
  BigNat(std::uint64_t value);  // NOLINT(google-explicit-constructor)

  /// Takes little-endian limbs and strips high zero limbs.
  static BigNat from_limbs(std::vector<Limb> limbs);
  static BigNat from_limbs(std::span<const Limb> limbs);
  static BigNat from_decimal(std::string_view text);
  static BigNat power_of_two(std::size_t exponent);

  std::string to_decimal() const;

  std::span<const Limb> limbs() const { return limbs_; }
  std::size_t size() const { return limbs_.size(); }
  bool is_zero() const { return limbs_.empty(); }
  std::size_t bit_length() const;
  bool bit(std::size_t index) const;
  /// Low 64 bits.
  std::uint64_t low_word() const { return limbs_.empty() ? 0 : limbs_[0]; }

  friend bool operator==(const BigNat&, const BigNat&) = default;
  friend std::strong_ordering operator<=>(const BigNat& a, const BigNat& b);

 private:
  void normalize();

  std::vector<Limb> limbs_;
};

BigNat add(const BigNat& a, const BigNat& b);
/// Throws UnderflowError when a < b.
BigNat sub(const BigNat& a, const BigNat& b);

/// Classical below karatsuba_threshold(), Karatsuba above.
BigNat mul(const BigNat& a, const BigNat& b, MulStats* stats = nullptr);
/// Exactly size(a) * size(b) word products.
BigNat mul_classical(const BigNat& a, const BigNat& b, MulStats* stats = nullptr);
/// Three half-size products per level until the shorter operand drops below
/// `threshold` limbs. Unbalanced operands split the longer one at half its
/// length (rounded up).
BigNat mul_karatsuba(const BigNat& a, const BigNat& b, MulStats* stats = nullptr,
                     std::size_t threshold = kDefaultKaratsubaThreshold);

BigNat shl_bits(const BigNat& a, std::size_t k);
BigNat shr_bits(const BigNat& a, std::size_t k);
/// Throws InexactError if any of the discarded bits is set.
BigNat shr_bits_exact(const BigNat& a, std::size_t k);

/// Base-2^width digits d_0..d_{count-1}. Throws PreconditionError when
/// a >= 2^(width*count).
std::vector<BigNat> to_digits(const BigNat& a, std::size_t width_bits, std::size_t count);
/// Sum of digits[i] * 2^(i*width). Throws PreconditionError if a digit does
/// not fit in width bits.
BigNat from_digits(std::span<const BigNat> digits, std::size_t width_bits);

inline BigNat operator+(const BigNat& a, const BigNat& b) { return add(a, b); }
inline BigNat operator-(const BigNat& a, const BigNat& b) { return sub(a, b); }
inline BigNat operator*(const BigNat& a, const BigNat& b) { return mul(a, b); }
inline BigNat operator<<(const BigNat& a, std::size_t k) { return shl_bits(a, k); }
inline BigNat operator>>(const BigNat& a, std::size_t k) { return shr_bits(a, k); }

/// Sign and magnitude. Zero is never negative.
class SignedBig {
 public:
  SignedBig() = default;
  SignedBig(BigNat magnitude, bool negative = false);  // NOLINT(google-explicit-constructor)
  static SignedBig from_int(std::int64_t value);
  static SignedBig from_decimal(std::string_view text);

  const BigNat& magnitude() const { return magnitude_; }
  bool negative() const { return negative_; }
  bool is_zero() const { return magnitude_.is_zero(); }
  std::string to_decimal() const;

  friend bool operator==(const SignedBig&, const SignedBig&) = default;

 private:
  BigNat magnitude_;
  bool negative_ = false;
};

SignedBig add(const SignedBig& a, const SignedBig& b);
SignedBig sub(const SignedBig& a, const SignedBig& b);
SignedBig neg(const SignedBig& a);
SignedBig mul(const SignedBig& a, const SignedBig& b, MulStats* stats = nullptr);
/// a / 2^k; throws InexactError unless 2^k divides a.
SignedBig shr_bits_exact(const SignedBig& a, std::size_t k);
SignedBig shl_bits(const SignedBig& a, std::size_t k);

inline SignedBig operator+(const SignedBig& a, const SignedBig& b) { return add(a, b); }
inline SignedBig operator-(const SignedBig& a, const SignedBig& b) { return sub(a, b); }
inline SignedBig operator-(const SignedBig& a) { return neg(a); }
inline SignedBig operator*(const SignedBig& a, const SignedBig& b) { return mul(a, b); }

/// Magnitude of a value the caller knows to be non-negative; throws
/// PreconditionError otherwise.
BigNat expect_non_negative(const SignedBig& a);

}  // namespace kronmul
