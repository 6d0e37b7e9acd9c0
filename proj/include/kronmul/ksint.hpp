#pragma once

// Kronecker substitution for Z[x] -> Z: the standard single-point scheme and
// the reciprocal, negated and four-point multipoint variants.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kronmul/bignat.hpp"
#include "kronmul/pack.hpp"

namespace kronmul {

enum class Variant {
  ks1,  // standard: evaluate at 2^N
  ks2,  // reciprocal: 2^N and 2^-N
  ks3,  // negated: 2^N and -2^N
  ks4,  // four-point: +-2^N and +-2^-N
};

inline constexpr Variant kAllVariants[] = {Variant::ks1, Variant::ks2, Variant::ks3, Variant::ks4};

std::string_view to_string(Variant v);
/// Accepts "ks1".."ks4" (case-insensitive). Throws ParseError otherwise.
Variant parse_variant(std::string_view name);

/// Sizes shared by all variants for inputs of lengths lf, lg and coefficient
/// bound b bits.
struct KsParams {
  std::size_t lf = 0;
  std::size_t lg = 0;
  std::size_t b = 0;
  /// ceil(log2(min(lf, lg))): at most min(lf, lg) products feed one output
  /// coefficient, so every h_i <= 2^e (2^(2b) - 2^(b+1) + 1).
  std::size_t e = 0;
  std::size_t n1 = 0;  // 2b + e
  std::size_t n2 = 0;  // b + ceil(e/2)
  std::size_t n4 = 0;  // ceil((2b + e) / 4)

  std::size_t product_length() const { return lf + lg - 1; }
  /// Bit bound of every product coefficient, 2b + e.
  std::size_t product_bits() const { return 2 * b + e; }
  std::size_t width_for(Variant v) const;
};

/// Throws PreconditionError unless lf, lg, b >= 1.
KsParams derive_params(std::size_t lf, std::size_t lg, std::size_t b);

/// Base-2^N digits of a forward packed product and of its reversed twin.
///
/// With `items` = K product coefficients h_0..h_{K-1}:
///   forward  = sum_i h_i 2^(iN)          = sum_{i<=K} u_i 2^(iN)
///   reversed = sum_i h_{K-1-i} 2^(iN)    = sum_{i<=K} w_{K-i} 2^(iN)
/// For equal input lengths L, K = 2L - 1 and both sequences hold 2L digits.
struct OverlapDigits {
  std::size_t width_bits = 0;
  std::size_t items = 0;
  std::vector<BigNat> u;
  std::vector<BigNat> w;

  static OverlapDigits from_products(const BigNat& forward, const BigNat& reversed, std::size_t width_bits,
                                     std::size_t items);
};

/// Carry bits observed while reconstructing, for inspection by tests.
struct ReconstructionTrace {
  std::vector<unsigned> delta;    // delta_0 .. delta_{K-1}
  std::vector<unsigned> epsilon;  // epsilon_0 .. epsilon_{K-1}
};

/// Recovers h_0..h_{K-1} from overlapping digit streams, provided every
/// h_i < 2^N (2^N - 1). Throws ReconstructionError when the carry equations
/// are inconsistent, which means that bound did not hold.
CoeffVec reconstruct_overlapped(const OverlapDigits& digits, ReconstructionTrace* trace = nullptr);

struct KsOptions {
  MulStats* stats = nullptr;
  /// Run the independent integer products of ks2/ks3/ks4 concurrently.
  bool parallel = false;
  /// When set, receives the bit length of every operand handed to the
  /// integer multiplier, in call order.
  std::vector<std::size_t>* operand_bits = nullptr;
};

/// Each returns the lf + lg - 1 coefficients of f*g. The coefficient bound b
/// is the larger declared width of the two inputs.
CoeffVec ks1_mul(const CoeffVec& f, const CoeffVec& g, const KsOptions& options = {});
CoeffVec ks2_mul(const CoeffVec& f, const CoeffVec& g, const KsOptions& options = {});
CoeffVec ks3_mul(const CoeffVec& f, const CoeffVec& g, const KsOptions& options = {});
/// Falls back to ks1_mul if the reconstruction bound at digit width 2*N4
/// cannot be certified.
CoeffVec ks4_mul(const CoeffVec& f, const CoeffVec& g, const KsOptions& options = {});

CoeffVec ks_mul(Variant variant, const CoeffVec& f, const CoeffVec& g, const KsOptions& options = {});

/// Whether min(lf, lg) (2^b - 1)^2 < 2^M (2^M - 1) with M = 2 N4, the bound
/// the four-point reconstruction needs.
bool four_point_bound_holds(const KsParams& params);

}  // namespace kronmul
