#pragma once

// Multiplication in (Z/nZ)[x] for word-sized n: lift to Z[x], multiply with a
// Kronecker substitution variant, reduce mod n.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "kronmul/ksint.hpp"

namespace kronmul {

class ModPoly {
 public:
  /// Throws PreconditionError when modulus < 2, coeffs is empty, or some
  /// coefficient is not below the modulus.
  ModPoly(std::vector<std::uint64_t> coeffs, std::uint64_t modulus);

  const std::vector<std::uint64_t>& coeffs() const { return coeffs_; }
  std::uint64_t modulus() const { return modulus_; }
  std::size_t size() const { return coeffs_.size(); }
  /// Bit length of modulus - 1: the coefficient bound of the lifted product.
  std::size_t coeff_bits() const;

  friend bool operator==(const ModPoly&, const ModPoly&) = default;

 private:
  std::vector<std::uint64_t> coeffs_;
  std::uint64_t modulus_;
};

enum class VariantChoice { ks1, ks2, ks3, ks4, automatic };

std::string_view to_string(VariantChoice v);
/// "ks1".."ks4" or "auto".
VariantChoice parse_variant_choice(std::string_view name);

/// Crossover lengths for VariantChoice::automatic, one row per coefficient
/// size band. The first row with bits <= max_bits applies; sizes past the
/// last row use the last row.
struct AutoBand {
  std::size_t max_bits;
  std::size_t ks3_from;
  std::size_t ks4_from;
};

struct AutoThresholds {
  std::vector<AutoBand> bands;
};

const AutoThresholds& default_auto_thresholds();

/// Resolves a variant for inputs of length `length` with `bits`-bit
/// coefficients: ks1 below the band's ks3 threshold, ks4 from its ks4
/// threshold, ks3 in between.
Variant choose_variant(std::size_t length, std::size_t bits,
                       const AutoThresholds& thresholds = default_auto_thresholds());

/// f*g mod n, of length size(f) + size(g) - 1. Throws PreconditionError on
/// modulus mismatch.
ModPoly mod_mul(const ModPoly& f, const ModPoly& g, VariantChoice variant, const KsOptions& options = {},
                const AutoThresholds& thresholds = default_auto_thresholds());

/// The variant mod_mul would run for these operands.
Variant resolve_variant(const ModPoly& f, const ModPoly& g, VariantChoice variant,
                        const AutoThresholds& thresholds = default_auto_thresholds());

}  // namespace kronmul
