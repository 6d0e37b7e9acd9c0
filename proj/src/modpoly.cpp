#include "kronmul/modpoly.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <string>

#include "bits.hpp"
#include "kronmul/error.hpp"

namespace kronmul {

ModPoly::ModPoly(std::vector<std::uint64_t> coeffs, std::uint64_t modulus)
    : coeffs_(std::move(coeffs)), modulus_(modulus) {
  if (modulus < 2) throw PreconditionError("modulus must be >= 2");
  if (coeffs_.empty()) throw PreconditionError("polynomial must have length >= 1");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] >= modulus) {
      throw PreconditionError("coefficient " + std::to_string(i) + " = " + std::to_string(coeffs_[i]) +
                              " is not reduced mod " + std::to_string(modulus));
    }
  }
}

std::size_t ModPoly::coeff_bits() const { return static_cast<std::size_t>(std::bit_width(modulus_ - 1)); }

std::string_view to_string(VariantChoice v) {
  switch (v) {
    case VariantChoice::ks1: return "ks1";
    case VariantChoice::ks2: return "ks2";
    case VariantChoice::ks3: return "ks3";
    case VariantChoice::ks4: return "ks4";
    case VariantChoice::automatic: return "auto";
  }
  return "?";
}

VariantChoice parse_variant_choice(std::string_view name) {
  std::string lower(name);
  std::ranges::transform(lower, lower.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "auto") return VariantChoice::automatic;
  switch (parse_variant(lower)) {
    case Variant::ks1: return VariantChoice::ks1;
    case Variant::ks2: return VariantChoice::ks2;
    case Variant::ks3: return VariantChoice::ks3;
    case Variant::ks4: return VariantChoice::ks4;
  }
  return VariantChoice::automatic;
}

// Measured with `kronmul bench --degrees 1:20000:log` on an x86-64 desktop.
// ks3 never beat both ks1 and ks4 by more than the noise, so its band is
// empty by default.
const AutoThresholds& default_auto_thresholds() {
  static const AutoThresholds defaults{{
      {4, 5000, 5000},
      {8, 1200, 1200},
      {16, 700, 700},
      {32, 250, 250},
      {64, 100, 100},
  }};
  return defaults;
}

Variant choose_variant(std::size_t length, std::size_t bits, const AutoThresholds& thresholds) {
  if (thresholds.bands.empty()) return Variant::ks1;
  const auto band = std::ranges::find_if(thresholds.bands, [bits](const AutoBand& b) { return bits <= b.max_bits; });
  const AutoBand& row = band == thresholds.bands.end() ? thresholds.bands.back() : *band;
  if (length >= row.ks4_from) return Variant::ks4;
  if (length >= row.ks3_from) return Variant::ks3;
  return Variant::ks1;
}

Variant resolve_variant(const ModPoly& f, const ModPoly& g, VariantChoice variant, const AutoThresholds& thresholds) {
  switch (variant) {
    case VariantChoice::ks1: return Variant::ks1;
    case VariantChoice::ks2: return Variant::ks2;
    case VariantChoice::ks3: return Variant::ks3;
    case VariantChoice::ks4: return Variant::ks4;
    case VariantChoice::automatic: break;
  }
  return choose_variant(std::min(f.size(), g.size()), f.coeff_bits(), thresholds);
}

ModPoly mod_mul(const ModPoly& f, const ModPoly& g, VariantChoice variant, const KsOptions& options,
                const AutoThresholds& thresholds) {
  if (f.modulus() != g.modulus()) {
    throw PreconditionError("modulus mismatch: " + std::to_string(f.modulus()) + " vs " + std::to_string(g.modulus()));
  }
  const std::uint64_t n = f.modulus();
  const std::size_t bits = f.coeff_bits();
  const CoeffVec product = ks_mul(resolve_variant(f, g, variant, thresholds), CoeffVec::from_words(f.coeffs(), bits),
                                  CoeffVec::from_words(g.coeffs(), bits), options);

  std::vector<std::uint64_t> out(product.size());
  for (std::size_t i = 0; i < product.size(); ++i) {
    const auto limbs = product.limbs(i);
    detail::u128 r = 0;
    for (std::size_t k = limbs.size(); k-- > 0;) r = ((r << kLimbBits) | limbs[k]) % n;
    out[i] = static_cast<std::uint64_t>(r);
  }
  return ModPoly(std::move(out), n);
}

}  // namespace kronmul
