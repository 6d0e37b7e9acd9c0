#pragma once

// Timing harness comparing the variants on random (Z/nZ)[x] products.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string_view>
#include <vector>

#include "kronmul/ksint.hpp"

namespace kronmul {

/// "lo:hi:log" gives about 20 log-spaced degrees, "lo:hi:+step" an
/// arithmetic progression, and a bare "d" a single degree. Both ends
/// included. Throws ParseError on anything else or when lo > hi.
std::vector<std::size_t> parse_degree_grid(std::string_view grid);

struct BenchConfig {
  std::vector<std::size_t> degrees;
  std::vector<std::size_t> modulus_bits{48};
  /// ks1 is always measured, since ratios are taken against it.
  std::vector<Variant> variants{Variant::ks1, Variant::ks2, Variant::ks3, Variant::ks4};
  std::size_t reps = 5;
  std::uint64_t seed = 1;
  /// Also count word products with Karatsuba disabled.
  bool count_ops = false;
  bool parallel = false;
  /// Each timed repetition loops the product until at least this long.
  std::uint64_t min_sample_ns = 200'000;
};

struct BenchRow {
  std::size_t degree = 0;
  std::size_t length = 0;
  std::size_t modulus_bits = 0;
  Variant variant = Variant::ks1;
  double wall_ns_median = 0;
  std::optional<std::uint64_t> limb_products;
  double ratio_vs_ks1 = 0;
};

/// Throws PreconditionError for an empty grid, reps < 3, or modulus bits
/// outside [2, 64].
std::vector<BenchRow> run_bench(const BenchConfig& config);

/// Comment line with the seed and settings, then the header
/// degree,length,modulus_bits,variant,wall_ns_median,limb_products,ratio_vs_ks1
/// and one row per grid cell.
void write_bench_csv(std::ostream& out, const BenchConfig& config, const std::vector<BenchRow>& rows);

}  // namespace kronmul
