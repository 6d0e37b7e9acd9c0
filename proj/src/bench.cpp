#include "kronmul/bench.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <random>
#include <string>

#include "kronmul/error.hpp"
#include "kronmul/modpoly.hpp"

namespace kronmul {

namespace {

constexpr std::size_t kLogGridPoints = 20;

std::size_t parse_size(std::string_view text, std::string_view grid) {
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw ParseError("invalid degree grid '" + std::string(grid) + "'");
  }
  return value;
}

ModPoly random_poly(std::mt19937_64& rng, std::size_t length, std::uint64_t modulus) {
  std::uniform_int_distribution<std::uint64_t> coeff(0, modulus - 1);
  std::vector<std::uint64_t> c(length);
  for (auto& x : c) x = coeff(rng);
  return ModPoly(std::move(c), modulus);
}

std::uint64_t random_modulus(std::mt19937_64& rng, std::size_t bits) {
  const std::uint64_t top = std::uint64_t{1} << (bits - 1);
  const std::uint64_t span = bits == 64 ? ~std::uint64_t{0} - top : top - 1;
  return top + std::uniform_int_distribution<std::uint64_t>(0, span)(rng);
}

double median(std::vector<double> v) {
  std::ranges::sort(v);
  const std::size_t m = v.size() / 2;
  return v.size() % 2 == 1 ? v[m] : (v[m - 1] + v[m]) / 2;
}

VariantChoice as_choice(Variant v) {
  switch (v) {
    case Variant::ks1: return VariantChoice::ks1;
    case Variant::ks2: return VariantChoice::ks2;
    case Variant::ks3: return VariantChoice::ks3;
    case Variant::ks4: return VariantChoice::ks4;
  }
  return VariantChoice::ks1;
}

// Median nanoseconds per product over `reps` samples, after one discarded
// warm-up sample that also sizes the inner loop.
double time_variant(const ModPoly& f, const ModPoly& g, Variant v, const BenchConfig& config) {
  using clock = std::chrono::steady_clock;
  const KsOptions options{.parallel = config.parallel};
  const VariantChoice choice = as_choice(v);

  auto sample = [&](std::size_t iters) {
    const auto start = clock::now();
    for (std::size_t i = 0; i < iters; ++i) {
      const ModPoly h = mod_mul(f, g, choice, options);
      if (h.size() == 0) throw Error("empty product");
    }
    return static_cast<double>(std::chrono::duration_cast<std::chrono::nanoseconds>(clock::now() - start).count());
  };

  const double warm = std::max(1.0, sample(1));
  const auto iters = static_cast<std::size_t>(
      std::clamp(std::ceil(static_cast<double>(config.min_sample_ns) / warm), 1.0, 1e7));
  std::vector<double> per_call;
  per_call.reserve(config.reps);
  for (std::size_t r = 0; r < config.reps; ++r) per_call.push_back(sample(iters) / static_cast<double>(iters));
  return median(std::move(per_call));
}

std::uint64_t count_limb_products(const ModPoly& f, const ModPoly& g, Variant v) {
  const ScopedKaratsubaThreshold classical(kClassicalOnly);
  MulStats stats;
  mod_mul(f, g, as_choice(v), KsOptions{.stats = &stats});
  return stats.limb_products;
}

}  // namespace

std::vector<std::size_t> parse_degree_grid(std::string_view grid) {
  const auto c1 = grid.find(':');
  if (c1 == std::string_view::npos) return {parse_size(grid, grid)};
  const auto c2 = grid.find(':', c1 + 1);
  if (c2 == std::string_view::npos) throw ParseError("invalid degree grid '" + std::string(grid) + "'");
  const std::size_t lo = parse_size(grid.substr(0, c1), grid);
  const std::size_t hi = parse_size(grid.substr(c1 + 1, c2 - c1 - 1), grid);
  const std::string_view mode = grid.substr(c2 + 1);
  if (lo > hi) throw ParseError("degree grid '" + std::string(grid) + "' has lo > hi");

  std::vector<std::size_t> out;
  if (mode == "log") {
    const double a = std::log(static_cast<double>(std::max<std::size_t>(lo, 1)));
    const double b = std::log(static_cast<double>(std::max<std::size_t>(hi, 1)));
    out.push_back(lo);
    for (std::size_t i = 1; i + 1 < kLogGridPoints; ++i) {
      const double t = static_cast<double>(i) / static_cast<double>(kLogGridPoints - 1);
      out.push_back(static_cast<std::size_t>(std::llround(std::exp(a + t * (b - a)))));
    }
    out.push_back(hi);
  } else if (!mode.empty() && mode.front() == '+') {
    const std::size_t step = parse_size(mode.substr(1), grid);
    if (step == 0) throw ParseError("degree grid step must be positive");
    for (std::size_t d = lo; d <= hi; d += step) out.push_back(d);
  } else {
    throw ParseError("unknown degree grid mode '" + std::string(mode) + "'");
  }
  std::ranges::sort(out);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  std::erase_if(out, [&](std::size_t d) { return d < lo || d > hi; });
  return out;
}

std::vector<BenchRow> run_bench(const BenchConfig& config) {
  if (config.degrees.empty()) throw PreconditionError("empty degree grid");
  if (config.modulus_bits.empty()) throw PreconditionError("no modulus sizes given");
  if (config.reps < 3) throw PreconditionError("need at least 3 repetitions");
  for (std::size_t bits : config.modulus_bits) {
    if (bits < 2 || bits > 64) throw PreconditionError("modulus bits must lie in [2, 64]");
  }
  std::vector<Variant> variants{Variant::ks1};
  for (Variant v : config.variants) {
    if (std::ranges::find(variants, v) == variants.end()) variants.push_back(v);
  }

  std::mt19937_64 rng(config.seed);
  std::vector<BenchRow> rows;
  for (std::size_t bits : config.modulus_bits) {
    for (std::size_t degree : config.degrees) {
      const std::uint64_t modulus = random_modulus(rng, bits);
      const ModPoly f = random_poly(rng, degree + 1, modulus);
      const ModPoly g = random_poly(rng, degree + 1, modulus);
      const std::size_t first = rows.size();
      for (Variant v : variants) {
        BenchRow row;
        row.degree = degree;
        row.length = degree + 1;
        row.modulus_bits = bits;
        row.variant = v;
        row.wall_ns_median = time_variant(f, g, v, config);
        if (config.count_ops) row.limb_products = count_limb_products(f, g, v);
        rows.push_back(row);
      }
      const double base = rows[first].wall_ns_median;
      for (std::size_t i = first; i < rows.size(); ++i) rows[i].ratio_vs_ks1 = rows[i].wall_ns_median / base;
    }
  }
  return rows;
}

void write_bench_csv(std::ostream& out, const BenchConfig& config, const std::vector<BenchRow>& rows) {
  out << "# seed=" << config.seed << " reps=" << config.reps << " parallel=" << (config.parallel ? 1 : 0)
      << " karatsuba_threshold=";
  if (karatsuba_threshold() == kClassicalOnly) {
    out << "classical";
  } else {
    out << karatsuba_threshold();
  }
  out << '\n';
  out << "degree,length,modulus_bits,variant,wall_ns_median,limb_products,ratio_vs_ks1\n";
  for (const auto& r : rows) {
    out << r.degree << ',' << r.length << ',' << r.modulus_bits << ',' << to_string(r.variant) << ','
        << std::fixed << std::setprecision(1) << r.wall_ns_median << ',';
    if (r.limb_products) out << *r.limb_products;
    out << ',' << std::setprecision(4) << r.ratio_vs_ks1 << '\n';
  }
  out.unsetf(std::ios::floatfield);
}

}  // namespace kronmul
