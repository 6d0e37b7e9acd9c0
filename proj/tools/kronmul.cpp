// kronmul: multiply (Z/nZ)[x] polynomial files, benchmark the Kronecker
// substitution variants, or run the randomised self-test.

#include <cstdint>
#include <exception>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "kronmul/bench.hpp"
#include "kronmul/error.hpp"
#include "kronmul/modpoly.hpp"
#include "kronmul/polyio.hpp"
#include "kronmul/selftest.hpp"

namespace {

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

int cmd_mul(const std::string& f_path, const std::string& g_path, const std::string& out_path,
            const std::string& variant, std::uint64_t modulus) {
  const kronmul::ModPoly f = kronmul::read_poly_file(f_path);
  const kronmul::ModPoly g = kronmul::read_poly_file(g_path);
  if (modulus != 0 && (f.modulus() != modulus || g.modulus() != modulus)) {
    throw kronmul::PreconditionError("input modulus does not match --modulus " + std::to_string(modulus));
  }
  const kronmul::ModPoly h = kronmul::mod_mul(f, g, kronmul::parse_variant_choice(variant));
  if (out_path.empty() || out_path == "-") {
    kronmul::write_poly(std::cout, h);
  } else {
    kronmul::write_poly_file(out_path, h);
  }
  return 0;
}

int cmd_bench(const std::string& degrees, const std::string& bits, const std::string& variants, std::size_t reps,
              std::uint64_t seed, bool count_ops, bool parallel, const std::string& out_path) {
  kronmul::BenchConfig config;
  config.degrees = kronmul::parse_degree_grid(degrees);
  config.modulus_bits.clear();
  for (const auto& b : split_list(bits)) config.modulus_bits.push_back(std::stoul(b));
  config.variants.clear();
  for (const auto& v : split_list(variants)) config.variants.push_back(kronmul::parse_variant(v));
  config.reps = reps;
  config.seed = seed;
  config.count_ops = count_ops;
  config.parallel = parallel;

  const auto rows = kronmul::run_bench(config);
  if (out_path.empty() || out_path == "-") {
    kronmul::write_bench_csv(std::cout, config, rows);
  } else {
    std::ofstream out(out_path);
    if (!out) throw kronmul::Error("cannot open " + out_path + " for writing");
    kronmul::write_bench_csv(out, config, rows);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Polynomial multiplication by multipoint Kronecker substitution"};
  app.require_subcommand(1);

  std::string f_path, g_path, out_path, variant = "auto";
  std::uint64_t modulus = 0;
  auto* mul = app.add_subcommand("mul", "Multiply two polynomial files over Z/nZ");
  mul->add_option("f", f_path, "First factor")->required()->check(CLI::ExistingFile);
  mul->add_option("g", g_path, "Second factor")->required()->check(CLI::ExistingFile);
  mul->add_option("-o,--output", out_path, "Product file (default: stdout)");
  mul->add_option("--variant", variant, "ks1, ks2, ks3, ks4 or auto")->capture_default_str();
  mul->add_option("--modulus", modulus, "Expected modulus of both inputs");

  std::string degrees, bits = "48", variants = "ks1,ks2,ks3,ks4", bench_out;
  std::size_t reps = 5;
  std::uint64_t seed = 1;
  bool count_ops = false, parallel = false;
  auto* bench = app.add_subcommand("bench", "Time the variants over a degree grid and write CSV");
  bench->add_option("--degrees", degrees, "lo:hi:log, lo:hi:+step or a single degree")->required();
  bench->add_option("--modulus-bits", bits, "Comma-separated modulus sizes in bits")->capture_default_str();
  bench->add_option("--variants", variants, "Comma-separated variants")->capture_default_str();
  bench->add_option("--reps", reps, "Timed repetitions per cell (median reported)")
      ->capture_default_str()
      ->check(CLI::Range(3, 1000));
  bench->add_option("--seed", seed, "Random seed")->capture_default_str();
  bench->add_flag("--count-ops", count_ops, "Also count word products with Karatsuba disabled");
  bench->add_flag("--parallel", parallel, "Run the independent integer products concurrently");
  bench->add_option("-o,--output", bench_out, "CSV file (default: stdout)");

  kronmul::SelftestConfig st;
  auto* selftest = app.add_subcommand("selftest", "Randomised oracle-equivalence checks");
  selftest->add_option("--seed", st.seed, "Random seed")->capture_default_str();
  selftest->add_option("--iters", st.iters, "Iterations")->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (mul->parsed()) return cmd_mul(f_path, g_path, out_path, variant, modulus);
    if (bench->parsed()) return cmd_bench(degrees, bits, variants, reps, seed, count_ops, parallel, bench_out);
    if (selftest->parsed()) return kronmul::run_selftest(st, std::cout).passed ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "kronmul: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
