#include "kronmul/selftest.hpp"

#include <exception>
#include <ostream>
#include <random>
#include <sstream>

#include "bits.hpp"
#include "kronmul/bipoly.hpp"
#include "kronmul/ksint.hpp"
#include "kronmul/modpoly.hpp"
#include "kronmul/oracle.hpp"

namespace kronmul {

namespace {

BigNat random_bits(std::mt19937_64& rng, std::size_t bits) {
  std::vector<Limb> limbs(detail::limbs_for_bits(bits));
  for (auto& l : limbs) l = rng();
  if (!limbs.empty()) limbs.back() &= detail::top_mask(bits);
  return BigNat::from_limbs(std::move(limbs));
}

std::string describe(const CoeffVec& v) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v.at(i).to_decimal();
  os << ']';
  return os.str();
}

// Each check returns an empty string on success.
std::string check_integer_variants(std::mt19937_64& rng) {
  const std::size_t lf = 1 + rng() % 64;
  const std::size_t lg = (rng() % 2 == 0) ? lf : 1 + rng() % 64;
  const std::size_t b = (rng() % 4 == 0) ? 1 + rng() % 80 : 1 + rng() % 12;
  const bool saturate = rng() % 4 == 0;
  auto draw = [&](std::size_t len) {
    std::vector<BigNat> c;
    for (std::size_t i = 0; i < len; ++i) {
      c.push_back(saturate ? sub(BigNat::power_of_two(b), BigNat(1)) : random_bits(rng, b));
    }
    return CoeffVec(c, b);
  };
  const CoeffVec f = draw(lf);
  const CoeffVec g = draw(lg);
  const CoeffVec expected = schoolbook_z(f, g);
  for (Variant v : kAllVariants) {
    if (ks_mul(v, f, g) != expected) {
      return std::string(to_string(v)) + " disagrees with schoolbook: b=" + std::to_string(b) + " f=" + describe(f) +
             " g=" + describe(g);
    }
  }
  return {};
}

std::string check_reconstruction(std::mt19937_64& rng) {
  const std::size_t n = 2 + rng() % 127;
  const std::size_t items = 1 + rng() % 40;
  // h_i < 2^N (2^N - 1): draw beta < 2^N - 1 and alpha < 2^N.
  const BigNat beta_limit = sub(BigNat::power_of_two(n), BigNat(1));
  std::vector<BigNat> h;
  for (std::size_t i = 0; i < items; ++i) {
    BigNat beta = random_bits(rng, n);
    if (beta >= beta_limit) beta = sub(beta, BigNat(1));
    h.push_back(add(random_bits(rng, n), shl_bits(beta, n)));
  }
  BigNat forward;
  BigNat reversed;
  for (std::size_t i = 0; i < items; ++i) {
    forward = add(forward, shl_bits(h[i], i * n));
    reversed = add(reversed, shl_bits(h[items - 1 - i], i * n));
  }
  const CoeffVec got = reconstruct_overlapped(OverlapDigits::from_products(forward, reversed, n, items));
  if (got != CoeffVec(h, 2 * n)) {
    return "reconstruction round trip failed: N=" + std::to_string(n) + " items=" + std::to_string(items);
  }
  return {};
}

std::string check_mod_mul(std::mt19937_64& rng) {
  const std::size_t bits = 2 + rng() % 63;
  const std::uint64_t top = std::uint64_t{1} << (bits - 1);
  const std::uint64_t modulus = top | (rng() & (top - 1));
  const std::size_t lf = 1 + rng() % 200;
  const std::size_t lg = (rng() % 2 == 0) ? lf : 1 + rng() % 200;
  auto draw = [&](std::size_t len) {
    std::vector<std::uint64_t> c(len);
    for (auto& x : c) x = rng() % modulus;
    return ModPoly(std::move(c), modulus);
  };
  const ModPoly f = draw(lf);
  const ModPoly g = draw(lg);
  const ModPoly expected = schoolbook_mod(f, g);
  for (VariantChoice v :
       {VariantChoice::ks1, VariantChoice::ks2, VariantChoice::ks3, VariantChoice::ks4, VariantChoice::automatic}) {
    if (mod_mul(f, g, v) != expected) {
      return "mod_mul(" + std::string(to_string(v)) + ") disagrees with schoolbook: n=" + std::to_string(modulus) +
             " lf=" + std::to_string(lf) + " lg=" + std::to_string(lg);
    }
  }
  return {};
}

std::string check_bivariate(std::mt19937_64& rng) {
  const ModRing ring(7);
  const std::size_t lx = 1 + rng() % 6;
  const std::size_t ly = 1 + rng() % 6;
  auto draw = [&] {
    BiPoly<std::uint64_t> p(lx, ly, 0);
    for (std::size_t j = 0; j < ly; ++j) {
      for (auto& c : p.slice(j)) c = rng() % 7;
    }
    return p;
  };
  const auto f = draw();
  const auto g = draw();
  const auto expected = schoolbook_bivar(f, g, ring);
  const auto mul = schoolbook_unimul(ring);
  const std::string shape = " over Z/7Z, Lx=" + std::to_string(lx) + " Ly=" + std::to_string(ly);
  if (bks_standard(f, g, mul, ring) != expected) return "bks_standard failed" + shape;
  if (bks_reciprocal(f, g, mul, ring) != expected) return "bks_reciprocal failed" + shape;
  if (bks_negated(f, g, mul, ring) != expected) return "bks_negated failed" + shape;
  if (bks_four(f, g, mul, ring) != expected) return "bks_four failed" + shape;
  return {};
}

}  // namespace

SelftestResult run_selftest(const SelftestConfig& config, std::ostream& log) {
  SelftestResult result;
  using Check = std::string (*)(std::mt19937_64&);
  const std::pair<const char*, Check> suites[] = {
      {"integer variants", check_integer_variants},
      {"reconstruction", check_reconstruction},
      {"mod_mul", check_mod_mul},
      {"bivariate", check_bivariate},
  };
  for (std::size_t i = 0; i < config.iters; ++i) {
    std::seed_seq seq{static_cast<std::uint32_t>(config.seed), static_cast<std::uint32_t>(config.seed >> 32),
                      static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(std::uint64_t{i} >> 32)};
    std::mt19937_64 rng(seq);
    for (const auto& [name, check] : suites) {
      std::string failure;
      try {
        failure = check(rng);
      } catch (const std::exception& e) {
        failure = std::string("exception: ") + e.what();
      }
      ++result.cases;
      if (!failure.empty()) {
        result.passed = false;
        std::ostringstream os;
        os << name << " case failed at iteration " << i << " (seed " << config.seed << "): " << failure;
        result.failure = os.str();
        log << "FAIL " << result.failure << '\n';
        return result;
      }
    }
  }
  log << "selftest: " << result.cases << " cases executed over " << config.iters << " iterations, all passed"
      << (config.iters == 0 ? " (nothing to run)" : "") << '\n';
  return result;
}

}  // namespace kronmul
