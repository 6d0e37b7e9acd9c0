#pragma once

// Shared helpers for the test binaries: GMP conversions (GMP is the
// reference for natural-number arithmetic) and random generators.

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "kronmul/bignat.hpp"
#include "kronmul/pack.hpp"

namespace kronmul::testing {

inline mpz_class to_mpz(const BigNat& a) {
  mpz_class z;
  const auto limbs = a.limbs();
  if (!limbs.empty()) mpz_import(z.get_mpz_t(), limbs.size(), -1, sizeof(Limb), 0, 0, limbs.data());
  return z;
}

inline mpz_class to_mpz(const SignedBig& a) {
  mpz_class z = to_mpz(a.magnitude());
  return a.negative() ? mpz_class(-z) : z;
}

inline BigNat from_mpz(const mpz_class& z) {
  std::vector<Limb> limbs((mpz_sizeinbase(z.get_mpz_t(), 2) + kLimbBits - 1) / kLimbBits + 1, 0);
  std::size_t count = 0;
  mpz_export(limbs.data(), &count, -1, sizeof(Limb), 0, 0, z.get_mpz_t());
  limbs.resize(count);
  return BigNat::from_limbs(std::move(limbs));
}

inline BigNat random_limbs(std::mt19937_64& rng, std::size_t n) {
  std::vector<Limb> limbs(n);
  for (auto& l : limbs) l = rng();
  return BigNat::from_limbs(std::move(limbs));
}

/// Uniform below 2^bits.
inline BigNat random_bits(std::mt19937_64& rng, std::size_t bits) {
  if (bits == 0) return {};
  std::vector<Limb> limbs((bits + kLimbBits - 1) / kLimbBits);
  for (auto& l : limbs) l = rng();
  if (bits % kLimbBits != 0) limbs.back() &= (Limb{1} << (bits % kLimbBits)) - 1;
  return BigNat::from_limbs(std::move(limbs));
}

/// Natural numbers with skewed limb patterns: all-ones and zero limbs show up
/// far more often than under a uniform draw, to exercise carry chains.
inline BigNat random_edgy(std::mt19937_64& rng, std::size_t n) {
  std::vector<Limb> limbs(n);
  for (auto& l : limbs) {
    switch (rng() % 4) {
      case 0: l = ~Limb{0}; break;
      case 1: l = 0; break;
      default: l = rng(); break;
    }
  }
  return BigNat::from_limbs(std::move(limbs));
}

inline CoeffVec random_coeffs(std::mt19937_64& rng, std::size_t length, std::size_t bits) {
  std::vector<BigNat> c;
  c.reserve(length);
  for (std::size_t i = 0; i < length; ++i) c.push_back(random_bits(rng, bits));
  return CoeffVec(c, bits);
}

inline CoeffVec max_coeffs(std::size_t length, std::size_t bits) {
  const BigNat top = BigNat::power_of_two(bits) - BigNat(1);
  return CoeffVec(std::vector<BigNat>(length, top), bits);
}

inline CoeffVec small_coeffs(std::initializer_list<std::uint64_t> values, std::size_t bits) {
  std::vector<std::uint64_t> words(values);
  return CoeffVec::from_words(words, bits);
}

/// Value of sum c_i x^i at an arbitrary integer point, by Horner in GMP.
inline mpz_class evaluate(const CoeffVec& v, const mpz_class& x) {
  mpz_class acc = 0;
  for (std::size_t i = v.size(); i-- > 0;) acc = acc * x + to_mpz(v.at(i));
  return acc;
}

}  // namespace kronmul::testing
