#pragma once

// Coefficient rings for the bivariate algorithms.

#include <concepts>
#include <cstdint>
#include <string>

#include "kronmul/bignat.hpp"
#include "kronmul/error.hpp"

namespace kronmul {

/// Operation table of a commutative ring. halve() is the inverse of doubling
/// and is only meaningful when can_halve() holds.
template <class R>
concept CoefficientRing = requires(const R& r, const typename R::value_type& a, const typename R::value_type& b) {
  typename R::value_type;
  { r.zero() } -> std::convertible_to<typename R::value_type>;
  { r.add(a, b) } -> std::convertible_to<typename R::value_type>;
  { r.sub(a, b) } -> std::convertible_to<typename R::value_type>;
  { r.neg(a) } -> std::convertible_to<typename R::value_type>;
  { r.mul(a, b) } -> std::convertible_to<typename R::value_type>;
  { r.equal(a, b) } -> std::convertible_to<bool>;
  { r.can_halve() } -> std::convertible_to<bool>;
  { r.halve(a) } -> std::convertible_to<typename R::value_type>;
};

/// Z, on SignedBig. Halving is an exact shift.
class IntegerRing {
 public:
  using value_type = SignedBig;

  SignedBig zero() const { return {}; }
  SignedBig add(const SignedBig& a, const SignedBig& b) const { return a + b; }
  SignedBig sub(const SignedBig& a, const SignedBig& b) const { return a - b; }
  SignedBig neg(const SignedBig& a) const { return -a; }
  SignedBig mul(const SignedBig& a, const SignedBig& b) const { return a * b; }
  bool equal(const SignedBig& a, const SignedBig& b) const { return a == b; }
  bool can_halve() const { return true; }
  /// Throws InexactError on odd input.
  SignedBig halve(const SignedBig& a) const { return shr_bits_exact(a, 1); }
};

/// Z/nZ for a word-sized modulus n >= 2. Doubling is injective exactly when n
/// is odd; halving then multiplies by (n + 1) / 2.
class ModRing {
 public:
  using value_type = std::uint64_t;

  explicit ModRing(std::uint64_t modulus) : n_(modulus), inv2_(modulus % 2 == 1 ? modulus / 2 + 1 : 0) {
    if (modulus < 2) throw PreconditionError("modulus must be >= 2");
  }

  std::uint64_t modulus() const { return n_; }

  std::uint64_t zero() const { return 0; }
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    const std::uint64_t s = a + b;
    return (s < a || s >= n_) ? s - n_ : s;
  }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return a >= b ? a - b : a + (n_ - b); }
  std::uint64_t neg(std::uint64_t a) const { return a == 0 ? 0 : n_ - a; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % n_);
  }
  bool equal(std::uint64_t a, std::uint64_t b) const { return a == b; }
  bool can_halve() const { return inv2_ != 0; }
  std::uint64_t halve(std::uint64_t a) const {
    if (inv2_ == 0) throw RingError("doubling is not injective in Z/" + std::to_string(n_) + "Z");
    return mul(a, inv2_);
  }
  /// Canonical representative of an arbitrary word.
  std::uint64_t reduce(std::uint64_t a) const { return a % n_; }

 private:
  std::uint64_t n_;
  std::uint64_t inv2_;
};

static_assert(CoefficientRing<IntegerRing>);
static_assert(CoefficientRing<ModRing>);

}  // namespace kronmul
