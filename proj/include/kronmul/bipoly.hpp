#pragma once

// Multiplication in R[x, y] by reduction to R[x], via the standard
// substitution y = x^N and the reciprocal, negated and four-point variants.
//
// Conventions: a BiPoly p has declared lengths Lx, Ly and is read as
// p = sum_j p_j(x) y^j with every p_j of length Lx. Both factors must share
// Lx and Ly; the product has lengths 2Lx - 1 and 2Ly - 1.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "kronmul/error.hpp"
#include "kronmul/rings.hpp"

namespace kronmul {

template <class E>
class BiPoly {
 public:
  BiPoly(std::size_t lx, std::size_t ly, E zero) : lx_(lx), ly_(ly), coeffs_(lx * ly, zero) {
    if (lx == 0 || ly == 0) throw PreconditionError("bivariate lengths must be >= 1");
  }

  std::size_t lx() const { return lx_; }
  std::size_t ly() const { return ly_; }

  /// Coefficient of x^i y^j.
  E& at(std::size_t i, std::size_t j) { return coeffs_[j * lx_ + i]; }
  const E& at(std::size_t i, std::size_t j) const { return coeffs_[j * lx_ + i]; }

  /// p_j(x), the coefficient of y^j, as Lx consecutive x-coefficients.
  std::span<const E> slice(std::size_t j) const { return {coeffs_.data() + j * lx_, lx_}; }
  std::span<E> slice(std::size_t j) { return {coeffs_.data() + j * lx_, lx_}; }

  friend bool operator==(const BiPoly&, const BiPoly&) = default;

 private:
  std::size_t lx_;
  std::size_t ly_;
  std::vector<E> coeffs_;  // y-major: p_0(x), p_1(x), ...
};

/// A multiplier in R[x]: returns the len(a) + len(b) - 1 coefficients of a*b.
template <class E>
using UniMul = std::function<std::vector<E>(std::span<const E>, std::span<const E>)>;

/// Counters filled by an instrumented UniMul.
struct UniMulLog {
  std::uint64_t ring_products = 0;
  std::vector<std::size_t> operand_lengths;
};

/// Schoolbook R[x] multiplication. When `log` is given, records every operand
/// length and the number of ring multiplications.
template <CoefficientRing R>
UniMul<typename R::value_type> schoolbook_unimul(R ring, UniMulLog* log = nullptr) {
  using E = typename R::value_type;
  return [ring, log](std::span<const E> a, std::span<const E> b) {
    if (a.empty() || b.empty()) throw PreconditionError("univariate operands must be non-empty");
    if (log != nullptr) {
      log->operand_lengths.push_back(a.size());
      log->operand_lengths.push_back(b.size());
      log->ring_products += static_cast<std::uint64_t>(a.size()) * b.size();
    }
    std::vector<E> out(a.size() + b.size() - 1, ring.zero());
    for (std::size_t i = 0; i < a.size(); ++i) {
      for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = ring.add(out[i + j], ring.mul(a[i], b[j]));
    }
    return out;
  };
}

namespace detail {

template <class E>
void require_same_shape(const BiPoly<E>& f, const BiPoly<E>& g) {
  if (f.lx() != g.lx() || f.ly() != g.ly()) {
    throw PreconditionError("bivariate factors must share Lx and Ly");
  }
}

template <class E>
std::vector<E> checked_product(const UniMul<E>& mul, const std::vector<E>& a, const std::vector<E>& b) {
  std::vector<E> p = mul(a, b);
  if (p.size() != a.size() + b.size() - 1) {
    throw PreconditionError("univariate multiplier returned " + std::to_string(p.size()) + " coefficients, expected " +
                            std::to_string(a.size() + b.size() - 1));
  }
  return p;
}

/// sum_j sign_j * p_{order(j)}(x) x^(j*block), with sign_j = -1 for odd j
/// when `alternate` is set. Slices may overlap (block < Lx), so terms are added.
template <CoefficientRing R>
std::vector<typename R::value_type> substitute(const BiPoly<typename R::value_type>& p, std::size_t block,
                                               bool reversed, bool alternate, const R& ring) {
  const std::size_t ly = p.ly();
  std::vector<typename R::value_type> out(block * (ly - 1) + p.lx(), ring.zero());
  for (std::size_t j = 0; j < ly; ++j) {
    const std::size_t src = reversed ? ly - 1 - j : j;
    // The normalised evaluation x^(N(Ly-1)) p(x, -x^-N) carries (-1)^src.
    const bool negative = alternate && src % 2 == 1;
    const auto slice = p.slice(src);
    for (std::size_t k = 0; k < slice.size(); ++k) {
      auto& dst = out[j * block + k];
      dst = negative ? ring.sub(dst, slice[k]) : ring.add(dst, slice[k]);
    }
  }
  return out;
}

/// Recovers items q_0..q_{count-1}, each of `item_len` <= 2*block - 1
/// coefficients, from fwd = sum q_i x^(i*block) and rev = sum q_{count-1-i}
/// x^(i*block). The low `block` coefficients of q_i are exposed in fwd and
/// the rest in rev once q_0..q_{i-1} have been subtracted from both.
/// Item i is written to slice out_first + i*out_step of `out`.
template <CoefficientRing R>
void recover_reciprocal(std::vector<typename R::value_type> fwd, std::vector<typename R::value_type> rev,
                        std::size_t count, std::size_t block, std::size_t item_len, const R& ring,
                        BiPoly<typename R::value_type>& out, std::size_t out_first, std::size_t out_step) {
  const std::size_t low = std::min(block, item_len);
  for (std::size_t q = 0; q < count; ++q) {
    const std::size_t fpos = q * block;
    const std::size_t rpos = (count - 1 - q) * block;
    auto item = out.slice(out_first + q * out_step);
    for (std::size_t k = 0; k < low; ++k) item[k] = fwd[fpos + k];
    for (std::size_t k = low; k < item_len; ++k) item[k] = rev[rpos + k];
    if (q + 1 == count) break;
    for (std::size_t k = 0; k < item_len; ++k) {
      if (fpos + k < fwd.size()) fwd[fpos + k] = ring.sub(fwd[fpos + k], item[k]);
      if (rpos + k < rev.size()) rev[rpos + k] = ring.sub(rev[rpos + k], item[k]);
    }
  }
}

template <CoefficientRing R>
void require_halve(const R& ring, const char* variant) {
  if (!ring.can_halve()) {
    throw RingError(std::string(variant) + " needs a ring in which doubling is injective");
  }
}

}  // namespace detail

/// One product of length 2 Lx Ly - Lx - Ly + 1 at y = x^(2Lx - 1).
template <CoefficientRing R>
BiPoly<typename R::value_type> bks_standard(const BiPoly<typename R::value_type>& f,
                                            const BiPoly<typename R::value_type>& g,
                                            const UniMul<typename R::value_type>& mul, const R& ring) {
  detail::require_same_shape(f, g);
  const std::size_t lx = f.lx();
  const std::size_t ly = f.ly();
  const std::size_t n = 2 * lx - 1;
  const auto h = detail::checked_product(mul, detail::substitute(f, n, false, false, ring),
                                         detail::substitute(g, n, false, false, ring));
  BiPoly<typename R::value_type> out(n, 2 * ly - 1, ring.zero());
  for (std::size_t j = 0; j < 2 * ly - 1; ++j) {
    auto dst = out.slice(j);
    for (std::size_t k = 0; k < n; ++k) dst[k] = h[j * n + k];
  }
  return out;
}

/// Two products of length Lx Ly at y = x^Lx and y = x^-Lx.
template <CoefficientRing R>
BiPoly<typename R::value_type> bks_reciprocal(const BiPoly<typename R::value_type>& f,
                                              const BiPoly<typename R::value_type>& g,
                                              const UniMul<typename R::value_type>& mul, const R& ring) {
  detail::require_same_shape(f, g);
  const std::size_t lx = f.lx();
  const std::size_t ly = f.ly();
  const std::size_t n = lx;
  auto fwd = detail::checked_product(mul, detail::substitute(f, n, false, false, ring),
                                     detail::substitute(g, n, false, false, ring));
  auto rev = detail::checked_product(mul, detail::substitute(f, n, true, false, ring),
                                     detail::substitute(g, n, true, false, ring));
  BiPoly<typename R::value_type> out(2 * lx - 1, 2 * ly - 1, ring.zero());
  detail::recover_reciprocal(std::move(fwd), std::move(rev), 2 * ly - 1, n, 2 * lx - 1, ring, out, 0, 1);
  return out;
}

/// Two products of length Lx Ly at y = +-x^Lx. Throws RingError if the ring
/// cannot halve.
template <CoefficientRing R>
BiPoly<typename R::value_type> bks_negated(const BiPoly<typename R::value_type>& f,
                                           const BiPoly<typename R::value_type>& g,
                                           const UniMul<typename R::value_type>& mul, const R& ring) {
  detail::require_same_shape(f, g);
  detail::require_halve(ring, "bks_negated");
  const std::size_t lx = f.lx();
  const std::size_t ly = f.ly();
  const std::size_t n = lx;
  const auto pos = detail::checked_product(mul, detail::substitute(f, n, false, false, ring),
                                           detail::substitute(g, n, false, false, ring));
  const auto neg = detail::checked_product(mul, detail::substitute(f, n, false, true, ring),
                                           detail::substitute(g, n, false, true, ring));
  // (h+ + h-)/2 = sum h_2i x^(2iN), (h+ - h-)/2 = x^N sum h_2i+1 x^(2iN)
  BiPoly<typename R::value_type> out(2 * lx - 1, 2 * ly - 1, ring.zero());
  for (std::size_t j = 0; j < 2 * ly - 1; ++j) {
    auto dst = out.slice(j);
    const std::size_t base = j * n;
    const bool even = j % 2 == 0;
    for (std::size_t k = 0; k < 2 * lx - 1; ++k) {
      const auto& a = pos[base + k];
      const auto& b = neg[base + k];
      dst[k] = ring.halve(even ? ring.add(a, b) : ring.sub(a, b));
    }
  }
  return out;
}

/// Four products of length ceil(Lx/2)(Ly - 1) + Lx at y = +-x^N, +-x^-N.
/// Throws RingError if the ring cannot halve.
template <CoefficientRing R>
BiPoly<typename R::value_type> bks_four(const BiPoly<typename R::value_type>& f,
                                        const BiPoly<typename R::value_type>& g,
                                        const UniMul<typename R::value_type>& mul, const R& ring) {
  using E = typename R::value_type;
  detail::require_same_shape(f, g);
  detail::require_halve(ring, "bks_four");
  const std::size_t lx = f.lx();
  const std::size_t ly = f.ly();
  const std::size_t n = (lx + 1) / 2;

  auto product = [&](bool reversed, bool alternate) {
    return detail::checked_product(mul, detail::substitute(f, n, reversed, alternate, ring),
                                   detail::substitute(g, n, reversed, alternate, ring));
  };
  const auto fwd_pos = product(false, false);
  const auto fwd_neg = product(false, true);
  const auto rev_pos = product(true, false);
  const auto rev_neg = product(true, true);

  const std::size_t len = fwd_pos.size();
  auto half_sum = [&](const std::vector<E>& a, const std::vector<E>& b) {
    std::vector<E> out(len, ring.zero());
    for (std::size_t i = 0; i < len; ++i) out[i] = ring.halve(ring.add(a[i], b[i]));
    return out;
  };
  // (a - b) / (2 x^N): the low N coefficients vanish.
  auto half_diff_shifted = [&](const std::vector<E>& a, const std::vector<E>& b) {
    std::vector<E> out(len - n, ring.zero());
    for (std::size_t i = n; i < len; ++i) out[i - n] = ring.halve(ring.sub(a[i], b[i]));
    return out;
  };

  BiPoly<E> out(2 * lx - 1, 2 * ly - 1, ring.zero());
  // Even-index slices h_0, h_2, ... as Ly items on blocks of 2N.
  detail::recover_reciprocal(half_sum(fwd_pos, fwd_neg), half_sum(rev_pos, rev_neg), ly, 2 * n, 2 * lx - 1, ring,
                             out, 0, 2);
  if (ly > 1) {
    detail::recover_reciprocal(half_diff_shifted(fwd_pos, fwd_neg), half_diff_shifted(rev_pos, rev_neg), ly - 1,
                               2 * n, 2 * lx - 1, ring, out, 1, 2);
  }
  return out;
}

}  // namespace kronmul
