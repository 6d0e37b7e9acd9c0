#include "reconstruct.hpp"

#include <algorithm>
#include <string>

#include "bits.hpp"
#include "kronmul/error.hpp"

namespace kronmul {

namespace {

using detail::u128;

// Arithmetic on fixed-width digits of `width` bits stored in `k` limbs.
class DigitArith {
 public:
  explicit DigitArith(std::size_t width)
      : width_(width), k_(detail::limbs_for_bits(width)), mask_(detail::top_mask(width)) {}

  std::size_t limbs() const { return k_; }

  // out = (a + b + c) mod 2^width; returns floor((a + b + c) / 2^width).
  Limb add(std::span<Limb> out, std::span<const Limb> a, std::span<const Limb> b, Limb c) const {
    Limb carry = c;
    for (std::size_t i = 0; i < k_; ++i) {
      const u128 s = u128{a[i]} + b[i] + carry;
      out[i] = static_cast<Limb>(s);
      carry = static_cast<Limb>(s >> kLimbBits);
    }
    const unsigned r = width_ % kLimbBits;
    if (r == 0) return carry;
    const Limb over = out[k_ - 1] >> r;
    out[k_ - 1] &= mask_;
    return over;
  }

  // out = (a - b - c) mod 2^width.
  void sub(std::span<Limb> out, std::span<const Limb> a, std::span<const Limb> b, Limb c) const {
    Limb borrow = c;
    for (std::size_t i = 0; i < k_; ++i) {
      const u128 d = u128{a[i]} - b[i] - borrow;
      out[i] = static_cast<Limb>(d);
      borrow = static_cast<Limb>(d >> kLimbBits) != 0 ? 1 : 0;
    }
    out[k_ - 1] &= mask_;
  }

  static bool greater(std::span<const Limb> a, std::span<const Limb> b) {
    return detail::compare(a, b) > 0;
  }

  // digit == 2^width - 1
  bool all_ones(std::span<const Limb> a) const {
    for (std::size_t i = 0; i + 1 < k_; ++i) {
      if (a[i] != ~Limb{0}) return false;
    }
    return a[k_ - 1] == mask_;
  }

 private:
  std::size_t width_;
  std::size_t k_;
  Limb mask_;
};

[[noreturn]] void inconsistent(const std::string& what, std::size_t index) {
  throw ReconstructionError("overlapped reconstruction: " + what + " at index " + std::to_string(index));
}

}  // namespace

namespace detail {

CoeffVec reconstruct_digits(const CoeffVec& u, const CoeffVec& w, std::size_t width_bits, std::size_t items,
                            ReconstructionTrace* trace) {
  if (items == 0) throw PreconditionError("reconstruct_overlapped: need at least one item");
  if (u.size() != items + 1 || w.size() != items + 1) {
    throw PreconditionError("reconstruct_overlapped: expected " + std::to_string(items + 1) + " digits per stream");
  }
  const DigitArith arith(width_bits);
  const std::size_t k = arith.limbs();
  const std::size_t K = items;

  // alpha_i, beta_i live in the output as the low and high halves of h_i.
  std::vector<Limb> alpha((K + 1) * k, 0);
  std::vector<Limb> beta(k, 0);
  std::vector<Limb> scratch(k, 0);
  const std::vector<Limb> zero(k, 0);
  auto alpha_at = [&](std::size_t i) { return std::span<Limb>(alpha.data() + i * k, k); };
  auto digit = [k](const CoeffVec& v, std::size_t i) { return v.limbs(i).first(k); };

  CoeffVec out = CoeffVec::zeros(K, 2 * width_bits);
  if (trace != nullptr) {
    trace->delta.assign(K, 0);
    trace->epsilon.assign(K, 0);
  }

  std::ranges::copy(digit(u, 0), alpha_at(0).begin());
  Limb delta = 0;             // delta_j
  Limb eps_prev = 0;          // epsilon_{j-1}
  std::span<const Limb> alpha_prev = zero;  // alpha_{j-1}

  for (std::size_t j = 0; j < K; ++j) {
    const auto alpha_j = alpha_at(j);
    // beta_{j+1} + eps_{j+1} < 2^N, so alpha_j > w_{j+1} exactly when a carry
    // left position j+1 of the reversed sum.
    Limb eps = 0;
    if (j + 1 < K) {
#ifdef KRONMUL_FAULT_INJECTION
      eps = detail::compare(alpha_j, digit(w, j + 1)) >= 0 ? 1 : 0;
#else
      eps = DigitArith::greater(alpha_j, digit(w, j + 1)) ? 1 : 0;
#endif
    }

    arith.sub(beta, digit(w, j), alpha_prev, eps);
    if (arith.all_ones(beta)) inconsistent("beta outside [0, 2^N - 1)", j);
    // alpha_{j-1} + beta_j + eps_j = w_j + 2^N eps_{j-1}
    if (arith.add(scratch, alpha_prev, beta, eps) != eps_prev) inconsistent("reversed carry mismatch", j);

    if (trace != nullptr) {
      trace->delta[j] = static_cast<unsigned>(delta);
      trace->epsilon[j] = static_cast<unsigned>(eps);
    }

    if (j + 1 < K) {
      const auto alpha_next = alpha_at(j + 1);
      arith.sub(alpha_next, digit(u, j + 1), beta, delta);
      // beta_j + alpha_{j+1} + delta_j = u_{j+1} + 2^N delta_{j+1}
      delta = arith.add(scratch, beta, alpha_next, delta);
      if (delta > 1) inconsistent("forward carry out of range", j + 1);
    } else {
      // Top digit of the forward sum: beta_{K-1} + delta_{K-1} = u_K.
      if (arith.add(scratch, beta, zero, delta) != 0 || detail::compare(scratch, digit(u, K)) != 0) {
        inconsistent("forward top digit mismatch", K);
      }
      // Bottom digit of the reversed sum: alpha_{K-1} = w_K.
      if (detail::compare(alpha_j, digit(w, K)) != 0) inconsistent("reversed bottom digit mismatch", K);
    }

    const auto h = out.mutable_limbs(j);
    detail::deposit_bits(h, 0, alpha_j);
    detail::deposit_bits(h, width_bits, beta);

    alpha_prev = alpha_j;
    eps_prev = eps;
  }
  return out;
}

CoeffVec reconstruct_products(const BigNat& forward, const BigNat& reversed, std::size_t width_bits,
                              std::size_t items) {
  const std::size_t digits = items + 1;
  if (forward.bit_length() > width_bits * digits || reversed.bit_length() > width_bits * digits) {
    throw ReconstructionError("overlapped reconstruction: product exceeds " + std::to_string(digits) + " digits");
  }
  return reconstruct_digits(unpack(forward, width_bits, digits), unpack(reversed, width_bits, digits).reversed(),
                            width_bits, items, nullptr);
}

}  // namespace detail

OverlapDigits OverlapDigits::from_products(const BigNat& forward, const BigNat& reversed, std::size_t width_bits,
                                           std::size_t items) {
  OverlapDigits d;
  d.width_bits = width_bits;
  d.items = items;
  d.u = to_digits(forward, width_bits, items + 1);
  d.w = to_digits(reversed, width_bits, items + 1);
  std::ranges::reverse(d.w);
  return d;
}

CoeffVec reconstruct_overlapped(const OverlapDigits& digits, ReconstructionTrace* trace) {
  if (digits.width_bits == 0) throw PreconditionError("reconstruct_overlapped: digit width must be positive");
  if (digits.u.size() != digits.items + 1 || digits.w.size() != digits.items + 1) {
    throw PreconditionError("reconstruct_overlapped: expected " + std::to_string(digits.items + 1) +
                            " digits per stream");
  }
  return detail::reconstruct_digits(CoeffVec(digits.u, digits.width_bits), CoeffVec(digits.w, digits.width_bits),
                                    digits.width_bits, digits.items, trace);
}

}  // namespace kronmul
