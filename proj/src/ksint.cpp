#include "kronmul/ksint.hpp"

#include <algorithm>
#include <cctype>
#include <future>
#include <string>
#include <utility>

#include "bits.hpp"
#include "kronmul/error.hpp"
#include "reconstruct.hpp"

namespace kronmul {

namespace {

std::size_t ceil_log2(std::size_t n) {
  std::size_t e = 0;
  while ((std::size_t{1} << e) < n) ++e;
  return e;
}

KsParams params_for(const CoeffVec& f, const CoeffVec& g) {
  return derive_params(f.size(), g.size(), std::max(f.width_bits(), g.width_bits()));
}

void record(const KsOptions& options, const BigNat& a, const BigNat& b) {
  if (options.operand_bits == nullptr) return;
  options.operand_bits->push_back(a.bit_length());
  options.operand_bits->push_back(b.bit_length());
}

void record(const KsOptions& options, const SignedBig& a, const SignedBig& b) {
  record(options, a.magnitude(), b.magnitude());
}

// Runs a batch of independent products, concurrently if requested. Each task
// keeps its own counter; counts are summed into options.stats afterwards.
template <class T>
std::vector<T> multiply_all(const std::vector<std::pair<T, T>>& operands, const KsOptions& options) {
  for (const auto& [a, b] : operands) record(options, a, b);
  std::vector<T> results(operands.size());
  std::vector<MulStats> stats(operands.size());
  if (options.parallel && operands.size() > 1) {
    std::vector<std::future<T>> pending;
    pending.reserve(operands.size());
    for (std::size_t i = 1; i < operands.size(); ++i) {
      pending.push_back(std::async(std::launch::async, [&operands, &stats, i] {
        return mul(operands[i].first, operands[i].second, &stats[i]);
      }));
    }
    results[0] = mul(operands[0].first, operands[0].second, &stats[0]);
    for (std::size_t i = 1; i < operands.size(); ++i) results[i] = pending[i - 1].get();
  } else {
    for (std::size_t i = 0; i < operands.size(); ++i) results[i] = mul(operands[i].first, operands[i].second, &stats[i]);
  }
  if (options.stats != nullptr) {
    for (const auto& s : stats) *options.stats += s;
  }
  return results;
}

BigNat half_sum(const SignedBig& a, const SignedBig& b) { return expect_non_negative(shr_bits_exact(a + b, 1)); }
BigNat half_difference(const SignedBig& a, const SignedBig& b) {
  return expect_non_negative(shr_bits_exact(a - b, 1));
}

// Writes digit i of `value` (width bits each) to out[first + 2i].
void scatter_digits(const BigNat& value, std::size_t width, std::size_t count, CoeffVec& out, std::size_t first) {
  if (value.bit_length() > width * count) {
    throw ReconstructionError("even/odd part exceeds " + std::to_string(count) + " digits");
  }
  for (std::size_t i = 0; i < count; ++i) {
    auto dst = out.mutable_limbs(first + 2 * i);
    std::vector<Limb> digit(detail::limbs_for_bits(width));
    detail::extract_bits(value.limbs(), i * width, width, digit);
    std::ranges::fill(dst, Limb{0});
    detail::deposit_bits(dst, 0, digit);
  }
}

void interleave(const CoeffVec& evens, const CoeffVec* odds, CoeffVec& out) {
  for (std::size_t i = 0; i < evens.size(); ++i) detail::deposit_bits(out.mutable_limbs(2 * i), 0, evens.limbs(i));
  if (odds == nullptr) return;
  for (std::size_t i = 0; i < odds->size(); ++i) detail::deposit_bits(out.mutable_limbs(2 * i + 1), 0, odds->limbs(i));
}

}  // namespace

std::string_view to_string(Variant v) {
  switch (v) {
    case Variant::ks1: return "ks1";
    case Variant::ks2: return "ks2";
    case Variant::ks3: return "ks3";
    case Variant::ks4: return "ks4";
  }
  return "?";
}

Variant parse_variant(std::string_view name) {
  std::string lower(name);
  std::ranges::transform(lower, lower.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  for (Variant v : kAllVariants) {
    if (lower == to_string(v)) return v;
  }
  throw ParseError("unknown variant '" + std::string(name) + "'");
}

std::size_t KsParams::width_for(Variant v) const {
  switch (v) {
    case Variant::ks1: return n1;
    case Variant::ks2:
    case Variant::ks3: return n2;
    case Variant::ks4: return n4;
  }
  return n1;
}

KsParams derive_params(std::size_t lf, std::size_t lg, std::size_t b) {
  if (lf == 0 || lg == 0) throw PreconditionError("polynomial lengths must be >= 1");
  if (b == 0) throw PreconditionError("coefficient bound must be >= 1 bit");
  KsParams p;
  p.lf = lf;
  p.lg = lg;
  p.b = b;
  p.e = ceil_log2(std::min(lf, lg));
  p.n1 = 2 * b + p.e;
  p.n2 = b + (p.e + 1) / 2;
  p.n4 = (2 * b + p.e + 3) / 4;
  return p;
}

bool four_point_bound_holds(const KsParams& params) {
  const std::size_t m = 2 * params.n4;
  const BigNat max_coeff = sub(BigNat::power_of_two(params.b), BigNat(1));
  const BigNat bound = mul(BigNat(std::min(params.lf, params.lg)), mul(max_coeff, max_coeff));
  const BigNat limit = mul(BigNat::power_of_two(m), sub(BigNat::power_of_two(m), BigNat(1)));
  return bound < limit;
}

CoeffVec ks1_mul(const CoeffVec& f, const CoeffVec& g, const KsOptions& options) {
  const KsParams p = params_for(f, g);
  const auto products = multiply_all<BigNat>({{pack(f, p.n1), pack(g, p.n1)}}, options);
  return unpack(products[0], p.n1, p.product_length());
}

CoeffVec ks2_mul(const CoeffVec& f, const CoeffVec& g, const KsOptions& options) {
  const KsParams p = params_for(f, g);
  const std::size_t n = p.n2;
  const auto products = multiply_all<BigNat>(
      {{pack(f, n), pack(g, n)}, {pack_reversed(f, n), pack_reversed(g, n)}}, options);
  return detail::reconstruct_products(products[0], products[1], n, p.product_length());
}

CoeffVec ks3_mul(const CoeffVec& f, const CoeffVec& g, const KsOptions& options) {
  const KsParams p = params_for(f, g);
  const std::size_t n = p.n2;
  const std::size_t len = p.product_length();
  const auto products = multiply_all<SignedBig>(
      {{SignedBig(pack(f, n)), SignedBig(pack(g, n))}, {pack_negated(f, n), pack_negated(g, n)}}, options);

  // h(2^N) +- h(-2^N) = 2 h_even(2^2N) and 2 * 2^N h_odd(2^2N).
  const BigNat even = half_sum(products[0], products[1]);
  const BigNat odd = shr_bits_exact(half_difference(products[0], products[1]), n);

  CoeffVec out = CoeffVec::zeros(len, 2 * n);
  scatter_digits(even, 2 * n, (len + 1) / 2, out, 0);
  scatter_digits(odd, 2 * n, len / 2, out, 1);
  return out;
}

CoeffVec ks4_mul(const CoeffVec& f, const CoeffVec& g, const KsOptions& options) {
  const KsParams p = params_for(f, g);
  if (!four_point_bound_holds(p)) return ks1_mul(f, g, options);

  const std::size_t n = p.n4;
  const std::size_t m = 2 * n;
  const std::size_t len = p.product_length();

  // Evaluations at +-2^N and (normalised) +-2^-N. Adjacent coefficients
  // overlap since N < b, so each is a signed combination of two packings.
  auto evaluate = [n](const CoeffVec& v) {
    auto fwd = pack_even_odd(v, n, false);
    auto rev = pack_even_odd(v, n, true);
    const SignedBig fe(std::move(fwd.even)), fo(std::move(fwd.odd_shifted));
    const SignedBig re(std::move(rev.even)), ro(std::move(rev.odd_shifted));
    const bool flip = v.size() % 2 == 0;  // reversed packing at -2^N is (-1)^(L-1) f(-2^-N)
    return std::array<SignedBig, 4>{fe + fo, fe - fo, re + ro, flip ? ro - re : re - ro};
  };
  const auto ef = evaluate(f);
  const auto eg = evaluate(g);
  const auto products = multiply_all<SignedBig>({{ef[0], eg[0]}, {ef[1], eg[1]}, {ef[2], eg[2]}, {ef[3], eg[3]}},
                                                options);
  const SignedBig& fwd_pos = products[0];
  const SignedBig& fwd_neg = products[1];
  const SignedBig& rev_pos = products[2];
  const SignedBig& rev_neg = products[3];

  // Reversed sums put h_k at exponent N (len - 1 - k); the even (odd) terms
  // carry an extra factor 2^N when len - 1 - k is odd.
  const std::size_t even_items = (len + 1) / 2;
  const std::size_t odd_items = len / 2;
  const std::size_t even_shift = (len % 2 == 0) ? n : 0;
  const std::size_t odd_shift = (len % 2 == 1) ? n : 0;

  const BigNat even_fwd = half_sum(fwd_pos, fwd_neg);
  const BigNat even_rev = shr_bits_exact(half_sum(rev_pos, rev_neg), even_shift);
  const CoeffVec evens = detail::reconstruct_products(even_fwd, even_rev, m, even_items);

  CoeffVec out = CoeffVec::zeros(len, 2 * m);
  if (odd_items == 0) {
    interleave(evens, nullptr, out);
    return out;
  }
  const BigNat odd_fwd = shr_bits_exact(half_difference(fwd_pos, fwd_neg), n);
  const BigNat odd_rev = shr_bits_exact(half_difference(rev_pos, rev_neg), odd_shift);
  const CoeffVec odds = detail::reconstruct_products(odd_fwd, odd_rev, m, odd_items);
  interleave(evens, &odds, out);
  return out;
}

CoeffVec ks_mul(Variant variant, const CoeffVec& f, const CoeffVec& g, const KsOptions& options) {
  switch (variant) {
    case Variant::ks1: return ks1_mul(f, g, options);
    case Variant::ks2: return ks2_mul(f, g, options);
    case Variant::ks3: return ks3_mul(f, g, options);
    case Variant::ks4: return ks4_mul(f, g, options);
  }
  throw PreconditionError("unknown variant");
}

}  // namespace kronmul
