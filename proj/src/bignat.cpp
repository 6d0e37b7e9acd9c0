#include "kronmul/bignat.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <string>
#include <utility>

#include "bits.hpp"
#include "kronmul/error.hpp"

namespace kronmul {

using detail::u128;

namespace {

std::size_t threshold_from_env() {
  const char* env = std::getenv("KRONMUL_KARATSUBA_THRESHOLD");
  if (env == nullptr || *env == '\0') return kDefaultKaratsubaThreshold;
  const std::string value(env);
  if (value == "classical" || value == "off" || value == "0") return kClassicalOnly;
  char* end = nullptr;
  const unsigned long long parsed = std::strtoull(env, &end, 10);
  if (end == env || *end != '\0') return kDefaultKaratsubaThreshold;
  return static_cast<std::size_t>(parsed);
}

std::atomic<std::size_t>& threshold_slot() {
  static std::atomic<std::size_t> slot{threshold_from_env()};
  return slot;
}

// out[0, a+b) = a * b. out must not alias a or b.
void mul_basecase(std::span<Limb> out, std::span<const Limb> a, std::span<const Limb> b,
                  std::uint64_t& count) {
  std::fill(out.begin(), out.end(), Limb{0});
  for (std::size_t i = 0; i < a.size(); ++i) {
    const Limb ai = a[i];
    Limb carry = 0;
    for (std::size_t j = 0; j < b.size(); ++j) {
      const u128 t = u128{ai} * b[j] + out[i + j] + carry;
      out[i + j] = static_cast<Limb>(t);
      carry = static_cast<Limb>(t >> kLimbBits);
    }
    out[i + b.size()] = carry;
  }
  count += static_cast<std::uint64_t>(a.size()) * b.size();
}

void mul_recursive(std::span<Limb> out, std::span<const Limb> a, std::span<const Limb> b,
                   std::size_t threshold, std::uint64_t& count) {
  std::fill(out.begin(), out.end(), Limb{0});
  a = detail::trim(a);
  b = detail::trim(b);
  if (a.empty() || b.empty()) return;
  if (a.size() < b.size()) std::swap(a, b);
  if (b.size() < threshold || b.size() == 1) {
    mul_basecase(out.first(a.size() + b.size()), a, b, count);
    return;
  }

  const std::size_t h = (a.size() + 1) / 2;
  const auto a0 = a.first(h);
  const auto a1 = a.subspan(h);

  if (b.size() <= h) {
    // b has no high half: a*b = a0*b + (a1*b) W^h.
    mul_recursive(out.first(h + b.size()), a0, b, threshold, count);
    std::vector<Limb> t(a1.size() + b.size());
    mul_recursive(t, a1, b, threshold, count);
    detail::add_in_place(out.subspan(h), t);
    return;
  }

  const auto b0 = b.first(h);
  const auto b1 = b.subspan(h);
  const std::size_t hi_len = a1.size() + b1.size();

  mul_recursive(out.first(2 * h), a0, b0, threshold, count);
  mul_recursive(out.subspan(2 * h, hi_len), a1, b1, threshold, count);

  std::vector<Limb> sa(a0.begin(), a0.end());
  sa.push_back(0);
  detail::add_in_place(sa, a1);
  std::vector<Limb> sb(b0.begin(), b0.end());
  sb.push_back(0);
  detail::add_in_place(sb, b1);

  std::vector<Limb> mid(sa.size() + sb.size());
  mul_recursive(mid, sa, sb, threshold, count);
  detail::sub_in_place(mid, out.first(2 * h));
  detail::sub_in_place(mid, out.subspan(2 * h, hi_len));
  detail::add_in_place(out.subspan(h), detail::trim(mid));
}

BigNat mul_with_threshold(const BigNat& a, const BigNat& b, MulStats* stats, std::size_t threshold) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Limb> out(a.size() + b.size());
  std::uint64_t count = 0;
  if (threshold == kClassicalOnly) {
    mul_basecase(out, a.limbs(), b.limbs(), count);
  } else {
    mul_recursive(out, a.limbs(), b.limbs(), threshold, count);
  }
  if (stats != nullptr) stats->limb_products += count;
  return BigNat::from_limbs(std::move(out));
}

// value = value * m + addend, in place.
void mul_add_small(std::vector<Limb>& value, Limb m, Limb addend) {
  Limb carry = addend;
  for (auto& limb : value) {
    const u128 t = u128{limb} * m + carry;
    limb = static_cast<Limb>(t);
    carry = static_cast<Limb>(t >> kLimbBits);
  }
  if (carry != 0) value.push_back(carry);
}

// value /= d in place, returns the remainder.
Limb div_small(std::vector<Limb>& value, Limb d) {
  Limb rem = 0;
  for (std::size_t i = value.size(); i-- > 0;) {
    const u128 cur = (u128{rem} << kLimbBits) | value[i];
    value[i] = static_cast<Limb>(cur / d);
    rem = static_cast<Limb>(cur % d);
  }
  while (!value.empty() && value.back() == 0) value.pop_back();
  return rem;
}

constexpr Limb kDecimalChunk = 10'000'000'000'000'000'000ULL;  // 10^19
constexpr std::size_t kDecimalChunkDigits = 19;

}  // namespace

std::size_t karatsuba_threshold() { return threshold_slot().load(std::memory_order_relaxed); }

void set_karatsuba_threshold(std::size_t limbs) {
  threshold_slot().store(limbs, std::memory_order_relaxed);
}

BigNat::BigNat(std::uint64_t value) {
  if (value != 0) limbs_.push_back(value);
}

BigNat BigNat::from_limbs(std::vector<Limb> limbs) {
  BigNat r;
  r.limbs_ = std::move(limbs);
  r.normalize();
  return r;
}

BigNat BigNat::from_limbs(std::span<const Limb> limbs) {
  limbs = detail::trim(limbs);
  BigNat r;
  r.limbs_.assign(limbs.begin(), limbs.end());
  return r;
}

BigNat BigNat::from_decimal(std::string_view text) {
  if (text.empty()) throw ParseError("empty decimal string");
  std::vector<Limb> value;
  std::size_t pos = 0;
  const std::size_t head = text.size() % kDecimalChunkDigits;
  std::size_t take = head == 0 ? kDecimalChunkDigits : head;
  while (pos < text.size()) {
    Limb chunk = 0;
    Limb scale = 1;
    for (std::size_t i = 0; i < take; ++i) {
      const char c = text[pos + i];
      if (c < '0' || c > '9') throw ParseError("invalid decimal digit in '" + std::string(text) + "'");
      chunk = chunk * 10 + static_cast<Limb>(c - '0');
      scale *= 10;
    }
    mul_add_small(value, scale, chunk);
    pos += take;
    take = kDecimalChunkDigits;
  }
  return from_limbs(std::move(value));
}

BigNat BigNat::power_of_two(std::size_t exponent) {
  std::vector<Limb> limbs(exponent / kLimbBits + 1, 0);
  limbs.back() = Limb{1} << (exponent % kLimbBits);
  return from_limbs(std::move(limbs));
}

std::string BigNat::to_decimal() const {
  if (is_zero()) return "0";
  std::vector<Limb> value = limbs_;
  std::vector<Limb> chunks;
  while (!value.empty()) chunks.push_back(div_small(value, kDecimalChunk));
  std::string out = std::to_string(chunks.back());
  for (std::size_t i = chunks.size() - 1; i-- > 0;) {
    const std::string part = std::to_string(chunks[i]);
    out.append(kDecimalChunkDigits - part.size(), '0');
    out += part;
  }
  return out;
}

std::size_t BigNat::bit_length() const {
  if (limbs_.empty()) return 0;
  return (limbs_.size() - 1) * kLimbBits + (kLimbBits - static_cast<std::size_t>(__builtin_clzll(limbs_.back())));
}

bool BigNat::bit(std::size_t index) const {
  const std::size_t q = index / kLimbBits;
  if (q >= limbs_.size()) return false;
  return ((limbs_[q] >> (index % kLimbBits)) & 1U) != 0;
}

void BigNat::normalize() {
  while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

std::strong_ordering operator<=>(const BigNat& a, const BigNat& b) {
  return detail::compare(a.limbs_, b.limbs_) <=> 0;
}

BigNat add(const BigNat& a, const BigNat& b) {
  const BigNat& longer = a.size() >= b.size() ? a : b;
  const BigNat& shorter = a.size() >= b.size() ? b : a;
  std::vector<Limb> out(longer.limbs().begin(), longer.limbs().end());
  out.push_back(0);
  detail::add_in_place(out, shorter.limbs());
  return BigNat::from_limbs(std::move(out));
}

BigNat sub(const BigNat& a, const BigNat& b) {
  if (a < b) throw UnderflowError("BigNat subtraction underflow");
  std::vector<Limb> out(a.limbs().begin(), a.limbs().end());
  detail::sub_in_place(out, b.limbs());
  return BigNat::from_limbs(std::move(out));
}

BigNat mul(const BigNat& a, const BigNat& b, MulStats* stats) {
  return mul_with_threshold(a, b, stats, karatsuba_threshold());
}

BigNat mul_classical(const BigNat& a, const BigNat& b, MulStats* stats) {
  return mul_with_threshold(a, b, stats, kClassicalOnly);
}

BigNat mul_karatsuba(const BigNat& a, const BigNat& b, MulStats* stats, std::size_t threshold) {
  return mul_with_threshold(a, b, stats, std::max<std::size_t>(threshold, 1));
}

BigNat shl_bits(const BigNat& a, std::size_t k) {
  if (a.is_zero()) return {};
  std::vector<Limb> out(a.size() + k / kLimbBits + 1, 0);
  detail::deposit_bits(out, k, a.limbs());
  return BigNat::from_limbs(std::move(out));
}

BigNat shr_bits(const BigNat& a, std::size_t k) {
  if (k >= a.bit_length()) return {};
  const std::size_t width = a.bit_length() - k;
  std::vector<Limb> out(detail::limbs_for_bits(width));
  detail::extract_bits(a.limbs(), k, width, out);
  return BigNat::from_limbs(std::move(out));
}

BigNat shr_bits_exact(const BigNat& a, std::size_t k) {
  const std::size_t full = k / kLimbBits;
  const auto limbs = a.limbs();
  for (std::size_t i = 0; i < std::min(full, limbs.size()); ++i) {
    if (limbs[i] != 0) throw InexactError("exact shift discards nonzero bits");
  }
  if (k % kLimbBits != 0 && full < limbs.size() && (limbs[full] & ((Limb{1} << (k % kLimbBits)) - 1)) != 0) {
    throw InexactError("exact shift discards nonzero bits");
  }
  return shr_bits(a, k);
}

std::vector<BigNat> to_digits(const BigNat& a, std::size_t width_bits, std::size_t count) {
  if (width_bits == 0) throw PreconditionError("digit width must be positive");
  if (a.bit_length() > width_bits * count) {
    throw PreconditionError("value does not fit in " + std::to_string(count) + " digits of " +
                            std::to_string(width_bits) + " bits");
  }
  std::vector<BigNat> digits;
  digits.reserve(count);
  std::vector<Limb> buf(detail::limbs_for_bits(width_bits));
  for (std::size_t i = 0; i < count; ++i) {
    detail::extract_bits(a.limbs(), i * width_bits, width_bits, buf);
    digits.push_back(BigNat::from_limbs(std::span<const Limb>(buf)));
  }
  return digits;
}

BigNat from_digits(std::span<const BigNat> digits, std::size_t width_bits) {
  if (digits.empty()) return {};
  std::vector<Limb> out(detail::limbs_for_bits(width_bits * digits.size()) + 1, 0);
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (digits[i].bit_length() > width_bits) {
      throw PreconditionError("digit " + std::to_string(i) + " exceeds " + std::to_string(width_bits) + " bits");
    }
    detail::deposit_bits(out, i * width_bits, digits[i].limbs());
  }
  return BigNat::from_limbs(std::move(out));
}

// SignedBig

SignedBig::SignedBig(BigNat magnitude, bool negative)
    : magnitude_(std::move(magnitude)), negative_(negative && !magnitude_.is_zero()) {}

SignedBig SignedBig::from_int(std::int64_t value) {
  if (value >= 0) return SignedBig(BigNat(static_cast<std::uint64_t>(value)));
  return SignedBig(BigNat(~static_cast<std::uint64_t>(value) + 1), true);
}

SignedBig SignedBig::from_decimal(std::string_view text) {
  if (!text.empty() && text.front() == '-') return SignedBig(BigNat::from_decimal(text.substr(1)), true);
  return SignedBig(BigNat::from_decimal(text));
}

std::string SignedBig::to_decimal() const {
  return negative_ ? "-" + magnitude_.to_decimal() : magnitude_.to_decimal();
}

SignedBig add(const SignedBig& a, const SignedBig& b) {
  if (a.negative() == b.negative()) return SignedBig(add(a.magnitude(), b.magnitude()), a.negative());
  if (a.magnitude() >= b.magnitude()) return SignedBig(sub(a.magnitude(), b.magnitude()), a.negative());
  return SignedBig(sub(b.magnitude(), a.magnitude()), b.negative());
}

SignedBig neg(const SignedBig& a) { return SignedBig(a.magnitude(), !a.negative()); }

SignedBig sub(const SignedBig& a, const SignedBig& b) { return add(a, neg(b)); }

SignedBig mul(const SignedBig& a, const SignedBig& b, MulStats* stats) {
  return SignedBig(mul(a.magnitude(), b.magnitude(), stats), a.negative() != b.negative());
}

SignedBig shr_bits_exact(const SignedBig& a, std::size_t k) {
  return SignedBig(shr_bits_exact(a.magnitude(), k), a.negative());
}

SignedBig shl_bits(const SignedBig& a, std::size_t k) {
  return SignedBig(shl_bits(a.magnitude(), k), a.negative());
}

BigNat expect_non_negative(const SignedBig& a) {
  if (a.negative()) throw PreconditionError("expected a non-negative value, got " + a.to_decimal());
  return a.magnitude();
}

}  // namespace kronmul
