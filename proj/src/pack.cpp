#include "kronmul/pack.hpp"

#include <algorithm>
#include <string>

#include "bits.hpp"
#include "kronmul/error.hpp"

namespace kronmul {

namespace {

// Sum over i < count of v[index(i)] * 2^(offset + i*width). Requires
// width >= v.width_bits() so that the terms occupy disjoint bit ranges.
template <class IndexFn>
BigNat pack_sequence(const CoeffVec& v, std::size_t count, std::size_t width, std::size_t offset,
                     IndexFn index) {
  if (count == 0) return {};
  const std::size_t top_bit = offset + width * (count - 1) + v.width_bits();
  std::vector<Limb> buf(detail::limbs_for_bits(top_bit) + 1, 0);
  for (std::size_t i = 0; i < count; ++i) {
    detail::deposit_bits(buf, offset + i * width, detail::trim(v.limbs(index(i))));
  }
  return BigNat::from_limbs(std::move(buf));
}

void require_width(const CoeffVec& v, std::size_t width, const char* op) {
  if (width < v.width_bits()) {
    throw PreconditionError(std::string(op) + ": width " + std::to_string(width) + " is below coefficient bound " +
                            std::to_string(v.width_bits()));
  }
}

}  // namespace

CoeffVec::CoeffVec(std::size_t length, std::size_t width_bits)
    : size_(length),
      width_bits_(width_bits),
      stride_(detail::limbs_for_bits(width_bits)),
      data_(length * stride_, 0) {
  if (length == 0) throw PreconditionError("coefficient vector must have length >= 1");
  if (width_bits == 0) throw PreconditionError("coefficient width must be >= 1 bit");
}

CoeffVec::CoeffVec(std::span<const BigNat> coeffs, std::size_t width_bits) : CoeffVec(coeffs.size(), width_bits) {
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i].bit_length() > width_bits) {
      throw PreconditionError("coefficient " + std::to_string(i) + " = " + coeffs[i].to_decimal() +
                              " does not fit in " + std::to_string(width_bits) + " bits");
    }
    std::ranges::copy(coeffs[i].limbs(), mutable_limbs(i).begin());
  }
}

CoeffVec::CoeffVec(std::span<const BigNat> coeffs)
    : CoeffVec(coeffs, std::max<std::size_t>(1, std::ranges::max(coeffs, {}, &BigNat::bit_length).bit_length())) {}

CoeffVec CoeffVec::from_words(std::span<const std::uint64_t> words, std::size_t width_bits) {
  CoeffVec v(words.size(), width_bits);
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (width_bits < kLimbBits && (words[i] >> width_bits) != 0) {
      throw PreconditionError("coefficient " + std::to_string(i) + " does not fit in " +
                              std::to_string(width_bits) + " bits");
    }
    v.data_[i * v.stride_] = words[i];
  }
  return v;
}

CoeffVec CoeffVec::zeros(std::size_t length, std::size_t width_bits) { return CoeffVec(length, width_bits); }

std::vector<BigNat> CoeffVec::to_vector() const {
  std::vector<BigNat> out;
  out.reserve(size_);
  for (std::size_t i = 0; i < size_; ++i) out.push_back(at(i));
  return out;
}

std::vector<std::uint64_t> CoeffVec::low_words() const {
  std::vector<std::uint64_t> out(size_);
  for (std::size_t i = 0; i < size_; ++i) out[i] = data_[i * stride_];
  return out;
}

CoeffVec CoeffVec::reversed() const {
  CoeffVec r(size_, width_bits_);
  for (std::size_t i = 0; i < size_; ++i) std::ranges::copy(limbs(size_ - 1 - i), r.mutable_limbs(i).begin());
  return r;
}

std::size_t CoeffVec::max_bit_length() const {
  std::size_t best = 0;
  for (std::size_t i = 0; i < size_; ++i) {
    const auto c = detail::trim(limbs(i));
    if (c.empty()) continue;
    best = std::max(best, (c.size() - 1) * kLimbBits + kLimbBits - static_cast<std::size_t>(__builtin_clzll(c.back())));
  }
  return best;
}

bool operator==(const CoeffVec& a, const CoeffVec& b) {
  if (a.size_ != b.size_) return false;
  for (std::size_t i = 0; i < a.size_; ++i) {
    if (detail::compare(a.limbs(i), b.limbs(i)) != 0) return false;
  }
  return true;
}

BigNat pack(const CoeffVec& v, std::size_t width) {
  require_width(v, width, "pack");
  return pack_sequence(v, v.size(), width, 0, [](std::size_t i) { return i; });
}

BigNat pack_reversed(const CoeffVec& v, std::size_t width) {
  require_width(v, width, "pack_reversed");
  const std::size_t last = v.size() - 1;
  return pack_sequence(v, v.size(), width, 0, [last](std::size_t i) { return last - i; });
}

EvenOddPacking pack_even_odd(const CoeffVec& v, std::size_t width, bool reversed) {
  if (2 * width < v.width_bits()) {
    throw PreconditionError("pack_even_odd: 2*width " + std::to_string(2 * width) + " is below coefficient bound " +
                            std::to_string(v.width_bits()));
  }
  const std::size_t n = v.size();
  const std::size_t last = n - 1;
  auto seq = [reversed, last](std::size_t k) { return reversed ? last - k : k; };
  EvenOddPacking out;
  out.even = pack_sequence(v, (n + 1) / 2, 2 * width, 0, [&](std::size_t i) { return seq(2 * i); });
  out.odd_shifted = pack_sequence(v, n / 2, 2 * width, width, [&](std::size_t i) { return seq(2 * i + 1); });
  return out;
}

SignedBig pack_negated(const CoeffVec& v, std::size_t width) {
  require_width(v, width, "pack_negated");
  auto parts = pack_even_odd(v, width, false);
  return SignedBig(std::move(parts.even)) - SignedBig(std::move(parts.odd_shifted));
}

SignedBig pack_negated_reversed(const CoeffVec& v, std::size_t width) {
  require_width(v, width, "pack_negated_reversed");
  // Packing the reversed sequence at -2^width gives (-1)^(L-1) times the
  // evaluation 2^(width*(L-1)) f(-2^-width).
  auto parts = pack_even_odd(v, width, true);
  SignedBig alternating = SignedBig(std::move(parts.even)) - SignedBig(std::move(parts.odd_shifted));
  return (v.size() % 2 == 1) ? alternating : -alternating;
}

CoeffVec unpack(const BigNat& value, std::size_t width, std::size_t count) {
  if (count == 0 || value.bit_length() > width * count) {
    throw PreconditionError("unpack: value of " + std::to_string(value.bit_length()) + " bits does not fit in " +
                            std::to_string(count) + " digits of " + std::to_string(width) + " bits");
  }
  CoeffVec out = CoeffVec::zeros(count, width);
  for (std::size_t i = 0; i < count; ++i) detail::extract_bits(value.limbs(), i * width, width, out.mutable_limbs(i));
  return out;
}

}  // namespace kronmul
