#include <gtest/gtest.h>

#include <random>

#include "kronmul/error.hpp"
#include "kronmul/pack.hpp"
#include "support.hpp"

namespace kronmul {
namespace {

using testing::evaluate;
using testing::random_coeffs;
using testing::small_coeffs;
using testing::to_mpz;

const CoeffVec kPaperF = small_coeffs({274, 610, 887, 621}, 10);

TEST(CoeffVec, Construction) {
  EXPECT_THROW(CoeffVec(std::vector<BigNat>{}, 4), PreconditionError);
  EXPECT_THROW(CoeffVec(std::vector<BigNat>{1}, 0), PreconditionError);
  EXPECT_THROW(CoeffVec(std::vector<BigNat>{16}, 4), PreconditionError);
  EXPECT_THROW(small_coeffs({16}, 4), PreconditionError);
  const CoeffVec v(std::vector<BigNat>{5, BigNat::power_of_two(100)});
  EXPECT_EQ(v.width_bits(), 101u);
  EXPECT_EQ(v.stride(), 2u);
  EXPECT_EQ(v.at(1), BigNat::power_of_two(100));
  EXPECT_EQ(v.max_bit_length(), 101u);
  EXPECT_EQ(CoeffVec(std::vector<BigNat>{0, 0}).width_bits(), 1u);
  EXPECT_EQ(small_coeffs({1, 2, 3}, 2).reversed(), small_coeffs({3, 2, 1}, 2));
  // Equality is by value, not by declared width.
  EXPECT_EQ(small_coeffs({1, 2}, 2), small_coeffs({1, 2}, 90));
  EXPECT_NE(small_coeffs({1, 2}, 2), small_coeffs({1, 2, 0}, 2));
}

TEST(Pack, Examples) {
  EXPECT_EQ(pack(small_coeffs({0}, 1), 5), BigNat());
  EXPECT_EQ(pack(small_coeffs({1, 2, 3}, 2), 8), BigNat(197121));
  EXPECT_EQ(to_digits(pack(kPaperF, 12), 12, 4), kPaperF.to_vector());
  EXPECT_THROW(pack(kPaperF, 9), PreconditionError);
}

TEST(Pack, ReversedExamples) {
  EXPECT_EQ(pack_reversed(small_coeffs({9}, 4), 6), BigNat(9));
  EXPECT_EQ(pack_reversed(small_coeffs({1, 2, 3}, 2), 8), BigNat(66051));
  const CoeffVec palindrome = small_coeffs({4, 1, 7, 1, 4}, 3);
  EXPECT_EQ(pack_reversed(palindrome, 5), pack(palindrome, 5));
}

TEST(Pack, NegatedExamples) {
  EXPECT_EQ(pack_negated(small_coeffs({6}, 3), 4), SignedBig::from_int(6));
  EXPECT_EQ(pack_negated(small_coeffs({3, 2, 1}, 2), 4), SignedBig::from_int(227));
  EXPECT_EQ(pack_negated_reversed(small_coeffs({6}, 3), 4), SignedBig::from_int(6));
  EXPECT_EQ(pack_negated_reversed(small_coeffs({3, 2, 1}, 2), 4), SignedBig::from_int(737));
}

// The decimal analogues of the binary evaluations, checked with SignedBig
// arithmetic on the same coefficients.
TEST(Pack, DecimalAnalogues) {
  SignedBig at_minus_1e4;
  const SignedBig x = SignedBig::from_int(-10000);
  for (std::size_t i = kPaperF.size(); i-- > 0;) at_minus_1e4 = at_minus_1e4 * x + SignedBig(kPaperF.at(i));
  EXPECT_EQ(at_minus_1e4.to_decimal(), "-620911306099726");

  // 10^6 f(-10^-2) = sum f_i (-1)^i 10^(2(3-i)).
  SignedBig reversed;
  const SignedBig y = SignedBig::from_int(-100);
  for (std::size_t i = 0; i < kPaperF.size(); ++i) reversed = reversed * y + SignedBig(kPaperF.at(i));
  // Horner over the reversed sequence at -100 gives sum f_i (-100)^(3-i),
  // which is (-1)^3 times the normalised evaluation.
  EXPECT_EQ((-reversed).to_decimal(), "267988079");
}

TEST(Pack, PropertiesAgainstEvaluation) {
  std::mt19937_64 rng(21);
  for (int iter = 0; iter < 2000; ++iter) {
    const std::size_t len = 1 + rng() % 20;
    const std::size_t b = 1 + rng() % 100;
    const std::size_t n = b + rng() % 20;
    const CoeffVec v = random_coeffs(rng, len, b);
    const mpz_class two_n = mpz_class(1) << n;

    const BigNat p = pack(v, n);
    ASSERT_EQ(to_mpz(p), evaluate(v, two_n));
    ASSERT_LE(p.bit_length(), n * (len - 1) + b);
    ASSERT_EQ(unpack(p, n, len), v);
    ASSERT_EQ(to_digits(p, n, len), v.to_vector());

    ASSERT_EQ(pack_reversed(v.reversed(), n), p);
    ASSERT_EQ(to_mpz(pack_reversed(v, n)), evaluate(v.reversed(), two_n));

    const SignedBig neg = pack_negated(v, n);
    ASSERT_EQ(to_mpz(neg), evaluate(v, mpz_class(-two_n)));
    const SignedBig neg_rev = pack_negated_reversed(v, n);
    // 2^(n(L-1)) f(-2^-n) = sum f_i (-1)^i 2^(n(L-1-i)).
    mpz_class expected = 0;
    for (std::size_t i = 0; i < len; ++i) {
      const mpz_class term = to_mpz(v.at(i)) << (n * (len - 1 - i));
      expected += (i % 2 == 0) ? term : mpz_class(-term);
    }
    ASSERT_EQ(to_mpz(neg_rev), expected);

    // f(2^n) + f(-2^n) = 2 f_even(2^(2n)).
    const auto parts = pack_even_odd(v, n, false);
    ASSERT_EQ(to_mpz(SignedBig(p) + neg), 2 * to_mpz(parts.even));
    ASSERT_EQ(to_mpz(SignedBig(p) - neg), 2 * to_mpz(parts.odd_shifted));
  }
}

TEST(Pack, EvenOddAllowsHalfWidth) {
  // Coefficients of 10 bits at width 5: the halves are packed at 10 bits
  // apiece so the terms do not overlap.
  const auto parts = pack_even_odd(kPaperF, 5, false);
  const mpz_class x = mpz_class(1) << 5;
  EXPECT_EQ(to_mpz(parts.even) - to_mpz(parts.odd_shifted), evaluate(kPaperF, mpz_class(-x)));
  EXPECT_EQ(to_mpz(parts.even) + to_mpz(parts.odd_shifted), evaluate(kPaperF, x));
  EXPECT_THROW(pack_even_odd(kPaperF, 4, false), PreconditionError);
}

TEST(Pack, BitLengthBoundIsTight) {
  for (std::size_t b : {1, 7, 64, 65}) {
    for (std::size_t len : {1, 2, 9}) {
      const CoeffVec v = testing::max_coeffs(len, b);
      const std::size_t n = b + 3;
      EXPECT_EQ(pack(v, n).bit_length(), n * (len - 1) + b);
    }
  }
}

TEST(Unpack, Errors) {
  EXPECT_THROW(unpack(BigNat(256), 8, 1), PreconditionError);
  EXPECT_THROW(unpack(BigNat(1), 8, 0), PreconditionError);
  EXPECT_EQ(unpack(BigNat(), 8, 3), small_coeffs({0, 0, 0}, 8));
}

}  // namespace
}  // namespace kronmul
