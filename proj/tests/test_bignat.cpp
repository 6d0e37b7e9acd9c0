#include <gtest/gtest.h>

#include <random>

#include "kronmul/bignat.hpp"
#include "kronmul/error.hpp"
#include "support.hpp"

namespace kronmul {
namespace {

using testing::from_mpz;
using testing::random_edgy;
using testing::random_limbs;
using testing::to_mpz;

BigNat dec(const char* s) { return BigNat::from_decimal(s); }

bool normalized(const BigNat& a) { return a.limbs().empty() || a.limbs().back() != 0; }

TEST(BigNat, DecimalRoundTrip) {
  EXPECT_EQ(BigNat().to_decimal(), "0");
  EXPECT_EQ(dec("0"), BigNat());
  EXPECT_EQ(dec("18446744073709551616"), BigNat::power_of_two(64));
  const char* big = "490590096403410430461082839078846704189820151522";
  EXPECT_EQ(dec(big).to_decimal(), big);
  EXPECT_THROW(dec(""), ParseError);
  EXPECT_THROW(dec("12a"), ParseError);
  EXPECT_THROW(dec("-1"), ParseError);
}

TEST(BigNat, BitAccessors) {
  EXPECT_EQ(BigNat().bit_length(), 0u);
  EXPECT_EQ(BigNat(1).bit_length(), 1u);
  EXPECT_EQ(BigNat::power_of_two(130).bit_length(), 131u);
  EXPECT_TRUE(BigNat::power_of_two(130).bit(130));
  EXPECT_FALSE(BigNat::power_of_two(130).bit(129));
  EXPECT_FALSE(BigNat(5).bit(1000));
  EXPECT_EQ(BigNat::from_limbs(std::vector<Limb>{7, 0, 0}).size(), 1u);
}

TEST(BigNat, AddExamples) {
  EXPECT_EQ(add(BigNat(), BigNat()), BigNat());
  const BigNat sum = add(BigNat(~std::uint64_t{0}), BigNat(1));
  EXPECT_EQ(sum, BigNat::power_of_two(64));
  EXPECT_EQ(sum.size(), 2u);
  EXPECT_EQ(add(dec("621000088700006100000274"), BigNat(1)), dec("621000088700006100000275"));
}

TEST(BigNat, SubExamples) {
  EXPECT_EQ(sub(BigNat(5), BigNat(5)), BigNat());
  EXPECT_TRUE(sub(BigNat(5), BigNat(5)).is_zero());
  EXPECT_EQ(sub(BigNat::power_of_two(64), BigNat(1)), BigNat(~std::uint64_t{0}));
  EXPECT_EQ(sub(dec("490686413831542917850889971522"), BigNat(151522)), dec("490686413831542917850889820000"));
  EXPECT_THROW(sub(BigNat(4), BigNat(5)), UnderflowError);
  EXPECT_THROW(sub(BigNat(), BigNat::power_of_two(200)), UnderflowError);
}

TEST(BigNat, MulExamples) {
  const BigNat x = dec("123456789012345678901234567890");
  EXPECT_TRUE(mul(BigNat(), x).is_zero());
  EXPECT_TRUE(mul(x, BigNat()).is_zero());
  EXPECT_EQ(mul_classical(BigNat(1), x), x);
  EXPECT_EQ(mul_karatsuba(BigNat(1), x), x);
  EXPECT_EQ(mul(dec("621000088700006100000274"), dec("790000042400002980000553")),
            dec("490590096403410430461082839078846704189820151522"));
  const BigNat m = BigNat(~std::uint64_t{0});
  const BigNat sq = mul_classical(m, m);
  EXPECT_EQ(sq.size(), 2u);
  EXPECT_EQ(sq, sub(BigNat::power_of_two(128), BigNat::power_of_two(65)) + BigNat(1));
}

TEST(BigNat, ClassicalCountsExactly) {
  std::mt19937_64 rng(11);
  for (std::size_t m = 1; m <= 20; ++m) {
    for (std::size_t n = 1; n <= 20; n += 3) {
      BigNat a = random_limbs(rng, m);
      BigNat b = random_limbs(rng, n);
      // Keep the top limbs nonzero so the sizes are what we asked for.
      a = add(a, BigNat::power_of_two(64 * (m - 1)));
      b = add(b, BigNat::power_of_two(64 * (n - 1)));
      if (a.size() != m || b.size() != n) continue;
      MulStats stats;
      mul_classical(a, b, &stats);
      EXPECT_EQ(stats.limb_products, m * n) << m << "x" << n;
    }
  }
}

TEST(BigNat, KaratsubaCountsFewerOnLargeOperands) {
  std::mt19937_64 rng(12);
  auto full = [&rng] {
    std::vector<Limb> limbs(256);
    for (auto& l : limbs) l = rng();
    limbs.back() |= Limb{1} << 63;
    return BigNat::from_limbs(std::move(limbs));
  };
  const BigNat a = full();
  const BigNat b = full();
  MulStats classical, karatsuba;
  const BigNat p = mul_classical(a, b, &classical);
  EXPECT_EQ(mul_karatsuba(a, b, &karatsuba, 16), p);
  EXPECT_EQ(classical.limb_products, 256u * 256u);
  EXPECT_LT(karatsuba.limb_products, classical.limb_products / 2);
}

TEST(BigNat, KaratsubaMatchesClassical) {
  std::mt19937_64 rng(13);
  for (int iter = 0; iter < 1000; ++iter) {
    const std::size_t m = 1 + rng() % 64;
    const std::size_t n = 1 + rng() % 64;
    const BigNat a = iter % 3 == 0 ? random_edgy(rng, m) : random_limbs(rng, m);
    const BigNat b = iter % 5 == 0 ? random_edgy(rng, n) : random_limbs(rng, n);
    const std::size_t threshold = 2 + rng() % 20;
    EXPECT_EQ(mul_karatsuba(a, b, nullptr, threshold), mul_classical(a, b)) << m << "x" << n;
  }
}

TEST(BigNat, ThresholdSwitch) {
  std::mt19937_64 rng(14);
  const BigNat a = random_limbs(rng, 64);
  const BigNat b = random_limbs(rng, 64);
  MulStats with_karatsuba, classical_only;
  {
    const ScopedKaratsubaThreshold guard(8);
    EXPECT_EQ(karatsuba_threshold(), 8u);
    mul(a, b, &with_karatsuba);
  }
  {
    const ScopedKaratsubaThreshold guard(kClassicalOnly);
    mul(a, b, &classical_only);
  }
  EXPECT_EQ(classical_only.limb_products, a.size() * b.size());
  EXPECT_LT(with_karatsuba.limb_products, classical_only.limb_products);
}

TEST(BigNat, RingAxiomsAgainstGmp) {
  std::mt19937_64 rng(15);
  for (int iter = 0; iter < 10000; ++iter) {
    const BigNat a = random_edgy(rng, rng() % 12);
    const BigNat b = random_edgy(rng, rng() % 12);
    const BigNat c = random_limbs(rng, rng() % 12);
    const BigNat ab = add(a, b);
    ASSERT_TRUE(normalized(ab));
    ASSERT_EQ(ab, add(b, a));
    ASSERT_EQ(add(ab, c), add(a, add(b, c)));
    ASSERT_EQ(mul(a, add(b, c)), add(mul(a, b), mul(a, c)));
    ASSERT_EQ(to_mpz(ab), to_mpz(a) + to_mpz(b));
    ASSERT_EQ(to_mpz(mul(a, b)), to_mpz(a) * to_mpz(b));
    const BigNat& big = a >= b ? a : b;
    const BigNat& small = a >= b ? b : a;
    const BigNat d = sub(big, small);
    ASSERT_TRUE(normalized(d));
    ASSERT_EQ(to_mpz(d), to_mpz(big) - to_mpz(small));
    ASSERT_EQ(add(d, small), big);
    ASSERT_EQ(a <=> b, cmp(to_mpz(a), to_mpz(b)) <=> 0);
  }
}

TEST(BigNat, GmpConversionsRoundTrip) {
  std::mt19937_64 rng(16);
  for (int iter = 0; iter < 200; ++iter) {
    const BigNat a = random_edgy(rng, rng() % 9);
    EXPECT_EQ(from_mpz(to_mpz(a)), a);
    EXPECT_EQ(a.to_decimal(), to_mpz(a).get_str());
  }
}

TEST(BigNat, ShiftExamples) {
  EXPECT_EQ(shl_bits(BigNat(5), 0), BigNat(5));
  EXPECT_EQ(shl_bits(BigNat(1), 70), BigNat::power_of_two(70));
  EXPECT_EQ(shr_bits(BigNat::power_of_two(70) + BigNat(8), 3), BigNat::power_of_two(67) + BigNat(1));
  EXPECT_EQ(shr_bits(BigNat(5), 3), BigNat());
  EXPECT_EQ(shr_bits(BigNat(5), 1000), BigNat());
  EXPECT_TRUE(shl_bits(BigNat(), 77).is_zero());
  EXPECT_EQ(shr_bits_exact(BigNat::power_of_two(70) + BigNat(8), 3), BigNat::power_of_two(67) + BigNat(1));
  EXPECT_THROW(shr_bits_exact(BigNat::power_of_two(70) + BigNat(8), 4), InexactError);
}

TEST(BigNat, ShiftsAgainstGmp) {
  std::mt19937_64 rng(17);
  for (int iter = 0; iter < 2000; ++iter) {
    const BigNat a = random_edgy(rng, rng() % 6);
    const std::size_t k = rng() % 200;
    const BigNat left = shl_bits(a, k);
    ASSERT_TRUE(normalized(left));
    ASSERT_EQ(to_mpz(left), mpz_class(to_mpz(a) << k));
    const BigNat right = shr_bits(a, k);
    ASSERT_TRUE(normalized(right));
    ASSERT_EQ(to_mpz(right), mpz_class(to_mpz(a) >> k));
    ASSERT_EQ(shr_bits_exact(left, k), a);
  }
}

TEST(BigNat, DigitExamples) {
  EXPECT_EQ(to_digits(BigNat(), 5, 3), (std::vector<BigNat>{0, 0, 0}));
  EXPECT_EQ(to_digits(BigNat(475), 3, 4), (std::vector<BigNat>{3, 3, 7, 0}));
  EXPECT_EQ(to_digits(BigNat(197121), 8, 3), (std::vector<BigNat>{1, 2, 3}));
  EXPECT_THROW(to_digits(BigNat(197121), 8, 2), PreconditionError);

  EXPECT_EQ(from_digits(std::vector<BigNat>{}, 7), BigNat());
  EXPECT_EQ(from_digits(std::vector<BigNat>{1, 2, 3}, 8), BigNat(197121));
  EXPECT_EQ(from_digits(std::vector<BigNat>{3, 3, 7, 0}, 3), BigNat(475));
  EXPECT_THROW(from_digits(std::vector<BigNat>{8}, 3), PreconditionError);
}

TEST(BigNat, DigitsRoundTrip) {
  std::mt19937_64 rng(18);
  for (int iter = 0; iter < 2000; ++iter) {
    const std::size_t width = 1 + rng() % 150;
    const std::size_t count = 1 + rng() % 10;
    const BigNat a = testing::random_bits(rng, width * count - rng() % width);
    const auto digits = to_digits(a, width, count);
    ASSERT_EQ(digits.size(), count);
    for (const auto& d : digits) ASSERT_LE(d.bit_length(), width);
    ASSERT_EQ(from_digits(digits, width), a);
  }
}

TEST(SignedBig, Arithmetic) {
  const SignedBig a = SignedBig::from_int(-7);
  const SignedBig b = SignedBig::from_int(3);
  EXPECT_EQ((a + b).to_decimal(), "-4");
  EXPECT_EQ((a - b).to_decimal(), "-10");
  EXPECT_EQ((b - a).to_decimal(), "10");
  EXPECT_EQ((a * b).to_decimal(), "-21");
  EXPECT_EQ((a * a).to_decimal(), "49");
  EXPECT_EQ(SignedBig::from_decimal("-620911306099726").to_decimal(), "-620911306099726");
  EXPECT_EQ(shr_bits_exact(SignedBig::from_int(-24), 3), SignedBig::from_int(-3));
  EXPECT_THROW(shr_bits_exact(SignedBig::from_int(-20), 3), InexactError);
  EXPECT_EQ(shl_bits(SignedBig::from_int(-3), 2), SignedBig::from_int(-12));
  EXPECT_THROW(expect_non_negative(SignedBig::from_int(-1)), PreconditionError);
  EXPECT_EQ(expect_non_negative(SignedBig::from_int(9)), BigNat(9));
}

TEST(SignedBig, ZeroIsNeverNegative) {
  const SignedBig a = SignedBig::from_int(-5);
  EXPECT_FALSE((a - a).negative());
  EXPECT_FALSE((a + SignedBig::from_int(5)).negative());
  EXPECT_FALSE((-SignedBig()).negative());
  EXPECT_FALSE((a * SignedBig()).negative());
  EXPECT_FALSE(SignedBig(BigNat(), true).negative());
  EXPECT_EQ(SignedBig::from_decimal("-0"), SignedBig());
}

TEST(SignedBig, AgainstGmp) {
  std::mt19937_64 rng(19);
  for (int iter = 0; iter < 3000; ++iter) {
    const SignedBig a(random_edgy(rng, rng() % 5), rng() % 2 == 0);
    const SignedBig b(random_edgy(rng, rng() % 5), rng() % 2 == 0);
    ASSERT_EQ(to_mpz(a + b), to_mpz(a) + to_mpz(b));
    ASSERT_EQ(to_mpz(a - b), to_mpz(a) - to_mpz(b));
    ASSERT_EQ(to_mpz(a * b), to_mpz(a) * to_mpz(b));
    ASSERT_EQ(to_mpz(-a), -to_mpz(a));
  }
}

}  // namespace
}  // namespace kronmul
