#include <gtest/gtest.h>

#include <random>

#include "supercong/errors.hpp"
#include "supercong/modulus.hpp"
#include "supercong/number_theory.hpp"
#include "supercong/primes.hpp"
#include "supercong/residue.hpp"

using namespace supercong;

TEST(Modulus, PowersAndPrecision) {
  const PrimePowerModulus m(5, 3);
  EXPECT_EQ(m.modulus(), 125u);
  EXPECT_EQ(m.precision(), 5);
  EXPECT_EQ(m.working_modulus(), 3125u);
  EXPECT_EQ(m.power(0), 1u);
  EXPECT_EQ(m.power(2), 25u);
}

TEST(Modulus, RejectsBadPrimes) {
  EXPECT_THROW(PrimePowerModulus(2, 3), DomainError);
  EXPECT_THROW(PrimePowerModulus(9, 3), DomainError);
  EXPECT_THROW(PrimePowerModulus(5, 0), DomainError);
}

TEST(Modulus, OverflowGuard) {
  EXPECT_NO_THROW(PrimePowerModulus(101, 3));
  EXPECT_THROW(PrimePowerModulus(2147483647ULL, 3), ModulusOverflow);
}

TEST(Modulus, MillerRabin) {
  EXPECT_TRUE(is_prime(2));
  EXPECT_TRUE(is_prime(1000000007ULL));
  EXPECT_TRUE(is_prime(18446744073709551557ULL));
  EXPECT_FALSE(is_prime(1));
  EXPECT_FALSE(is_prime(3215031751ULL));
  EXPECT_FALSE(is_prime(561));
}

TEST(Residue, InverseExamples) {
  const PrimePowerModulus m2(5, 2), m3(5, 3);
  EXPECT_EQ(mod_inverse(Residue(1, m2)).value(), 1u);
  EXPECT_EQ(mod_inverse(Residue(9, m2)).value(), 14u);
  EXPECT_EQ(mod_inverse(Residue(3, m3)).value(), 42u);
  EXPECT_THROW(mod_inverse(Residue(10, m3)), NotAUnit);
}

TEST(Residue, InverseIsInvolution) {
  std::mt19937_64 rng(7);
  for (u64 p : {3, 5, 7, 11, 101}) {
    for (int k = 1; k <= 3; ++k) {
      const PrimePowerModulus m(p, k);
      for (int trial = 0; trial < 200; ++trial) {
        const Residue u = Residue::from_unsigned(rng() % m.modulus(), m);
        if (!u.is_unit()) continue;
        const Residue w = mod_inverse(u);
        EXPECT_EQ(mod_inverse(w), u);
        EXPECT_EQ((u * w).value(), 1u);
      }
    }
  }
}

TEST(Residue, SignedConstructionAndMismatch) {
  const PrimePowerModulus m(7, 2);
  EXPECT_EQ(Residue(-1, m).value(), 48u);
  EXPECT_EQ((Residue(3, m) - Residue(5, m)).value(), 47u);
  EXPECT_THROW(Residue(1, m) + Residue(1, PrimePowerModulus(7, 3)), ModulusMismatch);
}

TEST(NumberTheory, FermatQuotient) {
  EXPECT_EQ(fermat_quotient2(PrimePowerModulus(3, 2)).value(), 1u);
  EXPECT_EQ(fermat_quotient2(PrimePowerModulus(5, 2)).value(), 3u);
  EXPECT_EQ(fermat_quotient2(PrimePowerModulus(7, 2)).value(), 9u);
}

TEST(NumberTheory, LegendreSymbolAtThree) {
  EXPECT_EQ(legendre_symbol_3(7), 1);
  EXPECT_EQ(legendre_symbol_3(5), -1);
  EXPECT_THROW(legendre_symbol_3(3), DomainError);
}

TEST(Primes, Ranges) {
  EXPECT_EQ(primes_in_range(3, 12), (std::vector<u64>{3, 5, 7, 11}));
  EXPECT_EQ(primes_in_range(90, 101), (std::vector<u64>{97, 101}));
  EXPECT_TRUE(primes_in_range(4, 4).empty());
  EXPECT_THROW(primes_in_range(2, 10), DomainError);
}
