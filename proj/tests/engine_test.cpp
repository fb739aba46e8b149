#include <gtest/gtest.h>

#include <algorithm>
#include <array>

#include "supercong/engine.hpp"
#include "supercong/errors.hpp"
#include "supercong/exact.hpp"

using namespace supercong;

TEST(Engine, ParamsValidated) {
  EXPECT_THROW(TheoremParams(0, 1, 1), DomainError);
  EXPECT_EQ(required_table_limit(TheoremParams(1, 2, 3), 5), 30u);
}

TEST(Engine, RhsSmall) {
  EXPECT_EQ(rhs_small({1, 1, 1}), 1);
  EXPECT_EQ(rhs_small({2, 2, 2}), 16);
  EXPECT_EQ(rhs_small({3, 1, 1}), 3);
}

TEST(Engine, OracleAtThree) {
  EXPECT_EQ(lhs_oracle_exact({1, 1, 1}, 3), 271);
  EXPECT_THROW(lhs_oracle_exact({1, 1, 1}, 2), DomainError);
  EXPECT_THROW(lhs_oracle_exact({1, 1, 1}, 17), DomainError);
  EXPECT_EQ(lhs_naive({1, 1, 1}, PrimePowerModulus(3, 3)).value(), 1u);
  const PrimePowerModulus m(3, 3);
  EXPECT_EQ(lhs_naive({2, 1, 1}, m), reduce_exact(lhs_oracle_exact({2, 1, 1}, 3), m));
}

TEST(Engine, NaiveMatchesOracle) {
  for (u64 p : {3, 5, 7, 11, 13}) {
    const PrimePowerModulus m(p, 3);
    for (int r = 1; r <= 2; ++r)
      for (int s = 1; s <= 2; ++s)
        for (int t = 1; t <= 2; ++t) {
          const TheoremParams q(r, s, t);
          EXPECT_EQ(lhs_naive(q, m), reduce_exact(lhs_oracle_exact(q, p), m)) << p << " " << r << s << t;
        }
  }
}

TEST(Engine, MainExamples) {
  const auto c = check_main({1, 1, 1}, 3);
  EXPECT_TRUE(c.holds());
  EXPECT_EQ(c.lhs, "1");
  EXPECT_EQ(c.modulus, "27");
  const auto d = check_main({2, 2, 2}, 5);
  EXPECT_TRUE(d.holds());
  EXPECT_EQ(d.lhs, "16");
  EXPECT_TRUE(check_main({3, 2, 1}, 7).holds());
  EXPECT_EQ(lhs_naive({1, 1, 1}, PrimePowerModulus(5, 3)).value(), 1u);
  EXPECT_TRUE(check_main_oracle({2, 1, 1}, 5).holds());
}

TEST(Engine, PermutationSymmetry) {
  for (u64 p : {5, 7}) {
    const PrimePowerModulus m(p, 3);
    std::array<int, 3> v = {1, 2, 3};
    const Residue base = lhs_naive({1, 2, 3}, m);
    do {
      const TheoremParams q(v[0], v[1], v[2]);
      EXPECT_EQ(lhs_naive(q, m), base);
      EXPECT_EQ(check_main(q, p).lhs, check_main({1, 2, 3}, p).lhs);
      EXPECT_TRUE(check_main(q, p).holds());
    } while (std::next_permutation(v.begin(), v.end()));
  }
}

TEST(Engine, DecompositionSumsToNaive) {
  for (u64 p : {5, 7, 11, 13}) {
    const PrimePowerModulus m(p, 3);
    for (int r = 1; r <= 2; ++r)
      for (int s = 1; s <= 2; ++s)
        for (int t = 1; t <= 2; ++t) {
          const TheoremParams q(r, s, t);
          const FactorialTables tables(required_table_limit(q, p), m);
          auto total = TruncatedPAdic::zero(m);
          for (const auto& cell : decompose(q, tables)) {
            EXPECT_GE(cell.total().is_zero() ? 0 : cell.total().valuation(), 0);
            EXPECT_TRUE((cell.b + cell.c).is_zero() || (cell.b + cell.c).valuation() >= 3);
            total += cell.total();
          }
          EXPECT_EQ(total.reduce(), lhs_naive(q, tables));
        }
  }
}

TEST(Engine, SingleCellExample) {
  const PrimePowerModulus m(5, 3);
  const FactorialTables tables(15, m);
  const auto cells = decompose({1, 1, 1}, tables);
  ASSERT_EQ(cells.size(), 1u);
  EXPECT_EQ(cells[0].total().reduce().value(), 1u);
  EXPECT_EQ(cells[0].a.reduce().value(), 1u);
}

TEST(Engine, DecompositionProperties) {
  for (const auto& c : check_decomposition_properties({1, 1, 1}, 5)) EXPECT_TRUE(c.holds()) << c.id;
  const auto cells = check_decomposition_properties({2, 2, 2}, 7);
  EXPECT_EQ(cells.size(), 4u * 4u + 1u);
  for (const auto& c : cells) EXPECT_TRUE(c.holds()) << c.id;
  for (const auto& c : check_decomposition_properties({1, 1, 3}, 5)) EXPECT_TRUE(c.holds()) << c.id;
  EXPECT_THROW(check_decomposition_properties({1, 1, 1}, 3), DomainError);
}

TEST(Engine, Catalan) {
  const PrimePowerModulus m(5, 3);
  EXPECT_EQ(catalan_mod(0, m).value(), 1u);
  EXPECT_EQ(catalan_mod(3, m).value(), 5u);
  EXPECT_EQ(catalan_mod(4, m).value(), 14u);
}

TEST(Engine, Remarks) {
  const auto r1 = check_remark(1, 5);
  EXPECT_TRUE(r1.holds());
  EXPECT_EQ(r1.lhs, "24");
  const auto r2 = check_remark(2, 5);
  EXPECT_TRUE(r2.holds());
  EXPECT_EQ(r2.lhs, "23");
  const auto r5 = check_remark(5, 5);
  EXPECT_TRUE(r5.holds());
  EXPECT_EQ(r5.lhs, "24");
  EXPECT_THROW(check_remark(3, 5), DomainError);
  EXPECT_THROW(check_remark(1, 3), DomainError);
}
