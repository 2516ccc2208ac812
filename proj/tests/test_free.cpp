#include "hodge/free.hpp"
#include "hodge/koszul.hpp"
#include "free_oracles.hpp"

#include <gtest/gtest.h>

#include <numeric>

using namespace hodge;

using namespace testing_support;

TEST(Koszul, SignOfSwappingOddFactors)
{
  EXPECT_EQ(koszul_sign({1, 0}, {1, 1}), -1);
  EXPECT_EQ(koszul_sign({1, 0}, {1, 2}), 1);
  EXPECT_EQ(koszul_sign({0, 1, 2}, {1, 1, 1}), 1);
}

TEST(Permutations, DescentsAndRightAction)
{
  EXPECT_EQ(descents({0, 1, 2}), 0);
  EXPECT_EQ(descents({2, 1, 0}), 2);
  Alphabet A({{"a", 0, 1}, {"b", 1, 1}, {"c", 1, 1}, {"d", 0, 1}});
  TensorElement x = TensorElement::word({0, 1, 2, 3});
  SymOperator S, T;
  S.arity = T.arity = 4;
  S.add({1, 2, 0, 3}, 1);
  T.add({0, 3, 1, 2}, 1);
  EXPECT_EQ(act_right(A, act_right(A, x, S), T), act_right(A, x, S * T));
}

TEST(Stirling, GeneratingIdentity)
{
  // sum_p a^{p,j}_n X^p = binom(X - j + n, n), checked at X = 0..4
  for (int n = 1; n <= 5; ++n)
    for (int j = 1; j <= n; ++j)
      for (int X = 0; X <= 4; ++X) {
        Q lhs = 0, xp = 1;
        for (int p = 1; p <= n; ++p) {
          xp *= X;
          lhs += stirling_coefficient(n, p, j) * xp;
        }
        Q rhs = 1;
        for (int k = 1; k <= n; ++k) rhs = rhs * (X - j + k) / k;
        EXPECT_EQ(lhs, rhs) << n << " " << j << " " << X;
      }
}

TEST(Eulerian, IdempotentOrthogonalComplete)
{
  for (int n = 1; n <= 5; ++n) {
    SymOperator sum;
    sum.arity = n;
    std::vector<SymOperator> e;
    for (int p = 1; p <= n; ++p) e.push_back(eulerian_idempotent(n, p));
    for (int p = 0; p < n; ++p) {
      sum = sum + e[p];
      for (int q = 0; q < n; ++q) {
        SymOperator prod = e[p] * e[q];
        if (p == q)
          EXPECT_EQ(prod, e[p]) << n << " " << p + 1;
        else
          EXPECT_TRUE(prod.coeffs.empty()) << n << " " << p + 1 << " " << q + 1;
      }
    }
    EXPECT_EQ(sum, SymOperator::identity(n));
  }
}

TEST(Eulerian, NormIntertwinesNeighbouringIdempotents)
{
  for (int n = 2; n <= 5; ++n) {
    SymOperator N = cyclic_norm(n);
    for (int p = 1; p <= n; ++p) {
      SymOperator right = p >= 2 ? N * shift_up(eulerian_idempotent(n - 1, p - 1)) : SymOperator{n, {}};
      EXPECT_EQ(eulerian_idempotent(n, p) * N, right) << n << " " << p;
    }
  }
}

TEST(Lyndon, CountsMatchWittFormula)
{
  const long expected[] = {2, 1, 2, 3, 6, 9};
  for (int n = 1; n <= 6; ++n) {
    EXPECT_EQ(witt(2, n), expected[n - 1]);
    EXPECT_EQ(static_cast<long>(lyndon_words(2, n).size()), witt(2, n));
    EXPECT_EQ(static_cast<long>(lyndon_words(3, n).size()), witt(3, n));
  }
}

TEST(Projector, PbwDimensionsFillTensorPower)
{
  Alphabet A = two_letters();
  HodgeProjector H(A);
  for (int n = 1; n <= 5; ++n) {
    auto words = all_words(2, n);
    std::size_t total = 0;
    for (int p = 1; p <= n; ++p) total += image_dim(H, words, p);
    EXPECT_EQ(total, std::size_t(1) << n);
    EXPECT_EQ(static_cast<long>(image_dim(H, words, 1)), witt(2, n));
  }
}

TEST(Projector, LyndonBasisIsLie)
{
  Alphabet A({{"a", 0, 1}, {"b", 1, 1}});
  HodgeProjector H(A);
  for (int n = 1; n <= 4; ++n)
    for (const auto& e : lyndon_basis(A, n)) {
      EXPECT_TRUE(is_lie(H, e)) << format(A, e);
      EXPECT_EQ(H.project(e, 1), e);
    }
  // [b,b] for the odd letter b is a nonzero Lie element
  TensorElement bb = commutator(A, TensorElement::word({1}), TensorElement::word({1}));
  EXPECT_FALSE(bb.is_zero());
  EXPECT_TRUE(is_lie(H, bb));
}

TEST(Projector, DecompositionSumsBack)
{
  Alphabet A({{"a", 0, 1}, {"b", 1, 1}, {"c", 2, 1}});
  HodgeProjector H(A);
  TensorElement x;
  x.add({0, 1, 2, 1}, 3);
  x.add({2, 2, 0, 1}, -1);
  TensorElement sum;
  for (const auto& c : H.decompose(x)) sum.add(c);
  EXPECT_EQ(sum, x);
  for (const auto& [p, c] : pbw_decompose(H, x)) EXPECT_TRUE(is_in_sym_p(H, c, p));
}

TEST(Symmetrize, ProductOfLieElementsLandsInSymP)
{
  Alphabet A = two_letters();
  HodgeProjector H(A);
  TensorElement v = TensorElement::word({0}), w = TensorElement::word({1});
  TensorElement vw = commutator(A, v, w);
  EXPECT_TRUE(is_in_sym_p(H, symmetrize(H, {v, vw}), 2));
  EXPECT_TRUE(is_in_sym_p(H, symmetrize(H, {v, v, w}), 3));
  EXPECT_FALSE(is_in_sym_p(H, vw, 2));
}

TEST(Adams, EigenvalueLawOnShortWords)
{
  auto r = check_adams_law(two_letters(), 4);
  EXPECT_EQ(r.words, 30u);
  EXPECT_TRUE(r.ok());
  auto g = check_adams_law(Alphabet({{"a", 0, 1}, {"b", 1, 1}}), 4);
  EXPECT_TRUE(g.ok());
}

TEST(Hopf, LettersArePrimitive)
{
  Alphabet A = two_letters();
  TensorPair t = hopf_coproduct(A, TensorElement::word({0}));
  TensorPair expect;
  expect.add({}, {0}, 1);
  expect.add({0}, {}, 1);
  EXPECT_EQ(t, expect);
}
