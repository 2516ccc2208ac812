#include "common.hpp"
#include "hodge/kassel.hpp"

#include <gtest/gtest.h>

using namespace hodge;
using testing_support::lie;

TEST(Kassel, TrivialCoefficientsGivePlainChains)
{
  LieAlgebraSpec a = lie("sl2");
  KasselModel K(a);
  ChainComplex c = K.ce_with_coefficients(0);
  EXPECT_EQ(c.dim(0), 1u);
  EXPECT_EQ(c.dim(1), 3u);
  EXPECT_EQ(c.dim(3), 1u);
  // H_*(sl2; k) = k in degrees 0 and 3
  EXPECT_EQ(K.hh_via_coefficients(0, 3), (std::vector<std::size_t>{1, 0, 0, 1}));
}

TEST(Kassel, AbelianHasZeroDifferential)
{
  LieAlgebraSpec a = lie("abelian2");
  KasselModel K(a);
  ChainComplex c = K.ce_with_coefficients(2);
  EXPECT_TRUE(is_zero(c.d()));
  EXPECT_EQ(K.hh_via_coefficients(2, 2), (std::vector<std::size_t>{3, 6, 3}));
}

TEST(Kassel, DeRhamOnOneVariable)
{
  LieAlgebraSpec a = lie("abelian1");
  KasselModel K(a);
  LinearMap d = K.derham_map(1);
  // x (x) 1 -> 1 (x) x
  ASSERT_EQ(d.block(0).size(), 1u);
  EXPECT_EQ(d.block(0)[0], unit_vector(0));
  EXPECT_EQ(K.hh_via_coefficients(3, 3), (std::vector<std::size_t>{1, 1, 0, 0}));
  for (int p = 1; p <= 4; ++p) EXPECT_EQ(K.hc_via_kernel(p, 2), (std::vector<std::size_t>{1, 0, 0})) << p;
}

TEST(Kassel, MixedComplexAxioms)
{
  for (const char* name : {"abelian1", "abelian2", "nonabelian2", "sl2"}) {
    LieAlgebraSpec a = lie(name);
    KasselModel K(a);
    for (int p = 0; p <= 3; ++p) EXPECT_TRUE(K.check_mixed(p).ok()) << name << " p=" << p;
  }
}

TEST(Kassel, DeRhamRowsExactInPositiveWeight)
{
  for (const char* name : {"abelian2", "sl2"}) {
    LieAlgebraSpec a = lie(name);
    KasselModel K(a);
    for (int w = 1; w <= 4; ++w) EXPECT_TRUE(K.row_exact(w)) << name << " w=" << w;
  }
}

TEST(Kassel, Sl2Values)
{
  LieAlgebraSpec a = lie("sl2");
  KasselModel K(a);
  EXPECT_EQ(K.hc_via_kernel(1, 3), (std::vector<std::size_t>{0, 0, 1, 0}));
  // Whitehead: H_0 and H_1 with nontrivial simple coefficients vanish
  auto hh = K.hh_via_coefficients(1, 3);
  EXPECT_EQ(hh[0], 0u);
  EXPECT_EQ(hh[1], 0u);
}

TEST(Kassel, RoutesAgree)
{
  struct Case {
    const char* name;
    int max_p, max_weight;
  };
  for (const Case& c : {Case{"abelian1", 4, 6}, Case{"abelian2", 3, 6}, Case{"sl2", 2, 5}}) {
    RouteReport r = cross_validate(lie(c.name), c.max_p, {c.max_weight, 3});
    EXPECT_TRUE(r.all_equal()) << c.name;
    for (const auto& row : r.rows)
      if (row.safe) EXPECT_EQ(row.cyclic, row.kassel) << c.name << " " << row.kind << " p=" << row.p << " n=" << row.degree;
  }
}

TEST(Kassel, RejectsGradedInput)
{
  LieAlgebraSpec a;
  a.labels = {"x"};
  a.degrees = {1};
  EXPECT_THROW(KasselModel{a}, std::invalid_argument);
}
