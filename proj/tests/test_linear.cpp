#include "hodge/linear.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace hodge;

namespace {

SpacePtr space(std::map<int, int> dims)
{
  auto s = std::make_shared<GradedSpace>();
  for (const auto& [d, n] : dims) {
    s->blocks[d];
    for (int i = 0; i < n; ++i) s->add(d, "b" + std::to_string(d) + "_" + std::to_string(i));
  }
  return s;
}

SparseVec vec(std::vector<int> v)
{
  std::map<int, Q> m;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i]) m[static_cast<int>(i)] = v[i];
  return sparse_from_map(m);
}

}  // namespace

TEST(Rational, LowestTermsAndPositiveDenominator)
{
  EXPECT_EQ(to_string(parse_rational("-6/4")), "-3/2");
  EXPECT_EQ(to_string(parse_rational("-10/5")), "-2");
  EXPECT_EQ(parse_rational("7"), Q(7));
  EXPECT_THROW(parse_rational("1.5"), std::invalid_argument);
  EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_rational("x"), std::invalid_argument);
}

TEST(Echelon, TagsRecordTheCombination)
{
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> c(-3, 3);
  std::vector<SparseVec> inserted;
  Echelon E;
  for (int j = 0; j < 6; ++j) {
    std::vector<int> v(8);
    for (auto& x : v) x = c(rng);
    inserted.push_back(vec(v));
    E.insert(inserted.back(), unit_vector(j));
  }
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<int> v(8);
    for (auto& x : v) x = c(rng);
    SparseVec orig = vec(v), rem = orig, acc;
    E.reduce(rem, &acc);
    SparseVec rebuilt = rem;
    for (const auto& [j, a] : acc) axpy(rebuilt, a, inserted[j]);
    EXPECT_EQ(rebuilt, orig);
  }
}

TEST(Echelon, RankOfKnownMatrix)
{
  // third column = first + 2 * second
  std::vector<SparseVec> cols{vec({1, 0, 2}), vec({0, 1, 1}), vec({1, 2, 4})};
  EXPECT_EQ(rank_of(cols), 2u);
  auto ki = kernel_image(cols);
  ASSERT_EQ(ki.kernel.size(), 1u);
  SparseVec img;
  for (const auto& [j, a] : ki.kernel[0]) axpy(img, a, cols[j]);
  EXPECT_TRUE(img.empty());
}

TEST(ChainComplex, CircleHomology)
{
  // two vertices, two edges, both edges from v0 to v1
  auto s = space({{-1, 0}, {0, 2}, {1, 2}});
  LinearMap d(s, s, -1);
  d.columns[1] = {vec({-1, 1}), vec({-1, 1})};
  ChainComplex c(s, d);
  EXPECT_EQ(homology_dim(c, 0), 1u);
  EXPECT_EQ(homology_dim(c, 1), 1u);
  HomologyGroup h1(c, 1);
  EXPECT_EQ(h1.dim(), 1u);
  EXPECT_FALSE(h1.is_boundary(vec({1, -1})));
}

TEST(ChainComplex, RejectsNonzeroSquare)
{
  auto s = space({{0, 1}, {1, 1}, {2, 1}});
  LinearMap d(s, s, -1);
  d.columns[1] = {vec({1})};
  d.columns[2] = {vec({1})};
  EXPECT_THROW(ChainComplex(s, d), std::logic_error);
}

TEST(HomologyGroup, BoundaryPreimage)
{
  auto s = space({{0, 2}, {1, 1}});
  LinearMap d(s, s, -1);
  d.columns[1] = {vec({1, -1})};
  ChainComplex c(s, d);
  HomologyGroup h(c, 0, true);
  SparseVec y;
  ASSERT_TRUE(h.solve_boundary(vec({3, -3}), y));
  EXPECT_EQ(y, vec({3}));
  EXPECT_EQ(h.dim(), 1u);
}

TEST(Bicomplex, TotalComplexSquaresToZeroAndKeepsEulerCharacteristic)
{
  // two columns k -> k with verticals +1 and -1; horizontal identity
  auto s = space({{0, 1}, {1, 1}});
  LinearMap v(s, s, -1), w(s, s, -1);
  v.columns[1] = {vec({1})};
  w.columns[1] = {vec({-1})};
  Bicomplex b;
  b.columns = {ChainComplex(s, v), ChainComplex(s, w)};
  LinearMap h(s, s, 0);
  h.columns[0] = {vec({1})};
  h.columns[1] = {vec({1})};
  b.horizontal = {h};
  b.validate();
  ChainComplex t = totalize(b, 3);
  long chi = 0;
  for (int n = 0; n <= 2; ++n) chi += (n % 2 ? -1 : 1) * static_cast<long>(homology_dim(t, n));
  EXPECT_EQ(chi, 0);
  for (int n = 0; n <= 2; ++n) EXPECT_EQ(homology_dim(t, n), 0u);
}

TEST(ExactSequence, ShortExactSequence)
{
  auto a = space({{0, 1}}), b = space({{0, 2}}), c = space({{0, 1}});
  LinearMap f(a, b, 0), g(b, c, 0);
  f.columns[0] = {vec({1, 1})};
  g.columns[0] = {vec({1}), vec({-1})};
  auto rep = verify_exact_sequence({f, g});
  ASSERT_FALSE(rep.empty());
  for (const auto& j : rep) {
    EXPECT_TRUE(j.exact);
    EXPECT_TRUE(j.composite_zero);
  }
  // break exactness
  g.columns[0] = {vec({1}), vec({1})};
  bool any_bad = false;
  for (const auto& j : verify_exact_sequence({f, g})) any_bad = any_bad || !j.exact;
  EXPECT_TRUE(any_bad);
}
