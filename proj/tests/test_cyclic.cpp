#include "common.hpp"

#include <gtest/gtest.h>

using namespace hodge;
using testing_support::fixture;

namespace {

std::vector<std::size_t> dims(const std::vector<HomologyRow>& rows)
{
  std::vector<std::size_t> out;
  for (const auto& r : rows) out.push_back(r.dim);
  return out;
}

}  // namespace

TEST(Necklace, CanonicalRotationAndVanishing)
{
  Alphabet A({{"a", 1, 1}, {"b", 0, 1}});
  Word c;
  int s = 0;
  ASSERT_TRUE(canonical_necklace(A, {1, 0}, c, s));
  EXPECT_EQ(c, (Word{0, 1}));
  EXPECT_EQ(s, 1);
  // rotating (a, a) by one step swaps two odd letters
  EXPECT_FALSE(canonical_necklace(A, {0, 0}, c, s));
  EXPECT_FALSE(canonical_necklace(A, {}, c, s));
  NecklaceElement x = natural_projection(A, TensorElement::word({1, 0}) - TensorElement::word({0, 1}));
  EXPECT_TRUE(x.is_zero());
}

TEST(Necklace, ParseAndFormatRoundTrip)
{
  auto f = fixture("necklace2");
  const Alphabet& A = f->algebra.alphabet;
  NecklaceElement x = parse_necklace(A, "[v,v,w] - 2[w]");
  EXPECT_EQ(parse_necklace(A, format(A, x)), x);
  EXPECT_EQ(parse_necklace(A, "[w,v,v]"), parse_necklace(A, "[v,v,w]"));
}

TEST(Hodge, PolynomialRingOneVariable)
{
  auto f = fixture("abelian1");
  Truncation t{6, 3};
  for (int p = 1; p <= 3; ++p) {
    EXPECT_EQ(dims(hochschild_hodge(*f->columns, p, t)), (std::vector<std::size_t>{1, 1, 0, 0})) << p;
    EXPECT_EQ(dims(cyclic_hodge(*f->columns, p, t)), (std::vector<std::size_t>{1, 0, 0, 0})) << p;
  }
}

TEST(Hodge, AbelianTwoMatchesDifferentialForms)
{
  // HC^(p)_m = Omega^{m,(p)} / d Omega^{m-1,(p+1)} on k[x,y]: p+1, p, 0
  auto f = fixture("abelian2");
  Truncation t{6, 3};
  for (int p = 1; p <= 3; ++p) {
    auto hc = cyclic_hodge(*f->columns, p, t);
    EXPECT_EQ(hc[0].dim, static_cast<std::size_t>(p + 1));
    EXPECT_EQ(hc[1].dim, static_cast<std::size_t>(2 * (p + 1) - (p + 2)));
    EXPECT_EQ(hc[2].dim, 0u);
    EXPECT_TRUE(hc[2].safe);
    // HH^(p) = Sym^p (x) Lambda^m
    auto hh = hochschild_hodge(*f->columns, p, t);
    EXPECT_EQ(hh[0].dim, static_cast<std::size_t>(p + 1));
    EXPECT_EQ(hh[1].dim, static_cast<std::size_t>(2 * (p + 1)));
    EXPECT_EQ(hh[2].dim, static_cast<std::size_t>(p + 1));
  }
}

TEST(Hodge, Sl2FirstPiece)
{
  auto f = fixture("sl2", 5);
  Truncation t{5, 3};
  auto hh = hochschild_hodge(*f->columns, 1, t);
  for (const auto& r : hh) EXPECT_EQ(r.dim, 0u) << r.degree;  // H(sl2; sl2) vanishes in low degrees
  auto hc = cyclic_hodge(*f->columns, 1, t);
  EXPECT_EQ(dims(hc), (std::vector<std::size_t>{0, 0, 1, 0}));  // H_3(sl2; k) shifted
}

TEST(Hodge, TruncationSafety)
{
  auto f = fixture("sl2", 4);
  EXPECT_TRUE(truncation_safe(f->algebra, 1, 2, {4, 3}));
  EXPECT_FALSE(truncation_safe(f->algebra, 3, 3, {4, 3}));
  auto g = fixture("necklace2");
  EXPECT_FALSE(truncation_safe(g->algebra, 1, 0, {6, 3}));  // not a CE input
}

TEST(Connes, SequenceExactOnFixtures)
{
  for (const char* name : {"abelian1", "abelian2", "sl2"}) {
    int W = std::string(name) == "sl2" ? 5 : 6;
    auto f = fixture(name, W);
    for (int p = 0; p <= 2; ++p) {
      LesReport L = connes_les(*f->columns, p, {W, 3});
      EXPECT_FALSE(L.junctions.empty()) << name << " " << p;
      EXPECT_TRUE(L.all_exact) << name << " " << p;
      if (p == 0) {
        ASSERT_TRUE(L.b_is_identity.has_value());
        EXPECT_TRUE(*L.b_is_identity) << name;
      }
    }
  }
}

TEST(NecklaceHodge, ComponentsSumToElement)
{
  auto f = fixture("necklace2");
  const Alphabet& A = f->algebra.alphabet;
  NecklaceElement x = parse_necklace(A, "[v,v,w,w] + 3[v,w,v,w] - [v,v,v,w]");
  NecklaceElement sum;
  for (const auto& c : f->necklaces->decompose(x))
    for (const auto& [w, a] : c.terms) sum.add(w, a);
  EXPECT_EQ(sum, x);
}
