#include "common.hpp"
#include "forms_oracle.hpp"

#include <gtest/gtest.h>

using namespace hodge;
using testing_support::fixture;

TEST(NecklaceBracket, CubesOfTheTwoLetters)
{
  auto f = fixture("necklace2");
  const Alphabet& A = f->algebra.alphabet;
  NecklaceElement v3 = parse_necklace(A, "[v,v,v]"), w3 = parse_necklace(A, "[w,w,w]");
  EXPECT_EQ(f->poisson->necklace_bracket(v3, w3), parse_necklace(A, "9[v,v,w,w]"));
  EXPECT_EQ(f->poisson->necklace_bracket(w3, v3), parse_necklace(A, "-9[v,v,w,w]"));
}

TEST(NecklaceBracket, ProfileLeavesTopWeight)
{
  auto f = fixture("necklace2");
  const Alphabet& A = f->algebra.alphabet;
  NecklaceElement b = f->poisson->necklace_bracket(parse_necklace(A, "[v,v,v]"), parse_necklace(A, "[w,w,w]"));
  auto prof = hodge_profile(*f->necklaces, b);
  bool below = false;
  NecklaceElement sum;
  for (const auto& [p, c] : prof) {
    EXPECT_LE(p, 4);
    if (p != 4 && !c.is_zero()) below = true;
    for (const auto& [w, a] : c.terms) sum.add(w, a);
  }
  EXPECT_TRUE(below);
  EXPECT_EQ(sum, b);
}

TEST(NecklaceBracket, GeneratorPairing)
{
  auto f = fixture("necklace2");
  const Alphabet& A = f->algebra.alphabet;
  // {v, w} is the pairing constant, which dies in the reduced quotient
  EXPECT_TRUE(f->poisson->necklace_bracket(parse_necklace(A, "[v]"), parse_necklace(A, "[w]")).is_zero());
  EXPECT_EQ(f->poisson->letter_pairing(0, 1), -f->poisson->letter_pairing(1, 0));
  EXPECT_EQ(f->poisson->bracket_degree(), 0);
}

TEST(Pairing, ValidationRejectsBadPairings)
{
  auto f = fixture("necklace2");
  CyclicPairing P = f->pairing.value();
  P.set(1, 0, 1);  // breaks graded symmetry
  EXPECT_THROW(validate_pairing(f->coalgebra, P), std::invalid_argument);
  CyclicPairing Q2 = f->pairing.value();
  Q2.degree = -1;
  EXPECT_THROW(validate_pairing(f->coalgebra, Q2), std::invalid_argument);
}

TEST(Filtration, AllowedWeights)
{
  EXPECT_EQ(allowed_weights(1, 3), (std::set<int>{2}));
  EXPECT_EQ(allowed_weights(2, 3), (std::set<int>{3}));
  EXPECT_EQ(allowed_weights(3, 3), (std::set<int>{0, 1, 2, 3, 4}));
}

TEST(Filtration, ChainInclusionsOnNecklace)
{
  auto f = fixture("necklace2");
  auto r = check_bracket_inclusions(*f->poisson, *f->columns, 4, 4);
  EXPECT_GT(r.pairs_checked, 0u);
  EXPECT_EQ(r.failure_count, 0u);
  auto s = check_form_inclusions(*f->poisson, *f->columns, 4, 4);
  EXPECT_GT(s.pairs_checked, 0u);
  EXPECT_EQ(s.failure_count, 0u);
}

TEST(Gates, AllPairingFixtures)
{
  for (const char* name : {"necklace2", "sl2-unimodular", "s2dual"}) {
    auto f = fixture(name);
    GateReport g = necklace_gates(*f->poisson, 4);
    EXPECT_TRUE(g.ok()) << name;
    EXPECT_GT(g.antisymmetry_checked, 0u) << name;
    EXPECT_GT(g.jacobi_checked, 0u) << name;
  }
  auto sl = fixture("sl2-unimodular");
  EXPECT_GT(necklace_gates(*sl->poisson, 4).chain_checked, 0u);
}

TEST(ClassBracket, BracketComponentsAreConsistent)
{
  auto f = fixture("necklace2");
  ClassBracket B(*f->poisson, *f->necklaces, 6, 0);
  auto rows = filtration_table(B, 3, 3);
  ASSERT_FALSE(rows.empty());
  for (const auto& r : rows) EXPECT_TRUE(r.consistent) << r.p << "," << r.q;
}

TEST(ClassBracket, SphereProbeCompletes)
{
  auto f = fixture("s2dual");
  ClassBracket B(*f->poisson, *f->necklaces, 6, 3);
  auto rows = filtration_table(B, 3, 3);
  EXPECT_EQ(rows.size(), 6u);
  for (const auto& r : rows) {
    EXPECT_TRUE(r.consistent);
    EXPECT_FALSE(r.verdict.empty());
  }
}

TEST(AbelianBracket, GradedAndMatchesDifferentialForms)
{
  auto f = fixture("abelian2");
  ClassBracket B(*f->poisson, *f->necklaces, 6, 1);
  std::size_t nonzero_cases = 0;
  for (int p = 1; p <= 3; ++p)
    for (int q = 1; q <= 3; ++q)
      for (int a = 0; a <= 1; ++a)
        for (int b = 0; b <= 1; ++b) {
          std::vector<SparseVec> images;
          for (const auto& x : B.classes(p, a))
            for (const auto& y : B.classes(q, b)) {
              auto res = B.bracket(x, y);
              if (a + b > 1) continue;
              ASSERT_TRUE(res.computed) << res.reason;
              EXPECT_TRUE(res.consistent);
              for (const auto& [r, v] : res.classes) {
                EXPECT_EQ(r, p + q - 2) << p << q << a << b;
                if (r == p + q - 2) images.push_back(v);
              }
            }
          if (a + b > 1) continue;
          std::size_t engine = rank_of(images), oracle = forms::image_rank(p, a, q, b);
          EXPECT_EQ(engine, oracle) << "p=" << p << " q=" << q << " degrees " << a << "," << b;
          if (oracle) ++nonzero_cases;
        }
  EXPECT_GT(nonzero_cases, 5u);
}
