#pragma once

#include "hodge/poisson.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace hodge {

// Sorted generator indices; odd generators occur at most once.
using Monomial = std::vector<int>;
using Poly = std::map<Monomial, Q>;

void add_to(Poly& p, const Monomial& m, const Q& c);
void add_to(Poly& p, const Poly& q, const Q& c = 1);

// Free graded-commutative algebra on finitely many generators.
class PolyRing {
 public:
  struct Generator {
    std::string label;
    int degree = 0;
    int weight = 1;
  };
  std::vector<Generator> generators;

  int add_generator(std::string label, int degree, int weight);
  int degree(const Monomial& m) const;
  int weight(const Monomial& m) const;
  int degree(const Poly& p) const;  // of the first term; -1000 for zero
  Poly variable(int g) const;
  // Product with the Koszul sign of sorting; zero if an odd generator repeats.
  Poly multiply(const Poly& a, const Poly& b) const;
  bool multiply_monomials(const Monomial& a, const Monomial& b, Monomial& out, int& sign) const;
  std::vector<Monomial> monomials(int degree, int weight) const;
  std::vector<Monomial> monomials_of_weight(int weight) const;  // any degree
  std::string format(const Poly& p) const;
};

// Symmetric p-linear form on g, stored on sorted index tuples.
struct InvariantPolynomial {
  int degree = 0;
  std::string name;
  std::map<std::vector<int>, Q> coeffs;

  Q value(std::vector<int> idx) const;
};

// tr(ad x ad y).
InvariantPolynomial killing_form(const LieAlgebraSpec& g);
// Identity form in the given basis (abelian g).
InvariantPolynomial identity_form(const LieAlgebraSpec& g);
// sum_k P(y_1, .., [x, y_k], .., y_p) = 0 for all basis x, y.
bool is_ad_invariant(const LieAlgebraSpec& g, const InvariantPolynomial& P);
// Built-in table: "killing" (semisimple g), "identity" (abelian g).
InvariantPolynomial builtin_form(const LieAlgebraSpec& g, const std::string& name);

// a_g = Sym(a (x) g*) / (rho([x,y]) - [rho x, rho y]).
struct RepPresentation {
  PolyRing ring;  // generator x(i) = x (x) xi^i, index x * dim g + i
  std::vector<Poly> relations;
};
RepPresentation rep_algebra(const LieAlgebraSpec& a, const LieAlgebraSpec& g);
// Dimension of the quotient in each polynomial degree 0..max_degree.
std::vector<std::size_t> quotient_dims(const RepPresentation& rep, int max_degree);

// g-valued polynomial: one coordinate per basis element of g.
using GVector = std::vector<Poly>;

// Sym(g* (x) V) with the differential induced by the cobar construction.
class DerivedRep {
 public:
  DerivedRep(const CobarAlgebra& R, const LieAlgebraSpec& g);

  const PolyRing& ring() const { return ring_; }
  const CobarAlgebra& algebra() const { return *R_; }
  const LieAlgebraSpec& lie() const { return *g_; }
  int generator(int letter, int i) const { return letter * static_cast<int>(g_->dim()) + i; }

  GVector bracket(const GVector& a, const GVector& b) const;
  // Universal representation on a homogeneous-length-by-length Lie element.
  GVector pi(const TensorElement& lie_element) const;
  Poly d(const Poly& p) const;
  // Throws std::logic_error naming the generator with d^2 != 0.
  void check_d_squared() const;
  // The block of fixed weight in degrees [lo - 1, hi].
  ChainComplex complex(int weight, int lo, int hi) const;
  // H_0 dimension in each weight 0..max_weight.
  std::vector<std::size_t> h0_dims(int max_weight) const;
  // Some y with d y = x, if x is a boundary.
  std::optional<Poly> solve_boundary(const Poly& x) const;

 private:
  GVector pi_left_normed(const Word& w) const;

  const CobarAlgebra* R_;
  const LieAlgebraSpec* g_;
  PolyRing ring_;
  std::vector<Poly> dgen_;
  mutable std::map<Word, GVector> pi_cache_;
};

// Poisson bracket on Sym(g* (x) V): {X_(l,i), X_(m,j)} = <l,m> (B^-1)_ij.
class RepPoisson {
 public:
  RepPoisson(const DerivedRep& D, const PoissonStructure& P, const InvariantPolynomial& form);
  Poly bracket(const Poly& a, const Poly& b) const;
  int bracket_degree() const { return N_; }
  const DerivedRep& rep() const { return *D_; }

 private:
  const DerivedRep* D_;
  int N_;
  std::map<std::pair<int, int>, Q> gen_pairs_;
};

struct PoissonAxiomReport {
  std::size_t checked = 0;
  std::size_t antisymmetry_failed = 0, leibniz_failed = 0, jacobi_failed = 0, derivation_failed = 0;
  std::size_t chain_failed = 0;  // Tr(dx) != d Tr(x); traces only
  bool ok() const { return antisymmetry_failed + leibniz_failed + jacobi_failed + derivation_failed + chain_failed == 0; }
};
// Axioms on generators and products of at most max_factors generators.
PoissonAxiomReport check_rep_poisson(const RepPoisson& B, int max_factors);
// Antisymmetry, d-derivation and Jacobi on traces of the symmetrized pairs of
// Lyndon basis elements of total weight <= max_weight, plus Tr(dx) = d Tr(x).
PoissonAxiomReport check_rep_poisson_on_traces(const RepPoisson& B, const HodgeProjector& H,
                                               const InvariantPolynomial& form, int max_weight);

// Tr_P(x) for x in Sym^p(L), p = P.degree. Throws std::invalid_argument
// when x is not in Sym^p(L).
Poly drinfeld_trace(const DerivedRep& D, const HodgeProjector& H, const InvariantPolynomial& P, const TensorElement& x);

struct TracePair {
  std::string alpha, beta;
  int degree = 0;
  Poly difference;           // Tr{a,b} - {Tr a, Tr b}
  bool exact = false;        // difference is zero
  bool boundary = false;     // difference = d(certificate)
  Poly certificate;
};
struct TraceReport {
  std::vector<TracePair> pairs;
  bool ok() const;
};
// All pairs of HC^(2) class representatives with weight <= max_weight.
TraceReport verify_trace_lie_hom(const PoissonStructure& P, const NecklaceHodge& N, const DerivedRep& D,
                                 const RepPoisson& B, const InvariantPolynomial& form, int max_weight, int max_degree);

}  // namespace hodge
