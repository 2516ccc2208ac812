#pragma once

#include "hodge/cyclic.hpp"

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace hodge {

// Symmetric pairing of degree n on C. Index -1 stands for the counit/unit 1.
struct CyclicPairing {
  int degree = 0;
  std::map<std::pair<int, int>, Q> values;
  std::set<std::string> flags;  // "symplectic", "poincare-duality", "unimodular-check"

  Q get(int a, int b) const;
  void set(int a, int b, const Q& v);
  bool has_flag(const std::string& f) const { return flags.count(f) > 0; }
};

// Graded symmetry, degree, cyclicity against the full coproduct,
// compatibility with d, and the flag-specific checks. Throws
// std::invalid_argument naming the axiom and the offending basis pair.
void validate_pairing(const CoalgebraSpec& C, const CyclicPairing& P);

// The pairing <1, top> = 1 on the CE coalgebra of an n-dimensional Lie
// algebra concentrated in degree 0 (requires max_weight >= n).
CyclicPairing top_exterior_pairing(const LieAlgebraSpec& a, const CoalgebraSpec& C);

// Bracket data induced on R = Omega(C) by a cyclic pairing.
class PoissonStructure {
 public:
  PoissonStructure(const CobarAlgebra& R, const CoalgebraSpec& C, CyclicPairing P);

  const CobarAlgebra& algebra() const { return *R_; }
  const CyclicPairing& pairing() const { return P_; }
  int pairing_degree() const { return P_.degree; }
  int bracket_degree() const { return P_.degree + 2; }
  // <x, y> on letters, carrying the sign of the shift.
  Q letter_pairing(int x, int y) const;
  bool trivial() const { return letter_pairs_.empty(); }

  TensorPair double_bracket(const Word& u, const Word& w) const;
  TensorElement bracket(const TensorElement& x, const TensorElement& y) const;  // mu o {{-,-}}
  NecklaceElement necklace_bracket(const NecklaceElement& a, const NecklaceElement& b) const;
  // Action of r on q dv, through Omega^1 R_nat = R (x) V.
  OneForm bracket_on_forms(const TensorElement& r, const OneForm& w) const;

 private:
  const CobarAlgebra* R_;
  CyclicPairing P_;
  std::map<std::pair<int, int>, Q> letter_pairs_;
};

// Hodge components of chains.
std::map<int, TensorElement> hodge_profile(const HodgeProjector& H, const TensorElement& x);
std::map<int, OneForm> hodge_profile(const HodgeProjector& H, const OneForm& x);
std::map<int, NecklaceElement> hodge_profile(const NecklaceHodge& N, const NecklaceElement& x);

// Chain-level inclusions over all basis pairs of the Hodge columns.
struct InclusionFailure {
  int q = 0, p = 0;
  std::string left, right;
  std::set<int> profile;
};
struct InclusionReport {
  std::size_t pairs_checked = 0;
  std::vector<InclusionFailure> failures;  // capped at 20 entries
  std::size_t failure_count = 0;
};
// Allowed output weights for {R^(q), R^(p)}: q=1 -> {p-1}, q=2 -> {p},
// otherwise [0, p+q-2].
std::set<int> allowed_weights(int q, int p);
InclusionReport check_bracket_inclusions(const PoissonStructure& P, const HodgeColumns& H, int max_input_weight,
                                         int max_output_weight);
InclusionReport check_form_inclusions(const PoissonStructure& P, const HodgeColumns& H, int max_input_weight,
                                      int max_output_weight);

// Antisymmetry, Jacobi and chain-map gates on basis necklaces.
struct GateReport {
  std::size_t basis_size = 0;
  std::size_t antisymmetry_checked = 0, antisymmetry_failed = 0;
  std::size_t jacobi_checked = 0, jacobi_failed = 0;
  std::size_t chain_checked = 0, chain_failed = 0;
  std::size_t welldefined_checked = 0, welldefined_failed = 0;
  bool ok() const { return antisymmetry_failed + jacobi_failed + chain_failed + welldefined_failed == 0; }
};
// Pairs up to max_weight; Jacobi triples with total weight <= max_weight + 2.
GateReport necklace_gates(const PoissonStructure& P, int max_weight);

// Brackets of homology classes of the Hodge pieces R^(p)_nat.
class ClassBracket {
 public:
  // Graded inputs use one complex per weight; filtered inputs one window [1, W].
  ClassBracket(const PoissonStructure& P, const NecklaceHodge& N, int max_weight, int max_degree);

  struct ClassRef {
    int p = 0;
    int degree = 0;
    int weight = 0;  // window label: weight for graded inputs, W otherwise
    std::size_t index = 0;
  };
  // Class basis of HC^(p)_n, one entry per class (and per window).
  std::vector<ClassRef> classes(int p, int degree) const;
  NecklaceElement representative(const ClassRef& c) const;

  struct Result {
    bool computed = false;        // false when the output leaves the truncation
    std::string reason;
    NecklaceElement value;
    std::map<int, NecklaceElement> components;
    std::map<int, SparseVec> classes;  // nonzero classes by Hodge weight
    int degree = 0;
    int weight = 0;
    bool consistent = false;  // components sum to value, each a cycle
  };
  Result bracket(const ClassRef& a, const ClassRef& b) const;
  // Class of an arbitrary cycle in R^(r)_nat (degree, window as in ClassRef).
  std::optional<SparseVec> class_of(int r, int degree, int window, const NecklaceElement& z) const;
  std::size_t dim(int p, int degree) const;
  int max_weight() const { return W_; }
  int max_degree() const { return D_; }
  bool graded() const { return graded_; }

 private:
  struct Piece {
    std::shared_ptr<const NecklaceHodge::Complex> complex;
    std::map<int, HomologyGroup> groups;
  };
  const Piece& piece(int r, int window) const;
  const HomologyGroup& group(int r, int window, int degree) const;

  const PoissonStructure* P_;
  const NecklaceHodge* N_;
  int W_, D_;
  bool graded_;
  mutable std::map<std::pair<int, int>, Piece> pieces_;
};

// Bracket table over class bases of HC^(p) x HC^(q).
struct ProfileRow {
  int p = 0, q = 0;
  std::size_t pairs = 0, computed = 0, nonzero = 0;
  std::size_t off_target = 0;  // nonzero classes outside weight p+q-2
  std::size_t outside_filtration = 0;  // classes beyond the proven bounds
  bool consistent = true;
  std::set<int> weights_seen;
  std::string verdict;  // "graded", "filtered", "zero", "incomplete"
};
std::vector<ProfileRow> filtration_table(const ClassBracket& B, int max_p, int max_q);

}  // namespace hodge
