#pragma once

#include "hodge/free.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace hodge {

using Combination = std::map<int, Q>;  // basis index -> coefficient

void add_to(Combination& c, int i, const Q& v);

// Graded Lie algebra with optional differential, on a finite basis.
struct LieAlgebraSpec {
  std::vector<std::string> labels;
  std::vector<int> degrees;
  std::map<std::pair<int, int>, Combination> bracket;  // completed by antisymmetry
  std::map<int, Combination> differential;

  std::size_t dim() const { return labels.size(); }
  int index_of(const std::string& label) const;
  Combination br(int i, int j) const;
  Combination br(const Combination& x, const Combination& y) const;
  Combination d(const Combination& x) const;
  // Fills in [y,x] from [x,y]; throws on conflicting entries.
  void complete_antisymmetry();
  // Degrees, antisymmetry, Jacobi, d^2 = 0, Leibniz. Throws with the
  // violated axiom and offending basis elements.
  void validate() const;
  bool ordinary() const;  // concentrated in degree 0 with zero differential
};

// Coaugmented coalgebra C = k.1 + Cbar, stored through Cbar and the reduced
// coproduct; the counit and the unit terms of the full coproduct are implicit.
struct CoalgebraSpec {
  std::vector<std::string> labels;
  std::vector<int> degrees;
  std::vector<int> weights;
  std::vector<std::map<std::pair<int, int>, Q>> coproduct;  // reduced
  std::vector<Combination> differential;
  bool cocommutative = true;
  // Set when C is the CE coalgebra of an ordinary Lie algebra; homology
  // truncation bounds rely on it.
  bool ce_of_ordinary = false;

  std::size_t dim() const { return labels.size(); }
  int index_of(const std::string& label) const;
  // Coassociativity, cocommutativity (if flagged), weights, coderivation,
  // d^2 = 0. Throws std::invalid_argument naming the axiom.
  void validate() const;
  bool weight_graded() const;  // d preserves weight (otherwise it lowers it)
};

// Sym^c(a[1]) truncated at max_weight, with the CE coderivation.
CoalgebraSpec ce_coalgebra(const LieAlgebraSpec& a, int max_weight);
// Basis monomials of ce_coalgebra, in the same order (sorted index lists).
std::vector<std::vector<int>> ce_monomials(const LieAlgebraSpec& a, int max_weight);

class CobarAlgebra {
 public:
  Alphabet alphabet;
  std::vector<TensorElement> dletter;
  bool weight_graded = true;
  bool certified = false;  // CE of an ordinary Lie algebra

  TensorElement d(const TensorElement& x) const;
  // Throws std::logic_error naming the first letter with d^2 != 0.
  void check_d_squared() const;
};

CobarAlgebra cobar(const CoalgebraSpec& C);

struct TensorPair {
  std::map<std::pair<Word, Word>, Q> terms;
  void add(const Word& a, const Word& b, const Q& c);
  bool operator==(const TensorPair& o) const { return terms == o.terms; }
};

TensorPair hopf_coproduct(const Alphabet& A, const TensorElement& x);
TensorElement adams_operation(const Alphabet& A, int n, const TensorElement& x);

struct AdamsReport {
  std::size_t words = 0;
  std::size_t eigen_failed = 0;    // psi^k on a weight-p PBW component != k^p times it, k = 2, 3
  std::size_t compose_failed = 0;  // psi^2 psi^3 != psi^6
  bool ok() const { return words > 0 && eigen_failed + compose_failed == 0; }
};
// Every word of length 1..max_length over A.
AdamsReport check_adams_law(const Alphabet& A, int max_length);

}  // namespace hodge
