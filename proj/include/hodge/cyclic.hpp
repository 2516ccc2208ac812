#pragma once

#include "hodge/koszul.hpp"

#include <map>
#include <memory>
#include <optional>
#include <tuple>
#include <unordered_map>
#include <vector>

namespace hodge {

// Element of R_nat = R/(k+[R,R]) on canonical cyclic words.
class NecklaceElement {
 public:
  std::map<Word, Q> terms;
  void add(const Word& canonical, const Q& c);
  bool is_zero() const { return terms.empty(); }
  bool operator==(const NecklaceElement& o) const { return terms == o.terms; }
  bool operator!=(const NecklaceElement& o) const { return !(*this == o); }
};

// Minimal rotation of w with the Koszul sign of the rotation. Returns false
// when the class of w vanishes (empty word, or a rotation fixing w with sign -1).
bool canonical_necklace(const Alphabet& A, const Word& w, Word& canon, int& sign);
NecklaceElement natural_projection(const Alphabet& A, const TensorElement& x);
TensorElement lift(const NecklaceElement& x);
std::string format(const Alphabet& A, const NecklaceElement& x);
NecklaceElement parse_necklace(const Alphabet& A, const std::string& s);  // "[v,v,w] - 2[w]"

// All words of the given weight and degree, in lexicographic order.
std::vector<Word> words_of(const Alphabet& A, int weight, int degree);
std::vector<Word> words_up_to(const Alphabet& A, int max_weight);
std::vector<Word> necklace_words(const Alphabet& A, int weight, int degree);

// Element of R (x) V, standing for Omega^1 R_nat; (a, v) is the class of a dv.
class OneForm {
 public:
  std::map<std::pair<Word, int>, Q> terms;
  void add(const Word& a, int v, const Q& c);
  void add(const OneForm& x, const Q& c = 1);
  bool is_zero() const { return terms.empty(); }
  bool operator==(const OneForm& o) const { return terms == o.terms; }
};

OneForm cyclic_derham(const Alphabet& A, const TensorElement& x);  // throws on constants
TensorElement beta(const Alphabet& A, const OneForm& w);
// sum a (x) b with sum ab = 0, read as an element of Omega^1 R and pushed to R (x) V.
OneForm omega_to_forms(const Alphabet& A, const TensorPair& t);
OneForm forms_differential(const CobarAlgebra& R, const OneForm& w);
std::string format(const Alphabet& A, const OneForm& x);

// RREF basis of a subspace spanned by word combinations; coordinates of a
// member are read off at the pivot words.
struct WordBlock {
  std::vector<TensorElement> basis;
  std::vector<Word> pivots;
  std::unordered_map<Word, int, WordHash> pivot_index;

  std::size_t size() const { return basis.size(); }
  // Coordinates of y; returns false if y is not in the span.
  bool coordinates(const TensorElement& y, SparseVec& out, int offset = 0) const;
};

WordBlock rref_block(const std::vector<TensorElement>& spanning);

// Bases of R^(q) restricted to words of fixed weight and degree.
class HodgeColumns {
 public:
  explicit HodgeColumns(const CobarAlgebra& R);
  const CobarAlgebra& algebra() const { return *R_; }
  const HodgeProjector& projector() const { return H_; }
  const WordBlock& block(int q, int weight, int degree) const;
  int max_letter_weight() const;

 private:
  const CobarAlgebra* R_;
  HodgeProjector H_;
  mutable std::map<std::pair<int, int>, std::vector<WordBlock>> blocks_;  // (weight, degree) -> by q
};

// Weights retained in one bicomplex build: [lo, hi].
struct WeightWindow {
  int lo = 0;
  int hi = 0;
  bool contains(int w) const { return w >= lo && w <= hi; }
};

struct HodgeBicomplex {
  int p = 0;
  WeightWindow window;
  int max_degree = 0;
  Bicomplex realization;
  std::vector<int> column_q;  // Hodge index of each column
};

// columns = 2 gives X_2^{+,(p)}; more columns give X^{+,(p)}. Throws
// std::logic_error if a differential leaves its Hodge column.
HodgeBicomplex build_hodge_bicomplex(const HodgeColumns& H, int p, int columns, WeightWindow window, int max_degree);
// X_2^+ without Hodge splitting, on plain words.
Bicomplex build_plain_x2(const CobarAlgebra& R, WeightWindow window, int max_degree);

struct Truncation {
  int max_weight = 6;
  int max_degree = 3;
};

struct HomologyRow {
  int p = 0;
  int degree = 0;
  std::size_t dim = 0;
  bool safe = false;
  std::map<int, std::size_t> by_weight;  // filled for weight-graded inputs
};

// Whether a Hodge-p homology group of degree n is exactly determined.
bool truncation_safe(const CobarAlgebra& R, int p, int n, const Truncation& t);

std::vector<HomologyRow> hochschild_hodge(const HodgeColumns& H, int p, const Truncation& t);
std::vector<HomologyRow> cyclic_hodge(const HodgeColumns& H, int p, const Truncation& t);
std::vector<HomologyRow> hochschild_plain(const CobarAlgebra& R, const Truncation& t);

struct LesJunction {
  std::string position;  // "HH", "HC(p)", "HC(p+1)"
  int degree = 0;
  bool exact = false;
  long defect = 0;
};

struct LesReport {
  int p = 0;
  std::vector<LesJunction> junctions;  // truncation-safe only
  bool all_exact = true;
  // p = 0 only: B is bijective and I, S vanish in the safe range.
  std::optional<bool> b_is_identity;
  std::map<int, std::size_t> hh_dims, hc_dims, hc_next_dims;
};

LesReport connes_les(const HodgeColumns& H, int p, const Truncation& t);

// Hodge pieces of R_nat and their complexes.
class NecklaceHodge {
 public:
  explicit NecklaceHodge(const HodgeColumns& H);
  const HodgeColumns& columns() const { return *H_; }
  // Canonical-necklace RREF basis of the image of R^(p) in R_nat.
  const WordBlock& block(int p, int weight, int degree) const;
  NecklaceElement component(const NecklaceElement& x, int p) const;
  std::vector<NecklaceElement> decompose(const NecklaceElement& x) const;
  NecklaceElement d(const NecklaceElement& x) const;

  // R^(p)_nat over a weight window, built in degrees [lo_deg - 1, hi_deg];
  // homology is exact in degrees [lo_deg, hi_deg - 1].
  struct Complex {
    const Alphabet* alphabet = nullptr;
    ChainComplex chain;
    std::map<int, std::vector<std::pair<int, const WordBlock*>>> segments;  // degree -> (weight, block)
    SparseVec coordinates(int degree, const NecklaceElement& x) const;  // throws if outside
    NecklaceElement element(int degree, const SparseVec& v) const;
  };
  std::shared_ptr<const Complex> complex(int p, WeightWindow window, int lo_deg, int hi_deg) const;

 private:
  const HodgeColumns* H_;
  mutable std::map<std::tuple<int, int, int>, WordBlock> blocks_;
};

}  // namespace hodge
