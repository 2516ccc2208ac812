#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <memory>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace hodge {

using Q = mpq_class;

std::string to_string(const Q& q);
// Accepts "a", "-a", "a/b". Throws std::invalid_argument otherwise.
Q parse_rational(const std::string& s);

// Sorted by index, no stored zeros.
using SparseVec = std::vector<std::pair<int, Q>>;

void axpy(SparseVec& y, const Q& a, const SparseVec& x);  // y += a*x
SparseVec scaled(const SparseVec& x, const Q& a);
SparseVec unit_vector(int i);
SparseVec sparse_from_map(const std::map<int, Q>& m);
Q entry(const SparseVec& x, int i);

// Row echelon form keyed by leading index. Each row carries a tag vector so
// that callers can track combinations (kernels, class coordinates, preimages).
class Echelon {
 public:
  // Leading-term reduction. Afterwards v_in = sum_i c_i row_i + v_out, and
  // *acc (if given) has been incremented by sum_i c_i tag_i. v_out is empty
  // iff v_in lies in the span.
  void reduce(SparseVec& v, SparseVec* acc = nullptr) const;
  // Inserts the reduced remainder of v; the stored tag is tag - acc, scaled
  // with the row. Returns false if v was dependent.
  bool insert(SparseVec v, SparseVec tag = {});
  bool contains(SparseVec v) const;
  std::size_t rank() const { return rows_.size(); }
  const std::vector<SparseVec>& rows() const { return rows_; }
  const std::vector<SparseVec>& tags() const { return tags_; }

 private:
  std::unordered_map<int, std::size_t> pivot_;
  std::vector<SparseVec> rows_;
  std::vector<SparseVec> tags_;
};

struct KernelImage {
  std::vector<SparseVec> kernel;  // in source coordinates
  Echelon image;                  // tags = source combinations
};
KernelImage kernel_image(const std::vector<SparseVec>& columns);
std::size_t rank_of(const std::vector<SparseVec>& columns);

struct GradedSpace {
  std::map<int, std::vector<std::string>> blocks;

  std::size_t dim(int degree) const;
  std::size_t total_dim() const;
  void add(int degree, std::string label);
  void check_unique_labels() const;
};

using SpacePtr = std::shared_ptr<const GradedSpace>;

struct LinearMap {
  SpacePtr source;
  SpacePtr target;
  int shift = 0;
  // Keyed by source degree; one column per source basis element, in target
  // coordinates of degree (source degree + shift).
  std::map<int, std::vector<SparseVec>> columns;

  LinearMap() = default;
  LinearMap(SpacePtr src, SpacePtr tgt, int degree_shift);

  SparseVec apply(int degree, const SparseVec& x) const;
  const std::vector<SparseVec>& block(int degree) const;
  void validate() const;  // column counts and index ranges
};

LinearMap zero_map(SpacePtr src, SpacePtr tgt, int shift);
LinearMap compose(const LinearMap& g, const LinearMap& f);  // g after f
bool is_zero(const LinearMap& f);

class ChainComplex {
 public:
  ChainComplex() = default;
  // Throws std::logic_error if d has the wrong shift or d*d != 0.
  ChainComplex(SpacePtr space, LinearMap d);

  const GradedSpace& space() const { return *space_; }
  SpacePtr space_ptr() const { return space_; }
  const LinearMap& d() const { return d_; }
  std::size_t dim(int degree) const { return space_->dim(degree); }

 private:
  SpacePtr space_ = std::make_shared<GradedSpace>();
  LinearMap d_;
};

struct HomologyResult {
  std::size_t dimension = 0;
  std::vector<SparseVec> representatives;
};

HomologyResult homology(const ChainComplex& c, int degree);
std::size_t homology_dim(const ChainComplex& c, int degree);

// Homology in one degree with the data needed to map cycles to classes.
class HomologyGroup {
 public:
  HomologyGroup() = default;
  HomologyGroup(const ChainComplex& c, int degree, bool keep_preimages = false);

  int degree() const { return degree_; }
  std::size_t dim() const { return reps_.size(); }
  const std::vector<SparseVec>& representatives() const { return reps_; }
  // Coordinates of the class of a cycle in the representative basis.
  // Throws std::logic_error if z is not a cycle.
  SparseVec class_of(const SparseVec& z) const;
  bool is_boundary(const SparseVec& z) const;
  // Some y with d y = z, when z is a boundary (requires keep_preimages).
  bool solve_boundary(const SparseVec& z, SparseVec& y) const;

 private:
  int degree_ = 0;
  Echelon boundaries_;
  Echelon cycles_;
  std::vector<SparseVec> reps_;
  bool preimages_ = false;
};

struct Bicomplex {
  std::vector<ChainComplex> columns;
  // horizontal[i] maps column i+1 to column i, preserving internal degree.
  std::vector<LinearMap> horizontal;

  // Checks h*h = 0 and h d_v + d_v h = 0.
  void validate() const;
};

// Column i contributes its degree n-i part to total degree n; the total
// differential on column i is vertical + (-1)^i horizontal.
ChainComplex totalize(const Bicomplex& b, int max_total_degree);

struct JunctionReport {
  std::size_t junction = 0;  // index of the middle space (1 = target of maps[0])
  int degree = 0;
  bool exact = false;
  long defect = 0;           // dim ker - rank of incoming image
  bool composite_zero = true;
};

// maps[k] : V_k -> V_{k+1}; checks exactness at V_1..V_{m-1}.
std::vector<JunctionReport> verify_exact_sequence(const std::vector<LinearMap>& maps);

}  // namespace hodge
