#pragma once

#include "hodge/cyclic.hpp"

#include <string>
#include <vector>

namespace hodge {

// Chevalley-Eilenberg chains C(a; Sym^p(a)) of an ordinary Lie algebra, with
// the de Rham differential Sym^p (x) L^k -> Sym^(p-1) (x) L^(k+1) between them.
class KasselModel {
 public:
  explicit KasselModel(const LieAlgebraSpec& a);
  explicit KasselModel(LieAlgebraSpec&&) = delete;  // keeps a pointer

  const LieAlgebraSpec& lie() const { return *a_; }
  // Basis of Sym^p (x) L^k: sorted multisets paired with sorted subsets.
  struct Basis {
    std::vector<std::pair<std::vector<int>, std::vector<int>>> elements;
    std::map<std::pair<std::vector<int>, std::vector<int>>, int> index;
  };
  const Basis& basis(int p, int k) const;

  // Degrees -1..dim a; throws std::logic_error if delta^2 != 0.
  ChainComplex ce_with_coefficients(int p) const;
  // Degree +1 map from C(a; Sym^p) to C(a; Sym^(p-1)); zero for p = 0.
  LinearMap derham_map(int p) const;

  struct MixedReport {
    bool delta_squared = true, d_squared = true, anticommute = true;
    bool ok() const { return delta_squared && d_squared && anticommute; }
  };
  MixedReport check_mixed(int p) const;
  // Exactness of the de Rham rows Sym^(w-k) (x) L^k in total weight w >= 1.
  bool row_exact(int weight) const;

  // H_n(a; Sym^p a) for n = 0..max_degree.
  std::vector<std::size_t> hh_via_coefficients(int p, int max_degree) const;
  // H_(n+1) of ker(d) inside C(a; Sym^(p-1) a), n = 0..max_degree.
  std::vector<std::size_t> hc_via_kernel(int p, int max_degree) const;

 private:
  SparseVec delta(int p, int k, int j) const;   // image of basis element j of degree k
  SparseVec derham(int p, int k, int j) const;  // into Sym^(p-1) (x) L^(k+1)
  std::vector<SparseVec> delta_columns(int p, int k) const;
  std::vector<SparseVec> derham_columns(int p, int k) const;

  const LieAlgebraSpec* a_;
  mutable std::map<std::pair<int, int>, Basis> bases_;
};

struct RouteRow {
  std::string kind;  // "HH" or "HC"
  int p = 0;
  int degree = 0;
  std::size_t cyclic = 0;  // from the Hodge bicomplexes
  std::size_t kassel = 0;  // from the mixed complex
  bool safe = false;
  bool equal() const { return cyclic == kassel; }
};

struct RouteReport {
  std::vector<RouteRow> rows;
  // All truncation-safe rows agree and at least one was compared.
  bool all_equal() const;
};

// Compares both routes for p = 1..max_p over the given truncation.
RouteReport cross_validate(const LieAlgebraSpec& a, int max_p, const Truncation& t);

}  // namespace hodge
