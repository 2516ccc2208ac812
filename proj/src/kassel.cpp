#include "hodge/kassel.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace hodge {

namespace {

int sign_of(int e) { return (e % 2 == 0) ? 1 : -1; }

// x inserted in front of the sorted subset s, then sorted; 0 if x is in s.
int wedge_front(std::vector<int>& s, int x)
{
  auto it = std::lower_bound(s.begin(), s.end(), x);
  if (it != s.end() && *it == x) return 0;
  int before = static_cast<int>(it - s.begin());
  s.insert(it, x);
  return sign_of(before);
}

std::vector<std::vector<int>> multisets(int n, int size)
{
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int start) {
    if (static_cast<int>(cur.size()) == size) {
      out.push_back(cur);
      return;
    }
    for (int i = start; i < n; ++i) {
      cur.push_back(i);
      rec(i);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

std::vector<std::vector<int>> subsets(int n, int size)
{
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int start) {
    if (static_cast<int>(cur.size()) == size) {
      out.push_back(cur);
      return;
    }
    for (int i = start; i < n; ++i) {
      cur.push_back(i);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

std::string label_of(const LieAlgebraSpec& a, const std::vector<int>& m, const std::vector<int>& xi)
{
  std::string s;
  for (std::size_t i = 0; i < m.size(); ++i) s += (i ? "*" : "") + a.labels[m[i]];
  if (m.empty()) s = "1";
  s += "|";
  for (std::size_t i = 0; i < xi.size(); ++i) s += (i ? "^" : "") + a.labels[xi[i]];
  return s;
}

}  // namespace

KasselModel::KasselModel(const LieAlgebraSpec& a) : a_(&a)
{
  if (!a.ordinary()) throw std::invalid_argument("kassel route: ordinary Lie algebras only");
}

const KasselModel::Basis& KasselModel::basis(int p, int k) const
{
  auto it = bases_.find({p, k});
  if (it != bases_.end()) return it->second;
  Basis B;
  const int n = static_cast<int>(a_->dim());
  if (p >= 0 && k >= 0 && k <= n)
    for (const auto& m : multisets(n, p))
      for (const auto& xi : subsets(n, k)) {
        B.index[{m, xi}] = static_cast<int>(B.elements.size());
        B.elements.push_back({m, xi});
      }
  return bases_.emplace(std::make_pair(p, k), std::move(B)).first->second;
}

SparseVec KasselModel::delta(int p, int k, int j) const
{
  const auto& [m, xi] = basis(p, k).elements[j];
  const Basis& T = basis(p, k - 1);
  std::map<int, Q> out;
  auto put = [&](std::vector<int> mm, const std::vector<int>& ww, const Q& c) {
    std::sort(mm.begin(), mm.end());
    Q& e = out[T.index.at({mm, ww})];
    e += c;
  };
  for (int i = 0; i < k; ++i) {
    std::vector<int> rest = xi;
    rest.erase(rest.begin() + i);
    // (x_i . m) (x) rest, adjoint action as a derivation
    for (std::size_t t = 0; t < m.size(); ++t)
      for (const auto& [y, c] : a_->br(xi[i], m[t])) {
        std::vector<int> mm = m;
        mm[t] = y;
        put(mm, rest, c * sign_of(i));
      }
    for (int l = i + 1; l < k; ++l)
      for (const auto& [y, c] : a_->br(xi[i], xi[l])) {
        std::vector<int> r2 = xi;
        r2.erase(r2.begin() + l);
        r2.erase(r2.begin() + i);
        int s = wedge_front(r2, y);
        if (s != 0) put(m, r2, c * s * sign_of(i + l + 1));
      }
  }
  return sparse_from_map(out);
}

SparseVec KasselModel::derham(int p, int k, int j) const
{
  const auto& [m, xi] = basis(p, k).elements[j];
  const Basis& T = basis(p - 1, k + 1);
  std::map<int, Q> out;
  for (std::size_t t = 0; t < m.size(); ++t) {
    if (t > 0 && m[t] == m[t - 1]) continue;
    long mult = std::count(m.begin(), m.end(), m[t]);
    std::vector<int> mm = m, ww = xi;
    mm.erase(mm.begin() + t);
    int s = wedge_front(ww, m[t]);
    if (s != 0) out[T.index.at({mm, ww})] += Q(mult * s);
  }
  return sparse_from_map(out);
}

std::vector<SparseVec> KasselModel::delta_columns(int p, int k) const
{
  std::vector<SparseVec> cols;
  for (std::size_t j = 0; j < basis(p, k).elements.size(); ++j) cols.push_back(delta(p, k, static_cast<int>(j)));
  return cols;
}

std::vector<SparseVec> KasselModel::derham_columns(int p, int k) const
{
  std::vector<SparseVec> cols;
  for (std::size_t j = 0; j < basis(p, k).elements.size(); ++j) cols.push_back(derham(p, k, static_cast<int>(j)));
  return cols;
}

ChainComplex KasselModel::ce_with_coefficients(int p) const
{
  const int n = static_cast<int>(a_->dim());
  auto sp = std::make_shared<GradedSpace>();
  sp->blocks[-1];
  for (int k = 0; k <= n; ++k)
    for (const auto& [m, xi] : basis(p, k).elements) sp->add(k, label_of(*a_, m, xi));
  LinearMap d(sp, sp, -1);
  for (int k = 1; k <= n; ++k) d.columns[k] = delta_columns(p, k);
  return ChainComplex(sp, std::move(d));
}

LinearMap KasselModel::derham_map(int p) const
{
  const int n = static_cast<int>(a_->dim());
  auto src = std::make_shared<GradedSpace>(ce_with_coefficients(p).space());
  auto tgt = std::make_shared<GradedSpace>(p >= 1 ? ce_with_coefficients(p - 1).space() : GradedSpace{});
  if (p < 1)
    for (int k = -1; k <= n; ++k) tgt->blocks[k];
  LinearMap f(src, tgt, 1);
  if (p >= 1)
    for (int k = 0; k < n; ++k) f.columns[k] = derham_columns(p, k);
  f.validate();
  return f;
}

KasselModel::MixedReport KasselModel::check_mixed(int p) const
{
  MixedReport r;
  const int n = static_cast<int>(a_->dim());
  auto apply = [](const std::vector<SparseVec>& cols, const SparseVec& v) {
    SparseVec out;
    for (const auto& [i, c] : v) axpy(out, c, cols[i]);
    return out;
  };
  for (int k = 0; k <= n; ++k) {
    auto dk = delta_columns(p, k);
    if (k >= 2) {
      auto dk1 = delta_columns(p, k - 1);
      for (const auto& v : dk)
        if (!apply(dk1, v).empty()) r.delta_squared = false;
    }
    if (p >= 2 && k + 1 <= n) {
      auto e0 = derham_columns(p, k), e1 = derham_columns(p - 1, k + 1);
      for (const auto& v : e0)
        if (k + 2 <= n && !apply(e1, v).empty()) r.d_squared = false;
    }
    if (p >= 1 && k + 1 <= n) {
      // delta d + d delta = 0 on Sym^p (x) L^k
      auto e = derham_columns(p, k);
      auto dd = delta_columns(p - 1, k + 1);
      std::vector<SparseVec> ek1 = k >= 1 ? derham_columns(p, k - 1) : std::vector<SparseVec>{};
      for (std::size_t j = 0; j < e.size(); ++j) {
        SparseVec s = apply(dd, e[j]);
        if (k >= 1) axpy(s, 1, apply(ek1, dk[j]));
        if (!s.empty()) r.anticommute = false;
      }
    }
  }
  return r;
}

bool KasselModel::row_exact(int weight) const
{
  const int n = static_cast<int>(a_->dim());
  // Omega^k of weight w: Sym^(w-k) (x) L^k; d raises k.
  for (int k = 0; k <= std::min(n, weight); ++k) {
    std::size_t dim = basis(weight - k, k).elements.size();
    std::size_t out_rank = (k < n && weight - k >= 1) ? rank_of(derham_columns(weight - k, k)) : 0;
    std::size_t in_rank = (k >= 1) ? rank_of(derham_columns(weight - k + 1, k - 1)) : 0;
    if (dim != out_rank + in_rank) return false;
  }
  return true;
}

std::vector<std::size_t> KasselModel::hh_via_coefficients(int p, int max_degree) const
{
  ChainComplex c = ce_with_coefficients(p);
  std::vector<std::size_t> out;
  for (int k = 0; k <= max_degree; ++k) out.push_back(c.dim(k) ? homology_dim(c, k) : 0);
  return out;
}

std::vector<std::size_t> KasselModel::hc_via_kernel(int p, int max_degree) const
{
  if (p < 1) throw std::invalid_argument("hc_via_kernel: p >= 1");
  const int n = static_cast<int>(a_->dim());
  const int q = p - 1;
  // kernel of d: C(Sym^q)_k -> C(Sym^(q-1))_(k+1), as vectors in C(Sym^q)_k
  std::map<int, std::vector<SparseVec>> K;
  for (int k = 0; k <= n; ++k) {
    if (q == 0 || k == n)
      for (std::size_t j = 0; j < basis(q, k).elements.size(); ++j) K[k].push_back(unit_vector(static_cast<int>(j)));
    else
      K[k] = kernel_image(derham_columns(q, k)).kernel;
  }
  auto delta_rank = [&](int k) -> std::size_t {
    if (k < 1 || k > n || K[k].empty()) return 0;
    auto cols = delta_columns(q, k);
    std::vector<SparseVec> img;
    for (const auto& v : K[k]) {
      SparseVec s;
      for (const auto& [i, c] : v) axpy(s, c, cols[i]);
      img.push_back(std::move(s));
    }
    return rank_of(img);
  };
  std::vector<std::size_t> out;
  for (int m = 0; m <= max_degree; ++m) {
    int k = m + 1;
    std::size_t dk = (k <= n) ? K[k].size() : 0;
    out.push_back(dk - delta_rank(k) - delta_rank(k + 1));
  }
  return out;
}

bool RouteReport::all_equal() const
{
  std::size_t compared = 0;
  for (const auto& r : rows)
    if (r.safe) {
      ++compared;
      if (!r.equal()) return false;
    }
  return compared > 0;
}

RouteReport cross_validate(const LieAlgebraSpec& a, int max_p, const Truncation& t)
{
  KasselModel K(a);
  CoalgebraSpec C = ce_coalgebra(a, t.max_weight);
  CobarAlgebra R = cobar(C);
  HodgeColumns H(R);
  RouteReport rep;
  for (int p = 1; p <= max_p; ++p) {
    auto hh = hochschild_hodge(H, p, t);
    auto hc = cyclic_hodge(H, p, t);
    auto kh = K.hh_via_coefficients(p, t.max_degree);
    auto kc = K.hc_via_kernel(p, t.max_degree);
    for (int n = 0; n <= t.max_degree; ++n) {
      rep.rows.push_back({"HH", p, n, hh[n].dim, kh[n], hh[n].safe});
      rep.rows.push_back({"HC", p, n, hc[n].dim, kc[n], hc[n].safe});
    }
  }
  return rep;
}

}  // namespace hodge
