#include "hodge/linear.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace hodge {

std::string to_string(const Q& q) { return q.get_str(); }

Q parse_rational(const std::string& s)
{
  auto ok = [](const std::string& t, bool allow_sign) {
    std::size_t i = 0;
    if (allow_sign && i < t.size() && (t[i] == '-' || t[i] == '+')) ++i;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!ok(num, true) || !ok(den, false)) throw std::invalid_argument("bad rational literal '" + s + "'");
  if (num[0] == '+') num = num.substr(1);
  mpz_class n(num), d(den);
  if (d == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
  Q q(n, d);
  q.canonicalize();
  return q;
}

void axpy(SparseVec& y, const Q& a, const SparseVec& x)
{
  if (sgn(a) == 0 || x.empty()) return;
  SparseVec out;
  out.reserve(y.size() + x.size());
  std::size_t i = 0, j = 0;
  while (i < y.size() || j < x.size()) {
    if (j == x.size() || (i < y.size() && y[i].first < x[j].first)) {
      out.push_back(std::move(y[i++]));
    } else if (i == y.size() || x[j].first < y[i].first) {
      out.emplace_back(x[j].first, a * x[j].second);
      ++j;
    } else {
      Q v = y[i].second + a * x[j].second;
      if (sgn(v) != 0) out.emplace_back(y[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  y = std::move(out);
}

SparseVec scaled(const SparseVec& x, const Q& a)
{
  SparseVec out;
  if (sgn(a) == 0) return out;
  out.reserve(x.size());
  for (const auto& [i, v] : x) out.emplace_back(i, a * v);
  return out;
}

SparseVec unit_vector(int i) { return SparseVec{{i, Q(1)}}; }

SparseVec sparse_from_map(const std::map<int, Q>& m)
{
  SparseVec out;
  for (const auto& [i, v] : m)
    if (sgn(v) != 0) out.emplace_back(i, v);
  return out;
}

Q entry(const SparseVec& x, int i)
{
  auto it = std::lower_bound(x.begin(), x.end(), i, [](const auto& e, int k) { return e.first < k; });
  if (it != x.end() && it->first == i) return it->second;
  return Q(0);
}

void Echelon::reduce(SparseVec& v, SparseVec* acc) const
{
  while (!v.empty()) {
    auto it = pivot_.find(v.front().first);
    if (it == pivot_.end()) return;
    Q c = v.front().second;
    axpy(v, -c, rows_[it->second]);
    if (acc) axpy(*acc, c, tags_[it->second]);
  }
}

bool Echelon::insert(SparseVec v, SparseVec tag)
{
  SparseVec acc;
  reduce(v, &acc);
  if (v.empty()) return false;
  axpy(tag, Q(-1), acc);
  Q inv = 1 / v.front().second;
  v = scaled(v, inv);
  tag = scaled(tag, inv);
  pivot_[v.front().first] = rows_.size();
  rows_.push_back(std::move(v));
  tags_.push_back(std::move(tag));
  return true;
}

bool Echelon::contains(SparseVec v) const
{
  reduce(v);
  return v.empty();
}

KernelImage kernel_image(const std::vector<SparseVec>& columns)
{
  KernelImage out;
  for (std::size_t j = 0; j < columns.size(); ++j) {
    SparseVec v = columns[j];
    SparseVec acc;
    out.image.reduce(v, &acc);
    SparseVec tag = unit_vector(static_cast<int>(j));
    axpy(tag, Q(-1), acc);
    if (v.empty())
      out.kernel.push_back(std::move(tag));
    else
      out.image.insert(std::move(v), std::move(tag));  // leading index is new, no further reduction
  }
  return out;
}

std::size_t rank_of(const std::vector<SparseVec>& columns)
{
  Echelon e;
  for (const auto& c : columns) e.insert(c);
  return e.rank();
}

std::size_t GradedSpace::dim(int degree) const
{
  auto it = blocks.find(degree);
  return it == blocks.end() ? 0 : it->second.size();
}

std::size_t GradedSpace::total_dim() const
{
  std::size_t n = 0;
  for (const auto& [d, b] : blocks) n += b.size();
  return n;
}

void GradedSpace::add(int degree, std::string label) { blocks[degree].push_back(std::move(label)); }

void GradedSpace::check_unique_labels() const
{
  for (const auto& [d, b] : blocks) {
    std::set<std::string> seen(b.begin(), b.end());
    if (seen.size() != b.size()) throw std::logic_error("duplicate basis label in degree " + std::to_string(d));
  }
}

LinearMap::LinearMap(SpacePtr src, SpacePtr tgt, int degree_shift)
    : source(std::move(src)), target(std::move(tgt)), shift(degree_shift)
{
  for (const auto& [d, b] : source->blocks) columns[d].assign(b.size(), SparseVec{});
}

const std::vector<SparseVec>& LinearMap::block(int degree) const
{
  static const std::vector<SparseVec> empty;
  auto it = columns.find(degree);
  return it == columns.end() ? empty : it->second;
}

SparseVec LinearMap::apply(int degree, const SparseVec& x) const
{
  SparseVec out;
  const auto& cols = block(degree);
  for (const auto& [i, v] : x) {
    if (i < 0 || static_cast<std::size_t>(i) >= cols.size()) throw std::out_of_range("LinearMap::apply index");
    axpy(out, v, cols[i]);
  }
  return out;
}

void LinearMap::validate() const
{
  for (const auto& [d, cols] : columns) {
    if (cols.size() != source->dim(d)) throw std::logic_error("column count mismatch in degree " + std::to_string(d));
    std::size_t rows = target->dim(d + shift);
    for (const auto& c : cols)
      for (const auto& [i, v] : c)
        if (i < 0 || static_cast<std::size_t>(i) >= rows)
          throw std::logic_error("entry outside target block in degree " + std::to_string(d));
  }
}

LinearMap zero_map(SpacePtr src, SpacePtr tgt, int shift) { return LinearMap(std::move(src), std::move(tgt), shift); }

LinearMap compose(const LinearMap& g, const LinearMap& f)
{
  LinearMap h(f.source, g.target, f.shift + g.shift);
  for (const auto& [d, cols] : f.columns) {
    auto& out = h.columns[d];
    for (std::size_t j = 0; j < cols.size(); ++j) out[j] = g.apply(d + f.shift, cols[j]);
  }
  return h;
}

bool is_zero(const LinearMap& f)
{
  for (const auto& [d, cols] : f.columns)
    for (const auto& c : cols)
      if (!c.empty()) return false;
  return true;
}

ChainComplex::ChainComplex(SpacePtr space, LinearMap d) : space_(std::move(space)), d_(std::move(d))
{
  if (d_.shift != -1) throw std::logic_error("differential must have degree -1");
  d_.validate();
  for (const auto& [deg, cols] : d_.columns)
    for (std::size_t j = 0; j < cols.size(); ++j)
      if (!d_.apply(deg - 1, cols[j]).empty())
        throw std::logic_error("d^2 != 0 at degree " + std::to_string(deg) + ", basis element " + space_->blocks.at(deg)[j]);
}

std::size_t homology_dim(const ChainComplex& c, int degree)
{
  std::size_t n = c.dim(degree);
  if (n == 0) return 0;
  std::size_t r_out = rank_of(c.d().block(degree));
  std::size_t r_in = rank_of(c.d().block(degree + 1));
  return n - r_out - r_in;
}

HomologyResult homology(const ChainComplex& c, int degree)
{
  HomologyGroup h(c, degree);
  return {h.dim(), h.representatives()};
}

HomologyGroup::HomologyGroup(const ChainComplex& c, int degree, bool keep_preimages)
    : degree_(degree), preimages_(keep_preimages)
{
  const auto& in = c.d().block(degree + 1);
  for (std::size_t j = 0; j < in.size(); ++j) {
    if (keep_preimages)
      boundaries_.insert(in[j], unit_vector(static_cast<int>(j)));
    else
      boundaries_.insert(in[j]);
  }
  if (c.dim(degree) == 0) return;
  auto ki = kernel_image(c.d().block(degree));
  for (const auto& row : boundaries_.rows()) cycles_.insert(row);
  for (auto& z : ki.kernel) {
    int k = static_cast<int>(reps_.size());
    if (cycles_.insert(z, unit_vector(k))) reps_.push_back(z);
  }
}

SparseVec HomologyGroup::class_of(const SparseVec& z) const
{
  SparseVec v = z, acc;
  cycles_.reduce(v, &acc);
  if (!v.empty()) throw std::logic_error("class_of: vector is not a cycle");
  return acc;
}

bool HomologyGroup::is_boundary(const SparseVec& z) const { return boundaries_.contains(z); }

bool HomologyGroup::solve_boundary(const SparseVec& z, SparseVec& y) const
{
  if (!preimages_) throw std::logic_error("solve_boundary needs keep_preimages");
  SparseVec v = z, acc;
  boundaries_.reduce(v, &acc);
  if (!v.empty()) return false;
  y = std::move(acc);
  return true;
}

void Bicomplex::validate() const
{
  if (horizontal.size() + 1 != columns.size() && !(columns.empty() && horizontal.empty()))
    throw std::logic_error("bicomplex needs one horizontal map between consecutive columns");
  for (std::size_t i = 0; i < horizontal.size(); ++i) {
    const auto& h = horizontal[i];
    if (h.shift != 0) throw std::logic_error("horizontal maps preserve internal degree");
    h.validate();
    // h d + d h = 0 as maps column i+1 -> column i
    LinearMap a = compose(h, columns[i + 1].d());
    LinearMap b = compose(columns[i].d(), h);
    for (const auto& [d, cols] : a.columns) {
      const auto& other = b.block(d);
      for (std::size_t j = 0; j < cols.size(); ++j) {
        SparseVec s = cols[j];
        axpy(s, Q(1), other[j]);
        if (!s.empty())
          throw std::logic_error("horizontal map " + std::to_string(i) + " does not anticommute with verticals");
      }
    }
    if (i + 1 < horizontal.size() && !is_zero(compose(h, horizontal[i + 1])))
      throw std::logic_error("consecutive horizontal maps do not compose to zero");
  }
}

ChainComplex totalize(const Bicomplex& b, int max_total_degree)
{
  auto tot = std::make_shared<GradedSpace>();
  // offset[i][n] = position of column i's block inside total degree n
  std::vector<std::map<int, int>> offset(b.columns.size());
  int lo = 0;
  bool any = false;
  for (std::size_t i = 0; i < b.columns.size(); ++i)
    for (const auto& [d, blk] : b.columns[i].space().blocks) {
      if (blk.empty()) continue;
      int t = d + static_cast<int>(i);
      if (!any || t < lo) lo = t;
      any = true;
    }
  if (!any) return ChainComplex(tot, LinearMap(tot, tot, -1));
  for (int n = lo; n <= max_total_degree; ++n) {
    auto& blk = tot->blocks[n];
    for (std::size_t i = 0; i < b.columns.size(); ++i) {
      int d = n - static_cast<int>(i);
      offset[i][n] = static_cast<int>(blk.size());
      const auto& sp = b.columns[i].space();
      auto it = sp.blocks.find(d);
      if (it == sp.blocks.end()) continue;
      for (const auto& l : it->second) blk.push_back("c" + std::to_string(i) + ":" + l);
    }
  }
  LinearMap d(tot, tot, -1);
  for (int n = lo; n <= max_total_degree; ++n) {
    auto& cols = d.columns[n];
    for (std::size_t i = 0; i < b.columns.size(); ++i) {
      int deg = n - static_cast<int>(i);
      const auto& vcols = b.columns[i].d().block(deg);
      for (std::size_t j = 0; j < vcols.size(); ++j) {
        SparseVec col;
        if (n - 1 >= lo) {
          for (const auto& [r, v] : vcols[j]) col.emplace_back(r + offset[i][n - 1], v);
          if (i > 0) {
            Q sign = (i % 2 == 0) ? Q(1) : Q(-1);
            SparseVec h;
            for (const auto& [r, v] : b.horizontal[i - 1].block(deg)[j]) h.emplace_back(r + offset[i - 1][n - 1], v);
            axpy(col, sign, h);
          }
          std::sort(col.begin(), col.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
        }
        cols[offset[i][n] + j] = std::move(col);
      }
    }
  }
  return ChainComplex(tot, std::move(d));
}

std::vector<JunctionReport> verify_exact_sequence(const std::vector<LinearMap>& maps)
{
  for (std::size_t k = 0; k + 1 < maps.size(); ++k) {
    const auto& a = *maps[k].target;
    const auto& b = *maps[k + 1].source;
    if (maps[k].target != maps[k + 1].source && a.blocks != b.blocks)
      throw std::invalid_argument("maps " + std::to_string(k) + " and " + std::to_string(k + 1) + " are not composable");
  }
  std::vector<JunctionReport> out;
  for (std::size_t k = 0; k + 1 < maps.size(); ++k) {
    const auto& f = maps[k];
    const auto& g = maps[k + 1];
    for (const auto& [deg, blk] : f.target->blocks) {
      JunctionReport r;
      r.junction = k + 1;
      r.degree = deg;
      const auto& gcols = g.block(deg);
      std::size_t ker = blk.size() - rank_of(gcols);
      std::size_t img = rank_of(f.block(deg - f.shift));
      for (const auto& c : f.block(deg - f.shift))
        if (!g.apply(deg, c).empty()) r.composite_zero = false;
      r.defect = static_cast<long>(ker) - static_cast<long>(img);
      r.exact = r.composite_zero && r.defect == 0;
      out.push_back(r);
    }
  }
  return out;
}

}  // namespace hodge
