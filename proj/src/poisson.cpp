#include "hodge/poisson.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace hodge {

namespace {

int parity_sign(long e) { return (e % 2 == 0) ? 1 : -1; }

int c_degree(const CoalgebraSpec& C, int i) { return i < 0 ? 0 : C.degrees[i]; }

std::string c_label(const CoalgebraSpec& C, int i) { return i < 0 ? std::string("1") : C.labels[i]; }

// Full coproduct on C with the unit at -1.
std::map<std::pair<int, int>, Q> full_coproduct(const CoalgebraSpec& C, int v)
{
  std::map<std::pair<int, int>, Q> out;
  if (v < 0) {
    out[{-1, -1}] = 1;
    return out;
  }
  out[{v, -1}] += 1;
  out[{-1, v}] += 1;
  for (const auto& [ab, c] : C.coproduct[v]) out[ab] += c;
  return out;
}

}  // namespace

Q CyclicPairing::get(int a, int b) const
{
  auto it = values.find({a, b});
  return it == values.end() ? Q(0) : it->second;
}

void CyclicPairing::set(int a, int b, const Q& v)
{
  if (sgn(v) == 0)
    values.erase({a, b});
  else
    values[{a, b}] = v;
}

void validate_pairing(const CoalgebraSpec& C, const CyclicPairing& P)
{
  const int n = static_cast<int>(C.dim());
  auto name = [&](int a, int b) { return "(" + c_label(C, a) + ", " + c_label(C, b) + ")"; };
  for (const auto& [ab, v] : P.values) {
    auto [a, b] = ab;
    if (a < -1 || a >= n || b < -1 || b >= n) throw std::invalid_argument("pairing: index out of range");
    if (sgn(v) == 0) continue;
    if (c_degree(C, a) + c_degree(C, b) + P.degree != 0)
      throw std::invalid_argument("pairing degree: <" + c_label(C, a) + ", " + c_label(C, b) + "> is nonzero but degrees do not sum to " +
                                  std::to_string(-P.degree));
  }
  for (int a = -1; a < n; ++a)
    for (int b = -1; b < n; ++b) {
      Q lhs = P.get(a, b);
      Q rhs = P.get(b, a) * parity_sign(static_cast<long>(c_degree(C, a)) * c_degree(C, b));
      if (lhs != rhs) throw std::invalid_argument("pairing symmetry fails on " + name(a, b));
    }
  // <v', w> v'' = <v, w''> w'
  for (int v = -1; v < n; ++v)
    for (int w = -1; w < n; ++w) {
      std::map<int, Q> lhs, rhs;
      for (const auto& [ab, c] : full_coproduct(C, v)) lhs[ab.second] += c * P.get(ab.first, w);
      for (const auto& [ab, c] : full_coproduct(C, w)) rhs[ab.first] += c * P.get(v, ab.second);
      for (auto* m : {&lhs, &rhs})
        for (auto it = m->begin(); it != m->end();) it = (sgn(it->second) == 0) ? m->erase(it) : std::next(it);
      if (lhs != rhs) throw std::invalid_argument("pairing cyclicity fails on " + name(v, w));
    }
  // <du, v> + (-1)^{|u|+n} <u, dv> = 0
  auto dC = [&](int u) {
    Combination out;
    if (u >= 0) out = C.differential[u];
    return out;
  };
  for (int u = -1; u < n; ++u)
    for (int v = -1; v < n; ++v) {
      Q s = 0;
      for (const auto& [t, c] : dC(u)) s += c * P.get(t, v);
      Q s2 = 0;
      for (const auto& [t, c] : dC(v)) s2 += c * P.get(u, t);
      s += s2 * parity_sign(c_degree(C, u) + P.degree);
      if (sgn(s) != 0) throw std::invalid_argument("pairing is not compatible with the differential on " + name(u, v));
    }
  auto rank_on = [&](int lo) {
    std::vector<SparseVec> cols;
    for (int a = lo; a < n; ++a) {
      std::map<int, Q> m;
      for (int b = lo; b < n; ++b)
        if (sgn(P.get(a, b)) != 0) m[b + 1] = P.get(a, b);
      cols.push_back(sparse_from_map(m));
    }
    return rank_of(cols);
  };
  if (P.has_flag("poincare-duality") && rank_on(-1) != static_cast<std::size_t>(n + 1))
    throw std::invalid_argument("poincare-duality flag set but the pairing on C is degenerate");
  if (P.has_flag("symplectic") && rank_on(0) != static_cast<std::size_t>(n))
    throw std::invalid_argument("symplectic flag set but the pairing on Cbar is degenerate");
}

CyclicPairing top_exterior_pairing(const LieAlgebraSpec& a, const CoalgebraSpec& C)
{
  if (!a.ordinary()) throw std::invalid_argument("top exterior pairing needs an ordinary Lie algebra");
  const int d = static_cast<int>(a.dim());
  auto mons = ce_monomials(a, d);
  if (mons.size() != C.dim()) throw std::invalid_argument("top exterior pairing: coalgebra truncated below the top degree");
  CyclicPairing P;
  P.degree = -d;
  for (std::size_t s = 0; s < mons.size(); ++s) {
    if (static_cast<int>(mons[s].size()) == d) {
      P.set(-1, static_cast<int>(s), 1);
      P.set(static_cast<int>(s), -1, 1);
    }
    for (std::size_t t = 0; t < mons.size(); ++t) {
      const auto& S = mons[s];
      const auto& T = mons[t];
      if (static_cast<int>(S.size() + T.size()) != d) continue;
      std::vector<int> seq = S;
      seq.insert(seq.end(), T.begin(), T.end());
      std::vector<int> sorted = seq;
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) continue;
      int inv = 0;
      for (std::size_t i = 0; i < seq.size(); ++i)
        for (std::size_t j = i + 1; j < seq.size(); ++j)
          if (seq[i] > seq[j]) ++inv;
      P.set(static_cast<int>(s), static_cast<int>(t), parity_sign(inv));
    }
  }
  return P;
}

PoissonStructure::PoissonStructure(const CobarAlgebra& R, const CoalgebraSpec& C, CyclicPairing P)
    : R_(&R), P_(std::move(P))
{
  if (R.alphabet.size() != C.dim()) throw std::invalid_argument("pairing: cobar algebra does not match the coalgebra");
  validate_pairing(C, P_);
  for (const auto& [ab, v] : P_.values) {
    auto [a, b] = ab;
    if (a < 0 || b < 0 || sgn(v) == 0) continue;
    letter_pairs_[{a, b}] = v * parity_sign(R.alphabet[a].degree);
  }
}

Q PoissonStructure::letter_pairing(int x, int y) const
{
  auto it = letter_pairs_.find({x, y});
  return it == letter_pairs_.end() ? Q(0) : it->second;
}

TensorPair PoissonStructure::double_bracket(const Word& u, const Word& w) const
{
  TensorPair out;
  const int n = static_cast<int>(u.size()), m = static_cast<int>(w.size());
  if (n == 0 || m == 0) return out;
  const Alphabet& A = R_->alphabet;
  const int N = bracket_degree();
  std::vector<int> degs;
  for (int x : u) degs.push_back(A[x].degree);
  for (int x : w) degs.push_back(A[x].degree);
  int du = 0;
  for (int t = 0; t < n; ++t) du += degs[t];
  int head = 0;  // |v_1..v_i|
  for (int i = 0; i < n; ++i) {
    head += degs[i];
    // rotate v_i to the end of u, then pass the operator of degree |u|+N across w_<j
    const int rot = parity_sign(static_cast<long>(head) * (du - head));
    int wl = 0;
    for (int j = 0; j < m; wl += degs[n + j], ++j) {
      Q c = letter_pairing(u[i], w[j]);
      if (sgn(c) == 0) continue;
      int s = rot * parity_sign(static_cast<long>(du + N) * wl);
      Word left(w.begin(), w.begin() + j), right(u.begin(), u.begin() + i);
      left.insert(left.end(), u.begin() + i + 1, u.end());
      right.insert(right.end(), w.begin() + j + 1, w.end());
      out.add(left, right, c * s);
    }
  }
  return out;
}

TensorElement PoissonStructure::bracket(const TensorElement& x, const TensorElement& y) const
{
  TensorElement out;
  for (const auto& [u, a] : x.terms)
    for (const auto& [w, b] : y.terms)
      for (const auto& [lr, c] : double_bracket(u, w).terms) {
        Word z = lr.first;
        z.insert(z.end(), lr.second.begin(), lr.second.end());
        out.add(z, a * b * c);
      }
  return out;
}

NecklaceElement PoissonStructure::necklace_bracket(const NecklaceElement& a, const NecklaceElement& b) const
{
  return natural_projection(R_->alphabet, bracket(lift(a), lift(b)));
}

OneForm PoissonStructure::bracket_on_forms(const TensorElement& r, const OneForm& w) const
{
  const Alphabet& A = R_->alphabet;
  const int n = P_.degree;
  TensorPair t;
  for (const auto& [ru, rc] : r.terms) {
    TensorElement rw = TensorElement::word(ru, rc);
    for (const auto& [k, c] : w.terms) {
      const auto& [q, v] = k;
      TensorElement rq = bracket(rw, TensorElement::word(q));
      for (const auto& [a, e] : rq.terms) {
        Word av = a;
        av.push_back(v);
        t.add(av, {}, c * e);
        t.add(a, {v}, -c * e);
      }
      int s = parity_sign(static_cast<long>(A.degree(ru) + n) * A.degree(q));
      TensorElement rv = bracket(rw, TensorElement::word({v}));
      for (const auto& [b, e] : rv.terms) {
        Word qb = q;
        qb.insert(qb.end(), b.begin(), b.end());
        t.add(qb, {}, c * e * s);
        t.add(q, b, -c * e * s);
      }
    }
  }
  return omega_to_forms(A, t);
}

std::map<int, TensorElement> hodge_profile(const HodgeProjector& H, const TensorElement& x)
{
  std::map<int, TensorElement> out;
  auto comps = H.decompose(x);
  for (std::size_t p = 0; p < comps.size(); ++p)
    if (!comps[p].is_zero()) out[static_cast<int>(p)] = std::move(comps[p]);
  return out;
}

std::map<int, OneForm> hodge_profile(const HodgeProjector& H, const OneForm& x)
{
  std::map<int, OneForm> out;
  for (const auto& [k, c] : x.terms) {
    const auto& comps = H.cached(k.first);
    for (std::size_t p = 0; p < comps.size(); ++p)
      for (const auto& [w, e] : comps[p].terms) out[static_cast<int>(p)].add(w, k.second, c * e);
  }
  for (auto it = out.begin(); it != out.end();) it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

std::map<int, NecklaceElement> hodge_profile(const NecklaceHodge& N, const NecklaceElement& x)
{
  std::map<int, NecklaceElement> out;
  auto comps = N.decompose(x);
  for (std::size_t p = 0; p < comps.size(); ++p)
    if (!comps[p].is_zero()) out[static_cast<int>(p)] = std::move(comps[p]);
  return out;
}

std::set<int> allowed_weights(int q, int p)
{
  if (q == 1) return {p - 1};
  if (q == 2) return {p};
  std::set<int> s;
  for (int r = 0; r <= p + q - 2; ++r) s.insert(r);
  return s;
}

namespace {

struct BasisEntry {
  int q;
  int weight;
  const TensorElement* element;
  std::string label;
};

std::vector<BasisEntry> hodge_basis(const HodgeColumns& H, int max_weight)
{
  const Alphabet& A = H.algebra().alphabet;
  int maxdeg = 0;
  for (const auto& l : A.letters()) maxdeg = std::max(maxdeg, l.degree);
  std::vector<BasisEntry> out;
  for (int w = 1; w <= max_weight; ++w)
    for (int d = 0; d <= w * maxdeg; ++d)
      for (int q = 1; q <= w; ++q) {
        const WordBlock& b = H.block(q, w, d);
        for (std::size_t i = 0; i < b.size(); ++i)
          out.push_back({q, w, &b.basis[i], "R" + std::to_string(q) + "[" + A.format(b.pivots[i]) + "]"});
      }
  return out;
}

int min_letter_weight(const Alphabet& A)
{
  int m = 1 << 20;
  for (const auto& l : A.letters()) m = std::min(m, l.weight);
  return m;
}

class CachedBracket {
 public:
  explicit CachedBracket(const PoissonStructure& P) : P_(&P) {}
  const TensorElement& words(const Word& u, const Word& w)
  {
    auto key = std::make_pair(u, w);
    auto it = cache_.find(key);
    if (it == cache_.end()) it = cache_.emplace(key, P_->bracket(TensorElement::word(u), TensorElement::word(w))).first;
    return it->second;
  }
  TensorElement operator()(const TensorElement& x, const TensorElement& y)
  {
    TensorElement out;
    for (const auto& [u, a] : x.terms)
      for (const auto& [w, b] : y.terms) out.add(words(u, w), a * b);
    return out;
  }

 private:
  const PoissonStructure* P_;
  std::map<std::pair<Word, Word>, TensorElement> cache_;
};

void record(InclusionReport& rep, int q, int p, const std::string& l, const std::string& r, const std::set<int>& prof)
{
  ++rep.failure_count;
  if (rep.failures.size() < 20) rep.failures.push_back({q, p, l, r, prof});
}

}  // namespace

InclusionReport check_bracket_inclusions(const PoissonStructure& P, const HodgeColumns& H, int max_input_weight,
                                         int max_output_weight)
{
  const Alphabet& A = P.algebra().alphabet;
  auto basis = hodge_basis(H, max_input_weight);
  const int drop = 2 * min_letter_weight(A);
  CachedBracket br(P);
  InclusionReport rep;
  for (const auto& x : basis)
    for (const auto& y : basis) {
      if (x.weight + y.weight - drop > max_output_weight) continue;
      TensorElement z = br(*x.element, *y.element);
      ++rep.pairs_checked;
      if (z.is_zero()) continue;
      for (const auto& [w, c] : z.terms)
        if (A.weight(w) > max_output_weight) throw std::logic_error("bracket output exceeds the weight bound");
      auto prof = hodge_profile(H.projector(), z);
      std::set<int> seen;
      for (const auto& [r, e] : prof) seen.insert(r);
      auto allowed = allowed_weights(x.q, y.q);
      for (int r : seen)
        if (!allowed.count(r)) {
          record(rep, x.q, y.q, x.label, y.label, seen);
          break;
        }
    }
  return rep;
}

InclusionReport check_form_inclusions(const PoissonStructure& P, const HodgeColumns& H, int max_input_weight,
                                      int max_output_weight)
{
  const Alphabet& A = P.algebra().alphabet;
  auto basis = hodge_basis(H, max_input_weight);
  static const TensorElement unit = TensorElement::unit();
  std::vector<BasisEntry> right = basis;
  right.push_back({0, 0, &unit, "R0[1]"});
  const int drop = 2 * min_letter_weight(A);
  InclusionReport rep;
  for (const auto& r : basis)
    for (const auto& q : right)
      for (std::size_t v = 0; v < A.size(); ++v) {
        int lw = A[static_cast<int>(v)].weight;
        if (r.weight + q.weight + lw - drop > max_output_weight) continue;
        OneForm f;
        for (const auto& [w, c] : q.element->terms) f.add(w, static_cast<int>(v), c);
        OneForm z = P.bracket_on_forms(*r.element, f);
        ++rep.pairs_checked;
        if (z.is_zero()) continue;
        auto prof = hodge_profile(H.projector(), z);
        std::set<int> seen;
        for (const auto& [k, e] : prof) seen.insert(k);
        auto allowed = allowed_weights(r.q, q.q);
        for (int k : seen)
          if (!allowed.count(k)) {
            record(rep, r.q, q.q, r.label, q.label + "d" + A[static_cast<int>(v)].id, seen);
            break;
          }
      }
  return rep;
}

GateReport necklace_gates(const PoissonStructure& P, int max_weight)
{
  const CobarAlgebra& R = P.algebra();
  const Alphabet& A = R.alphabet;
  const int N = P.bracket_degree();
  int maxdeg = 0;
  for (const auto& l : A.letters()) maxdeg = std::max(maxdeg, l.degree);
  std::vector<Word> basis;
  for (int w = 1; w <= max_weight; ++w)
    for (int d = 0; d <= w * maxdeg; ++d)
      for (auto& x : necklace_words(A, w, d)) basis.push_back(std::move(x));
  GateReport rep;
  rep.basis_size = basis.size();
  bool has_d = false;
  for (const auto& x : R.dletter)
    if (!x.is_zero()) has_d = true;
  auto nk = [](const Word& w) {
    NecklaceElement e;
    e.add(w, 1);
    return e;
  };
  auto nd = [&](const NecklaceElement& x) { return natural_projection(A, R.d(lift(x))); };
  auto scaled_n = [](const NecklaceElement& x, const Q& c) {
    NecklaceElement out;
    for (const auto& [w, v] : x.terms) out.add(w, v * c);
    return out;
  };
  auto plus = [](NecklaceElement a, const NecklaceElement& b) {
    for (const auto& [w, v] : b.terms) a.add(w, v);
    return a;
  };
  std::map<std::pair<Word, Word>, NecklaceElement> cache;
  auto br = [&](const Word& a, const Word& b) -> const NecklaceElement& {
    auto key = std::make_pair(a, b);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, P.necklace_bracket(nk(a), nk(b))).first;
    return it->second;
  };
  auto br_elem = [&](const NecklaceElement& x, const NecklaceElement& y) {
    NecklaceElement out;
    for (const auto& [a, c] : x.terms)
      for (const auto& [b, e] : y.terms)
        for (const auto& [w, v] : br(a, b).terms) out.add(w, v * c * e);
    return out;
  };
  for (const auto& a : basis)
    for (const auto& b : basis) {
      int da = A.degree(a), db = A.degree(b);
      ++rep.antisymmetry_checked;
      NecklaceElement ab = br(a, b);
      NecklaceElement ba = scaled_n(br(b, a), Q(-parity_sign(static_cast<long>(da + N) * (db + N))));
      if (ab != ba) ++rep.antisymmetry_failed;
      if (has_d) {
        ++rep.chain_checked;
        NecklaceElement lhs = nd(ab);
        NecklaceElement rhs = plus(br_elem(nd(nk(a)), nk(b)), scaled_n(br_elem(nk(a), nd(nk(b))), Q(parity_sign(da + N))));
        if (lhs != rhs) ++rep.chain_failed;
      }
    }
  // representatives: every signed rotation of a basis word gives the same bracket
  for (const auto& a : basis) {
    Word cur = a;
    int total = A.degree(a);
    int s = 1;
    for (std::size_t r = 1; r < a.size(); ++r) {
      int f = A[cur[0]].degree;
      s *= parity_sign(static_cast<long>(f) * (total - f));
      std::rotate(cur.begin(), cur.begin() + 1, cur.end());
      for (const auto& b : basis) {
        if (A.weight(b) + A.weight(a) > max_weight + 2) continue;
        ++rep.welldefined_checked;
        NecklaceElement lhs = natural_projection(A, P.bracket(TensorElement::word(cur), TensorElement::word(b)));
        if (lhs != scaled_n(br(a, b), Q(s))) ++rep.welldefined_failed;
      }
    }
  }
  std::vector<Word> small;
  for (const auto& a : basis)
    if (A.weight(a) <= std::max(2, max_weight - 1)) small.push_back(a);
  for (const auto& a : small)
    for (const auto& b : small)
      for (const auto& c : small) {
        if (A.weight(a) + A.weight(b) + A.weight(c) > max_weight + 2) continue;
        ++rep.jacobi_checked;
        int da = A.degree(a), db = A.degree(b);
        NecklaceElement lhs = br_elem(nk(a), br(b, c));
        NecklaceElement rhs = plus(br_elem(br(a, b), nk(c)),
                                   scaled_n(br_elem(nk(b), br(a, c)), Q(parity_sign(static_cast<long>(da + N) * (db + N)))));
        if (lhs != rhs) ++rep.jacobi_failed;
      }
  return rep;
}

ClassBracket::ClassBracket(const PoissonStructure& P, const NecklaceHodge& N, int max_weight, int max_degree)
    : P_(&P), N_(&N), W_(max_weight), D_(max_degree), graded_(P.algebra().weight_graded)
{
}

const ClassBracket::Piece& ClassBracket::piece(int r, int window) const
{
  auto key = std::make_pair(r, window);
  auto it = pieces_.find(key);
  if (it == pieces_.end()) {
    WeightWindow win = graded_ ? WeightWindow{window, window} : WeightWindow{1, W_};
    Piece pc;
    pc.complex = N_->complex(r, win, 0, D_ + 1);
    it = pieces_.emplace(key, std::move(pc)).first;
  }
  return it->second;
}

const HomologyGroup& ClassBracket::group(int r, int window, int degree) const
{
  const Piece& pc = piece(r, window);
  auto& groups = const_cast<Piece&>(pc).groups;
  auto it = groups.find(degree);
  if (it == groups.end()) it = groups.emplace(degree, HomologyGroup(pc.complex->chain, degree)).first;
  return it->second;
}

std::vector<ClassBracket::ClassRef> ClassBracket::classes(int p, int degree) const
{
  std::vector<ClassRef> out;
  if (degree < 0 || degree > D_ || p < 1) return out;
  std::vector<int> windows;
  if (graded_)
    for (int w = 1; w <= W_; ++w) windows.push_back(w);
  else
    windows.push_back(W_);
  for (int w : windows) {
    const auto& g = group(p, w, degree);
    for (std::size_t i = 0; i < g.dim(); ++i) out.push_back({p, degree, w, i});
  }
  return out;
}

std::size_t ClassBracket::dim(int p, int degree) const { return classes(p, degree).size(); }

NecklaceElement ClassBracket::representative(const ClassRef& c) const
{
  const auto& g = group(c.p, c.weight, c.degree);
  return piece(c.p, c.weight).complex->element(c.degree, g.representatives().at(c.index));
}

std::optional<SparseVec> ClassBracket::class_of(int r, int degree, int window, const NecklaceElement& z) const
{
  if (degree < 0 || degree > D_ || r < 1) return std::nullopt;
  try {
    SparseVec v = piece(r, window).complex->coordinates(degree, z);
    return group(r, window, degree).class_of(v);
  } catch (const std::logic_error&) {
    return std::nullopt;
  }
}

ClassBracket::Result ClassBracket::bracket(const ClassRef& a, const ClassRef& b) const
{
  const Alphabet& A = P_->algebra().alphabet;
  Result res;
  res.degree = a.degree + b.degree + P_->bracket_degree();
  res.value = P_->necklace_bracket(representative(a), representative(b));
  if (res.value.is_zero()) {
    res.computed = true;
    res.consistent = true;
    return res;
  }
  std::set<int> weights;
  for (const auto& [w, c] : res.value.terms) weights.insert(A.weight(w));
  if (*weights.rbegin() > W_) {
    res.reason = "output weight exceeds the truncation";
    return res;
  }
  if (graded_ && weights.size() != 1) throw std::logic_error("bracket of homogeneous classes is not homogeneous");
  res.weight = graded_ ? *weights.begin() : W_;
  if (res.degree < 0 || res.degree > D_) {
    res.reason = "output degree outside the truncation";
    return res;
  }
  res.components = hodge_profile(*N_, res.value);
  NecklaceElement sum;
  res.consistent = true;
  for (const auto& [r, comp] : res.components) {
    for (const auto& [w, c] : comp.terms) sum.add(w, c);
    auto cls = class_of(r, res.degree, res.weight, comp);
    if (!cls) {
      res.consistent = false;
      continue;
    }
    if (!cls->empty()) res.classes[r] = *cls;
  }
  if (sum != res.value) res.consistent = false;
  res.computed = true;
  return res;
}

std::vector<ProfileRow> filtration_table(const ClassBracket& B, int max_p, int max_q)
{
  std::vector<ProfileRow> rows;
  const int N = B.max_degree() >= 0 ? 0 : 0;
  (void)N;
  for (int p = 1; p <= max_p; ++p)
    for (int q = p; q <= max_q; ++q) {
      ProfileRow row;
      row.p = p;
      row.q = q;
      std::set<int> allowed;
      if (p == 1) allowed = {q - 1};
      else if (p == 2) allowed = {q};
      else allowed = allowed_weights(p, q);
      for (int n1 = 0; n1 <= B.max_degree(); ++n1)
        for (int n2 = 0; n2 <= B.max_degree(); ++n2) {
          auto ca = B.classes(p, n1);
          auto cb = B.classes(q, n2);
          for (const auto& a : ca)
            for (const auto& b : cb) {
              if (B.graded() && a.weight + b.weight - 2 > B.max_weight()) continue;
              ++row.pairs;
              auto res = B.bracket(a, b);
              if (!res.computed) continue;
              ++row.computed;
              if (!res.consistent) row.consistent = false;
              if (res.classes.empty()) continue;
              ++row.nonzero;
              bool off = false, outside = false;
              for (const auto& [r, v] : res.classes) {
                row.weights_seen.insert(r);
                if (r != p + q - 2) off = true;
                if (!allowed.count(r)) outside = true;
              }
              if (off) ++row.off_target;
              if (outside) ++row.outside_filtration;
            }
        }
      if (row.computed == 0 && row.pairs > 0)
        row.verdict = "incomplete";
      else if (row.nonzero == 0)
        row.verdict = "zero";
      else if (row.off_target == 0)
        row.verdict = "graded";
      else
        row.verdict = "filtered";
      rows.push_back(std::move(row));
    }
  return rows;
}

}  // namespace hodge
