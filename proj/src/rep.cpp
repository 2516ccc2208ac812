#include "hodge/rep.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

namespace hodge {

namespace {

int parity_sign(long e) { return (e % 2 == 0) ? 1 : -1; }

// Dense inverse over Q; empty result if singular.
std::vector<std::vector<Q>> invert(std::vector<std::vector<Q>> m)
{
  const std::size_t n = m.size();
  std::vector<std::vector<Q>> inv(n, std::vector<Q>(n, Q(0)));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && sgn(m[piv][c]) == 0) ++piv;
    if (piv == n) return {};
    std::swap(m[piv], m[c]);
    std::swap(inv[piv], inv[c]);
    Q s = 1 / m[c][c];
    for (std::size_t j = 0; j < n; ++j) {
      m[c][j] *= s;
      inv[c][j] *= s;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || sgn(m[r][c]) == 0) continue;
      Q f = m[r][c];
      for (std::size_t j = 0; j < n; ++j) {
        m[r][j] -= f * m[c][j];
        inv[r][j] -= f * inv[c][j];
      }
    }
  }
  return inv;
}

Q coeff(const Combination& c, int k)
{
  auto it = c.find(k);
  return it == c.end() ? Q(0) : it->second;
}

}  // namespace

void add_to(Poly& p, const Monomial& m, const Q& c)
{
  if (sgn(c) == 0) return;
  auto [it, fresh] = p.emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (sgn(it->second) == 0) p.erase(it);
  }
}

void add_to(Poly& p, const Poly& q, const Q& c)
{
  for (const auto& [m, v] : q) add_to(p, m, v * c);
}

int PolyRing::add_generator(std::string label, int degree, int weight)
{
  if (weight < 1) throw std::invalid_argument("generator weight must be positive");
  generators.push_back({std::move(label), degree, weight});
  return static_cast<int>(generators.size()) - 1;
}

int PolyRing::degree(const Monomial& m) const
{
  int d = 0;
  for (int g : m) d += generators[g].degree;
  return d;
}

int PolyRing::weight(const Monomial& m) const
{
  int w = 0;
  for (int g : m) w += generators[g].weight;
  return w;
}

int PolyRing::degree(const Poly& p) const { return p.empty() ? -1000 : degree(p.begin()->first); }

Poly PolyRing::variable(int g) const
{
  Poly p;
  p[{g}] = 1;
  return p;
}

bool PolyRing::multiply_monomials(const Monomial& a, const Monomial& b, Monomial& out, int& sign) const
{
  out = a;
  out.insert(out.end(), b.begin(), b.end());
  sign = 1;
  // insertion sort counting odd transpositions
  for (std::size_t i = 1; i < out.size(); ++i)
    for (std::size_t j = i; j > 0 && out[j - 1] > out[j]; --j) {
      if (generators[out[j - 1]].degree % 2 != 0 && generators[out[j]].degree % 2 != 0) sign = -sign;
      std::swap(out[j - 1], out[j]);
    }
  for (std::size_t i = 1; i < out.size(); ++i)
    if (out[i] == out[i - 1] && generators[out[i]].degree % 2 != 0) return false;
  return true;
}

Poly PolyRing::multiply(const Poly& a, const Poly& b) const
{
  Poly out;
  Monomial m;
  int s = 0;
  for (const auto& [x, c] : a)
    for (const auto& [y, e] : b)
      if (multiply_monomials(x, y, m, s)) add_to(out, m, c * e * s);
  return out;
}

std::vector<Monomial> PolyRing::monomials_of_weight(int weight) const
{
  std::vector<Monomial> out;
  Monomial cur;
  std::function<void(int, int)> rec = [&](int start, int left) {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (int g = start; g < static_cast<int>(generators.size()); ++g) {
      const auto& G = generators[g];
      if (G.weight > left) continue;
      if (G.degree % 2 != 0 && !cur.empty() && cur.back() == g) continue;
      cur.push_back(g);
      rec(g, left - G.weight);
      cur.pop_back();
    }
  };
  rec(0, weight);
  return out;
}

std::vector<Monomial> PolyRing::monomials(int degree, int weight) const
{
  std::vector<Monomial> out;
  for (auto& m : monomials_of_weight(weight))
    if (this->degree(m) == degree) out.push_back(std::move(m));
  return out;
}

std::string PolyRing::format(const Poly& p) const
{
  if (p.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : p) {
    Q a = abs(c);
    os << (sgn(c) < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
    bool unit = (a == 1);
    if (!unit || m.empty()) os << to_string(a);
    for (std::size_t i = 0; i < m.size(); ++i) os << ((i == 0 && unit) ? "" : "*") << generators[m[i]].label;
    first = false;
  }
  return os.str();
}

Q InvariantPolynomial::value(std::vector<int> idx) const
{
  std::sort(idx.begin(), idx.end());
  auto it = coeffs.find(idx);
  return it == coeffs.end() ? Q(0) : it->second;
}

InvariantPolynomial killing_form(const LieAlgebraSpec& g)
{
  if (!g.ordinary()) throw std::invalid_argument("killing form: g must be an ordinary Lie algebra");
  const int n = static_cast<int>(g.dim());
  InvariantPolynomial P;
  P.degree = 2;
  P.name = "killing";
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      Q t = 0;
      for (int l = 0; l < n; ++l) {
        Combination adj = g.br(j, l);
        for (const auto& [k, c] : adj) t += c * coeff(g.br(i, k), l);
      }
      if (sgn(t) != 0) P.coeffs[{i, j}] = t;
    }
  return P;
}

InvariantPolynomial identity_form(const LieAlgebraSpec& g)
{
  InvariantPolynomial P;
  P.degree = 2;
  P.name = "identity";
  for (int i = 0; i < static_cast<int>(g.dim()); ++i) P.coeffs[{i, i}] = 1;
  return P;
}

bool is_ad_invariant(const LieAlgebraSpec& g, const InvariantPolynomial& P)
{
  const int n = static_cast<int>(g.dim());
  std::vector<int> y(P.degree, 0);
  std::function<bool(int)> rec = [&](int pos) -> bool {
    if (pos == P.degree) {
      for (int x = 0; x < n; ++x) {
        Q s = 0;
        for (int k = 0; k < P.degree; ++k)
          for (const auto& [m, c] : g.br(x, y[k])) {
            std::vector<int> z = y;
            z[k] = m;
            s += c * P.value(z);
          }
        if (sgn(s) != 0) return false;
      }
      return true;
    }
    for (int i = 0; i < n; ++i) {
      y[pos] = i;
      if (!rec(pos + 1)) return false;
    }
    return true;
  };
  return rec(0);
}

InvariantPolynomial builtin_form(const LieAlgebraSpec& g, const std::string& name)
{
  InvariantPolynomial P;
  if (name == "killing")
    P = killing_form(g);
  else if (name == "identity") {
    for (int i = 0; i < static_cast<int>(g.dim()); ++i)
      for (int j = 0; j < static_cast<int>(g.dim()); ++j)
        if (!g.br(i, j).empty()) throw std::invalid_argument("identity form is only invariant for abelian g");
    P = identity_form(g);
  } else
    throw std::invalid_argument("unknown invariant form '" + name + "'");
  if (!is_ad_invariant(g, P)) throw std::invalid_argument("form '" + name + "' is not ad-invariant");
  return P;
}

RepPresentation rep_algebra(const LieAlgebraSpec& a, const LieAlgebraSpec& g)
{
  if (!a.ordinary() || !g.ordinary()) throw std::invalid_argument("rep_algebra: ordinary Lie algebras only");
  const int na = static_cast<int>(a.dim()), ng = static_cast<int>(g.dim());
  RepPresentation rep;
  for (int x = 0; x < na; ++x)
    for (int i = 0; i < ng; ++i) rep.ring.add_generator(a.labels[x] + "(" + g.labels[i] + ")", 0, 1);
  auto gen = [&](int x, int i) { return x * ng + i; };
  for (int x = 0; x < na; ++x)
    for (int y = x + 1; y < na; ++y)
      for (int k = 0; k < ng; ++k) {
        Poly r;
        for (int i = 0; i < ng; ++i)
          for (int j = 0; j < ng; ++j) {
            Q c = coeff(g.br(i, j), k);
            if (sgn(c) == 0) continue;
            Monomial m{gen(x, i), gen(y, j)};
            std::sort(m.begin(), m.end());
            add_to(r, m, c);
          }
        for (const auto& [m, c] : a.br(x, y)) add_to(r, Monomial{gen(m, k)}, -c);
        rep.relations.push_back(std::move(r));
      }
  return rep;
}

std::vector<std::size_t> quotient_dims(const RepPresentation& rep, int max_degree)
{
  const PolyRing& S = rep.ring;
  for (const auto& r : rep.relations) {
    std::set<int> w;
    for (const auto& [m, c] : r) w.insert(S.weight(m));
    if (w.size() > 1) throw std::invalid_argument("quotient_dims: relations must be homogeneous");
  }
  std::vector<std::size_t> out;
  for (int t = 0; t <= max_degree; ++t) {
    auto mons = S.monomials_of_weight(t);
    std::map<Monomial, int> index;
    for (std::size_t i = 0; i < mons.size(); ++i) index[mons[i]] = static_cast<int>(i);
    std::vector<SparseVec> cols;
    for (const auto& r : rep.relations) {
      if (r.empty()) continue;
      int rw = S.weight(r.begin()->first);
      if (rw > t) continue;
      for (const auto& m : S.monomials_of_weight(t - rw)) {
        Poly y = S.multiply(r, Poly{{m, Q(1)}});
        std::map<int, Q> v;
        for (const auto& [mm, c] : y) v[index.at(mm)] = c;
        cols.push_back(sparse_from_map(v));
      }
    }
    out.push_back(mons.size() - rank_of(cols));
  }
  return out;
}

DerivedRep::DerivedRep(const CobarAlgebra& R, const LieAlgebraSpec& g) : R_(&R), g_(&g)
{
  if (!g.ordinary()) throw std::invalid_argument("derived rep: g must be an ordinary Lie algebra");
  const Alphabet& A = R.alphabet;
  for (std::size_t l = 0; l < A.size(); ++l)
    for (std::size_t i = 0; i < g.dim(); ++i) {
      const Letter& L = A[static_cast<int>(l)];
      ring_.add_generator(L.id + "(" + g.labels[i] + ")", L.degree, L.weight);
    }
  dgen_.resize(ring_.generators.size());
  for (std::size_t l = 0; l < A.size(); ++l) {
    const TensorElement& dl = R.dletter[l];
    if (dl.is_zero()) continue;
    GVector v = pi(dl);
    for (std::size_t i = 0; i < g.dim(); ++i) dgen_[generator(static_cast<int>(l), static_cast<int>(i))] = v[i];
  }
}

GVector DerivedRep::bracket(const GVector& a, const GVector& b) const
{
  const int n = static_cast<int>(g_->dim());
  GVector out(n);
  for (int i = 0; i < n; ++i) {
    if (a[i].empty()) continue;
    for (int j = 0; j < n; ++j) {
      if (b[j].empty()) continue;
      Combination c = g_->br(i, j);
      if (c.empty()) continue;
      Poly ab = ring_.multiply(a[i], b[j]);
      for (const auto& [k, v] : c) add_to(out[k], ab, v);
    }
  }
  return out;
}

GVector DerivedRep::pi_left_normed(const Word& w) const
{
  auto it = pi_cache_.find(w);
  if (it != pi_cache_.end()) return it->second;
  const int n = static_cast<int>(g_->dim());
  GVector out(n);
  if (w.size() == 1) {
    for (int i = 0; i < n; ++i) out[i] = ring_.variable(generator(w[0], i));
  } else {
    Word head(w.begin(), w.end() - 1);
    out = bracket(pi_left_normed(head), pi_left_normed(Word{w.back()}));
  }
  pi_cache_[w] = out;
  return out;
}

GVector DerivedRep::pi(const TensorElement& x) const
{
  // Dynkin-Specht-Wever: a Lie element of length n is (1/n) times its left-normed bracketing.
  GVector out(g_->dim());
  for (const auto& [w, c] : x.terms) {
    if (w.empty()) throw std::invalid_argument("pi: constant term is not a Lie element");
    GVector v = pi_left_normed(w);
    Q s = c / static_cast<long>(w.size());
    for (std::size_t i = 0; i < out.size(); ++i) add_to(out[i], v[i], s);
  }
  return out;
}

Poly DerivedRep::d(const Poly& p) const
{
  Poly out;
  for (const auto& [m, c] : p) {
    int head = 0;
    for (std::size_t t = 0; t < m.size(); ++t) {
      const Poly& dx = dgen_[m[t]];
      if (!dx.empty()) {
        Poly left{{Monomial(m.begin(), m.begin() + t), Q(1)}};
        Poly right{{Monomial(m.begin() + t + 1, m.end()), Q(1)}};
        add_to(out, ring_.multiply(ring_.multiply(left, dx), right), c * parity_sign(head));
      }
      head += ring_.generators[m[t]].degree;
    }
  }
  return out;
}

void DerivedRep::check_d_squared() const
{
  for (std::size_t g = 0; g < ring_.generators.size(); ++g)
    if (!d(dgen_[g]).empty()) throw std::logic_error("derived rep: d^2 != 0 on generator " + ring_.generators[g].label);
}

ChainComplex DerivedRep::complex(int weight, int lo, int hi) const
{
  if (!R_->weight_graded) throw std::invalid_argument("derived rep complex: weight-graded input required");
  auto sp = std::make_shared<GradedSpace>();
  std::map<int, std::map<Monomial, int>> index;
  std::map<int, std::vector<Monomial>> basis;
  for (int n = lo - 1; n <= hi; ++n) {
    basis[n] = ring_.monomials(n, weight);
    auto& blk = sp->blocks[n];
    for (std::size_t i = 0; i < basis[n].size(); ++i) {
      index[n][basis[n][i]] = static_cast<int>(i);
      Poly p{{basis[n][i], Q(1)}};
      blk.push_back(ring_.format(p));
    }
  }
  LinearMap dm(sp, sp, -1);
  for (int n = lo; n <= hi; ++n) {
    auto& cols = dm.columns[n];
    cols.clear();
    for (const auto& m : basis[n]) {
      std::map<int, Q> v;
      for (const auto& [mm, c] : d(Poly{{m, Q(1)}})) v[index[n - 1].at(mm)] = c;
      cols.push_back(sparse_from_map(v));
    }
  }
  return ChainComplex(sp, std::move(dm));
}

std::vector<std::size_t> DerivedRep::h0_dims(int max_weight) const
{
  std::vector<std::size_t> out;
  for (int w = 0; w <= max_weight; ++w) out.push_back(homology_dim(complex(w, 0, 1), 0));
  return out;
}

std::optional<Poly> DerivedRep::solve_boundary(const Poly& x) const
{
  if (x.empty()) return Poly{};
  const int deg = ring_.degree(x.begin()->first), wt = ring_.weight(x.begin()->first);
  for (const auto& [m, c] : x)
    if (ring_.degree(m) != deg || ring_.weight(m) != wt) throw std::invalid_argument("solve_boundary: inhomogeneous input");
  auto target = ring_.monomials(deg, wt);
  std::map<Monomial, int> index;
  for (std::size_t i = 0; i < target.size(); ++i) index[target[i]] = static_cast<int>(i);
  auto source = ring_.monomials(deg + 1, wt);
  Echelon E;
  for (std::size_t j = 0; j < source.size(); ++j) {
    std::map<int, Q> v;
    for (const auto& [mm, c] : d(Poly{{source[j], Q(1)}})) {
      auto it = index.find(mm);
      if (it == index.end()) throw std::logic_error("solve_boundary: d leaves the weight block");
      v[it->second] = c;
    }
    E.insert(sparse_from_map(v), unit_vector(static_cast<int>(j)));
  }
  std::map<int, Q> xv;
  for (const auto& [m, c] : x) xv[index.at(m)] = c;
  SparseVec v = sparse_from_map(xv), acc;
  E.reduce(v, &acc);
  if (!v.empty()) return std::nullopt;
  Poly y;
  for (const auto& [j, c] : acc) add_to(y, source[j], c);
  return y;
}

RepPoisson::RepPoisson(const DerivedRep& D, const PoissonStructure& P, const InvariantPolynomial& form)
    : D_(&D), N_(P.bracket_degree())
{
  if (form.degree != 2) throw std::invalid_argument("rep Poisson bracket needs a quadratic form");
  if (P.algebra().alphabet.size() != D.algebra().alphabet.size())
    throw std::invalid_argument("rep Poisson bracket: pairing and derived rep built on different algebras");
  const int n = static_cast<int>(D.lie().dim());
  std::vector<std::vector<Q>> B(n, std::vector<Q>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) B[i][j] = form.value({i, j});
  auto Binv = invert(B);
  if (Binv.empty()) throw std::invalid_argument("rep Poisson bracket: degenerate form on g");
  const int L = static_cast<int>(D.algebra().alphabet.size());
  for (int l = 0; l < L; ++l)
    for (int m = 0; m < L; ++m) {
      Q c = P.letter_pairing(l, m);
      if (sgn(c) == 0) continue;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (sgn(Binv[i][j]) != 0) gen_pairs_[{D.generator(l, i), D.generator(m, j)}] = c * Binv[i][j];
    }
}

Poly RepPoisson::bracket(const Poly& a, const Poly& b) const
{
  const PolyRing& S = D_->ring();
  auto deg = [&](int g) { return S.generators[g].degree; };
  Poly out;
  Monomial prod;
  int s = 0;
  for (const auto& [x, cx] : a)
    for (const auto& [y, cy] : b) {
      int xtail = S.degree(x);
      for (std::size_t i = 0; i < x.size(); ++i) {
        xtail -= deg(x[i]);
        int yhead = 0;
        for (std::size_t j = 0; j < y.size(); yhead += deg(y[j]), ++j) {
          auto it = gen_pairs_.find({x[i], y[j]});
          if (it == gen_pairs_.end()) continue;
          Monomial xr = x, yr = y;
          xr.erase(xr.begin() + i);
          yr.erase(yr.begin() + j);
          if (!S.multiply_monomials(xr, yr, prod, s)) continue;
          int sign = s * parity_sign(static_cast<long>(deg(x[i])) * xtail) * parity_sign(static_cast<long>(deg(y[j])) * yhead);
          add_to(out, prod, cx * cy * it->second * sign);
        }
      }
    }
  return out;
}

PoissonAxiomReport check_rep_poisson(const RepPoisson& B, int max_factors)
{
  const DerivedRep& D = B.rep();
  const PolyRing& S = D.ring();
  const int N = B.bracket_degree();
  std::vector<Monomial> mons;
  Monomial cur;
  std::function<void(int)> rec = [&](int start) {
    if (!cur.empty()) mons.push_back(cur);
    if (static_cast<int>(cur.size()) == max_factors) return;
    for (int g = start; g < static_cast<int>(S.generators.size()); ++g) {
      if (S.generators[g].degree % 2 != 0 && !cur.empty() && cur.back() == g) continue;
      cur.push_back(g);
      rec(g);
      cur.pop_back();
    }
  };
  rec(0);
  auto P = [](const Monomial& m) { return Poly{{m, Q(1)}}; };
  PoissonAxiomReport rep;
  for (const auto& a : mons)
    for (const auto& b : mons) {
      const int da = S.degree(a), db = S.degree(b);
      ++rep.checked;
      Poly x = B.bracket(P(a), P(b));
      add_to(x, B.bracket(P(b), P(a)), parity_sign(static_cast<long>(da + N) * (db + N)));
      if (!x.empty()) ++rep.antisymmetry_failed;
      // d{a,b} = {da,b} + (-1)^{|a|+N} {a,db}
      Poly y = D.d(B.bracket(P(a), P(b)));
      add_to(y, B.bracket(D.d(P(a)), P(b)), -1);
      add_to(y, B.bracket(P(a), D.d(P(b))), -parity_sign(da + N));
      if (!y.empty()) ++rep.derivation_failed;
    }
  const PolyRing* SR = &S;
  for (const auto& a : mons)
    for (const auto& b : mons)
      for (const auto& c : mons) {
        if (a.size() + b.size() + c.size() > static_cast<std::size_t>(max_factors) + 2) continue;
        const int da = S.degree(a), db = S.degree(b);
        // {a, bc} = {a,b} c + (-1)^{(|a|+N)|b|} b {a,c}
        Poly l = B.bracket(P(a), SR->multiply(P(b), P(c)));
        add_to(l, SR->multiply(B.bracket(P(a), P(b)), P(c)), -1);
        add_to(l, SR->multiply(P(b), B.bracket(P(a), P(c))), -parity_sign(static_cast<long>(da + N) * db));
        if (!l.empty()) ++rep.leibniz_failed;
        // {a,{b,c}} = {{a,b},c} + (-1)^{(|a|+N)(|b|+N)} {b,{a,c}}
        Poly j = B.bracket(P(a), B.bracket(P(b), P(c)));
        add_to(j, B.bracket(B.bracket(P(a), P(b)), P(c)), -1);
        add_to(j, B.bracket(P(b), B.bracket(P(a), P(c))), -parity_sign(static_cast<long>(da + N) * (db + N)));
        if (!j.empty()) ++rep.jacobi_failed;
        ++rep.checked;
      }
  return rep;
}

Poly drinfeld_trace(const DerivedRep& D, const HodgeProjector& H, const InvariantPolynomial& P, const TensorElement& x)
{
  const Alphabet& A = D.algebra().alphabet;
  const int p = P.degree;
  Poly out;
  if (x.is_zero()) return out;
  if (!is_in_sym_p(H, x, p)) throw std::invalid_argument("drinfeld_trace: element is not in Sym^" + std::to_string(p) + "(L)");
  // split into homogeneous (length, degree, weight) parts
  std::map<std::tuple<int, int, int>, TensorElement> parts;
  for (const auto& [w, c] : x.terms)
    parts[{static_cast<int>(w.size()), A.degree(w), A.weight(w)}].add(w, c);
  const int ng = static_cast<int>(D.lie().dim());
  for (const auto& [key, part] : parts) {
    auto [n, deg, wt] = key;
    struct Factor {
      TensorElement element;
      int length, degree, weight;
    };
    std::vector<Factor> lie;
    for (int k = 1; k <= n - p + 1; ++k)
      for (auto& e : lyndon_basis(A, k)) {
        const Word& w0 = e.terms.begin()->first;
        lie.push_back({e, k, A.degree(w0), A.weight(w0)});
      }
    std::vector<std::vector<int>> tuples;
    std::vector<int> cur;
    std::function<void(int, int, int, int)> rec = [&](int start, int len, int dg, int wg) {
      if (static_cast<int>(cur.size()) == p) {
        if (len == n && dg == deg && wg == wt) tuples.push_back(cur);
        return;
      }
      for (int f = start; f < static_cast<int>(lie.size()); ++f) {
        if (len + lie[f].length > n || wg + lie[f].weight > wt) continue;
        cur.push_back(f);
        rec(f, len + lie[f].length, dg + lie[f].degree, wg + lie[f].weight);
        cur.pop_back();
      }
    };
    rec(0, 0, 0, 0);
    std::map<Word, int> index;
    auto coords = [&](const TensorElement& t) {
      std::map<int, Q> v;
      for (const auto& [w, c] : t.terms) {
        auto it = index.emplace(w, static_cast<int>(index.size())).first;
        v[it->second] = c;
      }
      return sparse_from_map(v);
    };
    Echelon E;
    for (std::size_t t = 0; t < tuples.size(); ++t) {
      std::vector<TensorElement> factors;
      for (int f : tuples[t]) factors.push_back(lie[f].element);
      E.insert(coords(symmetrize(H, factors)), unit_vector(static_cast<int>(t)));
    }
    SparseVec v = coords(part), acc;
    E.reduce(v, &acc);
    if (!v.empty()) throw std::logic_error("drinfeld_trace: PBW solve failed");
    for (const auto& [t, c] : acc) {
      // sum over g-indices of P(i_1..i_p) pi(A_1)_{i_1} ... pi(A_p)_{i_p}
      std::vector<GVector> pis;
      for (int f : tuples[t]) pis.push_back(D.pi(lie[f].element));
      std::vector<int> idx(p, 0);
      std::function<void(int, const Poly&)> acc_rec = [&](int pos, const Poly& partial) {
        if (partial.empty()) return;
        if (pos == p) {
          Q pv = P.value(idx);
          if (sgn(pv) != 0) add_to(out, partial, c * pv);
          return;
        }
        for (int i = 0; i < ng; ++i) {
          if (pis[pos][i].empty()) continue;
          idx[pos] = i;
          acc_rec(pos + 1, D.ring().multiply(partial, pis[pos][i]));
        }
      };
      acc_rec(0, Poly{{Monomial{}, Q(1)}});
    }
  }
  return out;
}

PoissonAxiomReport check_rep_poisson_on_traces(const RepPoisson& B, const HodgeProjector& H,
                                               const InvariantPolynomial& form, int max_weight)
{
  const DerivedRep& D = B.rep();
  const CobarAlgebra& R = D.algebra();
  const Alphabet& A = R.alphabet;
  const int N = B.bracket_degree();
  std::vector<TensorElement> lie;
  for (int k = 1; k < max_weight; ++k)
    for (auto& e : lyndon_basis(A, k))
      if (A.weight(e.terms.begin()->first) < max_weight) lie.push_back(std::move(e));
  PoissonAxiomReport rep;
  std::vector<Poly> traces;
  for (std::size_t i = 0; i < lie.size(); ++i)
    for (std::size_t j = i; j < lie.size(); ++j) {
      TensorElement x = symmetrize(H, {lie[i], lie[j]});
      if (x.is_zero() || A.weight(x.terms.begin()->first) > max_weight) continue;
      Poly t = drinfeld_trace(D, H, form, x);
      TensorElement dx = R.d(x);
      Poly c = dx.is_zero() ? Poly{} : drinfeld_trace(D, H, form, dx);
      add_to(c, D.d(t), -1);
      if (!c.empty()) ++rep.chain_failed;
      if (!t.empty()) traces.push_back(std::move(t));
    }
  for (const auto& a : traces)
    for (const auto& b : traces) {
      const int da = D.ring().degree(a), db = D.ring().degree(b);
      ++rep.checked;
      Poly ab = B.bracket(a, b);
      Poly x = ab;
      add_to(x, B.bracket(b, a), parity_sign(static_cast<long>(da + N) * (db + N)));
      if (!x.empty()) ++rep.antisymmetry_failed;
      Poly y = D.d(ab);
      add_to(y, B.bracket(D.d(a), b), -1);
      add_to(y, B.bracket(a, D.d(b)), -parity_sign(da + N));
      if (!y.empty()) ++rep.derivation_failed;
    }
  if (traces.size() <= 12)
    for (const auto& a : traces)
      for (const auto& b : traces)
        for (const auto& c : traces) {
          const int da = D.ring().degree(a), db = D.ring().degree(b);
          Poly j = B.bracket(a, B.bracket(b, c));
          add_to(j, B.bracket(B.bracket(a, b), c), -1);
          add_to(j, B.bracket(b, B.bracket(a, c)), -parity_sign(static_cast<long>(da + N) * (db + N)));
          if (!j.empty()) ++rep.jacobi_failed;
        }
  return rep;
}

bool TraceReport::ok() const
{
  if (pairs.empty()) return false;
  for (const auto& p : pairs)
    if (!p.boundary) return false;
  return true;
}

TraceReport verify_trace_lie_hom(const PoissonStructure& P, const NecklaceHodge& N, const DerivedRep& D,
                                 const RepPoisson& B, const InvariantPolynomial& form, int max_weight, int max_degree)
{
  const Alphabet& A = P.algebra().alphabet;
  const HodgeProjector& H = N.columns().projector();
  ClassBracket CB(P, N, max_weight, max_degree);
  std::vector<NecklaceElement> reps;
  for (int n = 0; n <= max_degree; ++n)
    for (const auto& c : CB.classes(2, n)) reps.push_back(CB.representative(c));
  auto sym2 = [&](const NecklaceElement& x) {
    TensorElement y = H.project(lift(x), 2);
    if (natural_projection(A, y) != x) throw std::logic_error("trace check: class is not in the second Hodge piece");
    return y;
  };
  std::vector<Poly> traces;
  for (const auto& r : reps) traces.push_back(drinfeld_trace(D, H, form, sym2(r)));
  TraceReport rep;
  for (std::size_t i = 0; i < reps.size(); ++i)
    for (std::size_t j = 0; j < reps.size(); ++j) {
      TracePair tp;
      tp.alpha = format(A, reps[i]);
      tp.beta = format(A, reps[j]);
      NecklaceElement br = P.necklace_bracket(reps[i], reps[j]);
      tp.degree = A.degree(reps[i].terms.begin()->first) + A.degree(reps[j].terms.begin()->first) + P.bracket_degree();
      Poly lhs;
      if (!br.is_zero()) {
        int w = 0;
        for (const auto& [word, c] : br.terms) w = std::max(w, A.weight(word));
        if (w > max_weight) continue;
        lhs = drinfeld_trace(D, H, form, sym2(br));
      }
      tp.difference = lhs;
      add_to(tp.difference, B.bracket(traces[i], traces[j]), -1);
      tp.exact = tp.difference.empty();
      if (tp.exact) {
        tp.boundary = true;
      } else if (auto y = D.solve_boundary(tp.difference)) {
        tp.boundary = true;
        tp.certificate = *y;
      }
      rep.pairs.push_back(std::move(tp));
    }
  return rep;
}

}  // namespace hodge
