#include "hodge/koszul.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace hodge {

void add_to(Combination& c, int i, const Q& v)
{
  if (sgn(v) == 0) return;
  auto [it, fresh] = c.emplace(i, v);
  if (!fresh) {
    it->second += v;
    if (sgn(it->second) == 0) c.erase(it);
  }
}

namespace {

int sign_of(int e) { return (e % 2 == 0) ? 1 : -1; }

std::string describe(const std::vector<std::string>& labels, std::initializer_list<int> idx)
{
  std::string s;
  for (int i : idx) {
    if (!s.empty()) s += ", ";
    s += labels[i];
  }
  return s;
}

}  // namespace

int LieAlgebraSpec::index_of(const std::string& label) const
{
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == label) return static_cast<int>(i);
  throw std::invalid_argument("unknown basis label '" + label + "'");
}

Combination LieAlgebraSpec::br(int i, int j) const
{
  auto it = bracket.find({i, j});
  return it == bracket.end() ? Combination{} : it->second;
}

Combination LieAlgebraSpec::br(const Combination& x, const Combination& y) const
{
  Combination out;
  for (const auto& [i, a] : x)
    for (const auto& [j, b] : y)
      for (const auto& [k, c] : br(i, j)) add_to(out, k, a * b * c);
  return out;
}

Combination LieAlgebraSpec::d(const Combination& x) const
{
  Combination out;
  for (const auto& [i, a] : x) {
    auto it = differential.find(i);
    if (it == differential.end()) continue;
    for (const auto& [k, c] : it->second) add_to(out, k, a * c);
  }
  return out;
}

void LieAlgebraSpec::complete_antisymmetry()
{
  auto given = bracket;
  for (const auto& [ij, c] : given) {
    auto [i, j] = ij;
    int s = -sign_of(degrees[i] * degrees[j]);
    Combination expected;
    for (const auto& [k, v] : c) add_to(expected, k, v * s);
    auto it = bracket.find({j, i});
    if (it == bracket.end()) {
      if (!expected.empty()) bracket[{j, i}] = expected;
    } else if (it->second != expected) {
      throw std::invalid_argument("antisymmetry violated for [" + describe(labels, {i, j}) + "]");
    }
  }
  for (auto it = bracket.begin(); it != bracket.end();)
    it = it->second.empty() ? bracket.erase(it) : std::next(it);
}

void LieAlgebraSpec::validate() const
{
  const int n = static_cast<int>(dim());
  if (degrees.size() != labels.size()) throw std::invalid_argument("Lie algebra: degree list length mismatch");
  auto unit = [](int i) { return Combination{{i, Q(1)}}; };
  for (const auto& [ij, c] : bracket) {
    auto [i, j] = ij;
    for (const auto& [k, v] : c)
      if (degrees[k] != degrees[i] + degrees[j])
        throw std::invalid_argument("bracket degree violated for [" + describe(labels, {i, j}) + "]");
    Combination back = br(j, i);
    int s = -sign_of(degrees[i] * degrees[j]);
    Combination expected;
    for (const auto& [k, v] : c) add_to(expected, k, v * s);
    if (back != expected) throw std::invalid_argument("antisymmetry violated for [" + describe(labels, {i, j}) + "]");
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        // [x,[y,z]] = [[x,y],z] + (-1)^{|x||y|} [y,[x,z]]
        Combination lhs = br(unit(i), br(j, k));
        Combination r1 = br(br(i, j), unit(k));
        Combination r2 = br(unit(j), br(i, k));
        int s = sign_of(degrees[i] * degrees[j]);
        for (const auto& [t, v] : r1) add_to(lhs, t, -v);
        for (const auto& [t, v] : r2) add_to(lhs, t, -v * s);
        if (!lhs.empty()) throw std::invalid_argument("Jacobi identity violated for (" + describe(labels, {i, j, k}) + ")");
      }
  for (const auto& [i, c] : differential)
    for (const auto& [k, v] : c)
      if (degrees[k] != degrees[i] - 1) throw std::invalid_argument("differential degree violated at " + labels[i]);
  for (int i = 0; i < n; ++i)
    if (!d(d(unit(i))).empty()) throw std::invalid_argument("d^2 != 0 at " + labels[i]);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Combination lhs = d(br(i, j));
      Combination r1 = br(d(unit(i)), unit(j));
      Combination r2 = br(unit(i), d(unit(j)));
      int s = sign_of(degrees[i]);
      for (const auto& [t, v] : r1) add_to(lhs, t, -v);
      for (const auto& [t, v] : r2) add_to(lhs, t, -v * s);
      if (!lhs.empty()) throw std::invalid_argument("d is not a derivation of the bracket at (" + describe(labels, {i, j}) + ")");
    }
}

bool LieAlgebraSpec::ordinary() const
{
  for (int d : degrees)
    if (d != 0) return false;
  for (const auto& [i, c] : differential)
    if (!c.empty()) return false;
  return true;
}

int CoalgebraSpec::index_of(const std::string& label) const
{
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == label) return static_cast<int>(i);
  throw std::invalid_argument("unknown basis label '" + label + "'");
}

bool CoalgebraSpec::weight_graded() const
{
  for (std::size_t c = 0; c < differential.size(); ++c)
    for (const auto& [t, v] : differential[c])
      if (weights[t] != weights[c]) return false;
  return true;
}

void CoalgebraSpec::validate() const
{
  const int n = static_cast<int>(dim());
  if (static_cast<int>(degrees.size()) != n || static_cast<int>(weights.size()) != n ||
      static_cast<int>(coproduct.size()) != n || static_cast<int>(differential.size()) != n)
    throw std::invalid_argument("coalgebra: basis data length mismatch");
  for (int c = 0; c < n; ++c)
    if (weights[c] < 1) throw std::invalid_argument("coalgebra: weight of " + labels[c] + " must be >= 1 (weight 0 is the coaugmentation)");
  using Triple = std::map<std::tuple<int, int, int>, Q>;
  auto add3 = [](Triple& t, int a, int b, int c, const Q& v) {
    if (sgn(v) == 0) return;
    auto& x = t[{a, b, c}];
    x += v;
    if (sgn(x) == 0) t.erase({a, b, c});
  };
  for (int c = 0; c < n; ++c) {
    for (const auto& [ab, v] : coproduct[c]) {
      auto [a, b] = ab;
      if (weights[a] + weights[b] != weights[c] || degrees[a] + degrees[b] != degrees[c])
        throw std::invalid_argument("coproduct of " + labels[c] + " does not preserve degree/weight");
    }
    Triple left, right;
    for (const auto& [ab, v] : coproduct[c]) {
      auto [a, b] = ab;
      for (const auto& [xy, u] : coproduct[a]) add3(left, xy.first, xy.second, b, v * u);
      for (const auto& [xy, u] : coproduct[b]) add3(right, a, xy.first, xy.second, v * u);
    }
    if (left != right) throw std::invalid_argument("coassociativity violated at " + labels[c]);
    if (cocommutative) {
      std::map<std::pair<int, int>, Q> flip;
      for (const auto& [ab, v] : coproduct[c]) flip[{ab.second, ab.first}] = v * sign_of(degrees[ab.first] * degrees[ab.second]);
      if (flip != coproduct[c]) throw std::invalid_argument("graded cocommutativity violated at " + labels[c]);
    }
  }
  for (int c = 0; c < n; ++c) {
    for (const auto& [t, v] : differential[c]) {
      if (degrees[t] != degrees[c] - 1) throw std::invalid_argument("differential degree violated at " + labels[c]);
      if (weights[t] > weights[c]) throw std::invalid_argument("differential raises weight at " + labels[c]);
    }
    Combination dd;
    for (const auto& [t, v] : differential[c])
      for (const auto& [u, w] : differential[t]) add_to(dd, u, v * w);
    if (!dd.empty()) throw std::invalid_argument("d^2 != 0 at " + labels[c]);
    // reduced coproduct of dc against (d x 1 + 1 x d) of the reduced coproduct
    std::map<std::pair<int, int>, Q> lhs, rhs;
    auto add2 = [](std::map<std::pair<int, int>, Q>& m, int a, int b, const Q& v) {
      if (sgn(v) == 0) return;
      auto& x = m[{a, b}];
      x += v;
      if (sgn(x) == 0) m.erase({a, b});
    };
    for (const auto& [t, v] : differential[c])
      for (const auto& [ab, u] : coproduct[t]) add2(lhs, ab.first, ab.second, v * u);
    for (const auto& [ab, u] : coproduct[c]) {
      auto [a, b] = ab;
      for (const auto& [t, v] : differential[a]) add2(rhs, t, b, u * v);
      for (const auto& [t, v] : differential[b]) add2(rhs, a, t, u * v * sign_of(degrees[a]));
    }
    if (lhs != rhs) throw std::invalid_argument("differential is not a coderivation at " + labels[c]);
  }
}

std::vector<std::vector<int>> ce_monomials(const LieAlgebraSpec& a, int max_weight)
{
  std::vector<std::vector<int>> out;
  const int n = static_cast<int>(a.dim());
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int start) {
    if (!cur.empty()) out.push_back(cur);
    if (static_cast<int>(cur.size()) == max_weight) return;
    for (int i = start; i < n; ++i) {
      bool odd_shift = (a.degrees[i] + 1) % 2 != 0;
      if (odd_shift && !cur.empty() && cur.back() == i) continue;
      cur.push_back(i);
      rec(i);
      cur.pop_back();
    }
  };
  rec(0);
  std::stable_sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.size() < y.size(); });
  return out;
}

CoalgebraSpec ce_coalgebra(const LieAlgebraSpec& a, int max_weight)
{
  if (max_weight < 1) throw std::invalid_argument("ce_coalgebra: max_weight must be >= 1");
  auto monos = ce_monomials(a, max_weight);
  std::map<std::vector<int>, int> index;
  for (std::size_t i = 0; i < monos.size(); ++i) index[monos[i]] = static_cast<int>(i);
  auto sd = [&](int i) { return a.degrees[i] + 1; };

  CoalgebraSpec C;
  C.ce_of_ordinary = a.ordinary();
  for (const auto& m : monos) {
    std::string label;
    int deg = 0;
    for (int i : m) {
      if (!label.empty()) label += "^";
      label += a.labels[i];
      deg += sd(i);
    }
    C.labels.push_back(label);
    C.degrees.push_back(deg);
    C.weights.push_back(static_cast<int>(m.size()));
  }
  C.coproduct.resize(monos.size());
  C.differential.resize(monos.size());

  // Sign of moving the positions in `front` (in order) ahead of the rest.
  auto unshuffle_sign = [&](const std::vector<int>& m, const std::vector<int>& front) {
    std::vector<bool> in(m.size(), false);
    for (int p : front) in[p] = true;
    int s = 1;
    for (int p : front)
      for (int q = 0; q < p; ++q)
        if (!in[q] && sd(m[p]) % 2 != 0 && sd(m[q]) % 2 != 0) s = -s;
    return s;
  };
  // z * B in Sym^c, normalized; returns sign 0 if it vanishes.
  auto insert = [&](int z, const std::vector<int>& B, std::vector<int>& out) {
    int s = 1;
    std::size_t pos = 0;
    while (pos < B.size() && B[pos] < z) {
      if (sd(z) % 2 != 0 && sd(B[pos]) % 2 != 0) s = -s;
      ++pos;
    }
    if (pos < B.size() && B[pos] == z && sd(z) % 2 != 0) return 0;
    out = B;
    out.insert(out.begin() + pos, z);
    return s;
  };

  for (std::size_t c = 0; c < monos.size(); ++c) {
    const auto& m = monos[c];
    const int k = static_cast<int>(m.size());
    for (int mask = 1; mask + 1 < (1 << k); ++mask) {
      std::vector<int> front, A, B;
      for (int p = 0; p < k; ++p) {
        if (mask & (1 << p)) {
          front.push_back(p);
          A.push_back(m[p]);
        } else {
          B.push_back(m[p]);
        }
      }
      auto& v = C.coproduct[c][{index.at(A), index.at(B)}];
      v += unshuffle_sign(m, front);
      if (sgn(v) == 0) C.coproduct[c].erase({index.at(A), index.at(B)});
    }
    auto emit = [&](const Combination& q, const std::vector<int>& rest, int sign) {
      for (const auto& [z, v] : q) {
        std::vector<int> prod;
        int s = insert(z, rest, prod);
        if (s == 0) continue;
        add_to(C.differential[c], index.at(prod), v * sign * s);
      }
    };
    for (int p = 0; p < k; ++p) {
      std::vector<int> rest;
      for (int r = 0; r < k; ++r)
        if (r != p) rest.push_back(m[r]);
      Combination q;
      for (const auto& [z, v] : a.d(Combination{{m[p], Q(1)}})) add_to(q, z, -v);
      emit(q, rest, unshuffle_sign(m, {p}));
    }
    for (int p = 0; p < k; ++p)
      for (int r = p + 1; r < k; ++r) {
        std::vector<int> rest;
        for (int t = 0; t < k; ++t)
          if (t != p && t != r) rest.push_back(m[t]);
        Combination q;
        for (const auto& [z, v] : a.br(m[p], m[r])) add_to(q, z, v * sign_of(sd(m[p])));
        emit(q, rest, unshuffle_sign(m, {p, r}));
      }
  }
  return C;
}

TensorElement CobarAlgebra::d(const TensorElement& x) const
{
  TensorElement out;
  for (const auto& [w, c] : x.terms) {
    int pre = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
      Q s = (pre % 2 == 0) ? c : Q(-c);
      for (const auto& [u, e] : dletter[w[i]].terms) {
        Word t(w.begin(), w.begin() + i);
        t.insert(t.end(), u.begin(), u.end());
        t.insert(t.end(), w.begin() + i + 1, w.end());
        out.add(t, s * e);
      }
      pre += alphabet[w[i]].degree;
    }
  }
  return out;
}

void CobarAlgebra::check_d_squared() const
{
  for (std::size_t l = 0; l < alphabet.size(); ++l)
    if (!d(dletter[l]).is_zero())
      throw std::logic_error("cobar differential: d^2 != 0 on letter " + alphabet[static_cast<int>(l)].id);
}

CobarAlgebra cobar(const CoalgebraSpec& C)
{
  CobarAlgebra R;
  std::vector<Letter> letters;
  for (std::size_t c = 0; c < C.dim(); ++c) letters.push_back({C.labels[c], C.degrees[c] - 1, C.weights[c]});
  R.alphabet = Alphabet(letters);
  for (std::size_t c = 0; c < C.dim(); ++c) {
    TensorElement x;
    for (const auto& [t, v] : C.differential[c]) x.add(Word{t}, -v);
    for (const auto& [ab, v] : C.coproduct[c]) x.add(Word{ab.first, ab.second}, v * sign_of(C.degrees[ab.first]));
    R.dletter.push_back(std::move(x));
  }
  R.weight_graded = C.weight_graded();
  R.certified = C.ce_of_ordinary;
  R.check_d_squared();
  return R;
}

void TensorPair::add(const Word& a, const Word& b, const Q& c)
{
  if (sgn(c) == 0) return;
  auto [it, fresh] = terms.emplace(std::make_pair(a, b), c);
  if (!fresh) {
    it->second += c;
    if (sgn(it->second) == 0) terms.erase(it);
  }
}

TensorPair hopf_coproduct(const Alphabet& A, const TensorElement& x)
{
  TensorPair out;
  for (const auto& [w, c] : x.terms) {
    const int n = static_cast<int>(w.size());
    for (long mask = 0; mask < (1L << n); ++mask) {
      Word a, b;
      int s = 1;
      int odd_b = 0;  // odd letters already sent right, which later left letters must pass
      for (int p = 0; p < n; ++p) {
        bool odd = A.odd(w[p]);
        if (mask & (1L << p)) {
          a.push_back(w[p]);
          if (odd && odd_b % 2) s = -s;
        } else {
          b.push_back(w[p]);
          if (odd) ++odd_b;
        }
      }
      out.add(a, b, c * s);
    }
  }
  return out;
}

TensorElement adams_operation(const Alphabet& A, int n, const TensorElement& x)
{
  if (n < 0) throw std::invalid_argument("adams_operation: n must be >= 0");
  TensorElement out;
  for (const auto& [w, c] : x.terms) {
    const int m = static_cast<int>(w.size());
    if (m == 0) {
      out.add(w, c);
      continue;
    }
    if (n == 0) continue;
    std::vector<int> f(m, 0);
    while (true) {
      // stable sort of positions by colour; sign from odd letters crossing
      Word u;
      int s = 1;
      for (int colour = 0; colour < n; ++colour)
        for (int p = 0; p < m; ++p)
          if (f[p] == colour) {
            u.push_back(w[p]);
            if (A.odd(w[p]))
              for (int q = p + 1; q < m; ++q)
                if (f[q] < colour && A.odd(w[q])) s = -s;
          }
      out.add(u, c * s);
      int p = 0;
      while (p < m && ++f[p] == n) f[p++] = 0;
      if (p == m) break;
    }
  }
  return out;
}

AdamsReport check_adams_law(const Alphabet& A, int max_length)
{
  AdamsReport r;
  HodgeProjector H(A);
  const int n = static_cast<int>(A.size());
  Word w;
  std::function<void(int)> rec = [&](int len) {
    if (static_cast<int>(w.size()) == len) {
      ++r.words;
      TensorElement x = TensorElement::word(w);
      for (const auto& [p, comp] : pbw_decompose(H, x))
        for (int k : {2, 3}) {
          Q scale = 1;
          for (int i = 0; i < p; ++i) scale *= k;
          if (adams_operation(A, k, comp) != comp.scaled(scale)) ++r.eigen_failed;
        }
      if (adams_operation(A, 2, adams_operation(A, 3, x)) != adams_operation(A, 6, x)) ++r.compose_failed;
      return;
    }
    for (int i = 0; i < n; ++i) {
      w.push_back(i);
      rec(len);
      w.pop_back();
    }
  };
  for (int len = 1; len <= max_length; ++len) rec(len);
  return r;
}

}  // namespace hodge
