#include "hodge/free.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hodge {

std::size_t WordHash::operator()(const Word& w) const noexcept
{
  std::size_t h = 1469598103934665603ull;
  for (int c : w) h = (h ^ static_cast<std::size_t>(c + 1)) * 1099511628211ull;
  return h;
}

Alphabet::Alphabet(std::vector<Letter> letters) : letters_(std::move(letters))
{
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    const auto& l = letters_[i];
    if (l.weight < 1) throw std::invalid_argument("letter '" + l.id + "' has weight < 1");
    if (!index_.emplace(l.id, static_cast<int>(i)).second) throw std::invalid_argument("duplicate letter '" + l.id + "'");
  }
}

int Alphabet::index_of(const std::string& id) const
{
  auto it = index_.find(id);
  if (it == index_.end()) throw std::invalid_argument("unknown letter '" + id + "'");
  return it->second;
}

int Alphabet::degree(const Word& w) const
{
  int d = 0;
  for (int c : w) d += letters_[c].degree;
  return d;
}

int Alphabet::weight(const Word& w) const
{
  int d = 0;
  for (int c : w) d += letters_[c].weight;
  return d;
}

std::string Alphabet::format(const Word& w) const
{
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ",";
    s += letters_[w[i]].id;
  }
  return s;
}

Word Alphabet::parse_word(const std::string& s) const
{
  Word w;
  std::string tok;
  auto flush = [&] {
    if (!tok.empty()) w.push_back(index_of(tok));
    tok.clear();
  };
  for (char c : s) {
    if (c == ',' || c == ' ' || c == '[' || c == ']')
      flush();
    else
      tok += c;
  }
  flush();
  return w;
}

TensorElement TensorElement::word(const Word& w, const Q& c)
{
  TensorElement x;
  x.add(w, c);
  return x;
}

void TensorElement::add(const Word& w, const Q& c)
{
  if (sgn(c) == 0) return;
  auto [it, fresh] = terms.emplace(w, c);
  if (!fresh) {
    it->second += c;
    if (sgn(it->second) == 0) terms.erase(it);
  }
}

void TensorElement::add(const TensorElement& x, const Q& c)
{
  for (const auto& [w, v] : x.terms) add(w, c * v);
}

TensorElement TensorElement::scaled(const Q& c) const
{
  TensorElement out;
  if (sgn(c) == 0) return out;
  for (const auto& [w, v] : terms) out.terms.emplace(w, v * c);
  return out;
}

int TensorElement::common_length() const
{
  if (terms.empty()) return -2;
  int n = static_cast<int>(terms.begin()->first.size());
  for (const auto& [w, v] : terms)
    if (static_cast<int>(w.size()) != n) return -1;
  return n;
}

TensorElement operator+(const TensorElement& a, const TensorElement& b)
{
  TensorElement x = a;
  x.add(b);
  return x;
}

TensorElement operator-(const TensorElement& a, const TensorElement& b)
{
  TensorElement x = a;
  x.add(b, -1);
  return x;
}

TensorElement multiply(const TensorElement& a, const TensorElement& b)
{
  TensorElement out;
  for (const auto& [u, x] : a.terms)
    for (const auto& [v, y] : b.terms) {
      Word w = u;
      w.insert(w.end(), v.begin(), v.end());
      out.add(w, x * y);
    }
  return out;
}

TensorElement commutator(const Alphabet& A, const TensorElement& a, const TensorElement& b)
{
  TensorElement out;
  for (const auto& [u, x] : a.terms)
    for (const auto& [v, y] : b.terms) {
      Word uv = u, vu = v;
      uv.insert(uv.end(), v.begin(), v.end());
      vu.insert(vu.end(), u.begin(), u.end());
      bool odd = (A.degree(u) % 2 != 0) && (A.degree(v) % 2 != 0);
      out.add(uv, x * y);
      out.add(vu, odd ? Q(x * y) : Q(-(x * y)));
    }
  return out;
}

std::string format(const Alphabet& A, const TensorElement& x)
{
  if (x.terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : x.terms) {
    if (!first) os << (sgn(c) < 0 ? " - " : " + ");
    else if (sgn(c) < 0) os << "-";
    first = false;
    Q a = abs(c);
    if (a != 1 || w.empty()) os << a.get_str() << (w.empty() ? "" : "*");
    if (!w.empty()) os << "[" << A.format(w) << "]";
  }
  return os.str();
}

int koszul_sign(const Perm& perm, const std::vector<int>& degrees)
{
  if (perm.size() != degrees.size()) throw std::invalid_argument("koszul_sign: length mismatch");
  int s = 1;
  for (std::size_t i = 0; i < perm.size(); ++i)
    for (std::size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j] && degrees[i] % 2 != 0 && degrees[j] % 2 != 0) s = -s;
  return s;
}

Perm inverse(const Perm& p)
{
  Perm q(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) q[p[i]] = static_cast<int>(i);
  return q;
}

Perm compose(const Perm& s, const Perm& t)
{
  Perm r(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) r[i] = s[t[i]];
  return r;
}

std::vector<Perm> all_permutations(int n)
{
  std::vector<Perm> out;
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

int descents(const Perm& p)
{
  int d = 0;
  for (std::size_t i = 0; i + 1 < p.size(); ++i)
    if (p[i] > p[i + 1]) ++d;
  return d;
}

SymOperator SymOperator::identity(int n)
{
  SymOperator s;
  s.arity = n;
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  s.coeffs[p] = 1;
  return s;
}

void SymOperator::add(const Perm& p, const Q& c)
{
  if (sgn(c) == 0) return;
  auto [it, fresh] = coeffs.emplace(p, c);
  if (!fresh) {
    it->second += c;
    if (sgn(it->second) == 0) coeffs.erase(it);
  }
}

SymOperator operator*(const SymOperator& a, const SymOperator& b)
{
  if (a.arity != b.arity) throw std::invalid_argument("SymOperator arity mismatch");
  SymOperator r;
  r.arity = a.arity;
  for (const auto& [s, x] : a.coeffs)
    for (const auto& [t, y] : b.coeffs) r.add(compose(s, t), x * y);
  return r;
}

SymOperator operator+(const SymOperator& a, const SymOperator& b)
{
  if (a.arity != b.arity) throw std::invalid_argument("SymOperator arity mismatch");
  SymOperator r = a;
  for (const auto& [t, y] : b.coeffs) r.add(t, y);
  return r;
}

namespace {

// Sign of x.s for a word whose letter parities are given.
int right_action_sign(const Perm& s, const std::vector<bool>& odd)
{
  int sign = 1;
  for (std::size_t a = 0; a < s.size(); ++a) {
    if (!odd[s[a]]) continue;
    for (std::size_t b = a + 1; b < s.size(); ++b)
      if (s[a] > s[b] && odd[s[b]]) sign = -sign;
  }
  return sign;
}

}  // namespace

TensorElement act_right(const Alphabet& A, const TensorElement& x, const SymOperator& s)
{
  TensorElement out;
  for (const auto& [w, c] : x.terms) {
    if (static_cast<int>(w.size()) != s.arity) throw std::invalid_argument("act_right: word length != arity");
    std::vector<bool> odd(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) odd[i] = A.odd(w[i]);
    for (const auto& [p, k] : s.coeffs) {
      Word u(w.size());
      for (std::size_t a = 0; a < w.size(); ++a) u[a] = w[p[a]];
      out.add(u, c * k * right_action_sign(p, odd));
    }
  }
  return out;
}

Q stirling_coefficient(int n, int p, int j)
{
  // coefficients of prod_{k=1}^{n} (X - j + k) / n!
  std::vector<Q> poly{Q(1)};
  for (int k = 1; k <= n; ++k) {
    std::vector<Q> next(poly.size() + 1, Q(0));
    for (std::size_t i = 0; i < poly.size(); ++i) {
      next[i + 1] += poly[i];
      next[i] += poly[i] * (k - j);
    }
    poly = std::move(next);
  }
  mpz_class fact = 1;
  for (int k = 2; k <= n; ++k) fact *= k;
  if (p < 0 || p >= static_cast<int>(poly.size())) return Q(0);
  Q r = poly[p] / Q(fact);
  r.canonicalize();
  return r;
}

SymOperator eulerian_idempotent(int n, int p)
{
  if (n < 1 || p < 1 || p > n) throw std::invalid_argument("eulerian_idempotent: need 1 <= p <= n");
  std::vector<Q> a(n + 1);
  for (int j = 1; j <= n; ++j) a[j] = stirling_coefficient(n, p, j);
  SymOperator e;
  e.arity = n;
  for (const auto& s : all_permutations(n)) e.add(s, a[descents(s) + 1]);
  return e;
}

const HodgeProjector::PermTable& HodgeProjector::table(int n) const
{
  auto it = tables_.find(n);
  if (it != tables_.end()) return it->second;
  PermTable t;
  t.perms = all_permutations(n);
  for (const auto& s : t.perms) t.des.push_back(descents(s));
  t.a.assign(n + 1, std::vector<Q>(n));
  for (int p = 1; p <= n; ++p)
    for (int j = 1; j <= n; ++j) t.a[p][j - 1] = stirling_coefficient(n, p, j);
  return tables_.emplace(n, std::move(t)).first->second;
}

std::vector<TensorElement> HodgeProjector::components(const Word& w) const
{
  const int n = static_cast<int>(w.size());
  std::vector<TensorElement> out(n + 1);
  if (n == 0) {
    out[0] = TensorElement::unit();
    return out;
  }
  const auto& t = table(n);
  std::vector<bool> odd(n);
  bool any_odd = false;
  for (int i = 0; i < n; ++i) any_odd |= (odd[i] = A_->odd(w[i]));
  std::unordered_map<Word, std::vector<long>, WordHash> counts;
  Word u(n);
  for (std::size_t k = 0; k < t.perms.size(); ++k) {
    const auto& s = t.perms[k];
    for (int a = 0; a < n; ++a) u[a] = w[s[a]];
    int sign = any_odd ? right_action_sign(s, odd) : 1;
    auto& c = counts[u];
    if (c.empty()) c.assign(n, 0);
    c[t.des[k]] += sign;
  }
  for (const auto& [u2, c] : counts)
    for (int p = 1; p <= n; ++p) {
      Q v = 0;
      for (int j = 0; j < n; ++j)
        if (c[j]) v += t.a[p][j] * c[j];
      out[p].add(u2, v);
    }
  return out;
}

const std::vector<TensorElement>& HodgeProjector::cached(const Word& w) const
{
  auto it = cache_.find(w);
  if (it != cache_.end()) return it->second;
  return cache_.emplace(w, components(w)).first->second;
}

TensorElement HodgeProjector::project(const TensorElement& x, int p) const
{
  TensorElement out;
  for (const auto& [w, c] : x.terms) {
    const auto& comp = cached(w);
    if (p >= 0 && p < static_cast<int>(comp.size())) out.add(comp[p], c);
  }
  return out;
}

std::vector<TensorElement> HodgeProjector::decompose(const TensorElement& x) const
{
  std::vector<TensorElement> out;
  for (const auto& [w, c] : x.terms) {
    const auto& comp = cached(w);
    if (out.size() < comp.size()) out.resize(comp.size());
    for (std::size_t p = 0; p < comp.size(); ++p) out[p].add(comp[p], c);
  }
  return out;
}

std::vector<Word> lyndon_words(int k, int n)
{
  // Duval's algorithm
  std::vector<Word> out;
  if (k <= 0 || n <= 0) return out;
  Word w{-1};
  while (!w.empty()) {
    w.back() += 1;
    if (static_cast<int>(w.size()) == n) out.push_back(w);
    std::size_t m = w.size();
    while (static_cast<int>(w.size()) < n) w.push_back(w[w.size() - m]);
    while (!w.empty() && w.back() == k - 1) w.pop_back();
  }
  return out;
}

namespace {

bool is_lyndon(const Word& w)
{
  for (std::size_t i = 1; i < w.size(); ++i) {
    Word rot(w.begin() + i, w.end());
    rot.insert(rot.end(), w.begin(), w.begin() + i);
    if (!(w < rot)) return false;
  }
  return !w.empty();
}

}  // namespace

TensorElement standard_bracketing(const Alphabet& A, const Word& w)
{
  if (w.size() == 1) return TensorElement::word(w);
  for (std::size_t i = 1; i < w.size(); ++i) {
    Word v(w.begin() + i, w.end());
    if (is_lyndon(v)) {
      Word u(w.begin(), w.begin() + i);
      return commutator(A, standard_bracketing(A, u), standard_bracketing(A, v));
    }
  }
  throw std::logic_error("standard_bracketing: not a Lyndon word");
}

std::vector<TensorElement> lyndon_basis(const Alphabet& A, int length)
{
  if (length < 1) throw std::invalid_argument("lyndon_basis: length must be >= 1");
  std::vector<TensorElement> out;
  const int k = static_cast<int>(A.size());
  for (const auto& w : lyndon_words(k, length)) out.push_back(standard_bracketing(A, w));
  if (length % 2 == 0)
    for (const auto& w : lyndon_words(k, length / 2))
      if (A.degree(w) % 2 != 0) {
        auto b = standard_bracketing(A, w);
        out.push_back(commutator(A, b, b));
      }
  return out;
}

bool is_in_sym_p(const HodgeProjector& H, const TensorElement& x, int p)
{
  auto comps = H.decompose(x);
  for (std::size_t q = 0; q < comps.size(); ++q)
    if (static_cast<int>(q) != p && !comps[q].is_zero()) return false;
  return true;
}

bool is_lie(const HodgeProjector& H, const TensorElement& x) { return is_in_sym_p(H, x, 1); }

TensorElement symmetrize(const HodgeProjector& H, const std::vector<TensorElement>& factors)
{
  const Alphabet& A = H.alphabet();
  std::vector<int> deg;
  for (const auto& f : factors) {
    if (f.is_zero()) return {};
    if (f.common_length() < 1 || !is_lie(H, f)) throw std::invalid_argument("symmetrize: factor is not a homogeneous Lie element");
    int d = A.degree(f.terms.begin()->first);
    for (const auto& [w, c] : f.terms)
      if (A.degree(w) != d) throw std::invalid_argument("symmetrize: factor is not degree-homogeneous");
    deg.push_back(d);
  }
  const int p = static_cast<int>(factors.size());
  TensorElement out;
  mpz_class fact = 1;
  for (int k = 2; k <= p; ++k) fact *= k;
  for (const auto& s : all_permutations(p)) {
    // factor s(a) placed in slot a
    int sign = koszul_sign(inverse(s), deg);
    TensorElement prod = TensorElement::unit();
    for (int a = 0; a < p; ++a) prod = multiply(prod, factors[s[a]]);
    out.add(prod, Q(sign) / Q(fact));
  }
  return out;
}

std::map<int, TensorElement> pbw_decompose(const HodgeProjector& H, const TensorElement& x)
{
  if (x.common_length() == -1) throw std::invalid_argument("pbw_decompose: input is not word-length homogeneous");
  std::map<int, TensorElement> out;
  auto comps = H.decompose(x);
  for (std::size_t p = 0; p < comps.size(); ++p)
    if (!comps[p].is_zero()) out[static_cast<int>(p)] = std::move(comps[p]);
  return out;
}

}  // namespace hodge
