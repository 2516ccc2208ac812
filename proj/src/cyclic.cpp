#include "hodge/cyclic.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace hodge {

namespace {

int parity_sign(int e) { return (e % 2 == 0) ? 1 : -1; }

}  // namespace

void NecklaceElement::add(const Word& canonical, const Q& c)
{
  if (sgn(c) == 0) return;
  auto [it, fresh] = terms.emplace(canonical, c);
  if (!fresh) {
    it->second += c;
    if (sgn(it->second) == 0) terms.erase(it);
  }
}

bool canonical_necklace(const Alphabet& A, const Word& w, Word& canon, int& sign)
{
  const std::size_t m = w.size();
  if (m == 0) return false;
  int total = A.degree(w);
  Word cur = w;
  int s = 1;
  bool found = false;
  int best_sign = 0;
  for (std::size_t r = 0; r < m; ++r) {
    if (!found || cur < canon) {
      canon = cur;
      best_sign = s;
      found = true;
    } else if (cur == canon && s != best_sign) {
      return false;
    }
    int a = A[cur[0]].degree;
    s *= parity_sign(a * (total - a));
    std::rotate(cur.begin(), cur.begin() + 1, cur.end());
  }
  sign = best_sign;
  return true;
}

NecklaceElement natural_projection(const Alphabet& A, const TensorElement& x)
{
  NecklaceElement out;
  Word canon;
  int s = 0;
  for (const auto& [w, c] : x.terms)
    if (canonical_necklace(A, w, canon, s)) out.add(canon, c * s);
  return out;
}

TensorElement lift(const NecklaceElement& x)
{
  TensorElement out;
  for (const auto& [w, c] : x.terms) out.add(w, c);
  return out;
}

std::string format(const Alphabet& A, const NecklaceElement& x)
{
  TensorElement t = lift(x);
  return format(A, t);
}

NecklaceElement parse_necklace(const Alphabet& A, const std::string& s)
{
  // terms like  "[v,v,w]", "-2[w,w]", "+ 3/2 * [v]"
  NecklaceElement out;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  };
  bool any = false;
  while (true) {
    skip();
    if (i >= s.size()) break;
    Q sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      if (s[i] == '-') sign = -1;
      ++i;
      skip();
    } else if (any) {
      throw std::invalid_argument("necklace literal: expected + or - at position " + std::to_string(i));
    }
    std::string coef;
    while (i < s.size() && s[i] != '[' && s[i] != '*') coef += s[i++];
    coef.erase(std::remove_if(coef.begin(), coef.end(), [](char c) { return std::isspace(static_cast<unsigned char>(c)); }), coef.end());
    if (i < s.size() && s[i] == '*') ++i;
    skip();
    if (i >= s.size() || s[i] != '[') throw std::invalid_argument("necklace literal: expected '[' in '" + s + "'");
    auto close = s.find(']', i);
    if (close == std::string::npos) throw std::invalid_argument("necklace literal: missing ']' in '" + s + "'");
    Word w = A.parse_word(s.substr(i + 1, close - i - 1));
    i = close + 1;
    Q c = coef.empty() ? Q(1) : parse_rational(coef);
    for (const auto& [cw, v] : natural_projection(A, TensorElement::word(w)).terms) out.add(cw, v * c * sign);
    any = true;
  }
  return out;
}

std::vector<Word> words_up_to(const Alphabet& A, int max_weight)
{
  std::vector<Word> out;
  Word cur;
  std::function<void(int)> rec = [&](int wt) {
    if (!cur.empty()) out.push_back(cur);
    for (std::size_t l = 0; l < A.size(); ++l) {
      int lw = A[static_cast<int>(l)].weight;
      if (wt + lw > max_weight) continue;
      cur.push_back(static_cast<int>(l));
      rec(wt + lw);
      cur.pop_back();
    }
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Word> words_of(const Alphabet& A, int weight, int degree)
{
  std::vector<Word> out;
  if (weight == 0) {
    if (degree == 0) out.push_back({});
    return out;
  }
  Word cur;
  std::function<void(int, int)> rec = [&](int wt, int dg) {
    if (wt == weight) {
      if (dg == degree) out.push_back(cur);
      return;
    }
    for (std::size_t l = 0; l < A.size(); ++l) {
      const auto& L = A[static_cast<int>(l)];
      if (wt + L.weight > weight) continue;
      cur.push_back(static_cast<int>(l));
      rec(wt + L.weight, dg + L.degree);
      cur.pop_back();
    }
  };
  rec(0, 0);
  return out;
}

std::vector<Word> necklace_words(const Alphabet& A, int weight, int degree)
{
  std::vector<Word> out;
  Word canon;
  int s = 0;
  for (const auto& w : words_of(A, weight, degree))
    if (canonical_necklace(A, w, canon, s) && canon == w) out.push_back(w);
  return out;
}

void OneForm::add(const Word& a, int v, const Q& c)
{
  if (sgn(c) == 0) return;
  auto key = std::make_pair(a, v);
  auto [it, fresh] = terms.emplace(key, c);
  if (!fresh) {
    it->second += c;
    if (sgn(it->second) == 0) terms.erase(it);
  }
}

void OneForm::add(const OneForm& x, const Q& c)
{
  for (const auto& [k, v] : x.terms) add(k.first, k.second, v * c);
}

OneForm cyclic_derham(const Alphabet& A, const TensorElement& x)
{
  OneForm out;
  for (const auto& [w, c] : x.terms) {
    if (w.empty()) throw std::invalid_argument("cyclic_derham: constant term");
    const std::size_t m = w.size();
    int total = A.degree(w);
    int head = 0;
    for (std::size_t i = 0; i < m; ++i) {
      head += A[w[i]].degree;
      Word a(w.begin() + i + 1, w.end());
      a.insert(a.end(), w.begin(), w.begin() + i);
      out.add(a, w[i], c * parity_sign(head * (total - head)));
    }
  }
  return out;
}

TensorElement beta(const Alphabet& A, const OneForm& f)
{
  TensorElement out;
  for (const auto& [k, c] : f.terms) {
    const auto& [a, v] = k;
    Word av = a, va{v};
    av.push_back(v);
    va.insert(va.end(), a.begin(), a.end());
    if (av.size() == 1) continue;  // 1 (x) v
    out.add(av, c);
    out.add(va, -c * parity_sign(A.degree(a) * A[v].degree));
  }
  return out;
}

OneForm omega_to_forms(const Alphabet& A, const TensorPair& t)
{
  TensorElement check;
  for (const auto& [ab, c] : t.terms) {
    Word w = ab.first;
    w.insert(w.end(), ab.second.begin(), ab.second.end());
    check.add(w, c);
  }
  if (!check.is_zero()) throw std::logic_error("omega_to_forms: element is not in the kernel of multiplication");
  OneForm out;
  for (const auto& [ab, c] : t.terms) {
    const auto& [a, b] = ab;
    for (std::size_t j = 0; j < a.size(); ++j) {
      Word pre(a.begin(), a.begin() + j);
      Word post(a.begin() + j + 1, a.end());
      post.insert(post.end(), b.begin(), b.end());
      int e = A.degree(post) * (A.degree(pre) + A[a[j]].degree);
      Word r = post;
      r.insert(r.end(), pre.begin(), pre.end());
      out.add(r, a[j], c * parity_sign(e));
    }
  }
  return out;
}

OneForm forms_differential(const CobarAlgebra& R, const OneForm& f)
{
  const Alphabet& A = R.alphabet;
  // a dv  ->  av (x) 1 - a (x) v in Omega^1 R, then d (x) 1 + (-1)^{|x|} 1 (x) d
  TensorPair t;
  auto push = [&](const Word& x, const Word& y, const Q& c) {
    for (const auto& [u, e] : R.d(TensorElement::word(x)).terms) t.add(u, y, c * e);
    for (const auto& [u, e] : R.d(TensorElement::word(y)).terms) t.add(x, u, c * e * parity_sign(A.degree(x)));
  };
  for (const auto& [k, c] : f.terms) {
    const auto& [a, v] = k;
    Word av = a;
    av.push_back(v);
    push(av, {}, c);
    push(a, {v}, -c);
  }
  return omega_to_forms(A, t);
}

std::string format(const Alphabet& A, const OneForm& x)
{
  if (x.terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : x.terms) {
    if (!first) os << (sgn(c) < 0 ? " - " : " + ");
    else if (sgn(c) < 0) os << "-";
    first = false;
    Q a = abs(c);
    if (a != 1) os << a.get_str() << "*";
    os << "[" << A.format(k.first) << "](x)" << A[k.second].id;
  }
  return os.str();
}

bool WordBlock::coordinates(const TensorElement& y, SparseVec& out, int offset) const
{
  std::vector<std::pair<int, Q>> coords;
  for (const auto& [w, c] : y.terms) {
    auto it = pivot_index.find(w);
    if (it != pivot_index.end()) coords.emplace_back(it->second, c);
  }
  TensorElement rebuilt;
  for (const auto& [i, c] : coords) rebuilt.add(basis[i], c);
  if (rebuilt != y) return false;
  std::sort(coords.begin(), coords.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  for (auto& [i, c] : coords) out.emplace_back(i + offset, std::move(c));
  return true;
}

WordBlock rref_block(const std::vector<TensorElement>& spanning)
{
  std::map<Word, int> index;
  for (const auto& x : spanning)
    for (const auto& [w, c] : x.terms) index.emplace(w, 0);
  std::vector<Word> words;
  for (auto& [w, i] : index) {
    i = static_cast<int>(words.size());
    words.push_back(w);
  }
  Echelon e;
  for (const auto& x : spanning) {
    SparseVec v;
    for (const auto& [w, c] : x.terms) v.emplace_back(index[w], c);
    e.insert(std::move(v));
  }
  std::vector<SparseVec> rows = e.rows();
  std::vector<std::size_t> order(rows.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return rows[a].front().first > rows[b].front().first; });
  std::unordered_map<int, std::size_t> pivot_row;
  for (std::size_t k = 0; k < order.size(); ++k) {
    std::size_t r = order[k];
    // rows with larger pivots are already reduced
    SparseVec& v = rows[r];
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t t = 1; t < v.size(); ++t) {
        auto it = pivot_row.find(v[t].first);
        if (it == pivot_row.end()) continue;
        Q c = v[t].second;
        axpy(v, -c, rows[it->second]);
        changed = true;
        break;
      }
    }
    pivot_row[v.front().first] = r;
  }
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return rows[a].front().first < rows[b].front().first; });
  WordBlock out;
  for (std::size_t r : order) {
    TensorElement x;
    for (const auto& [i, c] : rows[r]) x.add(words[i], c);
    out.pivot_index[words[rows[r].front().first]] = static_cast<int>(out.basis.size());
    out.pivots.push_back(words[rows[r].front().first]);
    out.basis.push_back(std::move(x));
  }
  return out;
}

HodgeColumns::HodgeColumns(const CobarAlgebra& R) : R_(&R), H_(R.alphabet)
{
  for (const auto& l : R.alphabet.letters())
    if (l.degree < 0) throw std::invalid_argument("Hodge columns need letters of non-negative degree");
}

int HodgeColumns::max_letter_weight() const
{
  int m = 0;
  for (const auto& l : R_->alphabet.letters()) m = std::max(m, l.weight);
  return m;
}

const WordBlock& HodgeColumns::block(int q, int weight, int degree) const
{
  static const WordBlock empty;
  if (q < 0) return empty;
  auto key = std::make_pair(weight, degree);
  auto it = blocks_.find(key);
  if (it == blocks_.end()) {
    std::vector<Word> words = words_of(R_->alphabet, weight, degree);
    std::size_t maxlen = 0;
    for (const auto& w : words) maxlen = std::max(maxlen, w.size());
    std::vector<WordBlock> byq(maxlen + 1);
    // group by content; projections preserve it
    std::map<Word, std::vector<Word>> classes;
    for (const auto& w : words) {
      Word c = w;
      std::sort(c.begin(), c.end());
      classes[c].push_back(w);
    }
    std::vector<std::vector<TensorElement>> span(maxlen + 1);
    std::vector<WordBlock> merged(maxlen + 1);
    for (const auto& [content, ws] : classes) {
      const std::size_t n = content.size();
      std::vector<std::vector<TensorElement>> local(n + 1);
      for (const auto& w : ws) {
        auto comps = H_.components(w);
        for (std::size_t p = 0; p < comps.size(); ++p)
          if (!comps[p].is_zero()) local[p].push_back(std::move(comps[p]));
      }
      for (std::size_t p = 0; p <= n; ++p) {
        if (local[p].empty()) continue;
        WordBlock b = rref_block(local[p]);
        auto& m = merged[p];
        for (std::size_t i = 0; i < b.size(); ++i) {
          m.pivot_index[b.pivots[i]] = static_cast<int>(m.basis.size());
          m.pivots.push_back(b.pivots[i]);
          m.basis.push_back(std::move(b.basis[i]));
        }
      }
    }
    it = blocks_.emplace(key, std::move(merged)).first;
  }
  if (q >= static_cast<int>(it->second.size())) return empty;
  return it->second[q];
}

namespace {

// One piece of a Hodge column in a fixed internal degree.
struct Segment {
  int word_weight;
  int word_degree;
  int letter;  // -1 for R columns
  const WordBlock* block;
  int offset;
};

struct ColumnLayout {
  bool forms = false;
  int q = 0;
  std::map<int, std::vector<Segment>> by_degree;
  std::map<int, int> size;

  const Segment* find(int degree, int word_weight, int letter) const
  {
    auto it = by_degree.find(degree);
    if (it == by_degree.end()) return nullptr;
    for (const auto& s : it->second)
      if (s.word_weight == word_weight && s.letter == letter) return &s;
    return nullptr;
  }
};

ColumnLayout layout_column(const HodgeColumns& H, bool forms, int q, WeightWindow window, int max_internal)
{
  const Alphabet& A = H.algebra().alphabet;
  ColumnLayout L;
  L.forms = forms;
  L.q = q;
  for (int i = 0; i <= max_internal; ++i) {
    auto& segs = L.by_degree[i];
    int off = 0;
    for (int w = window.lo; w <= window.hi; ++w) {
      if (!forms) {
        if (q == 0 || w == 0) continue;
        const WordBlock& b = H.block(q, w, i);
        if (b.size() == 0) continue;
        segs.push_back({w, i, -1, &b, off});
        off += static_cast<int>(b.size());
      } else {
        for (std::size_t v = 0; v < A.size(); ++v) {
          const auto& l = A[static_cast<int>(v)];
          int wb = w - l.weight, db = i - l.degree;
          if (wb < 0 || db < 0) continue;
          if ((wb == 0) != (q == 0)) continue;
          const WordBlock& b = H.block(q, wb, db);
          if (b.size() == 0) continue;
          segs.push_back({wb, db, static_cast<int>(v), &b, off});
          off += static_cast<int>(b.size());
        }
      }
    }
    L.size[i] = off;
  }
  return L;
}

std::shared_ptr<GradedSpace> column_space(const Alphabet& A, const ColumnLayout& L, int c)
{
  auto sp = std::make_shared<GradedSpace>();
  for (const auto& [i, segs] : L.by_degree) {
    auto& blk = sp->blocks[i];
    for (const auto& s : segs)
      for (const auto& pv : s.block->pivots) {
        std::string label = "c" + std::to_string(c) + ":q" + std::to_string(L.q) + ":[" + A.format(pv) + "]";
        if (s.letter >= 0) label += "d" + A[s.letter].id;
        blk.push_back(std::move(label));
      }
  }
  return sp;
}

[[noreturn]] void leave_column(const char* what, int q, int degree)
{
  throw std::logic_error(std::string(what) + " leaves Hodge column q=" + std::to_string(q) + " at internal degree " +
                         std::to_string(degree));
}

SparseVec coords_R(const Alphabet& A, const ColumnLayout& L, int degree, const TensorElement& y, const char* what)
{
  std::map<int, TensorElement> by_weight;
  for (const auto& [w, c] : y.terms) {
    if (A.degree(w) != degree) leave_column(what, L.q, degree);
    by_weight[A.weight(w)].add(w, c);
  }
  SparseVec out;
  for (const auto& [wt, part] : by_weight) {
    const Segment* s = L.find(degree, wt, -1);
    if (!s || !s->block->coordinates(part, out, s->offset)) leave_column(what, L.q, degree);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

SparseVec coords_forms(const Alphabet& A, const ColumnLayout& L, int degree, const OneForm& y, const char* what)
{
  std::map<std::pair<int, int>, TensorElement> parts;
  for (const auto& [k, c] : y.terms) {
    if (A.degree(k.first) + A[k.second].degree != degree) leave_column(what, L.q, degree);
    parts[{A.weight(k.first), k.second}].add(k.first, c);
  }
  SparseVec out;
  for (const auto& [key, part] : parts) {
    const Segment* s = L.find(degree, key.first, key.second);
    if (!s || !s->block->coordinates(part, out, s->offset)) leave_column(what, L.q, degree);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

OneForm as_form(const TensorElement& b, int letter)
{
  OneForm f;
  for (const auto& [w, c] : b.terms) f.add(w, letter, c);
  return f;
}

}  // namespace

HodgeBicomplex build_hodge_bicomplex(const HodgeColumns& H, int p, int columns, WeightWindow window, int max_degree)
{
  if (p < 0) throw std::invalid_argument("Hodge index must be >= 0");
  if (columns < 1) throw std::invalid_argument("need at least one column");
  const CobarAlgebra& R = H.algebra();
  const Alphabet& A = R.alphabet;
  HodgeBicomplex out;
  out.p = p;
  out.window = window;
  out.max_degree = max_degree;
  std::vector<ColumnLayout> layouts;
  for (int c = 0; c < columns; ++c) {
    int q = p + c / 2;
    out.column_q.push_back(q);
    layouts.push_back(layout_column(H, c % 2 == 1, q, window, max_degree - c));
  }
  std::vector<SpacePtr> spaces;
  for (int c = 0; c < columns; ++c) spaces.push_back(column_space(A, layouts[c], c));

  for (int c = 0; c < columns; ++c) {
    const auto& L = layouts[c];
    LinearMap d(spaces[c], spaces[c], -1);
    Q sign = (c % 2 == 0) ? Q(1) : Q(-1);
    for (const auto& [i, segs] : L.by_degree) {
      auto& cols = d.columns[i];
      for (const auto& s : segs)
        for (std::size_t k = 0; k < s.block->size(); ++k) {
          SparseVec v;
          if (!L.forms)
            v = coords_R(A, L, i - 1, R.d(s.block->basis[k]), "cobar differential");
          else
            v = coords_forms(A, L, i - 1, forms_differential(R, as_form(s.block->basis[k], s.letter)), "forms differential");
          cols[s.offset + k] = scaled(v, sign);
        }
    }
    out.realization.columns.emplace_back(spaces[c], std::move(d));
  }
  for (int c = 1; c < columns; ++c) {
    const auto& src = layouts[c];
    const auto& tgt = layouts[c - 1];
    LinearMap h(spaces[c], spaces[c - 1], 0);
    for (const auto& [i, segs] : src.by_degree) {
      auto& cols = h.columns[i];
      for (const auto& s : segs)
        for (std::size_t k = 0; k < s.block->size(); ++k) {
          SparseVec v;
          if (src.forms) {
            TensorElement y = beta(A, as_form(s.block->basis[k], s.letter));
            if (tgt.q == 0) {
              if (!y.is_zero()) leave_column("beta", 0, i);
            } else {
              v = coords_R(A, tgt, i, y, "beta");
            }
          } else {
            v = coords_forms(A, tgt, i, cyclic_derham(A, s.block->basis[k]), "cyclic de Rham map");
          }
          cols[s.offset + k] = std::move(v);
        }
    }
    out.realization.horizontal.push_back(std::move(h));
  }
  out.realization.validate();
  return out;
}

Bicomplex build_plain_x2(const CobarAlgebra& R, WeightWindow window, int max_degree)
{
  const Alphabet& A = R.alphabet;
  // column 0: nonempty words; column 1: (word, letter)
  auto s0 = std::make_shared<GradedSpace>();
  auto s1 = std::make_shared<GradedSpace>();
  std::map<int, std::map<Word, int>> idx0;
  std::map<int, std::map<std::pair<Word, int>, int>> idx1;
  for (int w = window.lo; w <= window.hi; ++w) {
    for (const auto& word : words_up_to(A, w)) {
      if (A.weight(word) != w) continue;
      int d = A.degree(word);
      if (d <= max_degree) {
        idx0[d][word] = 0;
      }
    }
    for (std::size_t v = 0; v < A.size(); ++v) {
      int wb = w - A[static_cast<int>(v)].weight;
      if (wb < 0) continue;
      std::vector<Word> ws = wb == 0 ? std::vector<Word>{Word{}} : words_up_to(A, wb);
      for (const auto& word : ws) {
        if (A.weight(word) != wb) continue;
        int d = A.degree(word) + A[static_cast<int>(v)].degree;
        if (d + 1 <= max_degree) idx1[d][{word, static_cast<int>(v)}] = 0;
      }
    }
  }
  for (auto& [d, m] : idx0)
    for (auto& [w, i] : m) {
      i = static_cast<int>(s0->blocks[d].size());
      s0->blocks[d].push_back("[" + A.format(w) + "]");
    }
  for (auto& [d, m] : idx1)
    for (auto& [k, i] : m) {
      i = static_cast<int>(s1->blocks[d].size());
      s1->blocks[d].push_back("[" + A.format(k.first) + "]d" + A[k.second].id);
    }
  auto vec0 = [&](int d, const TensorElement& y) {
    std::map<int, Q> m;
    for (const auto& [w, c] : y.terms) {
      if (w.empty()) continue;  // reduced complex
      auto it = idx0[d].find(w);
      if (it == idx0[d].end()) throw std::logic_error("plain X2: word outside truncation");
      m[it->second] += c;
    }
    return sparse_from_map(m);
  };
  auto vec1 = [&](int d, const OneForm& y) {
    std::map<int, Q> m;
    for (const auto& [k, c] : y.terms) {
      auto it = idx1[d].find(k);
      if (it == idx1[d].end()) throw std::logic_error("plain X2: form outside truncation");
      m[it->second] += c;
    }
    return sparse_from_map(m);
  };
  LinearMap d0(s0, s0, -1), d1(s1, s1, -1), h(s1, s0, 0);
  for (auto& [d, m] : idx0)
    for (auto& [w, i] : m) d0.columns[d][i] = vec0(d - 1, R.d(TensorElement::word(w)));
  for (auto& [d, m] : idx1)
    for (auto& [k, i] : m) {
      OneForm f;
      f.add(k.first, k.second, 1);
      d1.columns[d][i] = scaled(vec1(d - 1, forms_differential(R, f)), Q(-1));
      h.columns[d][i] = vec0(d, beta(A, f));
    }
  Bicomplex b;
  b.columns.emplace_back(s0, std::move(d0));
  b.columns.emplace_back(s1, std::move(d1));
  b.horizontal.push_back(std::move(h));
  b.validate();
  return b;
}

bool truncation_safe(const CobarAlgebra& R, int p, int n, const Truncation& t)
{
  if (n < 0 || n > t.max_degree) return false;
  if (!R.certified) return false;
  int need = p + n + (R.weight_graded ? 0 : 1);
  return t.max_weight >= need;
}

namespace {

std::vector<WeightWindow> windows_for(const CobarAlgebra& R, const Truncation& t)
{
  std::vector<WeightWindow> out;
  if (R.weight_graded)
    for (int w = 1; w <= t.max_weight; ++w) out.push_back({w, w});
  else
    out.push_back({1, t.max_weight});
  return out;
}

std::vector<HomologyRow> rows_from(const HodgeColumns& H, int p, int columns, const Truncation& t)
{
  const CobarAlgebra& R = H.algebra();
  std::vector<HomologyRow> rows(t.max_degree + 1);
  for (int n = 0; n <= t.max_degree; ++n) {
    rows[n].p = p;
    rows[n].degree = n;
    rows[n].safe = truncation_safe(R, p, n, t);
  }
  for (const auto& win : windows_for(R, t)) {
    auto bc = build_hodge_bicomplex(H, p, columns, win, t.max_degree + 1);
    ChainComplex tot = totalize(bc.realization, t.max_degree + 1);
    for (int n = 0; n <= t.max_degree; ++n) {
      std::size_t h = homology_dim(tot, n);
      rows[n].dim += h;
      if (R.weight_graded && h) rows[n].by_weight[win.lo] = h;
    }
  }
  return rows;
}

}  // namespace

std::vector<HomologyRow> hochschild_hodge(const HodgeColumns& H, int p, const Truncation& t)
{
  return rows_from(H, p, 2, t);
}

std::vector<HomologyRow> cyclic_hodge(const HodgeColumns& H, int p, const Truncation& t)
{
  return rows_from(H, p, t.max_degree + 3, t);
}

std::vector<HomologyRow> hochschild_plain(const CobarAlgebra& R, const Truncation& t)
{
  std::vector<HomologyRow> rows(t.max_degree + 1);
  for (int n = 0; n <= t.max_degree; ++n) {
    rows[n].p = -1;
    rows[n].degree = n;
    rows[n].safe = R.certified;
  }
  for (const auto& win : windows_for(R, t)) {
    Bicomplex b = build_plain_x2(R, win, t.max_degree + 1);
    ChainComplex tot = totalize(b, t.max_degree + 1);
    for (int n = 0; n <= t.max_degree; ++n) {
      std::size_t h = homology_dim(tot, n);
      rows[n].dim += h;
      if (R.weight_graded && h) rows[n].by_weight[win.lo] = h;
    }
  }
  return rows;
}

namespace {

// Offset of column 2 inside total degree n of a totalized bicomplex.
int column2_offset(const Bicomplex& b, int n)
{
  int off = 0;
  for (int c = 0; c < 2 && c < static_cast<int>(b.columns.size()); ++c) off += static_cast<int>(b.columns[c].dim(n - c));
  return off;
}

SpacePtr homology_space(const std::map<int, HomologyGroup>& groups)
{
  auto sp = std::make_shared<GradedSpace>();
  for (const auto& [n, g] : groups) {
    auto& blk = sp->blocks[n];
    for (std::size_t k = 0; k < g.dim(); ++k) blk.push_back("h" + std::to_string(k));
  }
  return sp;
}

}  // namespace

LesReport connes_les(const HodgeColumns& H, int p, const Truncation& t)
{
  const CobarAlgebra& R = H.algebra();
  const int D = t.max_degree;
  LesReport rep;
  rep.p = p;
  struct Acc {
    std::string position;
    int degree = 0;
    long defect = 0;
    bool failed = false;
  };
  std::map<std::pair<std::string, int>, Acc> agg;
  bool b_iso = true;
  for (const auto& win : windows_for(R, t)) {
    auto x2 = build_hodge_bicomplex(H, p, 2, win, D + 1);
    auto x = build_hodge_bicomplex(H, p, D + 3, win, D + 1);
    auto xn = build_hodge_bicomplex(H, p + 1, D + 1, win, D);
    ChainComplex t2 = totalize(x2.realization, D + 1);
    ChainComplex tx = totalize(x.realization, D + 1);
    ChainComplex tn = totalize(xn.realization, D);
    std::map<int, HomologyGroup> hh, hc, hcn;
    for (int n = 0; n <= D; ++n) {
      hh.emplace(n, HomologyGroup(t2, n));
      hc.emplace(n, HomologyGroup(tx, n));
    }
    for (int m = 0; m <= D - 1; ++m) hcn.emplace(m, HomologyGroup(tn, m));
    for (const auto& [n, g] : hh) rep.hh_dims[n] += g.dim();
    for (const auto& [n, g] : hc) rep.hc_dims[n] += g.dim();
    for (const auto& [m, g] : hcn) rep.hc_next_dims[m] += g.dim();

    SpacePtr s_hh = homology_space(hh), s_hc = homology_space(hc), s_hcn = homology_space(hcn);
    LinearMap I(s_hh, s_hc, 0), S(s_hc, s_hcn, -2), B(s_hcn, s_hh, 1);
    for (const auto& [n, g] : hh)
      for (std::size_t k = 0; k < g.dim(); ++k) I.columns[n][k] = hc.at(n).class_of(g.representatives()[k]);
    for (const auto& [n, g] : hc) {
      if (n - 2 < 0 || !hcn.count(n - 2)) {
        S.columns[n].assign(g.dim(), SparseVec{});
        continue;
      }
      int off = column2_offset(x.realization, n);
      for (std::size_t k = 0; k < g.dim(); ++k) {
        SparseVec z;
        for (const auto& [i, c] : g.representatives()[k])
          if (i >= off) z.emplace_back(i - off, c);
        S.columns[n][k] = hcn.at(n - 2).class_of(z);
      }
    }
    for (const auto& [m, g] : hcn) {
      int off_src = column2_offset(x.realization, m + 2);
      int off_tgt = column2_offset(x.realization, m + 1);
      for (std::size_t k = 0; k < g.dim(); ++k) {
        SparseVec lifted;
        for (const auto& [i, c] : g.representatives()[k]) lifted.emplace_back(i + off_src, c);
        SparseVec y = tx.d().apply(m + 2, lifted);
        for (const auto& [i, c] : y)
          if (i >= off_tgt) throw std::logic_error("connecting map: lift does not reduce to the first two columns");
        B.columns[m][k] = hh.at(m + 1).class_of(y);
      }
    }
    auto reports = verify_exact_sequence({B, I, S, B});
    for (const auto& r : reports) {
      std::string pos;
      bool safe = false;
      int n = r.degree;
      if (r.junction == 1) {
        pos = "HH";
        safe = truncation_safe(R, p + 1, n - 1, t) && truncation_safe(R, p, n, t) && n <= D;
        safe = safe || (n == 0 && truncation_safe(R, p, 0, t));
      } else if (r.junction == 2) {
        pos = "HC(p)";
        safe = truncation_safe(R, p, n, t) && (n - 2 < 0 || truncation_safe(R, p + 1, n - 2, t));
      } else {
        pos = "HC(p+1)";
        safe = n + 2 <= D && truncation_safe(R, p + 1, n, t) && truncation_safe(R, p, n + 2, t) &&
               truncation_safe(R, p, n + 1, t);
      }
      if (!safe) continue;
      auto& j = agg[{pos, n}];
      j.position = pos;
      j.degree = n;
      j.defect += r.defect;
      if (!r.exact) j.failed = true;
    }
    if (p == 0) {
      for (const auto& [m, g] : hcn) {
        if (!truncation_safe(R, 1, m, t) || !truncation_safe(R, 0, m + 1, t)) continue;
        const auto& cols = B.block(m);
        if (g.dim() != hh.at(m + 1).dim() || rank_of(cols) != g.dim()) b_iso = false;
      }
    }
  }
  for (auto& [k, j] : agg) {
    (void)k;
    rep.junctions.push_back({j.position, j.degree, !j.failed, j.defect});
  }
  rep.all_exact = true;
  for (const auto& j : rep.junctions)
    if (!j.exact) rep.all_exact = false;
  if (p == 0) rep.b_is_identity = b_iso;
  return rep;
}

NecklaceHodge::NecklaceHodge(const HodgeColumns& H) : H_(&H) {}

const WordBlock& NecklaceHodge::block(int p, int weight, int degree) const
{
  static const WordBlock empty;
  auto key = std::make_tuple(p, weight, degree);
  auto it = blocks_.find(key);
  if (it != blocks_.end()) return it->second;
  const Alphabet& A = H_->algebra().alphabet;
  std::vector<Word> necks = necklace_words(A, weight, degree);
  std::size_t maxlen = 0;
  for (const auto& w : necks) maxlen = std::max(maxlen, w.size());
  std::vector<std::vector<TensorElement>> span(maxlen + 1);
  for (const auto& w : necks) {
    const auto& comps = H_->projector().cached(w);
    for (std::size_t q = 0; q < comps.size(); ++q) {
      NecklaceElement y = natural_projection(A, comps[q]);
      if (!y.is_zero()) span[q].push_back(lift(y));
    }
  }
  for (std::size_t q = 0; q <= maxlen; ++q)
    blocks_.emplace(std::make_tuple(static_cast<int>(q), weight, degree), rref_block(span[q]));
  it = blocks_.find(key);
  if (it == blocks_.end()) return blocks_.emplace(key, WordBlock{}).first->second;
  return it->second;
}

NecklaceElement NecklaceHodge::component(const NecklaceElement& x, int p) const
{
  const Alphabet& A = H_->algebra().alphabet;
  TensorElement y;
  for (const auto& [w, c] : x.terms) {
    const auto& comps = H_->projector().cached(w);
    if (p >= 0 && p < static_cast<int>(comps.size())) y.add(comps[p], c);
  }
  return natural_projection(A, y);
}

std::vector<NecklaceElement> NecklaceHodge::decompose(const NecklaceElement& x) const
{
  const Alphabet& A = H_->algebra().alphabet;
  auto comps = H_->projector().decompose(lift(x));
  std::vector<NecklaceElement> out;
  for (const auto& c : comps) out.push_back(natural_projection(A, c));
  return out;
}

NecklaceElement NecklaceHodge::d(const NecklaceElement& x) const
{
  return natural_projection(H_->algebra().alphabet, H_->algebra().d(lift(x)));
}


SparseVec NecklaceHodge::Complex::coordinates(int degree, const NecklaceElement& x) const
{
  SparseVec out;
  if (x.is_zero()) return out;
  auto it = segments.find(degree);
  if (it == segments.end()) throw std::logic_error("necklace element outside the truncated complex");
  std::map<int, TensorElement> by_weight;
  for (const auto& [w, c] : x.terms) by_weight[alphabet->weight(w)].add(w, c);
  for (const auto& [wt, part] : by_weight) {
    int off = 0;
    bool placed = false;
    for (const auto& [w, b] : it->second) {
      if (w == wt) {
        if (!b->coordinates(part, out, off)) break;
        placed = true;
        break;
      }
      off += static_cast<int>(b->size());
    }
    if (!placed)
      throw std::logic_error("necklace element outside the Hodge piece in degree " + std::to_string(degree));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

NecklaceElement NecklaceHodge::Complex::element(int degree, const SparseVec& v) const
{
  NecklaceElement out;
  auto it = segments.find(degree);
  if (it == segments.end()) {
    if (v.empty()) return out;
    throw std::out_of_range("necklace complex: degree not built");
  }
  for (const auto& [i, c] : v) {
    int off = 0;
    bool found = false;
    for (const auto& [w, b] : it->second) {
      (void)w;
      int n = static_cast<int>(b->size());
      if (i < off + n) {
        for (const auto& [word, e] : b->basis[i - off].terms) out.add(word, c * e);
        found = true;
        break;
      }
      off += n;
    }
    if (!found) throw std::out_of_range("necklace complex: coordinate out of range");
  }
  return out;
}

std::shared_ptr<const NecklaceHodge::Complex> NecklaceHodge::complex(int p, WeightWindow window, int lo_deg,
                                                                     int hi_deg) const
{
  const Alphabet& A = H_->algebra().alphabet;
  auto out = std::make_shared<Complex>();
  out->alphabet = &A;
  auto sp = std::make_shared<GradedSpace>();
  for (int n = lo_deg - 1; n <= hi_deg; ++n) {
    auto& segs = out->segments[n];
    auto& labels = sp->blocks[n];
    for (int w = std::max(window.lo, 1); w <= window.hi; ++w) {
      const WordBlock& b = block(p, w, n);
      if (b.size() == 0) continue;
      segs.emplace_back(w, &b);
      for (const auto& pv : b.pivots) labels.push_back("nat" + std::to_string(p) + ":[" + A.format(pv) + "]");
    }
  }
  LinearMap d(sp, sp, -1);
  for (int n = lo_deg; n <= hi_deg; ++n) {
    auto& cols = d.columns[n];
    cols.clear();
    for (const auto& [w, b] : out->segments[n]) {
      (void)w;
      for (const auto& x : b->basis) {
        NecklaceElement y;
        for (const auto& [word, c] : x.terms) y.add(word, c);
        cols.push_back(out->coordinates(n - 1, this->d(y)));
      }
    }
  }
  out->chain = ChainComplex(sp, std::move(d));
  return out;
}

}  // namespace hodge
