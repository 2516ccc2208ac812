#pragma once

#include "hodge/linear.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

namespace hodge {

struct Letter {
  std::string id;
  int degree = 0;
  int weight = 1;
};

// A word is a list of letter indices into an Alphabet.
using Word = std::vector<int>;

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept;
};

class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<Letter> letters);  // weight >= 1, unique ids

  std::size_t size() const { return letters_.size(); }
  const Letter& operator[](int i) const { return letters_[i]; }
  const std::vector<Letter>& letters() const { return letters_; }
  int index_of(const std::string& id) const;  // throws if unknown

  int degree(const Word& w) const;
  int weight(const Word& w) const;
  bool odd(int letter) const { return letters_[letter].degree % 2 != 0; }
  std::string format(const Word& w) const;       // "v,w,w"
  Word parse_word(const std::string& s) const;   // comma or space separated ids

 private:
  std::vector<Letter> letters_;
  std::map<std::string, int> index_;
};

// Finite rational combination of words.
class TensorElement {
 public:
  std::map<Word, Q> terms;

  TensorElement() = default;
  static TensorElement word(const Word& w, const Q& c = 1);
  static TensorElement unit(const Q& c = 1) { return word({}, c); }

  void add(const Word& w, const Q& c);
  void add(const TensorElement& x, const Q& c = 1);
  bool is_zero() const { return terms.empty(); }
  bool operator==(const TensorElement& o) const { return terms == o.terms; }
  bool operator!=(const TensorElement& o) const { return !(*this == o); }
  TensorElement scaled(const Q& c) const;
  // Word length if all words share one, else -1 (and -2 when empty).
  int common_length() const;
};

TensorElement operator+(const TensorElement& a, const TensorElement& b);
TensorElement operator-(const TensorElement& a, const TensorElement& b);
TensorElement multiply(const TensorElement& a, const TensorElement& b);
// Graded commutator ab - (-1)^{|a||b|} ba, termwise.
TensorElement commutator(const Alphabet& A, const TensorElement& a, const TensorElement& b);
std::string format(const Alphabet& A, const TensorElement& x);

using Perm = std::vector<int>;  // one-line notation, 0-based

// Sign picked up when the factor in slot i is moved to slot perm[i].
int koszul_sign(const Perm& perm, const std::vector<int>& degrees);
Perm inverse(const Perm& p);
Perm compose(const Perm& s, const Perm& t);  // (s t)(i) = s(t(i))
std::vector<Perm> all_permutations(int n);
int descents(const Perm& p);

// Element of Q[S_n], acting on V^{(x) n} from the right:
// (x_1...x_n).s = +- x_{s(1)}...x_{s(n)}.
struct SymOperator {
  int arity = 0;
  std::map<Perm, Q> coeffs;

  static SymOperator identity(int n);
  void add(const Perm& p, const Q& c);
  bool operator==(const SymOperator& o) const { return arity == o.arity && coeffs == o.coeffs; }
};
SymOperator operator*(const SymOperator& a, const SymOperator& b);
SymOperator operator+(const SymOperator& a, const SymOperator& b);

TensorElement act_right(const Alphabet& A, const TensorElement& x, const SymOperator& s);

// a^{p,j}_n: coefficient of X^p in binom(X - j + n, n).
Q stirling_coefficient(int n, int p, int j);
SymOperator eulerian_idempotent(int n, int p);

// Eulerian projections of single words, computed by counting permutations
// per descent class in machine integers. Component p of a word of length n
// lives at index p (1..n); the empty word is its own component 0.
class HodgeProjector {
 public:
  explicit HodgeProjector(const Alphabet& A) : A_(&A) {}
  std::vector<TensorElement> components(const Word& w) const;
  const std::vector<TensorElement>& cached(const Word& w) const;
  TensorElement project(const TensorElement& x, int p) const;
  // All components of a (possibly mixed-length) element; index = p.
  std::vector<TensorElement> decompose(const TensorElement& x) const;
  const Alphabet& alphabet() const { return *A_; }

 private:
  struct PermTable {
    std::vector<Perm> perms;
    std::vector<int> des;
    std::vector<std::vector<Q>> a;  // a[p][j-1]
  };
  const PermTable& table(int n) const;

  const Alphabet* A_;
  mutable std::map<int, PermTable> tables_;
  mutable std::unordered_map<Word, std::vector<TensorElement>, WordHash> cache_;
};

std::vector<Word> lyndon_words(int alphabet_size, int length);
// Bracketed Lyndon words of the given length plus [l,l] for odd Lyndon l of
// half the length.
std::vector<TensorElement> lyndon_basis(const Alphabet& A, int length);
TensorElement standard_bracketing(const Alphabet& A, const Word& lyndon);

bool is_in_sym_p(const HodgeProjector& H, const TensorElement& x, int p);
bool is_lie(const HodgeProjector& H, const TensorElement& x);
TensorElement symmetrize(const HodgeProjector& H, const std::vector<TensorElement>& factors);
// Requires all words of the same length.
std::map<int, TensorElement> pbw_decompose(const HodgeProjector& H, const TensorElement& x);

}  // namespace hodge
