// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include "common.hpp"
#include "forms_oracle.hpp"
#include "free_oracles.hpp"
#include "hodge/kassel.hpp"
#include "hodge/koszul.hpp"
#include "hodge/rep.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>

using namespace hodge;
using testing_support::fixture;
using testing_support::lie;

namespace {

// All comparisons are exact over Q; no criterion admits a tolerance.
constexpr int kTolerance = 0;

struct Outcome {
  bool pass = false;
  std::string detail;
};

Outcome necklace_value()
{
  auto f = fixture("necklace2");
  const Alphabet& A = f->algebra.alphabet;
  NecklaceElement b = f->poisson->necklace_bracket(parse_necklace(A, "[v,v,v]"), parse_necklace(A, "[w,w,w]"));
  return {b == parse_necklace(A, "9[v,v,w,w]"), "{[v^3],[w^3]} = " + format(A, b)};
}

Outcome necklace_profile()
{
  auto f = fixture("necklace2");
  const Alphabet& A = f->algebra.alphabet;
  NecklaceElement b = f->poisson->necklace_bracket(parse_necklace(A, "[v,v,v]"), parse_necklace(A, "[w,w,w]"));
  bool bounded = true, below = false;
  NecklaceElement sum;
  std::ostringstream os;
  for (const auto& [p, c] : hodge_profile(*f->necklaces, b)) {
    if (c.is_zero()) continue;
    bounded = bounded && p <= 4;
    below = below || p != 4;
    for (const auto& [w, a] : c.terms) sum.add(w, a);
    os << " p=" << p << ": " << format(A, c) << ";";
  }
  return {bounded && below && sum == b, "profile" + os.str()};
}

Outcome inclusions()
{
  auto f = fixture("necklace2", 6);
  auto r = check_bracket_inclusions(*f->poisson, *f->columns, 6, 6);
  auto s = check_form_inclusions(*f->poisson, *f->columns, 6, 6);
  std::ostringstream os;
  os << r.pairs_checked << " bracket pairs, " << r.failure_count << " failures; " << s.pairs_checked << " form pairs, "
     << s.failure_count << " failures";
  return {r.pairs_checked > 0 && s.pairs_checked > 0 && r.failure_count == 0 && s.failure_count == 0, os.str()};
}

Outcome eulerian()
{
  std::size_t identities = 0, failed = 0;
  for (int n = 1; n <= 6; ++n) {
    std::vector<SymOperator> e;
    SymOperator sum;
    sum.arity = n;
    for (int p = 1; p <= n; ++p) e.push_back(eulerian_idempotent(n, p));
    for (int p = 0; p < n; ++p) {
      sum = sum + e[p];
      for (int q = 0; q < n; ++q) {
        SymOperator prod = e[p] * e[q];
        ++identities;
        if (p == q ? !(prod == e[p]) : !prod.coeffs.empty()) ++failed;
      }
    }
    ++identities;
    if (!(sum == SymOperator::identity(n))) ++failed;
    if (n < 2) continue;
    SymOperator N = testing_support::cyclic_norm(n);
    for (int p = 1; p <= n; ++p) {
      SymOperator right;
      right.arity = n;
      if (p >= 2) right = N * testing_support::shift_up(eulerian_idempotent(n - 1, p - 1));
      ++identities;
      if (!(e[p - 1] * N == right)) ++failed;
    }
  }
  return {failed == 0, std::to_string(identities) + " identities, " + std::to_string(failed) + " failed"};
}

Outcome pbw_witt()
{
  Alphabet A = testing_support::two_letters();
  HodgeProjector H(A);
  const long expected[] = {2, 1, 2, 3, 6, 9};
  bool ok = true;
  std::ostringstream os;
  os << "dim L_n:";
  for (int n = 1; n <= 6; ++n) {
    auto words = testing_support::all_words(2, n);
    std::size_t total = 0, lie_dim = 0;
    for (int p = 1; p <= n; ++p) {
      std::size_t d = testing_support::image_dim(H, words, p);
      total += d;
      if (p == 1) lie_dim = d;
    }
    long lyndon = static_cast<long>(lyndon_words(2, n).size());
    ok = ok && total == (std::size_t(1) << n) && static_cast<long>(lie_dim) == expected[n - 1] &&
         lyndon == expected[n - 1] && testing_support::witt(2, n) == expected[n - 1];
    os << " " << lie_dim;
  }
  return {ok, os.str()};
}

Outcome connes()
{
  bool ok = true;
  std::size_t junctions = 0;
  std::ostringstream os;
  for (const char* name : {"abelian1", "abelian2", "sl2"}) {
    const int W = 6;
    auto f = fixture(name, W);
    for (int p = 0; p <= 2; ++p) {
      LesReport L = connes_les(*f->columns, p, {W, 3});
      junctions += L.junctions.size();
      bool good = !L.junctions.empty() && L.all_exact;
      for (const auto& j : L.junctions) good = good && j.defect == kTolerance;
      if (p == 0) good = good && L.b_is_identity.value_or(false);
      if (!good) os << " " << name << " p=" << p << " not exact;";
      ok = ok && good;
    }
  }
  return {ok, std::to_string(junctions) + " safe junctions" + os.str()};
}

Outcome two_routes()
{
  bool ok = true;
  std::size_t rows = 0;
  std::ostringstream os;
  for (const char* name : {"abelian1", "abelian2", "sl2"}) {
    RouteReport r = cross_validate(lie(name), 3, {6, 3});
    for (const auto& row : r.rows)
      if (row.safe) {
        ++rows;
        if (!row.equal())
          os << " " << name << " " << row.kind << "(" << row.p << ")_" << row.degree << ": " << row.cyclic << " vs "
             << row.kassel << ";";
      }
    ok = ok && r.all_equal();
  }
  return {ok, std::to_string(rows) + " safe rows compared" + os.str()};
}

Outcome adams()
{
  auto a = check_adams_law(testing_support::two_letters(), 4);
  auto b = check_adams_law(Alphabet({{"a", 0, 1}, {"b", 1, 1}}), 4);
  std::ostringstream os;
  os << a.words + b.words << " words, " << a.eigen_failed + b.eigen_failed << " eigenvalue failures, "
     << a.compose_failed + b.compose_failed << " composition failures";
  return {a.ok() && b.ok(), os.str()};
}

Outcome gates()
{
  bool ok = true;
  std::ostringstream os;
  for (const char* name : {"necklace2", "sl2-unimodular", "s2dual"}) {
    auto f = fixture(name);
    GateReport g = necklace_gates(*f->poisson, 4);
    bool good = g.ok() && g.antisymmetry_checked > 0 && g.jacobi_checked > 0;
    os << " " << name << ": " << g.antisymmetry_checked << "/" << g.jacobi_checked << "/" << g.chain_checked
       << (good ? "" : " FAILED") << ";";
    ok = ok && good;
  }
  return {ok, "antisymmetry/jacobi/chain checks" + os.str()};
}

Outcome abelian_graded()
{
  auto f = fixture("abelian2");
  ClassBracket B(*f->poisson, *f->necklaces, 6, 1);
  bool ok = true;
  std::size_t pairs = 0, nonzero = 0, mismatches = 0;
  for (int p = 1; p <= 3; ++p)
    for (int q = 1; q <= 3; ++q)
      for (int a = 0; a <= 1; ++a)
        for (int b = 0; b + a <= 1; ++b) {
          std::vector<SparseVec> images;
          for (const auto& x : B.classes(p, a))
            for (const auto& y : B.classes(q, b)) {
              auto res = B.bracket(x, y);
              ++pairs;
              if (!res.computed || !res.consistent) ok = false;
              for (const auto& [r, v] : res.classes) {
                if (r != p + q - 2) ok = false;
                images.push_back(v);
              }
            }
          std::size_t oracle = forms::image_rank(p, a, q, b);
          if (rank_of(images) != oracle) ++mismatches;
          if (oracle) ++nonzero;
        }
  std::ostringstream os;
  os << pairs << " class pairs, " << nonzero << " nonzero blocks, " << mismatches << " rank mismatches against forms";
  return {ok && mismatches == 0 && nonzero > 0, os.str()};
}

Outcome drinfeld()
{
  LieAlgebraSpec g = lie("sl2");
  auto f = fixture("necklace2");
  DerivedRep D(f->algebra, g);
  InvariantPolynomial K = killing_form(g);
  RepPoisson B(D, *f->poisson, K);
  TraceReport r = verify_trace_lie_hom(*f->poisson, *f->necklaces, D, B, K, 2, 0);
  std::size_t exact = 0, certified = 0;
  std::string sample;
  for (const auto& p : r.pairs) {
    if (p.exact)
      ++exact;
    else if (p.boundary) {
      ++certified;
      if (sample.empty()) sample = "; e.g. d(" + D.ring().format(p.certificate) + ")";
    }
  }
  std::ostringstream os;
  os << r.pairs.size() << " pairs: " << exact << " exact, " << certified << " boundaries with certificate" << sample;
  return {r.ok(), os.str()};
}

Outcome conjecture_probe()
{
  auto run = [] {
    auto f = fixture("s2dual", 6);
    ClassBracket B(*f->poisson, *f->necklaces, 6, 3);
    return filtration_table(B, 3, 3);
  };
  auto a = run(), b = run();
  bool consistent = !a.empty(), same = a.size() == b.size();
  std::ostringstream os;
  for (std::size_t i = 0; i < a.size(); ++i) {
    consistent = consistent && a[i].consistent && !a[i].verdict.empty();
    if (same)
      same = a[i].p == b[i].p && a[i].q == b[i].q && a[i].verdict == b[i].verdict && a[i].pairs == b[i].pairs &&
             a[i].nonzero == b[i].nonzero && a[i].weights_seen == b[i].weights_seen;
    os << " (" << a[i].p << "," << a[i].q << ") " << a[i].verdict << ";";
  }
  return {consistent && same, std::to_string(a.size()) + " rows" + (same ? "" : ", runs differ") + ":" + os.str()};
}

}  // namespace

int main()
{
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"necklace bracket value", necklace_value},
      {"necklace bracket Hodge profile", necklace_profile},
      {"chain-level filtration inclusions, weight 6", inclusions},
      {"Eulerian idempotents, n <= 6", eulerian},
      {"PBW and Witt dimensions, n <= 6", pbw_witt},
      {"Hodge-Connes exactness", connes},
      {"bicomplex and Kassel routes agree", two_routes},
      {"Adams eigenvalue law", adams},
      {"Jacobi, antisymmetry and chain-map gates", gates},
      {"abelian graded bracket vs forms", abelian_graded},
      {"Drinfeld trace, necklace with sl2", drinfeld},
      {"conjecture probe on S2 dual", conjecture_probe},
  };
  int failed = 0, i = 0;
  for (const auto& [name, run] : criteria) {
    ++i;
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s %2d %s (%.1fs): %s\n", o.pass ? "PASS" : "FAIL", i, name.c_str(), secs, o.detail.c_str());
    std::fflush(stdout);
    if (!o.pass) ++failed;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed ? 1 : 0;
}
