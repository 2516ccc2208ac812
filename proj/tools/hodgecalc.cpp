// hodgecalc: Hodge pieces of HH/HC for enveloping algebras, necklace brackets
// and trace checks on algebra spec files.
#include "hodge/emit.hpp"
#include "hodge/kassel.hpp"
#include "hodge/rep.hpp"
#include "hodge/specfile.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <ctime>
#include <iostream>
#include <random>

using namespace hodge;

namespace {

struct Options {
  std::string spec;
  std::string g_spec;
  int max_weight = 6;
  int max_degree = 3;
  int p = 1;
  std::string route = "bicomplex";
  std::string format = "text";
  unsigned seed = 1;
  std::string a, b;
  bool timestamp = false;
};

// Nonzero exit for a failed assertion; parse errors use 2.
struct CheckFailed : std::runtime_error {
  using std::runtime_error::runtime_error;
};

ResultTable header(const Options& o, const std::string& command, const Fixture& f)
{
  ResultTable t;
  t.command = command;
  t.input = f.spec.name.empty() ? f.spec.source : f.spec.name;
  t.input_hash = input_hash(f.spec.text);
  t.route = o.route;
  t.truncation = {o.max_weight, o.max_degree};
  if (o.timestamp) {
    std::time_t now = std::time(nullptr);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
    t.generated = buf;
  }
  return t;
}

void print(const Options& o, const ResultTable& t) { std::cout << emit(t, parse_format(o.format)); }

const PoissonStructure& need_pairing(const Fixture& f)
{
  if (!f.poisson) throw SpecError(f.spec.source, 0, "pairing", "this command needs a cyclic pairing");
  return *f.poisson;
}

const LieAlgebraSpec& need_lie(const Fixture& f)
{
  if (!f.spec.lie) throw SpecError(f.spec.source, 0, "kind", "this command needs a lie-algebra spec");
  return *f.spec.lie;
}

std::string yes(bool b) { return b ? "yes" : "no"; }

int cmd_homology(const Options& o, bool cyclic)
{
  auto f = materialize(load_spec(o.spec), o.max_weight);
  ResultTable t = header(o, cyclic ? "hodge-hc" : "hodge-hh", *f);
  Truncation tr{o.max_weight, o.max_degree};
  if (o.route == "bicomplex") {
    auto rows = cyclic ? cyclic_hodge(*f->columns, o.p, tr) : hochschild_hodge(*f->columns, o.p, tr);
    for (const auto& r : rows) t.rows.push_back(row_from(r));
  } else if (o.route == "kassel") {
    KasselModel K(need_lie(*f));
    auto dims = cyclic ? K.hc_via_kernel(o.p, o.max_degree) : K.hh_via_coefficients(o.p, o.max_degree);
    for (int n = 0; n <= o.max_degree; ++n) t.rows.push_back({o.p, n, dims[n], true, {}, {}});
  } else {
    throw CLI::ValidationError("--route", "expected bicomplex or kassel");
  }
  print(o, t);
  return 0;
}

int cmd_connes(const Options& o)
{
  auto f = materialize(load_spec(o.spec), o.max_weight);
  ResultTable t = header(o, "connes", *f);
  auto L = connes_les(*f->columns, o.p, {o.max_weight, o.max_degree});
  for (const auto& [n, d] : L.hh_dims) t.rows.push_back({o.p, n, d, true, {}, {"HH"}});
  for (const auto& j : L.junctions)
    t.notes.emplace_back(j.position + " degree " + std::to_string(j.degree), j.exact ? "exact" : "defect " + std::to_string(j.defect));
  if (L.b_is_identity) t.notes.emplace_back("B is the identity (p = 0)", yes(*L.b_is_identity));
  t.notes.emplace_back("all exact", yes(L.all_exact));
  print(o, t);
  return L.all_exact && L.b_is_identity.value_or(true) ? 0 : 1;
}

int cmd_bracket(const Options& o)
{
  auto f = materialize(load_spec(o.spec), o.max_weight);
  const auto& P = need_pairing(*f);
  const Alphabet& A = f->algebra.alphabet;
  NecklaceElement a = parse_necklace(A, o.a), b = parse_necklace(A, o.b);
  NecklaceElement v = P.necklace_bracket(a, b);
  ResultTable t = header(o, "bracket", *f);
  t.notes.emplace_back("{a, b}", format(A, v));
  for (const auto& [p, c] : hodge_profile(*f->necklaces, v)) t.notes.emplace_back("Hodge weight " + std::to_string(p), format(A, c));
  print(o, t);
  return 0;
}

int cmd_filtration(const Options& o)
{
  auto f = materialize(load_spec(o.spec), o.max_weight);
  const auto& P = need_pairing(*f);
  ResultTable t = header(o, "filtration", *f);
  auto inc = check_bracket_inclusions(P, *f->columns, o.max_weight, o.max_weight);
  auto forms = check_form_inclusions(P, *f->columns, std::min(o.max_weight, 4), std::min(o.max_weight, 4));
  t.notes.emplace_back("chain inclusions (pairs, failures)", std::to_string(inc.pairs_checked) + ", " + std::to_string(inc.failure_count));
  t.notes.emplace_back("form inclusions (pairs, failures)", std::to_string(forms.pairs_checked) + ", " + std::to_string(forms.failure_count));
  ClassBracket B(P, *f->necklaces, o.max_weight, o.max_degree);
  for (const auto& r : filtration_table(B, o.p, o.p)) {
    std::string w;
    for (int x : r.weights_seen) w += (w.empty() ? "" : ",") + std::to_string(x);
    t.notes.emplace_back("classes " + std::to_string(r.p) + "x" + std::to_string(r.q),
                         r.verdict + " (nonzero " + std::to_string(r.nonzero) + ", weights {" + w + "})");
  }
  print(o, t);
  return inc.failure_count + forms.failure_count == 0 ? 0 : 1;
}

int cmd_kassel(const Options& o)
{
  auto f = materialize(load_spec(o.spec), o.max_weight);
  auto rep = cross_validate(need_lie(*f), o.p, {o.max_weight, o.max_degree});
  ResultTable t = header(o, "kassel-check", *f);
  t.route = "bicomplex+kassel";
  for (const auto& r : rep.rows)
    t.notes.emplace_back(r.kind + " p=" + std::to_string(r.p) + " degree " + std::to_string(r.degree),
                         std::to_string(r.cyclic) + " vs " + std::to_string(r.kassel) + (r.safe ? "" : " (unsafe)") +
                             (r.equal() ? "" : " MISMATCH"));
  t.notes.emplace_back("verdict", rep.all_equal() ? "all equal" : "mismatch");
  print(o, t);
  return rep.all_equal() ? 0 : 1;
}

int cmd_adams(const Options& o)
{
  auto f = materialize(load_spec(o.spec), o.max_weight);
  auto r = check_adams_law(f->algebra.alphabet, o.max_degree + 1);
  ResultTable t = header(o, "adams-check", *f);
  t.notes.emplace_back("words checked", std::to_string(r.words));
  t.notes.emplace_back("eigenvalue failures", std::to_string(r.eigen_failed));
  t.notes.emplace_back("psi^2 psi^3 = psi^6 failures", std::to_string(r.compose_failed));
  print(o, t);
  return r.ok() ? 0 : 1;
}

int cmd_rep_trace(const Options& o)
{
  auto f = materialize(load_spec(o.spec), o.max_weight);
  const auto& P = need_pairing(*f);
  if (o.g_spec.empty()) throw CLI::ValidationError("--g", "rep-trace needs --g <lie-algebra spec>");
  SpecFile gs = load_spec(o.g_spec);
  if (!gs.lie) throw SpecError(gs.source, 0, "kind", "--g must name a lie-algebra spec");
  const LieAlgebraSpec& g = *gs.lie;
  InvariantPolynomial form = builtin_form(g, gs.invariant_form.empty() ? "killing" : gs.invariant_form);
  DerivedRep D(f->algebra, g);
  D.check_d_squared();
  RepPoisson B(D, P, form);
  auto axioms = check_rep_poisson_on_traces(B, f->columns->projector(), form, std::min(o.max_weight, 3));
  auto rep = verify_trace_lie_hom(P, *f->necklaces, D, B, form, o.max_weight, o.max_degree);
  ResultTable t = header(o, "rep-trace", *f);
  t.notes.emplace_back("g", gs.name + " with " + form.name + " form");
  for (const auto& pr : rep.pairs) {
    std::string status = pr.exact ? "exact" : (pr.boundary ? "boundary of " + D.ring().format(pr.certificate) : "NOT a boundary");
    t.notes.emplace_back("{" + pr.alpha + ", " + pr.beta + "}", status);
  }
  t.notes.emplace_back("pairs", std::to_string(rep.pairs.size()));
  t.notes.emplace_back("Poisson axioms on traces", axioms.ok() ? "hold" : "FAIL");
  t.notes.emplace_back("verdict", rep.ok() ? "Tr is a Lie map up to boundaries" : "failed");
  print(o, t);
  return rep.ok() && axioms.ok() ? 0 : 1;
}

int cmd_probe(const Options& o)
{
  auto f = materialize(load_spec(o.spec), o.max_weight);
  const auto& P = need_pairing(*f);
  ClassBracket B(P, *f->necklaces, o.max_weight, o.max_degree);
  ResultTable t = header(o, "conjecture-probe", *f);
  for (int p = 1; p <= o.p; ++p)
    for (int n = 0; n <= o.max_degree; ++n) t.rows.push_back({p, n, B.dim(p, n), true, {}, {}});
  bool consistent = true;
  for (const auto& r : filtration_table(B, o.p, o.p)) {
    consistent = consistent && r.consistent;
    t.notes.emplace_back("HC(" + std::to_string(r.p) + ") x HC(" + std::to_string(r.q) + ")",
                         r.verdict + ", pairs " + std::to_string(r.pairs) + ", computed " + std::to_string(r.computed) +
                             ", nonzero " + std::to_string(r.nonzero) + ", off target " + std::to_string(r.off_target));
  }
  t.notes.emplace_back("profiles sum to the bracket", yes(consistent));
  print(o, t);
  return consistent ? 0 : 1;
}

int cmd_validate(const Options& o)
{
  SpecFile s = load_spec(o.spec);
  auto f = materialize(s, o.max_weight);
  ResultTable t = header(o, "validate", *f);
  for (const auto& line : validation_summary(*f)) t.notes.emplace_back("checked", line);
  if (s.lie && !s.invariant_form.empty()) {
    builtin_form(*s.lie, s.invariant_form);
    t.notes.emplace_back("checked", "invariant form '" + s.invariant_form + "' is ad-invariant");
  }
  bool ok = true;
  if (f->poisson) {
    auto g = necklace_gates(*f->poisson, std::min(o.max_weight, 4));
    t.notes.emplace_back("bracket gates (antisymmetry, Jacobi, chain map)", g.ok() ? "pass" : "FAIL");
    ok = g.ok();
    // random rational combinations of basis necklaces, Jacobi identity
    std::mt19937 rng(o.seed);
    std::uniform_int_distribution<int> coef(-3, 3);
    const Alphabet& A = f->algebra.alphabet;
    std::vector<Word> pool;
    for (int w = 1; w <= std::min(o.max_weight, 3); ++w)
      for (int d = -3 * w; d <= 3 * w; ++d)
        for (const auto& x : necklace_words(A, w, d)) pool.push_back(x);
    const int N = f->poisson->bracket_degree();
    int failures = 0, trials = pool.empty() ? 0 : 20;
    for (int i = 0; i < trials; ++i) {
      NecklaceElement x[3];
      int deg[3];
      for (int k = 0; k < 3; ++k) {
        std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
        Word w = pool[pick(rng)];
        deg[k] = A.degree(w);
        for (const auto& u : pool)
          if (A.degree(u) == deg[k] && A.weight(u) == A.weight(w)) x[k].add(u, Q(coef(rng)));
        x[k].add(w, Q(1));
      }
      auto br = [&](const NecklaceElement& a, const NecklaceElement& b) { return f->poisson->necklace_bracket(a, b); };
      NecklaceElement j = br(x[0], br(x[1], x[2]));
      int s = ((deg[0] + N) * (deg[1] + N)) % 2 ? -1 : 1;
      for (const auto& [w, c] : br(br(x[0], x[1]), x[2]).terms) j.add(w, -c);
      for (const auto& [w, c] : br(x[1], br(x[0], x[2])).terms) j.add(w, -c * s);
      if (!j.is_zero()) ++failures;
    }
    t.notes.emplace_back("random Jacobi triples (seed " + std::to_string(o.seed) + ")",
                         std::to_string(trials) + " checked, " + std::to_string(failures) + " failed");
    ok = ok && failures == 0;
  }
  print(o, t);
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv)
{
  CLI::App app{"Hodge decomposition of Hochschild and cyclic homology of enveloping algebras"};
  app.require_subcommand(1);
  Options o;
  auto common = [&](CLI::App* sc) {
    sc->add_option("spec", o.spec, "algebra spec file")->required()->check(CLI::ExistingFile);
    sc->add_option("--max-weight", o.max_weight, "weight truncation")->check(CLI::Range(1, 40));
    sc->add_option("--max-degree", o.max_degree, "homological degree truncation")->check(CLI::Range(0, 20));
    sc->add_option("--p", o.p, "Hodge index (or largest index for tables)")->check(CLI::Range(0, 20));
    sc->add_option("--route", o.route, "bicomplex or kassel")->check(CLI::IsMember({"bicomplex", "kassel"}));
    sc->add_option("--format", o.format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
    sc->add_option("--seed", o.seed, "seed for randomized checks");
    sc->add_flag("--timestamp", o.timestamp, "record the generation time in the output");
    return sc;
  };
  std::map<CLI::App*, std::function<int()>> run;
  run[common(app.add_subcommand("hodge-hh", "Hochschild homology, one Hodge piece"))] = [&] { return cmd_homology(o, false); };
  run[common(app.add_subcommand("hodge-hc", "cyclic homology, one Hodge piece"))] = [&] { return cmd_homology(o, true); };
  run[common(app.add_subcommand("connes", "Hodge-graded Connes sequence"))] = [&] { return cmd_connes(o); };
  auto* br = common(app.add_subcommand("bracket", "necklace bracket of two cyclic words"));
  br->add_option("--a", o.a, "first element, e.g. '[v,v,v]'")->required();
  br->add_option("--b", o.b, "second element")->required();
  run[br] = [&] { return cmd_bracket(o); };
  run[common(app.add_subcommand("filtration", "bracket filtration checks"))] = [&] { return cmd_filtration(o); };
  run[common(app.add_subcommand("kassel-check", "compare with the mixed-complex route"))] = [&] { return cmd_kassel(o); };
  run[common(app.add_subcommand("adams-check", "Adams operations on PBW components"))] = [&] { return cmd_adams(o); };
  auto* rt = common(app.add_subcommand("rep-trace", "Drinfeld trace against the representation bracket"));
  rt->add_option("--g", o.g_spec, "lie-algebra spec for g")->check(CLI::ExistingFile);
  run[rt] = [&] { return cmd_rep_trace(o); };
  run[common(app.add_subcommand("conjecture-probe", "graded vs filtered bracket table"))] = [&] { return cmd_probe(o); };
  run[common(app.add_subcommand("validate", "load a spec and run every axiom check"))] = [&] { return cmd_validate(o); };

  CLI11_PARSE(app, argc, argv);
  try {
    for (auto* sc : app.get_subcommands()) return run.at(sc)();
  } catch (const CLI::Error& e) {
    return app.exit(e);
  } catch (const SpecError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
