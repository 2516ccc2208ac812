#include "hodge/specfile.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

namespace hodge {

SpecError::SpecError(const std::string& source, int line, const std::string& field, const std::string& message)
    : std::runtime_error(source + ":" + std::to_string(line) + ": field '" + field + "': " + message), line_(line), field_(field)
{
}

namespace {

std::string trim(const std::string& s)
{
  std::size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split_ws(const std::string& s)
{
  std::istringstream is(s);
  std::vector<std::string> out;
  std::string t;
  while (is >> t) out.push_back(t);
  return out;
}

bool looks_rational(const std::string& t)
{
  if (t.empty()) return false;
  std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
  return i < t.size() && std::isdigit(static_cast<unsigned char>(t[i]));
}

struct Term {
  Q coeff;
  std::vector<std::string> items;
};

class Parser {
 public:
  Parser(std::string source) : source_(std::move(source)) {}

  [[noreturn]] void fail(const std::string& field, const std::string& msg) const { throw SpecError(source_, line_, field, msg); }

  Q rational(const std::string& tok, const std::string& field) const
  {
    try {
      return parse_rational(tok);
    } catch (const std::exception&) {
      fail(field, "malformed rational '" + tok + "'");
    }
  }

  int integer(const std::string& tok, const std::string& field) const
  {
    try {
      std::size_t used = 0;
      int v = std::stoi(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
      return v;
    } catch (const std::exception&) {
      fail(field, "expected an integer, got '" + tok + "'");
    }
  }

  // "2 a b - 1/2 c d + e f"; each term must carry exactly `arity` labels.
  std::vector<Term> terms(const std::string& rhs, std::size_t arity, const std::string& field) const
  {
    auto toks = split_ws(rhs);
    std::vector<Term> out;
    if (toks.size() == 1 && toks[0] == "0") return out;
    if (toks.empty()) fail(field, "empty right-hand side");
    Term cur{Q(1), {}};
    bool have_coeff = false;
    auto flush = [&]() {
      if (cur.items.size() != arity)
        fail(field, "expected " + std::to_string(arity) + " label(s) per term, got " + std::to_string(cur.items.size()));
      out.push_back(cur);
      cur = Term{Q(1), {}};
      have_coeff = false;
    };
    for (std::size_t i = 0; i < toks.size(); ++i) {
      const std::string& t = toks[i];
      if (t == "+" || t == "-") {
        if (i == 0) {
          if (t == "-") cur.coeff = -1;
          continue;
        }
        flush();
        if (t == "-") cur.coeff = -1;
      } else if (looks_rational(t) && cur.items.empty()) {
        if (have_coeff) fail(field, "two coefficients in one term");
        cur.coeff *= rational(t, field);
        have_coeff = true;
      } else {
        if (looks_rational(t)) fail(field, "coefficient '" + t + "' must precede the labels");
        cur.items.push_back(t);
      }
    }
    flush();
    return out;
  }

  SpecFile parse(const std::string& text)
  {
    SpecFile f;
    f.source = source_;
    f.text = text;
    std::istringstream is(text);
    std::string raw, section;
    struct Pending {
      int line;
      std::string section, lhs, rhs;
    };
    std::vector<Pending> pending;
    struct BasisLine {
      int line;
      std::string label;
      int degree, weight;
      bool has_weight;
    };
    std::vector<BasisLine> basis;
    std::map<std::string, int> section_line;  // header line of each section
    while (std::getline(is, raw)) {
      ++line_;
      std::string s = raw;
      auto hash = s.find('#');
      if (hash != std::string::npos) s.resize(hash);
      s = trim(s);
      if (s.empty()) continue;
      if (s.front() == '[') {
        if (s.back() != ']') fail("section", "unterminated section header");
        section = trim(s.substr(1, s.size() - 2));
        static const std::set<std::string> known{"basis", "bracket", "coproduct", "differential", "pairing"};
        if (!known.count(section)) fail("section", "unknown section '" + section + "'");
        if (section == "pairing") f.has_pairing = true;
        section_line.emplace(section, line_);
        continue;
      }
      auto toks = split_ws(s);
      if (section.empty()) {
        const std::string& key = toks[0];
        if (toks.size() != 2) fail(key, "expected 'key value'");
        if (key == "kind") {
          if (toks[1] != "lie-algebra" && toks[1] != "coalgebra" && toks[1] != "necklace")
            fail("kind", "unknown kind '" + toks[1] + "'");
          f.kind = toks[1];
        } else if (key == "name")
          f.name = toks[1];
        else if (key == "invariant-form")
          f.invariant_form = toks[1];
        else
          fail(key, "unknown header key");
        continue;
      }
      if (section == "basis") {
        if (toks.size() < 2 || toks.size() > 3) fail("basis", "expected 'label degree [weight]'");
        if (looks_rational(toks[0]) || toks[0] == "1") fail("basis", "label '" + toks[0] + "' must not be numeric");
        BasisLine b{line_, toks[0], integer(toks[1], "basis"), 1, toks.size() == 3};
        if (b.has_weight) b.weight = integer(toks[2], "basis");
        basis.push_back(b);
        continue;
      }
      if (section == "pairing") {
        if (toks[0] == "degree" && toks.size() == 2) {
          f.pairing.degree = integer(toks[1], "pairing");
          continue;
        }
        if (toks[0] == "flags") {
          static const std::set<std::string> flags{"symplectic", "poincare-duality", "unimodular-check"};
          for (std::size_t i = 1; i < toks.size(); ++i) {
            if (!flags.count(toks[i])) fail("pairing", "unknown flag '" + toks[i] + "'");
            f.pairing.flags.insert(toks[i]);
          }
          continue;
        }
        if (toks[0] == "top-exterior" && toks.size() == 1) {
          f.top_exterior = true;
          continue;
        }
      }
      auto eq = s.find('=');
      if (eq == std::string::npos) fail(section, "expected 'lhs = rhs'");
      pending.push_back({line_, section, trim(s.substr(0, eq)), trim(s.substr(eq + 1))});
    }
    line_ = 0;
    if (f.kind.empty()) fail("kind", "missing 'kind' header");
    if (basis.empty()) fail("basis", "no basis declared");

    std::map<std::string, int> index;
    for (const auto& b : basis) {
      line_ = b.line;
      if (!index.emplace(b.label, static_cast<int>(index.size())).second) fail("basis", "duplicate label '" + b.label + "'");
    }
    auto lookup = [&](const std::string& label, const std::string& field) {
      auto it = index.find(label);
      if (it == index.end()) fail(field, "unknown label '" + label + "'");
      return it->second;
    };
    const bool lie = f.kind == "lie-algebra";
    if (lie) {
      LieAlgebraSpec a;
      for (const auto& b : basis) {
        line_ = b.line;
        if (b.has_weight) fail("basis", "lie-algebra basis lines take 'label degree'");
        a.labels.push_back(b.label);
        a.degrees.push_back(b.degree);
      }
      for (const auto& p : pending) {
        line_ = p.line;
        if (p.section == "bracket") {
          auto l = split_ws(p.lhs);
          if (l.size() != 2) fail("bracket", "expected 'x y = ...'");
          std::pair<int, int> key{lookup(l[0], "bracket"), lookup(l[1], "bracket")};
          if (a.bracket.count(key)) fail("bracket", "bracket [" + l[0] + "," + l[1] + "] given twice");
          Combination c;
          for (const auto& t : terms(p.rhs, 1, "bracket")) add_to(c, lookup(t.items[0], "bracket"), t.coeff);
          a.bracket[key] = c;
        } else if (p.section == "differential") {
          Combination c;
          for (const auto& t : terms(p.rhs, 1, "differential")) add_to(c, lookup(t.items[0], "differential"), t.coeff);
          a.differential[lookup(p.lhs, "differential")] = c;
        } else if (p.section == "coproduct") {
          fail("coproduct", "lie-algebra specs take brackets, not a coproduct");
        } else if (p.section == "pairing") {
          fail("pairing", "lie-algebra specs only support 'top-exterior' pairings");
        }
      }
      for (auto it = a.bracket.begin(); it != a.bracket.end();)
        it = it->second.empty() ? a.bracket.erase(it) : std::next(it);
      line_ = section_line.count("bracket") ? section_line["bracket"] : 0;
      try {
        a.complete_antisymmetry();
        a.validate();
      } catch (const std::exception& e) {
        fail("bracket", e.what());
      }
      if (f.has_pairing && !f.top_exterior) fail("pairing", "lie-algebra specs need 'top-exterior'");
      f.lie = std::move(a);
    } else {
      CoalgebraSpec C;
      for (const auto& b : basis) {
        line_ = b.line;
        if (!b.has_weight) fail("basis", "coalgebra basis lines take 'label degree weight'");
        C.labels.push_back(b.label);
        C.degrees.push_back(b.degree);
        C.weights.push_back(b.weight);
      }
      C.coproduct.resize(basis.size());
      C.differential.resize(basis.size());
      for (const auto& p : pending) {
        line_ = p.line;
        if (p.section == "coproduct") {
          if (f.kind == "necklace") fail("coproduct", "necklace specs have primitive generators only");
          int x = lookup(p.lhs, "coproduct");
          for (const auto& t : terms(p.rhs, 2, "coproduct")) {
            auto& e = C.coproduct[x][{lookup(t.items[0], "coproduct"), lookup(t.items[1], "coproduct")}];
            e += t.coeff;
          }
        } else if (p.section == "differential") {
          int x = lookup(p.lhs, "differential");
          for (const auto& t : terms(p.rhs, 1, "differential")) add_to(C.differential[x], lookup(t.items[0], "differential"), t.coeff);
        } else if (p.section == "pairing") {
          auto l = split_ws(p.lhs);
          if (l.size() != 2) fail("pairing", "expected 'a b = value'");
          auto idx = [&](const std::string& s) { return s == "1" ? -1 : lookup(s, "pairing"); };
          f.pairing.set(idx(l[0]), idx(l[1]), rational(p.rhs, "pairing"));
        } else {
          fail(p.section, "not allowed in a " + f.kind + " spec");
        }
      }
      for (auto& m : C.coproduct)
        for (auto it = m.begin(); it != m.end();) it = sgn(it->second) == 0 ? m.erase(it) : std::next(it);
      line_ = 0;
      if (f.top_exterior) fail("pairing", "'top-exterior' applies to lie-algebra specs only");
      line_ = section_line.count("coproduct") ? section_line["coproduct"] : 0;
      try {
        C.validate();
      } catch (const std::exception& e) {
        fail("coproduct", e.what());
      }
      line_ = 0;
      if (f.kind == "necklace" && !f.has_pairing) fail("pairing", "necklace specs need a pairing");
      f.coalgebra = std::move(C);
    }
    if (!f.invariant_form.empty() && !lie) fail("invariant-form", "only lie-algebra specs carry an invariant form");
    return f;
  }

 private:
  std::string source_;
  int line_ = 0;
};

}  // namespace

SpecFile parse_spec(const std::string& text, const std::string& source)
{
  return Parser(source).parse(text);
}

SpecFile load_spec(const std::string& path)
{
  std::ifstream in(path);
  if (!in) throw SpecError(path, 0, "file", "cannot open");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_spec(ss.str(), path);
}

std::unique_ptr<Fixture> materialize(const SpecFile& spec, int max_weight)
{
  auto f = std::make_unique<Fixture>();
  f->spec = spec;
  f->max_weight = max_weight;
  if (spec.lie) {
    f->coalgebra = ce_coalgebra(*spec.lie, max_weight);
    if (spec.top_exterior) {
      try {
        CyclicPairing P = top_exterior_pairing(*spec.lie, f->coalgebra);
        for (const auto& fl : spec.pairing.flags) P.flags.insert(fl);
        f->pairing = P;
      } catch (const std::exception& e) {
        throw SpecError(spec.source, 0, "pairing", e.what());
      }
    }
  } else {
    f->coalgebra = *spec.coalgebra;
    if (spec.has_pairing) f->pairing = spec.pairing;
  }
  if (f->pairing) {
    try {
      validate_pairing(f->coalgebra, *f->pairing);
    } catch (const std::exception& e) {
      throw SpecError(spec.source, 0, "pairing", e.what());
    }
  }
  f->algebra = cobar(f->coalgebra);
  try {
    f->algebra.check_d_squared();
  } catch (const std::exception& e) {
    throw SpecError(spec.source, 0, "differential", e.what());
  }
  f->columns = std::make_unique<HodgeColumns>(f->algebra);
  f->necklaces = std::make_unique<NecklaceHodge>(*f->columns);
  if (f->pairing) f->poisson = std::make_unique<PoissonStructure>(f->algebra, f->coalgebra, *f->pairing);
  return f;
}

std::vector<std::string> validation_summary(const Fixture& f)
{
  std::vector<std::string> out;
  if (f.spec.lie) {
    out.push_back("lie: degrees, antisymmetry, Jacobi, d^2 = 0, Leibniz");
    out.push_back("ce coalgebra (max weight " + std::to_string(f.max_weight) + "): coassociativity, cocommutativity, coderivation");
  } else {
    out.push_back("coalgebra: coassociativity, weights, coderivation, d^2 = 0");
  }
  out.push_back("cobar: d^2 = 0 on all " + std::to_string(f.algebra.alphabet.size()) + " letters");
  if (f.pairing) {
    std::string flags;
    for (const auto& fl : f.pairing->flags) flags += " " + fl;
    out.push_back("pairing: degree, symmetry, cyclicity, d-compatibility" + (flags.empty() ? std::string() : ";" + flags));
  }
  return out;
}

}  // namespace hodge
