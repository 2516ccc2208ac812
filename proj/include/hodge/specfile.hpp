#pragma once

#include "hodge/poisson.hpp"

#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace hodge {

// Parse or validation error; what() reads "source:line: field 'f': message".
class SpecError : public std::runtime_error {
 public:
  SpecError(const std::string& source, int line, const std::string& field, const std::string& message);
  int line() const { return line_; }
  const std::string& field() const { return field_; }

 private:
  int line_;
  std::string field_;
};

// Line-oriented algebra description:
//
//   kind lie-algebra | coalgebra | necklace
//   name sl2
//   invariant-form killing            (lie-algebra only)
//   [basis]        label degree [weight]
//   [bracket]      x y = 2 z - 1/2 w
//   [coproduct]    c = a b - b a        (reduced coproduct)
//   [differential] x = 3 y
//   [pairing]      degree -2 | flags symplectic | top-exterior | a b = 1
//
// '#' starts a comment. The label 1 in a pairing entry is the (co)unit.
struct SpecFile {
  std::string source;
  std::string text;
  std::string kind;
  std::string name;
  std::optional<LieAlgebraSpec> lie;
  std::optional<CoalgebraSpec> coalgebra;
  bool has_pairing = false;
  bool top_exterior = false;
  CyclicPairing pairing;  // explicit entries, degree and flags
  std::string invariant_form;
};

SpecFile parse_spec(const std::string& text, const std::string& source = "<input>");
SpecFile load_spec(const std::string& path);

// Everything a computation needs, built at one weight truncation. Not movable:
// the structures below hold pointers into each other.
struct Fixture {
  SpecFile spec;
  int max_weight = 0;
  CoalgebraSpec coalgebra;
  CobarAlgebra algebra;
  std::optional<CyclicPairing> pairing;
  std::unique_ptr<HodgeColumns> columns;
  std::unique_ptr<NecklaceHodge> necklaces;
  std::unique_ptr<PoissonStructure> poisson;  // when a pairing is present

  Fixture() = default;
  Fixture(const Fixture&) = delete;
  Fixture& operator=(const Fixture&) = delete;
};

// Runs every load-time validation; throws SpecError on failure.
std::unique_ptr<Fixture> materialize(const SpecFile& spec, int max_weight);
// Names of the axioms checked by materialize, for reporting.
std::vector<std::string> validation_summary(const Fixture& f);

}  // namespace hodge
