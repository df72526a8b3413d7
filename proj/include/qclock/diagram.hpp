#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qclock/dynamics.hpp"
#include "qclock/tensor.hpp"

namespace qclock::diagram {

// Term grammar (precedence: '*' binds tighter than ';', both
// left-associative; ';' reads left to right in diagram order, so "a ; b"
// applies a first):
//
//   term := atom | term ";" term | term "*" term
//   atom := IDENT | IDENT "(" args ")" | "dag" "(" term ")" | "(" term ")"
//
// Generators: zmult zunit zcomult zcounit xmult xunit xcomult xcounit
// antipode swap cup cap id(k) tstate(n) estate(m) scalar(re,im) sysalg
// sysid. Clock wires carry the clock dimension; sysalg/sysid need a bound
// system. cup/cap are the time-observable cup and cap.

struct SourcePos {
  int line = 1;
  int col = 1;
};

struct Term;
using TermPtr = std::shared_ptr<const Term>;

struct Term {
  enum class Kind { kGen, kSeq, kPar, kDag };
  Kind kind = Kind::kGen;
  std::string gen;            // kGen: generator name
  std::vector<double> args;   // kGen: numeric arguments
  TermPtr a, b;               // children (kSeq/kPar: both, kDag: a)
  SourcePos pos;
};

TermPtr parse(const std::string& src);

/// Minimal-parenthesis rendering; parse(print(t)) is structurally equal
/// to t.
std::string print(const TermPtr& t);

bool structurally_equal(const TermPtr& a, const TermPtr& b);

struct Profile {
  std::vector<int> in, out;
  bool operator==(const Profile&) const = default;
};

/// Wire profiles with every clock wire at dimension clock_dim. Terms using
/// sysalg/sysid need system_dim (UnboundSystem otherwise); composition
/// errors raise ProfileMismatch naming the offending node.
Profile infer_profile(const TermPtr& t, int clock_dim,
                      std::optional<int> system_dim = std::nullopt);

/// Compositional evaluation against a clock; `binding` supplies sysalg and
/// sysid. evaluate(dag(t)) == dagger(evaluate(t)) and par evaluates to the
/// tensor product.
Tensor evaluate(const TermPtr& t, const QuantumClock& c,
                const DynamicalSystem* binding = nullptr);

struct EquationCase {
  std::string name;             // stable across releases
  std::string lhs, rhs;         // term sources
  CompareMode mode = CompareMode::kStrict;
  std::string note;             // which law this is, in plain words
  bool negative = false;        // designed-to-fail control
  std::int64_t fails_from_omega = 1;  // negatives fail for omega >= this
};

/// Typechecks both sides (profiles must agree), evaluates and compares.
EqualityReport check_equation(const EquationCase& e, const QuantumClock& c,
                              double tol,
                              const DynamicalSystem* binding = nullptr);

/// The built-in corpus: one case per verified law, plus two negative
/// controls.
const std::vector<EquationCase>& builtin_corpus();

struct SuiteResult {
  std::string name;
  EqualityReport report;
  bool negative = false;
  bool as_designed = false;  // positives pass; negatives fail where designed
};

/// Runs the whole corpus; cases using sysalg are bound to the clock's
/// self-action. The suite is good iff every case behaves as designed.
std::vector<SuiteResult> run_law_suite(const QuantumClock& c, double tol);

bool suite_ok(const std::vector<SuiteResult>& results);

/// Loads "name : lhs == rhs [scalar]" lines; '#' starts a comment.
std::vector<EquationCase> load_corpus_file(const std::string& path);

}  // namespace qclock::diagram
