#include <fstream>

#include "qclock/diagram.hpp"

namespace qclock::diagram {

namespace {

EquationCase mk(std::string name, std::string lhs, std::string rhs,
                std::string note,
                CompareMode mode = CompareMode::kStrict) {
  EquationCase e;
  e.name = std::move(name);
  e.lhs = std::move(lhs);
  e.rhs = std::move(rhs);
  e.note = std::move(note);
  e.mode = mode;
  return e;
}

EquationCase neg(std::string name, std::string lhs, std::string rhs,
                 std::string note, std::int64_t fails_from) {
  EquationCase e = mk(std::move(name), std::move(lhs), std::move(rhs),
                      std::move(note));
  e.negative = true;
  e.fails_from_omega = fails_from;
  return e;
}

std::vector<EquationCase> make_corpus() {
  std::vector<EquationCase> c;

  c.push_back(mk("frobenius_z_left",
                 "(zcomult * id(1)) ; (id(1) * zmult)", "zmult ; zcomult",
                 "Frobenius law for the time observable, left composite"));
  c.push_back(mk("frobenius_z_right",
                 "(id(1) * zcomult) ; (zmult * id(1))", "zmult ; zcomult",
                 "Frobenius law for the time observable, right composite"));
  c.push_back(mk("frobenius_x_left",
                 "(xcomult * id(1)) ; (id(1) * xmult)", "xmult ; xcomult",
                 "Frobenius law for the energy observable, left composite"));
  c.push_back(mk("frobenius_x_right",
                 "(id(1) * xcomult) ; (xmult * id(1))", "xmult ; xcomult",
                 "Frobenius law for the energy observable, right composite"));

  c.push_back(mk("special_z", "zcomult ; zmult", "id(1)",
                 "the time observable's comultiplication is an isometry"));
  c.push_back(mk("quasi_special_x", "xcomult ; xmult", "id(1)",
                 "the energy observable is special up to the carrier size",
                 CompareMode::kUpToGlobalScalar));

  c.push_back(mk("snake_z_left", "(cup * id(1)) ; (id(1) * cap)", "id(1)",
                 "snake equation, left composite"));
  c.push_back(mk("snake_z_right", "(id(1) * cup) ; (cap * id(1))", "id(1)",
                 "snake equation, right composite"));
  c.push_back(mk("snake_x",
                 "((xunit ; xcomult) * id(1)) ; "
                 "(id(1) * dag(xunit ; xcomult))",
                 "id(1)", "snake equation for the energy cup and cap"));

  c.push_back(mk("symmetry_cup_z", "cup ; swap", "cup",
                 "the induced cup is symmetric"));
  c.push_back(mk("symmetry_cap_z", "swap ; cap", "cap",
                 "the induced cap is symmetric"));
  c.push_back(mk("commutativity_z", "swap ; zmult", "zmult",
                 "time observable is commutative"));
  c.push_back(mk("commutativity_x", "swap ; xmult", "xmult",
                 "energy observable is commutative"));

  c.push_back(mk("classical_copy_time", "tstate(1) ; zcomult",
                 "tstate(1) * tstate(1)",
                 "time states are copied by the time comultiplication"));
  c.push_back(mk("classical_delete_time", "tstate(1) ; zcounit",
                 "scalar(1,0)", "time states are deleted by the counit"));
  c.push_back(mk("classical_selfconj_time",
                 "cup ; (id(1) * dag(tstate(1)))", "tstate(1)",
                 "time states are self-conjugate"));
  c.push_back(mk("classical_copy_energy", "estate(1) ; xcomult",
                 "estate(1) * estate(1)",
                 "plane waves are copied by the energy comultiplication"));
  c.push_back(mk("classical_delete_energy", "estate(1) ; xcounit",
                 "scalar(1,0)", "plane waves are deleted by the counit"));
  c.push_back(mk("classical_selfconj_energy",
                 "(xunit ; xcomult) ; (id(1) * dag(estate(1)))", "estate(1)",
                 "plane waves are self-conjugate"));

  c.push_back(mk("bialgebra", "xmult ; zcomult",
                 "(zcomult * zcomult) ; (id(1) * swap * id(1)) ; "
                 "(xmult * xmult)",
                 "bialgebra law of the interacting pair"));
  c.push_back(mk("coherence_unit_copy", "xunit ; zcomult", "xunit * xunit",
                 "the group unit is copyable"));
  c.push_back(mk("coherence_mult_delete", "xmult ; zcounit",
                 "zcounit * zcounit", "group multiplication is deletable"));
  c.push_back(mk("bone", "xunit ; zcounit", "scalar(1,0)", "bone law"));

  c.push_back(mk("antipode_definition",
                 "(id(1) * cup) ; (dag(xunit ; xcomult) * id(1))",
                 "((xunit ; xcomult) * id(1)) ; (id(1) * dag(cup))",
                 "the two cup/cap transposes defining the antipode agree"));
  c.push_back(mk("antipode_canonical", "antipode",
                 "(id(1) * cup) ; (dag(xunit ; xcomult) * id(1))",
                 "the negation permutation equals the antipode composite"));
  c.push_back(mk("antipode_self_adjoint", "dag(antipode)", "antipode",
                 "the antipode is self-adjoint"));
  c.push_back(mk("antipode_self_inverse", "antipode ; antipode", "id(1)",
                 "the antipode is self-inverse"));

  c.push_back(mk("hopf", "zcomult ; (id(1) * antipode) ; xmult",
                 "zcounit ; xunit", "Hopf's law"));
  c.push_back(mk("hopf_flipped", "zcomult ; (antipode * id(1)) ; xmult",
                 "zcounit ; xunit", "Hopf's law, antipode on the left leg"));

  c.push_back(mk("monad_assoc", "(xmult * id(1)) ; xmult",
                 "(id(1) * xmult) ; xmult",
                 "monad multiplication is associative"));
  c.push_back(mk("monad_unit_left", "(xunit * id(1)) ; xmult", "id(1)",
                 "monad unit law, left"));
  c.push_back(mk("monad_unit_right", "(id(1) * xunit) ; xmult", "id(1)",
                 "monad unit law, right"));
  c.push_back(mk("monad_frobenius", "id(1) * (xmult ; xcomult)",
                 "(id(2) * xcomult) ; (id(1) * xmult * id(1))",
                 "Frobenius law of the induced monad on the clock carrier"));
  c.push_back(mk("monad_frobenius_flipped", "id(1) * (xmult ; xcomult)",
                 "(id(1) * xcomult * id(1)) ; (id(2) * xmult)",
                 "Frobenius law of the induced monad, other composite"));

  c.push_back(mk("algebra_action", "(sysalg * id(1)) ; sysalg",
                 "(sysid * xmult) ; sysalg",
                 "algebra action law for the bound system"));
  c.push_back(mk("algebra_unit", "(sysid * xunit) ; sysalg", "sysid",
                 "algebra unit law for the bound system"));
  c.push_back(mk("algebra_selfconj",
                 "(sysid * xcomult) ; (sysalg * id(1))",
                 "sysalg ; dag(sysalg)",
                 "algebra self-conjugacy condition"));
  c.push_back(mk("algebra_selfconj_transposed", "dag(sysalg)",
                 "(sysid * cup) ; (sysalg * antipode)",
                 "self-conjugacy via the antipode and the time cup"));

  c.push_back(mk("history_flowline",
                 "xmult ; ((tstate(0) * id(1)) ; sysalg)",
                 "(((tstate(0) * id(1)) ; sysalg) * id(1)) ; sysalg",
                 "a trajectory is an algebra morphism from the self-action"));

  c.push_back(mk("weyl_ccr",
                 "((tstate(1) * id(1)) ; xmult) ; "
                 "dag((estate(1) * id(1)) ; zmult)",
                 "(dag((estate(1) * id(1)) ; zmult) ; "
                 "((tstate(1) * id(1)) ; xmult)) * "
                 "(tstate(1) ; dag(estate(1)))",
                 "time-energy exchange law with the pairing phase"));

  c.push_back(mk("stone_duality", "(sysid * tstate(1)) ; sysalg",
                 "dag(sysalg) ; (sysid * dag(tstate(-1)))",
                 "a time step equals the flipped-adjoint contraction"));
  c.push_back(mk("von_neumann_duality",
                 "dag(sysalg) ; (sysid * dag(estate(1)))",
                 "(sysid * estate(1)) ; sysalg",
                 "spectral contraction equals the phase-weighted average"));
  c.push_back(mk("schrodinger_planewave",
                 "estate(1) ; ((sysid * tstate(1)) ; sysalg)",
                 "estate(1) * (tstate(1) ; dag(estate(1)))",
                 "plane waves evolve by the pairing phase"));

  c.push_back(neg("neg_hopf_missing_antipode", "zcomult ; xmult",
                  "zcounit ; xunit",
                  "control: Hopf composite without the antipode", 3));
  c.push_back(neg("neg_bone_wrong_scalar", "xunit ; zcounit", "scalar(2,0)",
                  "control: bone law against the wrong scalar", 1));
  return c;
}

}  // namespace

const std::vector<EquationCase>& builtin_corpus() {
  static const std::vector<EquationCase> corpus = make_corpus();
  return corpus;
}

std::vector<EquationCase> load_corpus_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open corpus file " + path);
  std::vector<EquationCase> cases;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    auto trim = [](std::string s) {
      const char* ws = " \t\r\n";
      auto b = s.find_first_not_of(ws);
      if (b == std::string::npos) return std::string();
      auto e = s.find_last_not_of(ws);
      return s.substr(b, e - b + 1);
    };
    std::string body = trim(line);
    if (body.empty()) continue;

    EquationCase e;
    const std::string scalar_tag = "[scalar]";
    if (body.size() >= scalar_tag.size() &&
        body.compare(body.size() - scalar_tag.size(), scalar_tag.size(),
                     scalar_tag) == 0) {
      e.mode = CompareMode::kUpToGlobalScalar;
      body = trim(body.substr(0, body.size() - scalar_tag.size()));
    }
    auto colon = body.find(':');
    auto eq = body.find("==");
    if (colon == std::string::npos || eq == std::string::npos || eq < colon)
      throw ParseError(path + ":" + std::to_string(lineno) +
                       ": expected 'name : lhs == rhs [scalar]'");
    e.name = trim(body.substr(0, colon));
    e.lhs = trim(body.substr(colon + 1, eq - colon - 1));
    e.rhs = trim(body.substr(eq + 2));
    if (e.name.empty() || e.lhs.empty() || e.rhs.empty())
      throw ParseError(path + ":" + std::to_string(lineno) +
                       ": empty name or side");
    e.note = "user corpus case";
    cases.push_back(std::move(e));
  }
  return cases;
}

}  // namespace qclock::diagram
