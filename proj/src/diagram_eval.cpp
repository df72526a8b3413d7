#include <cmath>
#include <map>
#include <sstream>

#include "qclock/diagram.hpp"

namespace qclock::diagram {

namespace {

std::int64_t int_arg(const Term& g, std::size_t i) {
  const double v = g.args[i];
  const double r = std::nearbyint(v);
  if (std::abs(v - r) > 0.0)
    throw ProfileMismatch("'" + g.gen + "' expects integer argument, got " +
                          std::to_string(v));
  return static_cast<std::int64_t>(r);
}

Profile generator_profile(const Term& g, int w, std::optional<int> sys_dim) {
  auto clock_wires = [w](int k) { return std::vector<int>(k, w); };
  const std::string& n = g.gen;
  if (n == "zmult" || n == "xmult") return {clock_wires(2), clock_wires(1)};
  if (n == "zcomult" || n == "xcomult")
    return {clock_wires(1), clock_wires(2)};
  if (n == "zunit" || n == "xunit" || n == "tstate" || n == "estate")
    return {{}, clock_wires(1)};
  if (n == "zcounit" || n == "xcounit") return {clock_wires(1), {}};
  if (n == "antipode") return {clock_wires(1), clock_wires(1)};
  if (n == "swap") return {clock_wires(2), clock_wires(2)};
  if (n == "cup") return {{}, clock_wires(2)};
  if (n == "cap") return {clock_wires(2), {}};
  if (n == "scalar") return {{}, {}};
  if (n == "id") {
    const std::int64_t k = int_arg(g, 0);
    if (k < 0) throw ProfileMismatch("id() needs a nonnegative wire count");
    return {clock_wires(static_cast<int>(k)),
            clock_wires(static_cast<int>(k))};
  }
  if (n == "sysalg" || n == "sysid") {
    if (!sys_dim)
      throw UnboundSystem("'" + n + "' used without a bound system");
    if (n == "sysid") return {{*sys_dim}, {*sys_dim}};
    return {{*sys_dim, w}, {*sys_dim}};
  }
  throw UnknownGenerator("unknown generator '" + n + "'", g.pos.line,
                         g.pos.col);
}

using ProfileMap = std::map<const Term*, Profile>;

Profile infer_rec(const TermPtr& t, int w, std::optional<int> sys_dim,
                  ProfileMap* memo) {
  Profile prof;
  switch (t->kind) {
    case Term::Kind::kGen:
      prof = generator_profile(*t, w, sys_dim);
      break;
    case Term::Kind::kDag: {
      Profile inner = infer_rec(t->a, w, sys_dim, memo);
      prof = {inner.out, inner.in};
      break;
    }
    case Term::Kind::kSeq: {
      Profile pa = infer_rec(t->a, w, sys_dim, memo);
      Profile pb = infer_rec(t->b, w, sys_dim, memo);
      if (pa.out != pb.in) {
        std::ostringstream os;
        os << "';' at line " << t->pos.line << " col " << t->pos.col
           << ": left side produces " << pa.out.size()
           << " wire(s) that do not match the right side's "
           << pb.in.size() << " input wire(s)";
        throw ProfileMismatch(os.str());
      }
      prof = {pa.in, pb.out};
      break;
    }
    case Term::Kind::kPar: {
      Profile pa = infer_rec(t->a, w, sys_dim, memo);
      Profile pb = infer_rec(t->b, w, sys_dim, memo);
      prof = pa;
      prof.in.insert(prof.in.end(), pb.in.begin(), pb.in.end());
      prof.out.insert(prof.out.end(), pb.out.begin(), pb.out.end());
      break;
    }
  }
  if (memo) (*memo)[t.get()] = prof;
  return prof;
}

/// Rewrites the tree so dag() wraps generators only, flipping seq order and
/// recursing through par; dag(dag(t)) cancels.
TermPtr push_dag(const TermPtr& t, bool flip) {
  switch (t->kind) {
    case Term::Kind::kGen: {
      if (!flip) return t;
      auto node = std::make_shared<Term>();
      node->kind = Term::Kind::kDag;
      node->a = t;
      node->pos = t->pos;
      return node;
    }
    case Term::Kind::kDag:
      return push_dag(t->a, !flip);
    case Term::Kind::kSeq: {
      auto node = std::make_shared<Term>();
      node->kind = Term::Kind::kSeq;
      node->pos = t->pos;
      if (flip) {
        node->a = push_dag(t->b, true);
        node->b = push_dag(t->a, true);
      } else {
        node->a = push_dag(t->a, false);
        node->b = push_dag(t->b, false);
      }
      return node;
    }
    case Term::Kind::kPar: {
      auto node = std::make_shared<Term>();
      node->kind = Term::Kind::kPar;
      node->pos = t->pos;
      node->a = push_dag(t->a, flip);
      node->b = push_dag(t->b, flip);
      return node;
    }
  }
  return t;
}

struct EvalContext {
  const QuantumClock* clock;
  const DynamicalSystem* binding;
  std::map<std::string, Tensor> cache;

  const Tensor& generator(const Term& g, bool dag_flag) {
    std::string key = dag_flag ? "!" + g.gen : g.gen;
    for (double a : g.args) key += "|" + std::to_string(a);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    Tensor t = build(g);
    if (dag_flag) t = dagger(t);
    return cache.emplace(std::move(key), std::move(t)).first->second;
  }

  Tensor build(const Term& g) {
    const auto& group = clock->group();
    const int w = static_cast<int>(clock->omega());
    const std::string& n = g.gen;
    if (n == "zmult") return group.zdot().mult();
    if (n == "zunit") return group.zdot().unit();
    if (n == "zcomult") return group.zdot().comult();
    if (n == "zcounit") return group.zdot().counit();
    if (n == "xmult") return group.xdot().mult();
    if (n == "xunit") return group.xdot().unit();
    if (n == "xcomult") return group.xdot().comult();
    if (n == "xcounit") return group.xdot().counit();
    if (n == "antipode") return group.antipode();
    if (n == "swap") return Tensor::swap(w, w);
    if (n == "cup") return group.zdot().cup_cap().first;
    if (n == "cap") return group.zdot().cup_cap().second;
    if (n == "id")
      return Tensor::identity(
          std::vector<int>(static_cast<std::size_t>(int_arg(g, 0)), w));
    if (n == "tstate") return clock->time_state(int_arg(g, 0));
    if (n == "estate") return clock->energy_state(int_arg(g, 0));
    if (n == "scalar") return Tensor::scalar(cplx(g.args[0], g.args[1]));
    if (n == "sysalg") {
      if (binding == nullptr)
        throw UnboundSystem("'sysalg' used without a bound system");
      return binding->assembled();
    }
    if (n == "sysid") {
      if (binding == nullptr)
        throw UnboundSystem("'sysid' used without a bound system");
      return Tensor::identity(binding->system_dim());
    }
    throw UnknownGenerator("unknown generator '" + n + "'", g.pos.line,
                           g.pos.col);
  }
};

Tensor apply_term(const TermPtr& t, const Tensor& state, std::size_t wire,
                  EvalContext& ctx, const ProfileMap& profiles) {
  switch (t->kind) {
    case Term::Kind::kGen:
      return apply_to_wires(ctx.generator(*t, false), state, wire);
    case Term::Kind::kDag:
      return apply_to_wires(ctx.generator(*t->a, true), state, wire);
    case Term::Kind::kSeq: {
      Tensor mid = apply_term(t->a, state, wire, ctx, profiles);
      return apply_term(t->b, mid, wire, ctx, profiles);
    }
    case Term::Kind::kPar: {
      Tensor mid = apply_term(t->a, state, wire, ctx, profiles);
      const std::size_t a_out = profiles.at(t->a.get()).out.size();
      return apply_term(t->b, mid, wire + a_out, ctx, profiles);
    }
  }
  return state;
}

}  // namespace

Profile infer_profile(const TermPtr& t, int clock_dim,
                      std::optional<int> system_dim) {
  return infer_rec(t, clock_dim, system_dim, nullptr);
}

Tensor evaluate(const TermPtr& t, const QuantumClock& c,
                const DynamicalSystem* binding) {
  std::optional<int> sys_dim;
  if (binding != nullptr) sys_dim = binding->system_dim();
  TermPtr flat = push_dag(t, false);
  ProfileMap profiles;
  Profile prof =
      infer_rec(flat, static_cast<int>(c.omega()), sys_dim, &profiles);
  EvalContext ctx{&c, binding, {}};
  return from_columns(prof.in, [&](std::size_t col) {
    return apply_term(flat, Tensor::basis_state(prof.in, col), 0, ctx,
                      profiles);
  });
}

EqualityReport check_equation(const EquationCase& e, const QuantumClock& c,
                              double tol, const DynamicalSystem* binding) {
  TermPtr lhs = parse(e.lhs);
  TermPtr rhs = parse(e.rhs);
  std::optional<int> sys_dim;
  if (binding != nullptr) sys_dim = binding->system_dim();
  const int w = static_cast<int>(c.omega());
  Profile pl = infer_profile(lhs, w, sys_dim);
  Profile pr = infer_profile(rhs, w, sys_dim);
  if (!(pl == pr))
    throw ProfileMismatch("equation '" + e.name +
                          "': sides have different wire profiles");
  return approx_equal(evaluate(lhs, c, binding), evaluate(rhs, c, binding),
                      tol, e.mode);
}

std::vector<SuiteResult> run_law_suite(const QuantumClock& c, double tol) {
  const DynamicalSystem self = DynamicalSystem::clock_self_system(c);
  std::vector<SuiteResult> results;
  for (const EquationCase& e : builtin_corpus()) {
    SuiteResult r;
    r.name = e.name;
    r.negative = e.negative;
    r.report = check_equation(e, c, tol, &self);
    if (e.negative)
      r.as_designed = r.report.pass == (c.omega() < e.fails_from_omega);
    else
      r.as_designed = r.report.pass;
    results.push_back(std::move(r));
  }
  return results;
}

bool suite_ok(const std::vector<SuiteResult>& results) {
  for (const auto& r : results)
    if (!r.as_designed) return false;
  return true;
}

}  // namespace qclock::diagram
