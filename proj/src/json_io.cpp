#include "qclock/json_io.hpp"

#include <cmath>
#include <sstream>

namespace qclock {

json tensor_to_json(const Tensor& t) {
  json entries = json::array();
  for (const cplx& v : t.entries())
    entries.push_back(json::array({v.real(), v.imag()}));
  return json{{"in_dims", t.in_dims()},
              {"out_dims", t.out_dims()},
              {"entries", std::move(entries)}};
}

Tensor tensor_from_json(const json& j) {
  if (!j.is_object() || !j.contains("in_dims") || !j.contains("out_dims") ||
      !j.contains("entries"))
    throw ParseError("tensor: expected in_dims/out_dims/entries");
  std::vector<int> in = j.at("in_dims").get<std::vector<int>>();
  std::vector<int> out = j.at("out_dims").get<std::vector<int>>();
  Tensor t = Tensor::zeros(out, in);
  const json& entries = j.at("entries");
  if (!entries.is_array() || entries.size() != t.entry_count())
    throw ParseError("tensor: expected " + std::to_string(t.entry_count()) +
                     " entries, got " + std::to_string(entries.size()));
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const json& e = entries[i];
    if (!e.is_array() || e.size() != 2)
      throw ParseError("tensor: entries must be [re, im] pairs");
    t.entries()[i] = cplx(e[0].get<double>(), e[1].get<double>());
  }
  t.require_finite("tensor");
  return t;
}

namespace {

Rational rational_from_json(const json& j, const std::string& field) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number()) return Rational::from_double(j.get<double>());
  throw ParseError("clock: " + field + " must be a number or rational string");
}

}  // namespace

json clock_to_json(const QuantumClock& c) {
  return json{{"omega_uv", c.labels().omega_uv.to_double()},
              {"omega_ir", c.labels().omega_ir.to_double()}};
}

QuantumClock clock_from_json(const json& j) {
  if (!j.is_object() || !j.contains("omega_uv") || !j.contains("omega_ir"))
    throw ParseError("clock: expected omega_uv and omega_ir");
  return QuantumClock(rational_from_json(j.at("omega_uv"), "omega_uv"),
                      rational_from_json(j.at("omega_ir"), "omega_ir"));
}

DynamicalSystem SystemSpec::build(double tol) const {
  if (kind == "generator")
    return DynamicalSystem::from_generator(clock, unitary, tol);
  if (kind == "spectrum")
    return DynamicalSystem::from_spectrum(clock, levels, tol);
  throw ParseError("system: unknown kind '" + kind + "'");
}

SystemSpec system_from_json(const json& j) {
  if (!j.is_object() || !j.contains("clock") || !j.contains("kind"))
    throw ParseError("system: expected clock and kind");
  SystemSpec spec{clock_from_json(j.at("clock")), j.at("kind").get<std::string>(),
                  Tensor(), {}};
  if (spec.kind == "generator") {
    if (!j.contains("unitary"))
      throw ParseError("system: generator kind needs a unitary");
    spec.unitary = tensor_from_json(j.at("unitary"));
  } else if (spec.kind == "spectrum") {
    if (!j.contains("levels") || !j.at("levels").is_array())
      throw ParseError("system: spectrum kind needs a levels array");
    for (const json& lv : j.at("levels")) {
      Level level;
      level.m = lv.at("m").get<std::int64_t>();
      for (const json& b : lv.at("basis"))
        level.basis.push_back(tensor_from_json(b));
      spec.levels.push_back(std::move(level));
    }
  } else {
    throw ParseError("system: unknown kind '" + spec.kind + "'");
  }
  return spec;
}

json system_to_json(const SystemSpec& spec) {
  json j{{"clock", clock_to_json(spec.clock)}, {"kind", spec.kind}};
  if (spec.kind == "generator") {
    j["unitary"] = tensor_to_json(spec.unitary);
  } else {
    json levels = json::array();
    for (const Level& lv : spec.levels) {
      json basis = json::array();
      for (const Tensor& b : lv.basis) basis.push_back(tensor_to_json(b));
      levels.push_back(json{{"m", lv.m}, {"basis", std::move(basis)}});
    }
    j["levels"] = std::move(levels);
  }
  return j;
}

json law_report_to_json(const LawReport& rep) {
  json arr = json::array();
  for (const LawCheck& c : rep.checks)
    arr.push_back(json{{"law", c.law}, {"residual", c.residual},
                       {"pass", c.pass}});
  return arr;
}

json equality_to_json(const EqualityReport& rep) {
  json j{{"pass", rep.pass},
         {"residual", rep.residual},
         {"mode", rep.scalar_mode ? "up_to_global_scalar" : "strict"}};
  if (rep.scalar_mode)
    j["lambda"] = json::array({rep.lambda.real(), rep.lambda.imag()});
  return j;
}

json frobenius_report_to_json(const FrobeniusLawReport& rep) {
  return json{{"normalisation", rep.normalisation},
              {"laws", law_report_to_json(rep.laws)},
              {"pass", rep.all_pass()}};
}

json algebra_report_to_json(const AlgebraReport& rep) {
  return json{{"laws", law_report_to_json(rep.laws)},
              {"conditions_agree", rep.conditions_agree},
              {"pass", rep.all_pass()}};
}

json spectrum_rows_to_json(const std::vector<SpectrumRow>& rows) {
  json arr = json::array();
  for (const SpectrumRow& r : rows)
    arr.push_back(json{{"m", r.m},
                       {"energy", r.energy},
                       {"rank", r.rank},
                       {"idempotence_residual", r.idempotence_residual}});
  return arr;
}

std::string spectrum_rows_to_csv(const std::vector<SpectrumRow>& rows) {
  std::ostringstream os;
  os << "m,energy,rank,idempotence_residual\n";
  for (const SpectrumRow& r : rows)
    os << r.m << "," << r.energy << "," << r.rank << ","
       << r.idempotence_residual << "\n";
  return os.str();
}

json suite_results_to_json(const std::vector<diagram::SuiteResult>& results) {
  json arr = json::array();
  for (const auto& r : results) {
    json j{{"name", r.name},
           {"pass", r.report.pass},
           {"residual", r.report.residual},
           {"negative_control", r.negative},
           {"as_designed", r.as_designed}};
    if (r.report.scalar_mode)
      j["lambda"] =
          json::array({r.report.lambda.real(), r.report.lambda.imag()});
    arr.push_back(std::move(j));
  }
  return arr;
}

std::string grid_experiment_to_csv(const GridExperiment& exp) {
  std::ostringstream os;
  os << "omega_uv,omega_ir,omega,max_error,bound\n";
  for (const GridRow& r : exp.rows)
    os << r.grid.omega_uv.to_double() << "," << r.grid.omega_ir.to_double()
       << "," << r.omega << "," << r.max_error << "," << r.bound << "\n";
  return os.str();
}

json error_to_json(const std::string& code, const std::string& message) {
  return json{{"error", code}, {"message", message}};
}

}  // namespace qclock
