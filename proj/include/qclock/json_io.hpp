#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "qclock/diagram.hpp"
#include "qclock/dynamics.hpp"
#include "qclock/frobenius.hpp"
#include "qclock/scaling.hpp"
#include "qclock/spectra.hpp"

namespace qclock {

using json = nlohmann::json;

// Tensor wire format:
//   {"in_dims":[...], "out_dims":[...], "entries":[[re,im],...]}
// entries row-major over (output index, input index).
json tensor_to_json(const Tensor& t);
Tensor tensor_from_json(const json& j);

// Clock wire format: {"omega_uv": x, "omega_ir": y}; values may be numbers
// or rational strings like "1/3".
json clock_to_json(const QuantumClock& c);
QuantumClock clock_from_json(const json& j);

/// Declarative system description, as stored on disk:
///   {"clock":{...}, "kind":"generator", "unitary":Tensor}
///   {"clock":{...}, "kind":"spectrum",
///    "levels":[{"m":int, "basis":[Tensor,...]}, ...]}
struct SystemSpec {
  QuantumClock clock;
  std::string kind;          // "generator" | "spectrum"
  Tensor unitary;            // kind == generator
  std::vector<Level> levels; // kind == spectrum

  DynamicalSystem build(double tol) const;
};

SystemSpec system_from_json(const json& j);
json system_to_json(const SystemSpec& spec);

json law_report_to_json(const LawReport& rep);
json equality_to_json(const EqualityReport& rep);
json frobenius_report_to_json(const FrobeniusLawReport& rep);
json algebra_report_to_json(const AlgebraReport& rep);
json spectrum_rows_to_json(const std::vector<SpectrumRow>& rows);
std::string spectrum_rows_to_csv(const std::vector<SpectrumRow>& rows);
json suite_results_to_json(const std::vector<diagram::SuiteResult>& results);
std::string grid_experiment_to_csv(const GridExperiment& exp);
json error_to_json(const std::string& code, const std::string& message);

}  // namespace qclock
