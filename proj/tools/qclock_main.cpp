// Command-line front end: law checking, diagram suites, simulation,
// spectral transforms and grid-refinement studies over clock dynamics.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "qclock/json_io.hpp"

namespace {

using namespace qclock;

struct ClockOptions {
  std::int64_t n = 0;
  std::string omega_uv, omega_ir;

  QuantumClock make() const {
    if (n > 0) return QuantumClock(Rational(1), Rational(n));
    if (!omega_uv.empty() && !omega_ir.empty())
      return QuantumClock(Rational::parse(omega_uv),
                          Rational::parse(omega_ir));
    throw ParseError("specify --n N or --omega-uv/--omega-ir");
  }
};

void add_clock_options(CLI::App* cmd, ClockOptions& opts) {
  cmd->add_option("--n", opts.n, "clock size (omega_uv=1, omega_ir=N)");
  cmd->add_option("--omega-uv", opts.omega_uv, "grid fineness (rational)");
  cmd->add_option("--omega-ir", opts.omega_ir, "grid extent (rational)");
}

double env_default_tol() {
  if (const char* env = std::getenv("QCLOCK_TOL")) {
    try {
      return std::stod(env);
    } catch (...) {
      throw ParseError("QCLOCK_TOL is not a number");
    }
  }
  return kDefaultTol;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text << std::endl;
  } else {
    std::ofstream out(out_path);
    if (!out) throw ParseError("cannot write " + out_path);
    out << text << std::endl;
  }
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  json j;
  in >> j;
  return j;
}

std::vector<double> parse_double_list(const std::string& text) {
  std::vector<double> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    values.push_back(std::stod(item));
  }
  return values;
}

std::vector<GridSpec> parse_grids(const std::string& text) {
  std::vector<GridSpec> grids;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    auto x = item.find('x');
    if (x == std::string::npos)
      throw ParseError("grid '" + item + "' must look like UVxIR, e.g. 8x8");
    grids.push_back({Rational::parse(item.substr(0, x)),
                     Rational::parse(item.substr(x + 1))});
  }
  return grids;
}

Tensor random_tensor(std::mt19937_64& rng, const std::vector<int>& out,
                     const std::vector<int>& in) {
  std::normal_distribution<double> dist(0.0, 1.0);
  Tensor t = Tensor::zeros(out, in);
  for (cplx& v : t.entries()) v = cplx(dist(rng), dist(rng));
  return t;
}

LawReport tensor_property_sweep(std::uint64_t seed, double tol) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> dim(1, 4);
  LawReport rep;
  rep.tol = tol;
  double dag_res = 0.0, bifun_res = 0.0, swap_res = 0.0;
  for (int round = 0; round < 10; ++round) {
    const int a = dim(rng), b = dim(rng), c = dim(rng), d = dim(rng);
    const Tensor f = random_tensor(rng, {b}, {a});
    const Tensor g = random_tensor(rng, {c}, {b});
    dag_res = std::max(dag_res, max_abs_diff(dagger(compose(g, f)),
                                             compose(dagger(f), dagger(g))));
    const Tensor f2 = random_tensor(rng, {d}, {c});
    const Tensor g2 = random_tensor(rng, {c}, {d});
    bifun_res = std::max(
        bifun_res,
        max_abs_diff(compose(tensor_product(g, f2), tensor_product(f, g2)),
                     tensor_product(compose(g, f), compose(f2, g2))));
    swap_res = std::max(
        swap_res,
        max_abs_diff(compose(Tensor::swap(c, d), tensor_product(g, f2)),
                     compose(tensor_product(f2, g), Tensor::swap(b, c))));
  }
  // Phase accumulation in random products stays near machine precision;
  // gate these at 1e-12 regardless of the requested law tolerance.
  const double sweep_tol = std::max(tol, 1e-12);
  rep.checks.push_back(
      {"tensor_dagger_antihomomorphism", dag_res, dag_res == 0.0});
  rep.checks.push_back(
      {"tensor_bifunctoriality", bifun_res, bifun_res <= sweep_tol});
  rep.checks.push_back(
      {"tensor_swap_naturality", swap_res, swap_res <= sweep_tol});
  return rep;
}

int cmd_check(const ClockOptions& clock_opts, double tol, std::uint64_t seed,
              const std::string& out_path) {
  QuantumClock clock = clock_opts.make();
  const CoherentGroup& group = clock.group();
  FrobeniusLawReport zrep = group.zdot().check_laws(tol);
  FrobeniusLawReport xrep = group.xdot().check_laws(tol);
  LawReport comp = group.check_strong_complementarity(tol);
  LawReport sweep = tensor_property_sweep(seed, tol);

  const bool pass = zrep.all_pass() && xrep.all_pass() && comp.all_pass() &&
                    sweep.all_pass();
  json out{{"omega", clock.omega()},
           {"tol", tol},
           {"zdot", frobenius_report_to_json(zrep)},
           {"xdot", frobenius_report_to_json(xrep)},
           {"strong_complementarity", law_report_to_json(comp)},
           {"tensor_properties", law_report_to_json(sweep)},
           {"pass", pass}};
  emit(out.dump(2), out_path);
  std::cerr << "check: omega=" << clock.omega() << " "
            << (pass ? "all laws hold" : "LAW VIOLATIONS FOUND")
            << " (worst residual "
            << std::max({zrep.laws.max_residual(), xrep.laws.max_residual(),
                         comp.max_residual()})
            << ")\n";
  return pass ? 0 : 1;
}

int cmd_diagram(const ClockOptions& clock_opts, double tol,
                const std::string& corpus_path, const std::string& out_path) {
  QuantumClock clock = clock_opts.make();
  bool ok = true;
  json out;
  if (corpus_path.empty()) {
    auto results = diagram::run_law_suite(clock, tol);
    ok = diagram::suite_ok(results);
    out = suite_results_to_json(results);
  } else {
    auto cases = diagram::load_corpus_file(corpus_path);
    const DynamicalSystem self = DynamicalSystem::clock_self_system(clock);
    json arr = json::array();
    for (const auto& e : cases) {
      EqualityReport rep = diagram::check_equation(e, clock, tol, &self);
      ok = ok && rep.pass;
      json j = equality_to_json(rep);
      j["name"] = e.name;
      arr.push_back(std::move(j));
    }
    out = std::move(arr);
  }
  emit(out.dump(2), out_path);
  std::cerr << "diagram: omega=" << clock.omega() << " "
            << (ok ? "suite passed" : "suite FAILED") << "\n";
  return ok ? 0 : 1;
}

int cmd_simulate(const std::string& system_path, std::int64_t t,
                 const std::string& initial_path, double tol,
                 const std::string& out_path) {
  SystemSpec spec = system_from_json(load_json_file(system_path));
  DynamicalSystem sys = spec.build(tol);
  json out{{"t", t},
           {"alpha_t", tensor_to_json(sys.evaluate_at(t))},
           {"validation", algebra_report_to_json(sys.validation())}};
  if (!initial_path.empty()) {
    Tensor psi0 = tensor_from_json(load_json_file(initial_path));
    History h = history(sys, psi0);
    json steps = json::array();
    for (std::int64_t k = 0; k <= std::max<std::int64_t>(t, 0); ++k)
      steps.push_back(
          json{{"n", k}, {"state", tensor_to_json(h.trajectory(k))}});
    out["history"] = std::move(steps);
  }
  const bool pass = sys.validation().all_pass();
  emit(out.dump(2), out_path);
  std::cerr << "simulate: d=" << sys.system_dim() << " t=" << t << " "
            << (pass ? "valid dynamics" : "validation FAILED") << "\n";
  return pass ? 0 : 1;
}

int cmd_spectrum(const std::string& system_path, double tol, bool csv,
                 const std::string& out_path) {
  SystemSpec spec = system_from_json(load_json_file(system_path));
  DynamicalSystem sys = spec.build(tol);
  ProjectorFamily fam = projector_family(sys);
  LawReport inv = check_family(fam, tol);
  auto rows = spectrum_summary(fam);
  if (csv) {
    emit(spectrum_rows_to_csv(rows), out_path);
  } else {
    emit(json{{"levels", spectrum_rows_to_json(rows)},
              {"family_invariants", law_report_to_json(inv)},
              {"pass", inv.all_pass()}}
             .dump(2),
         out_path);
  }
  std::cerr << "spectrum: " << rows.size() << " levels, invariants "
            << (inv.all_pass() ? "hold" : "FAIL") << "\n";
  return inv.all_pass() ? 0 : 1;
}

int cmd_stone(const std::string& system_path, double tol,
              const std::string& out_path) {
  SystemSpec spec = system_from_json(load_json_file(system_path));
  DynamicalSystem sys = spec.build(tol);
  ProjectorFamily fam = projector_family(sys);
  json per_n = json::array();
  double worst = 0.0;
  for (std::int64_t n = 0; n < sys.clock().omega(); ++n) {
    const double res =
        max_abs_diff(stone_reconstruct(fam, n), sys.evaluate_at(n));
    worst = std::max(worst, res);
    per_n.push_back(json{{"n", n}, {"residual", res}});
  }
  const bool pass = worst <= tol;
  emit(json{{"max_residual", worst}, {"per_n", per_n}, {"pass", pass}}.dump(2),
       out_path);
  std::cerr << "stone: max reconstruction residual " << worst << "\n";
  return pass ? 0 : 1;
}

int cmd_ergodic(const std::string& system_path, std::int64_t m, double tol,
                const std::string& out_path) {
  SystemSpec spec = system_from_json(load_json_file(system_path));
  DynamicalSystem sys = spec.build(tol);
  Tensor erg = ergodic_projector(sys, m);
  ProjectorFamily fam = projector_family(sys);
  const double res = max_abs_diff(erg, fam.member(m));
  const bool pass = res <= tol;
  emit(json{{"m", m},
            {"projector", tensor_to_json(erg)},
            {"residual_vs_spectrum", res},
            {"pass", pass}}
           .dump(2),
       out_path);
  std::cerr << "ergodic: m=" << m << " residual vs spectral projector " << res
            << "\n";
  return pass ? 0 : 1;
}

int cmd_weyl(const ClockOptions& clock_opts, double tol,
             const std::string& out_path) {
  QuantumClock clock = clock_opts.make();
  const std::int64_t w = clock.omega();
  json pairs = json::array();
  double worst = 0.0;
  for (std::int64_t m = 0; m < w; ++m)
    for (std::int64_t n = 0; n < w; ++n) {
      const double res = weyl_residual(clock, m, n);
      worst = std::max(worst, res);
      pairs.push_back(json{{"m", m}, {"n", n}, {"residual", res}});
    }
  const bool pass = worst <= tol;
  emit(json{{"omega", w},
            {"max_residual", worst},
            {"pairs", pairs},
            {"pass", pass}}
           .dump(2),
       out_path);
  std::cerr << "weyl: omega=" << w << " max residual " << worst << "\n";
  return pass ? 0 : 1;
}

int cmd_converge(const std::string& spectrum_text,
                 const std::string& times_text, const std::string& grids_text,
                 const std::string& out_path) {
  GridExperiment exp =
      refinement_study(parse_double_list(spectrum_text),
                       parse_double_list(times_text), parse_grids(grids_text));
  emit(grid_experiment_to_csv(exp), out_path);
  std::cerr << "converge: " << exp.rows.size() << " grid rows\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"law checking and simulation for cyclic-group clock dynamics"};
  app.require_subcommand(1);

  double tol = 0.0;
  std::uint64_t seed = 12345;
  std::string out_path;
  app.add_option("--tol", tol, "law tolerance (default 1e-10, env QCLOCK_TOL)");
  app.add_option("--seed", seed, "seed for randomised property sweeps");
  app.add_option("--out", out_path, "write the report here instead of stdout");

  ClockOptions check_clock, diagram_clock, weyl_clock;
  std::string diagram_corpus, system_path, initial_path;
  std::int64_t sim_t = 0, ergodic_m = 0;
  bool spectrum_csv = false;
  std::string conv_spectrum, conv_times, conv_grids;

  CLI::App* check = app.add_subcommand(
      "check", "observable and strong-complementarity law reports");
  add_clock_options(check, check_clock);

  CLI::App* diagram_cmd =
      app.add_subcommand("diagram", "run the equation suite (built-in or .qd)");
  add_clock_options(diagram_cmd, diagram_clock);
  diagram_cmd->add_option("corpus", diagram_corpus, ".qd corpus file");

  CLI::App* simulate =
      app.add_subcommand("simulate", "evaluate dynamics at a time step");
  simulate->add_option("--system", system_path, "system JSON")->required();
  simulate->add_option("--t", sim_t, "time step")->required();
  simulate->add_option("--initial", initial_path,
                       "initial state JSON for a history dump");

  CLI::App* spectrum =
      app.add_subcommand("spectrum", "projector-valued spectrum report");
  spectrum->add_option("--system", system_path, "system JSON")->required();
  spectrum->add_flag("--csv", spectrum_csv, "emit CSV instead of JSON");

  CLI::App* stone =
      app.add_subcommand("stone", "reconstruction round-trip residuals");
  stone->add_option("--system", system_path, "system JSON")->required();

  CLI::App* ergodic =
      app.add_subcommand("ergodic", "phase-weighted group average projector");
  ergodic->add_option("--system", system_path, "system JSON")->required();
  ergodic->add_option("--m", ergodic_m, "energy index")->required();

  CLI::App* weyl =
      app.add_subcommand("weyl", "time/energy exchange residual sweep");
  add_clock_options(weyl, weyl_clock);

  CLI::App* converge =
      app.add_subcommand("converge", "grid refinement study (CSV)");
  converge->add_option("--spectrum", conv_spectrum, "energies, comma separated")
      ->required();
  converge->add_option("--times", conv_times, "times, comma separated")
      ->required();
  converge->add_option("--grids", conv_grids, "grids, e.g. 8x8,16x16")
      ->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (tol <= 0.0) tol = env_default_tol();
    if (tol <= 0.0) throw ParseError("tolerance must be positive");
    if (check->parsed()) return cmd_check(check_clock, tol, seed, out_path);
    if (diagram_cmd->parsed())
      return cmd_diagram(diagram_clock, tol, diagram_corpus, out_path);
    if (simulate->parsed())
      return cmd_simulate(system_path, sim_t, initial_path, tol, out_path);
    if (spectrum->parsed())
      return cmd_spectrum(system_path, tol, spectrum_csv, out_path);
    if (stone->parsed()) return cmd_stone(system_path, tol, out_path);
    if (ergodic->parsed())
      return cmd_ergodic(system_path, ergodic_m, tol, out_path);
    if (weyl->parsed()) return cmd_weyl(weyl_clock, tol, out_path);
    if (converge->parsed())
      return cmd_converge(conv_spectrum, conv_times, conv_grids, out_path);
  } catch (const NotCyclic& e) {
    json err = error_to_json(e.code(), e.what());
    err["residual"] = e.residual;
    std::cerr << err.dump() << std::endl;
    return 2;
  } catch (const Error& e) {
    std::cerr << error_to_json(e.code(), e.what()).dump() << std::endl;
    return 2;
  } catch (const std::exception& e) {
    std::cerr << error_to_json("Internal", e.what()).dump() << std::endl;
    return 2;
  }
  return 2;
}
