// spinrel: verification suites, boosts and wave functions from the command line.
//
//   spinrel verify [--backend exact|float] [--seed N] [--trials N] [--tol X]
//   spinrel boost --mass M --p X,Y,Z
//   spinrel wavefunction --mass M --grid FILE (--constant C1,C2 | --random) [--csv FILE]
//
// Every subcommand accepts --out FILE (JSON goes to stdout otherwise).
// Exit status: 0 success, 1 a check or residual failed, 2 bad input.

#include "spinrel/dirac.hpp"
#include "spinrel/grid.hpp"
#include "spinrel/lorentz.hpp"
#include "spinrel/momentum.hpp"
#include "spinrel/sampling.hpp"
#include "spinrel/verify.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

using namespace spinrel;
using json = nlohmann::ordered_json;

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

template <Real T>
json to_json_real(const T& x) {
  if constexpr (is_exact_v<T>) {
    return to_string(x);
  } else {
    return x;
  }
}

template <Real T>
json to_json_complex(const Complex<T>& z) {
  return {{"re", to_json_real(z.re)}, {"im", to_json_real(z.im)}};
}

template <Real T>
json to_json_matrix(const Matrix2<T>& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < 2; ++r) {
    rows.push_back({to_json_complex(m(r, 0)), to_json_complex(m(r, 1))});
  }
  return rows;
}

template <Real T, std::size_t N>
json to_json_array(const std::array<T, N>& a) {
  json out = json::array();
  for (const auto& x : a) out.push_back(to_json_real(x));
  return out;
}

template <Real T>
json to_json_lorentz(const LorentzMatrix<T>& l) {
  json rows = json::array();
  for (std::size_t mu = 0; mu < 4; ++mu) {
    json row = json::array();
    for (std::size_t nu = 0; nu < 4; ++nu) row.push_back(to_json_real(l(mu, nu)));
    rows.push_back(row);
  }
  return rows;
}

void emit(const json& j, const std::string& out_path) {
  const std::string text = j.dump(2) + "\n";
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw UsageError("cannot write '" + out_path + "'");
  out << text;
}

// ---- verify -----------------------------------------------------------------

int cmd_verify(const RunConfig& cfg, const std::string& out_path) {
  const Report report = run_verify(cfg);
  emit(to_json(report), out_path);
  return report.all_passed() ? 0 : kExitFail;
}

// ---- boost ------------------------------------------------------------------

template <Real T>
json boost_report(const T& m, const Momentum3<T>& p) {
  const MomentumState<T> state(m, p);
  const BoostRay<T> ray = boost_ray_for_momentum(m, p);
  json j;
  j["schema"] = 1;
  j["command"] = "boost";
  j["backend"] = is_exact_v<T> ? "exact" : "float";
  j["mass"] = to_json_real(m);
  j["p"] = to_json_array(p);
  j["energy"] = to_json_real(state.energy());
  try {
    j["boost_matrix"] = to_json_matrix(ray.matrix());
    j["boost_matrix_backend"] = j["backend"];
  } catch (const NotExactlyRepresentable&) {
    // C = B / sqrt(det B) with det B not a rational square.
    j["boost_matrix"] = to_json_matrix(ray.matrix_float());
    j["boost_matrix_backend"] = "float";
  }
  j["boost_ray"] = {{"representative", to_json_matrix(ray.representative())},
                    {"det", to_json_real(ray.det_b())}};
  const UnitaryMetric<T> metric = ray.metric();
  j["metric"] = to_json_matrix(metric.matrix());
  j["u"] = to_json_array(covector_from_metric(metric).v);
  j["lorentz"] = to_json_lorentz(ray.lorentz());
  return j;
}

// ---- wavefunction -------------------------------------------------------------

struct FieldSpec {
  std::optional<std::array<std::string, 2>> constant;
  std::uint64_t seed = 42;
};

template <Real T>
Spinor2<T> constant_spinor(const std::array<std::string, 2>& c) {
  if constexpr (is_exact_v<T>) {
    return {parse_complex_exact(c[0]), parse_complex_exact(c[1])};
  } else {
    return {parse_complex_float(c[0]), parse_complex_float(c[1])};
  }
}

struct CsvRow {
  std::size_t index;
  std::array<double, 3> p;
  double energy;
  std::array<Complex<double>, 4> psi;
  double residual;
};

template <Real T>
json wavefunction_report(const T& m, const std::vector<Momentum3<T>>& points,
                         const std::vector<std::size_t>& lines, const FieldSpec& field_spec,
                         double tol, std::vector<CsvRow>& csv, bool& all_ok) {
  SpinorField<T> field;
  Rng rng(field_spec.seed);
  for (const auto& p : points) {
    field.samples.push_back(
        {p, field_spec.constant ? constant_spinor<T>(*field_spec.constant) : random_spinor<T>(rng)});
  }
  const std::vector<Bispinor<T>> psis = build_psi(field, m);

  json j;
  j["schema"] = 1;
  j["command"] = "wavefunction";
  j["backend"] = is_exact_v<T> ? "exact" : "float";
  j["mass"] = to_json_real(m);
  j["field"] = field_spec.constant ? json{{"kind", "constant"},
                                    {"value", {(*field_spec.constant)[0], (*field_spec.constant)[1]}}}
                             : json{{"kind", "random"}, {"seed", field_spec.seed}};
  j["tolerance"] = is_exact_v<T> ? 0.0 : tol;
  json out = json::array();
  double worst = 0.0;
  all_ok = true;
  for (std::size_t idx = 0; idx < points.size(); ++idx) {
    const MomentumState<T> state(m, points[idx]);
    const auto& psi = psis[idx];
    const double residual = dirac_residual(psi, state);
    const bool ok = is_exact_v<T> ? residual == 0.0 : residual < tol;
    all_ok = all_ok && ok;
    worst = std::max(worst, residual);
    json psi_json = json::array();
    for (const auto& z : psi.c) psi_json.push_back(to_json_complex(z));
    out.push_back({{"index", idx},
                   {"line", lines[idx]},
                   {"p", to_json_array(points[idx])},
                   {"energy", to_json_real(state.energy())},
                   {"i", {to_json_complex(field.samples[idx].value.c1),
                          to_json_complex(field.samples[idx].value.c2)}},
                   {"psi", psi_json},
                   {"dirac_residual", residual},
                   {"status", ok ? "pass" : "fail"}});
    CsvRow row{idx, {}, to_double(state.energy()), {}, residual};
    for (std::size_t k = 0; k < 3; ++k) row.p[k] = to_double(points[idx][k]);
    for (std::size_t r = 0; r < 4; ++r) row.psi[r] = to_float(psi.c[r]);
    csv.push_back(row);
  }
  j["points"] = out;
  j["max_dirac_residual"] = worst;
  j["all_passed"] = all_ok;
  return j;
}

void write_csv(const std::vector<CsvRow>& rows, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write '" + path + "'");
  out.precision(17);
  out << "index,p1,p2,p3,energy";
  for (int r = 1; r <= 4; ++r) out << ",psi" << r << "_re,psi" << r << "_im";
  out << ",dirac_residual\n";
  for (const auto& row : rows) {
    out << row.index << ',' << row.p[0] << ',' << row.p[1] << ',' << row.p[2] << ','
        << row.energy;
    for (const auto& z : row.psi) out << ',' << z.re << ',' << z.im;
    out << ',' << row.residual << '\n';
  }
}

std::vector<std::string> split_list(const std::string& text, std::size_t expected,
                                    const std::string& what) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : text) {
    if (c == ',') {
      parts.push_back(cur);
      cur.clear();
    } else if (c != ' ') {
      cur += c;
    }
  }
  parts.push_back(cur);
  if (parts.size() != expected) {
    throw UsageError(what + ": expected " + std::to_string(expected) +
                     " comma-separated values, got '" + text + "'");
  }
  return parts;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spinrel: 2-spinor relations, Lorentz maps and Dirac wave functions"};
  app.require_subcommand(1);
  std::string out_path;
  app.add_option("--out", out_path, "write the JSON report to FILE");

  RunConfig cfg;
  std::string backend = "float";
  double tol = 0.0;
  auto* verify = app.add_subcommand("verify", "run the identity suites");
  verify->add_option("--backend", backend)->check(CLI::IsMember({"exact", "float"}));
  verify->add_option("--seed", cfg.seed);
  verify->add_option("--trials", cfg.trials)->check(CLI::PositiveNumber);
  auto* tol_opt = verify->add_option("--tol", tol)->check(CLI::PositiveNumber);
  verify->add_flag("--corrupt-gamma", cfg.corrupt_gamma, "negative control: use a broken gamma set");
  verify->add_option("--out", out_path);

  std::string mass_text, p_text;
  auto* boost = app.add_subcommand("boost", "boost, metric, 4-velocity and L for a momentum");
  boost->add_option("--mass", mass_text)->required();
  boost->add_option("--p", p_text)->required();
  boost->add_option("--out", out_path);

  std::string grid_path, constant_text, csv_path;
  bool random_field = false;
  FieldSpec field_spec;
  double wf_tol = 1e-10;
  auto* wave = app.add_subcommand("wavefunction", "bispinor wave function over a grid");
  wave->add_option("--mass", mass_text)->required();
  wave->add_option("--grid", grid_path)->required();
  auto* const_opt = wave->add_option("--constant", constant_text);
  auto* rand_opt = wave->add_flag("--random", random_field);
  const_opt->excludes(rand_opt);
  wave->add_option("--seed", field_spec.seed);
  wave->add_option("--tol", wf_tol)->check(CLI::PositiveNumber);
  wave->add_option("--csv", csv_path, "also write the grid as CSV");
  wave->add_option("--out", out_path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*verify) {
      cfg.backend = backend == "exact" ? Backend::Exact : Backend::Float;
      if (*tol_opt) cfg.tolerance = tol;
      return cmd_verify(cfg, out_path);
    }

    if (*boost) {
      const auto fields = split_list(p_text, 3, "--p");
      bool exact = is_rational_literal(mass_text);
      for (const auto& f : fields) exact = exact && is_rational_literal(f);
      if (exact) {
        const Rational m = parse_rational(mass_text);
        if (!(m > 0)) throw UsageError("--mass must be positive");
        try {
          emit(boost_report<Rational>(
                   m, {parse_rational(fields[0]), parse_rational(fields[1]),
                       parse_rational(fields[2])}),
               out_path);
          return 0;
        } catch (const NotExactlyRepresentable&) {
          // p^2 + m^2 is not a rational square.
          exact = false;
        }
      }
      if (!exact) {
        const double m = parse_real(mass_text);
        if (!(m > 0)) throw UsageError("--mass must be positive");
        emit(boost_report<double>(
                 m, {parse_real(fields[0]), parse_real(fields[1]), parse_real(fields[2])}),
             out_path);
      }
      return 0;
    }

    if (*wave) {
      if (!*const_opt && !random_field) {
        throw UsageError("wavefunction: give --constant C1,C2 or --random");
      }
      if (*const_opt) {
        const auto c = split_list(constant_text, 2, "--constant");
        field_spec.constant = std::array<std::string, 2>{c[0], c[1]};
        for (const auto& x : c) parse_complex_float(x);  // validate early
      }
      MomentumGrid grid;
      try {
        grid = parse_grid_file(grid_path);
      } catch (const GridParseError& e) {
        throw UsageError(grid_path + ": " + e.what());
      }
      bool exact = grid.exact && is_rational_literal(mass_text);
      if (field_spec.constant) {
        exact = exact && is_exact_complex_literal((*field_spec.constant)[0]) &&
                is_exact_complex_literal((*field_spec.constant)[1]);
      }
      std::vector<CsvRow> csv;
      bool ok = false;
      json report;
      bool done = false;
      if (exact) {
        const Rational m = parse_rational(mass_text);
        if (!(m > 0)) throw UsageError("--mass must be positive");
        try {
          report = wavefunction_report<Rational>(m, grid.exact_points, grid.lines, field_spec, wf_tol,
                                                 csv, ok);
          done = true;
        } catch (const NotExactlyRepresentable&) {
          // Some p^2 + m^2 is not a rational square: fall back to doubles.
          csv.clear();
        }
      }
      if (!done) {
        const double m = parse_real(mass_text);
        if (!(m > 0)) throw UsageError("--mass must be positive");
        report = wavefunction_report<double>(m, grid.float_points, grid.lines, field_spec, wf_tol, csv,
                                             ok);
        if (grid.exact) report["backend_note"] = "energy not rational at some grid point";
      }
      emit(report, out_path);
      if (!csv_path.empty()) write_csv(csv, csv_path);
      return ok ? 0 : kExitFail;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitUsage;
}
