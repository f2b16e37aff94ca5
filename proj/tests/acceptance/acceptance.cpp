// Acceptance criteria: one PASS/FAIL line per criterion.  Exit status is 0
// only if every criterion passes.

#include "spinrel/dirac.hpp"
#include "spinrel/momentum.hpp"
#include "spinrel/sampling.hpp"
#include "spinrel/verify.hpp"

#include "json.hpp"

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace spinrel;

namespace {

struct Outcome {
  bool passed;
  std::string detail;
};

int g_failures = 0;

void report(int n, const std::string& title, const Outcome& o) {
  std::cout << (o.passed ? "PASS" : "FAIL") << "  criterion " << n << ": " << title;
  if (!o.detail.empty()) std::cout << "  [" << o.detail << "]";
  std::cout << "\n";
  if (!o.passed) ++g_failures;
}

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(3);
  os << x;
  return os.str();
}

/// Conjunction of named checks from both backends.
Outcome checks(const Report& fl, const Report& ex, std::initializer_list<const char*> names) {
  Outcome o{true, ""};
  for (const char* n : names) {
    const CheckResult* f = fl.find(n);
    const CheckResult* e = ex.find(n);
    if (!f || !e) return {false, std::string("missing check ") + n};
    o.passed = o.passed && f->passed && e->passed;
    if (!o.detail.empty()) o.detail += "; ";
    o.detail += std::string(n) + ": float max " + fmt(f->max_deviation) + " (tol " +
                fmt(f->tolerance) + ", " + std::to_string(f->trials) + " trials), exact max " +
                fmt(e->max_deviation);
  }
  return o;
}

int run_cli(const std::string& args) {
  const std::string cmd = std::string(SPINREL_CLI_PATH) + " " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

nlohmann::json read_without_timing(const std::filesystem::path& p) {
  std::ifstream in(p);
  nlohmann::json j = nlohmann::json::parse(in);
  j.erase("timing");
  return j;
}

}  // namespace

int main() {
  RunConfig float_cfg;
  RunConfig exact_cfg;
  exact_cfg.backend = Backend::Exact;
  const Report fl = run_verify(float_cfg);
  const Report ex = run_verify(exact_cfg);

  report(1, "rank-(3,3) determinant vanishes", checks(fl, ex, {"rank33_law"}));
  report(2, "pairing minor factorises, |[i,k]|^2 >= 0", checks(fl, ex, {"pairing_factorization"}));
  report(3, "det V = scalar square of its components", checks(fl, ex, {"metric_identity"}));
  report(4, "SL(2,C) -> Lorentz: group, homomorphism, double cover",
         checks(fl, ex, {"lorentz_group", "homomorphism", "double_cover"}));
  report(5, "conformal factor |det C|^2 on GL(2,C)", checks(fl, ex, {"conformal_factor"}));

  {
    Outcome o = checks(fl, ex, {"unit_velocity", "boost_round_trip"});
    const auto ray = boost_ray_for_momentum(Rational(4), {Rational(1), Rational(2), Rational(2)});
    const auto u = covector_from_metric(ray.metric());
    const MomentumState<Rational> s(Rational(4), {Rational(1), Rational(2), Rational(2)});
    bool exact = true;
    for (std::size_t mu = 0; mu < 4; ++mu) exact = exact && u[mu] == s.covariant()[mu] / s.mass();
    o.passed = o.passed && exact;
    o.detail += std::string("; m=4, p=(1,2,2): ") + (exact ? "u = p/m exactly" : "mismatch");
    report(6, "momentum geometry: unit 4-velocity, boost round trip", o);
  }

  {
    Outcome o = checks(fl, ex, {"clifford", "dirac_identity"});
    const MomentumState<Rational> s(Rational(4), {Rational(1), Rational(2), Rational(2)});
    const Spinor2<Rational> i{Complex<Rational>(1), Complex<Rational>(0)};
    const double r = dirac_residual(build_psi(i, s), s);
    o.passed = o.passed && r == 0.0;
    o.detail += "; m=4, p=(1,2,2), i=(1,0): residual " + fmt(r);
    report(7, "Dirac equation holds identically, Clifford relations exact", o);
  }

  report(8, "space inversion swaps the two relations", checks(fl, ex, {"p_invariance"}));

  {
    Outcome o = checks(fl, ex, {"current_equals_momentum"});
    const CheckResult* refl = fl.find("current_equals_axis2_reflected_momentum");
    const CheckResult* refl_ex = ex.find("current_equals_axis2_reflected_momentum");
    if (!o.passed && refl && refl_ex) {
      o.detail += "; diagnostic: v = (p0, p1, -p2, p3) holds with float max " +
                  fmt(refl->max_deviation) + ", exact max " + fmt(refl_ex->max_deviation) +
                  ", so the deviation is confined to the axis-2 component";
    }
    report(9, "normalised current v equals momentum p", o);
  }

  report(10, "negative energy with U -> -U", checks(fl, ex, {"negative_energy"}));

  {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "spinrel_acceptance";
    fs::create_directories(dir);
    const fs::path a = dir / "a.json", b = dir / "b.json";
    const int code_a = run_cli("verify --seed 42 --out " + a.string());
    const int code_b = run_cli("verify --seed 42 --out " + b.string());
    const bool same = read_without_timing(a).dump() == read_without_timing(b).dump();
    const int control = run_cli("verify --seed 42 --corrupt-gamma");
    Outcome o{same && code_a == code_b && control != 0,
              std::string("reports ") + (same ? "identical" : "differ") +
                  " outside timing; exit codes " + std::to_string(code_a) + ", " +
                  std::to_string(code_b) + "; corrupted-gamma exit " + std::to_string(control)};
    report(11, "CLI determinism and negative control", o);
  }

  std::cout << (g_failures == 0 ? "all criteria pass" : std::to_string(g_failures) + " criterion(s) failed")
            << "\n";
  return g_failures == 0 ? 0 : 1;
}
