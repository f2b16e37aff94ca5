#pragma once

// Property suites over random trials, and the JSON report they produce.
//
// Each check owns an RNG seeded from (run seed, check name), so results do
// not depend on check order.  Wall-clock data lives only under "timing";
// everything else in a report is a pure function of the RunConfig.

#include "spinrel/bscr.hpp"
#include "spinrel/dirac.hpp"
#include "spinrel/lorentz.hpp"
#include "spinrel/momentum.hpp"
#include "spinrel/sampling.hpp"
#include "spinrel/scalar.hpp"
#include "spinrel/spin_tensor.hpp"

#include "json.hpp"

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace spinrel {

enum class Backend { Exact, Float };

inline const char* to_string(Backend b) { return b == Backend::Exact ? "exact" : "float"; }

struct RunConfig {
  Backend backend = Backend::Float;
  std::uint64_t seed = 42;
  std::size_t trials = 1000;
  std::optional<double> tolerance;  // overrides every float check's tolerance
  bool corrupt_gamma = false;       // negative control
};

struct CheckResult {
  std::string name;
  std::string description;
  bool passed = false;
  double max_deviation = 0.0;
  double tolerance = 0.0;  // 0 on the exact backend: deviation must be exactly 0
  std::size_t trials = 0;
  double wall_seconds = 0.0;
};

struct Report {
  RunConfig config;
  std::vector<CheckResult> checks;
  double wall_seconds = 0.0;

  bool all_passed() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return !checks.empty();
  }
  const CheckResult* find(const std::string& name) const {
    for (const auto& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }
};

inline nlohmann::ordered_json to_json(const Report& r) {
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  nlohmann::ordered_json per_check = nlohmann::ordered_json::object();
  for (const auto& c : r.checks) {
    checks.push_back({{"name", c.name},
                      {"description", c.description},
                      {"status", c.passed ? "pass" : "fail"},
                      {"max_deviation", c.max_deviation},
                      {"tolerance", c.tolerance},
                      {"trials", c.trials},
                      {"seed", r.config.seed},
                      {"backend", to_string(r.config.backend)}});
    per_check[c.name] = c.wall_seconds;
  }
  nlohmann::ordered_json j;
  j["schema"] = 1;
  j["command"] = "verify";
  j["backend"] = to_string(r.config.backend);
  j["seed"] = r.config.seed;
  j["trials"] = r.config.trials;
  j["tolerance_override"] =
      r.config.tolerance ? nlohmann::ordered_json(*r.config.tolerance) : nullptr;
  j["corrupt_gamma"] = r.config.corrupt_gamma;
  j["checks"] = checks;
  j["all_passed"] = r.all_passed();
  j["timing"] = {{"wall_seconds", r.wall_seconds}, {"per_check_seconds", per_check}};
  return j;
}

namespace detail {

/// Running maximum of deviations; exact backends also require exact zeros.
struct Deviation {
  double max = 0.0;
  bool exact_violation = false;

  void add(double d) { max = std::max(max, d); }
  template <Real T>
  void add_exact_zero(const Complex<T>& z) {
    add(magnitude(z));
    if constexpr (is_exact_v<T>) {
      if (!(z == Complex<T>{})) exact_violation = true;
    }
  }
  template <Real T>
  void add_exact_zero_real(const T& x) {
    add(std::abs(to_double(x)));
    if constexpr (is_exact_v<T>) {
      if (!(x == T(0))) exact_violation = true;
    }
  }
  void flag() { exact_violation = true; }
};

inline std::uint64_t check_seed(std::uint64_t seed, const std::string& name) {
  // FNV-1a over the name, mixed with the run seed.
  std::uint64_t h = 1469598103934665603ULL ^ seed;
  for (unsigned char ch : name) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  return h;
}

template <Real T>
class SuiteRunner {
 public:
  explicit SuiteRunner(const RunConfig& cfg) : cfg_(cfg) {}

  /// Runs fn(rng, deviation) `trials` times and records the result.
  void run(const std::string& name, const std::string& description, std::size_t trials,
           double spec_tol, const std::function<void(Rng&, Deviation&)>& trial) {
    const auto start = std::chrono::steady_clock::now();
    Rng rng(check_seed(cfg_.seed, name));
    Deviation dev;
    for (std::size_t t = 0; t < trials; ++t) trial(rng, dev);
    CheckResult r;
    r.name = name;
    r.description = description;
    r.trials = trials;
    if constexpr (is_exact_v<T>) {
      r.tolerance = 0.0;
      r.passed = !dev.exact_violation && dev.max == 0.0;
    } else {
      r.tolerance = cfg_.tolerance.value_or(spec_tol);
      r.passed = !dev.exact_violation && dev.max < r.tolerance;
    }
    r.max_deviation = dev.max;
    r.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    results_.push_back(std::move(r));
  }

  std::vector<CheckResult> take() { return std::move(results_); }

 private:
  const RunConfig& cfg_;
  std::vector<CheckResult> results_;
};

/// Uniformly random proper boost with rapidity in [0, 3): Hermitian
/// cosh(eta/2) I + sinh(eta/2) n.sigma.
inline Matrix2<double> random_float_boost(Rng& rng) {
  double n[3];
  double len2;
  do {
    for (double& x : n) x = uniform(rng, -1.0, 1.0);
    len2 = n[0] * n[0] + n[1] * n[1] + n[2] * n[2];
  } while (len2 < 1e-4 || len2 > 1.0);
  const double len = std::sqrt(len2);
  const double eta = uniform(rng, 0.0, 3.0);
  const double ch = std::cosh(eta / 2), sh = std::sinh(eta / 2);
  Matrix2<double> b = Matrix2<double>::identity() * Complex<double>(ch);
  for (std::size_t k = 0; k < 3; ++k) {
    b += pauli<double>(k + 1) * Complex<double>(sh * n[k] / len);
  }
  return b;
}

template <Real T>
std::vector<CheckResult> run_suites(const RunConfig& cfg) {
  SuiteRunner<T> s(cfg);
  const std::size_t n = cfg.trials;
  const std::size_t half = (cfg.trials + 1) / 2;
  const GammaSet<T> gammas = cfg.corrupt_gamma ? corrupted_gammas<T>() : weyl_gammas<T>();

  s.run("rank33_law", "3x3 determinant of pairings vanishes for any six elements", n, 1e-12,
        [](Rng& rng, Deviation& d) {
          std::array<Spinor2<T>, 6> e;
          for (auto& x : e) x = random_spinor<T>(rng);
          d.add_exact_zero(rank33_determinant(e[0], e[1], e[2], e[3], e[4], e[5]));
        });

  s.run("pairing_factorization",
        "2x2 pairing minor equals [i,k] conj([a,b]); with a=i, b=k it is |[i,k]|^2 >= 0", n,
        1e-12, [](Rng& rng, Deviation& d) {
          const auto i = random_spinor<T>(rng), k = random_spinor<T>(rng);
          const auto a = random_spinor<T>(rng), b = random_spinor<T>(rng);
          d.add_exact_zero(Complex<T>(pairing_minor(i, k, a, b) -
                                      symplectic(i, k) * conj(symplectic(a, b))));
          const Complex<T> self = pairing_minor(i, k, i, k);
          d.add_exact_zero(Complex<T>(self - Complex<T>(norm_sq(symplectic(i, k)))));
          if (self.re < T(0) && !is_zero_real(self.re)) d.flag();
        });

  s.run("metric_identity", "det V equals the Minkowski square of its Pauli components", n,
        1e-12, [](Rng& rng, Deviation& d) {
          Matrix2<T> m;
          m(0, 0) = Complex<T>(Sampler<T>::real(rng));
          m(1, 1) = Complex<T>(Sampler<T>::real(rng));
          m(0, 1) = Sampler<T>::complex(rng);
          m(1, 0) = conj(m(0, 1));
          const Herm2<T> v = Herm2<T>::from_matrix(m);
          d.add_exact_zero(Complex<T>(det(v.matrix()) -
                                      Complex<T>(scalar_square(decompose(v)))));
        });

  s.run("lorentz_group",
        "L(C) preserves g, det L = 1 and L^0_0 >= 1 for C in SL(2,C)", n, 1e-10,
        [](Rng& rng, Deviation& d) {
          const auto l = lorentz_matrix(random_sl2c<T>(rng));
          const LorentzMatrix<T> g = minkowski<T>();
          const LorentzMatrix<T> defect = transpose(l) * g * l - g;
          for (const auto& x : defect.data) d.add_exact_zero_real(x);
          d.add_exact_zero_real(T(det(l) - T(1)));
          if (l(0, 0) < T(1)) d.add_exact_zero_real(T(T(1) - l(0, 0)));
        });

  s.run("homomorphism", "L(C) L(D) = L(C D) for C, D in SL(2,C)", n, 1e-10,
        [](Rng& rng, Deviation& d) {
          const auto c = random_sl2c<T>(rng), e = random_sl2c<T>(rng);
          const LorentzMatrix<T> diff =
              lorentz_matrix(c) * lorentz_matrix(e) - lorentz_matrix(Matrix2<T>(c * e));
          for (const auto& x : diff.data) d.add_exact_zero_real(x);
        });

  s.run("double_cover", "L(-C) = L(C) bit for bit", n, 1e-10, [](Rng& rng, Deviation& d) {
    const auto c = random_sl2c<T>(rng);
    if (!(lorentz_matrix(c) == lorentz_matrix(Matrix2<T>(-c)))) {
      d.flag();
      d.add(max_abs(LorentzMatrix<T>(lorentz_matrix(c) - lorentz_matrix(Matrix2<T>(-c)))));
    }
  });

  s.run("conformal_factor", "(L(C) v)^2 = |det C|^2 v^2 for C in GL(2,C)", half, 1e-10,
        [](Rng& rng, Deviation& d) {
          const auto c = random_gl2c<T>(rng);
          const auto v = random_four_vector<T>(rng);
          const T lhs = scalar_square(FourVector<T>(lorentz_matrix(c) * v));
          const T rhs = norm_sq(det(c)) * scalar_square(v);
          d.add_exact_zero_real(T(lhs - rhs));
        });

  s.run("unit_velocity", "moved unitary metric has g^{mu nu} u_mu u_nu = 1 and u_0 > 0", n,
        1e-12, [](Rng& rng, Deviation& d) {
          Matrix2<T> c;
          if constexpr (is_exact_v<T>) {
            c = random_sl2c<T>(rng);
          } else {
            c = random_float_boost(rng);
          }
          const auto u = covector_from_metric(metric_from_sl2(c, TolerancePolicy(1e-9, 1e-9)));
          d.add_exact_zero_real(T(scalar_square(u) - T(1)));
          if (!(u[0] > T(0))) d.flag();
        });

  s.run("boost_round_trip", "boost for momentum p yields u_mu = p_mu / m", n, 1e-10,
        [](Rng& rng, Deviation& d) {
          const MomentumState<T> st = random_state<T>(rng);
          const BoostRay<T> ray = boost_ray_for_momentum(st.mass(), st.p());
          UnitaryMetric<T> metric = ray.metric();
          if constexpr (!is_exact_v<T>) metric = metric_from_sl2(ray.matrix());
          const auto u = covector_from_metric(metric);
          const auto p = st.covariant();
          for (std::size_t mu = 0; mu < 4; ++mu) {
            d.add_exact_zero_real(T(u[mu] - p[mu] / st.mass()));
          }
        });

  s.run("clifford", "gamma^mu gamma^nu + gamma^nu gamma^mu = 2 g^{mu nu} for all 16 pairs", 1,
        1e-12, [&gammas](Rng&, Deviation& d) {
          for (std::size_t mu = 0; mu < 4; ++mu)
            for (std::size_t nu = 0; nu < 4; ++nu)
              for (const auto& z : anticommutator_defect(gammas, mu, nu).data) {
                // The gamma entries are 0, +-1, +-i: the float products are exact too.
                d.add(magnitude(z));
                if (!(z == Complex<T>{})) d.flag();
              }
        });

  s.run("dirac_identity", "(p_mu gamma^mu - m) psi(p) = 0 for every spinor field value", n,
        1e-10, [&gammas](Rng& rng, Deviation& d) {
          const MomentumState<T> st = random_state<T>(rng);
          const auto res = dirac_operator_apply(build_psi(random_spinor<T>(rng), st), st, gammas);
          for (const auto& z : res.c) d.add_exact_zero(z);
        });

  s.run("p_invariance",
        "space inversion maps the covariant relation onto the contravariant one and back", half,
        1e-10, [](Rng& rng, Deviation& d) {
          const MomentumState<T> st = random_state<T>(rng);
          const UnitaryMetric<T> u = st.metric();
          const Spinor2<T> i = random_spinor<T>(rng);
          const CoSpinorDotted<T> beta = beta_from_i(i, u);
          const CovariantRelation<T> down{u.matrix(), i, beta};
          const ContravariantRelation<T> up{contravariant_metric(u), beta, i};
          const auto r_down = down.residual(), r_up = up.residual();
          const auto r_down_p = p_reflect(down).residual();
          const auto r_up_p = p_reflect(up).residual();
          for (std::size_t r = 0; r < 2; ++r) {
            // The swapped instance must reproduce the other relation exactly.
            if (!(r_down_p[r] == r_down[r]) || !(r_up_p[r] == r_up[r])) d.flag();
            d.add(magnitude(Complex<T>(r_down_p[r] - r_down[r])));
            d.add(magnitude(Complex<T>(r_up_p[r] - r_up[r])));
            // And both relations hold for a constructed pair.
            d.add_exact_zero(r_down[r]);
            d.add_exact_zero(r_up[r]);
          }
          const auto twice = p_reflect(p_reflect(std::pair{i, beta}));
          if (!(twice.first == i) || !(twice.second == beta)) d.flag();
        });

  s.run("current_equals_momentum",
        "with psi^+ gamma^0 psi = 2m the spinor current v^mu equals p^mu", half, 1e-10,
        [](Rng& rng, Deviation& d) {
          const MomentumState<T> st = random_state<T>(rng);
          const FourVector<T> v = normalized_current(random_nonzero_spinor<T>(rng), st);
          const FourVector<T> p = st.contravariant();
          for (std::size_t mu = 0; mu < 4; ++mu) d.add_exact_zero_real(T(v[mu] - p[mu]));
        });

  s.run("current_equals_axis2_reflected_momentum",
        "diagnostic: the same current equals (p^0, p^1, -p^2, p^3)", half, 1e-10,
        [](Rng& rng, Deviation& d) {
          const MomentumState<T> st = random_state<T>(rng);
          const FourVector<T> v = normalized_current(random_nonzero_spinor<T>(rng), st);
          FourVector<T> p = st.contravariant();
          p[2] = -p[2];
          for (std::size_t mu = 0; mu < 4; ++mu) d.add_exact_zero_real(T(v[mu] - p[mu]));
        });

  s.run("negative_energy",
        "with U -> -U the Dirac residual at p_0 = -sqrt(p^2 + m^2) vanishes", n, 1e-10,
        [&gammas](Rng& rng, Deviation& d) {
          const MomentumState<T> st = random_state<T>(rng, EnergySign::Negative);
          const Spinor2<T> i = random_spinor<T>(rng);
          const auto psi = Bispinor<T>::from_pair(i, beta_from_i(i, st.metric(), st.sign()));
          for (const auto& z : dirac_operator_apply(psi, st, gammas).c) d.add_exact_zero(z);
          if (!(st.energy() < T(0))) d.flag();
        });

  return s.take();
}

}  // namespace detail

inline Report run_verify(const RunConfig& cfg) {
  const auto start = std::chrono::steady_clock::now();
  Report r;
  r.config = cfg;
  r.checks = cfg.backend == Backend::Exact ? detail::run_suites<Rational>(cfg)
                                           : detail::run_suites<double>(cfg);
  r.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

/// The report without its "timing" member: the part that must be identical
/// across runs with the same configuration.
inline nlohmann::ordered_json deterministic_part(nlohmann::ordered_json j) {
  j.erase("timing");
  return j;
}

}  // namespace spinrel
