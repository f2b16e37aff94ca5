#pragma once

// Momentum space generated by SL(2,C).
//
// A change of frame i = C i0 carries the unitary product along as
// <i,i>_u = U_{rs.} i^r conj(i^s) with U = (C^{-1})^T conj(C^{-1}).  U is
// Hermitian, positive definite and unimodular; read in the Pauli basis,
// U = u_mu sigma^mu, it is a future-pointing unit covector, the 4-velocity.
//
// Conventions fixed here:
//   * u_mu = (1/2) tr(sigma_mu U) (lower index, sigma_mu itself);
//   * a MomentumState stores the physical 3-momentum p^k (contravariant);
//     p_mu = (p_0, -p^1, -p^2, -p^3) and u_mu = p_mu / m;
//   * C = diag(a, 1/a), a > 1 gives u_3 < 0, i.e. motion along +axis 3.

#include "spinrel/bscr.hpp"
#include "spinrel/lorentz.hpp"
#include "spinrel/matrix.hpp"
#include "spinrel/scalar.hpp"
#include "spinrel/spin_tensor.hpp"

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace spinrel {

enum class EnergySign { Positive, Negative };

template <Real T>
T sign_factor(EnergySign s) {
  return s == EnergySign::Positive ? T(1) : T(-1);
}

template <Real T>
using Momentum3 = std::array<T, 3>;

/// x == 1 for a quadratic quantity whose terms have size `scale`: the float
/// test is |x - 1| <= abs_eps + rel_eps * scale, exact equality otherwise.
template <Real T>
bool unit_within(const T& x, const T& scale, const TolerancePolicy& pol) {
  if constexpr (is_exact_v<T>) {
    return x == T(1);
  } else {
    return std::abs(x - 1.0) <= pol.abs_eps + pol.rel_eps * std::max(1.0, scale);
  }
}

/// Hermitian, positive definite, det U = 1.
template <Real T>
class UnitaryMetric {
 public:
  static UnitaryMetric from_matrix(const Matrix2<T>& m, const TolerancePolicy& pol = {}) {
    Herm2<T> h = Herm2<T>::from_matrix(m, pol);
    const T d = det(h.matrix()).re;
    if (!unit_within(d, T(max_abs(h.matrix()) * max_abs(h.matrix())), pol)) {
      throw std::invalid_argument("UnitaryMetric: det U != 1");
    }
    // With det = 1 > 0, positive definite iff the trace is positive.
    if (!(trace(h.matrix()).re > T(0))) {
      throw std::invalid_argument("UnitaryMetric: not positive definite");
    }
    return UnitaryMetric(std::move(h));
  }

  const Matrix2<T>& matrix() const { return h_.matrix(); }
  const Herm2<T>& herm() const { return h_; }

  /// U_{rs.} i^r conj(i^s)
  Complex<T> quadratic_form(const Spinor2<T>& i) const {
    Complex<T> acc;
    for (std::size_t r = 0; r < 2; ++r)
      for (std::size_t s = 0; s < 2; ++s) acc += matrix()(r, s) * i[r] * conj(i[s]);
    return acc;
  }

 private:
  explicit UnitaryMetric(Herm2<T> h) : h_(std::move(h)) {}
  Herm2<T> h_;
};

/// U = (C^{-1})^T conj(C^{-1}); requires det C = 1.
template <Real T>
UnitaryMetric<T> metric_from_sl2(const Matrix2<T>& c, const TolerancePolicy& pol = {}) {
  if (!approx_equal(det(c), Complex<T>(1), pol)) {
    throw std::invalid_argument("metric_from_sl2: det C != 1");
  }
  const Matrix2<T> ci = adjugate(c);
  return UnitaryMetric<T>::from_matrix(transpose(ci) * conj(ci), pol);
}

/// u_mu = (1/2) tr(sigma_mu U).
template <Real T>
CoFourVector<T> covector_from_metric(const UnitaryMetric<T>& u) {
  CoFourVector<T> out;
  for (std::size_t mu = 0; mu < 4; ++mu) {
    out[mu] = trace(Matrix2<T>(pauli<T>(mu) * u.matrix())).re / T(2);
  }
  return out;
}

/// U = u_mu sigma^mu for a covector (no unimodularity check).
template <Real T>
Matrix2<T> metric_matrix(const CoFourVector<T>& u) {
  Matrix2<T> m;
  for (std::size_t mu = 0; mu < 4; ++mu) m += pauli<T>(mu) * Complex<T>(u[mu]);
  return m;
}

/// Contravariant metric components U^{rs.} = (g^{mu nu} u_mu conj(sigma)_nu),
/// satisfying U_{rs.} U^{us.} = delta_r^u.
template <Real T>
Matrix2<T> contravariant_metric(const UnitaryMetric<T>& u) {
  const CoFourVector<T> cov = covector_from_metric(u);
  Matrix2<T> m;
  for (std::size_t mu = 0; mu < 4; ++mu) {
    m += pauli_bar<T>(mu) * Complex<T>(T(metric_g<T>(mu, mu) * cov[mu]));
  }
  return m;
}

/// A free fermion state: mass m > 0, physical 3-momentum p^k, energy sign.
template <Real T>
class MomentumState {
 public:
  MomentumState(T mass, Momentum3<T> p, EnergySign sign = EnergySign::Positive)
      : m_(std::move(mass)), p_(std::move(p)), sign_(sign) {
    if (!(m_ > T(0))) {
      throw std::invalid_argument("MomentumState: mass must be positive");
    }
    energy_ = sign_factor<T>(sign_) *
              sqrt_nonneg(T(p_[0] * p_[0] + p_[1] * p_[1] + p_[2] * p_[2] + m_ * m_));
  }

  const T& mass() const { return m_; }
  const Momentum3<T>& p() const { return p_; }
  EnergySign sign() const { return sign_; }
  /// p_0 = +-sqrt(p^2 + m^2)
  const T& energy() const { return energy_; }

  FourVector<T> contravariant() const { return {{energy_, p_[0], p_[1], p_[2]}}; }
  CoFourVector<T> covariant() const { return lower(contravariant()); }

  /// The positive-definite unitary metric U whose covector (times the
  /// energy sign) is u_mu = p_mu / m.  For negative energy this is the metric
  /// of the positive-energy state at -p, used negated.
  UnitaryMetric<T> metric(const TolerancePolicy& pol = {}) const {
    CoFourVector<T> u = covariant();
    const T s = sign_factor<T>(sign_);
    for (auto& x : u.v) x = s * x / m_;
    return UnitaryMetric<T>::from_matrix(metric_matrix(u), pol);
  }

 private:
  T m_;
  Momentum3<T> p_;
  EnergySign sign_;
  T energy_;
};

/// Hermitian positive definite representative B of a boost, the actual
/// SL(2,C) element being C = B / sqrt(det B).  L(C) and the moved metric are
/// homogeneous in C, so both are exact whenever B is, even when C is not.
template <Real T>
class BoostRay {
 public:
  explicit BoostRay(Matrix2<T> b) : BoostRay(b, det(b).re) {}

  /// With det B supplied by the caller when it is known in closed form.
  BoostRay(Matrix2<T> b, T det_b) : b_(std::move(b)), det_(std::move(det_b)) {
    if (!(det_ > T(0))) {
      throw std::invalid_argument("BoostRay: det B must be positive");
    }
  }

  const Matrix2<T>& representative() const { return b_; }
  const T& det_b() const { return det_; }

  /// C = B / sqrt(det B); NotExactlyRepresentable on the exact backend when
  /// det B is not a rational square.
  Matrix2<T> matrix() const {
    Matrix2<T> c = b_;
    c *= Complex<T>(T(1) / sqrt_nonneg(det_));
    return c;
  }

  /// C rounded to doubles; always available.
  Matrix2<double> matrix_float() const {
    Matrix2<double> c = to_float(b_);
    c *= Complex<double>(1.0 / std::sqrt(to_double(det_)));
    return c;
  }

  /// (C^{-1})^T conj(C^{-1}) = adj(B)^T conj(adj(B)) / det B.
  UnitaryMetric<T> metric(const TolerancePolicy& pol = {}) const {
    const Matrix2<T> adj = adjugate(b_);
    Matrix2<T> u = transpose(adj) * conj(adj);
    u *= Complex<T>(T(1) / det_);
    return UnitaryMetric<T>::from_matrix(u, pol);
  }

  /// L(C) = L(B) / det B.
  LorentzMatrix<T> lorentz() const {
    LorentzMatrix<T> l = lorentz_matrix(b_);
    for (auto& x : l.data) x /= det_;
    return l;
  }

 private:
  Matrix2<T> b_;
  T det_;
};

/// The boost ray for momentum p: B = A + I with A = C^2 = conj(U)^{-1},
/// U the metric of the state.
template <Real T>
BoostRay<T> boost_ray_for_momentum(const T& m, const Momentum3<T>& p,
                                   const TolerancePolicy& pol = {}) {
  const MomentumState<T> state(m, p);
  // det U = 1, so conj(U)^{-1} = adj(conj(U)) and det(A + I) = 2 + tr A.
  const Matrix2<T> a = adjugate(conj(state.metric(pol).matrix()));
  return BoostRay<T>(a + Matrix2<T>::identity(), T(T(2) + trace(a).re));
}

/// The unique Hermitian positive definite C, det C = 1, whose moved metric
/// has u_mu = p_mu / m:  C = A^{1/2} = (A + I) / sqrt(tr A + 2).
template <Real T>
Matrix2<T> boost_for_momentum(const T& m, const Momentum3<T>& p,
                              const TolerancePolicy& pol = {}) {
  return boost_ray_for_momentum(m, p, pol).matrix();
}

template <Real T>
struct SweepPoint {
  Momentum3<T> p;
  BoostRay<T> ray;
  CoFourVector<T> u;

  /// May throw NotExactlyRepresentable on the exact backend.
  Matrix2<T> boost() const { return ray.matrix(); }
};

class GridPointError : public std::runtime_error {
 public:
  GridPointError(std::size_t index, const std::string& what)
      : std::runtime_error("grid point " + std::to_string(index) + ": " + what),
        index_(index) {}
  std::size_t index() const { return index_; }

 private:
  std::size_t index_;
};

/// Boost, metric and 4-velocity for every grid point.  Each result is
/// checked for g^{mu nu} u_mu u_nu = 1 and u_0 > 0.
template <Real T>
std::vector<SweepPoint<T>> sweep_momentum_space(const T& m,
                                                const std::vector<Momentum3<T>>& grid,
                                                const TolerancePolicy& pol = {}) {
  if (!(m > T(0))) {
    throw std::invalid_argument("sweep_momentum_space: mass must be positive");
  }
  std::vector<SweepPoint<T>> out;
  out.reserve(grid.size());
  for (std::size_t idx = 0; idx < grid.size(); ++idx) {
    try {
      const BoostRay<T> ray = boost_ray_for_momentum(m, grid[idx], pol);
      const CoFourVector<T> u = covector_from_metric(ray.metric(pol));
      if (!unit_within(scalar_square(u), T(u[0] * u[0]), pol) || !(u[0] > T(0))) {
        throw IdentityViolation("4-velocity is not a future unit covector");
      }
      out.push_back({grid[idx], ray, u});
    } catch (const std::exception& e) {
      throw GridPointError(idx, e.what());
    }
  }
  return out;
}

}  // namespace spinrel
