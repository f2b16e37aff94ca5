#pragma once

// Bispinor wave functions in momentum representation.
//
// The antilinear automorphism i -> k with conj(k^u) = eps^{su} U_{rs.} i^r
// lowers to beta_s. = U_{rs.} i^r, i.e. beta = U^T i.  With p_mu = m u_mu
// and the off-diagonal gamma matrices below, the pair of relations
//
//   U^{rs.} beta_s. = i^r            (contravariant metric)
//   U_{rs.} i^r     = beta_s.
//
// is exactly (p_mu gamma^mu - m) psi = 0 for psi = (i^1, i^2, beta_1., beta_2.).
// The Dirac equation therefore holds identically for every 2-spinor field.

#include "spinrel/bscr.hpp"
#include "spinrel/matrix.hpp"
#include "spinrel/momentum.hpp"
#include "spinrel/scalar.hpp"
#include "spinrel/spin_tensor.hpp"

#include <array>
#include <stdexcept>
#include <utility>
#include <vector>

namespace spinrel {

template <Real T>
using GammaSet = std::array<Matrix4C<T>, 4>;

namespace detail {

template <Real T>
Matrix4C<T> block_offdiag(const Matrix2<T>& upper_right, const Matrix2<T>& lower_left) {
  Matrix4C<T> g;
  for (std::size_t r = 0; r < 2; ++r) {
    for (std::size_t c = 0; c < 2; ++c) {
      g(r, c + 2) = upper_right(r, c);
      g(r + 2, c) = lower_left(r, c);
    }
  }
  return g;
}

}  // namespace detail

/// gamma^0 = [[0, sigma^0], [sigma^0, 0]],
/// gamma^k = [[0, -conj(sigma)^k], [conj(sigma)^k, 0]].
template <Real T>
GammaSet<T> weyl_gammas() {
  GammaSet<T> out;
  out[0] = detail::block_offdiag(pauli<T>(0), pauli<T>(0));
  for (std::size_t k = 1; k < 4; ++k) {
    const Matrix2<T> sb = pauli_bar<T>(k);
    out[k] = detail::block_offdiag(Matrix2<T>(-sb), sb);
  }
  return out;
}

/// A deliberately broken gamma set (gamma^2 lower block sign flipped), used
/// as a negative control by the verification suites.
template <Real T>
GammaSet<T> corrupted_gammas() {
  GammaSet<T> out = weyl_gammas<T>();
  const Matrix2<T> sb = pauli_bar<T>(2);
  out[2] = detail::block_offdiag(Matrix2<T>(-sb), Matrix2<T>(-sb));
  return out;
}

/// max |gamma^mu gamma^nu + gamma^nu gamma^mu - 2 g^{mu nu} I| over one pair.
template <Real T>
Matrix4C<T> anticommutator_defect(const GammaSet<T>& g, std::size_t mu, std::size_t nu) {
  Matrix4C<T> d = g[mu] * g[nu] + g[nu] * g[mu];
  d -= Matrix4C<T>::identity() * Complex<T>(T(2) * metric_g<T>(mu, nu));
  return d;
}

/// Components in the fixed order (i^1, i^2, beta_1., beta_2.).
template <Real T>
struct Bispinor {
  std::array<Complex<T>, 4> c{};

  static Bispinor from_pair(const Spinor2<T>& i, const CoSpinorDotted<T>& beta) {
    return {{i.c1, i.c2, beta.b1, beta.b2}};
  }
  Spinor2<T> upper() const { return {c[0], c[1]}; }
  CoSpinorDotted<T> lower() const { return {c[2], c[3]}; }

  friend bool operator==(const Bispinor&, const Bispinor&) = default;
};

template <Real T>
Bispinor<T> operator*(const Matrix4C<T>& m, const Bispinor<T>& psi) {
  Bispinor<T> out;
  for (std::size_t r = 0; r < 4; ++r) {
    Complex<T> acc;
    for (std::size_t c = 0; c < 4; ++c) acc += m(r, c) * psi.c[c];
    out.c[r] = acc;
  }
  return out;
}

template <Real T>
double max_abs(const Bispinor<T>& psi) {
  double best = 0.0;
  for (const auto& z : psi.c) best = std::max(best, magnitude(z));
  return best;
}

/// A finite sample of a 2-spinor field over momentum space, in grid order.
template <Real T>
struct SpinorField {
  struct Sample {
    Momentum3<T> p;
    Spinor2<T> value;
  };
  std::vector<Sample> samples;
};

/// k with conj(k^u) = eps^{su} (+-U)_{rs.} i^r (r summed).  Antilinear in i;
/// applied twice with the same unimodular U it returns -i.
template <Real T>
Spinor2<T> hodge_automorphism(const Spinor2<T>& i, const UnitaryMetric<T>& u,
                              EnergySign sign = EnergySign::Positive) {
  const Complex<T> s(sign_factor<T>(sign));
  Spinor2<T> ck;
  for (std::size_t uu = 0; uu < 2; ++uu) {
    Complex<T> acc;
    for (std::size_t ss = 0; ss < 2; ++ss) {
      const int e = Epsilon::upper[ss][uu];
      if (e == 0) continue;
      for (std::size_t r = 0; r < 2; ++r) {
        acc += Complex<T>(e) * u.matrix()(r, ss) * i[r];
      }
    }
    ck[uu] = s * acc;
  }
  return conj(ck);
}

/// beta_r. = eps_{ru} conj(k^u): the dotted covariant image of a Hodge
/// output.
template <Real T>
CoSpinorDotted<T> lower_dotted_conjugate(const Spinor2<T>& k) {
  CoSpinorDotted<T> out;
  for (std::size_t r = 0; r < 2; ++r) {
    Complex<T> acc;
    for (std::size_t uu = 0; uu < 2; ++uu) {
      const int e = Epsilon::lower[r][uu];
      if (e != 0) acc += Complex<T>(e) * conj(k[uu]);
    }
    out[r] = acc;
  }
  return out;
}

/// Inverse of lower_dotted_conjugate: k^u from beta_r..
template <Real T>
Spinor2<T> raise_dotted_conjugate(const CoSpinorDotted<T>& beta) {
  // eps_lower^{-1} = eps_upper^T
  Spinor2<T> ck;
  for (std::size_t uu = 0; uu < 2; ++uu) {
    Complex<T> acc;
    for (std::size_t r = 0; r < 2; ++r) {
      const int e = Epsilon::upper[r][uu];
      if (e != 0) acc += Complex<T>(e) * beta[r];
    }
    ck[uu] = acc;
  }
  return conj(ck);
}

/// beta_s. = (+-U)_{rs.} i^r = (+-U)^T i; linear in i.
template <Real T>
CoSpinorDotted<T> beta_from_i(const Spinor2<T>& i, const UnitaryMetric<T>& u,
                              EnergySign sign = EnergySign::Positive) {
  const Spinor2<T> b = transpose(u.matrix()) * i;
  const Complex<T> s(sign_factor<T>(sign));
  return {s * b.c1, s * b.c2};
}

/// i^r = (+-U)^{rs.} beta_s. with the contravariant metric components.
template <Real T>
Spinor2<T> inverse_beta(const CoSpinorDotted<T>& beta, const UnitaryMetric<T>& u,
                        EnergySign sign = EnergySign::Positive) {
  const CoSpinorDotted<T> i = contravariant_metric(u) * beta;
  const Complex<T> s(sign_factor<T>(sign));
  return {s * i.b1, s * i.b2};
}

// Space inversion swaps the undotted and dotted members of a pair.

template <Real T>
std::pair<CoSpinorDotted<T>, Spinor2<T>> p_reflect(
    const std::pair<Spinor2<T>, CoSpinorDotted<T>>& pair) {
  return {CoSpinorDotted<T>{pair.first.c1, pair.first.c2},
          Spinor2<T>{pair.second.b1, pair.second.b2}};
}

template <Real T>
std::pair<Spinor2<T>, CoSpinorDotted<T>> p_reflect(
    const std::pair<CoSpinorDotted<T>, Spinor2<T>>& pair) {
  return {Spinor2<T>{pair.first.b1, pair.first.b2},
          CoSpinorDotted<T>{pair.second.c1, pair.second.c2}};
}

/// Induced action on a spin-tensor: V^{rs.} -> V_{sr.} = eps_{st} eps_{ru} V^{tu}.
template <Real T>
Herm2<T> p_reflect(const Herm2<T>& v) {
  const Matrix2<T> e = epsilon_lower<T>();
  return Herm2<T>::from_matrix(e * transpose(v.matrix()) * transpose(e));
}

template <Real T>
FourVector<T> p_reflect(const FourVector<T>& v) {
  return {{v[0], T(-v[1]), T(-v[2]), T(-v[3])}};
}

/// U^{rs.} beta_s. = i^r, carried as its data so the P swap can act on it.
template <Real T>
struct ContravariantRelation {
  Matrix2<T> metric_up;  // U^{rs.}
  CoSpinorDotted<T> beta;
  Spinor2<T> i;

  /// lhs - rhs, as components indexed by r.
  std::array<Complex<T>, 2> residual() const {
    const CoSpinorDotted<T> lhs = metric_up * beta;
    return {lhs.b1 - i.c1, lhs.b2 - i.c2};
  }
};

/// U_{rs.} i^r = beta_s..
template <Real T>
struct CovariantRelation {
  Matrix2<T> metric_down;  // U_{rs.}
  Spinor2<T> i;
  CoSpinorDotted<T> beta;

  std::array<Complex<T>, 2> residual() const {
    const Spinor2<T> lhs = transpose(metric_down) * i;
    return {lhs.c1 - beta.b1, lhs.c2 - beta.b2};
  }
};

/// P acting on every member: i^r <-> beta_r., U^{rs.} <-> U_{sr.}.
template <Real T>
CovariantRelation<T> p_reflect(const ContravariantRelation<T>& rel) {
  return {transpose(rel.metric_up), Spinor2<T>{rel.beta.b1, rel.beta.b2},
          CoSpinorDotted<T>{rel.i.c1, rel.i.c2}};
}

template <Real T>
ContravariantRelation<T> p_reflect(const CovariantRelation<T>& rel) {
  return {transpose(rel.metric_down), CoSpinorDotted<T>{rel.i.c1, rel.i.c2},
          Spinor2<T>{rel.beta.b1, rel.beta.b2}};
}

/// p_mu conj(sigma)^mu / m.
template <Real T>
Matrix2<T> lower_block_operator(const MomentumState<T>& state) {
  const CoFourVector<T> p = state.covariant();
  Matrix2<T> m;
  for (std::size_t mu = 0; mu < 4; ++mu) m += pauli_bar<T>(mu) * Complex<T>(p[mu]);
  m *= Complex<T>(T(1) / state.mass());
  return m;
}

/// psi(p) = (i ; p_mu conj(sigma)^mu i / m).
template <Real T>
Bispinor<T> build_psi(const Spinor2<T>& i, const MomentumState<T>& state) {
  const Spinor2<T> lower = lower_block_operator(state) * i;
  return Bispinor<T>::from_pair(i, CoSpinorDotted<T>{lower.c1, lower.c2});
}

/// psi at every sample of the field.  All samples share mass and energy sign.
template <Real T>
std::vector<Bispinor<T>> build_psi(const SpinorField<T>& field, const T& mass,
                                   EnergySign sign = EnergySign::Positive) {
  if (!(mass > T(0))) {
    throw std::invalid_argument("build_psi: mass must be positive");
  }
  std::vector<Bispinor<T>> out;
  out.reserve(field.samples.size());
  for (const auto& s : field.samples) {
    out.push_back(build_psi(s.value, MomentumState<T>(mass, s.p, sign)));
  }
  return out;
}

/// (p_mu gamma^mu - m) psi.
template <Real T>
Bispinor<T> dirac_operator_apply(const Bispinor<T>& psi, const MomentumState<T>& state,
                                 const GammaSet<T>& gammas = weyl_gammas<T>()) {
  const CoFourVector<T> p = state.covariant();
  Matrix4C<T> op = Matrix4C<T>::identity() * Complex<T>(T(-state.mass()));
  for (std::size_t mu = 0; mu < 4; ++mu) op += gammas[mu] * Complex<T>(p[mu]);
  return op * psi;
}

/// Max-norm of (p_mu gamma^mu - m) psi.  Exactly 0.0 for exact inputs that
/// satisfy the equation.
template <Real T>
double dirac_residual(const Bispinor<T>& psi, const MomentumState<T>& state,
                      const GammaSet<T>& gammas = weyl_gammas<T>()) {
  return max_abs(dirac_operator_apply(psi, state, gammas));
}

/// psi^+ gamma^0 psi = 2 Re(i^+ beta).
template <Real T>
T dirac_density(const Bispinor<T>& psi) {
  const Bispinor<T> g0psi = weyl_gammas<T>()[0] * psi;
  Complex<T> acc;
  for (std::size_t r = 0; r < 4; ++r) acc += conj(psi.c[r]) * g0psi.c[r];
  return acc.re;
}

/// v^mu = (1/2)(i^+ sigma^mu i + k^+ sigma^mu k).
template <Real T>
FourVector<T> current_vector(const Spinor2<T>& i, const Spinor2<T>& k) {
  return decompose(build_V(i, k));
}

/// Rescales i so that psi^+ gamma^0 psi = 2m (float only: the factor is a
/// square root).
template <Real T>
Spinor2<T> normalize_spinor(const Spinor2<T>& i, const MomentumState<T>& state) {
  const T density = dirac_density(build_psi(i, state));
  if (!(density > T(0))) {
    throw std::domain_error("normalize_spinor: psi^+ gamma^0 psi must be positive");
  }
  const T scale = sqrt_nonneg(T(T(2) * state.mass() / density));
  return Complex<T>(scale) * i;
}

/// The current of a state after normalising psi^+ gamma^0 psi = 2m.  On the
/// exact backend the rescale is applied to v (v is quadratic in i), so no
/// square root is taken.
template <Real T>
FourVector<T> normalized_current(const Spinor2<T>& i, const MomentumState<T>& state) {
  const Bispinor<T> psi = build_psi(i, state);
  const Spinor2<T> k = hodge_automorphism(i, state.metric(), state.sign());
  if constexpr (is_exact_v<T>) {
    const T density = dirac_density(psi);
    if (density == T(0)) {
      throw std::domain_error("normalized_current: psi^+ gamma^0 psi is zero");
    }
    return (T(2) * state.mass() / density) * current_vector(i, k);
  } else {
    const Spinor2<T> in = normalize_spinor(i, state);
    return current_vector(in, hodge_automorphism(in, state.metric(), state.sign()));
  }
}

/// v^mu == p^mu after normalisation.
template <Real T>
bool normalization_check(const Spinor2<T>& i, const MomentumState<T>& state,
                         const TolerancePolicy& pol = {}) {
  const FourVector<T> v = normalized_current(i, state);
  const FourVector<T> p = state.contravariant();
  if constexpr (is_exact_v<T>) {
    return v == p;
  } else {
    const double scale = max_abs(p);
    for (std::size_t mu = 0; mu < 4; ++mu) {
      if (std::abs(v[mu] - p[mu]) > pol.abs_eps + pol.rel_eps * scale) return false;
    }
    return true;
  }
}

}  // namespace spinrel
