#pragma once

// Mixed spin-tensors V^{rs.} as 2x2 Hermitian matrices, their Pauli-basis
// components and the Minkowski scalar square.
//
// Matrix layout: row index r (undotted), column index s. (dotted), so
// V = i i^+ + k k^+ for the special form built from two spinors.

#include "spinrel/bscr.hpp"
#include "spinrel/matrix.hpp"
#include "spinrel/scalar.hpp"

#include <array>
#include <stdexcept>

namespace spinrel {

/// sigma_0 .. sigma_3 (sigma^mu == sigma_mu).
template <Real T>
const Matrix2<T>& pauli(std::size_t mu) {
  using C = Complex<T>;
  static const std::array<Matrix2<T>, 4> basis{
      Matrix2<T>{{C(1), C(0)}, {C(0), C(1)}},
      Matrix2<T>{{C(0), C(1)}, {C(1), C(0)}},
      Matrix2<T>{{C(0), C(0, -1)}, {C(0, 1), C(0)}},
      Matrix2<T>{{C(1), C(0)}, {C(0), C(-1)}},
  };
  return basis.at(mu);
}

/// conj(sigma_mu) == transpose(sigma_mu).
template <Real T>
Matrix2<T> pauli_bar(std::size_t mu) {
  return conj(pauli<T>(mu));
}

/// Minkowski metric diag(1,-1,-1,-1) entry.
template <Real T>
T metric_g(std::size_t mu, std::size_t nu) {
  if (mu != nu) return T(0);
  return mu == 0 ? T(1) : T(-1);
}

template <Real T>
struct FourVector {
  std::array<T, 4> v{};

  T& operator[](std::size_t mu) { return v.at(mu); }
  const T& operator[](std::size_t mu) const { return v.at(mu); }
  friend bool operator==(const FourVector&, const FourVector&) = default;
  friend FourVector operator-(const FourVector& a, const FourVector& b) {
    FourVector out;
    for (std::size_t mu = 0; mu < 4; ++mu) out[mu] = a[mu] - b[mu];
    return out;
  }
  friend FourVector operator*(const T& s, FourVector a) {
    for (auto& x : a.v) x *= s;
    return a;
  }
};

/// Covariant components u_mu.  Kept as a separate type so index position is
/// visible in signatures.
template <Real T>
struct CoFourVector {
  std::array<T, 4> v{};

  T& operator[](std::size_t mu) { return v.at(mu); }
  const T& operator[](std::size_t mu) const { return v.at(mu); }
  friend bool operator==(const CoFourVector&, const CoFourVector&) = default;
};

template <Real T>
FourVector<T> raise(const CoFourVector<T>& u) {
  return {{u[0], T(-u[1]), T(-u[2]), T(-u[3])}};
}

template <Real T>
CoFourVector<T> lower(const FourVector<T>& v) {
  return {{v[0], T(-v[1]), T(-v[2]), T(-v[3])}};
}

template <Real T>
double max_abs(const FourVector<T>& v) {
  double best = 0.0;
  for (const auto& x : v.v) best = std::max(best, std::abs(to_double(x)));
  return best;
}

template <Real T>
double max_abs(const CoFourVector<T>& v) {
  double best = 0.0;
  for (const auto& x : v.v) best = std::max(best, std::abs(to_double(x)));
  return best;
}

template <Real T>
bool approx_equal(const FourVector<T>& a, const FourVector<T>& b,
                  const TolerancePolicy& pol = {}) {
  for (std::size_t mu = 0; mu < 4; ++mu) {
    if (!approx_equal_real(a[mu], b[mu], pol)) return false;
  }
  return true;
}

/// Deviation of a matrix from Hermiticity, max |M - M^+|.
template <Real T>
double hermiticity_defect(const Matrix2<T>& m) {
  return max_abs(Matrix2<T>(m - adjoint(m)));
}

/// 2x2 Hermitian matrix.  Exact inputs must be Hermitian exactly; float
/// inputs are accepted within tolerance and then symmetrised to (M + M^+)/2.
template <Real T>
class Herm2 {
 public:
  static Herm2 from_matrix(const Matrix2<T>& m, const TolerancePolicy& pol = {}) {
    if constexpr (is_exact_v<T>) {
      if (!(m == adjoint(m))) {
        throw std::invalid_argument("Herm2: matrix is not Hermitian");
      }
      return Herm2(m);
    } else {
      const double scale = max_abs(m);
      if (hermiticity_defect(m) > pol.abs_eps + pol.rel_eps * scale) {
        throw std::invalid_argument("Herm2: matrix is not Hermitian within tolerance");
      }
      Matrix2<T> sym = m + adjoint(m);
      sym *= Complex<T>(0.5);
      return Herm2(sym);
    }
  }

  const Matrix2<T>& matrix() const { return m_; }
  const Complex<T>& operator()(std::size_t r, std::size_t s) const { return m_(r, s); }

  friend bool operator==(const Herm2&, const Herm2&) = default;

 private:
  explicit Herm2(const Matrix2<T>& m) : m_(m) {}
  Matrix2<T> m_;
};

/// V^{rs.} = i^r conj(i^s) + k^r conj(k^s).
template <Real T>
Herm2<T> build_V(const Spinor2<T>& i, const Spinor2<T>& k) {
  Matrix2<T> m;
  for (std::size_t r = 0; r < 2; ++r) {
    for (std::size_t s = 0; s < 2; ++s) {
      m(r, s) = i[r] * conj(i[s]) + k[r] * conj(k[s]);
    }
  }
  // Diagonal entries are real by construction, off-diagonals conjugate.
  return Herm2<T>::from_matrix(m);
}

/// v^mu = (1/2) tr(sigma^mu V).
template <Real T>
FourVector<T> decompose(const Herm2<T>& h) {
  FourVector<T> out;
  for (std::size_t mu = 0; mu < 4; ++mu) {
    out[mu] = trace(Matrix2<T>(pauli<T>(mu) * h.matrix())).re / T(2);
  }
  return out;
}

/// Decompose a raw matrix, checking Hermiticity first.
template <Real T>
FourVector<T> decompose(const Matrix2<T>& m, const TolerancePolicy& pol = {}) {
  return decompose(Herm2<T>::from_matrix(m, pol));
}

/// V = v^mu sigma_mu.
template <Real T>
Herm2<T> recompose(const FourVector<T>& v) {
  Matrix2<T> m;
  for (std::size_t mu = 0; mu < 4; ++mu) m += pauli<T>(mu) * Complex<T>(v[mu]);
  return Herm2<T>::from_matrix(m);
}

/// g_{mu nu} v^mu v^nu.
template <Real T>
T scalar_square(const FourVector<T>& v) {
  return v[0] * v[0] - v[1] * v[1] - v[2] * v[2] - v[3] * v[3];
}

/// g^{mu nu} u_mu u_nu.
template <Real T>
T scalar_square(const CoFourVector<T>& u) {
  return u[0] * u[0] - u[1] * u[1] - u[2] * u[2] - u[3] * u[3];
}

enum class Causal { TimelikeFuture, IsotropicFuture, Other };

inline const char* to_string(Causal c) {
  switch (c) {
    case Causal::TimelikeFuture:
      return "timelike-future";
    case Causal::IsotropicFuture:
      return "isotropic-future";
    case Causal::Other:
      return "other";
  }
  return "other";
}

template <Real T>
Causal classify_causal(const FourVector<T>& v, const TolerancePolicy& pol = {}) {
  if (!(v[0] > T(0)) || is_zero_real(v[0], pol)) return Causal::Other;
  const T sq = scalar_square(v);
  // Compare the square against (v^0)^2 so the float test is scale-free.
  const T scale = v[0] * v[0];
  if constexpr (is_exact_v<T>) {
    if (sq == T(0)) return Causal::IsotropicFuture;
  } else {
    if (std::abs(sq) <= pol.abs_eps + pol.rel_eps * scale) return Causal::IsotropicFuture;
  }
  return sq > T(0) ? Causal::TimelikeFuture : Causal::Other;
}

}  // namespace spinrel
