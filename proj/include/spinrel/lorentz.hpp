#pragma once

// The active action V -> C V C^+ on Herm(2) and its 4x4 real matrix
// L(C)^mu_nu = (1/2) tr(sigma^mu C sigma_nu C^+).
//
// For C in SL(2,C) this is the 2-to-1 epimorphism onto the proper
// orthochronous Lorentz group; for general GL(2,C) it is conformal with
// factor |det C|^2.  lift_lorentz provides an explicit preimage.

#include "spinrel/matrix.hpp"
#include "spinrel/scalar.hpp"
#include "spinrel/spin_tensor.hpp"

#include <stdexcept>

namespace spinrel {

template <Real T>
using LorentzMatrix = Matrix4R<T>;

template <Real T>
LorentzMatrix<T> minkowski() {
  LorentzMatrix<T> g;
  for (std::size_t mu = 0; mu < 4; ++mu) g(mu, mu) = metric_g<T>(mu, mu);
  return g;
}

template <Real T>
FourVector<T> operator*(const LorentzMatrix<T>& l, const FourVector<T>& v) {
  FourVector<T> out;
  for (std::size_t mu = 0; mu < 4; ++mu) {
    T acc(0);
    for (std::size_t nu = 0; nu < 4; ++nu) acc += l(mu, nu) * v[nu];
    out[mu] = acc;
  }
  return out;
}

/// C V C^+.
template <Real T>
Herm2<T> act(const Matrix2<T>& c, const Herm2<T>& v) {
  return Herm2<T>::from_matrix(c * v.matrix() * adjoint(c));
}

template <Real T>
LorentzMatrix<T> lorentz_matrix(const Matrix2<T>& c) {
  const Matrix2<T> cd = adjoint(c);
  LorentzMatrix<T> l;
  for (std::size_t nu = 0; nu < 4; ++nu) {
    const Matrix2<T> image = c * pauli<T>(nu) * cd;
    for (std::size_t mu = 0; mu < 4; ++mu) {
      l(mu, nu) = trace(Matrix2<T>(pauli<T>(mu) * image)).re / T(2);
    }
  }
  return l;
}

/// max |L^T g L - g|.
template <Real T>
double lorentz_defect(const LorentzMatrix<T>& l) {
  const LorentzMatrix<T> g = minkowski<T>();
  return max_abs(LorentzMatrix<T>(transpose(l) * g * l - g));
}

/// L(C) L(D) == L(C D) within tolerance (exactly on the exact backend).
template <Real T>
bool verify_homomorphism(const Matrix2<T>& c, const Matrix2<T>& d,
                         const TolerancePolicy& pol = {}) {
  const LorentzMatrix<T> lhs = lorentz_matrix(c) * lorentz_matrix(d);
  const LorentzMatrix<T> rhs = lorentz_matrix(Matrix2<T>(c * d));
  for (std::size_t k = 0; k < 16; ++k) {
    if (!approx_equal_real(lhs.data[k], rhs.data[k], pol)) return false;
  }
  return true;
}

class IdentityViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Returns |det C|^2 after checking (L(C)v)^2 == |det C|^2 v^2.
template <Real T>
T conformal_factor(const Matrix2<T>& c, const FourVector<T>& v,
                   const TolerancePolicy& pol = {}) {
  const T factor = norm_sq(det(c));
  const T before = scalar_square(v);
  const T after = scalar_square(FourVector<T>(lorentz_matrix(c) * v));
  const T expected = factor * before;
  bool ok;
  if constexpr (is_exact_v<T>) {
    ok = after == expected;
  } else {
    // Both sides carry magnitude |L v|^2; compare on that scale.
    const double scale = std::max({std::abs(after), std::abs(expected),
                                   factor * max_abs(v) * max_abs(v)});
    ok = std::abs(after - expected) <= pol.abs_eps + pol.rel_eps * scale;
  }
  if (!ok) {
    throw IdentityViolation("conformal_factor: scalar square not scaled by |det C|^2");
  }
  return factor;
}

/// Positive square root of a Hermitian positive definite 2x2 matrix:
/// (A + sqrt(det A) I) / sqrt(tr A + 2 sqrt(det A)).
template <Real T>
Matrix2<T> sqrt_positive(const Matrix2<T>& a) {
  const T d = sqrt_nonneg(det(a).re);
  const T norm = sqrt_nonneg(T(trace(a).re + T(2) * d));
  Matrix2<T> out = a + Matrix2<T>::identity() * Complex<T>(d);
  out *= Complex<T>(T(1) / norm);
  return out;
}

namespace detail {

template <Real T>
bool nonpositive_within(const T& x, const TolerancePolicy& pol) {
  if constexpr (is_exact_v<T>) {
    return x <= T(0);
  } else {
    return x <= pol.abs_eps;
  }
}

/// Unit quaternion (w, x, y, z) of a proper 3x3 rotation (Shepperd's method,
/// picking the largest pivot).  Rotation about n by theta has
/// (w, x, y, z) = (cos theta/2, sin theta/2 n).
template <Real T>
std::array<T, 4> quaternion_of(const Matrix<T, 3, 3>& r) {
  const T t = r(0, 0) + r(1, 1) + r(2, 2);
  const T four(4);
  if (t >= r(0, 0) && t >= r(1, 1) && t >= r(2, 2)) {
    const T w = sqrt_nonneg(T(T(1) + t)) / T(2);
    return {w, (r(2, 1) - r(1, 2)) / (four * w), (r(0, 2) - r(2, 0)) / (four * w),
            (r(1, 0) - r(0, 1)) / (four * w)};
  }
  if (r(0, 0) >= r(1, 1) && r(0, 0) >= r(2, 2)) {
    const T x = sqrt_nonneg(T(T(1) + r(0, 0) - r(1, 1) - r(2, 2))) / T(2);
    return {(r(2, 1) - r(1, 2)) / (four * x), x, (r(0, 1) + r(1, 0)) / (four * x),
            (r(0, 2) + r(2, 0)) / (four * x)};
  }
  if (r(1, 1) >= r(2, 2)) {
    const T y = sqrt_nonneg(T(T(1) - r(0, 0) + r(1, 1) - r(2, 2))) / T(2);
    return {(r(0, 2) - r(2, 0)) / (four * y), (r(0, 1) + r(1, 0)) / (four * y), y,
            (r(1, 2) + r(2, 1)) / (four * y)};
  }
  const T z = sqrt_nonneg(T(T(1) - r(0, 0) - r(1, 1) + r(2, 2))) / T(2);
  return {(r(1, 0) - r(0, 1)) / (four * z), (r(0, 2) + r(2, 0)) / (four * z),
          (r(1, 2) + r(2, 1)) / (four * z), z};
}

template <Real T>
Matrix2<T> fix_sign(Matrix2<T> c, const TolerancePolicy& pol) {
  const T re_tr = trace(c).re;
  bool negate;
  if (!is_zero_real(re_tr, pol)) {
    negate = re_tr < T(0);
  } else {
    negate = false;
    for (const auto& e : c.data) {
      if (!is_zero_real(e.re, pol)) {
        negate = e.re < T(0);
        break;
      }
      if (!is_zero_real(e.im, pol)) {
        negate = e.im < T(0);
        break;
      }
    }
  }
  return negate ? Matrix2<T>(-c) : c;
}

}  // namespace detail

/// One of the two preimages +-C of a proper orthochronous L.  The boost part
/// comes from the image of the time axis, the rotation part from the
/// remaining spatial block.  Sign: Re tr C > 0 (ties: first nonzero entry
/// positive).
template <Real T>
Matrix2<T> lift_lorentz(const LorentzMatrix<T>& l, const TolerancePolicy& pol = {}) {
  if constexpr (is_exact_v<T>) {
    if (!(transpose(l) * minkowski<T>() * l == minkowski<T>())) {
      throw std::invalid_argument("lift_lorentz: matrix does not preserve the metric");
    }
  } else {
    if (lorentz_defect(l) > pol.abs_eps + pol.rel_eps * max_abs(l) * max_abs(l)) {
      throw std::invalid_argument("lift_lorentz: matrix does not preserve the metric");
    }
  }
  if (detail::nonpositive_within(det(l), pol)) {
    throw std::invalid_argument("lift_lorentz: not proper (det L <= 0)");
  }
  if (l(0, 0) < T(1) && !approx_equal_real(l(0, 0), T(1), pol)) {
    throw std::invalid_argument("lift_lorentz: not orthochronous (L^0_0 < 1)");
  }

  FourVector<T> time_image;
  for (std::size_t mu = 0; mu < 4; ++mu) time_image[mu] = l(mu, 0);
  const Matrix2<T> boost = sqrt_positive(recompose(time_image).matrix());
  const LorentzMatrix<T> rot4 = lorentz_matrix(inverse(boost)) * l;

  Matrix<T, 3, 3> r;
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = 0; b < 3; ++b) r(a, b) = rot4(a + 1, b + 1);
  const auto q = detail::quaternion_of(r);
  using C = Complex<T>;
  // w I - i (x sigma1 + y sigma2 + z sigma3)
  const Matrix2<T> su2{{C(q[0], T(-q[3])), C(T(-q[2]), T(-q[1]))},
                       {C(q[2], T(-q[1])), C(q[0], q[3])}};
  return detail::fix_sign(Matrix2<T>(boost * su2), pol);
}

}  // namespace spinrel
