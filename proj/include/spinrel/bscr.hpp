#pragma once

// Rank-(3,3) binary system of complex relations.
//
// Elements of the first set are represented by their two parameters
// (i^1, i^2) relative to a fixed basis, i.e. as 2-spinors.  Elements of the
// second set are never stored: with the antilinear identification
// alpha^r = conj(i^r) they are the conjugates of first-set elements, so every
// operation that needs an alpha takes the spinor i and conjugates internally.
//
// Index conventions: eps_{12} = eps^{12} = +1, eps_{21} = eps^{21} = -1,
// with eps_{ru} eps^{su} = delta_r^s.  Lowering is i_r = eps_{rs} i^s.

#include "spinrel/matrix.hpp"
#include "spinrel/scalar.hpp"

#include <array>

namespace spinrel {

/// Undotted contravariant 2-spinor (i^1, i^2).
template <Real T>
struct Spinor2 {
  Complex<T> c1;
  Complex<T> c2;

  const Complex<T>& operator[](std::size_t r) const { return r == 0 ? c1 : c2; }
  Complex<T>& operator[](std::size_t r) { return r == 0 ? c1 : c2; }

  friend bool operator==(const Spinor2&, const Spinor2&) = default;
  friend Spinor2 operator+(const Spinor2& a, const Spinor2& b) {
    return {a.c1 + b.c1, a.c2 + b.c2};
  }
  friend Spinor2 operator-(const Spinor2& a, const Spinor2& b) {
    return {a.c1 - b.c1, a.c2 - b.c2};
  }
  friend Spinor2 operator*(const Complex<T>& s, const Spinor2& a) {
    return {s * a.c1, s * a.c2};
  }
};

/// Dotted covariant spinor (beta_1., beta_2.).  Under i -> C i these
/// transform with conj(C)^{-T}.
template <Real T>
struct CoSpinorDotted {
  Complex<T> b1;
  Complex<T> b2;

  const Complex<T>& operator[](std::size_t r) const { return r == 0 ? b1 : b2; }
  Complex<T>& operator[](std::size_t r) { return r == 0 ? b1 : b2; }

  friend bool operator==(const CoSpinorDotted&, const CoSpinorDotted&) = default;
  friend CoSpinorDotted operator-(const CoSpinorDotted& a, const CoSpinorDotted& b) {
    return {a.b1 - b.b1, a.b2 - b.b2};
  }
  friend CoSpinorDotted operator*(const Complex<T>& s, const CoSpinorDotted& a) {
    return {s * a.b1, s * a.b2};
  }
};

/// Undotted covariant spinor (i_1, i_2), the result of lowering.
template <Real T>
struct CoSpinor {
  Complex<T> c1;
  Complex<T> c2;
  friend bool operator==(const CoSpinor&, const CoSpinor&) = default;
};

struct Epsilon {
  /// eps_{rs}
  static constexpr std::array<std::array<int, 2>, 2> lower{{{0, 1}, {-1, 0}}};
  /// eps^{rs}
  static constexpr std::array<std::array<int, 2>, 2> upper{{{0, 1}, {-1, 0}}};
};

template <Real T>
Matrix2<T> epsilon_lower() {
  return {{Complex<T>(0), Complex<T>(1)}, {Complex<T>(-1), Complex<T>(0)}};
}

template <Real T>
Matrix2<T> epsilon_upper() {
  return {{Complex<T>(Epsilon::upper[0][0]), Complex<T>(Epsilon::upper[0][1])},
          {Complex<T>(Epsilon::upper[1][0]), Complex<T>(Epsilon::upper[1][1])}};
}

template <Real T>
Spinor2<T> conj(const Spinor2<T>& s) {
  return {conj(s.c1), conj(s.c2)};
}

template <Real T>
std::array<Complex<T>, 2> as_array(const Spinor2<T>& s) {
  return {s.c1, s.c2};
}

/// u_{i alpha} = i^1 alpha^1 + i^2 alpha^2 with alpha^r = conj(k^r).
template <Real T>
Complex<T> pairing(const Spinor2<T>& i, const Spinor2<T>& k) {
  return i.c1 * conj(k.c1) + i.c2 * conj(k.c2);
}

/// The 3x3 determinant of pairings between (i, k, j) and the conjugate
/// images of (a, b, c).  Zero for every input: the parametrisation makes the
/// pairing matrix a product of a 3x2 and a 2x3 matrix.
template <Real T>
Complex<T> rank33_determinant(const Spinor2<T>& i, const Spinor2<T>& k,
                              const Spinor2<T>& j, const Spinor2<T>& a,
                              const Spinor2<T>& b, const Spinor2<T>& c) {
  const std::array<const Spinor2<T>*, 3> rows{&i, &k, &j};
  const std::array<const Spinor2<T>*, 3> cols{&a, &b, &c};
  Matrix<Complex<T>, 3, 3> m;
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t s = 0; s < 3; ++s) m(r, s) = pairing(*rows[r], *cols[s]);
  return det(m);
}

/// Fundamental 2x2 relation: det [[u_{ia}, u_{ib}], [u_{ka}, u_{kb}]].
template <Real T>
Complex<T> pairing_minor(const Spinor2<T>& i, const Spinor2<T>& k,
                         const Spinor2<T>& a, const Spinor2<T>& b) {
  return pairing(i, a) * pairing(k, b) - pairing(i, b) * pairing(k, a);
}

/// [i,k] = eps_{rs} i^r k^s = i^1 k^2 - i^2 k^1.
template <Real T>
Complex<T> symplectic(const Spinor2<T>& i, const Spinor2<T>& k) {
  return i.c1 * k.c2 - i.c2 * k.c1;
}

/// <i,k> = delta_{rs.} i^r conj(k^s); linear in i, antilinear in k.
template <Real T>
Complex<T> unitary_product(const Spinor2<T>& i, const Spinor2<T>& k) {
  return i.c1 * conj(k.c1) + i.c2 * conj(k.c2);
}

template <Real T>
CoSpinor<T> lower_index(const Spinor2<T>& i) {
  // i_r = eps_{rs} i^s
  return {i.c2, -i.c1};
}

template <Real T>
Spinor2<T> raise_index(const CoSpinor<T>& i) {
  // i^s = i_r eps^{rs}
  return {-i.c2, i.c1};
}

template <Real T>
Spinor2<T> operator*(const Matrix2<T>& m, const Spinor2<T>& s) {
  return {m(0, 0) * s.c1 + m(0, 1) * s.c2, m(1, 0) * s.c1 + m(1, 1) * s.c2};
}

template <Real T>
CoSpinorDotted<T> operator*(const Matrix2<T>& m, const CoSpinorDotted<T>& s) {
  return {m(0, 0) * s.b1 + m(0, 1) * s.b2, m(1, 0) * s.b1 + m(1, 1) * s.b2};
}

/// i'^r = C^r_s i^s.
template <Real T>
Spinor2<T> transform(const Spinor2<T>& i, const Matrix2<T>& c) {
  return c * i;
}

/// Basis change of a dotted covariant spinor induced by i -> C i.
template <Real T>
CoSpinorDotted<T> transform(const CoSpinorDotted<T>& beta, const Matrix2<T>& c) {
  return transpose(inverse(conj(c))) * beta;
}

template <Real T>
bool approx_equal(const Spinor2<T>& a, const Spinor2<T>& b,
                  const TolerancePolicy& pol = {}) {
  return approx_equal(a.c1, b.c1, pol) && approx_equal(a.c2, b.c2, pol);
}

template <Real T>
bool approx_equal(const CoSpinorDotted<T>& a, const CoSpinorDotted<T>& b,
                  const TolerancePolicy& pol = {}) {
  return approx_equal(a.b1, b.b1, pol) && approx_equal(a.b2, b.b2, pol);
}

template <Real T>
double max_abs(const Spinor2<T>& s) {
  return std::max(magnitude(s.c1), magnitude(s.c2));
}

template <Real T>
double max_abs(const CoSpinorDotted<T>& s) {
  return std::max(magnitude(s.b1), magnitude(s.b2));
}

}  // namespace spinrel
