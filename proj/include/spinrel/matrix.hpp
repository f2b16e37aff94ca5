#pragma once

// Small fixed-size dense matrices over either Complex<T> or a real T.
// Only what the 2x2 / 4x4 algebra needs; no expression templates.

#include "spinrel/scalar.hpp"

#include <array>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <stdexcept>

namespace spinrel {

template <class E, std::size_t R, std::size_t C>
struct Matrix {
  std::array<E, R * C> data{};

  static constexpr std::size_t rows = R;
  static constexpr std::size_t cols = C;

  Matrix() = default;
  Matrix(std::initializer_list<std::initializer_list<E>> init) {
    if (init.size() != R) {
      throw std::invalid_argument("Matrix: wrong row count");
    }
    std::size_t r = 0;
    for (const auto& row : init) {
      if (row.size() != C) {
        throw std::invalid_argument("Matrix: wrong column count");
      }
      std::size_t c = 0;
      for (const auto& e : row) {
        (*this)(r, c++) = e;
      }
      ++r;
    }
  }

  static Matrix identity() {
    static_assert(R == C);
    Matrix m;
    for (std::size_t k = 0; k < R; ++k) {
      m(k, k) = E(1);
    }
    return m;
  }

  E& operator()(std::size_t r, std::size_t c) { return data[r * C + c]; }
  const E& operator()(std::size_t r, std::size_t c) const { return data[r * C + c]; }

  Matrix& operator+=(const Matrix& o) {
    for (std::size_t k = 0; k < R * C; ++k) data[k] += o.data[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    for (std::size_t k = 0; k < R * C; ++k) data[k] -= o.data[k];
    return *this;
  }
  Matrix& operator*=(const E& s) {
    for (auto& e : data) e *= s;
    return *this;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator-(Matrix a) {
    for (auto& e : a.data) e = -e;
    return a;
  }
  friend Matrix operator*(Matrix a, const E& s) { return a *= s; }
  friend Matrix operator*(const E& s, Matrix a) { return a *= s; }

  friend bool operator==(const Matrix& a, const Matrix& b) { return a.data == b.data; }

  friend std::ostream& operator<<(std::ostream& os, const Matrix& m) {
    os << '[';
    for (std::size_t r = 0; r < R; ++r) {
      os << (r ? "; " : "");
      for (std::size_t c = 0; c < C; ++c) os << (c ? " " : "") << m(r, c);
    }
    return os << ']';
  }
};

template <class E, std::size_t R, std::size_t K, std::size_t C>
Matrix<E, R, C> operator*(const Matrix<E, R, K>& a, const Matrix<E, K, C>& b) {
  Matrix<E, R, C> out;
  for (std::size_t r = 0; r < R; ++r) {
    for (std::size_t c = 0; c < C; ++c) {
      E acc{};
      for (std::size_t k = 0; k < K; ++k) acc += a(r, k) * b(k, c);
      out(r, c) = acc;
    }
  }
  return out;
}

template <class E, std::size_t R, std::size_t C>
Matrix<E, C, R> transpose(const Matrix<E, R, C>& m) {
  Matrix<E, C, R> out;
  for (std::size_t r = 0; r < R; ++r)
    for (std::size_t c = 0; c < C; ++c) out(c, r) = m(r, c);
  return out;
}

template <Real T, std::size_t R, std::size_t C>
Matrix<Complex<T>, R, C> conj(const Matrix<Complex<T>, R, C>& m) {
  Matrix<Complex<T>, R, C> out;
  for (std::size_t k = 0; k < R * C; ++k) out.data[k] = conj(m.data[k]);
  return out;
}

/// Hermitian conjugate (the "+" of the notation).
template <Real T, std::size_t R, std::size_t C>
Matrix<Complex<T>, C, R> adjoint(const Matrix<Complex<T>, R, C>& m) {
  return conj(transpose(m));
}

template <class E, std::size_t N>
E trace(const Matrix<E, N, N>& m) {
  E acc{};
  for (std::size_t k = 0; k < N; ++k) acc += m(k, k);
  return acc;
}

/// Determinant by cofactor expansion; fine for N <= 4 and exact-friendly.
template <class E, std::size_t N>
E det(const Matrix<E, N, N>& m) {
  if constexpr (N == 1) {
    return m(0, 0);
  } else if constexpr (N == 2) {
    return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  } else {
    E acc{};
    for (std::size_t c = 0; c < N; ++c) {
      Matrix<E, N - 1, N - 1> minor;
      for (std::size_t r = 1; r < N; ++r) {
        std::size_t cc = 0;
        for (std::size_t k = 0; k < N; ++k) {
          if (k != c) minor(r - 1, cc++) = m(r, k);
        }
      }
      E term = m(0, c) * det(minor);
      if (c % 2 == 0) {
        acc += term;
      } else {
        acc -= term;
      }
    }
    return acc;
  }
}

/// adj(M), equal to det(M) M^{-1}.  For unimodular M this is the inverse
/// without dividing by a computed determinant.
template <class E>
Matrix<E, 2, 2> adjugate(const Matrix<E, 2, 2>& m) {
  return {{m(1, 1), -m(0, 1)}, {-m(1, 0), m(0, 0)}};
}

template <class E>
Matrix<E, 2, 2> inverse(const Matrix<E, 2, 2>& m) {
  const E d = det(m);
  if (d == E(0)) {
    throw std::domain_error("inverse: singular 2x2 matrix");
  }
  Matrix<E, 2, 2> out = adjugate(m);
  for (auto& e : out.data) e = e / d;
  return out;
}

template <Real T>
using Matrix2 = Matrix<Complex<T>, 2, 2>;

template <Real T>
using Matrix4C = Matrix<Complex<T>, 4, 4>;

template <Real T>
using Matrix4R = Matrix<T, 4, 4>;

inline Matrix2<double> to_float(const Matrix2<double>& m) { return m; }

inline Matrix2<double> to_float(const Matrix2<Rational>& m) {
  Matrix2<double> out;
  for (std::size_t k = 0; k < 4; ++k) out.data[k] = to_float(m.data[k]);
  return out;
}

/// Largest entrywise magnitude, as a double.
template <Real T, std::size_t R, std::size_t C>
double max_abs(const Matrix<Complex<T>, R, C>& m) {
  double best = 0.0;
  for (const auto& e : m.data) best = std::max(best, magnitude(e));
  return best;
}

template <Real T, std::size_t R, std::size_t C>
double max_abs(const Matrix<T, R, C>& m) {
  double best = 0.0;
  for (const auto& e : m.data) best = std::max(best, std::abs(to_double(e)));
  return best;
}

}  // namespace spinrel
