#pragma once

// Seeded random inputs for the property suites, for both backends.
//
// All generators draw from a caller-owned std::mt19937_64, so a seed fixes
// every trial.  Distributions are written out by hand (no
// std::uniform_real_distribution) to keep reports identical across
// standard libraries.

#include "spinrel/bscr.hpp"
#include "spinrel/matrix.hpp"
#include "spinrel/momentum.hpp"
#include "spinrel/scalar.hpp"
#include "spinrel/spin_tensor.hpp"

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <vector>

namespace spinrel {

using Rng = std::mt19937_64;

/// Uniform double in [lo, hi) from the top 53 bits.
inline double uniform(Rng& rng, double lo, double hi) {
  const double unit = static_cast<double>(rng() >> 11) * 0x1.0p-53;
  return lo + (hi - lo) * unit;
}

/// Uniform integer in [lo, hi].
inline std::int64_t uniform_int(Rng& rng, std::int64_t lo, std::int64_t hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(rng() % span);
}

template <Real T>
struct Sampler;

template <>
struct Sampler<double> {
  static double real(Rng& rng, double scale = 1.0) { return uniform(rng, -scale, scale); }

  static Complex<double> complex(Rng& rng, double scale = 1.0) {
    return {real(rng, scale), real(rng, scale)};
  }

  /// Uniform on the complex disc |z| < radius (rejection).
  static Complex<double> disc(Rng& rng, double radius = 1.0) {
    for (;;) {
      const double x = uniform(rng, -1.0, 1.0);
      const double y = uniform(rng, -1.0, 1.0);
      if (x * x + y * y < 1.0) return {radius * x, radius * y};
    }
  }
};

template <>
struct Sampler<Rational> {
  /// num/den with |num| <= 12 * scale, 1 <= den <= 9.
  static Rational real(Rng& rng, double scale = 1.0) {
    const auto bound = static_cast<std::int64_t>(12 * scale);
    return Rational(uniform_int(rng, -bound, bound), uniform_int(rng, 1, 9));
  }

  static Complex<Rational> complex(Rng& rng, double scale = 1.0) {
    return {real(rng, scale), real(rng, scale)};
  }

  static Complex<Rational> disc(Rng& rng, double radius = 1.0) {
    return complex(rng, radius);
  }
};

template <Real T>
Spinor2<T> random_spinor(Rng& rng) {
  return {Sampler<T>::complex(rng), Sampler<T>::complex(rng)};
}

template <Real T>
Spinor2<T> random_nonzero_spinor(Rng& rng) {
  for (;;) {
    Spinor2<T> s = random_spinor<T>(rng);
    if (!(s.c1 == Complex<T>{}) || !(s.c2 == Complex<T>{})) return s;
  }
}

template <Real T>
Matrix2<T> random_matrix(Rng& rng) {
  Matrix2<T> m;
  for (auto& e : m.data) e = Sampler<T>::disc(rng);
  return m;
}

/// Random element of GL(2,C): disc entries, |det| >= 1e-6.
template <Real T>
Matrix2<T> random_gl2c(Rng& rng) {
  for (;;) {
    Matrix2<T> m = random_matrix<T>(rng);
    if (magnitude(det(m)) >= 1e-6) return m;
  }
}

/// Random element of SL(2,C).
///
/// Float: disc entries, reject |det| < 1e-6, divide by a square root of det.
/// Exact: a, b, c random Gaussian rationals (a != 0), d = (1 + b c) / a.
template <Real T>
Matrix2<T> random_sl2c(Rng& rng) {
  if constexpr (is_exact_v<T>) {
    for (;;) {
      const Complex<T> a = Sampler<T>::complex(rng);
      if (a == Complex<T>{}) continue;
      const Complex<T> b = Sampler<T>::complex(rng);
      const Complex<T> c = Sampler<T>::complex(rng);
      const Complex<T> d = (Complex<T>(1) + b * c) / a;
      return Matrix2<T>{{a, b}, {c, d}};
    }
  } else {
    const Matrix2<T> m = random_gl2c<T>(rng);
    const Complex<double> d = det(m);
    const std::complex<double> root = std::sqrt(std::complex<double>(d.re, d.im));
    Matrix2<T> out = m;
    out *= Complex<double>(1.0) / Complex<double>(root.real(), root.imag());
    return out;
  }
}

template <Real T>
FourVector<T> random_four_vector(Rng& rng, double scale = 1.0) {
  return {{Sampler<T>::real(rng, scale), Sampler<T>::real(rng, scale),
           Sampler<T>::real(rng, scale), Sampler<T>::real(rng, scale)}};
}

template <Real T>
Herm2<T> random_hermitian(Rng& rng, double scale = 1.0) {
  return recompose(random_four_vector<T>(rng, scale));
}

/// Integer tuples (p1, p2, p3, m, p0) with p1^2 + p2^2 + p3^2 + m^2 = p0^2,
/// m >= 1, 0 <= pk <= bound.
inline const std::vector<std::array<int, 5>>& pythagorean_quintuples(int bound = 12) {
  static const std::vector<std::array<int, 5>> table = [bound] {
    std::vector<std::array<int, 5>> out;
    for (int m = 1; m <= bound; ++m)
      for (int a = 0; a <= bound; ++a)
        for (int b = 0; b <= bound; ++b)
          for (int c = 0; c <= bound; ++c) {
            const int s = a * a + b * b + c * c + m * m;
            const int r = static_cast<int>(std::lround(std::sqrt(static_cast<double>(s))));
            if (r * r == s) out.push_back({a, b, c, m, r});
          }
    return out;
  }();
  return table;
}

/// Momentum state with rational p0: a random Pythagorean tuple with random
/// component signs, scaled by a random positive rational.
template <Real T>
MomentumState<T> random_pythagorean_state(Rng& rng, EnergySign sign = EnergySign::Positive) {
  const auto& table = pythagorean_quintuples();
  const auto& q = table[static_cast<std::size_t>(
      uniform_int(rng, 0, static_cast<std::int64_t>(table.size()) - 1))];
  const T scale(Rational(uniform_int(rng, 1, 7), uniform_int(rng, 1, 5))
                    .template convert_to<T>());
  Momentum3<T> p;
  for (std::size_t k = 0; k < 3; ++k) {
    const T s = uniform_int(rng, 0, 1) ? T(1) : T(-1);
    p[k] = s * scale * T(q[k]);
  }
  return MomentumState<T>(T(scale * T(q[3])), p, sign);
}

/// Float state: m in [0.1, 10], p^k in [-10, 10].
inline MomentumState<double> random_float_state(Rng& rng,
                                                EnergySign sign = EnergySign::Positive) {
  const double m = uniform(rng, 0.1, 10.0);
  return MomentumState<double>(
      m, {uniform(rng, -10.0, 10.0), uniform(rng, -10.0, 10.0), uniform(rng, -10.0, 10.0)},
      sign);
}

template <Real T>
MomentumState<T> random_state(Rng& rng, EnergySign sign = EnergySign::Positive) {
  if constexpr (is_exact_v<T>) {
    return random_pythagorean_state<T>(rng, sign);
  } else {
    return random_float_state(rng, sign);
  }
}

}  // namespace spinrel
