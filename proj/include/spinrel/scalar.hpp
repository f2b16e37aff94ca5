#pragma once

// Dual-backend complex scalars.
//
// Every algebraic routine in spinrel is a template over the real field T of
// its scalars.  Two backends are instantiated:
//
//   * spinrel::Rational  exact arbitrary-precision rationals, so identities
//                        hold bit-exactly (equality is ==);
//   * double             64-bit floats compared through a TolerancePolicy.
//
// Mixing backends in one expression does not compile.  The runtime Scalar
// variant below exists for code that only learns the backend at run time
// (CLI input); comparing across its alternatives throws BackendMismatch.

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cmath>
#include <concepts>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <variant>

namespace spinrel {

using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

template <class T>
inline constexpr bool is_exact_v = std::is_same_v<T, Rational>;

template <class T>
concept Real = std::is_same_v<T, Rational> || std::is_same_v<T, double>;

/// Thrown when an exact operation has no result inside the rationals.
class NotExactlyRepresentable : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class BackendMismatch : public std::logic_error {
 public:
  BackendMismatch() : std::logic_error("spinrel: mixed exact/float scalars") {}
};

struct TolerancePolicy {
  double abs_eps = 1e-12;
  double rel_eps = 1e-12;

  TolerancePolicy() = default;
  TolerancePolicy(double abs, double rel) : abs_eps(abs), rel_eps(rel) {
    if (!(abs_eps > 0.0) || !(rel_eps > 0.0)) {
      throw std::invalid_argument("TolerancePolicy: eps must be positive");
    }
  }
  static TolerancePolicy uniform(double eps) { return {eps, eps}; }
};

template <Real T>
double to_double(const T& x) {
  if constexpr (is_exact_v<T>) {
    return x.template convert_to<double>();
  } else {
    return x;
  }
}

template <Real T>
T abs_real(const T& x) {
  return x < T(0) ? T(-x) : x;
}

/// Square root of a nonnegative real.  On the exact backend succeeds only
/// for squares of rationals.
template <Real T>
T sqrt_nonneg(const T& x) {
  if (x < T(0)) {
    throw std::domain_error("sqrt_nonneg: negative argument");
  }
  if constexpr (is_exact_v<T>) {
    const Integer num = boost::multiprecision::numerator(x);
    const Integer den = boost::multiprecision::denominator(x);
    const Integer rn = boost::multiprecision::sqrt(num);
    const Integer rd = boost::multiprecision::sqrt(den);
    if (rn * rn != num || rd * rd != den) {
      std::ostringstream os;
      os << "sqrt_nonneg: " << x << " is not the square of a rational";
      throw NotExactlyRepresentable(os.str());
    }
    return Rational(rn, rd);
  } else {
    return std::sqrt(x);
  }
}

template <Real T>
bool approx_equal_real(const T& a, const T& b, const TolerancePolicy& pol = {}) {
  if constexpr (is_exact_v<T>) {
    return a == b;
  } else {
    const double scale = std::max(std::abs(a), std::abs(b));
    return std::abs(a - b) <= pol.abs_eps + pol.rel_eps * scale;
  }
}

template <Real T>
bool is_zero_real(const T& a, const TolerancePolicy& pol = {}) {
  return approx_equal_real(a, T(0), pol);
}

template <Real T>
struct Complex {
  T re{0};
  T im{0};

  Complex() = default;
  Complex(T r) : re(std::move(r)) {}  // NOLINT(google-explicit-constructor)
  Complex(T r, T i) : re(std::move(r)), im(std::move(i)) {}
  // Integer literals are convenient for constants (Complex<T>(0, -1) etc.).
  template <std::integral I>
  Complex(I r) : re(r) {}  // NOLINT(google-explicit-constructor)
  template <std::integral I, std::integral J>
  Complex(I r, J i) : re(r), im(i) {}

  static Complex i() { return {T(0), T(1)}; }

  Complex& operator+=(const Complex& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  Complex& operator-=(const Complex& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  Complex& operator*=(const Complex& o) {
    T r = re * o.re - im * o.im;
    T i = re * o.im + im * o.re;
    re = std::move(r);
    im = std::move(i);
    return *this;
  }
  Complex& operator/=(const Complex& o) {
    const T d = o.re * o.re + o.im * o.im;
    if (d == T(0)) {
      throw std::domain_error("Complex: division by zero");
    }
    T r = (re * o.re + im * o.im) / d;
    T i = (im * o.re - re * o.im) / d;
    re = std::move(r);
    im = std::move(i);
    return *this;
  }

  friend Complex operator+(Complex a, const Complex& b) { return a += b; }
  friend Complex operator-(Complex a, const Complex& b) { return a -= b; }
  friend Complex operator*(Complex a, const Complex& b) { return a *= b; }
  friend Complex operator/(Complex a, const Complex& b) { return a /= b; }
  friend Complex operator-(const Complex& a) { return {T(-a.re), T(-a.im)}; }

  friend bool operator==(const Complex& a, const Complex& b) {
    return a.re == b.re && a.im == b.im;
  }

  friend std::ostream& operator<<(std::ostream& os, const Complex& z) {
    return os << '(' << z.re << ',' << z.im << ')';
  }
};

template <Real T>
Complex<T> conj(const Complex<T>& z) {
  return {z.re, T(-z.im)};
}

/// |z|^2, always real and exact on the exact backend.
template <Real T>
T norm_sq(const Complex<T>& z) {
  return z.re * z.re + z.im * z.im;
}

/// |z| as a double; exact inputs are converted after squaring, so an exact
/// zero maps to 0.0.
template <Real T>
double magnitude(const Complex<T>& z) {
  return std::sqrt(to_double(norm_sq(z)));
}

template <Real T>
bool approx_equal(const Complex<T>& a, const Complex<T>& b,
                  const TolerancePolicy& pol = {}) {
  if constexpr (is_exact_v<T>) {
    return a == b;
  } else {
    const double scale = std::max(magnitude(a), magnitude(b));
    return magnitude(a - b) <= pol.abs_eps + pol.rel_eps * scale;
  }
}

template <Real T>
bool is_zero(const Complex<T>& a, const TolerancePolicy& pol = {}) {
  return approx_equal(a, Complex<T>{}, pol);
}

inline Complex<double> to_float(const Complex<Rational>& z) {
  return {to_double(z.re), to_double(z.im)};
}
inline Complex<double> to_float(const Complex<double>& z) { return z; }

/// A complex scalar whose backend is only known at run time.
using Scalar = std::variant<Complex<Rational>, Complex<double>>;

inline bool approx_equal(const Scalar& a, const Scalar& b,
                         const TolerancePolicy& pol = {}) {
  if (a.index() != b.index()) {
    throw BackendMismatch();
  }
  return std::visit(
      [&](const auto& x) {
        using C = std::decay_t<decltype(x)>;
        return approx_equal(x, std::get<C>(b), pol);
      },
      a);
}

inline bool is_exact(const Scalar& s) { return s.index() == 0; }

inline Complex<double> to_float(const Scalar& s) {
  return std::visit([](const auto& x) { return to_float(x); }, s);
}

/// Parse "a", "-a/b" as an exact rational.  Throws std::invalid_argument.
inline Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  auto parse_int = [&](const std::string& s) {
    if (s.empty()) {
      throw std::invalid_argument("bad rational: '" + text + "'");
    }
    std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (start == s.size()) {
      throw std::invalid_argument("bad rational: '" + text + "'");
    }
    for (std::size_t k = start; k < s.size(); ++k) {
      if (s[k] < '0' || s[k] > '9') {
        throw std::invalid_argument("bad rational: '" + text + "'");
      }
    }
    return Integer(s[0] == '+' ? s.substr(1) : s);
  };
  if (slash == std::string::npos) {
    return Rational(parse_int(text));
  }
  const Integer den = parse_int(text.substr(slash + 1));
  if (den == 0) {
    throw std::invalid_argument("bad rational (zero denominator): '" + text + "'");
  }
  return Rational(parse_int(text.substr(0, slash)), den);
}

template <Real T>
std::string to_string(const T& x) {
  std::ostringstream os;
  if constexpr (is_exact_v<T>) {
    os << x;
  } else {
    os.precision(17);
    os << x;
  }
  return os.str();
}

}  // namespace spinrel
