#pragma once

#include "spinrel/scalar.hpp"
#include "spinrel/matrix.hpp"
#include "spinrel/bscr.hpp"

namespace spinrel::test {

using Q = Rational;
using CQ = Complex<Rational>;
using CD = Complex<double>;

inline Q q(long a, long b = 1) { return Q(a, b); }
inline CQ cq(long re, long im = 0) { return CQ(Q(re), Q(im)); }
inline CQ cq(const Q& re, const Q& im = Q(0)) { return CQ(re, im); }

inline Spinor2<Rational> sq(CQ a, CQ b) { return {std::move(a), std::move(b)}; }

}  // namespace spinrel::test
