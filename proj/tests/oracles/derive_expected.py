"""Independent oracle for the frozen expected values in the C++ tests.

Uses sympy exact arithmetic with plain index loops (no library code
shared with the C++ implementation). Run: python3 derive_expected.py
"""
import itertools

import sympy as sp

I = sp.I
S0 = sp.Matrix([[1, 0], [0, 1]])
S1 = sp.Matrix([[0, 1], [1, 0]])
S2 = sp.Matrix([[0, -I], [I, 0]])
S3 = sp.Matrix([[1, 0], [0, -1]])
SIGMA = [S0, S1, S2, S3]
G = sp.diag(1, -1, -1, -1)
EPS_LO = sp.Matrix([[0, 1], [-1, 0]])  # eps_{rs}, eps_12 = +1
EPS_UP = sp.Matrix([[0, 1], [-1, 0]])  # eps^{rs}


def half_trace(a, b):
    return sp.nsimplify(sp.simplify((a * b).trace() / 2))


def lorentz(c):
    return sp.Matrix(4, 4, lambda mu, nu: sp.simplify(
        (SIGMA[mu] * c * SIGMA[nu] * c.H).trace() / 2))


def det3_cofactor(m):
    return sum(m[0, j] * (-1) ** j * m[1:, [k for k in range(3) if k != j]].det()
               for j in range(3))


def hodge(i, u):
    # conj(k^u) = sum_{s,r} eps^{su} U_{rs} i^r
    ck = [sum(EPS_UP[s, uu] * u[r, s] * i[r] for s in range(2) for r in range(2))
          for uu in range(2)]
    return sp.Matrix([sp.conjugate(x) for x in ck])


def main():
    print("rank33 basis triple:",
          det3_cofactor(sp.Matrix(3, 3, lambda a, b: (
              lambda x, y: x[0] * sp.conjugate(y[0]) + x[1] * sp.conjugate(y[1]))(
              [(1, 0), (0, 1), (1, 1)][a], [(1, 0), (0, 1), (1, 1)][b]))))
    print("decompose [[2,i],[-i,0]]:",
          [half_trace(s, sp.Matrix([[2, I], [-I, 0]])) for s in SIGMA])
    c = sp.diag(2, sp.Rational(1, 2))
    print("L(diag(2,1/2)):", lorentz(c).tolist())
    print("L(i sigma1):", lorentz(I * S1).tolist())
    th = sp.Symbol("theta", real=True)
    rot = sp.diag(sp.exp(-I * th / 2), sp.exp(I * th / 2))
    print("L(rot3):", sp.simplify(lorentz(rot)).tolist())
    ci = c.inv()
    u_metric = ci.T * ci.conjugate()
    print("metric diag(2,1/2):", u_metric.tolist(),
          "covector:", [half_trace(s, u_metric) for s in SIGMA])
    print("hodge(U=I,(1,0)):", hodge(sp.Matrix([1, 0]), sp.eye(2)).T.tolist())

    # m = 4, p^k = (1,2,2), E = 5; covariant p_mu = (5,-1,-2,-2)
    m = 4
    p_up = [5, 1, 2, 2]
    p_lo = [5, -1, -2, -2]
    u_metric = sum((p_lo[k] * SIGMA[k] for k in range(4)), sp.zeros(2)) / m
    i = sp.Matrix([1, 0])
    beta = u_metric.T * i
    print("psi(m=4,p=(1,2,2),i=(1,0)) lower:", beta.T.tolist())
    k = hodge(i, u_metric)
    v = [sp.simplify((i.H * s * i)[0] / 2 + (k.H * s * k)[0] / 2) for s in SIGMA]
    norm = sp.simplify(2 * sp.re((i.H * beta)[0]))
    print("psi^+ g0 psi:", norm, "v:", v,
          "ratio*p^mu:", [sp.Rational(norm, 2 * m) * x for x in p_up])

    # boost ray B = m(A+I) for m=8, p=(0,0,15): C = diag(2,1/2)
    m, e = 8, 17
    p_lo = [17, 0, 0, -15]
    u_metric = sum((p_lo[k] * SIGMA[k] for k in range(4)), sp.zeros(2)) / m
    a = u_metric.conjugate().inv()
    sq = sp.sqrt(a.det())
    c = (a + sq * sp.eye(2)) / sp.sqrt(a.trace() + 2 * sq)
    print("boost m=8 p=(0,0,15):", sp.simplify(c).tolist())

    # build_V from i=(1,0), k=(2,0)
    iv, kv = sp.Matrix([1, 0]), sp.Matrix([2, 0])
    print("build_V dependent:", (iv * iv.H + kv * kv.H).tolist())

    # Pythagorean check list
    quads = [(p, q, r, mm) for p, q, r, mm in itertools.product(range(0, 4), repeat=4)
             if mm > 0 and sp.sqrt(p * p + q * q + r * r + mm * mm).is_integer]
    print("small quadruples:", quads[:8])


if __name__ == "__main__":
    main()
