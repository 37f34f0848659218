"""Independent reference computations for the test-suite.

Nothing here imports triplecheck: octonions are built from a hand-written
Hamilton product on 4-tuples and the doubling rule on pairs of quaternions,
and operators are plain nested lists.
"""

from fractions import Fraction

import sympy


def qmul(a, b):
    a0, a1, a2, a3 = a
    b0, b1, b2, b3 = b
    return (
        a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3,
        a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,
        a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1,
        a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0,
    )


def qconj(a):
    return (a[0], -a[1], -a[2], -a[3])


def qadd(a, b):
    return tuple(x + y for x, y in zip(a, b))


def qsub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def omul(x, y):
    """(a,b)(c,d) = (ac - conj(d) b, d a + b conj(c)) on 8-tuples."""
    a, b, c, d = x[:4], x[4:], y[:4], y[4:]
    return qsub(qmul(a, c), qmul(qconj(d), b)) + qadd(qmul(d, a), qmul(b, qconj(c)))


def unit(i, n=8):
    return tuple(Fraction(int(k == i)) for k in range(n))


def vadd(*vs):
    return tuple(sum(c) for c in zip(*vs))


def vscale(c, v):
    return tuple(c * x for x in v)


def ocomm(x, y):
    return tuple(p - q for p, q in zip(omul(x, y), omul(y, x)))


def oassoc(x, y, z):
    return tuple(p - q for p, q in zip(omul(omul(x, y), z), omul(x, omul(y, z))))


def left_matrix(v):
    """Columns are v * e_j."""
    cols = [omul(v, unit(j)) for j in range(8)]
    return [[cols[j][i] for j in range(8)] for i in range(8)]


def right_matrix(v):
    cols = [omul(unit(j), v) for j in range(8)]
    return [[cols[j][i] for j in range(8)] for i in range(8)]


def mmul(a, b):
    n = len(a)
    return [[sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n)] for i in range(n)]


def msub(a, b):
    return [[x - y for x, y in zip(r, s)] for r, s in zip(a, b)]


def mcomm(a, b):
    return msub(mmul(a, b), mmul(b, a))


def mapply(a, v):
    return tuple(sum(a[i][k] * v[k] for k in range(len(v))) for i in range(len(a)))


def sympy_coefficients(target, family):
    """Exact solve with sympy; raises ValueError when there is no solution."""
    cols = [sympy.Matrix([sympy.Rational(x) for r in m for x in r]) for m in family]
    a = sympy.Matrix.hstack(*cols)
    b = sympy.Matrix([sympy.Rational(x) for r in target for x in r])
    if a.rank() < len(family):
        raise ValueError("dependent family")
    sol, _ = a.gauss_jordan_solve(b)
    return [Fraction(str(s)) for s in sol]
