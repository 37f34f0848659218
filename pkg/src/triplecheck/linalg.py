"""Exact rational vectors and square matrices.

Scalars are :class:`fractions.Fraction`.  Vectors and matrices keep their
entries as Python integers over one shared positive denominator, normalised
so that the gcd of all numerators and the denominator is 1.  Every operation
is exact and returns a new object; nothing is mutated after construction.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from numbers import Rational
from typing import Iterable, Sequence

Scalar = Fraction


class DimensionError(ValueError):
    """Operands of incompatible dimension."""


class LinearlyDependentFamily(ValueError):
    """A matrix family is not linearly independent, so coefficients are ambiguous."""


def as_scalar(value) -> Fraction:
    """Coerce ints, Fractions and rational strings ("p/q") to a Fraction.

    Floats are rejected: they would smuggle rounding into exact checks.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"cannot use {type(value).__name__} as an exact scalar")


def _normalise(nums: Sequence[int], den: int) -> tuple[tuple[int, ...], int]:
    if den < 0:
        nums = [-a for a in nums]
        den = -den
    g = gcd(den, *nums)
    if g != 1:
        nums = [a // g for a in nums]
        den //= g
    return tuple(nums), den


def _common(coeffs: Iterable) -> tuple[list[int], int]:
    fracs = [as_scalar(c) for c in coeffs]
    den = lcm(1, *(f.denominator for f in fracs))
    return [f.numerator * (den // f.denominator) for f in fracs], den


class Vector:
    """Coordinate column over an algebra basis."""

    __slots__ = ("_num", "_den")

    def __init__(self, coords: Iterable):
        nums, den = _common(coords)
        self._num, self._den = _normalise(nums, den)

    @classmethod
    def _raw(cls, nums: Sequence[int], den: int) -> "Vector":
        v = object.__new__(cls)
        v._num, v._den = _normalise(nums, den)
        return v

    @classmethod
    def zero(cls, dim: int) -> "Vector":
        return cls._raw([0] * dim, 1)

    @classmethod
    def basis(cls, dim: int, index: int) -> "Vector":
        if not 0 <= index < dim:
            raise IndexError(f"basis index {index} out of range for dimension {dim}")
        nums = [0] * dim
        nums[index] = 1
        return cls._raw(nums, 1)

    @property
    def dim(self) -> int:
        return len(self._num)

    @property
    def coords(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(a, self._den) for a in self._num)

    @property
    def numerators(self) -> tuple[int, ...]:
        return self._num

    @property
    def denominator(self) -> int:
        return self._den

    def __len__(self) -> int:
        return len(self._num)

    def __getitem__(self, i: int) -> Fraction:
        return Fraction(self._num[i], self._den)

    def __iter__(self):
        return iter(self.coords)

    def support(self) -> list[int]:
        return [i for i, a in enumerate(self._num) if a]

    def is_zero(self) -> bool:
        return not any(self._num)

    def _check(self, other: "Vector") -> None:
        if len(self._num) != len(other._num):
            raise DimensionError(f"vector dimensions differ: {self.dim} vs {other.dim}")

    def __add__(self, other: "Vector") -> "Vector":
        if not isinstance(other, Vector):
            return NotImplemented
        self._check(other)
        d = lcm(self._den, other._den)
        s, t = d // self._den, d // other._den
        return Vector._raw([a * s + b * t for a, b in zip(self._num, other._num)], d)

    def __sub__(self, other: "Vector") -> "Vector":
        if not isinstance(other, Vector):
            return NotImplemented
        self._check(other)
        d = lcm(self._den, other._den)
        s, t = d // self._den, d // other._den
        return Vector._raw([a * s - b * t for a, b in zip(self._num, other._num)], d)

    def __neg__(self) -> "Vector":
        return Vector._raw([-a for a in self._num], self._den)

    def __mul__(self, c) -> "Vector":
        if isinstance(c, (Vector, Matrix)):
            return NotImplemented
        c = as_scalar(c)
        return Vector._raw([a * c.numerator for a in self._num], self._den * c.denominator)

    __rmul__ = __mul__

    def __truediv__(self, c) -> "Vector":
        c = as_scalar(c)
        if c == 0:
            raise ZeroDivisionError("vector divided by zero")
        return self * (1 / c)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Vector):
            return NotImplemented
        return self._den == other._den and self._num == other._num

    def __hash__(self) -> int:
        return hash((self._num, self._den))

    def __repr__(self) -> str:
        return f"Vector([{', '.join(repr(str(c)) for c in self.coords)}])"


class Matrix:
    """Dense square matrix acting on coordinate columns."""

    __slots__ = ("_rows", "_den")

    def __init__(self, rows: Iterable[Iterable]):
        rows = [list(r) for r in rows]
        n = len(rows)
        for i, r in enumerate(rows):
            if len(r) != n:
                raise DimensionError(f"row {i} has {len(r)} entries; expected {n}")
        flat, den = _common(c for r in rows for c in r)
        self._set(flat, n, den)

    def _set(self, flat: Sequence[int], n: int, den: int) -> None:
        flat, den = _normalise(flat, den)
        self._rows = tuple(flat[i * n:(i + 1) * n] for i in range(n))
        self._den = den

    @classmethod
    def _raw(cls, rows: Sequence[Sequence[int]], den: int) -> "Matrix":
        m = object.__new__(cls)
        m._set([a for r in rows for a in r], len(rows), den)
        return m

    @classmethod
    def zero(cls, n: int) -> "Matrix":
        return cls._raw([[0] * n for _ in range(n)], 1)

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls._raw([[int(i == j) for j in range(n)] for i in range(n)], 1)

    @classmethod
    def elementary(cls, n: int, i: int, j: int) -> "Matrix":
        rows = [[0] * n for _ in range(n)]
        rows[i][j] = 1
        return cls._raw(rows, 1)

    @classmethod
    def from_columns(cls, columns: Sequence[Vector]) -> "Matrix":
        n = len(columns)
        if any(c.dim != n for c in columns):
            raise DimensionError("columns must have length equal to their count")
        den = lcm(1, *(c.denominator for c in columns))
        scaled = [[a * (den // c.denominator) for a in c.numerators] for c in columns]
        return cls._raw([[scaled[j][i] for j in range(n)] for i in range(n)], den)

    @property
    def dim(self) -> int:
        return len(self._rows)

    @property
    def denominator(self) -> int:
        return self._den

    @property
    def numerator_rows(self) -> tuple[tuple[int, ...], ...]:
        return self._rows

    def rows(self) -> tuple[tuple[Fraction, ...], ...]:
        return tuple(tuple(Fraction(a, self._den) for a in r) for r in self._rows)

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        return Fraction(self._rows[i][j], self._den)

    def flat(self) -> list[Fraction]:
        return [Fraction(a, self._den) for r in self._rows for a in r]

    def is_zero(self) -> bool:
        return not any(any(r) for r in self._rows)

    def _check(self, other) -> None:
        if self.dim != other.dim:
            raise DimensionError(f"dimensions differ: {self.dim} vs {other.dim}")

    def _combine(self, other: "Matrix", sign: int) -> "Matrix":
        self._check(other)
        d = lcm(self._den, other._den)
        s, t = d // self._den, sign * (d // other._den)
        return Matrix._raw(
            [[a * s + b * t for a, b in zip(r, q)] for r, q in zip(self._rows, other._rows)], d
        )

    def __add__(self, other: "Matrix") -> "Matrix":
        if not isinstance(other, Matrix):
            return NotImplemented
        return self._combine(other, 1)

    def __sub__(self, other: "Matrix") -> "Matrix":
        if not isinstance(other, Matrix):
            return NotImplemented
        return self._combine(other, -1)

    def __neg__(self) -> "Matrix":
        return Matrix._raw([[-a for a in r] for r in self._rows], self._den)

    def __mul__(self, c) -> "Matrix":
        if isinstance(c, (Vector, Matrix)):
            return NotImplemented
        c = as_scalar(c)
        return Matrix._raw([[a * c.numerator for a in r] for r in self._rows], self._den * c.denominator)

    __rmul__ = __mul__

    def __truediv__(self, c) -> "Matrix":
        c = as_scalar(c)
        if c == 0:
            raise ZeroDivisionError("matrix divided by zero")
        return self * (1 / c)

    def __matmul__(self, other):
        if isinstance(other, Vector):
            return self.apply(other)
        if not isinstance(other, Matrix):
            return NotImplemented
        self._check(other)
        n = self.dim
        brows = other._rows
        out = []
        for r in self._rows:
            acc = [0] * n
            for k, a in enumerate(r):
                if a:
                    acc = [x + a * y for x, y in zip(acc, brows[k])]
            out.append(acc)
        return Matrix._raw(out, self._den * other._den)

    def apply(self, v: Vector) -> Vector:
        if v.dim != self.dim:
            raise DimensionError(f"cannot apply {self.dim}x{self.dim} matrix to vector of length {v.dim}")
        vn = v.numerators
        return Vector._raw(
            [sum(a * b for a, b in zip(r, vn) if a) for r in self._rows], self._den * v.denominator
        )

    def commutator(self, other: "Matrix") -> "Matrix":
        return self @ other - other @ self

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self._den == other._den and self._rows == other._rows

    def __hash__(self) -> int:
        return hash((self._rows, self._den))

    def __repr__(self) -> str:
        body = "; ".join(" ".join(str(c) for c in r) for r in self.rows())
        return f"Matrix([{body}])"


def mat_commutator(a: Matrix, b: Matrix) -> Matrix:
    """Return AB - BA."""
    return a.commutator(b)


def linear_combination(coeffs: Sequence, family: Sequence[Matrix], n: int | None = None) -> Matrix:
    """Sum of coeffs[i] * family[i]; zero coefficients are skipped."""
    if len(coeffs) != len(family):
        raise DimensionError(f"{len(coeffs)} coefficients for a family of {len(family)} matrices")
    if n is None:
        if not family:
            raise DimensionError("dimension of an empty combination is unknown")
        n = family[0].dim
    den = 1
    terms = []
    for c, m in zip(coeffs, family):
        c = as_scalar(c)
        if c:
            if m.dim != n:
                raise DimensionError(f"family member of dimension {m.dim}; expected {n}")
            terms.append((c, m))
            den = lcm(den, c.denominator * m.denominator)
    acc = [[0] * n for _ in range(n)]
    for c, m in terms:
        s = c.numerator * (den // (c.denominator * m.denominator))
        acc = [[x + s * y for x, y in zip(ra, rm)] for ra, rm in zip(acc, m.numerator_rows)]
    return Matrix._raw(acc, den)


# --- fraction-free elimination -------------------------------------------


def bareiss_echelon(rows: Sequence[Sequence[int]]) -> tuple[list[list[int]], list[int]]:
    """Fraction-free (Bareiss) row echelon form of an integer matrix.

    Returns the echelon rows and the pivot column of each nonzero row.
    Every intermediate division is exact.
    """
    m = [list(r) for r in rows]
    if not m:
        return m, []
    nrows, ncols = len(m), len(m[0])
    prev, r, pivots = 1, 0, []
    for c in range(ncols):
        p = next((i for i in range(r, nrows) if m[i][c]), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        piv = m[r][c]
        for i in range(r + 1, nrows):
            lead = m[i][c]
            row_i, row_r = m[i], m[r]
            for j in range(c + 1, ncols):
                row_i[j] = (piv * row_i[j] - lead * row_r[j]) // prev
            row_i[c] = 0
        prev = piv
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return m, pivots


def solve_square(a: Sequence[Sequence[int]], b: Sequence[int]) -> list[Fraction]:
    """Solve a nonsingular integer system a·x = b exactly."""
    n = len(a)
    echelon, pivots = bareiss_echelon([list(r) + [bi] for r, bi in zip(a, b)])
    if pivots[:n] != list(range(n)):
        raise LinearlyDependentFamily("singular system")
    x = [Fraction(0)] * n
    for i in reversed(range(n)):
        row = echelon[i]
        s = Fraction(row[n]) - sum(row[j] * x[j] for j in range(i + 1, n))
        x[i] = s / row[i]
    return x


class MatrixSpan:
    """Coordinates relative to a linearly independent family of matrices.

    Construction raises :class:`LinearlyDependentFamily` when the family is
    dependent (including any family containing a zero matrix).
    """

    def __init__(self, family: Sequence[Matrix]):
        self.family = tuple(family)
        if self.family:
            n = self.family[0].dim
            for m in self.family:
                if m.dim != n:
                    raise DimensionError("family members differ in dimension")
            self.n = n
        else:
            self.n = None
        flats = [[a for r in m.numerator_rows for a in r] for m in self.family]
        _, pivots = bareiss_echelon(flats)
        if len(pivots) < len(self.family):
            raise LinearlyDependentFamily(
                f"family of {len(self.family)} matrices has rank {len(pivots)}"
            )
        self._pivots = pivots
        self._system = [[flats[j][p] for j in range(len(flats))] for p in pivots]

    def express(self, m: Matrix) -> Vector | None:
        """Unique coefficients c with m = sum c_i family_i, or None if m is outside the span."""
        k = len(self.family)
        if k == 0:
            return Vector([]) if m.is_zero() else None
        if m.dim != self.n:
            raise DimensionError(f"matrix of dimension {m.dim}; family has {self.n}")
        flat = [a for r in m.numerator_rows for a in r]
        scaled = solve_square(self._system, [flat[p] for p in self._pivots])
        coeffs = [c * f.denominator / m.denominator for c, f in zip(scaled, self.family)]
        if linear_combination(coeffs, self.family) != m:
            return None
        return Vector(coeffs)


def express_in_family(m: Matrix, family: Sequence[Matrix]) -> Vector | None:
    """Coefficients of m over an independent family, or None when m is not in its span."""
    return MatrixSpan(family).express(m)
