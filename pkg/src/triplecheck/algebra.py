"""Finite-dimensional algebras given by structure constants."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm
from typing import Iterable, Mapping, Sequence

from .linalg import DimensionError, Vector, as_scalar


class AlgebraFormatError(ValueError):
    """Malformed algebra description; ``location`` names the offending entry."""

    def __init__(self, message: str, location=None):
        self.location = location
        if location is not None:
            message = f"at {location}: {message}"
        super().__init__(message)


class AlgebraError(ValueError):
    """An algebra does not meet the precondition of an operation."""


class Algebra:
    """e_i * e_j = sum_k structure[i][j][k] e_k over the rationals."""

    kind = "algebra"

    def __init__(self, name: str, basis_labels: Sequence[str], products: Sequence[Sequence[Vector]]):
        dim = len(basis_labels)
        if dim < 1:
            raise AlgebraFormatError("an algebra needs at least one basis vector")
        if len(set(basis_labels)) != dim:
            raise AlgebraFormatError("basis labels must be distinct")
        if len(products) != dim:
            raise AlgebraFormatError(f"table has {len(products)} rows; expected {dim}")
        for i, row in enumerate(products):
            if len(row) != dim:
                raise AlgebraFormatError(f"row has {len(row)} entries; expected {dim}", (i,))
            for j, v in enumerate(row):
                if v.dim != dim:
                    raise AlgebraFormatError(f"product has {v.dim} coordinates; expected {dim}", (i, j))
        self.name = name
        self.dim = dim
        self.basis_labels = tuple(basis_labels)
        self.products = tuple(tuple(row) for row in products)
        # one shared denominator keeps multiply() in integer arithmetic
        self._den = lcm(1, *(v.denominator for row in self.products for v in row))
        self._table = tuple(
            tuple(
                tuple((k, a * (self._den // v.denominator)) for k, a in enumerate(v.numerators) if a)
                for v in row
            )
            for row in self.products
        )
        self.unit = self._find_unit()

    def _find_unit(self) -> int | None:
        for u in range(self.dim):
            if all(
                self.products[u][i] == self.e(i) and self.products[i][u] == self.e(i)
                for i in range(self.dim)
            ):
                return u
        return None

    @property
    def is_unital(self) -> bool:
        return self.unit is not None

    def e(self, key: int | str) -> Vector:
        """Basis vector by index or label."""
        if isinstance(key, str):
            try:
                key = self.basis_labels.index(key)
            except ValueError:
                raise KeyError(f"{self.name} has no basis vector {key!r}") from None
        return Vector.basis(self.dim, key)

    def vector(self, coords: Iterable) -> Vector:
        v = Vector(coords)
        if v.dim != self.dim:
            raise DimensionError(f"{self.name} has dimension {self.dim}; got {v.dim} coordinates")
        return v

    def zero(self) -> Vector:
        return Vector.zero(self.dim)

    def structure_constant(self, i: int, j: int, k: int) -> Fraction:
        return self.products[i][j][k]

    def multiply(self, u: Vector, v: Vector) -> Vector:
        if u.dim != self.dim or v.dim != self.dim:
            raise DimensionError(
                f"{self.name} has dimension {self.dim}; operands have {u.dim} and {v.dim}"
            )
        acc = [0] * self.dim
        un, vn, table = u.numerators, v.numerators, self._table
        vsupp = [(j, b) for j, b in enumerate(vn) if b]
        for i, a in enumerate(un):
            if not a:
                continue
            row = table[i]
            for j, b in vsupp:
                ab = a * b
                for k, c in row[j]:
                    acc[k] += ab * c
        return Vector._raw(acc, u.denominator * v.denominator * self._den)

    def label(self, v: Vector) -> str:
        """Readable rendering such as ``2*e3 - 1/2*e5``."""
        parts = []
        for i, c in enumerate(v.coords):
            if not c:
                continue
            mag = abs(c)
            term = self.basis_labels[i] if mag == 1 else f"{mag}*{self.basis_labels[i]}"
            parts.append(("- " if c < 0 else "+ ") + term)
        if not parts:
            return "0"
        s = " ".join(parts)
        return s[2:] if s.startswith("+ ") else "-" + s[2:]

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.name!r}, dim={self.dim})"


class BracketAlgebra(Algebra):
    """Anticommutative algebra; its product is written [u, v].

    ``ambient_indices`` records, for a commutator algebra cut out of a larger
    algebra, which ambient basis vector each bracket basis vector is.
    """

    kind = "bracket"

    def __init__(self, name, basis_labels, products, ambient_indices: Sequence[int] | None = None):
        super().__init__(name, basis_labels, products)
        for i in range(self.dim):
            for j in range(i, self.dim):
                if self.products[i][j] != -self.products[j][i]:
                    raise AlgebraFormatError(
                        "bracket is not anticommutative", (i, j)
                    )
        self.ambient_indices = tuple(ambient_indices) if ambient_indices is not None else None

    def bracket(self, u: Vector, v: Vector) -> Vector:
        return self.multiply(u, v)


def multiply(a: Algebra, u: Vector, v: Vector) -> Vector:
    return a.multiply(u, v)


# --- construction ----------------------------------------------------------


def _parse_coefficient(raw, location) -> Fraction:
    if isinstance(raw, float) or isinstance(raw, bool):
        raise AlgebraFormatError(f"coefficient {raw!r} is not an exact rational", location)
    try:
        return as_scalar(raw)
    except (TypeError, ValueError, ZeroDivisionError):
        raise AlgebraFormatError(f"coefficient {raw!r} is not an exact rational", location) from None


def algebra_from_structure_constants(content: Mapping) -> Algebra:
    """Build and validate an algebra from a mapping.

    The mapping carries ``name``, ``basis`` (or ``dim``), optional ``kind``
    ("algebra" or "bracket"), and the product either as a dense tensor
    ``structure[i][j][k]`` or as a sparse ``table`` of ``{"i", "j", "terms"}``
    entries where ``terms`` is a list of ``[k, "p/q"]`` pairs.  Omitted
    products are zero.  A unit is detected automatically.
    """
    if not isinstance(content, Mapping):
        raise AlgebraFormatError("algebra description must be a mapping")
    name = content.get("name", "unnamed")
    basis = content.get("basis")
    dim = content.get("dim")
    if basis is None:
        if not isinstance(dim, int) or isinstance(dim, bool):
            raise AlgebraFormatError("need 'basis' labels or an integer 'dim'")
        basis = [f"e{i}" for i in range(dim)]
    basis = [str(b) for b in basis]
    if dim is None:
        dim = len(basis)
    if not isinstance(dim, int) or isinstance(dim, bool) or dim < 1:
        raise AlgebraFormatError(f"dim must be a positive integer, got {dim!r}")
    if len(basis) != dim:
        raise AlgebraFormatError(f"{len(basis)} basis labels for dim {dim}")
    kind = content.get("kind", "algebra")
    if kind not in ("algebra", "bracket"):
        raise AlgebraFormatError(f"kind must be 'algebra' or 'bracket', got {kind!r}")

    if "structure" in content:
        coeffs = _dense_structure(content["structure"], dim)
    elif "table" in content:
        coeffs = _sparse_table(content["table"], dim)
    else:
        raise AlgebraFormatError("need a 'structure' tensor or a 'table'")
    products = [[Vector(coeffs[i][j]) for j in range(dim)] for i in range(dim)]
    if kind == "bracket":
        return BracketAlgebra(name, basis, products)
    return Algebra(name, basis, products)


def _dense_structure(tensor, dim: int) -> list[list[list[Fraction]]]:
    if not isinstance(tensor, Sequence) or len(tensor) != dim:
        raise AlgebraFormatError(f"structure must have {dim} rows", ())
    out = []
    for i, row in enumerate(tensor):
        if not isinstance(row, Sequence) or isinstance(row, str) or len(row) != dim:
            raise AlgebraFormatError(f"row must have {dim} entries", (i,))
        out_row = []
        for j, entry in enumerate(row):
            if not isinstance(entry, Sequence) or isinstance(entry, str) or len(entry) != dim:
                raise AlgebraFormatError(f"product must have {dim} coefficients", (i, j))
            out_row.append([_parse_coefficient(c, (i, j, k)) for k, c in enumerate(entry)])
        out.append(out_row)
    return out


def _sparse_table(table, dim: int) -> list[list[list[Fraction]]]:
    out = [[[Fraction(0)] * dim for _ in range(dim)] for _ in range(dim)]
    seen = set()
    if not isinstance(table, Sequence):
        raise AlgebraFormatError("table must be a list of entries")
    for n, entry in enumerate(table):
        if not isinstance(entry, Mapping):
            raise AlgebraFormatError("table entry must be a mapping", (n,))
        i, j = entry.get("i"), entry.get("j")
        for idx in (i, j):
            if not isinstance(idx, int) or isinstance(idx, bool) or not 0 <= idx < dim:
                raise AlgebraFormatError(f"index {idx!r} out of range", (n,))
        if (i, j) in seen:
            raise AlgebraFormatError("duplicate table entry", (i, j))
        seen.add((i, j))
        terms = entry.get("terms", [])
        if not isinstance(terms, Sequence):
            raise AlgebraFormatError("terms must be a list", (i, j))
        for term in terms:
            if not isinstance(term, Sequence) or isinstance(term, str) or len(term) != 2:
                raise AlgebraFormatError(f"term {term!r} must be [k, coefficient]", (i, j))
            k, raw = term
            if not isinstance(k, int) or isinstance(k, bool) or not 0 <= k < dim:
                raise AlgebraFormatError(f"output index {k!r} out of range", (i, j))
            out[i][j][k] += _parse_coefficient(raw, (i, j, k))
    return out


def with_structure_constant(a: Algebra, i: int, j: int, k: int, value, name: str | None = None) -> Algebra:
    """Copy of ``a`` with one structure constant replaced."""
    products = [list(row) for row in a.products]
    coords = list(products[i][j].coords)
    coords[k] = as_scalar(value)
    products[i][j] = Vector(coords)
    cls = type(a)
    name = name or f"{a.name}[c{i},{j},{k}={value}]"
    if cls is BracketAlgebra:
        return BracketAlgebra(name, a.basis_labels, products)
    return Algebra(name, a.basis_labels, products)


def negate_structure_constant(a: Algebra, i: int, j: int, k: int) -> Algebra:
    """Sabotage helper: flip the sign of c[i][j][k]."""
    return with_structure_constant(
        a, i, j, k, -a.structure_constant(i, j, k), name=f"{a.name}-flip{i}.{j}.{k}"
    )


def conjugate(a: Algebra, v: Vector) -> Vector:
    """Fix the unit coordinate, negate every other one."""
    if a.unit is None:
        raise AlgebraError(f"{a.name} has no unit, so no conjugation")
    coords = [-c for c in v.coords]
    coords[a.unit] = -coords[a.unit]
    return Vector(coords)


def cayley_dickson(a: Algebra, sign=-1, name: str | None = None) -> Algebra:
    """Double ``a``: (p, q)(r, s) = (pr + sign * conj(s) q, s p + q conj(r)).

    Basis vector i of the double is (e_i, 0) for i < dim and (0, e_{i-dim})
    otherwise, labelled e0, e1, ...
    """
    if a.unit is None:
        raise AlgebraError(f"cannot double {a.name}: it has no unit")
    sign = as_scalar(sign)
    n, m = a.dim, 2 * a.dim

    def halves(idx):
        if idx < n:
            return a.e(idx), a.zero()
        return a.zero(), a.e(idx - n)

    products = []
    for i in range(m):
        p, q = halves(i)
        row = []
        for j in range(m):
            r, s = halves(j)
            first = a.multiply(p, r) + sign * a.multiply(conjugate(a, s), q)
            second = a.multiply(s, p) + a.multiply(q, conjugate(a, r))
            row.append(Vector(first.coords + second.coords))
        products.append(row)
    return Algebra(name or f"CD({a.name})", [f"e{i}" for i in range(m)], products)


# --- element-level operations ------------------------------------------------


def commutator_elem(a: Algebra, x: Vector, y: Vector) -> Vector:
    return a.multiply(x, y) - a.multiply(y, x)


def associator_elem(a: Algebra, x: Vector, y: Vector, z: Vector) -> Vector:
    """(xy)z - x(yz) in the algebra itself."""
    return a.multiply(a.multiply(x, y), z) - a.multiply(x, a.multiply(y, z))


def jacobian_elem(g: Algebra, x: Vector, y: Vector, z: Vector) -> Vector:
    """[[x,y],z] + [[y,z],x] + [[z,x],y]."""
    m = g.multiply
    return m(m(x, y), z) + m(m(y, z), x) + m(m(z, x), y)


def malcev_defect(g: Algebra, x: Vector, y: Vector, z: Vector) -> Vector:
    """[[x,y],[x,z]] - [[[x,y],z],x] - [[[y,z],x],x] - [[[z,x],x],y]; zero in a Mal'tsev algebra."""
    m = g.multiply
    xy = m(x, y)
    return m(xy, m(x, z)) - m(m(xy, z), x) - m(m(m(y, z), x), x) - m(m(m(z, x), x), y)


def malcev_linearized(g: Algebra, x1: Vector, x2: Vector, y: Vector, z: Vector) -> Vector:
    """Polarisation of :func:`malcev_defect` in its repeated argument.

    The defect is quadratic in x, so it vanishes for every x exactly when this
    form (symmetric in x1, x2) vanishes on all basis quadruples.
    """
    m = g.multiply

    def part(a, b):
        ay = m(a, y)
        return m(ay, m(b, z)) - m(m(ay, z), b) - m(m(m(y, z), a), b) - m(m(m(z, a), b), y)

    return part(x1, x2) + part(x2, x1)


def derived_commutator_algebra(a: Algebra, restrict_to: Iterable[int] | None = None,
                               name: str | None = None) -> BracketAlgebra:
    """Bracket algebra with [u, v] = uv - vu, optionally on a span of basis vectors."""
    idx = list(range(a.dim)) if restrict_to is None else sorted(set(restrict_to))
    if not idx:
        raise AlgebraError("restriction to an empty basis set")
    for i in idx:
        if not 0 <= i < a.dim:
            raise AlgebraError(f"basis index {i} out of range for {a.name}")
    pos = {k: n for n, k in enumerate(idx)}
    products = []
    for i in idx:
        row = []
        for j in idx:
            c = commutator_elem(a, a.e(i), a.e(j))
            outside = [k for k in c.support() if k not in pos]
            if outside:
                raise AlgebraError(
                    f"commutator of {a.basis_labels[i]} and {a.basis_labels[j]} leaves the subspace "
                    f"(pair ({i}, {j}) reaches {[a.basis_labels[k] for k in outside]})"
                )
            row.append(Vector([c[k] for k in idx]))
        products.append(row)
    return BracketAlgebra(
        name or f"Gamma({a.name})",
        [a.basis_labels[i] for i in idx],
        products,
        ambient_indices=idx,
    )


# --- classification --------------------------------------------------------


@dataclass(frozen=True)
class PropertyResult:
    holds: bool
    witness: tuple[int, ...] | None = None


@dataclass(frozen=True)
class PropertyReport:
    algebra: str
    results: dict = field(default_factory=dict)

    def __getitem__(self, prop: str) -> bool:
        return self.results[prop].holds

    def witness(self, prop: str):
        return self.results[prop].witness

    def holding(self) -> list[str]:
        return [p for p in PROPERTIES if self.results[p].holds]


PROPERTIES = ("associative", "alternative", "commutative", "anticommutative", "jacobi", "malcev")


def _scan(arity: int, dim: int, test) -> PropertyResult:
    for t in itertools.product(range(dim), repeat=arity):
        if not test(*t):
            return PropertyResult(False, t)
    return PropertyResult(True)


def classify(a: Algebra) -> PropertyReport:
    """Decide each property by an exhaustive basis scan, with a witness on failure.

    Non-multilinear identities (alternativity, anticommutativity, Mal'tsev) are
    scanned in their linearised form, which is equivalent in characteristic 0.
    """
    e, m, n = a.e, a.multiply, a.dim

    def assoc(i, j, k):
        return associator_elem(a, e(i), e(j), e(k))

    results = {
        "associative": _scan(3, n, lambda i, j, k: assoc(i, j, k).is_zero()),
        "alternative": _scan(
            3, n, lambda i, j, k: (assoc(i, j, k) + assoc(j, i, k)).is_zero()
            and (assoc(i, j, k) + assoc(i, k, j)).is_zero()
        ),
        "commutative": _scan(2, n, lambda i, j: m(e(i), e(j)) == m(e(j), e(i))),
        "anticommutative": _scan(2, n, lambda i, j: (m(e(i), e(j)) + m(e(j), e(i))).is_zero()),
        "jacobi": _scan(3, n, lambda i, j, k: jacobian_elem(a, e(i), e(j), e(k)).is_zero()),
        "malcev": _scan(
            4, n, lambda i, j, k, l: malcev_linearized(a, e(i), e(j), e(k), e(l)).is_zero()
        ),
    }
    return PropertyReport(a.name, results)
