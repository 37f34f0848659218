"""Translation operator families x -> L_x, R_x, M_x as exact matrices.

Operators are combined with the plain matrix commutator AB - BA.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

from .algebra import Algebra, AlgebraError, BracketAlgebra, derived_commutator_algebra
from .linalg import DimensionError, Matrix, Vector, linear_combination

FAMILIES = ("L", "R", "M")


def left_multiplication(a: Algebra, v: Vector) -> Matrix:
    """Matrix of u -> v u."""
    return Matrix.from_columns([a.multiply(v, a.e(j)) for j in range(a.dim)])


def right_multiplication(a: Algebra, v: Vector) -> Matrix:
    """Matrix of u -> u v."""
    return Matrix.from_columns([a.multiply(a.e(j), v) for j in range(a.dim)])


def negated_sum(left: Matrix, right: Matrix) -> Matrix:
    """Default middle translation: M = -(L + R)."""
    return -(left + right)


@dataclass(frozen=True, eq=False)
class TranslationTriple:
    """Three linear families over the parameter algebra ``params``.

    ``ambient`` and ``embedding`` are None for abstract models such as the
    zero triple.
    """

    name: str
    n: int
    params: BracketAlgebra
    L: tuple[Matrix, ...]
    R: tuple[Matrix, ...]
    M: tuple[Matrix, ...]
    ambient: Algebra | None = None
    embedding: tuple[Vector, ...] | None = None
    middle: str = ""

    def __post_init__(self):
        p = self.params.dim
        for fam in FAMILIES:
            mats = getattr(self, fam)
            if len(mats) != p:
                raise DimensionError(f"{fam} family has {len(mats)} matrices; params have dimension {p}")
            for m in mats:
                if m.dim != self.n:
                    raise DimensionError(f"{fam} family member of dimension {m.dim}; expected {self.n}")

    def family(self, name: str) -> tuple[Matrix, ...]:
        if name not in FAMILIES:
            raise KeyError(f"unknown family {name!r}")
        return getattr(self, name)

    def op(self, family: str, x: Vector) -> Matrix:
        """F_x as the coordinate-weighted combination of the family."""
        if x.dim != self.params.dim:
            raise DimensionError(f"parameter vector of length {x.dim}; expected {self.params.dim}")
        return linear_combination(x.coords, self.family(family), self.n)

    def embed(self, x: Vector) -> Vector:
        if self.embedding is None:
            raise AlgebraError(f"{self.name} has no ambient embedding")
        acc = Vector.zero(self.n)
        for c, v in zip(x.coords, self.embedding):
            if c:
                acc = acc + c * v
        return acc


def multiplication_triple(a: Algebra, params: Sequence[int] | None = None,
                          middle: Callable[[Matrix, Matrix], Matrix] = negated_sum) -> TranslationTriple:
    """Left/right multiplication operators of a unital algebra.

    ``params`` selects the ambient basis vectors spanning the parameter
    algebra (default: every non-unit basis vector); their commutators must
    close.  ``middle`` builds M_i from (L_i, R_i).
    """
    if a.unit is None:
        raise AlgebraError(f"{a.name} has no unit; multiplication operators need one")
    if params is None:
        params = [i for i in range(a.dim) if i != a.unit] or list(range(a.dim))
    gamma = derived_commutator_algebra(a, params, name=f"Gamma({a.name})")
    idx = gamma.ambient_indices
    L = tuple(left_multiplication(a, a.e(i)) for i in idx)
    R = tuple(right_multiplication(a, a.e(i)) for i in idx)
    M = tuple(middle(l, r) for l, r in zip(L, R))
    return TranslationTriple(
        name=f"{a.name}-model",
        n=a.dim,
        params=gamma,
        L=L,
        R=R,
        M=M,
        ambient=a,
        embedding=tuple(a.e(i) for i in idx),
        middle=getattr(middle, "__name__", "custom"),
    )


def zero_triple(n: int, gamma: BracketAlgebra) -> TranslationTriple:
    zeros = tuple(Matrix.zero(n) for _ in range(gamma.dim))
    return TranslationTriple(name=f"zero-model({gamma.name})", n=n, params=gamma,
                             L=zeros, R=zeros, M=zeros, middle="zero")


def yamagutian_hat(t: TranslationTriple, x: Vector, y: Vector) -> Matrix:
    """Unnormalised Yamagutian [L_x,L_y] + [R_x,R_y] + [M_x,M_y] (six times Y)."""
    acc = Matrix.zero(t.n)
    for fam in FAMILIES:
        acc = acc + t.op(fam, x).commutator(t.op(fam, y))
    return acc


def yamagutian(t: TranslationTriple, x: Vector, y: Vector) -> Matrix:
    return yamagutian_hat(t, x, y) / 6


def pair_operator(t: TranslationTriple, x: Vector, y: Vector, family: str = "L") -> Matrix:
    """F(x;y) = [F_x, F_y]."""
    return t.op(family, x).commutator(t.op(family, y))
