"""Trilinear brackets on an anticommutative algebra.

With J(x,y,z) the Jacobian, the tangent associator is (x,y,z) = -J(x,y,z)/6,
which is exactly what makes the two expressions of the Yamaguti bracket

    [x,y,z] = [x,[y,z]] - [y,[x,z]] + [[x,y],z] = 6(x,y,z) + 2[[x,y],z]

agree.  The Loos bracket is {x,y,z} = ([x,y,z] + [[x,y],z]) / 3.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import Algebra, jacobian_elem
from .linalg import Vector

YAMAGUTI_FORMS = ("nested", "associator")
LOOS_FORMS = ("nested", "yamaguti", "associator")


@dataclass(frozen=True)
class TrilinearValue:
    value: Vector
    form: str


def tangent_associator(g: Algebra, x: Vector, y: Vector, z: Vector) -> Vector:
    return jacobian_elem(g, x, y, z) / -6


def yamaguti_bracket(g: Algebra, x: Vector, y: Vector, z: Vector, form: str = "nested") -> Vector:
    b = g.multiply
    if form == "nested":
        return b(x, b(y, z)) - b(y, b(x, z)) + b(b(x, y), z)
    if form == "associator":
        return 6 * tangent_associator(g, x, y, z) + 2 * b(b(x, y), z)
    raise ValueError(f"unknown Yamaguti form {form!r}; expected one of {YAMAGUTI_FORMS}")


def loos_bracket(g: Algebra, x: Vector, y: Vector, z: Vector, form: str = "nested") -> Vector:
    b = g.multiply
    if form == "nested":
        return (b(x, b(y, z)) - b(y, b(x, z)) + 2 * b(b(x, y), z)) / 3
    if form == "yamaguti":
        return (yamaguti_bracket(g, x, y, z) + b(b(x, y), z)) / 3
    if form == "associator":
        return (6 * tangent_associator(g, x, y, z) + 3 * b(b(x, y), z)) / 3
    raise ValueError(f"unknown Loos form {form!r}; expected one of {LOOS_FORMS}")


def yamaguti_forms(g, x, y, z) -> list[TrilinearValue]:
    return [TrilinearValue(yamaguti_bracket(g, x, y, z, f), f) for f in YAMAGUTI_FORMS]


def loos_forms(g, x, y, z) -> list[TrilinearValue]:
    return [TrilinearValue(loos_bracket(g, x, y, z, f), f) for f in LOOS_FORMS]


def forms_agree(values: list[TrilinearValue]) -> bool:
    return all(v.value == values[0].value for v in values[1:])
