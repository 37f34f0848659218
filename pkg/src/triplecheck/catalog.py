"""Built-in fixture algebras.

Octonions come from repeated Cayley-Dickson doubling of the rationals, so the
basis order is e0 = 1, e1 = i, e2 = j, e3 = k, e4 = e, e5 = ie, e6 = je,
e7 = ke.
"""

from __future__ import annotations

from functools import lru_cache

from .algebra import (
    Algebra,
    BracketAlgebra,
    algebra_from_structure_constants,
    cayley_dickson,
    derived_commutator_algebra,
)


@lru_cache(maxsize=None)
def scalars() -> Algebra:
    return algebra_from_structure_constants(
        {"name": "scalars", "basis": ["e0"], "structure": [[["1"]]]}
    )


@lru_cache(maxsize=None)
def complexes() -> Algebra:
    return cayley_dickson(scalars(), -1, name="complexes")


@lru_cache(maxsize=None)
def quaternions() -> Algebra:
    return cayley_dickson(complexes(), -1, name="quaternions")


@lru_cache(maxsize=None)
def octonions() -> Algebra:
    return cayley_dickson(quaternions(), -1, name="octonions")


@lru_cache(maxsize=None)
def octonion_gamma() -> BracketAlgebra:
    return derived_commutator_algebra(octonions(), range(1, 8), name="octonion-gamma")


@lru_cache(maxsize=None)
def quaternion_gamma() -> BracketAlgebra:
    return derived_commutator_algebra(quaternions(), range(1, 4), name="quaternion-gamma")


@lru_cache(maxsize=None)
def non_malcev() -> BracketAlgebra:
    """[e1,e2] = e3, [e2,e3] = e1, [e1,e3] = e1: anticommutative, not Mal'tsev."""
    table = [
        {"i": 0, "j": 1, "terms": [[2, "1"]]},
        {"i": 1, "j": 0, "terms": [[2, "-1"]]},
        {"i": 1, "j": 2, "terms": [[0, "1"]]},
        {"i": 2, "j": 1, "terms": [[0, "-1"]]},
        {"i": 0, "j": 2, "terms": [[0, "1"]]},
        {"i": 2, "j": 0, "terms": [[0, "-1"]]},
    ]
    return algebra_from_structure_constants(
        {"name": "non-malcev", "kind": "bracket", "basis": ["e1", "e2", "e3"], "table": table}
    )


CATALOG = {
    "scalars": scalars,
    "complexes": complexes,
    "quaternions": quaternions,
    "octonions": octonions,
    "octonion-gamma": octonion_gamma,
    "quaternion-gamma": quaternion_gamma,
    "non-malcev": non_malcev,
}


def get(name: str) -> Algebra:
    try:
        return CATALOG[name]()
    except KeyError:
        raise KeyError(f"unknown algebra {name!r}; known: {', '.join(CATALOG)}") from None


def default_params(a: Algebra) -> list[int]:
    """Translation parameters: every non-unit basis vector, or all of them if that is empty."""
    if a.unit is not None and a.dim > 1:
        return [i for i in range(a.dim) if i != a.unit]
    return list(range(a.dim))
