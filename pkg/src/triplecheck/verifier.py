"""Identity suites over basis tuples (exhaustive) or seeded random tuples.

Each identity is a pair of expressions that must be exactly equal.  Because
every identity checked here is multilinear in its arguments (the Mal'tsev
identity is scanned in polarised form), agreement on all basis tuples proves
it for all rational vectors.
"""

from __future__ import annotations

import enum
import hashlib
import itertools
import json
import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Sequence

from . import __version__
from .algebra import (
    Algebra,
    AlgebraError,
    BracketAlgebra,
    derived_commutator_algebra,
    jacobian_elem,
    malcev_defect,
    malcev_linearized,
)
from .brackets import loos_bracket, yamaguti_bracket
from .linalg import LinearlyDependentFamily, Matrix, MatrixSpan, Vector
from .operators import FAMILIES, TranslationTriple, multiplication_triple

MAX_COUNTEREXAMPLES = 10
EXHAUSTIVE_LIMIT = 7 ** 5
GUARD_SAMPLES = 100
DEFAULT_RANDOM_SAMPLES = 1000
DEFAULT_FALLBACK_SAMPLES = 20000
COORD_RANGE = (-3, 3)

OPERATOR_SUITES = (
    "red-L", "red-R", "red-M",
    "prop-L", "prop-R", "prop-M",
    "tc-L", "tc-R", "tc-M",
    "sym-5b", "sym-5c",
)
LTS_SUITES = ("lts-6a", "lts-6b", "lts-6c")
STRUCTURE_SUITES = ("malcev", "jacobi", "anticomm")
SUITE_ORDER = OPERATOR_SUITES + LTS_SUITES + STRUCTURE_SUITES

SUITE_GROUPS = {
    "operator": OPERATOR_SUITES,
    "lts": LTS_SUITES,
    "structure": STRUCTURE_SUITES,
    "core": OPERATOR_SUITES + LTS_SUITES,
}

CONVENTIONS = (
    "operator bracket: plain matrix commutator AB - BA",
    "tangent associator: (x,y,z) = -J(x,y,z)/6 with J the Jacobian",
    "reductivity: [Yhat(x;y), F_z] = F_[x,y,z] with Yhat = 6Y, checked for F in L, R, M",
    "proposition: [Yhat(x;y), F_z] = 3[[F_x,F_y],F_z] - F_[[x,y],z], R-family uses R_z throughout",
    "triple closure: [[F_x,F_y],F_z] = F_{x,y,z}, with membership of the left side in the family span",
    "pair relations: [F(x;y), F_z] = F_{x,y,z} and [F(x;y), F(z;w)] = F({x,y,z};w) + F(z;{x,y,w}) for F in L, R, M",
    "mal'tsev identity scanned in polarised form over basis quadruples",
)


class SuiteError(ValueError):
    """Unknown or inapplicable suite request."""


class Calibration(enum.Enum):
    INDETERMINATE = "indeterminate"
    INCONSISTENT = "inconsistent"


@dataclass(frozen=True)
class Counterexample:
    inputs: tuple  # basis labels (exhaustive) or Vectors (random)
    lhs: Vector | Matrix
    rhs: Vector | Matrix
    family: str | None = None


@dataclass(frozen=True)
class IdentityVerdict:
    identity_id: str
    mode: str
    instances_checked: int
    passed: bool
    failures: int = 0
    counterexamples: tuple[Counterexample, ...] = ()
    family_failures: dict = field(default_factory=dict)
    calibration: Fraction | Calibration | None = None
    guard_agrees: bool | None = None

    def __post_init__(self):
        if self.passed != (not self.counterexamples):
            raise ValueError("a verdict passes exactly when it has no counterexamples")


@dataclass(frozen=True)
class EquivalenceVerdict:
    """Outcome of the reductivity / triple-closure equivalence meta-check."""

    status: str  # "holds" | "violated" | "not-applicable"
    families: dict = field(default_factory=dict)  # family -> (reductivity passed, closure passed)
    bridge_passed: bool | None = None
    bridge_instances: int = 0


@dataclass(frozen=True)
class IdentityReport:
    target: dict
    verdicts: tuple[IdentityVerdict, ...]
    version: str
    digest: str
    seed: int
    requested_mode: str
    conventions: tuple[str, ...] = CONVENTIONS
    equivalence: EquivalenceVerdict | None = None
    cross_checks: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return (
            all(v.passed and v.guard_agrees is not False for v in self.verdicts)
            and all(self.cross_checks.values())
            and (self.equivalence is None or self.equivalence.status != "violated")
        )

    def verdict(self, identity_id: str) -> IdentityVerdict:
        for v in self.verdicts:
            if v.identity_id == identity_id:
                return v
        raise KeyError(identity_id)


# --- evaluation context -------------------------------------------------------


class _Context:
    """Memoised building blocks shared by every identity in one run."""

    def __init__(self, gamma: BracketAlgebra, triple: TranslationTriple | None = None):
        self.gamma = gamma
        self.triple = triple
        self.br = gamma.multiply
        self.loos = lru_cache(maxsize=200_000)(lambda x, y, z: loos_bracket(gamma, x, y, z))
        self.yam = lru_cache(maxsize=50_000)(lambda x, y, z: yamaguti_bracket(gamma, x, y, z))
        if triple is not None:
            self.op = lru_cache(maxsize=50_000)(triple.op)
            self.yhat = lru_cache(maxsize=10_000)(self._yhat)
            self.pair = lru_cache(maxsize=50_000)(self._pair)
            self.spans = {}
            for fam in FAMILIES:
                try:
                    self.spans[fam] = MatrixSpan(triple.family(fam))
                except LinearlyDependentFamily:
                    self.spans[fam] = None

    def _yhat(self, x, y):
        acc = Matrix.zero(self.triple.n)
        for fam in FAMILIES:
            acc = acc + self.op(fam, x).commutator(self.op(fam, y))
        return acc

    def _pair(self, fam, x, y):
        return self.op(fam, x).commutator(self.op(fam, y))



def _red(fam):
    def check(ctx, x, y, z):
        lhs = ctx.yhat(x, y).commutator(ctx.op(fam, z))
        rhs = ctx.op(fam, ctx.yam(x, y, z))
        return [] if lhs == rhs else [(fam, lhs, rhs)]
    return check


def _prop(fam):
    def check(ctx, x, y, z):
        lhs = ctx.yhat(x, y).commutator(ctx.op(fam, z))
        rhs = 3 * ctx.pair(fam, x, y).commutator(ctx.op(fam, z)) - ctx.op(fam, ctx.br(ctx.br(x, y), z))
        return [] if lhs == rhs else [(fam, lhs, rhs)]
    return check


def _tc(fam):
    def check(ctx, x, y, z):
        fx, fy, fz = ctx.op(fam, x), ctx.op(fam, y), ctx.op(fam, z)
        lhs = fx.commutator(fy).commutator(fz)
        target = ctx.loos(x, y, z)
        rhs = ctx.op(fam, target)
        ok = lhs == rhs
        span = ctx.spans[fam]
        if ok and span is not None:
            ok = span.express(lhs) == target
        return [] if ok else [(fam, lhs, rhs)]
    return check


def _sym_5b(ctx, x, y, z):
    out = []
    for fam in FAMILIES:
        lhs = ctx.pair(fam, x, y).commutator(ctx.op(fam, z))
        rhs = ctx.op(fam, ctx.loos(x, y, z))
        if lhs != rhs:
            out.append((fam, lhs, rhs))
    return out


def _sym_5c(ctx, x, y, z, w):
    out = []
    xyz, xyw = ctx.loos(x, y, z), ctx.loos(x, y, w)
    for fam in FAMILIES:
        lhs = ctx.pair(fam, x, y).commutator(ctx.pair(fam, z, w))
        rhs = ctx.pair(fam, xyz, w) + ctx.pair(fam, z, xyw)
        if lhs != rhs:
            out.append((fam, lhs, rhs))
    return out


def _vec_check(lhs_fn, rhs_fn=None):
    def check(ctx, *args):
        lhs = lhs_fn(ctx, *args)
        rhs = rhs_fn(ctx, *args) if rhs_fn else Vector.zero(lhs.dim)
        return [] if lhs == rhs else [(None, lhs, rhs)]
    return check


def _lts_6c_lhs(ctx, x, y, z, w, v):
    return ctx.loos(x, y, ctx.loos(z, w, v))


def _lts_6c_rhs(ctx, x, y, z, w, v):
    L = ctx.loos
    return L(L(x, y, z), w, v) + L(z, L(x, y, w), v) + L(z, w, L(x, y, v))


@dataclass(frozen=True)
class _Identity:
    identity_id: str
    arity: int
    needs_triple: bool
    check: Callable
    random_arity: int | None = None
    random_check: Callable | None = None


IDENTITIES: dict[str, _Identity] = {}


def _register(ident: _Identity) -> None:
    IDENTITIES[ident.identity_id] = ident


for _fam in FAMILIES:
    _register(_Identity(f"red-{_fam}", 3, True, _red(_fam)))
    _register(_Identity(f"prop-{_fam}", 3, True, _prop(_fam)))
    _register(_Identity(f"tc-{_fam}", 3, True, _tc(_fam)))
_register(_Identity("sym-5b", 3, True, _sym_5b))
_register(_Identity("sym-5c", 4, True, _sym_5c))
_register(_Identity(
    "lts-6a", 3, False,
    _vec_check(lambda c, x, y, z: c.loos(x, y, z), lambda c, x, y, z: -c.loos(y, x, z)),
))
_register(_Identity(
    "lts-6b", 3, False,
    _vec_check(lambda c, x, y, z: c.loos(x, y, z) + c.loos(y, z, x) + c.loos(z, x, y)),
))
_register(_Identity("lts-6c", 5, False, _vec_check(_lts_6c_lhs, _lts_6c_rhs)))
_register(_Identity(
    "malcev", 4, False,
    _vec_check(lambda c, a, b, y, z: malcev_linearized(c.gamma, a, b, y, z)),
    random_arity=3,
    random_check=_vec_check(lambda c, x, y, z: malcev_defect(c.gamma, x, y, z)),
))
_register(_Identity("jacobi", 3, False, _vec_check(lambda c, x, y, z: jacobian_elem(c.gamma, x, y, z))))
_register(_Identity(
    "anticomm", 2, False,
    _vec_check(lambda c, x, y: c.br(x, y), lambda c, x, y: -c.br(y, x)),
))


# --- running identities -----------------------------------------------------


def _random_vector(rng: random.Random, dim: int) -> Vector:
    lo, hi = COORD_RANGE
    return Vector([rng.randint(lo, hi) for _ in range(dim)])


def _rng(seed: int, tag: str) -> random.Random:
    return random.Random(f"{seed}:{tag}")


def _run(ident: _Identity, ctx: _Context, mode: str, samples: int, seed: int) -> tuple[int, int, list, dict]:
    p = ctx.gamma.dim
    labels = ctx.gamma.basis_labels
    if mode == "exhaustive":
        check, arity = ident.check, ident.arity
        basis = [ctx.gamma.e(i) for i in range(p)]
        tuples = (
            (tuple(labels[i] for i in t), tuple(basis[i] for i in t))
            for t in itertools.product(range(p), repeat=arity)
        )
        count = p ** arity
    else:
        check = ident.random_check or ident.check
        arity = ident.random_arity or ident.arity
        rng = _rng(seed, ident.identity_id + (":guard" if mode == "guard" else ""))

        def draw():
            for _ in range(samples):
                vs = tuple(_random_vector(rng, p) for _ in range(arity))
                yield vs, vs

        tuples = draw()
        count = samples
    failures, cex, fam_fail = 0, [], {}
    for shown, args in tuples:
        bad = check(ctx, *args)
        if not bad:
            continue
        failures += 1
        for fam, lhs, rhs in bad:
            key = fam or "-"
            fam_fail[key] = fam_fail.get(key, 0) + 1
            if len(cex) < MAX_COUNTEREXAMPLES:
                cex.append(Counterexample(shown, lhs, rhs, fam))
    return count, failures, cex, fam_fail


def _choose_mode(ident: _Identity, p: int, mode: str | None) -> str:
    if mode in ("exhaustive", "random"):
        return mode
    if mode not in (None, "auto"):
        raise SuiteError(f"unknown mode {mode!r}; expected exhaustive, random or auto")
    return "exhaustive" if p ** ident.arity <= EXHAUSTIVE_LIMIT else "random"


def _verdict(ident: _Identity, ctx: _Context, mode: str | None, samples: int | None, seed: int,
             guard: bool = True) -> IdentityVerdict:
    p = ctx.gamma.dim
    chosen = _choose_mode(ident, p, mode)
    if chosen == "random" and samples is None:
        samples = DEFAULT_RANDOM_SAMPLES if mode == "random" else DEFAULT_FALLBACK_SAMPLES
    count, failures, cex, fam_fail = _run(ident, ctx, chosen, samples or 0, seed)
    guard_agrees = None
    if chosen == "exhaustive" and guard:
        _, g_fail, _, _ = _run(ident, ctx, "guard", GUARD_SAMPLES, seed)
        guard_agrees = (g_fail == 0) == (failures == 0)
    calibration = None
    if ident.identity_id.startswith("red-") and ctx.triple is not None:
        calibration = calibrate_reductivity_constant(ctx.triple, ident.identity_id[-1], ctx)
    return IdentityVerdict(
        identity_id=ident.identity_id,
        mode=chosen,
        instances_checked=count,
        passed=failures == 0,
        failures=failures,
        counterexamples=tuple(cex),
        family_failures=fam_fail,
        calibration=calibration,
        guard_agrees=guard_agrees,
    )


def _triple_context(t: TranslationTriple) -> _Context:
    return _Context(t.params, t)


def _family_verdicts(prefix: str, t: TranslationTriple, mode, samples, seed, ctx=None):
    ctx = ctx or _triple_context(t)
    return tuple(_verdict(IDENTITIES[f"{prefix}-{f}"], ctx, mode, samples, seed) for f in FAMILIES)


def check_triple_closure(t: TranslationTriple, mode: str | None = "exhaustive", samples=None, seed=0):
    """tc-L, tc-R, tc-M verdicts."""
    return _family_verdicts("tc", t, mode, samples, seed)


def check_reductivity(t: TranslationTriple, mode: str | None = "exhaustive", samples=None, seed=0):
    """red-L, red-R, red-M verdicts in the unnormalised-Yamagutian form."""
    return _family_verdicts("red", t, mode, samples, seed)


def check_proposition(t: TranslationTriple, mode: str | None = "exhaustive", samples=None, seed=0):
    return _family_verdicts("prop", t, mode, samples, seed)


def check_symmetric_relations(t: TranslationTriple, mode: str | None = "exhaustive", samples=None, seed=0):
    ctx = _triple_context(t)
    return tuple(_verdict(IDENTITIES[i], ctx, mode, samples, seed) for i in ("sym-5b", "sym-5c"))


def check_lts_axioms(gamma: BracketAlgebra, mode: str | None = "exhaustive", samples=None, seed=0):
    ctx = _Context(gamma)
    return tuple(_verdict(IDENTITIES[i], ctx, mode, samples, seed) for i in LTS_SUITES)


def calibrate_reductivity_constant(t: TranslationTriple, family: str = "L", ctx: _Context | None = None):
    """The unique c with [Y(x;y), F_z] = c F_[x,y,z] on every basis triple.

    Y is the normalised Yamagutian (one sixth of Yhat).  Returns a Fraction,
    or Calibration.INDETERMINATE when every right side vanishes, or
    Calibration.INCONSISTENT when no single constant fits.
    """
    ctx = ctx or _triple_context(t)
    p = t.params.dim
    basis = [t.params.e(i) for i in range(p)]
    c = None
    for x, y, z in itertools.product(basis, repeat=3):
        lhs = ctx.yhat(x, y).commutator(ctx.op(family, z)) / 6
        rhs = ctx.op(family, ctx.yam(x, y, z))
        if rhs.is_zero():
            if not lhs.is_zero():
                return Calibration.INCONSISTENT
            continue
        if c is None:
            i = next(k for k, a in enumerate(rhs.flat()) if a)
            c = lhs.flat()[i] / rhs.flat()[i]
        if lhs != c * rhs:
            return Calibration.INCONSISTENT
    return Calibration.INDETERMINATE if c is None else c


def closure_equivalence(t: TranslationTriple, red=None, tc=None, prop=None) -> EquivalenceVerdict:
    """Reductivity and triple closure must agree family by family once the
    proposition identities hold; also checks 3{x,y,z} = [x,y,z] + [[x,y],z]
    on every basis triple."""
    ctx = _triple_context(t)
    prop = prop or check_proposition(t)
    if not all(v.passed for v in prop):
        return EquivalenceVerdict("not-applicable")
    red = red or check_reductivity(t)
    tc = tc or check_triple_closure(t)
    families = {f: (r.passed, c.passed) for f, r, c in zip(FAMILIES, red, tc)}
    g = t.params
    basis = [g.e(i) for i in range(g.dim)]
    bridge = all(
        3 * ctx.loos(x, y, z) == ctx.yam(x, y, z) + g.multiply(g.multiply(x, y), z)
        for x, y, z in itertools.product(basis, repeat=3)
    )
    agree = all(a == b for a, b in families.values())
    return EquivalenceVerdict(
        "holds" if agree and bridge else "violated",
        families,
        bridge_passed=bridge,
        bridge_instances=g.dim ** 3,
    )


# --- suite orchestration ------------------------------------------------------


def expand_suites(requested: Sequence[str], applicable: Sequence[str]) -> list[str]:
    """Resolve group names ("all", "core", "operator", "lts", "structure")."""
    out = []
    for name in requested:
        if name == "all":
            names = list(applicable)
        elif name in SUITE_GROUPS:
            names = list(SUITE_GROUPS[name])
        elif name in IDENTITIES:
            names = [name]
        else:
            raise SuiteError(
                f"unknown suite {name!r}; applicable suites: {', '.join(applicable)}"
            )
        for n in names:
            if n not in applicable:
                raise SuiteError(
                    f"suite {n!r} does not apply to this target; applicable suites: {', '.join(applicable)}"
                )
            if n not in out:
                out.append(n)
    return sorted(out, key=SUITE_ORDER.index)


def _resolve_target(target, params):
    """Returns (triple or None, gamma, description)."""
    if isinstance(target, TranslationTriple):
        return target, target.params, {
            "name": target.name, "kind": "model", "dim": target.n,
            "params_dim": target.params.dim, "middle": target.middle,
        }
    if isinstance(target, BracketAlgebra):
        if params is not None:
            raise SuiteError("params only apply to algebras with a product, not brackets")
        return None, target, {"name": target.name, "kind": "bracket", "dim": target.dim}
    if isinstance(target, Algebra):
        if target.is_unital:
            t = multiplication_triple(target, params)
            return t, t.params, {
                "name": target.name, "kind": "algebra", "dim": target.dim,
                "params": list(t.params.ambient_indices), "params_dim": t.params.dim,
                "middle": t.middle,
            }
        gamma = derived_commutator_algebra(target, params)
        return None, gamma, {
            "name": target.name, "kind": "algebra", "dim": target.dim,
            "params": list(gamma.ambient_indices), "params_dim": gamma.dim,
        }
    raise SuiteError(f"cannot verify a {type(target).__name__}")


def applicable_suites(target) -> list[str]:
    triple = target if isinstance(target, TranslationTriple) else None
    if isinstance(target, Algebra) and not isinstance(target, BracketAlgebra) and target.is_unital:
        triple = True
    base = list(LTS_SUITES + STRUCTURE_SUITES)
    return (list(OPERATOR_SUITES) + base) if triple else base


def _target_digest(target, triple, gamma, params, suites, mode, samples, seed) -> str:
    from .fileformat import algebra_to_content

    if isinstance(target, Algebra):
        body = algebra_to_content(target, params)
    else:
        body = {
            "name": triple.name, "n": triple.n, "params": algebra_to_content(gamma),
            "families": {
                f: [[[str(c) for c in row] for row in m.rows()] for m in triple.family(f)] for f in FAMILIES
            },
        }
    payload = {"target": body, "suites": suites, "mode": mode, "samples": samples, "seed": seed}
    blob = json.dumps(payload, sort_keys=True, separators=(",", ":")).encode()
    return hashlib.sha256(blob).hexdigest()


def run_suite(target, suites: Sequence[str] = ("all",), mode: str | None = None,
              samples: int | None = None, seed: int = 0, params: Sequence[int] | None = None) -> IdentityReport:
    """Run the requested identity suites on an algebra, bracket algebra or model.

    A unital algebra is verified through its multiplication model (params
    selects the parameter basis) together with its commutator algebra.
    ``mode`` is "exhaustive", "random" or None (exhaustive where the tuple
    count allows, sampled above that).
    """
    if mode not in (None, "auto", "exhaustive", "random"):
        raise SuiteError(f"unknown mode {mode!r}; expected exhaustive or random")
    if samples is not None and samples < 1:
        raise SuiteError("samples must be positive")
    if isinstance(suites, str):
        suites = [suites]
    applicable = applicable_suites(target)
    ids = expand_suites(suites, applicable)
    try:
        triple, gamma, description = _resolve_target(target, params)
    except AlgebraError as exc:
        raise SuiteError(str(exc)) from None
    ctx = _Context(gamma, triple)
    verdicts = tuple(_verdict(IDENTITIES[i], ctx, mode, samples, seed) for i in ids)
    by_id = {v.identity_id: v for v in verdicts}

    cross = {}
    if "sym-5b" in by_id:
        for f in FAMILIES:
            tc = by_id.get(f"tc-{f}")
            if tc is None:
                continue
            same = tc.passed == (by_id["sym-5b"].family_failures.get(f, 0) == 0)
            if tc.mode == "exhaustive" and by_id["sym-5b"].mode == "exhaustive":
                same = same and tc.failures == by_id["sym-5b"].family_failures.get(f, 0)
            cross[f"tc-{f} = sym-5b[{f}]"] = same

    equivalence = None
    if all(f"{k}-{f}" in by_id for k in ("red", "tc", "prop") for f in FAMILIES):
        equivalence = closure_equivalence(
            triple,
            red=tuple(by_id[f"red-{f}"] for f in FAMILIES),
            tc=tuple(by_id[f"tc-{f}"] for f in FAMILIES),
            prop=tuple(by_id[f"prop-{f}"] for f in FAMILIES),
        )

    digest = _target_digest(target, triple, gamma, params, ids, mode or "auto", samples, seed)
    return IdentityReport(
        target=description,
        verdicts=verdicts,
        version=__version__,
        digest=digest,
        seed=seed,
        requested_mode=mode or "auto",
        equivalence=equivalence,
        cross_checks=cross,
    )
