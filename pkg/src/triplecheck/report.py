"""Text and JSON renderings of identity reports.

The JSON form is canonical: sorted keys, rationals as "p/q" strings, and
no timestamps, so identical runs produce identical bytes.  It parses back
into an equal :class:`IdentityReport`.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .linalg import Matrix, Vector
from .verifier import (
    Calibration,
    Counterexample,
    EquivalenceVerdict,
    IdentityReport,
    IdentityVerdict,
)

FORMAT_VERSION = 1


def _value(v):
    if isinstance(v, Matrix):
        return {"matrix": [[str(c) for c in row] for row in v.rows()]}
    return {"vector": [str(c) for c in v.coords]}


def _parse_value(d):
    if "matrix" in d:
        return Matrix([[Fraction(c) for c in row] for row in d["matrix"]])
    return Vector([Fraction(c) for c in d["vector"]])


def _input(x):
    return x if isinstance(x, str) else [str(c) for c in x.coords]


def _parse_input(x):
    return x if isinstance(x, str) else Vector([Fraction(c) for c in x])


def _calibration(c):
    if c is None:
        return None
    if isinstance(c, Calibration):
        return c.value
    return str(c)


def _parse_calibration(c):
    if c is None:
        return None
    for member in Calibration:
        if c == member.value:
            return member
    return Fraction(c)


def verdict_to_dict(v: IdentityVerdict) -> dict:
    return {
        "identity": v.identity_id,
        "mode": v.mode,
        "instances": v.instances_checked,
        "passed": v.passed,
        "failures": v.failures,
        "family_failures": dict(sorted(v.family_failures.items())),
        "calibration": _calibration(v.calibration),
        "guard_agrees": v.guard_agrees,
        "counterexamples": [
            {
                "inputs": [_input(x) for x in c.inputs],
                "family": c.family,
                "lhs": _value(c.lhs),
                "rhs": _value(c.rhs),
            }
            for c in v.counterexamples
        ],
    }


def verdict_from_dict(d: dict) -> IdentityVerdict:
    return IdentityVerdict(
        identity_id=d["identity"],
        mode=d["mode"],
        instances_checked=d["instances"],
        passed=d["passed"],
        failures=d["failures"],
        counterexamples=tuple(
            Counterexample(
                tuple(_parse_input(x) for x in c["inputs"]),
                _parse_value(c["lhs"]),
                _parse_value(c["rhs"]),
                c["family"],
            )
            for c in d["counterexamples"]
        ),
        family_failures=dict(d["family_failures"]),
        calibration=_parse_calibration(d["calibration"]),
        guard_agrees=d["guard_agrees"],
    )


def report_to_dict(r: IdentityReport) -> dict:
    eq = None
    if r.equivalence is not None:
        eq = {
            "status": r.equivalence.status,
            "families": {f: list(v) for f, v in r.equivalence.families.items()},
            "bridge_passed": r.equivalence.bridge_passed,
            "bridge_instances": r.equivalence.bridge_instances,
        }
    return {
        "format": FORMAT_VERSION,
        "toolkit_version": r.version,
        "digest": r.digest,
        "seed": r.seed,
        "mode": r.requested_mode,
        "target": r.target,
        "conventions": list(r.conventions),
        "passed": r.passed,
        "verdicts": [verdict_to_dict(v) for v in r.verdicts],
        "equivalence": eq,
        "cross_checks": r.cross_checks,
    }


def report_from_dict(d: dict) -> IdentityReport:
    eq = d.get("equivalence")
    if eq is not None:
        eq = EquivalenceVerdict(
            eq["status"],
            {f: tuple(v) for f, v in eq["families"].items()},
            eq["bridge_passed"],
            eq["bridge_instances"],
        )
    return IdentityReport(
        target=d["target"],
        verdicts=tuple(verdict_from_dict(v) for v in d["verdicts"]),
        version=d["toolkit_version"],
        digest=d["digest"],
        seed=d["seed"],
        requested_mode=d["mode"],
        conventions=tuple(d["conventions"]),
        equivalence=eq,
        cross_checks=dict(d["cross_checks"]),
    )


def to_json(r: IdentityReport) -> str:
    return json.dumps(report_to_dict(r), indent=2, sort_keys=True) + "\n"


def from_json(text: str) -> IdentityReport:
    return report_from_dict(json.loads(text))


def _show(x) -> str:
    return x if isinstance(x, str) else "(" + ", ".join(str(c) for c in x.coords) + ")"


def to_text(r: IdentityReport) -> str:
    t = r.target
    lines = [
        f"triplecheck {r.version}  target={t['name']} kind={t['kind']} dim={t['dim']}"
        + (f" params={t['params_dim']}" if "params_dim" in t else ""),
        f"digest {r.digest}  mode={r.requested_mode} seed={r.seed}",
    ]
    for v in r.verdicts:
        status = "PASS" if v.passed else "FAIL"
        line = f"{status} {v.identity_id:<9} {v.mode:<10} {v.instances_checked:>6} instances"
        if not v.passed:
            line += f", {v.failures} failing"
        if v.calibration is not None:
            line += f", calibration {_calibration(v.calibration)}"
        if v.guard_agrees is False:
            line += ", RANDOM GUARD DISAGREES"
        lines.append(line)
        for c in v.counterexamples:
            fam = f" [{c.family}]" if c.family else ""
            lines.append(f"    counterexample{fam}: ({', '.join(_show(x) for x in c.inputs)})")
    if r.equivalence is not None:
        e = r.equivalence
        detail = ", ".join(f"{f}: red={a} tc={b}" for f, (a, b) in e.families.items())
        lines.append(f"equivalence {e.status}" + (f" ({detail}; bridge={e.bridge_passed})" if detail else ""))
    for name, ok in r.cross_checks.items():
        lines.append(f"cross-check {'ok' if ok else 'MISMATCH'}: {name}")
    lines.append("overall " + ("PASS" if r.passed else "FAIL"))
    return "\n".join(lines) + "\n"
