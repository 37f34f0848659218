"""Exit criteria.  Every comparison is exact rational equality; one line per
criterion is printed in the terminal summary."""

import itertools
import subprocess
import sys
import time
from fractions import Fraction

import pytest

from triplecheck import catalog
from triplecheck.algebra import associator_elem, derived_commutator_algebra, jacobian_elem, negate_structure_constant
from triplecheck.brackets import forms_agree, loos_bracket, loos_forms, yamaguti_bracket, yamaguti_forms
from triplecheck.cli import main
from triplecheck.fileformat import dumps_algebra
from triplecheck.operators import multiplication_triple, yamagutian_hat
from triplecheck.verifier import (
    calibrate_reductivity_constant,
    check_lts_axioms,
    check_proposition,
    check_reductivity,
    check_symmetric_relations,
    check_triple_closure,
    closure_equivalence,
)


def _report(n, ok, text):
    print(f"criterion {n}: {'PASS' if ok else 'FAIL'} {text}")
    assert ok


@pytest.fixture(scope="module")
def sabotaged_algebra():
    return negate_structure_constant(catalog.octonions(), 1, 2, 3)


def test_criterion_01_lts_axioms_octonion_gamma(gamma):
    start = time.perf_counter()
    a, b, c = check_lts_axioms(gamma, mode="exhaustive")
    elapsed = time.perf_counter() - start
    ok = (
        a.passed and b.passed and c.passed
        and (a.instances_checked, b.instances_checked, c.instances_checked) == (343, 343, 16807)
        and elapsed < 60
    )
    _report(1, ok, f"lts-6a/6b/6c exhaustive on octonion Gamma ({elapsed:.1f}s)")


def test_criterion_02_triple_closure(model, gamma):
    start = time.perf_counter()
    verdicts = check_triple_closure(model, mode="exhaustive")
    elapsed = time.perf_counter() - start
    e = gamma.e
    keystone = (
        model.L[0].commutator(model.L[1]).commutator(model.L[0]) == model.op("L", 4 * e("e2"))
        and loos_bracket(gamma, e("e1"), e("e2"), e("e1")) == 4 * e("e2")
    )
    ok = all(v.passed and v.instances_checked == 343 for v in verdicts) and keystone and elapsed < 10
    _report(2, ok, f"tc-L/R/M exhaustive, keystone [[L1,L2],L1] = L_(4e2) ({elapsed:.1f}s)")


def test_criterion_03_reductivity_canonical(model, quaternion_model):
    verdicts = check_reductivity(model, mode="exhaustive")
    consts = [calibrate_reductivity_constant(t, f) for t in (model, quaternion_model) for f in "LRM"]
    ok = all(v.passed and v.instances_checked == 343 for v in verdicts) and all(c == Fraction(1, 6) for c in consts)
    _report(3, ok, "red-L/R/M with 6Y; calibration constant 1/6 (octonion and quaternion models)")


def test_criterion_04_proposition(model, quaternion_model, zero_model):
    ok = all(v.passed for t in (model, quaternion_model, zero_model) for v in check_proposition(t))
    _report(4, ok, "prop-L/R/M on octonion, quaternion and zero models")


def test_criterion_05_equivalence(model, quaternion_model, zero_model, sabotaged_algebra):
    fixtures = {
        "octonion": model,
        "quaternion": quaternion_model,
        "zero": zero_model,
        "sabotaged": multiplication_triple(sabotaged_algebra),
    }
    ok = True
    for name, t in fixtures.items():
        prop = check_proposition(t)
        red, tc = check_reductivity(t), check_triple_closure(t)
        eq = closure_equivalence(t, red=red, tc=tc, prop=prop)
        if all(v.passed for v in prop):
            ok &= eq.status == "holds"
            ok &= all(r.passed == c.passed for r, c in zip(red, tc))
        else:
            ok &= eq.status == "not-applicable"
    ok &= closure_equivalence(fixtures["sabotaged"]).status == "not-applicable"
    _report(5, ok, "red-* and tc-* agree per family wherever prop-* pass (4 fixtures)")


def test_criterion_06_symmetric_relations(model):
    v5b, v5c = check_symmetric_relations(model, mode="exhaustive")
    tc = check_triple_closure(model, mode="exhaustive")
    same = all(t.failures == v5b.family_failures.get(f, 0) and t.passed == v5b.passed for f, t in zip("LRM", tc))
    ok = v5b.passed and v5c.passed and v5b.instances_checked == 343 and v5c.instances_checked == 2401 and same
    _report(6, ok, "sym-5b (343) and sym-5c (2401) for L, R, M; sym-5b identical to tc")


def test_criterion_07_bracket_forms():
    gammas = []
    for name in catalog.CATALOG:
        a = catalog.get(name)
        gammas.append(a if a.kind == "bracket" else derived_commutator_algebra(a))
    ok = True
    for g in gammas:
        basis = [g.e(i) for i in range(g.dim)]
        for x, y, z in itertools.product(basis, repeat=3):
            ok &= forms_agree(loos_forms(g, x, y, z)) and forms_agree(yamaguti_forms(g, x, y, z))
    _report(7, ok, f"Loos and Yamaguti forms agree on {len(gammas)} catalog bracket algebras")


def test_criterion_08_negative_controls(tmp_path, capsys, sabotaged_algebra):
    lts = check_lts_axioms(catalog.non_malcev())[2]
    t = multiplication_triple(sabotaged_algebra)
    failing = [v for v in check_triple_closure(t) + check_reductivity(t) if not v.passed]
    path = tmp_path / "sabotaged.json"
    path.write_text(dumps_algebra(sabotaged_algebra))
    code_lts = main(["verify", "--algebra", "non-malcev", "--suite", "lts-6c"])
    code_sab = main(["verify", "--algebra", str(path), "--suite", "tc-L,tc-R,tc-M,red-L,red-R,red-M"])
    out = capsys.readouterr().out
    ok = (
        not lts.passed and lts.counterexamples[0].inputs == ("e1", "e2", "e1", "e2", "e1")
        and failing and failing[0].counterexamples
        and code_lts == 1 and code_sab == 1 and "counterexample" in out
    )
    _report(8, ok, "non-Mal'tsev fixture fails lts-6c, sign-flipped octonions fail tc/red; exit 1 both")


def test_criterion_09_cross_layer(model, gamma, octonions):
    ok = True
    for i, j, k in itertools.product(range(7), repeat=3):
        x, y, z = gamma.e(i), gamma.e(j), gamma.e(k)
        ok &= yamagutian_hat(model, x, y) @ model.embed(z) == model.embed(yamaguti_bracket(gamma, x, y, z))
        amb = associator_elem(octonions, octonions.e(i + 1), octonions.e(j + 1), octonions.e(k + 1))
        ok &= model.embed(jacobian_elem(gamma, x, y, z)) == 6 * amb
    e, o = gamma.e, octonions.e
    ok &= yamagutian_hat(model, e("e1"), e("e2")) @ o(4) == -4 * o(7)
    ok &= jacobian_elem(gamma, e("e1"), e("e2"), e("e4")) == 12 * e("e7")
    ok &= associator_elem(octonions, o(1), o(2), o(4)) == 2 * o(7)
    _report(9, ok, "Yhat(x;y)z = [x,y,z] and J = 6 * associator on all 343 triples")


def test_criterion_10_determinism(tmp_path):
    outs = []
    for n in range(2):
        path = tmp_path / f"run{n}.json"
        subprocess.run(
            [sys.executable, "-m", "triplecheck", "verify", "--algebra", "octonions", "--suite", "all",
             "--mode", "random", "--samples", "1000", "--seed", "42", "--format", "json", "--out", str(path)],
            check=False,
        )
        outs.append(path.read_bytes())
    ok = outs[0] == outs[1] and len(outs[0]) > 0
    _report(10, ok, "two seeded random runs give byte-identical JSON reports")
