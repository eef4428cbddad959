"""Identity engine behavior, including deliberate fault injection."""

import json
from dataclasses import replace
from fractions import Fraction

import pytest

from holtkit import catalog, verify
from holtkit.phasepoly import PX, PhasePoly, VectorField, poisson_bracket, upow
from holtkit.ring import K2

EXPECTED_IDS = [
    "conserved_J_h1_3", "conserved_J_h1_3_k",
    "conserved_J_h2_4", "conserved_J_h2_4_k",
    "conserved_J_h3_6", "conserved_J_h3_6_k",
    "conserved_K2_3", "conserved_K3_4",
    "limit_K2_3", "limit_K3_4", "limit_K4_6",
    "relation_K4_6",
    "bracket_K3_K2", "bracket_K4_K2", "bracket_K4_K3",
    "gamma_H",
    "commutator_X2_X3", "commutator_X2_X4", "commutator_X3_X4",
    "closure_heisenberg_K3", "closure_heisenberg_K4",
    "jacobi_H_K2_K3",
]


@pytest.fixture(scope="module")
def report():
    return verify.full_suite()


def test_full_suite_passes(report):
    assert report.all_passed
    assert [c.id for c in report.checks] == EXPECTED_IDS


def test_passed_checks_have_no_residual(report):
    for c in report.checks:
        assert c.passed
        assert c.residual_rendered is None
        assert c.millis >= 0.0
        assert c.description
        assert c.citation


def test_json_document_shape(report):
    doc = json.loads(report.to_json())
    assert doc["all_passed"] is True
    assert len(doc["checks"]) == len(EXPECTED_IDS)
    for item in doc["checks"]:
        assert set(item) == {"id", "description", "citation", "passed",
                             "residual", "millis"}


def test_text_rendering_is_stable(report):
    text = report.render_text()
    assert text == report.render_text()
    assert "millis" not in text
    assert text.count("PASS") == len(EXPECTED_IDS)


def test_check_conserved_failure_renders_residual():
    H = catalog.build("H_U").expression
    c = verify.check_conserved(PX, H, id="px_not_conserved")
    assert not c.passed
    assert c.residual_rendered == "-k2*u^-2"


def test_check_identity_direction():
    c = verify.check_identity(PhasePoly.constant(2), PhasePoly.constant(1))
    assert not c.passed
    assert c.residual_rendered == "1"


def test_check_vf_relation_mismatch():
    G = catalog.build("Gamma_H").expression
    c = verify.check_vf_relation(G, 3 * G)
    assert not c.passed
    assert "dx/dt" in c.residual_rendered


def test_lie_closure_requires_claims():
    K23 = catalog.build("K2_3").expression
    K34 = catalog.build("K3_4").expression
    with pytest.raises(KeyError):
        verify.check_lie_closure({"a": K23, "b": K34}, {})
    with pytest.raises(ValueError):
        verify.check_lie_closure({}, {})


def test_lie_closure_single_element_trivial():
    K23 = catalog.build("K2_3").expression
    c = verify.check_lie_closure({"a": K23}, {})
    assert c.passed


def test_lie_closure_uses_antisymmetry_for_reversed_claims():
    K23 = catalog.build("K2_3").expression
    K34 = catalog.build("K3_4").expression
    claimed = {("K2_3", "K3_4"): PhasePoly.constant(-108 * K2**3)}
    c = verify.check_lie_closure({"K3_4": K34, "K2_3": K23}, claimed)
    assert c.passed


def _flip_term(poly, index):
    monos = sorted(poly.terms, key=lambda m: m.sort_key(), reverse=True)
    target = monos[index]
    flipped = dict(poly.terms)
    flipped[target] = -flipped[target]
    return PhasePoly(flipped)


@pytest.mark.parametrize("index", range(5))
def test_single_sign_flip_in_cubic_integral_is_caught(index):
    """Any one sign error in the 5-term cubic integral breaks conservation,
    the cubic/quartic bracket value, and the sextic functional relation."""
    entry = catalog.build("K2_3")
    bad = replace(entry, expression=_flip_term(entry.expression, index))
    report = verify.full_suite(entries={"K2_3": bad})
    assert not report.all_passed
    by_id = {c.id: c for c in report.checks}
    for cid in ("conserved_K2_3", "bracket_K3_K2", "relation_K4_6"):
        assert not by_id[cid].passed, cid
        assert by_id[cid].residual_rendered not in (None, "0")


def test_fault_injection_leaves_untouched_checks_green():
    entry = catalog.build("K2_3")
    bad = replace(entry, expression=_flip_term(entry.expression, 0))
    report = verify.full_suite(entries={"K2_3": bad})
    by_id = {c.id: c for c in report.checks}
    for cid in ("conserved_J_h1_3", "conserved_K3_4", "limit_K3_4",
                "gamma_H", "commutator_X2_X3"):
        assert by_id[cid].passed, cid
