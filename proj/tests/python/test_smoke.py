import json
import os
import subprocess
from fractions import Fraction
from pathlib import Path

import pytest

sb = pytest.importorskip("seshadri_bounds")

SCHEMA_PATH = Path(__file__).resolve().parents[2] / "schema" / "report.schema.json"


def test_exact_scalar_roundtrip():
    half = sb.make_rational(1, 2)
    assert str(half) == "1/2"
    assert half.decimal(3) == "0.500"
    assert half.as_rational() == Fraction(1, 2)

    root = sb.fourth_root(sb.ExactScalar(2))
    assert root.radical_depth() == 2
    assert root.decimal(4) == "1.1892"
    assert sb.compare(root * root, sb.sqrt(sb.ExactScalar(2))) == sb.Ordering.Equal


def test_depth_and_negativity_errors():
    with pytest.raises(ValueError):
        sb.sqrt(sb.ExactScalar(-1))
    with pytest.raises(ValueError):
        sb.sqrt(sb.fourth_root(sb.ExactScalar(2)))


def test_theorem_bound_and_oracle():
    s = sb.PolarizedSurface.general_type(1, 1, pg=2)
    assert sb.validate(s).ok()
    tb = sb.theorem_bound(s)
    assert str(tb.value) == "1/2"
    oracle = sb.oracle_infimum(s, p_max=50)
    assert oracle.value == sb.make_rational(1, 2)
    assert (oracle.witness.p, oracle.witness.m) == (1, 2)

    plane = sb.PolarizedSurface.projective_plane()
    assert sb.theorem_bound(plane).value == sb.ExactScalar(1)


def test_validation_reports_are_data():
    bad = sb.PolarizedSurface.general_type(1, 2)
    report = sb.validate(bad)
    assert not report.ok()
    assert report.violations[0].id == "parity"


def test_canonical_dispatch():
    trace = sb.canonical_seshadri_lower(sb.PolarizedSurface.general_type(1, 1, pg=2))
    assert trace.case_id == sb.CanonicalCase.K2OnePgTwo
    assert trace.sharp
    assert trace.bound == sb.make_rational(1, 2)


def test_audit_finds_the_b_discrepancy():
    findings = sb.audit_chain(k2_max=10, r_max=5, l2_max=2)
    b3 = [f for f in findings if f.chain == sb.Chain.B and f.at.r == 3]
    assert len(b3) == 1
    assert b3[0].verdict == sb.Verdict.Fails
    assert b3[0].lhs == sb.make_rational(1, 3)


def test_wps_invariants_and_example():
    inv = sb.hypersurface_invariants(sb.WeightedHypersurface((1, 1, 2, 5), 10))
    assert inv.k2 == Fraction(1)
    assert inv.pg == 2
    assert not inv.integrality_warning
    assert sb.count_monomials((1, 1, 2, 5), 2) == 4

    ex = sb.sharpness_example()
    assert ex.k2 == 1 and ex.pg == 2 and ex.picard_rank_one and ex.sharp
    assert ex.bound == sb.make_rational(1, 2)


def test_json_reports_validate_against_the_schema():
    jsonschema = pytest.importorskip("jsonschema")
    schema = json.loads(SCHEMA_PATH.read_text())
    docs = [
        sb.bound_report_json(sb.PolarizedSurface.general_type(1, 1, pg=2)),
        sb.bound_report_json(sb.PolarizedSurface.general_type(1, 2)),
        sb.audit_report_json(k2_max=10, r_max=3, l2_max=2),
        sb.wps_report_json(sb.WeightedHypersurface((1, 1, 2, 5), 10)),
        sb.example_report_json(),
    ]
    for text in docs:
        jsonschema.validate(json.loads(text), schema)


def test_cli_binary_matches_module_output():
    cli = os.environ.get("SESHADRI_CLI")
    if not cli:
        pytest.skip("SESHADRI_CLI not set")
    proc = subprocess.run(
        [cli, "example", "--format", "json"], capture_output=True, text=True, check=True
    )
    assert proc.stdout == sb.example_report_json()
