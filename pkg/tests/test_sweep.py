import json

import pytest

import lcdmds as L
from lcdmds.errors import ParamViolation


def small_rl_spec(**kw):
    base = dict(family="rl_euclidean", p=3, m=2, k=4,
                alpha_kind=L.ROOTS_WITH_ZERO)
    base.update(kw)
    return L.SweepSpec(**base)


def test_spec_validation():
    with pytest.raises(ParamViolation):
        L.SweepSpec("twisted_spherical", 3, 2, 2, L.ROOTS_OF_UNITY)
    with pytest.raises(ParamViolation):
        L.SweepSpec("twisted_euclidean", 3, 2, 2, L.ROOTS_OF_UNITY)  # no t, h
    with pytest.raises(ParamViolation):
        small_rl_spec(candidate_kind="coset_outside_subfield")
    with pytest.raises(ParamViolation):
        small_rl_spec(candidate_kind="explicit")


def test_precondition_gate():
    # h = 0 violates the LCD construction hypothesis unless overridden
    spec = L.SweepSpec("twisted_euclidean", 3, 4, 4, L.ROOTS_UNION_GAMMA_SCALED,
                       t=1, h=0)
    with pytest.raises(ParamViolation):
        L.run_sweep(spec)
    spec_ok = L.SweepSpec("twisted_euclidean", 3, 4, 4, L.ROOTS_UNION_GAMMA_SCALED,
                          t=1, h=0, allow_unchecked=True,
                          candidate_kind="explicit", explicit_candidates=(1, 5))
    report = L.run_sweep(spec_ok)
    assert report.summary["rows"] == 2


def test_rows_sorted_and_complete():
    report = L.run_sweep(small_rl_spec())
    cands = [r.candidate for r in report.rows]
    assert cands == sorted(cands) == list(range(1, 9))
    assert report.summary["rows"] == 8
    assert report.summary["mds_true"] == 0
    assert report.env["q"] == 9 and report.env["version"] == L.__version__


def test_candidate_kinds():
    rep_all = L.run_sweep(small_rl_spec(candidate_kind="all"))
    assert [r.candidate for r in rep_all.rows] == list(range(9))
    rep_exp = L.run_sweep(small_rl_spec(candidate_kind="explicit",
                                        explicit_candidates=(7, 2, 2)))
    assert [r.candidate for r in rep_exp.rows] == [2, 7]
    spec = L.SweepSpec("rl_euclidean", 3, 4, 4, L.ROOTS_WITH_ZERO,
                       subfield_order=9, candidate_kind="coset_outside_subfield")
    rep_coset = L.run_sweep(spec)
    assert len(rep_coset.rows) == 81 - 9
    F = L.make_field(3, 4)
    assert all(F.pow_idx(r.candidate, 9) != r.candidate for r in rep_coset.rows)


def test_determinism_modulo_runtime():
    spec = small_rl_spec()
    a = L.run_sweep(spec).to_json_dict()
    b = L.run_sweep(spec).to_json_dict()
    for d in (a, b):
        for row in d["rows"]:
            row["runtime"] = 0.0
    assert a == b


def test_json_roundtrip(tmp_path):
    report = L.run_sweep(small_rl_spec())
    path = str(tmp_path / "report.json")
    L.persist_report(report, path, fmt="json")
    loaded = L.load_report(path)
    assert loaded == report
    # serialization is byte-stable
    L.persist_report(loaded, path + "2", fmt="json")
    assert open(path).read() == open(path + "2").read()
    # stable schema names
    d = report.to_json_dict()
    assert set(d) == {"spec", "rows", "summary", "env"}
    assert set(d["rows"][0]) == {"candidate", "lcd", "mds", "non_grs", "error", "runtime"}
    assert {"lcd_true", "mds_true", "non_grs_true"} <= set(d["summary"])
    assert {"q", "modulus", "gamma_index"} <= set(d["env"])


def test_csv_output(tmp_path):
    report = L.run_sweep(small_rl_spec())
    path = str(tmp_path / "report.csv")
    L.persist_report(report, path, fmt="csv")
    lines = open(path).read().splitlines()
    assert lines[0] == "candidate,lcd,mds,non_grs,error,runtime"
    assert len(lines) == 1 + len(report.rows)
    assert lines[1].startswith("1,true,false,inapplicable,")


def test_row_level_fault_isolation():
    # C(32, 16) blows the default minor budget: the sweep must keep going,
    # recording the budget error per row with LCD already evaluated
    spec = L.SweepSpec("twisted_euclidean", 3, 4, 16, L.ROOTS_UNION_GAMMA_SCALED,
                       t=1, h=1, candidate_kind="explicit",
                       explicit_candidates=(1, 3, 7))
    report = L.run_sweep(spec)
    assert report.summary["rows"] == 3
    for row in report.rows:
        assert row.lcd is True
        assert row.mds is None
        assert row.error and "CombinationBudgetExceeded" in row.error
    assert report.summary["errors"] == 3
    assert report.summary["mds_true"] == 0


def test_eta_zero_candidate_is_a_row_error():
    spec = L.SweepSpec("twisted_euclidean", 3, 2, 2, L.ROOTS_UNION_GAMMA_SCALED,
                       t=1, h=1, candidate_kind="all")
    report = L.run_sweep(spec)
    zero_row = report.row_for(0)
    assert zero_row.error and "ParamViolation" in zero_row.error
    assert zero_row.lcd is None
    assert sum(1 for r in report.rows if r.error) == 1


def test_coset_candidates_always_mds():
    # subfield evaluation points + candidates outside the subfield: every
    # row must come back MDS
    spec = L.SweepSpec("twisted_euclidean", 3, 4, 2, L.ROOTS_UNION_GAMMA_SCALED,
                       t=1, h=1, subfield_order=9,
                       candidate_kind="coset_outside_subfield")
    report = L.run_sweep(spec)
    assert report.summary["rows"] == 72
    assert report.summary["mds_true"] == 72


def test_reproduce_quick_targets():
    res = L.reproduce("ex3.7a")
    assert res.passed and res.metric_value == 0
    assert res.zero_row is not None and res.zero_row.mds is False
    assert res.summary_line() == "PASS mds_count=0"
    res13a = L.reproduce("ex3.13a")
    assert res13a.passed and res13a.metric_value == 12
    assert res13a.details["qualifying_count"] == 12
    with pytest.raises(ParamViolation):
        L.reproduce("ex9.9")


def test_reproduce_alternative_modulus_invariance():
    alt = L.primitive_moduli(3, 2, 2)[1]
    res_default = L.reproduce("ex3.7a")
    res_alt = L.reproduce("ex3.7a", modulus=alt)
    assert res_alt.report.env["modulus"] == list(alt)
    assert res_default.passed and res_alt.passed
    assert res_default.metric_value == res_alt.metric_value


def test_spec_json_roundtrip():
    spec = L.SweepSpec("twisted_hermitian", 11, 2, 5, L.ROOTS_UNION_GAMMA_R_SCALED,
                       t=1, h=3, modulus=(7, 1, 1),
                       candidate_kind="explicit", explicit_candidates=(1, 2))
    back = L.SweepSpec.from_json_dict(json.loads(json.dumps(spec.to_json_dict())))
    assert back == spec
