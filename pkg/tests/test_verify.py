import pytest

from oracles import partitions_desc
from rrbeck import verify
from rrbeck.bijections import PsiBranch
from rrbeck.qseries import series_from_coeffs

SMALL = {
    "qbinomial": {"max_n": 12, "box": 4},
    "rr_identities": {"max_n": 15},
    "beck_euler": {"max_n": 15},
    "beck_pair_form": {"max_n": 15},
    "theorem1": {"max_n": 15},
    "theorem1_cases": {"max_n": 12},
    "phi": {"max_n": 15},
    "corollary": {"max_n": 15},
    "theorem2": {"max_n": 15},
    "psi": {"max_n": 15, "diagnostic_max_n": 12},
}


@pytest.mark.parametrize("name", list(verify.CHECKS))
def test_checks_pass_small(name):
    res = verify.CHECKS[name](**SMALL[name])
    assert res.check_name == name
    assert res.passed and not res.failures()
    assert res.status in (verify.PASS, verify.DIAGNOSTIC)


def test_registry_matches_small_table():
    assert set(SMALL) == set(verify.CHECKS)


def test_deterministic():
    a = verify.check_theorem2(12).to_dict()
    b = verify.check_theorem2(12).to_dict()
    assert a == b


def test_to_dict_keys():
    d = verify.check_beck_euler(5).to_dict()
    assert set(d) == {"check", "range", "status", "witnesses", "diagnostics", "notes"}
    assert d["range"] == [0, 5]
    assert set(d["witnesses"][0]) >= {"n", "expected", "actual", "match"}


def test_theorem1_small_witnesses():
    res = verify.check_theorem1(6)
    w4 = res.witnesses[4]
    assert w4.routes == {"series": 2, "enumeration": 2, "pairs": 2}


def test_theorem1_rows_past_max_n_use_case_sum():
    res = verify.check_theorem1(5, order=20)
    assert res.n_range == (0, 20) and res.status == verify.PASS
    assert "case_sum" in res.witnesses[20].routes


def test_corrupted_series_fails_with_counterexample(monkeypatch):
    real = verify.genfun.t1_series

    def broken(order):
        s = real(order)
        cs = list(s.coeffs)
        cs[7] += 1
        return series_from_coeffs(cs, order)

    monkeypatch.setattr(verify.genfun, "t1_series", broken)
    res = verify.check_theorem1(10)
    assert res.status == verify.FAIL and not res.passed
    (bad,) = res.failures()
    assert bad.n == 7 and bad.counterexample


def test_corollary_equality_only_at_one():
    res = verify.check_corollary(30)
    assert res.n_range == (1, 30)
    assert res.notes == ["equality (non-strict) at n = [1]"]


def test_psi_diagnostics_are_not_failures():
    res = verify.check_psi(12, diagnostic_max_n=12)
    assert res.passed
    assert all(d["direction"] in ("forward", "reverse") for d in res.diagnostics)
    # forward disagreements never involve the first three labels
    assert not [d for d in res.diagnostics if d["direction"] == "forward" and d["label"] in ("I1", "I2", "I3")]


def test_branch_coverage_small_n_is_partial():
    hits = verify.psi_branch_coverage(12)
    assert PsiBranch.EVEN in hits and PsiBranch.MOD20_1_R1_LAST not in hits
    assert hits[PsiBranch.EVEN] == (2, "(2*)")


def test_beck_table_values():
    rows = verify.table("beck-euler", 12)
    for r in rows:
        odd = sum(len(p) for p in partitions_desc(r["n"]) if all(x % 2 for x in p))
        dist = sum(len(p) for p in partitions_desc(r["n"]) if len(set(p)) == len(p))
        assert (r["lhs"], r["rhs"]) == (odd, dist) and r["match"]


def test_tables_start_points():
    assert verify.table("corollary", 3)[0]["n"] == 1
    assert verify.table("rr2-beck", 4)[-1] == {"n": 4, "lhs": 2, "rhs": 1, "excess": 1, "match": True}
    assert verify.table("rr1-beck", 4)[-1]["excess"] == 2
