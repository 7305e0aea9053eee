from __future__ import annotations

import pytest

from gale_buddy.checks import (
    SUITES,
    check_association,
    check_coble,
    check_cremona_kernel,
    check_halfk,
    check_lemma_wj,
    check_pairing,
    check_quadrics,
    check_quintic,
    check_self_assoc,
    check_weddle,
    suite_key,
)
from gale_buddy.checks.common import run_case, summarize
from gale_buddy.checks.cremona_kernel import worked_example
from gale_buddy.utils import RunConfig


def _run(**kw) -> RunConfig:
    return RunConfig(seed=7, bound=30).with_overrides(**kw)


def test_suite_keys():
    assert suite_key("Self-Assoc") == "self_assoc"
    assert list(SUITES)[0] == "association"
    with pytest.raises(ValueError, match="unknown_suite"):
        suite_key("nope")


def test_run_case_and_summarize():
    def boom() -> dict:
        raise ValueError("degree_too_low")

    cases = [run_case(0, lambda: {"ok": True}), run_case(1, boom)]
    assert cases[1] == {"trial": 1, "ok": False, "error": "degree_too_low"}
    result = summarize("demo", cases)
    assert result["status"] == "fail"
    assert result["details"] == "passed=1/2"


def test_association_suite():
    result = check_association(_run(trials=5))
    assert result["status"] == "ok", result["details"]
    assert [c["n"] for c in result["data"]["cases"]] == [1, 2, 2, 3, 5]


def test_self_assoc_suite():
    result = check_self_assoc(_run(trials=2))
    assert result["status"] == "ok", result["details"]
    kinds = [c["kind"] for c in result["data"]["cases"]]
    assert kinds == ["conic", "conic", "random", "random"]


def test_halfk_suite():
    result = check_halfk(_run(trials=2, n=3))
    assert result["status"] == "ok", result["details"]
    assert result["data"]["dimensions"] == {"3": [4, 4]}
    with pytest.raises(ValueError, match="odd_dimension_required"):
        check_halfk(_run(trials=1, n=4))


def test_coble_suite():
    assert check_coble(_run(trials=2))["status"] == "ok"


def test_weddle_suite():
    assert check_weddle(_run(trials=1))["status"] == "ok"


def test_quintic_suite():
    result = check_quintic(_run(trials=1))
    assert result["status"] == "ok", result["details"]
    assert [c["nullity"] for c in result["data"]["cases"]] == [1, 0]


@pytest.mark.parametrize("n", [2, 3])
def test_weyl_lattice_suite(n):
    result = check_lemma_wj(_run(n=n))
    assert result["status"] == "ok"
    case = result["data"]["cases"][0]
    assert case["failures"] == []
    if n == 3:
        assert case["complement"] == "32/32"


def test_pairing_suite():
    result = check_pairing(_run())
    assert result["status"] == "ok"
    assert all(c["beta_anticanonical"] == 4 for c in result["data"]["cases"])


def test_cremona_worked_example():
    assert worked_example()["ok"]


def test_cremona_kernel_suite():
    result = check_cremona_kernel(_run(trials=2, n=2))
    assert result["status"] == "ok", result["details"]
    assert result["data"]["cases"][1]["subsets"] == "16/16"


def test_quadrics_suite():
    result = check_quadrics(_run(trials=2, n=3))
    assert result["status"] == "ok", result["details"]
    kinds = [c["kind"] for c in result["data"]["cases"]]
    assert kinds == ["square_member", "square_member", "open_member"]
    assert result["data"]["open_member_dims"] == [3]
    assert all(c["checks"]["over_discriminant"] for c in result["data"]["cases"][:2])


def test_quadrics_suite_without_open_member():
    result = check_quadrics(_run(trials=1, n=8))
    assert result["status"] == "ok", result["details"]
    assert [c["kind"] for c in result["data"]["cases"]] == ["square_member"]
    assert result["data"]["open_member_dims"] == []
