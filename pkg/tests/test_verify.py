"""Suite registry, golden tables, and report plumbing."""

from __future__ import annotations

import pytest

from tanpoly.report import VerifyReport, failure
from tanpoly.verify import (
    RTILDE_GOLDEN,
    SUITE_NAMES,
    TTILDE_GOLDEN,
    run_all,
    run_suite,
    verify_tables,
)


class TestReport:
    def test_passes_when_no_failures(self):
        report = VerifyReport("demo", 10)
        assert report.passed
        assert report.summary() == "demo: pass (checked 10)"

    def test_failure_rendering(self):
        report = VerifyReport("demo", 3, (failure(n=2, k=1, lhs=5, rhs=6),))
        assert not report.passed
        assert report.summary() == "demo: FAIL (checked 3, failures 1)"
        assert report.failures[0] == {"n": "2", "k": "1", "lhs": "5", "rhs": "6"}

    def test_to_dict(self):
        report = VerifyReport("demo", 2, notes=("a note",))
        assert report.to_dict() == {
            "suite": "demo",
            "checked": 2,
            "pass": True,
            "failures": [],
            "notes": ["a note"],
        }


class TestGoldenTables:
    def test_embedded_rows(self):
        assert RTILDE_GOLDEN[4] == (1, 14, 41, 44, 16)
        assert TTILDE_GOLDEN[4] == (5, 30, 61, 52, 16)
        assert len(RTILDE_GOLDEN) == len(TTILDE_GOLDEN) == 5

    def test_verify_tables(self):
        report = verify_tables(5)
        assert report.passed
        assert report.checked == 10

    def test_verify_tables_caps_at_golden_data(self):
        assert verify_tables(12).checked == 10
        assert verify_tables(2).checked == 4


class TestRegistry:
    def test_names(self):
        assert SUITE_NAMES == (
            "rt-recurrences",
            "corollary",
            "dz-expansion",
            "hoffman",
            "theorem2",
            "tables",
            "beeler",
        )

    @pytest.mark.parametrize("name", SUITE_NAMES)
    def test_each_suite_passes(self, name):
        report = run_suite(name, 8)
        assert report.passed
        assert report.suite == name
        assert report.checked > 0

    def test_unknown_suite(self):
        with pytest.raises(ValueError):
            run_suite("nonsense", 5)

    def test_run_all(self):
        reports = run_all(12)
        assert [r.suite for r in reports] == list(SUITE_NAMES)
        assert all(r.passed for r in reports)
