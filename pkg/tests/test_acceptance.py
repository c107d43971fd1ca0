"""Acceptance criteria, one test per criterion, each printing a PASS/FAIL line.

Run alone with ``pytest tests/test_acceptance.py -s`` to see the table.
Time limits are checked with the stated tolerance on the criterion's wall time.
"""
import pytest

from arbor.reproduce import CRITERIA, run_criterion

LIMITS = {  # seconds, as stated per criterion; None = no stated limit
    "1": 30, "2": 60, "3": 30, "4": 600, "5": None, "6": 60, "7": None, "8": None,
    "9": 30, "10": 300, "11": None, "12": 10, "13": 300, "gk3": None,
}


@pytest.mark.parametrize("crit", CRITERIA, ids=[f"criterion_{c.key}" for c in CRITERIA])
def test_criterion(crit):
    row = run_criterion(crit)
    limit = LIMITS[crit.key]
    within = limit is None or row.seconds < limit
    verdict = "PASS" if row.passed and within else "FAIL"
    budget = f" (limit {limit}s)" if limit else ""
    print(f"\n{verdict} criterion {crit.key}{'' if crit.gating else ' [extended]'}: "
          f"{crit.statement} | {row.detail} | {row.seconds:.2f}s{budget}")
    assert row.passed, row.detail
    assert within, f"took {row.seconds:.1f}s, limit {limit}s"
