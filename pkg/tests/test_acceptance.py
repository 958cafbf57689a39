"""Acceptance criteria 1-11 at their stated tolerances; one PASS/FAIL line each.

Run directly (``python tests/test_acceptance.py``) for just the summary lines.
"""

from __future__ import annotations

import pytest

from wchrom.checks import CRITERIA


@pytest.mark.parametrize("number", sorted(CRITERIA), ids=lambda k: f"{k:02d}-{CRITERIA[k][0]}")
def test_criterion(number, capsys):
    name, fn = CRITERIA[number]
    result = fn()
    with capsys.disabled():
        print(f"\n[criterion {number:2d}] {result.line()}")
    assert result.passed, result.detail


if __name__ == "__main__":
    for k in sorted(CRITERIA):
        print(f"[criterion {k:2d}] {CRITERIA[k][1]().line()}", flush=True)
