"""Acceptance criteria, one test each, at the pinned sizes.

Every test prints a single ``[PASS]``/``[FAIL]`` line; the lines are also
collected into an "acceptance criteria" section at the end of the run.  All comparisons are exact over
F_p, so there are no floating tolerances; the pinned trial counts live in
``AcceptanceSizes`` and are asserted here so they cannot drift silently.
"""

import pytest

from fourpoints import acceptance
from fourpoints import linalg as la
from fourpoints.config import AcceptanceSizes, Settings

SETTINGS = Settings(seed=0, prime=la.DEFAULT_PRIME)
SIZES = AcceptanceSizes()

PINNED = dict(mf_parameters=20, theorem_parameters=20, tau_parameters=5,
              decompose_trials=100, max_summands=5, max_total_dim=40,
              euler_pairs=200, basis_changes=50, identify_parameters=10,
              betti_length=6, cosyzygy_steps=3, bpr_window=(-3, 6),
              preprojective_degree=5, tube_length=4)


def test_sizes_are_pinned():
    for key, value in PINNED.items():
        assert getattr(SIZES, key) == value, key


@pytest.mark.parametrize("number", range(1, len(acceptance.CHECKS) + 1))
def test_criterion(number, report_line):
    SETTINGS.apply()
    result = acceptance.CHECKS[number - 1](SETTINGS, SIZES)
    print(result.line())
    report_line(result.line())
    assert result.number == number
    assert result.ok, result.detail
