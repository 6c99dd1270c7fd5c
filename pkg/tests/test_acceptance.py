"""The seventeen acceptance criteria, one test each.

Every test prints a PASS/FAIL line.  Criteria whose exhaustive check needs
more than the resource guard allows report FAIL [resource] and fail here;
they are not skipped.
"""

import pytest

from codensity.acceptance import CRITERIA, run_criterion


@pytest.mark.parametrize("criterion", CRITERIA, ids=lambda fn: fn.__name__)
def test_criterion(criterion, capsys):
    res = run_criterion(criterion)
    with capsys.disabled():
        print("\n" + res.line())
        for p in res.problems[:5]:
            print("      " + p)
    assert res.ok, f"{res.status}: {res.problems[:5]}"


if __name__ == "__main__":
    for fn in CRITERIA:
        print(run_criterion(fn).line(), flush=True)
