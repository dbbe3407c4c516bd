import pytest

from orbitcode import OrbitCode
from orbitcode.exceptions import CodeSpecError
from orbitcode.simulate import error_supports, simulate


@pytest.fixture(scope="module")
def code():
    return OrbitCode(p=3, m=2, t=4).fit()


def test_deterministic(code):
    a = simulate(code, 50, 2, seed=3)
    b = simulate(code, 50, 2, seed=3)
    assert a.to_text() == b.to_text()
    assert a.successes == 50 and a.failures == a.miscorrections == 0
    assert simulate(code, 50, 2, seed=4).to_text() != a.to_text()


def test_transcript_shape(code):
    s = simulate(code, 3, 2, seed=0)
    lines = s.to_text().splitlines()
    assert len(lines) == 4
    assert lines[0].startswith("trial=0 msg=") and lines[0].endswith("status=ok")
    assert lines[-1] == "trials=3 successes=3 failures=0 miscorrections=0"


def test_zero_trials(code):
    s = simulate(code, 0, 2, seed=0)
    assert s.trials == 0 and s.to_text() == "trials=0 successes=0 failures=0 miscorrections=0\n"


def test_degree_limits(code):
    with pytest.raises(CodeSpecError):
        simulate(code, 10, 3, seed=0)
    with pytest.raises(CodeSpecError):
        simulate(code, 10, 0, seed=0)
    with pytest.raises(CodeSpecError):
        simulate(code, -1, 1, seed=0)


def test_stress_mode_accounts_every_trial(code):
    s = simulate(code, 200, 4, seed=1, stress=True)
    assert s.successes + s.failures + s.miscorrections == s.trials == 200
    assert s.failures + s.miscorrections > 0


def test_error_supports():
    # (3, 2) sizes 1, 2, 2, 1, 2
    sups = error_supports([1, 2, 2, 1, 2], 2)
    assert sorted(sups) == [(0,), (0, 3), (1,), (2,), (3,), (4,)]
    assert error_supports([5, 5], 4) == []


def test_large_code():
    code = OrbitCode(p=2, m=5, t=10).fit()
    s = simulate(code, 100, 5, seed=7)
    assert s.successes == 100
