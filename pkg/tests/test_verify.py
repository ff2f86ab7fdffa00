import pytest

from polymom.verify import SUITES, run_suite, suite_roundtrip


@pytest.mark.parametrize("name", sorted(set(SUITES) - {"roundtrip"}))
def test_suites_pass(name):
    report = run_suite(name, seed=1)
    assert report.passed, report.summary()
    assert report.cases > 0


def test_roundtrip_small():
    report = suite_roundtrip(seed=7, cases=30)
    assert report.passed, report.summary()


def test_unknown_suite():
    with pytest.raises(KeyError):
        run_suite("nope", 0)


def test_reports_are_reproducible():
    a = run_suite("detfactor", 3)
    b = run_suite("detfactor", 3)
    assert a.summary() == b.summary()
