import pytest

from shiftchain_lab.coloring import Mode, exhaustive_search
from shiftchain_lab.core import validate_shift_chain
from shiftchain_lab.errors import ShiftChainError
from shiftchain_lab.hunt import COLORABLE, NOT_COLORABLE, UNCONFIRMED, hunt


def check_report(report):
    assert sum(report.verdicts.values()) == report.instances_tested
    assert len(report.counterexamples) == report.verdicts[NOT_COLORABLE]
    for cx in report.counterexamples:
        validate_shift_chain(cx.chain.m, cx.chain.n, cx.chain.edges)
        assert not exhaustive_search(cx.chain, 2, Mode.PROPER).found


def test_random_m2():
    report = hunt(2, (3, 8), (1, 10), seed=1, budget=100)
    assert report.instances_tested == 100
    check_report(report)
    # the triangle chain {(1,2),(1,3),(2,3)} is a certified non-2-colorable instance
    assert report.verdicts[NOT_COLORABLE] > 0


def test_deterministic():
    a = hunt(3, (3, 9), (2, 12), seed=7, budget=60).to_dict()
    b = hunt(3, (3, 9), (2, 12), seed=7, budget=60).to_dict()
    assert a == b


def test_enumerate_m3_tiny():
    report = hunt(3, (3, 6), (1, 6), budget=500, strategy="enumerate")
    assert report.instances_tested == 500
    check_report(report)


def test_zero_budget():
    report = hunt(3, (3, 6), (1, 6), budget=0)
    assert report.instances_tested == 0 and report.counterexamples == []
    assert report.to_dict()["verdicts"] == {COLORABLE: 0, NOT_COLORABLE: 0, UNCONFIRMED: 0}


def test_unconfirmed_when_over_cap():
    report = hunt(2, (3, 3), (3, 3), budget=5, exhaustive_cap=4)
    assert report.verdicts[UNCONFIRMED] == 5 and not report.counterexamples


@pytest.mark.parametrize(
    "kwargs",
    [
        dict(m=0, n_range=(3, 5), edges_range=(1, 2)),
        dict(m=2, n_range=(5, 3), edges_range=(1, 2)),
        dict(m=2, n_range=(3, 5), edges_range=(0, 2)),
        dict(m=2, n_range=(3, 5), edges_range=(1, 2), budget=-1),
        dict(m=2, n_range=(3, 5), edges_range=(1, 2), strategy="magic"),
    ],
)
def test_validation(kwargs):
    with pytest.raises(ShiftChainError):
        hunt(**kwargs)
