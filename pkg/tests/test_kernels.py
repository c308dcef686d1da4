"""The compiled and pure-Python kernels must agree exactly."""

import pytest

from shiftchain_lab import kernels
from shiftchain_lab.constructions import construct_theorem1, random_shift_chain

BACKENDS = kernels.available_backends()


def flat(h):
    return [v for e in h.edges for v in e]


def instances():
    out = [construct_theorem1(m)[0] for m in (1, 2, 3)]
    for seed in range(40):
        n = 2 + seed % 8
        m = 1 + seed % min(n, 4)
        out.append(random_shift_chain(n, m, 1 + seed % (m * (n - m) + 1), seed))
    return out


def test_backend_selected():
    assert kernels.BACKEND in BACKENDS
    assert kernels.exhaustive is BACKENDS[kernels.BACKEND].exhaustive


@pytest.mark.parametrize("name", sorted(BACKENDS))
@pytest.mark.parametrize("poly", [False, True])
@pytest.mark.parametrize("k", [1, 2, 3])
def test_backends_agree_with_reference(name, poly, k):
    ref = BACKENDS["python"]
    impl = BACKENDS[name]
    for h in instances():
        args = (h.n, k, h.m, flat(h), poly)
        assert impl.exhaustive(*args) == ref.exhaustive(*args)
        assert impl.backtrack(*args) == ref.backtrack(*args)
        for c in range(1, k + 1):
            assert impl.backtrack(*args, (c,)) == ref.backtrack(*args, (c,))


@pytest.mark.parametrize("name", sorted(BACKENDS))
def test_no_edges(name):
    impl = BACKENDS[name]
    assert impl.exhaustive(3, 2, 2, [], False) == ((1, 1, 1), 1)
    assert impl.backtrack(3, 2, 2, [], True) == ((1, 1, 1), 3)


@pytest.mark.parametrize("name", sorted(BACKENDS))
def test_h3_node_counts(name):
    h = construct_theorem1(3)[0]
    impl = BACKENDS[name]
    assert impl.exhaustive(h.n, 3, 3, flat(h), True) == (None, 6561)
    colors, nodes = impl.backtrack(h.n, 3, 3, flat(h), True)
    assert colors is None and nodes < 6561
