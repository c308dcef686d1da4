from itertools import combinations

import pytest
from hypothesis import given, strategies as st

from shiftchain_lab.core import (
    Comparison,
    OrderedHypergraph,
    ShiftChain,
    compare,
    edge_bound,
    restrict,
    union,
    validate_shift_chain,
)
from shiftchain_lab.errors import (
    BoundViolation,
    DuplicateEdge,
    IncomparablePair,
    MalformedEdge,
    ShiftChainError,
    UniformityError,
)

from conftest import dominates, increasing_tuples, pairwise_comparable, random_chains


@pytest.mark.parametrize(
    "a, b, expected",
    [
        ((1, 2, 3), (1, 2, 3), Comparison.EQUAL),
        ((1, 2, 3), (2, 3, 5), Comparison.A_BEFORE_B),
        ((2, 3, 5), (1, 2, 3), Comparison.B_BEFORE_A),
        ((1, 4), (2, 3), Comparison.INCOMPARABLE),
    ],
)
def test_compare_examples(a, b, expected):
    assert compare(a, b) is expected


def test_compare_length_mismatch():
    with pytest.raises(UniformityError):
        compare((1, 2), (1, 2, 3))


@given(st.data())
def test_compare_matches_dominance_oracle(data):
    n = data.draw(st.integers(2, 10))
    m = data.draw(st.integers(1, n))
    a = data.draw(increasing_tuples(m, n))
    b = data.draw(increasing_tuples(m, n))
    r = compare(a, b)
    assert (r is Comparison.EQUAL) == (a == b)
    assert (r is Comparison.A_BEFORE_B) == (dominates(a, b) and a != b)
    assert (r is Comparison.INCOMPARABLE) == (not dominates(a, b) and not dominates(b, a))


@given(st.data())
def test_compare_is_partial_order(data):
    n = data.draw(st.integers(3, 9))
    m = data.draw(st.integers(1, n))
    a, b, c = (data.draw(increasing_tuples(m, n)) for _ in range(3))
    assert compare(a, a) is Comparison.EQUAL
    if a != b:
        assert not (compare(a, b) is Comparison.A_BEFORE_B and compare(b, a) is Comparison.A_BEFORE_B)
        assert compare(a, b) is not Comparison.EQUAL
    before = {Comparison.A_BEFORE_B, Comparison.EQUAL}
    if compare(a, b) in before and compare(b, c) in before:
        assert compare(a, c) in before


def test_validate_sorts_into_chain_order():
    h = validate_shift_chain(2, 3, [(2, 3), (1, 2)])
    assert h.edges == ((1, 2), (2, 3))


def test_validate_rejects_incomparable():
    with pytest.raises(IncomparablePair) as exc:
        validate_shift_chain(2, 4, [(1, 4), (2, 3)])
    assert (exc.value.i, exc.value.j) == (0, 1)


@pytest.mark.parametrize(
    "edges, error",
    [
        ([(2, 1)], MalformedEdge),
        ([(1, 5)], MalformedEdge),
        ([(1, 2, 3)], MalformedEdge),
        ([(0, 1)], MalformedEdge),
        ([(1, 2), (1, 2)], DuplicateEdge),
    ],
)
def test_validate_errors(edges, error):
    with pytest.raises(error):
        validate_shift_chain(2, 4, edges)


def test_bound_violation_reported_before_pairs():
    # all 6 pairs of [4]; a chain there has at most 2*2+1 = 5 edges
    with pytest.raises(BoundViolation) as exc:
        validate_shift_chain(2, 4, list(combinations(range(1, 5), 2)))
    assert (exc.value.count, exc.value.bound) == (6, 5)


def test_h3_validates_and_all_pairs_comparable(h3):
    assert pairwise_comparable(h3.edges)
    assert validate_shift_chain(3, 8, reversed(h3.edges)) == h3


def test_shift_chain_constructor_requires_chain_order():
    with pytest.raises(IncomparablePair):
        ShiftChain(2, 3, ((2, 3), (1, 2)))


def test_bad_shape():
    with pytest.raises(ShiftChainError):
        OrderedHypergraph(3, 2)
    with pytest.raises(ShiftChainError):
        OrderedHypergraph(0, 2)


@pytest.mark.parametrize(
    "m, n, edges, expected",
    [
        (3, 8, None, (6, 16, True)),
        (2, 3, [(1, 2), (1, 3), (2, 3)], (3, 3, True)),
        (4, 4, [(1, 2, 3, 4)], (1, 1, True)),
    ],
)
def test_edge_bound(h3, m, n, edges, expected):
    h = h3 if edges is None else validate_shift_chain(m, n, edges)
    assert edge_bound(h) == expected


def test_restrict_h3_first_two(h3):
    r = restrict(h3, (1, 2))
    assert (r.m, r.n) == (2, 8)
    assert r.edges == ((1, 2), (2, 3), (4, 5), (6, 7))


def test_restrict_identity_and_single(h3):
    assert restrict(h3, (1, 2, 3)) == h3
    single = validate_shift_chain(3, 7, [(2, 5, 7)])
    assert restrict(single, (1, 3)).edges == ((2, 7),)


@pytest.mark.parametrize("coords", [(), (0,), (4,), (2, 1), (1, 1)])
def test_restrict_bad_coords(h3, coords):
    with pytest.raises(ShiftChainError):
        restrict(h3, coords)


@given(random_chains(max_n=9))
def test_restrict_closure(h):
    for size in range(1, h.m + 1):
        for coords in combinations(range(1, h.m + 1), size):
            r = restrict(h, coords)
            assert validate_shift_chain(r.m, r.n, r.edges) == r
            assert set(r.edges) == {tuple(e[c - 1] for c in coords) for e in h.edges}


def test_union_examples(h3):
    assert union(h3, h3).edge_set() == h3.edge_set()
    a = OrderedHypergraph(2, 3, ((1, 2),))
    b = OrderedHypergraph(2, 3, ((2, 3),))
    assert union(a, b).edges == ((1, 2), (2, 3))
    c = OrderedHypergraph(2, 4, ((1, 4),))
    d = OrderedHypergraph(2, 4, ((2, 3),))
    u = union(c, d)
    assert isinstance(u, OrderedHypergraph) and not isinstance(u, ShiftChain)
    assert not u.is_shift_chain()
    with pytest.raises(IncomparablePair):
        validate_shift_chain(u.m, u.n, u.edges)


def test_union_mismatch():
    with pytest.raises(UniformityError):
        union(OrderedHypergraph(2, 4), OrderedHypergraph(3, 4))
    with pytest.raises(ShiftChainError):
        union(OrderedHypergraph(2, 4), OrderedHypergraph(2, 5))


hypergraphs = st.lists(increasing_tuples(2, 6), max_size=8, unique=True).map(
    lambda es: OrderedHypergraph(2, 6, tuple(es))
)


@given(hypergraphs, hypergraphs, hypergraphs)
def test_union_laws(a, b, c):
    empty = OrderedHypergraph(2, 6)
    assert union(a, empty).edge_set() == a.edge_set()
    assert union(a, b) == union(b, a)
    assert union(union(a, b), c) == union(a, union(b, c))
