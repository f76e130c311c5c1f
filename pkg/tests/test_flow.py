from itertools import product

from hypothesis import given, settings
from hypothesis import strategies as st

from stmatch.flow import FlowNetwork


@st.composite
def networks(draw):
    n = draw(st.integers(2, 6))
    arcs = draw(st.lists(
        st.tuples(st.integers(0, n - 1), st.integers(0, n - 1), st.integers(0, 7)),
        max_size=14,
    ))
    return n, [(a, b, c) for a, b, c in arcs if a != b]


def min_cut_by_enumeration(n, arcs):
    best = None
    for bits in product((0, 1), repeat=n - 2):
        side = (1, 0) + bits  # source in, sink out
        cut = sum(c for a, b, c in arcs if side[a] and not side[b])
        best = cut if best is None else min(best, cut)
    return best


@settings(max_examples=300)
@given(networks())
def test_max_flow_equals_min_cut(case):
    n, arcs = case
    net = FlowNetwork(n)
    ids = [net.add_arc(a, b, c) for a, b, c in arcs]
    value = net.max_flow(0, 1)
    assert value == min_cut_by_enumeration(n, arcs)
    # flows respect capacities and conservation
    excess = [0] * n
    for i, (a, b, c) in zip(ids, arcs):
        f = net.flow_on(i)
        assert 0 <= f <= c
        excess[a] -= f
        excess[b] += f
    assert excess[1] == value
    assert all(x == 0 for x in excess[2:])
    # the residual source side is a minimum cut
    side = net.reachable(0)
    assert side[0] and not side[1]
    assert sum(c for a, b, c in arcs if side[a] and not side[b]) == value


def test_parallel_paths():
    net = FlowNetwork(4)
    net.add_arc(0, 2, 3)
    net.add_arc(0, 3, 2)
    net.add_arc(2, 1, 2)
    net.add_arc(3, 1, 5)
    net.add_arc(2, 3, 4)
    assert net.max_flow(0, 1) == 5
