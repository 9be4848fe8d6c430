from collections import Counter

import pytest

from smallcover.errors import InvalidArgumentError
from smallcover.prism import BOTTOM, TOP, build_prism, facet_adjacency, side


@pytest.mark.parametrize("m, nf, nv", [(3, 5, 6), (4, 6, 8), (10, 12, 20)])
def test_sizes(m, nf, nv):
    cx = build_prism(m)
    assert len(cx.facets) == nf
    assert len(cx.vertices) == nv


@pytest.mark.parametrize("m", [0, 1, -3])
def test_rejects_small(m):
    with pytest.raises(InvalidArgumentError):
        build_prism(m)


def test_facet_order():
    cx = build_prism(4)
    assert cx.facets[:3] == (TOP, BOTTOM, side(1))
    assert [str(f) for f in cx.facets] == ["s1", "s2", "a1", "a2", "a3", "a4"]


@pytest.mark.parametrize("m", range(3, 12))
def test_incidence_counts(m):
    cx = build_prism(m)
    inc = Counter(f for v in cx.vertices for f in v.facets)
    assert sum(inc.values()) == 6 * m
    assert inc[TOP] == inc[BOTTOM] == m
    assert all(inc[side(i)] == 4 for i in range(1, m + 1))
    assert len(set(v.facets for v in cx.vertices)) == 2 * m
    assert all(len(v.facets) == 3 for v in cx.vertices)


def test_digon_prism_repeats_triples():
    cx = build_prism(2)
    assert len(cx.vertices) == 4
    assert len(cx.triple_set) == 2


def test_adjacency_examples():
    assert frozenset((side(1), side(2))) in facet_adjacency(build_prism(3))
    assert frozenset((side(1), side(3))) not in facet_adjacency(build_prism(5))
    for m in (2, 3, 4, 7):
        assert frozenset((TOP, BOTTOM)) not in facet_adjacency(build_prism(m))


@pytest.mark.parametrize("m", range(3, 10))
def test_sides_form_a_cycle(m):
    adj = facet_adjacency(build_prism(m))
    sides = [side(i) for i in range(1, m + 1)]
    for f in sides:
        nbrs = [g for g in sides if frozenset((f, g)) in adj]
        assert len(nbrs) == 2
    # walk the cycle
    seen, cur, prev = [sides[0]], sides[0], None
    while True:
        nxt = next(g for g in sides if g != prev and g != cur and frozenset((cur, g)) in adj)
        if nxt == sides[0]:
            break
        seen.append(nxt)
        prev, cur = cur, nxt
    assert len(seen) == m
