"""The compiled core and the pure-Python fallback must agree exactly."""

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from smallcover import _pykernels, kernels
from smallcover.coloring import _build_problem, orbit_classes
from smallcover.prism import build_prism
from smallcover.symmetry import full_group

compiled = kernels.compiled_backend
needs_compiled = pytest.mark.skipif(compiled is None, reason="compiled core not built")


@needs_compiled
def test_compiled_backend_is_active():
    assert kernels.BACKEND == "cython"


@needs_compiled
@pytest.mark.parametrize("m", range(2, 8))
def test_full_problem_parity(m):
    p = _build_problem(build_prism(m))
    assert compiled.count(p.domain, p.offsets, p.pairs) == _pykernels.count(p.domain, p.offsets, p.pairs)
    a = compiled.collect(p.domain, p.offsets, p.pairs)
    b = _pykernels.collect(p.domain, p.offsets, p.pairs)
    assert np.array_equal(a, b)


@needs_compiled
@pytest.mark.parametrize("m", [3, 4, 6])
def test_orbit_problem_parity(m):
    cx = build_prism(m)
    for g in full_group(m):
        p = _build_problem(cx, orbit_classes(cx, g))
        if p.empty:
            continue
        assert compiled.count(p.domain, p.offsets, p.pairs) == _pykernels.count(p.domain, p.offsets, p.pairs)


@st.composite
def problems(draw):
    n = draw(st.integers(1, 6))
    domain = draw(st.lists(st.sampled_from([0, 0, 0, 1, 2, 3, 4, 5, 6, 7]), min_size=n, max_size=n))
    per = []
    for v in range(n):
        k = draw(st.integers(0, 2)) if v >= 2 else 0
        per.append([tuple(draw(st.lists(st.integers(0, v - 1), min_size=2, max_size=2, unique=True)))
                    for _ in range(k)])
    offsets, pairs = [0], []
    for lst in per:
        for p, q in lst:
            pairs += (p, q)
        offsets.append(len(pairs) // 2)
    return domain, offsets, pairs


@needs_compiled
@settings(max_examples=200, deadline=None)
@given(problems())
def test_random_problem_parity(prob):
    d, o, p = prob
    assert compiled.count(d, o, p) == _pykernels.count(d, o, p)
    assert np.array_equal(compiled.collect(d, o, p), _pykernels.collect(d, o, p))


def test_empty_problem():
    assert _pykernels.count([], [0], []) == 1
    assert kernels.count([], [0], []) == 1
