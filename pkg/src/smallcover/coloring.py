"""Validation, enumeration and counting of (Z2)^3-colorings of prisms.

Every counting operation reduces to one kernel problem: a list of variables
(facets, or facet classes that must share a color), an optional fixed color
per variable, and the vertex triples rewritten over variables.  The kernels
in :mod:`smallcover.kernels` do the backtracking.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, Mapping, Optional

from . import kernels
from .errors import InvalidArgumentError, ResourceLimitError
from .gf2 import Gf2Vector, basis, gl_order, is_independent
from .prism import BOTTOM, TOP, FacetId, PrismComplex, build_prism, side

__all__ = [
    "DEFAULT_BUDGET", "Coloring", "is_valid", "enumerate_colorings", "all_colorings",
    "count_colorings", "count_normalized", "count_fixed_colorings",
    "count_same_top_bottom", "NORMALIZED_BOTTOMS",
]

DEFAULT_BUDGET = 12

E1, E2, E3 = 1, 2, 4
#: admissible bottom colors once s1=e1, a1=e2, a2=e3: e1, e1+e2, e1+e3, e1+e2+e3
NORMALIZED_BOTTOMS = (1, 3, 5, 7)


def _color(value) -> int:
    if isinstance(value, Gf2Vector):
        if value.n != 3:
            raise InvalidArgumentError(f"colors live in dimension 3, got {value.n}")
        value = value.bits
    value = int(value)
    if not 1 <= value <= 7:
        raise InvalidArgumentError(f"color must be a nonzero vector of (Z2)^3 (1..7), got {value}")
    return value


@dataclass(frozen=True, order=True)
class Coloring:
    """A total facet -> color assignment, stored in facet order s1, s2, a1..am."""

    colors: tuple

    @property
    def m(self) -> int:
        return len(self.colors) - 2

    def __getitem__(self, facet: FacetId) -> Gf2Vector:
        return Gf2Vector(self.colors[_facet_pos(facet, self.m)])

    def as_dict(self) -> dict:
        cx = build_prism(self.m)
        return {f: Gf2Vector(c) for f, c in zip(cx.facets, self.colors)}

    @classmethod
    def from_mapping(cls, complex: PrismComplex, mapping: Mapping) -> "Coloring":
        missing = [str(f) for f in complex.facets if f not in mapping]
        if missing:
            raise InvalidArgumentError(f"coloring misses facets {', '.join(missing)}")
        return cls(tuple(_color(mapping[f]) for f in complex.facets))


def _facet_pos(facet: FacetId, m: int) -> int:
    if facet == TOP:
        return 0
    if facet == BOTTOM:
        return 1
    if not 1 <= facet.index <= m:
        raise InvalidArgumentError(f"{facet} is not a facet of P3({m})")
    return facet.index + 1


def is_valid(complex: PrismComplex, coloring) -> bool:
    """True iff every vertex triple receives three independent colors.

    ``coloring`` is a :class:`Coloring` or a mapping FacetId -> color.
    """
    if isinstance(coloring, Coloring):
        if len(coloring.colors) != complex.n_facets:
            raise InvalidArgumentError(
                f"coloring has {len(coloring.colors)} entries, P3({complex.m}) has {complex.n_facets} facets")
        cols = [_color(c) for c in coloring.colors]
    else:
        cols = list(Coloring.from_mapping(complex, coloring).colors)
    return all(is_independent([cols[i] for i in t]) for t in complex.triples)


# -- kernel problems ---------------------------------------------------------

@dataclass(frozen=True)
class _Problem:
    domain: tuple
    offsets: tuple
    pairs: tuple
    var_of: tuple        # facet position -> variable
    empty: bool = False  # some triple repeats a variable: no solutions

    def count(self) -> int:
        if self.empty:
            return 0
        return kernels.count(self.domain, self.offsets, self.pairs)

    def collect(self):
        import numpy as np
        if self.empty:
            return np.zeros((0, len(self.domain)), dtype=np.uint8)
        return kernels.collect(self.domain, self.offsets, self.pairs)

    def with_fixed(self, var: int, color: int) -> "_Problem":
        dom = list(self.domain)
        dom[var] = color
        return _Problem(tuple(dom), self.offsets, self.pairs, self.var_of, self.empty)


def _build_problem(complex: PrismComplex, var_of=None, fixed: Optional[Mapping[int, int]] = None) -> _Problem:
    """``var_of[i]`` is the variable of facet position i (variables numbered by
    first occurrence); ``fixed`` maps facet positions to colors."""
    n_f = complex.n_facets
    if var_of is None:
        var_of = tuple(range(n_f))
    n_v = max(var_of) + 1
    domain = [0] * n_v
    for pos, col in (fixed or {}).items():
        v = var_of[pos]
        if domain[v] and domain[v] != col:
            raise InvalidArgumentError("conflicting fixed colors within one facet class")
        domain[v] = col
    per_var = [[] for _ in range(n_v)]
    seen = set()
    empty = False
    for t in complex.triples:
        vs = tuple(sorted(var_of[i] for i in t))
        if len(set(vs)) < 3:
            empty = True
            continue
        if vs in seen:
            continue
        seen.add(vs)
        per_var[vs[2]].append((vs[0], vs[1]))
    offsets = [0]
    pairs = []
    for lst in per_var:
        for p, q in lst:
            pairs += (p, q)
        offsets.append(len(pairs) // 2)
    return _Problem(tuple(domain), tuple(offsets), tuple(pairs), tuple(var_of), empty)


def _check_budget(m: int, budget: Optional[int]):
    bound = DEFAULT_BUDGET if budget is None else budget
    if m > bound:
        raise ResourceLimitError(f"m={m} exceeds the brute-force budget m <= {bound}", bound)


def _resolve_threads(threads: int) -> int:
    return threads if threads > 0 else (os.cpu_count() or 1)


def _parallel_count(prob: _Problem, threads: int) -> int:
    """Split on the colors of the first free variable; deterministic sum."""
    threads = _resolve_threads(threads)
    free = [v for v, d in enumerate(prob.domain) if d == 0]
    if threads <= 1 or not free or prob.empty:
        return prob.count()
    parts = [prob.with_fixed(free[0], c) for c in range(1, 8)]
    with ThreadPoolExecutor(max_workers=threads) as ex:
        return sum(ex.map(_Problem.count, parts))


def _fixed_positions(complex: PrismComplex, fixed) -> dict:
    out = {}
    for f, c in (fixed or {}).items():
        if f not in complex.position:
            raise InvalidArgumentError(f"{f} is not a facet of P3({complex.m})")
        out[complex.position[f]] = _color(c)
    for t in complex.triples:
        if all(i in out for i in t) and not is_independent([out[i] for i in t]):
            raise InvalidArgumentError("fixed partial assignment already violates a vertex triple")
    return out


# -- public operations -------------------------------------------------------

def enumerate_colorings(complex: PrismComplex, fixed: Optional[Mapping] = None,
                        visitor: Optional[Callable[[Coloring], None]] = None) -> int:
    """Visit every valid extension of ``fixed`` in lexicographic order of
    (s1, s2, a1..am) and color 1..7; return how many were visited.

    Rows are materialised in chunks split on the first two free facets, so
    memory stays bounded at a few percent of the total.
    """
    prob = _build_problem(complex, fixed=_fixed_positions(complex, fixed))
    if visitor is None:
        return prob.count()
    free = [v for v, d in enumerate(prob.domain) if d == 0][:2]
    chunks = [prob]
    for v in free:
        chunks = [p.with_fixed(v, c) for p in chunks for c in range(1, 8)]
    total = 0
    for chunk in chunks:
        for row in chunk.collect():
            visitor(Coloring(tuple(int(c) for c in row)))
            total += 1
    return total


def all_colorings(complex: PrismComplex, fixed: Optional[Mapping] = None):
    """Every valid coloring as an (N, m+2) uint8 array, rows in lexicographic order."""
    return _build_problem(complex, fixed=_fixed_positions(complex, fixed)).collect()


def count_colorings(m: int, *, budget: Optional[int] = None, threads: int = 1) -> int:
    """|Lambda(P3(m))| by full enumeration (no symmetry shortcut)."""
    _check_budget(m, budget)
    return _parallel_count(_build_problem(build_prism(m)), threads)


def count_normalized(m: int, bottom_filter=None, *, budget: Optional[int] = None) -> int:
    """Colorings with s1=e1, a1=e2, a2=e3 (and s2=bottom_filter if given).

    Multiplying by 168 = |GL(3,2)| gives |Lambda(P3(m))|, since {s1, a1, a2}
    meet at a vertex and GL(3,2) acts freely.
    """
    _check_budget(m, budget)
    cx = build_prism(m)
    fixed = {TOP: E1, side(1): E2, side(2): E3}
    if bottom_filter is None:
        return sum(count_normalized(m, b, budget=budget) for b in NORMALIZED_BOTTOMS)
    b = _color(bottom_filter)
    if b not in NORMALIZED_BOTTOMS:
        raise InvalidArgumentError(
            f"bottom color {Gf2Vector(b)} is not admissible; use one of e1, e1+e2, e1+e3, e1+e2+e3")
    fixed[BOTTOM] = b
    return enumerate_colorings(cx, fixed)


def count_colorings_normalized(m: int, *, budget: Optional[int] = None) -> int:
    """168 * count_normalized(m): the free-action shortcut for |Lambda(P3(m))|."""
    return gl_order(3) * count_normalized(m, budget=budget)


def orbit_classes(complex: PrismComplex, g) -> tuple:
    """Facet position -> orbit index under permutation ``g`` (orbits numbered by first facet)."""
    images = g.images
    var_of = [-1] * complex.n_facets
    nxt = 0
    for i in range(complex.n_facets):
        if var_of[i] >= 0:
            continue
        j = i
        while var_of[j] < 0:
            var_of[j] = nxt
            j = images[j]
        nxt += 1
    return tuple(var_of)


def count_fixed_colorings(complex: PrismComplex, g, *, threads: int = 1) -> int:
    """|Lambda_g|: colorings constant on each facet orbit of g, all triples checked."""
    from .symmetry import is_automorphism
    if g.m != complex.m or not is_automorphism(complex, g):
        raise InvalidArgumentError("g is not an automorphism of this prism's face poset")
    return _parallel_count(_build_problem(complex, orbit_classes(complex, g)), threads)


def fixed_coloring_array(complex: PrismComplex, g):
    """Colorings fixed by ``g`` as an (N, m+2) array in facet order (lexicographic)."""
    prob = _build_problem(complex, orbit_classes(complex, g))
    rows = prob.collect()
    return rows[:, list(prob.var_of)]


def count_same_top_bottom(m: int, *, budget: Optional[int] = None, threads: int = 1) -> int:
    """nu(m): valid colorings with lambda(s1) = lambda(s2)."""
    _check_budget(m, budget)
    cx = build_prism(m)
    var_of = (0, 0) + tuple(range(1, m + 1))
    return _parallel_count(_build_problem(cx, var_of), threads)


def normalized_partial() -> dict:
    """The partial assignment s1=e1, a1=e2, a2=e3."""
    return {TOP: basis(1), side(1): basis(2), side(2): basis(3)}
