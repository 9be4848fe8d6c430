"""Combinatorial face data of the m-sided prism.

Facets are kept in the fixed order ``s1, s2, a1, ..., am``; their position in
that order (0..m+1) is the integer handle used by the counting kernels.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property

from .errors import InvalidArgumentError

__all__ = [
    "FacetKind", "FacetId", "TOP", "BOTTOM", "side", "Vertex", "PrismComplex",
    "build_prism", "facet_adjacency",
]


class FacetKind(Enum):
    TOP = "s1"
    BOTTOM = "s2"
    SIDE = "a"


@dataclass(frozen=True)
class FacetId:
    kind: FacetKind
    index: int = 0

    def __post_init__(self):
        if self.kind is FacetKind.SIDE:
            if self.index < 1:
                raise InvalidArgumentError(f"side facet index must be >= 1, got {self.index}")
        elif self.index != 0:
            raise InvalidArgumentError("top/bottom facets carry no index")

    def __str__(self) -> str:
        if self.kind is FacetKind.SIDE:
            return f"a{self.index}"
        return self.kind.value


TOP = FacetId(FacetKind.TOP)
BOTTOM = FacetId(FacetKind.BOTTOM)


def side(i: int) -> FacetId:
    return FacetId(FacetKind.SIDE, i)


@dataclass(frozen=True)
class Vertex:
    """Vertex record: where side facets a_i, a_{i+1} meet top (level 1) or bottom (level 2)."""

    index: int
    level: int
    facets: frozenset


@dataclass(frozen=True)
class PrismComplex:
    m: int
    facets: tuple = field(repr=False)
    vertices: tuple = field(repr=False)

    @cached_property
    def position(self) -> dict:
        """FacetId -> position in the canonical facet order."""
        return {f: i for i, f in enumerate(self.facets)}

    @cached_property
    def triples(self) -> tuple:
        """Vertex triples as sorted position tuples, in vertex-record order (may repeat for m = 2)."""
        pos = self.position
        return tuple(tuple(sorted(pos[f] for f in v.facets)) for v in self.vertices)

    @cached_property
    def triple_set(self) -> frozenset:
        return frozenset(frozenset(t) for t in self.triples)

    @property
    def n_facets(self) -> int:
        return self.m + 2

    def facet_at(self, i: int) -> FacetId:
        return self.facets[i]


def build_prism(m: int) -> PrismComplex:
    """Build P^3(m).  ``m = 2`` gives the formal digon prism, whose two top
    (and two bottom) vertex records share the triple {s_j, a1, a2}."""
    if not isinstance(m, int) or m < 2:
        raise InvalidArgumentError(f"prism needs m >= 2, got {m!r}")
    facets = (TOP, BOTTOM) + tuple(side(i) for i in range(1, m + 1))
    vertices = []
    for level, cap in ((1, TOP), (2, BOTTOM)):
        for i in range(1, m + 1):
            j = i % m + 1
            vertices.append(Vertex(i, level, frozenset((cap, side(i), side(j)))))
    return PrismComplex(m, facets, tuple(vertices))


def facet_adjacency(complex: PrismComplex) -> frozenset:
    """Symmetric adjacency: unordered pairs of FacetIds sharing some vertex."""
    pairs = set()
    for v in complex.vertices:
        fs = sorted(v.facets, key=complex.position.__getitem__)
        for x in range(3):
            for y in range(x + 1, 3):
                pairs.add(frozenset((fs[x], fs[y])))
    return frozenset(pairs)
