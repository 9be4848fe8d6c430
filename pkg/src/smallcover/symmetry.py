"""Automorphisms of the prism face poset, acting on facet positions.

A :class:`FacetPermutation` stores ``images[i]`` = position of g(F_i) in the
facet order s1, s2, a1..am.  The structural generators are

* x: a_i -> a_{i+1} (cyclically), caps fixed
* y: a_i -> a_{m+1-i}, caps fixed
* z: s1 <-> s2, sides fixed

and ``element(m, u, v, w)`` is the composite map x^u o y^v o z^w.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Optional

from .coloring import Coloring
from .errors import InvalidArgumentError, ResourceLimitError
from .prism import PrismComplex, build_prism

__all__ = [
    "FacetPermutation", "identity", "element", "compose", "inverse", "full_group",
    "poset_automorphisms_bruteforce", "act_on_coloring", "is_automorphism",
    "BRUTEFORCE_FACET_BOUND",
]

BRUTEFORCE_FACET_BOUND = 10


@dataclass(frozen=True)
class FacetPermutation:
    m: int
    images: tuple
    word: Optional[tuple] = field(default=None, compare=False)

    def __post_init__(self):
        if sorted(self.images) != list(range(self.m + 2)):
            raise InvalidArgumentError("images do not form a permutation of the m+2 facets")

    def __call__(self, i: int) -> int:
        return self.images[i]

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))

    @property
    def label(self) -> str:
        """Normalized word ``x^u y^v z^w`` when known, else the image sequence."""
        if self.word is not None:
            u, v, w = self.word
            return f"x^{u} y^{v} z^{w}"
        return digest(self)


def digest(g: FacetPermutation) -> str:
    return "[" + ",".join(str(i) for i in g.images) + "]"


def identity(m: int) -> FacetPermutation:
    return FacetPermutation(m, tuple(range(m + 2)), (0, 0, 0))


def element(m: int, u: int, v: int = 0, w: int = 0) -> FacetPermutation:
    if m < 2:
        raise InvalidArgumentError(f"m must be >= 2, got {m}")
    if v not in (0, 1) or w not in (0, 1):
        raise InvalidArgumentError("v and w must be 0 or 1")
    u %= m
    images = [0] * (m + 2)
    images[0], images[1] = (1, 0) if w else (0, 1)
    for i in range(1, m + 1):
        j = m + 1 - i if v else i       # y^v
        j = (j - 1 + u) % m + 1          # then x^u
        images[i + 1] = j + 1
    return FacetPermutation(m, tuple(images), (u, v, w))


def _word_product(m, a, b):
    # x^u1 y^v1 z^w1 . x^u2 y^v2 z^w2 = x^(u1 + (-1)^v1 u2) y^(v1+v2) z^(w1+w2); z is central
    u1, v1, w1 = a
    u2, v2, w2 = b
    return ((u1 + (-u2 if v1 else u2)) % m, v1 ^ v2, w1 ^ w2)


def compose(g: FacetPermutation, h: FacetPermutation) -> FacetPermutation:
    """The map g o h (apply h first)."""
    if g.m != h.m:
        raise InvalidArgumentError(f"cannot compose permutations of P3({g.m}) and P3({h.m})")
    images = tuple(g.images[j] for j in h.images)
    word = None
    if g.word is not None and h.word is not None:
        word = _word_product(g.m, g.word, h.word)
    return FacetPermutation(g.m, images, word)


def inverse(g: FacetPermutation) -> FacetPermutation:
    inv = [0] * len(g.images)
    for i, j in enumerate(g.images):
        inv[j] = i
    word = None
    if g.word is not None:
        u, v, w = g.word
        word = (u if v else (-u) % g.m, v, w)
    return FacetPermutation(g.m, tuple(inv), word)


def is_automorphism(complex: PrismComplex, g: FacetPermutation) -> bool:
    if len(g.images) != complex.n_facets:
        return False
    ts = complex.triple_set
    return all(frozenset(g.images[i] for i in t) in ts for t in ts)


def poset_automorphisms_bruteforce(complex: PrismComplex,
                                   max_facets: int = BRUTEFORCE_FACET_BOUND) -> list:
    """All facet bijections mapping the vertex-triple family onto itself.

    Exhaustive search over bijections, assigning images facet by facet and
    discarding partial maps that break adjacency (a necessary condition).
    Sorted by image sequence.
    """
    n = complex.n_facets
    if n > max_facets:
        raise ResourceLimitError(
            f"automorphism search over {n} facets exceeds the bound of {max_facets}", max_facets)
    adj = [[False] * n for _ in range(n)]
    for t in complex.triples:
        for a, b in itertools.permutations(t, 2):
            adj[a][b] = True
    ts = complex.triple_set
    found = []
    img = [-1] * n
    used = [False] * n

    def rec(i):
        if i == n:
            if all(frozenset(img[k] for k in t) in ts for t in ts):
                found.append(tuple(img))
            return
        for c in range(n):
            if used[c]:
                continue
            if any(adj[i][k] != adj[c][img[k]] for k in range(i)):
                continue
            img[i] = c
            used[c] = True
            rec(i + 1)
            used[c] = False
        img[i] = -1

    rec(0)
    words = {}
    if complex.m >= 3:
        words = {element(complex.m, u, v, w).images: (u, v, w)
                 for u in range(complex.m) for v in (0, 1) for w in (0, 1)}
    return [FacetPermutation(complex.m, p, words.get(p)) for p in sorted(found)]


def full_group(m: int) -> list:
    """Aut of the face poset of P3(m): the 4m words x^u y^v z^w for m != 4,
    the 48 cube automorphisms (found by search) for m = 4."""
    if m < 3:
        raise InvalidArgumentError(f"full_group needs m >= 3, got {m}")
    if m == 4:
        return poset_automorphisms_bruteforce(build_prism(4))
    return [element(m, u, v, w) for u in range(m) for v in (0, 1) for w in (0, 1)]


def act_on_coloring(g: FacetPermutation, coloring: Coloring) -> Coloring:
    """lambda o g: the facet F gets the color lambda had on g(F)."""
    if coloring.m != g.m:
        raise InvalidArgumentError("coloring and permutation belong to different prisms")
    cols = coloring.colors
    return Coloring(tuple(cols[j] for j in g.images))
