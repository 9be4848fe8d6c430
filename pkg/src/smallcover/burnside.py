"""Orbit counting and canonical orbit representatives for Aut acting on colorings.

This is the brute-force ground truth for the class count: fixed colorings are
enumerated per group element, and representatives are extracted by
materialising every coloring and taking the lexicographic minimum of its orbit.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .coloring import Coloring, _check_budget, all_colorings, count_fixed_colorings
from .errors import ConsistencyError, ResourceLimitError
from .prism import build_prism
from .symmetry import full_group

__all__ = ["OrbitSummary", "orbit_count_bruteforce", "orbit_representatives", "orbit_partition",
           "REPRESENTATIVE_BUDGET"]

REPRESENTATIVE_BUDGET = 8


@dataclass
class OrbitSummary:
    m: int
    group_order: int
    fixed_counts: dict
    orbit_count: int
    representatives: Optional[list] = field(default=None)


def orbit_count_bruteforce(m: int, *, budget: Optional[int] = None, threads: int = 1,
                           with_representatives: bool = False) -> OrbitSummary:
    _check_budget(m, budget)
    cx = build_prism(m)
    group = full_group(m)
    fixed = {g.label: count_fixed_colorings(cx, g, threads=threads) for g in group}
    total = sum(fixed.values())
    orbits, rem = divmod(total, len(group))
    if rem:
        raise ConsistencyError(
            f"Burnside average for m={m} is not integral: {total} / {len(group)}")
    reps = orbit_representatives(m) if with_representatives else None
    if reps is not None and len(reps) != orbits:
        raise ConsistencyError(f"{len(reps)} representatives but {orbits} orbits for m={m}")
    return OrbitSummary(m, len(group), fixed, orbits, reps)


def _keys(rows: np.ndarray) -> np.ndarray:
    # base-8 digits, facet s1 most significant: integer order == lexicographic order
    weights = 8 ** np.arange(rows.shape[1] - 1, -1, -1, dtype=np.uint64)
    return rows.astype(np.uint64) @ weights


def orbit_partition(m: int, *, limit: int = REPRESENTATIVE_BUDGET):
    """(representatives, orbit sizes), representatives sorted lexicographically."""
    if m > limit:
        raise ResourceLimitError(
            f"materialising all colorings of P3({m}) exceeds the bound m <= {limit}", limit)
    cx = build_prism(m)
    rows = all_colorings(cx)
    canon = None
    for g in full_group(m):
        # row[g.images] is lambda o g
        k = _keys(rows[:, list(g.images)])
        canon = k if canon is None else np.minimum(canon, k)
    uniq, sizes = np.unique(canon, return_counts=True)
    width = m + 2
    reps = []
    for key in uniq.tolist():
        digits = []
        for _ in range(width):
            key, d = divmod(key, 8)
            digits.append(d)
        reps.append(Coloring(tuple(reversed(digits))))
    return reps, [int(s) for s in sizes]


def orbit_representatives(m: int, *, limit: int = REPRESENTATIVE_BUDGET) -> list:
    """Lexicographically minimal coloring of every orbit, sorted."""
    return orbit_partition(m, limit=limit)[0]
