"""Small-dimension linear algebra over GF(2), vectors packed into int bitmasks.

Bit ``k`` of a mask is the coefficient of the basis vector ``e_{k+1}``.  For
``n = 3`` the seven nonzero vectors are the integers 1..7, which double as the
color alphabet everywhere else in the package:

    e1=1, e2=2, e1+e2=3, e3=4, e1+e3=5, e2+e3=6, e1+e2+e3=7
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Union

from .errors import InvalidArgumentError

__all__ = ["Gf2Vector", "basis", "is_independent", "rank", "gl_order", "COLORS"]

#: canonical color order for n = 3
COLORS = tuple(range(1, 8))


@dataclass(frozen=True, order=True)
class Gf2Vector:
    bits: int
    n: int = 3

    def __post_init__(self):
        if self.n < 1:
            raise InvalidArgumentError(f"dimension must be positive, got {self.n}")
        if not 0 <= self.bits < (1 << self.n):
            raise InvalidArgumentError(f"bits {self.bits} out of range for dimension {self.n}")

    def __add__(self, other: "Gf2Vector") -> "Gf2Vector":
        if other.n != self.n:
            raise InvalidArgumentError("dimension mismatch")
        return Gf2Vector(self.bits ^ other.bits, self.n)

    def __int__(self) -> int:
        return self.bits

    def is_zero(self) -> bool:
        return self.bits == 0

    def __str__(self) -> str:
        if not self.bits:
            return "0"
        return "+".join(f"e{k + 1}" for k in range(self.n) if self.bits >> k & 1)


def basis(k: int, n: int = 3) -> Gf2Vector:
    """The standard basis vector e_k (1-based)."""
    if not 1 <= k <= n:
        raise InvalidArgumentError(f"basis index {k} out of range for dimension {n}")
    return Gf2Vector(1 << (k - 1), n)


VectorLike = Union[Gf2Vector, int]


def _masks(vectors: Iterable[VectorLike], n: int) -> list[int]:
    out = []
    for v in vectors:
        if isinstance(v, Gf2Vector):
            if v.n != n:
                raise InvalidArgumentError(f"vector of dimension {v.n} given where {n} expected")
            out.append(v.bits)
        else:
            bits = int(v)
            if not 0 <= bits < (1 << n):
                raise InvalidArgumentError(f"bitmask {bits} out of range for dimension {n}")
            out.append(bits)
    return out


def rank(vectors: Iterable[VectorLike], n: int = 3) -> int:
    """Rank of the span, by elimination on a copy of the input."""
    rows = _masks(vectors, n)
    r = 0
    for bit in range(n):
        pivot = next((i for i in range(r, len(rows)) if rows[i] >> bit & 1), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        for i in range(len(rows)):
            if i != r and rows[i] >> bit & 1:
                rows[i] ^= rows[r]
        r += 1
    return r


def is_independent(vectors: Iterable[VectorLike], n: int = 3) -> bool:
    """True iff the vectors are linearly independent in GF(2)^n.

    Plain ints are read as bitmasks of dimension ``n``; ``Gf2Vector`` inputs
    must carry dimension ``n``.  Lists longer than ``n`` are always dependent.
    """
    vectors = list(vectors)
    return rank(vectors, n) == len(vectors)


def gl_order(n: int) -> int:
    """|GL(n, GF(2))| = prod_{k=1..n} (2^n - 2^(k-1)); 1 for n = 0 (empty product)."""
    if n < 0:
        raise InvalidArgumentError(f"dimension must be non-negative, got {n}")
    total = 1
    for k in range(1, n + 1):
        total *= (1 << n) - (1 << (k - 1))
    return total
