"""Exact formula path: the sequences a, b, c, rho1, rho2, Euler's totient,
nu(m), |Lambda(P3(m))| and the class count E(m).

Everything is integer arithmetic; any division that must be exact is checked.
"""

from __future__ import annotations

from functools import lru_cache
from math import gcd

from .errors import ConsistencyError, InvalidArgumentError
from .gf2 import gl_order

__all__ = [
    "seq", "a_closed", "c_alt", "euler_phi", "divisors", "rho", "lambda_count_formula",
    "nu_formula", "e_formula", "e_cube_crosscheck", "fixed_count_formula",
]

GL3 = gl_order(3)  # 168

_BASE = {
    "a": (1, 2),
    "b": (1, 1),
    "c": (1, 1, 3, 7, 17),
}
_COEF = {
    "a": (2, 8),
    "b": (1, 4),
    "c": (2, 4, -6, -3, 4),
}


@lru_cache(maxsize=None)
def _table(name: str, j: int) -> tuple:
    base, coef = _BASE[name], _COEF[name]
    vals = list(base)
    while len(vals) < j:
        vals.append(sum(k * vals[-1 - i] for i, k in enumerate(coef)))
    return tuple(vals)


def seq(name: str, j: int) -> int:
    """a(j), b(j) or c(j) from their linear recurrences (1-based)."""
    if name not in _BASE:
        raise InvalidArgumentError(f"unknown sequence {name!r}; expected 'a', 'b' or 'c'")
    if not isinstance(j, int) or j < 1:
        raise InvalidArgumentError(f"sequence index must be >= 1, got {j!r}")
    return _table(name, j)[j - 1]


def a_closed(j: int) -> int:
    """a(j) = (4^j - (-1)^j 2^j) / 6."""
    if j < 1:
        raise InvalidArgumentError(f"j must be >= 1, got {j}")
    num = 4 ** j - (-1) ** j * 2 ** j
    q, r = divmod(num, 6)
    if r:
        raise ConsistencyError(f"closed form for a({j}) is not divisible by 6")
    return q


@lru_cache(maxsize=None)
def _c_alt_table(j: int) -> tuple:
    vals = [1, 1, 3]
    while len(vals) < j:
        i = len(vals) + 1
        vals.append(2 * vals[-1] + 3 * vals[-2] - 4 * vals[-3] + 2 * (-1) ** i)
    return tuple(vals)


def c_alt(j: int) -> int:
    """c(j) via c(j) = 2c(j-1) + 3c(j-2) - 4c(j-3) + 2(-1)^j, seeded with c(1..3)."""
    if not isinstance(j, int) or j < 4:
        raise InvalidArgumentError(f"alternate recurrence for c needs j >= 4, got {j!r}")
    return _c_alt_table(j)[j - 1]


def _factorize(n: int) -> dict:
    out = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def euler_phi(n: int) -> int:
    if not isinstance(n, int) or n < 1:
        raise InvalidArgumentError(f"totient needs n >= 1, got {n!r}")
    phi = 1
    for p, e in _factorize(n).items():
        phi *= p ** e - p ** (e - 1)
    return phi


def divisors(n: int) -> list:
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


@lru_cache(maxsize=None)
def _rho1(m: int) -> int:
    if m % 2:
        return 0
    if m == 0:
        return 5
    if m == 2:
        return 12
    return _rho1(m - 2) + 4 * _rho1(m - 4)


def rho(which: int, m: int) -> int:
    if m < 0:
        raise InvalidArgumentError(f"rho needs m >= 0, got {m}")
    if which == 1:
        # iterate upward so deep arguments do not hit the recursion limit
        for k in range(0, m + 1, 2):
            _rho1(k)
        return _rho1(m)
    if which == 2:
        return 0 if m % 2 else 2 ** m
    raise InvalidArgumentError(f"rho index must be 1 or 2, got {which}")


def lambda_count_formula(m: int) -> int:
    """|Lambda(P3(m))| = 168 (a(m-1) + 2 b(m-1) + c(m-1))."""
    if m < 2:
        raise InvalidArgumentError(f"m must be >= 2, got {m}")
    j = m - 1
    return GL3 * (seq("a", j) + 2 * seq("b", j) + seq("c", j))


def nu_formula(m: int) -> int:
    """Colorings whose top and bottom share a color: 168 a(m-1)."""
    if m < 2:
        raise InvalidArgumentError(f"m must be >= 2, got {m}")
    return GL3 * seq("a", m - 1)


def _exact_div(num: int, den: int, what: str) -> int:
    q, r = divmod(num, den)
    if r:
        raise ConsistencyError(f"{what}: {num} is not divisible by {den}")
    return q


def _dihedral_sum(m: int) -> int:
    total = sum(euler_phi(m // k) * (lambda_count_formula(k) + nu_formula(k))
                for k in divisors(m) if k > 1)
    return total + 21 * m * rho(1, m) + 42 * m * rho(2, m)


def e_formula(m: int) -> int:
    """Number of equivalence classes of colorings of P3(m) (m >= 3)."""
    if not isinstance(m, int) or m < 3:
        raise InvalidArgumentError(f"class count is defined for m >= 3, got {m!r}")
    if m == 4:
        return 259
    return _exact_div(_dihedral_sum(m), 4 * m, f"E({m})")


def e_cube_crosscheck() -> int:
    """E(4) from the dihedral fixed counts over |Aut(cube)| = 48; the other 32
    cube automorphisms move a cap onto a side and fix nothing."""
    return _exact_div(_dihedral_sum(4), 48, "E(4)")


def fixed_count_formula(m: int, u: int, v: int, w: int) -> int:
    """|Lambda_g| for g = x^u y^v z^w from the case analysis (m >= 3)."""
    if m < 3:
        raise InvalidArgumentError(f"m must be >= 3, got {m}")
    u %= m
    if v == 0:
        k = gcd(u, m)  # gcd(0, m) = m: the identity or z
        if k == 1:
            return 0
        return nu_formula(k) if w else lambda_count_formula(k)
    if m % 2 or u % 2 == 0:
        return 0
    if w:
        return 42 * rho(2, m)
    return 42 * rho(1, m) + 42 * rho(2, m)
