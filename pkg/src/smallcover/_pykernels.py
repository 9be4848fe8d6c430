"""Pure-Python backtracking kernels (fallback when the compiled core is absent).

A problem is given as three flat integer sequences:

``domain[v]``
    0 if variable ``v`` ranges over colors 1..7, else the single fixed color.
``offsets`` / ``pairs``
    CSR layout: for variable ``v``, ``pairs[2k], pairs[2k+1]`` for
    ``offsets[v] <= k < offsets[v+1]`` name the two earlier variables that form
    a vertex triple with ``v``.  Each triple is checked once, when its
    highest-indexed variable is assigned.

Solutions are produced in lexicographic order of the color vector.
"""

import numpy as np


def _compile(domain, offsets, pairs):
    n = len(domain)
    choices = [tuple(range(1, 8)) if d == 0 else (d,) for d in domain]
    checks = [
        tuple((pairs[2 * k], pairs[2 * k + 1]) for k in range(offsets[v], offsets[v + 1]))
        for v in range(n)
    ]
    return n, choices, checks


def _ok(col, c, checks_v):
    for p, q in checks_v:
        a = col[p]
        b = col[q]
        if c == a or c == b or a == b or a ^ b == c:
            return False
    return True


def count(domain, offsets, pairs):
    n, choices, checks = _compile(list(domain), list(offsets), list(pairs))
    if n == 0:
        return 1
    col = [0] * n
    last = n - 1

    def rec(v):
        chk = checks[v]
        if v == last:
            return sum(1 for c in choices[v] if _ok(col, c, chk))
        total = 0
        for c in choices[v]:
            if _ok(col, c, chk):
                col[v] = c
                total += rec(v + 1)
        return total

    return rec(0)


def collect(domain, offsets, pairs):
    n, choices, checks = _compile(list(domain), list(offsets), list(pairs))
    rows = []
    col = [0] * n

    def rec(v):
        if v == n:
            rows.append(tuple(col))
            return
        chk = checks[v]
        for c in choices[v]:
            if _ok(col, c, chk):
                col[v] = c
                rec(v + 1)

    rec(0)
    out = np.array(rows, dtype=np.uint8)
    return out.reshape(len(rows), n)
