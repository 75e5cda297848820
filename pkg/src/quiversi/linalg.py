"""Exact linear algebra over a prime field and over the rationals."""
from __future__ import annotations

from fractions import Fraction
from typing import Sequence

import numpy as np
from sympy import isprime

DEFAULT_PRIME = 2147483647  # 2^31 - 1; entry products stay below 2^62


def check_prime(p: int) -> int:
    from .quiver import DomainError
    if p >= 2**31 or not isprime(p):
        raise DomainError("prime", f"{p} is not a prime below 2^31")
    return p


def rank_mod_p(m: np.ndarray, p: int) -> int:
    a = np.array(m, dtype=np.int64) % p
    rows, cols = a.shape
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        piv = r + nz[0]
        if piv != r:
            a[[r, piv]] = a[[piv, r]]
        inv = pow(int(a[r, c]), -1, p)
        a[r] = (a[r] * inv) % p
        below = a[r + 1:, c].copy()
        mask = below != 0
        if mask.any():
            idx = np.nonzero(mask)[0] + r + 1
            a[idx] = (a[idx] - (below[mask][:, None] * a[r]) % p) % p
        r += 1
    return r


def det_mod_p(m: np.ndarray, p: int) -> int:
    a = np.array(m, dtype=np.int64) % p
    n = a.shape[0]
    if a.shape != (n, n):
        raise ValueError("determinant of a non-square matrix")
    det = 1
    for c in range(n):
        nz = np.nonzero(a[c:, c])[0]
        if nz.size == 0:
            return 0
        piv = c + nz[0]
        if piv != c:
            a[[c, piv]] = a[[piv, c]]
            det = -det
        det = det * int(a[c, c]) % p
        inv = pow(int(a[c, c]), -1, p)
        a[c] = (a[c] * inv) % p
        below = a[c + 1:, c].copy()
        mask = below != 0
        if mask.any():
            idx = np.nonzero(mask)[0] + c + 1
            a[idx] = (a[idx] - (below[mask][:, None] * a[c]) % p) % p
    return det % p


def rational_nullspace(rows: Sequence[Sequence[int]], ncols: int) -> list[list[Fraction]]:
    """Basis of {x : rows . x = 0} over Q, by reduced row echelon form."""
    a = [[Fraction(v) for v in r] for r in rows]
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(a)) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = 1 / a[r][c]
        a[r] = [v * inv for v in a[r]]
        for i in range(len(a)):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == len(a):
            break
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for i, c in enumerate(pivots):
            v[c] = -a[i][f]
        basis.append(v)
    return basis


def rational_rank(rows: Sequence[Sequence[int]], ncols: int) -> int:
    return ncols - len(rational_nullspace(rows, ncols)) if rows else 0
