"""Partitions and Littlewood-Richardson coefficients.

Partitions are tuples whose length is the declared length n; trailing zeros
are explicit, so (2, 1) and (2, 1, 0) are different values. Parts may be
negative; coefficients are computed after shifting every part to be >= 0.
"""
from __future__ import annotations

from collections import defaultdict
from functools import lru_cache
from typing import Sequence

from .quiver import DomainError

Partition = tuple[int, ...]


def check_partition(p: Sequence[int], name: str = "partition") -> Partition:
    p = tuple(int(a) for a in p)
    if any(p[i] < p[i + 1] for i in range(len(p) - 1)):
        raise DomainError("weakly_decreasing", f"{name} {list(p)} is not weakly decreasing")
    return p


def pad(p: Sequence[int], n: int) -> Partition:
    p = tuple(p)
    if len(p) > n:
        if any(p[n:]):
            raise DomainError("length", f"{list(p)} has more than {n} nonzero parts")
        return p[:n]
    return p + (0,) * (n - len(p))


def strip_zeros(p: Sequence[int]) -> Partition:
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return tuple(p)


def lr_coefficient(lam: Sequence[int], mu: Sequence[int], nu: Sequence[int]) -> int:
    """c^nu_{lam,mu}, counted as LR skew tableaux of shape nu/lam and content mu."""
    lam = check_partition(lam, "lambda")
    mu = check_partition(mu, "mu")
    nu = check_partition(nu, "nu")
    if not (len(lam) == len(mu) == len(nu)):
        raise DomainError("common_length", "lambda, mu, nu must have a common length")
    if not lam:
        return 1
    a, b = lam[-1], mu[-1]
    lam = tuple(x - a for x in lam)
    mu = tuple(x - b for x in mu)
    nu = tuple(x - a - b for x in nu)
    if nu[-1] < 0:
        return 0
    return _lr(lam, mu, nu)


@lru_cache(maxsize=None)
def _lr(lam: Partition, mu: Partition, nu: Partition) -> int:
    n = len(nu)
    if sum(lam) + sum(mu) != sum(nu) or any(l > v for l, v in zip(lam, nu)):
        return 0
    mu = strip_zeros(mu)
    if not mu:
        return 1
    if len(mu) > n or any(m > v for m, v in zip(mu, nu)):
        return 0
    L = len(mu)

    # Row i holds c[k] copies of k+1 (k < min(i+1, L)). prev[k] is the number of
    # entries <= k in row i-1 shifted by lam[i-1]; used[k] counts k+1 in rows < i.
    @lru_cache(maxsize=None)
    def rows(i: int, used: tuple[int, ...], prev: tuple[int, ...]) -> int:
        if i == n:
            return 1 if used == mu else 0
        width = nu[i] - lam[i]
        top = min(i + 1, L)
        total = 0
        counts = [0] * L

        def fill(k: int, cum: int) -> None:
            nonlocal total
            if k == top:
                if cum != width:
                    return
                new_used = tuple(u + c for u, c in zip(used, counts))
                cum_row = [lam[i]]
                for c in counts:
                    cum_row.append(cum_row[-1] + c)
                total += rows(i + 1, new_used, tuple(cum_row))
                return
            hi = min(mu[k] - used[k], width - cum)
            if k > 0:
                # lattice word: the (k+1)s read so far never outnumber the ks
                hi = min(hi, used[k - 1] - used[k])
            if i > 0:
                # column strictness against row i-1
                hi = min(hi, prev[k] - lam[i] - cum)
            for c in range(hi, -1, -1):
                counts[k] = c
                fill(k + 1, cum + c)
            counts[k] = 0

        fill(0, 0)
        return total

    return rows(0, (0,) * L, ())


def tensor_multiplicities(lam: Sequence[int], mu: Sequence[int], max_len: int) -> dict[Partition, int]:
    """{nu: c^nu_{lam,mu}} over nu with at most ``max_len`` nonzero parts.

    Built by adding the rows of mu as horizontal strips with the lattice
    condition tracked strip by strip. Keys are padded to length ``max_len``.
    """
    lam = strip_zeros(check_partition(lam, "lambda"))
    mu = strip_zeros(check_partition(mu, "mu"))
    if any(x < 0 for x in lam + mu):
        raise DomainError("nonnegative", "tensor_multiplicities needs nonnegative partitions")
    if len(lam) > max_len or len(mu) > max_len:
        return {}
    return dict(_tensor(lam, mu, max_len))


@lru_cache(maxsize=None)
def _tensor(lam: Partition, mu: Partition, max_len: int) -> tuple[tuple[Partition, int], ...]:
    shape0 = pad(lam, max_len)
    # state: (shape, per-row counts of the previous strip's label)
    states: dict[tuple[Partition, Partition], int] = {(shape0, (10**9,) + (0,) * (max_len - 1)): 1}
    first = True
    for m in mu:
        nxt: dict[tuple[Partition, Partition], int] = defaultdict(int)
        for (shape, prev_rows), mult in states.items():
            for new_shape, rows_ in _strips(shape, m, prev_rows, first):
                nxt[(new_shape, rows_)] += mult
        states = nxt
        first = False
    out: dict[Partition, int] = defaultdict(int)
    for (shape, _), mult in states.items():
        out[shape] += mult
    return tuple(sorted(out.items(), reverse=True))


def _strips(shape: Partition, m: int, prev_rows: Partition, first: bool):
    """Horizontal strips of size m on ``shape`` obeying the lattice condition."""
    n = len(shape)
    res = []
    cur = [0] * n

    def go(i: int, left: int, prev_cum: int, cur_cum: int):
        if i == n:
            if left == 0:
                res.append((tuple(shape[j] + cur[j] for j in range(n)), tuple(cur)))
            return
        hi = left if i == 0 else min(left, shape[i - 1] - shape[i])
        if not first:
            # labels k+1 in rows <= i must not outnumber labels k in rows < i
            hi = min(hi, prev_cum - cur_cum)
        for c in range(hi, -1, -1):
            cur[i] = c
            go(i + 1, left - c, prev_cum + prev_rows[i], cur_cum + c)
        cur[i] = 0

    go(0, m, 0, 0)
    return res


def sl_invariant_dim(lam: Sequence[int], mu: Sequence[int], nu: Sequence[int], n: int) -> int:
    """dim (V_lam x V_mu x V_nu)^{SL_n} = c^{nu*}_{lam,mu}, nu* = (m - nu_n, ..., m - nu_1)."""
    if n <= 0:
        raise DomainError("positive_n", "n must be positive")
    lam, mu, nu = (pad(check_partition(p), n) for p in (lam, mu, nu))
    total = sum(lam) + sum(mu) + sum(nu)
    if total % n:
        return 0
    m = total // n
    nu_star = tuple(m - x for x in reversed(nu))
    return lr_coefficient(lam, mu, nu_star)


def lambda_of_subset(subset: Sequence[int], n: int) -> Partition:
    """(i_r - r + 1, ..., i_2 - 1, i_1) for I = {i_1 < ... < i_r} in {1..n}."""
    idx = sorted(int(i) for i in subset)
    if not idx:
        raise DomainError("nonempty", "subset must be nonempty")
    if len(set(idx)) != len(idx) or idx[0] < 1 or idx[-1] > n:
        raise DomainError("subset_range", f"subset {idx} not a subset of 1..{n}")
    r = len(idx)
    return tuple(idx[r - 1 - j] - (r - 1 - j) for j in range(r))


def staircase_partition(x: Sequence[int], y: Sequence[int]) -> Partition:
    """P(x, y): x_{n-1} repeated y_n - y_{n-1} times, ..., x_1 repeated y_2 - y_1, then y_1 zeros."""
    x = [int(a) for a in x]
    y = [int(a) for a in y]
    if len(x) != len(y):
        raise DomainError("length_match", "x and y must have equal length")
    for seq, name in ((x, "x"), (y, "y")):
        if any(a < 0 for a in seq) or any(seq[i] > seq[i + 1] for i in range(len(seq) - 1)):
            raise DomainError("nondecreasing", f"{name} must be nondecreasing and nonnegative")
    n = len(x)
    if n == 0:
        return ()
    parts: list[int] = []
    for i in range(n - 1, 0, -1):
        parts += [x[i - 1]] * (y[i] - y[i - 1])
    parts += [0] * y[0]
    return tuple(parts)


def jumps(p: Sequence[int]) -> int:
    """Number of i in 1..n-1 with p_i != p_{i+1}."""
    return sum(1 for i in range(len(p) - 1) if p[i] != p[i + 1])
