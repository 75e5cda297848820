"""Generic hom and ext between dimension vectors, Schur roots and the canonical decomposition.

ext is computed by the recursion

    ext(a, b) = max{-<a', b> : a' embeds in a} = max{-<a, b'> : b surjects onto b'}

with a' embeds in a  iff  ext(a', a - a') = 0. Every recursive call has a
smaller total size, so the recursion terminates. Candidate subvectors are
pruned by the rank of the generic structure maps, which every subrepresentation
of a general representation must respect.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import prod
from typing import Iterator

import numpy as np

from .config import CONFIG
from .linalg import DEFAULT_PRIME, check_prime, rank_mod_p
from .quiver import DomainError, Quiver, Vec, euler_form, size, sub

_EXT: dict = {}
_EXT_ZERO: dict = {}
_SCHUR: dict = {}
_CANON: dict = {}


def clear_caches() -> None:
    for c in (_EXT, _EXT_ZERO, _SCHUR, _CANON):
        c.clear()
    _PLANS.clear()


_PLANS: dict = {}


def _plan(q: Quiver, a: Vec):
    key = (q.digest, a)
    plan = _PLANS.get(key)
    if plan is not None:
        return plan
    order = q.topological_order
    pos = {x: i for i, x in enumerate(order)}
    tails = [[] for _ in range(q.n)]
    heads = [[] for _ in range(q.n)]
    for t, h in q.arrows:
        tails[h].append(t)
        heads[t].append(h)
    in_slack = [max(0, sum(a[t] for t in tails[x]) - a[x]) for x in range(q.n)]
    out_slack = [max(0, a[x] - sum(a[h] for h in heads[x])) for x in range(q.n)]
    # vertices whose out-condition becomes checkable right after position i
    closes = [[] for _ in range(q.n)]
    for t in range(q.n):
        if heads[t]:
            closes[max(pos[h] for h in heads[t])].append(t)
    plan = (order, tails, heads, in_slack, out_slack, closes)
    if len(_PLANS) > 200000:
        _PLANS.clear()
    _PLANS[key] = plan
    return plan


def subvectors(q: Quiver, a: Vec, *, total: int | None = None,
               sigma: Vec | None = None, sigma_value: int | None = None) -> Iterator[Vec]:
    """Candidate dimension vectors of subrepresentations of a general a-dimensional one.

    Every g with g embedding in a is produced (0 and a included); the converse
    needs the ext test. Optional filters: exact total size, exact sigma value.
    """
    order, tails, heads, in_slack, out_slack, closes = _plan(q, a)
    n = q.n
    g = [0] * n
    # suffix bounds for pruning
    rem_size = [0] * (n + 1)
    smin = [0] * (n + 1)
    smax = [0] * (n + 1)
    for i in range(n - 1, -1, -1):
        x = order[i]
        rem_size[i] = rem_size[i + 1] + a[x]
        if sigma is not None:
            s = sigma[x] * a[x]
            smin[i] = smin[i + 1] + min(0, s)
            smax[i] = smax[i + 1] + max(0, s)

    def go(i: int, used: int, sval: int):
        if i == n:
            if (total is None or used == total) and (sigma_value is None or sval == sigma_value):
                yield tuple(g)
            return
        if total is not None and (used > total or used + rem_size[i] < total):
            return
        if sigma_value is not None and not (sval + smin[i] <= sigma_value <= sval + smax[i]):
            return
        x = order[i]
        lo = max(0, sum(g[t] for t in tails[x]) - in_slack[x])
        hi = a[x]
        if total is not None:
            hi = min(hi, total - used)
        sx = sigma[x] if sigma is not None else 0
        for v in range(lo, hi + 1):
            g[x] = v
            ok = True
            for t in closes[i]:
                if g[t] > sum(g[h] for h in heads[t]) + out_slack[t]:
                    ok = False
                    break
            if ok:
                yield from go(i + 1, used + v, sval + sx * v)
        g[x] = 0

    yield from go(0, 0, 0)


def _side_cost(a: Vec) -> int:
    return prod(x + 1 for x in a)


def ext_generic(q: Quiver, a: Vec, b: Vec) -> int:
    """ext_Q(a, b) for general representations of dimensions a and b."""
    if not any(a) or not any(b):
        return 0
    key = (q.digest, a, b)
    got = _EXT.get(key)
    if got is not None:
        return got
    e = euler_form(q, a, b)
    best = max(0, -e)
    if _side_cost(a) <= _side_cost(b):
        # -<a', b> over a' embedding in a
        cands = []
        for g in subvectors(q, a):
            val = -euler_form(q, g, b)
            if val > best:
                cands.append((val, g))
        cands.sort(key=lambda t: (-t[0], t[1]))
        for val, g in cands:
            if val <= best:
                break
            if embeds(q, g, a):
                best = val
                break
    else:
        # -<a, b - k> over k embedding in b (b surjects onto b - k)
        cands = []
        for k in subvectors(q, b):
            val = -euler_form(q, a, sub(b, k))
            if val > best:
                cands.append((val, k))
        cands.sort(key=lambda t: (-t[0], t[1]))
        for val, k in cands:
            if val <= best:
                break
            if embeds(q, k, b):
                best = val
                break
    _EXT[key] = best
    _EXT_ZERO[key] = best == 0
    return best


def ext_vanishes(q: Quiver, a: Vec, b: Vec) -> bool:
    """ext(a, b) == 0, stopping at the first witness when it is not."""
    if not any(a) or not any(b):
        return True
    key = (q.digest, a, b)
    got = _EXT_ZERO.get(key)
    if got is not None:
        return got
    if euler_form(q, a, b) < 0:
        _EXT_ZERO[key] = False
        return False
    res = True
    if _side_cost(a) <= _side_cost(b):
        cands = sorted((euler_form(q, g, b), g) for g in subvectors(q, a)
                       if euler_form(q, g, b) < 0)
        for _, g in cands:
            if embeds(q, g, a):
                res = False
                break
    else:
        cands = sorted((euler_form(q, a, sub(b, k)), k) for k in subvectors(q, b)
                       if euler_form(q, a, sub(b, k)) < 0)
        for _, k in cands:
            if embeds(q, k, b):
                res = False
                break
    _EXT_ZERO[key] = res
    return res


def hom_generic(q: Quiver, a: Vec, b: Vec) -> int:
    return euler_form(q, a, b) + ext_generic(q, a, b)


def embeds(q: Quiver, a: Vec, b: Vec) -> bool:
    """a embeds in b: a general b-dimensional representation has an a-dimensional subrepresentation."""
    if any(x > y for x, y in zip(a, b)):
        return False
    return ext_vanishes(q, a, sub(b, a))


def surjects(q: Quiver, b: Vec, b2: Vec) -> bool:
    """b surjects onto b2."""
    if any(x > y for x, y in zip(b2, b)):
        return False
    return ext_vanishes(q, sub(b, b2), b2)


def perpendicular(q: Quiver, a: Vec, b: Vec) -> bool:
    """hom(a, b) = ext(a, b) = 0."""
    return euler_form(q, a, b) == 0 and ext_vanishes(q, a, b)


@dataclass(frozen=True)
class RootClass:
    tag: str
    self_pairing: int


def root_class(q: Quiver, a: Vec, schur: bool = True) -> RootClass:
    s = euler_form(q, a, a)
    if not schur:
        return RootClass("not-schur", s)
    if s == 1:
        return RootClass("real-schur", s)
    if s == 0:
        return RootClass("isotropic-schur", s)
    return RootClass("imaginary-nonisotropic-schur", s)


def _cap(a: Vec) -> None:
    if size(a) > CONFIG.max_total_size:
        raise DomainError("max_total_size",
                          f"total size {size(a)} exceeds the search cap {CONFIG.max_total_size}")


def _split(q: Quiver, a: Vec) -> Vec | None:
    """A nonzero proper b with ext(b, a-b) = ext(a-b, b) = 0, or None."""
    for b in subvectors(q, a):
        if not any(b) or b == a:
            continue
        c = sub(a, b)
        if ext_vanishes(q, b, c) and ext_vanishes(q, c, b):
            return b
    return None


def is_schur_root(q: Quiver, a: Vec) -> tuple[bool, RootClass]:
    if not any(a):
        raise DomainError("nonzero", "a Schur root is nonzero")
    key = (q.digest, a)
    got = _SCHUR.get(key)
    if got is None:
        _cap(a)
        got = _split(q, a) is None
        _SCHUR[key] = got
    return got, root_class(q, a, got)


def is_schur(q: Quiver, a: Vec) -> bool:
    return is_schur_root(q, a)[0]


def _canonical_multiset(q: Quiver, a: Vec) -> list[Vec]:
    key = (q.digest, a)
    got = _CANON.get(key)
    if got is not None:
        return list(got)
    _cap(a)
    b = _split(q, a)
    if b is None:
        res = [a]
        _SCHUR[key] = True
    else:
        _SCHUR[key] = False
        res = _canonical_multiset(q, b) + _canonical_multiset(q, sub(a, b))
    _CANON[key] = tuple(res)
    return res


def order_by_hom(q: Quiver, roots: list[Vec]) -> list[Vec]:
    """Topological order with hom(r_i, r_j) = 0 for i < j, ties broken lexicographically."""
    distinct = sorted(set(roots))
    after = {r: set() for r in distinct}  # r must come after every member of after[r]
    for r in distinct:
        for s in distinct:
            if r != s and hom_generic(q, r, s) != 0:
                after[r].add(s)
    placed: list[Vec] = []
    remaining = set(distinct)
    while remaining:
        ready = sorted(r for r in remaining if after[r] <= set(placed))
        if not ready:
            raise DomainError("hom_order", "no ordering with vanishing hom exists")
        placed.append(ready[0])
        remaining.discard(ready[0])
    return placed


def canonical_decomposition(q: Quiver, a: Vec) -> list[tuple[Vec, int]]:
    """Ordered (root, multiplicity) pairs of the canonical decomposition."""
    if not any(a):
        raise DomainError("nonzero", "canonical decomposition of the zero vector")
    roots = _canonical_multiset(q, a)
    return [(r, roots.count(r)) for r in order_by_hom(q, roots)]


def is_prehomogeneous(q: Quiver, a: Vec) -> bool:
    return all(euler_form(q, r, r) == 1 for r, _ in canonical_decomposition(q, a))


def random_representation(q: Quiver, a: Vec, rng: np.random.Generator, p: int) -> list[np.ndarray]:
    return [rng.integers(0, p, size=(a[h], a[t]), dtype=np.int64) for t, h in q.arrows]


def d_matrix(q: Quiver, a: Vec, b: Vec, V: list[np.ndarray], W: list[np.ndarray]) -> np.ndarray:
    """Matrix of phi -> (W(x) phi(tx) - phi(hx) V(x))_x from sum Hom(V(v), W(v)) to sum over arrows."""
    col = {}
    c = 0
    for x in range(q.n):
        for i in range(b[x]):
            for j in range(a[x]):
                col[(x, i, j)] = c
                c += 1
    nrows = sum(a[t] * b[h] for t, h in q.arrows)
    m = np.zeros((nrows, c), dtype=np.int64)
    r = 0
    for k, (t, h) in enumerate(q.arrows):
        Wa, Va = W[k], V[k]
        for i in range(b[h]):
            for j in range(a[t]):
                for s in range(b[t]):
                    m[r, col[(t, s, j)]] += Wa[i, s]
                for s in range(a[h]):
                    m[r, col[(h, i, s)]] -= Va[s, j]
                r += 1
    return m


def generic_pair_oracle(q: Quiver, a: Vec, b: Vec, trials: int = 20, seed: int = 0,
                        prime: int = DEFAULT_PRIME) -> tuple[int, int]:
    """(hom, ext) of random representation pairs over F_prime; min nullity over trials."""
    check_prime(prime)
    if prime <= 10**6:
        raise DomainError("prime", "the oracle needs a prime above 10^6")
    if trials < 1:
        raise DomainError("trials", "at least one trial")
    if not any(a) or not any(b):
        return 0, 0
    rng = np.random.default_rng(seed)
    e = euler_form(q, a, b)
    hom = None
    for _ in range(trials):
        V = random_representation(q, a, rng, prime)
        W = random_representation(q, b, rng, prime)
        m = d_matrix(q, a, b, V, W)
        nullity = m.shape[1] - rank_mod_p(m, prime) if m.shape[0] else m.shape[1]
        hom = nullity if hom is None else min(hom, nullity)
    return hom, hom - e
