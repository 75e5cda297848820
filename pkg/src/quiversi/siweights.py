"""Dimensions of semi-invariant weight spaces.

The coordinate ring of Rep(Q, b) splits (Cauchy) over arrow labelings a -> lam_a
into tensor products of Schur functors, S_lam(V_ta) x S_lam(V_ha)^* per arrow.
A weight sigma semi-invariant lives in the summands where, at every vertex x,
the GL(V_x) factor contains det^sigma(x); the weight space dimension is the sum
over labelings of the product of those multiplicities.

Labelings are generated vertex by vertex in topological order. The state is the
set of labels on arrows whose tail is done and whose head is not, so equal
partial labelings are merged with a count instead of being revisited.
"""
from __future__ import annotations

from collections import defaultdict
from functools import lru_cache

import numpy as np

from .config import CONFIG
from .homext import d_matrix, random_representation
from .linalg import DEFAULT_PRIME, check_prime, det_mod_p, rank_mod_p
from .partitions import Partition, lr_coefficient, pad, strip_zeros, tensor_multiplicities
from .quiver import DomainError, Quiver, Vec, euler_form, evaluate, left_weight, right_weight


@lru_cache(maxsize=None)
def _product(labels: tuple[Partition, ...], d: int) -> tuple[tuple[Partition, int], ...]:
    """Decomposition of the tensor product of S_lab(K^d) over ``labels`` (sorted)."""
    acc: dict[Partition, int] = {(): 1}
    for lab in labels:
        nxt: dict[Partition, int] = defaultdict(int)
        for nu, m in acc.items():
            for rho, c in tensor_multiplicities(nu, lab, d).items():
                nxt[strip_zeros(rho)] += m * c
        acc = nxt
    return tuple(sorted(acc.items()))


def _complement(p: Partition, k: int, d: int) -> Partition | None:
    p = pad(p, d)
    if p and p[0] > k:
        return None
    return strip_zeros(tuple(k - x for x in reversed(p)))


@lru_cache(maxsize=None)
def contraction(ins: tuple[Partition, ...], outs: tuple[Partition, ...], s: int, d: int) -> int:
    """Multiplicity of det^s in  (x) S_out(V)  (x)  (x) S_in(V)^*  for dim V = d."""
    if d == 0:
        return 1 if not any(ins) and not any(outs) else 0
    if any(len(p) > d for p in ins + outs):
        return 0
    if sum(map(sum, outs)) - sum(map(sum, ins)) != s * d:
        return 0
    if not outs and s <= 0:
        # invariants of (x) S_in(V)^* x det^{-s}: the rectangle (-s)^d inside (x) S_in(V)
        return _rectangle_mult(ins, -s, d)
    if not ins and s >= 0:
        return _rectangle_mult(outs, s, d)
    P = dict(_product(outs, d))
    R = _product(ins, d)
    total = 0
    for nu, m in R:
        shifted = tuple(x + s for x in pad(nu, d))
        if shifted[-1] < 0:
            continue
        total += m * P.get(strip_zeros(shifted), 0)
    return total


def _rectangle_mult(labels: tuple[Partition, ...], k: int, d: int) -> int:
    if not labels:
        return 1 if k == 0 else 0
    if len(labels) == 1:
        return 1 if pad(labels[0], d) == (k,) * d else 0
    head = tuple(sorted(labels[:-1]))
    comp = _complement(labels[-1], k, d)
    if comp is None:
        return 0
    if len(head) == 2:
        a, b = (pad(p, d) for p in head)
        return lr_coefficient(a, b, pad(comp, d))
    return dict(_product(head, d)).get(comp, 0)


def _partitions(total: int, max_parts: int, max_part: int | None = None):
    """Partitions of ``total`` with at most max_parts parts, largest first."""
    if max_part is None:
        max_part = total
    if total == 0:
        yield ()
        return
    if max_parts == 0:
        return
    for first in range(min(total, max_part), 0, -1):
        if first * max_parts < total:
            break
        for rest in _partitions(total - first, max_parts - 1, first):
            yield (first,) + rest


def _out_labelings(q: Quiver, b: Vec, outs: list[int], degree: int):
    """Tuples of partitions on the arrows ``outs`` with total size ``degree``."""
    bounds = [min(b[q.arrows[k][0]], b[q.arrows[k][1]]) for k in outs]

    def go(j: int, left: int):
        if j == len(outs):
            if left == 0:
                yield ()
            return
        if j == len(outs) - 1:
            sizes = [left]
        else:
            sizes = range(left, -1, -1)
        for sz in sizes:
            if sz and bounds[j] == 0:
                continue
            for lab in _partitions(sz, bounds[j]):
                for rest in go(j + 1, left - sz):
                    yield (lab,) + rest

    yield from go(0, degree)


def si_dim(q: Quiver, b: Vec, sigma: Vec) -> int:
    """dim SI(Q, b)_sigma."""
    if not q.is_acyclic:
        raise DomainError("acyclic", "si_dim needs a quiver without oriented cycles")
    if evaluate(sigma, b) != 0:
        return 0
    order = q.topological_order
    in_arr = [q.in_arrows(x) for x in range(q.n)]
    out_arr = [q.out_arrows(x) for x in range(q.n)]
    # frontier: sorted tuple of (arrow index, label)
    states: dict[tuple, int] = {(): 1}
    visited = 0
    for x in order:
        d = b[x]
        s = sigma[x]
        outs = out_arr[x]
        ins = set(in_arr[x])
        nxt: dict[tuple, int] = defaultdict(int)
        for frontier, count in states.items():
            in_labels = tuple(sorted(lab for k, lab in frontier if k in ins))
            rest = tuple(item for item in frontier if item[0] not in ins)
            degree = sum(map(sum, in_labels)) + s * d
            if degree < 0 or (not outs and degree != 0):
                continue
            if d == 0 and (degree or any(in_labels)):
                continue
            for labs in _out_labelings(q, b, outs, degree):
                visited += 1
                if visited > CONFIG.max_labelings:
                    raise DomainError("labeling_cap",
                                      f"more than {CONFIG.max_labelings} arrow labelings")
                m = contraction(in_labels, tuple(sorted(labs)), s, d)
                if m:
                    key = tuple(sorted(rest + tuple(zip(outs, labs))))
                    nxt[key] += count * m
        states = nxt
        if not states:
            return 0
    return sum(states.values())


def circ(q: Quiver, a: Vec, b: Vec) -> int:
    """a o b = dim SI(Q, b)_{<a, .>}."""
    if euler_form(q, a, b) != 0:
        raise DomainError("euler_zero", "a o b needs <a, b> = 0")
    return si_dim(q, b, left_weight(q, a))


def circ_dual(q: Quiver, a: Vec, b: Vec) -> int:
    """a o b computed on the other side: dim SI(Q, a)_{-<., b>}."""
    if euler_form(q, a, b) != 0:
        raise DomainError("euler_zero", "a o b needs <a, b> = 0")
    return si_dim(q, a, right_weight(q, b))


def si_series(q: Quiver, b: Vec, sigma: Vec, m_max: int) -> list[int]:
    if m_max < 0:
        raise DomainError("m_max", "m_max must be nonnegative")
    return [si_dim(q, b, tuple(m * s for s in sigma)) for m in range(m_max + 1)]


def convention_self_test() -> None:
    """Pin the weight sign: <a, .> with <a, b> = 0 must give a nonzero weight space.

    On the three-arm quiver with arms of lengths 3, 3, 2 the pair below has
    a o b = 1; the opposite sign convention gives 0.
    """
    arms = [("x1", "x2"), ("x2", "x3"), ("y1", "y2"), ("y2", "x3"), ("z1", "x3")]
    q = Quiver.from_names(["x1", "x2", "y1", "y2", "z1", "x3"], arms)
    a, b = (1, 3, 1, 2, 2, 4), (1, 2, 0, 2, 1, 3)
    if circ(q, a, b) != 1 or si_dim(q, b, tuple(-w for w in left_weight(q, a))) != 0:
        raise RuntimeError("semi-invariant weight convention self-test failed")


def det_rank_oracle(q: Quiver, a: Vec, b: Vec, samples: int = 8, seed: int = 0,
                    prime: int = DEFAULT_PRIME) -> int:
    """Rank of the matrix (det d^{V_i}_{W_j}) over random V_i, W_j: a lower bound for a o b."""
    check_prime(prime)
    if samples < 1:
        raise DomainError("samples", "at least one sample")
    if euler_form(q, a, b) != 0:
        raise DomainError("euler_zero", "d^V_W is square only when <a, b> = 0")
    rng = np.random.default_rng(seed)
    Vs = [random_representation(q, a, rng, prime) for _ in range(samples)]
    Ws = [random_representation(q, b, rng, prime) for _ in range(samples)]
    m = np.zeros((samples, samples), dtype=np.int64)
    for i, V in enumerate(Vs):
        for j, W in enumerate(Ws):
            d = d_matrix(q, a, b, V, W)
            m[i, j] = det_mod_p(d, prime) if d.size else 1
    return rank_mod_p(m, prime)
