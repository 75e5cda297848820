"""Littlewood-Richardson coefficients as semi-invariants of triple flag quivers.

On T_{n,n,n} with the staircase dimension vector beta, the weight built from a
triple (lam, mu, nu) by consecutive differences along the arms has a weight
space of dimension c^nu_{lam,mu}. This module holds that dictionary, the Horn
inequalities, wall translation and the product rule on walls.
"""
from __future__ import annotations

import itertools
import warnings
from dataclasses import dataclass
from typing import Callable, Sequence

from .partitions import Partition, check_partition, jumps, lambda_of_subset, lr_coefficient, pad
from .quiver import DomainError, Quiver, Vec, evaluate
from .siweights import si_dim


@dataclass(frozen=True)
class TripleFlagData:
    p: int
    q: int
    r: int
    quiver: Quiver

    @property
    def n(self) -> int:
        return self.p

    def vec(self, xs: Sequence[int], ys: Sequence[int], zs: Sequence[int], center: int) -> Vec:
        """Vector from arm entries (outermost first) and the center value."""
        if (len(xs), len(ys), len(zs)) != (self.p - 1, self.q - 1, self.r - 1):
            raise DomainError("arm_lengths", "arm entries do not match the quiver")
        return tuple(xs) + tuple(ys) + tuple(zs) + (center,)

    def arms(self, v: Vec) -> tuple[Vec, Vec, Vec, int]:
        a, b = self.p - 1, self.p - 1 + self.q - 1
        c = b + self.r - 1
        return v[:a], v[a:b], v[b:c], v[c]

    @property
    def beta(self) -> Vec:
        if not (self.p == self.q == self.r):
            raise DomainError("equal_arms", "the staircase vector lives on T_{n,n,n}")
        arm = tuple(range(1, self.n))
        return self.vec(arm, arm, arm, self.n)

    def unit(self, arm: str, i: int) -> Vec:
        """delta at vertex x_i, y_i or z_i (i = n gives the center)."""
        v = [0] * self.quiver.n
        v[self.quiver.index(self._name(arm, i))] = 1
        return tuple(v)

    def _name(self, arm: str, i: int) -> str:
        length = {"x": self.p, "y": self.q, "z": self.r}[arm]
        return f"x{self.p}" if i == length else f"{arm}{i}"


def triple_flag(p: int, q: int | None = None, r: int | None = None) -> TripleFlagData:
    q = p if q is None else q
    r = p if r is None else r
    if min(p, q, r) < 1:
        raise DomainError("arm_lengths", "arm lengths must be positive")
    center = f"x{p}"
    names: list[str] = []
    arrows: list[tuple[str, str]] = []
    for arm, length in (("x", p), ("y", q), ("z", r)):
        chain = [f"{arm}{i}" for i in range(1, length)]
        names += chain
        for a, b in zip(chain, chain[1:] + [center]):
            arrows.append((a, b))
    names.append(center)
    return TripleFlagData(p, q, r, Quiver.from_names(names, arrows))


def _triple(lam, mu, nu, n: int) -> tuple[Partition, Partition, Partition]:
    out = []
    for p, name in ((lam, "lambda"), (mu, "mu"), (nu, "nu")):
        p = check_partition(p, name)
        if len(p) != n:
            raise DomainError("length", f"{name} must have length {n}")
        out.append(p)
    return tuple(out)


def weight_of_triple(lam, mu, nu, n: int) -> Vec:
    lam, mu, nu = _triple(lam, mu, nu, n)
    xs = [lam[i] - lam[i + 1] for i in range(n - 1)]
    ys = [mu[i] - mu[i + 1] for i in range(n - 1)]
    # z_j carries nu_{n-j} - nu_{n-j+1}
    zs = [nu[n - j - 1] - nu[n - j] for j in range(1, n)]
    return triple_flag(n).vec(xs, ys, zs, lam[-1] + mu[-1] - nu[0])


def triple_of_weight(sigma: Vec, a: int, b: int, n: int) -> tuple[Partition, Partition, Partition]:
    data = triple_flag(n)
    if len(sigma) != data.quiver.n:
        raise DomainError("length", "weight does not live on T_{n,n,n}")
    xs, ys, zs, c = data.arms(tuple(sigma))
    lam = tuple(sum(xs[i:]) + a for i in range(n))
    mu = tuple(sum(ys[i:]) + b for i in range(n))
    # nu_k = -(c_n + c_{n-1} + ... + c_{n-k+1}), c_j = zs[j-1] for j < n
    cs = list(zs) + [c]
    nu = tuple(-sum(cs[n - k:]) + a + b for k in range(1, n + 1))
    return lam, mu, nu


def lr_via_quiver(lam, mu, nu, n: int) -> int:
    lam, mu, nu = _triple(lam, mu, nu, n)
    data = triple_flag(n)
    return si_dim(data.quiver, data.beta, weight_of_triple(lam, mu, nu, n))


@dataclass(frozen=True)
class HornTriple:
    I: tuple[int, ...]
    J: tuple[int, ...]
    K: tuple[int, ...]
    lr_value: int

    def holds(self, lam, mu, nu) -> bool:
        """sum_I lam + sum_J mu >= sum_K nu."""
        return (sum(lam[i - 1] for i in self.I) + sum(mu[j - 1] for j in self.J)
                >= sum(nu[k - 1] for k in self.K))


def horn_partition(subset: Sequence[int], n: int) -> Partition:
    """(i_r - r, ..., i_2 - 2, i_1 - 1): the lambda_of_subset value lowered by one in every part."""
    return tuple(x - 1 for x in lambda_of_subset(subset, n))


def horn_triples(n: int, r: int, mode: str = "nonzero") -> list[HornTriple]:
    if not 0 < r < n:
        raise DomainError("rank_range", f"need 0 < r < n, got r={r}, n={n}")
    if mode not in ("nonzero", "minimal"):
        raise DomainError("mode", "mode is nonzero or minimal")
    if mode == "minimal" and n == 2:
        warnings.warn("for n = 2 the lr_value == 1 list is not irredundant; returning it unfiltered")
        mode = "nonzero"
    subsets = list(itertools.combinations(range(1, n + 1), r))
    parts = {s: horn_partition(s, n) for s in subsets}
    out = []
    for I, J, K in itertools.product(subsets, repeat=3):
        c = lr_coefficient(parts[I], parts[J], parts[K])
        if c and (mode == "nonzero" or c == 1):
            out.append(HornTriple(I, J, K, c))
    return out


def in_horn_cone(lam, mu, nu, n: int, triples: Sequence[HornTriple] | None = None) -> bool:
    """Trace equation, monotonicity and every Horn inequality."""
    lam, mu, nu = (tuple(p) for p in (lam, mu, nu))
    if sum(lam) + sum(mu) != sum(nu):
        return False
    if any(p[i] < p[i + 1] for p in (lam, mu, nu) for i in range(n - 1)):
        return False
    if triples is None:
        triples = [t for r in range(1, n) for t in horn_triples(n, r)]
    return all(t.holds(lam, mu, nu) for t in triples)


def wall_inequality(beta1: Vec, n: int) -> tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...]]:
    """Coefficients (a, b, c) with sigma(beta1) = a.lam + b.mu + c.nu for the triple's weight.

    Works for any beta1, including subs whose arms jump by more than one.
    """
    data = triple_flag(n)
    if len(beta1) != data.quiver.n:
        raise DomainError("length", "vector does not live on T_{n,n,n}")
    xs, ys, zs, c = data.arms(tuple(beta1))
    a = tuple(s[k] - s[k - 1] for s in [(0,) + tuple(xs) + (c,)] for k in range(1, n + 1))
    b = tuple(s[k] - s[k - 1] for s in [(0,) + tuple(ys) + (c,)] for k in range(1, n + 1))
    z = (0,) + tuple(zs) + (c,)
    # nu_k sits at z_{n-k} with sign + and at z_{n-k+1} with sign -
    cc = tuple(z[n - k] - z[n - k + 1] for k in range(1, n + 1))
    return a, b, cc


def wall_to_IJK(beta1: Vec, n: int) -> tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...]]:
    """Index sets of the wall inequality sum_I lam + sum_J mu <= sum_K nu for the sub beta1.

    I and J are the jump positions along the x and y arms (with the value 0 before
    the first vertex and the center at position n); K reflects the z jumps k to n + 1 - k.
    """
    data = triple_flag(n)
    xs, ys, zs, c = data.arms(tuple(beta1))
    sets = []
    for arm in (xs, ys, zs):
        seq = (0,) + tuple(arm) + (c,)
        steps = [seq[i] - seq[i - 1] for i in range(1, n + 1)]
        if any(s not in (0, 1) for s in steps):
            raise DomainError("unit_jumps", "beta1 must be nondecreasing with jumps at most 1")
        sets.append([i for i in range(1, n + 1) if steps[i - 1] == 1])
    if c in (0, n):
        raise DomainError("proper_wall", "the center value must lie strictly between 0 and n")
    I, J, Kz = sets
    K = sorted(n + 1 - k for k in Kz)
    return tuple(I), tuple(J), tuple(K)


@dataclass(frozen=True)
class ProductCheck:
    lhs: int
    rhs_star: int
    rhs_sharp: int

    @property
    def equal(self) -> bool:
        return self.lhs == self.rhs_star * self.rhs_sharp


def split_by(p: Sequence[int], idx: Sequence[int]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """(entries at 1-based positions idx, entries at the remaining positions)."""
    chosen = set(idx)
    star = tuple(p[i - 1] for i in sorted(chosen))
    sharp = tuple(p[i - 1] for i in range(1, len(p) + 1) if i not in chosen)
    return star, sharp


def product_formula_check(lam, mu, nu, I, J, K, lr: Callable = lr_coefficient) -> ProductCheck:
    n = len(lam)
    lam, mu, nu = _triple(lam, mu, nu, n)
    if not (len(I) == len(J) == len(K)):
        raise DomainError("equal_sizes", "I, J, K must have the same size")
    lhs_side = sum(lam[i - 1] for i in I) + sum(mu[j - 1] for j in J)
    if lhs_side != sum(nu[k - 1] for k in K):
        raise DomainError("wall_equality", "the triple does not lie on the wall")
    ls, lh = split_by(lam, I)
    ms, mh = split_by(mu, J)
    ns, nh = split_by(nu, K)
    return ProductCheck(lr(lam, mu, nu), lr(ls, ms, ns), lr(lh, mh, nh))


def partitions_upto(n: int, size_bound: int) -> list[Partition]:
    """Nonnegative weakly decreasing length-n tuples with sum <= size_bound."""
    out = []

    def go(prefix: list[int], left: int, cap: int):
        if len(prefix) == n:
            out.append(tuple(prefix))
            return
        for v in range(min(left, cap), -1, -1):
            go(prefix + [v], left - v, v)

    go([], size_bound, size_bound)
    return sorted(out)


@dataclass
class ScanReport:
    n: int
    size_bound: int
    triples: int = 0
    nonzero: int = 0
    saturation_violations: list = None
    fulton_violations: list = None
    jump_violations: list = None

    def __post_init__(self):
        for name in ("saturation_violations", "fulton_violations", "jump_violations"):
            if getattr(self, name) is None:
                setattr(self, name, [])

    def merge(self, other: "ScanReport") -> "ScanReport":
        return ScanReport(self.n, self.size_bound, self.triples + other.triples,
                          self.nonzero + other.nonzero,
                          self.saturation_violations + other.saturation_violations,
                          self.fulton_violations + other.fulton_violations,
                          self.jump_violations + other.jump_violations)

    @property
    def total_violations(self) -> int:
        return len(self.saturation_violations) + len(self.fulton_violations) + len(self.jump_violations)


def face_codim(lam, mu, nu, n: int) -> int:
    """Codimension of the face of the cone containing the triple in its relative interior."""
    from .stability import sigma_stable_decomposition

    data = triple_flag(n)
    dec = sigma_stable_decomposition(data.quiver, data.beta, weight_of_triple(lam, mu, nu, n))
    return len(dec.factors) - 1


def scan_properties(n: int, size_bound: int, lr: Callable = lr_coefficient,
                    check_jumps: bool = True, shard: tuple[int, int] = (0, 1)) -> ScanReport:
    """Exhaustive checks over all triples within the size bound.

    shard=(k, s) restricts the outer loop to every s-th lambda starting at k, so
    s disjoint shards cover the range exactly once.
    """
    rep = ScanReport(n, size_bound)
    parts = partitions_upto(n, size_bound)
    by_size: dict[int, list[Partition]] = {}
    for p in parts:
        by_size.setdefault(sum(p), []).append(p)
    k, s = shard
    for lam in parts[k::s]:
        for mu in parts:
            total = sum(lam) + sum(mu)
            for nu in by_size.get(total, []):
                rep.triples += 1
                c = lr(lam, mu, nu)
                scaled = {N: lr(*(tuple(N * x for x in p) for p in (lam, mu, nu))) for N in (2, 3)}
                if scaled[2] and not c:
                    rep.saturation_violations.append((lam, mu, nu))
                if c == 1 and (scaled[2] != 1 or scaled[3] != 1):
                    rep.fulton_violations.append((lam, mu, nu))
                if not c:
                    continue
                rep.nonzero += 1
                if check_jumps:
                    l = face_codim(lam, mu, nu, n)
                    j = jumps(lam) + jumps(mu) + jumps(nu)
                    bound = 4 * n - 6 - l if c > 1 else 4 * n - 4 - l
                    if j > bound:
                        rep.jump_violations.append((lam, mu, nu, l))
    return rep


__all__ = [
    "TripleFlagData", "triple_flag", "weight_of_triple", "triple_of_weight", "lr_via_quiver",
    "HornTriple", "horn_partition", "horn_triples", "in_horn_cone", "wall_to_IJK",
    "wall_inequality",
    "ProductCheck", "product_formula_check", "split_by", "partitions_upto", "ScanReport",
    "scan_properties", "face_codim", "pad", "evaluate",
]
