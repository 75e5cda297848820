"""Stability of dimension vectors, stable decompositions and Harder-Narasimhan types.

Sign convention: a dimension vector a is sigma-semistable when sigma(a) = 0 and
sigma(g) <= 0 for every g embedding in a (the opposite of King's inequalities).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from .config import CONFIG
from .homext import embeds, ext_vanishes, root_class, subvectors
from .quiver import (DomainError, Quiver, Vec, content_gcd, double_quiver, euler_form, evaluate,
                     path_connected, scale, size, sub, support, unit)
from .siweights import circ, si_dim


@dataclass(frozen=True)
class StableDecomposition:
    """Factors in certificate order: ext(root_i, root_j) = 0 for i < j."""
    factors: tuple[tuple[Vec, int], ...]
    sigma: Vec

    @property
    def roots(self) -> list[Vec]:
        return [r for r, _ in self.factors]

    def total(self) -> Vec:
        acc = [0] * len(self.sigma)
        for r, c in self.factors:
            for i, x in enumerate(r):
                acc[i] += c * x
        return tuple(acc)


@dataclass(frozen=True)
class HNType:
    blocks: tuple[tuple[Vec, Fraction], ...]


def _certified_semistable(q: Quiver, a: Vec, sigma: Vec) -> bool:
    """A nonzero weight space SI(Q, a)_sigma proves semistability (one-sided test)."""
    saved = CONFIG.max_labelings
    CONFIG.max_labelings = min(saved, 200_000)
    try:
        return si_dim(q, a, sigma) > 0
    except DomainError:
        return False
    finally:
        CONFIG.max_labelings = saved


def destabilizing_subvector(q: Quiver, a: Vec, sigma: Vec, strict: bool = False) -> Vec | None:
    """Some g embedding in a with sigma(g) > 0 (or >= 0 with g not in {0, a} when strict)."""
    cands = []
    for g in subvectors(q, a):
        v = evaluate(sigma, g)
        if v > 0 or (strict and v == 0 and any(g) and g != a):
            cands.append((-v, size(g), g))
    cands.sort()
    for _, _, g in cands:
        if embeds(q, g, a):
            return g
    return None


def is_semistable_dim(q: Quiver, a: Vec, sigma: Vec) -> bool:
    if evaluate(sigma, a) != 0:
        return False
    if not any(a):
        return True
    if _certified_semistable(q, a, sigma):
        return True
    return destabilizing_subvector(q, a, sigma) is None


def is_stable_dim(q: Quiver, a: Vec, sigma: Vec) -> bool:
    if not any(a) or not is_semistable_dim(q, a, sigma):
        return False
    return _minimal_zero_sub(q, a, sigma) is None


def _minimal_zero_sub(q: Quiver, a: Vec, sigma: Vec) -> Vec | None:
    """The minimal (size, then lex) nonzero proper g embedding in a with sigma(g) = 0."""
    for k in range(1, size(a)):
        for g in sorted(subvectors(q, a, total=k, sigma=sigma, sigma_value=0)):
            if embeds(q, g, a):
                return g
    return None


def _peel(q: Quiver, a: Vec, sigma: Vec) -> list[Vec]:
    out = []
    while any(a):
        g = _minimal_zero_sub(q, a, sigma)
        if g is None:
            out.append(a)
            break
        out.append(g)
        a = sub(a, g)
    return out


def certificate_order(q: Quiver, roots: list[Vec]) -> list[Vec]:
    """Order distinct roots so that ext(r_i, r_j) = 0 for i < j; ties lexicographic."""
    distinct = sorted(set(roots))
    before = {r: set() for r in distinct}  # members that must precede r
    for r in distinct:
        for s in distinct:
            if r != s and not ext_vanishes(q, r, s):
                # ext(r, s) != 0 forces s before r
                before[r].add(s)
    placed: list[Vec] = []
    remaining = set(distinct)
    while remaining:
        ready = sorted(r for r in remaining if before[r] <= set(placed))
        if not ready:
            raise DomainError("certificate_order", "stable factors admit no ext-vanishing order")
        placed.append(ready[0])
        remaining.discard(ready[0])
    return placed


def sigma_stable_decomposition(q: Quiver, a: Vec, sigma: Vec) -> StableDecomposition:
    if not is_semistable_dim(q, a, sigma):
        raise DomainError("semistable", "the dimension vector is not sigma-semistable")
    pieces = _peel(q, a, sigma)
    order = certificate_order(q, pieces)
    return StableDecomposition(tuple((r, pieces.count(r)) for r in order), sigma)


def verify_decomposition(q: Quiver, dec: StableDecomposition, a: Vec, check_circ: bool = True) -> list[str]:
    """Invariant violations of a stable decomposition (empty when all hold)."""
    problems = []
    if dec.total() != a:
        problems.append("factors do not sum to the input")
    roots = dec.roots
    if len(set(roots)) != len(roots):
        problems.append("repeated roots")
    for r, c in dec.factors:
        if evaluate(dec.sigma, r) != 0:
            problems.append(f"sigma does not vanish on {r}")
        if c > 1 and euler_form(q, r, r) < 0:
            problems.append(f"multiplicity {c} on imaginary non-isotropic {r}")
    if check_circ:
        for i in range(len(roots)):
            for j in range(i + 1, len(roots)):
                if euler_form(q, roots[i], roots[j]) != 0 or circ(q, roots[i], roots[j]) != 1:
                    problems.append(f"circ({roots[i]}, {roots[j]}) != 1")
    return problems


def _slope(sigma: Vec, tau: Vec, g: Vec) -> Fraction:
    return Fraction(evaluate(sigma, g), evaluate(tau, g))


def _check_tau(a: Vec, tau: Vec) -> None:
    if any(tau[x] <= 0 for x in support(a)):
        raise DomainError("tau_positive", "tau must be positive on nonzero subvectors")


def hn_type(q: Quiver, a: Vec, sigma: Vec, tau: Vec) -> HNType:
    _check_tau(a, tau)
    blocks = []
    rem = a
    while any(rem):
        best = None
        for g in subvectors(q, rem):
            if not any(g):
                continue
            key = (_slope(sigma, tau, g), size(g))
            if best is not None and key < best[0]:
                continue
            if not embeds(q, g, rem):
                continue
            if best is None or key > best[0]:
                best = (key, [g])
            elif key == best[0]:
                best[1].append(g)
        if len(best[1]) != 1:
            raise DomainError("hn_unique", f"several maximal destabilizing subvectors {best[1]}")
        g = best[1][0]
        blocks.append((g, best[0][0]))
        rem = sub(rem, g)
    return HNType(tuple(blocks))


def sigma_tau_stable_decomposition(q: Quiver, a: Vec, sigma: Vec, tau: Vec) -> list[tuple[Vec, int]]:
    out: list[tuple[Vec, int]] = []
    for block, slope in hn_type(q, a, sigma, tau).blocks:
        num, den = slope.numerator, slope.denominator
        w = tuple(den * s - num * t for s, t in zip(sigma, tau))
        out.extend(sigma_stable_decomposition(q, block, w).factors)
    return out


@dataclass(frozen=True)
class RootQuiver:
    roots: tuple[Vec, ...]
    quiver: Quiver
    loops: tuple[int, ...] = field(default=())

    def path_connected(self) -> bool:
        return path_connected(self.quiver.n, self.quiver.arrows, range(self.quiver.n))


def root_quiver(q: Quiver, roots: list[Vec]) -> RootQuiver:
    s = len(roots)
    arrows = []
    loops = []
    for i in range(s):
        for j in range(s):
            e = euler_form(q, roots[i], roots[j])
            if i == j:
                loops.append(1 - e)
                arrows += [(i, i)] * (1 - e)
            else:
                if e > 0:
                    raise DomainError("nonpositive_pairing", f"<d{i+1}, d{j+1}> = {e} > 0")
                arrows += [(i, j)] * (-e)
    rq = Quiver(tuple(str(i + 1) for i in range(s)), tuple(arrows), True)
    return RootQuiver(tuple(roots), rq, tuple(loops))


def stable_by_root_quiver(q: Quiver, a: Vec, deltas: list[Vec]) -> bool:
    """Cross-check criterion for sigma-stability from extremal sigma-stable vectors deltas."""
    if a in deltas and euler_form(q, a, a) == 1:
        return True
    if any(euler_form(q, d, a) > 0 or euler_form(q, a, d) > 0 for d in deltas):
        return False
    if not root_quiver(q, deltas).path_connected():
        return False
    if euler_form(q, a, a) == 0 and content_gcd(a) != 1:
        return False
    return True


def is_simple_dim(q: Quiver, a: Vec) -> bool:
    """Dimension vector of a simple representation (quivers with oriented cycles allowed)."""
    if not any(a):
        raise DomainError("nonzero", "the zero vector is not considered")
    supp = support(a)
    if len(supp) == 1 and a[supp[0]] == 1 and euler_form(q, a, a) == 1:
        return True
    for x in range(q.n):
        e = unit(q, x)
        if euler_form(q, e, a) > 0 or euler_form(q, a, e) > 0:
            return False
    if not path_connected(q.n, q.arrows, supp):
        return False
    if euler_form(q, a, a) == 0 and content_gcd(a) != 1:
        return False
    return True


def stability_via_doubling(q: Quiver, a: Vec, sigma: Vec, stable: bool = False) -> bool:
    """(Semi)stability of a on any quiver, read off on the doubled quiver for large m.

    For m larger than every |sigma-hat(g)| with g <= a-hat, the sign of
    sigma-hat + m tau on subvectors no longer depends on m, so the verdict
    found there is the limiting one.
    """
    dq = double_quiver(q)
    ah = dq.lift(a)
    sh = dq.lift(sigma)
    bound = sum(abs(s) * x for s, x in zip(sh, ah)) + 1
    m = 1
    while m < bound:
        m *= 2
    if m > CONFIG.doubling_max_m and bound > CONFIG.doubling_max_m:
        raise DomainError("doubling_cap", f"needs m >= {bound}, cap is {CONFIG.doubling_max_m}")
    w = tuple(s + m * t for s, t in zip(sh, dq.tau))
    check = is_stable_dim if stable else is_semistable_dim
    return check(dq.doubled, ah, w)


def simple_decomposition(q: Quiver, a: Vec) -> list[tuple[Vec, int]]:
    """Dimension vectors of the composition factors of a general representation."""
    dq = double_quiver(q)
    ah = dq.lift(a)
    w = dq.tau
    if not is_semistable_dim(dq.doubled, ah, w):
        raise DomainError("semistable", "doubled vector not semistable")
    dec = sigma_stable_decomposition(dq.doubled, ah, w)
    out = []
    for r, c in dec.factors:
        base = r[0::2]
        if r[1::2] != base:
            raise DomainError("lift", f"factor {r} is not a lift")
        out.append((base, c))
    return out


def indivisible(a: Vec) -> Vec:
    g = content_gcd(a)
    return tuple(x // g for x in a) if g else a


def bracket_scale(q: Quiver, dec: StableDecomposition, p: int) -> list[tuple[Vec, int]]:
    """{p a_1} + ... : p copies for real or isotropic roots, the single root p a otherwise."""
    out: dict[Vec, int] = {}
    for r, c in dec.factors:
        if euler_form(q, r, r) >= 0:
            out[r] = out.get(r, 0) + c * p
        else:
            out[scale(p, r)] = out.get(scale(p, r), 0) + c
    return sorted(out.items())


__all__ = [
    "StableDecomposition", "HNType", "RootQuiver", "is_semistable_dim", "is_stable_dim",
    "sigma_stable_decomposition", "hn_type", "sigma_tau_stable_decomposition", "root_quiver",
    "is_simple_dim", "stability_via_doubling", "simple_decomposition", "verify_decomposition",
    "certificate_order", "bracket_scale", "stable_by_root_quiver", "destabilizing_subvector",
    "root_class", "gcd", "indivisible",
]
