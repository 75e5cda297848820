"""Faces of the cone of weights sigma for which a dimension vector is semistable.

A face of dimension n - r corresponds to a set of Schur roots {g_1, ..., g_r}
with positive coefficients summing to alpha that can be ordered so that
g_i o g_j = 1 and <g_j, g_i> <= 0 for i < j. The face is cut out by
sigma(g_i) = 0, and a weight lies in its relative interior exactly when its
sigma-stable decomposition uses the roots g_i.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from .homext import embeds, is_schur, subvectors
from .linalg import rational_nullspace, rational_rank
from .quiver import (DomainError, Quiver, Vec, content_gcd, euler_form, evaluate, leq, sub,
                     support)
from .siweights import circ, si_series
from .stability import is_semistable_dim, sigma_stable_decomposition


@dataclass(frozen=True)
class FaceDescriptor:
    roots: tuple[Vec, ...]  # sorted lexicographically
    coefficients: tuple[int, ...]
    order: tuple[int, ...]  # indices into roots forming a quiver Schur sequence
    restricted: bool = False  # alpha was not sincere; computed on its support

    @property
    def r(self) -> int:
        return len(self.roots)

    @property
    def codim(self) -> int:
        return self.r - 1

    @property
    def sequence(self) -> list[Vec]:
        return [self.roots[i] for i in self.order]

    def key(self) -> tuple:
        return self.roots, self.coefficients


def sigma_inequalities(q: Quiver, a: Vec) -> list[Vec]:
    """Every g with g embedding in a, 0 != g != a: the cone is {sigma(a) = 0, sigma(g) <= 0}."""
    out = []
    for g in subvectors(q, a):
        if any(g) and g != a and embeds(q, g, a):
            out.append(g)
    return sorted(out)


def _below(a: Vec):
    def go(i: int, prefix: tuple):
        if i == len(a):
            yield prefix
            return
        for v in range(a[i] + 1):
            yield from go(i + 1, prefix + (v,))
    yield from go(0, ())


def schur_roots_below(q: Quiver, a: Vec) -> list[Vec]:
    return [g for g in _below(a) if any(g) and is_schur(q, g)]


class _Pairs:
    """Memoized pairwise tests between candidate roots."""

    def __init__(self, q: Quiver):
        self.q = q
        self._prec: dict = {}

    def compatible(self, g: Vec, h: Vec) -> bool:
        e1, e2 = euler_form(self.q, g, h), euler_form(self.q, h, g)
        return (e1 == 0 and e2 <= 0) or (e2 == 0 and e1 <= 0)

    def precedes(self, g: Vec, h: Vec) -> bool:
        """g may come before h in a quiver Schur sequence."""
        key = (g, h)
        got = self._prec.get(key)
        if got is None:
            q = self.q
            got = (euler_form(q, g, h) == 0 and euler_form(q, h, g) <= 0
                   and circ(q, g, h) == 1)
            self._prec[key] = got
        return got

    def order(self, roots: list[Vec]) -> list[int] | None:
        left = list(range(len(roots)))
        out = []
        while left:
            pick = next((i for i in left
                         if all(self.precedes(roots[i], roots[j]) for j in left if j != i)), None)
            if pick is None:
                return None
            out.append(pick)
            left.remove(pick)
        return out


def _restrict(q: Quiver, a: Vec):
    supp = support(a)
    if len(supp) == q.n:
        return q, a, None
    pos = {x: i for i, x in enumerate(supp)}
    arrows = tuple((pos[t], pos[h]) for t, h in q.arrows if t in pos and h in pos)
    sq = Quiver(tuple(q.vertices[x] for x in supp), arrows)
    return sq, tuple(a[x] for x in supp), supp


def _lift(v: Vec, supp, n: int) -> Vec:
    out = [0] * n
    for i, x in enumerate(supp):
        out[x] = v[i]
    return tuple(out)


def enumerate_faces(q: Quiver, a: Vec, r: int) -> list[FaceDescriptor]:
    sq, sa, supp = _restrict(q, a)
    n = sq.n
    if not 1 <= r <= max(1, n - 1):
        raise DomainError("face_rank", f"need 1 <= r <= {n - 1}, got {r}")
    cands = schur_roots_below(sq, sa)
    pairs = _Pairs(sq)
    found: list[FaceDescriptor] = []

    def go(start: int, rem: Vec, chosen: list[tuple[Vec, int]]):
        if len(chosen) == r:
            if not any(rem):
                roots = [g for g, _ in chosen]
                if rational_rank([list(g) for g in roots], n) != r:
                    return
                order = pairs.order(roots)
                if order is not None:
                    found.append(FaceDescriptor(tuple(roots), tuple(c for _, c in chosen),
                                                tuple(order)))
            return
        if not any(rem):
            return
        for k in range(start, len(cands)):
            g = cands[k]
            if not leq(g, rem):
                continue
            if any(not pairs.compatible(g, h) for h, _ in chosen):
                continue
            imaginary = euler_form(sq, g, g) < 0
            c = 1
            left = sub(rem, g)
            while True:
                go(k + 1, left, chosen + [(g, c)])
                if imaginary or not leq(g, left):
                    break
                c += 1
                left = sub(left, g)

    go(0, sa, [])
    if supp is None:
        return found
    return [FaceDescriptor(tuple(_lift(g, supp, q.n) for g in f.roots), f.coefficients, f.order, True)
            for f in found]


def walls(q: Quiver, a: Vec) -> list[FaceDescriptor]:
    return enumerate_faces(q, a, 2)


def extremal_rays(q: Quiver, a: Vec) -> list[FaceDescriptor]:
    return enumerate_faces(q, a, len(support(a)) - 1)


def face_of_weight(q: Quiver, a: Vec, sigma: Vec) -> FaceDescriptor:
    if not is_semistable_dim(q, a, sigma):
        raise DomainError("in_cone", "a is not sigma-semistable")
    dec = sigma_stable_decomposition(q, a, sigma)
    cert = dec.roots
    roots = sorted(cert)
    coeff = dict(dec.factors)
    return FaceDescriptor(tuple(roots), tuple(coeff[g] for g in roots),
                          tuple(roots.index(g) for g in cert))


def _primitive(v: list[Fraction]) -> Vec:
    m = lcm(*(x.denominator for x in v)) if v else 1
    ints = [int(x * m) for x in v]
    g = content_gcd(tuple(ints)) or 1
    return tuple(x // g for x in ints)


def ray_weight(q: Quiver, a: Vec, face: FaceDescriptor) -> Vec:
    """The indivisible weight spanning the ray cut out by sigma(g_i) = 0."""
    basis = rational_nullspace([list(g) for g in face.roots], q.n)
    if len(basis) != 1:
        raise DomainError("not_a_ray", f"the roots leave a {len(basis)}-dimensional solution space")
    w = _primitive(basis[0])
    for cand in (w, tuple(-x for x in w)):
        if is_semistable_dim(q, a, cand):
            return cand
    raise DomainError("not_a_ray", "neither sign of the candidate weight lies in the cone")


def rays_in_face(face: FaceDescriptor, rays: list[tuple[FaceDescriptor, Vec]]) -> list[Vec]:
    return [w for _, w in rays if all(evaluate(w, g) == 0 for g in face.roots)]


def interior_weight(q: Quiver, a: Vec, face: FaceDescriptor,
                    rays: list[tuple[FaceDescriptor, Vec]] | None = None) -> Vec:
    """Sum of the ray generators lying in the face: a point of its relative interior."""
    if rays is None:
        rays = [(f, ray_weight(q, a, f)) for f in extremal_rays(q, a)]
    inside = rays_in_face(face, rays)
    if not inside:
        raise DomainError("empty_face", "no extremal ray lies in the face")
    return tuple(sum(col) for col in zip(*inside))


def ray_series(q: Quiver, a: Vec, sigma_ray: Vec, m_max: int) -> list[int]:
    if content_gcd(sigma_ray) != 1:
        raise DomainError("indivisible", "the ray weight must be indivisible")
    face = face_of_weight(q, a, sigma_ray)
    if face.r != len(support(a)) - 1:
        raise DomainError("not_a_ray", f"the weight lies on a face with {face.r} roots")
    return si_series(q, a, sigma_ray, m_max)


__all__ = [
    "FaceDescriptor", "sigma_inequalities", "schur_roots_below", "enumerate_faces", "walls",
    "extremal_rays", "face_of_weight", "ray_weight", "rays_in_face", "interior_weight",
    "ray_series",
]
