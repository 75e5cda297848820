"""Exceptional sequences, braid mutations, perpendicular categories and refinements."""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .config import CONFIG
from .homext import ext_vanishes, is_schur, perpendicular
from .linalg import rational_nullspace, rational_rank
from .quiver import DomainError, Quiver, Vec, add, euler_form, scale, size, sub, unit
from .stability import sigma_stable_decomposition


def is_exceptional_sequence(q: Quiver, roots: list[Vec]) -> bool:
    if not roots:
        raise DomainError("nonempty", "an exceptional sequence has at least one root")
    for r in roots:
        if not any(r) or euler_form(q, r, r) != 1 or not is_schur(q, r):
            return False
    for i, j in itertools.combinations(range(len(roots)), 2):
        if not perpendicular(q, roots[i], roots[j]):
            return False
    return rational_rank([list(r) for r in roots], q.n) == len(roots)


def _nonneg(v: Vec) -> bool:
    return all(x >= 0 for x in v)


def _pick(cand: Vec) -> Vec:
    neg = tuple(-x for x in cand)
    if _nonneg(cand) and any(cand):
        return cand
    if _nonneg(neg) and any(neg):
        return neg
    raise DomainError("mutation_sign", f"neither {cand} nor its negative is a dimension vector")


def braid_mutate(q: Quiver, seq: list[Vec], i: int, direction: str = "left") -> list[Vec]:
    """s_i (left) or its inverse (right) at positions i, i+1 (1-based)."""
    if not 1 <= i < len(seq):
        raise DomainError("index", f"need 1 <= i < {len(seq)}")
    a, b = seq[i - 1], seq[i]
    out = list(seq)
    if direction == "left":
        # the new root sits left of a and satisfies <new, a> = 0
        new = _pick(sub(b, scale(euler_form(q, b, a), a)))
        out[i - 1], out[i] = new, a
    elif direction == "right":
        # the new root sits right of b and satisfies <b, new> = 0
        new = _pick(sub(a, scale(euler_form(q, b, a), b)))
        out[i - 1], out[i] = b, new
    else:
        raise DomainError("direction", "direction is left or right")
    return out


@dataclass(frozen=True)
class PerpEmbedding:
    sub_quiver: Quiver
    simples: tuple[Vec, ...]

    def embed(self, beta: Vec) -> Vec:
        if len(beta) != len(self.simples):
            raise DomainError("length", "vector does not live on the perpendicular quiver")
        acc = (0,) * (len(self.simples[0]) if self.simples else 0)
        for c, e in zip(beta, self.simples):
            acc = add(acc, scale(c, e))
        return acc

    def preimage(self, alpha: Vec) -> Vec | None:
        """beta with embed(beta) = alpha, or None when alpha is outside the image lattice cone."""
        k = len(self.simples)
        if k == 0:
            return () if not any(alpha) else None
        # solve sum beta_i eps_i = alpha over Q
        rows = [[e[x] for e in self.simples] + [-alpha[x]] for x in range(len(alpha))]
        basis = rational_nullspace(rows, k + 1)
        sol = [v for v in basis if v[-1] != 0]
        if len(basis) != 1 or not sol:
            return None
        v = [x / sol[0][-1] for x in sol[0]]
        beta = v[:k]
        if any(x.denominator != 1 or x < 0 for x in beta):
            return None
        return tuple(int(x) for x in beta)


def embedding_quiver(q: Quiver, eps: list[Vec]) -> PerpEmbedding:
    """The quiver with -<e_i, e_j> arrows i -> j (i > j) attached to an exceptional sequence."""
    arrows = []
    for i in range(len(eps)):
        for j in range(len(eps)):
            if i == j:
                continue
            e = euler_form(q, eps[i], eps[j])
            if i > j:
                if e > 0:
                    raise DomainError("nonpositive_pairing", f"<e{i+1}, e{j+1}> = {e} > 0")
                arrows += [(i, j)] * (-e)
            elif e != 0:
                raise DomainError("exceptional", "not an exceptional sequence")
    names = tuple(str(i + 1) for i in range(len(eps)))
    return PerpEmbedding(Quiver(names, tuple(arrows)), tuple(eps))


def _box(bound: int, n: int):
    return itertools.product(range(bound + 1), repeat=n)


def _perp_members(q: Quiver, seq: list[Vec], side: str, bound: int) -> list[Vec]:
    out = []
    for v in _box(bound, q.n):
        if not any(v):
            continue
        if side == "right":
            ok = all(euler_form(q, e, v) == 0 for e in seq) and all(ext_vanishes(q, e, v) for e in seq)
        else:
            ok = all(euler_form(q, v, e) == 0 for e in seq) and all(ext_vanishes(q, v, e) for e in seq)
        if ok:
            out.append(v)
    return out


def _irreducibles(members: list[Vec]) -> list[Vec]:
    present = set(members)
    gens: list[Vec] = []
    for v in sorted(members, key=lambda u: (size(u), u)):
        if not any(all(x <= y for x, y in zip(g, v)) and sub(v, g) in present for g in gens):
            gens.append(v)
    return gens


def _acyclic_order(q: Quiver, gens: list[Vec]) -> list[Vec]:
    """Order simples so that ext(e_i, e_j) = 0 for i < j."""
    left = sorted(gens)
    out = []
    while left:
        pick = next((g for g in left if all(euler_form(q, g, h) == 0 for h in left if h != g)), None)
        if pick is None:
            raise DomainError("perp_order", "perpendicular simples admit no exceptional order")
        out.append(pick)
        left.remove(pick)
    return out


def perp_quiver(q: Quiver, seq: list[Vec], side: str = "right") -> PerpEmbedding:
    if side not in ("right", "left"):
        raise DomainError("side", "side is right or left")
    if seq and not is_exceptional_sequence(q, seq):
        raise DomainError("exceptional", "input is not an exceptional sequence")
    need = q.n - len(seq)
    if need == 0:
        return PerpEmbedding(Quiver((), ()), ())
    bound = max(2 * max((max(e) for e in seq), default=1), 1)
    while True:
        gens = _irreducibles(_perp_members(q, seq, side, bound))
        # every perpendicular vector is a sum of the simples, so once all of them fit in the
        # box the irreducible members are exactly the simples
        if len(gens) == need and rational_rank([list(g) for g in gens], q.n) == need:
            break
        if len(gens) > need:
            raise DomainError("hilbert_basis", f"{len(gens)} generators exceed {need}")
        if bound * 2 > CONFIG.hilbert_bound_limit:
            raise DomainError("hilbert_basis",
                              f"found {len(gens)} of {need} generators within bound {bound}")
        bound *= 2
    return embedding_quiver(q, _acyclic_order(q, gens))


@dataclass(frozen=True)
class Refinement:
    sequence: tuple[Vec, ...]
    blocks: tuple[int, ...]  # b_1 < ... < b_r = len(sequence)

    def block(self, j: int) -> tuple[Vec, ...]:
        lo = self.blocks[j - 1] if j else 0
        return self.sequence[lo:self.blocks[j]]


def block_coefficients(block: tuple[Vec, ...], target: Vec) -> list[Fraction] | None:
    """Coefficients expressing target in the (independent) block vectors, or None."""
    k = len(block)
    rows = [[b[x] for b in block] + [-target[x]] for x in range(len(target))]
    basis = rational_nullspace(rows, k + 1)
    sol = [v for v in basis if v[-1] != 0]
    if len(basis) != 1 or not sol:
        return None
    return [x / sol[0][-1] for x in sol[0][:k]]


def is_refinement(ref: Refinement, seq: list[Vec]) -> bool:
    if len(ref.blocks) != len(seq) or ref.blocks[-1] != len(ref.sequence):
        return False
    if any(ref.blocks[i] >= ref.blocks[i + 1] for i in range(len(ref.blocks) - 1)) or ref.blocks[0] < 1:
        return False
    for j, g in enumerate(seq):
        c = block_coefficients(ref.block(j), g)
        if c is None or any(x <= 0 for x in c):
            return False
    return True


def refine_schur_sequence(q: Quiver, seq: list[Vec], depth: int = 0) -> Refinement:
    if depth > CONFIG.refine_depth:
        raise DomainError("refine_depth", "refinement recursion exceeded its depth cap")
    if not seq:
        return Refinement((), ())
    if any(not any(g) or not is_schur(q, g) for g in seq):
        raise DomainError("schur_sequence", "every entry must be a Schur root")
    head, rest = seq[0], list(seq[1:])
    if euler_form(q, head, head) == 1:
        if not rest:
            return Refinement((head,), (1,))
        emb = perp_quiver(q, [head], "right")
        deltas = []
        for g in rest:
            d = emb.preimage(g)
            if d is None:
                raise DomainError("schur_sequence", f"{g} is not perpendicular to {head}")
            deltas.append(d)
        inner = refine_schur_sequence(emb.sub_quiver, deltas, depth + 1)
        lifted = tuple(emb.embed(e) for e in inner.sequence)
        return Refinement((head,) + lifted, (1,) + tuple(b + 1 for b in inner.blocks))
    # imaginary head: split it along sigma = -<., sum of the later roots>
    delta = (0,) * q.n
    for g in rest:
        delta = add(delta, g)
    sigma = tuple(-euler_form(q, unit(q, x), delta) for x in range(q.n))
    dec = sigma_stable_decomposition(q, head, sigma)
    betas = dec.roots
    if len(betas) == 1 and betas[0] == head:
        raise DomainError("schur_sequence", f"{head} does not split; input is not a Schur sequence")
    inner = refine_schur_sequence(q, betas + rest, depth + 1)
    ell = len(betas)
    return Refinement(inner.sequence, inner.blocks[ell - 1:])


__all__ = [
    "is_exceptional_sequence", "braid_mutate", "PerpEmbedding", "embedding_quiver",
    "perp_quiver", "Refinement", "refine_schur_sequence", "is_refinement", "block_coefficients",
]
