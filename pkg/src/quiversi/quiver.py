"""Quivers, dimension vectors, weights and the Euler form.

Dimension vectors and weights are plain tuples of Python ints indexed by the
quiver's vertex order. JSON conversion happens only at the boundary.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cached_property
from math import gcd
from typing import Iterable, Mapping, Sequence

Vec = tuple[int, ...]


class DomainError(ValueError):
    """A violated precondition. ``precondition`` names the failed check."""

    def __init__(self, precondition: str, detail: str = ""):
        self.precondition = precondition
        super().__init__(f"{precondition}: {detail}" if detail else precondition)


@dataclass(frozen=True)
class Quiver:
    vertices: tuple[str, ...]
    arrows: tuple[tuple[int, int], ...]
    allows_cycles: bool = False
    _index: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        if len(set(self.vertices)) != len(self.vertices):
            raise DomainError("distinct_vertices", "duplicate vertex id")
        n = len(self.vertices)
        for t, h in self.arrows:
            if not (0 <= t < n and 0 <= h < n):
                raise DomainError("arrow_endpoints", f"arrow ({t},{h}) leaves the vertex set")
        object.__setattr__(self, "_index", {v: i for i, v in enumerate(self.vertices)})
        if not self.allows_cycles and self._topological() is None:
            raise DomainError("acyclic", "oriented cycle in a quiver declared acyclic")

    @classmethod
    def from_names(cls, vertices: Sequence[str], arrows: Iterable[tuple[str, str]],
                   allows_cycles: bool = False) -> "Quiver":
        verts = tuple(str(v) for v in vertices)
        idx = {v: i for i, v in enumerate(verts)}
        arr = []
        for t, h in arrows:
            if str(t) not in idx or str(h) not in idx:
                raise DomainError("arrow_endpoints", f"dangling arrow {t}->{h}")
            arr.append((idx[str(t)], idx[str(h)]))
        return cls(verts, tuple(arr), allows_cycles)

    @property
    def n(self) -> int:
        return len(self.vertices)

    def index(self, v: str) -> int:
        return self._index[v]

    def _topological(self) -> list[int] | None:
        indeg = [0] * self.n
        out: list[list[int]] = [[] for _ in range(self.n)]
        for t, h in self.arrows:
            if t == h:
                return None
            indeg[h] += 1
            out[t].append(h)
        ready = [i for i in range(self.n) if indeg[i] == 0]
        order = []
        while ready:
            # smallest index first keeps the order deterministic
            ready.sort(reverse=True)
            x = ready.pop()
            order.append(x)
            for h in out[x]:
                indeg[h] -= 1
                if indeg[h] == 0:
                    ready.append(h)
        return order if len(order) == self.n else None

    @cached_property
    def topological_order(self) -> tuple[int, ...]:
        order = self._topological()
        if order is None:
            raise DomainError("acyclic", "quiver has an oriented cycle")
        return tuple(order)

    @cached_property
    def is_acyclic(self) -> bool:
        return self._topological() is not None

    @cached_property
    def arrow_matrix(self) -> tuple[tuple[int, ...], ...]:
        """arrow_matrix[i][j] = number of arrows i -> j."""
        m = [[0] * self.n for _ in range(self.n)]
        for t, h in self.arrows:
            m[t][h] += 1
        return tuple(tuple(r) for r in m)

    @cached_property
    def digest(self) -> tuple:
        return (self.n, tuple(sorted(self.arrows)))

    def out_arrows(self, x: int) -> list[int]:
        return [k for k, (t, _) in enumerate(self.arrows) if t == x]

    def in_arrows(self, x: int) -> list[int]:
        return [k for k, (_, h) in enumerate(self.arrows) if h == x]

    def to_json(self) -> dict:
        return {
            "vertices": list(self.vertices),
            "arrows": [{"tail": self.vertices[t], "head": self.vertices[h]} for t, h in self.arrows],
            "allows_cycles": self.allows_cycles,
        }


def parse_quiver(text: str | Mapping) -> Quiver:
    """Build a validated quiver from the JSON description (string or parsed object)."""
    try:
        obj = json.loads(text) if isinstance(text, str) else text
        verts = obj["vertices"]
        arrows = [(a["tail"], a["head"]) for a in obj["arrows"]]
        cyc = bool(obj.get("allows_cycles", False))
    except (KeyError, TypeError, json.JSONDecodeError) as exc:
        raise DomainError("quiver_schema", str(exc)) from exc
    if not isinstance(verts, list):
        raise DomainError("quiver_schema", "vertices must be a list")
    return Quiver.from_names(verts, arrows, cyc)


def vector(q: Quiver, data: Mapping[str, int] | Sequence[int], *, nonnegative: bool = True) -> Vec:
    """Convert a JSON-style mapping (or a full list in vertex order) to a tuple."""
    if isinstance(data, Mapping):
        d = {str(k): val for k, val in data.items()}
        if set(d) != set(q.vertices):
            raise DomainError("vertex_set", "entries must cover exactly the quiver's vertices")
        v = tuple(int(d[x]) for x in q.vertices)
    else:
        if len(data) != q.n:
            raise DomainError("vertex_set", f"expected {q.n} entries, got {len(data)}")
        v = tuple(int(a) for a in data)
    if nonnegative and any(a < 0 for a in v):
        raise DomainError("nonnegative", "dimension vectors have nonnegative entries")
    return v


def vector_json(q: Quiver, v: Vec) -> dict[str, int]:
    return {x: int(a) for x, a in zip(q.vertices, v)}


def _check(q: Quiver, *vs: Vec) -> None:
    for v in vs:
        if len(v) != q.n:
            raise DomainError("vertex_set", f"vector of length {len(v)} on {q.n} vertices")


def euler_form(q: Quiver, a: Vec, b: Vec) -> int:
    _check(q, a, b)
    s = sum(x * y for x, y in zip(a, b))
    return s - sum(a[t] * b[h] for t, h in q.arrows)


def evaluate(sigma: Vec, a: Vec) -> int:
    """sigma(a) = sum sigma(x) a(x)."""
    return sum(s * x for s, x in zip(sigma, a))


def left_weight(q: Quiver, a: Vec) -> Vec:
    """The weight <a, .>."""
    _check(q, a)
    w = list(a)
    for t, h in q.arrows:
        w[h] -= a[t]
    return tuple(w)


def right_weight(q: Quiver, b: Vec) -> Vec:
    """The weight -<., b>."""
    _check(q, b)
    w = [-x for x in b]
    for t, h in q.arrows:
        w[t] += b[h]
    return tuple(w)


def unit(q: Quiver, x: int) -> Vec:
    return tuple(1 if i == x else 0 for i in range(q.n))


def add(a: Vec, b: Vec) -> Vec:
    return tuple(x + y for x, y in zip(a, b))


def sub(a: Vec, b: Vec) -> Vec:
    return tuple(x - y for x, y in zip(a, b))


def scale(p: int, a: Vec) -> Vec:
    return tuple(p * x for x in a)


def leq(a: Vec, b: Vec) -> bool:
    return all(x <= y for x, y in zip(a, b))


def size(a: Vec) -> int:
    return sum(a)


def content_gcd(a: Vec) -> int:
    g = 0
    for x in a:
        g = gcd(g, x)
    return g


def support(a: Vec) -> list[int]:
    return [i for i, x in enumerate(a) if x]


def path_connected(n: int, arrows: Iterable[tuple[int, int]], nodes: Sequence[int]) -> bool:
    """Strong connectivity of the full subquiver on ``nodes`` (a path between any two)."""
    nodes = list(nodes)
    if not nodes:
        return False
    keep = set(nodes)
    fwd: dict[int, set[int]] = {x: set() for x in keep}
    bwd: dict[int, set[int]] = {x: set() for x in keep}
    for t, h in arrows:
        if t in keep and h in keep:
            fwd[t].add(h)
            bwd[h].add(t)

    def reach(adj):
        seen = {nodes[0]}
        stack = [nodes[0]]
        while stack:
            for y in adj[stack.pop()]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        return seen

    return len(reach(fwd)) == len(keep) and len(reach(bwd)) == len(keep)


@dataclass(frozen=True)
class DoubledQuiver:
    base: Quiver
    doubled: Quiver
    tau: Vec

    def vertex(self, x: int, level: int) -> int:
        return 2 * x + level

    def lift(self, v: Vec) -> Vec:
        """alpha-hat (or sigma-hat): the same value on both levels."""
        out = []
        for a in v:
            out += [a, a]
        return tuple(out)


def double_quiver(q: Quiver) -> DoubledQuiver:
    verts = []
    for x in q.vertices:
        verts += [f"{x}/0", f"{x}/1"]
    arrows = [(2 * t, 2 * h + 1) for t, h in q.arrows]
    arrows += [(2 * x, 2 * x + 1) for x in range(q.n)]
    dq = Quiver(tuple(verts), tuple(arrows), False)
    tau = tuple(1 if i % 2 == 0 else -1 for i in range(2 * q.n))
    return DoubledQuiver(q, dq, tau)


def kronecker(arrows: int) -> Quiver:
    """theta(arrows): two vertices with parallel arrows 1 -> 2."""
    return Quiver(("1", "2"), tuple((0, 1) for _ in range(arrows)))
