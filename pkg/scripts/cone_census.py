"""Face counts, extremal ray weights and ray series for the small cone examples."""
import argparse
import json
from pathlib import Path

from quiversi.faces import enumerate_faces, extremal_rays, ray_series, ray_weight
from quiversi.horn import triple_flag
from quiversi.quiver import parse_quiver
from quiversi.stability import indivisible

CORPUS = Path(__file__).resolve().parent.parent / "tests" / "corpus"


def load(name):
    return parse_quiver(json.loads((CORPUS / f"{name}.json").read_text()))


def census(label, q, a, m_max):
    print(f"{label}: alpha = {a}")
    for r in range(1, q.n):
        print(f"  r = {r}: {len(enumerate_faces(q, a, r))} faces")
    for f in extremal_rays(q, a):
        w = indivisible(ray_weight(q, a, f))
        print(f"  ray {w}: series {ray_series(q, a, w, m_max)}  roots {list(f.roots)}")


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--m-max", type=int, default=3)
    ap.add_argument("--with-t333", action="store_true", help="also count T333 faces (slower)")
    args = ap.parse_args()
    census("octahedron", load("octahedron"), (1, 1, 1, 1, 2), args.m_max)
    census("hexagon", load("hexagon"), (1, 1, 1, 3), args.m_max)
    if args.with_t333:
        t = triple_flag(3)
        print("T333 staircase:")
        for r in (2, 3):
            print(f"  r = {r}: {len(enumerate_faces(t.quiver, t.beta, r))} faces")


if __name__ == "__main__":
    main()
