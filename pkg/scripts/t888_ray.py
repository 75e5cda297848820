"""Stable decomposition and ray series for the extremal-ray weight on T_{8,8,8}."""
import argparse
import json
import time
from pathlib import Path

from quiversi.faces import face_of_weight, ray_series
from quiversi.horn import triple_flag
from quiversi.stability import sigma_stable_decomposition

VECTORS = Path(__file__).resolve().parent.parent / "tests" / "corpus" / "t888-vectors.json"


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--m-max", type=int, default=3)
    args = ap.parse_args()
    t = triple_flag(8)
    sigma = tuple(json.loads(VECTORS.read_text())["ray_sigma"])

    start = time.perf_counter()
    dec = sigma_stable_decomposition(t.quiver, t.beta, sigma)
    print(f"{len(dec.factors)} distinct stable factors ({time.perf_counter() - start:.1f}s)")
    for root, mult in dec.factors:
        xs, ys, zs, c = t.arms(root)
        print(f"  {mult} x  x:{xs} y:{ys} z:{zs} center:{c}")

    face = face_of_weight(t.quiver, t.beta, sigma)
    print(f"face roots r = {face.r} on {t.quiver.n} vertices (a ray when r = n - 1)")

    start = time.perf_counter()
    series = ray_series(t.quiver, t.beta, sigma, args.m_max)
    print(f"dim SI_(m sigma), m = 0..{args.m_max}: {series} ({time.perf_counter() - start:.1f}s)")


if __name__ == "__main__":
    main()
