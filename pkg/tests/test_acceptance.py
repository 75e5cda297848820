"""The eight acceptance criteria, one test each, with a PASS/FAIL line per criterion.

The lines are printed inline under `-s` and collected into the terminal summary
by the hook in conftest.py.
"""
import itertools
import json
import time
from fractions import Fraction

import pytest

from conftest import CORPUS, load_quiver
from samplers import SMALL, perpendicular_pairs, product_law_violations, random_pairs
from quiversi.exceptional import perp_quiver
from quiversi.faces import enumerate_faces, extremal_rays, face_of_weight, ray_series, ray_weight
from quiversi.homext import embeds, ext_generic, generic_pair_oracle, hom_generic, is_schur
from quiversi.horn import (lr_via_quiver, product_formula_check, scan_properties, triple_flag,
                           wall_inequality)
from quiversi.partitions import lr_coefficient
from quiversi.quiver import euler_form, evaluate, left_weight, scale
from quiversi.siweights import circ, det_rank_oracle
from quiversi.stability import (bracket_scale, is_semistable_dim, sigma_stable_decomposition,
                                verify_decomposition)

T888 = json.loads((CORPUS / "t888-vectors.json").read_text())
OCTA, HEXA = (1, 1, 1, 1, 2), (1, 1, 1, 3)
SQ_SIGMA = (1, -1, 1, -1)
LINES = []


def report(k, ok, detail):
    line = f"criterion {k}: {'PASS' if ok else 'FAIL'}  {detail}"
    LINES.append(line)
    print(line)


@pytest.fixture(scope="module")
def t888():
    return triple_flag(8)


@pytest.fixture(scope="module")
def t888_decomposition(t888):
    return sigma_stable_decomposition(t888.quiver, t888.beta, tuple(T888["ray_sigma"]))


def arm_orbit(face, arms):
    return {frozenset(tuple(g[p] for p in perm) + g[arms:] for g in face)
            for perm in itertools.permutations(range(arms))}


def orbits(faces, arms):
    out = set()
    for f in faces:
        out |= arm_orbit(f, arms)
    return out


# 1 ---------------------------------------------------------------------------

def test_criterion_1_lr_golden_values():
    start = time.perf_counter()
    lam, nu = (8, 4, 4, 2, 2, 0, 0, 0), (10, 8, 7, 4, 3, 3, 3, 2)
    pc = product_formula_check(lam, lam, nu, (1, 3, 5, 7, 8), (1, 3, 5, 7, 8), (1, 2, 4, 5, 6))
    got = (lr_coefficient(lam, lam, nu), lr_coefficient((8, 4, 2, 0, 0), (8, 4, 2, 0, 0), (10, 8, 4, 3, 3)),
           lr_coefficient((4, 2, 0), (4, 2, 0), (7, 3, 2)), pc.equal)
    elapsed = time.perf_counter() - start
    ok = got == (10, 5, 2, True) and (pc.lhs, pc.rhs_star, pc.rhs_sharp) == (10, 5, 2) and elapsed < 5
    report(1, ok, f"c = {got[:3]}, product equal = {got[3]}, {elapsed:.2f}s")
    assert ok


# 2 ---------------------------------------------------------------------------

def test_criterion_2_triple_flag_identity():
    start = time.perf_counter()
    parts = list(itertools.combinations_with_replacement(range(4, -1, -1), 3))
    bad = [(l, m, n) for l, m, n in itertools.product(parts, repeat=3)
           if lr_via_quiver(l, m, n, 3) != lr_coefficient(l, m, n)]
    t = triple_flag(3, 3, 2)
    t332 = circ(t.quiver, t.vec((1, 3), (1, 2), (2,), 4), t.vec((1, 2), (0, 2), (1,), 3))
    elapsed = time.perf_counter() - start
    ok = not bad and t332 == 1 and elapsed < 600
    report(2, ok, f"{len(parts) ** 3} triples, {len(bad)} mismatches, T332 value {t332}, {elapsed:.1f}s")
    assert ok


# 3 ---------------------------------------------------------------------------

def test_criterion_3_cone_census():
    start = time.perf_counter()
    octa, hexa = load_quiver("octahedron"), load_quiver("hexagon")
    ow, of, orays = (enumerate_faces(octa, OCTA, r) for r in (2, 3, 4))
    hw, hrays = enumerate_faces(hexa, HEXA, 2), extremal_rays(hexa, HEXA)
    sets = lambda fs: {frozenset(f.roots) for f in fs}
    checks = {
        "octahedron walls": sets(ow) == orbits([[(0, 1, 1, 1, 2), (1, 0, 0, 0, 0)],
                                                [(1, 0, 0, 0, 1), (0, 1, 1, 1, 1)]], 4) and len(ow) == 8,
        "octahedron 2-faces": sets(of) == orbits([[(1, 0, 0, 0, 1), (0, 1, 0, 1, 1), (0, 0, 1, 0, 0)]], 4)
        and len(of) == 12,
        "octahedron rays": sets(orays) == orbits([[(1, 0, 0, 0, 1), (0, 1, 0, 0, 1), (0, 0, 0, 1, 0),
                                                   (0, 0, 1, 0, 0)]], 4) and len(orays) == 6,
        "hexagon walls": sets(hw) == orbits([[(0, 1, 1, 3), (1, 0, 0, 0)], [(1, 0, 0, 2), (0, 1, 1, 1)]], 3)
        and len(hw) == 6,
        "hexagon rays": sets(hrays) == orbits([[(1, 0, 0, 2), (0, 1, 0, 1), (0, 0, 1, 0)]], 3)
        and len(hrays) == 6,
    }
    elapsed = time.perf_counter() - start
    ok = all(checks.values()) and elapsed < 300
    report(3, ok, f"counts {len(ow)}/{len(of)}/{len(orays)} and {len(hw)}/{len(hrays)}, "
                  f"failing: {[k for k, v in checks.items() if not v]}, {elapsed:.1f}s")
    assert ok


# 4 ---------------------------------------------------------------------------

TRACE = (1, 1, 1, 1, 1, 1, -1, -1, -1)


def normalized(vec):
    """Project a linear form on (lam, mu, nu) off the trace form, which vanishes on triples."""
    k = Fraction(sum(a * b for a, b in zip(vec, TRACE)), 9)
    return tuple(Fraction(a) - k * t for a, t in zip(vec, TRACE))


def ijk_form(I, J, K):
    """sum_I lam + sum_J mu - sum_K nu <= 0."""
    return normalized(tuple(int(i in I) for i in (1, 2, 3)) + tuple(int(j in J) for j in (1, 2, 3))
                      + tuple(-int(k in K) for k in (1, 2, 3)))


def monotone_form(block, i):
    """p_{i+1} - p_i <= 0 for p = lam, mu or nu (block 0, 1, 2)."""
    v = [0] * 9
    v[3 * block + i] = 1
    v[3 * block + i - 1] = -1
    return normalized(tuple(v))


def test_criterion_4_t333_walls():
    start = time.perf_counter()
    t = triple_flag(3)
    listed = [((1, 2), (2, 3), (1, 2)), ((2, 3), (1, 2), (1, 2)), ((2, 3), (2, 3), (2, 3)),
              ((1, 3), (1, 3), (1, 2)), ((1, 3), (2, 3), (1, 3)), ((2, 3), (1, 3), (1, 3)),
              ((1,), (3,), (1,)), ((3,), (1,), (1,)), ((3,), (3,), (3,)),
              ((2,), (2,), (1,)), ((2,), (3,), (2,)), ((3,), (2,), (2,))]
    expected = {ijk_form(*w) for w in listed} | {monotone_form(b, i) for b in range(3) for i in (1, 2)}
    found = set()
    walls = enumerate_faces(t.quiver, t.beta, 2)
    for f in walls:
        subs = [scale(c, g) for g, c in zip(f.roots, f.coefficients)
                if embeds(t.quiver, scale(c, g), t.beta)]
        a, b, c = wall_inequality(subs[0], 3)
        found.add(normalized(a + b + c))
    elapsed = time.perf_counter() - start
    ok = len(walls) == 18 and found == expected and elapsed < 600
    report(4, ok, f"{len(walls)} walls, {len(found & expected)} of 18 listed inequalities matched, "
                  f"{elapsed:.1f}s")
    assert ok


# 5 ---------------------------------------------------------------------------

def t888_listed(t):
    """The 21-root decomposition, rows (x arm; y arm; center; z arm)."""
    big = [((1, 1, 1, 1, 2, 2, 2), (0, 0, 1, 1, 1, 2, 2), 3, (0, 0, 1, 1, 1, 2, 2)),
           ((0, 0, 0, 0, 1, 1, 1), (0, 0, 1, 1, 1, 1, 1), 1, (0,) * 7),
           ((0, 0, 0, 0, 1, 1, 1), (0,) * 7, 1, (0, 0, 1, 1, 1, 1, 1)),
           ((0,) * 7, (0, 0, 0, 0, 0, 1, 1), 1, (0, 0, 1, 1, 1, 1, 1)),
           ((0,) * 7, (0, 0, 1, 1, 1, 1, 1), 1, (0, 0, 0, 0, 0, 1, 1)),
           ((0, 0, 0, 0, 1, 1, 1), (0, 0, 0, 0, 0, 1, 1), 1, (0, 0, 0, 0, 0, 1, 1))]
    out = {t.vec(x, y, z, c): 1 for x, y, c, z in big}
    simples = {"x": {2: 1, 3: 2, 4: 3, 6: 1, 7: 2}, "y": {1: 1, 2: 2, 4: 1, 5: 2, 7: 1},
               "z": {1: 1, 2: 2, 4: 1, 5: 2, 7: 1}}
    for arm, mult in simples.items():
        for i, m in mult.items():
            out[t.unit(arm, i)] = m
    return out


def test_criterion_5_stable_decompositions(t888, t888_decomposition):
    start = time.perf_counter()
    sq = load_quiver("square")
    d1 = dict(sigma_stable_decomposition(sq, (5, 4, 3, 4), SQ_SIGMA).factors)
    d2 = dict(sigma_stable_decomposition(sq, (1, 4, 5, 2), SQ_SIGMA).factors)
    square_ok = (d1 == {(1, 1, 0, 0): 1, (4, 3, 3, 4): 1}
                 and d2 == {(0, 0, 1, 1): 1, (1, 2, 2, 1): 1, (0, 1, 1, 0): 2})
    dec = dict(t888_decomposition.factors)
    face = face_of_weight(t888.quiver, t888.beta, tuple(T888["ray_sigma"]))
    elapsed = time.perf_counter() - start
    t888_ok = dec == t888_listed(t888) and len(dec) == 21
    ray_ok = face.r == 21 and t888.quiver.n == 22 and face.r == t888.quiver.n - 1
    ok = square_ok and t888_ok and ray_ok and elapsed < 1200
    report(5, ok, f"square {square_ok}, T888 {len(dec)} roots match {t888_ok}, face r = {face.r}, "
                  f"{elapsed:.1f}s")
    assert ok


# 6 ---------------------------------------------------------------------------

def _ray_series_table(t888):
    octa, hexa = load_quiver("octahedron"), load_quiver("hexagon")
    table = {"T888": [ray_series(t888.quiver, t888.beta, tuple(T888["ray_sigma"]), 3)]}
    table["octahedron"] = [ray_series(octa, OCTA, ray_weight(octa, OCTA, f), 3)
                           for f in extremal_rays(octa, OCTA)]
    table["hexagon"] = [ray_series(hexa, HEXA, ray_weight(hexa, HEXA, f), 3)
                        for f in extremal_rays(hexa, HEXA)]
    return table


@pytest.fixture(scope="module")
def ray_table(t888):
    return _ray_series_table(t888)


@pytest.mark.xfail(strict=True, reason="hexagon rays carry the series [1, 2, 3, 4], not all ones; "
                                       "see the ledger and test_criterion_6_measured_values")
def test_criterion_6_ray_multiplicities(ray_table):
    parts = {
        "T888": ray_table["T888"] == [[1, 2, 3, 4]],
        "octahedron": all(s == [1, 1, 1, 1] for s in ray_table["octahedron"]),
        "hexagon": all(s == [1, 1, 1, 1] for s in ray_table["hexagon"]),
    }
    ok = all(parts.values())
    report(6, ok, f"T888 {ray_table['T888'][0]}, octahedron all ones {parts['octahedron']}, "
                  f"hexagon series {sorted(set(map(tuple, ray_table['hexagon'])))}")
    assert ok


def test_criterion_6_measured_values(ray_table):
    assert ray_table["T888"] == [[1, 2, 3, 4]]
    assert ray_table["octahedron"] == [[1, 1, 1, 1]] * 6
    assert ray_table["hexagon"] == [[1, 2, 3, 4]] * 6


def test_hexagon_ray_degree_one_by_determinants():
    """Independent check of the hexagon value: sigma = <gamma, .> for a dimension vector gamma."""
    hexa = load_quiver("hexagon")
    for f in extremal_rays(hexa, HEXA):
        w = ray_weight(hexa, HEXA, f)
        gamma = next(g for g in itertools.product(range(8), repeat=4) if left_weight(hexa, g) == w)
        assert det_rank_oracle(hexa, gamma, HEXA, samples=10, seed=2) == 2


# 7 ---------------------------------------------------------------------------

def test_criterion_7_oracle_equivalence():
    start = time.perf_counter()
    pairs = [p for seed in (1, 2, 3) for p in random_pairs(40, seed)]
    assert all(q.n <= 4 for q, _, _ in pairs)
    ext_bad = []
    for q, a, b in pairs:
        e = ext_generic(q, a, b)
        if all(generic_pair_oracle(q, a, b, trials=3, seed=s)[1] != e for s in (0, 1, 2)):
            ext_bad.append((q.digest, a, b))
        assert hom_generic(q, a, b) == euler_form(q, a, b) + e
    perp = perpendicular_pairs(60, seed=7)
    circ_bad = []
    for q, a, b in perp:
        c = circ(q, a, b)
        if all(det_rank_oracle(q, a, b, samples=c + 3, seed=s) != c for s in (0, 1, 2)):
            circ_bad.append((q.digest, a, b))
    elapsed = time.perf_counter() - start
    ok = len(pairs) >= 100 and len(perp) >= 50 and not ext_bad and not circ_bad
    report(7, ok, f"ext {len(pairs)} pairs, {len(ext_bad)} persistent disagreements; "
                  f"circ {len(perp)} pairs, {len(circ_bad)} persistent disagreements, {elapsed:.1f}s")
    assert ok


# 8 ---------------------------------------------------------------------------

def _corpus_circ_pairs():
    t = triple_flag(3, 3, 2)
    pairs = [(t.quiver, t.vec((1, 3), (1, 2), (2,), 4), t.vec((1, 2), (0, 2), (1,), 3))]
    quivers = SMALL + [load_quiver(n) for n in ("square", "octahedron", "hexagon", "theta3")]
    for q in quivers:
        for a, b in itertools.product(itertools.product(range(2), repeat=q.n), repeat=2):
            if any(a) and any(b) and euler_form(q, a, b) == 0 and circ(q, a, b) == 1:
                pairs.append((q, a, b))
    return pairs


def _decomposition_cases():
    sq = load_quiver("square")
    cases = [(sq, SQ_SIGMA, a) for a in itertools.product(range(4), repeat=4)
             if any(a) and evaluate(SQ_SIGMA, a) == 0 and is_semistable_dim(sq, a, SQ_SIGMA)]
    octa = load_quiver("octahedron")
    for f in extremal_rays(octa, OCTA):
        cases.append((octa, ray_weight(octa, OCTA, f), OCTA))
    return cases


def _embedding_cases():
    t = triple_flag(3)
    cases = [(t.quiver, [t.vec((1, 1), (0, 0), (0, 0), 1)], side) for side in ("right", "left")]
    for name, a in (("octahedron", OCTA), ("hexagon", HEXA)):
        q = load_quiver(name)
        for g in itertools.product(*(range(x + 1) for x in a)):
            if any(g) and euler_form(q, g, g) == 1 and is_schur(q, g):
                cases.append((q, [g], "right"))
    return cases


def _embedding_violations(q, seq, side):
    emb = perp_quiver(q, seq, side)
    sq = emb.sub_quiver
    basis = [tuple(int(i == j) for j in range(sq.n)) for i in range(sq.n)]
    bad = [("euler", b, c) for b, c in itertools.product(basis, repeat=2)
           if euler_form(q, emb.embed(b), emb.embed(c)) != euler_form(sq, b, c)]
    samples = [(b, c) for b, c in itertools.product(itertools.product(range(2), repeat=sq.n), repeat=2)
               if any(b) and any(c)][:40]
    for b, c in samples:
        B, C = emb.embed(b), emb.embed(c)
        if ext_generic(q, B, C) != ext_generic(sq, b, c):
            bad.append(("ext", b, c))
        if is_schur(q, B) != is_schur(sq, b):
            bad.append(("schur", b))
        if euler_form(sq, b, c) == 0 and circ(q, B, C) != circ(sq, b, c):
            bad.append(("circ", b, c))
    return bad, len(samples)


def test_criterion_8_property_suites():
    start = time.perf_counter()
    counts = {}
    scans = [scan_properties(n, 6) for n in (2, 3)]
    counts["saturation/Fulton scans"] = sum(len(r.saturation_violations) + len(r.fulton_violations)
                                            for r in scans)
    fulton = _corpus_circ_pairs()
    counts["generalized Fulton"] = sum(1 for q, a, b in fulton for p in (1, 2, 3) for r in (1, 2, 3)
                                       if circ(q, scale(p, a), scale(r, b)) != 1)
    cases = _decomposition_cases()
    counts["product identity"] = sum(len(product_law_violations(q, a, s, 2)) for q, s, a in cases)
    sub_bad = scale_bad = 0
    for q, s, a in cases:
        dec = sigma_stable_decomposition(q, a, s)
        if verify_decomposition(q, dec, a):
            sub_bad += 1
        pieces = [r for r, c in dec.factors for _ in range(c)]
        for k in range(1, len(pieces)):
            for part in set(itertools.combinations(pieces, k)):
                total = tuple(map(sum, zip(*part)))
                if dict(sigma_stable_decomposition(q, total, s).factors) != {r: part.count(r) for r in part}:
                    sub_bad += 1
        for p in (2, 3):
            if sum(a) * p <= 18 and sorted(sigma_stable_decomposition(q, scale(p, a), s).factors) \
                    != bracket_scale(q, dec, p):
                scale_bad += 1
    counts["subsum stability"] = sub_bad
    counts["scaling"] = scale_bad
    emb_bad, emb_samples = 0, 0
    embeddings = _embedding_cases()
    for q, seq, side in embeddings:
        bad, n = _embedding_violations(q, seq, side)
        emb_bad += len(bad)
        emb_samples += n
    counts["embedding identities"] = emb_bad
    counts["jump bounds"] = sum(len(scan_properties(n, 6).jump_violations) for n in (2, 3, 4))
    elapsed = time.perf_counter() - start
    ok = not any(counts.values())
    report(8, ok, f"violations {counts}; {len(fulton)} circ=1 pairs, {len(cases)} decompositions, "
                  f"{len(embeddings)} embeddings, {elapsed:.1f}s")
    assert ok


@pytest.mark.slow
def test_criterion_8_t888_wall_pair_fulton():
    # the (3, 3) entry alone takes several minutes; kept out of the main suite so it can be deselected
    start = time.perf_counter()
    q = load_quiver("t888")
    a, b = tuple(T888["wall_beta1"]), tuple(T888["wall_beta2"])
    values = {(p, r): circ(q, scale(p, a), scale(r, b)) for p in (1, 2, 3) for r in (1, 2, 3)}
    ok = set(values.values()) == {1}
    report(8, ok, f"T888 wall pair generalized Fulton, p, q in 1..3: {values}, "
                  f"{time.perf_counter() - start:.1f}s")
    assert ok
