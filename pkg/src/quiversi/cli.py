"""Command line interface: one verb per operation, JSON in and JSON out.

Exit codes: 0 success, 1 violated precondition (DomainError), 2 usage error.
"""
from __future__ import annotations

import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

import click

from . import exceptional, faces, homext, horn, siweights, stability
from .linalg import DEFAULT_PRIME
from .partitions import lr_coefficient, pad, sl_invariant_dim
from .quiver import DomainError, Quiver, euler_form, parse_quiver, vector, vector_json


def _load(text: str):
    if os.path.isfile(text):
        with open(text) as fh:
            return json.load(fh)
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise click.UsageError(f"not JSON and not a file: {text!r}") from exc


def _quiver(path: str) -> Quiver:
    return parse_quiver(_load(path))


def _vec(q: Quiver, text: str, nonnegative: bool = True):
    return vector(q, _load(text), nonnegative=nonnegative)


def _jsonable(x):
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    return x


def _emit(result, echo: dict, seed=None, prime=None) -> None:
    doc = {"result": _jsonable(result), "inputs_echo": _jsonable(echo),
           "provenance": {"seed": seed, "prime": prime}}
    click.echo(json.dumps(doc, sort_keys=True))


def _stream(items: list, summary: dict, echo: dict) -> None:
    for item in items:
        click.echo(json.dumps(_jsonable(item), sort_keys=True))
    click.echo(json.dumps({"summary": _jsonable(summary), "inputs_echo": _jsonable(echo)},
                          sort_keys=True))


def _face_json(q: Quiver, f: faces.FaceDescriptor) -> dict:
    return {"roots": [vector_json(q, g) for g in f.roots], "coefficients": list(f.coefficients),
            "order": list(f.order), "codim": f.codim, "restricted": f.restricted}


class _Group(click.Group):
    def invoke(self, ctx):
        try:
            return super().invoke(ctx)
        except DomainError as exc:
            click.echo(json.dumps({"error": {"precondition": exc.precondition, "message": str(exc)}},
                                  sort_keys=True))
            ctx.exit(1)


@click.group(cls=_Group)
def main():
    """Semi-invariants, stability and cone faces for quiver representations."""
    siweights.convention_self_test()


def quiver_opt(f):
    return click.option("--quiver", "quiver_path", required=True, help="quiver JSON file or string")(f)


def pair_opts(f):
    f = click.option("--beta", required=True, help="dimension vector (JSON mapping or list)")(f)
    f = click.option("--alpha", required=True, help="dimension vector (JSON mapping or list)")(f)
    return quiver_opt(f)


def _pair(quiver_path, alpha, beta):
    q = _quiver(quiver_path)
    a, b = _vec(q, alpha), _vec(q, beta)
    return q, a, b, {"quiver": q.to_json(), "alpha": vector_json(q, a), "beta": vector_json(q, b)}


@main.command()
@pair_opts
def euler(quiver_path, alpha, beta):
    q, a, b, echo = _pair(quiver_path, alpha, beta)
    _emit(euler_form(q, a, b), echo)


@main.command()
@pair_opts
def ext(quiver_path, alpha, beta):
    q, a, b, echo = _pair(quiver_path, alpha, beta)
    _emit(homext.ext_generic(q, a, b), echo)


@main.command()
@pair_opts
def hom(quiver_path, alpha, beta):
    q, a, b, echo = _pair(quiver_path, alpha, beta)
    _emit(homext.hom_generic(q, a, b), echo)


@main.command()
@pair_opts
def embeds(quiver_path, alpha, beta):
    """Does alpha embed in beta?"""
    q, a, b, echo = _pair(quiver_path, alpha, beta)
    _emit(homext.embeds(q, a, b), echo)


@main.command()
@quiver_opt
@click.option("--alpha", required=True)
def schur(quiver_path, alpha):
    q = _quiver(quiver_path)
    a = _vec(q, alpha)
    ok, cls = homext.is_schur_root(q, a)
    _emit({"schur": ok, "class": cls.tag, "self_pairing": cls.self_pairing},
          {"quiver": q.to_json(), "alpha": vector_json(q, a)})


@main.command()
@quiver_opt
@click.option("--alpha", required=True)
def candecomp(quiver_path, alpha):
    q = _quiver(quiver_path)
    a = _vec(q, alpha)
    res = homext.canonical_decomposition(q, a)
    _emit([{"root": vector_json(q, r), "multiplicity": m} for r, m in res],
          {"quiver": q.to_json(), "alpha": vector_json(q, a)})


@main.command("si-dim")
@quiver_opt
@click.option("--alpha", required=True)
@click.option("--sigma", required=True)
def si_dim_cmd(quiver_path, alpha, sigma):
    q = _quiver(quiver_path)
    a, s = _vec(q, alpha), _vec(q, sigma, nonnegative=False)
    _emit(siweights.si_dim(q, a, s),
          {"quiver": q.to_json(), "alpha": vector_json(q, a), "sigma": vector_json(q, s)})


@main.command("circ")
@pair_opts
def circ_cmd(quiver_path, alpha, beta):
    q, a, b, echo = _pair(quiver_path, alpha, beta)
    _emit(siweights.circ(q, a, b), echo)


@main.command("si-series")
@quiver_opt
@click.option("--alpha", required=True)
@click.option("--sigma", required=True)
@click.option("--m-max", type=int, required=True)
def si_series_cmd(quiver_path, alpha, sigma, m_max):
    q = _quiver(quiver_path)
    a, s = _vec(q, alpha), _vec(q, sigma, nonnegative=False)
    _emit(siweights.si_series(q, a, s, m_max),
          {"quiver": q.to_json(), "alpha": vector_json(q, a), "sigma": vector_json(q, s), "m_max": m_max})


@main.command()
@pair_opts
@click.option("--kind", type=click.Choice(["ext", "circ"]), default="ext")
@click.option("--seed", type=int, required=True)
@click.option("--prime", type=int, default=DEFAULT_PRIME)
@click.option("--trials", type=int, default=20)
def oracle(quiver_path, alpha, beta, kind, seed, prime, trials):
    """Randomized checks over a prime field."""
    q, a, b, echo = _pair(quiver_path, alpha, beta)
    echo["kind"] = kind
    if kind == "ext":
        h, e = homext.generic_pair_oracle(q, a, b, trials=trials, seed=seed, prime=prime)
        res = {"hom": h, "ext": e}
    else:
        res = {"det_rank": siweights.det_rank_oracle(q, a, b, samples=trials, seed=seed, prime=prime)}
    _emit(res, echo, seed=seed, prime=prime)


def _stab(quiver_path, alpha, sigma):
    q = _quiver(quiver_path)
    a, s = _vec(q, alpha), _vec(q, sigma, nonnegative=False)
    return q, a, s, {"quiver": q.to_json(), "alpha": vector_json(q, a), "sigma": vector_json(q, s)}


def stab_opts(f):
    f = click.option("--sigma", required=True)(f)
    f = click.option("--alpha", required=True)(f)
    return quiver_opt(f)


@main.command()
@stab_opts
def semistable(quiver_path, alpha, sigma):
    q, a, s, echo = _stab(quiver_path, alpha, sigma)
    res = (stability.is_semistable_dim(q, a, s) if q.is_acyclic
           else stability.stability_via_doubling(q, a, s))
    _emit(res, echo)


@main.command()
@stab_opts
def stable(quiver_path, alpha, sigma):
    q, a, s, echo = _stab(quiver_path, alpha, sigma)
    res = (stability.is_stable_dim(q, a, s) if q.is_acyclic
           else stability.stability_via_doubling(q, a, s, stable=True))
    _emit(res, echo)


@main.command("stable-decomp")
@stab_opts
@click.option("--tau", default=None, help="with tau, the (sigma:tau)-stable decomposition")
def stable_decomp(quiver_path, alpha, sigma, tau):
    q, a, s, echo = _stab(quiver_path, alpha, sigma)
    if tau is None:
        facs = stability.sigma_stable_decomposition(q, a, s).factors
    else:
        t = _vec(q, tau, nonnegative=False)
        echo["tau"] = vector_json(q, t)
        facs = stability.sigma_tau_stable_decomposition(q, a, s, t)
    _emit([{"root": vector_json(q, r), "multiplicity": m} for r, m in facs], echo)


@main.command("hn-type")
@stab_opts
@click.option("--tau", required=True)
def hn_type_cmd(quiver_path, alpha, sigma, tau):
    q, a, s, echo = _stab(quiver_path, alpha, sigma)
    t = _vec(q, tau, nonnegative=False)
    echo["tau"] = vector_json(q, t)
    hn = stability.hn_type(q, a, s, t)
    _emit([{"dim": vector_json(q, d), "slope": sl} for d, sl in hn.blocks], echo)


@main.command("simple-dim")
@quiver_opt
@click.option("--alpha", required=True)
def simple_dim(quiver_path, alpha):
    q = _quiver(quiver_path)
    a = _vec(q, alpha)
    _emit(stability.is_simple_dim(q, a), {"quiver": q.to_json(), "alpha": vector_json(q, a)})


def _faces_worker(args):
    qjson, a, r = args
    q = parse_quiver(qjson)
    return faces.enumerate_faces(q, a, r)


def _faces(q, a, r, jobs):
    # the enumeration is deterministic; extra jobs only run independent codimensions at once
    if jobs > 1 and isinstance(r, list):
        with ProcessPoolExecutor(jobs) as ex:
            return list(ex.map(_faces_worker, [(q.to_json(), a, k) for k in r]))
    return [faces.enumerate_faces(q, a, k) for k in (r if isinstance(r, list) else [r])]


def face_opts(f):
    f = click.option("--stream", is_flag=True, help="one JSON line per face, then a summary")(f)
    f = click.option("--jobs", type=int, default=1)(f)
    f = click.option("--alpha", required=True)(f)
    return quiver_opt(f)


def _report_faces(q, a, found, echo, stream):
    items = [_face_json(q, f) for f in found]
    if stream:
        _stream(items, {"count": len(items)}, echo)
    else:
        _emit(items, echo)


@main.command()
@face_opts
def walls(quiver_path, alpha, jobs, stream):
    q = _quiver(quiver_path)
    a = _vec(q, alpha)
    _report_faces(q, a, faces.walls(q, a), {"quiver": q.to_json(), "alpha": vector_json(q, a)}, stream)


@main.command("faces")
@face_opts
@click.option("--codim", type=int, multiple=True, required=True, help="repeatable")
def faces_cmd(quiver_path, alpha, jobs, stream, codim):
    q = _quiver(quiver_path)
    a = _vec(q, alpha)
    rs = [c + 1 for c in codim]
    found = [f for group in _faces(q, a, rs, jobs) for f in group]
    echo = {"quiver": q.to_json(), "alpha": vector_json(q, a), "codim": list(codim)}
    _report_faces(q, a, found, echo, stream)


@main.command()
@face_opts
def rays(quiver_path, alpha, jobs, stream):
    q = _quiver(quiver_path)
    a = _vec(q, alpha)
    items = []
    for f in faces.extremal_rays(q, a):
        d = _face_json(q, f)
        d["weight"] = vector_json(q, faces.ray_weight(q, a, f))
        items.append(d)
    echo = {"quiver": q.to_json(), "alpha": vector_json(q, a)}
    if stream:
        _stream(items, {"count": len(items)}, echo)
    else:
        _emit(items, echo)


@main.command("ray-series")
@stab_opts
@click.option("--m-max", type=int, required=True)
def ray_series_cmd(quiver_path, alpha, sigma, m_max):
    q, a, s, echo = _stab(quiver_path, alpha, sigma)
    echo["m_max"] = m_max
    _emit(faces.ray_series(q, a, s, m_max), echo)


def _roots(q, text):
    data = _load(text)
    if not isinstance(data, list):
        raise click.UsageError("--roots takes a JSON list of dimension vectors")
    return [vector(q, r) for r in data]


def roots_opts(f):
    f = click.option("--roots", required=True, help="JSON list of dimension vectors")(f)
    return quiver_opt(f)


@main.command("exc-check")
@roots_opts
def exc_check(quiver_path, roots):
    q = _quiver(quiver_path)
    rs = _roots(q, roots)
    _emit(exceptional.is_exceptional_sequence(q, rs),
          {"quiver": q.to_json(), "roots": [vector_json(q, r) for r in rs]})


@main.command()
@roots_opts
@click.option("--i", "index", type=int, required=True, help="1-based position")
@click.option("--direction", type=click.Choice(["left", "right"]), default="left")
def braid(quiver_path, roots, index, direction):
    q = _quiver(quiver_path)
    rs = _roots(q, roots)
    out = exceptional.braid_mutate(q, rs, index, direction)
    _emit([vector_json(q, r) for r in out],
          {"quiver": q.to_json(), "roots": [vector_json(q, r) for r in rs], "i": index,
           "direction": direction})


@main.command()
@roots_opts
@click.option("--side", type=click.Choice(["right", "left"]), default="right")
def perp(quiver_path, roots, side):
    q = _quiver(quiver_path)
    rs = _roots(q, roots)
    emb = exceptional.perp_quiver(q, rs, side)
    _emit({"sub_quiver": emb.sub_quiver.to_json(), "simples": [vector_json(q, e) for e in emb.simples]},
          {"quiver": q.to_json(), "roots": [vector_json(q, r) for r in rs], "side": side})


@main.command()
@roots_opts
def refine(quiver_path, roots):
    q = _quiver(quiver_path)
    rs = _roots(q, roots)
    ref = exceptional.refine_schur_sequence(q, rs)
    _emit({"sequence": [vector_json(q, e) for e in ref.sequence], "blocks": list(ref.blocks)},
          {"quiver": q.to_json(), "roots": [vector_json(q, r) for r in rs]})


def _ints(text: str) -> list[int]:
    data = _load(text)
    if not isinstance(data, list):
        raise click.UsageError(f"expected a JSON list, got {text!r}")
    return [int(x) for x in data]


@main.command()
@click.option("--n", type=int, default=None)
@click.option("--lam", required=True)
@click.option("--mu", required=True, help='a partition, or "same" to reuse --lam')
@click.option("--nu", required=True)
@click.option("--via-quiver", is_flag=True, help="compute as a semi-invariant dimension")
@click.option("--sl", is_flag=True, help="dim (V_lam x V_mu x V_nu)^{SL_n} instead of c^nu_{lam,mu}")
def lr(n, lam, mu, nu, via_quiver, sl):
    first = _ints(lam)
    parts = [first, first if mu == "same" else _ints(mu), _ints(nu)]
    if n is None:
        n = max(len(p) for p in parts)
    if via_quiver and sl:
        raise click.UsageError("--via-quiver and --sl are exclusive")
    parts = [pad(p, n) for p in parts]
    if sl:
        value = sl_invariant_dim(*parts, n)
    else:
        value = horn.lr_via_quiver(*parts, n) if via_quiver else lr_coefficient(*parts)
    echo = {"n": n, "lam": parts[0], "mu": parts[1], "nu": parts[2], "via_quiver": via_quiver, "sl": sl}
    _emit(value, echo)


@main.command("horn")
@click.option("--n", type=int, required=True)
@click.option("--r", type=int, default=None, help="subset size; all sizes when omitted")
@click.option("--mode", type=click.Choice(["nonzero", "minimal"]), default="nonzero")
@click.option("--stream", is_flag=True)
def horn_cmd(n, r, mode, stream):
    sizes = [r] if r is not None else list(range(1, n))
    items = [{"I": list(t.I), "J": list(t.J), "K": list(t.K), "lr_value": t.lr_value}
             for k in sizes for t in horn.horn_triples(n, k, mode)]
    echo = {"n": n, "r": r, "mode": mode}
    if stream:
        _stream(items, {"count": len(items)}, echo)
    else:
        _emit(items, echo)


@main.command("wall-ijk")
@click.option("--n", type=int, required=True)
@click.option("--beta1", required=True, help="vector on T_{n,n,n} (mapping or list)")
def wall_ijk(n, beta1):
    data = horn.triple_flag(n)
    b1 = vector(data.quiver, _load(beta1))
    I, J, K = horn.wall_to_IJK(b1, n)
    _emit({"I": list(I), "J": list(J), "K": list(K)},
          {"n": n, "beta1": vector_json(data.quiver, b1)})


@main.command("product-check")
@click.option("--lam", required=True)
@click.option("--mu", required=True)
@click.option("--nu", required=True)
@click.option("--I", "I", required=True)
@click.option("--J", "J", required=True)
@click.option("--K", "K", required=True)
def product_check(lam, mu, nu, I, J, K):
    parts = [_ints(lam), _ints(mu), _ints(nu)]
    sets = [_ints(I), _ints(J), _ints(K)]
    pc = horn.product_formula_check(*parts, *sets)
    _emit({"lhs": pc.lhs, "rhs_star": pc.rhs_star, "rhs_sharp": pc.rhs_sharp, "equal": pc.equal},
          {"lam": parts[0], "mu": parts[1], "nu": parts[2], "I": sets[0], "J": sets[1], "K": sets[2]})


def _scan_worker(args):
    n, bound, jumps, shard = args
    return horn.scan_properties(n, bound, check_jumps=jumps, shard=shard)


@main.command()
@click.option("--n", type=int, required=True)
@click.option("--size-bound", type=int, required=True)
@click.option("--jobs", type=int, default=1)
@click.option("--no-jumps", is_flag=True, help="skip the face-codimension jump checks")
def scan(n, size_bound, jobs, no_jumps):
    if jobs > 1:
        tasks = [(n, size_bound, not no_jumps, (k, jobs)) for k in range(jobs)]
        with ProcessPoolExecutor(jobs) as ex:
            reports = list(ex.map(_scan_worker, tasks))
        rep = reports[0]
        for other in reports[1:]:
            rep = rep.merge(other)
    else:
        rep = horn.scan_properties(n, size_bound, check_jumps=not no_jumps)
    _emit({"triples": rep.triples, "nonzero": rep.nonzero,
           "saturation_violations": rep.saturation_violations,
           "fulton_violations": rep.fulton_violations,
           "jump_violations": rep.jump_violations,
           "total_violations": rep.total_violations},
          {"n": n, "size_bound": size_bound, "jumps": not no_jumps})


def run(argv: list[str] | None = None) -> int:
    try:
        # without standalone mode click hands back ctx.exit codes as the return value
        rv = main.main(args=argv, prog_name="quiversi", standalone_mode=False)
    except click.exceptions.Exit as exc:
        return exc.exit_code
    except click.UsageError as exc:
        exc.show()
        return 2
    except click.Abort:
        return 2
    return rv if isinstance(rv, int) else 0


if __name__ == "__main__":  # pragma: no cover
    sys.exit(run())
