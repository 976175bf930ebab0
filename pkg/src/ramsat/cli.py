"""Command-line surface.

Every command prints one canonical-JSON certificate on stdout and exits
with 0 (claim holds), 1 (fails, witness embedded), 2 (unknown: a budget ran
out or only sampled evidence was gathered), or >= 3 (usage / IO errors, no
certificate).  Randomized commands refuse to run without an explicit
``--seed`` so certificates never depend on hidden entropy.

Subcommands::

    construct {affine|fq3|gnp}
    verify    {ssat|ssat-direct|observation|kkfree|saturated}
    oracle    {f|g}
    reduce    {chi-to-graph|graph-to-chi}
    search    ssat
    experiment bad-sets
    geom      {plane|fq3-family|incidence}

The CLI itself is a thin single-threaded shell; ``--threads`` is forwarded
to the library operations that shard their enumeration.
"""

from __future__ import annotations

import argparse
import sys
import time
from pathlib import Path
from typing import Optional

from . import constructions, geometry, io, reduction, saturation
from .errors import BudgetError, ParseError
from .graphs import find_clique_mask, iter_bits


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _build_parser() -> _Parser:
    p = _Parser(prog="ramsat", description=__doc__.splitlines()[0])
    top = p.add_subparsers(dest="group", required=True)

    construct = top.add_parser("construct", help="build colorings and random graphs")
    csub = construct.add_subparsers(dest="command", required=True)
    c_affine = csub.add_parser("affine", help="line coloring of K_{q^2}")
    c_affine.add_argument("--q", type=int, required=True)
    c_affine.add_argument("--r", type=int, required=True)
    c_affine.add_argument(
        "--strategy",
        choices=[constructions.PARALLEL_BALANCED, constructions.ROUND_ROBIN],
        default=constructions.PARALLEL_BALANCED,
    )
    c_affine.add_argument("--seed", type=int, default=None)
    c_affine.add_argument("--out", type=Path, default=None)
    c_fq3 = csub.add_parser("fq3", help="slope-family coloring of K_{q^3}")
    c_fq3.add_argument("--q", type=int, required=True)
    c_fq3.add_argument("--r", type=int, required=True)
    c_fq3.add_argument("--out", type=Path, default=None)
    c_gnp = csub.add_parser("gnp", help="seeded G(N, p) sample")
    c_gnp.add_argument("--n", type=int, required=True)
    c_gnp.add_argument("--p", type=float, required=True)
    c_gnp.add_argument("--seed", type=int, required=True)
    c_gnp.add_argument("--out", type=Path, default=None)

    verify = top.add_parser("verify", help="run a decision procedure on a pattern")
    vsub = verify.add_subparsers(dest="command", required=True)
    for name, needs_r in [
        ("ssat", False),
        ("ssat-direct", False),
        ("observation", True),
        ("kkfree", False),
        ("saturated", False),
    ]:
        vp = vsub.add_parser(name)
        vp.add_argument("--in", dest="infile", type=Path, required=True)
        vp.add_argument("--k", type=int, required=True)
        if needs_r:
            vp.add_argument("--r", type=int, required=True)
            vp.add_argument("--threads", type=int, default=1)
        if name in ("ssat", "observation"):
            vp.add_argument("--samples", type=int, default=None)
            vp.add_argument("--seed", type=int, default=None)

    oracle = top.add_parser("oracle", help="brute-force Ramsey quantities")
    osub = oracle.add_subparsers(dest="command", required=True)
    o_g = osub.add_parser("g", help="graph form g(n, s, t)")
    o_g.add_argument("--n", type=int, required=True)
    o_g.add_argument("--s", type=int, required=True)
    o_g.add_argument("--t", type=int, required=True)
    o_g.add_argument("--n-max", type=int, required=True)
    o_f = osub.add_parser("f", help="coloring form f_k(n, s, t)")
    o_f.add_argument("--n", type=int, required=True)
    o_f.add_argument("--s", type=int, required=True)
    o_f.add_argument("--t", type=int, required=True)
    o_f.add_argument("--k", type=int, default=None)
    o_f.add_argument("--n-max", type=int, required=True)

    reduce = top.add_parser("reduce", help="transform between colorings and graphs")
    rsub = reduce.add_subparsers(dest="command", required=True)
    r_c2g = rsub.add_parser("chi-to-graph")
    r_c2g.add_argument("--in", dest="infile", type=Path, required=True)
    r_c2g.add_argument("--s", type=int, required=True)
    r_c2g.add_argument("--t", type=int, required=True)
    r_c2g.add_argument("--tie-break", choices=["nonedge", "edge"], default="nonedge")
    r_c2g.add_argument("--out", type=Path, default=None)
    r_g2c = rsub.add_parser("graph-to-chi")
    r_g2c.add_argument("--in", dest="infile", type=Path, required=True)
    r_g2c.add_argument("--s", type=int, required=True)
    r_g2c.add_argument("--t", type=int, required=True)
    r_g2c.add_argument("--default", dest="default_color", choices=["red", "blue"], default="red")
    r_g2c.add_argument("--out", type=Path, default=None)

    search = top.add_parser("search", help="hunt for small semisaturated patterns")
    ssub = search.add_subparsers(dest="command", required=True)
    s_ssat = ssub.add_parser("ssat")
    s_ssat.add_argument("--r", type=int, required=True)
    s_ssat.add_argument("--k", type=int, required=True)
    s_ssat.add_argument("--n", type=int, required=True)
    s_ssat.add_argument("--node-budget", type=int, default=None)

    experiment = top.add_parser("experiment", help="random-graph counting experiments")
    esub = experiment.add_subparsers(dest="command", required=True)
    e_bad = esub.add_parser("bad-sets")
    e_bad.add_argument("--in", dest="infile", type=Path, default=None)
    e_bad.add_argument("--gnp-n", type=int, default=None)
    e_bad.add_argument("--gnp-p", type=float, default=None)
    e_bad.add_argument("--gnp-seed", type=int, default=None)
    e_bad.add_argument("--n", type=int, required=True)
    e_bad.add_argument("--s", type=int, required=True)
    e_bad.add_argument("--t", type=int, required=True)
    e_bad.add_argument("--mode", choices=["exact", "sampled"], default="exact")
    e_bad.add_argument("--trials", type=int, default=None)
    e_bad.add_argument("--seed", type=int, default=None)
    e_bad.add_argument("--threads", type=int, default=1)

    geom = top.add_parser("geom", help="incidence structures and the incidence bound")
    gsub = geom.add_subparsers(dest="command", required=True)
    g_plane = gsub.add_parser("plane")
    g_plane.add_argument("--q", type=int, required=True)
    g_plane.add_argument("--out", type=Path, default=None)
    g_fam = gsub.add_parser("fq3-family")
    g_fam.add_argument("--q", type=int, required=True)
    g_fam.add_argument("--lambda", dest="lam", type=int, required=True)
    g_fam.add_argument("--out", type=Path, default=None)
    g_inc = gsub.add_parser("incidence")
    g_inc.add_argument("--in", dest="infile", type=Path, required=True)
    g_inc.add_argument("--lines", type=str, required=True, help="comma-separated line indices")
    g_inc.add_argument("--points", type=str, required=True, help="comma-separated point indices")

    return p


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x != ""]
    except ValueError:
        raise _UsageError(f"expected comma-separated integers, got {text!r}") from None


def _emit_artifact(text: str, fmt: str, out: Optional[Path]):
    """Write to --out, or embed in the certificate witness when absent."""
    if out is not None:
        out.write_text(text)
        return None
    return {"format": fmt, "text": text}


def _budget_unknown(claim, params, err, seed=None):
    params = dict(params)
    params["budget"] = str(err)
    return io.Certificate(claim, params, "unknown", None, 0, seed)


def _verdict_of(v: saturation.Verdict, params: dict) -> tuple[str, dict]:
    if v.holds and v.exhaustive:
        return "holds", params
    if not v.holds:
        return "fails", params
    params = dict(params)
    params["budget"] = f"sampled evidence only ({v.checked} samples)"
    return "unknown", params


# -- handlers -----------------------------------------------------------------


def _handle_construct(args) -> io.Certificate:
    if args.command == "affine":
        params = {
            "q": args.q,
            "r": args.r,
            "strategy": args.strategy,
            "out": str(args.out) if args.out else None,
        }
        pattern = constructions.affine_coloring(args.q, args.r, args.strategy, args.seed)
        witness = _emit_artifact(io.dump_colored_graph(pattern), "cg", args.out)
        return io.Certificate(
            "construct-affine", params, "holds", witness,
            checked=pattern.n * (pattern.n - 1) // 2, seed=args.seed,
        )
    if args.command == "fq3":
        params = {"q": args.q, "r": args.r, "out": str(args.out) if args.out else None}
        pattern = constructions.fq3_coloring(args.q, args.r)
        witness = _emit_artifact(io.dump_colored_graph(pattern), "cg", args.out)
        return io.Certificate(
            "construct-fq3", params, "holds", witness,
            checked=pattern.n * (pattern.n - 1) // 2,
        )
    params = {
        "n": args.n, "p": args.p, "generator": constructions.GENERATOR_NAME,
        "out": str(args.out) if args.out else None,
    }
    g = constructions.sample_gnp(constructions.GnpParams(args.n, args.p, args.seed))
    witness = _emit_artifact(io.dump_simple_graph(g), "g", args.out)
    return io.Certificate(
        "construct-gnp", params, "holds", witness,
        checked=g.n * (g.n - 1) // 2, seed=args.seed,
    )


def _handle_verify(args) -> io.Certificate:
    pattern = io.parse_colored_graph(args.infile.read_text())
    claim = f"verify-{args.command}"
    params = {"in": str(args.infile), "k": args.k, "n": pattern.n, "r": pattern.r}
    if args.command == "ssat":
        if args.samples is not None:
            params["samples"] = args.samples
        try:
            v = saturation.is_semisaturated(pattern, args.k, args.samples, args.seed)
        except BudgetError as err:
            return _budget_unknown(claim, params, err, getattr(args, "seed", None))
        verdict, params = _verdict_of(v, params)
        return io.Certificate(claim, params, verdict, v.witness, v.checked,
                              getattr(args, "seed", None))
    if args.command == "ssat-direct":
        try:
            v = saturation.is_semisaturated_direct(pattern, args.k)
        except BudgetError as err:
            return _budget_unknown(claim, params, err)
        verdict, params = _verdict_of(v, params)
        return io.Certificate(claim, params, verdict, v.witness, v.checked)
    if args.command == "observation":
        params["r"] = args.r
        params["threads"] = args.threads
        if args.samples is not None:
            params["samples"] = args.samples
        try:
            v = saturation.check_observation(
                pattern, args.k, args.r, args.threads, args.samples, args.seed
            )
        except BudgetError as err:
            return _budget_unknown(claim, params, err, args.seed)
        verdict, params = _verdict_of(v, params)
        return io.Certificate(claim, params, verdict, v.witness, v.checked, args.seed)
    if args.command == "kkfree":
        full = (1 << pattern.n) - 1
        for i, cls in enumerate(pattern.classes):
            clique = find_clique_mask(cls.rows, full, args.k)
            if clique is not None:
                witness = {
                    "kind": "monochromatic-clique",
                    "color": i + 1,
                    "vertices": list(iter_bits(clique)),
                }
                return io.Certificate(claim, params, "fails", witness, i + 1)
        return io.Certificate(claim, params, "holds", None, pattern.r)
    if args.command == "saturated":
        try:
            v = saturation.is_saturated(pattern, args.k)
        except BudgetError as err:
            return _budget_unknown(claim, params, err)
        verdict, params = _verdict_of(v, params)
        return io.Certificate(claim, params, verdict, v.witness, v.checked)
    raise _UsageError(f"unknown verify command {args.command!r}")


def _handle_oracle(args) -> io.Certificate:
    if args.command == "g":
        claim = "oracle-g"
        params = {"n": args.n, "s": args.s, "t": args.t, "n_max": args.n_max}
        try:
            res = reduction.g_oracle(args.n, args.s, args.t, args.n_max)
        except BudgetError as err:
            return _budget_unknown(claim, params, err)
        witness = {
            "value": res.value,
            "counterexample_n": res.witness_n,
            "counterexample": io.dump_simple_graph(res.witness) if res.witness else None,
        }
        if res.value is None:
            params = dict(params)
            params["budget"] = f"no value up to n_max={args.n_max}"
            return io.Certificate(claim, params, "unknown", witness, res.checked)
        return io.Certificate(claim, params, "holds", witness, res.checked)
    claim = "oracle-f"
    params = {"n": args.n, "s": args.s, "t": args.t, "k": args.k, "n_max": args.n_max}
    try:
        rp = reduction.RamseyParams(args.n, args.s, args.t, args.k)
        res = reduction.f_oracle(rp, args.n_max)
    except BudgetError as err:
        return _budget_unknown(claim, params, err)
    witness = {
        "value": res.value,
        "counterexample": io.dump_ksubset_coloring(res.witness) if res.witness else None,
    }
    if res.value is None:
        params = dict(params)
        params["budget"] = f"no value up to n_max={args.n_max}"
        return io.Certificate(claim, params, "unknown", witness, res.checked)
    return io.Certificate(claim, params, "holds", witness, res.checked)


def _handle_reduce(args) -> io.Certificate:
    if args.command == "chi-to-graph":
        chi = io.parse_ksubset_coloring(args.infile.read_text())
        params = {
            "in": str(args.infile), "s": args.s, "t": args.t,
            "tie_break": args.tie_break, "out": str(args.out) if args.out else None,
        }
        g = reduction.coloring_to_graph(chi, args.s, args.t, args.tie_break)
        witness = _emit_artifact(io.dump_simple_graph(g), "g", args.out)
        return io.Certificate("reduce-chi-to-graph", params, "holds", witness,
                              checked=chi.subset_count)
    chi_g = io.parse_simple_graph(args.infile.read_text())
    params = {
        "in": str(args.infile), "s": args.s, "t": args.t,
        "default": args.default_color, "out": str(args.out) if args.out else None,
    }
    chi = reduction.graph_to_coloring(chi_g, args.s, args.t, args.default_color)
    witness = _emit_artifact(io.dump_ksubset_coloring(chi), "ksc", args.out)
    return io.Certificate("reduce-graph-to-chi", params, "holds", witness,
                          checked=chi.subset_count)


def _handle_search(args) -> io.Certificate:
    claim = "search-ssat"
    params = {"r": args.r, "k": args.k, "n": args.n, "node_budget": args.node_budget}
    res = saturation.ssat_search(args.r, args.k, args.n, args.node_budget)
    if res.status == "found":
        witness = {"kind": "semisaturated-pattern",
                   "pattern": io.dump_colored_graph(res.pattern)}
        return io.Certificate(claim, params, "holds", witness, res.nodes)
    if res.status == "exhausted":
        witness = {"kind": "exhausted-search-space", "nodes": res.nodes}
        return io.Certificate(claim, params, "fails", witness, res.nodes)
    params = dict(params)
    params["budget"] = f"node budget {args.node_budget} exhausted"
    return io.Certificate(claim, params, "unknown", None, res.nodes)


def _handle_experiment(args) -> io.Certificate:
    claim = "experiment-bad-sets"
    if (args.infile is None) == (args.gnp_n is None):
        raise _UsageError("bad-sets needs exactly one of --in or --gnp-n/--gnp-p/--gnp-seed")
    if args.infile is not None:
        g = io.parse_simple_graph(args.infile.read_text())
        source = {"in": str(args.infile)}
    else:
        if args.gnp_p is None or args.gnp_seed is None:
            raise _UsageError("--gnp-n requires --gnp-p and --gnp-seed")
        g = constructions.sample_gnp(
            constructions.GnpParams(args.gnp_n, args.gnp_p, args.gnp_seed)
        )
        source = {"gnp_n": args.gnp_n, "gnp_p": args.gnp_p, "gnp_seed": args.gnp_seed,
                  "generator": constructions.GENERATOR_NAME}
    params = {**source, "n": args.n, "s": args.s, "t": args.t, "mode": args.mode,
              "threads": args.threads}
    if args.mode == "sampled":
        if args.trials is None or args.seed is None:
            raise _UsageError("sampled mode requires --trials and --seed")
        params["trials"] = args.trials
    try:
        res = constructions.count_bad_sets(
            g, args.n, args.s, args.t, args.mode, args.trials, args.seed, args.threads
        )
    except BudgetError as err:
        return _budget_unknown(claim, params, err, args.seed)
    witness = {"mode": res.mode, "value": res.value, "hits": res.hits,
               "space": res.space}
    return io.Certificate(claim, params, "holds", witness, res.checked, args.seed)


def _handle_geom(args) -> io.Certificate:
    if args.command == "plane":
        params = {"q": args.q, "out": str(args.out) if args.out else None}
        inc = geometry.build_affine_plane(args.q)
        witness = _emit_artifact(io.dump_incidence(inc), "inc", args.out)
        return io.Certificate("geom-plane", params, "holds", witness,
                              checked=len(inc.lines))
    if args.command == "fq3-family":
        params = {"q": args.q, "lambda": args.lam,
                  "out": str(args.out) if args.out else None}
        inc = geometry.fq3_line_family(args.q, args.lam)
        witness = _emit_artifact(io.dump_incidence(inc), "inc", args.out)
        return io.Certificate("geom-fq3-family", params, "holds", witness,
                              checked=len(inc.lines))
    inc = io.parse_incidence(args.infile.read_text())
    lines = _int_list(args.lines)
    points = _int_list(args.points)
    params = {"in": str(args.infile), "lines": lines, "points": points}
    count, bound = geometry.incidence_sum(inc, lines, points)
    payload = {"count": count, "bound": bound}
    if count >= bound:
        return io.Certificate("geom-incidence", params, "holds", payload, len(lines))
    return io.Certificate("geom-incidence", params, "fails", payload, len(lines))


_HANDLERS = {
    "construct": _handle_construct,
    "verify": _handle_verify,
    "oracle": _handle_oracle,
    "reduce": _handle_reduce,
    "search": _handle_search,
    "experiment": _handle_experiment,
    "geom": _handle_geom,
}

_EXIT_CODES = {"holds": 0, "fails": 1, "unknown": 2}


def run(argv) -> int:
    """Parse ``argv``, run the command, print its certificate, return the exit code."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as err:
        print(f"usage error: {err}", file=sys.stderr)
        return 3
    start = time.perf_counter()
    try:
        cert = _HANDLERS[args.group](args)
    except _UsageError as err:
        print(f"usage error: {err}", file=sys.stderr)
        return 3
    except (ParseError, OSError) as err:
        print(f"input error: {err}", file=sys.stderr)
        return 4
    except ValueError as err:
        print(f"parameter error: {err}", file=sys.stderr)
        return 3
    cert.wall_time_ms = int((time.perf_counter() - start) * 1000)
    print(cert.to_json())
    return _EXIT_CODES[cert.verdict]


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
