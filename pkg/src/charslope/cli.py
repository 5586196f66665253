"""Command-line front end.

Exit status: 0 on success, 2 for bad input, 3 when shipped data
contradicts itself.
"""

from __future__ import annotations

import argparse
import json
import sys
from decimal import Decimal, InvalidOperation

from . import characterisation as ch
from . import fixtures
from .census import Rule, format_report, load_census, run_pipeline
from .errors import CharSlopeError, InconsistentRecord
from .geodesics import q_frak
from .slopes import Slope
from .surgery import (Opaque, Unknot, classify_cable_surgery, classify_torus_knot_surgery,
                      cosmetic_obstruction)
from .volumes import WHITEHEAD_VOLUME, format_stage_table, stage_table

EXIT_OK, EXIT_INPUT, EXIT_INCONSISTENT = 0, 2, 3


class InputError(Exception):
    pass


def _emit(args, obj, text):
    if args.format == "json":
        print(json.dumps(obj, indent=2))
    else:
        print(text)


def _text_table(head, rows):
    rows = [[str(c) for c in r] for r in rows]
    w = [max([len(h)] + [len(r[i]) for r in rows]) for i, h in enumerate(head)]
    line = lambda cells: "  ".join(c.rjust(x) for c, x in zip(cells, w))
    return "\n".join([line(head), line(["-" * x for x in w])] + [line(r) for r in rows])


# ------------------------------------------------------------------ bound

def _knot_class(args):
    kind = args.kind
    if kind == "knot":
        return ch.HyperbolicKnot(args.systole)
    if kind == "satellite":
        return ch.SatelliteByHyperbolicPattern(args.systole, args.winding)
    if kind == "whitehead":
        return ch.WhiteheadDoubleInput(args.clasp, args.twist, args.systole)
    return ch.TwistKnotInput(1 if args.sign == "+" else -1, args.t, args.systole)


def cmd_bound(args):
    k = _knot_class(args)
    stage = getattr(args, "stage", None)
    if args.slope is not None:
        s = Slope.parse(args.slope)
        cert = ch.is_slope_certified(k, s.p, s.q, stage=stage, data_dir=args.data_dir)
        text = f"{s}: {'certified' if cert.certified else 'not certified'} ({cert.reason})"
        _emit(args, cert.to_json(), text)
    else:
        rep = ch.characterising_bound(k, stage=stage, data_dir=args.data_dir)
        _emit(args, rep.to_json(), rep.describe())
    return EXIT_OK


# ----------------------------------------------------------------- stages

def _stage_rows(args):
    data = fixtures.stage_data(args.data_dir)
    base = args.base if args.base is not None else data.get("base_volume", str(WHITEHEAD_VOLUME))
    if args.boundaries is not None:
        bounds = [b.strip() for b in args.boundaries.split(",") if b.strip()]
        if not bounds:
            raise InputError("empty boundary list")
        try:
            [Decimal(b) for b in bounds]
        except InvalidOperation:
            raise InputError(f"bad boundary list {args.boundaries!r}") from None
        counts = None
    else:
        bounds = [s["boundary"] for s in data["stages"]]
        counts = [s["a_k"] for s in data["stages"]]
    return stage_table(bounds, base, counts)


def _listed_through(rows, census):
    vols = [r.volume_value for r in census]
    return [sum(1 for v in vols if v <= Decimal(r.boundary_volume)) for r in rows]


def cmd_stages(args):
    rows = _stage_rows(args)
    listed = None
    if args.census or args.boundaries is None:
        listed = _listed_through(rows, load_census(args.census or fixtures.census_path(args.data_dir)))
    obj = [r.to_json() | ({"listed_through_boundary": listed[i]} if listed else {}) for i, r in enumerate(rows)]
    _emit(args, obj, format_stage_table(rows, listed))
    return EXIT_OK


# -------------------------------------------------------------- eliminate

def _run_elimination(args):
    census = load_census(args.census or fixtures.census_path(args.data_dir))
    if getattr(args, "vmax", None) is not None:
        cap = args.vmax
    else:
        k = getattr(args, "stage", None) or 8
        stages = fixtures.stage_data(args.data_dir)["stages"]
        match = [s for s in stages if s["k"] == k]
        if not match:
            raise InputError(f"no stage {k}")
        cap = match[0]["boundary"]
    return census, run_pipeline(census, cap)


def cmd_eliminate(args):
    census, rep = _run_elimination(args)
    _emit(args, rep.to_json(), format_report(rep, census))
    return EXIT_OK


# --------------------------------------------------------------- classify

def _companion(name):
    if name in (None, "U", "unknot"):
        return Unknot()
    return Opaque(name)


def cmd_classify(args):
    if args.kind == "torus":
        d = classify_torus_knot_surgery(args.r, args.s, args.p, args.q)
        _emit(args, {"manifold": str(d)}, str(d))
    elif args.kind == "cable":
        d = classify_cable_surgery(args.r, args.s, args.p, args.q, _companion(args.companion))
        _emit(args, {"manifold": str(d)}, str(d))
    else:
        ok = cosmetic_obstruction(args.p, args.q, args.s)
        _emit(args, {"obstructed": ok}, "obstructed" if ok else "not obstructed")
    return EXIT_OK


def cmd_brakes(args):
    pair = ch.brakes_pair(args.q, args.m, args.n)
    text = "\n".join([
        f"K  = {pair.knot}",
        f"K' = {pair.knot_prime}",
        f"1/{args.q} surgery on either: E({pair.witness.pieces[0]}) u E({pair.witness.pieces[1]}), "
        f"gluing {pair.witness.gluing}",
        f"witnesses agree: {pair.witness == pair.witness_prime}",
        f"non-characterising: {pair.non_characterising}",
    ])
    _emit(args, pair.to_json(), text)
    return EXIT_OK


# ----------------------------------------------------------------- tables

def cmd_tables(args):
    if args.which == "qfrak":
        table = fixtures.twist_systoles(args.data_dir) if args.fixture == "twist" else \
            fixtures.double_systoles(args.data_dir)
        key = "sign*t" if args.fixture == "twist" else "|n|"
        rows = []
        for k, r in table.items():
            q = q_frak(float(r.systole))
            rows.append({key: k, "systole": r.systole, "q_frak": q, "reference_q": r.reference_q})
        bad = [r for r in rows if r["q_frak"] != r["reference_q"]]
        _emit(args, rows, _text_table(list(rows[0]), [list(r.values()) for r in rows]))
        if bad:
            print(f"{len(bad)} rows disagree with the reference column", file=sys.stderr)
            return EXIT_INCONSISTENT
        return EXIT_OK
    if args.which == "stages":
        args.boundaries, args.base, args.census = None, None, None
        return cmd_stages(args)
    census, rep = _run_elimination(args)
    by_name = {r.name: r for r in census}
    rows = []
    for name, v in rep.verdicts.items():
        if v.rule not in (Rule.TORSION, Rule.LINKING, Rule.BERGE_GABAI):
            continue
        r = by_name[name]
        link = r.link.link_name if r.link else ""
        fill = "; ".join(", ".join(f"({a},{b})" for a, b in c) for c in r.solid_torus_fillings
                         if len(set(c)) >= 2) if v.rule is Rule.BERGE_GABAI else ""
        rows.append({"name": name, "volume": r.volume, "h1": str(r.h1), "verdict": v.rule.value,
                     "link": link, "|w|": v.linking_number or "", "solid_torus_fillings": fill})
    rows.sort(key=lambda d: (Decimal(d["volume"]), d["name"]))
    _emit(args, rows, _text_table(list(rows[0]), [list(r.values()) for r in rows]) if rows else "(none)")
    return EXIT_OK


# ----------------------------------------------------------------- parser

def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "table"), default=argparse.SUPPRESS)
    common.add_argument("--data-dir", default=argparse.SUPPRESS,
                        help=f"fixture directory (default: ${fixtures.ENV_VAR} or the bundled data)")

    top = argparse.ArgumentParser(prog="charslope", parents=[common],
                                  description="Characterising-slope bounds, census elimination and surgery tables.")
    sub = top.add_subparsers(dest="command", required=True)

    bound = sub.add_parser("bound", help="denominator threshold for a knot family")
    bsub = bound.add_subparsers(dest="kind", required=True)
    slope_help = "also decide this slope p/q (write --slope=-p/q for negatives)"
    b = bsub.add_parser("knot", parents=[common], help="hyperbolic knot")
    b.add_argument("--systole", type=float, required=True)
    b.add_argument("--slope")
    b = bsub.add_parser("satellite", parents=[common], help="satellite with hyperbolic pattern")
    b.add_argument("--systole", type=float, required=True, help="systole of the pattern exterior")
    b.add_argument("--winding", type=int, required=True)
    b.add_argument("--slope", help=slope_help)
    b = bsub.add_parser("whitehead", parents=[common], help="n-clasped t-twisted Whitehead double")
    b.add_argument("--clasp", type=int, required=True)
    b.add_argument("--twist", type=int, default=0)
    b.add_argument("--systole", type=float)
    b.add_argument("--stage", type=int)
    b.add_argument("--slope", help=slope_help)
    b = bsub.add_parser("twist", parents=[common], help="twist knot")
    b.add_argument("--sign", choices=("+", "-"), required=True)
    b.add_argument("--t", type=int, required=True)
    b.add_argument("--systole", type=float)
    b.add_argument("--slope", help=slope_help)
    bound.set_defaults(func=cmd_bound)

    st = sub.add_parser("stages", parents=[common], help="staged denominator/volume table")
    st.add_argument("--boundaries", help="comma-separated boundary volumes (default: shipped stages)")
    st.add_argument("--base", help="base volume (default 3.6638623767)")
    st.add_argument("--census", help="census file used to count items up to each boundary")
    st.set_defaults(func=cmd_stages)

    el = sub.add_parser("eliminate", parents=[common], help="run the census elimination")
    el.add_argument("--census")
    g = el.add_mutually_exclusive_group()
    g.add_argument("--vmax", help="volume cap (exclusive)")
    g.add_argument("--stage", type=int, help="use the stage-k boundary as cap (default 8)")
    el.set_defaults(func=cmd_eliminate)

    cl = sub.add_parser("classify", help="describe surgeries on torus knots and cables")
    csub = cl.add_subparsers(dest="kind", required=True)
    for kind in ("torus", "cable"):
        c = csub.add_parser(kind, parents=[common])
        for flag in ("--r", "--s", "--p", "--q"):
            c.add_argument(flag, type=int, required=True)
        if kind == "cable":
            c.add_argument("--companion", default="C", help="companion name (U for the unknot)")
    c = csub.add_parser("cosmetic", parents=[common])
    for flag in ("--p", "--q", "--s"):
        c.add_argument(flag, type=int, required=True)
    cl.set_defaults(func=cmd_classify)

    br = sub.add_parser("brakes", parents=[common], help="pair of Whitehead doubles with a common 1/q surgery")
    for flag in ("--q", "--m", "--n"):
        br.add_argument(flag, type=int, required=True)
    br.set_defaults(func=cmd_brakes)

    tb = sub.add_parser("tables", help="reproduce the reference tables")
    tsub = tb.add_subparsers(dest="which", required=True)
    t = tsub.add_parser("qfrak", parents=[common])
    t.add_argument("--fixture", choices=("twist", "double"), required=True)
    tsub.add_parser("stages", parents=[common])
    t = tsub.add_parser("elimination", parents=[common])
    t.add_argument("--census")
    t.add_argument("--stage", type=int)
    tb.set_defaults(func=cmd_tables)
    return top


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    args.format = getattr(args, "format", "table")
    args.data_dir = getattr(args, "data_dir", None)
    try:
        return args.func(args)
    except InconsistentRecord as exc:
        print(f"error: inconsistent data: {exc}", file=sys.stderr)
        return EXIT_INCONSISTENT
    except (CharSlopeError, InputError, OSError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
