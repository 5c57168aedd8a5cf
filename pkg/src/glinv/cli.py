"""Command line interface.

One verb per invocation; every output is deterministic, so identical
invocations produce byte-identical results. JSON output is sorted, pretty
output draws Young diagrams and small grids, and csv is available for the
tabular verbs (zset, lc, betti, qbinom).

Exit codes: 0 success, 1 domain error (reported as a JSON object on stdout
under --format json, otherwise on stderr), 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
from typing import Iterable

from .betti import betti_polynomial, betti_table
from .golden import run_golden_checks
from .homology import (
    DegreeWindow,
    ZPair,
    ext_quotient,
    regularity,
    zset,
)
from .ideals import (
    InvariantIdeal,
    MatrixContext,
    generator_degree,
    ideal_leq,
    make_ideal,
    power_of_minors,
    saturate,
    saturated_power,
    symbolic_power,
)
from .loccoh import ds_character, lc_support, lc_table
from .partitions import dominant_weight, partition, qbinomial, size
from .schur import EquivariantCharacter, dim_schur


class UsageError(Exception):
    """Bad argument combination not expressible through argparse alone."""


def main(argv: list[str] | None = None) -> int:
    if argv is None:
        argv = sys.argv[1:]
    if argv and argv[0] == "ideal":
        argv = argv[1:]
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        _thread_cap()
        handler = args.handler
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except AttributeError:
        parser.print_help()
        return 2
    try:
        return handler(args) or 0
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        if getattr(args, "format", "pretty") == "json":
            print(json.dumps({"error": str(exc)}, sort_keys=True))
        else:
            print(f"error: {exc}", file=sys.stderr)
        return 1


def _thread_cap() -> int:
    """Validated INVARIANTS_THREADS value; the engines are single threaded
    and deterministic, so the cap is accepted for compatibility and any
    positive value leaves results unchanged."""
    raw = os.environ.get("INVARIANTS_THREADS")
    if raw is None:
        return 1
    try:
        cap = int(raw)
    except ValueError:
        raise UsageError(f"INVARIANTS_THREADS must be a positive integer, got {raw!r}") from None
    if cap < 1:
        raise UsageError(f"INVARIANTS_THREADS must be a positive integer, got {raw!r}")
    return cap


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="glinv",
        description="Exact invariants of GL-stable ideals in a generic matrix ring.",
        epilog="Verbs may be prefixed with 'ideal' (e.g. 'glinv ideal power ...').",
    )
    sub = parser.add_subparsers(dest="verb", metavar="verb")

    def add(name: str, help_: str, handler, fmt: Iterable[str] = ("json", "pretty")):
        p = sub.add_parser(name, help=help_)
        p.add_argument("--format", choices=sorted(fmt), default="pretty")
        p.set_defaults(handler=handler)
        return p

    p = add("normalize", "canonicalize a generating family", _cmd_normalize)
    _ideal_args(p)

    p = add("compare", "containment relation of two ideals", _cmd_compare)
    p.add_argument("-m", type=int, required=True)
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--left", required=True, help="JSON list of generators")
    p.add_argument("--right", required=True, help="JSON list of generators")

    for name, help_, handler in (
        ("power", "ordinary power of the ideal of p x p minors", _cmd_power),
        ("symbolic", "symbolic power of the ideal of p x p minors", _cmd_symbolic),
        ("saturated", "saturation of the power by the maximal ideal", _cmd_saturated),
    ):
        p = add(name, help_, handler)
        p.add_argument("-m", type=int, required=True)
        p.add_argument("-n", type=int, required=True)
        p.add_argument("-p", type=int, required=True, help="minor size")
        p.add_argument("-d", type=int, required=True, help="exponent")

    p = add("saturate", "saturation of an ideal by the p x p minors", _cmd_saturate)
    _ideal_args(p)
    p.add_argument("-p", type=int, required=True, help="minor size")

    p = add("zset", "composition factor indices (z, l) of S/I", _cmd_zset,
            fmt=("json", "pretty", "csv"))
    _family_args(p)

    p = add("ext", "windowed Ext character of S/I", _cmd_ext)
    _family_args(p)
    p.add_argument("--window", required=True, help="degree window lo..hi")

    p = add("reg", "Castelnuovo-Mumford regularity of I", _cmd_reg)
    _family_args(p)

    p = add("lc", "local cohomology supported in the p x p minors", _cmd_lc,
            fmt=("json", "pretty", "csv"))
    p.add_argument("-m", type=int, required=True)
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-p", type=int, required=True, help="minor size")
    p.add_argument("--ds", type=int, default=None, metavar="S",
                   help="expand the character of the factor D_S instead")
    p.add_argument("--window", default=None, help="degree window lo..hi (with --ds)")

    p = add("betti", "equivariant Betti numbers of the b-th powers of the a x a minors",
            _cmd_betti, fmt=("json", "pretty", "csv"))
    p.add_argument("-m", type=int, required=True)
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-a", type=int, required=True, help="minor size")
    p.add_argument("-b", type=int, required=True, help="power")

    p = add("schurdim", "dimension of an irreducible GL_N representation", _cmd_schurdim)
    p.add_argument("-N", type=int, required=True)
    p.add_argument("--weight", required=True, help="JSON list, weakly decreasing")

    p = add("qbinom", "Gauss polynomial binomial(a, b) in q", _cmd_qbinom,
            fmt=("json", "pretty", "csv"))
    p.add_argument("a", type=int)
    p.add_argument("b", type=int)

    add("selftest", "run the embedded reference corpus", _cmd_selftest,
        fmt=("pretty",))
    return parser


def _ideal_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("-m", type=int, default=None)
    p.add_argument("-n", type=int, default=None)
    p.add_argument("--gens", default=None, help="JSON list of generator partitions")
    p.add_argument("--in", dest="infile", default=None, metavar="FILE",
                   help="ideal as a JSON object with keys m, n, gens ('-' for stdin)")


def _family_args(p: argparse.ArgumentParser) -> None:
    _ideal_args(p)
    p.add_argument("--kind", choices=("power", "symbolic", "saturated"), default=None,
                   help="build the ideal from -p and -d instead of --gens")
    p.add_argument("-p", type=int, default=None, help="minor size (with --kind)")
    p.add_argument("-d", type=int, default=None, help="exponent (with --kind)")


def _context(m: int, n: int) -> MatrixContext:
    """Context with the sides ordered; transposing changes nothing in the
    classification, so a wider-than-tall input is flipped with a notice."""
    if m < n:
        print(f"note: transposing to m={n}, n={m}; the classification and all "
              "invariants are unchanged, row and column weights swap roles",
              file=sys.stderr)
        m, n = n, m
    return MatrixContext(m, n)


def _parse_gens(text: str):
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"generators are not valid JSON: {exc}") from None
    if not isinstance(data, list) or not all(isinstance(g, list) for g in data):
        raise ValueError("generators must be a JSON list of integer lists")
    return data


def _resolve_ideal(args) -> InvariantIdeal:
    if args.infile:
        if args.infile == "-":
            data = json.load(sys.stdin)
        else:
            with open(args.infile) as fh:
                data = json.load(fh)
        try:
            m, n, gens = int(data["m"]), int(data["n"]), data["gens"]
        except (KeyError, TypeError) as exc:
            raise ValueError(f"ideal file must carry keys m, n, gens: {exc}") from None
        return make_ideal(_context(m, n), gens)
    if args.m is None or args.n is None:
        raise UsageError("need -m and -n (or --in FILE)")
    ctx = _context(args.m, args.n)
    kind = getattr(args, "kind", None)
    if kind is not None:
        if args.p is None or args.d is None:
            raise UsageError("--kind needs -p and -d")
        builder = {"power": power_of_minors, "symbolic": symbolic_power,
                   "saturated": saturated_power}[kind]
        return builder(ctx, args.p, args.d)
    if getattr(args, "gens", None) is None:
        raise UsageError("need --gens, --kind, or --in FILE")
    return make_ideal(ctx, _parse_gens(args.gens))


def _ideal_json(ideal: InvariantIdeal) -> dict:
    return {"m": ideal.ctx.m, "n": ideal.ctx.n,
            "gens": [list(g) for g in ideal.gens]}


def _emit_json(obj) -> None:
    print(json.dumps(obj, sort_keys=True))


def render_diagram(x, indent: str = "  ") -> str:
    """Young diagram of x, one '#' per box, rows left-aligned."""
    xx = partition(x)
    if not xx:
        return f"{indent}(no boxes)"
    return "\n".join(f"{indent}{'#' * v}" for v in xx)


def _print_ideal(ideal: InvariantIdeal, fmt: str) -> None:
    if fmt == "json":
        _emit_json(_ideal_json(ideal))
        return
    print(f"m = {ideal.ctx.m}, n = {ideal.ctx.n}")
    if ideal.is_zero:
        print("zero ideal (no generators)")
        return
    if ideal.is_unit:
        print("unit ideal (generated by the empty minor)")
        return
    print(f"{len(ideal.gens)} generator{'s' if len(ideal.gens) != 1 else ''}:")
    for g in ideal.gens:
        print(f"({','.join(map(str, g))})  degree {generator_degree(g)}")
        print(render_diagram(g))


def _cmd_normalize(args) -> int:
    _print_ideal(_resolve_ideal(args), args.format)
    return 0


def _cmd_compare(args) -> int:
    ctx = _context(args.m, args.n)
    left = make_ideal(ctx, _parse_gens(args.left))
    right = make_ideal(ctx, _parse_gens(args.right))
    ge = ideal_leq(left, right)
    le = ideal_leq(right, left)
    relation = {(True, True): "equal", (True, False): "contains",
                (False, True): "contained-in", (False, False): "incomparable"}[(ge, le)]
    if args.format == "json":
        _emit_json({"relation": relation,
                    "left": _ideal_json(left), "right": _ideal_json(right)})
    else:
        wording = {
            "equal": "the ideals are equal",
            "contains": "the left ideal strictly contains the right",
            "contained-in": "the left ideal is strictly contained in the right",
            "incomparable": "the ideals are incomparable",
        }[relation]
        print(wording)
    return 0


def _power_family(builder):
    def run(args) -> int:
        ctx = _context(args.m, args.n)
        _print_ideal(builder(ctx, args.p, args.d), args.format)
        return 0
    return run


_cmd_power = _power_family(power_of_minors)
_cmd_symbolic = _power_family(symbolic_power)
_cmd_saturated = _power_family(saturated_power)


def _cmd_saturate(args) -> int:
    ideal = _resolve_ideal(args)
    _print_ideal(saturate(ideal, args.p), args.format)
    return 0


def _sorted_pairs(pairs) -> list[ZPair]:
    return sorted(pairs, key=lambda zp: (-zp.l, size(zp.z), zp.z))


def _cmd_zset(args) -> int:
    ideal = _resolve_ideal(args)
    pairs = _sorted_pairs(zset(ideal))
    if args.format == "json":
        _emit_json({"m": ideal.ctx.m, "n": ideal.ctx.n,
                    "pairs": [{"z": list(zp.z), "l": zp.l} for zp in pairs]})
    elif args.format == "csv":
        print("l,z")
        for zp in pairs:
            print(f"{zp.l},{' '.join(map(str, zp.z))}")
    else:
        print(f"{len(pairs)} composition factor{'s' if len(pairs) != 1 else ''}:")
        for zp in pairs:
            print(f"l={zp.l}  z=({','.join(map(str, zp.z))})")
    return 0


def _parse_window(text: str) -> DegreeWindow:
    match = re.fullmatch(r"(-?\d+)\.\.(-?\d+)", text.strip())
    if not match:
        raise UsageError(f"window must look like lo..hi, got {text!r}")
    return DegreeWindow(int(match.group(1)), int(match.group(2)))


def _character_json(ch: EquivariantCharacter, window: DegreeWindow) -> list[dict]:
    out = []
    for j in ch.indices():
        terms = [
            {"wm": list(term.wm), "wn": list(term.wn),
             "deg": term.degree, "mult": term.multiplicity}
            for _, term in ch.at_index(j).items()
        ]
        out.append({"j": j, "terms": terms, "window": [window.lo, window.hi]})
    return out


def _print_character(ch: EquivariantCharacter, window: DegreeWindow, fmt: str,
                     index_label: str) -> None:
    if fmt == "json":
        _emit_json(_character_json(ch, window))
        return
    print(f"window: {window.lo}..{window.hi}")
    if not ch:
        print("no terms in the window")
        return
    for j in ch.indices():
        print(f"{index_label}^{j}:")
        for _, term in ch.at_index(j).items():
            wm = ",".join(map(str, term.wm))
            wn = ",".join(map(str, term.wn))
            print(f"  deg {term.degree}  mult {term.multiplicity}  "
                  f"S({wm}) * S({wn})")


def _cmd_ext(args) -> int:
    ideal = _resolve_ideal(args)
    window = _parse_window(args.window)
    _print_character(ext_quotient(ideal, window), window, args.format, "Ext")
    return 0


def _cmd_reg(args) -> int:
    ideal = _resolve_ideal(args)
    r = regularity(ideal)
    if args.format == "json":
        _emit_json({"regularity": r, "m": ideal.ctx.m, "n": ideal.ctx.n,
                    "gens": [list(g) for g in ideal.gens]})
    else:
        print(f"regularity = {r}")
    return 0


def _cmd_lc(args) -> int:
    ctx = _context(args.m, args.n)
    if args.ds is not None:
        if args.window is None:
            raise UsageError("--ds needs --window lo..hi")
        window = _parse_window(args.window)
        ch = ds_character(ctx, args.ds, window)
        if args.format == "csv":
            raise UsageError("csv output is not defined for --ds")
        _print_character(ch, window, args.format, "D")
        return 0
    table = lc_table(ctx, args.p)
    if args.format == "json":
        _emit_json({"p": args.p,
                    "rows": {str(j): {str(s): mult for s, mult in row.items()}
                             for j, row in table.rows.items()}})
    elif args.format == "csv":
        print("j,s,mult")
        for j in sorted(table.rows):
            for s, mult in sorted(table.rows[j].items()):
                print(f"{j},{s},{mult}")
    else:
        lo, hi = lc_support(ctx, args.p)
        print(f"cohomology supported in the {args.p}x{args.p} minors "
              f"of a {ctx.m}x{ctx.n} matrix")
        for j in sorted(table.rows):
            cell = " + ".join(
                (f"{mult}*D_{s}" if mult != 1 else f"D_{s}")
                for s, mult in sorted(table.rows[j].items())
            )
            print(f"H^{j} = {cell}")
        print(f"support: {lo}..{hi}")
    return 0


def _cmd_betti(args) -> int:
    ctx = _context(args.m, args.n)
    bp = betti_polynomial(ctx, args.a, args.b)
    if args.format == "json":
        payload = {
            str(i): [
                {"wm": list(term.wm), "wn": list(term.wn),
                 "deg": term.degree, "mult": term.multiplicity}
                for _, term in sub.items()
            ]
            for i, sub in bp.by_homological_index().items()
        }
        _emit_json({"m": ctx.m, "n": ctx.n, "a": args.a, "b": args.b,
                    "by_homological_index": payload})
        return 0
    table = betti_table(bp, ctx)
    if args.format == "csv":
        for row in table.csv_rows():
            print(row)
    else:
        print(f"Betti table of the b={args.b} powers of the {args.a}x{args.a} "
              f"minors, {ctx.m}x{ctx.n} matrix")
        print(table.render())
    return 0


def _cmd_schurdim(args) -> int:
    try:
        weight = json.loads(args.weight)
    except json.JSONDecodeError as exc:
        raise ValueError(f"weight is not valid JSON: {exc}") from None
    if not isinstance(weight, list):
        raise ValueError("weight must be a JSON list of integers")
    dim = dim_schur(dominant_weight(weight), args.N)
    if args.format == "json":
        _emit_json({"N": args.N, "weight": list(dominant_weight(weight)), "dim": dim})
    else:
        print(f"dim = {dim}")
    return 0


def _cmd_qbinom(args) -> int:
    poly = qbinomial(args.a, args.b)
    if args.format == "json":
        _emit_json({"a": args.a, "b": args.b,
                    "coefficients": {str(e): c for e, c in poly.items()}})
    elif args.format == "csv":
        print("exponent,coefficient")
        for e, c in poly.items():
            print(f"{e},{c}")
    else:
        print(str(poly))
    return 0


def _cmd_selftest(args) -> int:
    results = run_golden_checks()
    failures = 0
    for name, err in results:
        if err is None:
            print(f"ok {name}")
        else:
            failures += 1
            print(f"FAIL {name}: {err}")
    print(f"{len(results) - failures}/{len(results)} checks passed")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
