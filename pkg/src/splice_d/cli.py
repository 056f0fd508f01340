"""Command-line front end.

Exit codes: 0 success, 1 domain error (NotStabilized, NotCoprime, ...),
2 syntax error in the expression.
"""

import argparse
import json
import re
import sys

from .errors import ParseError, SemanticError, SpliceDError
from .lattice import GramLattice, d_from_norm, min_norm_char
from .parse import format_expression, parse_expression
from .plumbing import plumbing_graph
from .seifert import SeifertData, normalize, stabilize
from .splice import (
    GluingSpec,
    SeifertFiber,
    TorusKnot,
    bounds_report,
    casson_euler,
    d_seifert,
    monotonicity_check,
    mu_bar_check,
    seifert_details,
    splice_report,
    v0_torus,
)

SUBCOMMANDS = ("normalize", "plumbing", "d", "mu-bar", "splice-d", "bounds", "v0-torus", "d-lattice", "check")


def _dumps(obj):
    return json.dumps(obj, separators=(",", ":"))


def _seifert(value, sub):
    if isinstance(value, SeifertFiber):
        return value.data
    if isinstance(value, SeifertData):
        return value
    raise SemanticError(f"{sub} expects a sigma(...) expression", "WrongKind")


def _gluing(value, sub):
    if not isinstance(value, GluingSpec):
        raise SemanticError(f"{sub} expects splice(...) or glue(...)", "WrongKind")
    return value


def _positive(data, sub):
    if data.orientation != 1:
        raise SemanticError(f"{sub} needs the positive orientation", "NegativeOrientation")
    return data


def cmd_normalize(value, args):
    n = normalize(_seifert(value, "normalize"))
    return {"e": n.e, "b": list(n.b)}, f"e={n.e} b={list(n.b)}"


def cmd_plumbing(value, args):
    g = plumbing_graph(_positive(_seifert(value, "plumbing"), "plumbing"))
    lines = [f"center {g.center}"]
    lines += [f"vertex {v} framing {f}" for v, f in g.vertices]
    lines += [f"edge {u} {v}" for u, v in g.edges]
    return g.to_json(), "\n".join(lines)


def _d_payload(d, rank, chi, norm, stats, args):
    out = {"d": d}
    text = str(d)
    if args.verbose:
        out.update(rank=rank, chi=list(chi), norm=norm, nodes=stats.get("nodes", 0))
        text += (
            f"\nrank {rank}\nmaximizing characteristic vector {list(chi)}\n"
            f"norm {norm}\nnodes visited {stats.get('nodes', 0)}\n"
            f"unit summands {stats.get('unit_summands', 0)}\n"
            f"searched components {stats.get('components', [])}\n"
            f"backend {stats.get('backend', 'none')}"
        )
    return out, text


def cmd_d(value, args):
    if isinstance(value, GramLattice):
        return cmd_d_lattice(value, args)
    data = _seifert(value, "d")
    if not args.verbose:
        return _d_payload(d_seifert(data), 0, (), 0, {}, args)
    det = seifert_details(data)
    out, text = _d_payload(d_seifert(data), det.rank, det.chi, det.norm, det.stats, args)
    if det.rank:
        graph = plumbing_graph(data.positive())
        text = text + "\nplumbing " + _dumps(graph.to_json())
    return out, text


def cmd_d_lattice(value, args):
    if not isinstance(value, GramLattice):
        raise SemanticError("d-lattice expects a JSON Gram matrix", "WrongKind")
    stats = {}
    chi, norm = min_norm_char(value, stats=stats)
    return _d_payload(d_from_norm(norm, value.rank), value.rank, chi, norm, stats, args)


def cmd_mu_bar(value, args):
    data = _positive(_seifert(value, "mu-bar"), "mu-bar")
    rep = mu_bar_check(data)
    out = {"mu_bar": rep.mu_bar, "wu": list(rep.wu), "d": rep.d, "bound": rep.bound,
           "equality": rep.equality}
    text = str(rep.mu_bar)
    if args.verbose:
        text += f"\nwu {list(rep.wu)}\nd {rep.d} >= -2 mu-bar = {rep.bound}"
    return out, text


def _report_text(rep):
    if rep["exact"]:
        return str(rep["d"])
    return f"[{rep['lower']}, {rep['upper']}] ({rep['method']})"


def cmd_splice_d(value, args):
    rep = splice_report(_gluing(value, "splice-d"))
    return rep, _report_text(rep)


def cmd_bounds(value, args):
    rep = bounds_report(_gluing(value, "bounds"), extended=args.extended)
    text = f"lower {rep['lower']} upper {rep['upper']} exact {str(rep['exact']).lower()} method {rep['method']}"
    return rep, text


def cmd_v0_torus(value, args):
    if not isinstance(value, TorusKnot):
        raise SemanticError("v0-torus expects torus(p,q) or -torus(p,q)", "WrongKind")
    v = v0_torus(value.p, value.q, value.mirrored)
    return {"v0": v}, str(v)


def cmd_check(value, args):
    data = _positive(_seifert(value, "check"), "check")
    checks = []
    rep = mu_bar_check(data)
    checks.append(("mu-bar-bound", True, f"d = {rep.d} >= -2 mu-bar = {rep.bound}"
                   + (" (equality)" if rep.equality else "")))
    if not data.is_s3:
        top = max(data.a)
        st = stabilize(data, top)
        d0, d1 = d_seifert(data), d_seifert(st)
        checks.append(("stabilization-invariance", d0 == d1,
                       f"d({format_expression(data)}) = {d0}, d({format_expression(st)}) = {d1}"))
        ok = monotonicity_check(data, st, -1)
        checks.append(("surgery-monotonicity", ok, f"-1-surgery on the fiber of order {top}"))
    if args.casson is not None:
        chi = casson_euler(rep.d, args.casson)
        checks.append(("casson", chi <= 0,
                       f"chi(HF_red) = {chi}, implied dim HF_red = {-chi}"))
    out = {"ok": all(c[1] for c in checks),
           "checks": [{"name": n, "ok": ok, "detail": det} for n, ok, det in checks]}
    text = "\n".join(f"{'PASS' if ok else 'FAIL'} {n}: {det}" for n, ok, det in checks)
    return out, text


HANDLERS = {
    "normalize": cmd_normalize,
    "plumbing": cmd_plumbing,
    "d": cmd_d,
    "mu-bar": cmd_mu_bar,
    "splice-d": cmd_splice_d,
    "bounds": cmd_bounds,
    "v0-torus": cmd_v0_torus,
    "d-lattice": cmd_d_lattice,
    "check": cmd_check,
}


def _error_payload(exc):
    out = {"error": exc.code, "message": str(exc)}
    if isinstance(exc, ParseError):
        out.update(offset=exc.offset, expected=list(exc.expected))
    if isinstance(exc, SemanticError):
        out["reason"] = exc.reason
        if exc.offset is not None:
            out["offset"] = exc.offset
    side = getattr(exc, "side", None)
    if side is not None:
        out["side"] = side
    return out


def run_one(sub, text, args, out, err):
    """Evaluate one expression; returns the exit code."""
    try:
        value = parse_expression(text)
        payload, human = HANDLERS[sub](value, args)
    except ParseError as exc:
        code, payload = 2, _error_payload(exc)
    except SpliceDError as exc:
        code, payload = 1, _error_payload(exc)
    else:
        out.write((_dumps(payload) if args.json else human) + "\n")
        if sub == "check" and not payload["ok"]:
            return 1
        return 0
    if args.json:
        out.write(_dumps(payload) + "\n")
    else:
        err.write(f"error: {payload['error']}: {payload['message']}\n")
    return code


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("-v", "--verbose", action="store_true",
                        help="show plumbing, maximizing vector and search counters")
    common.add_argument("--stdin", action="store_true", help="read one expression per line")
    parser = argparse.ArgumentParser(
        prog="splice-d", description="d-invariants of Seifert homology spheres and their splices"
    )
    subs = parser.add_subparsers(dest="sub", required=True)
    helps = {
        "normalize": "Seifert invariants (e, b) of sigma(...)",
        "plumbing": "negative-definite plumbing graph as JSON",
        "d": "d-invariant of sigma(...) or of a JSON Gram matrix",
        "mu-bar": "Wu class and mu-bar of sigma(...)",
        "splice-d": "exact d of a splice along stabilized fibers",
        "bounds": "interval for d of splice(...) or glue(...)",
        "v0-torus": "V_0 of torus(p,q) or -torus(p,q)",
        "d-lattice": "d-invariant of a negative-definite unimodular Gram matrix",
        "check": "consistency checks on sigma(...)",
    }
    for name in SUBCOMMANDS:
        p = subs.add_parser(name, parents=[common], help=helps[name])
        p.add_argument("expression", nargs="?")
        if name == "bounds":
            p.add_argument("--extended", action="store_true",
                           help="allow +1-surgery on fibers that are not stabilized")
        if name == "check":
            p.add_argument("--casson", type=int, metavar="LAMBDA",
                           help="Casson invariant, to report chi and dim of HF_red")
    return parser


_REVERSED = re.compile(r"-\s*(sigma|torus)\b")


def _protect_reversed(argv):
    """Move ``-sigma(...)``-style expressions behind ``--`` so argparse keeps them."""
    if "--" in argv:
        return argv
    exprs = [a for a in argv if _REVERSED.match(a)]
    if not exprs:
        return argv
    return [a for a in argv if not _REVERSED.match(a)] + ["--"] + exprs


def main(argv=None, out=None, err=None):
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    argv = list(sys.argv[1:] if argv is None else argv)
    args = parser.parse_args(_protect_reversed(argv))
    args.extended = getattr(args, "extended", False)
    args.casson = getattr(args, "casson", None)
    if args.stdin == (args.expression is not None):
        parser.error("give an expression or --stdin, not both")
    if args.stdin:
        code = 0
        for line in sys.stdin:
            if line.strip():
                code = max(code, run_one(args.sub, line.strip(), args, out, err))
        return code
    return run_one(args.sub, args.expression, args, out, err)


if __name__ == "__main__":
    sys.exit(main())
