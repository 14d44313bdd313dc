"""Command-line entry point: ``homog3 <command> ...``.

Exit codes: 0 success, 1 negative verdict (check failed, nothing found,
inconclusive), 2 usage or input error, 3 resource budget exceeded.
Reports go to stdout (or ``-o``); diagnostics and seeds go to stderr.
"""

import argparse
import json
import math
import sys
from dataclasses import dataclass, field
from pathlib import Path

from . import __version__, budgets
from .amalgamation import ForbiddenSet, check_ap, check_jep
from .analysis import (
    color_diameter,
    equivalence_report,
    max_clique_in,
    nontrivial_equivalences,
    pair_class_analysis,
    quotient,
)
from .classify import UNKNOWN, classify, parameter_report
from .constructions import KINDS, SEEDED, GeneratorSpec
from .core import io
from .core.age import triangle_spectrum
from .errors import (
    ArgumentError,
    Homog3Error,
    InconclusiveError,
    NotQuotientableError,
    NotSemilinearError,
    ResourceLimitError,
)
from .geometry import (
    check_semilinear,
    edge_count_conserved,
    extract_lines,
    lines_partition_neighborhoods,
    quadrangle_profile,
    triangle_freeness,
)
from .homogeneity import check_extension_axioms, check_homogeneity
from .stability import find_half_graph

EXIT_OK, EXIT_FAILED, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3

KIND_ALIASES = {"cgamma": "cover_cgamma", "pentagon": "pentagonP", "rook": "rookQ"}


class _Usage(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _Usage(message)


@dataclass
class RunConfig:
    command: str
    flags: dict
    seed: int = None
    budgets: dict = field(default_factory=dict)
    output: str = None
    fmt: str = "text"


# ---------------------------------------------------------------------------
# argument helpers


def _csv(text):
    return [x for x in text.split(",") if x]


def _int_csv(text):
    try:
        return [int(x) for x in _csv(text)]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _budget_pair(text):
    name, sep, value = text.partition("=")
    if not sep:
        raise argparse.ArgumentTypeError(f"expected NAME=VALUE, got {text!r}")
    name = name.strip().lower()
    if name not in budgets.DEFAULTS:
        raise argparse.ArgumentTypeError(f"unknown budget {name!r}")
    try:
        return name, int(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"budget {name} needs an integer")


def _param_pair(text):
    key, sep, value = text.partition("=")
    if not sep:
        raise argparse.ArgumentTypeError(f"expected KEY=VALUE, got {text!r}")
    try:
        return key, json.loads(value)
    except json.JSONDecodeError:
        return key, value


def _color_index(g, name):
    try:
        return g.cidx(name)
    except (KeyError, ValueError, IndexError, TypeError):
        raise ArgumentError(f"unknown color {name!r}; colors are {list(g.colors)}") from None


def _load(path):
    try:
        return io.load(path)
    except OSError as exc:
        raise ArgumentError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise ArgumentError(f"{path} is not valid JSON: {exc}") from None


def _finite(x):
    return None if x is None or (isinstance(x, float) and math.isinf(x)) else x


# ---------------------------------------------------------------------------
# output


def _text(obj, indent=""):
    lines = []
    for key, value in obj.items():
        if isinstance(value, dict) and value and all(not isinstance(v, (dict, list)) for v in value.values()):
            lines.append(f"{indent}{key}: " + ", ".join(f"{k}={v}" for k, v in value.items()))
        elif isinstance(value, dict):
            lines.append(f"{indent}{key}:")
            lines.extend(_text(value, indent + "  "))
        else:
            lines.append(f"{indent}{key}: {json.dumps(value, ensure_ascii=False)}")
    return lines


def _emit(cfg, report, stdout):
    if cfg.fmt == "json":
        text = json.dumps(report, indent=2, ensure_ascii=False) + "\n"
    else:
        text = "\n".join(_text(report)) + "\n"
    if cfg.output:
        Path(cfg.output).write_text(text, encoding="utf-8")
    else:
        stdout.write(text)


# ---------------------------------------------------------------------------
# commands; each returns (report dict, exit code) or writes directly


def cmd_build(args, cfg, out):
    kind = KIND_ALIASES.get(args.kind, args.kind)
    if args.spec:
        spec = GeneratorSpec.from_obj(json.loads(Path(args.spec).read_text()))
    else:
        params = dict(args.param or [])
        for flag, key in (
            ("classes", "classes"), ("class_size", "class_size"), ("v", "v"), ("n", "n"),
            ("m", "m"), ("eq_color", "eq_color"), ("cross_color", "cross_color"),
            ("spare", "spare"), ("sizes", "sizes"), ("colors", "colors"),
        ):
            value = getattr(args, flag)
            if value is not None:
                params[key] = value
        if kind not in KINDS:
            raise ArgumentError(f"unknown generator kind {args.kind!r}; expected one of {KINDS}")
        spec = GeneratorSpec(kind, params, args.seed)
    if spec.kind in SEEDED:
        cfg.seed = spec.seed
        print(f"homog3: build {spec.kind} seed={spec.seed}", file=sys.stderr)
    g = spec.build()
    text = io.dumps(g)
    if cfg.output:
        Path(cfg.output).write_text(text, encoding="utf-8")
    else:
        out.write(text)
    return None, EXIT_OK


def cmd_export(args, cfg, out):
    g = _load(args.file)
    text = io.to_dot(g) if args.dot else io.dumps(g)
    if cfg.output:
        Path(cfg.output).write_text(text, encoding="utf-8")
    else:
        out.write(text)
    return None, EXIT_OK


def _eq_obj(g, rep):
    return {
        "colors": [g.colors[c] for c in rep.color_set],
        "classes": len(rep.classes),
        "class_sizes": list(rep.class_sizes),
    }


def cmd_analyze(args, cfg, out):
    g = _load(args.file)
    every = not (args.equivalences or args.diameter or args.triangles or args.pair)
    report = {"command": "analyze", "size": g.size, "colors": list(g.colors)}
    if every or args.equivalences:
        report["equivalences"] = [_eq_obj(g, r) for r in nontrivial_equivalences(g)]
    if every or args.diameter:
        report["diameter"] = {
            g.colors[c]: _finite(max((d for _, d in color_diameter(g, c)), default=0))
            for c in range(g.color_count)
        }
    if every or args.triangles:
        report["triangles"] = {
            "".join(g.colors[c] for c in key): n for key, n in sorted(triangle_spectrum(g).items())
        }
    if args.pair:
        if not args.eq:
            raise ArgumentError("--pair needs --eq")
        U = [_color_index(g, c) for c in _csv(args.eq)]
        rep = equivalence_report(g, U)
        if not rep.is_equivalence:
            raise ArgumentError(f"colors {args.eq} do not form an equivalence relation")
        a, b = args.pair
        n = len(rep.classes)
        if not (0 <= a < n and 0 <= b < n) or a == b:
            raise ArgumentError(f"class indices must be distinct and below {n}")
        s = _color_index(g, args.color) if args.color else next(
            c for c in range(g.color_count) if c not in U
        )
        pr = pair_class_analysis(g, rep, a, b, s)
        report["pair"] = {
            "classes": [a, b],
            "color": g.colors[s],
            "pair_type": pr.pair_type,
            "r": pr.r,
            "n": pr.n,
            "non_constant": pr.non_constant,
            "partition_found": pr.partition_found is not None,
            "colors_realized": [g.colors[c] for c in pr.colors_realized],
        }
    return report, EXIT_OK


def cmd_check(args, cfg, out):
    what = args.what
    if what == "homogeneity":
        g = _load(args.file)
        rep = check_homogeneity(g, args.k)
        ce = rep.counterexample
        report = {
            "command": "check homogeneity",
            "k": rep.k,
            "holds": rep.holds,
            "tuples_examined": rep.tuples_examined,
            "counterexample": None if ce is None else {
                "domain": list(ce.domain), "image": list(ce.image),
            },
        }
        return report, EXIT_OK if rep.holds else EXIT_FAILED
    if what == "extension":
        g = _load(args.file)
        if not args.demand:
            raise ArgumentError("check extension needs --demand")
        demand = args.demand
        if len(demand) != g.color_count:
            raise ArgumentError(f"--demand needs {g.color_count} entries")
        rep = check_extension_axioms(g, demand, args.samples, args.seed)
        if not rep.exhaustive:
            cfg.seed = args.seed
            print(f"homog3: sampled placements seed={args.seed}", file=sys.stderr)
        frac = rep.satisfied_fraction
        report = {
            "command": "check extension",
            "demand": list(demand),
            "exhaustive": rep.exhaustive,
            "seed": None if rep.exhaustive else args.seed,
            "tested": rep.tested,
            "satisfied": rep.satisfied,
            "satisfied_fraction": frac,
            "first_failure": None if rep.first_failure is None else list(rep.first_failure),
        }
        return report, EXIT_OK if frac == 1.0 else EXIT_FAILED
    # ap / jep
    if args.file is not None:
        raise ArgumentError(f"check {what} takes --colors/--forbid, not a file")
    if not args.colors:
        raise ArgumentError(f"check {what} needs --colors")
    forb = ForbiddenSet.from_words(_csv(args.colors), _csv(args.forbid or ""))
    fn = check_ap if what == "ap" else check_jep
    verdict = fn(forb, args.max_size)
    report = {
        "command": f"check {what}",
        "colors": list(forb.colors),
        "forbidden": forb.words(),
        "max_size": verdict.max_size,
        "holds": verdict.holds,
        "problems_checked": verdict.problems_checked,
        "first_failure": None,
    }
    if verdict.first_failure is not None:
        p = verdict.first_failure
        report["first_failure"] = {
            "A": io.to_obj(p.A),
            "B": io.to_obj(p.B),
            "C": io.to_obj(p.C),
            "f1": list(p.f1.images),
            "f2": list(p.f2.images),
        }
    return report, EXIT_OK if verdict.holds else EXIT_FAILED


def cmd_find(args, cfg, out):
    g = _load(args.file)
    if args.what == "halfgraph":
        if not args.color:
            raise ArgumentError("find halfgraph needs --color")
        P = _color_index(g, args.color)
        rows = None
        if args.rows:
            names = _csv(args.rows)
            if len(names) != 2:
                raise ArgumentError("--rows takes two colors, e.g. R,R")
            rows = tuple(_color_index(g, c) for c in names)
        below = _color_index(g, args.below) if args.below else None
        w = find_half_graph(g, P, args.order, rows, below)
        report = {
            "command": "find halfgraph",
            "color": g.colors[P],
            "order": args.order,
            "found": w is not None,
            "a": None if w is None else list(w.a),
            "b": None if w is None else list(w.b),
        }
        return report, EXIT_OK if w is not None else EXIT_FAILED
    if not args.color:
        raise ArgumentError("find clique needs --color")
    c = _color_index(g, args.color)
    region = args.region if args.region is not None else list(range(g.size))
    if any(not 0 <= x < g.size for x in region):
        raise ArgumentError("--region vertex out of range")
    size, witness = max_clique_in(g, region, c)
    report = {
        "command": "find clique",
        "color": g.colors[c],
        "region_size": len(region),
        "size": size,
        "clique": list(witness),
    }
    return report, EXIT_OK


def cmd_quotient(args, cfg, out):
    g = _load(args.file)
    U = [_color_index(g, c) for c in _csv(args.eq)]
    try:
        q, proj = quotient(g, U)
    except NotQuotientableError as exc:
        print(f"homog3: {exc}", file=sys.stderr)
        return None, EXIT_FAILED
    text = io.dumps(q)
    if cfg.output:
        Path(cfg.output).write_text(text, encoding="utf-8")
    else:
        out.write(text)
    return None, EXIT_OK


def cmd_lines(args, cfg, out):
    g = _load(args.file)
    c = _color_index(g, args.color)
    try:
        space = extract_lines(g, c)
    except NotSemilinearError as exc:
        print(f"homog3: {exc}", file=sys.stderr)
        return {"command": "lines", "color": g.colors[c], "semilinear": False, "error": str(exc)}, EXIT_FAILED
    sv = check_semilinear(space)
    report = {
        "command": "lines",
        "color": g.colors[c],
        "semilinear": sv.holds,
        "lines": [list(ln) for ln in space.lines],
        "partition_neighborhoods": lines_partition_neighborhoods(space),
        "edge_count_conserved": edge_count_conserved(space),
    }
    if args.profile:
        prof = quadrangle_profile(space)
        tri = triangle_freeness(space)
        report["profile"] = {
            "points_per_line": {str(k): v for k, v in prof.points_per_line.items()},
            "lines_per_point": {str(k): v for k, v in prof.lines_per_point.items()},
            "collinear_counts": {str(k): v for k, v in prof.collinear_counts.items()},
            "gq_like": prof.gq_like,
            "triangle_free": tri.holds,
        }
    return report, EXIT_OK


def cmd_classify(args, cfg, out):
    g = _load(args.file)
    try:
        label = classify(g, min_size=args.min_size, class_threshold=args.threshold)
    except InconclusiveError as exc:
        report = {"command": "classify", "family": "inconclusive", "display": "inconclusive",
                  "reason": str(exc), "size": g.size}
        return report, EXIT_FAILED
    report = {"command": "classify", "size": g.size}
    report.update(label.to_obj())
    report["parameters"] = _named(label.parameters, g.colors)
    report["report"] = parameter_report(label, g.colors) if label.family != UNKNOWN else None
    report["class_threshold"] = args.threshold
    return report, EXIT_OK if label.family != UNKNOWN else EXIT_FAILED


_COLOR_KEYS = {"eq_color", "cross_color", "i", "j", "k"}
_COLOR_LIST_KEYS = {"cross_colors", "inner_colors", "colors"}


def _named(params, colors):
    """Replace color indices in classifier parameters by color names."""
    out = {}
    for key, value in params.items():
        if key in _COLOR_KEYS:
            out[key] = colors[value]
        elif key in _COLOR_LIST_KEYS:
            out[key] = [colors[c] for c in value]
        elif key == "layers":
            out[key] = [
                [f[0], f[1], None if f[2] is None else colors[f[2]]] if f[0] == "K"
                else [f[0], None if f[1] is None else colors[f[1]]]
                for f in value
            ]
        else:
            out[key] = value
    return out


# ---------------------------------------------------------------------------


def build_parser():
    p = _Parser(prog="homog3", description="Finite workbench for homogeneous edge-colored complete graphs.")
    p.add_argument("--version", action="version", version=f"homog3 {__version__}")
    p.add_argument("--budget", action="append", type=_budget_pair, metavar="NAME=VALUE",
                   help="override a named resource limit (repeatable)")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def fmt(sp):
        g = sp.add_mutually_exclusive_group()
        g.add_argument("--json", dest="fmt", action="store_const", const="json")
        g.add_argument("--text", dest="fmt", action="store_const", const="text")
        sp.add_argument("-o", "--output")
        sp.set_defaults(fmt="text")

    b = sub.add_parser("build", help="write a generator output as JSON")
    b.add_argument("kind", help=f"one of {', '.join(KINDS)} (alias: cgamma)")
    b.add_argument("--seed", type=int, default=0)
    b.add_argument("--spec", help="JSON generator descriptor {kind, params, seed}")
    b.add_argument("--param", action="append", type=_param_pair, metavar="KEY=VALUE")
    b.add_argument("--classes", type=int)
    b.add_argument("--class-size", type=int)
    b.add_argument("--v", type=int)
    b.add_argument("--n", type=int)
    b.add_argument("--m", type=int)
    b.add_argument("--eq-color")
    b.add_argument("--cross-color")
    b.add_argument("--spare")
    b.add_argument("--sizes", type=_int_csv)
    b.add_argument("--colors", type=_csv)
    b.add_argument("-o", "--output")
    b.set_defaults(func=cmd_build, fmt="json")

    a = sub.add_parser("analyze", help="equivalences, diameters, triangle counts, class pairs")
    a.add_argument("file")
    a.add_argument("--equivalences", action="store_true")
    a.add_argument("--diameter", action="store_true")
    a.add_argument("--triangles", action="store_true")
    a.add_argument("--pair", type=int, nargs=2, metavar=("A", "B"))
    a.add_argument("--eq", help="colors of the equivalence for --pair, e.g. R")
    a.add_argument("--color", help="cross color s for --pair")
    fmt(a)
    a.set_defaults(func=cmd_analyze)

    c = sub.add_parser("check", help="homogeneity, extension axioms, AP or JEP")
    c.add_argument("what", choices=["homogeneity", "extension", "ap", "jep"])
    c.add_argument("file", nargs="?")
    c.add_argument("--k", type=int)
    c.add_argument("--demand", type=_int_csv)
    c.add_argument("--samples", type=int, help="placements before switching to sampling")
    c.add_argument("--seed", type=int, default=0)
    c.add_argument("--colors")
    c.add_argument("--forbid")
    c.add_argument("--max-size", type=int, default=4)
    fmt(c)
    c.set_defaults(func=cmd_check)

    f = sub.add_parser("find", help="half-graph witnesses or maximum cliques")
    f.add_argument("what", choices=["halfgraph", "clique"])
    f.add_argument("file")
    f.add_argument("--color")
    f.add_argument("--order", type=int, default=3)
    f.add_argument("--rows", help="colors of the a-row and b-row cliques, e.g. R,R")
    f.add_argument("--below", help="exact color of (a_i, b_j) for i > j")
    f.add_argument("--region", type=_int_csv)
    fmt(f)
    f.set_defaults(func=cmd_find)

    q = sub.add_parser("quotient", help="write the quotient by an equivalence")
    q.add_argument("file")
    q.add_argument("--eq", required=True)
    q.add_argument("-o", "--output")
    q.set_defaults(func=cmd_quotient, fmt="json")

    ln = sub.add_parser("lines", help="line space of maximal cliques through edges of a color")
    ln.add_argument("file")
    ln.add_argument("--color", required=True)
    ln.add_argument("--profile", action="store_true")
    fmt(ln)
    ln.set_defaults(func=cmd_lines)

    k = sub.add_parser("classify", help="label a sample against the classification")
    k.add_argument("file")
    k.add_argument("--min-size", type=int, default=16)
    k.add_argument("--threshold", type=int, default=4, help="largest finite-regime class size")
    fmt(k)
    k.set_defaults(func=cmd_classify)

    e = sub.add_parser("export", help="re-emit a graph as JSON or DOT")
    e.add_argument("file")
    g = e.add_mutually_exclusive_group()
    g.add_argument("--dot", action="store_true")
    g.add_argument("--json", action="store_true")
    e.add_argument("-o", "--output")
    e.set_defaults(func=cmd_export, fmt="json")
    return p


def main(argv=None, stdout=None):
    stdout = stdout if stdout is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _Usage as exc:
        parser.print_usage(sys.stderr)
        print(f"homog3: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SystemExit as exc:  # --help / --version
        return int(exc.code or 0)
    cfg = RunConfig(
        command=args.command,
        flags={k: v for k, v in vars(args).items() if k != "func"},
        budgets=dict(args.budget or []),
        output=getattr(args, "output", None),
        fmt=args.fmt,
    )
    try:
        with budgets.overriding(cfg.budgets):
            report, code = args.func(args, cfg, stdout)
        if report is not None:
            _emit(cfg, report, stdout)
        return code
    except ResourceLimitError as exc:
        print(f"homog3: budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (Homog3Error, ValueError, OSError) as exc:
        print(f"homog3: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
