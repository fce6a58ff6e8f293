"""Command-line interface.

Exit codes: 0 success, 1 a bound check failed, 2 bad input, 3 time budget
exhausted (the partial result is still printed with ``exact: false``).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__
from .bounds import (
    CHECKS,
    BoundReport,
    bound_report,
    check_corpus,
    enumerate_and_check,
    labeled_graph,
    worker_count,
)
from .corpus import random_corpus, write_corpus
from .families import (
    LABELING_CLAIMS,
    GraphRecipe,
    RecipeError,
    build_graph,
    family_labelings,
    parse_recipe,
)
from .graph import Graph, GraphError
from .graphio import format_graph
from .greedy import delta_order_bound, greedy_qtrdf
from .labeling import LabelingError, RomanLabeling, is_qtrdf, is_rdf, is_trdf
from .solvers import (
    BudgetExceeded,
    CapExceeded,
    Parameter,
    certificate_valid,
    solve,
)

SCHEMA_VERSION = 1
EXIT_OK, EXIT_VIOLATION, EXIT_INPUT, EXIT_BUDGET = 0, 1, 2, 3
DEFAULT_BUDGET_MS = 60_000
DEFAULT_CAP_N = 63

RECIPE_HELP = """\
graph inputs are an edge-list file (plain "n m" header or DIMACS "p edge")
or a recipe string:
  classic:<path|cycle|complete|star|empty>:<n>
  g1:t=<t>            gadget_h           figure1
  g2k:base=<recipe>,k=<k>     gprime_k:base=<recipe>,k=<k>
  g3k:base=<recipe>,k=<k>     reduction_gprime:base=<recipe>
  f1:n=<n>,pendants=<p>
nested recipes containing commas go in brackets, e.g.
  g2k:base=[f1:n=5,pendants=1],k=3
and base=file:<path> reads the base graph from a file.

environment: QTRD_THREADS caps worker processes (0 = one per CPU);
QTRD_PURE_PYTHON=1 disables the compiled kernels.
"""


class InputError(Exception):
    pass


# -- output ------------------------------------------------------------------


def _text(obj, indent: int = 0) -> list[str]:
    pad = "  " * indent
    lines = []
    if isinstance(obj, dict):
        for key, val in obj.items():
            if isinstance(val, (dict, list)) and val and not _flat_list(val):
                lines.append(f"{pad}{key}:")
                lines.extend(_text(val, indent + 1))
            else:
                lines.append(f"{pad}{key}: {_scalar(val)}")
    elif isinstance(obj, list):
        for item in obj:
            if isinstance(item, (dict, list)):
                lines.append(f"{pad}-")
                lines.extend(_text(item, indent + 1))
            else:
                lines.append(f"{pad}- {_scalar(item)}")
    else:
        lines.append(pad + _scalar(obj))
    return lines


def _flat_list(val) -> bool:
    return isinstance(val, list) and all(not isinstance(x, (dict, list)) for x in val)


def _scalar(val) -> str:
    if isinstance(val, list):
        return " ".join(str(x) for x in val)
    if val is None:
        return "-"
    if isinstance(val, bool):
        return "yes" if val else "no"
    return str(val)


def emit(args, payload) -> None:
    """Write ``payload`` (dict or raw text) to ``--output`` or stdout."""
    if isinstance(payload, str):
        text = payload
    elif args.format == "json":
        text = json.dumps({"schema_version": SCHEMA_VERSION, **payload}, indent=2) + "\n"
    else:
        text = "\n".join(_text(payload)) + "\n"
    if args.output and args.output != "-":
        Path(args.output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


# -- helpers -----------------------------------------------------------------


def load_graph(spec: str) -> Graph:
    try:
        return build_graph(spec)
    except (GraphError, RecipeError):
        raise
    except OSError as exc:
        raise InputError(f"cannot read {spec}: {exc}") from None


def load_labeling(spec: str) -> RomanLabeling:
    path = Path(spec)
    text = path.read_text(encoding="utf-8") if path.is_file() else spec
    lines = [ln for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if len(lines) != 1:
        raise LabelingError(f"expected one line of comma-separated labels, got {len(lines)} lines")
    return RomanLabeling.parse(lines[0])


def budget_seconds(args) -> float:
    return args.budget_ms / 1000.0


def check_cap(args, g: Graph) -> None:
    if g.n > args.cap_n:
        raise CapExceeded(f"graph order {g.n} exceeds --cap-n {args.cap_n}")


def graph_info(spec: str, g: Graph) -> dict:
    return {"input": spec, "n": g.n, "m": g.size}


def solve_checked(g: Graph, p: Parameter, budget: float, backend=None):
    res = solve(g, p, budget=budget, backend=backend)
    if not certificate_valid(g, res):  # pragma: no cover - guarded by tests
        raise RuntimeError(f"solver produced an invalid certificate for {p.value}")
    return res


# -- commands ----------------------------------------------------------------


def cmd_compute(args) -> int:
    g = load_graph(args.graph)
    check_cap(args, g)
    if args.all_params:
        params = list(Parameter)
    else:
        params = [Parameter.parse(p) for p in (args.param or ["qtR"])]
    results = []
    code = EXIT_OK
    for p in params:
        if p.is_total and g.isolated_vertices():
            if not args.all_params:
                raise GraphError(f"{p.value} is undefined for graphs with isolated vertices")
            results.append({"parameter": p.value, "value": None,
                            "error": "undefined: graph has isolated vertices"})
            continue
        try:
            res = solve_checked(g, p, budget_seconds(args), args.backend)
        except BudgetExceeded as exc:
            res = exc.best
            code = EXIT_BUDGET
        results.append(res.to_json(timing=not args.no_timing))
        if code == EXIT_BUDGET:
            break
    emit(args, {"command": "compute", "graph": graph_info(args.graph, g), "results": results})
    return code


def _verdict(fn, g, f) -> dict:
    try:
        v = fn(g, f)
    except GraphError as exc:
        return {"valid": None, "witness": None, "reason": str(exc)}
    return {"valid": v.valid, "witness": v.witness, "reason": v.reason}


def cmd_verify(args) -> int:
    g = load_graph(args.graph)
    f = load_labeling(args.labeling)
    if len(f) != g.n:
        raise LabelingError(f"labeling has {len(f)} entries but the graph has {g.n} vertices")
    emit(args, {
        "command": "verify",
        "graph": graph_info(args.graph, g),
        "labeling": str(f),
        "weight": f.weight,
        "rdf": _verdict(is_rdf, g, f),
        "qtrdf": _verdict(is_qtrdf, g, f),
        "trdf": _verdict(is_trdf, g, f),
    })
    return EXIT_OK


def cmd_greedy(args) -> int:
    g = load_graph(args.graph)
    trace = greedy_qtrdf(g)
    out = {"command": "greedy", "graph": graph_info(args.graph, g), **trace.to_json()}
    out["valid_qtrdf"] = is_qtrdf(g, trace.labeling).valid
    out["delta_order_bound"] = delta_order_bound(g, trace.centers) if trace.centers else None
    code = EXIT_OK
    exact = {"value": None, "exact": None, "certificate": None}
    if g.n <= args.cap_n:
        try:
            res = solve_checked(g, Parameter.GAMMA_QTR, budget_seconds(args), args.backend)
            exact = {"value": res.value, "exact": True, "certificate": str(res.certificate)}
        except BudgetExceeded as exc:
            exact = {"value": exc.best.value, "exact": False,
                     "certificate": str(exc.best.certificate)}
            code = EXIT_BUDGET
    else:
        exact["reason"] = f"order exceeds --cap-n {args.cap_n}"
    out["gamma_qtR"] = exact
    emit(args, out)
    return code


def _family_recipe(args) -> GraphRecipe:
    if args.recipe:
        return parse_recipe(args.recipe)
    if not args.name:
        raise InputError("family needs --name or a recipe argument")
    params = {}
    for key in ("n", "t", "k", "pendants"):
        val = getattr(args, key)
        if val is not None:
            params[key] = val
    base = None
    if args.base is not None:
        path = Path(args.base)
        base = load_graph(args.base) if path.is_file() else parse_recipe(args.base)
    return GraphRecipe(args.name, params, base)


def cmd_family(args) -> int:
    recipe = _family_recipe(args)
    g = recipe.build()
    edge_list = format_graph(g)
    if not args.emit_labelings:
        emit(args, edge_list)
        return EXIT_OK
    labelings = {}
    preds = {"rdf": is_rdf, "qtrdf": is_qtrdf, "trdf": is_trdf}
    for name, f in family_labelings(recipe).items():
        claim = LABELING_CLAIMS.get(name, "qtrdf")
        labelings[name] = {
            "labeling": str(f),
            "weight": f.weight,
            "claim": claim,
            "valid": preds[claim](g, f).valid,
        }
    emit(args, {
        "command": "family",
        "recipe": str(recipe),
        "n": g.n,
        "m": g.size,
        "edge_list": edge_list,
        "labelings": labelings,
    })
    return EXIT_OK


def _checks(args) -> list[str] | None:
    if not args.checks:
        return None
    names = [c.strip() for c in args.checks.split(",") if c.strip()]
    for c in names:
        if c not in CHECKS:
            raise InputError(f"unknown check {c!r}; choose from {', '.join(CHECKS)}")
    return names


def cmd_verify_bounds(args) -> int:
    checks = _checks(args)
    budget = budget_seconds(args)
    try:
        if args.graph:
            g = load_graph(args.graph)
            check_cap(args, g)
            report: BoundReport = bound_report(g, args.graph, checks, budget, args.backend)
            emit(args, {"command": "verify-bounds", "report": report.to_json()})
            return EXIT_OK if report.all_hold else EXIT_VIOLATION
        if args.enumerate is not None:
            agg = enumerate_and_check(args.enumerate, checks, args.connected_only, args.deep,
                                      args.workers, budget, args.backend)
        else:
            n, p, count, seed = args.random
            n, count, seed, p = int(n), int(count), int(seed), float(p)
            if n > args.cap_n:
                raise CapExceeded(f"graph order {n} exceeds --cap-n {args.cap_n}")
            items = random_corpus(n, p, count, seed)
            if args.connected_only:
                items = [(i, g) for i, g in items if g.is_connected()]
            agg = check_corpus(items, checks, f"gnp n={n} p={p} count={count} seed={seed}",
                               args.workers, budget, args.backend)
    except BudgetExceeded as exc:
        emit(args, {"command": "verify-bounds", "error": str(exc),
                    "partial": exc.best.to_json(timing=False)})
        return EXIT_BUDGET
    emit(args, {"command": "verify-bounds", "report": agg.to_json()})
    return EXIT_OK if agg.all_hold else EXIT_VIOLATION


def _enumerate_chunk(task):
    n, lo, hi, param, connected_only, budget, backend = task
    hist: dict[int, int] = {}
    rows = []
    for mask in range(lo, hi):
        g = labeled_graph(n, mask)
        if connected_only and not g.is_connected():
            continue
        if param.is_total and g.isolated_vertices():
            continue
        value = solve(g, param, budget=budget, backend=backend).value
        hist[value] = hist.get(value, 0) + 1
        rows.append((mask, value))
    return hist, rows


def cmd_enumerate(args) -> int:
    from .bounds import _run_sharded, _pairs

    n = args.n
    if n < 1 or n > 7:
        raise InputError("enumerate supports 1 <= n <= 7")
    if n == 7 and not args.deep:
        raise InputError("n = 7 enumerates 2,097,152 graphs; pass --deep")
    param = Parameter.parse(args.param)
    total = 1 << len(_pairs(n))
    step = -(-total // min(total, 64))
    tasks = [(n, lo, min(lo + step, total), param, args.connected_only,
              budget_seconds(args), args.backend) for lo in range(0, total, step)]
    hist: dict[int, int] = {}
    rows: list = []
    try:
        parts = _run_sharded(_enumerate_chunk, tasks, worker_count(args.workers))
    except BudgetExceeded as exc:
        emit(args, {"command": "enumerate", "error": str(exc),
                    "partial": exc.best.to_json(timing=False)})
        return EXIT_BUDGET
    for h, r in parts:
        for k, v in h.items():
            hist[k] = hist.get(k, 0) + v
        rows.extend(r)
    out = {
        "command": "enumerate",
        "n": n,
        "parameter": param.value,
        "connected_only": args.connected_only,
        "graphs": sum(hist.values()),
        "histogram": {str(k): hist[k] for k in sorted(hist)},
    }
    if args.list:
        out["values"] = [{"graph_id": f"n{n}-e{m}", "value": v} for m, v in rows]
    emit(args, out)
    return EXIT_OK


def cmd_corpus(args) -> int:
    directory = args.dir or args.output
    if not directory:
        raise InputError("corpus needs --dir (or --output) naming a directory")
    seed = args.seed if args.corpus_seed is None else args.corpus_seed
    manifest = write_corpus(directory, args.n, args.p, args.count, seed)
    args.output = None  # the directory already holds the corpus; report on stdout
    manifest = {k: v for k, v in manifest.items() if k != "schema_version"}
    emit(args, {"command": "corpus", "directory": str(directory), **manifest})
    return EXIT_OK


# -- parser ------------------------------------------------------------------


def _positive_int(text: str) -> int:
    val = int(text)
    if val <= 0:
        raise argparse.ArgumentTypeError("must be positive")
    return val


def _probability(text: str) -> float:
    val = float(text)
    if not 0.0 <= val <= 1.0:
        raise argparse.ArgumentTypeError("must lie in [0, 1]")
    return val


def _add_globals(p: argparse.ArgumentParser, suppress: bool) -> None:
    def d(value):
        return argparse.SUPPRESS if suppress else value

    g = p.add_argument_group("global options")
    g.add_argument("--budget-ms", type=_positive_int, default=d(DEFAULT_BUDGET_MS),
                   help="solver time budget per parameter in milliseconds (default 60000)")
    g.add_argument("--cap-n", type=_positive_int, default=d(DEFAULT_CAP_N),
                   help="largest graph order handed to the exact solvers (default 63)")
    g.add_argument("--seed", type=int, default=d(0), help="seed for randomized corpora")
    g.add_argument("--format", choices=("json", "text"), default=d("json"))
    g.add_argument("--output", default=d(None), help="write to this path instead of stdout")
    g.add_argument("--backend", choices=("python", "compiled"), default=d(None),
                   help="force a kernel backend (default: compiled when available)")
    g.add_argument("--workers", type=int, default=d(None),
                   help="worker processes for enumeration (overrides QTRD_THREADS)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qtrd",
        description="Exact quasi-total Roman domination and related parameters.",
        epilog=RECIPE_HELP,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    _add_globals(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    def add(name, help_text, func):
        sp = sub.add_parser(name, help=help_text, description=help_text, epilog=RECIPE_HELP,
                            formatter_class=argparse.RawDescriptionHelpFormatter)
        _add_globals(sp, suppress=True)
        sp.set_defaults(func=func)
        return sp

    sp = add("compute", "compute exact parameter values with certificates", cmd_compute)
    sp.add_argument("graph", help="edge-list file or recipe")
    sp.add_argument("--param", action="append",
                    help="gamma|gamma_t|gamma_R|gamma_tR|gamma_qtR|rho (aliases g,t,R,tR,qtR); "
                         "repeatable; default qtR")
    sp.add_argument("--all-params", action="store_true", help="compute all six parameters")
    sp.add_argument("--no-timing", action="store_true",
                    help="report elapsed_ms as 0 so output is reproducible byte for byte")

    sp = add("verify", "check a labeling against the RDF, QTRDF and TRDF conditions", cmd_verify)
    sp.add_argument("graph", help="edge-list file or recipe")
    sp.add_argument("labeling", help="file or inline string of comma-separated labels")

    sp = add("greedy", "run the greedy QTRDF construction", cmd_greedy)
    sp.add_argument("graph", help="edge-list file or recipe")

    sp = add("family", "build a named family graph as an edge list", cmd_family)
    sp.add_argument("recipe", nargs="?", help="full recipe string (alternative to --name)")
    sp.add_argument("--name", help="family name, e.g. g1, g2k, gprime_k, g3k, reduction_gprime")
    sp.add_argument("--base", help="base graph as a file or recipe")
    sp.add_argument("--k", type=int)
    sp.add_argument("--t", type=int)
    sp.add_argument("--n", type=int)
    sp.add_argument("--pendants", type=int)
    sp.add_argument("--emit-labelings", action="store_true",
                    help="emit JSON with the edge list and the construction's labelings")

    sp = add("verify-bounds", "machine-check the bounds on graphs", cmd_verify_bounds)
    src = sp.add_mutually_exclusive_group(required=True)
    src.add_argument("--graph", help="edge-list file or recipe")
    src.add_argument("--enumerate", type=int, metavar="N", help="every labeled graph of order N")
    src.add_argument("--random", nargs=4, metavar=("N", "P", "COUNT", "SEED"),
                     help="COUNT seeded G(N, P) graphs")
    sp.add_argument("--checks", help=f"comma-separated subset of: {', '.join(CHECKS)}")
    sp.add_argument("--connected-only", action="store_true")
    sp.add_argument("--deep", action="store_true", help="allow n = 7 (several minutes per CPU)")

    sp = add("enumerate", "value distribution of a parameter over all labeled graphs",
             cmd_enumerate)
    sp.add_argument("n", type=int)
    sp.add_argument("--param", default="qtR")
    sp.add_argument("--connected-only", action="store_true")
    sp.add_argument("--deep", action="store_true", help="allow n = 7")
    sp.add_argument("--list", action="store_true", help="include every graph's value")

    sp = add("corpus", "write a seeded G(n, p) corpus with a hash manifest", cmd_corpus)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--p", type=_probability, required=True)
    sp.add_argument("--count", type=int, required=True)
    sp.add_argument("--dir", help="output directory")
    sp.add_argument("--corpus-seed", type=int, default=None, help=argparse.SUPPRESS)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (GraphError, RecipeError, LabelingError, CapExceeded, InputError, ValueError,
            OSError) as exc:
        print(f"qtrd: error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
