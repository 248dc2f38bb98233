"""Command-line entry point.

Exit codes: 0 success, 1 negative decision, 2 usage/parse/library error,
3 guard refusal. Logs go to standard error, results to standard output."""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Any, Callable

from dotenv import find_dotenv, load_dotenv

load_dotenv(find_dotenv(usecwd=True))

from .bramble.oracle import find_bramble  # noqa: E402
from .certificates import (  # noqa: E402
    bramble_to_json,
    decomposition_to_json,
    domino_report_to_json,
    domino_tree_to_json,
    gadget_to_json,
    obstruction_to_json,
    sbn_to_json,
    validate_certificate,
)
from .config import SETTINGS  # noqa: E402
from .decomposition.extreme import extremize  # noqa: E402
from .decomposition.ltp import ltp_witness  # noqa: E402
from .decomposition.search import decide_width_le_k, sbn_exact  # noqa: E402
from .domino.generators import edge_gap_bound, fan_edge_count, gen_chain, gen_fan, max_edge_bound  # noqa: E402
from .domino.recognizer import PROPERTY_IDS, recognize_domino  # noqa: E402
from .errors import GuardExceeded, InternalCheckError, ParseError, SbnError  # noqa: E402
from .graph.io import EDGE_LIST, FORMATS, parse_graph, serialize_graph, to_graph6  # noqa: E402
from .graph.minors import is_minor  # noqa: E402
from .graph.model import Graph  # noqa: E402
from .graph.primitives import lexicographic_product  # noqa: E402
from .obstructions.builtins import builtin_obstructions, obstruction_graphs  # noqa: E402
from .obstructions.search import obstruction_search  # noqa: E402
from .reduction.gadget import gadget, verify_reduction  # noqa: E402
from .reduction.treewidth import treewidth_exact  # noqa: E402

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2
EXIT_GUARD = 3

COMMANDS = (
    "sbn",
    "decide",
    "validate",
    "recognize-domino",
    "gen",
    "obs2",
    "search-obs",
    "gadget",
    "tw",
    "product",
    "formulas",
)

# size flags, only on the commands that read them
_SIZE_FLAGS: dict[str, tuple[str, ...]] = {
    "decide": ("k",),
    "recognize-domino": ("k",),
    "gen": ("k", "n"),
    "search-obs": ("k", "n"),
    "gadget": ("k",),
    "formulas": ("k", "n"),
}


class _Parser(argparse.ArgumentParser):
    """Raises instead of exiting so that ``run`` owns the exit code."""

    def error(self, message: str) -> None:  # type: ignore[override]
        raise ParseError(f"{self.prog}: {message}")


# -- input / output ---------------------------------------------------------


def _read_text(source: str) -> str:
    if source == "-":
        return sys.stdin.read()
    path = Path(source)
    if path.is_file():
        return path.read_text(encoding="utf-8")
    # not a file: inline graph text (graph6, or an edge list with ';' for newlines)
    return source.replace(";", "\n")


def _read_graph(args: argparse.Namespace, index: int = 0) -> Graph:
    sources = args.inputs or []
    if len(sources) <= index:
        raise ParseError(f"{args.command} needs --in")
    return parse_graph(_read_text(sources[index]), args.format)


def _checked(payload: dict[str, Any]) -> dict[str, Any]:
    verdict = validate_certificate(payload)
    if not verdict.ok:
        raise InternalCheckError(f"refusing to print a certificate that fails {verdict.clause}: {verdict.detail}")
    return payload


def _emit(args: argparse.Namespace, payload: Any, lines: list[str]) -> None:
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        print("\n".join(lines))


def _set_lines(sets: Any) -> str:
    return " ".join("{" + ",".join(str(v) for v in sorted(s)) + "}" for s in sets)


def _bag_lines(decomposition: Any) -> list[str]:
    lines = [f"  node {t}: {_set_lines([bag])}" for t, bag in enumerate(decomposition.bags)]
    edges = " ".join(f"{s}-{t}" for s, t in decomposition.tree.sorted_edges)
    lines.append(f"  tree edges: {edges or '(none)'}")
    return lines


def _graph_payload(graph: Graph) -> dict[str, Any]:
    return {
        "graph6": to_graph6(graph),
        "order": graph.order,
        "edges": graph.size,
        "edge_list": [list(e) for e in graph.sorted_edges],
    }


# -- commands ---------------------------------------------------------------


def _cmd_sbn(args: argparse.Namespace) -> int:
    graph = _read_graph(args)
    certificate = sbn_exact(graph, guard=args.guard, oracle_guard=args.guard, threads=args.threads)
    ltp = ltp_witness(extremize(certificate.decomposition)) if certificate.value > 0 else None
    payload = _checked(sbn_to_json(certificate, ltp))
    lines = [
        f"sbn = {certificate.value}",
        f"bramble (order {certificate.value}): {_set_lines(certificate.bramble.sets) or '(empty)'}",
        f"decomposition (width {certificate.decomposition.width}):",
        *_bag_lines(certificate.decomposition),
    ]
    if ltp is not None:
        lines.append(f"minor of T.K_{ltp.k} over a {ltp.tree.order}-node tree")
    _emit(args, payload, lines)
    return EXIT_OK


def _cmd_decide(args: argparse.Namespace) -> int:
    graph = _read_graph(args)
    k = _require(args, "k")
    found = decide_width_le_k(graph, k, guard=args.guard, threads=args.threads)
    if found is not None:
        payload = _checked({**decomposition_to_json(found), "fits": True, "k": k})
        _emit(args, payload, [f"sbn <= {k}: lenient decomposition of width {found.width}", *_bag_lines(found)])
        return EXIT_OK

    try:
        bramble = find_bramble(graph, k + 1, guard=args.guard)
    except GuardExceeded as exc:
        logger.warning("no bramble witness: %s", exc)
        bramble = None
    if bramble is None:
        reason = f"no lenient decomposition of width {k}"
        payload: dict[str, Any] = {"fits": False, "k": k, "reason": reason}
    else:
        reason = f"strict bramble of order {k + 1} found"
        payload = _checked({**bramble_to_json(bramble), "fits": False, "k": k, "reason": reason})
    lines = [f"sbn > {k}: {reason}"]
    if bramble is not None:
        lines.append(f"  {_set_lines(bramble.sets)}")
    _emit(args, payload, lines)
    return EXIT_NEGATIVE


def _cmd_validate(args: argparse.Namespace) -> int:
    sources = args.inputs or []
    if len(sources) != 1:
        raise ParseError("validate takes exactly one --in")
    text = _read_text(sources[0])
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"certificate is not JSON: {exc.msg}", line=exc.lineno) from exc
    certificates = data if isinstance(data, list) else [data]
    verdicts = [validate_certificate(c) for c in certificates]
    payload = [
        {"status": v.status, "clause": v.clause, "detail": v.detail} for v in verdicts
    ]
    lines = [
        f"{i}: {v.status}" + (f" ({v.clause}: {v.detail})" if not v.ok else "") for i, v in enumerate(verdicts)
    ]
    _emit(args, payload if isinstance(data, list) else payload[0], lines)
    return EXIT_OK if all(v.ok for v in verdicts) else EXIT_NEGATIVE


def _cmd_recognize_domino(args: argparse.Namespace) -> int:
    graph = _read_graph(args)
    k = _require(args, "k")
    report = recognize_domino(graph, k, guard=args.guard)
    payload = {"graph6": to_graph6(graph), **domino_report_to_json(report)}
    lines = [f"{k}-domino-tree: {'yes' if report.verdict else 'no'}" + (" (base case)" if report.base_case else "")]
    for pid in PROPERTY_IDS:
        check = report.per_property[pid]
        note = "" if check.passed or check.witness is None else f"  witness {check.witness}"
        lines.append(f"  {pid:>4}  {'pass' if check.passed else 'FAIL'}{note}")
    _emit(args, payload, lines)
    return EXIT_OK if report.verdict else EXIT_NEGATIVE


def _cmd_gen(args: argparse.Namespace) -> int:
    n, k = _require(args, "n"), _require(args, "k")
    graph = gen_chain(n, k) if args.family == "chain" else gen_fan(n, k)
    payload = _checked({**domino_tree_to_json(graph, k), "family": args.family, "n": n})
    _emit(args, payload, [serialize_graph(graph, args.format or EDGE_LIST).rstrip("\n")])
    return EXIT_OK


def _cmd_obs2(args: argparse.Namespace) -> int:
    if args.inputs:
        graph = _read_graph(args)
        found = [name for name, pattern in obstruction_graphs().items() if is_minor(graph, pattern, guard=args.guard)]
        payload = {"graph6": to_graph6(graph), "sbn_le_2": not found, "minors": found}
        lines = [f"sbn <= 2: {'yes' if not found else 'no'}"] + [f"  contains {name}" for name in found]
        _emit(args, payload, lines)
        return EXIT_NEGATIVE if found else EXIT_OK

    records = builtin_obstructions()
    payload = [_checked(obstruction_to_json(r)) for r in records]
    lines = [f"{r.name:<3} {to_graph6(r.graph):<6} bramble {_set_lines(r.bramble.sets)}" for r in records]
    _emit(args, payload, lines)
    return EXIT_OK


def _cmd_search_obs(args: argparse.Namespace) -> int:
    k, n = _require(args, "k"), _require(args, "n")
    records = obstruction_search(k, n, guard=args.guard, threads=args.threads)
    payload = [_checked(obstruction_to_json(r)) for r in records]
    lines = [f"{len(records)} minor-minimal graphs with sbn > {k} on at most {n} vertices"]
    lines += [f"  n={r.graph.order:<2} m={r.graph.size:<3} {to_graph6(r.graph)}" for r in records]
    _emit(args, payload, lines)
    return EXIT_OK


def _cmd_gadget(args: argparse.Namespace) -> int:
    graph = _read_graph(args)
    k = _require(args, "k")
    gadget_map = gadget(graph, k)
    payload = _checked(gadget_to_json(gadget_map))
    lines = [serialize_graph(gadget_map.output, args.format or EDGE_LIST).rstrip("\n")]
    code = EXIT_OK
    if args.verify:
        agrees = verify_reduction(graph, k, guard=args.guard, threads=args.threads)
        payload["reduction_agrees"] = agrees
        lines.append(f"# tw <= {k - 1} iff sbn(gadget) <= {k}: {'agrees' if agrees else 'MISMATCH'}")
        code = EXIT_OK if agrees else EXIT_NEGATIVE
    _emit(args, payload, lines)
    return code


def _cmd_tw(args: argparse.Namespace) -> int:
    graph = _read_graph(args)
    tw, decomposition = treewidth_exact(graph, guard=args.guard)
    payload = _checked({**decomposition_to_json(decomposition), "tw": tw, "bn": tw + 1})
    _emit(args, payload, [f"tw = {tw}", f"bn = {tw + 1}", *_bag_lines(decomposition)])
    return EXIT_OK


def _cmd_product(args: argparse.Namespace) -> int:
    if len(args.inputs or []) != 2:
        raise ParseError("product takes --in exactly twice")
    product = lexicographic_product(_read_graph(args, 0), _read_graph(args, 1))
    _emit(args, _graph_payload(product), [serialize_graph(product, args.format or EDGE_LIST).rstrip("\n")])
    return EXIT_OK


def _cmd_formulas(args: argparse.Namespace) -> int:
    n, k = _require(args, "n"), _require(args, "k")
    payload: dict[str, Any] = {"n": n, "k": k, "max_edges": max_edge_bound(n, k), "fan_edges": None, "gap_bound": None}
    if n >= 3 * k:
        payload["fan_edges"] = fan_edge_count(n, k)
        payload["gap_bound"] = edge_gap_bound(n, k)
        if gen_fan(n, k).size != payload["fan_edges"]:
            raise InternalCheckError("fan generator disagrees with its edge formula")
    if gen_chain(n, k).size != payload["max_edges"]:
        raise InternalCheckError("chain generator disagrees with the edge bound")
    lines = [f"max {payload['max_edges']}"]
    if payload["fan_edges"] is not None:
        lines += [f"fan {payload['fan_edges']}", f"gap >= {payload['gap_bound']}"]
    _emit(args, payload, lines)
    return EXIT_OK


_HANDLERS: dict[str, Callable[[argparse.Namespace], int]] = {
    "sbn": _cmd_sbn,
    "decide": _cmd_decide,
    "validate": _cmd_validate,
    "recognize-domino": _cmd_recognize_domino,
    "gen": _cmd_gen,
    "obs2": _cmd_obs2,
    "search-obs": _cmd_search_obs,
    "gadget": _cmd_gadget,
    "tw": _cmd_tw,
    "product": _cmd_product,
    "formulas": _cmd_formulas,
}


def _require(args: argparse.Namespace, name: str) -> int:
    value = getattr(args, name, None)
    if value is None:
        raise ParseError(f"{args.command} needs --{name}")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--in", dest="inputs", action="append", metavar="PATH", help="graph file, '-' or inline text")
    common.add_argument("--format", choices=FORMATS, default=None)
    common.add_argument("--json", action="store_true")
    common.add_argument("--threads", type=int, default=None)
    common.add_argument("--guard", type=int, default=None)

    parser = _Parser(prog="sbn", description="Exact strict bramble number computations with certificates.")
    commands = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name in COMMANDS:
        sub = commands.add_parser(name, parents=[common])
        for flag in _SIZE_FLAGS.get(name, ()):
            sub.add_argument(f"--{flag}", type=int, default=None)
        if name == "gen":
            sub.add_argument("family", choices=("chain", "fan"))
        elif name == "gadget":
            sub.add_argument("--verify", action="store_true", help="also check the reduction on this graph")
    return parser


def run(argv: list[str]) -> int:
    try:
        args = build_parser().parse_args(argv)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return int(exc.code or 0)

    try:
        return _HANDLERS[args.command](args)
    except GuardExceeded as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except SbnError as exc:
        if isinstance(exc, InternalCheckError):
            logger.error("internal check failed: %s", exc)
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def _init_sentry() -> None:
    if not SETTINGS.sentry_dsn:
        logger.debug("Sentry not configured; set SENTRY_DSN to enable error tracking")
        return
    try:
        import sentry_sdk
        from sentry_sdk.integrations.logging import LoggingIntegration

        sentry_sdk.init(
            dsn=SETTINGS.sentry_dsn,
            environment=SETTINGS.sentry_environment,
            traces_sample_rate=SETTINGS.sentry_traces_sample_rate,
            integrations=[LoggingIntegration(level=logging.INFO, event_level=logging.ERROR)],
            send_default_pii=False,
        )
        logger.info("Sentry error tracking enabled (environment=%s)", SETTINGS.sentry_environment)
    except Exception:  # noqa: BLE001
        logger.exception("Failed to initialize Sentry")


def main() -> None:
    logging.basicConfig(
        level=getattr(logging, SETTINGS.log_level, logging.INFO),
        stream=sys.stderr,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )
    _init_sentry()
    sys.exit(run(sys.argv[1:]))
