"""JSON shapes for every certificate the command line prints.

Each certificate embeds its base graph as graph6 so that it can be checked
on its own, and :func:`validate_certificate` re-runs the matching validator."""

from __future__ import annotations

from typing import Any

from .bramble.model import MODES, STRICT, StrictBramble, bramble_order, validate_bramble
from .decomposition.model import (
    CLASSIC,
    LENIENT,
    ClassicTreeDecomposition,
    LenientTreeDecomposition,
    TreeDecomposition,
    validate_classic,
    validate_ltd,
)
from .decomposition.ltp import LtpWitness
from .decomposition.search import SbnCertificate
from .domino.recognizer import PROPERTY_IDS, DominoReport, recognize_domino
from .errors import StructuralError
from .graph.io import from_graph6, to_graph6
from .graph.minors import verify_minor_model
from .graph.model import Graph, MinorModel
from .graph.primitives import lexicographic_product, mask_is_connected
from .obstructions.records import MinorCheck, ObstructionRecord
from .reduction.gadget import GadgetMap, gadget
from .verdict import Verdict

BRAMBLE = "bramble"
OBSTRUCTION = "obstruction"
GADGET = "gadget"
DOMINO = "domino-tree"


def _graph_field(data: dict[str, Any], key: str = "graph6") -> Graph:
    code = data.get(key)
    if not isinstance(code, str):
        raise StructuralError(f"certificate lacks a {key!r} string")
    return from_graph6(code)


def _object_field(data: dict[str, Any], key: str) -> dict[str, Any]:
    value = data.get(key)
    if not isinstance(value, dict):
        raise StructuralError(f"certificate lacks a {key!r} object")
    return value


def _int_field(data: dict[str, Any], key: str) -> int:
    value = data.get(key)
    if isinstance(value, bool) or not isinstance(value, int):
        raise StructuralError(f"certificate lacks an integer {key!r}")
    return value


def decomposition_to_json(decomposition: TreeDecomposition) -> dict[str, Any]:
    return {
        "kind": decomposition.kind,
        "graph6": to_graph6(decomposition.base),
        "width": decomposition.width,
        "tree_edges": [list(e) for e in decomposition.tree.sorted_edges],
        "bags": {str(t): sorted(bag) for t, bag in enumerate(decomposition.bags)},
    }


def decomposition_from_json(data: dict[str, Any], base: Graph | None = None) -> TreeDecomposition:
    kind = data.get("kind", LENIENT)
    cls = {LENIENT: LenientTreeDecomposition, CLASSIC: ClassicTreeDecomposition}.get(kind)
    if cls is None:
        raise StructuralError(f"unknown decomposition kind {kind!r}")
    graph = base if base is not None else _graph_field(data)
    raw_bags = data.get("bags")
    if not isinstance(raw_bags, dict):
        raise StructuralError("decomposition lacks a 'bags' object")
    try:
        nodes = sorted(int(t) for t in raw_bags)
    except ValueError as exc:
        raise StructuralError(f"bag key is not a node number: {exc}") from exc
    if nodes != list(range(len(nodes))):
        raise StructuralError(f"bag keys must be the nodes 0..{len(nodes) - 1}, got {nodes}")
    bags = [raw_bags[str(t)] for t in nodes]
    raw_edges = data.get("tree_edges", [])
    if not isinstance(raw_edges, list) or not all(isinstance(e, list) for e in raw_edges):
        raise StructuralError("'tree_edges' must be a list of node pairs")
    edges = [tuple(e) for e in raw_edges]
    for edge in edges:
        if len(edge) != 2 or any(not isinstance(t, int) or not 0 <= t < len(bags) for t in edge):
            raise StructuralError(f"tree edge {list(edge)} references a node without a bag")
    return cls.from_parts(graph, bags, edges)


def bramble_to_json(bramble: StrictBramble) -> dict[str, Any]:
    return {
        "kind": BRAMBLE,
        "mode": bramble.mode,
        "graph6": to_graph6(bramble.base),
        "order": bramble_order(bramble)[0],
        "sets": [sorted(s) for s in bramble.sets],
    }


def bramble_from_json(data: dict[str, Any], base: Graph | None = None) -> StrictBramble:
    mode = data.get("mode", STRICT)
    if mode not in MODES:
        raise StructuralError(f"unknown bramble mode {mode!r}")
    graph = base if base is not None else _graph_field(data)
    return StrictBramble.of(graph, data.get("sets", []), mode=mode)


def sbn_to_json(certificate: SbnCertificate, ltp: LtpWitness | None = None) -> dict[str, Any]:
    data = {
        "sbn": certificate.value,
        "graph6": to_graph6(certificate.decomposition.base),
        "bramble": bramble_to_json(certificate.bramble),
        "decomposition": decomposition_to_json(certificate.decomposition),
    }
    if ltp is not None:
        data["ltp"] = {"k": ltp.k, "tree": to_graph6(ltp.tree), **minor_model_to_json(ltp.model)}
    return data


def domino_report_to_json(report: DominoReport) -> dict[str, Any]:
    return {
        "k": report.k,
        "verdict": report.verdict,
        "base_case": report.base_case,
        "properties": {
            pid: {"pass": report.per_property[pid].passed, "witness": report.per_property[pid].witness}
            for pid in PROPERTY_IDS
        },
    }


def domino_tree_to_json(graph: Graph, k: int) -> dict[str, Any]:
    return {"kind": DOMINO, "k": k, "graph6": to_graph6(graph), "edges": graph.size}


def gadget_to_json(gadget_map: GadgetMap) -> dict[str, Any]:
    provenance = []
    for p in gadget_map.provenance:
        if p.is_original:
            provenance.append({"vertex": p.original})
        else:
            provenance.append({"edge": list(p.edge or ()), "copy": p.copy})
    return {
        "kind": GADGET,
        "k": gadget_map.k,
        "source": to_graph6(gadget_map.source),
        "graph6": to_graph6(gadget_map.output),
        "provenance": provenance,
    }


def minor_model_to_json(model: MinorModel) -> dict[str, Any]:
    return {
        "pattern": to_graph6(model.pattern),
        "host": to_graph6(model.host),
        "branch_sets": [sorted(b) for b in model.branch_sets],
    }


def obstruction_to_json(record: ObstructionRecord) -> dict[str, Any]:
    return {
        "kind": OBSTRUCTION,
        "name": record.name,
        "k": record.k,
        "graph6": to_graph6(record.graph),
        "bramble": bramble_to_json(record.bramble),
        "minimality_log": [
            {
                "step": entry.step,
                "graph6": to_graph6(entry.minor),
                "decomposition": None
                if entry.decomposition is None
                else decomposition_to_json(entry.decomposition),
            }
            for entry in record.minimality_log
        ],
    }


def _check_ltp(data: dict[str, Any], graph: Graph) -> Verdict:
    tree = _graph_field(data, "tree")
    if tree.size != tree.order - 1 or not mask_is_connected(tree, tree.full_mask):
        return Verdict.invalid("ltp", detail="product witness is not hosted on a tree")
    k = _int_field(data, "k")
    host = _graph_field(data, "host")
    if k < 1 or host != lexicographic_product(tree, Graph.complete(k)):
        return Verdict.invalid("ltp", detail=f"host is not the product of the tree with K_{k}")
    model = MinorModel(
        pattern=graph, host=host, branch_sets=tuple(frozenset(b) for b in data.get("branch_sets", []))
    )
    if _graph_field(data, "pattern") != graph or not verify_minor_model(model):
        return Verdict.invalid("ltp", detail="branch sets do not form a minor model")
    return Verdict.valid()


def _check_sbn_bundle(data: dict[str, Any]) -> Verdict:
    value = _int_field(data, "sbn")
    bramble = bramble_from_json(_object_field(data, "bramble"))
    decomposition = decomposition_from_json(_object_field(data, "decomposition"))
    if bramble.base != decomposition.base:
        return Verdict.invalid("graph", detail="bramble and decomposition are over different graphs")
    for verdict in (validate_bramble(bramble), validate_ltd(decomposition)):
        if not verdict.ok:
            return verdict
    order = bramble_order(bramble)[0]
    if order != value or decomposition.width != value:
        return Verdict.invalid(
            "value", detail=f"bramble order {order} and width {decomposition.width} do not both equal {value}"
        )
    if "ltp" in data:
        ltp = _object_field(data, "ltp")
        if _int_field(ltp, "k") != value:
            return Verdict.invalid("ltp", detail=f"product witness is not over K_{value}")
        return _check_ltp(ltp, decomposition.base)
    return Verdict.valid()


def validate_certificate(data: dict[str, Any]) -> Verdict:
    """Re-check a certificate printed by the command line."""
    if not isinstance(data, dict):
        raise StructuralError("a certificate is a JSON object")
    if "sbn" in data:
        return _check_sbn_bundle(data)
    kind = data.get("kind")
    if kind == LENIENT:
        return validate_ltd(decomposition_from_json(data))
    if kind == CLASSIC:
        return validate_classic(decomposition_from_json(data))
    if kind == BRAMBLE:
        bramble = bramble_from_json(data)
        verdict = validate_bramble(bramble)
        if verdict.ok and "order" in data and bramble_order(bramble)[0] != data["order"]:
            return Verdict.invalid("order", detail=f"bramble order differs from the stated {data['order']}")
        return verdict
    if kind == OBSTRUCTION:
        graph = _graph_field(data)
        k = _int_field(data, "k")
        entries = data.get("minimality_log", [])
        if not isinstance(entries, list) or not all(isinstance(e, dict) for e in entries):
            raise StructuralError("'minimality_log' must be a list of objects")
        if not all(isinstance(e.get("step"), str) for e in entries):
            raise StructuralError("every minimality log entry needs a 'step' string")
        log = tuple(
            MinorCheck(
                step=entry["step"],
                minor=_graph_field(entry),
                decomposition=None
                if entry.get("decomposition") is None
                else decomposition_from_json(_object_field(entry, "decomposition")),
            )
            for entry in entries
        )
        record = ObstructionRecord(
            graph=graph,
            k=k,
            bramble=bramble_from_json(_object_field(data, "bramble"), base=graph),
            minimality_log=log,
            name=data.get("name"),
        )
        return record.check()
    if kind == GADGET:
        rebuilt = gadget_to_json(gadget(_graph_field(data, "source"), _int_field(data, "k")))
        if any(data.get(key) != rebuilt[key] for key in ("graph6", "provenance")):
            return Verdict.invalid("gadget", detail="output differs from the gadget of the source graph")
        return Verdict.valid()
    if kind == DOMINO:
        report = recognize_domino(_graph_field(data), _int_field(data, "k"))
        if not report.verdict:
            return Verdict.invalid(
                "domino", witness=report.failed(), detail=f"fails properties {', '.join(report.failed())}"
            )
        return Verdict.valid()
    raise StructuralError(f"unknown certificate kind {kind!r}")
