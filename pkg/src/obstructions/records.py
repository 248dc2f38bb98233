from __future__ import annotations

from dataclasses import dataclass

from ..bramble.model import StrictBramble, bramble_order, validate_bramble
from ..decomposition.model import LenientTreeDecomposition, validate_ltd
from ..decomposition.search import decide_width_le_k
from ..graph.minors import one_step_minors
from ..graph.model import Graph
from ..verdict import Verdict


@dataclass(frozen=True)
class MinorCheck:
    step: str
    minor: Graph
    decomposition: LenientTreeDecomposition | None

    @property
    def fits(self) -> bool:
        return self.decomposition is not None


@dataclass(frozen=True)
class ObstructionRecord:
    graph: Graph
    k: int
    bramble: StrictBramble
    minimality_log: tuple[MinorCheck, ...]
    name: str | None = None

    def check(self) -> Verdict:
        """Re-verify the bramble and every entry of the minimality log."""
        verdict = validate_bramble(self.bramble)
        if not verdict.ok:
            return Verdict.invalid("bramble", verdict.witness, verdict.detail)
        order, _ = bramble_order(self.bramble)
        if order != self.k + 1:
            return Verdict.invalid("order", order, f"bramble has order {order}, expected {self.k + 1}")
        expected = [step.describe() for step in one_step_minors(self.graph)]
        if [entry.step for entry in self.minimality_log] != expected:
            return Verdict.invalid("log", detail="minimality log does not list every one-step minor")
        for entry in self.minimality_log:
            if entry.decomposition is None:
                return Verdict.invalid("minor", entry.step, f"{entry.step} has no width-{self.k} decomposition")
            if entry.decomposition.base != entry.minor or not validate_ltd(entry.decomposition).ok:
                return Verdict.invalid("minor", entry.step, f"certificate for {entry.step} does not validate")
            if entry.decomposition.width > self.k:
                return Verdict.invalid("minor", entry.step, f"certificate for {entry.step} is too wide")
        return Verdict.valid()


def minimality_log(
    graph: Graph,
    k: int,
    *,
    guard: int | None = None,
    stop_on_failure: bool = False,
) -> list[MinorCheck]:
    """Every one-step minor with a width-k certificate (or ``None``)."""
    log: list[MinorCheck] = []
    for step in one_step_minors(graph):
        found = decide_width_le_k(step.graph, k, guard=guard)
        log.append(MinorCheck(step=step.describe(), minor=step.graph, decomposition=found))
        if found is None and stop_on_failure:
            break
    return log
