from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional

from .graph import VertexSet, members

HOLDS = "Holds"
VIOLATED = "Violated"
NOT_APPLICABLE = "NotApplicable"


@dataclass(frozen=True)
class ClaimReport:
    """Outcome of one executable structural statement.

    ``witness`` lists the vertices that reproduce a violation; ``index`` is the
    cycle position ``i`` (1..5) for per-position statements.
    """

    id: str
    status: str
    witness: tuple[int, ...] = ()
    reason: str = ""
    index: Optional[int] = None
    assumed: tuple[str, ...] = field(default=())

    @property
    def holds(self) -> bool:
        return self.status == HOLDS

    @property
    def violated(self) -> bool:
        return self.status == VIOLATED

    def to_dict(self) -> dict:
        out = {"id": self.id, "status": self.status, "witness": list(self.witness), "reason": self.reason}
        if self.index is not None:
            out["index"] = self.index
        if self.assumed:
            out["assumed"] = list(self.assumed)
        return out


def holds(claim_id: str, reason: str = "", index: Optional[int] = None) -> ClaimReport:
    return ClaimReport(claim_id, HOLDS, (), reason, index)


def violated(claim_id: str, witness: Iterable[int] | VertexSet, reason: str, index: Optional[int] = None) -> ClaimReport:
    if isinstance(witness, int):
        witness = members(witness)
    return ClaimReport(claim_id, VIOLATED, tuple(sorted(set(witness))), reason, index)


def not_applicable(claim_id: str, reason: str, index: Optional[int] = None) -> ClaimReport:
    return ClaimReport(claim_id, NOT_APPLICABLE, (), reason, index)
