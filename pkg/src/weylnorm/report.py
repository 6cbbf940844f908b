"""Machine-readable outcomes of relation checks."""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable

Instance = tuple[str, tuple[int, ...], Callable[[], bool]]


@dataclass(frozen=True)
class RelationCheck:
    relation_id: str
    indices: tuple[int, ...]
    status: str  # "pass" | "fail"

    def to_json(self) -> dict:
        return {
            "relation_id": self.relation_id,
            "indices": list(self.indices),
            "status": self.status,
        }


@dataclass
class VerificationReport:
    checks: list[RelationCheck] = field(default_factory=list)

    @property
    def all_pass(self) -> bool:
        return all(c.status == "pass" for c in self.checks)

    def failures(self) -> list[RelationCheck]:
        return [c for c in self.checks if c.status != "pass"]

    def extend(self, other: "VerificationReport") -> "VerificationReport":
        self.checks.extend(other.checks)
        self.checks.sort(key=lambda c: (c.relation_id, c.indices))
        return self

    def to_json(self) -> list[dict]:
        return [c.to_json() for c in self.checks]

    def summary(self) -> str:
        n = len(self.checks)
        bad = len(self.failures())
        return f"{n - bad}/{n} relation instances hold"


def run_instances(instances: Iterable[Instance], threads: int = 1) -> VerificationReport:
    """Evaluate relation instances, optionally on a worker pool.

    Results are sorted by (relation_id, indices) so the report does not
    depend on scheduling.
    """
    items = list(instances)
    if threads > 1 and len(items) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            outcomes = list(pool.map(lambda it: bool(it[2]()), items))
    else:
        outcomes = [bool(fn()) for _, _, fn in items]
    checks = [
        RelationCheck(rid, idx, "pass" if ok else "fail")
        for (rid, idx, _), ok in zip(items, outcomes)
    ]
    checks.sort(key=lambda c: (c.relation_id, c.indices))
    return VerificationReport(checks)
