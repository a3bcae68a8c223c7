"""Structured verification results shared by all suites."""
from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Any

PASS, FAIL, INFO = "PASS", "FAIL", "INFO"


@dataclass
class Certificate:
    claim_id: str
    status: str
    anchor: str
    witness: Any = field(default_factory=dict)
    seconds: float = 0.0

    def __post_init__(self):
        if self.status not in (PASS, FAIL, INFO):
            raise ValueError(f"bad status {self.status!r}")
        if self.status == FAIL and not self.witness:
            raise ValueError(f"{self.claim_id}: FAIL certificates need a witness")

    @property
    def ok(self) -> bool:
        return self.status != FAIL

    def to_dict(self, deterministic: bool = False) -> dict:
        return {
            "claim_id": self.claim_id,
            "status": self.status,
            "anchor": self.anchor,
            "witness": self.witness,
            "timing": 0.0 if deterministic else round(self.seconds, 6),
        }


def check(claim_id: str, condition: bool, anchor: str, witness=None, **extra) -> Certificate:
    """PASS/FAIL certificate from a boolean; the witness is kept in both cases."""
    w = dict(witness or {})
    w.update(extra)
    if not condition and not w:
        w = {"detail": "condition false"}
    return Certificate(claim_id, PASS if condition else FAIL, anchor, w)


class timed:
    """Context manager stamping the elapsed time onto certificates."""

    def __init__(self):
        self.start = 0.0
        self.seconds = 0.0

    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.seconds = time.perf_counter() - self.start
        return False

    def stamp(self, certs):
        each = self.seconds / max(1, len(certs))
        for c in certs:
            c.seconds = each
        return certs
