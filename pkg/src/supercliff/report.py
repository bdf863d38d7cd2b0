"""Verification records shared by the checking modules and the harness."""

from dataclasses import dataclass, field
from typing import Optional


@dataclass
class CheckResult:
    name: str
    inputs: list
    passed: bool
    dims: dict = field(default_factory=dict)
    counterexample: Optional[str] = None
    notes: list = field(default_factory=list)
    details: dict = field(default_factory=dict)
    elapsed: Optional[float] = None

    @property
    def verdict(self):
        return "PASS" if self.passed else "FAIL"

    def fail(self, witness, note=None):
        """Mark as failed; a witness is always recorded."""
        self.passed = False
        if self.counterexample is None:
            self.counterexample = str(witness)
        if note:
            self.notes.append(note)
        return self

    def to_dict(self):
        out = {
            "name": self.name,
            "inputs": self.inputs,
            "verdict": self.verdict,
            "dims": self.dims,
        }
        if self.details:
            out["details"] = self.details
        if self.notes:
            out["notes"] = self.notes
        if self.counterexample is not None:
            out["counterexample"] = self.counterexample
        if self.elapsed is not None:
            out["elapsed"] = self.elapsed
        return out
