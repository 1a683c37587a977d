"""Three-valued outcomes carried by every probe and certificate check."""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import InputError

YES = "CertifiedYes"
NO = "CertifiedNo"
UNDETERMINED = "UndeterminedAtBound"

OUTCOMES = (YES, NO, UNDETERMINED)


@dataclass(frozen=True)
class Verdict:
    claim: str
    outcome: str
    witness: dict = field(default_factory=dict)
    bounds: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.outcome not in OUTCOMES:
            raise InputError(f"unknown verdict outcome {self.outcome!r}")
        if self.outcome == NO and not self.witness:
            raise InputError("CertifiedNo requires a concrete witness")

    def is_yes(self):
        return self.outcome == YES

    def is_no(self):
        return self.outcome == NO

    def as_dict(self):
        return {"claim": self.claim, "outcome": self.outcome,
                "witness": dict(self.witness), "bounds": dict(self.bounds)}

    @classmethod
    def from_dict(cls, data):
        return cls(claim=data["claim"], outcome=data["outcome"],
                   witness=dict(data.get("witness", {})),
                   bounds=dict(data.get("bounds", {})))
