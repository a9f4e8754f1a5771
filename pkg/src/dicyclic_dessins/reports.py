"""Machine-readable claim reports.

A report is a command name, its parameters, and a list of claims, each
carrying an anchor (the mathematical statement being checked), a status
in {pass, fail, assumed} and supporting data.  "assumed" is reserved
for the maximal-signature and full-automorphism-group assertions that
cannot be established numerically.

Serialisation is deterministic (sorted keys, fixed separators); timing
lives in a separate envelope field outside the payload so repeated runs
produce byte-identical payloads.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

VALID_STATUSES = ("pass", "fail", "assumed")


@dataclass
class Claim:
    id: str
    anchor: str
    status: str
    data: object = None

    def __post_init__(self) -> None:
        if self.status not in VALID_STATUSES:
            raise ValueError(f"invalid status {self.status!r}")

    def as_dict(self) -> dict:
        return {
            "id": self.id,
            "anchor": self.anchor,
            "status": self.status,
            "data": self.data,
        }


@dataclass
class Report:
    command: str
    params: dict
    claims: list[Claim] = field(default_factory=list)

    def add(self, id: str, anchor: str, ok: bool, data: object = None) -> Claim:
        claim = Claim(id, anchor, "pass" if ok else "fail", data)
        self.claims.append(claim)
        return claim

    def add_assumed(self, id: str, anchor: str, data: object = None) -> Claim:
        claim = Claim(id, anchor, "assumed", data)
        self.claims.append(claim)
        return claim

    def all_pass(self) -> bool:
        return all(c.status != "fail" for c in self.claims)

    def failures(self) -> list[Claim]:
        return [c for c in self.claims if c.status == "fail"]

    def payload(self) -> dict:
        return {
            "command": self.command,
            "params": self.params,
            "claims": [c.as_dict() for c in self.claims],
        }

    def payload_json(self) -> str:
        return json.dumps(self.payload(), sort_keys=True, indent=2,
                          separators=(",", ": ")) + "\n"

    def envelope_json(self, ms: float) -> str:
        envelope = {"payload": self.payload(), "ms": ms}
        return json.dumps(envelope, sort_keys=True, indent=2,
                          separators=(",", ": ")) + "\n"
