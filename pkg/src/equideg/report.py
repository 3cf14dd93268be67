"""Run reports: result payload plus configuration echo, digests, timing."""

from __future__ import annotations

import hashlib
import json
import time
from dataclasses import dataclass, field
from typing import Any

TOOL_VERSION = "0.1.0"


def file_digest(path: str) -> str:
    h = hashlib.sha256()
    with open(path, "rb") as fh:
        h.update(fh.read())
    return h.hexdigest()


@dataclass
class RunReport:
    subcommand: str
    config: dict[str, Any]
    result: Any = None
    certificates: Any = None
    input_digests: dict[str, str] = field(default_factory=dict)
    _t0: float = field(default_factory=time.perf_counter)

    def finish(self) -> dict:
        out = {
            "subcommand": self.subcommand,
            "config": self.config,
            "result": self.result,
            "timing_ms": round(1000 * (time.perf_counter() - self._t0), 3),
            "tool_version": TOOL_VERSION,
            "input_digests": self.input_digests,
        }
        if self.certificates is not None:
            out["certificates"] = self.certificates
        return out

    def dumps(self) -> str:
        return json.dumps(self.finish(), indent=2, sort_keys=False)
