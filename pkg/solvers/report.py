"""Solver outcome and its JSON encoding."""

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import List, Optional

import numpy as np

from shared.errors import InputError

FOUND = "found"
EXHAUSTED = "exhausted"


@dataclass
class SolverReport:
    """Result of one solver run.

    list_sizes holds [max, mean] per level, level 0 (the e2 candidates)
    first. windows holds the symbols checked per merge, base merge first.
    """
    outcome: str
    e: Optional[np.ndarray]
    iterations: int
    list_sizes: List[List[int]] = field(default_factory=list)
    windows: List[int] = field(default_factory=list)
    elapsed_ms: int = 0
    algorithm: str = ""
    seed: int = 0

    @property
    def found(self) -> bool:
        return self.outcome == FOUND

    def to_dict(self, include_time: bool = True) -> dict:
        data = {
            "outcome": self.outcome,
            "e": None if self.e is None else [int(x) for x in self.e],
            "iterations": self.iterations,
            "list_sizes": [[int(x) for x in row] for row in self.list_sizes],
            "elapsed_ms": self.elapsed_ms,
            "algorithm": self.algorithm,
            "windows": [int(x) for x in self.windows],
            "seed": self.seed,
        }
        if not include_time:
            del data["elapsed_ms"]
        return data

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":")) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "SolverReport":
        try:
            data = json.loads(text)
            return cls(
                outcome=data["outcome"],
                e=None if data["e"] is None else np.array(data["e"], dtype=np.int64),
                iterations=int(data["iterations"]),
                list_sizes=[list(row) for row in data["list_sizes"]],
                windows=list(data.get("windows", [])),
                elapsed_ms=int(data["elapsed_ms"]),
                algorithm=data.get("algorithm", ""),
                seed=int(data.get("seed", 0)),
            )
        except (KeyError, TypeError, ValueError) as e:
            raise InputError(f"Malformed solver report: {e}") from e

    def write(self, path) -> None:
        Path(path).write_text(self.to_json(), encoding="utf-8")
