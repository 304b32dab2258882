"""Resource caps for the exact searches.

All caps can be overridden with the ``TEMPLATE_CHROMA_BUDGET`` environment
variable.  Accepted forms:

* a bare integer, applied to the solver node cap, e.g. ``10000000``;
* comma-separated ``key=value`` pairs with keys ``nodes``, ``vertices``,
  ``scan``, ``dim``, ``points``, e.g. ``nodes=500000,vertices=200``.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, replace

from .errors import BudgetExceeded

ENV_VAR = "TEMPLATE_CHROMA_BUDGET"


@dataclass(frozen=True)
class Budget:
    solver_nodes: int = 100_000_000  # backtracking node cap; exceeding is an error, never an approximation
    max_vertices: int = 5000         # hypergraph / grid vertex cap
    max_scan: int = 2_000_000        # k-subset enumeration cap for edge building
    max_dim: int = 4                 # template enumeration caps
    max_points: int = 6

    @classmethod
    def from_env(cls) -> "Budget":
        raw = os.environ.get(ENV_VAR)
        if not raw:
            return cls()
        budget = cls()
        raw = raw.strip()
        if "=" not in raw:
            return replace(budget, solver_nodes=int(raw))
        keymap = {
            "nodes": "solver_nodes",
            "vertices": "max_vertices",
            "scan": "max_scan",
            "dim": "max_dim",
            "points": "max_points",
        }
        overrides = {}
        for part in raw.split(","):
            key, _, value = part.partition("=")
            key = key.strip()
            if key not in keymap:
                raise BudgetExceeded(f"unknown budget key {key!r} in {ENV_VAR}", key=key)
            overrides[keymap[key]] = int(value)
        return replace(budget, **overrides)


def default_budget() -> Budget:
    return Budget.from_env()
