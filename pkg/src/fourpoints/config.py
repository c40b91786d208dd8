"""Run settings shared by the CLI, the acceptance suite and the scripts."""

from __future__ import annotations

from dataclasses import asdict, dataclass
from typing import Optional

from . import linalg as la


@dataclass(frozen=True)
class Settings:
    seed: int = 0
    prime: int = la.DEFAULT_PRIME
    degree_bound: Optional[int] = None     # per-step kernel search margin
    samples: int = 20                      # random parameters per family
    emit: str = "text"

    def __post_init__(self):
        if self.samples < 1:
            raise ValueError("samples must be positive")
        if self.emit not in ("text", "json"):
            raise ValueError(f"emit must be 'text' or 'json', got {self.emit!r}")
        if self.degree_bound is not None and self.degree_bound < 1:
            raise ValueError("degree bound must be at least 1")

    def apply(self) -> None:
        """Install the field prime (clears the caches if it changed)."""
        if la.prime() != self.prime:
            la.set_prime(self.prime)

    def to_json(self) -> dict:
        return asdict(self)


@dataclass(frozen=True)
class AcceptanceSizes:
    """Trial counts for the acceptance suite.  Defaults are the pinned values."""

    mf_parameters: int = 20
    theorem_parameters: int = 20
    tau_parameters: int = 5
    decompose_trials: int = 100
    max_summands: int = 5
    max_total_dim: int = 40
    euler_pairs: int = 200
    basis_changes: int = 50
    identify_parameters: int = 10
    betti_length: int = 6
    cosyzygy_steps: int = 3
    bpr_window: tuple[int, int] = (-3, 6)
    preprojective_degree: int = 5
    tube_length: int = 4
