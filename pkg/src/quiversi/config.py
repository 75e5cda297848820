"""Search caps shared by the enumeration engines."""
from __future__ import annotations

from dataclasses import dataclass


@dataclass
class Config:
    # split search for Schur roots and canonical decompositions
    max_total_size: int = 24
    # arrow labelings visited by si_dim before giving up
    max_labelings: int = 2_000_000
    # largest m tried when lifting stability to the doubled quiver
    doubling_max_m: int = 64
    # componentwise bound limit for the perpendicular Hilbert basis search
    hilbert_bound_limit: int = 64
    # recursion depth for refining Schur sequences
    refine_depth: int = 64


CONFIG = Config()
