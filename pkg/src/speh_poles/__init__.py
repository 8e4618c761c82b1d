"""Orbit combinatorics and pole bookkeeping for Eisenstein series induced from two Speh blocks."""

from .coset import Shuffle, SigmaContext, enumerate_shuffles, inversions, segment_diagram, sigma_context
from .errors import (
    ConsistencyError,
    DomainError,
    EnumerationLimitError,
    IndeterminateOrderError,
    PoleProximityError,
    SpehPolesError,
    TheoremViolation,
)
from .orbit import Orbit, compute_orbits, exponent_profile, head_tail, living_blocks, residue_weyl_elements

__all__ = [
    "Shuffle", "SigmaContext", "enumerate_shuffles", "inversions", "segment_diagram", "sigma_context",
    "ConsistencyError", "DomainError", "EnumerationLimitError", "IndeterminateOrderError",
    "PoleProximityError", "SpehPolesError", "TheoremViolation",
    "Orbit", "compute_orbits", "exponent_profile", "head_tail", "living_blocks", "residue_weyl_elements",
]
__version__ = "0.1.0"
