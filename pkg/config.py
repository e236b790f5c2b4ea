"""
Verification tuning knobs.
Safe to tweak without touching the geometry code; CLI flags override them
per invocation.
"""

from dataclasses import dataclass


@dataclass
class VerifySettings:
    """Numeric defaults for sampling and structure verification."""

    # Quasi-random points checked by verify_structure
    samples: int = 1000
    # Pointwise residual bound for J^2, compatibility, Omega and a,b,c identities
    tol: float = 1e-12
    # Central-difference step for the curvature check
    weyl_step: float = 1e-3
    # How many of the sample points also get a Weyl evaluation
    weyl_points: int = 10
    weyl_tol: float = 1e-6
    # Points used to fix the sign of epsilon on a box
    epsilon_samples: int = 256
    # Offset into the Halton sequence
    seed: int = 0


DEFAULTS = VerifySettings()
