"""Verification of a built structure: exact checks plus sampled residuals."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Dict, Optional

import numpy as np

from config import DEFAULTS, VerifySettings
from poly.operators import check_regular
from .curvature import weyl_numeric
from .frames import structure_metric_sampler
from .structure import (
    FLAT_DIAGONAL,
    DegeneratePoint,
    EpsilonStructure,
    d_omega,
    j_pattern,
    omega_field,
    quadratic_form,
)

logger = logging.getLogger(__name__)

RESIDUAL_NAMES = (
    "j_squared",
    "compatibility",
    "omega_consistency",
    "omega_antisymmetry",
    "abc_constraint",
    "weyl",
)


@dataclass
class StructureReport:
    """Residual maxima over the sample and the exact verdicts."""

    symbolic_domega_zero: bool
    regularity_verdict: bool
    h_sq_consistent: bool
    residuals: Dict[str, float]
    samples_used: int
    weyl_points: int
    tol: float
    weyl_tol: float
    weyl_step: float
    seed: int
    failing_equations: tuple = field(default_factory=tuple)

    @property
    def passed(self) -> bool:
        if not (self.symbolic_domega_zero and self.regularity_verdict and self.h_sq_consistent):
            return False
        for name, value in self.residuals.items():
            bound = self.weyl_tol if name == "weyl" else self.tol
            if not value < bound:
                return False
        return True

    def failures(self) -> list:
        out = []
        if not self.symbolic_domega_zero:
            out.append("d Omega is not identically zero")
        if not self.regularity_verdict:
            out.append("f is not regular on the chirality side")
        if not self.h_sq_consistent:
            out.append("h_sq does not match -epsilon*(f1^2 - f2^2 - f3^2)")
        for name, value in self.residuals.items():
            bound = self.weyl_tol if name == "weyl" else self.tol
            if not value < bound:
                out.append(f"{name} residual {value:.3e} >= {bound:.1e}")
        return out


def _max_abs(x: np.ndarray) -> float:
    return float(np.max(np.abs(x))) if x.size else 0.0


def verify_structure(
    structure: EpsilonStructure,
    samples: Optional[int] = None,
    tol: Optional[float] = None,
    weyl_step: Optional[float] = None,
    seed: Optional[int] = None,
    settings: VerifySettings = DEFAULTS,
) -> StructureReport:
    """Check every defining identity of ``structure``.

    Exact part: ``d Omega == 0``, side-matching regularity and the ``h^2``
    identity.  Numeric part, at quasi-random domain points: max-abs entry of
    ``J^2 - eps I``, ``J^T g J + eps g``, ``g J - Omega``, ``Omega + Omega^T``,
    ``|a^2 - b^2 - c^2 + eps|`` and the Weyl tensor of ``g = hG``.
    """
    samples = settings.samples if samples is None else samples
    tol = settings.tol if tol is None else tol
    weyl_step = settings.weyl_step if weyl_step is None else weyl_step
    seed = settings.seed if seed is None else seed
    if samples < 1:
        raise ValueError(f"samples must be >= 1, got {samples}")

    f, eps, chirality = structure.f, structure.epsilon, structure.chirality
    verdict = check_regular(f, chirality.side)
    domega_zero = all(c.is_zero() for c in d_omega(f, chirality).values())
    h_sq_consistent = structure.h_sq == quadratic_form(f) * (-eps)

    points = structure.domain.sample(samples, seed)
    omega = omega_field(f, chirality)
    fvals = np.empty((samples, 3))
    hsq = np.empty(samples)
    om = np.empty((samples, 4, 4))
    for n, p in enumerate(points):
        value = structure.h_sq.evaluate(p)
        if value <= 0:
            raise DegeneratePoint(f"h^2 = {value} <= 0 at {tuple(float(c) for c in p)}")
        hsq[n] = float(value)
        fvals[n] = [float(c.evaluate(p)) for c in (f.f1, f.f2, f.f3)]
        om[n] = [[float(e.evaluate(p)) for e in row] for row in omega]

    h = np.sqrt(hsq)
    abc = fvals / h[:, None]
    J = j_pattern(abc, chirality)
    g = h[:, None, None] * np.diag(FLAT_DIAGONAL)
    eye = np.eye(4)

    residuals = {
        "j_squared": _max_abs(J @ J - eps * eye),
        "compatibility": _max_abs(np.swapaxes(J, -1, -2) @ g @ J + eps * g),
        "omega_consistency": _max_abs(g @ J - om),
        "omega_antisymmetry": _max_abs(om + np.swapaxes(om, -1, -2)),
        "abc_constraint": _max_abs(abc[:, 0] ** 2 - abc[:, 1] ** 2 - abc[:, 2] ** 2 + eps),
    }

    n_weyl = min(settings.weyl_points, samples)
    sampler = structure_metric_sampler(structure)
    # difference stencil points must stay inside the box
    pts = structure.domain.interior_sample_array(n_weyl, 2 * weyl_step, seed)
    residuals["weyl"] = max((weyl_numeric(sampler, x, weyl_step) for x in pts), default=0.0)

    logger.info(
        "verified %d points: %s",
        samples, ", ".join(f"{k}={v:.2e}" for k, v in residuals.items()),
    )
    return StructureReport(
        symbolic_domega_zero=domega_zero,
        regularity_verdict=verdict.is_regular,
        h_sq_consistent=h_sq_consistent,
        residuals=residuals,
        samples_used=samples,
        weyl_points=n_weyl,
        tol=tol,
        weyl_tol=settings.weyl_tol,
        weyl_step=weyl_step,
        seed=seed,
        failing_equations=verdict.failing_equations(),
    )
