"""Finite-difference curvature of a sampled 4-dimensional metric.

The metric is sampled on a central-difference stencil; first and second
derivatives are second-order accurate.  From them the Christoffel symbols,
the Riemann tensor (all indices lowered), Ricci, scalar curvature and the
Weyl tensor are assembled.  A 4-dimensional metric is locally conformally
flat iff its Weyl tensor vanishes.

Conventions::

    Gamma^a_bc = 1/2 g^ad (d_b g_dc + d_c g_db - d_d g_bc)
    R_abcd     = 1/2 (d_b d_c g_ad + d_a d_d g_bc - d_a d_c g_bd - d_b d_d g_ac)
                 + g_ef (Gamma^e_bc Gamma^f_ad - Gamma^e_bd Gamma^f_ac)
    R_bd       = g^ac R_abcd
"""

from __future__ import annotations

import logging
import math
from typing import Callable, Sequence, Tuple

import numpy as np

logger = logging.getLogger(__name__)

DIM = 4


class SingularMetric(ValueError):
    """The sampled metric cannot be inverted."""


def metric_derivatives(
    sampler: Callable[[np.ndarray], np.ndarray], point: Sequence[float], step: float
) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Return ``g``, ``dg[k, i, j] = d_k g_ij`` and ``ddg[k, l, i, j] = d_k d_l g_ij``."""
    if not step > 0:
        raise ValueError(f"step must be positive, got {step!r}")
    x = np.asarray(point, dtype=np.float64)
    if x.shape != (DIM,):
        raise ValueError(f"point must have {DIM} coordinates, got shape {x.shape}")
    eye = np.eye(DIM) * step

    def at(offset: np.ndarray) -> np.ndarray:
        return np.asarray(sampler(x + offset), dtype=np.float64)

    g0 = at(np.zeros(DIM))
    dg = np.zeros((DIM, DIM, DIM))
    ddg = np.zeros((DIM, DIM, DIM, DIM))
    for k in range(DIM):
        gp, gm = at(eye[k]), at(-eye[k])
        dg[k] = (gp - gm) / (2 * step)
        ddg[k, k] = (gp - 2 * g0 + gm) / step**2
    for k in range(DIM):
        for l in range(k + 1, DIM):
            mixed = (
                at(eye[k] + eye[l]) - at(eye[k] - eye[l])
                - at(-eye[k] + eye[l]) + at(-eye[k] - eye[l])
            ) / (4 * step**2)
            ddg[k, l] = ddg[l, k] = mixed
    return g0, dg, ddg


def _inverse(g: np.ndarray) -> np.ndarray:
    if np.linalg.matrix_rank(g) < DIM:
        raise SingularMetric(f"metric is singular:\n{g}")
    try:
        return np.linalg.inv(g)
    except np.linalg.LinAlgError as exc:
        raise SingularMetric(str(exc)) from None


def curvature_from_jet(g: np.ndarray, dg: np.ndarray, ddg: np.ndarray):
    """Christoffel symbols, Riemann, Ricci and scalar curvature from a 2-jet."""
    ginv = _inverse(g)
    # first kind: Gamma_{d,bc} = 1/2 (d_b g_dc + d_c g_db - d_d g_bc)
    first = 0.5 * (
        np.einsum("bdc->dbc", dg) + np.einsum("cdb->dbc", dg) - dg
    )
    gamma = np.einsum("ad,dbc->abc", ginv, first)
    riemann = 0.5 * (
        np.einsum("bcad->abcd", ddg)
        + np.einsum("adbc->abcd", ddg)
        - np.einsum("acbd->abcd", ddg)
        - np.einsum("bdac->abcd", ddg)
    )
    riemann += np.einsum("ef,ebc,fad->abcd", g, gamma, gamma)
    riemann -= np.einsum("ef,ebd,fac->abcd", g, gamma, gamma)
    ricci = np.einsum("ac,abcd->bd", ginv, riemann)
    scalar = float(np.einsum("bd,bd->", ginv, ricci))
    return gamma, riemann, ricci, scalar


def weyl_from_curvature(g: np.ndarray, riemann: np.ndarray, ricci: np.ndarray, scalar: float) -> np.ndarray:
    """Trace-free part of ``R_abcd`` in dimension 4."""
    n = DIM
    kn = (
        np.einsum("ac,bd->abcd", g, ricci)
        - np.einsum("ad,bc->abcd", g, ricci)
        - np.einsum("bc,ad->abcd", g, ricci)
        + np.einsum("bd,ac->abcd", g, ricci)
    )
    gg = np.einsum("ac,bd->abcd", g, g) - np.einsum("ad,bc->abcd", g, g)
    return riemann - kn / (n - 2) + scalar * gg / ((n - 1) * (n - 2))


def weyl_tensor(sampler: Callable[[np.ndarray], np.ndarray], point: Sequence[float], step: float) -> np.ndarray:
    g, dg, ddg = metric_derivatives(sampler, point, step)
    _, riemann, ricci, scalar = curvature_from_jet(g, dg, ddg)
    return weyl_from_curvature(g, riemann, ricci, scalar)


def weyl_numeric(sampler: Callable[[np.ndarray], np.ndarray], point: Sequence[float], step: float = 1e-3) -> float:
    """Largest absolute component of the Weyl tensor ``C_abcd`` at ``point``."""
    value = float(np.max(np.abs(weyl_tensor(sampler, point, step))))
    logger.debug("weyl at %s (step %g): %.3e", tuple(point), step, value)
    return value


def observed_order(errors: Sequence[float], steps: Sequence[float]) -> float:
    """Convergence order ``log(e1/e2) / log(s1/s2)`` between two step sizes."""
    (e1, e2), (s1, s2) = errors, steps
    if e1 <= 0 or e2 <= 0:
        return math.inf
    return math.log(e1 / e2) / math.log(s1 / s2)


def roundoff_floor(scale: float, step: float) -> float:
    """Rounding level of curvature built from second differences of a metric of size ``scale``.

    Below it a residual says nothing about truncation error, so a convergence
    order is only meaningful for residuals above this floor.
    """
    return 64 * float(np.finfo(np.float64).eps) * scale / step**2


def converges(errors: Sequence[float], steps: Sequence[float], scale: float, min_order: float = 1.5) -> bool:
    """True when the residual shrinks at ``min_order`` or sits at rounding level at every step."""
    if all(e <= roundoff_floor(scale, s) for e, s in zip(errors, steps)):
        return True
    return observed_order(errors, steps) >= min_order
