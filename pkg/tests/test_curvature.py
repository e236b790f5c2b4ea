import math

import numpy as np
import pytest
import sympy as sp

from geometry import (
    Box,
    Chirality,
    SingularMetric,
    build_example,
    build_structure,
    converges,
    observed_order,
    roundoff_floor,
    structure_metric_sampler,
    weyl_numeric,
    weyl_tensor,
)
from geometry.curvature import curvature_from_jet, metric_derivatives

FLAT = np.diag([-1.0, -1.0, 1.0, 1.0])
BOX_A = Box.parse("2:3,0:1/10,0:1/10,0:1/10")


def symbolic_weyl(metric, xs):
    """Weyl tensor C_abcd of a sympy metric, assembled from Christoffel symbols."""
    n = len(xs)
    ginv = metric.inv()
    gamma = [[[sp.simplify(sum(
        ginv[a, d] * (sp.diff(metric[d, c], xs[b]) + sp.diff(metric[d, b], xs[c]) - sp.diff(metric[b, c], xs[d]))
        for d in range(n)) / 2) for c in range(n)] for b in range(n)] for a in range(n)]
    # R^a_bcd = d_c Gamma^a_db - d_d Gamma^a_cb + Gamma^a_ce Gamma^e_db - Gamma^a_de Gamma^e_cb
    rup = [[[[sp.diff(gamma[a][d][b], xs[c]) - sp.diff(gamma[a][c][b], xs[d])
              + sum(gamma[a][c][e] * gamma[e][d][b] - gamma[a][d][e] * gamma[e][c][b] for e in range(n))
              for d in range(n)] for c in range(n)] for b in range(n)] for a in range(n)]
    riem = [[[[sp.simplify(sum(metric[a, e] * rup[e][b][c][d] for e in range(n)))
               for d in range(n)] for c in range(n)] for b in range(n)] for a in range(n)]
    ric = [[sp.simplify(sum(ginv[a, c] * riem[a][b][c][d] for a in range(n) for c in range(n)))
            for d in range(n)] for b in range(n)]
    scal = sp.simplify(sum(ginv[b, d] * ric[b][d] for b in range(n) for d in range(n)))
    g = metric
    return [[[[sp.simplify(
        riem[a][b][c][d]
        - (g[a, c] * ric[b][d] - g[a, d] * ric[b][c] - g[b, c] * ric[a][d] + g[b, d] * ric[a][c]) / 2
        + scal * (g[a, c] * g[b, d] - g[a, d] * g[b, c]) / 6)
        for d in range(n)] for c in range(n)] for b in range(n)] for a in range(n)]


@pytest.fixture(scope="module")
def control():
    """Flat plane times a hyperbolic plane: curved, not conformally flat."""
    xs = sp.symbols("x0:4")
    metric = sp.diag(-1, -1, 1, sp.exp(2 * xs[2]))
    weyl = symbolic_weyl(metric, xs)
    exact = sp.lambdify(xs, weyl, "numpy")

    def sampler(x):
        return np.diag([-1.0, -1.0, 1.0, math.exp(2 * x[2])])

    return sampler, lambda p: np.array(exact(*p), dtype=np.float64)


def test_flat_metric_has_no_weyl():
    assert weyl_numeric(lambda x: FLAT, np.zeros(4)) < 1e-12
    assert weyl_numeric(lambda x: 3.0 * FLAT, np.array([1.0, 2.0, 3.0, 4.0]), step=1e-2) < 1e-12


def test_metric_derivatives_of_quadratic():
    def sampler(x):
        return np.diag([-1.0 - x[0] ** 2, -1.0, 1.0 + x[1] * x[2], 1.0])

    g, dg, ddg = metric_derivatives(sampler, [0.5, 1.0, 2.0, 0.0], 1e-3)
    assert g[0, 0] == pytest.approx(-1.25)
    assert dg[0, 0, 0] == pytest.approx(-1.0, abs=1e-8)
    assert dg[2, 2, 2] == pytest.approx(1.0, abs=1e-8)
    assert ddg[0, 0, 0, 0] == pytest.approx(-2.0, abs=1e-5)
    assert ddg[1, 2, 2, 2] == pytest.approx(1.0, abs=1e-5)
    assert ddg[2, 1, 2, 2] == pytest.approx(1.0, abs=1e-5)


def test_flat_jet_has_no_curvature():
    _, riemann, ricci, scalar = curvature_from_jet(FLAT, np.zeros((4, 4, 4)), np.zeros((4, 4, 4, 4)))
    assert not riemann.any() and not ricci.any()
    assert scalar == 0.0


def test_singular_metric_rejected():
    with pytest.raises(SingularMetric):
        weyl_tensor(lambda x: np.diag([1.0, 1.0, 1.0, 0.0]), np.zeros(4), 1e-3)
    with pytest.raises(ValueError):
        weyl_tensor(lambda x: FLAT, np.zeros(4), 0.0)
    with pytest.raises(ValueError):
        weyl_tensor(lambda x: FLAT, np.zeros(3), 1e-3)


def test_conformally_flat_example_has_no_weyl():
    structure = build_structure(build_example("a"), Chirality.LEFT_J, BOX_A)
    sampler = structure_metric_sampler(structure)
    points = BOX_A.sample_array(12, seed=3)[1:11]
    coarse = [weyl_numeric(sampler, x, 1e-3) for x in points]
    fine = [weyl_numeric(sampler, x, 5e-4) for x in points]
    assert max(coarse) < 1e-6
    scale = max(np.max(np.abs(sampler(x))) for x in points)
    assert converges([max(coarse), max(fine)], [1e-3, 5e-4], scale)


def test_control_metric_matches_symbolic_oracle(control):
    sampler, exact = control
    point = np.array([0.2, -0.4, 0.3, 0.7])
    reference = exact(point)
    assert np.max(np.abs(reference)) > 1e-2

    errors = []
    for step in (1e-3, 5e-4):
        numeric = weyl_tensor(sampler, point, step)
        # the two sign conventions of R_abcd differ by a global sign only
        errors.append(min(np.max(np.abs(numeric - reference)), np.max(np.abs(numeric + reference))))
    assert errors[0] < 1e-4
    assert observed_order(errors, [1e-3, 5e-4]) >= 1.5
    assert weyl_numeric(sampler, point) > 1e-2


def test_observed_order():
    assert observed_order([4e-6, 1e-6], [1e-3, 5e-4]) == pytest.approx(2.0)
    assert observed_order([0.0, 1e-6], [1e-3, 5e-4]) == math.inf


def test_converges_accepts_rounding_level_residuals():
    floor = roundoff_floor(4.0, 5e-4)
    assert converges([floor / 10, floor / 2], [1e-3, 5e-4], 4.0)
    assert converges([4e-6, 1e-6], [1e-3, 5e-4], 4.0)
    assert not converges([4e-6, 3e-6], [1e-3, 5e-4], 4.0)
