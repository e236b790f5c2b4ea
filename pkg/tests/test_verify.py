from dataclasses import replace
from fractions import Fraction

import numpy as np
import pytest

from algebra import I1
from config import VerifySettings
from geometry import (
    Box,
    Chirality,
    DegeneratePoint,
    NonzeroRealPart,
    build_example,
    build_structure,
    frame_at,
    j_field,
    metric_field,
    verify_structure,
)
from geometry.verify import RESIDUAL_NAMES
from poly import PQPolyMap, X0, X1, constant_map

BOX_A = Box.parse("2:3,0:1/10,0:1/10,0:1/10")
PARA_BOX = Box.parse("0:1/10,1:2,1:2,1:2")
G = np.diag([-1.0, -1.0, 1.0, 1.0])


@pytest.fixture(scope="module")
def structure_a():
    return build_structure(build_example("a"), Chirality.LEFT_J, BOX_A)


def test_frame_at_center(structure_a):
    frame = frame_at(structure_a, BOX_A.center())
    assert frame.h > 0
    assert np.allclose(frame.g, frame.h * G)
    assert frame.a**2 - frame.b**2 - frame.c**2 == pytest.approx(1.0)
    assert np.allclose(frame.J @ frame.J, -np.eye(4))
    assert np.allclose(frame.g @ frame.J, frame.Omega)
    assert np.allclose(frame.Omega, -frame.Omega.T)


def test_fields_match_frame(structure_a):
    p = (Fraction(5, 2), Fraction(1, 20), 0, Fraction(1, 30))
    frame = frame_at(structure_a, p)
    assert np.array_equal(metric_field(structure_a.h_sq, p), frame.g)
    assert np.array_equal(j_field(structure_a.f, structure_a.h_sq, Chirality.LEFT_J, p), frame.J)


def test_constant_structure_frame():
    s = build_structure(constant_map(I1), Chirality.RIGHT_J, Box.parse("0:1,0:1,0:1,0:1"))
    frame = frame_at(s, (0, 0, 0, 0))
    assert (frame.h, frame.a, frame.b, frame.c) == (1.0, 1.0, 0.0, 0.0)


def test_degenerate_point(structure_a):
    with pytest.raises(DegeneratePoint):
        metric_field(structure_a.h_sq, (1, 1, 0, 0))
    with pytest.raises(DegeneratePoint):
        frame_at(structure_a, (0, 0, 0, 0))


def test_example_a_passes(structure_a):
    report = verify_structure(structure_a, samples=1000, tol=1e-12, weyl_step=1e-3)
    assert report.passed, report.failures()
    assert report.symbolic_domega_zero and report.regularity_verdict and report.h_sq_consistent
    assert set(report.residuals) == set(RESIDUAL_NAMES)
    for name in ("j_squared", "compatibility", "omega_consistency", "abc_constraint"):
        assert report.residuals[name] < 1e-12
    assert report.residuals["weyl"] < 1e-6
    assert report.samples_used == 1000
    assert report.weyl_points == 10
    assert report.failures() == []


def test_para_kaehler_example_passes():
    s = build_structure(build_example("b"), Chirality.RIGHT_J, PARA_BOX)
    assert s.epsilon == 1
    report = verify_structure(s, samples=200)
    assert report.passed, report.failures()


def test_report_is_deterministic(structure_a):
    first = verify_structure(structure_a, samples=50, seed=7)
    second = verify_structure(structure_a, samples=50, seed=7)
    assert first == second
    assert first.seed == 7


def test_corrupted_structure_is_reported(structure_a):
    flipped = replace(structure_a, epsilon=1)
    report = verify_structure(flipped, samples=50)
    assert not report.passed
    assert not report.h_sq_consistent
    assert report.symbolic_domega_zero
    assert any("h_sq" in line for line in report.failures())
    # a^2 - b^2 - c^2 is still 1, so |a^2 - b^2 - c^2 + eps| == 2
    assert report.residuals["abc_constraint"] == pytest.approx(2.0, abs=1e-12)


def test_wrong_chirality_is_reported(structure_a):
    report = verify_structure(replace(structure_a, chirality=Chirality.RIGHT_J), samples=20)
    assert not report.passed
    assert not report.regularity_verdict
    assert not report.symbolic_domega_zero
    assert report.failing_equations
    assert report.residuals["omega_consistency"] < 1e-12


def test_settings_override(structure_a):
    settings = VerifySettings(samples=30, weyl_points=2, tol=1e-9)
    report = verify_structure(structure_a, settings=settings)
    assert report.samples_used == 30
    assert report.weyl_points == 2
    assert report.tol == 1e-9


def test_rejects_bad_input(structure_a):
    with pytest.raises(ValueError):
        verify_structure(structure_a, samples=0)
    with pytest.raises(NonzeroRealPart):
        verify_structure(replace(structure_a, f=PQPolyMap(X1, X0)), samples=5)
    with pytest.raises(DegeneratePoint):
        verify_structure(replace(structure_a, domain=PARA_BOX), samples=5)


def test_weyl_points_stay_inside_thin_box():
    # the lower corner sits one difference step away from the zero set of h^2
    box = Box.parse("1/1000:1,0:1/10000,0:1/10000,0:1/10000")
    s = build_structure(build_example("a"), Chirality.LEFT_J, box)
    s.validate()
    report = verify_structure(s, samples=20)
    assert report.weyl_points == 10
    assert np.isfinite(report.residuals["weyl"])
    assert report.symbolic_domega_zero and report.h_sq_consistent
