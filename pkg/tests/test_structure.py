from dataclasses import replace
from fractions import Fraction

import numpy as np
import pytest

from algebra import I1, I2
from geometry import (
    Box,
    Chirality,
    DegeneratePoint,
    EpsilonStructure,
    FLAT_DIAGONAL,
    NonzeroRealPart,
    NotRegular,
    SignChange,
    build_example,
    build_structure,
    choose_epsilon,
    d_omega,
    domega_is_zero,
    example_chirality,
    h_squared,
    j_pattern,
    omega_field,
    omega_pattern,
    quadratic_form,
)
from poly import PQPolyMap, RealPoly4, X0, X1, X2, X3, check_regular, constant_map, derived_regular, regularity_equations

PSEUDO_BOX = Box.parse("2:3,0:1/10,0:1/10,0:1/10")
PARA_BOX = Box.parse("0:1/10,1:2,1:2,1:2")

# 3 * dOmega_ijk == sign * (regularity equation number k), for maps with f0 = 0
DOMEGA_TABLE = {
    Chirality.LEFT_J: {(0, 1, 2): (1, 3), (0, 1, 3): (-1, 2), (0, 2, 3): (-1, 1), (1, 2, 3): (1, 0)},
    Chirality.RIGHT_J: {(0, 1, 2): (-1, 3), (0, 1, 3): (1, 2), (0, 2, 3): (1, 1), (1, 2, 3): (-1, 0)},
}


def test_h_squared_examples():
    assert h_squared(constant_map(I1), -1) == 1
    assert h_squared(constant_map(I2), 1) == 1
    s = X1 + X2 + X3
    assert h_squared(build_example("a"), -1) == 2 * (X0 * X0 - s * s)
    assert h_squared(build_example("b"), -1) == 2 * (X0 * X0 - s * s)


def test_h_squared_rejects_real_part():
    with pytest.raises(NonzeroRealPart):
        h_squared(PQPolyMap(X0, X1), -1)
    with pytest.raises(ValueError):
        h_squared(constant_map(I1), 0)


def test_choose_epsilon_examples():
    box = Box.parse("-1:1,-1:1,-1:1,-1:1")
    assert choose_epsilon(constant_map(I1), box) == -1
    assert choose_epsilon(constant_map(I2), box) == 1
    assert choose_epsilon(build_example("a"), PSEUDO_BOX) == -1
    assert choose_epsilon(build_example("a"), PARA_BOX) == 1


def test_choose_epsilon_sign_change():
    with pytest.raises(SignChange):
        choose_epsilon(build_example("a"), Box.parse("0:3,0:1/10,0:1/10,0:1/10"))
    with pytest.raises(SignChange):
        choose_epsilon(PQPolyMap(f1=X0), Box.parse("-1:1,0:1,0:1,0:1"))
    with pytest.raises(SignChange):
        choose_epsilon(constant_map(I1 + I2), Box.parse("0:1,0:1,0:1,0:1"))


def test_omega_field_examples():
    om = omega_field(constant_map(I1), Chirality.LEFT_J)
    upper = {(i, j): om[i][j] for i in range(4) for j in range(i + 1, 4)}
    assert upper == {(0, 1): -1, (0, 2): 0, (0, 3): 0, (1, 2): 0, (1, 3): 0, (2, 3): -1}
    om = omega_field(constant_map(I1), Chirality.RIGHT_J)
    assert om[0][1] == -1 and om[2][3] == 1
    assert all(e.is_zero() for row in omega_field(PQPolyMap(), Chirality.LEFT_J) for e in row)


def test_omega_field_left_entries():
    f = PQPolyMap(0, X0, X1, X2)
    om = omega_field(f, Chirality.LEFT_J)
    assert (om[0][1], om[0][2], om[0][3]) == (-X0, -X1, -X2)
    assert (om[1][2], om[1][3], om[2][3]) == (X2, -X1, -X0)


@pytest.mark.parametrize("chirality", list(Chirality))
def test_omega_field_antisymmetric(chirality, rand_map):
    om = omega_field(rand_map(2, 3, imaginary=True), chirality)
    for i in range(4):
        for j in range(4):
            assert om[i][j] == -om[j][i]


@pytest.mark.parametrize("chirality", list(Chirality))
def test_domega_matches_regularity_equations(chirality, rand_map):
    for _ in range(20):
        f = rand_map(3, 4, imaginary=True)
        eqs = regularity_equations(f, chirality.side)
        dom = d_omega(f, chirality)
        for triple, (sign, k) in DOMEGA_TABLE[chirality].items():
            assert dom[triple] * 3 == eqs[k] * sign


@pytest.mark.parametrize("chirality", list(Chirality))
def test_closed_iff_regular(chirality, rand_map, rand_fueter):
    closed = 0
    for n in range(200):
        if n % 2:
            f = rand_map(3, 3, imaginary=True)
        else:
            f = derived_regular(rand_fueter(chirality.side, max_len=2, max_terms=5), chirality.side)
        regular = check_regular(f, chirality.side).is_regular
        assert domega_is_zero(f, chirality) == regular
        closed += regular
    assert closed >= 100


def _abc(rng, eps, count=50):
    bc = rng.uniform(1, 2, size=(count, 2)) * rng.choice([-1.0, 1.0], size=(count, 2))
    a = np.sqrt(bc[:, 0] ** 2 + bc[:, 1] ** 2 - eps)
    return np.column_stack([a, bc])


@pytest.mark.parametrize("chirality", list(Chirality))
@pytest.mark.parametrize("eps", [-1, 1])
def test_j_pattern_is_compatible_structure(chirality, eps, rng):
    G = np.diag(FLAT_DIAGONAL)
    abc = _abc(rng, eps)
    J = j_pattern(abc, chirality)
    assert J.shape == (50, 4, 4)
    eye = np.eye(4)
    assert np.max(np.abs(J @ J - eps * eye)) < 1e-12
    assert np.max(np.abs(np.swapaxes(J, -1, -2) @ G @ J + eps * G)) < 1e-12
    h = 1.7
    omega = omega_pattern(h * abc, chirality)
    assert np.max(np.abs(h * G @ J - omega)) < 1e-12
    assert np.max(np.abs(omega + np.swapaxes(omega, -1, -2))) < 1e-12


def test_build_example_pseudo_kaehler():
    s = build_structure(build_example("a"), Chirality.LEFT_J, PSEUDO_BOX)
    assert s.epsilon == -1
    assert s.h_sq == h_squared(s.f, -1)
    assert s.chirality is example_chirality("a")
    s.validate()


def test_build_example_para_kaehler():
    s = build_structure(build_example("b"), Chirality.RIGHT_J, PARA_BOX)
    assert s.epsilon == 1
    assert s.h_sq == -quadratic_form(s.f)
    s.validate()


def test_build_rejects_wrong_side():
    with pytest.raises(NotRegular) as info:
        build_structure(build_example("a"), Chirality.RIGHT_J, PSEUDO_BOX)
    assert info.value.verdict.failing_equations()
    assert "failing" in str(info.value)


def test_build_rejects_real_part():
    f = PQPolyMap(1, X1, 0, 0)
    with pytest.raises(NonzeroRealPart):
        build_structure(f, Chirality.LEFT_J, PSEUDO_BOX)


def test_validate_catches_corruption():
    s = build_structure(build_example("a"), Chirality.LEFT_J, PSEUDO_BOX)
    with pytest.raises(ValueError):
        replace(s, epsilon=1).validate()
    with pytest.raises(NotRegular):
        replace(s, chirality=Chirality.RIGHT_J).validate()
    with pytest.raises(DegeneratePoint):
        replace(s, domain=Box.parse("0:1/10,1:2,1:2,1:2")).validate()
    bumped = replace(s, h_sq=s.h_sq + 1)
    with pytest.raises(ValueError):
        bumped.validate()


def test_structure_equality_is_structural():
    a = build_structure(build_example("a"), Chirality.LEFT_J, PSEUDO_BOX)
    b = EpsilonStructure(Chirality.LEFT_J, -1, build_example("a"), a.h_sq, PSEUDO_BOX)
    assert a == b
    assert isinstance(a.h_sq, RealPoly4)
    assert a.domain.lower[1] == Fraction(0)
