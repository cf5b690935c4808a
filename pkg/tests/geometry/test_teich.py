import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from gmcone.geometry.exceptions import InvalidTeichPointError, ZeroFoliationError
from gmcone.geometry.foliation import MeasuredFoliation, intersection_number, projectively_equal
from gmcone.geometry.teich import (
    DEFAULT_BASEPOINT,
    INFINITY,
    ExtremalForm,
    TeichPoint,
    boundary_point,
    boundary_slope,
    extremal_length,
    geodesic_endpoints,
    geodesic_ray,
    gromov_product,
    hyperbolic_half_distance,
    kerckhoff_sup,
    orthogonal_pair,
    teich_distance,
)


I = TeichPoint(0, 1)
TWO_I = TeichPoint(0, 2)

points = st.builds(
    TeichPoint,
    st.fractions(min_value=-3, max_value=3, max_denominator=16),
    st.fractions(min_value=Fraction(1, 4), max_value=4, max_denominator=16),
)
integer_foliations = st.builds(
    MeasuredFoliation,
    st.integers(min_value=-12, max_value=12),
    st.integers(min_value=-12, max_value=12),
)


def test_teich_point():
    assert TeichPoint.parse('1/2, 3') == TeichPoint(Fraction(1, 2), 3)
    assert str(TeichPoint(Fraction(1, 2), 3)) == '1/2,3'
    assert TeichPoint(Fraction(1, 2), 3).to_json() == ['1/2', 3]
    assert TeichPoint.from_complex(complex(1.5, 2)).as_complex() == complex(1.5, 2)
    assert DEFAULT_BASEPOINT == I


@pytest.mark.parametrize('text', ('0,0', '1,-1', 'i', '1/0,1'))
def test_teich_point_invalid(text):
    with pytest.raises(InvalidTeichPointError):
        TeichPoint.parse(text)


@pytest.mark.parametrize(
    ('tau', 'F', 'expected'),
    (
        (I, (1, 0), 1),
        (TWO_I, (0, 1), 2),
        (I, (0, 0), 0),
        (TeichPoint(Fraction(1, 2), Fraction(3, 2)), (1, 2), Fraction(26, 3)),
    ),
)
def test_extremal_length(tau, F, expected):
    assert extremal_length(tau, MeasuredFoliation(*F)) == expected


@given(points)
def test_extremal_form_unimodular(tau):
    form = ExtremalForm.of(tau)

    assert form.det == 1
    assert form(MeasuredFoliation(2, -1)) == extremal_length(tau, MeasuredFoliation(2, -1))


@pytest.mark.parametrize(
    ('tau1', 'tau2', 'expected'),
    (
        (I, I, 0.0),
        (I, TWO_I, 0.5 * math.log(2)),
        (I, TeichPoint(1, 1), 0.5 * math.acosh(1.5)),
    ),
)
def test_teich_distance(tau1, tau2, expected):
    assert teich_distance(tau1, tau2) == pytest.approx(expected, rel=1e-12, abs=1e-15)
    assert hyperbolic_half_distance(tau1, tau2) == pytest.approx(expected, rel=1e-12, abs=1e-15)


def test_kerckhoff_sup_from_two_i():
    solution = kerckhoff_sup(TWO_I, I)

    assert solution.eigenvalue == pytest.approx(2.0, rel=1e-12)
    assert not solution.isotropic
    assert solution.maximizer.a == pytest.approx(0.0, abs=1e-12)
    assert solution.maximizer.b == pytest.approx(1.0, rel=1e-12)
    assert solution.minimizer.a == pytest.approx(1.0, rel=1e-12)
    assert solution.minimizer.b == pytest.approx(0.0, abs=1e-12)


def test_kerckhoff_sup_from_i():
    solution = kerckhoff_sup(I, TWO_I)

    assert solution.eigenvalue == pytest.approx(2.0, rel=1e-12)
    assert projectively_equal(solution.maximizer, MeasuredFoliation(1, 0))


def test_kerckhoff_sup_isotropic():
    solution = kerckhoff_sup(I, I)

    assert solution.eigenvalue == 1.0
    assert solution.isotropic
    assert solution.maximizer is None


def test_kerckhoff_sup_nearby_points_are_not_isotropic():
    nearby = TeichPoint(1e-17, 1)
    solution = kerckhoff_sup(nearby, I)

    assert teich_distance(nearby, I) > 0
    assert not solution.isotropic
    assert projectively_equal(solution.maximizer, MeasuredFoliation(1, 1), rel_tol=1e-9)
    assert projectively_equal(solution.minimizer, MeasuredFoliation(1, -1), rel_tol=1e-9)


@pytest.mark.parametrize(
    ('tau1', 'tau2'),
    (
        (TeichPoint(Fraction(1, 2), 1), TeichPoint(-1, 3)),
        (TeichPoint(2, Fraction(1, 3)), TeichPoint(0, 1)),
        (TeichPoint(-0.75, 0.4), TeichPoint(1.25, 2.2)),
    ),
)
def test_kerckhoff_sharp_pair(tau1, tau2):
    solution = kerckhoff_sup(tau1, tau2)
    F, G = solution.maximizer, solution.minimizer

    assert float(extremal_length(tau1, F) / extremal_length(tau2, F)) == pytest.approx(
        solution.eigenvalue,
        rel=1e-10,
    )
    assert float(extremal_length(tau2, G) / extremal_length(tau1, G)) == pytest.approx(
        solution.eigenvalue,
        rel=1e-10,
    )
    assert float(extremal_length(DEFAULT_BASEPOINT, F)) == pytest.approx(1.0, rel=1e-12)
    assert 0.5 * math.log(solution.eigenvalue) == pytest.approx(
        teich_distance(tau1, tau2),
        rel=1e-12,
    )


@pytest.mark.parametrize(
    ('y', 'z', 'expected'),
    (
        (I, TWO_I, 0.0),
        (TWO_I, TeichPoint(0, Fraction(1, 2)), 0.0),
        (TWO_I, TWO_I, 0.5 * math.log(2)),
    ),
)
def test_gromov_product(y, z, expected):
    assert gromov_product(I, y, z) == pytest.approx(expected, abs=1e-12)


@pytest.mark.parametrize('t', (0, 0.5, 3, 10))
def test_geodesic_ray_vertical(t):
    up = geodesic_ray(I, MeasuredFoliation(1, 0), t)
    down = geodesic_ray(I, MeasuredFoliation(0, 1), t)

    assert float(up.x) == 0.0
    assert float(up.y) == pytest.approx(math.exp(2 * t), rel=1e-12)
    assert float(down.x) == pytest.approx(0.0, abs=1e-12)
    assert float(down.y) == pytest.approx(math.exp(-2 * t), rel=1e-12)
    assert teich_distance(I, up) == pytest.approx(t, rel=1e-12, abs=1e-15)


@pytest.mark.parametrize('t', (0.25, 1, 4))
def test_geodesic_ray_decay(t):
    tau0 = TeichPoint(Fraction(1, 3), Fraction(3, 2))
    alpha = MeasuredFoliation(2, -1)
    tau = geodesic_ray(tau0, alpha, t)

    assert teich_distance(tau0, tau) == pytest.approx(t, rel=1e-10)
    assert float(extremal_length(tau, alpha)) == pytest.approx(
        math.exp(-2 * t) * float(extremal_length(tau0, alpha)),
        rel=1e-9,
    )


def test_geodesic_ray_zero_foliation():
    with pytest.raises(ZeroFoliationError):
        geodesic_ray(I, MeasuredFoliation(0, 0), 1)


def test_boundary_slope():
    assert boundary_slope(INFINITY) == MeasuredFoliation(1, 0)
    assert boundary_slope(0) == MeasuredFoliation(0, 1)
    assert projectively_equal(boundary_slope(Fraction(-3, 2)), MeasuredFoliation(3, 2))
    assert boundary_slope(Fraction(-3, 2), projective=False) == MeasuredFoliation(Fraction(3, 2), 1)


def test_boundary_point():
    assert boundary_point(MeasuredFoliation(3, 2)) == Fraction(-3, 2)
    assert boundary_point(MeasuredFoliation(-2, 0)) == INFINITY

    with pytest.raises(ZeroFoliationError):
        boundary_point(MeasuredFoliation(0, 0))


def test_geodesic_endpoints():
    assert geodesic_endpoints(I, TWO_I) == (0, INFINITY)

    left, right = geodesic_endpoints(I, TeichPoint(1, 1))
    assert left == pytest.approx(0.5 - math.sqrt(5) / 2)
    assert right == pytest.approx(0.5 + math.sqrt(5) / 2)


@pytest.mark.parametrize('theta', (0.0, 0.4, 2.0))
def test_orthogonal_pair_is_sharp(theta):
    tau = TeichPoint(Fraction(-1, 2), Fraction(5, 4))
    F, G = orthogonal_pair(tau, theta)

    assert float(intersection_number(F, G)) ** 2 == pytest.approx(
        float(extremal_length(tau, F) * extremal_length(tau, G)),
        rel=1e-10,
    )


@given(points, points)
def test_distance_symmetry(tau1, tau2):
    assert teich_distance(tau1, tau2) == pytest.approx(teich_distance(tau2, tau1), rel=1e-12, abs=0)


@given(points, points, points)
def test_triangle_inequality(tau1, tau2, tau3):
    assert teich_distance(tau1, tau3) <= (
        teich_distance(tau1, tau2) + teich_distance(tau2, tau3) + 1e-12
    )


@given(points, integer_foliations, integer_foliations)
def test_minsky_inequality(tau, F, G):
    assert intersection_number(F, G) ** 2 <= extremal_length(tau, F) * extremal_length(tau, G)
