import random

import pytest

from helpers import linear_implicitize_curve, random_curve, scalar_equal
from mubasis.curve import (
    CurveParam,
    cross_product,
    curve_implicitize,
    curve_vanishes,
    mu_basis_curve,
    proportional,
    syzygy_kernel_at_degree,
)
from mubasis.errors import DegenerateError
from mubasis.exprio import parse_poly
from mubasis.forms import HForm
from mubasis.mpoly import XYZW


def curve(*coeff_lists):
    return CurveParam(tuple(HForm(c) for c in coeff_lists))


def xyz(text):
    return parse_poly(text, XYZW)


def test_line():
    c = curve([0, 1], [1, 0], [0, 1])
    basis = mu_basis_curve(c)
    assert basis.mu == (0, 1) and basis.is_line
    result = curve_implicitize(c)
    assert scalar_equal(result.F, xyz("x - z")) and result.k == 1
    assert len(syzygy_kernel_at_degree(c, 1)) == 3


def test_conic():
    c = curve([0, 0, 1], [0, 1, 0], [1, 0, 0])
    result = curve_implicitize(c)
    assert result.mu == (1, 1)
    assert scalar_equal(result.F, xyz("x*z - y^2")) and result.k == 1


def test_doubly_covered_conic():
    c = curve([0, 0, 0, 0, 1], [0, 0, 1, 0, 0], [1, 0, 0, 0, 0])
    result = curve_implicitize(c)
    assert result.mu == (2, 2)
    assert scalar_equal(result.F, xyz("x*z - y^2")) and result.k == 2
    assert result.resultant == result.F**2 * result.content


def test_associated_curve_of_running_example():
    # p03, p13, p23 of the standard ruled-surface example
    c = CurveParam.from_affine([[0, 0, 0, 0, 2, 0, 0, 0, 1], [-1, 0, 0, 0, 1], [-1, 0, 0, 0, 0, 0, 0, 0, 1]])
    result = curve_implicitize(c)
    assert result.mu == (4, 4) and result.k == 4
    assert scalar_equal(result.F, xyz("2*x*y - y^2 - x*z + z^2"))


def test_common_factor_is_removed():
    s, sb = HForm([0, 1]), HForm([1, 0])
    factor = s + 2 * sb
    c = CurveParam((s * s * factor, s * sb * factor, sb * sb * factor))
    assert c.gcd().degree == 1
    basis = mu_basis_curve(c)
    assert sum(basis.mu) == 2
    assert scalar_equal(curve_implicitize(c).F, xyz("y^2 - x*z"))


def test_degenerate_curves_are_rejected():
    with pytest.raises(DegenerateError):
        curve([0], [0], [0])
    with pytest.raises(DegenerateError):
        curve([1, 2], [2, 4], [0, 0])
    with pytest.raises(DegenerateError):
        curve([3], [1], [2])


def test_mixed_degrees_are_rejected():
    with pytest.raises(ValueError):
        curve([1, 1], [1, 0, 1], [1, 1])


@pytest.mark.parametrize("seed", range(25))
def test_random_curve_properties(seed):
    rng = random.Random(seed)
    c = random_curve(rng)
    basis = mu_basis_curve(c)
    mu1, mu2 = basis.mu
    assert mu1 <= mu2
    assert mu1 + mu2 == c.degree - c.gcd().degree
    for m in (basis.p, basis.q):
        assert m.evaluate(c.f).is_zero
    # the cross product of a mu-basis is the reduced parametrization up to scalar
    assert proportional(cross_product(basis.p, basis.q), c.reduced())
    result = curve_implicitize(c, seed)
    assert result.resultant == result.F**result.k * result.content
    assert result.hypersurface_degree * result.k == mu1 + mu2
    assert curve_vanishes(result.F, c)


@pytest.mark.parametrize("seed", range(15))
def test_matches_linear_algebra_oracle(seed):
    c = random_curve(random.Random(1000 + seed), max_degree=5)
    assert scalar_equal(curve_implicitize(c).F, linear_implicitize_curve(c))


def test_seed_does_not_change_the_answer():
    c = curve([0, 0, 0, 0, 1], [0, 0, 1, 0, 0], [1, 0, 0, 0, 0])
    results = {curve_implicitize(c, seed).F for seed in range(5)}
    assert len(results) == 1
