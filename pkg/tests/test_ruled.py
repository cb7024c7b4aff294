import random

import pytest

from helpers import PARABOLOID, QUARTIC_31, SURFACE_31, random_surface, scalar_equal
from mubasis.errors import DegenerateError, NotRuledError
from mubasis.exprio import format_hform, parse_poly
from mubasis.forms import HForm, MovingForm, gcd_many, hform_div_exact, is_coprime
from mubasis.mpoly import ST, XYZW
from mubasis.resultant import sylvester_resultant
from mubasis.ruled import (
    degree_formula,
    lift_syzygy,
    mu_basis_surface,
    normalize,
    pluecker_all,
    project_syzygy,
    surface_implicitize,
    _split,
    verify_implicit,
)


def raw(*texts):
    return [parse_poly(t, ST) for t in texts]


def xyzw(text):
    return parse_poly(text, XYZW)


def test_running_example_normalization():
    param, rec = normalize(raw(*SURFACE_31))
    assert rec.index_swap == 0 and not rec.t_swap and rec.generic_combination is None
    assert (param.n0, param.n1) == (2, 6)
    plk = pluecker_all(param)
    assert [format_hform(h) for h in plk.associated()] == ["s^8 + 2*s^4", "s^4 - 1", "s^8 - 1"]
    assert degree_formula(param) == 8


def test_running_example_mu_basis_and_equation():
    param, rec = normalize(raw(*SURFACE_31))
    basis = mu_basis_surface(param)
    assert basis.mu == (4, 4)
    for q in (basis.q1, basis.q2):
        assert param.annihilated_by(q)
    result = surface_implicitize(param, rec)
    assert result.k == 2 and result.hypersurface_degree == 4
    quartic = xyzw(QUARTIC_31)
    assert scalar_equal(result.F_normalized.drop_gen("w"), quartic.drop_gen("w"))
    assert scalar_equal(result.resultant.drop_gen("w"), (quartic**2).drop_gen("w"))
    assert verify_implicit(result.F, raw(*SURFACE_31))
    assert verify_implicit(result.F_normalized, param.affine())


def test_reference_basis_gives_the_same_resultant():
    # (s^4+1)y - z - s^2 w and (-s^4+1)x - y + (s^4+1)z - s^2 w, written homogeneously
    q1 = MovingForm([HForm([0] * 5), HForm([1, 0, 0, 0, 1]), HForm([-1, 0, 0, 0, 0]), HForm([0, 0, -1, 0, 0])])
    q2 = MovingForm([HForm([1, 0, 0, 0, -1]), HForm([-1, 0, 0, 0, 0]), HForm([1, 0, 0, 0, 1]), HForm([0, 0, -1, 0, 0])])
    param, _ = normalize(raw(*SURFACE_31))
    assert param.annihilated_by(q1) and param.annihilated_by(q2)
    ours = mu_basis_surface(param)
    assert scalar_equal(sylvester_resultant(q1, q2), sylvester_resultant(ours.q1, ours.q2))


def test_paraboloid():
    param, rec = normalize(raw(*PARABOLOID))
    result = surface_implicitize(param, rec)
    assert result.mu == (1, 1) and result.k == 1
    assert scalar_equal(result.F, xyzw("x*y - z*w"))
    assert verify_implicit(result.F, raw(*PARABOLOID))


def test_plane():
    param, rec = normalize(raw("s", "t", "0", "1"))
    result = surface_implicitize(param, rec)
    assert result.mu == (0, 1) and result.k == 1
    assert scalar_equal(result.F, xyzw("z"))


def test_verify_rejects_wrong_equation():
    assert verify_implicit(xyzw("x*y - z*w"), raw(*PARABOLOID))
    assert not verify_implicit(xyzw("x"), raw(*PARABOLOID))


def test_t_degree_two_is_not_ruled():
    with pytest.raises(NotRuledError) as info:
        normalize(raw("s", "t^2", "1", "s*t"))
    assert info.value.step == 1
    assert "step 1" in str(info.value)


@pytest.mark.parametrize(
    "inputs",
    [
        ("s", "s^2", "1", "s"),  # no t at all
        ("s*t", "s^2*t", "t", "s*t"),  # no t-free part
        ("s+t*s", "1+t", "s^2+t*s^2", "2+2*t"),  # every ruling is the same line
        ("s+t", "s+t", "s+t", "s+t"),
    ],
)
def test_degenerate_surfaces(inputs):
    with pytest.raises(DegenerateError):
        normalize(raw(*inputs))


def test_t_swap_and_common_factor():
    # (1+s) * (t, s, s*t, 1 + s^2 * t) with t and tbar exchanged
    param, rec = normalize(raw("(1+s)*1", "(1+s)*s*t", "(1+s)*s", "(1+s)*(s^2+t)"))
    assert rec.t_swap
    assert rec.common_factor.degree == 1
    assert param.n0 <= param.n1


@pytest.mark.parametrize("seed", range(50))
def test_random_surface_properties(seed):
    rng = random.Random(seed)
    raw_polys, param, rec = random_surface(rng)
    plk = pluecker_all(param)
    assert plk.quadric().is_zero
    assert is_coprime(param.f0[3], param.f1[3])
    assert gcd_many(plk.associated()) == gcd_many(plk.as_dict().values())

    basis = mu_basis_surface(param)
    for q, h in ((basis.q1, basis.curve_p), (basis.q2, basis.curve_q)):
        assert param.annihilated_by(q)
        assert q.degree == h.degree
        assert project_syzygy(lift_syzygy(h, param)) == h

    result = surface_implicitize(param, rec)
    assert sum(result.mu) == degree_formula(param)
    assert result.hypersurface_degree * result.k == degree_formula(param)
    assert verify_implicit(result.F, raw_polys)

    other, rec2 = normalize(raw_polys, seed + 7919)
    assert scalar_equal(surface_implicitize(other, rec2).F, result.F)


def _unchanged_coordinates(raw_polys):
    """The pairs after the t swap and content division, before any coordinate change."""
    split = [_split(p, i) for i, p in enumerate(raw_polys)]
    lo = [a for a, _ in split]
    hi = [b for _, b in split]
    n0 = max(HForm.from_affine(a).degree or 0 for a in lo if any(a))
    n1 = max(HForm.from_affine(b).degree or 0 for b in hi if any(b))
    if n1 < n0:
        lo, hi, n0, n1 = hi, lo, n1, n0
    f0 = [HForm.from_affine(a, n0) for a in lo]
    f1 = [HForm.from_affine(b, n1) for b in hi]
    common = gcd_many(f0 + f1)
    return [hform_div_exact(h, common) for h in f0], [hform_div_exact(h, common) for h in f1]


def test_normalization_record_reproduces_the_normalized_forms():
    rng = random.Random(5)
    for _ in range(20):
        raw_polys, param, rec = random_surface(rng)
        assert normalize(raw_polys, rec.seed) == (param, rec)
        M = rec.transform
        for normalized, base in zip((param.f0, param.f1), _unchanged_coordinates(raw_polys)):
            for i in range(4):
                combo = HForm.zero()
                for j in range(4):
                    if M[i][j]:
                        combo = combo + base[j] * M[i][j]
                assert combo == normalized[i]


def test_generic_combination_is_seeded():
    _, rec_a = normalize(raw(*PARABOLOID), 3)
    _, rec_b = normalize(raw(*PARABOLOID), 3)
    assert rec_a == rec_b and rec_a.generic_combination is not None
    param, rec = normalize(raw(*PARABOLOID), 3)
    result = surface_implicitize(param, rec)
    assert result.F == result.F_normalized.linear_change(rec.transform).normalized()
