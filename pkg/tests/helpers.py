"""Shared fixtures for the test suite: random inputs and independent oracles.

The oracles deliberately avoid the package's own determinant, resultant
and root-extraction code so that agreement means something.
"""

from __future__ import annotations

import itertools
import random
from fractions import Fraction

from mubasis.curve import CurveParam
from mubasis.errors import DegenerateError
from mubasis.forms import HForm
from mubasis.linalg import nullspace
from mubasis.mpoly import MPoly, ST, XYZW
from mubasis.ruled import normalize

COEFF_RANGE = 5

# the running example of a ruled surface with a non-proper parametrization
SURFACE_31 = ("s^2+t*(s^2-1)", "1+t*(-s^2+1)", "1+t*(-s^6+1)", "t*(-s^6-2*s^2)")
QUARTIC_31 = (
    "4*x^2*y^2 - 4*x*y^3 + y^4 - 4*x^2*y*z + 2*x*y^2*z + x^2*z^2 + 4*x*y*z^2"
    " - 2*y^2*z^2 - 2*x*z^3 + z^4 - x^2 + x*y + 2*y^2 - x*z - 4*y*z + 2*z^2"
)
PARABOLOID = ("s", "t", "s*t", "1")


def cofactor_det(matrix):
    """Laplace expansion along the first row; exponential, for small oracles only."""
    n = len(matrix)
    if n == 0:
        return 1
    if n == 1:
        return matrix[0][0]
    total = 0
    for j in range(n):
        entry = matrix[0][j]
        if entry == 0:
            continue
        minor = [row[:j] + row[j + 1:] for row in matrix[1:]]
        term = entry * cofactor_det(minor)
        total = total + term if j % 2 == 0 else total - term
    return total


def leibniz_det(matrix):
    """Sum over permutations; a second oracle independent of expansion order."""
    n = len(matrix)
    total = 0
    for perm in itertools.permutations(range(n)):
        inversions = sum(perm[i] > perm[j] for i in range(n) for j in range(i + 1, n))
        prod = 1
        for i, j in enumerate(perm):
            prod = prod * matrix[i][j]
        total = total - prod if inversions % 2 else total + prod
    return total


def random_coeffs(rng: random.Random, degree: int, exact_degree: bool = False) -> list[int]:
    out = [rng.randint(-COEFF_RANGE, COEFF_RANGE) for _ in range(degree + 1)]
    if exact_degree and out[-1] == 0:
        out[-1] = rng.choice([-1, 1]) * rng.randint(1, COEFF_RANGE)
    return out


def _compose_s2(form: HForm) -> HForm:
    """h(s, sbar) -> h(s^2, sbar^2)."""
    if form.is_zero:
        return form
    coeffs = [0] * (2 * form.degree + 1)
    for i, c in enumerate(form.coeffs):
        coeffs[2 * i] = c
    return HForm(coeffs)


def _spread(coeffs: list) -> list:
    """Coefficients of f(s^2) from those of f(s)."""
    out = [0] * (2 * len(coeffs) - 1)
    out[::2] = coeffs
    return out


def random_curve(rng: random.Random, max_degree: int = 6) -> CurveParam:
    """A random planar curve; sometimes a composition with s^2, sometimes with a common factor."""
    while True:
        kind = rng.choice(["plain", "plain", "composed", "factor"])
        base_max = max_degree // 2 if kind == "composed" else max_degree - (kind == "factor")
        n = rng.randint(1, max(base_max, 1))
        forms = [HForm(random_coeffs(rng, n)) for _ in range(3)]
        if kind == "composed":
            forms = [_compose_s2(f) for f in forms]
        elif kind == "factor":
            factor = HForm(random_coeffs(rng, 1, exact_degree=True))
            forms = [f * factor for f in forms]
        try:
            return CurveParam(tuple(forms))
        except (DegenerateError, ValueError):
            continue


def random_surface_raw(rng: random.Random, max_degree: int = 4) -> list[MPoly]:
    """Four affine polynomials f_i0(s) + t f_i1(s) with n0, n1 <= max_degree."""
    kind = rng.choice(["plain", "plain", "composed", "factor", "sparse"])
    top = max_degree // 2 if kind == "composed" else max_degree - (kind == "factor")
    d0, d1 = rng.randint(0, top), rng.randint(0, top)
    factor = random_coeffs(rng, 1, exact_degree=True)
    out = []
    for _ in range(4):
        a = random_coeffs(rng, d0)
        b = random_coeffs(rng, d1)
        if kind == "sparse":
            a = [c if rng.random() < 0.5 else 0 for c in a]
            b = [c if rng.random() < 0.5 else 0 for c in b]
        if kind == "composed":
            a, b = _spread(a), _spread(b)
        terms = {}
        for i, c in enumerate(a):
            terms[(i, 0)] = terms.get((i, 0), 0) + c
        for i, c in enumerate(b):
            terms[(i, 1)] = terms.get((i, 1), 0) + c
        poly = MPoly(terms, ST)
        if kind == "factor":
            poly = poly * MPoly({(0, 0): factor[0], (1, 0): factor[1]}, ST)
        out.append(poly)
    return out


def random_surface(rng: random.Random, max_degree: int = 4):
    """``(raw, param, record)`` for a random nondegenerate ruled surface."""
    while True:
        raw = random_surface_raw(rng, max_degree)
        try:
            param, rec = normalize(raw, rng.randint(0, 10**6))
        except DegenerateError:
            continue
        return raw, param, rec


def monomials(nvars: int, degree: int):
    """All exponent tuples of the given total degree."""
    if nvars == 1:
        yield (degree,)
        return
    for e in range(degree, -1, -1):
        for rest in monomials(nvars - 1, degree - e):
            yield (e,) + rest


def linear_implicitize_curve(c: CurveParam, max_degree: int | None = None) -> MPoly:
    """Lowest-degree F(x, y, z) with F(f0, f1, f2) = 0, from a linear system.

    Unknowns are the coefficients of all degree-d monomials; the columns
    are the coefficient vectors of the pulled-back monomials.
    """
    n = c.degree
    max_degree = max_degree or n
    for d in range(1, max_degree + 1):
        monos = list(monomials(3, d))
        columns = []
        for exps in monos:
            value = HForm.constant(1)
            for f, e in zip(c.f, exps):
                value = value * f**e
            columns.append(list(value.coeffs) if not value.is_zero else [0] * (n * d + 1))
        rows = [[col[r] for col in columns] for r in range(n * d + 1)]
        kernel = nullspace(rows, len(monos))
        if kernel:
            assert len(kernel) == 1, f"degree-{d} kernel has dimension {len(kernel)}"
            vec = kernel[0]
            F = MPoly({e + (0,): Fraction(v) for e, v in zip(monos, vec) if v}, XYZW)
            return F.normalized()
    raise AssertionError("no implicit equation found")


def scalar_equal(a: MPoly, b: MPoly) -> bool:
    return not a.is_zero and a.normalized() == b.normalized()
