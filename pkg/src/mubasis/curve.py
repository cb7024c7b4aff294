"""mu-bases and implicit equations of rational planar curves.

A curve is a triple of binary forms ``(f0, f1, f2)`` of one degree n.
Its moving lines (syzygies) form a free module with generators of
degrees mu1 <= mu2, mu1 + mu2 = n - deg gcd(f0, f1, f2), and the
resultant of the two generators is a power of the implicit equation.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import TYPE_CHECKING, Sequence

from . import univariate as up
from .errors import DegenerateError, InvariantError
from .forms import HForm, MovingForm, gcd_many, hform_div_exact
from .linalg import nullspace, rank
from .mpoly import MPoly
from .resultant import mpoly_kth_root, power_exponent_probe, sylvester_resultant

if TYPE_CHECKING:
    from .ruled import NormalizationRecord


@dataclass(frozen=True)
class CurveParam:
    """``(f0 : f1 : f2)`` with forms of a common degree n >= 1 (zero forms allowed)."""

    f: tuple[HForm, HForm, HForm]

    def __post_init__(self):
        f = tuple(self.f)
        object.__setattr__(self, "f", f)
        if len(f) != 3:
            raise ValueError("a planar curve needs three forms")
        degrees = {h.degree for h in f if not h.is_zero}
        if not degrees:
            raise DegenerateError("all three forms are zero")
        if len(degrees) > 1:
            raise ValueError(f"forms must share one degree, got {sorted(degrees)}")
        if self.degree < 1:
            raise DegenerateError("forms of degree 0 define a point, not a curve")
        if self.gcd().degree >= self.degree:
            raise DegenerateError("the three forms are proportional; the image is a point")

    @classmethod
    def from_affine(cls, polys: Sequence[Sequence]) -> CurveParam:
        """Homogenize three univariate coefficient lists to their common degree."""
        n = max((up.degree(p) for p in polys), default=0)
        return cls(tuple(HForm.from_affine(p, n) for p in polys))

    @property
    def degree(self) -> int:
        return next(h.degree for h in self.f if not h.is_zero)

    def gcd(self) -> HForm:
        return gcd_many(self.f)

    def reduced(self) -> tuple[HForm, HForm, HForm]:
        """The forms divided by their gcd."""
        g = self.gcd()
        return tuple(hform_div_exact(h, g) for h in self.f)


@dataclass(frozen=True)
class MuBasisCurve:
    p: MovingForm
    q: MovingForm
    gcd: HForm
    is_line: bool = field(default=False)

    @property
    def mu(self) -> tuple[int, int]:
        return (self.p.degree, self.q.degree)


@dataclass(frozen=True)
class ImplicitResult:
    """``resultant == content * F_normalized**k``.

    For curves, and for surfaces that needed no coordinate change,
    ``F`` and ``F_normalized`` coincide.
    """

    F: MPoly
    k: int
    hypersurface_degree: int
    content: Fraction
    resultant: MPoly
    mu: tuple[int, int]
    F_normalized: MPoly
    normalization: NormalizationRecord | None = None


def _syzygy_matrix(forms: Sequence[HForm], d: int) -> list[list]:
    """Matrix of (h0, h1, h2) -> sum h_i f_i on degree-d coefficient vectors."""
    n = next(h.degree for h in forms if not h.is_zero)
    rows = [[0] * (len(forms) * (d + 1)) for _ in range(n + d + 1)]
    for i, f in enumerate(forms):
        if f.is_zero:
            continue
        for j in range(d + 1):
            col = i * (d + 1) + j
            for e, c in enumerate(f.coeffs):
                if c:
                    rows[j + e][col] = c
    return rows


def syzygy_kernel_at_degree(c: CurveParam, d: int) -> list[MovingForm]:
    """Echelon basis of the degree-d moving lines of ``c``.

    Works on the gcd-reduced triple, which has the same syzygies.
    """
    forms = c.reduced()
    basis = nullspace(_syzygy_matrix(forms, d), 3 * (d + 1))
    return [MovingForm.from_vector(v, 3, d).primitive() for v in basis]


def _multiples(p: MovingForm, d: int) -> list[list]:
    """Coefficient vectors of s^j sbar^(d - mu - j) * p."""
    shift = d - p.degree
    return [(p * HForm.monomial(j, shift)).to_vector() for j in range(shift + 1)]


def mu_basis_curve(c: CurveParam) -> MuBasisCurve:
    g = c.gcd()
    total = c.degree - g.degree
    p = None
    for d in range(total + 1):
        kernel = syzygy_kernel_at_degree(c, d)
        if kernel:
            p = kernel[0]
            break
    if p is None:
        raise InvariantError(f"no syzygy up to degree {total}")
    mu1 = p.degree
    mu2 = total - mu1
    if mu2 < mu1:
        raise InvariantError(f"minimal syzygy degree {mu1} exceeds half of {total}")
    known = _multiples(p, mu2)
    base_rank = rank(known)
    q = None
    for cand in syzygy_kernel_at_degree(c, mu2):
        if rank(known + [cand.to_vector()]) > base_rank:
            q = cand
            break
    if q is None:
        raise InvariantError(f"no second generator in degree {mu2}")
    return MuBasisCurve(p, q, g, is_line=(mu1 == 0))


def cross_product(p: MovingForm, q: MovingForm) -> tuple[HForm, HForm, HForm]:
    a, b = p.coeffs[:3], q.coeffs[:3]
    return (
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    )


def proportional(u: Sequence[HForm], v: Sequence[HForm]) -> bool:
    """True if ``u == lam * v`` for a nonzero rational ``lam`` (neither all zero)."""
    lam = None
    for a, b in zip(u, v, strict=True):
        if a.is_zero != b.is_zero:
            return False
        if a.is_zero:
            continue
        if a.degree != b.degree:
            return False
        ratio = Fraction(a.leading_coefficient()) / b.leading_coefficient()
        if lam is None:
            lam = ratio
        if a != b * lam:
            return False
    return lam is not None


def line_result(p: MovingForm, mu2: int) -> tuple[MPoly, int, Fraction, MPoly]:
    """F, k, content and resultant when the minimal generator is a constant form."""
    linear = p.coefficient(0)
    res = linear**mu2
    content, F = linear.primitive()
    return F, mu2, Fraction(content) ** mu2, res


def implicitize_from_basis(p: MovingForm, q: MovingForm, rng: random.Random) -> tuple[MPoly, int, Fraction, MPoly]:
    """``(F, k, content, resultant)`` with ``resultant == content * F**k``."""
    if p.degree == 0:
        return line_result(p, q.degree)
    res = sylvester_resultant(p, q)
    if res.is_zero:
        raise InvariantError("resultant of a mu-basis vanished")
    k = power_exponent_probe(res, rng)
    root = mpoly_kth_root(res, k)
    if root is None:
        raise InvariantError(f"resultant is not a {k}-th power after all")
    F, content = root
    return F, k, content, res


def curve_implicitize(c: CurveParam, seed: int | random.Random = 0) -> ImplicitResult:
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    basis = mu_basis_curve(c)
    F, k, content, res = implicitize_from_basis(basis.p, basis.q, rng)
    return ImplicitResult(
        F=F,
        k=k,
        hypersurface_degree=F.total_degree(),
        content=content,
        resultant=res,
        mu=basis.mu,
        F_normalized=F,
    )


def curve_vanishes(F: MPoly, c: CurveParam) -> bool:
    """True if F(f0, f1, f2) is the zero form."""
    values = list(c.f) + [HForm.zero()] * (F.nvars - 3)
    if any(e[3] for e in F.terms):
        return False
    return F.compose(values, one=HForm.constant(1), zero=HForm.zero()).is_zero
