"""Ruled surfaces: normalization, Plücker coordinates, mu-bases, implicitization.

A ruled surface is given affinely by ``f_i(s, t) = f_i0(s) + t * f_i1(s)``
for i = 0..3.  Homogeneously,

    f_i = tbar * sbar**(n1 - n0) * f_i0 + t * f_i1

with f_i0 of degree n0 <= n1 = deg f_i1.  Once gcd(f_30, f_31) = 1, the
moving planes of the surface are in degree-preserving bijection with
the moving lines of the associated curve (p03 : p13 : p23), so the
surface mu-basis is a lifted curve mu-basis.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .curve import CurveParam, ImplicitResult, implicitize_from_basis, mu_basis_curve
from .errors import DegenerateError, InvariantError, NotRuledError
from .forms import HForm, MovingForm, gcd_many, hform_div_exact, is_coprime
from .mpoly import MPoly, ST

GENERIC_RANGE = 9
RETRY_BOUND = 8

IDENTITY = tuple(tuple(Fraction(int(i == j)) for j in range(4)) for i in range(4))


@dataclass(frozen=True)
class RuledParam:
    """The pairs (f_i0, f_i1), homogeneous of degrees n0 and n1."""

    f0: tuple[HForm, HForm, HForm, HForm]
    f1: tuple[HForm, HForm, HForm, HForm]
    n0: int
    n1: int

    def __post_init__(self):
        for forms, n in ((self.f0, self.n0), (self.f1, self.n1)):
            if len(forms) != 4:
                raise ValueError("a ruled surface needs four coordinate pairs")
            if any(not h.is_zero and h.degree != n for h in forms):
                raise ValueError(f"pair slot forms must have degree {n}")
        if self.n0 > self.n1:
            raise ValueError("n0 must not exceed n1")

    def pair(self, i: int) -> tuple[HForm, HForm]:
        return self.f0[i], self.f1[i]

    def affine(self) -> list[MPoly]:
        """``f_i0(s) + t * f_i1(s)`` as polynomials in s, t."""
        out = []
        for a, b in zip(self.f0, self.f1):
            terms = {}
            for i, c in enumerate(a.dehomogenize()):
                terms[(i, 0)] = c
            for i, c in enumerate(b.dehomogenize()):
                terms[(i, 1)] = c
            out.append(MPoly(terms, ST))
        return out

    def annihilated_by(self, q: MovingForm) -> bool:
        """True if ``q`` is a moving plane: it kills both halves of every f_i."""
        return q.evaluate(self.f0).is_zero and q.evaluate(self.f1).is_zero


@dataclass(frozen=True)
class NormalizationRecord:
    """What :func:`normalize` did to the raw input.

    ``transform`` is the matrix M with ``f_normalized = M @ f_raw``
    (after the t swap and content division, which do not move points);
    an implicit equation F of the normalized surface becomes ``F(M @ X)``
    in the original coordinates.
    """

    t_swap: bool = False
    sbar_division: int = 0
    common_factor: HForm = field(default_factory=lambda: HForm.constant(1))
    index_swap: int | None = None
    generic_combination: tuple[int, int, int] | None = None
    transform: tuple[tuple[Fraction, ...], ...] = IDENTITY
    seed: int = 0
    attempts: int = 0


@dataclass(frozen=True)
class PlueckerSet:
    p01: HForm
    p02: HForm
    p03: HForm
    p12: HForm
    p13: HForm
    p23: HForm

    def as_dict(self) -> dict[str, HForm]:
        return {name: getattr(self, name) for name in ("p01", "p02", "p03", "p12", "p13", "p23")}

    def associated(self) -> tuple[HForm, HForm, HForm]:
        return (self.p03, self.p13, self.p23)

    def quadric(self) -> HForm:
        """p01 p23 - p02 p13 + p03 p12; zero for genuine Plücker coordinates."""
        return self.p01 * self.p23 - self.p02 * self.p13 + self.p03 * self.p12

    def all_zero(self) -> bool:
        return all(h.is_zero for h in self.as_dict().values())


@dataclass(frozen=True)
class SurfaceMuBasis:
    q1: MovingForm
    q2: MovingForm
    curve_p: MovingForm
    curve_q: MovingForm

    @property
    def mu(self) -> tuple[int, int]:
        return (self.q1.degree, self.q2.degree)


def _split(poly: MPoly, index: int) -> tuple[list, list]:
    if poly.gens != ST:
        raise ValueError(f"expected a polynomial in s, t, got generators {poly.gens}")
    if poly.degree_in("t") > 1:
        raise NotRuledError(
            f"f{index} has degree {poly.degree_in('t')} in t; not in ruled normal form", step=1
        )
    a = [0] * (max(poly.degree_in("s"), 0) + 1)
    b = list(a)
    for (i, j), c in poly.terms.items():
        (a if j == 0 else b)[i] += c
    return a, b


def _pluecker(f0: Sequence[HForm], f1: Sequence[HForm], i: int, j: int) -> HForm:
    return f0[i] * f1[j] - f1[i] * f0[j]


def pluecker_all(p: RuledParam) -> PlueckerSet:
    return PlueckerSet(
        *(_pluecker(p.f0, p.f1, i, j) for i, j in ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)))
    )


def _swap_matrix(i: int) -> tuple[tuple[Fraction, ...], ...]:
    perm = list(range(4))
    perm[i], perm[3] = 3, i
    return tuple(tuple(Fraction(int(perm[r] == c)) for c in range(4)) for r in range(4))


def _combination_matrix(abc) -> tuple[tuple[Fraction, ...], ...]:
    rows = [list(r) for r in IDENTITY]
    rows[3] = [Fraction(abc[0]), Fraction(abc[1]), Fraction(abc[2]), Fraction(1)]
    return tuple(tuple(r) for r in rows)


def normalize(raw: Sequence[MPoly], seed: int = 0) -> tuple[RuledParam, NormalizationRecord]:
    """Bring four affine polynomials into the form the lifting needs.

    Splits each f_i into (f_i0, f_i1), swaps t <-> tbar if that makes
    n0 <= n1, divides out content common to all eight forms, and makes
    gcd(f_30, f_31) = 1, checked homogeneously: first by swapping a
    coprime coordinate pair into slot 3, else by adding a random
    combination of f_0, f_1, f_2 to f_3.
    """
    if len(raw) != 4:
        raise ValueError("a ruled surface needs four polynomials")
    split = [_split(poly, i) for i, poly in enumerate(raw)]
    lo = [a for a, _ in split]
    hi = [b for _, b in split]
    if not any(any(a) for a in lo) or not any(any(b) for b in hi):
        raise DegenerateError(
            "one of the two coefficient vectors vanishes; the parametrization does not define a surface",
            step=1,
        )
    n0 = max(HForm.from_affine(a).degree or 0 for a in lo if any(a))
    n1 = max(HForm.from_affine(b).degree or 0 for b in hi if any(b))
    t_swap = n1 < n0
    if t_swap:
        lo, hi, n0, n1 = hi, lo, n1, n0
    f0 = [HForm.from_affine(a, n0) for a in lo]
    f1 = [HForm.from_affine(b, n1) for b in hi]

    common = gcd_many(f0 + f1)
    sbar_division = common.sbar_power()
    if common.degree:
        f0 = [hform_div_exact(h, common) for h in f0]
        f1 = [hform_div_exact(h, common) for h in f1]
        n0 -= common.degree
        n1 -= common.degree

    plk = pluecker_all(RuledParam(tuple(f0), tuple(f1), n0, n1))
    if plk.all_zero():
        raise DegenerateError(
            "the two coefficient vectors are dependent; the parametrization does not define a surface",
            step=1,
        )
    if n0 + n1 - gcd_many(plk.as_dict().values()).degree == 0:
        raise DegenerateError("every ruling is the same line; the image is not a surface", step=1)

    record = dict(t_swap=t_swap, sbar_division=sbar_division, common_factor=common, seed=seed)
    if not is_coprime(f0[3], f1[3]):
        swap = next((i for i in range(3) if is_coprime(f0[i], f1[i])), None)
        if swap is not None:
            f0[swap], f0[3] = f0[3], f0[swap]
            f1[swap], f1[3] = f1[3], f1[swap]
            record.update(index_swap=swap, transform=_swap_matrix(swap))
        else:
            rng = random.Random(seed)
            for attempt in range(1, RETRY_BOUND + 1):
                abc = tuple(rng.randint(-GENERIC_RANGE, GENERIC_RANGE) for _ in range(3))
                new0 = f0[3] + sum((h * c for h, c in zip(f0[:3], abc)), HForm.zero())
                new1 = f1[3] + sum((h * c for h, c in zip(f1[:3], abc)), HForm.zero())
                if is_coprime(new0, new1):
                    f0[3], f1[3] = new0, new1
                    record.update(
                        generic_combination=abc, transform=_combination_matrix(abc), attempts=attempt
                    )
                    break
            else:
                raise DegenerateError(
                    f"no combination with coprime f_30, f_31 found in {RETRY_BOUND} attempts", step=3
                )
    return RuledParam(tuple(f0), tuple(f1), n0, n1), NormalizationRecord(**record)


def associated_curve(p: RuledParam) -> CurveParam:
    return CurveParam(pluecker_all(p).associated())


def degree_formula(p: RuledParam) -> int:
    """deg(S) * deg(Phi_S) = n1 + n0 - deg gcd(p03, p13, p23)."""
    return p.n0 + p.n1 - gcd_many(pluecker_all(p).associated()).degree


def lift_syzygy(h: MovingForm, p: RuledParam) -> MovingForm:
    """Moving line of the associated curve -> moving plane of the surface.

    The w coefficient is -(h0 f00 + h1 f10 + h2 f20) / f30, an exact
    division when gcd(f30, f31) = 1.
    """
    if h.arity != 3:
        raise ValueError("expected a moving line (three coefficients)")
    f30 = p.f0[3]
    if f30.is_zero:
        raise ValueError("f30 vanishes; normalize the parametrization first")
    num = h.evaluate(p.f0[:3])
    w = -hform_div_exact(num, f30)
    if w.is_zero:
        return MovingForm(h.coeffs + (HForm.zero(),))
    return MovingForm(h.coeffs + (w,))


def project_syzygy(q: MovingForm) -> MovingForm:
    """Drop the w coefficient (specialize w = 0)."""
    if q.arity != 4:
        raise ValueError("expected a moving plane (four coefficients)")
    if all(h.is_zero for h in q.coeffs[:3]):
        raise InvariantError("projection of a moving plane vanished")
    return MovingForm(q.coeffs[:3])


def mu_basis_surface(p: RuledParam) -> SurfaceMuBasis:
    basis = mu_basis_curve(associated_curve(p))
    return SurfaceMuBasis(lift_syzygy(basis.p, p), lift_syzygy(basis.q, p), basis.p, basis.q)


def pull_back(F: MPoly, rec: NormalizationRecord) -> MPoly:
    """Express an equation of the normalized surface in the raw coordinates."""
    if rec.transform == IDENTITY:
        return F
    return F.linear_change(rec.transform).normalized()


def surface_implicitize(p: RuledParam, rec: NormalizationRecord, seed: int | random.Random | None = None) -> ImplicitResult:
    if seed is None:
        seed = rec.seed
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    basis = mu_basis_surface(p)
    F, k, content, res = implicitize_from_basis(basis.q1, basis.q2, rng)
    return ImplicitResult(
        F=pull_back(F, rec),
        k=k,
        hypersurface_degree=F.total_degree(),
        content=content,
        resultant=res,
        mu=basis.mu,
        F_normalized=F,
        normalization=rec,
    )


def verify_implicit(F: MPoly, raw: Sequence[MPoly]) -> bool:
    """True if F vanishes identically on the parametrization ``raw``.

    ``raw`` are affine polynomials in s, t (or in s alone for curves);
    F is homogeneous, so checking the dehomogenized composition suffices.
    """
    raw = list(raw)
    if len(raw) > F.nvars or any(F.degree_in(i) > 0 for i in range(len(raw), F.nvars)):
        raise ValueError(f"{F.nvars} coordinates expected, got {len(raw)}")
    gens = raw[0].gens
    raw += [MPoly({}, gens)] * (F.nvars - len(raw))
    return F.substitute(raw).is_zero
