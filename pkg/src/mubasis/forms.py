"""Homogeneous binary forms in (s, sbar) and moving lines/planes over them."""

from __future__ import annotations

from typing import Iterable, Sequence

from . import univariate as up
from .errors import InexactDivisionError
from .mpoly import MPoly, XYZW
from .rational import Rat, div, primitive_scale, rat


class HForm:
    """A homogeneous form ``sum(coeffs[i] * s**i * sbar**(degree - i))``.

    The zero form is a separate value with ``degree is None``; it is
    never confused with a nonzero constant.
    """

    __slots__ = ("degree", "coeffs")

    def __init__(self, coeffs: Iterable = ()):
        coeffs = tuple(rat(c) for c in coeffs)
        if any(coeffs):
            self.degree = len(coeffs) - 1
            self.coeffs = coeffs
        else:
            self.degree = None
            self.coeffs = ()

    @classmethod
    def zero(cls) -> HForm:
        return cls()

    @classmethod
    def constant(cls, c) -> HForm:
        return cls([c])

    @classmethod
    def monomial(cls, i: int, degree: int, c=1) -> HForm:
        """``c * s**i * sbar**(degree - i)``."""
        coeffs = [0] * (degree + 1)
        coeffs[i] = c
        return cls(coeffs)

    @classmethod
    def from_affine(cls, coeffs: Sequence, degree: int | None = None) -> HForm:
        """Homogenize the univariate polynomial ``sum(coeffs[i] * s**i)``.

        ``degree`` defaults to the actual degree; it may be larger, which
        multiplies in a power of sbar.
        """
        coeffs = up.trim(rat(c) for c in coeffs)
        if not coeffs:
            return cls.zero()
        if degree is None:
            degree = len(coeffs) - 1
        if degree < len(coeffs) - 1:
            raise ValueError(f"cannot homogenize a degree-{len(coeffs) - 1} polynomial to degree {degree}")
        return cls(coeffs + [0] * (degree + 1 - len(coeffs)))

    @property
    def is_zero(self) -> bool:
        return self.degree is None

    def __bool__(self) -> bool:
        return self.degree is not None

    def dehomogenize(self) -> list:
        """Coefficients of the form at sbar = 1, lowest power of s first."""
        return up.trim(self.coeffs)

    def sbar_power(self) -> int:
        """Largest e such that sbar**e divides the form (0 for the zero form)."""
        if self.is_zero:
            return 0
        return self.degree - (len(self.dehomogenize()) - 1)

    def leading_coefficient(self) -> Rat:
        """Coefficient of the highest power of s present."""
        return self.dehomogenize()[-1]

    def monic(self) -> HForm:
        if self.is_zero:
            return self
        lc = self.leading_coefficient()
        return HForm(div(c, lc) for c in self.coeffs)

    def primitive(self) -> HForm:
        if self.is_zero:
            return self
        scale = primitive_scale(self.coeffs)
        return HForm(div(c, scale) for c in self.coeffs)

    def __call__(self, s, sbar=1):
        total = 0
        for i, c in enumerate(self.coeffs):
            if c:
                total += c * s**i * sbar ** (self.degree - i)
        return total

    # arithmetic

    def _check_degree(self, other: HForm):
        if self.degree is not None and other.degree is not None and self.degree != other.degree:
            raise ValueError(f"cannot add forms of degrees {self.degree} and {other.degree}")

    def __add__(self, other: HForm) -> HForm:
        if not isinstance(other, HForm):
            return NotImplemented
        self._check_degree(other)
        if self.is_zero:
            return other
        if other.is_zero:
            return self
        return HForm(a + b for a, b in zip(self.coeffs, other.coeffs))

    def __neg__(self) -> HForm:
        return HForm(-c for c in self.coeffs)

    def __sub__(self, other: HForm) -> HForm:
        if not isinstance(other, HForm):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other) -> HForm:
        if isinstance(other, HForm):
            if self.is_zero or other.is_zero:
                return HForm.zero()
            return HForm(_dense_mul(self.coeffs, other.coeffs))
        other = rat(other)
        return HForm(c * other for c in self.coeffs)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> HForm:
        if e < 0:
            raise ValueError("negative exponent")
        result = HForm.constant(1)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other) -> bool:
        if not isinstance(other, HForm):
            return NotImplemented
        return self.degree == other.degree and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.degree, self.coeffs))

    def __repr__(self) -> str:
        if self.is_zero:
            return "HForm.zero()"
        return f"HForm({list(self.coeffs)!r})"

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        parts = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            mono = "*".join(
                v if e == 1 else f"{v}^{e}" for v, e in (("s", i), ("sbar", self.degree - i)) if e
            )
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")


def _dense_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return out


def hform_gcd(a: HForm, b: HForm) -> HForm:
    """Monic gcd of two binary forms; powers of sbar are tracked separately
    because dehomogenizing would lose them."""
    if a.is_zero and b.is_zero:
        raise ValueError("gcd of two zero forms")
    if a.is_zero:
        return b.monic()
    if b.is_zero:
        return a.monic()
    e = min(a.sbar_power(), b.sbar_power())
    g = up.gcd(a.dehomogenize(), b.dehomogenize())
    return HForm.from_affine(g, len(g) - 1 + e)


def gcd_many(forms: Iterable[HForm]) -> HForm:
    """gcd of several forms, skipping zero ones.  All zero gives the zero form."""
    g = HForm.zero()
    for f in forms:
        if not f.is_zero:
            g = f.monic() if g.is_zero else hform_gcd(g, f)
    return g


def hform_div_exact(a: HForm, b: HForm) -> HForm:
    """Return ``q`` with ``a == q * b``; raise if ``b`` does not divide ``a``."""
    if b.is_zero:
        raise ZeroDivisionError("division by the zero form")
    if a.is_zero:
        return a
    dq = a.degree - b.degree
    q, r = up.divmod_poly(a.dehomogenize(), b.dehomogenize())
    if not r and dq >= 0 and up.degree(q) <= dq:
        return HForm.from_affine(q, dq)
    # report a - q*b with q cut to the admissible degree
    q_part = HForm.from_affine(q[: dq + 1], dq) if dq >= 0 else HForm.zero()
    raise InexactDivisionError(a, b, a - q_part * b)


def is_coprime(a: HForm, b: HForm) -> bool:
    if a.is_zero and b.is_zero:
        return False
    return hform_gcd(a, b).degree == 0


class MovingForm:
    """A linear form ``sum(coeffs[i] * X_i)`` in x, y, z (arity 3) or
    x, y, z, w (arity 4) whose coefficients are binary forms of one degree."""

    __slots__ = ("coeffs", "degree")

    def __init__(self, coeffs: Sequence[HForm]):
        coeffs = tuple(coeffs)
        if len(coeffs) not in (3, 4):
            raise ValueError("a moving form has 3 or 4 coefficients")
        degrees = {c.degree for c in coeffs if not c.is_zero}
        if not degrees:
            raise ValueError("a moving form needs a nonzero coefficient")
        if len(degrees) > 1:
            raise ValueError(f"coefficient degrees differ: {sorted(degrees)}")
        self.coeffs = coeffs
        (self.degree,) = degrees

    @classmethod
    def from_vector(cls, vector: Sequence, arity: int, degree: int) -> MovingForm:
        """Inverse of :meth:`to_vector`."""
        step = degree + 1
        return cls([HForm(vector[i * step:(i + 1) * step]) for i in range(arity)])

    @property
    def arity(self) -> int:
        return len(self.coeffs)

    def to_vector(self) -> list:
        """Concatenated coefficient lists (each padded to degree + 1)."""
        out = []
        for c in self.coeffs:
            out.extend(c.coeffs if not c.is_zero else [0] * (self.degree + 1))
        return out

    def evaluate(self, forms: Sequence[HForm]) -> HForm:
        """Substitute binary forms for the coordinates."""
        total = HForm.zero()
        for h, f in zip(self.coeffs, forms, strict=True):
            total = total + h * f
        return total

    def coefficient(self, i: int) -> MPoly:
        """Linear polynomial multiplying ``s**i * sbar**(degree - i)``."""
        terms = {}
        for j, h in enumerate(self.coeffs):
            if not h.is_zero and h.coeffs[i]:
                e = [0, 0, 0, 0]
                e[j] = 1
                terms[tuple(e)] = h.coeffs[i]
        return MPoly(terms)

    def primitive(self) -> MovingForm:
        scale = primitive_scale(self.to_vector())
        return MovingForm([h * div(1, scale) for h in self.coeffs])

    def __mul__(self, other) -> MovingForm:
        return MovingForm([h * other for h in self.coeffs])

    __rmul__ = __mul__

    def __add__(self, other: MovingForm) -> MovingForm:
        return MovingForm([a + b for a, b in zip(self.coeffs, other.coeffs, strict=True)])

    def __neg__(self) -> MovingForm:
        return MovingForm([-h for h in self.coeffs])

    def __sub__(self, other: MovingForm) -> MovingForm:
        return self + (-other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, MovingForm):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"MovingForm({list(self.coeffs)!r})"

    def __str__(self) -> str:
        parts = [f"({h})*{v}" for h, v in zip(self.coeffs, XYZW) if not h.is_zero]
        return " + ".join(parts)
