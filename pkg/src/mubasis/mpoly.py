"""Sparse multivariate polynomials with exact rational coefficients.

Exponent vectors are packed into one integer (16 bits per variable, first
variable most significant), so monomial multiplication is integer
addition and integer comparison is the lexicographic order.  The public
view (:attr:`MPoly.terms`) uses plain exponent tuples.

The canonical order for display and normalization is graded reverse
lexicographic with x > y > z > w.
"""

from __future__ import annotations

from typing import Iterable, Mapping, Sequence

from .errors import InexactDivisionError
from .rational import Rat, div, primitive_scale, rat

XYZW = ("x", "y", "z", "w")
ST = ("s", "t")

_BITS = 16
_MASK = (1 << _BITS) - 1
_MAX_EXP = 1 << (_BITS - 1)


def _pack(exps: Sequence[int]) -> int:
    key = 0
    for e in exps:
        if not 0 <= e < _MAX_EXP:
            raise ValueError(f"exponent {e} out of range")
        key = (key << _BITS) | e
    return key


def _unpack(key: int, n: int) -> tuple[int, ...]:
    out = [0] * n
    for i in range(n - 1, -1, -1):
        out[i] = key & _MASK
        key >>= _BITS
    return tuple(out)


def _guard(n: int) -> int:
    g = 0
    for _ in range(n):
        g = (g << _BITS) | _MAX_EXP
    return g


def grevlex_key(exps: Sequence[int]):
    """Sort key: larger means earlier in graded reverse lex order."""
    return (sum(exps), tuple(-e for e in reversed(exps)))


class MPoly:
    __slots__ = ("gens", "_t")

    def __init__(self, terms: Mapping[Sequence[int], object] | None = None, gens: Sequence[str] = XYZW):
        self.gens = tuple(gens)
        n = len(self.gens)
        t = {}
        for exps, c in (terms or {}).items():
            if len(exps) != n:
                raise ValueError(f"exponent {exps} does not match generators {self.gens}")
            c = rat(c)
            if c:
                k = _pack(exps)
                c = t.get(k, 0) + c
                if c:
                    t[k] = c
                else:
                    t.pop(k, None)
        self._t = t

    @classmethod
    def _raw(cls, t: dict, gens: tuple) -> MPoly:
        p = object.__new__(cls)
        p.gens = gens
        p._t = t
        return p

    @classmethod
    def constant(cls, c, gens: Sequence[str] = XYZW) -> MPoly:
        return cls({(0,) * len(gens): c}, gens)

    @classmethod
    def gen(cls, var, gens: Sequence[str] = XYZW) -> MPoly:
        gens = tuple(gens)
        i = gens.index(var) if isinstance(var, str) else var
        e = [0] * len(gens)
        e[i] = 1
        return cls({tuple(e): 1}, gens)

    @classmethod
    def linear(cls, coeffs: Sequence, gens: Sequence[str] = XYZW) -> MPoly:
        """``sum(coeffs[i] * gens[i])``."""
        n = len(gens)
        return cls({tuple(int(i == j) for j in range(n)): c for i, c in enumerate(coeffs)}, gens)

    # views

    @property
    def nvars(self) -> int:
        return len(self.gens)

    @property
    def terms(self) -> dict[tuple[int, ...], Rat]:
        n = self.nvars
        return {_unpack(k, n): c for k, c in self._t.items()}

    def sorted_terms(self) -> list[tuple[tuple[int, ...], Rat]]:
        """Terms in canonical (graded reverse lex) order, largest first."""
        return sorted(self.terms.items(), key=lambda item: grevlex_key(item[0]), reverse=True)

    def leading_coefficient(self) -> Rat:
        return self.sorted_terms()[0][1]

    @property
    def is_zero(self) -> bool:
        return not self._t

    def __bool__(self) -> bool:
        return bool(self._t)

    def __len__(self) -> int:
        return len(self._t)

    def total_degree(self) -> int:
        """Maximum total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self.terms), default=-1)

    def degree_in(self, var) -> int:
        i = self.gens.index(var) if isinstance(var, str) else var
        return max((e[i] for e in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self.terms}) <= 1

    def is_constant(self) -> bool:
        return all(k == 0 for k in self._t)

    def coefficient(self, exps: Sequence[int]) -> Rat:
        return self._t.get(_pack(exps), 0)

    # arithmetic

    def _coerce(self, other) -> MPoly:
        if isinstance(other, MPoly):
            if other.gens != self.gens:
                raise ValueError(f"generator mismatch: {self.gens} vs {other.gens}")
            return other
        return MPoly.constant(rat(other), self.gens)

    def __add__(self, other) -> MPoly:
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        t = dict(self._t)
        for k, c in other._t.items():
            c = t.get(k, 0) + c
            if c:
                t[k] = c
            else:
                del t[k]
        return MPoly._raw(t, self.gens)

    __radd__ = __add__

    def __neg__(self) -> MPoly:
        return MPoly._raw({k: -c for k, c in self._t.items()}, self.gens)

    def __sub__(self, other) -> MPoly:
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> MPoly:
        return (-self) + other

    def __mul__(self, other) -> MPoly:
        if not isinstance(other, MPoly):
            try:
                c = rat(other)
            except TypeError:
                return NotImplemented
            if not c:
                return MPoly._raw({}, self.gens)
            return MPoly._raw({k: v * c for k, v in self._t.items()}, self.gens)
        other = self._coerce(other)
        a, b = self._t, other._t
        if len(a) < len(b):
            a, b = b, a
        t: dict = {}
        get = t.get
        for kb, cb in b.items():
            for ka, ca in a.items():
                k = ka + kb
                t[k] = get(k, 0) + ca * cb
        return MPoly._raw({k: c for k, c in t.items() if c}, self.gens)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> MPoly:
        if e < 0:
            raise ValueError("negative exponent")
        result = MPoly.constant(1, self.gens)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def scale(self, c) -> MPoly:
        return self * c

    def __eq__(self, other) -> bool:
        if isinstance(other, MPoly):
            return self.gens == other.gens and self._t == other._t
        try:
            c = rat(other)
        except TypeError:
            return NotImplemented
        return self._t == ({0: c} if c else {})

    def __hash__(self) -> int:
        return hash((self.gens, frozenset(self._t.items())))

    def divexact(self, other: MPoly) -> MPoly:
        """Quotient of an exact division; raises InexactDivisionError otherwise."""
        other = self._coerce(other)
        if not other._t:
            raise ZeroDivisionError("polynomial division by zero")
        guard = _guard(self.nvars)
        lk = max(other._t)
        lc = other._t[lk]
        rest = [(k, c) for k, c in other._t.items() if k != lk]
        r = dict(self._t)
        q = {}
        while r:
            k = max(r)
            if ((k | guard) - lk) & guard != guard:
                raise InexactDivisionError(self, other, MPoly._raw(r, self.gens))
            c = div(r.pop(k), lc)
            m = k - lk
            q[m] = c
            for kb, cb in rest:
                kk = m + kb
                v = r.get(kk, 0) - c * cb
                if v:
                    r[kk] = v
                else:
                    r.pop(kk, None)
        return MPoly._raw(q, self.gens)

    def primitive(self) -> tuple[Rat, MPoly]:
        """``(content, P)`` with ``self == content * P``, ``P`` having coprime
        integer coefficients and a positive leading coefficient in canonical order."""
        if not self._t:
            return 0, self
        lead = self.sorted_terms()[0][1]
        scale = primitive_scale([lead] + list(self._t.values()))
        return rat(scale), MPoly._raw({k: div(c, scale) for k, c in self._t.items()}, self.gens)

    def normalized(self) -> MPoly:
        return self.primitive()[1]

    # substitution

    def compose(self, values: Sequence, one=None, zero=None):
        """Substitute ``values[i]`` for the i-th generator.

        Works for any values supporting ``+``, ``*`` and ``**``;
        ``one``/``zero`` seed the products and the sum when the values are
        not numbers.
        """
        if len(values) != self.nvars:
            raise ValueError("wrong number of values")
        one = 1 if one is None else one
        cache: dict = {}

        def power(i, e):
            if (i, e) not in cache:
                cache[i, e] = values[i] ** e
            return cache[i, e]

        total = zero
        for exps, c in self.sorted_terms():
            term = None
            for i, e in enumerate(exps):
                if e:
                    term = power(i, e) if term is None else term * power(i, e)
            term = one * c if term is None else term * c
            total = term if total is None else total + term
        return 0 if total is None else total

    def substitute(self, values: Sequence[MPoly]) -> MPoly:
        """Compose with polynomials sharing one generator set."""
        gens = values[0].gens
        return self.compose(values, one=MPoly.constant(1, gens), zero=MPoly({}, gens))

    def linear_change(self, matrix: Sequence[Sequence]) -> MPoly:
        """``P(matrix @ X)``: the i-th generator becomes ``sum_j matrix[i][j] X_j``."""
        values = [MPoly.linear(row, self.gens) for row in matrix]
        return self.substitute(values)

    def specialize(self, assignments: Mapping[int, object]) -> MPoly:
        """Set some generators to constants (the generators stay, with exponent 0)."""
        out: dict = {}
        for exps, c in self.terms.items():
            e = list(exps)
            for i, v in assignments.items():
                if e[i]:
                    c = c * rat(v) ** e[i]
                    e[i] = 0
            out[tuple(e)] = out.get(tuple(e), 0) + c
        return MPoly(out, self.gens)

    def univariate(self, var) -> list:
        """Dense coefficients in ``var`` (lowest first); other generators must be absent."""
        i = self.gens.index(var) if isinstance(var, str) else var
        out = [0] * (self.degree_in(i) + 1)
        for exps, c in self.terms.items():
            if any(e for j, e in enumerate(exps) if j != i):
                raise ValueError("polynomial depends on other generators")
            out[exps[i]] += c
        return out

    def drop_gen(self, var) -> MPoly:
        """Set ``var`` to 1 and remove it from the generators."""
        i = self.gens.index(var) if isinstance(var, str) else var
        gens = self.gens[:i] + self.gens[i + 1:]
        out: dict = {}
        for exps, c in self.terms.items():
            e = exps[:i] + exps[i + 1:]
            out[e] = out.get(e, 0) + c
        return MPoly(out, gens)

    def with_gens(self, gens: Sequence[str]) -> MPoly:
        gens = tuple(gens)
        if len(gens) != self.nvars:
            raise ValueError("wrong number of generators")
        return MPoly._raw(dict(self._t), gens)

    def __repr__(self) -> str:
        return f"MPoly({self.terms!r}, gens={self.gens!r})"

    def __str__(self) -> str:
        from .exprio import format_mpoly

        return format_mpoly(self)


def poly_sum(polys: Iterable[MPoly], gens: Sequence[str] = XYZW) -> MPoly:
    total = MPoly({}, gens)
    for p in polys:
        total = total + p
    return total
