"""Sylvester resultants of moving forms and perfect-power extraction.

The resultant of a mu-basis is ``c * F**k``; :func:`power_exponent_probe`
finds ``k`` and :func:`mpoly_kth_root` recovers ``F``.
"""

from __future__ import annotations

import random
from fractions import Fraction
from math import gcd

from . import univariate as up
from .forms import MovingForm
from .linalg import bareiss_det
from .mpoly import MPoly, XYZW, grevlex_key
from .rational import div

RETRY_BOUND = 8


def sylvester_matrix(p: MovingForm, q: MovingForm) -> list[list[MPoly]]:
    """The (mu1+mu2) x (mu1+mu2) Sylvester matrix in s, sbar.

    Coefficients run from the highest power of s down; the mu2 shifted
    rows of ``p`` come first.
    """
    if p.arity != q.arity:
        raise ValueError(f"arity mismatch: {p.arity} vs {q.arity}")
    m1, m2 = p.degree, q.degree
    size = m1 + m2
    if size < 1:
        raise ValueError("resultant of two constant forms")
    zero = MPoly({}, XYZW)
    pc = [p.coefficient(m1 - i) for i in range(m1 + 1)]
    qc = [q.coefficient(m2 - i) for i in range(m2 + 1)]
    rows = []
    for r in range(m2):
        rows.append([zero] * r + pc + [zero] * (size - r - m1 - 1))
    for r in range(m1):
        rows.append([zero] * r + qc + [zero] * (size - r - m2 - 1))
    return rows


def sylvester_resultant(p: MovingForm, q: MovingForm) -> MPoly:
    """Homogeneous resultant of two moving forms with respect to s, sbar.

    A degree-0 form ``p`` gives ``p**mu2``, which is also what the
    Sylvester determinant reduces to.
    """
    if p.arity != q.arity:
        raise ValueError(f"arity mismatch: {p.arity} vs {q.arity}")
    if p.degree == 0 and q.degree >= 1:
        return p.coefficient(0) ** q.degree
    if q.degree == 0 and p.degree >= 1:
        return q.coefficient(0) ** p.degree
    return bareiss_det(sylvester_matrix(p, q))


def mpoly_kth_root(f: MPoly, k: int) -> tuple[MPoly, Fraction] | None:
    """Return ``(g, c)`` with ``f == c * g**k``, or None if no such ``g`` exists.

    ``g`` is primitive with a positive leading coefficient in canonical
    order.  Terms of ``g`` are found one at a time, largest first: if
    ``h`` is the part found so far, the leading term of ``f - h**k`` is
    ``k * lt(h)**(k-1)`` times the next term.
    """
    if k < 1:
        raise ValueError("k must be positive")
    if f.is_zero:
        raise ValueError("root of the zero polynomial")
    deg = f.total_degree()
    if deg % k:
        return None
    content, fp = f.primitive()
    if k == 1:
        return fp, Fraction(content)
    lead_exp, lead_coef = fp.sorted_terms()[0]
    if any(e % k for e in lead_exp):
        return None
    root_coef = _integer_root(lead_coef, k)
    if root_coef is None:
        return None
    g_exp = tuple(e // k for e in lead_exp)
    g = MPoly({g_exp: root_coef}, f.gens)
    denom_exp = [e * (k - 1) for e in g_exp]
    denom_coef = k * root_coef ** (k - 1)
    last = grevlex_key(g_exp)
    remainder = fp - g**k
    while not remainder.is_zero:
        r_exp, r_coef = remainder.sorted_terms()[0]
        exp = tuple(a - b for a, b in zip(r_exp, denom_exp))
        if min(exp) < 0:
            return None
        key = grevlex_key(exp)
        if key >= last:
            return None
        last = key
        g = g + MPoly({exp: div(r_coef, denom_coef)}, f.gens)
        remainder = fp - g**k
    return g, Fraction(content)


def _integer_root(c, k: int):
    if not isinstance(c, int) or c <= 0:
        return None
    r = round(c ** (1.0 / k)) if c < 2**52 else _iroot(c, k)
    for cand in (r - 1, r, r + 1):
        if cand > 0 and cand**k == c:
            return cand
    return None


def _iroot(c: int, k: int) -> int:
    lo, hi = 0, 1 << (c.bit_length() // k + 1)
    while lo < hi:
        mid = (lo + hi + 1) // 2
        if mid**k <= c:
            lo = mid
        else:
            hi = mid - 1
    return lo


def _divisors_desc(n: int) -> list[int]:
    return [d for d in range(n, 0, -1) if n % d == 0]


def power_exponent_probe(f: MPoly, rng: random.Random | int = 0) -> int:
    """Largest ``k`` such that ``f`` is a constant times a k-th power.

    All variables but one are set to small random rationals; the gcd of
    the multiplicities of the univariate squarefree decomposition is a
    multiple of the true exponent, confirmed by :func:`mpoly_kth_root`.
    A failed confirmation (unlucky specialization) is retried, after
    which every divisor of the degree is tried from the top.
    """
    if not isinstance(rng, random.Random):
        rng = random.Random(rng)
    if f.is_zero:
        raise ValueError("exponent of the zero polynomial")
    deg = f.total_degree()
    if deg < 1:
        return 1
    main = max(range(f.nvars), key=lambda i: (f.degree_in(i), -i))
    for _ in range(RETRY_BOUND):
        values = {
            i: Fraction(rng.randint(-9, 9), rng.randint(1, 9)) for i in range(f.nvars) if i != main
        }
        uni = f.specialize(values).univariate(main)
        mults = up.squarefree_multiplicities(uni)
        if not mults:
            continue
        cand = 0
        for m in mults:
            cand = gcd(cand, m)
        if deg % cand:
            continue
        if cand == 1 or mpoly_kth_root(f, cand) is not None:
            return cand
    for d in _divisors_desc(deg):
        if mpoly_kth_root(f, d) is not None:
            return d
    return 1

