"""Dense univariate polynomials over Q as coefficient lists, lowest degree first.

Small helpers shared by the binary-form gcd and the perfect-power probe.
The empty list is the zero polynomial.
"""

from __future__ import annotations

from .rational import div, rat


def trim(a):
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def degree(a) -> int:
    return len(a) - 1 if a else -1


def add(a, b):
    n = max(len(a), len(b))
    return trim([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)])


def sub(a, b):
    return add(a, [-c for c in b])


def mul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return trim(out)


def divmod_poly(a, b):
    """Quotient and remainder of ``a`` by nonzero ``b``."""
    b = trim(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    r = [rat(c) for c in trim(a)]
    db, lc = len(b) - 1, b[-1]
    if len(r) - 1 < db:
        return [], r
    q = [0] * (len(r) - db)
    for k in range(len(r) - 1 - db, -1, -1):
        c = r[k + db]
        if c:
            c = div(c, lc)
            q[k] = c
            for j, bj in enumerate(b):
                if bj:
                    r[k + j] -= c * bj
    return trim(q), trim(r[:db])


def monic(a):
    a = trim(a)
    if not a:
        return []
    lc = a[-1]
    return [div(c, lc) for c in a]


def gcd(a, b):
    """Monic gcd; ``gcd(0, 0) = 0``."""
    a, b = trim(a), trim(b)
    while b:
        a, b = b, divmod_poly(a, b)[1]
    return monic(a)


def derivative(a):
    return trim([i * a[i] for i in range(1, len(a))])


def squarefree_multiplicities(a) -> list[int]:
    """Multiplicities of the squarefree decomposition (Yun's algorithm).

    Returns the sorted list of ``i`` such that the factor of multiplicity
    ``i`` is nonconstant.  Characteristic zero only.
    """
    a = trim(a)
    if degree(a) < 1:
        return []
    out = []
    b = gcd(a, derivative(a))
    c = divmod_poly(a, b)[0]
    d = sub(divmod_poly(derivative(a), b)[0], derivative(c))
    i = 1
    while degree(c) > 0:
        g = gcd(c, d)
        if degree(g) > 0:
            out.append(i)
        c = divmod_poly(c, g)[0]
        d = sub(divmod_poly(d, g)[0], derivative(c))
        i += 1
    return out
