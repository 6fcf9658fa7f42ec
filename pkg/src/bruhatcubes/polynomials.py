"""Polynomials in q with exact integer coefficients.

A polynomial is a tuple of coefficients indexed by degree, normalized so the
last entry is nonzero; the zero polynomial is the empty tuple.  Python ints
keep all arithmetic exact.
"""

from __future__ import annotations

QPoly = tuple[int, ...]

ZERO: QPoly = ()
ONE: QPoly = (1,)


def normalize(coeffs) -> QPoly:
    cs = list(coeffs)
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(cs)


def padd(a: QPoly, b: QPoly) -> QPoly:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for d, c in enumerate(b):
        out[d] += c
    return normalize(out)


def pmul(a: QPoly, b: QPoly) -> QPoly:
    if not a or not b:
        return ZERO
    out = [0] * (len(a) + len(b) - 1)
    for d, c in enumerate(a):
        if c:
            for e, k in enumerate(b):
                out[d + e] += c * k
    return normalize(out)


def pshift(a: QPoly, k: int) -> QPoly:
    """Multiply by q^k."""
    if not a:
        return ZERO
    return (0,) * k + a


def monomial(k: int, c: int = 1) -> QPoly:
    return normalize((0,) * k + (c,))


def degree(a: QPoly) -> int:
    """Degree, with the zero polynomial at -1."""
    return len(a) - 1


def poly_str(a: QPoly) -> str:
    """Human form, highest degree first: (0, 1, 0, 1) -> ``"q^3+q"``.

    >>> poly_str((0, 1, 0, 1))
    'q^3+q'
    >>> poly_str(())
    '0'
    """
    if not a:
        return "0"
    terms = []
    for d in range(len(a) - 1, -1, -1):
        c = a[d]
        if not c:
            continue
        if d == 0:
            terms.append(str(c))
        else:
            q = "q" if d == 1 else f"q^{d}"
            terms.append(q if c == 1 else f"{c}{q}")
    return "+".join(terms)
