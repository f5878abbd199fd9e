"""Shared independent oracles and small utilities for the test suite."""

from fractions import Fraction
from functools import lru_cache

from dilutetl.diagram_core import AlgebraElem, DiluteDiagram


@lru_cache(maxsize=None)
def motzkin(n):
    """Motzkin numbers by their standard recurrence."""
    if n <= 1:
        return 1
    return motzkin(n - 1) + sum(motzkin(k) * motzkin(n - 2 - k)
                                for k in range(n - 1))


@lru_cache(maxsize=None)
def catalan(n):
    """Catalan numbers by the convolution recurrence."""
    if n == 0:
        return 1
    return sum(catalan(k) * catalan(n - 1 - k) for k in range(n))


def frac_rank(mat):
    """Rank of a matrix of Fractions by Gaussian elimination."""
    m = [[Fraction(v) for v in row] for row in mat]
    rows = len(m)
    cols = len(m[0]) if rows else 0
    rank = 0
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(rows):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        rank += 1
        r += 1
        if r == rows:
            break
    return rank


def embed_bottom(elem):
    """
    Image of an algebra element one size up: each diagram keeps its strings
    and the new bottom site is summed over a through-string and a vacancy
    pair (the image of the unit at that site).
    """
    n = elem.n
    out = AlgebraElem(n + 1, elem.mode)
    for d, c in elem.terms.items():
        for with_string in (True, False):
            pairs = [(a if a < n else a + 2, b if b < n else b + 2)
                     for a, b in d.pairs()]
            if with_string:
                pairs.append((n, n + 1))
            out = out + AlgebraElem(
                n + 1, elem.mode,
                {DiluteDiagram.from_pairs(n + 1, pairs): c})
    return out
