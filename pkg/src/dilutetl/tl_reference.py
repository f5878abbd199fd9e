"""
Reference quantities for the ordinary (dense) Temperley-Lieb algebra.

These are used as building blocks for the dilute theory: the dilute
objects decompose over vacancy configurations into dense ones, so the
dense dimensions, Gram determinants and irreducible dimensions enter the
dilute formulas with binomial multiplicities.
"""

from functools import lru_cache
from math import comb

from .ring import GENERIC, qnum


def dim_tl(n):
    """Dimension of the dense algebra on n strands (a Catalan number)."""
    return comb(2 * n, n) // (n + 1)


def dim_v(n, k):
    """
    Dimension of the dense standard module with k defects on n strands;
    zero when n and k have different parities or k is out of range.
    """
    if k < 0 or k > n or (n - k) % 2:
        return 0
    h = (n - k) // 2
    return comb(n, h) - (comb(n, h - 1) if h >= 1 else 0)


def det_gram_tl(n, k, mode=GENERIC):
    """
    Closed form for the dense Gram determinant on (n, k), valid up to an
    overall sign: a product of quantum-number ratios with multiplicities
    given by standard-module dimensions.  The ratio product is a genuine
    Laurent polynomial; the division is exact.
    """
    if dim_v(n, k) == 0:
        raise ValueError("empty module")
    if mode.kind != "generic":
        raise ValueError("closed form is computed in the generic ring")
    num = mode.one()
    den = mode.one()
    for j in range(1, (n - k) // 2 + 1):
        e = dim_v(n, k + 2 * j)
        num = num * qnum(k + j + 1, mode) ** e
        den = den * qnum(j, mode) ** e
    return num.exact_div(den)


def is_critical(k, ell):
    """Whether the defect number k sits on a critical line for this ell."""
    return (k + 1) % ell == 0


@lru_cache(maxsize=None)
def dim_irr_tl(n, k, ell=None):
    """
    Dimension of the dense irreducible head of the (n, k) standard
    module.  Generic (ell None): the full standard dimension.  At a root
    of unity the critical modules stay irreducible and the rest obey a
    two-term recurrence in n.
    """
    if k < 0 or k > n or (n - k) % 2:
        return 0
    if ell is None or is_critical(k, ell):
        return dim_v(n, k)
    if n == k:
        return 1
    if is_critical(k + 1, ell):
        return dim_irr_tl(n - 1, k - 1, ell)
    return dim_irr_tl(n - 1, k - 1, ell) + dim_irr_tl(n - 1, k + 1, ell)
