"""
Representation-theoretic bookkeeping at a root of unity.

Everything here reduces to integer bookkeeping built on exact kernels:
criticality and symmetric pairs of defect numbers, decomposition and
Cartan matrices, dimensions of radicals, irreducible heads and principal
indecomposables, the decomposition of the regular module, recurrences for
the irreducible dimensions, cellularity of the diagram basis, and
dimension checks for the restriction and induction formulas.
"""

from functools import lru_cache
from math import comb

from .ring import GENERIC, beta
from .diagram_core import (AlgebraElem, all_generators, identity, transpose,
                           reduce_mod_ideal, crossing_count)
from .link_modules import (enumerate_links, dim_standard, act, LinComb,
                           diagram_from_links, links_of_diagram)
from .gram import gram_product, gram_nullity, dim_irreducible_formula
from .tl_reference import is_critical


def algebra_dim(n):
    """Dimension of the whole algebra: the sum of squared module dims."""
    return sum(dim_standard(n, k) ** 2 for k in range(n + 1))


def pair_info(k, ell, n):
    """
    Criticality of k and its nearest symmetric partners below and above.
    Partners are reported even when out of range; flags tell whether they
    index actual modules (0 <= partner <= n).
    """
    assert ell >= 2
    info = {"k": k, "ell": ell, "critical": is_critical(k, ell),
            "k_minus": None, "k_plus": None,
            "k_minus_in_range": False, "k_plus_in_range": False}
    if info["critical"]:
        return info
    r = (k + 1) % ell  # distance above the critical line below k
    info["k_minus"] = k - 2 * r
    info["k_plus"] = k + 2 * (ell - r)
    info["k_minus_in_range"] = 0 <= info["k_minus"] <= n
    info["k_plus_in_range"] = 0 <= info["k_plus"] <= n
    return info


def decomposition_matrix(n, ell):
    """
    The (n+1) x (n+1) matrix counting irreducible factors of the standard
    modules: the diagonal, plus a 1 in column k_plus for non-critical k
    whose upper partner is in range.
    """
    d = [[0] * (n + 1) for _ in range(n + 1)]
    for k in range(n + 1):
        d[k][k] = 1
        info = pair_info(k, ell, n)
        if not info["critical"] and info["k_plus_in_range"]:
            d[k][info["k_plus"]] += 1
    return d


def cartan_matrix(n, ell):
    """Factor counts of the principal indecomposables: c = d^t d."""
    d = decomposition_matrix(n, ell)
    size = n + 1
    return [[sum(d[i][k] * d[i][j] for i in range(size))
             for j in range(size)] for k in range(size)]


@lru_cache(maxsize=None)
def irr_dims_recurrence(n_max, ell):
    """
    Table of irreducible dimensions built row by row.  Row n+1 follows
    from row n through a three-branch recurrence: crossing a critical
    line from below merges differently than the bulk three-term rule, and
    sitting on a critical line picks up a doubled term plus a far
    reflection.  Out-of-range entries count as zero and the k = n entry
    is always 1.
    """
    assert ell >= 2
    rows = [[1]]  # n = 0
    for n in range(n_max):
        prev = rows[-1]

        def p(j):
            if j < 0 or j > n:
                return 0
            return prev[j]

        row = []
        for k in range(n + 2):
            if k == n + 1:
                row.append(1)
            elif is_critical(k, ell):
                row.append(p(k - 1) + p(k) + 2 * p(k + 1) + p(k + 2 * ell - 1))
            elif is_critical(k + 1, ell):
                row.append(p(k - 1) + p(k))
            else:
                row.append(p(k - 1) + p(k) + p(k + 1))
        rows.append(row)
    return tuple(tuple(r) for r in rows)


def dim_irr(n, k, ell):
    """Irreducible dimension from the recurrence table."""
    return irr_dims_recurrence(n, ell)[n][k]


def principal_dims(n, ell):
    """
    Dimensions of the principal indecomposables: the standard dimension
    when k is critical or below the first critical line, otherwise the
    standard plus its lower symmetric partner.
    """
    out = []
    for k in range(n + 1):
        info = pair_info(k, ell, n)
        dim = dim_standard(n, k)
        if not info["critical"] and k >= ell - 1:
            dim += dim_standard(n, info["k_minus"])
        out.append(dim)
    return out


def loewy_type(n, k, ell):
    """
    Shape class of the principal indecomposable: 'a' on a critical line,
    'd' below the first one, 'b' when both outer partners index modules,
    'c' when the upper-upper partner falls beyond n.
    """
    info = pair_info(k, ell, n)
    if info["critical"]:
        return "a"
    if k < ell - 1:
        return "d"
    kpp = info["k_plus"] + 2 * (ell - 1)  # partner of k_plus, one window up
    if kpp <= n:
        return "b"
    return "c"


def regular_decomposition(n, mode):
    """
    The regular module as a list of ((module kind, k), multiplicity)
    pairs; multiplicities are irreducible dimensions.  The total must be
    the dimension of the algebra.
    """
    out = []
    if mode.kind == "generic":
        for k in range(n + 1):
            out.append((("U", k), dim_standard(n, k)))
        total = sum(m * dim_standard(n, k) for (_t, k), m in out)
    else:
        ell = mode.ell
        pdims = principal_dims(n, ell)
        for k in range(n + 1):
            info = pair_info(k, ell, n)
            kind = "U" if info["critical"] or k < ell - 1 else "P"
            out.append(((kind, k), dim_irr(n, k, ell)))
        total = sum(m * pdims[k] for (_t, k), m in out)
    assert total == algebra_dim(n), (total, algebra_dim(n))
    return out


def _coeff_map(elem, k, y):
    """
    Write an algebra element, reduced to crossing count >= k, in the form
    sum_z r(z) |z y~|; returns the map z -> r(z) or None if some term has
    a right link different from y.
    """
    red = reduce_mod_ideal(elem, k)
    out = {}
    for d, c in red.terms.items():
        if crossing_count(d) != k:
            # terms with more crossings would lower-filtrate differently;
            # they cannot appear in a product with a k-crossing diagram
            return None
        lz, ry = links_of_diagram(d)
        if ry != y:
            return None
        out[lz] = out.get(lz, elem.mode.zero()) + c
    return {z: c for z, c in out.items() if c}


def verify_cellularity(n, k, mode=GENERIC):
    """
    Check the basis-transport axiom on the diagram basis: for every
    generator u, the coefficients of u |x y~| modulo lower filtration
    layers do not depend on y, agree with the standard-module action of u
    on x, and sandwich products collapse to the bilinear form.
    """
    basis = enumerate_links(n, k)
    gens = [("id", identity(n, mode))] + list(all_generators(n, mode))
    for _lab, u in gens:
        for x in basis:
            ref = None
            for y in basis:
                c = AlgebraElem(n, mode,
                                {diagram_from_links(x, y): mode.one()})
                coeffs = _coeff_map(u * c, k, y)
                if coeffs is None:
                    return False
                # same coefficients as the standard-module action
                action = act(u, x, quotient_k=k)
                if coeffs != dict(action.terms):
                    return False
                if ref is None:
                    ref = coeffs
                elif coeffs != ref:
                    return False
    # sandwich rule: |x y~| u |x' y''~| = <y, u x'> |x y''| mod lower
    for _lab, u in gens:
        for x in basis[:2]:
            for y in basis:
                for xp in basis:
                    for yp in basis[:2]:
                        left = AlgebraElem(
                            n, mode, {diagram_from_links(x, y): mode.one()})
                        right = AlgebraElem(
                            n, mode, {diagram_from_links(xp, yp): mode.one()})
                        prod = reduce_mod_ideal(left * u * right, k)
                        uxp = act(u, xp, quotient_k=k)
                        phi = mode.zero()
                        for z, cz in uxp.terms.items():
                            phi = phi + gram_product(y, z, mode) * cz
                        expected = AlgebraElem(n, mode, {
                            diagram_from_links(x, yp): phi}) if phi else \
                            AlgebraElem(n, mode)
                        if prod != expected:
                            return False
    return True


def _dims_for_report(n, ell):
    """dim U / dim L / dim R rows 0..n from the recurrence table."""
    rows = []
    for k in range(n + 1):
        u = dim_standard(n, k)
        l = dim_irr(n, k, ell)
        rows.append((u, u - l, l))
    return rows


def restriction_induction_report(n, ell):
    """
    Dimension-level verification of the restriction and induction
    formulas relating sizes n and n+1 (restriction) and n-1 and n
    (induction).  Each check reports both sides; dimension of an induced
    standard module is taken as the three-term sum of standard dimensions
    at the larger size.
    """
    checks = []

    def dims(m):
        return _dims_for_report(m, ell)

    def dimU(m, k):
        return dim_standard(m, k) if 0 <= k <= m else 0

    def dimL(m, k):
        return dim_irr(m, k, ell) if 0 <= k <= m else 0

    def dimR(m, k):
        return dimU(m, k) - dimL(m, k)

    def dimP(m, k):
        return principal_dims(m, ell)[k] if 0 <= k <= m else 0

    def dim_ind_U(m, k):
        # induced from size m to m+1
        return dimU(m + 1, k - 1) + dimU(m + 1, k) + dimU(m + 1, k + 1)

    ell2 = ell == 2

    # restriction of radicals, size n+1 down to n
    for k in range(n + 2):
        if dimR(n + 1, k) == 0:
            continue
        branch_flag = None
        if is_critical(k + 1, ell):
            third = dimU(n, k + 1)
            if is_critical(k - 1, ell):
                branch_flag = "ell2_double_critical"
        else:
            third = dimR(n, k + 1)
        lhs = dimR(n + 1, k)
        rhs = dimR(n, k - 1) + dimR(n, k) + third
        checks.append({"name": "res_radical_k%d" % k, "pass": lhs == rhs,
                       "lhs": lhs, "rhs": rhs, "flag": branch_flag})

    # restriction of irreducibles, size n+1 down to n
    for k in range(n + 2):
        if dimR(n + 1, k) == 0:
            continue
        third = 0 if is_critical(k + 1, ell) else dimL(n, k + 1)
        lhs = dimL(n + 1, k)
        rhs = dimL(n, k - 1) + dimL(n, k) + third
        checks.append({"name": "res_irred_k%d" % k, "pass": lhs == rhs,
                       "lhs": lhs, "rhs": rhs, "flag": None})

    # induced standards across a critical line
    if n >= 1:
        for kc in range(n):
            if not is_critical(kc, ell):
                continue
            lhs = dim_ind_U(n - 1, kc)
            rhs = dimU(n, kc) + dimP(n, kc + 1) if kc + 1 <= n else dimU(n, kc)
            checks.append({"name": "ind_critical_k%d" % kc,
                           "pass": lhs == rhs, "lhs": lhs, "rhs": rhs,
                           "flag": None})

    # induced principal indecomposables, size n-1 up to n
    if n >= 1:
        for k in range(n):
            info = pair_info(k, ell, n - 1)
            # left side: induce the standard filtration of P_{n-1,k}
            lhs = dim_ind_U(n - 1, k)
            if not info["critical"] and k >= ell - 1:
                lhs += dim_ind_U(n - 1, info["k_minus"])
            if info["critical"]:
                rhs = dimP(n, k) + dimP(n, k + 1)
            else:
                km = info["k_minus"]
                cplus = is_critical(k + 1, ell)
                cminus = is_critical(k - 1, ell)
                rhs = dimP(n, k) + dimP(n, k + 1)
                if cplus and cminus:
                    rhs += 2 * dimP(n, k - 1) + dimP(n, km - 1)
                elif cplus:
                    rhs += dimP(n, k - 1) + dimP(n, km - 1)
                elif cminus:
                    rhs += 2 * dimP(n, k - 1)
                else:
                    rhs += dimP(n, k - 1)
            checks.append({"name": "ind_principal_k%d" % k,
                           "pass": lhs == rhs, "lhs": lhs, "rhs": rhs,
                           "flag": "ell2_double_critical"
                           if (ell2 and not info["critical"]) else None})

    # global bookkeeping: inducing the whole algebra fills the bigger one
    if n >= 1:
        lhs = sum(dimL(n - 1, k) * (dim_ind_U(n - 1, k)
                                    + (dim_ind_U(n - 1, pair_info(k, ell, n - 1)["k_minus"])
                                       if not is_critical(k, ell) and k >= ell - 1 else 0))
                  for k in range(n))
        checks.append({"name": "ind_regular_total",
                       "pass": lhs == algebra_dim(n),
                       "lhs": lhs, "rhs": algebra_dim(n), "flag": None})

    return {"n": n, "ell": ell, "checks": checks,
            "all_pass": all(c["pass"] for c in checks)}


def structure_report(n, mode):
    """
    Full per-size record: rows of dimensions and classifications, the two
    matrices, and the outcome of the global consistency checks.
    """
    rows = []
    checks = []
    if mode.kind == "generic":
        for k in range(n + 1):
            u = dim_standard(n, k)
            rows.append({"k": k, "dimU": u, "dimR": 0, "dimL": u,
                         "dimP": u, "critical": False, "pair": None,
                         "loewy_type": None})
        d = [[1 if i == j else 0 for j in range(n + 1)] for i in range(n + 1)]
        c = d
        checks.append({"name": "regular_total",
                       "pass": sum(r["dimL"] * r["dimP"] for r in rows)
                       == algebra_dim(n),
                       "lhs": sum(r["dimL"] * r["dimP"] for r in rows),
                       "rhs": algebra_dim(n)})
        return {"n": n, "mode": {"kind": "generic", "m": None, "ell": None},
                "rows": rows, "matrices": {"d": d, "c": c}, "checks": checks}

    ell = mode.ell
    pdims = principal_dims(n, ell)
    for k in range(n + 1):
        u = dim_standard(n, k)
        l = dim_irr(n, k, ell)
        info = pair_info(k, ell, n)
        rows.append({"k": k, "dimU": u, "dimR": u - l, "dimL": l,
                     "dimP": pdims[k], "critical": info["critical"],
                     "pair": {"k_minus": info["k_minus"],
                              "k_plus": info["k_plus"],
                              "k_minus_in_range": info["k_minus_in_range"],
                              "k_plus_in_range": info["k_plus_in_range"]},
                     "loewy_type": loewy_type(n, k, ell)})
    d = decomposition_matrix(n, ell)
    c = cartan_matrix(n, ell)
    checks.append({"name": "cartan_symmetric",
                   "pass": all(c[i][j] == c[j][i]
                               for i in range(n + 1) for j in range(n + 1)),
                   "lhs": None, "rhs": None})
    total = sum(r["dimL"] * r["dimP"] for r in rows)
    checks.append({"name": "regular_total", "pass": total == algebra_dim(n),
                   "lhs": total, "rhs": algebra_dim(n)})
    for r in rows:
        if r["critical"] or r["pair"] is None:
            continue
        kp = r["pair"]["k_plus"]
        if r["pair"]["k_plus_in_range"]:
            dual = rows[kp]["dimL"]
            checks.append({"name": "pair_duality_k%d" % r["k"],
                           "pass": r["dimR"] == dual,
                           "lhs": r["dimR"], "rhs": dual})
            checks.append({"name": "exact_seq_k%d" % r["k"],
                           "pass": r["dimU"] == r["dimL"] + dual,
                           "lhs": r["dimU"], "rhs": r["dimL"] + dual})
        else:
            checks.append({"name": "pair_duality_k%d" % r["k"],
                           "pass": r["dimR"] == 0,
                           "lhs": r["dimR"], "rhs": 0})
    return {"n": n, "mode": {"kind": "root", "m": mode.m, "ell": ell},
            "rows": rows, "matrices": {"d": d, "c": c}, "checks": checks}
