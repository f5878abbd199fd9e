"""
Command-line surface: compute, cross-check and export dimension tables,
Gram data, the central element and the structure reports.

Commands: `dims` (standard-module dimension table), `irr` (irreducible
dimension table, computed three independent ways), `gram` (matrix,
determinants and radical for one module) and `verify` (named invariant
suites with machine-readable verdicts).  Every command exits nonzero if
any internal cross-check fails.  Set DTL_CACHE_DIR to cache the
irreducible-dimension tables between runs.
"""

import json
import os
import random
import sys
from functools import lru_cache

import click

from .ring import GENERIC, LaurentPoly, beta, root_of_unity
from .diagram_core import (AlgebraElem, DiluteDiagram, all_generators,
                           crossing_count, enumerate_diagrams, identity,
                           multiply_diagrams_raw, parity_split, transpose)
from .link_modules import (LinkState, act, act_diagram, dim_standard,
                           enumerate_links, induced_basis, phi_iso,
                           restriction_phi, restriction_psi)
from .gram import (dim_irreducible, dim_irreducible_formula, gram_blocks,
                   gram_det_closed, gram_det_direct, gram_matrix, gram_nullity,
                   gram_product, radical_basis)
from .central import build_F, check_central, check_eigenvalue
from .structure import (dim_irr, irr_dims_recurrence, regular_decomposition,
                        restriction_induction_report, structure_report,
                        verify_cellularity)

GOLDEN_DIR = os.path.join(os.path.dirname(__file__), "goldens")
DEFAULT_DET_CAP = 5


@lru_cache(maxsize=None)
def _motzkin(n):
    """Motzkin numbers by their standard recurrence (independent oracle)."""
    if n <= 1:
        return 1
    return _motzkin(n - 1) + sum(_motzkin(k) * _motzkin(n - 2 - k)
                                 for k in range(n - 1))


def _load_golden(name):
    with open(os.path.join(GOLDEN_DIR, name), encoding="utf-8") as fh:
        return fh.read()


def _mode_from_flags(generic, m):
    if generic and m is not None:
        raise click.UsageError("--generic and --root-of-unity are exclusive")
    if m is not None:
        if m < 3:
            raise click.UsageError("--root-of-unity requires m >= 3")
        return root_of_unity(m)
    return GENERIC


def _table_csv(rows):
    return "".join(",".join(str(v) for v in row) + "\n" for row in rows)


def _table_pretty(rows, title):
    width = max(len(str(v)) for row in rows for v in row)
    lines = [title]
    for n, row in enumerate(rows):
        lines.append("n=%2d  " % n + " ".join(str(v).rjust(width) for v in row))
    return "\n".join(lines) + "\n"


def _emit(fmt, rows, title, extra):
    """Render a jagged dimension table in the requested format."""
    if fmt == "csv":
        click.echo(_table_csv(rows), nl=False)
    elif fmt == "pretty":
        click.echo(_table_pretty(rows, title), nl=False)
        for key, val in extra.items():
            click.echo("%s: %s" % (key, val))
    else:
        payload = {"title": title, "rows": [list(r) for r in rows]}
        payload.update(extra)
        click.echo(json.dumps(payload, indent=2, sort_keys=True))


def _cached_irr_table(n_max, ell):
    """Irreducible-dimension table, memoized on disk when DTL_CACHE_DIR is set."""
    cache_dir = os.environ.get("DTL_CACHE_DIR")
    if not cache_dir:
        return irr_dims_recurrence(n_max, ell)
    os.makedirs(cache_dir, exist_ok=True)
    path = os.path.join(cache_dir, "irr_ell%d_n%d.json" % (ell, n_max))
    if os.path.exists(path):
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
        return tuple(tuple(row) for row in data)
    table = irr_dims_recurrence(n_max, ell)
    with open(path, "w", encoding="utf-8") as fh:
        json.dump([list(r) for r in table], fh)
    return table


@click.group()
def main():
    """Exact computations in the dilute diagram algebra."""


@main.command()
@click.option("--n-max", type=int, required=True, help="largest size to tabulate")
@click.option("--format", "fmt", type=click.Choice(["json", "csv", "pretty"]),
              default="csv", show_default=True)
@click.option("--cap-override", type=int, default=None,
              help="raise the size cap (default 12)")
def dims(n_max, fmt, cap_override):
    """Standard-module dimension table for sizes 0..n-max."""
    cap = cap_override if cap_override is not None else 12
    if not 0 <= n_max <= cap:
        raise click.UsageError("--n-max must be between 0 and %d" % cap)
    rows = [[dim_standard(n, k) for k in range(n + 1)] for n in range(n_max + 1)]
    totals = []
    failed = False
    for n, row in enumerate(rows):
        ssq = sum(v * v for v in row)
        mot = _motzkin(2 * n)
        totals.append({"n": n, "sum_squares": ssq, "motzkin": mot})
        if ssq != mot:
            failed = True
    _emit(fmt, rows, "dimensions of the standard modules", {"totals": totals}
          if fmt != "pretty" else
          {"totals": " ".join("M_%d=%d" % (2 * t["n"], t["motzkin"]) for t in totals)})
    if failed:
        click.echo("sum-of-squares / Motzkin mismatch", err=True)
        sys.exit(1)


@main.command()
@click.option("--n-max", type=int, required=True)
@click.option("--root-of-unity", "m", type=int, required=True,
              help="order m >= 3 of the root of unity")
@click.option("--format", "fmt", type=click.Choice(["json", "csv", "pretty"]),
              default="csv", show_default=True)
@click.option("--nullity-n-max", type=int, default=7, show_default=True,
              help="largest size for the Gram-nullity cross-check")
def irr(n_max, m, fmt, nullity_n_max):
    """Irreducible dimension table, cross-checked three independent ways."""
    mode = _mode_from_flags(False, m)
    ell = mode.ell
    table = _cached_irr_table(n_max, ell)
    rows = [list(table[n]) for n in range(n_max + 1)]
    mismatches = []
    for n in range(n_max + 1):
        for k in range(n + 1):
            by_formula = dim_irreducible_formula(n, k, ell)
            if by_formula != rows[n][k]:
                mismatches.append({"n": n, "k": k, "recurrence": rows[n][k],
                                   "formula": by_formula})
            if n <= nullity_n_max:
                by_nullity = dim_irreducible(n, k, mode)
                if by_nullity != rows[n][k]:
                    mismatches.append({"n": n, "k": k, "recurrence": rows[n][k],
                                       "nullity": by_nullity})
    _emit(fmt, rows, "dimensions of the irreducibles (m=%d)" % m,
          {"mismatches": mismatches} if fmt != "pretty" else
          {"mismatches": len(mismatches)})
    if mismatches:
        click.echo("cross-check mismatch: %s" % mismatches, err=True)
        sys.exit(1)


@main.command()
@click.option("--n", type=int, required=True)
@click.option("--k", type=int, required=True)
@click.option("--generic", is_flag=True, default=False)
@click.option("--root-of-unity", "m", type=int, default=None)
@click.option("--format", "fmt", type=click.Choice(["json", "csv", "pretty"]),
              default="pretty", show_default=True)
@click.option("--cap-override", type=int, default=None,
              help="raise the symbolic-determinant size cap (default 5)")
def gram(n, k, generic, m, fmt, cap_override):
    """Gram matrix, determinants and radical of one standard module."""
    mode = _mode_from_flags(generic, m)
    if not 0 <= k <= n:
        raise click.UsageError("need 0 <= k <= n")
    if n > 8:
        raise click.UsageError("matrix output capped at n = 8")
    det_cap = cap_override if cap_override is not None else DEFAULT_DET_CAP
    mat = gram_matrix(n, k, mode)
    blocks = gram_blocks(n, k)
    out = {"n": n, "k": k,
           "mode": {"kind": mode.kind, "m": mode.m, "ell": mode.ell},
           "dim": dim_standard(n, k),
           "blocks": [{"start": s, "end": e, "occupied": occ}
                      for s, e, occ in blocks],
           "matrix": [[str(v) for v in row] for row in mat]}
    if n <= det_cap:
        out["det_direct"] = str(gram_det_direct(n, k, mode))
        out["det_closed"] = str(gram_det_closed(n, k, mode))
    if mode.kind == "root":
        rad = radical_basis(n, k, mode)
        out["radical_dim"] = len(rad)
        out["radical_basis"] = [[str(v) for v in vec] for vec in rad]
    if fmt == "json":
        click.echo(json.dumps(out, indent=2, sort_keys=True))
    elif fmt == "csv":
        click.echo("".join(",".join(row) + "\n" for row in out["matrix"]),
                   nl=False)
    else:
        click.echo("module (n=%d, k=%d), dim %d, mode %s" %
                   (n, k, out["dim"], mode))
        for b in out["blocks"]:
            click.echo("block [%d:%d) occupied=%d" %
                       (b["start"], b["end"], b["occupied"]))
        for row in out["matrix"]:
            click.echo("  ".join(row))
        for key in ("det_direct", "det_closed", "radical_dim"):
            if key in out:
                click.echo("%s: %s" % (key, out[key]))


def _suite_algebra(rng):
    checks = []
    for n in range(1, 4):
        diags = enumerate_diagrams(n)
        checks.append(("diagram_count_n%d" % n, len(diags) == _motzkin(2 * n)))
        e = identity(n)
        sample = rng.sample(diags, min(6, len(diags)))
        checks.append(("identity_n%d" % n, all(
            e * AlgebraElem.from_diagram(d) == AlgebraElem.from_diagram(d)
            for d in sample)))
        for trial in range(3):
            d1, d2, d3 = (rng.choice(diags) for _ in range(3))
            a, b, c = (AlgebraElem.from_diagram(d) for d in (d1, d2, d3))
            checks.append(("assoc_n%d_t%d" % (n, trial),
                           (a * b) * c == a * (b * c)))
            checks.append(("transpose_n%d_t%d" % (n, trial),
                           transpose(a * b) == transpose(b) * transpose(a)))
            _loops, prod = multiply_diagrams_raw(d1, d2)
            checks.append(("filtration_n%d_t%d" % (n, trial),
                           prod is None or crossing_count(prod)
                           <= min(crossing_count(d1), crossing_count(d2))))
    # parity: products of distinct parities vanish, equal parities persist
    n = 3
    diags = enumerate_diagrams(n)
    a = AlgebraElem(n, GENERIC, {d: GENERIC.one() for d in rng.sample(diags, 8)})
    b = AlgebraElem(n, GENERIC, {d: GENERIC.one() for d in rng.sample(diags, 8)})
    for i, x in enumerate(parity_split(a)):
        for j, y in enumerate(parity_split(b)):
            ev, od = parity_split(x * y)
            if i != j:
                checks.append(("parity_%d%d" % (i, j),
                               ev.is_zero() and od.is_zero()))
            else:
                checks.append(("parity_%d%d" % (i, j),
                               (od if i == 0 else ev).is_zero()))
    return checks


def _suite_modules(rng):
    checks = []
    g = json.loads(_load_golden("worked_examples.json"))
    ok = True
    for p in g["products"]:
        a = DiluteDiagram.from_json_dict(p["a"])
        b = DiluteDiagram.from_json_dict(p["b"])
        loops, d = multiply_diagrams_raw(a, b)
        if p["result"] is None:
            ok = ok and d is None
        else:
            ok = ok and d is not None and d.to_json_dict() == p["result"] \
                and loops == p["loops"]
    checks.append(("product_goldens", ok))
    ok = True
    for a in g["actions"]:
        d = DiluteDiagram.from_json_dict(a["diagram"])
        v = LinkState.from_text(a["state"])
        out = act_diagram(d, v, GENERIC)
        if a["result"] is None:
            ok = ok and out.is_zero()
        else:
            ok = ok and out.terms == {
                LinkState.from_text(a["result"]): beta() ** a["loops"]}
    checks.append(("action_goldens", ok))
    for n in range(1, 6):
        total = sum(len(enumerate_links(n, k)) for k in range(n + 1))
        checks.append(("basis_count_n%d" % n, total == sum(
            dim_standard(n, k) for k in range(n + 1))))
    # bottom-site maps compose to zero and are exact in the middle
    for n in range(2, 5):
        for k in range(1, n):
            image = set()
            for dc in (k - 1, k):
                for v in enumerate_links(n - 1, dc):
                    image.add(restriction_phi(v, k))
            kernel = {v for v in enumerate_links(n, k)
                      if restriction_psi(v) is None}
            checks.append(("exact_seq_n%d_k%d" % (n, k), image == kernel))
    for n in range(1, 4):
        for k in range(n + 1):
            bset = induced_basis(n, k)
            imgs = {phi_iso(i, u) for i, u in bset}
            checks.append(("induced_n%d_k%d" % (n, k),
                           len(bset) == dim_standard(n + 2, k)
                           and len(imgs) == len(bset)))
    return checks


def _suite_gram(rng):
    checks = []
    g = json.loads(_load_golden("worked_examples.json"))
    checks.append(("gram_goldens", all(
        gram_product(LinkState.from_text(e["x"]), LinkState.from_text(e["y"]))
        == LaurentPoly.parse(e["value"]) for e in g["gram"])))
    for n in range(1, 5):
        for k in range(n + 1):
            direct = gram_det_direct(n, k)
            closed = gram_det_closed(n, k)
            same = direct == closed or direct == -closed
            checks.append(("det_n%d_k%d" % (n, k), same))
    for m in (4, 6):
        mode = root_of_unity(m)
        for n in range(1, 6):
            for k in range(n + 1):
                checks.append(("nullity_n%d_k%d_m%d" % (n, k, m),
                               dim_standard(n, k) - gram_nullity(n, k, mode)
                               == dim_irr(n, k, mode.ell)))
    # invariance under the anti-involution: <x, u y> = <u^t x, y>
    n, k = 3, 1
    basis = enumerate_links(n, k)
    gens = all_generators(n)
    for trial in range(4):
        x, y = rng.choice(basis), rng.choice(basis)
        _lab, u = rng.choice(gens)
        lhs = sum((gram_product(x, z) * c for z, c in
                   act(u, y, quotient_k=k).terms.items()), GENERIC.zero())
        rhs = sum((gram_product(z, y) * c for z, c in
                   act(transpose(u), x, quotient_k=k).terms.items()),
                  GENERIC.zero())
        checks.append(("invariance_t%d" % trial, lhs == rhs))
    return checks


def _suite_central(rng):
    checks = []
    g = json.loads(_load_golden("central_small.json"))
    for key, n in (("F1", 1), ("F2", 2)):
        want = {DiluteDiagram.from_json_dict(t["diagram"]):
                LaurentPoly.parse(t["coeff"]) for t in g[key]["terms"]}
        checks.append(("golden_%s" % key, build_F(n).terms == want))
    for n in range(1, 4):
        checks.append(("central_n%d" % n, check_central(n)))
    for mode in (GENERIC, root_of_unity(6)):
        tag = "generic" if mode.kind == "generic" else "m%d" % mode.m
        for n in range(1, 4):
            for k in range(n + 1):
                checks.append(("eigen_n%d_k%d_%s" % (n, k, tag),
                               check_eigenvalue(n, k, mode)))
    return checks


def _suite_structure(rng):
    checks = []
    for m in (4, 6, 8):
        mode = root_of_unity(m)
        for n in range(1, 7):
            rep = structure_report(n, mode)
            checks.append(("report_n%d_m%d" % (n, m),
                           all(c["pass"] for c in rep["checks"])))
        for n in range(1, 7):
            rep = restriction_induction_report(n, mode.ell)
            checks.append(("res_ind_n%d_m%d" % (n, m), rep["all_pass"]))
        for n in range(1, 8):
            regular_decomposition(n, mode)  # raises on imbalance
        checks.append(("regular_m%d" % m, True))
    checks.append(("cellularity_n2", all(
        verify_cellularity(2, k) for k in range(3))))
    return checks


_SUITES = {
    "algebra": _suite_algebra,
    "modules": _suite_modules,
    "gram": _suite_gram,
    "central": _suite_central,
    "structure": _suite_structure,
}


@main.command()
@click.argument("suite", type=click.Choice(sorted(_SUITES) + ["all"]))
@click.option("--seed", type=int, default=0, show_default=True,
              help="seed for the randomized spot checks")
def verify(suite, seed):
    """Run the named invariant suite and print JSON verdicts."""
    names = sorted(_SUITES) if suite == "all" else [suite]
    verdicts = []
    for name in names:
        rng = random.Random(seed)
        for check, passed in _SUITES[name](rng):
            verdicts.append({"suite": name, "check": check,
                             "pass": bool(passed)})
    all_pass = all(v["pass"] for v in verdicts)
    click.echo(json.dumps({"seed": seed, "verdicts": verdicts,
                           "all_pass": all_pass}, indent=2, sort_keys=True))
    sys.exit(0 if all_pass else 1)


if __name__ == "__main__":
    main()
