"""
Link states and the standard modules built on them.

A link state on n sites assigns each site one of: a vacancy, a defect
(a loose string), or an endpoint of a non-crossing arc.  States with
exactly k defects form the basis of the k-th standard module; the algebra
acts by gluing a diagram on the left, with a factor beta per closed loop,
zero on any string/vacancy mismatch, and removal of strings that join two
defects.  In the standard-module action, resulting states with fewer than
k defects are dropped.
"""

from functools import lru_cache
from math import comb

from .ring import GENERIC, beta
from .diagram_core import DiluteDiagram, AlgebraElem, VACANT
from .tl_reference import dim_v


class LinkState:
    """An immutable link state; sites is a tuple over {'V','D', partner-int}."""

    __slots__ = ("n", "sites")

    def __init__(self, sites):
        sites = tuple(sites)
        n = len(sites)
        # validate arcs: ints point at each other and nest properly
        stack = []
        for i, s in enumerate(sites):
            if s == "V":
                continue
            if s == "D":
                assert not stack, "defect nested under an arc"
                continue
            assert isinstance(s, int) and sites[s] == i and s != i
            if s > i:
                stack.append(s)
            else:
                assert stack and stack[-1] == i, "arcs must not cross"
                stack.pop()
        assert not stack
        self.n = n
        self.sites = sites

    def defect_count(self):
        return sum(1 for s in self.sites if s == "D")

    def vacancy_positions(self):
        return tuple(i for i, s in enumerate(self.sites) if s == "V")

    def arcs(self):
        return [(i, s) for i, s in enumerate(self.sites) if isinstance(s, int) and s > i]

    def text(self):
        """String form, one character per site from the top: V, D, ( or )."""
        out = []
        for i, s in enumerate(self.sites):
            if s in ("V", "D"):
                out.append(s)
            else:
                out.append("(" if s > i else ")")
        return "".join(out)

    @staticmethod
    def from_text(text):
        sites = []
        stack = []
        for i, ch in enumerate(text):
            if ch in ("V", "D"):
                sites.append(ch)
            elif ch == "(":
                sites.append(None)
                stack.append(i)
            elif ch == ")":
                j = stack.pop()
                sites[j] = i
                sites.append(j)
            else:
                raise ValueError("bad link character %r" % ch)
        assert not stack, "unbalanced arcs"
        return LinkState(sites)

    def sort_key(self):
        vac = self.vacancy_positions()
        return (len(vac), vac, self.text())

    def __eq__(self, other):
        return isinstance(other, LinkState) and self.sites == other.sites

    def __hash__(self):
        return hash(self.sites)

    def __repr__(self):
        return "LinkState(%s)" % self.text()


class LinComb:
    """A linear combination of same-size link states with ring coefficients."""

    __slots__ = ("n", "mode", "terms")

    def __init__(self, n, mode=GENERIC, terms=None):
        self.n = n
        self.mode = mode
        self.terms = {}
        if terms:
            for v, c in terms.items():
                if c:
                    assert v.n == n
                    self.terms[v] = c

    @staticmethod
    def from_state(v, mode=GENERIC, coeff=None):
        if coeff is None:
            coeff = mode.one()
        return LinComb(v.n, mode, {v: coeff})

    def is_zero(self):
        return not self.terms

    def __add__(self, other):
        assert self.n == other.n and self.mode == other.mode
        t = dict(self.terms)
        for v, c in other.terms.items():
            w = t.get(v, self.mode.zero()) + c
            if w:
                t[v] = w
            else:
                t.pop(v, None)
        return LinComb(self.n, self.mode, t)

    def __sub__(self, other):
        return self + other.scale(self.mode.const(-1))

    def scale(self, c):
        return LinComb(self.n, self.mode, {v: x * c for v, x in self.terms.items()})

    def __eq__(self, other):
        return (isinstance(other, LinComb) and self.n == other.n
                and self.mode == other.mode and self.terms == other.terms)

    def __repr__(self):
        if not self.terms:
            return "LinComb(0, n=%d)" % self.n
        items = sorted(self.terms.items(), key=lambda t: t[0].sort_key())
        return " + ".join("(%s)*%s" % (c, v.text()) for v, c in items)


@lru_cache(maxsize=None)
def enumerate_links(n, k):
    """
    All link states on n sites with exactly k defects, ordered by vacancy
    count ascending, then vacancy positions, then site pattern.
    """
    if not 0 <= k <= n:
        return ()
    out = []

    def build(sites, open_stack, defects_left):
        i = len(sites)
        if i == n:
            if not open_stack and defects_left == 0:
                out.append(LinkState(sites))
            return
        remaining = n - i
        if len(open_stack) + defects_left > remaining:
            return
        build(sites + ["V"], open_stack, defects_left)
        if defects_left and not open_stack:
            # a defect below an open arc would cross it when straightened
            build(sites + ["D"], open_stack, defects_left - 1)
        build(sites + [None], open_stack + [i], defects_left)
        if open_stack:
            j = open_stack[-1]
            closed = sites + [j]
            closed[j] = i
            build(closed, open_stack[:-1], defects_left)

    build([], [], k)
    out.sort(key=LinkState.sort_key)
    return tuple(out)


@lru_cache(maxsize=None)
def _trinomial(n, k):
    """Coefficient of x^k in (x + 1 + 1/x)^n."""
    if abs(k) > n:
        return 0
    if n == 0:
        return 1
    return _trinomial(n - 1, k - 1) + _trinomial(n - 1, k) + _trinomial(n - 1, k + 1)


def dim_standard(n, k):
    """
    Dimension of the k-defect standard module on n sites, computed both as
    a binomial sum over vacancy counts and by a trinomial-coefficient
    difference; the two must agree.
    """
    if not 0 <= k <= n:
        return 0
    by_blocks = sum(comb(n, k + 2 * p) * dim_v(k + 2 * p, k)
                    for p in range((n - k) // 2 + 1))
    by_trinomial = _trinomial(n, k) - _trinomial(n, k + 2)
    assert by_blocks == by_trinomial, (n, k, by_blocks, by_trinomial)
    return by_blocks


def act_diagram(d, v, mode=GENERIC, quotient_k=None):
    """
    Act with a single diagram on a single link state.  Returns a LinComb.
    Strings joining two defects are removed; with quotient_k set, output
    states with fewer than quotient_k defects are dropped.
    """
    n = d.n
    assert v.n == n
    # interface: diagram right site s (slot 2n - s) meets link site s (index s-1)
    for s in range(1, n + 1):
        if (d.pairing[2 * n - s] is VACANT) != (v.sites[s - 1] == "V"):
            return LinComb(n, mode)

    # nodes: ('d', slot) in the diagram, ('v', site-index) in the link state
    def neighbors(node):
        kind, idx = node
        out = []
        if kind == "d":
            p = d.pairing[idx]
            if p is not VACANT:
                out.append(("d", p))
            if idx >= n:
                out.append(("v", 2 * n - 1 - idx))
        else:
            entry = v.sites[idx]
            if isinstance(entry, int):
                out.append(("v", entry))
            out.append(("d", 2 * n - 1 - idx))
        return out

    # endpoints: diagram left slots (occupied) and link defects
    left_nodes = [("d", s) for s in range(n) if d.pairing[s] is not VACANT]
    defect_nodes = [("v", i) for i, s in enumerate(v.sites) if s == "D"]
    visited = set()
    new_sites = [None] * n
    for s in range(n):
        if d.pairing[s] is VACANT:
            new_sites[s] = "V"
    loops = 0
    for start in left_nodes + defect_nodes:
        if start in visited:
            continue
        visited.add(start)
        prev, cur = None, start
        while True:
            nxt = [x for x in neighbors(cur) if x != prev]
            if not nxt:
                break  # ended at a defect site of the link state
            prev, cur = cur, nxt[0]
            visited.add(cur)
            if cur[0] == "d" and cur[1] < n:
                break  # reached the new boundary
        end = cur
        a_out = start[0] == "d" and start[1] < n
        b_out = end[0] == "d" and end[1] < n
        if a_out and b_out:
            i, j = start[1], end[1]
            new_sites[i], new_sites[j] = j, i
        elif a_out or b_out:
            new_sites[start[1] if a_out else end[1]] = "D"
        # else: the string joins two defects of the state and is removed
    # untouched interior components are closed loops
    interior = [("d", s) for s in range(n, 2 * n) if d.pairing[s] is not VACANT]
    for start in interior:
        if start in visited:
            continue
        loops += 1
        prev, cur = None, start
        visited.add(start)
        while cur != start or prev is None:
            nxt = [x for x in neighbors(cur) if x != prev]
            prev, cur = cur, nxt[0]
            visited.add(cur)
    out_state = LinkState(new_sites)
    if quotient_k is not None and out_state.defect_count() < quotient_k:
        return LinComb(n, mode)
    return LinComb(n, mode, {out_state: beta(mode) ** loops})


def act(u, v, quotient_k=None):
    """Bilinear extension of the diagram action to algebra elements."""
    if isinstance(v, LinkState):
        v = LinComb.from_state(v, u.mode)
    assert u.n == v.n and u.mode == v.mode
    out = LinComb(u.n, u.mode)
    for d, cd in u.terms.items():
        for s, cs in v.terms.items():
            out = out + act_diagram(d, s, u.mode, quotient_k).scale(cd * cs)
    return out


def diagram_from_links(x, y):
    """
    The diagram |x y~| whose left half is x and whose right half is the
    mirror of y; the defects of the two halves are joined in order into
    crossing strings.  Both states must have the same defect count.
    """
    n = x.n
    assert y.n == n and x.defect_count() == y.defect_count()
    pairs = []
    for i, j in x.arcs():
        pairs.append((i, j))
    for i, j in y.arcs():
        pairs.append((2 * n - 1 - i, 2 * n - 1 - j))
    xd = [i for i, s in enumerate(x.sites) if s == "D"]
    yd = [2 * n - 1 - i for i, s in enumerate(y.sites) if s == "D"]
    for a, b in zip(xd, yd):
        pairs.append((a, b))
    return DiluteDiagram.from_pairs(n, pairs)


def links_of_diagram(d):
    """
    Split a diagram into its (left, right) link states: same-side strings
    stay arcs, crossing strings become defects, vacancies stay vacancies.
    """
    n = d.n
    left = [None] * n
    right = [None] * n
    for i, p in enumerate(d.pairing):
        site = i if i < n else 2 * n - 1 - i
        half = left if i < n else right
        if p is VACANT:
            half[site] = "V"
        elif (i < n) != (p < n):
            half[site] = "D"
        else:
            half[site] = p if i < n else 2 * n - 1 - p
    return LinkState(left), LinkState(right)


def enumerate_vd_states(n, k):
    """All states made of k defects and n-k vacancies only."""
    return tuple(v for v in enumerate_links(n, k) if not v.arcs())


def theta(i, v):
    """
    Append-a-site surgery: +1 adds a defect at the bottom, 0 adds a
    vacancy, -1 closes the lowest defect into an arc ending at the new
    bottom site (or gives None when there is no defect).
    """
    assert i in (-1, 0, 1)
    if i == 1:
        return LinkState(v.sites + ("D",))
    if i == 0:
        return LinkState(v.sites + ("V",))
    defects = [j for j, s in enumerate(v.sites) if s == "D"]
    if not defects:
        return None
    low = defects[-1]
    sites = list(v.sites) + [low]
    sites[low] = v.n
    return LinkState(sites)


def restriction_phi(v, k):
    """
    Bottom-extension map into the k-defect module: append a defect when v
    has k-1 defects, a vacancy when it has k.
    """
    dc = v.defect_count()
    if dc == k - 1:
        return theta(1, v)
    if dc == k:
        return theta(0, v)
    raise ValueError("state must have k or k-1 defects")


def restriction_psi(v):
    """
    Remove the bottom site: None (zero) if it carries a defect or vacancy;
    if it closes an arc, the arc's opening site becomes a defect.
    """
    last = v.sites[-1]
    if last in ("V", "D"):
        return None
    assert isinstance(last, int) and last < v.n - 1
    sites = list(v.sites[:-1])
    sites[last] = "D"
    return LinkState(sites)


def base_vd_state(n, k):
    """The defect/vacancy state with vacancies on top and defects below."""
    return LinkState(("V",) * (n - k) + ("D",) * k)


def induced_basis(n, k):
    """
    Index set of the induced-module basis: pairs (i, u) with i in
    {1, 0, -1} and u a state on n+1 sites with k+i defects.  Its size is
    the dimension of the k-defect module on n+2 sites.
    """
    out = []
    for i in (1, 0, -1):
        for u in enumerate_links(n + 1, k + i):
            out.append((i, u))
    return out


def phi_iso(i, u):
    """The isomorphism sending a basis index (i, u) to the (n+2)-site state."""
    return theta(-i, u)
