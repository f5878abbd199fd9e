"""
Dilute planar diagrams and their algebra.

A diagram has n points on each vertical side of a rectangle.  Points are
either vacant or joined pairwise by non-intersecting strings.  Boundary
slots use a single circular index space: 0..n-1 runs down the left side
(site 1 at the top) and n..2n-1 runs up the right side, so the right-side
site s (1-based from the top) is slot 2n-s.  Non-crossing is then simply
non-interleaving of partner pairs in circular order.

The product glues two diagrams side by side; each closed floating loop
contributes a factor beta, and any string that meets a vacancy kills the
product.
"""

from .ring import GENERIC, beta


VACANT = None


class DiluteDiagram:
    """An immutable dilute diagram: a pairing array over 2n boundary slots."""

    __slots__ = ("n", "pairing")

    def __init__(self, n, pairing):
        pairing = tuple(pairing)
        assert len(pairing) == 2 * n
        for i, p in enumerate(pairing):
            if p is not VACANT:
                assert p != i and pairing[p] == i, "pairing must be an involution"
        assert _noncrossing(pairing), "strings must not cross"
        self.n = n
        self.pairing = pairing

    @staticmethod
    def from_pairs(n, pairs):
        pairing = [VACANT] * (2 * n)
        for a, b in pairs:
            pairing[a] = b
            pairing[b] = a
        return DiluteDiagram(n, pairing)

    def pairs(self):
        """Sorted list of partner pairs (a, b) with a < b."""
        return sorted((i, p) for i, p in enumerate(self.pairing) if p is not VACANT and i < p)

    def vacant_slots(self):
        return [i for i, p in enumerate(self.pairing) if p is VACANT]

    def left_vacancy_count(self):
        return sum(1 for i in range(self.n) if self.pairing[i] is VACANT)

    def sort_key(self):
        return tuple(-1 if p is VACANT else p for p in self.pairing)

    def __eq__(self, other):
        return isinstance(other, DiluteDiagram) and self.pairing == other.pairing

    def __hash__(self):
        return hash(self.pairing)

    def __repr__(self):
        return "DiluteDiagram(n=%d, pairs=%s, vacant=%s)" % (
            self.n, self.pairs(), self.vacant_slots())

    def to_json_dict(self):
        return {"n": self.n, "pairs": [list(p) for p in self.pairs()],
                "vacant": self.vacant_slots()}

    @staticmethod
    def from_json_dict(d):
        return DiluteDiagram.from_pairs(d["n"], d["pairs"])


def _noncrossing(pairing):
    stack = []
    for i, p in enumerate(pairing):
        if p is VACANT:
            continue
        if p > i:
            stack.append(p)
        else:
            if not stack or stack[-1] != i:
                return False
            stack.pop()
    return not stack


def transpose_diagram(d):
    """Mirror a diagram left-right (slot j maps to 2n-1-j)."""
    size = 2 * d.n
    new = [VACANT] * size
    for i, p in enumerate(d.pairing):
        if p is not VACANT:
            new[size - 1 - i] = size - 1 - p
    return DiluteDiagram(d.n, new)


def crossing_count(d):
    """Number of strings with one endpoint on each side."""
    return sum(1 for i, p in enumerate(d.pairing) if p is not VACANT and i < d.n <= p)


def multiply_diagrams_raw(a, b):
    """
    Concatenate two diagrams (a on the left).  Returns (loops, diagram) with
    the number of closed floating loops, or (0, None) when the product is
    zero because a string meets a vacancy at the glued boundary.
    """
    assert a.n == b.n, "diagram sizes differ"
    n = a.n
    # interface site s (1..n): a's slot 2n - s meets b's slot s - 1
    for s in range(1, n + 1):
        if (a.pairing[2 * n - s] is VACANT) != (b.pairing[s - 1] is VACANT):
            return 0, None

    # Walk strings through the glued structure.  Nodes are ('a', slot) and
    # ('b', slot); each interior node has degree two (its own pairing edge
    # plus the interface identification), outer nodes degree one.
    def neighbors(node):
        side, slot = node
        d = a if side == "a" else b
        out = []
        p = d.pairing[slot]
        out.append((side, p))
        if side == "a" and slot >= n:
            out.append(("b", 2 * n - 1 - slot))
        if side == "b" and slot < n:
            out.append(("a", 2 * n - 1 - slot))
        return out

    outer = [("a", s) for s in range(n) if a.pairing[s] is not VACANT]
    outer += [("b", s) for s in range(n, 2 * n) if b.pairing[s] is not VACANT]
    visited = set()
    new_pairs = []
    for start in outer:
        if start in visited:
            continue
        visited.add(start)
        prev, cur = None, start
        while True:
            nxt = [x for x in neighbors(cur) if x != prev]
            # at the very first step both neighbors are unvisited; pick the
            # pairing edge first, then follow degree-2 interior nodes
            prev, cur = cur, nxt[0]
            visited.add(cur)
            side, slot = cur
            if (side == "a" and slot < n) or (side == "b" and slot >= n):
                break  # reached an outer point
        new_pairs.append((start[1], cur[1]))

    # remaining unvisited interior nodes form closed loops
    interior = [("a", s) for s in range(n, 2 * n) if a.pairing[s] is not VACANT]
    interior += [("b", s) for s in range(n) if b.pairing[s] is not VACANT]
    loops = 0
    for start in interior:
        if start in visited:
            continue
        loops += 1
        prev, cur = None, start
        visited.add(start)
        while True:
            nxt = [x for x in neighbors(cur) if x != prev]
            prev, cur = cur, nxt[0]
            if cur == start:
                break
            visited.add(cur)
    out = DiluteDiagram.from_pairs(n, new_pairs)
    return loops, out


class AlgebraElem:
    """A finite linear combination of same-size diagrams with ring coefficients."""

    __slots__ = ("n", "mode", "terms")

    def __init__(self, n, mode=GENERIC, terms=None):
        self.n = n
        self.mode = mode
        self.terms = {}
        if terms:
            for d, c in terms.items():
                if c:
                    assert d.n == n
                    self.terms[d] = c

    @staticmethod
    def from_diagram(d, mode=GENERIC, coeff=None):
        if coeff is None:
            coeff = mode.one()
        return AlgebraElem(d.n, mode, {d: coeff})

    def is_zero(self):
        return not self.terms

    def __add__(self, other):
        assert self.n == other.n and self.mode == other.mode
        t = dict(self.terms)
        for d, c in other.terms.items():
            w = t.get(d, self.mode.zero()) + c
            if w:
                t[d] = w
            else:
                t.pop(d, None)
        return AlgebraElem(self.n, self.mode, t)

    def __sub__(self, other):
        return self + other.scale(self.mode.const(-1))

    def scale(self, c):
        return AlgebraElem(self.n, self.mode, {d: v * c for d, v in self.terms.items()})

    def __mul__(self, other):
        assert self.n == other.n and self.mode == other.mode
        bet = beta(self.mode)
        acc = {}
        for d1, c1 in self.terms.items():
            for d2, c2 in other.terms.items():
                loops, d = multiply_diagrams_raw(d1, d2)
                if d is None:
                    continue
                c = c1 * c2 * bet ** loops
                w = acc.get(d, self.mode.zero()) + c
                if w:
                    acc[d] = w
                else:
                    acc.pop(d, None)
        return AlgebraElem(self.n, self.mode, acc)

    def __eq__(self, other):
        return (isinstance(other, AlgebraElem) and self.n == other.n
                and self.mode == other.mode and self.terms == other.terms)

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def __repr__(self):
        if not self.terms:
            return "AlgebraElem(0, n=%d)" % self.n
        items = sorted(self.terms.items(), key=lambda t: t[0].sort_key())
        return " + ".join("(%s)*%r" % (c, d) for d, c in items)


def multiply_diagrams(a, b, mode=GENERIC):
    """Product of two diagrams as an algebra element (beta per closed loop)."""
    loops, d = multiply_diagrams_raw(a, b)
    if d is None:
        return AlgebraElem(a.n, mode)
    return AlgebraElem(a.n, mode, {d: beta(mode) ** loops})


def identity(n, mode=GENERIC):
    """The unit: the sum of 2^n diagrams (string or vacancy pair per site)."""
    terms = {}
    for mask in range(1 << n):
        pairs = [(s, 2 * n - 1 - s) for s in range(n) if mask >> s & 1]
        terms[DiluteDiagram.from_pairs(n, pairs)] = mode.one()
    return AlgebraElem(n, mode, terms)


def _dashed_sum(n, fixed_pairs, fixed_vacant_sites, dashed_sites, mode):
    """
    Element with the given fixed pairs/vacancies, summing each dashed site
    over (through-string + vacancy pair).
    """
    terms = {}
    dashed = sorted(dashed_sites)
    for mask in range(1 << len(dashed)):
        pairs = list(fixed_pairs)
        for idx, s in enumerate(dashed):
            if mask >> idx & 1:
                pairs.append((s - 1, 2 * n - s))
        terms[DiluteDiagram.from_pairs(n, pairs)] = mode.one()
    return AlgebraElem(n, mode, terms)


def generator(name, i, n, mode=GENERIC):
    """
    The named generator as a combination of diagrams.  Site indices are
    1-based; e and x exist for 1 <= i <= n, the four arc/step generators
    for 1 <= i <= n-1.  Dashed sites expand to (string + vacancy pair).
    """
    def lslot(s):
        return s - 1

    def rslot(s):
        return 2 * n - s

    if name in ("e", "x"):
        if not 1 <= i <= n:
            raise IndexError("site index out of range")
        others = [s for s in range(1, n + 1) if s != i]
        if name == "e":
            return _dashed_sum(n, [(lslot(i), rslot(i))], [], others, mode)
        return _dashed_sum(n, [], [i], others, mode)

    if not 1 <= i <= n - 1:
        raise IndexError("site index out of range")
    others = [s for s in range(1, n + 1) if s not in (i, i + 1)]
    if name == "a":
        # string from left site i+1 to right site i; vacancies left i, right i+1
        return _dashed_sum(n, [(lslot(i + 1), rslot(i))], [i, i + 1], others, mode)
    if name == "at":
        return _dashed_sum(n, [(lslot(i), rslot(i + 1))], [i, i + 1], others, mode)
    if name == "bt":
        # arc on the left side joining sites i and i+1; right side vacant there
        return _dashed_sum(n, [(lslot(i), lslot(i + 1))], [i, i + 1], others, mode)
    if name == "b":
        return _dashed_sum(n, [(rslot(i), rslot(i + 1))], [i, i + 1], others, mode)
    raise ValueError("unknown generator %r" % name)


def all_generators(n, mode=GENERIC):
    """All generator elements of the algebra, as (label, element) pairs."""
    out = []
    for i in range(1, n + 1):
        out.append(("e%d" % i, generator("e", i, n, mode)))
        out.append(("x%d" % i, generator("x", i, n, mode)))
    for i in range(1, n):
        for name in ("a", "at", "b", "bt"):
            out.append(("%s%d" % (name, i), generator(name, i, n, mode)))
    return out


def transpose(a):
    """Mirror every diagram left-right; an anti-involution of the algebra."""
    return AlgebraElem(a.n, a.mode, {transpose_diagram(d): c for d, c in a.terms.items()})


def parity_split(a):
    """Split into (even, odd) parts by the parity of each side's vacancy count."""
    even, odd = {}, {}
    for d, c in a.terms.items():
        (even if d.left_vacancy_count() % 2 == 0 else odd)[d] = c
    return AlgebraElem(a.n, a.mode, even), AlgebraElem(a.n, a.mode, odd)


def reduce_mod_ideal(a, k):
    """Keep only the terms with at least k crossing strings."""
    return AlgebraElem(a.n, a.mode,
                       {d: c for d, c in a.terms.items() if crossing_count(d) >= k})


def projector_pi(z, mode=GENERIC):
    """
    The idempotent |z z~| for a link state z made of defects and vacancies
    only: through-strings at the defect sites, vacancy pairs elsewhere.
    """
    n = z.n
    pairs = []
    for s in range(1, n + 1):
        entry = z.sites[s - 1]
        if entry == "D":
            pairs.append((s - 1, 2 * n - s))
        elif entry != "V":
            raise ValueError("projector requires a defect/vacancy-only state")
    d = DiluteDiagram.from_pairs(n, pairs)
    return AlgebraElem.from_diagram(d, mode)


_ENUM_CACHE = {}


def _noncrossing_matchings(points):
    """All non-crossing partial matchings of the given ordered points."""
    points = tuple(points)
    if points in _ENUM_CACHE:
        return _ENUM_CACHE[points]
    if not points:
        return [[]]
    first, rest = points[0], points[1:]
    out = [list(m) for m in _noncrossing_matchings(rest)]
    for j, p in enumerate(rest):
        inside = rest[:j]
        outside = rest[j + 1:]
        for m1 in _noncrossing_matchings(inside):
            for m2 in _noncrossing_matchings(outside):
                out.append([(first, p)] + list(m1) + list(m2))
    _ENUM_CACHE[points] = out
    return out


DEFAULT_ENUM_CAP = 6


def enumerate_diagrams(n, cap=DEFAULT_ENUM_CAP):
    """
    All dilute diagrams of a given size, in a deterministic order.  The
    count is the Motzkin number of 2n.  Guarded by a cap because the count
    grows quickly.
    """
    if n > cap:
        raise ResourceWarning("diagram enumeration capped at n=%d (asked n=%d)" % (cap, n))
    diagrams = [DiluteDiagram.from_pairs(n, m)
                for m in _noncrossing_matchings(range(2 * n))]
    diagrams.sort(key=DiluteDiagram.sort_key)
    return diagrams
