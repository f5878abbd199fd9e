"""
Exact coefficient arithmetic.

Two coefficient rings are provided: Laurent polynomials in q with rational
coefficients (the generic ring), and the cyclotomic field Q[q]/(Phi_m(q))
for q a primitive m-th root of unity.  All arithmetic is exact; no floating
point is used anywhere.
"""

from fractions import Fraction
from math import gcd


class LaurentPoly:
    """
    A Laurent polynomial in q over the rationals, stored as a sparse map
    from integer exponents to nonzero Fractions.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        c = {}
        if coeffs:
            for e, v in coeffs.items():
                v = Fraction(v)
                if v != 0:
                    c[int(e)] = v
        self.coeffs = c

    @staticmethod
    def zero():
        return LaurentPoly()

    @staticmethod
    def one():
        return LaurentPoly({0: 1})

    @staticmethod
    def q(exp=1):
        return LaurentPoly({exp: 1})

    @staticmethod
    def const(v):
        return LaurentPoly({0: Fraction(v)})

    def is_zero(self):
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly.const(other)
        c = dict(self.coeffs)
        for e, v in other.coeffs.items():
            w = c.get(e, 0) + v
            if w == 0:
                c.pop(e, None)
            else:
                c[e] = w
        out = LaurentPoly()
        out.coeffs = c
        return out

    __radd__ = __add__

    def __neg__(self):
        out = LaurentPoly()
        out.coeffs = {e: -v for e, v in self.coeffs.items()}
        return out

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly.const(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly.const(other)
        c = {}
        for e1, v1 in self.coeffs.items():
            for e2, v2 in other.coeffs.items():
                e = e1 + e2
                w = c.get(e, 0) + v1 * v2
                if w == 0:
                    c.pop(e, None)
                else:
                    c[e] = w
        out = LaurentPoly()
        out.coeffs = c
        return out

    __rmul__ = __mul__

    def __pow__(self, n):
        assert n >= 0
        out = LaurentPoly.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly.const(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def min_exp(self):
        return min(self.coeffs) if self.coeffs else 0

    def max_exp(self):
        return max(self.coeffs) if self.coeffs else 0

    def leading_coeff(self):
        """Coefficient of the highest power of q (0 for the zero element)."""
        return self.coeffs[max(self.coeffs)] if self.coeffs else Fraction(0)

    def exact_div(self, other):
        """
        Divide by another Laurent polynomial; the quotient must be exact
        (zero remainder) or a ValueError is raised.
        """
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly.const(other)
        if other.is_zero():
            raise ZeroDivisionError("division by zero Laurent polynomial")
        if self.is_zero():
            return LaurentPoly.zero()
        # shift both to ordinary polynomials, divide, shift back
        sa, sb = self.min_exp(), other.min_exp()
        a = _to_dense(self)
        b = _to_dense(other)
        q, r = _poly_divmod(a, b)
        if any(r):
            raise ValueError("non-exact Laurent polynomial division")
        out = LaurentPoly({i + sa - sb: v for i, v in enumerate(q)})
        return out

    def subs_fraction(self, value):
        """Evaluate at a nonzero rational q = value; returns a Fraction."""
        value = Fraction(value)
        assert value != 0
        total = Fraction(0)
        for e, v in self.coeffs.items():
            total += v * value ** e
        return total

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for e in sorted(self.coeffs):
            parts.append("%s*q^%d" % (self.coeffs[e], e))
        return " + ".join(parts)

    __repr__ = __str__

    @staticmethod
    def parse(text):
        """Parse the sparse "c*q^e" sum format produced by str()."""
        text = text.strip()
        if text == "0":
            return LaurentPoly.zero()
        coeffs = {}
        for part in text.split(" + "):
            cstr, estr = part.split("*q^")
            e = int(estr)
            coeffs[e] = coeffs.get(e, 0) + Fraction(cstr)
        return LaurentPoly(coeffs)


def _to_dense(p):
    """Dense coefficient list of p * q^(-min_exp), constant term first."""
    s = p.min_exp()
    out = [Fraction(0)] * (p.max_exp() - s + 1)
    for e, v in p.coeffs.items():
        out[e - s] = v
    return out


def _poly_divmod(a, b):
    """Long division of dense rational polynomial a by b (constant first)."""
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    b = list(b)
    while b and b[-1] == 0:
        b.pop()
    assert b, "division by zero polynomial"
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    while len(a) >= len(b):
        f = a[-1] / b[-1]
        d = len(a) - len(b)
        q[d] = f
        for i, bc in enumerate(b):
            a[i + d] -= f * bc
        while a and a[-1] == 0:
            a.pop()
    return q, a


def cyclotomic_poly(m):
    """
    The m-th cyclotomic polynomial as a dense list of Fractions (constant
    term first), built by dividing x^m - 1 by the cyclotomic polynomials of
    all proper divisors of m.
    """
    assert m >= 1
    num = [Fraction(0)] * (m + 1)
    num[0], num[m] = Fraction(-1), Fraction(1)
    for d in range(1, m):
        if m % d == 0:
            q, r = _poly_divmod(num, cyclotomic_poly(d))
            assert not any(r)
            num = q
    return num


def _poly_mod(a, phi):
    """Reduce dense polynomial a modulo phi (monic)."""
    a = list(a)
    n = len(phi) - 1
    while len(a) > n:
        f = a[-1]
        d = len(a) - 1 - n
        if f != 0:
            for i in range(n + 1):
                a[i + d] -= f * phi[i]
        a.pop()
    while len(a) < n:
        a.append(Fraction(0))
    return a


def _poly_ext_gcd(a, b):
    """Extended gcd for dense rational polynomials: g, s, t with g = s*a + t*b."""
    r0, r1 = list(a), list(b)
    s0, s1 = [Fraction(1)], [Fraction(0)]
    t0, t1 = [Fraction(0)], [Fraction(1)]

    def trim(p):
        p = list(p)
        while p and p[-1] == 0:
            p.pop()
        return p

    def sub_mul(p, q, f):
        # p - f*q as dense lists
        out = list(p) + [Fraction(0)] * max(0, len(q) + len(f) - 1 - len(p))
        for i, qc in enumerate(q):
            for j, fc in enumerate(f):
                out[i + j] -= qc * fc
        return trim(out)

    r0, r1 = trim(r0), trim(r1)
    while r1:
        q, r = _poly_divmod(r0, r1)
        r0, r1 = r1, trim(r)
        s0, s1 = s1, sub_mul(s0, s1, q)
        t0, t1 = t1, sub_mul(t0, t1, q)
    return r0, s0, t0


class CycloElem:
    """
    An element of Q[q]/(Phi_m(q)), the field generated by a primitive m-th
    root of unity.  `rep` is a dense coefficient tuple of length deg(Phi_m).
    """

    __slots__ = ("m", "rep")
    _phi_cache = {}

    def __init__(self, m, rep):
        assert m >= 3, "m in {1,2} is rejected; q = +-1 is not a supported root mode"
        self.m = m
        phi = CycloElem.phi(m)
        dense = _poly_mod(list(rep), phi)
        self.rep = tuple(Fraction(v) for v in dense)

    @staticmethod
    def phi(m):
        if m not in CycloElem._phi_cache:
            CycloElem._phi_cache[m] = cyclotomic_poly(m)
        return CycloElem._phi_cache[m]

    @staticmethod
    def zero(m):
        return CycloElem(m, [])

    @staticmethod
    def one(m):
        return CycloElem(m, [Fraction(1)])

    @staticmethod
    def q(m, exp=1):
        exp %= m
        return CycloElem(m, [Fraction(0)] * exp + [Fraction(1)])

    @staticmethod
    def const(m, v):
        return CycloElem(m, [Fraction(v)])

    @staticmethod
    def from_laurent(m, p):
        """Specialize a Laurent polynomial at the primitive m-th root."""
        out = CycloElem.zero(m)
        for e, v in p.coeffs.items():
            out = out + CycloElem.q(m, e) * CycloElem.const(m, v)
        return out

    def is_zero(self):
        return all(v == 0 for v in self.rep)

    def __bool__(self):
        return not self.is_zero()

    def _coerce(self, other):
        if isinstance(other, (int, Fraction)):
            return CycloElem.const(self.m, other)
        assert isinstance(other, CycloElem) and other.m == self.m
        return other

    def __add__(self, other):
        other = self._coerce(other)
        return CycloElem(self.m, [a + b for a, b in zip(self.rep, other.rep)])

    __radd__ = __add__

    def __neg__(self):
        return CycloElem(self.m, [-a for a in self.rep])

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        n = len(self.rep)
        prod = [Fraction(0)] * (2 * n - 1 if n else 1)
        for i, a in enumerate(self.rep):
            if a == 0:
                continue
            for j, b in enumerate(other.rep):
                if b:
                    prod[i + j] += a * b
        return CycloElem(self.m, prod)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            return self.inv() ** (-n)
        out = CycloElem.one(self.m)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def inv(self):
        """Multiplicative inverse; the quotient ring is a field."""
        assert not self.is_zero(), "zero is not invertible"
        phi = CycloElem.phi(self.m)
        g, s, _ = _poly_ext_gcd(list(self.rep), phi)
        assert len(g) == 1 and g[0] != 0
        c = g[0]
        return CycloElem(self.m, [v / c for v in s])

    def __truediv__(self, other):
        return self * self._coerce(other).inv()

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = CycloElem.const(self.m, other)
        if not isinstance(other, CycloElem):
            return NotImplemented
        return self.m == other.m and self.rep == other.rep

    def __hash__(self):
        return hash((self.m, self.rep))

    def __str__(self):
        parts = ["%s*q^%d" % (v, e) for e, v in enumerate(self.rep) if v != 0]
        return " + ".join(parts) if parts else "0"

    __repr__ = __str__


def ell_of(m):
    """
    The smallest positive integer ell with q^(2*ell) = 1 for q a primitive
    m-th root of unity: ell = m / gcd(m, 2).
    """
    if m < 3:
        raise ValueError("root-of-unity mode requires m >= 3")
    return m // gcd(m, 2)


class QMode:
    """
    Coefficient-ring selector: either the generic Laurent ring or the
    cyclotomic field of a primitive m-th root of unity (with derived ell).
    Values are immutable.
    """

    __slots__ = ("kind", "m", "ell")

    def __init__(self, kind, m=None):
        assert kind in ("generic", "root")
        self.kind = kind
        if kind == "root":
            self.m = m
            self.ell = ell_of(m)
        else:
            self.m = None
            self.ell = None

    @property
    def is_generic(self):
        return self.kind == "generic"

    def zero(self):
        return LaurentPoly.zero() if self.is_generic else CycloElem.zero(self.m)

    def one(self):
        return LaurentPoly.one() if self.is_generic else CycloElem.one(self.m)

    def const(self, v):
        return LaurentPoly.const(v) if self.is_generic else CycloElem.const(self.m, v)

    def q_power(self, e):
        return LaurentPoly.q(e) if self.is_generic else CycloElem.q(self.m, e)

    def convert(self, p):
        """Map a generic Laurent polynomial into this mode's ring."""
        if self.is_generic:
            return p
        return CycloElem.from_laurent(self.m, p)

    def __eq__(self, other):
        return isinstance(other, QMode) and (self.kind, self.m) == (other.kind, other.m)

    def __hash__(self):
        return hash((self.kind, self.m))

    def __repr__(self):
        return "QMode(generic)" if self.is_generic else "QMode(root m=%d, ell=%d)" % (self.m, self.ell)


GENERIC = QMode("generic")


def root_of_unity(m):
    return QMode("root", m)


def qnum(j, mode=GENERIC):
    """
    The q-number [j]_q = q^(j-1) + q^(j-3) + ... + q^(1-j), computed by the
    summed form and specialized afterwards in root-of-unity mode.
    """
    assert j >= 0
    p = LaurentPoly({e: 1 for e in range(j - 1, -j, -2)})
    return mode.convert(p)


def beta(mode=GENERIC):
    """The loop weight q + q^(-1)."""
    return mode.convert(LaurentPoly({1: 1, -1: 1}))
