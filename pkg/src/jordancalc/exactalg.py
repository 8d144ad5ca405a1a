"""Exact coefficient arithmetic.

Everything downstream computes over one of three coefficient domains:

* ``RatFunc`` -- the field Q(h, g, z) of rational functions in the three
  deformation parameters, built on sparse ``MultiPoly`` numerators and
  denominators with big-rational (``fractions.Fraction``) coefficients.
* ``RadElem`` -- the quadratic radical field Q(sqrt2, sqrt3), a 4-dimensional
  Q-vector space on the basis {1, sqrt2, sqrt3, sqrt6}.
* ``TruncSeries`` -- truncated power series in h, used for h-adic work.

All values are immutable after construction and safe to share.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as _int_gcd

BigRat = Fraction

# Exponent vectors are triples (e_h, e_g, e_z).
VARS = ("h", "g", "z")
_ZERO_EXP = (0, 0, 0)


def _exp_add(e, f):
    return (e[0] + f[0], e[1] + f[1], e[2] + f[2])


def _grlex_key(e):
    # graded lex with h > g > z
    return (e[0] + e[1] + e[2], e)


class MultiPoly:
    """Sparse polynomial in h, g, z over Q.

    ``terms`` maps exponent triples to nonzero Fractions; the zero polynomial
    has an empty term map.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        if terms:
            self.terms = {e: c for e, c in terms.items() if c}
        else:
            self.terms = {}

    # -- constructors -----------------------------------------------------

    @staticmethod
    def const(c) -> "MultiPoly":
        c = Fraction(c)
        return MultiPoly({_ZERO_EXP: c}) if c else MultiPoly()

    @staticmethod
    def var(name: str) -> "MultiPoly":
        i = VARS.index(name)
        e = [0, 0, 0]
        e[i] = 1
        return MultiPoly({tuple(e): Fraction(1)})

    # -- structure --------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def is_one(self) -> bool:
        return len(self.terms) == 1 and self.terms.get(_ZERO_EXP) == 1

    def is_const(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and _ZERO_EXP in self.terms)

    def const_value(self) -> Fraction:
        if self.is_zero:
            return Fraction(0)
        if not self.is_const():
            raise ValueError("not a constant polynomial")
        return self.terms[_ZERO_EXP]

    def degree(self) -> int:
        if self.is_zero:
            return -1
        return max(e[0] + e[1] + e[2] for e in self.terms)

    def degree_in(self, i: int) -> int:
        if self.is_zero:
            return -1
        return max(e[i] for e in self.terms)

    def leading(self):
        """Leading (exponent, coefficient) under graded lex h > g > z."""
        e = max(self.terms, key=_grlex_key)
        return e, self.terms[e]

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            return self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self.terms == MultiPoly.const(other).terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        return f"MultiPoly({self})"

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MultiPoly.const(other)
        t = dict(self.terms)
        for e, c in other.terms.items():
            s = t.get(e)
            if s is None:
                t[e] = c
            else:
                s = s + c
                if s:
                    t[e] = s
                else:
                    del t[e]
        r = MultiPoly.__new__(MultiPoly)
        r.terms = t
        return r

    __radd__ = __add__

    def __neg__(self):
        r = MultiPoly.__new__(MultiPoly)
        r.terms = {e: -c for e, c in self.terms.items()}
        return r

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MultiPoly.const(other)
        return self + (-other)

    def __rsub__(self, other):
        return MultiPoly.const(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return MultiPoly()
            r = MultiPoly.__new__(MultiPoly)
            r.terms = {e: c * other for e, c in self.terms.items()}
            return r
        if not isinstance(other, MultiPoly):
            return NotImplemented
        t = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = _exp_add(e1, e2)
                s = t.get(e)
                if s is None:
                    t[e] = c1 * c2
                else:
                    s = s + c1 * c2
                    if s:
                        t[e] = s
                    else:
                        del t[e]
        r = MultiPoly.__new__(MultiPoly)
        r.terms = t
        return r

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        r = MultiPoly.const(1)
        b = self
        while n:
            if n & 1:
                r = r * b
            b = b * b
            n >>= 1
        return r

    # -- substitution and evaluation ---------------------------------------

    def subst(self, i: int, value) -> "MultiPoly":
        """Substitute variable ``i`` by a Fraction or MultiPoly."""
        if isinstance(value, (int, Fraction)):
            value = MultiPoly.const(value)
        out = MultiPoly()
        powers = {0: MultiPoly.const(1)}

        def vpow(n):
            if n not in powers:
                powers[n] = vpow(n - 1) * value
            return powers[n]

        for e, c in self.terms.items():
            rest = list(e)
            n = rest[i]
            rest[i] = 0
            out = out + MultiPoly({tuple(rest): c}) * vpow(n)
        return out

    def eval(self, h, g, z) -> Fraction:
        vals = (Fraction(h), Fraction(g), Fraction(z))
        total = Fraction(0)
        for e, c in self.terms.items():
            t = c
            for i in range(3):
                if e[i]:
                    t *= vals[i] ** e[i]
            total += t
        return total

    # -- content / primitive part ------------------------------------------

    def rational_content(self):
        """Return (sign, content, primitive) with self = sign*content*primitive.

        ``content`` is a positive Fraction, ``primitive`` has coprime integer
        coefficients and positive leading coefficient (graded lex).
        """
        if self.is_zero:
            return 1, Fraction(1), MultiPoly()
        num_gcd = 0
        den_lcm = 1
        for c in self.terms.values():
            num_gcd = _int_gcd(num_gcd, abs(c.numerator))
            den_lcm = den_lcm * c.denominator // _int_gcd(den_lcm, c.denominator)
        content = Fraction(num_gcd, den_lcm)
        _, lc = self.leading()
        sign = 1 if lc > 0 else -1
        scale = Fraction(sign) / content
        prim = MultiPoly.__new__(MultiPoly)
        prim.terms = {e: c * scale for e, c in self.terms.items()}
        return sign, content, prim

    def primitive(self) -> "MultiPoly":
        return self.rational_content()[2]

    # -- division -----------------------------------------------------------

    def divexact(self, d: "MultiPoly") -> "MultiPoly":
        """Exact division; raises ValueError if ``d`` does not divide."""
        if d.is_zero:
            raise ZeroDivisionError("division by zero polynomial")
        if d.is_const():
            return self * (Fraction(1) / d.const_value())
        q = {}
        r = dict(self.terms)
        de, dc = d.leading()
        while r:
            rem = MultiPoly.__new__(MultiPoly)
            rem.terms = r
            e, c = rem.leading()
            qe = tuple(e[i] - de[i] for i in range(3))
            if min(qe) < 0:
                raise ValueError("not divisible")
            qc = c / dc
            q[qe] = qc
            for fe, fc in d.terms.items():
                te = _exp_add(qe, fe)
                s = r.get(te, Fraction(0)) - qc * fc
                if s:
                    r[te] = s
                else:
                    r.pop(te, None)
        return MultiPoly(q)

    def __str__(self):
        if self.is_zero:
            return "0"
        bits = []
        for e in sorted(self.terms, key=_grlex_key, reverse=True):
            c = self.terms[e]
            mono = "*".join(
                (VARS[i] if e[i] == 1 else f"{VARS[i]}^{e[i]}")
                for i in range(3)
                if e[i]
            )
            if not mono:
                bits.append(str(c))
            elif c == 1:
                bits.append(mono)
            elif c == -1:
                bits.append(f"-{mono}")
            else:
                bits.append(f"{c}*{mono}")
        s = "+".join(bits).replace("+-", "-")
        return s


MP_ZERO = MultiPoly()
MP_ONE = MultiPoly.const(1)


# -- multivariate gcd -------------------------------------------------------
#
# Content/primitive-part recursion, one variable at a time.  Only three
# indeterminates and modest degrees occur, so a primitive PRS is plenty.


def _coeffs_in(p: MultiPoly, i: int):
    """Coefficients of p as a univariate polynomial in variable i."""
    out = {}
    for e, c in p.terms.items():
        n = e[i]
        rest = list(e)
        rest[i] = 0
        out.setdefault(n, {})[tuple(rest)] = c
    return {n: MultiPoly(t) for n, t in out.items()}


def _from_coeffs(coeffs, i):
    t = {}
    for n, p in coeffs.items():
        for e, c in p.terms.items():
            e2 = list(e)
            e2[i] = n
            t[tuple(e2)] = c
    return MultiPoly(t)


def _content_in(p: MultiPoly, i: int) -> MultiPoly:
    cs = list(_coeffs_in(p, i).values())
    g = MP_ZERO
    for c in cs:
        g = poly_gcd(g, c)
        if g.is_one:
            break
    return g


def _prem(f: MultiPoly, g: MultiPoly, i: int) -> MultiPoly:
    """Pseudo-remainder of f by g with respect to variable i."""
    dg = g.degree_in(i)
    gc = _coeffs_in(g, i)
    lcg = gc[dg]
    while not f.is_zero and f.degree_in(i) >= dg:
        df = f.degree_in(i)
        fc = _coeffs_in(f, i)
        lcf = fc[df]
        shift = [0, 0, 0]
        shift[i] = df - dg
        mono = MultiPoly({tuple(shift): Fraction(1)})
        f = f * lcg - g * (lcf * mono)
    return f


def poly_gcd(p: MultiPoly, q: MultiPoly) -> MultiPoly:
    """Gcd up to rational factors: primitive, positive leading coefficient."""
    if p.is_zero:
        return q.primitive() if not q.is_zero else MP_ZERO
    if q.is_zero:
        return p.primitive()
    p = p.primitive()
    q = q.primitive()
    if p.is_const() or q.is_const():
        return MP_ONE
    main = next(i for i in range(3) if p.degree_in(i) > 0 or q.degree_in(i) > 0)
    if p.degree_in(main) == 0 or q.degree_in(main) == 0:
        # one side free of the main variable: gcd divides both contents
        cp = _content_in(p, main)
        cq = _content_in(q, main)
        return poly_gcd(cp, cq)
    cp = _content_in(p, main)
    cq = _content_in(q, main)
    pp = p.divexact(cp)
    qq = q.divexact(cq)
    if pp.degree_in(main) < qq.degree_in(main):
        pp, qq = qq, pp
    while True:
        r = _prem(pp, qq, main)
        if r.is_zero:
            g_pp = qq.divexact(_content_in(qq, main)).primitive()
            break
        if r.degree_in(main) == 0:
            g_pp = MP_ONE
            break
        pp, qq = qq, r.divexact(_content_in(r, main)).primitive()
    return (poly_gcd(cp, cq) * g_pp).primitive()


class RatFunc:
    """Canonical fraction num/den over Q[h,g,z].

    Invariants: den != 0; gcd(num, den) = 1; num and den have coprime integer
    contents overall and den has positive leading coefficient, so equality is
    plain component equality.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=MP_ONE):
        if isinstance(num, (int, Fraction)):
            num = MultiPoly.const(num)
        if isinstance(den, (int, Fraction)):
            den = MultiPoly.const(den)
        if den.is_zero:
            raise ZeroDivisionError("division by zero polynomial")
        if num.is_zero:
            self.num, self.den = MP_ZERO, MP_ONE
            return
        if den.is_one:
            self.num, self.den = num, den
            return
        g = poly_gcd(num, den)
        if not g.is_one:
            num = num.divexact(g)
            den = den.divexact(g)
        sn, cn, pn = num.rational_content()
        sd, cd, pd = den.rational_content()
        ratio = cn / cd
        self.num = pn * Fraction(sn * sd * ratio.numerator)
        self.den = pd * Fraction(ratio.denominator)

    # -- constructors -------------------------------------------------------

    @staticmethod
    def const(c) -> "RatFunc":
        return RatFunc(MultiPoly.const(c))

    @staticmethod
    def var(name: str) -> "RatFunc":
        return RatFunc(MultiPoly.var(name))

    # -- predicates ----------------------------------------------------------

    @property
    def is_zero(self):
        return self.num.is_zero

    def __bool__(self):
        return not self.num.is_zero

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = RatFunc.const(other)
        if not isinstance(other, RatFunc):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    # -- arithmetic ------------------------------------------------------------

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = RatFunc.const(other)
        if not isinstance(other, RatFunc):
            return NotImplemented
        if self.den.is_one and other.den.is_one:
            r = RatFunc.__new__(RatFunc)
            r.num, r.den = self.num + other.num, MP_ONE
            return r
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        r = RatFunc.__new__(RatFunc)
        r.num, r.den = -self.num, self.den
        return r

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = RatFunc.const(other)
        return self + (-other)

    def __rsub__(self, other):
        return RatFunc.const(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            other = RatFunc.const(other)
        if not isinstance(other, RatFunc):
            return NotImplemented
        if self.den.is_one and other.den.is_one:
            r = RatFunc.__new__(RatFunc)
            r.num, r.den = self.num * other.num, MP_ONE
            return r
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            other = RatFunc.const(other)
        if not isinstance(other, RatFunc):
            return NotImplemented
        return RatFunc(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return RatFunc.const(other) / self

    def inverse(self) -> "RatFunc":
        return RatFunc(self.den, self.num)

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        r = RF_ONE
        b = self
        while n:
            if n & 1:
                r = r * b
            b = b * b
            n >>= 1
        return r

    # -- substitution ------------------------------------------------------------

    def subst(self, name: str, value) -> "RatFunc":
        i = VARS.index(name)
        if isinstance(value, str):
            value = MultiPoly.var(value)
        if isinstance(value, RatFunc):
            if not value.den.is_one:
                raise NotImplementedError("rational substitution not supported")
            value = value.num
        return RatFunc(self.num.subst(i, value), self.den.subst(i, value))

    def eval(self, h, g, z) -> Fraction:
        d = self.den.eval(h, g, z)
        if not d:
            raise ZeroDivisionError("denominator vanishes at the given point")
        return self.num.eval(h, g, z) / d

    def __str__(self):
        if self.den.is_one:
            return str(self.num)
        ns = str(self.num)
        if len(self.num.terms) > 1:
            ns = f"({ns})"
        ds = str(self.den)
        if len(self.den.terms) > 1:
            ds = f"({ds})"
        return f"{ns}/{ds}"

    def __repr__(self):
        return f"RatFunc({self})"


RF_ZERO = RatFunc(MP_ZERO)
RF_ONE = RatFunc(MP_ONE)
RF_H = RatFunc.var("h")
RF_G = RatFunc.var("g")
RF_Z = RatFunc.var("z")


# -- parsing ------------------------------------------------------------------


class _Tok:
    def __init__(self, s):
        self.s = s
        self.i = 0

    def peek(self):
        while self.i < len(self.s) and self.s[self.i].isspace():
            self.i += 1
        return self.s[self.i] if self.i < len(self.s) else ""

    def take(self):
        c = self.peek()
        self.i += 1
        return c


def parse_ratfunc(text: str) -> RatFunc:
    """Parse expressions like ``(3*z+2)/2`` or ``-(h+g)*z`` into a RatFunc."""
    tok = _Tok(text)

    def atom():
        c = tok.peek()
        if c == "(":
            tok.take()
            v = expr()
            if tok.take() != ")":
                raise ValueError(f"expected ')' in {text!r}")
            return v
        if c.isdigit():
            n = ""
            while tok.peek().isdigit():
                n += tok.take()
            return RatFunc.const(int(n))
        if c in VARS:
            tok.take()
            return RatFunc.var(c)
        raise ValueError(f"unexpected character {c!r} in {text!r}")

    def factor():
        if tok.peek() == "-":
            tok.take()
            return -factor()
        v = atom()
        while tok.peek() == "^":
            tok.take()
            n = ""
            while tok.peek().isdigit():
                n += tok.take()
            v = v ** int(n)
        return v

    def term():
        v = factor()
        while tok.peek() and tok.peek() in "*/":
            op = tok.take()
            w = factor()
            v = v * w if op == "*" else v / w
        return v

    def expr():
        v = term()
        while tok.peek() and tok.peek() in "+-":
            op = tok.take()
            w = term()
            v = v + w if op == "+" else v - w
        return v

    v = expr()
    if tok.peek():
        raise ValueError(f"trailing input in {text!r}")
    return v


# -- radical field Q(sqrt2, sqrt3) ---------------------------------------------


class RadElem:
    """Element of Q(sqrt2, sqrt3) on the basis {1, sqrt2, sqrt3, sqrt6}."""

    __slots__ = ("c",)

    def __init__(self, a=0, b=0, c=0, d=0):
        self.c = (Fraction(a), Fraction(b), Fraction(c), Fraction(d))

    @staticmethod
    def _make(t):
        r = RadElem.__new__(RadElem)
        r.c = t
        return r

    @property
    def is_zero(self):
        return not any(self.c)

    def __bool__(self):
        return any(self.c)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = RadElem(other)
        if not isinstance(other, RadElem):
            return NotImplemented
        return self.c == other.c

    def __hash__(self):
        return hash(self.c)

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = RadElem(other)
        a, b = self.c, other.c
        return RadElem._make(tuple(a[i] + b[i] for i in range(4)))

    __radd__ = __add__

    def __neg__(self):
        return RadElem._make(tuple(-x for x in self.c))

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = RadElem(other)
        return self + (-other)

    def __rsub__(self, other):
        return RadElem(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            k = Fraction(other)
            return RadElem._make(tuple(x * k for x in self.c))
        if not isinstance(other, RadElem):
            return NotImplemented
        a0, a1, a2, a3 = self.c
        b0, b1, b2, b3 = other.c
        return RadElem._make(
            (
                a0 * b0 + 2 * a1 * b1 + 3 * a2 * b2 + 6 * a3 * b3,
                a0 * b1 + a1 * b0 + 3 * (a2 * b3 + a3 * b2),
                a0 * b2 + a2 * b0 + 2 * (a1 * b3 + a3 * b1),
                a0 * b3 + a3 * b0 + a1 * b2 + a2 * b1,
            )
        )

    __rmul__ = __mul__

    def conj(self, flip2=False, flip3=False) -> "RadElem":
        a0, a1, a2, a3 = self.c
        if flip2:
            a1 = -a1
            a3 = -a3
        if flip3:
            a2 = -a2
            a3 = -a3
        return RadElem._make((a0, a1, a2, a3))

    def inverse(self) -> "RadElem":
        if self.is_zero:
            raise ZeroDivisionError("inverse of zero in Q(sqrt2, sqrt3)")
        u1 = self.conj(flip2=True)
        u2 = self.conj(flip3=True)
        u3 = self.conj(flip2=True, flip3=True)
        prod = u1 * u2 * u3
        norm = self * prod
        assert norm.c[1] == 0 and norm.c[2] == 0 and norm.c[3] == 0
        return prod * (Fraction(1) / norm.c[0])

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (Fraction(1) / Fraction(other))
        return self * other.inverse()

    def __rtruediv__(self, other):
        return RadElem(other) / self

    def rational_part(self) -> Fraction:
        if self.c[1] or self.c[2] or self.c[3]:
            raise ValueError("element is not rational")
        return self.c[0]

    def __str__(self):
        names = ("", "*r2", "*r3", "*r6")
        bits = [f"{c}{n}" for c, n in zip(self.c, names) if c]
        return " + ".join(bits).replace("+ -", "- ") if bits else "0"

    def __repr__(self):
        return f"RadElem{self.c}"


RAD_ONE = RadElem(1)
RAD_SQRT2 = RadElem(0, 1)
RAD_SQRT3 = RadElem(0, 0, 1)
RAD_SQRT6 = RadElem(0, 0, 0, 1)


def rad_mul(u: RadElem, v: RadElem) -> RadElem:
    return u * v


# -- truncated power series -----------------------------------------------------


class TruncSeries:
    """Power series in h truncated at a fixed order N (inclusive)."""

    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs, order: int):
        cs = list(coeffs)[: order + 1]
        cs += [Fraction(0)] * (order + 1 - len(cs))
        self.coeffs = tuple(Fraction(c) for c in cs)
        self.order = order

    @staticmethod
    def const(c, order: int) -> "TruncSeries":
        return TruncSeries([Fraction(c)], order)

    @staticmethod
    def monomial(c, k: int, order: int) -> "TruncSeries":
        if k > order:
            return TruncSeries([], order)
        return TruncSeries([0] * k + [Fraction(c)], order)

    @property
    def is_zero(self):
        return not any(self.coeffs)

    def __bool__(self):
        return any(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = TruncSeries.const(other, self.order)
        if not isinstance(other, TruncSeries):
            return NotImplemented
        n = min(self.order, other.order)
        return self.coeffs[: n + 1] == other.coeffs[: n + 1]

    def __hash__(self):
        return hash((self.coeffs, self.order))

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = TruncSeries.const(other, self.order)
        n = min(self.order, other.order)
        return TruncSeries(
            [self.coeffs[i] + other.coeffs[i] for i in range(n + 1)], n
        )

    __radd__ = __add__

    def __neg__(self):
        return TruncSeries([-c for c in self.coeffs], self.order)

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = TruncSeries.const(other, self.order)
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return TruncSeries([c * other for c in self.coeffs], self.order)
        if not isinstance(other, TruncSeries):
            return NotImplemented
        n = min(self.order, other.order)
        out = [Fraction(0)] * (n + 1)
        for i, a in enumerate(self.coeffs[: n + 1]):
            if not a:
                continue
            for j, b in enumerate(other.coeffs[: n + 1 - i]):
                if b:
                    out[i + j] += a * b
        return TruncSeries(out, n)

    __rmul__ = __mul__

    def shift(self, k: int) -> "TruncSeries":
        """Multiply by h^k."""
        if k == 0:
            return self
        return TruncSeries([Fraction(0)] * k + list(self.coeffs), self.order)

    def truncate(self, order: int) -> "TruncSeries":
        return TruncSeries(self.coeffs[: order + 1], order)

    def __str__(self):
        bits = [
            (f"{c}" if k == 0 else f"{c}*h^{k}")
            for k, c in enumerate(self.coeffs)
            if c
        ]
        return " + ".join(bits) if bits else "0"

    def __repr__(self):
        return f"TruncSeries({self}, order={self.order})"


def series_mul(a: TruncSeries, b: TruncSeries, order: int) -> TruncSeries:
    if a.order < order or b.order < order:
        raise ValueError("inputs truncated below the requested order")
    return (a * b).truncate(order)
