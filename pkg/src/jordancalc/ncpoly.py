"""Free-algebra elements, rewrite systems, and Diamond-Lemma overlap checks.

Words are tuples of letter names; an NCPoly maps words to RatFunc
coefficients.  A RewriteSystem owns an ordered alphabet plus length-2 rules
``(x, y) -> NCPoly`` and reduces leftmost-first with memoised word normal
forms.  PBW-type bases are certified by the overlap report: when every
overlap ambiguity resolves, irreducible words form a basis of the quotient.
"""

from __future__ import annotations

from fractions import Fraction

from .exactalg import RatFunc, RF_ONE, parse_ratfunc

Word = tuple


class FreeAlgebra:
    """Alphabet with a total order; position order is normal-form order
    (letters earlier in ``letters`` come first in ordered monomials)."""

    def __init__(self, name: str, letters):
        self.name = name
        self.letters = tuple(letters)
        self.rank = {x: i for i, x in enumerate(self.letters)}
        if len(self.rank) != len(self.letters):
            raise ValueError("duplicate letters")

    def word(self, *letters) -> Word:
        for x in letters:
            if x not in self.rank:
                raise ValueError(f"letter {x!r} not in alphabet {self.name}")
        return tuple(letters)

    def __repr__(self):
        return f"FreeAlgebra({self.name}: {' '.join(self.letters)})"


def _coerce_coeff(c):
    if isinstance(c, RatFunc):
        return c
    if isinstance(c, (int, Fraction)):
        return RatFunc.const(c)
    raise TypeError(f"bad coefficient {c!r}")


class NCPoly:
    """Linear combination of free-algebra words with RatFunc coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {}
        if terms:
            for w, c in terms.items():
                c = _coerce_coeff(c)
                if c:
                    self.terms[w] = c

    @staticmethod
    def _make(terms) -> "NCPoly":
        p = NCPoly.__new__(NCPoly)
        p.terms = terms
        return p

    @staticmethod
    def word(w: Word, coeff=1) -> "NCPoly":
        c = _coerce_coeff(coeff)
        return NCPoly._make({tuple(w): c} if c else {})

    @staticmethod
    def unit(coeff=1) -> "NCPoly":
        return NCPoly.word((), coeff)

    @staticmethod
    def zero() -> "NCPoly":
        return NCPoly._make({})

    @property
    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, NCPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        if not isinstance(other, NCPoly):
            return NotImplemented
        t = dict(self.terms)
        for w, c in other.terms.items():
            s = t.get(w)
            if s is None:
                t[w] = c
            else:
                s = s + c
                if s:
                    t[w] = s
                else:
                    del t[w]
        return NCPoly._make(t)

    def __neg__(self):
        return NCPoly._make({w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (RatFunc, int, Fraction)):
            return self.scale(other)
        if not isinstance(other, NCPoly):
            return NotImplemented
        t = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = w1 + w2
                c = c1 * c2
                s = t.get(w)
                if s is None:
                    t[w] = c
                else:
                    s = s + c
                    if s:
                        t[w] = s
                    else:
                        del t[w]
        return NCPoly._make(t)

    def __rmul__(self, other):
        if isinstance(other, (RatFunc, int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def scale(self, c) -> "NCPoly":
        c = _coerce_coeff(c)
        if not c:
            return NCPoly.zero()
        return NCPoly._make({w: c * x for w, x in self.terms.items()})

    def map_coeffs(self, f) -> "NCPoly":
        t = {}
        for w, c in self.terms.items():
            c = f(c)
            if c:
                t[w] = c
        return NCPoly._make(t)

    def coeff(self, w: Word) -> RatFunc:
        return self.terms.get(tuple(w), RatFunc.const(0))

    def words(self):
        return self.terms.keys()

    def sexpr(self) -> str:
        """Canonical S-expression ``(+ (* coeff letters...) ...)``."""
        if not self.terms:
            return "(+)"
        bits = []
        for w in sorted(self.terms, key=lambda w: (len(w), w)):
            body = " ".join((str(self.terms[w]),) + w)
            bits.append(f"(* {body})")
        return "(+ " + " ".join(bits) + ")"

    def __str__(self):
        if not self.terms:
            return "0"
        bits = []
        for w in sorted(self.terms, key=lambda w: (len(w), w)):
            c = self.terms[w]
            mono = "*".join(w) if w else "1"
            bits.append(f"[{c}]{mono}" if w else f"[{c}]")
        return " + ".join(bits)

    def __repr__(self):
        return f"NCPoly({self})"


def parse_sexpr(text: str) -> NCPoly:
    toks = text.replace("(", " ( ").replace(")", " ) ").split()
    if toks[0] != "(" or toks[1] != "+":
        raise ValueError("expected (+ ...)")
    i = 2
    terms = {}
    while toks[i] != ")":
        if toks[i] != "(" or toks[i + 1] != "*":
            raise ValueError("expected (* coeff word)")
        i += 2
        coeff = parse_ratfunc(toks[i])
        i += 1
        word = []
        while toks[i] != ")":
            word.append(toks[i])
            i += 1
        i += 1
        w = tuple(word)
        terms[w] = terms.get(w, RatFunc.const(0)) + coeff
    return NCPoly(terms)


class NonTerminationError(RuntimeError):
    pass


class CertificateError(ValueError):
    pass


def _descent_key(word, rank):
    strict = weak = 0
    for i in range(len(word) - 1):
        a, b = rank[word[i]], rank[word[i + 1]]
        if a > b:
            strict += 1
        if a >= b:
            weak += 1
    return strict, weak, len(word)


class RewriteSystem:
    """Length-2 string rewriting with RatFunc coefficients.

    ``certificate`` declares the well-founded order every rule strictly
    decreases: ``"descents"`` compares (strict adjacent descents, weak
    adjacent descents, length); ``"weighted"`` prefixes that key with a total
    letter weight, for systems whose rules shorten words in a weighted sense
    (determinant elimination and localisation).
    """

    def __init__(self, algebra: FreeAlgebra, rules, certificate="descents",
                 weights=None, fuel=2_000_000):
        self.algebra = algebra
        self.certificate = certificate
        self.weights = dict(weights) if weights else None
        self.fuel = fuel
        self._cache = {}
        staged = {}
        for lhs, rhs in (rules.items() if isinstance(rules, dict) else rules):
            lhs = tuple(lhs)
            if len(lhs) != 2:
                raise ValueError("rule left-hand sides must have length 2")
            staged[lhs] = rhs
        self.rules = staged
        self._interreduce()
        self._validate_certificate()

    # -- construction helpers ---------------------------------------------

    def _interreduce(self):
        # Make every right-hand side normal with respect to the full system.
        for _ in range(50):
            changed = False
            for lhs in list(self.rules):
                rhs = self.rules[lhs]
                self._cache.clear()
                nf = self._normalize_skipping(rhs, lhs)
                if nf != rhs:
                    self.rules[lhs] = nf
                    changed = True
            if not changed:
                self._cache.clear()
                return
        raise NonTerminationError("rule right-hand sides failed to stabilise")

    def _normalize_skipping(self, p, skip):
        saved = self.rules
        self.rules = {l: r for l, r in saved.items() if l != skip}
        try:
            return self.normalize(p)
        finally:
            self.rules = saved
            self._cache = {}

    def _word_key(self, word):
        key = _descent_key(word, self.algebra.rank)
        if self.certificate == "weighted":
            return (sum(self.weights[x] for x in word),) + key
        return key

    def _validate_certificate(self):
        if self.certificate == "weighted" and not self.weights:
            raise CertificateError("weighted certificate needs letter weights")
        for lhs, rhs in self.rules.items():
            lk = self._word_key(lhs)
            for w in rhs.words():
                if not self._word_key(w) < lk:
                    raise CertificateError(
                        f"rule {lhs} -> ... does not decrease on word {w}"
                    )

    # -- reduction -----------------------------------------------------------

    def leftmost_redex(self, word):
        rules = self.rules
        for i in range(len(word) - 1):
            r = rules.get(word[i : i + 2])
            if r is not None:
                return i, r
        return None

    def is_normal_word(self, word) -> bool:
        return self.leftmost_redex(tuple(word)) is None

    def normalize_word(self, word) -> NCPoly:
        word = tuple(word)
        cache = self._cache
        hit = cache.get(word)
        if hit is not None:
            return hit
        fuel = self.fuel
        stack = [word]
        while stack:
            fuel -= 1
            if fuel <= 0:
                raise NonTerminationError(
                    f"step bound exhausted while reducing {word} "
                    f"(stuck near {stack[-1]})"
                )
            top = stack[-1]
            if top in cache:
                stack.pop()
                continue
            redex = self.leftmost_redex(top)
            if redex is None:
                cache[top] = NCPoly._make({top: RF_ONE})
                stack.pop()
                continue
            i, rhs = redex
            pre, post = top[:i], top[i + 2 :]
            pending = [
                child
                for rw in rhs.words()
                if (child := pre + rw + post) not in cache
            ]
            if pending:
                stack.extend(pending)
                continue
            acc = {}
            for rw, rc in rhs.terms.items():
                for w2, c2 in cache[pre + rw + post].terms.items():
                    c = rc * c2
                    s = acc.get(w2)
                    if s is None:
                        acc[w2] = c
                    else:
                        s = s + c
                        if s:
                            acc[w2] = s
                        else:
                            del acc[w2]
            cache[top] = NCPoly._make(acc)
            stack.pop()
        return cache[word]

    def normalize(self, p: NCPoly) -> NCPoly:
        out = {}
        for w, c in p.terms.items():
            for w2, c2 in self.normalize_word(w).terms.items():
                x = c * c2
                s = out.get(w2)
                if s is None:
                    out[w2] = x
                else:
                    s = s + x
                    if s:
                        out[w2] = s
                    else:
                        del out[w2]
        return NCPoly._make(out)

    def mul(self, p: NCPoly, q: NCPoly) -> NCPoly:
        return self.normalize(p * q)

    # -- Diamond Lemma ----------------------------------------------------------

    def check_overlaps(self):
        """Reduce every overlap ambiguity both ways; report the differences."""
        entries = []
        for l1, r1 in self.rules.items():
            for l2, r2 in self.rules.items():
                if l1[1] != l2[0]:
                    continue
                word = (l1[0], l1[1], l2[1])
                via1 = self.normalize(r1 * NCPoly.word((l2[1],)))
                via2 = self.normalize(NCPoly.word((l1[0],)) * r2)
                diff = via1 - via2
                entries.append(OverlapEntry(l1, l2, word, diff))
        return OverlapReport(self.algebra.name, entries)


class OverlapEntry:
    def __init__(self, rule1, rule2, word, difference):
        self.rule1 = rule1
        self.rule2 = rule2
        self.word = word
        self.difference = difference

    @property
    def resolvable(self):
        return self.difference.is_zero

    def __repr__(self):
        tag = "ok" if self.resolvable else "FAILS"
        return f"<overlap {''.join(self.word)} {tag}>"


class OverlapReport:
    def __init__(self, name, entries):
        self.name = name
        self.entries = entries

    @property
    def unresolvable(self):
        return [e for e in self.entries if not e.resolvable]

    @property
    def confluent(self):
        return not self.unresolvable

    def summary(self):
        return (
            f"{self.name}: {len(self.entries)} overlaps, "
            f"{len(self.unresolvable)} unresolvable"
        )


class TensorNCPoly:
    """Tensor-power elements: maps tuples of words to RatFunc coefficients."""

    __slots__ = ("terms", "nlegs")

    def __init__(self, terms=None, nlegs=2):
        self.nlegs = nlegs
        self.terms = {}
        if terms:
            for ws, c in terms.items():
                c = _coerce_coeff(c)
                if c:
                    if len(ws) != nlegs:
                        raise ValueError("wrong leg count")
                    self.terms[ws] = c

    @staticmethod
    def _make(terms, nlegs):
        t = TensorNCPoly.__new__(TensorNCPoly)
        t.terms = terms
        t.nlegs = nlegs
        return t

    @staticmethod
    def unit(nlegs=2):
        return TensorNCPoly._make({((),) * nlegs: RF_ONE}, nlegs)

    @staticmethod
    def of(*polys):
        """Tensor product of NCPolys, one per leg."""
        combos = {(): RF_ONE}
        for p in polys:
            nxt = {}
            for ws, c in combos.items():
                for w, cw in p.terms.items():
                    key = ws + (w,)
                    nxt[key] = nxt.get(key, RatFunc.const(0)) + c * cw
            combos = {k: v for k, v in nxt.items() if v}
        return TensorNCPoly._make(combos, len(polys))

    @property
    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, TensorNCPoly):
            return NotImplemented
        return self.terms == other.terms

    def __add__(self, other):
        t = dict(self.terms)
        for ws, c in other.terms.items():
            s = t.get(ws)
            if s is None:
                t[ws] = c
            else:
                s = s + c
                if s:
                    t[ws] = s
                else:
                    del t[ws]
        return TensorNCPoly._make(t, self.nlegs)

    def __neg__(self):
        return TensorNCPoly._make({w: -c for w, c in self.terms.items()}, self.nlegs)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        c = _coerce_coeff(c)
        if not c:
            return TensorNCPoly._make({}, self.nlegs)
        return TensorNCPoly._make(
            {w: c * x for w, x in self.terms.items()}, self.nlegs
        )

    def __mul__(self, other):
        if isinstance(other, (RatFunc, int, Fraction)):
            return self.scale(other)
        if not isinstance(other, TensorNCPoly) or other.nlegs != self.nlegs:
            return NotImplemented
        t = {}
        for ws1, c1 in self.terms.items():
            for ws2, c2 in other.terms.items():
                key = tuple(w1 + w2 for w1, w2 in zip(ws1, ws2))
                c = c1 * c2
                s = t.get(key)
                if s is None:
                    t[key] = c
                else:
                    s = s + c
                    if s:
                        t[key] = s
                    else:
                        del t[key]
        return TensorNCPoly._make(t, self.nlegs)

    __rmul__ = scale


def tensor_normalize(t: TensorNCPoly, rs: RewriteSystem) -> TensorNCPoly:
    """Normalize every leg and collect like terms bilinearly."""
    out = {}
    for ws, c in t.terms.items():
        legs = [rs.normalize_word(w) for w in ws]
        combos = {(): c}
        for leg in legs:
            nxt = {}
            for key, cc in combos.items():
                for w, cw in leg.terms.items():
                    k = key + (w,)
                    prev = nxt.get(k)
                    val = cc * cw
                    nxt[k] = val if prev is None else prev + val
            combos = nxt
        for key, cc in combos.items():
            s = out.get(key)
            if s is None:
                if cc:
                    out[key] = cc
            else:
                s = s + cc
                if s:
                    out[key] = s
                else:
                    del out[key]
    return TensorNCPoly._make(out, t.nlegs)
