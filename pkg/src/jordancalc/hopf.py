"""Jordanian Hopf algebras: the R-matrix, FRT relation generation, and the
presentations of A(R), GL_{h,g}(2), SL_h(2) with their structure maps.

Presentations are loaded from declarative ``.pres`` files shipped with the
package, optionally with parameters specialised (e.g. g -> h, or the
classical point h = g = 0).
"""

from __future__ import annotations

from fractions import Fraction
from importlib import resources

from .exactalg import MultiPoly, RatFunc, RF_ONE, VARS, parse_ratfunc
from .linalg import identity, mat_mul, mat_sub, mat_eq, rank
from .ncpoly import (
    FreeAlgebra,
    NCPoly,
    RewriteSystem,
    TensorNCPoly,
    tensor_normalize,
)

RF0 = RatFunc.const(0)
RF1 = RF_ONE


# -- term / tensor parsing for .pres files -------------------------------------


def _split_terms(text: str):
    """Split on top-level + and -, keeping signs; brackets protect coeffs."""
    terms = []
    depth = 0
    cur = ""
    sign = 1
    for ch in text:
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
        if depth == 0 and ch in "+-" and cur.strip():
            terms.append((sign, cur.strip()))
            sign = 1 if ch == "+" else -1
            cur = ""
        elif depth == 0 and ch in "+-" and not cur.strip():
            if ch == "-":
                sign = -sign
        else:
            cur += ch
    if cur.strip():
        terms.append((sign, cur.strip()))
    return terms


def _parse_term(term: str):
    """Return (coeff RatFunc, word tuple) from e.g. ``[-g] c c`` or ``a c``."""
    term = term.strip()
    coeff = RF1
    if term.startswith("["):
        end = term.index("]")
        coeff = parse_ratfunc(term[1:end])
        term = term[end + 1 :].strip()
    letters = tuple(x for x in term.split() if x != "1")
    return coeff, letters


def parse_poly(text: str) -> NCPoly:
    p = NCPoly.zero()
    for sign, term in _split_terms(text):
        c, w = _parse_term(term)
        p = p + NCPoly.word(w, c * sign)
    return p


def parse_tensor(text: str) -> TensorNCPoly:
    t = TensorNCPoly({}, 2)
    for sign, term in _split_terms(text):
        legs = term.split(".")
        if len(legs) != 2:
            raise ValueError(f"tensor term needs two legs: {term!r}")
        c0, w0 = _parse_term(legs[0])
        c1, w1 = _parse_term(legs[1])
        t = t + TensorNCPoly({(w0, w1): c0 * c1 * sign}, 2)
    return t


class HopfPresentation:
    """Generators, confluent rewrite system, and structure-map tables."""

    def __init__(self, name, system: RewriteSystem, coproduct, counit,
                 antipode=None, det_letter=None, detinv_letter=None, subs=None):
        self.name = name
        self.system = system
        self.algebra = system.algebra
        self.coproduct = coproduct
        self.counit = counit
        self.antipode = antipode
        self.det_letter = det_letter
        self.detinv_letter = detinv_letter
        self.subs = dict(subs) if subs else {}

    def param(self, text: str) -> RatFunc:
        """A parameter expression with this presentation's substitutions."""
        return _subst_ratfunc(parse_ratfunc(text), self.subs)

    # -- algebra ----------------------------------------------------------

    def normalize(self, p: NCPoly) -> NCPoly:
        return self.system.normalize(p)

    def mul(self, *ps) -> NCPoly:
        acc = NCPoly.unit()
        for p in ps:
            acc = self.system.normalize(acc * p)
        return acc

    def gen(self, letter: str) -> NCPoly:
        return NCPoly.word((letter,))

    # -- structure maps -----------------------------------------------------

    def delta_word(self, w) -> TensorNCPoly:
        t = TensorNCPoly.unit(2)
        for x in w:
            t = t * self.coproduct[x]
        return tensor_normalize(t, self.system)

    def delta(self, p: NCPoly) -> TensorNCPoly:
        out = TensorNCPoly({}, 2)
        for w, c in p.terms.items():
            out = out + self.delta_word(w).scale(c)
        return out

    def delta_on_leg(self, t: TensorNCPoly, leg: int) -> TensorNCPoly:
        """Apply the coproduct to one leg of a tensor, adding a leg."""
        out = TensorNCPoly({}, t.nlegs + 1)
        for ws, c in t.terms.items():
            inner = self.delta_word(ws[leg])
            for (u, v), c2 in inner.terms.items():
                key = ws[:leg] + (u, v) + ws[leg + 1 :]
                out = out + TensorNCPoly({key: c * c2}, t.nlegs + 1)
        return out

    def counit_of(self, p: NCPoly) -> RatFunc:
        total = RF0
        for w, c in p.terms.items():
            val = c
            for x in w:
                val = val * self.counit[x]
                if not val:
                    break
            total = total + val
        return total

    def antipode_of(self, p: NCPoly) -> NCPoly:
        if self.antipode is None:
            raise ValueError(f"presentation {self.name} has no antipode")
        out = NCPoly.zero()
        for w, c in p.terms.items():
            acc = NCPoly.unit(c)
            for x in reversed(w):
                acc = acc * self.antipode[x]
            out = out + acc
        return self.system.normalize(out)

    def counit_tensor_collapse(self, t: TensorNCPoly, leg: int) -> NCPoly:
        """Apply the counit to one leg and multiply out the remaining leg."""
        out = NCPoly.zero()
        for ws, c in t.terms.items():
            val = c
            for x in ws[leg]:
                val = val * self.counit[x]
                if not val:
                    break
            if val:
                rest = tuple(w for i, w in enumerate(ws) if i != leg)
                word = ()
                for w in rest:
                    word = word + w
                out = out + NCPoly.word(word, val)
        return self.system.normalize(out)


def structure_maps(pres: HopfPresentation, p: NCPoly, which: str):
    """Dispatch to the coproduct, counit, or antipode of a presentation."""
    if which in ("delta", "coproduct"):
        return pres.delta(p)
    if which in ("epsilon", "counit"):
        return pres.counit_of(p)
    if which in ("S", "antipode"):
        return pres.antipode_of(p)
    raise ValueError(f"unknown structure map {which!r}")


# -- presentation loading ---------------------------------------------------------


def _subst_ratfunc(c: RatFunc, subs) -> RatFunc:
    for name, val in subs.items():
        if isinstance(val, str):
            val = MultiPoly.var(val)
        c = c.subst(name, val)
    return c


def load_presentation(name: str, subs=None) -> HopfPresentation:
    """Load ``data/<name>.pres``; ``subs`` maps parameter names to Fractions
    or other parameter names (e.g. {"g": "h"} or {"h": 0, "g": 0})."""
    text = resources.files("jordancalc.data").joinpath(f"{name}.pres").read_text()
    letters = None
    certificate = "descents"
    weights = None
    rules = {}
    coproduct = {}
    counit = {}
    antipode = {}
    det_letter = detinv_letter = None
    pname = name
    file_subs = {}

    def fix(c):
        return _subst_ratfunc(c, subs) if subs else c

    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, _, val = line.partition(":")
        key = key.strip()
        val = val.strip()
        if key == "name":
            pname = val
        elif key == "letters":
            letters = val.split()
        elif key == "certificate":
            certificate = val
        elif key == "weights":
            weights = {}
            for item in val.split():
                l, _, w = item.partition("=")
                weights[l] = int(w)
        elif key == "rule":
            lhs_text, _, rhs_text = val.partition("->")
            lhs = tuple(lhs_text.split())
            rhs = parse_poly(rhs_text).map_coeffs(fix)
            rules[lhs] = rhs
        elif key == "coproduct":
            gen, _, rhs = val.partition("->")
            t = parse_tensor(rhs)
            coproduct[gen.strip()] = TensorNCPoly(
                {ws: fix(c) for ws, c in t.terms.items()}, 2
            )
        elif key == "counit":
            gen, _, rhs = val.partition("->")
            counit[gen.strip()] = fix(parse_ratfunc(rhs))
        elif key == "antipode":
            gen, _, rhs = val.partition("->")
            antipode[gen.strip()] = parse_poly(rhs).map_coeffs(fix)
        elif key == "subst":
            for item in val.split():
                l, _, r = item.partition("=")
                file_subs[l] = r if r in VARS else Fraction(r)
        elif key in ("det", "detinv"):
            if key == "det":
                det_letter = val
            else:
                detinv_letter = val
        else:
            raise ValueError(f"unknown presentation key {key!r}")

    algebra = FreeAlgebra(pname, letters)
    system = RewriteSystem(algebra, rules, certificate=certificate, weights=weights)
    for x in algebra.letters:
        if x not in coproduct or x not in counit:
            raise ValueError(f"missing coproduct/counit for {x}")
    return HopfPresentation(
        pname,
        system,
        coproduct,
        counit,
        antipode or None,
        det_letter,
        detinv_letter,
    )


# -- the Jordanian R-matrix --------------------------------------------------------


def jordanian_r_matrix():
    """4x4 R-matrix on the basis (11, 12, 21, 22), entries in Q(h,g)."""
    rf = parse_ratfunc
    rows = [
        ["1", "-h", "h", "g*h"],
        ["0", "1", "0", "-g"],
        ["0", "0", "1", "g"],
        ["0", "0", "0", "1"],
    ]
    return [[rf(x) for x in row] for row in rows]


def flip_matrix():
    P = [[RF0 for _ in range(4)] for _ in range(4)]
    for i in range(2):
        for j in range(2):
            P[2 * i + j][2 * j + i] = RF1
    return P


class RMatrixReport:
    def __init__(self, triangular, hecke, rank_pplus, rank_pminus):
        self.triangular = triangular
        self.hecke = hecke
        self.rank_pplus = rank_pplus
        self.rank_pminus = rank_pminus

    @property
    def all_pass(self):
        return (
            self.triangular
            and self.hecke
            and self.rank_pplus == 3
            and self.rank_pminus == 1
        )

    def __repr__(self):
        return (
            f"<RMatrixReport triangular={self.triangular} hecke={self.hecke} "
            f"rank(P+)={self.rank_pplus} rank(P-)={self.rank_pminus}>"
        )


def r_matrix_checks(R) -> RMatrixReport:
    P = flip_matrix()
    I = identity(4, RF1, RF0)
    R21 = mat_mul(mat_mul(P, R, RF0), P, RF0)
    triangular = mat_eq(mat_mul(R21, R, RF0), I)
    Rhat = mat_mul(P, R, RF0)
    rhat_plus_one = [[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(Rhat, I)]
    hecke = all(
        not x for row in mat_mul(mat_sub(Rhat, I), rhat_plus_one, RF0) for x in row
    )
    half = RatFunc.const(Fraction(1, 2))
    pplus = [[half * (x + y) for x, y in zip(r1, r2)] for r1, r2 in zip(Rhat, I)]
    pminus = [[half * (x - y) for x, y in zip(r1, r2)] for r1, r2 in zip(Rhat, I)]
    return RMatrixReport(triangular, hecke, rank(pplus, RF1), rank(pminus, RF1))


T_LETTERS = (("a", "b"), ("c", "d"))


def frt_relations(R, algebra: FreeAlgebra | None = None):
    """The 16 entries of R T1 T2 - T2 T1 R as free-algebra elements."""
    if algebra is None:
        algebra = FreeAlgebra("frt", ["b", "a", "d", "c"])

    def t(i, j):
        return NCPoly.word((T_LETTERS[i][j],))

    entries = []
    for i in range(2):
        for j in range(2):
            for k in range(2):
                for l in range(2):
                    lhs = NCPoly.zero()
                    rhs = NCPoly.zero()
                    for m in range(2):
                        for n in range(2):
                            r1 = R[2 * i + j][2 * m + n]
                            if r1:
                                lhs = lhs + (t(m, k) * t(n, l)).scale(r1)
                            r2 = R[2 * m + n][2 * k + l]
                            if r2:
                                rhs = rhs + (t(j, n) * t(i, m)).scale(r2)
                    entries.append(lhs - rhs)
    return entries


def orient_relations(polys, algebra: FreeAlgebra):
    """Turn homogeneous-degree-<=2 relation polynomials into an inter-reduced
    rule set by Gaussian elimination over the finite word basis, pivoting on
    the word of maximal (descents, rank-sequence) key."""

    def key(w):
        from .ncpoly import _descent_key

        return _descent_key(w, algebra.rank) + tuple(algebra.rank[x] for x in w)

    words = set()
    for p in polys:
        words.update(p.words())
    cols = sorted(words, key=key, reverse=True)
    col_ix = {w: i for i, w in enumerate(cols)}
    rows = [
        [p.terms.get(w, RF0) for w in cols] for p in polys if not p.is_zero
    ]
    from .linalg import rref

    red, pivots = rref(rows, RF1)
    rules = {}
    for row, piv in zip(red, pivots):
        lhs = cols[piv]
        rhs = NCPoly(
            {cols[j]: -row[j] for j in range(len(cols)) if j != piv and row[j]}
        )
        rules[lhs] = rhs
    return rules


def quantum_determinant(pres: HopfPresentation):
    """The determinant ad - bc + hac with its commutation/group-like report."""
    h = RatFunc.var("h")
    g = RatFunc.var("g")
    if pres.name == "sl":
        h_val, g_val = h, h
    else:
        h_val, g_val = h, g
    W = NCPoly.word
    det_poly = W(("a", "d")) - W(("b", "c")) + W(("a", "c")).scale(h_val)
    det = pres.normalize(det_poly)
    x = {l: NCPoly.word((l,)) for l in "abcd"}
    hg = h_val - g_val
    cD = pres.mul(x["c"], det)
    residuals = {
        "Da": pres.normalize(pres.mul(det, x["a"]) - pres.mul(x["a"], det) - cD.scale(hg)),
        "Dd": pres.normalize(pres.mul(det, x["d"]) - pres.mul(x["d"], det) + cD.scale(hg)),
        "Dc": pres.normalize(pres.mul(det, x["c"]) - pres.mul(x["c"], det)),
        "Db": pres.normalize(
            pres.mul(det, x["b"])
            - pres.mul(x["b"], det)
            - (pres.mul(x["d"], det) - pres.mul(x["a"], det) - cD.scale(hg)).scale(hg)
        ),
    }
    group_like = pres.delta(det) == tensor_normalize(
        TensorNCPoly.of(det, det), pres.system
    )
    counit_one = pres.counit_of(det) == RF1
    return det, {
        "commutation_residuals": residuals,
        "commutation_ok": all(r.is_zero for r in residuals.values()),
        "group_like": group_like,
        "counit_one": counit_one,
    }


class HopfAxiomReport:
    def __init__(self, results):
        self.results = results  # letter -> dict of named booleans

    @property
    def all_pass(self):
        return all(all(v.values()) for v in self.results.values())

    def failures(self):
        return {
            l: [k for k, ok in v.items() if not ok]
            for l, v in self.results.items()
            if not all(v.values())
        }


def hopf_axiom_checks(pres: HopfPresentation, letters=None) -> HopfAxiomReport:
    """Coassociativity, counit, and antipode axioms on generators."""
    letters = letters or pres.algebra.letters
    results = {}
    for xl in letters:
        x = pres.gen(xl)
        d = pres.delta(x)
        coassoc = pres.delta_on_leg(d, 0) == pres.delta_on_leg(d, 1)
        counit_l = pres.counit_tensor_collapse(d, 0) == pres.normalize(x)
        counit_r = pres.counit_tensor_collapse(d, 1) == pres.normalize(x)
        row = {
            "coassociative": coassoc,
            "counit_left": counit_l,
            "counit_right": counit_r,
        }
        if pres.antipode is not None:
            eps = pres.counit_of(x)
            lhs1 = NCPoly.zero()
            lhs2 = NCPoly.zero()
            for (u, v), c in d.terms.items():
                lhs1 = lhs1 + (pres.antipode_of(NCPoly.word(u)) * NCPoly.word(v)).scale(c)
                lhs2 = lhs2 + (NCPoly.word(u) * pres.antipode_of(NCPoly.word(v))).scale(c)
            target = NCPoly.unit(eps)
            row["antipode_left"] = pres.normalize(lhs1) == pres.normalize(target)
            row["antipode_right"] = pres.normalize(lhs2) == pres.normalize(target)
        results[xl] = row
    return HopfAxiomReport(results)
