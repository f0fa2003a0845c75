"""Quantum Grassmannian Gr_q(2|0,4|1), its big cell, and chiral Minkowski.

The eleven quantum minors on columns (1,2) generate the quantum
Grassmannian; their reordering identities are re-derived by exact
linear algebra on the degree-4 component (the closure table), the
algebra is localized at D[1,2] once pure q-commutation against every
minor is machine-checked, and the generators t, tau of the quantum
chiral Minkowski superspace are built and verified against their
abstract quadratic presentation.

The antichiral space is isomorphic to the chiral one (swap the roles of
the two column pairs), so only the chiral side is constructed here.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .algebra import Generator, Presentation
from .linalg import SpanSolver, span_dimension
from .scalars import ONE, QINV, Scalar, ScalarFraction
from .supergroup import build_slq41, comultiply, minor

MINOR_ORDER = [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4),
               (1, 5), (2, 5), (3, 5), (4, 5), (5, 5)]


class ClosureError(RuntimeError):
    """A minor reordering fell outside the span of minor products."""


class LocalizationError(RuntimeError):
    """D[1,2] fails to q-commute purely with some minor."""


@lru_cache(maxsize=None)
def minor_set():
    """The eleven minors in the fixed table order."""
    return tuple(minor(i, j) for (i, j) in MINOR_ORDER)


def minor_index(i, j):
    return MINOR_ORDER.index((i, j))


@dataclass
class ClosureEntry:
    """D_b D_a = sign * q^exponent * D_a D_b + correction (a <= b)."""

    left: int
    right: int
    sign: int
    exponent: int
    correction: dict
    kind: str  # "reorder", "trivial", "square"
    ok: bool
    witness: str = ""

    @property
    def pure(self):
        return self.ok and not self.correction


@dataclass
class QCommutationTable:
    entries: dict
    all_ok: bool

    def entry(self, a, b):
        return self.entries[(a, b)]

    def d12_exponents(self):
        """Exchange exponents of every minor against D[1,2] (index 0)."""
        out = {0: 0}
        for b in range(1, len(MINOR_ORDER)):
            e = self.entries[(0, b)]
            if not (e.ok and e.sign == 1 and not e.correction):
                raise LocalizationError(
                    "D[1,2] does not q-commute purely with %s: %s"
                    % (minor_set()[b].name, e.witness or "correction present"))
            out[b] = e.exponent
        return out


def _lead_word(terms):
    return max(terms, key=lambda w: (len(w), w))


def _unit_fraction(fr):
    """Decompose a ScalarFraction equal to +-q^e; returns (sign, e) or None."""
    try:
        s = fr.as_scalar()
    except Exception:
        return None
    mono = s.monomial_unit()
    if mono is None:
        return None
    e, re, im, den = mono
    if im != 0 or den != 1 or re not in (1, -1):
        return None
    return (re, e)


def derive_closure_table(minors=None):
    """Re-derive the reordering identities among the eleven minors.

    For every ordered pair the normal form of the reversed (or squared)
    product is expressed over sorted minor products by exact linear
    algebra; absence of a solution falsifies the closure claim and is
    recorded (kind/ok), not raised.
    """
    minors = minors or minor_set()
    n = len(minors)
    vals = [m.value for m in minors]
    products = {}
    for a in range(n):
        for b in range(a, n):
            products[(a, b)] = vals[a] * vals[b]
    # sorted products: strict pairs plus even squares
    basis_pairs = []
    solver = SpanSolver()
    for a in range(n):
        for b in range(a, n):
            if a == b and minors[a].parity() == 1:
                continue
            p = products[(a, b)]
            if not p:
                continue
            solver.add(p.terms)
            basis_pairs.append((a, b))
    entries = {}
    all_ok = True
    for a in range(n):
        for b in range(a, n):
            if a == b:
                if minors[a].parity() == 0 and products[(a, b)]:
                    entries[(a, b)] = ClosureEntry(b, a, 1, 0, {}, "trivial", True)
                    continue
                # odd square (or an even one that collapsed): reduce it
                target = products[(a, b)]
                if not target:
                    entries[(a, b)] = ClosureEntry(b, a, 1, 0, {}, "square", True)
                    continue
                coeffs = solver.express(target.terms)
                if coeffs is None:
                    all_ok = False
                    entries[(a, b)] = ClosureEntry(
                        b, a, 1, 0, {}, "square", False,
                        "square not in the span of sorted minor products")
                    continue
                corr = {basis_pairs[j]: c for j, c in enumerate(coeffs) if c}
                entries[(a, b)] = ClosureEntry(b, a, 1, 0, corr, "square", True)
                continue
            target = vals[b] * vals[a]
            ab = products[(a, b)]
            if not ab:
                # the sorted product vanishes; the reversed one must be
                # expressible over the remaining sorted products
                if not target:
                    entries[(a, b)] = ClosureEntry(b, a, 1, 0, {},
                                                   "reorder", True)
                    continue
                coeffs = solver.express(target.terms)
                if coeffs is None:
                    all_ok = False
                    entries[(a, b)] = ClosureEntry(
                        b, a, 1, 0, {}, "reorder", False,
                        "not in the span of sorted minor products")
                    continue
                corr = {basis_pairs[j]: c for j, c in enumerate(coeffs) if c}
                entries[(a, b)] = ClosureEntry(b, a, 1, 0, corr,
                                               "reorder", True)
                continue
            lead = _lead_word(ab.terms)
            num = target.terms.get(lead, Scalar.zero())
            cfr = ScalarFraction(num, ab.terms[lead])
            unit = _unit_fraction(cfr)
            if unit is None:
                all_ok = False
                entries[(a, b)] = ClosureEntry(
                    b, a, 1, 0, {}, "reorder", False,
                    "leading coefficient %s is not +-q^e" % cfr.to_text())
                continue
            sign, exp = unit
            lead_scalar = cfr.as_scalar()
            residual = target - ab.scale(lead_scalar)
            if not residual:
                entries[(a, b)] = ClosureEntry(b, a, sign, exp, {},
                                               "reorder", True)
                continue
            coeffs = solver.express(residual.terms)
            if coeffs is None:
                all_ok = False
                entries[(a, b)] = ClosureEntry(
                    b, a, sign, exp, {}, "reorder", False,
                    "correction not in the span of sorted minor products")
                continue
            corr = {basis_pairs[j]: c for j, c in enumerate(coeffs) if c}
            entries[(a, b)] = ClosureEntry(b, a, sign, exp, corr,
                                           "reorder", True)
    return QCommutationTable(entries, all_ok)


@lru_cache(maxsize=None)
def closure_table():
    return derive_closure_table()


def straightening_presentation(table=None):
    """Rewrite system on the minor alphabet induced by the closure table.

    Reorders minor words toward the table order; usable for canonical
    printing when every correction is Laurent-polynomial and
    order-compatible (returns None otherwise).  Confluence of this
    system is not claimed; zero tests always go through the ambient
    algebra.
    """
    table = table or closure_table()
    minors = minor_set()
    gens = [Generator(m.name, m.rows, m.parity(), r)
            for r, m in enumerate(minors)]
    pres = Presentation(gens)
    try:
        for (a, b), e in sorted(table.entries.items()):
            if not e.ok:
                return None
            rhs = {}
            if e.kind == "trivial":
                continue
            if e.kind == "reorder":
                c = Scalar.q_pow(e.exponent)
                rhs[(a, b)] = c if e.sign == 1 else -c
                lhs = (b, a)
            else:
                lhs = (a, a)
            for (c1, c2), fr in e.correction.items():
                rhs[(c1, c2)] = fr.as_scalar()
            pres.add_rule(lhs, rhs)
    except Exception:
        return None
    return pres


class LocalizedAlgebra:
    """Gr_q with D[1,2] inverted.

    Elements are spanned by (word in the minors) * D12inv^k; moving
    D12inv through a minor uses the pure q-commutation exponents from
    the closure table, and zero tests embed into M_q(4|1) at a common
    D12inv power.
    """

    def __init__(self, minors, exponents, table):
        self.minors = minors
        self.exponents = exponents
        self.table = table
        self.ambient = build_slq41()
        self._expand_cache = {(): self.ambient.one()}
        self._d12_powers = {0: self.ambient.one()}
        self._straightener = None
        self._straightener_ready = False

    def minor_rank(self, i, j):
        return minor_index(i, j)

    def expand(self, mword):
        cached = self._expand_cache.get(mword)
        if cached is None:
            cached = self.expand(mword[:-1]) * self.minors[mword[-1]].value
            self._expand_cache[mword] = cached
        return cached

    def d12_power(self, k):
        cached = self._d12_powers.get(k)
        if cached is None:
            cached = self.d12_power(k - 1) * self.minors[0].value
            self._d12_powers[k] = cached
        return cached

    def zero(self):
        return LocalElement(self, {})

    def one(self):
        return LocalElement(self, {((), 0): ONE})

    def dinv(self, k=1):
        return LocalElement(self, {((), k): ONE})

    def from_minor(self, rank, coeff=ONE, dinv=0):
        return LocalElement(self, {((rank,), dinv): coeff})

    def straightener(self):
        if not self._straightener_ready:
            self._straightener = straightening_presentation(self.table)
            self._straightener_ready = True
        return self._straightener


class LocalElement:
    """Sum of scalar * (minor word) * D12inv^k in a LocalizedAlgebra."""

    __slots__ = ("loc", "terms")

    def __init__(self, loc, terms):
        self.loc = loc
        self.terms = {k: c for k, c in terms.items() if c}

    def __add__(self, other):
        out = dict(self.terms)
        for k, c in other.terms.items():
            prev = out.get(k)
            v = c if prev is None else prev + c
            if v:
                out[k] = v
            elif prev is not None:
                del out[k]
        return LocalElement(self.loc, out)

    def __neg__(self):
        return LocalElement(self.loc, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, s):
        return LocalElement(self.loc, {k: s * c for k, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, Scalar):
            return self.scale(other)
        exps = self.loc.exponents
        out = {}
        for (w1, k1), c1 in self.terms.items():
            for (w2, k2), c2 in other.terms.items():
                shift = k1 * sum(exps[m] for m in w2)
                c = c1 * c2 * Scalar.q_pow(shift)
                key = (w1 + w2, k1 + k2)
                prev = out.get(key)
                v = c if prev is None else prev + c
                if v:
                    out[key] = v
                elif prev is not None:
                    del out[key]
        return LocalElement(self.loc, out)

    def __rmul__(self, other):
        if isinstance(other, Scalar):
            return self.scale(other)
        return NotImplemented

    def max_dinv(self):
        return max((k for (_w, k) in self.terms), default=0)

    def to_ambient(self, power=None):
        """Image p with self = p * D12inv^power, power >= every term's k."""
        loc = self.loc
        power = self.max_dinv() if power is None else power
        acc = loc.ambient.zero()
        for (w, k), c in self.terms.items():
            if k > power:
                raise ValueError("requested power below a term's D12inv power")
            acc = acc + (loc.expand(w) * loc.d12_power(power - k)).scale(c)
        return acc

    def is_zero(self):
        return self.to_ambient().is_zero()

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, LocalElement):
            return NotImplemented
        return (self - other).is_zero()

    def straightened(self):
        """Table-sorted representative with D12inv powers cancelled."""
        loc = self.loc
        pres = loc.straightener()
        exps = loc.exponents
        terms = self.terms
        if pres is not None:
            sorted_terms = {}
            for (w, k), c in terms.items():
                for sw, sc in pres.nf_word(w):
                    key = (sw, k)
                    prev = sorted_terms.get(key)
                    v = c * sc if prev is None else prev + c * sc
                    if v:
                        sorted_terms[key] = v
                    elif prev is not None:
                        del sorted_terms[key]
            terms = sorted_terms
        out = {}
        for (w, k), c in terms.items():
            while k > 0 and w and w[0] == 0:
                c = c * Scalar.q_pow(-sum(exps[m] for m in w[1:]))
                w = w[1:]
                k -= 1
            key = (w, k)
            prev = out.get(key)
            v = c if prev is None else prev + c
            if v:
                out[key] = v
            elif prev is not None:
                del out[key]
        return LocalElement(self.loc, out)

    def to_text(self):
        if not self.terms:
            return "0"
        names = [m.name for m in self.loc.minors]
        parts = []
        for (w, k) in sorted(self.terms, key=lambda t: (len(t[0]), t[0], t[1]),
                             reverse=True):
            c = self.terms[(w, k)]
            bits = [names[m] for m in w]
            bits += ["D12inv"] * k
            body = "*".join(bits)
            ct = c.to_factor_text()
            if not bits:
                parts.append(c.to_text())
            elif ct == "1":
                parts.append(body)
            else:
                parts.append("%s*%s" % (ct, body))
        out = parts[0]
        for p in parts[1:]:
            out += " - " + p[1:] if p.startswith("-") else " + " + p
        return out

    def __repr__(self):
        return "<%s>" % self.to_text()


def localize_at_d12(minors=None, table=None):
    """Adjoin D12inv after verifying pure q-commutation of D[1,2]."""
    minors = minors or minor_set()
    table = table or closure_table()
    exponents = table.d12_exponents()
    return LocalizedAlgebra(minors, exponents, table)


@lru_cache(maxsize=None)
def localized():
    return localize_at_d12()


# -- chiral Minkowski generators ----------------------------------------------

CHIRAL_NAMES = ("t[3,1]", "t[3,2]", "t[4,1]", "t[4,2]", "tau[5,1]", "tau[5,2]")


def build_chiral_generators(loc=None):
    """The t and tau block entries as localized elements."""
    loc = loc or localized()
    mi = minor_index
    return {
        "t[3,1]": loc.from_minor(mi(2, 3), -QINV, 1),
        "t[3,2]": loc.from_minor(mi(1, 3), ONE, 1),
        "t[4,1]": loc.from_minor(mi(2, 4), -QINV, 1),
        "t[4,2]": loc.from_minor(mi(1, 4), ONE, 1),
        "tau[5,1]": loc.from_minor(mi(2, 5), -QINV, 1),
        "tau[5,2]": loc.from_minor(mi(1, 5), ONE, 1),
    }


def chiral_relation_families():
    """The eight relation families, as (family id, statement, lhs-rhs thunk).

    Each instance maps the six generator elements to the element that
    must vanish.
    """
    qm1 = QINV - Scalar.q_pow(1)

    def fam(gens, name):
        t = {(i, j): gens["t[%d,%d]" % (i, j)] for i in (3, 4) for j in (1, 2)}
        tau = {j: gens["tau[5,%d]" % j] for j in (1, 2)}
        q = Scalar.q_pow(1)
        if name == "row":
            return [("t[%d,1]*t[%d,2] - q*t[%d,2]*t[%d,1]" % (i, i, i, i),
                     t[(i, 1)] * t[(i, 2)] - (t[(i, 2)] * t[(i, 1)]).scale(q))
                    for i in (3, 4)]
        if name == "column":
            return [("t[3,%d]*t[4,%d] - q^-1*t[4,%d]*t[3,%d]" % (j, j, j, j),
                     t[(3, j)] * t[(4, j)] - (t[(4, j)] * t[(3, j)]).scale(QINV))
                    for j in (1, 2)]
        if name == "antidiagonal":
            return [("t[3,1]*t[4,2] - t[4,2]*t[3,1]",
                     t[(3, 1)] * t[(4, 2)] - t[(4, 2)] * t[(3, 1)])]
        if name == "diagonal":
            return [("t[3,2]*t[4,1] - t[4,1]*t[3,2] - (q^-1 - q)*t[4,2]*t[3,1]",
                     t[(3, 2)] * t[(4, 1)] - t[(4, 1)] * t[(3, 2)]
                     - (t[(4, 2)] * t[(3, 1)]).scale(qm1))]
        if name == "tau-tau":
            return [("tau[5,1]*tau[5,2] + q^-1*tau[5,2]*tau[5,1]",
                     tau[1] * tau[2] + (tau[2] * tau[1]).scale(QINV))]
        if name == "t-tau-same-column":
            return [("t[%d,%d]*tau[5,%d] - q^-1*tau[5,%d]*t[%d,%d]"
                     % (i, j, j, j, i, j),
                     t[(i, j)] * tau[j] - (tau[j] * t[(i, j)]).scale(QINV))
                    for i in (3, 4) for j in (1, 2)]
        if name == "t1-tau2":
            return [("t[%d,1]*tau[5,2] - tau[5,2]*t[%d,1]" % (i, i),
                     t[(i, 1)] * tau[2] - tau[2] * t[(i, 1)])
                    for i in (3, 4)]
        if name == "t2-tau1":
            return [("t[%d,2]*tau[5,1] - tau[5,1]*t[%d,2] - (q^-1 - q)*t[%d,1]*tau[5,2]"
                     % (i, i, i),
                     t[(i, 2)] * tau[1] - tau[1] * t[(i, 2)]
                     - (t[(i, 1)] * tau[2]).scale(qm1))
                    for i in (3, 4)]
        raise KeyError(name)

    return [
        ("row", "t[i,1] t[i,2] = q t[i,2] t[i,1]", fam),
        ("column", "t[3,j] t[4,j] = q^-1 t[4,j] t[3,j]", fam),
        ("antidiagonal", "t[3,1] t[4,2] = t[4,2] t[3,1]", fam),
        ("diagonal",
         "t[3,2] t[4,1] = t[4,1] t[3,2] + (q^-1 - q) t[4,2] t[3,1]", fam),
        ("tau-tau", "tau[5,1] tau[5,2] = -q^-1 tau[5,2] tau[5,1]", fam),
        ("t-tau-same-column", "t[i,j] tau[5,j] = q^-1 tau[5,j] t[i,j]", fam),
        ("t1-tau2", "t[i,1] tau[5,2] = tau[5,2] t[i,1]", fam),
        ("t2-tau1",
         "t[i,2] tau[5,1] = tau[5,1] t[i,2] + (q^-1 - q) t[i,1] tau[5,2]", fam),
    ]


@dataclass
class PresentationReport:
    records: list = field(default_factory=list)  # (family, statement, ok, witness)
    ok: bool = True

    def add(self, family, statement, ok, witness=""):
        self.records.append((family, statement, ok, witness))
        self.ok = self.ok and ok


def verify_presentation(loc=None):
    """Substitute the D-expressions into every relation family."""
    loc = loc or localized()
    gens = build_chiral_generators(loc)
    report = PresentationReport()
    for famid, famstmt, fam in chiral_relation_families():
        for stmt, elem in fam(gens, famid):
            amb = elem.to_ambient()
            ok = amb.is_zero()
            report.add(famid, stmt, ok, "" if ok else amb.to_text())
    for j in (1, 2):
        sq = gens["tau[5,%d]" % j] * gens["tau[5,%d]" % j]
        amb = sq.to_ambient()
        ok = amb.is_zero()
        report.add("odd-square", "tau[5,%d]^2 = 0" % j, ok,
                   "" if ok else amb.to_text())
    return report


# -- abstract presentation -----------------------------------------------------


@lru_cache(maxsize=None)
def build_chiral_presentation():
    """Abstract presentation on t31 < t32 < t41 < t42 < tau51 < tau52."""
    names = CHIRAL_NAMES
    parities = (0, 0, 0, 0, 1, 1)
    gens = [Generator(n, _chiral_index(n), p, r)
            for r, (n, p) in enumerate(zip(names, parities))]
    pres = Presentation(gens, odd_squares_vanish=True)
    r = {n: g.rank for n, g in zip(names, gens)}
    q = Scalar.q_pow(1)
    qm1 = QINV - q

    def add(lhs, rhs):
        pres.add_rule(lhs, rhs, validate=False)

    for i in (3, 4):
        a, b = r["t[%d,1]" % i], r["t[%d,2]" % i]
        add((b, a), {(a, b): QINV})
    for j in (1, 2):
        a, b = r["t[3,%d]" % j], r["t[4,%d]" % j]
        add((b, a), {(a, b): q})
    add((r["t[4,2]"], r["t[3,1]"]), {(r["t[3,1]"], r["t[4,2]"]): ONE})
    add((r["t[4,1]"], r["t[3,2]"]),
        {(r["t[3,2]"], r["t[4,1]"]): ONE,
         (r["t[4,2]"], r["t[3,1]"]): -qm1})
    add((r["tau[5,2]"], r["tau[5,1]"]), {(r["tau[5,1]"], r["tau[5,2]"]): -q})
    for i in (3, 4):
        for j in (1, 2):
            add((r["tau[5,%d]" % j], r["t[%d,%d]" % (i, j)]),
                {(r["t[%d,%d]" % (i, j)], r["tau[5,%d]" % j]): q})
    for i in (3, 4):
        add((r["tau[5,2]"], r["t[%d,1]" % i]),
            {(r["t[%d,1]" % i], r["tau[5,2]"]): ONE})
        add((r["tau[5,1]"], r["t[%d,2]" % i]),
            {(r["t[%d,2]" % i], r["tau[5,1]"]): ONE,
             (r["t[%d,1]" % i], r["tau[5,2]"]): -qm1})
    pres.interreduce()
    return pres


def _chiral_index(name):
    inside = name[name.index("[") + 1:-1]
    i, j = inside.split(",")
    return (int(i), int(j))


def supercommutative_dimension(n_even, n_odd, d):
    """Degree-d monomial count with n_even polynomial and n_odd exterior vars."""
    from math import comb
    return sum(comb(n_odd, k) * comb(n_even - 1 + d - k, d - k)
               for k in range(0, min(d, n_odd) + 1))


def chiral_normal_words(d):
    """Normal words of degree d in the abstract chiral presentation."""
    pres = build_chiral_presentation()
    rules = pres.rules
    words = [()]
    for _ in range(d):
        words = [w + (g,) for w in words for g in range(pres.ngens)
                 if not w or (w[-1], g) not in rules]
    return words


def substituted_span_dimension(d, loc=None):
    """Rank of the images of the degree-d abstract normal words."""
    loc = loc or localized()
    gens = build_chiral_generators(loc)
    gen_list = [gens[n] for n in CHIRAL_NAMES]
    vectors = []
    for w in chiral_normal_words(d):
        el = loc.one()
        for gidx in w:
            el = el * gen_list[gidx]
        vectors.append(el.to_ambient(power=d).terms)
    return span_dimension(vectors)


# -- coaction -------------------------------------------------------------------


@dataclass
class CoactionRecord:
    name: str
    member: bool
    failing_rows: list
    cofactors: list  # (minor name, {first-slot word: ScalarFraction})


@lru_cache(maxsize=None)
def _minor_span_solver():
    solver = SpanSolver()
    for m in minor_set():
        solver.add(m.value.terms)
    return solver


def coaction_membership(qm):
    """Check Delta(minor) lies in M_q(4|1) (x) span{minors}.

    Groups the comultiplication by first-slot word and expresses every
    second-slot polynomial over the eleven minors; the cofactor of each
    minor is accumulated as a first-slot polynomial.
    """
    minors = minor_set()
    solver = _minor_span_solver()
    t = comultiply(qm.value)
    cof = [{} for _ in minors]
    failing = []
    for u in t.first_slot_words():
        vec = t.second_slot_for(u)
        coeffs = solver.express(vec)
        if coeffs is None:
            failing.append(u)
            continue
        for mi, c in enumerate(coeffs):
            if c:
                cof[mi][u] = c
    return CoactionRecord(qm.name, not failing, failing,
                          [(m.name, cof[mi]) for mi, m in enumerate(minors)])


def cofactor_proportional_to(cofactor, target):
    """If cofactor == +-q^e * target (as word->fraction vs Element), return
    (sign, e); otherwise None."""
    if set(cofactor) != set(target.terms):
        return None
    ratio = None
    for w, c in cofactor.items():
        r = c / ScalarFraction(target.terms[w])
        if ratio is None:
            ratio = r
        elif not (ratio == r):
            return None
    return _unit_fraction(ratio) if ratio is not None else None
