"""The 25-generator quantum matrix superalgebra behind SL_q(4|1).

Generators a[i,j] (1 <= i,j <= 5) carry parity p(i)+p(j) mod 2 with
p(1..4)=0, p(5)=1, ordered row-major.  The four quadratic relation
families are installed as rewrite rules sending the larger product to
smaller words; odd squares vanish.  Also provides the matrix
comultiplication and the quantum minors on columns (1,2).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .algebra import Element, Generator, Presentation, TensorPoly
from .scalars import ONE, QINV, Scalar


def manin_generators(n_even=4):
    """Row-major a[i,j] generators for M_q(n_even|1)."""
    size = n_even + 1
    gens = []
    rank = 0
    for i in range(1, size + 1):
        for j in range(1, size + 1):
            par = (index_parity_at(i, size) + index_parity_at(j, size)) % 2
            gens.append(Generator("a[%d,%d]" % (i, j), (i, j), par, rank))
            rank += 1
    return gens


def index_parity_at(i, size):
    return 1 if i == size else 0


def manin_presentation(n_even=4):
    """Manin relations on the (n_even+1) x (n_even+1) supermatrix bialgebra."""
    size = n_even + 1
    gens = manin_generators(n_even)
    pres = Presentation(gens, odd_squares_vanish=True)
    by_index = {g.index: g for g in gens}
    qm1 = QINV - Scalar.q_pow(1)  # q^-1 - q
    for g in gens:
        for h in gens:
            if g.rank >= h.rank:
                continue
            (i, j), (k, l) = g.index, h.index
            sign = ONE if not (g.parity and h.parity) else -ONE
            if i == k:
                # same row, j < l: g h = sign * q^eps * h g
                eps = 1 if index_parity_at(i, size) else -1
                pres.add_rule((h.rank, g.rank),
                              {(g.rank, h.rank): sign * Scalar.q_pow(-eps)})
            elif j == l:
                eps = 1 if index_parity_at(j, size) else -1
                pres.add_rule((h.rank, g.rank),
                              {(g.rank, h.rank): sign * Scalar.q_pow(-eps)})
            elif j > l:
                # i < k, j > l: g h = sign * h g
                pres.add_rule((h.rank, g.rank), {(g.rank, h.rank): sign})
            else:
                # i < k, j < l: g h = sign * h g + sign (q^-1 - q) a_kj a_il
                w = (by_index[(k, j)].rank, by_index[(i, l)].rank)
                pres.add_rule((h.rank, g.rank),
                              {(g.rank, h.rank): sign, w: -qm1})
    return pres


@lru_cache(maxsize=None)
def build_slq41():
    """The quantum supergroup presentation used everywhere downstream."""
    return manin_presentation(4)


@lru_cache(maxsize=None)
def build_mq2():
    """Quantum 2x2 matrix bialgebra (all-even toy case for confluence tests)."""
    return manin_presentation_even(2)


def manin_presentation_even(n):
    """Manin relations for the all-even quantum n x n matrix bialgebra."""
    gens = []
    rank = 0
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            gens.append(Generator("a[%d,%d]" % (i, j), (i, j), 0, rank))
            rank += 1
    pres = Presentation(gens)
    by_index = {g.index: g for g in gens}
    qm1 = QINV - Scalar.q_pow(1)
    for g in gens:
        for h in gens:
            if g.rank >= h.rank:
                continue
            (i, j), (k, l) = g.index, h.index
            if i == k or j == l:
                pres.add_rule((h.rank, g.rank),
                              {(g.rank, h.rank): Scalar.q_pow(1)})
            elif j > l:
                pres.add_rule((h.rank, g.rank), {(g.rank, h.rank): ONE})
            else:
                w = (by_index[(k, j)].rank, by_index[(i, l)].rank)
                pres.add_rule((h.rank, g.rank),
                              {(g.rank, h.rank): ONE, w: -qm1})
    return pres


# -- comultiplication ---------------------------------------------------------


def _delta_gen(pres, rank):
    """Delta(a[i,j]) = sum_k a[i,k] (x) a[k,j]."""
    g = pres.generators[rank]
    i, j = g.index
    size = 5
    terms = {}
    for k in range(1, size + 1):
        u = pres.generator("a[%d,%d]" % (i, k)).rank
        v = pres.generator("a[%d,%d]" % (k, j)).rank
        terms[((u,), (v,))] = ONE
    return TensorPoly(pres, terms, reduce=False)


@lru_cache(maxsize=None)
def _delta_gen_cached(rank):
    return _delta_gen(build_slq41(), rank)


def comultiply(p):
    """Matrix comultiplication extended multiplicatively with Koszul signs."""
    pres = p.alg
    if pres is not build_slq41():
        raise ValueError("comultiply is defined on the SL_q(4|1) presentation")
    out = TensorPoly.zero(pres)
    for w, c in p.terms.items():
        t = TensorPoly.unit(pres)
        for r in w:
            t = t * _delta_gen_cached(r)
        out = out + t.scale(c)
    return out


def comultiplication_respects_rules(pres=None):
    """Check Delta(lhs) == Delta(rhs) for every defining rule.

    This is the computation that pins down all sign conventions at once;
    returns a list of (lhs_word, ok) pairs.
    """
    pres = pres or build_slq41()
    results = []
    for lhs, rhs in sorted(pres.rules.items()):
        dl = comultiply(Element(pres, {lhs: ONE}))
        dr = comultiply(Element(pres, dict(rhs)))
        results.append((lhs, not (dl - dr).terms))
    return results


# -- quantum minors -----------------------------------------------------------


@dataclass(frozen=True)
class QuantumMinor:
    rows: tuple
    cols: tuple
    name: str
    value: Element

    def parity(self):
        return self.value.parity()


def minor(i, j):
    """Column-(1,2) quantum minor D[i,j] of the Grassmannian generators."""
    pres = build_slq41()
    valid = (1 <= i < j <= 4) or (1 <= i <= 4 and j == 5) or (i == j == 5)
    if not valid:
        raise ValueError("invalid minor index pair (%d, %d)" % (i, j))
    if (i, j) == (5, 5):
        value = pres.word(["a[5,1]", "a[5,2]"])
    else:
        a = pres.word(["a[%d,1]" % i, "a[%d,2]" % j])
        b = pres.word(["a[%d,2]" % i, "a[%d,1]" % j])
        value = a - b.scale(QINV)
    return QuantumMinor((i, j), (1, 2), "D[%d,%d]" % (i, j), value)


def general_minor(rows, cols):
    """Quantum 2x2 minor on arbitrary strictly increasing rows and columns."""
    r1, r2 = rows
    c1, c2 = cols
    if not (1 <= r1 < r2 <= 5 and 1 <= c1 < c2 <= 5):
        raise ValueError("minor rows/cols must be strictly increasing in 1..5")
    pres = build_slq41()
    a = pres.word(["a[%d,%d]" % (r1, c1), "a[%d,%d]" % (r2, c2)])
    b = pres.word(["a[%d,%d]" % (r1, c2), "a[%d,%d]" % (r2, c1)])
    value = a - b.scale(QINV)
    return QuantumMinor(tuple(rows), tuple(cols),
                        "Dc[%d%d;%d%d]" % (r1, r2, c1, c2), value)
