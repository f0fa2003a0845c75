"""Exact linear algebra over Q(i)[q,q^-1] and over Q.

SpanSolver keeps an incrementally built echelon of sparse vectors
(word -> Scalar maps) with division-free row operations; divisions by
row content keep coefficients small, and a transformation record lets
queries be expressed back in the original basis over the fraction
field Q(i)(q).
"""

from __future__ import annotations

from fractions import Fraction

from .scalars import Scalar, ScalarFraction, ONE


class DegenerateBasisError(ValueError):
    pass


def _word_key(w):
    return (len(w), w)


def _content(maps):
    g = Scalar.zero()
    for m in maps:
        for c in m.values():
            g = g.gcd_with(c)
            if g.monomial_unit() is not None and g.max_exp() == 0:
                return None
    return g if g else None


def _divide_all(m, g):
    return {k: c.exact_div(g) for k, c in m.items()}


class _Pivot:
    __slots__ = ("lead", "lead_coef", "row", "trans")

    def __init__(self, row, trans):
        self.row = row
        self.trans = trans
        self.lead = max(row, key=_word_key)
        self.lead_coef = row[self.lead]


class SpanSolver:
    """Echelon of added vectors; answers membership and coordinates."""

    def __init__(self):
        self.pivots = []
        self.nbasis = 0
        self.dependent = []

    @property
    def rank(self):
        return len(self.pivots)

    def _eliminate(self, row, trans):
        """Reduce (row, trans) against the pivots; invariants preserved."""
        for p in self.pivots:
            e = row.get(p.lead)
            if e is None:
                continue
            pc = p.lead_coef
            new_row = {}
            for w, c in row.items():
                new_row[w] = pc * c
            for w, c in p.row.items():
                prev = new_row.get(w)
                v = -(e * c) if prev is None else prev - e * c
                if v:
                    new_row[w] = v
                elif prev is not None:
                    del new_row[w]
            new_trans = {}
            for j, c in trans.items():
                new_trans[j] = pc * c
            for j, c in p.trans.items():
                prev = new_trans.get(j)
                v = -(e * c) if prev is None else prev - e * c
                if v:
                    new_trans[j] = v
                elif prev is not None:
                    del new_trans[j]
            row, trans = new_row, new_trans
            g = _content((row, trans))
            if g is not None:
                row = _divide_all(row, g)
                trans = _divide_all(trans, g)
        return row, trans

    def add(self, vec):
        """Add a basis vector; returns True when it enlarges the span."""
        idx = self.nbasis
        self.nbasis += 1
        row = {w: c for w, c in vec.items() if c}
        if not row:
            raise DegenerateBasisError("zero vector in basis (index %d)" % idx)
        row, trans = self._eliminate(row, {idx: ONE})
        if not row:
            self.dependent.append(idx)
            return False
        piv = _Pivot(row, trans)
        # keep reduced echelon form: clear the new lead from older rows so
        # that no pivot's lead occurs in any other pivot's support
        for p in self.pivots:
            e = p.row.get(piv.lead)
            if e is None:
                continue
            pc = piv.lead_coef
            nrow = {w: pc * c for w, c in p.row.items()}
            for w, c in piv.row.items():
                prev = nrow.get(w)
                v = -(e * c) if prev is None else prev - e * c
                if v:
                    nrow[w] = v
                elif prev is not None:
                    del nrow[w]
            ntrans = {j: pc * c for j, c in p.trans.items()}
            for j, c in piv.trans.items():
                prev = ntrans.get(j)
                v = -(e * c) if prev is None else prev - e * c
                if v:
                    ntrans[j] = v
                elif prev is not None:
                    del ntrans[j]
            g = _content((nrow, ntrans))
            if g is not None:
                nrow = _divide_all(nrow, g)
                ntrans = _divide_all(ntrans, g)
            p.row = nrow
            p.trans = ntrans
            p.lead_coef = nrow[p.lead]
        self.pivots.append(piv)
        self.pivots.sort(key=lambda p: _word_key(p.lead), reverse=True)
        return True

    def contains(self, vec):
        row = {w: c for w, c in vec.items() if c}
        for p in self.pivots:
            e = row.get(p.lead)
            if e is None:
                continue
            pc = p.lead_coef
            new_row = {}
            for w, c in row.items():
                new_row[w] = pc * c
            for w, c in p.row.items():
                prev = new_row.get(w)
                v = -(e * c) if prev is None else prev - e * c
                if v:
                    new_row[w] = v
                elif prev is not None:
                    del new_row[w]
            row = new_row
        return not row

    def express(self, vec):
        """Coordinates of vec over the added vectors, or None.

        Returns a list of ScalarFraction of length nbasis; vectors that
        were dependent when added always receive coefficient zero.
        """
        row = {w: c for w, c in vec.items() if c}
        acc = {}
        scale = ONE
        for p in self.pivots:
            e = row.get(p.lead)
            if e is None:
                continue
            pc = p.lead_coef
            new_row = {}
            for w, c in row.items():
                new_row[w] = pc * c
            for w, c in p.row.items():
                prev = new_row.get(w)
                v = -(e * c) if prev is None else prev - e * c
                if v:
                    new_row[w] = v
                elif prev is not None:
                    del new_row[w]
            row = new_row
            new_acc = {j: pc * c for j, c in acc.items()}
            for j, c in p.trans.items():
                prev = new_acc.get(j)
                v = e * c if prev is None else prev + e * c
                if v:
                    new_acc[j] = v
                elif prev is not None:
                    del new_acc[j]
            acc = new_acc
            scale = pc * scale
            g = _content((row, acc, {0: scale}))
            if g is not None:
                row = _divide_all(row, g)
                acc = _divide_all(acc, g)
                scale = scale.exact_div(g)
        if row:
            return None
        return [ScalarFraction(acc.get(j, Scalar.zero()), scale)
                for j in range(self.nbasis)]


def express_in_basis(p, basis):
    """Coordinates of element p over a list of same-degree elements, or None."""
    solver = SpanSolver()
    for b in basis:
        solver.add(b.terms)
    return solver.express(p.terms)


def span_dimension(vectors):
    solver = SpanSolver()
    for v in vectors:
        if v:
            solver.add(v)
    return solver.rank


def rational_kernel_dimension(rows, ncols):
    """Kernel dimension of a matrix over Q given as list of coefficient lists."""
    mat = [[Fraction(x) for x in r] for r in rows]
    rank = 0
    col = 0
    nrows = len(mat)
    while rank < nrows and col < ncols:
        piv = None
        for r in range(rank, nrows):
            if mat[r][col]:
                piv = r
                break
        if piv is None:
            col += 1
            continue
        mat[rank], mat[piv] = mat[piv], mat[rank]
        pv = mat[rank][col]
        for r in range(rank + 1, nrows):
            if mat[r][col]:
                f = mat[r][col] / pv
                row = mat[r]
                prow = mat[rank]
                for c2 in range(col, ncols):
                    row[c2] -= f * prow[c2]
        rank += 1
        col += 1
    return ncols - rank


def rational_kernel_basis(rows, ncols):
    """Basis of the kernel over Q, by back-substitution on the RREF."""
    mat = [[Fraction(x) for x in r] for r in rows]
    nrows = len(mat)
    pivots = []
    rank = 0
    for col in range(ncols):
        piv = None
        for r in range(rank, nrows):
            if mat[r][col]:
                piv = r
                break
        if piv is None:
            continue
        mat[rank], mat[piv] = mat[piv], mat[rank]
        pv = mat[rank][col]
        mat[rank] = [x / pv for x in mat[rank]]
        for r in range(nrows):
            if r != rank and mat[r][col]:
                f = mat[r][col]
                mat[r] = [a - f * b for a, b in zip(mat[r], mat[rank])]
        pivots.append(col)
        rank += 1
        if rank == nrows:
            break
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        vec = [Fraction(0)] * ncols
        vec[fc] = Fraction(1)
        for r, pc in enumerate(pivots):
            vec[pc] = -mat[r][fc]
        basis.append(vec)
    return basis
