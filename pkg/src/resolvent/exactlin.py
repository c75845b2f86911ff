"""Exact rational sparse linear algebra.

Everything downstream (Betti numbers, spectral sequence dimensions) reduces
to ranks of sparse matrices over Q.  Entries are Python ints or
``fractions.Fraction`` -- arbitrary precision, no floating point anywhere.
Rank is computed by fraction-aware sparse Gaussian elimination with a
Markowitz-style pivot rule (least expected fill-in, ties broken by smallest
row index) so that results and run logs are deterministic.
"""

from fractions import Fraction
from heapq import heappush, heappop

Rational = Fraction


def _check_value(v):
    if isinstance(v, float):
        raise TypeError("floating point entries are not allowed: %r" % (v,))
    if not isinstance(v, (int, Fraction)):
        raise TypeError("matrix entries must be int or Fraction, got %r" % (v,))
    return v


class ShapeError(ValueError):
    pass


class SparseMatrix:
    """Immutable sparse matrix over Q, stored as dict-of-rows."""

    def __init__(self, n_rows, n_cols, rows=None):
        if n_rows < 0 or n_cols < 0:
            raise ShapeError("negative dimensions")
        self.n_rows = n_rows
        self.n_cols = n_cols
        self._rows = {}
        if rows:
            for r, cols in rows.items():
                if not 0 <= r < n_rows:
                    raise ShapeError("row index %d out of range" % r)
                clean = {}
                for c, v in cols.items():
                    if not 0 <= c < n_cols:
                        raise ShapeError("col index %d out of range" % c)
                    _check_value(v)
                    if v != 0:
                        clean[c] = v
                if clean:
                    self._rows[r] = clean

    @classmethod
    def from_triples(cls, n_rows, n_cols, triples):
        rows = {}
        for r, c, v in triples:
            if v == 0:
                continue
            row = rows.setdefault(r, {})
            if c in row:
                raise ValueError("duplicate entry at (%d, %d)" % (r, c))
            row[c] = v
        return cls(n_rows, n_cols, rows)

    @classmethod
    def identity(cls, n):
        return cls(n, n, {i: {i: 1} for i in range(n)})

    @classmethod
    def zero(cls, n_rows, n_cols):
        return cls(n_rows, n_cols)

    def triples(self):
        for r in sorted(self._rows):
            row = self._rows[r]
            for c in sorted(row):
                yield r, c, row[c]

    def get(self, r, c):
        return self._rows.get(r, {}).get(c, 0)

    @property
    def nnz(self):
        return sum(len(row) for row in self._rows.values())

    def is_zero(self):
        return not self._rows

    def transpose(self):
        rows = {}
        for r, row in self._rows.items():
            for c, v in row.items():
                rows.setdefault(c, {})[r] = v
        return SparseMatrix(self.n_cols, self.n_rows, rows)

    def __eq__(self, other):
        return (isinstance(other, SparseMatrix)
                and self.n_rows == other.n_rows
                and self.n_cols == other.n_cols
                and self._rows == other._rows)

    def __repr__(self):
        return "SparseMatrix(%dx%d, nnz=%d)" % (self.n_rows, self.n_cols, self.nnz)


def compose(a, b):
    """Exact product a*b (a applied after b: (a*b)x = a(bx))."""
    if a.n_cols != b.n_rows:
        raise ShapeError("cannot compose %dx%d with %dx%d"
                         % (a.n_rows, a.n_cols, b.n_rows, b.n_cols))
    # (a*b)[r, c] = sum_k a[r, k] * b[k, c]; iterate over a's rows.
    rows = {}
    brows = b._rows
    for r, arow in a._rows.items():
        acc = {}
        for k, av in arow.items():
            brow = brows.get(k)
            if not brow:
                continue
            for c, bv in brow.items():
                s = acc.get(c, 0) + av * bv
                if s:
                    acc[c] = s
                elif c in acc:
                    del acc[c]
        if acc:
            rows[r] = acc
    return SparseMatrix(a.n_rows, b.n_cols, rows)


def rank(m):
    """Rank over Q by sparse Gaussian elimination.

    Pivot choice: among the shortest active rows take the entry minimising
    (row_len - 1) * (col_len - 1), preferring unit (+-1) pivots; ties go to
    the smallest row index.  Unit pivots keep the arithmetic in Z, so
    Fractions only appear when a sub-matrix has no +-1 entry left.
    """
    rows = {r: dict(cols) for r, cols in m._rows.items()}
    colidx = {}
    for r, row in rows.items():
        for c in row:
            colidx.setdefault(c, set()).add(r)

    heap = []
    for r, row in rows.items():
        heappush(heap, (len(row), r))

    rk = 0
    while heap:
        ln, r = heappop(heap)
        row = rows.get(r)
        if row is None or len(row) != ln:
            continue  # stale heap entry
        # collect the batch of shortest rows currently available
        batch = [r]
        spill = []
        while heap and heap[0][0] == ln:
            ln2, r2 = heappop(heap)
            row2 = rows.get(r2)
            if row2 is None or len(row2) != ln2:
                continue
            batch.append(r2)
        batch.sort()
        best = None
        for rr in batch:
            rrow = rows[rr]
            for c, v in rrow.items():
                unit = 0 if v == 1 or v == -1 else 1
                score = (unit, (ln - 1) * (len(colidx[c]) - 1), rr, c)
                if best is None or score < best[0]:
                    best = (score, rr, c, v)
        for rr in batch:
            if rr != best[1]:
                spill.append((ln, rr))
        for item in spill:
            heappush(heap, item)

        _, pr, pc, pv = best
        prow = rows.pop(pr)
        for c in prow:
            colidx[c].discard(pr)
        rk += 1
        # eliminate column pc from every other row holding it
        targets = colidx.pop(pc, set())
        unit_pivot = pv == 1 or pv == -1
        for tr in targets:
            trow = rows[tr]
            tv = trow[pc]
            factor = tv * pv if unit_pivot else Fraction(tv, 1) / pv
            for c, v in prow.items():
                if c == pc:
                    del trow[c]
                    colidx[c].discard(tr) if c in colidx else None
                    continue
                nv = trow.get(c, 0) - factor * v
                if nv:
                    if c not in trow:
                        colidx.setdefault(c, set()).add(tr)
                    trow[c] = nv
                else:
                    if c in trow:
                        del trow[c]
                        colidx[c].discard(tr)
            if trow:
                heappush(heap, (len(trow), tr))
            else:
                del rows[tr]
    return rk


def kernel_dim(m):
    """dim ker over Q, i.e. n_cols - rank."""
    return m.n_cols - rank(m)
