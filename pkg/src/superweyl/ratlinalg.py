"""Exact linear algebra over the rationals.

Matrices are lists of rows, entries are Fraction (or int, coerced on the
fly).  Everything here is straight Gaussian elimination; no pivoting
heuristics are needed since the arithmetic is exact.
"""

from fractions import Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


def frac(x):
    return x if isinstance(x, Fraction) else Fraction(x)


def row_echelon(rows):
    """Reduced row echelon form.

    Returns (rref_rows, pivot_columns).  The input is not modified.
    """
    m = [[frac(x) for x in row] for row in rows]
    n_rows = len(m)
    n_cols = len(m[0]) if n_rows else 0
    pivots = []
    r = 0
    for c in range(n_cols):
        pr = None
        for i in range(r, n_rows):
            if m[i][c] != 0:
                pr = i
                break
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        inv = ONE / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(n_rows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == n_rows:
            break
    return m, pivots


def rank(rows):
    if not rows:
        return 0
    return len(row_echelon(rows)[1])


def nullspace(rows, n_cols=None):
    """Basis of the right kernel {x : M x = 0}, as a list of vectors."""
    if not rows:
        return [] if not n_cols else [
            [ONE if i == j else ZERO for j in range(n_cols)] for i in range(n_cols)
        ]
    n_cols = len(rows[0]) if n_cols is None else n_cols
    rref, pivots = row_echelon(rows)
    pivot_set = set(pivots)
    free = [c for c in range(n_cols) if c not in pivot_set]
    basis = []
    for fc in free:
        v = [ZERO] * n_cols
        v[fc] = ONE
        for r, pc in enumerate(pivots):
            v[pc] = -rref[r][fc]
        basis.append(v)
    return basis


class SpanBuilder:
    """Incrementally built row space with exact membership queries."""

    def __init__(self, n_cols):
        self.n_cols = n_cols
        self.rows = []      # kept in echelon form (not reduced)
        self.pivots = []    # pivot column of each row

    def _reduce(self, vec):
        v = [frac(x) for x in vec]
        for row, p in zip(self.rows, self.pivots):
            if v[p] != 0:
                f = v[p] / row[p]
                v = [a - f * b for a, b in zip(v, row)]
        return v

    def contains(self, vec):
        return all(x == 0 for x in self._reduce(vec))

    def add(self, vec):
        """Add a vector; returns True if it enlarged the span."""
        v = self._reduce(vec)
        for c in range(self.n_cols):
            if v[c] != 0:
                # keep rows sorted by pivot column
                i = 0
                while i < len(self.pivots) and self.pivots[i] < c:
                    i += 1
                self.rows.insert(i, v)
                self.pivots.insert(i, c)
                return True
        return False

    def add_all(self, vecs):
        for v in vecs:
            self.add(v)

    @property
    def dim(self):
        return len(self.rows)

    def basis(self):
        return [list(r) for r in self.rows]

    def equals(self, other):
        if self.dim != other.dim:
            return False
        return all(other.contains(r) for r in self.rows)


def span_dim(vectors, n_cols):
    sb = SpanBuilder(n_cols)
    sb.add_all(vectors)
    return sb.dim


def solve(rows, target):
    """One exact solution x of M x = target, or None if inconsistent."""
    if not rows:
        return None
    n_cols = len(rows[0])
    aug = [list(row) + [t] for row, t in zip(rows, target)]
    rref, pivots = row_echelon(aug)
    if n_cols in pivots:
        return None
    x = [ZERO] * n_cols
    for r, p in enumerate(pivots):
        x[p] = rref[r][n_cols]
    return x
