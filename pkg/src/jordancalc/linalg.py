"""Exact linear algebra over any field whose elements support +,-,*,/ and
truthiness (zero is falsy).  Matrices are lists of lists; no floats anywhere.
"""

from __future__ import annotations


def mat_mul(a, b, zero):
    n, k, m = len(a), len(b), len(b[0])
    out = [[zero for _ in range(m)] for _ in range(n)]
    for i in range(n):
        ai = a[i]
        oi = out[i]
        for t in range(k):
            x = ai[t]
            if not x:
                continue
            bt = b[t]
            for j in range(m):
                if bt[j]:
                    oi[j] = oi[j] + x * bt[j]
    return out


def mat_add(a, b):
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_sub(a, b):
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_scale(a, c):
    return [[c * x for x in row] for row in a]


def identity(n, one, zero):
    return [[one if i == j else zero for j in range(n)] for i in range(n)]


def transpose(a):
    return [list(col) for col in zip(*a)]


def kron(a, b, zero):
    n, m = len(a), len(a[0])
    p, q = len(b), len(b[0])
    out = [[zero for _ in range(m * q)] for _ in range(n * p)]
    for i in range(n):
        for j in range(m):
            x = a[i][j]
            if not x:
                continue
            for k in range(p):
                for l in range(q):
                    if b[k][l]:
                        out[i * p + k][j * q + l] = x * b[k][l]
    return out


def mat_eq(a, b):
    return all(
        not (x - y) for ra, rb in zip(a, b) for x, y in zip(ra, rb)
    )


def mat_inverse(a, one, zero):
    """Gauss-Jordan inverse; raises ValueError when singular."""
    n = len(a)
    m = [list(row) + [one if i == j else zero for j in range(n)] for i, row in enumerate(a)]
    for col in range(n):
        piv = None
        for r in range(col, n):
            if m[r][col]:
                piv = r
                break
        if piv is None:
            raise ValueError("matrix is singular")
        m[col], m[piv] = m[piv], m[col]
        inv = one / m[col][col]
        m[col] = [inv * x for x in m[col]]
        for r in range(n):
            if r != col and m[r][col]:
                f = m[r][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    return [row[n:] for row in m]


class RowSpan:
    """Incremental row space over a field: reduce rows against stored pivots."""

    def __init__(self, ncols, one):
        self.ncols = ncols
        self.one = one
        self.pivots = {}  # column -> reduced row with 1 in that column

    def reduce(self, row):
        row = list(row)
        for col, prow in self.pivots.items():
            if row[col]:
                f = row[col]
                row = [x - f * y for x, y in zip(row, prow)]
        return row

    def add(self, row) -> bool:
        """Reduce and insert; returns True if the row was independent."""
        row = self.reduce(row)
        for col in range(self.ncols):
            if row[col]:
                inv = self.one / row[col]
                row = [inv * x for x in row]
                for c2, prow in self.pivots.items():
                    if prow[col]:
                        f = prow[col]
                        self.pivots[c2] = [x - f * y for x, y in zip(prow, row)]
                self.pivots[col] = row
                return True
        return False

    @property
    def rank(self):
        return len(self.pivots)


def rank(rows, one):
    if not rows:
        return 0
    span = RowSpan(len(rows[0]), one)
    for r in rows:
        span.add(r)
    return span.rank


def rref(rows, one):
    """Reduced row echelon form; returns (rows, pivot_columns)."""
    rows = [list(r) for r in rows]
    if not rows:
        return rows, []
    ncols = len(rows[0])
    pivots = []
    r = 0
    for col in range(ncols):
        piv = None
        for i in range(r, len(rows)):
            if rows[i][col]:
                piv = i
                break
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = one / rows[r][col]
        rows[r] = [inv * x for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][col]:
                f = rows[i][col]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
        if r == len(rows):
            break
    return rows, pivots


def solve_in_terms_of(rows, nunknowns, one):
    """Solve linear equations ``sum_j M[i][j] u_j + sum_k M[i][nunknowns+k] p_k = 0``
    for the u_j in terms of the trailing "parameter" columns.

    Returns (solution, leftover) where solution[j] is the list of parameter
    coefficients for u_j (so u_j = sum_k solution[j][k] * p_k) and leftover is
    the list of reduced rows touching only parameter columns (identities the
    parameters must satisfy; empty when the system imposes none).

    Raises ValueError when some unknown is undetermined.
    """
    red, pivots = rref(rows, one)
    sol = [None] * nunknowns
    leftover = []
    zero = one - one
    for row, pcol in zip(red, pivots + [None] * len(red)):
        nz = [j for j, x in enumerate(row) if x]
        if not nz:
            continue
        if nz[0] >= nunknowns:
            leftover.append(row[nunknowns:])
            continue
        j = nz[0]
        if any(k < nunknowns and k != j for k in nz):
            raise ValueError("unknowns remain coupled after elimination")
        sol[j] = [zero - row[nunknowns + k] for k in range(len(row) - nunknowns)]
    missing = [j for j, s in enumerate(sol) if s is None]
    if missing:
        raise ValueError(f"underdetermined: no pivot for unknowns {missing}")
    return sol, leftover


def affine_solve(rows, rhs, one):
    """General solution of M x = rhs.

    Returns (particular, basis) where basis spans the null space; raises
    ValueError when inconsistent.
    """
    if not rows:
        return [], []
    ncols = len(rows[0])
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    red, pivots = rref(aug, one)
    zero = one - one
    for row in red:
        if any(row[:ncols]):
            continue
        if row[ncols]:
            raise ValueError("inconsistent linear system")
    particular = [zero] * ncols
    piv_set = set(pivots) - {ncols}
    for row, col in zip(red, pivots):
        if col < ncols:
            particular[col] = row[ncols]
    free = [c for c in range(ncols) if c not in piv_set]
    basis = []
    for f in free:
        vec = [zero] * ncols
        vec[f] = one
        for row, col in zip(red, pivots):
            if col < ncols:
                vec[col] = zero - row[f]
        basis.append(vec)
    return particular, basis
