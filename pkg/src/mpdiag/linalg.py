"""Exact Gaussian elimination over the rationals on sparse rows."""

from fractions import Fraction


def _reduce(row, pivots):
    """Reduce a sparse row {col: value} against rows keyed by pivot column."""
    row = dict(row)
    changed = True
    while changed:
        changed = False
        for col in sorted(row):
            if col in pivots and row.get(col):
                f = row[col]
                for c, v in pivots[col].items():
                    nv = row.get(c, 0) - f * v
                    if nv:
                        row[c] = nv
                    else:
                        row.pop(c, None)
                changed = True
                break
    return row


class RowSpace:
    """Incrementally maintained echelon basis of a space of sparse rational vectors."""

    def __init__(self):
        self.pivots = {}

    def reduce(self, vec):
        row = {c: Fraction(v) for c, v in vec.items() if v}
        out = {}
        while row:
            col = min(row)
            v = row.pop(col)
            if col in self.pivots:
                for c, pv in self.pivots[col].items():
                    if c == col:
                        continue
                    nv = row.get(c, 0) - v * pv
                    if nv:
                        row[c] = nv
                    else:
                        row.pop(c, None)
            else:
                out[col] = v
        return out

    def add(self, vec):
        """Add a vector; return True when it enlarged the space."""
        red = self.reduce(vec)
        if not red:
            return False
        col = min(red)
        inv = 1 / red[col]
        new = {c: v * inv for c, v in red.items()}
        for p, prow in self.pivots.items():
            f = prow.get(col)
            if f:
                for c, v in new.items():
                    nv = prow.get(c, 0) - f * v
                    if nv:
                        prow[c] = nv
                    else:
                        prow.pop(c, None)
        self.pivots[col] = new
        return True

    def __len__(self):
        return len(self.pivots)


def rank(vectors):
    space = RowSpace()
    for v in vectors:
        space.add(v)
    return len(space)


def solve(columns, target):
    """Coefficients c with sum_i c_i columns[i] == target, or None if inconsistent.

    Vectors are dicts keyed by any hashable coordinate.  Free variables are set
    to zero.
    """
    keys = {}
    for v in list(columns) + [target]:
        for key in v:
            keys.setdefault(key, len(keys))
    m = len(columns)
    rows = []
    for key, i in keys.items():
        row = {j: Fraction(col[key]) for j, col in enumerate(columns) if col.get(key)}
        rhs = Fraction(target.get(key, 0))
        if row or rhs:
            rows.append((row, rhs))
    pivots = []
    used = [False] * len(rows)
    for col in range(m):
        pr = next((i for i in range(len(rows)) if not used[i] and rows[i][0].get(col)), None)
        if pr is None:
            continue
        used[pr] = True
        prow, prhs = rows[pr]
        inv = 1 / prow[col]
        prow = {c: v * inv for c, v in prow.items()}
        prhs *= inv
        rows[pr] = (prow, prhs)
        for i in range(len(rows)):
            if i != pr and rows[i][0].get(col):
                row, rhs = rows[i]
                f = row[col]
                for c, v in prow.items():
                    nv = row.get(c, 0) - f * v
                    if nv:
                        row[c] = nv
                    else:
                        row.pop(c, None)
                rows[i] = (row, rhs - f * prhs)
        pivots.append((col, pr))
    for i, (row, rhs) in enumerate(rows):
        if not used[i] and not row and rhs:
            return None
    sol = [Fraction(0)] * m
    for col, pr in pivots:
        sol[col] = rows[pr][1]
    return sol


def nullspace_dimension(equations, unknowns):
    """Dimension of the solution space of homogeneous sparse equations."""
    return unknowns - rank(equations)


def matmul(A, B):
    n, m, p = len(A), len(B), len(B[0]) if B else 0
    out = [[Fraction(0)] * p for _ in range(n)]
    for i in range(n):
        Ai = A[i]
        oi = out[i]
        for k in range(m):
            a = Ai[k]
            if a:
                Bk = B[k]
                for j in range(p):
                    if Bk[j]:
                        oi[j] += a * Bk[j]
    return out


def as_sparse(matrix):
    """Flatten a dense matrix to a sparse vector keyed by (row, col)."""
    return {(i, j): v for i, row in enumerate(matrix) for j, v in enumerate(row) if v}
