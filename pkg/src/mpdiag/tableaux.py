"""Set-partition and multiset-partition tableaux and the irreducible modules.

A tableau stores its first row as the sorted tuple of its non-empty boxes
(the empty boxes are implied by the shape) and the rows above it as tuples of
boxes.  Rows are listed bottom-up.  Boxes are sorted tuples of integers: sets
of positions for set-partition tableaux, multisets of colors otherwise.
"""

import itertools
from collections import Counter
from fractions import Fraction
from functools import lru_cache
from math import factorial

from .linalg import RowSpace, solve
from .partitions import (BOTTOM, TOP, MultisetPartition, SetPartition, color_composition,
                         color_map, multiset_partitions, perm_inverse, set_partitions_of,
                         weak_compositions, young_subgroup)
from .partition_algebra import perm_diagram
from .scalars import X, evaluate


def llkey(box):
    return tuple(sorted(box, reverse=True))


def integer_partitions(n, max_part=None):
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for p in range(min(n, max_part), 0, -1):
        for rest in integer_partitions(n - p, p):
            yield (p,) + rest


class Tableau:
    __slots__ = ("shape", "row1", "upper", "_hash")

    def __init__(self, shape, row1, upper):
        self.shape = tuple(shape)
        self.row1 = tuple(sorted((tuple(sorted(b)) for b in row1), key=llkey))
        self.upper = tuple(tuple(tuple(sorted(b)) for b in row) for row in upper)
        self._hash = None
        if len(self.upper) != len(self.shape) - 1 or any(
                len(row) != part for row, part in zip(self.upper, self.shape[1:])):
            raise ValueError("rows above the first do not match the shape")
        if len(self.row1) > self.shape[0]:
            raise ValueError("first row holds more boxes than the shape allows")
        if any(not b for row in self.upper for b in row) or any(not b for b in self.row1):
            raise ValueError("only the first row may hold empty boxes")

    @property
    def n(self):
        return sum(self.shape)

    def empties(self):
        return self.shape[0] - len(self.row1)

    def content(self):
        return tuple(sorted(self.row1 + tuple(b for row in self.upper for b in row), key=llkey))

    def rows(self):
        """All rows bottom-up, with None standing for an empty box."""
        return [(None,) * self.empties() + self.row1] + [tuple(r) for r in self.upper]

    def __eq__(self, other):
        return (isinstance(other, Tableau) and self.shape == other.shape
                and self.row1 == other.row1 and self.upper == other.upper)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.shape, self.row1, self.upper))
        return self._hash

    def sort_key(self):
        return (self.shape, tuple(llkey(b) for b in self.row1),
                tuple(tuple(llkey(b) for b in row) for row in self.upper))

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def __str__(self):
        def cell(b):
            return "[]" if b is None else "[" + ",".join(map(str, b)) + "]"
        return "(" + " / ".join("(" + ", ".join(cell(b) for b in row) + ")"
                                for row in self.rows()) + ")"

    __repr__ = __str__

    @classmethod
    def parse(cls, text):
        s = text.strip()
        if not (s.startswith("(") and s.endswith(")")):
            raise ValueError("a tableau is written ((row1) / (row2) / ...)")
        rows = []
        for chunk in s[1:-1].split("/"):
            chunk = chunk.strip()
            if not (chunk.startswith("(") and chunk.endswith(")")):
                raise ValueError(f"malformed row {chunk!r}")
            cells = []
            body = chunk[1:-1]
            for part in body.split("]"):
                part = part.strip().lstrip(",").strip()
                if not part:
                    continue
                if not part.startswith("["):
                    raise ValueError(f"malformed cell {part!r}")
                inner = part[1:].strip()
                cells.append(tuple(int(t) for t in inner.split(",")) if inner else None)
            rows.append(cells)
        shape = [len(r) for r in rows]
        row1 = [b for b in rows[0] if b is not None]
        if any(b is None for r in rows[1:] for b in r):
            raise ValueError("empty boxes belong to the first row")
        return cls(shape, row1, rows[1:])


def _grid_ok(t, strict_rows):
    rows = t.rows()
    key = [[() if b is None else llkey(b) for b in row] for row in rows]
    for i, row in enumerate(key):
        for j in range(len(row) - 1):
            if row[j] > row[j + 1] or (strict_rows and row[j] == row[j + 1] and row[j]):
                return False
        if i + 1 < len(key):
            for j, above in enumerate(key[i + 1]):
                if not row[j] < above:
                    return False
    return True


def is_standard(t):
    """Rows increase left to right and columns increase upward (last-letter order)."""
    return _grid_ok(t, strict_rows=True)


def is_semistandard(t):
    """Rows weakly increase and columns strictly increase (last-letter order)."""
    return _grid_ok(t, strict_rows=False)


def _arrangements(blocks, cells):
    """Distinct ways of placing a multiset of blocks into the given cells."""
    seen = set()
    for perm in itertools.permutations(blocks):
        if perm in seen:
            continue
        seen.add(perm)
        yield perm


def _fillings(shape, content, predicate):
    star = shape[1:]
    cells = sum(star)
    out = set()
    if cells > len(content) or len(content) - cells > shape[0]:
        return out
    counts = Counter(content)
    items = sorted(counts.items(), key=lambda t: llkey(t[0]))
    for choice in itertools.product(*(range(c + 1) for _, c in items)):
        if sum(choice) != cells:
            continue
        chosen = [b for (b, _), m in zip(items, choice) for _ in range(m)]
        rest = [b for (b, c), m in zip(items, choice) for _ in range(c - m)]
        for perm in _arrangements(chosen, cells):
            upper, pos = [], 0
            for part in star:
                upper.append(perm[pos:pos + part])
                pos += part
            t = Tableau(shape, rest, upper)
            if predicate(t):
                out.add(t)
    return out


@lru_cache(maxsize=None)
def enumerate_SSPT(shape, r):
    shape = tuple(shape)
    out = set()
    for rho in set_partitions_of(range(1, r + 1)):
        out |= _fillings(shape, [tuple(sorted(b)) for b in rho], is_standard)
    return tuple(sorted(out))


def msp_contents(r, k):
    """All multiset partitions of r colors from [k], as tuples of color tuples."""
    out = []
    for comp in weak_compositions(r, k):
        elems = [c for c, m in enumerate(comp, start=1) for _ in range(m)]
        out.extend(multiset_partitions(elems))
    return out


@lru_cache(maxsize=None)
def enumerate_SSMPT(shape, r, k):
    shape = tuple(shape)
    out = set()
    for content in msp_contents(r, k):
        out |= _fillings(shape, list(content), is_semistandard)
    return tuple(sorted(out))


def shapes(n, r):
    """Partitions of n small enough above the first row to hold r blocks."""
    return [lam for lam in integer_partitions(n) if sum(lam[1:]) <= r]


# ---------------------------------------------------------------- the action

def act_on_SPT(pi, t):
    """Apply the diagram pi to the tableau t before straightening.

    Returns None for zero, otherwise (coefficient, tableau) where the
    coefficient is x raised to the number of first-row boxes whose content
    loses its connection to the top of pi.
    """
    parent = {}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    def union(a, b):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb

    for b in pi.blocks:
        for v in b:
            parent.setdefault(v, v)
        for v in b[1:]:
            union(b[0], v)
    boxes = [(None, b) for b in t.row1]
    boxes += [((i, j), b) for i, row in enumerate(t.upper) for j, b in enumerate(row)]
    for _, b in boxes:
        for v in b[1:]:
            union(3 * b[0] + 1, 3 * v + 1)
    comps = {}
    for v in parent:
        if v % 3 == TOP:
            comps.setdefault(find(v), [[], [], 0])[0].append(v // 3)
    for pos, b in boxes:
        c = comps.setdefault(find(3 * b[0] + 1), [[], [], 0])
        if pos is None:
            c[2] += 1
        else:
            c[1].append(pos)
    row1, placed, lost = [], {}, 0
    for tops, ups, _ in comps.values():
        if len(ups) > 1:
            return None
        if ups:
            if not tops:
                return None
            placed[ups[0]] = tuple(sorted(tops))
        elif tops:
            row1.append(tuple(sorted(tops)))
        else:
            lost += 1
    upper = [[placed[(i, j)] for j in range(len(row))] for i, row in enumerate(t.upper)]
    return X ** lost, Tableau(t.shape, row1, upper)


# ---------------------------------------------------------------- straightening

def _perm_sign(seq):
    seq = list(seq)
    sign = 1
    for i in range(len(seq)):
        while seq[i] != i:
            j = seq[i]
            seq[i], seq[j] = seq[j], seq[i]
            sign = -sign
    return sign


def _sort_columns(fill):
    """Sort each column upward; return (sign, new filling) or (0, None) on a repeat."""
    rows = [list(r) for r in fill]
    sign = 1
    width = len(rows[0]) if rows else 0
    for j in range(width):
        col = [rows[i][j] for i in range(len(rows)) if j < len(rows[i])]
        if len(set(col)) < len(col):
            return 0, None
        order = sorted(range(len(col)), key=lambda i: col[i])
        sign *= _perm_sign(order)
        for i, src in enumerate(order):
            rows[i][j] = col[src]
    return sign, tuple(tuple(r) for r in rows)


@lru_cache(maxsize=None)
def garnir_straighten(fill):
    """Write the polytabloid of a filling by distinct integers in the standard basis.

    `fill` lists rows bottom-up.  Returns a tuple of (standard filling, coeff).
    """
    sign, fill = _sort_columns(fill)
    if sign == 0:
        return ()
    for i, row in enumerate(fill):
        for j in range(len(row) - 1):
            if row[j] > row[j + 1]:
                return _garnir_step(fill, i, j, sign)
    return ((fill, Fraction(sign)),)


def _garnir_step(fill, i, j, sign):
    height_j = sum(1 for row in fill if len(row) > j)
    a_pos = [(h, j) for h in range(i, height_j)]
    b_pos = [(h, j + 1) for h in range(0, i + 1)]
    positions = a_pos + b_pos
    entries = [fill[h][c] for h, c in positions]
    index = {e: n for n, e in enumerate(entries)}
    a_set = set(entries[:len(a_pos)])
    out = {}
    for chosen in itertools.combinations(sorted(entries), len(a_pos)):
        if set(chosen) == a_set:
            continue
        rest = sorted(set(entries) - set(chosen))
        new_entries = list(chosen) + rest
        s = _perm_sign([index[e] for e in new_entries])
        rows = [list(r) for r in fill]
        for (h, c), e in zip(positions, new_entries):
            rows[h][c] = e
        for std, coeff in garnir_straighten(tuple(tuple(r) for r in rows)):
            out[std] = out.get(std, 0) - sign * s * coeff
    return tuple((f, c) for f, c in out.items() if c)


def straighten(t, coeff=1):
    """Expand v_t in the standard basis; returns {standard Tableau: Fraction}."""
    letters = sorted({b for row in t.upper for b in row}, key=llkey)
    if len(letters) != sum(len(row) for row in t.upper):
        return {}
    rank = {b: n for n, b in enumerate(letters)}
    fill = tuple(tuple(rank[b] for b in row) for row in t.upper)
    out = {}
    for std, c in garnir_straighten(fill):
        upper = [[letters[e] for e in row] for row in std]
        s = Tableau(t.shape, t.row1, upper)
        out[s] = out.get(s, 0) + c * coeff
    return {s: c for s, c in out.items() if c}


def polytabloid(t):
    """The polytabloid of the rows above the first, as {tabloid: sign} (oracle)."""
    cols = {}
    for i, row in enumerate(t.upper):
        for j, b in enumerate(row):
            cols.setdefault(j, []).append(b)
    out = {}
    col_list = [cols[j] for j in sorted(cols)]
    for choice in itertools.product(*(itertools.permutations(range(len(c))) for c in col_list)):
        sign = 1
        grid = {}
        for j, (col, perm) in enumerate(zip(col_list, choice)):
            sign *= _perm_sign(list(perm))
            for h, src in enumerate(perm):
                grid[(h, j)] = col[src]
        tab = (t.row1,) + tuple(frozenset(grid[(i, j)] for j in range(len(row)))
                                for i, row in enumerate(t.upper))
        out[tab] = out.get(tab, 0) + sign
    return {k: v for k, v in out.items() if v}


# ---------------------------------------------------------------- P_r^lambda

def apply_diagram(pi, vec, n):
    """L_pi applied to a vector {standard tableau: coeff}, specialized at x = n."""
    out = {}
    for t, c in vec.items():
        res = act_on_SPT(pi, t)
        if res is None:
            continue
        w, s = res
        for std, d in straighten(s, c * evaluate(w, n)).items():
            out[std] = out.get(std, 0) + d
    return {t: c for t, c in out.items() if c}


def module_matrix_P(pi, shape, n=None):
    """Matrix of L_pi on the standard set-partition tableaux of the given shape."""
    shape = tuple(shape)
    if n is None:
        n = sum(shape)
    if n != sum(shape):
        raise ValueError("the shape must be a partition of n")
    if n < 2 * pi.r:
        raise ValueError(f"modules are built only for n >= 2r (n={n}, r={pi.r})")
    basis = enumerate_SSPT(shape, pi.r)
    if not basis:
        raise ValueError(f"shape {shape} is not admissible for r={pi.r}")
    index = {t: i for i, t in enumerate(basis)}
    d = len(basis)
    M = [[Fraction(0)] * d for _ in range(d)]
    for col, t in enumerate(basis):
        for s, c in apply_diagram(pi, {t: Fraction(1)}, n).items():
            M[index[s]][col] += c
    return M


# ---------------------------------------------------------------- MP_{r,k}^lambda

def _color_positions(comp):
    cmap = color_map(tuple(comp))
    pos = {}
    for i, c in enumerate(cmap, start=1):
        pos.setdefault(c, []).append(i)
    return pos


def tableau_composition(t, k):
    comp = [0] * k
    for b in t.content():
        for c in b:
            comp[c - 1] += 1
    return tuple(comp)


def lift_tableau(tt, comp):
    """A set-partition tableau whose coloring under comp is the given tableau."""
    pos = {c: list(v) for c, v in _color_positions(comp).items()}

    def take(box):
        return tuple(sorted(pos[c].pop(0) for c in box))

    row1 = [take(b) for b in tt.row1]
    upper = [[take(b) for b in row] for row in tt.upper]
    return Tableau(tt.shape, row1, upper)


def color_tableau(t, comp):
    cmap = color_map(tuple(comp))
    return Tableau(t.shape, [tuple(cmap[i - 1] for i in b) for b in t.row1],
                   [[tuple(cmap[i - 1] for i in b) for b in row] for row in t.upper])


def relabel(t, s):
    return Tableau(t.shape, [tuple(s[i - 1] for i in b) for b in t.row1],
                   [[tuple(s[i - 1] for i in b) for b in row] for row in t.upper])


def symmetrize(vec, comp):
    """s_a applied to a vector in the standard basis."""
    group = young_subgroup(comp)
    w = Fraction(1, len(group))
    out = {}
    for t, c in vec.items():
        for s in group:
            for std, d in straighten(relabel(t, s), c * w).items():
                out[std] = out.get(std, 0) + d
    return {t: c for t, c in out.items() if c}


def w_vector(tt, comp):
    """w for a multiset-partition tableau: the average of v_T over its coloring fiber."""
    if tableau_composition(tt, len(comp)) != tuple(comp):
        raise ValueError("color multiplicities of the tableau differ from the composition")
    t = lift_tableau(tt, comp)
    return symmetrize(straighten(t), comp)


def mp_basis(shape, r, k):
    return [t for t in enumerate_SSMPT(tuple(shape), r, k)]


def act_on_w(p, tt, n):
    """D_p applied to w_tt, as a vector in the standard set-partition basis."""
    a, b = p.top_composition(), p.bottom_composition()
    if tableau_composition(tt, p.k) != b:
        return {}
    from .partitions import representative
    pi = representative(p, [a, b])
    vec = apply_diagram(pi, w_vector(tt, b), n)
    return symmetrize(vec, a)


def module_matrix_MP(p, shape, n=None):
    """Matrix of D_p on the basis {w_T : T semistandard} of MP^lambda."""
    shape = tuple(shape)
    if n is None:
        n = sum(shape)
    if n != sum(shape):
        raise ValueError("the shape must be a partition of n")
    if n < 2 * p.r:
        raise ValueError(f"modules are built only for n >= 2r (n={n}, r={p.r})")
    basis = mp_basis(shape, p.r, p.k)
    if not basis:
        raise ValueError(f"shape {shape} is not admissible for r={p.r}, k={p.k}")
    wvecs = [_w_cached(t, shape, p.k) for t in basis]
    a = p.top_composition()
    targets = [i for i, t in enumerate(basis) if tableau_composition(t, p.k) == a]
    d = len(basis)
    M = [[Fraction(0)] * d for _ in range(d)]
    for col, t in enumerate(basis):
        vec = act_on_w(p, t, n)
        if not vec:
            continue
        coeffs = solve([wvecs[i] for i in targets], vec)
        if coeffs is None:
            raise ArithmeticError("image does not lie in the span of the w basis")
        for i, c in zip(targets, coeffs):
            M[i][col] = c
    return M


@lru_cache(maxsize=None)
def _w_cached_inner(t, shape, k):
    return tuple(w_vector(t, tableau_composition(t, k)).items())


def _w_cached(t, shape, k):
    return dict(_w_cached_inner(t, shape, k))
