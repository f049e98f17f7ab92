"""Matrix realizations on tensors and on polynomials in an n x k matrix of variables.

Convention: matrices act on column vectors, rows are indexed by the top of a
diagram and columns by its bottom.  With this choice the matrix of a product
is the product of the matrices in the same order.
"""

import itertools
from fractions import Fraction
from math import comb

from .linalg import RowSpace, as_sparse, rank
from .partitions import (BOTTOM, TOP, BoundError, MultisetPartition, SetPartition,
                         canonical_blocks, color_map, is_coarsening, representative,
                         young_subgroup)

MAX_TENSOR_DIM = 4096


def _check_dim(d, what):
    if d > MAX_TENSOR_DIM:
        raise BoundError(f"{what} dimension {d} exceeds the bound {MAX_TENSOR_DIM}")


def tensor_indices(n, r):
    _check_dim(n ** r, "tensor")
    return list(itertools.product(range(1, n + 1), repeat=r))


def equality_pattern(top, bottom):
    """The set partition of positions induced by equal values in (top, bottom)."""
    groups = {}
    for pos, val in enumerate(top, start=1):
        groups.setdefault(val, []).append(3 * pos + TOP)
    for pos, val in enumerate(bottom, start=1):
        groups.setdefault(val, []).append(3 * pos + BOTTOM)
    return SetPartition._raw(canonical_blocks(groups.values()), len(top), 2)


def orbit_matrix(pi, n):
    idx = tensor_indices(n, pi.r)
    return [[1 if equality_pattern(i, j) == pi else 0 for j in idx] for i in idx]


def diagram_matrix(pi, n):
    idx = tensor_indices(n, pi.r)
    return [[1 if is_coarsening(equality_pattern(i, j), pi) else 0 for j in idx] for i in idx]


def slot_permutation_matrix(g, n, r):
    """Matrix of a permutation g of [n] acting on every tensor slot."""
    idx = tensor_indices(n, r)
    pos = {t: a for a, t in enumerate(idx)}
    M = [[0] * len(idx) for _ in idx]
    for b, t in enumerate(idx):
        M[pos[tuple(g[v - 1] for v in t)]][b] = 1
    return M


# ---------------------------------------------------------------- monomials

def monomials(n, r, k):
    """Degree-r monomials in x[i,j], each a sorted tuple of (i, j) pairs."""
    _check_dim(comb(n * k + r - 1, r), "monomial")
    variables = [(i, j) for i in range(1, n + 1) for j in range(1, k + 1)]
    return list(itertools.combinations_with_replacement(variables, r))


def monomial_composition(u, k):
    comp = [0] * k
    for _, j in u:
        comp[j - 1] += 1
    return tuple(comp)


def format_monomial(u):
    out = []
    for var, group in itertools.groupby(u):
        d = len(list(group))
        out.append(f"x[{var[0]},{var[1]}]" + (f"^{d}" if d > 1 else ""))
    return "*".join(out)


def phi(tensor, comp):
    """The monomial prod_t x[i_t, color of slot t]."""
    cmap = color_map(tuple(comp))
    return tuple(sorted((i, cmap[t]) for t, i in enumerate(tensor)))


def phi_section(u, comp):
    """A tensor index mapped to u by phi for the composition comp."""
    by_color = {}
    for i, j in u:
        by_color.setdefault(j, []).append(i)
    out = []
    for color, part in enumerate(comp, start=1):
        vals = sorted(by_color.get(color, []))
        if len(vals) != part:
            raise ValueError("monomial does not have the given column sums")
        out.extend(vals)
    return tuple(out)


def _transport(p, n, pattern_ok):
    """Matrix of phi_a s_a Z_pi s_b phi_b^{-1} on monomials, for Z given by pattern_ok."""
    r, k = p.r, p.k
    a, b = p.top_composition(), p.bottom_composition()
    mons = monomials(n, r, k)
    pos = {u: i for i, u in enumerate(mons)}
    pi = representative(p, [a, b])
    group = young_subgroup(b)
    w = Fraction(1, len(group))
    tops = tensor_indices(n, r)
    M = [[Fraction(0)] * len(mons) for _ in mons]
    for col, u in enumerate(mons):
        if monomial_composition(u, k) != b:
            continue
        j = phi_section(u, b)
        for s in group:
            js = tuple(j[s[t] - 1] for t in range(r))
            for i in tops:
                if pattern_ok(equality_pattern(i, js), pi):
                    M[pos[phi(i, a)]][col] += w
    return M


def mp_matrix(p, n):
    """The diagram-like basis element D_p as an operator on degree-r monomials."""
    return _transport(p, n, lambda pat, pi: is_coarsening(pat, pi))


def olike_matrix(p, n):
    """The orbit-like basis element O_p on monomials."""
    return _transport(p, n, lambda pat, pi: pat == pi)


def monomial_pattern(top, bottom, k):
    """The multiset partition grouping the variables of two monomials by row index."""
    groups = {}
    for i, j in top:
        groups.setdefault(i, []).append(3 * j + TOP)
    for i, j in bottom:
        groups.setdefault(i, []).append(3 * j + BOTTOM)
    return MultisetPartition._raw(canonical_blocks(groups.values()), len(top), k, 2)


def oz_matrix(p, n):
    """Orbit basis element X_p: entry 1 exactly when the pair of monomials has pattern p."""
    mons = monomials(n, p.r, p.k)
    return [[1 if monomial_pattern(u, v, p.k) == p else 0 for v in mons] for u in mons]


# ---------------------------------------------------------------- centralizer

def _row_transpositions(n):
    for s in range(1, n):
        g = list(range(1, n + 1))
        g[s - 1], g[s] = g[s], g[s - 1]
        yield tuple(g)


def _act_monomial(g, u):
    return tuple(sorted((g[i - 1], j) for i, j in u))


def centralizer_check(M, n, r, k):
    """True when M commutes with every adjacent transposition of the row index."""
    mons = monomials(n, r, k)
    if len(M) != len(mons):
        raise ValueError("matrix size does not match the monomial basis")
    pos = {u: i for i, u in enumerate(mons)}
    for g in _row_transpositions(n):
        perm = [pos[_act_monomial(g, u)] for u in mons]
        for a in range(len(mons)):
            row, grow = M[a], M[perm[a]]
            for b in range(len(mons)):
                if row[b] != grow[perm[b]]:
                    return False
    return True


def centralizer_dimension(n, r, k):
    """Dimension of the commutant of the row-permutation action, by exact elimination."""
    mons = monomials(n, r, k)
    m = len(mons)
    pos = {u: i for i, u in enumerate(mons)}
    space = RowSpace()
    for g in _row_transpositions(n):
        perm = [pos[_act_monomial(g, u)] for u in mons]
        for a in range(m):
            for b in range(m):
                x, y = a * m + b, perm[a] * m + perm[b]
                if x != y:
                    space.add({x: 1, y: -1})
    return m * m - len(space)


def pair_orbit_count(n, r, k):
    """Number of orbits of the symmetric group on pairs of monomials (oracle)."""
    mons = monomials(n, r, k)
    seen = set()
    perms = list(itertools.permutations(range(1, n + 1)))
    count = 0
    for u in mons:
        for v in mons:
            if (u, v) in seen:
                continue
            count += 1
            for g in perms:
                seen.add((_act_monomial(g, u), _act_monomial(g, v)))
    return count


def linearly_independent(matrices):
    return rank([as_sparse(M) for M in matrices]) == len(matrices)


def matrix_to_json(M):
    return [[str(Fraction(v)) for v in row] for row in M]
