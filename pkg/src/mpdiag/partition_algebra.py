"""The partition algebra P_r(x) in its diagram (L) and orbit (T) bases."""

import itertools
from fractions import Fraction
from functools import lru_cache

from .partitions import (BOTTOM, LOWER, TOP, SetPartition, canonical_blocks, coarsenings,
                         enumerate_set_partitions, kappa_fiber, row_blocks, row_of,
                         value_of, vertex, young_subgroup)
from .scalars import ONE, X, ZERO, RationalPolynomial, falling_factorial, format_coeff, format_poly, poly

DIAGRAM, ORBIT = "L", "T"


class PAElement:
    """A sparse combination of set partitions tagged with its basis."""

    __slots__ = ("basis", "terms", "r")

    def __init__(self, basis, terms, r):
        if basis not in (DIAGRAM, ORBIT):
            raise ValueError(f"unknown basis {basis!r}")
        self.basis = basis
        self.r = r
        clean = {}
        for p, c in terms.items():
            c = poly(c)
            if p.r != r or p.rows != 2:
                raise ValueError("term does not match r or has three rows")
            if not c.is_zero():
                clean[p] = c
        self.terms = clean

    @classmethod
    def basis_element(cls, basis, p):
        return cls(basis, {p: ONE}, p.r)

    def __add__(self, other):
        _check_same(self, other)
        out = dict(self.terms)
        for p, c in other.terms.items():
            out[p] = out.get(p, ZERO) + c
        return PAElement(self.basis, out, self.r)

    def __sub__(self, other):
        return self + (-1) * other

    def __rmul__(self, scalar):
        return PAElement(self.basis, {p: c * scalar for p, c in self.terms.items()}, self.r)

    def __mul__(self, other):
        if isinstance(other, PAElement):
            return multiply(self, other)
        return self.__rmul__(other)

    def __eq__(self, other):
        return (isinstance(other, PAElement) and self.basis == other.basis
                and self.r == other.r and self.terms == other.terms)

    def is_zero(self):
        return not self.terms

    def coefficient(self, p):
        return self.terms.get(p, ZERO)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = [f"{format_coeff(c)} * {self.basis}{p}"
                 for p, c in sorted(self.terms.items(), key=lambda t: t[0].sort_key())]
        return " + ".join(parts)

    __repr__ = __str__

    def to_json(self):
        return {"algebra": "P", "r": self.r, "basis": self.basis,
                "terms": [{"sp": str(p), "coeff": c.to_json()}
                          for p, c in sorted(self.terms.items(), key=lambda t: t[0].sort_key())]}

    @classmethod
    def from_json(cls, data):
        terms = {SetPartition.parse(t["sp"], r=data["r"]): RationalPolynomial.from_json(t["coeff"])
                 for t in data["terms"]}
        return cls(data["basis"], terms, data["r"])


def _check_same(e1, e2):
    if e1.r != e2.r:
        raise ValueError("elements have different r")
    if e1.basis != e2.basis:
        raise ValueError("elements are in different bases; convert first")


# ---------------------------------------------------------------- stacking

def _stack_components(p, q):
    """Union-find on p stacked over q; middle vertices carry code 3*i+1.

    Returns the list of components as lists of (vertex) with q's bottom row
    moved to the lower row.
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

    for b in p.blocks:
        for v in b:
            parent.setdefault(v, v)
        for v in b[1:]:
            union(b[0], v)
    for b in q.blocks:
        shifted = [v + 1 for v in b]  # top -> middle, bottom -> lower
        for v in shifted:
            parent.setdefault(v, v)
        for v in shifted[1:]:
            union(shifted[0], v)
    comps = {}
    for v in parent:
        comps.setdefault(find(v), []).append(v)
    return list(comps.values())


def stack(p, q):
    """The three-row set partition obtained by placing p over q."""
    if p.r != q.r:
        raise ValueError("size mismatch")
    return SetPartition._raw(canonical_blocks(_stack_components(p, q)), p.r, 3)


def diagram_product_single(p, q):
    """(c, g) with L_p L_q = x^c L_g."""
    if p.r != q.r:
        raise ValueError("size mismatch")
    c = 0
    outer_blocks = []
    for comp in _stack_components(p, q):
        part = [v if v % 3 == TOP else v - 1 for v in comp if v % 3 != BOTTOM]
        if part:
            outer_blocks.append(part)
        else:
            c += 1
    return c, SetPartition._raw(canonical_blocks(outer_blocks), p.r, 2)


# ---------------------------------------------------------------- orbit product

def gamma_set(p, q):
    """All gamma in Gamma^p_q as three-row set partitions (matching construction)."""
    if row_blocks(p, BOTTOM) != row_blocks(q, TOP):
        return []
    by_mid = {}
    top_only = []
    for b in p.blocks:
        mid = tuple(v for v in b if v % 3 == BOTTOM)
        if mid:
            by_mid[mid] = list(b)
        else:
            top_only.append(list(b))
    joined = []
    bottom_only = []
    for b in q.blocks:
        shifted = [v + 1 for v in b]
        mid = tuple(v for v in shifted if v % 3 == BOTTOM)
        if mid:
            joined.append(by_mid[mid] + [v for v in shifted if v % 3 == LOWER])
        else:
            bottom_only.append(shifted)
    out = []
    for merged in partial_matchings(len(top_only), len(bottom_only)):
        used_t = {i for i, _ in merged}
        used_b = {j for _, j in merged}
        blocks = list(joined)
        blocks += [top_only[i] + bottom_only[j] for i, j in merged]
        blocks += [top_only[i] for i in range(len(top_only)) if i not in used_t]
        blocks += [bottom_only[j] for j in range(len(bottom_only)) if j not in used_b]
        out.append(SetPartition._raw(canonical_blocks(blocks), p.r, 3))
    return out


@lru_cache(maxsize=None)
def partial_matchings(m, n):
    """All injective partial maps from range(m) to range(n), as tuples of pairs."""
    out = []
    for size in range(min(m, n) + 1):
        for left in itertools.combinations(range(m), size):
            for right in itertools.permutations(range(n), size):
                out.append(tuple(zip(left, right)))
    return tuple(out)


def gamma_set_bruteforce(p, q):
    """Gamma^p_q by filtering every three-row set partition (oracle, small r)."""
    from .partitions import lower, upper
    return [g for g in enumerate_set_partitions(p.r, rows=3) if upper(g) == p and lower(g) == q]


def outer_and_middle(g):
    """(outer two-row partition, number of outer blocks, number of middle-only blocks)."""
    outer_blocks = []
    middle = 0
    for b in g.blocks:
        part = [v if v % 3 == TOP else v - 1 for v in b if v % 3 != BOTTOM]
        if part:
            outer_blocks.append(part)
        else:
            middle += 1
    return SetPartition._raw(canonical_blocks(outer_blocks), g.r, 2), len(outer_blocks), middle


def b_gamma(g):
    _, n_outer, n_mid = outer_and_middle(g)
    return falling_factorial(X - n_outer, n_mid)


def orbit_product_single(p, q):
    """T_p T_q as a dict partition -> polynomial."""
    out = {}
    for g in gamma_set(p, q):
        outer_p, n_outer, n_mid = outer_and_middle(g)
        coeff = _ff(n_outer, n_mid)
        out[outer_p] = out.get(outer_p, ZERO) + coeff
    return out


@lru_cache(maxsize=None)
def _ff(n_outer, n_mid):
    return falling_factorial(X - n_outer, n_mid)


@lru_cache(maxsize=None)
def _xpow(c):
    return X ** c


def multiply(e1, e2):
    _check_same(e1, e2)
    out = {}
    for p, cp in e1.terms.items():
        for q, cq in e2.terms.items():
            c = cp * cq
            if e1.basis == DIAGRAM:
                m, g = diagram_product_single(p, q)
                out[g] = out.get(g, ZERO) + c * _xpow(m)
            else:
                for g, cg in orbit_product_single(p, q).items():
                    out[g] = out.get(g, ZERO) + c * cg
    return PAElement(e1.basis, out, e1.r)


# ---------------------------------------------------------------- change of basis

def diagram_to_orbit(e):
    if e.basis != DIAGRAM:
        raise ValueError("expected a diagram-basis element")
    out = {}
    for p, c in e.terms.items():
        for q in coarsenings(p):
            out[q] = out.get(q, ZERO) + c
    return PAElement(ORBIT, out, e.r)


@lru_cache(maxsize=None)
def _orbit_in_diagram(p):
    """T_p = L_p - sum over proper coarsenings nu of T_nu, solved recursively."""
    out = {p: Fraction(1)}
    for q in coarsenings(p):
        if q == p:
            continue
        for s, c in _orbit_in_diagram(q).items():
            out[s] = out.get(s, 0) - c
    return {s: c for s, c in out.items() if c != 0}


def orbit_to_diagram(e):
    if e.basis != ORBIT:
        raise ValueError("expected an orbit-basis element")
    out = {}
    for p, c in e.terms.items():
        for q, m in _orbit_in_diagram(p).items():
            out[q] = out.get(q, ZERO) + c * m
    return PAElement(DIAGRAM, out, e.r)


# ---------------------------------------------------------------- permutations and idempotents

def perm_diagram(s):
    r = len(s)
    return SetPartition._raw(canonical_blocks([(vertex(s[i - 1], TOP), vertex(i, BOTTOM))
                                               for i in range(1, r + 1)]), r, 2)


def identity_diagram(r):
    return perm_diagram(tuple(range(1, r + 1)))


def idempotent_s(a):
    group = young_subgroup(a)
    w = Fraction(1, len(group))
    r = sum(a)
    return PAElement(DIAGRAM, {perm_diagram(s): w for s in group}, r)


def project_diagram_like(pt, basis=DIAGRAM):
    """s_a L_pi s_b (or s_a T_pi s_b) for pi in the fiber of pt, written in P_r(x)."""
    a, b = pt.top_composition(), pt.bottom_composition()
    fiber = kappa_fiber(pt, a, b)
    w = Fraction(1, len(fiber))
    return PAElement(basis, {p: w for p in fiber}, pt.r)


def project_by_product(pt, basis=DIAGRAM):
    """The same projection computed literally as the triple product s_a L s_b."""
    from .partitions import representative
    a, b = pt.top_composition(), pt.bottom_composition()
    pi = representative(pt, [a, b])
    sa, sb = idempotent_s(a), idempotent_s(b)
    if basis == ORBIT:
        sa, sb = diagram_to_orbit(sa), diagram_to_orbit(sb)
    return sa * PAElement.basis_element(basis, pi) * sb
