"""The multiset partition algebra MP_{r,k}(x) in three bases.

D is the diagram-like basis s_a L_pi s_b, O the orbit-like basis s_a T_pi s_b
and X the orbit basis with the direct product formula on three-row multiset
partitions.  Products in D and O are computed by symmetrizing inside P_r(x).
"""

import itertools
from collections import Counter, namedtuple
from fractions import Fraction
from functools import lru_cache
from math import factorial, prod

from .linalg import RowSpace
from .partition_algebra import (DIAGRAM, ORBIT, PAElement, diagram_product_single, gamma_set,
                                orbit_product_single, outer_and_middle, project_diagram_like)
from .partitions import (BOTTOM, LOWER, TOP, MultisetPartition, SetPartition, act,
                         canonical_blocks, coarsenings, enumerate_msp, enumerate_set_partitions,
                         flip, identity_perm, kappa, kappa_fiber, lower, multiplicity_factorial,
                         outer, perm_compose, perm_inverse, representative, restrict, row_blocks,
                         row_of, upper, value_of, vertex, weak_compositions, young_subgroup)
from .scalars import ONE, X, ZERO, RationalPolynomial, evaluate, falling_factorial, format_coeff, format_poly, poly

DLIKE, OLIKE, OZ = "D", "O", "X"
BASES = (DLIKE, OLIKE, OZ)


class MPElement:
    """A sparse combination of multiset partitions tagged with its basis."""

    __slots__ = ("basis", "terms", "r", "k")

    def __init__(self, basis, terms, r, k):
        if basis not in BASES:
            raise ValueError(f"unknown basis {basis!r}")
        self.basis, self.r, self.k = basis, r, k
        clean = {}
        for p, c in terms.items():
            c = poly(c)
            if p.r != r or p.k != k or p.rows != 2:
                raise ValueError("term does not match (r, k) or has three rows")
            if not c.is_zero():
                clean[p] = c
        self.terms = clean

    @classmethod
    def basis_element(cls, basis, p):
        return cls(basis, {p: ONE}, p.r, p.k)

    @classmethod
    def zero(cls, basis, r, k):
        return cls(basis, {}, r, k)

    def __add__(self, other):
        _check_same(self, other)
        out = dict(self.terms)
        for p, c in other.terms.items():
            out[p] = out.get(p, ZERO) + c
        return MPElement(self.basis, out, self.r, self.k)

    def __sub__(self, other):
        return self + (-1) * other

    def __neg__(self):
        return (-1) * self

    def __rmul__(self, scalar):
        return MPElement(self.basis, {p: c * scalar for p, c in self.terms.items()},
                         self.r, self.k)

    def __mul__(self, other):
        if isinstance(other, MPElement):
            return multiply(self, other)
        return self.__rmul__(other)

    def __eq__(self, other):
        return (isinstance(other, MPElement) and self.basis == other.basis
                and (self.r, self.k) == (other.r, other.k) and self.terms == other.terms)

    def is_zero(self):
        return not self.terms

    def coefficient(self, p):
        return self.terms.get(p, ZERO)

    def items(self):
        return sorted(self.terms.items(), key=lambda t: t[0].sort_key())

    def __str__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"{format_coeff(c)} * {p}" for p, c in self.items())

    __repr__ = __str__

    def evaluate(self, n):
        """Coefficients specialized at x = n, as {partition: Fraction}."""
        return {p: evaluate(c, n) for p, c in self.terms.items() if evaluate(c, n)}

    def to_json(self):
        return {"algebra": "MP", "r": self.r, "k": self.k, "basis": self.basis,
                "terms": [{"msp": str(p), "coeff": c.to_json()} for p, c in self.items()]}

    @classmethod
    def from_json(cls, data):
        r, k = data["r"], data["k"]
        terms = {MultisetPartition.parse(t["msp"], r=r, k=k): RationalPolynomial.from_json(t["coeff"])
                 for t in data["terms"]}
        return cls(data["basis"], terms, r, k)


def _check_same(e1, e2):
    if (e1.r, e1.k) != (e2.r, e2.k):
        raise ValueError("elements have different (r, k)")
    if e1.basis != e2.basis:
        raise ValueError(f"basis mismatch: {e1.basis} and {e2.basis}")


def _check_pair(p, q):
    if (p.r, p.k) != (q.r, q.k):
        raise ValueError(f"size mismatch: (r,k) = {(p.r, p.k)} and {(q.r, q.k)}")


# ---------------------------------------------------------------- D and O products

@lru_cache(maxsize=200000)
def _dlike_terms(p, q):
    a, b = p.top_composition(), p.bottom_composition()
    if b != q.top_composition():
        return ()
    c = q.bottom_composition()
    pi = representative(p, [a, b])
    nu = representative(q, [b, c])
    group = young_subgroup(b)
    w = Fraction(1, len(group))
    ident = identity_perm(p.r)
    out = {}
    for s in group:
        m, g = diagram_product_single(pi, act(s, nu, ident))
        key = kappa(a, c, g)
        out.setdefault(key, Counter())[m] += 1
    res = []
    for key, cnt in out.items():
        coeffs = [Fraction(0)] * (max(cnt) + 1)
        for m, v in cnt.items():
            coeffs[m] += w * v
        res.append((key, RationalPolynomial(coeffs)))
    return tuple(res)


def dlike_product(p, q):
    """D_p D_q as an MPElement in the D basis."""
    _check_pair(p, q)
    return MPElement(DLIKE, dict(_dlike_terms(p, q)), p.r, p.k)


def dlike_product_by_projection(p, q):
    """D_p D_q computed literally inside P_r(x) and read back as orbit averages (oracle)."""
    _check_pair(p, q)
    if p.bottom_composition() != q.top_composition():
        return MPElement.zero(DLIKE, p.r, p.k)
    a, c = p.top_composition(), q.bottom_composition()
    prod_ = project_diagram_like(p) * project_diagram_like(q)
    return _read_projection(prod_, a, c, DLIKE, p.k)


def _read_projection(e, a, c, basis, k):
    out = {}
    for g, coeff in e.terms.items():
        key = kappa(a, c, g)
        out[key] = out.get(key, ZERO) + coeff
    return MPElement(basis, out, e.r, k)


def snapshot_product(pi, nu, a, b, c):
    """The D-basis product computed from one chosen snapshot (pi, nu)."""
    group = young_subgroup(b)
    w = Fraction(1, len(group))
    ident = identity_perm(pi.r)
    out = {}
    for s in group:
        m, g = diagram_product_single(pi, act(s, nu, ident))
        key = kappa(a, c, g)
        out[key] = out.get(key, ZERO) + w * X ** m
    return MPElement(DLIKE, out, pi.r, len(a))


def snapshot_independence_check(p, q):
    """True when every snapshot choice gives the same D product.

    The product is bilinear in the two fibers, so it suffices to vary one
    representative at a time.
    """
    _check_pair(p, q)
    a, b = p.top_composition(), p.bottom_composition()
    if b != q.top_composition():
        return True
    c = q.bottom_composition()
    pi0, nu0 = representative(p, [a, b]), representative(q, [b, c])
    ref = snapshot_product(pi0, nu0, a, b, c)
    for pi in kappa_fiber(p, a, b):
        if snapshot_product(pi, nu0, a, b, c) != ref:
            return False
    for nu in kappa_fiber(q, b, c):
        if snapshot_product(pi0, nu, a, b, c) != ref:
            return False
    return True


@lru_cache(maxsize=200000)
def _olike_terms(p, q):
    a, b = p.top_composition(), p.bottom_composition()
    if b != q.top_composition():
        return ()
    c = q.bottom_composition()
    pi = representative(p, [a, b])
    nu = representative(q, [b, c])
    group = young_subgroup(b)
    w = Fraction(1, len(group))
    ident = identity_perm(p.r)
    out = {}
    for s in group:
        for g, coeff in orbit_product_single(pi, act(s, nu, ident)).items():
            key = kappa(a, c, g)
            out[key] = out.get(key, ZERO) + coeff * w
    return tuple((key, v) for key, v in out.items() if not v.is_zero())


def olike_product(p, q):
    """O_p O_q in the orbit-like basis."""
    _check_pair(p, q)
    return MPElement(OLIKE, dict(_olike_terms(p, q)), p.r, p.k)


def olike_product_by_projection(p, q):
    if p.bottom_composition() != q.top_composition():
        return MPElement.zero(OLIKE, p.r, p.k)
    prod_ = project_diagram_like(p, ORBIT) * project_diagram_like(q, ORBIT)
    return _read_projection(prod_, p.top_composition(), q.bottom_composition(), OLIKE, p.k)


# ---------------------------------------------------------------- X products

def _split_rows(block):
    return (tuple(v for v in block if row_of(v) == TOP),
            tuple(v for v in block if row_of(v) == BOTTOM),
            tuple(v for v in block if row_of(v) == LOWER))


def gamma_tilde(p, q):
    """All three-row multiset partitions gamma with upper part p and lower part q."""
    _check_pair(p, q)
    if row_blocks(p, BOTTOM) != row_blocks(q, TOP):
        return []
    p_mid, p_top = {}, []
    for b in p.blocks:
        _, bot, _ = _split_rows(b)
        if bot:
            p_mid.setdefault(bot, []).append(b)
        else:
            p_top.append(b)
    q_mid, q_bot = {}, []
    for b in q.blocks:
        shifted = tuple(v + 1 for v in b)
        top = tuple(v for v in shifted if row_of(v) == BOTTOM)
        low = tuple(v for v in shifted if row_of(v) == LOWER)
        if top:
            q_mid.setdefault(top, []).append(low)
        else:
            q_bot.append(low)
    per_class = []
    for mid, ups in p_mid.items():
        lows = q_mid[mid]
        options = set()
        for perm in itertools.permutations(lows):
            options.add(tuple(sorted(tuple(sorted(u + l)) for u, l in zip(ups, perm))))
        per_class.append(sorted(options))
    joined_options = set()
    for choice in itertools.product(*per_class):
        joined_options.add(tuple(sorted(blk for grp in choice for blk in grp)))
    from .partition_algebra import partial_matchings
    outer_options = set()
    for merged in partial_matchings(len(p_top), len(q_bot)):
        used_t = {i for i, _ in merged}
        used_b = {j for _, j in merged}
        blocks = [tuple(sorted(p_top[i] + q_bot[j])) for i, j in merged]
        blocks += [p_top[i] for i in range(len(p_top)) if i not in used_t]
        blocks += [q_bot[j] for j in range(len(q_bot)) if j not in used_b]
        outer_options.add(tuple(sorted(blocks)))
    out = set()
    for jo in joined_options:
        for oo in outer_options:
            out.add(MultisetPartition._raw(canonical_blocks(list(jo) + list(oo)), p.r, p.k, 3))
    return sorted(out, key=lambda g: g.sort_key())


def gamma_tilde_bruteforce(p, q):
    """The same set by filtering every three-row multiset partition (oracle, small r)."""
    _check_pair(p, q)
    a, b, c = p.top_composition(), p.bottom_composition(), q.bottom_composition()
    if b != q.top_composition():
        return []
    out = set()
    for g in enumerate_set_partitions(p.r, rows=3):
        gt = kappa(a, b, g, c)
        if upper(gt) == p and lower(gt) == q:
            out.add(gt)
    return sorted(out, key=lambda g: g.sort_key())


def gamma_weight(g):
    """(outer two-row partition, a, b(x)) for a three-row multiset partition."""
    outer_blocks, beta = [], []
    groups = {}
    for blk in g.blocks:
        part = tuple(v if row_of(v) == TOP else v - 1 for v in blk if row_of(v) != BOTTOM)
        if part:
            outer_blocks.append(part)
            groups.setdefault(tuple(sorted(part)), []).append(blk)
        else:
            beta.append(blk)
    a = Fraction(1)
    for blks in groups.values():
        a *= Fraction(factorial(len(blks)), multiplicity_factorial(blks))
    b = falling_factorial(X - len(outer_blocks), len(beta)) * Fraction(1, multiplicity_factorial(beta))
    return MultisetPartition._raw(canonical_blocks(outer_blocks), g.r, g.k, 2), a, b


@lru_cache(maxsize=200000)
def _oz_terms(p, q):
    out = {}
    for g in gamma_tilde(p, q):
        key, a, b = gamma_weight(g)
        out[key] = out.get(key, ZERO) + b * a
    return tuple((key, v) for key, v in out.items() if not v.is_zero())


def oz_orbit_product(p, q):
    """X_p X_q by the direct formula over three-row multiset partitions."""
    _check_pair(p, q)
    return MPElement(OZ, dict(_oz_terms(p, q)), p.r, p.k)


_PRODUCTS = {DLIKE: _dlike_terms, OLIKE: _olike_terms, OZ: _oz_terms}


def multiply(e1, e2):
    _check_same(e1, e2)
    single = _PRODUCTS[e1.basis]
    out = {}
    for p, cp in e1.terms.items():
        for q, cq in e2.terms.items():
            c = cp * cq
            for g, cg in single(p, q):
                out[g] = out.get(g, ZERO) + c * cg
    return MPElement(e1.basis, out, e1.r, e1.k)


def identity_element(r, k, basis=DLIKE):
    """Sum over compositions a of the all-vertical-bars diagram with colors a."""
    out = {}
    for comp in weak_compositions(r, k):
        blocks = [(3 * c, 3 * c + 1) for c, m in enumerate(comp, start=1) for _ in range(m)]
        out[MultisetPartition._raw(canonical_blocks(blocks), r, k, 2)] = ONE
    e = MPElement(DLIKE, out, r, k)
    return convert(e, basis)


# ---------------------------------------------------------------- change of basis

def omega(p):
    """The rescaling with O_p = omega(p) X_p.

    The group order in the denominator is that of the bottom composition.
    """
    bottoms = 1
    for blk in p.blocks:
        bottoms *= multiplicity_factorial(v for v in blk if row_of(v) == BOTTOM)
    group = prod(factorial(m) for m in p.bottom_composition())
    return Fraction(multiplicity_factorial(p.blocks) * bottoms, group)


def coarsening_counts(p, rep=None):
    """For a fixed representative pi of p: kappa(nu) -> number of nu coarser than pi."""
    a, b = p.top_composition(), p.bottom_composition()
    if rep is None:
        rep = representative(p, [a, b])
    counts = Counter()
    for nu in coarsenings(rep):
        counts[kappa(a, b, nu)] += 1
    return counts


def d_to_O(e):
    if e.basis != DLIKE:
        raise ValueError("expected a D-basis element")
    out = {}
    for p, c in e.terms.items():
        for q, m in coarsening_counts(p).items():
            out[q] = out.get(q, ZERO) + c * m
    return MPElement(OLIKE, out, e.r, e.k)


def O_to_X(e):
    if e.basis != OLIKE:
        raise ValueError("expected an O-basis element")
    return MPElement(OZ, {p: c * omega(p) for p, c in e.terms.items()}, e.r, e.k)


def X_to_O(e):
    if e.basis != OZ:
        raise ValueError("expected an X-basis element")
    return MPElement(OLIKE, {p: c * (1 / omega(p)) for p, c in e.terms.items()}, e.r, e.k)


def d_to_X(e):
    """D_p -> sum over nu coarser than a representative of c * omega * X."""
    if e.basis != DLIKE:
        raise ValueError("expected a D-basis element")
    return O_to_X(d_to_O(e))


def O_to_d(e):
    """Inverse of d_to_O by triangular solve over the coarsening order."""
    if e.basis != OLIKE:
        raise ValueError("expected an O-basis element")
    remaining = dict(e.terms)
    out = {}
    while remaining:
        # a partition with the fewest blocks is not a proper coarsening of any other term
        p = max(remaining, key=lambda q: (len(q.blocks), q.sort_key()))
        c = remaining.pop(p)
        if c.is_zero():
            continue
        out[p] = c
        for q, m in coarsening_counts(p).items():
            if q == p:
                continue
            remaining[q] = remaining.get(q, ZERO) - c * m
            if remaining[q].is_zero():
                del remaining[q]
    return MPElement(DLIKE, out, e.r, e.k)


def convert(e, basis):
    if e.basis == basis:
        return e
    path = {(DLIKE, OLIKE): [d_to_O], (DLIKE, OZ): [d_to_O, O_to_X],
            (OLIKE, OZ): [O_to_X], (OLIKE, DLIKE): [O_to_d],
            (OZ, OLIKE): [X_to_O], (OZ, DLIKE): [X_to_O, O_to_d]}[(e.basis, basis)]
    for step in path:
        e = step(e)
    return e


# ---------------------------------------------------------------- nonbasic weight

NonbasicProfile = namedtuple("NonbasicProfile", "nbw vb nonbasic_blocks")


def is_vertical_bar(block):
    return len(block) == 2 and row_of(block[0]) == TOP and block[1] == block[0] + 1


def nonbasic_profile(p):
    vb = sum(1 for b in p.blocks if is_vertical_bar(b))
    nonbasic = tuple(b for b in p.blocks if len(b) > 1 and not is_vertical_bar(b))
    return NonbasicProfile(sum(len(b) for b in nonbasic), vb, nonbasic)


def prec_compare(p, q):
    """-1 if p precedes q, 1 if q precedes p, 0 when neither does."""
    _check_pair(p, q)
    sp, sq = nonbasic_profile(p), nonbasic_profile(q)
    kp, kq = (sp.nbw, sp.vb), (sq.nbw, sq.vb)
    if kp < kq:
        return -1
    if kq < kp:
        return 1
    return 0


def precedes(p, q):
    return prec_compare(p, q) == -1


# ---------------------------------------------------------------- factorization

Factorization = namedtuple("Factorization", "restricted quotient mirrored")


def _msp(blocks, r, k):
    return MultisetPartition._raw(canonical_blocks(blocks), r, k, 2)


def _factor_top_heavy(p, block):
    rest = list(p.blocks)
    rest.remove(block)
    tops_b = [v for v in block if row_of(v) == TOP]
    bots_b = [v for v in block if row_of(v) == BOTTOM]
    pad = len(tops_b) - len(bots_b)
    restricted = [block]
    for b in rest:
        restricted += [(v, v + 1) for v in b if row_of(v) == TOP]
    restricted += [(vertex(1, BOTTOM),)] * pad
    quotient = rest + [(v - 1, v) for v in bots_b] + [(vertex(1, TOP),)] * pad
    return _msp(restricted, p.r, p.k), _msp(quotient, p.r, p.k)


def factor_at_block(p, block):
    """Split D_p at a nonbasic block.

    Returns (restricted, quotient, mirrored).  The product restricted *
    quotient reproduces p up to smaller terms, except when the block has
    more bottom than top entries: then the roles are mirrored and the
    product is quotient * restricted.
    """
    block = tuple(sorted(block))
    if block not in p.blocks:
        raise ValueError(f"{_msp([block], p.r, p.k)} is not a block of {p}")
    if len(block) < 2 or is_vertical_bar(block):
        raise ValueError("the block is basic")
    tops = sum(1 for v in block if row_of(v) == TOP)
    if 2 * tops >= len(block):
        res, quo = _factor_top_heavy(p, block)
        return Factorization(res, quo, False)
    fp = flip(p)
    fb = tuple(sorted(vertex(value_of(v), TOP if row_of(v) == BOTTOM else BOTTOM) for v in block))
    res, quo = _factor_top_heavy(fp, fb)
    return Factorization(flip(res), flip(quo), True)


def factor_product(f):
    left, right = (f.quotient, f.restricted) if f.mirrored else (f.restricted, f.quotient)
    return dlike_product(left, right)


def factorization_check(p, block):
    """(coefficient of D_p in the factored product, whether every other term precedes p).

    The scalar c of the factorization is the reciprocal of the coefficient,
    which may depend on x.
    """
    f = factor_at_block(p, block)
    prod_ = factor_product(f)
    coeff = prod_.coefficient(p)
    if coeff.is_zero():
        return None, False
    ok = all(precedes(q, p) for q in prod_.terms if q != p)
    return coeff, ok


# ---------------------------------------------------------------- generators

def _bars(comp):
    return [(3 * c, 3 * c + 1) for c, m in enumerate(comp, start=1) for _ in range(m)]


def generator_P(i, j, a):
    """Singletons {i} and {j-bar} plus vertical bars with multiplicities a."""
    a = tuple(a)
    k = len(a)
    if not (1 <= i <= k and 1 <= j <= k) or any(m < 0 for m in a):
        raise ValueError("invalid colors or composition")
    return _msp([(vertex(i, TOP),), (vertex(j, BOTTOM),)] + _bars(a), sum(a) + 1, k)


def generator_R(a, b, c):
    """One block with top colors a and bottom colors b, plus vertical bars c."""
    a, b, c = tuple(a), tuple(b), tuple(c)
    if not (len(a) == len(b) == len(c)) or sum(a) != sum(b) or sum(a) == 0:
        raise ValueError("inconsistent compositions")
    if any(m < 0 for m in a + b + c):
        raise ValueError("negative part")
    block = tuple(sorted([vertex(col, TOP) for col, m in enumerate(a, 1) for _ in range(m)]
                         + [vertex(col, BOTTOM) for col, m in enumerate(b, 1) for _ in range(m)]))
    return _msp([block] + _bars(c), sum(a) + sum(c), len(a))


def generating_set(r, k):
    """Theta: all P_{i,j,a} and R_{a,b,c} for the given r and k."""
    gens = []
    for a in weak_compositions(r - 1, k):
        for i in range(1, k + 1):
            for j in range(1, k + 1):
                gens.append(generator_P(i, j, a))
    for i in range(1, r + 1):
        for a in weak_compositions(i, k):
            for b in weak_compositions(i, k):
                for c in weak_compositions(r - i, k):
                    gens.append(generator_R(a, b, c))
    return sorted(set(gens), key=lambda g: g.sort_key())


def q_element(m, b):
    """m pairs of singletons {1},{1-bar}, then vertical bars: b_1 - m of color 1, b_i of color i."""
    b = tuple(b)
    if not 0 <= m <= b[0]:
        raise ValueError("need 0 <= m <= b_1")
    rest = (b[0] - m,) + b[1:]
    blocks = [(vertex(1, TOP),), (vertex(1, BOTTOM),)] * m + _bars(rest)
    return _msp(blocks, sum(b), len(b))


def q_ladder_expected(m, b):
    """The predicted value of Q_1 Q_m."""
    b1 = b[0]
    out = MPElement(DLIKE, {q_element(m, b): X * Fraction(m, b1)}, sum(b), len(b))
    if m < b1:
        out = out + MPElement(DLIKE, {q_element(m + 1, b): poly(Fraction(b1 - m, b1))},
                              sum(b), len(b))
    return out


def span_closure(gens, r, k, points=(101, 1009, 10007), include_identity=True):
    """Dimension of the subalgebra generated by gens (D-basis elements).

    The closure is carried out at specialized values x = t; each value gives
    a lower bound on the generic dimension and the maximum is reported.
    """
    gens = [g if isinstance(g, MPElement) else MPElement.basis_element(DLIKE, g) for g in gens]
    best = 0
    for t in points:
        best = max(best, _closure_at(gens, r, k, t, include_identity))
    return best


def _closure_at(gens, r, k, t, include_identity):
    index = {}

    def idx(p):
        if p not in index:
            index[p] = len(index)
        return index[p]

    def numeric(e):
        return {idx(p): v for p, v in e.evaluate(t).items()}

    gvals = [g.evaluate(t) for g in gens]
    space = RowSpace()
    queue = []
    start = [identity_element(r, k)] if include_identity else []
    for e in start + gens:
        vec = e.evaluate(t)
        if space.add({idx(p): v for p, v in vec.items()}):
            queue.append(vec)
    cache = {}
    while queue:
        vec = queue.pop()
        for gv in gvals:
            out = {}
            for p, cp in vec.items():
                for q, cq in gv.items():
                    key = (p, q)
                    if key not in cache:
                        cache[key] = [(g, evaluate(c, t)) for g, c in _dlike_terms(p, q)]
                    for g, v in cache[key]:
                        out[g] = out.get(g, 0) + cp * cq * v
            out = {g: v for g, v in out.items() if v}
            if out and space.add({idx(p): v for p, v in out.items()}):
                queue.append(out)
    return len(space)


# ---------------------------------------------------------------- subgroups

SubgroupReport = namedtuple("SubgroupReport", "S_rho X Y A B AB expected")


def _block_map(rho, s):
    """Image of each block of rho under s, or None when s does not fix rho."""
    blocks = {frozenset(b) for b in rho}
    images = {}
    for b in rho:
        img = frozenset(s[i - 1] for i in b)
        if img not in blocks:
            return None
        images[tuple(sorted(b))] = tuple(sorted(img))
    return images


def _order_preserving(images, s):
    for src, dst in images.items():
        if tuple(s[i - 1] for i in src) != dst:
            return False
    return True


def _within_blocks(images):
    return all(src == dst for src, dst in images.items())


def split_block_permutation(s, rho):
    """Write s = within * blocks, with `blocks` order-preserving between blocks of rho."""
    images = _block_map(rho, s)
    if images is None:
        raise ValueError("the permutation does not fix the set partition")
    blocks = list(range(1, len(s) + 1))
    for src, dst in images.items():
        for i, j in zip(src, dst):
            blocks[i - 1] = j
    blocks = tuple(blocks)
    within = perm_compose(s, perm_inverse(blocks))
    return within, blocks


def _painted_ok(parts, s, key_of):
    """For blocks S, T: S|mid = s(T|mid) must imply equal painted blocks."""
    by_mid = {mid: key_of[full] for mid, full in parts}
    for mid, full in parts:
        img = tuple(sorted(s[i - 1] for i in mid))
        if by_mid.get(img) != key_of[full]:
            return False
    return True


def _mid_parts(p, row):
    out = []
    for b in p.blocks:
        mid = tuple(sorted(value_of(v) for v in b if row_of(v) == row))
        if mid:
            out.append((mid, b))
    return out


def _plus_minus(pt, row):
    """Blocks of pt lying entirely in one row."""
    return [b for b in pt.blocks if all(row_of(v) == row for v in b)]


def subgroup_report(pi, nu, a, b, c):
    """Brute-force sizes of the stabilizer subgroups together with the closed forms."""
    rho = row_blocks(pi, BOTTOM)
    if rho != row_blocks(nu, TOP):
        raise ValueError("the bottom of pi must match the top of nu")
    pt, nt = kappa(a, b, pi), kappa(b, c, nu)
    pkey = {blk: tuple(sorted(v for v in kappa(a, b, SetPartition._raw((blk,), pi.r)).blocks[0]))
            for blk in pi.blocks}
    nkey = {blk: tuple(sorted(v for v in kappa(b, c, SetPartition._raw((blk,), nu.r)).blocks[0]))
            for blk in nu.blocks}
    p_parts, n_parts = _mid_parts(pi, BOTTOM), _mid_parts(nu, TOP)
    counts = Counter()
    for s in young_subgroup(b):
        images = _block_map(rho, s)
        if images is None:
            continue
        counts["S"] += 1
        if _within_blocks(images):
            counts["Y"] += 1
        if _order_preserving(images, s):
            counts["X"] += 1
            in_a = _painted_ok(p_parts, s, pkey)
            in_b = _painted_ok(n_parts, s, nkey)
            counts["A"] += in_a
            counts["B"] += in_b
            counts["AB"] += in_a and in_b
    from .partition_algebra import stack
    gt = kappa(a, b, stack(pi, nu), c)
    cmap = _colors(b)
    rho_t = [tuple(sorted(cmap[i - 1] for i in blk)) for blk in rho]
    y_form = prod(multiplicity_factorial(blk) for blk in rho_t)
    expected = {
        "X": multiplicity_factorial(rho_t),
        "Y": y_form,
        "A": Fraction(multiplicity_factorial(pt.blocks), multiplicity_factorial(_plus_minus(pt, TOP))),
        "B": Fraction(multiplicity_factorial(nt.blocks), multiplicity_factorial(_plus_minus(nt, BOTTOM))),
        "AB": Fraction(multiplicity_factorial(gt.blocks),
                       multiplicity_factorial([blk for blk in gt.blocks
                                               if all(row_of(v) != BOTTOM for v in blk)])),
    }
    expected["S"] = expected["X"] * expected["Y"]
    return SubgroupReport(counts["S"], counts["X"], counts["Y"], counts["A"], counts["B"],
                          counts["AB"], expected)


def _colors(comp):
    from .partitions import color_map
    return color_map(tuple(comp))


def subgroup_report_ok(rep):
    got = {"S": rep.S_rho, "X": rep.X, "Y": rep.Y, "A": rep.A, "B": rep.B, "AB": rep.AB}
    return all(got[key] == val for key, val in rep.expected.items())


def gamma_fiber_size(pi, nu, mu, a, b, c):
    """(brute-force size of Gamma^pi_nu restricted to kappa = mu, closed form or None)."""
    count = sum(1 for g in gamma_set(pi, nu) if kappa(a, b, g, c) == mu)
    pt, nt = kappa(a, b, pi), kappa(b, c, nu)
    formula = Fraction(multiplicity_factorial(_plus_minus(pt, TOP))
                       * multiplicity_factorial(_plus_minus(nt, BOTTOM)),
                       multiplicity_factorial([blk for blk in mu.blocks
                                               if all(row_of(v) != BOTTOM for v in blk)]))
    return count, formula
