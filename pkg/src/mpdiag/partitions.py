"""Set partitions and multiset partitions of two or three rows of vertices.

A vertex is stored as the integer 3*value + row, with row 0 for the top
(unbarred) row, 1 for the bottom (barred) row and 2 for the lower
(double-barred) row of a three-row object.  In a set partition the value is
a position; in a multiset partition it is a color.  Blocks are sorted tuples
of vertex codes and the blocks of a partition are sorted in last-letter
order, which makes equal partitions have identical tuples.
"""

import itertools
import os
from collections import Counter
from functools import lru_cache
from math import factorial, prod

TOP, BOTTOM, LOWER = 0, 1, 2
DEFAULT_MAX_VERTICES = 10


class BoundError(ValueError):
    """An enumeration would exceed the configured size bound."""


class ParseError(ValueError):
    def __init__(self, message, position=None):
        self.position = position
        if position is not None:
            message = f"{message} at position {position}"
        super().__init__(message)


def max_vertices():
    value = os.environ.get("MPDIAG_MAX_VERTICES")
    return int(value) if value else DEFAULT_MAX_VERTICES


def check_bound(count, what="vertices"):
    bound = max_vertices()
    if count > bound:
        raise BoundError(
            f"{count} {what} exceeds the bound {bound} (raise it with MPDIAG_MAX_VERTICES)")


def vertex(value, row=TOP):
    return 3 * value + row


def value_of(v):
    return v // 3


def row_of(v):
    return v % 3


def _llkey(block):
    return block[::-1]


def canonical_blocks(blocks):
    return tuple(sorted((tuple(sorted(b)) for b in blocks), key=_llkey))


def last_letter_compare(S, R):
    """Return -1, 0 or 1 comparing multisets of integers in last-letter order."""
    s = tuple(sorted(S, reverse=True))
    t = tuple(sorted(R, reverse=True))
    return (s > t) - (s < t)


def last_letter_key(S):
    return tuple(sorted(S, reverse=True))


# ---------------------------------------------------------------- text forms

def _format_vertex(v):
    row = row_of(v)
    val = value_of(v)
    return (str(val), f"-{val}", f"={val}")[row]


def _display_order(block):
    return sorted(block, key=lambda v: (row_of(v), value_of(v)))


def _format(blocks, left, right):
    inner = ",".join(left + ",".join(_format_vertex(v) for v in _display_order(b)) + right
                     for b in blocks)
    return left + inner + right


def _parse(text, left, right):
    s = text.strip()
    pos = 0

    def skip():
        nonlocal pos
        while pos < len(s) and s[pos].isspace():
            pos += 1

    def expect(ch):
        nonlocal pos
        skip()
        if pos >= len(s) or s[pos] != ch:
            raise ParseError(f"expected {ch!r}", pos)
        pos += 1

    blocks = []
    expect(left)
    skip()
    if pos < len(s) and s[pos] == right:
        pos += 1
    else:
        while True:
            expect(left)
            block = []
            while True:
                skip()
                start = pos
                row = TOP
                if pos < len(s) and s[pos] == "-":
                    row = BOTTOM
                    pos += 1
                elif pos < len(s) and s[pos] == "=":
                    row = LOWER
                    pos += 1
                digits = pos
                while pos < len(s) and s[pos].isdigit():
                    pos += 1
                if digits == pos:
                    raise ParseError("expected a vertex", start)
                val = int(s[digits:pos])
                if val < 1:
                    raise ParseError("vertex values start at 1", start)
                block.append(vertex(val, row))
                skip()
                if pos < len(s) and s[pos] == ",":
                    pos += 1
                    continue
                expect(right)
                break
            blocks.append(block)
            skip()
            if pos < len(s) and s[pos] == ",":
                pos += 1
                continue
            expect(right)
            break
    skip()
    if pos != len(s):
        raise ParseError("trailing characters", pos)
    return blocks


# ---------------------------------------------------------------- classes

class _Partition:
    __slots__ = ("blocks", "r", "rows", "_hash")

    def restrict(self, keep):
        return restrict(self, keep)

    def row_counts(self):
        counts = [0, 0, 0]
        for b in self.blocks:
            for v in b:
                counts[row_of(v)] += 1
        return counts

    def __len__(self):
        return len(self.blocks)

    def __iter__(self):
        return iter(self.blocks)

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def sort_key(self):
        return tuple(_llkey(b) for b in reversed(self.blocks))


class SetPartition(_Partition):
    """A set partition of [r] (top), r-bar (bottom) and optionally r-double-bar."""

    __slots__ = ()

    def __init__(self, blocks, r=None, rows=None, check=True):
        blocks = canonical_blocks(blocks)
        if r is None:
            r = max((value_of(v) for b in blocks for v in b), default=0)
        if rows is None:
            rows = 3 if any(row_of(v) == LOWER for b in blocks for v in b) else 2
        self.blocks = blocks
        self.r = r
        self.rows = rows
        self._hash = None
        if check:
            self._validate()

    @classmethod
    def _raw(cls, blocks, r, rows=2):
        obj = object.__new__(cls)
        obj.blocks = blocks
        obj.r = r
        obj.rows = rows
        obj._hash = None
        return obj

    def _validate(self):
        seen = [v for b in self.blocks for v in b]
        if any(len(b) == 0 for b in self.blocks):
            raise ValueError("empty block")
        expected = {vertex(i, row) for row in range(self.rows) for i in range(1, self.r + 1)}
        if len(seen) != len(set(seen)) or set(seen) != expected:
            raise ValueError(f"blocks do not partition {self.rows} rows of {self.r} vertices")

    @classmethod
    def parse(cls, text, r=None):
        p = cls(_parse(text, "{", "}"), r=r, check=False)
        p._validate()
        return p

    def __str__(self):
        return _format(self.blocks, "{", "}")

    def __repr__(self):
        return f"SetPartition('{self}')"

    def __eq__(self, other):
        return (isinstance(other, SetPartition) and self.r == other.r
                and self.rows == other.rows and self.blocks == other.blocks)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.blocks, self.r, self.rows))
        return self._hash


class MultisetPartition(_Partition):
    """A multiset of multisets of colored vertices; r vertices in each row."""

    __slots__ = ("k",)

    def __init__(self, blocks, r=None, k=None, rows=None, check=True):
        blocks = canonical_blocks(blocks)
        counts = [0, 0, 0]
        for b in blocks:
            for v in b:
                counts[row_of(v)] += 1
        if r is None:
            r = counts[0]
        if k is None:
            k = max((value_of(v) for b in blocks for v in b), default=1)
        if rows is None:
            rows = 3 if counts[2] else 2
        self.blocks = blocks
        self.r = r
        self.k = k
        self.rows = rows
        self._hash = None
        if check:
            if any(len(b) == 0 for b in blocks):
                raise ValueError("empty block")
            if any(value_of(v) > k or value_of(v) < 1 for b in blocks for v in b):
                raise ValueError(f"colors must lie in 1..{k}")
            if counts[:rows] != [r] * rows or any(counts[rows:]):
                raise ValueError(f"each row must hold exactly {r} entries, found {counts[:rows]}")

    @classmethod
    def _raw(cls, blocks, r, k, rows=2):
        obj = object.__new__(cls)
        obj.blocks = blocks
        obj.r = r
        obj.k = k
        obj.rows = rows
        obj._hash = None
        return obj

    @classmethod
    def parse(cls, text, r=None, k=None):
        return cls(_parse(text, "[", "]"), r=r, k=k)

    def __str__(self):
        return _format(self.blocks, "[", "]")

    def __repr__(self):
        return f"MultisetPartition('{self}')"

    def __eq__(self, other):
        return (isinstance(other, MultisetPartition) and self.r == other.r
                and self.k == other.k and self.rows == other.rows
                and self.blocks == other.blocks)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.blocks, self.r, self.k, self.rows))
        return self._hash

    def top_composition(self):
        return color_composition(self, TOP)

    def bottom_composition(self):
        return color_composition(self, BOTTOM)


def color_composition(p, row):
    comp = [0] * p.k
    for b in p.blocks:
        for v in b:
            if row_of(v) == row:
                comp[value_of(v) - 1] += 1
    return tuple(comp)


def _same_kind(p, blocks, rows=None):
    rows = p.rows if rows is None else rows
    if isinstance(p, SetPartition):
        return SetPartition._raw(canonical_blocks(blocks), p.r, rows)
    return MultisetPartition._raw(canonical_blocks(blocks), p.r, p.k, rows)


# ---------------------------------------------------------------- basic operations

def restrict(p, keep):
    """Intersect every block with the given rows and drop empty blocks.

    The result keeps the row labels; use `outer` to turn a three-row object
    back into a two-row one.
    """
    keep = set(keep)
    blocks = []
    for b in p.blocks:
        part = tuple(v for v in b if row_of(v) in keep)
        if part:
            blocks.append(part)
    return _same_kind(p, blocks, rows=p.rows)


def row_blocks(p, row):
    """Blocks of the restriction to a single row, as tuples of values."""
    out = []
    for b in p.blocks:
        part = tuple(value_of(v) for v in b if row_of(v) == row)
        if part:
            out.append(part)
    return tuple(sorted(out, key=_llkey))


def flip(p):
    """Exchange the top and bottom rows of a two-row partition."""
    swap = {TOP: BOTTOM, BOTTOM: TOP}
    blocks = [tuple(vertex(value_of(v), swap[row_of(v)]) for v in b) for b in p.blocks]
    return _same_kind(p, blocks)


def set_partitions_of(items):
    """All set partitions of a list, as lists of lists (restricted growth order)."""
    items = list(items)
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in set_partitions_of(rest):
        yield [[first]] + part
        for i in range(len(part)):
            yield part[:i] + [[first] + part[i]] + part[i + 1:]


@lru_cache(maxsize=None)
def _index_partitions(m):
    return tuple(tuple(tuple(g) for g in part) for part in set_partitions_of(range(m)))


def coarsenings(p):
    """Every partition obtained by merging blocks of p (p included), deduplicated."""
    blocks = p.blocks
    out = {}
    for groups in _index_partitions(len(blocks)):
        merged = [tuple(v for i in g for v in blocks[i]) for g in groups]
        q = _same_kind(p, merged)
        out.setdefault(q, None)
    return list(out)


def is_coarsening(coarse, fine):
    """True when `coarse` is obtained from `fine` by merging blocks."""
    if isinstance(fine, SetPartition):
        where = {}
        for i, b in enumerate(coarse.blocks):
            for v in b:
                where[v] = i
        return all(len({where[v] for v in b}) == 1 for b in fine.blocks)
    return coarse in set(coarsenings(fine))


def enumerate_set_partitions(r, rows=2):
    check_bound(rows * r)
    verts = [vertex(i, row) for row in range(rows) for i in range(1, r + 1)]
    out = [SetPartition._raw(canonical_blocks(part), r, rows) for part in set_partitions_of(verts)]
    out.sort(key=lambda p: p.sort_key())
    return out


# ---------------------------------------------------------------- compositions and permutations

def weak_compositions(total, k):
    """All weak compositions of `total` into k parts, lexicographically decreasing."""
    if k == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in weak_compositions(total - first, k - 1):
            yield (first,) + rest


@lru_cache(maxsize=None)
def color_map(comp):
    """Tuple whose (i-1)-th entry is the color of position i under composition comp."""
    out = []
    for color, part in enumerate(comp, start=1):
        out.extend([color] * part)
    return tuple(out)


def young_subgroup(a):
    """All permutations in the Young subgroup of the composition a.

    A permutation is a tuple s with s[i-1] = s(i).
    """
    size = prod(factorial(x) for x in a)
    if size > 40320:
        raise BoundError(f"Young subgroup of order {size} exceeds the bound 40320")
    segments = []
    start = 1
    for part in a:
        segments.append(list(range(start, start + part)))
        start += part
    out = []
    for choice in itertools.product(*(itertools.permutations(seg) for seg in segments)):
        out.append(tuple(v for seg in choice for v in seg))
    return out


def identity_perm(r):
    return tuple(range(1, r + 1))


def perm_inverse(s):
    inv = [0] * len(s)
    for i, si in enumerate(s, start=1):
        inv[si - 1] = i
    return tuple(inv)


def perm_compose(s, t):
    """(s t)(i) = s(t(i))."""
    return tuple(s[ti - 1] for ti in t)


def act(s1, p, s2):
    """The partition of L_{s1} L_p L_{s2}: i -> s1(i) on top, i-bar -> s2^-1(i)-bar."""
    r = p.r
    if len(s1) != r or len(s2) != r:
        raise ValueError("permutation degree does not match the partition")
    inv2 = perm_inverse(s2)
    out = []
    for b in p.blocks:
        nb = []
        for v in b:
            val, row = divmod(v, 3)
            if row == TOP:
                nb.append(3 * s1[val - 1])
            elif row == BOTTOM:
                nb.append(3 * inv2[val - 1] + 1)
            else:
                nb.append(v)
        out.append(nb)
    return _same_kind(p, out)


# ---------------------------------------------------------------- coloring map

def kappa(a, b, p, c=None):
    """Color positions by segments of the compositions a (top), b (bottom), c (lower)."""
    comps = [a, b] + ([c] if c is not None else [])
    if len(comps) < p.rows:
        raise ValueError("a composition is needed for every row")
    k = len(a)
    maps = []
    for comp in comps:
        if sum(comp) != p.r or len(comp) != k:
            raise ValueError(f"composition {comp} does not match r={p.r}, k={k}")
        maps.append(color_map(tuple(comp)))
    out = []
    for blk in p.blocks:
        out.append(tuple(sorted(3 * maps[v % 3][v // 3 - 1] + v % 3 for v in blk)))
    return MultisetPartition._raw(canonical_blocks(out), p.r, k, p.rows)


def representative(pt, comps=None):
    """One set partition mapped to pt by kappa with the given compositions."""
    if comps is None:
        comps = [color_composition(pt, row) for row in range(pt.rows)]
    nxt = []
    for comp in comps:
        starts, pos = {}, 1
        for color, part in enumerate(comp, start=1):
            starts[color] = pos
            pos += part
        nxt.append(starts)
    blocks = []
    for blk in pt.blocks:
        nb = []
        for v in blk:
            color, row = divmod(v, 3)
            pos = nxt[row][color]
            nxt[row][color] += 1
            nb.append(3 * pos + row)
        blocks.append(nb)
    return SetPartition._raw(canonical_blocks(blocks), pt.r, pt.rows)


def kappa_fiber(pt, a, b):
    """All set partitions sent to pt by kappa_{a,b}; a single Young-subgroup orbit."""
    if tuple(a) != pt.top_composition() or tuple(b) != pt.bottom_composition():
        raise ValueError("compositions do not match the color multiplicities of the partition")
    rep = representative(pt, [a, b])
    seen = {}
    gb = young_subgroup(b)
    for s1 in young_subgroup(a):
        for s2 in gb:
            seen.setdefault(act(s1, rep, s2), None)
    return list(seen)


def enumerate_msp(r, k, rows=2):
    """All multiset partitions with r entries from [k] in each row (via kappa)."""
    check_bound(rows * r)
    comps = list(weak_compositions(r, k))
    sps = enumerate_set_partitions(r, rows)
    seen = {}
    for cs in itertools.product(comps, repeat=rows):
        for p in sps:
            seen.setdefault(kappa(*cs, p), None)
    return sorted(seen, key=lambda q: q.sort_key())


def _sub_multisets(counter_items):
    """Non-empty sub-multisets of a multiset given as sorted (element, count) pairs."""
    ranges = [range(c + 1) for _, c in counter_items]
    for choice in itertools.product(*ranges):
        if any(choice):
            yield tuple(e for (e, _), m in zip(counter_items, choice) for _ in range(m))


def multiset_partitions(elements):
    """All multiset partitions of a multiset, each as a sorted tuple of blocks."""
    def rec(remaining, prev):
        if not remaining:
            yield ()
            return
        items = sorted(remaining.items())
        for blk in _sub_multisets(items):
            if prev is not None and blk < prev:
                continue
            rest = remaining - Counter(blk)
            for tail in rec(rest, blk):
                yield (blk,) + tail
    return list(rec(Counter(elements), None))


def enumerate_msp_direct(r, k, rows=2):
    """All multiset partitions in the same index set, generated without kappa."""
    check_bound(rows * r)
    comps = list(weak_compositions(r, k))
    out = []
    for cs in itertools.product(comps, repeat=rows):
        elems = [3 * color + row for row, comp in enumerate(cs)
                 for color, m in enumerate(comp, start=1) for _ in range(m)]
        for part in multiset_partitions(elems):
            out.append(MultisetPartition._raw(canonical_blocks(part), r, k, rows))
    return sorted(set(out), key=lambda q: q.sort_key())


# ---------------------------------------------------------------- multiplicities

def multiplicity_factorial(blocks):
    """Product over distinct blocks of (multiplicity)!."""
    return prod(factorial(m) for m in Counter(blocks).values())


def multiplicity_stats(p):
    counts = Counter(p.blocks)
    bottoms = 1
    for b in p.blocks:
        bottoms *= multiplicity_factorial(v for v in b if row_of(v) == BOTTOM)
    return {
        "m_factorial": prod(factorial(m) for m in counts.values()),
        "block_mults": {_format(( blk,), "[", "]")[1:-1]: m for blk, m in counts.items()},
        "per_block_bottom_factorials": bottoms,
    }


def outer(p):
    """Restrict a three-row partition to its top and lower rows, relabelled as two rows."""
    blocks = []
    for b in p.blocks:
        part = tuple(v if row_of(v) == TOP else v - 1 for v in b if row_of(v) != BOTTOM)
        if part:
            blocks.append(part)
    if isinstance(p, SetPartition):
        return SetPartition._raw(canonical_blocks(blocks), p.r, 2)
    return MultisetPartition._raw(canonical_blocks(blocks), p.r, p.k, 2)


def upper(p):
    """Restrict a three-row partition to the top and middle rows."""
    return _same_kind(p, [tuple(v for v in b if row_of(v) != LOWER) for b in p.blocks
                          if any(row_of(v) != LOWER for v in b)], rows=2)


def lower(p):
    """Restrict a three-row partition to the middle and lower rows, shifted up one row."""
    return _same_kind(p, [tuple(v - 1 for v in b if row_of(v) != TOP) for b in p.blocks
                          if any(row_of(v) != TOP for v in b)], rows=2)
