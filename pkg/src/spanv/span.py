"""Spans of finite sets and maps between them.

A span X <-f- S -g-> Y is a bridge from X to Y.  Composition is by
pullback over the shared foot; the apex of a composite is a SubsetApex
of the product of the two apexes' ambients, which makes composition
literally associative.  Identity spans are absorbed on the nose.
"""

import numpy as np

from .errors import FeetMismatch, NotMonic, TriangleViolation
from .finset import FinFn, FinSet, compose_fn, identity_fn, product, pullback


class Span:
    """left <- apex -> right."""

    def __init__(self, left, apex, right, f, g):
        assert f.dom == apex and g.dom == apex
        assert f.cod == left and g.cod == right
        self.left = left
        self.apex = apex
        self.right = right
        self.f = f
        self.g = g

    def __eq__(self, other):
        return (
            isinstance(other, Span)
            and self.left == other.left
            and self.right == other.right
            and self.apex == other.apex
            and np.array_equal(self.f.table, other.f.table)
            and np.array_equal(self.g.table, other.g.table)
        )

    def __ne__(self, other):
        return not self == other

    def __repr__(self):
        return "Span(%r <- %r -> %r)" % (self.left, self.apex, self.right)


def identity_span(x):
    return Span(x, x, x, identity_fn(x), identity_fn(x))


def is_identity_span(s):
    return (
        s.apex == s.left
        and s.apex == s.right
        and np.array_equal(s.f.table, np.arange(s.apex.size))
        and np.array_equal(s.g.table, np.arange(s.apex.size))
    )


def compose_spans(a, b):
    """First a, then b.  Identity spans are absorbed literally."""
    if a.right != b.left:
        raise FeetMismatch("cannot chain %r after %r" % (b, a))
    if is_identity_span(a):
        return b
    if is_identity_span(b):
        return a
    apex, p1, p2 = pullback(a.g, b.f)
    return Span(a.left, apex, b.right, compose_fn(p1, a.f), compose_fn(p2, b.g))


def _tensor_table(fa, fb):
    # product positions are row-major in both apex and foot
    return (fa.table[:, None] * fb.cod.size + fb.table[None, :]).ravel()


def tensor_spans(a, b):
    if _is_unit_identity_span(a):
        return b
    if _is_unit_identity_span(b):
        return a
    left = product([a.left, b.left])
    right = product([a.right, b.right])
    apex = product([a.apex, b.apex])
    f = FinFn(apex, left, _tensor_table(a.f, b.f))
    g = FinFn(apex, right, _tensor_table(a.g, b.g))
    return Span(left, apex, right, f, g)


def _is_unit_identity_span(s):
    return s.left.size == 1 and isinstance(s.left, FinSet) and s.left.shape == () and is_identity_span(s)


def braiding_span(a, b):
    """The coordinate swap a x b -> b x a as a span with identity left leg."""
    ab = product([a, b])
    ba = product([b, a])
    codes = np.arange(ab.size, dtype=np.int64)
    table = (codes % b.size) * a.size + codes // b.size
    return Span(ab, ab, ba, identity_fn(ab), FinFn(ab, ba, table))


def from_function(h, direction="co"):
    """Embed a function as a span: covariantly with identity left leg,
    contravariantly with identity right leg."""
    if direction == "co":
        return Span(h.dom, h.dom, h.cod, identity_fn(h.dom), h)
    if direction == "contra":
        return Span(h.cod, h.dom, h.dom, h, identity_fn(h.dom))
    raise ValueError("direction must be 'co' or 'contra'")


def reverse_span(s):
    return Span(s.right, s.apex, s.left, s.g, s.f)


def span_legs_bijective(s):
    return s.f.is_bijective() and s.g.is_bijective()


class SpanMap:
    """A map of spans: an apex map commuting with both legs."""

    def __init__(self, src, tgt, table):
        if src.left != tgt.left or src.right != tgt.right:
            raise FeetMismatch("span map needs equal feet")
        table = np.asarray(table, dtype=np.int64)
        u = FinFn(src.apex, tgt.apex, table)
        if not np.array_equal(tgt.f.table[table], src.f.table):
            bad = int(np.nonzero(tgt.f.table[table] != src.f.table)[0][0])
            raise TriangleViolation("left triangle fails at apex element %d" % bad)
        if not np.array_equal(tgt.g.table[table], src.g.table):
            bad = int(np.nonzero(tgt.g.table[table] != src.g.table)[0][0])
            raise TriangleViolation("right triangle fails at apex element %d" % bad)
        self.src = src
        self.tgt = tgt
        self.table = table

    def is_bijective(self):
        return FinFn(self.src.apex, self.tgt.apex, self.table).is_bijective()

    def __repr__(self):
        return "SpanMap(%r => %r)" % (self.src, self.tgt)


def match_by_signature(cols1, cols2):
    """Greedy bijection between two lists of rows with equal multisets.

    cols1 and cols2 are parallel lists of integer columns describing each
    side's elements.  Returns (table, None) matching equal signatures in
    ascending signature order, ties broken by position, or (None, info)
    where info holds the first signature whose multiplicities differ.
    """
    n1 = len(cols1[0]) if cols1 else 0
    n2 = len(cols2[0]) if cols2 else 0
    if n1 != n2:
        return None, ("size", n1, n2)
    if n1 == 0:
        return np.zeros(0, dtype=np.int64), None
    order1 = np.lexsort(tuple(reversed(cols1)))
    order2 = np.lexsort(tuple(reversed(cols2)))
    for c1, c2 in zip(cols1, cols2):
        s1, s2 = c1[order1], c2[order2]
        if not np.array_equal(s1, s2):
            bad = int(np.nonzero(s1 != s2)[0][0])
            sig1 = tuple(int(c[order1[bad]]) for c in cols1)
            sig2 = tuple(int(c[order2[bad]]) for c in cols2)
            return None, ("signature", sig1, sig2)
    table = np.empty(n1, dtype=np.int64)
    table[order1] = order2
    return table, None


def spans_isomorphic(s1, s2):
    """The canonical leg-preserving bijection between two spans, or None."""
    if s1.left != s2.left or s1.right != s2.right:
        return None
    table, _ = match_by_signature(
        [s1.f.table, s1.g.table], [s2.f.table, s2.g.table]
    )
    if table is None:
        return None
    return SpanMap(s1, s2, table)


def unique_map_to_monic(src, tgt):
    """The unique span map src => tgt when a leg of tgt is injective.

    Returns None when some apex element of src has no image.  Raises
    NotMonic when neither leg of tgt is injective.
    """
    if src.left != tgt.left or src.right != tgt.right:
        raise FeetMismatch("span map needs equal feet")
    if tgt.f.is_injective():
        lookup = -np.ones(tgt.left.size, dtype=np.int64)
        lookup[tgt.f.table] = np.arange(tgt.apex.size)
        table = lookup[src.f.table]
        if (table < 0).any():
            return None
        if not np.array_equal(tgt.g.table[table], src.g.table):
            return None
        return SpanMap(src, tgt, table)
    if tgt.g.is_injective():
        lookup = -np.ones(tgt.right.size, dtype=np.int64)
        lookup[tgt.g.table] = np.arange(tgt.apex.size)
        table = lookup[src.g.table]
        if (table < 0).any():
            return None
        if not np.array_equal(tgt.f.table[table], src.f.table):
            return None
        return SpanMap(src, tgt, table)
    raise NotMonic("target span has no injective leg")
