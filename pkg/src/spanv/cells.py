"""Families of backend objects over finite sets, and the cells between them.

An object here is a family A = (A_x) of backend objects indexed by a
finite set X.  A 1-cell (X, A) -> (Y, B) is a span X <- S -> Y together
with a component morphism alpha_s: A_{f(s)} -> B_{g(s)} for every apex
element.  A 2-cell is a map of the underlying spans u with
alpha_s = beta_{u(s)}, so equality of 2-cells is equality of u.
"""

import numpy as np

from .errors import (
    BoundaryMismatch,
    CodMismatch,
    ComponentShapeError,
    FactorizationViolation,
    FamMismatch,
    TriangleViolation,
)
from .finset import FinFn, FinSet, _code_array, compose_fn, product, pullback
from .span import Span, braiding_span, identity_span, is_identity_span


class VFam:
    """A family of backend objects indexed by a finite set."""

    def __init__(self, backend, base, objs=None):
        assert isinstance(base, FinSet)
        if not backend.trivial:
            assert objs is not None and len(objs) == base.size
        self.backend = backend
        self.base = base
        self.objs = objs

    def obj_at(self, x):
        if self.backend.trivial:
            return ()
        return self.objs[int(x)]

    def __repr__(self):
        return "VFam(%r over %r)" % (self.backend, self.base)


def fams_equal(a, b):
    if a.backend is not b.backend or a.base != b.base:
        return False
    if a.backend.trivial:
        return True
    return all(a.backend.eq_obj(x, y) for x, y in zip(a.objs, b.objs))


def unit_fam(backend):
    if backend.trivial:
        return VFam(backend, FinSet(()))
    return VFam(backend, FinSet(()), [backend.unit])


def tensor_fams(a, b):
    if a.base.shape == ():
        return b
    if b.base.shape == ():
        return a
    base = FinSet(a.base.shape + b.base.shape)
    if a.backend.trivial:
        return VFam(a.backend, base)
    objs = [a.backend.tensor_obj(x, y) for x in a.objs for y in b.objs]
    return VFam(a.backend, base, objs)


class VCell1:
    """A span with a backend morphism over every apex element."""

    def __init__(self, dom, cod, span, alphas):
        backend = dom.backend
        if span.left != dom.base or span.right != cod.base:
            raise FamMismatch("span feet %r, %r do not match family bases %r, %r"
                              % (span.left, span.right, dom.base, cod.base))
        if not backend.trivial:
            assert alphas is not None and len(alphas) == span.apex.size
            for s in range(span.apex.size):
                want_dom = dom.objs[span.f.table[s]]
                want_cod = cod.objs[span.g.table[s]]
                if not backend.eq_obj(backend.dom(alphas[s]), want_dom) or not backend.eq_obj(
                    backend.cod(alphas[s]), want_cod
                ):
                    raise ComponentShapeError("component %d has wrong boundary" % s)
        self.backend = backend
        self.dom = dom
        self.cod = cod
        self.span = span
        self.alphas = alphas
        self._is_id = None

    def alpha_at(self, s):
        if self.backend.trivial:
            return ()
        return self.alphas[int(s)]

    def __repr__(self):
        return "VCell1(%r => %r, apex %r)" % (self.dom.base, self.cod.base, self.span.apex)


def cells_equal(a, b):
    """Literal equality of 1-cells: same families, same span, same components."""
    if a is b:
        return True
    if not fams_equal(a.dom, b.dom) or not fams_equal(a.cod, b.cod):
        return False
    if a.span != b.span:
        return False
    if a.backend.trivial:
        return True
    return all(a.backend.eq_mor(x, y) for x, y in zip(a.alphas, b.alphas))


def identity_cell(fam):
    span = identity_span(fam.base)
    if fam.backend.trivial:
        alphas = None
    else:
        alphas = [fam.backend.id(obj) for obj in fam.objs]
    cell = VCell1(fam, fam, span, alphas)
    cell._is_id = True
    return cell


def is_identity_cell(cell):
    if cell._is_id is None:
        ok = is_identity_span(cell.span)
        if ok and not cell.backend.trivial:
            ok = all(
                cell.backend.eq_mor(alpha, cell.backend.id(obj))
                for alpha, obj in zip(cell.alphas, cell.dom.objs)
            )
        cell._is_id = ok
    return cell._is_id


def _is_unit_identity_cell(cell):
    return cell.dom.base.shape == () and cell.cod.base.shape == () and is_identity_cell(cell)


def compose_cells(a, b):
    """First a, then b.  Identity cells are absorbed literally."""
    if not fams_equal(a.cod, b.dom):
        raise CodMismatch("cannot chain %r after %r" % (b, a))
    if is_identity_cell(a):
        return b
    if is_identity_cell(b):
        return a
    apex, p1, p2 = pullback(a.span.g, b.span.f)
    span = Span(a.span.left, apex, b.span.right,
                compose_fn(p1, a.span.f), compose_fn(p2, b.span.g))
    if a.backend.trivial:
        alphas = None
    else:
        alphas = [
            a.backend.compose(a.alphas[i], b.alphas[j])
            for i, j in zip(p1.table.tolist(), p2.table.tolist())
        ]
    return VCell1(a.dom, b.cod, span, alphas)


def tensor_cells(a, b):
    """Side-by-side tensor.  The identity cell on the unit family is absorbed."""
    if _is_unit_identity_cell(a):
        return b
    if _is_unit_identity_cell(b):
        return a
    from .span import tensor_spans

    span = tensor_spans(a.span, b.span)
    if a.backend.trivial:
        alphas = None
    else:
        alphas = [a.backend.tensor_mor(x, y) for x in a.alphas for y in b.alphas]
    return VCell1(tensor_fams(a.dom, b.dom), tensor_fams(a.cod, b.cod), span, alphas)


def braiding_cell(a, b):
    """The symmetry (X, A) tensor (Y, B) -> (Y, B) tensor (X, A)."""
    backend = a.backend
    span = braiding_span(a.base, b.base)
    if backend.trivial:
        alphas = None
    else:
        alphas = [
            backend.braiding(a.objs[i], b.objs[j])
            for i in range(a.base.size)
            for j in range(b.base.size)
        ]
    return VCell1(tensor_fams(a, b), tensor_fams(b, a), span, alphas)


def forget_to_span(cell):
    return cell.span


class VCell2:
    """A map of enriched spans: an apex map that preserves legs and components."""

    def __init__(self, src, tgt, u):
        self.src = src
        self.tgt = tgt
        self.u = np.asarray(u, dtype=np.int64)

    def __repr__(self):
        return "VCell2(%r => %r)" % (self.src, self.tgt)


class InvalidCell:
    """A rejected 2-cell candidate, remembering why it was rejected."""

    def __init__(self, src, tgt, u, error, element=None):
        self.src = src
        self.tgt = tgt
        self.u = u
        self.error = error
        self.element = element

    def __repr__(self):
        return "InvalidCell(%s)" % self.error


def make_2cell(src, tgt, u):
    if not fams_equal(src.dom, tgt.dom) or not fams_equal(src.cod, tgt.cod):
        raise BoundaryMismatch("source and target do not share boundaries")
    u = np.asarray(u, dtype=np.int64)
    if u.shape != (src.span.apex.size,):
        raise BoundaryMismatch("apex map has length %d, expected %d" % (u.size, src.span.apex.size))
    if u.size and (u.min() < 0 or u.max() >= tgt.span.apex.size):
        raise BoundaryMismatch("apex map value out of range")
    lt = tgt.span.f.table[u]
    if not np.array_equal(lt, src.span.f.table):
        bad = int(np.nonzero(lt != src.span.f.table)[0][0])
        err = TriangleViolation("left leg disagrees at apex element %d" % bad)
        err.element = tuple(src.span.apex.decode(np.array([bad]))[0].tolist())
        raise err
    rt = tgt.span.g.table[u]
    if not np.array_equal(rt, src.span.g.table):
        bad = int(np.nonzero(rt != src.span.g.table)[0][0])
        err = TriangleViolation("right leg disagrees at apex element %d" % bad)
        err.element = tuple(src.span.apex.decode(np.array([bad]))[0].tolist())
        raise err
    backend = src.backend
    if not backend.trivial:
        for s in range(u.size):
            if not backend.eq_mor(src.alphas[s], tgt.alphas[u[s]]):
                err = FactorizationViolation("component disagrees at apex element %d" % s)
                err.element = tuple(src.span.apex.decode(np.array([s]))[0].tolist())
                raise err
    return VCell2(src, tgt, u)


def try_make_2cell(src, tgt, u):
    """Validate a 2-cell candidate; return an InvalidCell record on failure."""
    from .errors import SpanVError

    try:
        return make_2cell(src, tgt, u)
    except SpanVError as err:
        return InvalidCell(src, tgt, u, str(err), getattr(err, "element", None))


def identity_2cell(cell):
    return VCell2(cell, cell, np.arange(cell.span.apex.size, dtype=np.int64))


def vcompose_2cells(x, y):
    """First x, then y, down the page."""
    if not cells_equal(x.tgt, y.src):
        raise BoundaryMismatch("middle boundaries differ")
    return VCell2(x.src, y.tgt, y.u[x.u])


def _pair_positions(comp, left, right):
    """Split composite apex positions into (left apex, right apex) positions."""
    if is_identity_cell(left):
        return right.span.f.table, np.arange(right.span.apex.size, dtype=np.int64)
    if is_identity_cell(right):
        return np.arange(left.span.apex.size, dtype=np.int64), left.span.g.table
    codes = comp.span.apex.members
    amb = right.span.apex.ambient.size
    lpos = left.span.apex.position_of(codes // amb)
    rpos = right.span.apex.position_of(codes % amb)
    return lpos, rpos


def _pair_encode(comp, left, right, lpos, rpos):
    """Inverse of _pair_positions on the target composite."""
    if is_identity_cell(left):
        return rpos
    if is_identity_cell(right):
        return lpos
    amb = right.span.apex.ambient.size
    bound = comp.span.apex.ambient.size
    lcodes = _code_array(left.span.apex.members[lpos], bound)
    rcodes = _code_array(right.span.apex.members[rpos], bound)
    return comp.span.apex.position_of(lcodes * amb + rcodes)


def hcompose_2cells(x, y):
    """Compose side by side along the shared middle family."""
    src = compose_cells(x.src, y.src)
    tgt = compose_cells(x.tgt, y.tgt)
    lpos, rpos = _pair_positions(src, x.src, y.src)
    u = _pair_encode(tgt, x.tgt, y.tgt, x.u[lpos], y.u[rpos])
    return make_2cell(src, tgt, u)


def whisker(cell, two, side="left"):
    """Horizontally compose a 2-cell with an identity 2-cell on one side."""
    if side == "left":
        return hcompose_2cells(identity_2cell(cell), two)
    if side == "right":
        return hcompose_2cells(two, identity_2cell(cell))
    raise ValueError("side must be 'left' or 'right'")


def _tensor_positions(comp, left, right):
    if _is_unit_identity_cell(left):
        n = comp.span.apex.size
        return np.zeros(n, dtype=np.int64), np.arange(n, dtype=np.int64)
    if _is_unit_identity_cell(right):
        n = comp.span.apex.size
        return np.arange(n, dtype=np.int64), np.zeros(n, dtype=np.int64)
    p = np.arange(comp.span.apex.size, dtype=np.int64)
    return p // right.span.apex.size, p % right.span.apex.size


def _tensor_encode(comp, left, right, lpos, rpos):
    if _is_unit_identity_cell(left):
        return rpos
    if _is_unit_identity_cell(right):
        return lpos
    return lpos * right.span.apex.size + rpos


def tensor_2cells(x, y):
    src = tensor_cells(x.src, y.src)
    tgt = tensor_cells(x.tgt, y.tgt)
    lpos, rpos = _tensor_positions(src, x.src, y.src)
    u = _tensor_encode(tgt, x.tgt, y.tgt, x.u[lpos], y.u[rpos])
    return make_2cell(src, tgt, u)


def invert_2cell(two):
    """The inverse 2-cell when the apex map is a bijection, else None."""
    n = two.src.span.apex.size
    if two.tgt.span.apex.size != n:
        return None
    if n and np.bincount(two.u, minlength=n).max() != 1:
        return None
    inv = np.empty(n, dtype=np.int64)
    inv[two.u] = np.arange(n, dtype=np.int64)
    return make_2cell(two.tgt, two.src, inv)
