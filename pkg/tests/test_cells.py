"""Enriched spans, their 2-cells, and the pasting helpers."""

import numpy as np
import pytest

from spanv.cells import (
    InvalidCell,
    VCell1,
    VFam,
    braiding_cell,
    cells_equal,
    compose_cells,
    hcompose_2cells,
    identity_2cell,
    identity_cell,
    invert_2cell,
    make_2cell,
    tensor_2cells,
    tensor_cells,
    tensor_fams,
    try_make_2cell,
    unit_fam,
    vcompose_2cells,
    whisker,
)
from spanv.errors import (
    BoundaryMismatch,
    ComponentShapeError,
    FactorizationViolation,
    FamMismatch,
    OutOfBounds,
    TriangleViolation,
)
from spanv.finset import FinFn, FinSet, identity_fn
from spanv.pasting import (
    canonical_cell_iso,
    cells_isomorphic,
    find_2cells,
    find_unique_2cell,
    paste,
    search_limit,
    two_cells_equal,
)
from spanv.span import Span
from spanv.vbackend import FinSetBackend, MatBackend, TrivialBackend


def _mat_fam(be, dims):
    return VFam(be, FinSet((len(dims),)), list(dims))


def _point_cell(be, fam_a, fam_b, x, y, alpha):
    # one apex element sitting over (x, y)
    apex = FinSet((1,))
    span = Span(fam_a.base, apex, fam_b.base,
                FinFn(apex, fam_a.base, [x]), FinFn(apex, fam_b.base, [y]))
    return VCell1(fam_a, fam_b, span, [alpha])


def test_fam_validation():
    be = MatBackend(prime=3)
    with pytest.raises(AssertionError):
        VFam(be, FinSet((2,)), [1])  # one object per base element


def test_tensor_fams_row_major():
    be = MatBackend(prime=3)
    a = _mat_fam(be, [2, 3])
    b = _mat_fam(be, [1, 4])
    t = tensor_fams(a, b)
    assert t.objs == [2, 8, 3, 12]
    assert tensor_fams(unit_fam(be), a) is a


def test_cell_component_validation():
    be = MatBackend(prime=3)
    a = _mat_fam(be, [2, 3])
    with pytest.raises(ComponentShapeError):
        _point_cell(be, a, a, 0, 1, be.mor(np.zeros((2, 2))))
    cell = _point_cell(be, a, a, 0, 1, be.mor(np.zeros((2, 3))))
    assert cell.alphas[0].shape == (2, 3)
    with pytest.raises(FamMismatch):
        VCell1(a, a, Span(FinSet((3,)), FinSet((1,)), a.base,
                          FinFn(FinSet((1,)), FinSet((3,)), [0]),
                          FinFn(FinSet((1,)), a.base, [0])), [be.mor(np.zeros((2, 2)))])


def test_compose_cells_multiplies_components():
    be = MatBackend(prime=5)
    a, b, c = _mat_fam(be, [2]), _mat_fam(be, [2]), _mat_fam(be, [2])
    f = _point_cell(be, a, b, 0, 0, be.mor([[1, 2], [3, 4]]))
    g = _point_cell(be, b, c, 0, 0, be.mor([[0, 1], [1, 0]]))
    comp = compose_cells(f, g)
    assert comp.span.apex.size == 1
    assert np.array_equal(comp.alphas[0], be.compose(f.alphas[0], g.alphas[0]))


def test_tensor_cells_krons_components():
    be = MatBackend(prime=5)
    a = _mat_fam(be, [2])
    f = _point_cell(be, a, a, 0, 0, be.mor([[1, 2], [3, 4]]))
    t = tensor_cells(f, f)
    assert np.array_equal(t.alphas[0], np.kron(f.alphas[0], f.alphas[0]) % 5)


def test_identity_absorbed_in_composition():
    be = FinSetBackend()
    fam = VFam(be, FinSet((2,)), [FinSet((2,)), FinSet((3,))])
    one = identity_cell(fam)
    cell = _point_cell(be, fam, fam, 0, 1,
                       FinFn(FinSet((2,)), FinSet((3,)), [0, 2]))
    assert compose_cells(one, cell) is cell
    assert compose_cells(cell, identity_cell(fam)) is cell


def test_braiding_cell_is_invertible():
    be = MatBackend(prime=3)
    a, b = _mat_fam(be, [1, 2]), _mat_fam(be, [3])
    br = braiding_cell(a, b)
    assert br.span.f.is_bijective() and br.span.g.is_bijective()
    # braiding then braiding back is isomorphic to the identity
    back = braiding_cell(b, a)
    round_trip = compose_cells(br, back)
    assert cells_isomorphic(round_trip, identity_cell(tensor_fams(a, b))) is not None


def test_make_2cell_validations():
    tb = TrivialBackend()
    fam = VFam(tb, FinSet((2,)))
    apex = FinSet((2,))
    sp1 = Span(fam.base, apex, fam.base, identity_fn(apex), identity_fn(apex))
    sp2 = Span(fam.base, apex, fam.base, identity_fn(apex), FinFn(apex, fam.base, [1, 0]))
    c1 = VCell1(fam, fam, sp1, None)
    c2 = VCell1(fam, fam, sp2, None)
    two = make_2cell(c1, c1, [0, 1])
    assert np.array_equal(two.u, [0, 1])
    with pytest.raises(TriangleViolation) as err:
        make_2cell(c1, c2, [0, 1])
    assert err.value.element == (0,)
    with pytest.raises(BoundaryMismatch):
        make_2cell(c1, c1, [0])
    with pytest.raises(BoundaryMismatch):
        make_2cell(c1, c1, [0, 5])
    bad = try_make_2cell(c1, c2, [0, 1])
    assert isinstance(bad, InvalidCell)
    assert bad.element == (0,)


def test_make_2cell_checks_components():
    be = MatBackend(prime=3)
    fam = _mat_fam(be, [2])
    c1 = _point_cell(be, fam, fam, 0, 0, be.mor([[1, 0], [0, 1]]))
    c2 = _point_cell(be, fam, fam, 0, 0, be.mor([[1, 1], [0, 1]]))
    with pytest.raises(FactorizationViolation) as err:
        make_2cell(c1, c2, [0])
    assert err.value.element == (0,)


_TB = TrivialBackend()  # families compare by backend identity


def _parallel_pair(seed, nl=2, na=4, nr=2):
    # two parallel trivial cells with a canonical iso between them
    rng = np.random.default_rng(seed)
    dom, cod = VFam(_TB, FinSet((nl,))), VFam(_TB, FinSet((nr,)))
    apex = FinSet((na,))
    f = rng.integers(0, nl, size=na)
    g = rng.integers(0, nr, size=na)
    perm = rng.permutation(na)
    s = VCell1(dom, cod, Span(dom.base, apex, cod.base,
                              FinFn(apex, dom.base, f), FinFn(apex, cod.base, g)), None)
    t = VCell1(dom, cod, Span(dom.base, apex, cod.base,
                              FinFn(apex, dom.base, f[perm]), FinFn(apex, cod.base, g[perm])), None)
    return s, t


def test_vertical_composition_and_inverse():
    s, t = _parallel_pair(11)
    up = canonical_cell_iso(s, t)
    down = canonical_cell_iso(t, s)
    assert up is not None and down is not None
    both = vcompose_2cells(up, down)
    ok, info = two_cells_equal(both, identity_2cell(s))
    assert ok, info
    inv = invert_2cell(up)
    assert inv is not None
    ok, _ = two_cells_equal(inv, down)
    assert ok


def test_horizontal_composition_interchange():
    s1, t1 = _parallel_pair(21)
    s2, t2 = _parallel_pair(22)
    a = canonical_cell_iso(s1, t1)
    b = canonical_cell_iso(t1, s1)
    c = canonical_cell_iso(s2, t2)
    d = canonical_cell_iso(t2, s2)
    # (a ; b) horizontally composed with (c ; d) can be evaluated either way
    lhs = hcompose_2cells(vcompose_2cells(a, b), vcompose_2cells(c, d))
    rhs = vcompose_2cells(hcompose_2cells(a, c), hcompose_2cells(b, d))
    ok, info = two_cells_equal(lhs, rhs)
    assert ok, info


def test_tensor_2cells_interchange():
    s1, t1 = _parallel_pair(31)
    s2, t2 = _parallel_pair(32)
    a = canonical_cell_iso(s1, t1)
    c = canonical_cell_iso(s2, t2)
    both = tensor_2cells(a, c)
    assert both.src.span.apex.size == s1.span.apex.size * s2.span.apex.size
    ok, _ = two_cells_equal(
        both, tensor_2cells(a, c))
    assert ok


def test_whisker_and_paste():
    s, t = _parallel_pair(41, nl=2, na=3, nr=2)
    a = canonical_cell_iso(s, t)
    frame = identity_cell(s.dom)
    left = whisker(frame, a, "left")
    assert cells_equal(left.src, compose_cells(frame, s))
    b = canonical_cell_iso(t, s)
    ok, _ = two_cells_equal(paste([a, b]), identity_2cell(s))
    assert ok


def test_find_2cells_and_search_limit():
    tb = TrivialBackend()
    fam = VFam(tb, FinSet((1,)))
    apex_many = FinSet((4,))
    wide = VCell1(fam, fam, Span(fam.base, apex_many, fam.base,
                                 FinFn(apex_many, fam.base, [0] * 4),
                                 FinFn(apex_many, fam.base, [0] * 4)), None)
    found = find_2cells(identity_cell(fam), wide)
    assert len(found) == 4
    assert find_unique_2cell(identity_cell(fam), wide) is None
    assert search_limit() == 8
    with pytest.raises(OutOfBounds):
        find_2cells(wide, wide)  # 4^4 candidates is past the cap
    assert search_limit(256) == 256
    assert len(find_2cells(wide, wide, 256)) == 256
