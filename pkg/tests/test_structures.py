"""Bimonoid, Hopf, Frobenius, module and morphism checkers on pair carriers."""

import numpy as np
import pytest

from spanv.cells import (
    VCell1,
    VFam,
    cells_equal,
    identity_cell,
    invert_2cell,
    tensor_cells,
    tensor_fams,
    unit_fam,
)
from spanv.errors import NotBimodule
from spanv.finset import UNIT, FinFn, FinSet, diagonal_fn, identity_fn, reindex_fn, terminal_fn
from spanv.hopfcat import codiscrete_groupoid, groupoid_structures
from spanv.pasting import (
    canonical_cell_iso,
    cells_isomorphic,
    find_2cells,
    find_unique_2cell,
    identity_2cell,
    paste,
    two_cells_equal,
)
from spanv.span import Span, reverse_span, span_legs_bijective, spans_isomorphic
from spanv.structures import (
    AntipodeData,
    ComonoidData,
    FrobeniusData,
    MonoidData,
    OplaxBimonoidData,
    OplaxMorphismData,
    antipode_context,
    check_frobenius,
    check_fusion_inverse,
    check_module_morphism,
    check_oplax_bimonoid,
    check_oplax_bimonoid_morphism,
    check_oplax_hopf,
    check_oplax_module,
    check_strict_comonoid,
    check_strict_monoid,
    compose_chain,
    convolution,
    convolution_to_endo,
    convolution_unit,
    endo_to_convolution,
    fusion_cell,
    infer_unique_structure_cells,
    morita_uniqueness_iso,
    regular_module,
    tensor_chain,
    tensor_module_morphism,
    tensor_modules,
    unit_module,
)
from spanv.vbackend import MatBackend, TrivialBackend

TWELVE = ["ax1", "ax2a", "ax2b", "ax3", "ax4a", "ax4b",
          "ax5", "ax6", "ax7", "ax8", "ax9", "ax10"]


@pytest.fixture(scope="module")
def pair2():
    return groupoid_structures(codiscrete_groupoid(2))


def test_pair_bimonoid_all_axioms(pair2):
    mon, com, _, bim, _, _ = pair2
    assert check_strict_monoid(mon).ok
    assert check_strict_comonoid(com).ok
    report = check_oplax_bimonoid(bim)
    assert report.ok
    names = [r.name for r in report.results]
    for axiom in TWELVE:
        assert axiom in names


def test_pair_structure_cells_frozen(pair2):
    # apex maps for the four structure cells, |X| = 2, in apex order
    _, _, _, bim, _, _ = pair2
    assert np.array_equal(bim.theta.u, np.arange(8))
    assert np.array_equal(bim.theta0.u, [0, 3])
    assert np.array_equal(bim.chi.u, [0, 1, 6, 7, 8, 9, 14, 15])
    assert np.array_equal(bim.chi0.u, [0, 0])


def test_infer_recovers_structure_cells(pair2):
    mon, com, _, bim, _, _ = pair2
    cells = infer_unique_structure_cells(mon, com)
    assert cells is not None
    for found, given in zip(cells, (bim.theta, bim.theta0, bim.chi, bim.chi0)):
        assert np.array_equal(found.u, given.u)


def test_pair_hopf_antipode(pair2):
    _, _, _, bim, anti, _ = pair2
    report = check_oplax_hopf(bim, anti)
    assert report.ok
    assert [r.name for r in report.results] == [
        "pqp-exchange", "pqp-invertible", "qpq-exchange", "qpq-invertible"]
    # the antipode reverses pairs: (a,b) goes to (b,a)
    sw = anti.s.span
    base = anti.s.dom.base
    for pos in range(sw.apex.size):
        a, b = base.decode([sw.f.table[pos]])[0]
        assert tuple(base.decode([sw.g.table[pos]])[0]) == (b, a)


def test_antipode_cells_are_semantic(pair2):
    # tau1 sends (a,b) to the triple (a,b,a); tau2 to (a,b,b)
    _, _, _, bim, anti, _ = pair2
    for tau, third in ((anti.tau1, 0), (anti.tau2, 1)):
        src, tgt = tau.src.span, tau.tgt.span
        base = tau.src.dom.base
        for pos in range(src.apex.size):
            a, b = base.decode([src.f.table[pos]])[0]
            triple = tuple(tgt.apex.decode([tau.u[pos]])[0])
            assert triple == (a, b, (a, b)[third])


def test_fusion_template(pair2):
    _, _, _, bim, _, _ = pair2
    fus = fusion_cell(bim)
    x3, x4 = FinSet((2, 2, 2)), FinSet((2, 2, 2, 2))
    template = Span(x4, x3, x4,
                    reindex_fn(x3, x4, [0, 1, 1, 2]),
                    reindex_fn(x3, x4, [0, 2, 1, 2]))
    assert spans_isomorphic(fus.span, template) is not None
    assert not span_legs_bijective(fus.span)
    # the element (0,1,0) of the cube maps to (0,1,1,0) and (0,0,1,0)
    hits = [pos for pos in range(fus.span.apex.size)
            if fus.span.f.table[pos] == 6 and fus.span.g.table[pos] == 2]
    assert hits == [2]


def test_fusion_reverse_is_inverse(pair2):
    _, _, _, bim, _, _ = pair2
    fus = fusion_cell(bim)
    rev = VCell1(fus.cod, fus.dom, reverse_span(fus.span), None)
    report = check_fusion_inverse(bim, rev)
    assert report.ok


def test_convolution_unit_and_f_of_identity(pair2):
    _, _, _, bim, _, _ = pair2
    one = identity_cell(bim.monoid.carrier)
    assert cells_equal(convolution_to_endo(bim, one), fusion_cell(bim))
    cu = convolution_unit(bim)
    # the unit of convolution lands on constant pairs only
    base = cu.cod.base
    for pos in range(cu.span.apex.size):
        a, b = base.decode([cu.span.g.table[pos]])[0]
        assert a == b


def _random_endo(rng, carrier):
    base = carrier.base
    na = int(rng.integers(1, 6))
    apex = FinSet((na,))
    return VCell1(carrier, carrier,
                  Span(base, apex, base,
                       FinFn(apex, base, rng.integers(0, base.size, size=na)),
                       FinFn(apex, base, rng.integers(0, base.size, size=na))),
                  None)


def test_convolution_endo_correspondence(pair2):
    # F(f (*) g) = F(f) ; F(g) and G(F(f)) = f, on random 1-cells
    _, _, _, bim, _, _ = pair2
    rng = np.random.default_rng(5)
    carrier = bim.monoid.carrier
    for _ in range(10):
        f = _random_endo(rng, carrier)
        g = _random_endo(rng, carrier)
        conv_fg = convolution(bim, f, g)
        lhs = convolution_to_endo(bim, conv_fg)
        rhs = compose_chain(convolution_to_endo(bim, f), convolution_to_endo(bim, g))
        assert cells_isomorphic(lhs, rhs) is not None
        back = endo_to_convolution(bim, convolution_to_endo(bim, f))
        assert cells_isomorphic(back, f) is not None


def test_convolution_associative_up_to_iso(pair2):
    _, _, _, bim, _, _ = pair2
    rng = np.random.default_rng(6)
    carrier = bim.monoid.carrier
    f, g, h = (_random_endo(rng, carrier) for _ in range(3))
    lhs = convolution(bim, f, convolution(bim, g, h))
    rhs = convolution(bim, convolution(bim, f, g), h)
    assert cells_isomorphic(lhs, rhs) is not None


def _relabel(cell, perm):
    sp = cell.span
    apex = FinSet((sp.apex.size,))
    return VCell1(cell.dom, cell.cod,
                  Span(sp.left, apex, sp.right,
                       FinFn(apex, sp.left, sp.f.table[perm]),
                       FinFn(apex, sp.right, sp.g.table[perm])),
                  None)


def test_morita_uniqueness(pair2):
    _, _, _, bim, anti, _ = pair2
    one = identity_cell(bim.monoid.carrier)
    s2 = _relabel(anti.s, np.array([1, 3, 0, 2]))
    cu = convolution_unit(bim)
    anti2 = AntipodeData(
        s2,
        find_unique_2cell(convolution(bim, one, s2), cu),
        find_unique_2cell(convolution(bim, s2, one), cu))
    assert check_oplax_hopf(bim, anti2).ok
    ctx1 = antipode_context(bim, anti)
    ctx2 = antipode_context(bim, anti2)
    phi, psi = morita_uniqueness_iso(bim, ctx1, ctx2)
    ok, info = two_cells_equal(paste([phi, psi]), identity_2cell(ctx1.q))
    assert ok, info
    ok, info = two_cells_equal(paste([psi, phi]), identity_2cell(ctx2.q))
    assert ok, info


def test_module_suite(pair2):
    mon, _, _, bim, _, _ = pair2
    reg = regular_module(mon)
    assert check_oplax_module(mon, reg).ok
    unit = unit_module(bim)
    assert check_oplax_module(mon, unit).ok
    double = tensor_modules(bim, reg, reg)
    assert check_oplax_module(mon, double).ok


def test_tensor_of_strict_module_morphisms(pair2):
    mon, _, _, bim, _, _ = pair2
    reg = regular_module(mon)
    f = identity_cell(reg.carrier)
    phi = canonical_cell_iso(
        compose_chain(reg.rho, f),
        compose_chain(tensor_chain(f, identity_cell(mon.carrier)), reg.rho))
    assert phi is not None and invert_2cell(phi) is not None
    assert check_module_morphism(mon, reg, reg, f, phi).ok
    fg, tau = tensor_module_morphism(bim, reg, reg, reg, reg, (f, phi), (f, phi))
    assert invert_2cell(tau) is not None
    double = tensor_modules(bim, reg, reg)
    assert check_module_morphism(mon, double, double, fg, tau).ok


def test_identity_bimonoid_morphism(pair2):
    _, _, _, bim, _, _ = pair2
    f = identity_cell(bim.monoid.carrier)
    ff = tensor_cells(f, f)
    phi = canonical_cell_iso(compose_chain(bim.monoid.mlt, f),
                             compose_chain(ff, bim.monoid.mlt))
    phi0 = canonical_cell_iso(compose_chain(bim.monoid.uni, f), bim.monoid.uni)
    psi = canonical_cell_iso(compose_chain(bim.comonoid.lcm, ff),
                             compose_chain(f, bim.comonoid.lcm))
    psi0 = canonical_cell_iso(bim.comonoid.lcu,
                              compose_chain(f, bim.comonoid.lcu))
    morph = OplaxMorphismData(f, phi, phi0, psi, psi0)
    report = check_oplax_bimonoid_morphism(bim, bim, morph)
    assert report.ok
    assert len(report.results) == 10


def _idempotent_bimonoid():
    # the two-element monoid {e, a} with aa = a; not a group
    tb = TrivialBackend()
    m, mm = FinSet((2,)), FinSet((2, 2))
    carrier = VFam(tb, m)
    mlt = VCell1(tensor_fams(carrier, carrier), carrier,
                 Span(mm, mm, m, identity_fn(mm), FinFn(mm, m, [0, 1, 1, 1])), None)
    uni = VCell1(unit_fam(tb), carrier,
                 Span(UNIT, UNIT, m, identity_fn(UNIT), FinFn(UNIT, m, [0])), None)
    lcm = VCell1(carrier, tensor_fams(carrier, carrier),
                 Span(m, m, mm, identity_fn(m), diagonal_fn(m)), None)
    lcu = VCell1(carrier, unit_fam(tb),
                 Span(m, m, UNIT, identity_fn(m), terminal_fn(m)), None)
    monoid = MonoidData(carrier, mlt, uni)
    comonoid = ComonoidData(carrier, lcm, lcu)
    cells = infer_unique_structure_cells(monoid, comonoid)
    assert cells is not None
    return OplaxBimonoidData(monoid, comonoid, *cells)


def test_idempotent_monoid_is_bimonoid_but_not_hopf():
    bim = _idempotent_bimonoid()
    assert check_oplax_bimonoid(bim).ok
    one = identity_cell(bim.monoid.carrier)
    # no 2-cell can collapse convolution with the identity to the unit
    assert find_2cells(convolution(bim, one, one), convolution_unit(bim)) == []
    fus = fusion_cell(bim)
    rev = VCell1(fus.cod, fus.dom, reverse_span(fus.span), None)
    with pytest.raises(NotBimodule):
        check_fusion_inverse(bim, rev)


def test_frobenius_structures(pair2):
    _, _, _, _, _, frob = pair2
    report = check_frobenius(frob)
    assert report.ok
    assert [r.name for r in report.results] == [
        "mon-assoc", "mon-unit-l", "mon-unit-r",
        "comon-coassoc", "comon-counit-l", "comon-counit-r",
        "frob-l", "frob-r"]


def test_broken_comultiplication_is_located(pair2):
    mon, _, cocomp, _, _, _ = pair2
    sp = cocomp.lcm.span
    keep = np.arange(sp.apex.size) != 3  # drop one composable pair
    apex = FinSet((int(keep.sum()),))
    broken = VCell1(cocomp.lcm.dom, cocomp.lcm.cod,
                    Span(sp.left, apex, sp.right,
                         FinFn(apex, sp.left, sp.f.table[keep]),
                         FinFn(apex, sp.right, sp.g.table[keep])), None)
    report = check_frobenius(FrobeniusData(
        mon, ComonoidData(cocomp.carrier, broken, cocomp.lcu)))
    assert not report.ok
    bad = report["frob-l"]
    assert not bad.ok
    # legs of the mismatched signature read (x,y,y,z) and (x,w,w,z)
    assert bad.counterexample == {
        "reason": "signature multiplicities differ",
        "this": {"left": [0, 0, 0, 1], "right": [0, 1, 1, 1]},
        "other": {"left": [0, 1, 1, 0], "right": [0, 0, 0, 0]}}


def test_pair_sizes_one_and_three():
    for n in (1, 3):
        mon, com, _, bim, anti, frob = groupoid_structures(codiscrete_groupoid(n))
        assert check_oplax_bimonoid(bim).ok
        assert check_oplax_hopf(bim, anti).ok
        assert check_frobenius(frob).ok
