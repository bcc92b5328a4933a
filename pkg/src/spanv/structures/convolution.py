"""The convolution product on endo-1-cells of a bimonoid carrier,
oplax inverses and antipodes, and the fusion reformulation."""

import itertools

from ..cells import (
    hcompose_2cells,
    identity_2cell,
    identity_cell,
    invert_2cell,
    tensor_2cells,
    tensor_cells,
    whisker,
)
from ..errors import NotBimodule, NotFirm
from ..pasting import cells_isomorphic, find_2cells, paste, two_cells_equal
from .base import (
    AntipodeData,
    AxiomResult,
    CheckReport,
    MoritaContextData,
    compose_chain,
    tensor_chain,
)


def convolution(bim, f, g):
    """lcm, then f x g, then mlt."""
    return compose_chain(bim.comonoid.lcm, tensor_cells(f, g), bim.monoid.mlt)


def convolution_unit(bim):
    """lcu then uni: the unit object of the convolution product."""
    return compose_chain(bim.comonoid.lcu, bim.monoid.uni)


def convolution_2cells(bim, x, y):
    """The convolution of two 2-cells, whiskered by lcm and mlt."""
    inner = tensor_2cells(x, y)
    inner = whisker(bim.comonoid.lcm, inner, "left")
    return whisker(bim.monoid.mlt, inner, "right")


def _firmness(bim, ctx):
    """The two defining equations with invertibility, plus the inverses."""
    id_p = identity_2cell(ctx.p)
    id_q = identity_2cell(ctx.q)
    results = []
    side_p = convolution_2cells(bim, id_p, ctx.mu)
    other_p = convolution_2cells(bim, ctx.tau, id_p)
    ok, info = two_cells_equal(side_p, other_p)
    results.append(AxiomResult("pqp-exchange", ok, info))
    alpha = invert_2cell(side_p)
    results.append(AxiomResult(
        "pqp-invertible", alpha is not None and invert_2cell(other_p) is not None))
    side_q = convolution_2cells(bim, id_q, ctx.tau)
    other_q = convolution_2cells(bim, ctx.mu, id_q)
    ok, info = two_cells_equal(side_q, other_q)
    results.append(AxiomResult("qpq-exchange", ok, info))
    beta = invert_2cell(side_q)
    results.append(AxiomResult(
        "qpq-invertible", beta is not None and invert_2cell(other_q) is not None))
    return results, alpha, beta


def check_oplax_inverse(bim, ctx):
    """Check that a Morita context on the carrier's endo-cells is firm."""
    results, _, _ = _firmness(bim, ctx)
    return CheckReport(results)


def morita_uniqueness_iso(bim, ctx1, ctx2):
    """The canonical isomorphism between the q-sides of two firm contexts.

    Returns (phi, psi), mutually inverse 2-cells between the two q
    1-cells, built from the inverses guaranteed by firmness.  Raises
    NotFirm if a required inverse does not exist.
    """
    _, alpha1, beta1 = _firmness(bim, ctx1)
    _, alpha2, beta2 = _firmness(bim, ctx2)
    if alpha1 is None or beta1 is None or alpha2 is None or beta2 is None:
        raise NotFirm("a defining composite is not invertible")
    id_q1 = identity_2cell(ctx1.q)
    id_q2 = identity_2cell(ctx2.q)

    def conv2(x, y):
        return convolution_2cells(bim, x, y)

    phi = paste([
        beta1,
        conv2(conv2(id_q1, alpha2), id_q1),
        conv2(conv2(ctx1.mu, id_q2), ctx1.tau),
    ])
    psi = paste([
        beta2,
        conv2(conv2(id_q2, alpha1), id_q2),
        conv2(conv2(ctx2.mu, id_q1), ctx2.tau),
    ])
    ok1, info1 = two_cells_equal(paste([phi, psi]), id_q1)
    ok2, info2 = two_cells_equal(paste([psi, phi]), id_q2)
    assert ok1, info1
    assert ok2, info2
    return phi, psi


def antipode_context(bim, antipode):
    """The Morita context carried by an antipode: p is the identity cell."""
    one = identity_cell(bim.monoid.carrier)
    return MoritaContextData(one, antipode.s, antipode.tau2, antipode.tau1)


def check_oplax_hopf(bim, antipode):
    """Check an antipode: its context on (identity, s) must be firm."""
    from ..cells import InvalidCell

    bad = [name for name in ("tau1", "tau2")
           if isinstance(getattr(antipode, name), InvalidCell)]
    if bad:
        inv = getattr(antipode, bad[0])
        return CheckReport([AxiomResult(
            "antipode-cells", False,
            {"invalid": bad[0], "element": inv.element}, note=inv.error)])
    return check_oplax_inverse(bim, antipode_context(bim, antipode))


def fusion_cell(bim):
    """(1 x lcm) then (mlt x 1) on the doubled carrier."""
    one = identity_cell(bim.monoid.carrier)
    return compose_chain(
        tensor_chain(one, bim.comonoid.lcm), tensor_chain(bim.monoid.mlt, one))


def convolution_to_endo(bim, f):
    """(1 x lcm) then (1 x f x 1) then (mlt x 1)."""
    one = identity_cell(bim.monoid.carrier)
    return compose_chain(
        tensor_chain(one, bim.comonoid.lcm),
        tensor_chain(one, f, one),
        tensor_chain(bim.monoid.mlt, one),
    )


def endo_to_convolution(bim, g):
    """(uni x 1) then g then (1 x lcu)."""
    one = identity_cell(bim.monoid.carrier)
    return compose_chain(
        tensor_chain(bim.monoid.uni, one), g, tensor_chain(one, bim.comonoid.lcu))


def _is_bimodule_endo(bim, g):
    """Left linearity for (mlt x 1) and right colinearity for (1 x lcm)."""
    one = identity_cell(bim.monoid.carrier)
    act = tensor_chain(bim.monoid.mlt, one)
    coact = tensor_chain(one, bim.comonoid.lcm)
    linear = cells_isomorphic(
        compose_chain(act, g), compose_chain(tensor_chain(one, g), act))
    colinear = cells_isomorphic(
        compose_chain(g, coact), compose_chain(coact, tensor_chain(g, one)))
    return linear is not None and colinear is not None


def check_fusion_inverse(bim, candidate, limit=None):
    """Check a candidate oplax inverse of the fusion cell.

    The candidate must be a module and comodule endomorphism of the
    doubled carrier (else NotBimodule).  Searches for the two collapse
    2-cells and verifies the exchange equations with invertibility.
    """
    if not _is_bimodule_endo(bim, candidate):
        raise NotBimodule("candidate is not linear and colinear")
    fus = fusion_cell(bim)
    if not _is_bimodule_endo(bim, fus):
        raise NotBimodule("fusion cell is not linear and colinear")
    doubled = tensor_cells(
        identity_cell(bim.monoid.carrier), identity_cell(bim.monoid.carrier))
    t1s = find_2cells(compose_chain(fus, candidate), doubled, limit)
    t2s = find_2cells(compose_chain(candidate, fus), doubled, limit)
    id_c = identity_2cell(candidate)
    id_f = identity_2cell(fus)
    for t1, t2 in itertools.product(t1s, t2s):
        pairs = [
            (hcompose_2cells(id_c, t1), hcompose_2cells(t2, id_c)),
            (hcompose_2cells(t1, id_f), hcompose_2cells(id_f, t2)),
        ]
        ok = all(two_cells_equal(a, b)[0] for a, b in pairs)
        ok = ok and all(
            invert_2cell(x) is not None for a, b in pairs for x in (a, b))
        if ok:
            return CheckReport([
                AxiomResult("fusion-collapse-left", True),
                AxiomResult("fusion-collapse-right", True),
            ])
    return CheckReport([AxiomResult(
        "fusion-inverse", False,
        {"candidates": [len(t1s), len(t2s)]},
        note="no pair of collapse cells satisfies the exchange equations")])
