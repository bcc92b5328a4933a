"""Comparing and stacking 2-cells up to structural isomorphism.

Composites built in different association orders have different but
canonically isomorphic apexes.  The canonical isomorphism matches apex
elements by their signature: left leg value, right leg value and
component morphism.  Ties are broken by ascending apex code on both
sides, which keeps the choice deterministic.  paste() stacks a list of
2-cells vertically, inserting these bridges wherever adjacent
boundaries agree only up to isomorphism.
"""

import itertools
import os

import numpy as np

from .cells import VCell2, cells_equal, fams_equal, identity_2cell, make_2cell
from .errors import OutOfBounds, PasteError
from .span import match_by_signature


def search_limit(override=None):
    """Cap on exhaustive 2-cell searches: argument, then the OHL_MAX_APEX
    environment variable, then 8."""
    if override is not None:
        return int(override)
    env = os.environ.get("OHL_MAX_APEX")
    if env is not None:
        return int(env)
    return 8


def _signature_cols(a, b):
    cols_a = [a.span.f.table, a.span.g.table]
    cols_b = [b.span.f.table, b.span.g.table]
    backend = a.backend
    if not backend.trivial:
        keys_a = [backend.mor_key(m) for m in a.alphas]
        keys_b = [backend.mor_key(m) for m in b.alphas]
        ids = {key: i for i, key in enumerate(sorted(set(keys_a + keys_b)))}
        cols_a.append(np.array([ids[k] for k in keys_a], dtype=np.int64))
        cols_b.append(np.array([ids[k] for k in keys_b], dtype=np.int64))
    return cols_a, cols_b


def _decode_sig(cell, sig):
    left = cell.dom.base.decode(np.array(sig[0]))
    right = cell.cod.base.decode(np.array(sig[1]))
    return {"left": left.tolist(), "right": right.tolist()}


def _canonical_iso_ex(a, b):
    if not fams_equal(a.dom, b.dom) or not fams_equal(a.cod, b.cod):
        return None, {"reason": "different boundary families"}
    cols_a, cols_b = _signature_cols(a, b)
    table, info = match_by_signature(cols_a, cols_b)
    if table is None:
        if info[0] == "size":
            return None, {"reason": "apex sizes differ", "sizes": [info[1], info[2]]}
        return None, {
            "reason": "signature multiplicities differ",
            "this": _decode_sig(a, info[1]),
            "other": _decode_sig(b, info[2]),
        }
    return make_2cell(a, b, table), None


def canonical_cell_iso(a, b):
    """The canonical invertible 2-cell between two 1-cells, or None."""
    cell, _ = _canonical_iso_ex(a, b)
    return cell


def cells_isomorphic(a, b):
    return canonical_cell_iso(a, b)


def _element_info(x, y, ib, s):
    src_el = x.src.span.apex.decode(np.array([s]))[0].tolist()
    lhs_t = int(ib.u[x.u[s]]) if ib is not None else int(x.u[s])
    this = y.tgt.span.apex.decode(np.array([lhs_t]))[0].tolist()
    return {"element": src_el, "image": this}


def two_cells_equal(x, y):
    """Compare two 2-cells through the canonical boundary bridges.

    Returns (ok, info); on failure info decodes the first apex element
    whose images disagree, or explains why the boundaries cannot be
    bridged at all.
    """
    if cells_equal(x.src, y.src) and cells_equal(x.tgt, y.tgt):
        if np.array_equal(x.u, y.u):
            return True, None
        s = int(np.nonzero(x.u != y.u)[0][0])
        return False, {
            "element": x.src.span.apex.decode(np.array([s]))[0].tolist(),
            "this": x.tgt.span.apex.decode(np.array([int(x.u[s])]))[0].tolist(),
            "other": y.tgt.span.apex.decode(np.array([int(y.u[s])]))[0].tolist(),
        }
    ia, info_a = _canonical_iso_ex(x.src, y.src)
    if ia is None:
        return False, {"reason": "sources not isomorphic", "detail": info_a}
    ib, info_b = _canonical_iso_ex(x.tgt, y.tgt)
    if ib is None:
        return False, {"reason": "targets not isomorphic", "detail": info_b}
    lhs = ib.u[x.u]
    rhs = y.u[ia.u]
    if np.array_equal(lhs, rhs):
        return True, None
    s = int(np.nonzero(lhs != rhs)[0][0])
    return False, {
        "element": x.src.span.apex.decode(np.array([s]))[0].tolist(),
        "this": y.tgt.span.apex.decode(np.array([int(lhs[s])]))[0].tolist(),
        "other": y.tgt.span.apex.decode(np.array([int(rhs[s])]))[0].tolist(),
    }


def paste(faces):
    """Stack 2-cells top to bottom, bridging adjacent boundaries."""
    faces = list(faces)
    assert faces
    acc = faces[0]
    for face in faces[1:]:
        if cells_equal(acc.tgt, face.src):
            u = face.u[acc.u]
        else:
            bridge, info = _canonical_iso_ex(acc.tgt, face.src)
            if bridge is None:
                raise PasteError("adjacent boundaries cannot be bridged",
                                 acc.tgt, face.src, info)
            u = face.u[bridge.u[acc.u]]
        acc = VCell2(acc.src, face.tgt, u)
    return acc


def paste_with_boundaries(src_cell, faces, tgt_cell):
    """Paste faces between prescribed outer boundaries."""
    return paste([identity_2cell(src_cell)] + list(faces) + [identity_2cell(tgt_cell)])


def _candidate_options(src, tgt):
    if not fams_equal(src.dom, tgt.dom) or not fams_equal(src.cod, tgt.cod):
        return None
    backend = src.backend
    options = []
    for s in range(src.span.apex.size):
        mask = (tgt.span.f.table == src.span.f.table[s]) & (
            tgt.span.g.table == src.span.g.table[s]
        )
        cand = np.nonzero(mask)[0]
        if not backend.trivial:
            cand = [t for t in cand if backend.eq_mor(src.alphas[s], tgt.alphas[int(t)])]
        else:
            cand = cand.tolist()
        if not cand:
            return None
        options.append(cand)
    return options


def find_2cells(src, tgt, limit=None):
    """All 2-cells src => tgt, raising OutOfBounds past the search cap."""
    cap = search_limit(limit)
    options = _candidate_options(src, tgt)
    if options is None:
        return []
    count = 1
    for opts in options:
        count *= len(opts)
        if count > cap:
            raise OutOfBounds("more than %d candidate 2-cells" % cap)
    return [
        VCell2(src, tgt, np.array(combo, dtype=np.int64))
        for combo in itertools.product(*options)
    ]


def find_unique_2cell(src, tgt):
    """The unique 2-cell src => tgt if there is exactly one, else None."""
    options = _candidate_options(src, tgt)
    if options is None:
        return None
    count = 1
    for opts in options:
        count *= len(opts)
    if count != 1:
        return None
    return VCell2(src, tgt, np.array([opts[0] for opts in options], dtype=np.int64))
