"""Command line interface: check structure files and generate demos.

A structure file is one JSON object with ``schema_version``, a ``kind``,
a ``backend`` description and row-major integer tables for everything
else.  ``check`` validates the file, runs the axiom suite for its kind
and exits 0 on success, 1 on a failed axiom, 2 on a parse or schema
problem.  ``demo`` writes ready-made structure files.
"""

import argparse
import hashlib
import json
import os
import sys
from datetime import datetime, timezone

import numpy as np

from . import __version__
from .cells import VCell1, VFam, identity_cell, tensor_cells, tensor_fams, try_make_2cell, unit_fam
from .errors import OutOfBounds, ParseError, SchemaError, SpanVError
from .finset import FinFn, FinSet
from .hopfcat import (
    FrobVCat,
    HopfVCat,
    check_frobenius_vcat,
    check_hopf_vcat,
    check_semi_hopf_vcat,
    codiscrete_groupoid,
    group_algebra_hopf,
    groupoid_structures,
    groupoid_to_hopfcat,
    mat_frobenius_example,
)
from .span import Span
from .structures import (
    AntipodeData,
    CheckReport,
    ComonoidData,
    FrobeniusData,
    MonoidData,
    OplaxBimonoidData,
    OplaxModuleData,
    OplaxMorphismData,
    check_frobenius,
    check_oplax_bimonoid,
    check_oplax_bimonoid_morphism,
    check_oplax_hopf,
    check_oplax_module,
    check_strict_monoid,
    compose_chain,
    convolution,
    convolution_unit,
    structure_cell_boundaries,
    tensor_chain,
)
from .vbackend import FinSetBackend, MatBackend, TrivialBackend

SCHEMA_VERSION = 1
KINDS = ("bimonoid", "hopf", "frobenius", "hopfcat", "frobcat", "module", "morphism")
MAX_OBJECTS = 4
MAX_DIM = 4
MAX_PRIME = 97


# ---------------------------------------------------------------- json codec

def _need(data, key):
    if not isinstance(data, dict) or key not in data:
        raise SchemaError("missing field %r" % key)
    return data[key]


def _int_list(values):
    if not isinstance(values, list):
        raise SchemaError("expected a list of integers, got %r" % type(values).__name__)
    try:
        return np.asarray(values, dtype=np.int64)
    except (TypeError, ValueError, OverflowError):
        raise SchemaError("expected a list of integers")


def _backend_to_json(backend):
    if isinstance(backend, TrivialBackend):
        return {"kind": "trivial"}
    if isinstance(backend, FinSetBackend):
        return {"kind": "finset"}
    if backend.boolean:
        return {"kind": "mat", "boolean": True}
    return {"kind": "mat", "prime": int(backend.prime)}


def _backend_from_json(data):
    kind = _need(data, "kind")
    if kind == "trivial":
        return TrivialBackend()
    if kind == "finset":
        return FinSetBackend()
    if kind == "mat":
        if data.get("boolean"):
            return MatBackend(boolean=True)
        return MatBackend(prime=int(_need(data, "prime")))
    raise SchemaError("unknown backend kind %r" % (kind,))


def _set_to_json(s):
    # apexes are recorded by size only; legs and apex maps use positions,
    # which do not depend on how the apex was presented in memory
    return {"size": int(s.size)}


def _set_from_json(data):
    return FinSet((int(_need(data, "size")),))


def _obj_to_json(backend, obj):
    if backend.trivial:
        return None
    if isinstance(backend, MatBackend):
        return int(obj)
    return list(obj.shape)


def _obj_from_json(backend, data):
    if backend.trivial:
        return ()
    if isinstance(backend, MatBackend):
        return int(data)
    return FinSet(data)


def _mor_to_json(backend, mor):
    if backend.trivial:
        return None
    if isinstance(backend, MatBackend):
        return {"dom": int(mor.shape[0]), "cod": int(mor.shape[1]),
                "data": [int(v) for v in mor.ravel()]}
    return {"dom": list(mor.dom.shape), "cod": list(mor.cod.shape),
            "table": [int(v) for v in mor.table]}


def _mor_from_json(backend, data):
    if backend.trivial:
        return ()
    if isinstance(backend, MatBackend):
        return backend.mor(_int_list(_need(data, "data")),
                           int(_need(data, "dom")), int(_need(data, "cod")))
    return FinFn(FinSet(_need(data, "dom")), FinSet(_need(data, "cod")),
                 _int_list(_need(data, "table")))


def _fam_to_json(fam):
    objs = None
    if not fam.backend.trivial:
        objs = [_obj_to_json(fam.backend, o) for o in fam.objs]
    return {"base": list(fam.base.shape), "objs": objs}


def _fam_from_json(backend, data):
    objs = None
    if not backend.trivial:
        objs = [_obj_from_json(backend, o) for o in _need(data, "objs")]
    return VFam(backend, FinSet(_need(data, "base")), objs)


def _span_cell_to_json(cell):
    alphas = None
    if not cell.backend.trivial:
        alphas = [_mor_to_json(cell.backend, a) for a in cell.alphas]
    return {"apex": _set_to_json(cell.span.apex),
            "f": [int(v) for v in cell.span.f.table],
            "g": [int(v) for v in cell.span.g.table],
            "alphas": alphas}


def _span_cell_from_json(data, dom_fam, cod_fam):
    backend = dom_fam.backend
    apex = _set_from_json(_need(data, "apex"))
    span = Span(dom_fam.base, apex, cod_fam.base,
                FinFn(apex, dom_fam.base, _int_list(_need(data, "f"))),
                FinFn(apex, cod_fam.base, _int_list(_need(data, "g"))))
    alphas = None
    if not backend.trivial:
        raw = _need(data, "alphas")
        if not isinstance(raw, list) or len(raw) != apex.size:
            raise SchemaError("alphas must list one morphism per apex element")
        alphas = [_mor_from_json(backend, a) for a in raw]
    return VCell1(dom_fam, cod_fam, span, alphas)


def _u_from_json(data, src_cell, tgt_cell):
    u = _int_list(data)
    if u.shape != (src_cell.span.apex.size,):
        raise SchemaError("apex map has length %d, expected %d"
                          % (u.size, src_cell.span.apex.size))
    return try_make_2cell(src_cell, tgt_cell, u)


def _bimonoid_block_to_json(bim, antipode=None):
    out = {
        "carrier": _fam_to_json(bim.monoid.carrier),
        "mlt": _span_cell_to_json(bim.monoid.mlt),
        "uni": _span_cell_to_json(bim.monoid.uni),
        "lcm": _span_cell_to_json(bim.comonoid.lcm),
        "lcu": _span_cell_to_json(bim.comonoid.lcu),
        "cells": {
            "theta": [int(v) for v in bim.theta.u],
            "theta0": [int(v) for v in bim.theta0.u],
            "chi": [int(v) for v in bim.chi.u],
            "chi0": [int(v) for v in bim.chi0.u],
        },
    }
    if antipode is not None:
        out["antipode"] = {
            "s": _span_cell_to_json(antipode.s),
            "tau1": [int(v) for v in antipode.tau1.u],
            "tau2": [int(v) for v in antipode.tau2.u],
        }
    return out


def _bimonoid_block_from_json(backend, data, with_antipode):
    carrier = _fam_from_json(backend, _need(data, "carrier"))
    doubled = tensor_fams(carrier, carrier)
    unit = unit_fam(backend)
    monoid = MonoidData(carrier,
                        _span_cell_from_json(_need(data, "mlt"), doubled, carrier),
                        _span_cell_from_json(_need(data, "uni"), unit, carrier))
    comonoid = ComonoidData(carrier,
                            _span_cell_from_json(_need(data, "lcm"), carrier, doubled),
                            _span_cell_from_json(_need(data, "lcu"), carrier, unit))
    bounds = structure_cell_boundaries(monoid, comonoid)
    cells = _need(data, "cells")
    made = [_u_from_json(_need(cells, name), *bounds[name])
            for name in ("theta", "theta0", "chi", "chi0")]
    bim = OplaxBimonoidData(monoid, comonoid, *made)
    if not with_antipode:
        return bim, None
    anti = _need(data, "antipode")
    s = _span_cell_from_json(_need(anti, "s"), carrier, carrier)
    one = identity_cell(carrier)
    tau1 = _u_from_json(_need(anti, "tau1"),
                        convolution(bim, one, s), convolution_unit(bim))
    tau2 = _u_from_json(_need(anti, "tau2"),
                        convolution(bim, s, one), convolution_unit(bim))
    return bim, AntipodeData(s, tau1, tau2)


def _vcat_tables_to_json(h, local_names):
    backend, n = h.backend, h.n
    out = {
        "objects": n,
        "homs": [[_obj_to_json(backend, h.homs[x][y]) for y in range(n)] for x in range(n)],
        "m": [[[_mor_to_json(backend, h.m[x][y][z]) for z in range(n)]
               for y in range(n)] for x in range(n)],
        "u": [_mor_to_json(backend, h.u[x]) for x in range(n)],
    }
    for name in local_names:
        value = getattr(h, name)
        if value is None:
            out[name] = None
        elif name == "comlt":
            out[name] = [[[_mor_to_json(backend, value[x][y][z]) for z in range(n)]
                          for y in range(n)] for x in range(n)]
        elif name == "couni":
            out[name] = [_mor_to_json(backend, value[x]) for x in range(n)]
        else:
            out[name] = [[_mor_to_json(backend, value[x][y]) for y in range(n)]
                         for x in range(n)]
    return out


def _grid(data, n, depth, loader):
    if not isinstance(data, list) or len(data) != n:
        raise SchemaError("expected %d entries per object axis" % n)
    if depth == 1:
        return [loader(v) for v in data]
    return [_grid(v, n, depth - 1, loader) for v in data]


def _hopfcat_from_json(backend, data):
    n = int(_need(data, "objects"))
    homs = _grid(_need(data, "homs"), n, 2, lambda v: _obj_from_json(backend, v))
    mor = lambda v: _mor_from_json(backend, v)
    m = _grid(_need(data, "m"), n, 3, mor)
    u = _grid(_need(data, "u"), n, 1, mor)
    delta = _grid(_need(data, "delta"), n, 2, mor)
    eps = _grid(_need(data, "eps"), n, 2, mor)
    s = None
    if data.get("s") is not None:
        s = _grid(data["s"], n, 2, mor)
    return HopfVCat(backend, FinSet((n,)), homs, m, u, delta, eps, s)


def _frobcat_from_json(backend, data):
    n = int(_need(data, "objects"))
    homs = _grid(_need(data, "homs"), n, 2, lambda v: _obj_from_json(backend, v))
    mor = lambda v: _mor_from_json(backend, v)
    m = _grid(_need(data, "m"), n, 3, mor)
    u = _grid(_need(data, "u"), n, 1, mor)
    comlt = _grid(_need(data, "comlt"), n, 3, mor)
    couni = _grid(_need(data, "couni"), n, 1, mor)
    return FrobVCat(backend, FinSet((n,)), homs, m, u, comlt, couni)


def _module_boundaries(monoid, mod_carrier, rho):
    one_x = identity_cell(mod_carrier)
    one_m = identity_cell(monoid.carrier)
    xi_src = compose_chain(tensor_chain(one_x, monoid.mlt), rho)
    xi_tgt = compose_chain(tensor_chain(rho, one_m), rho)
    xi0_src = compose_chain(tensor_chain(one_x, monoid.uni), rho)
    return (xi_src, xi_tgt), (xi0_src, one_x)


def _morphism_boundaries(bim_a, bim_b, f):
    ff = tensor_cells(f, f)
    phi = (compose_chain(bim_a.monoid.mlt, f), compose_chain(ff, bim_b.monoid.mlt))
    phi0 = (compose_chain(bim_a.monoid.uni, f), bim_b.monoid.uni)
    psi = (compose_chain(bim_a.comonoid.lcm, ff), compose_chain(f, bim_b.comonoid.lcm))
    psi0 = (bim_a.comonoid.lcu, compose_chain(f, bim_b.comonoid.lcu))
    return {"phi": phi, "phi0": phi0, "psi": psi, "psi0": psi0}


def load_structure(data):
    """Parsed JSON -> (kind, checkable structure)."""
    if not isinstance(data, dict):
        raise SchemaError("top level must be an object")
    version = _need(data, "schema_version")
    if version != SCHEMA_VERSION:
        raise SchemaError("unsupported schema_version %r" % (version,))
    kind = _need(data, "kind")
    if kind not in KINDS:
        raise SchemaError("unknown kind %r" % (kind,))
    backend = _backend_from_json(_need(data, "backend"))
    try:
        if kind == "bimonoid":
            return kind, _bimonoid_block_from_json(backend, data, False)
        if kind == "hopf":
            return kind, _bimonoid_block_from_json(backend, data, True)
        if kind == "frobenius":
            carrier = _fam_from_json(backend, _need(data, "carrier"))
            doubled = tensor_fams(carrier, carrier)
            unit = unit_fam(backend)
            monoid = MonoidData(carrier,
                                _span_cell_from_json(_need(data, "mlt"), doubled, carrier),
                                _span_cell_from_json(_need(data, "uni"), unit, carrier))
            comonoid = ComonoidData(carrier,
                                    _span_cell_from_json(_need(data, "lcm"), carrier, doubled),
                                    _span_cell_from_json(_need(data, "lcu"), carrier, unit))
            return kind, FrobeniusData(monoid, comonoid)
        if kind == "hopfcat":
            return kind, _hopfcat_from_json(backend, data)
        if kind == "frobcat":
            return kind, _frobcat_from_json(backend, data)
        if kind == "module":
            mon = _need(data, "monoid")
            carrier = _fam_from_json(backend, _need(mon, "carrier"))
            doubled = tensor_fams(carrier, carrier)
            monoid = MonoidData(carrier,
                                _span_cell_from_json(_need(mon, "mlt"), doubled, carrier),
                                _span_cell_from_json(_need(mon, "uni"), unit_fam(backend), carrier))
            modblock = _need(data, "module")
            mod_carrier = _fam_from_json(backend, _need(modblock, "carrier"))
            rho = _span_cell_from_json(_need(modblock, "rho"),
                                       tensor_fams(mod_carrier, carrier), mod_carrier)
            (xs, xt), (x0s, x0t) = _module_boundaries(monoid, mod_carrier, rho)
            xi = _u_from_json(_need(modblock, "xi"), xs, xt)
            xi0 = _u_from_json(_need(modblock, "xi0"), x0s, x0t)
            return kind, (monoid, OplaxModuleData(mod_carrier, rho, xi, xi0))
        if kind == "morphism":
            bim_a, _ = _bimonoid_block_from_json(backend, _need(data, "source"), False)
            bim_b, _ = _bimonoid_block_from_json(backend, _need(data, "target"), False)
            f = _span_cell_from_json(_need(data, "f"),
                                     bim_a.monoid.carrier, bim_b.monoid.carrier)
            bounds = _morphism_boundaries(bim_a, bim_b, f)
            cells = {name: _u_from_json(_need(data, name), *bounds[name])
                     for name in ("phi", "phi0", "psi", "psi0")}
            morph = OplaxMorphismData(f, cells["phi"], cells["phi0"],
                                      cells["psi"], cells["psi0"])
            return kind, (bim_a, bim_b, morph)
    except SchemaError:
        raise
    except (SpanVError, AssertionError, KeyError, TypeError, ValueError) as err:
        raise SchemaError("invalid %s data: %s" % (kind, err))
    raise AssertionError("unreachable")


def run_checks(kind, structure):
    if kind == "bimonoid":
        return check_oplax_bimonoid(structure[0])
    if kind == "hopf":
        bim, anti = structure
        return CheckReport(check_oplax_bimonoid(bim).results
                           + check_oplax_hopf(bim, anti).results)
    if kind == "frobenius":
        return check_frobenius(structure)
    if kind == "hopfcat":
        if structure.s is not None:
            return check_hopf_vcat(structure)
        return check_semi_hopf_vcat(structure)
    if kind == "frobcat":
        return check_frobenius_vcat(structure)
    if kind == "module":
        monoid, mod = structure
        return CheckReport(check_strict_monoid(monoid).results
                           + check_oplax_module(monoid, mod).results)
    if kind == "morphism":
        return check_oplax_bimonoid_morphism(*structure)
    raise AssertionError("unreachable")


# ------------------------------------------------------------------- reports

def _plain(value):
    if isinstance(value, dict):
        return {str(k): _plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    if isinstance(value, np.ndarray):
        return [_plain(v) for v in value.tolist()]
    if isinstance(value, (np.integer, int)):
        return int(value)
    if isinstance(value, (np.bool_, bool)):
        return bool(value)
    return str(value) if not isinstance(value, (str, float, type(None))) else value


def build_report(kind, report, raw_bytes):
    failed = sum(1 for r in report.results if not r.ok)
    return {
        "schema_version": SCHEMA_VERSION,
        "tool": "spanv %s" % __version__,
        "kind": kind,
        "input_digest": "sha256:%s" % hashlib.sha256(raw_bytes).hexdigest(),
        "generated_at": datetime.now(timezone.utc).strftime("%Y-%m-%dT%H:%M:%SZ"),
        "results": [_plain(r.as_dict()) for r in report.results],
        "summary": {"total": len(report.results), "failed": failed,
                    "ok": failed == 0},
    }


def _dump_json(data):
    return json.dumps(data, indent=2, sort_keys=True) + "\n"


def cmd_check(path, bounds=None, report_path=None, quiet=False, out=sys.stdout):
    """Check one structure file; returns the process exit code."""
    try:
        with open(path, "rb") as fh:
            raw = fh.read()
    except OSError as err:
        print("error: %s" % err, file=sys.stderr)
        return 2
    saved = os.environ.get("OHL_MAX_APEX")
    if bounds is not None:
        os.environ["OHL_MAX_APEX"] = str(bounds)
    try:
        try:
            data = json.loads(raw.decode("utf-8"))
        except (UnicodeDecodeError, json.JSONDecodeError) as err:
            raise ParseError(str(err))
        kind, structure = load_structure(data)
        report = run_checks(kind, structure)
    except ParseError as err:
        print("parse error: %s" % err, file=sys.stderr)
        return 2
    except SchemaError as err:
        print("schema error: %s" % err, file=sys.stderr)
        return 2
    finally:
        if bounds is not None:
            if saved is None:
                os.environ.pop("OHL_MAX_APEX", None)
            else:
                os.environ["OHL_MAX_APEX"] = saved
    if not quiet:
        for line in report.lines():
            print(line, file=out)
        failed = sum(1 for r in report.results if not r.ok)
        if failed:
            print("FAILED %d of %d checks" % (failed, len(report.results)), file=out)
        else:
            print("all %d checks passed" % len(report.results), file=out)
    if report_path:
        with open(report_path, "w", encoding="utf-8") as fh:
            fh.write(_dump_json(build_report(kind, report, raw)))
    return 0 if report.ok else 1


# --------------------------------------------------------------------- demos

def _demo_x2(size):
    if not 1 <= size <= MAX_OBJECTS:
        raise OutOfBounds("size must be between 1 and %d" % MAX_OBJECTS)
    _, _, _, bim, anti, _ = groupoid_structures(codiscrete_groupoid(size))
    data = {"schema_version": SCHEMA_VERSION, "kind": "hopf",
            "backend": _backend_to_json(TrivialBackend())}
    data.update(_bimonoid_block_to_json(bim, anti))
    return "x2-hopf.json", data


def _demo_groupoid(objects):
    if not 1 <= objects <= MAX_OBJECTS:
        raise OutOfBounds("objects must be between 1 and %d" % MAX_OBJECTS)
    h = groupoid_to_hopfcat(codiscrete_groupoid(objects))
    data = {"schema_version": SCHEMA_VERSION, "kind": "hopfcat",
            "backend": _backend_to_json(h.backend)}
    data.update(_vcat_tables_to_json(h, ("delta", "eps", "s")))
    return "groupoid-hopfcat.json", data


def _demo_group_hopf(p, group):
    if not 2 <= p <= MAX_PRIME:
        raise OutOfBounds("p must be a prime at most %d" % MAX_PRIME)
    if not (isinstance(group, str) and group[:1] in "zZ" and group[1:].isdigit()):
        raise SchemaError("group must look like z2, z3, ...")
    order = int(group[1:])
    if not 1 <= order <= MAX_DIM:
        raise OutOfBounds("group order must be between 1 and %d" % MAX_DIM)
    h = group_algebra_hopf(p, order)
    data = {"schema_version": SCHEMA_VERSION, "kind": "hopfcat",
            "backend": _backend_to_json(h.backend)}
    data.update(_vcat_tables_to_json(h, ("delta", "eps", "s")))
    return "group-hopf.json", data


def _demo_mat(p, max_n):
    if not 2 <= p <= MAX_PRIME:
        raise OutOfBounds("p must be a prime at most %d" % MAX_PRIME)
    if not 1 <= max_n <= MAX_DIM:
        raise OutOfBounds("max-n must be between 1 and %d" % MAX_DIM)
    fc = mat_frobenius_example(p, max_n)
    data = {"schema_version": SCHEMA_VERSION, "kind": "frobcat",
            "backend": _backend_to_json(fc.backend)}
    data.update(_vcat_tables_to_json(fc, ("comlt", "couni")))
    return "mat-frobenius.json", data


def cmd_demo(name, out_dir=".", **params):
    """Write one demo structure file and its report; returns both paths."""
    builders = {
        "x2": lambda: _demo_x2(params.get("size", 2)),
        "groupoid": lambda: _demo_groupoid(params.get("objects", 2)),
        "group-hopf": lambda: _demo_group_hopf(params.get("p", 3),
                                               params.get("group", "z2")),
        "mat": lambda: _demo_mat(params.get("p", 3), params.get("max_n", 2)),
    }
    if name not in builders:
        raise SchemaError("unknown demo %r" % (name,))
    filename, data = builders[name]()
    path = os.path.join(out_dir, filename)
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(_dump_json(data))
    report_path = os.path.join(out_dir, filename[:-len(".json")] + "-report.json")
    status = cmd_check(path, report_path=report_path, quiet=True)
    assert status == 0, "generated structure failed its own checks"
    return path, report_path


# ---------------------------------------------------------------------- main

def main(argv=None):
    parser = argparse.ArgumentParser(
        prog="spanv", description="check enriched-span structure files")
    sub = parser.add_subparsers(dest="command", required=True)
    chk = sub.add_parser("check", help="run the axiom suite for one file")
    chk.add_argument("file")
    chk.add_argument("--bounds", type=int, default=None,
                     help="cap for 2-cell searches (overrides OHL_MAX_APEX)")
    chk.add_argument("--report", default=None, help="write a JSON report here")
    chk.add_argument("--quiet", action="store_true")
    dem = sub.add_parser("demo", help="write a ready-made structure file")
    dem.add_argument("name", choices=("x2", "groupoid", "group-hopf", "mat"))
    dem.add_argument("--out", default=".", help="output directory")
    dem.add_argument("--size", type=int, default=2, help="objects for the x2 demo")
    dem.add_argument("--objects", type=int, default=2, help="objects for the groupoid demo")
    dem.add_argument("--p", type=int, default=3, help="prime modulus")
    dem.add_argument("--group", default="z2", help="cyclic group, e.g. z2 or z3")
    dem.add_argument("--max-n", type=int, default=2, dest="max_n",
                     help="largest matrix size for the mat demo")
    args = parser.parse_args(argv)
    if args.command == "check":
        return cmd_check(args.file, bounds=args.bounds,
                         report_path=args.report, quiet=args.quiet)
    try:
        path, report_path = cmd_demo(
            args.name, out_dir=args.out, size=args.size, objects=args.objects,
            p=args.p, group=args.group, max_n=args.max_n)
    except (OutOfBounds, SchemaError) as err:
        print("error: %s" % err, file=sys.stderr)
        return 2
    print(path)
    print(report_path)
    return 0


if __name__ == "__main__":
    sys.exit(main())
