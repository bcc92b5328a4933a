"""
Modules over the pair monoid and comparison of firm contexts
============================================================

"""

import numpy as np

from spanv.cells import VCell1, identity_cell
from spanv.finset import FinFn, FinSet
from spanv.hopfcat import codiscrete_groupoid, groupoid_structures
from spanv.pasting import find_unique_2cell, paste
from spanv.span import Span
from spanv.structures import (
    AntipodeData,
    antipode_context,
    check_oplax_module,
    convolution,
    convolution_unit,
    morita_uniqueness_iso,
    regular_module,
    tensor_modules,
    unit_module,
)

mon, _, _, bim, anti, _ = groupoid_structures(codiscrete_groupoid(2))

# the monoid acting on itself, the unit action through the counit, and
# a tensor of two copies all satisfy the action axioms
reg = regular_module(mon)
unit = unit_module(bim)
double = tensor_modules(bim, reg, reg)
for name, mod in (("regular", reg), ("unit", unit), ("tensor", double)):
    report = check_oplax_module(mon, mod)
    print("%-8s module: %s" % (name, "ok" if report.ok else "FAIL"))

# an antipode gives a firm context; relabeling its apex gives a second
# one, and the two compare through a canonical pair of 2-cells
one = identity_cell(bim.monoid.carrier)
sp = anti.s.span
perm = np.array([1, 3, 0, 2])
apex = FinSet((sp.apex.size,))
s2 = VCell1(anti.s.dom, anti.s.cod,
            Span(sp.left, apex, sp.right,
                 FinFn(apex, sp.left, sp.f.table[perm]),
                 FinFn(apex, sp.right, sp.g.table[perm])),
            None)
cu = convolution_unit(bim)
anti2 = AntipodeData(
    s2,
    find_unique_2cell(convolution(bim, one, s2), cu),
    find_unique_2cell(convolution(bim, s2, one), cu))
phi, psi = morita_uniqueness_iso(
    bim, antipode_context(bim, anti), antipode_context(bim, anti2))
relabel = find_unique_2cell(anti.s, s2)
print("the unique leg-matching map recovers the relabeling:", relabel.u.tolist())
for first, second in ((phi, psi), (psi, phi)):
    both = paste([first, second])
    print("pasted round trip is the identity:",
          np.array_equal(both.u, np.arange(both.u.size)))
