"""
The bimonoid of pairs and its axiom report
==========================================

"""

import numpy as np

from spanv.hopfcat import codiscrete_groupoid, groupoid_structures
from spanv.structures import check_oplax_bimonoid, infer_unique_structure_cells

# the carrier is the set of pairs over a three element set; its
# multiplication matches ends, its comultiplication splits them
mon, com, cocom, bim, anti, frob = groupoid_structures(codiscrete_groupoid(3))
print("carrier base shape:", bim.monoid.carrier.base.shape)
print("multiplication apex size:", bim.monoid.mlt.span.apex.size)

# every axiom of the structure, one line per check
report = check_oplax_bimonoid(bim)
for line in report.lines():
    print(line)
print("all clear:", report.ok)

# the four structure cells are not a choice: their boundaries admit
# exactly one apex map each, and inference recovers the shipped ones
cells = infer_unique_structure_cells(mon, com)
for found, given, name in zip(
        cells, (bim.theta, bim.theta0, bim.chi, bim.chi0),
        ("theta", "theta0", "chi", "chi0")):
    assert np.array_equal(found.u, given.u)
    print("%-7s forced, apex map %s" % (name, given.u.tolist()))
