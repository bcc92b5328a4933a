"""
The pair-reversal antipode and the fusion cell
==============================================

"""

from spanv.cells import VCell1, identity_cell
from spanv.hopfcat import codiscrete_groupoid, groupoid_structures
from spanv.span import reverse_span
from spanv.structures import check_fusion_inverse, check_oplax_hopf, fusion_cell

_, _, _, bim, anti, _ = groupoid_structures(codiscrete_groupoid(2))

# the antipode reverses pairs
base = anti.s.dom.base
sw = anti.s.span
print("antipode on pairs:")
for pos in range(sw.apex.size):
    print("  %s -> %s" % (base.decode([sw.f.table[pos]])[0].tolist(),
                          base.decode([sw.g.table[pos]])[0].tolist()))

# the full Hopf test: the two defining exchanges plus invertibility of
# all four convolution composites
report = check_oplax_hopf(bim, anti)
for line in report.lines():
    print(line)

# the fusion cell sends a chain (a,b,c) to the pair of pairs
# ((a,b),(b,c)) on one side and ((a,c),(b,c)) on the other
fus = fusion_cell(bim)
quads = fus.cod.base
print("fusion legs, one chain per row:")
for pos in range(fus.span.apex.size):
    print("  %s <- %d -> %s" % (quads.decode([fus.span.f.table[pos]])[0].tolist(),
                                pos,
                                quads.decode([fus.span.g.table[pos]])[0].tolist()))

# it is not invertible as a 1-cell, but the reverse span undoes it in
# the looser, two-sided sense used throughout
rev = VCell1(fus.cod, fus.dom, reverse_span(fus.span), None)
inverse_report = check_fusion_inverse(bim, rev)
for line in inverse_report.lines():
    print(line)
