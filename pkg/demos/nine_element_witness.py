"""Integral witness for a redundant row of the nine-element order 0,1,2,1,0,3,2,4,2.

Half of each of two concordant cycles gives a fractional circulation whose weight
is the target inequality; the resolver turns it into an integral sum of
strictly smaller cycles.  Run: python3 demos/nine_element_witness.py
"""

from fractions import Fraction

from lengthpoly.circulation import (
    Circulation,
    ResolveStep,
    check_witness,
    classify_cycles,
    two_cycle_resolve,
    weight,
)
from lengthpoly.cycles import DirectedCycle, cycle_weight
from lengthpoly.keygraph import build_key_graph
from lengthpoly.order import from_ascent_sequence

G = build_key_graph(from_ascent_sequence([0, 1, 2, 1, 0, 3, 2, 4, 2]))
C1 = DirectedCycle.of(1, 2, 7, 3, 4, 6, 8, 9, 5)
C2 = DirectedCycle.of(1, 2, 7, 4, 6, 8, 9, 3, 5)
half = Fraction(1, 2)

g = Circulation.from_cycles(G, [(half, C1), (half, C2)])
target = weight(g, G).to_inequality()
print("C1:", cycle_weight(G, C1))
print("C2:", cycle_weight(G, C2))
print("target:", target)

cl = classify_cycles(g)
print("concordant cycles in supp(g):", len(cl.concordant), "discordant:", len(cl.discordant))

trace: list[ResolveStep] = []
dec = two_cycle_resolve(C1, C2, G, trace)
print("resolution steps:", [s.case for s in trace])
for c, C in dec.terms:
    print(f"  {c} x {C.vertices}  ->  {cycle_weight(G, C)}")
check_witness(target, dec, G)
print("witness verified")
