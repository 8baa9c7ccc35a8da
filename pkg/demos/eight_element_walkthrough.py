"""Walk the pipeline on the eight-element order with ascent sequence 0,1,2,2,0,2,2,3.

Run: python3 demos/eight_element_walkthrough.py
"""

from lengthpoly.cycles import build_weak_list, enumerate_cycles
from lengthpoly.formats import colored_cycle
from lengthpoly.keygraph import build_key_graph
from lengthpoly.order import canonical_representation, from_ascent_sequence
from lengthpoly.schrijver import minimality_audit, schrijver_system

P = from_ascent_sequence([0, 1, 2, 2, 0, 2, 2, 3])
rep, mag = canonical_representation(P)
print("canonical intervals:", list(rep.endpoints), "magnitude", mag)

G = build_key_graph(P)
print(f"key graph: {len(G.arcs)} arcs")
for a in G.arcs:
    print(f"  {a.tail} -> {a.head} {a.color.short}")

cycles = enumerate_cycles(G)
weak = build_weak_list(G, cycles=cycles)
print(f"{len(cycles)} cycles, {len(weak)} distinct inequalities")

S = schrijver_system(P, with_witnesses=True)
print(f"{len(S)} irredundant rows:")
for i, e in enumerate(S.kept, 1):
    print(f"  {i:2d}. {e.inequality}    {colored_cycle(G, e.representative)}")
for d in S.discarded:
    combo = " + ".join(f"{a}*({V})" for a, V in d.certificate)
    print(f"  dropped {d.inequality} = {combo}")
print("audit violations:", minimality_audit(S))
