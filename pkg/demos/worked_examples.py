# Walk through the four small fixtures: flats, graph of flats, pi1 rank,
# shellability and homology.
from brsc import all_flats, graph_of_flats, component_report, pi1_rank, is_shellable, reduced_homology, simplify
from brsc.instances import chhs, noel, occur, yesel

for name, c in [("chhs", chhs()), ("noel", noel()), ("occur(4)", occur(4)), ("yesel", yesel())]:
    lat = all_flats(c)
    rep = component_report(c)
    print(name)
    print("  flats:", [lat.label(f) for f in lat.flats])
    print("  graph of flats edges:", sorted("".join(sorted(e)) for e in graph_of_flats(c).edges))
    print("  components:", rep.components, "nontrivial:", rep.nontrivial)
    print("  pi1 rank:", pi1_rank(c).rank, " after simplification:", pi1_rank(simplify(c)).rank)
    print("  shellable:", is_shellable(c))
    print("  reduced homology:", reduced_homology(c).to_json())
