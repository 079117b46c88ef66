# Shellings of the 2-dimensional fixtures, and what the order complex of
# the flat lattice says about them.
from brsc import all_flats, find_shelling, validate_shelling, verify_el_labeling, transfer_shelling, betti_from_shelling
from brsc.instances import noel, yesel, yesel_labeling, chhs
from brsc.ordercx import order_complex, ord_shelling

c = noel()
s = find_shelling(c)
print("noel shelling:", [''.join(f) for f in s.order])
print("valid:", validate_shelling(c, s.order), "homology facets:", s.homology_facets)
lat = all_flats(c)
oc = order_complex(lat)
print("Ord(Fl) facets:", sorted(oc.complex.label(f) for f in oc.complex.facets))
print("Ord(Fl) shellable:", ord_shelling(lat) is not None)

c = yesel()
lat = all_flats(c)
print("yesel labeling is EL:", verify_el_labeling(lat, yesel_labeling(lat)))
t = transfer_shelling(lat, ord_shelling(lat))
print("transferred shelling:", [''.join(f) for f in t.order])

c = chhs()
s = find_shelling(c)
print("chhs shelling (lifted from the simplification):", [''.join(f) for f in s.order])
print("betti from homology facets:", betti_from_shelling(c, s))
