"""Order complex of a lattice of flats, shelling transfer from the order
complex to the underlying complex, and EL-labeling verification."""

import re
from dataclasses import dataclass
from itertools import product

from ._bits import members
from .complex import SimplicialComplex
from .errors import ParseError, PreconditionError
from .shelling import Shelling, _build, validate_shelling


@dataclass
class OrderComplex:
    lattice: object
    complex: SimplicialComplex  # vertex names are flat labels
    flat_of: dict  # vertex name -> flat mask

    def chain_of(self, facet):
        """Full maximal chain bottom < ... < top for a facet of the order complex."""
        inner = sorted((self.flat_of[v] for v in facet), key=lambda f: f.bit_count())
        return (self.lattice.bottom, *inner, self.lattice.top)


def order_complex(lat):
    if len(lat) < 2:
        raise PreconditionError("order complex needs at least two lattice elements")
    proper = lat.proper_part()
    names = [lat.label(f) for f in proper]
    pos = {f: i for i, f in enumerate(proper)}
    gens = []
    for ch in lat.maximal_chains():
        m = 0
        for f in ch[1:-1]:
            m |= 1 << pos[f]
        gens.append(m)
    cx = SimplicialComplex.from_masks(names, gens)
    return OrderComplex(lat, cx, dict(zip(names, proper)))


def _transversals(chain):
    """Transversal words of a maximal chain, lexicographic in vertex index."""
    diffs = [members(chain[i] & ~chain[i - 1]) for i in range(1, len(chain))]
    return list(product(*diffs))


def transfer_shelling(lat, ord_shelling, c=None):
    """Shelling of the complex from a shelling of Ord(lat).

    Each maximal chain, taken in the given order, contributes its
    transversals in lexicographic order of their words; repeats are dropped.
    """
    c = lat.complex if c is None else c
    if c is None:
        raise PreconditionError("lattice carries no complex")
    oc = order_complex(lat)
    if ord_shelling is None:
        raise PreconditionError("the order complex has no shelling")
    order = [tuple(f) for f in ord_shelling.order]
    ok, bad = validate_shelling(oc.complex, order)
    if not ok:
        raise PreconditionError(f"order complex shelling fails at position {bad}")
    out, seen = [], set()
    for facet in order:
        for word in _transversals(oc.chain_of(facet)):
            m = 0
            for i in word:
                m |= 1 << i
            if m not in c.facets:
                # happens only when maximal chains of the lattice differ in length
                raise PreconditionError(f"transversal {c.label(m)} of a maximal chain is not a facet")
            if m not in seen:
                seen.add(m)
                out.append(m)
    ok, bad = validate_shelling(c, [c.names(m) for m in out])
    if not ok:
        raise PreconditionError(f"transferred order fails at position {bad}")
    return _build(c, out)


@dataclass
class ELLabeling:
    labels: dict  # (lower flat mask, upper flat mask) -> label


def chain_word(xi, chain):
    try:
        return tuple(xi.labels[(chain[i - 1], chain[i])] for i in range(1, len(chain)))
    except KeyError as exc:
        raise PreconditionError(f"labeling misses the cover pair {exc.args[0]}") from None


def verify_el_labeling(lat, xi):
    """``(True, None)`` or ``(False, (a_label, b_label))`` for the first bad interval."""
    for a, b in lat.covers:
        if (lat.flats[a], lat.flats[b]) not in xi.labels:
            raise PreconditionError(f"labeling misses the cover {lat.label(lat.flats[a])} -> {lat.label(lat.flats[b])}")
    for a in lat.flats:
        for b in lat.flats:
            if a == b or a & ~b:
                continue
            words = [chain_word(xi, ch) for ch in lat.maximal_chains(a, b)]
            inc = [w for w in words if all(w[i] < w[i + 1] for i in range(len(w) - 1))]
            if len(inc) != 1 or sum(1 for w in words if w <= inc[0]) != 1:
                return False, (lat.label(a), lat.label(b))
    return True, None


def parse_labeling(lat, text):
    """Lines ``F -> G : k``; flats as vertex lists, ``{}`` or ``V``."""
    idx = {v: i for i, v in enumerate(lat.vertices)}

    def flat(tok, lineno):
        tok = tok.strip()
        if tok == "{}":
            return 0
        if tok == "V":
            return lat.top
        parts = [p for p in re.split(r"[,\s]+", tok) if p]
        if len(parts) == 1 and parts[0] not in idx:
            parts = list(parts[0])
        m = 0
        for p in parts:
            if p not in idx:
                raise ParseError(f"line {lineno}: unknown vertex {p!r}")
            m |= 1 << idx[p]
        if m not in lat.position:
            raise ParseError(f"line {lineno}: {tok!r} is not a flat")
        return m

    labels = {}
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        mt = re.fullmatch(r"(.+?)\s*->\s*(.+?)\s*:\s*(-?\d+)", line)
        if not mt:
            raise ParseError(f"line {lineno}: expected 'F -> G : k'")
        labels[(flat(mt.group(1), lineno), flat(mt.group(2), lineno))] = int(mt.group(3))
    return ELLabeling(labels)


def format_labeling(lat, xi):
    return "\n".join(
        f"{lat.label(a)} -> {'V' if b == lat.top else lat.label(b)} : {k}"
        for (a, b), k in sorted(xi.labels.items(), key=lambda kv: (lat.position[kv[0][0]], lat.position[kv[0][1]]))
    )


def search_el_labeling(lat, alphabet=None):
    """Brute force over labelings with values in ``alphabet`` (test utility)."""
    covers = [(lat.flats[a], lat.flats[b]) for a, b in lat.covers]
    if len(covers) > 12:
        raise PreconditionError("brute-force EL search limited to 12 cover pairs")
    alphabet = range(len(covers)) if alphabet is None else alphabet
    for values in product(alphabet, repeat=len(covers)):
        xi = ELLabeling(dict(zip(covers, values)))
        if verify_el_labeling(lat, xi)[0]:
            return xi
    return None


def ord_shelling(lat, timeout_ms=None):
    """Search for a shelling of Ord(lat); None when there is none."""
    from .shelling import search_shelling

    return search_shelling(order_complex(lat).complex, timeout_ms)


__all__ = [
    "OrderComplex",
    "order_complex",
    "transfer_shelling",
    "ELLabeling",
    "verify_el_labeling",
    "parse_labeling",
    "format_labeling",
    "search_el_labeling",
    "ord_shelling",
    "Shelling",
]
