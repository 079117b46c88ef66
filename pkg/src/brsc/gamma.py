"""Graph of flats, its component structure, and the matrix-level shortcut
for simple complexes of dimension 2."""

import json
from dataclasses import dataclass

from ._bits import bit, members, popcount
from .boolmat import line_masks
from .errors import PreconditionError
from .flats import closure_mask


class UnionFind:
    def __init__(self, n):
        self.parent = list(range(n))
        self.size = [1] * n

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if self.size[ra] < self.size[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        self.size[ra] += self.size[rb]
        return True

    def groups(self):
        out = {}
        for x in range(len(self.parent)):
            out.setdefault(self.find(x), 0)
            out[self.find(x)] |= bit(x)
        return sorted(out.values(), key=lambda m: (m & -m).bit_length())


@dataclass
class LabeledGraph:
    vertices: tuple
    adj: list  # neighbour bitmask per vertex

    @classmethod
    def from_edges(cls, vertices, edges):
        vertices = tuple(str(v) for v in vertices)
        idx = {v: i for i, v in enumerate(vertices)}
        adj = [0] * len(vertices)
        for a, b in edges:
            i, j = idx[str(a)], idx[str(b)]
            if i == j:
                raise ValueError("loops are not allowed")
            adj[i] |= bit(j)
            adj[j] |= bit(i)
        return cls(vertices, adj)

    @property
    def n(self):
        return len(self.vertices)

    def edge_masks(self):
        return [bit(i) | bit(j) for i in range(self.n) for j in members(self.adj[i]) if j > i]

    @property
    def edges(self):
        return {frozenset((self.vertices[i], self.vertices[j])) for i in range(self.n) for j in members(self.adj[i]) if j > i}

    def __eq__(self, other):
        if not isinstance(other, LabeledGraph):
            return NotImplemented
        return set(self.vertices) == set(other.vertices) and self.edges == other.edges

    def component_masks(self):
        uf = UnionFind(self.n)
        for i in range(self.n):
            for j in members(self.adj[i]):
                uf.union(i, j)
        return uf.groups()

    def components(self):
        return [tuple(self.vertices[i] for i in members(m)) for m in self.component_masks()]

    def is_connected(self):
        return len(self.component_masks()) == 1

    def to_json(self, report=None):
        out = {
            "vertices": list(self.vertices),
            "edges": sorted(sorted(e, key=self.vertices.index) for e in self.edges),
        }
        if report is not None:
            out["components"] = [
                {"vertices": list(comp), "nontrivial": nt}
                for comp, nt in zip(report.components, report.nontrivial)
            ]
        else:
            out["components"] = [{"vertices": list(comp)} for comp in self.components()]
        return out


def graph_of_flats(c):
    """Edge pq iff the closure of {p, q} is a proper subset of V."""
    if len(c.components()) != 1:
        raise PreconditionError("graph of flats is defined for connected complexes")
    adj = [0] * c.n
    full = c.full
    for i in range(c.n):
        for j in range(i + 1, c.n):
            if closure_mask(c, bit(i) | bit(j)) != full:
                adj[i] |= bit(j)
                adj[j] |= bit(i)
    return LabeledGraph(c.vertices, adj)


@dataclass(frozen=True)
class ComponentReport:
    components: tuple  # tuples of vertex names
    nontrivial: tuple  # parallel flags

    @property
    def s(self):
        return sum(self.nontrivial)

    @property
    def trivial_sizes(self):
        return tuple(sorted(len(comp) for comp, nt in zip(self.components, self.nontrivial) if not nt))

    @property
    def r(self):
        return len(self.trivial_sizes)

    def to_json(self):
        return {
            "components": [{"vertices": list(comp), "nontrivial": nt} for comp, nt in zip(self.components, self.nontrivial)],
            "s": self.s,
            "trivial_sizes": list(self.trivial_sizes),
        }


def component_report(c, g=None):
    """Components of the graph of flats; a component is nontrivial when
    it contains an edge of the complex."""
    g = graph_of_flats(c) if g is None else g
    comps, flags = [], []
    for m in g.component_masks():
        idx = members(m)
        nt = any((bit(i) | bit(j)) in c.faces for a, i in enumerate(idx) for j in idx[a + 1:])
        comps.append(tuple(c.vertices[i] for i in idx))
        flags.append(nt)
    return ComponentReport(tuple(comps), tuple(flags))


def cross_component_edges_are_faces(c, g=None):
    g = graph_of_flats(c) if g is None else g
    comp_of = {}
    for k, m in enumerate(g.component_masks()):
        for i in members(m):
            comp_of[i] = k
    return all(
        (bit(i) | bit(j)) in c.faces
        for i in range(c.n)
        for j in range(i + 1, c.n)
        if comp_of[i] != comp_of[j]
    )


def gamma_m(m):
    """Union of the cliques spanned by the lines of the matrix."""
    adj = [0] * len(m.cols)
    for line in line_masks(m):
        for i in members(line):
            adj[i] |= line & ~bit(i)
    return LabeledGraph(tuple(m.cols), adj)


def _maximal_anticliques(g):
    full = (1 << g.n) - 1
    non = [full & ~g.adj[i] & ~bit(i) for i in range(g.n)]
    out = []

    def bk(r, p, x):
        if not p and not x:
            out.append(r)
            return
        pivot_pool = p | x
        u = (pivot_pool & -pivot_pool).bit_length() - 1
        for v in members(p & ~non[u]):
            bk(r | bit(v), p & non[v], x & non[v])
            p &= ~bit(v)
            x |= bit(v)

    bk(0, full, 0)
    return out


def superanticliques(g):
    """Sets A, |A| > 1, with nbh(a) | nbh(b) = V - A for all distinct a, b in A.

    Every such set is a maximal anticlique, so candidates come from a
    Bron-Kerbosch enumeration on the complement.
    """
    if g.n > 20:
        raise PreconditionError("superanticlique enumeration limited to 20 vertices")
    full = (1 << g.n) - 1
    found = set()
    for a_set in _maximal_anticliques(g):
        if popcount(a_set) < 2:
            continue
        rest = full & ~a_set
        idx = members(a_set)
        if all((g.adj[a] | g.adj[b]) == rest for k, a in enumerate(idx) for b in idx[k + 1:]):
            found.add(frozenset(g.vertices[i] for i in idx))
    return found


def _is_cone(g, comp):
    # K1 + Delta: some vertex adjacent to all others in the component
    return any(g.adj[v] | bit(v) == comp for v in members(comp))


def _is_anticlique_join(g, comp):
    # Kbar_n + Delta with n >= 1: for some v, comp - nbh(v) is an
    # anticlique and each of its vertices sees all of nbh(v)
    for v in members(comp):
        delta = g.adj[v]
        indep = comp & ~delta
        if any(g.adj[a] & indep for a in members(indep)):
            continue
        if all(g.adj[a] & delta == delta for a in members(indep)):
            return True
    return False


def in_omega1(g):
    comps = g.component_masks()
    if len(comps) != 2:
        return False
    a, b = comps
    return (popcount(b) == 1 and _is_anticlique_join(g, a)) or (popcount(a) == 1 and _is_anticlique_join(g, b))


def in_omega2(g):
    comps = g.component_masks()
    return len(comps) == 2 and all(_is_cone(g, comp) for comp in comps)


def predict_gamma_fl(m):
    """Graph of flats from a matrix of a simple 2-dimensional complex.

    Returns ``"connected"`` when Gamma M is connected or lies in
    Omega1 | Omega2, and Gamma M itself otherwise.
    """
    gm = gamma_m(m)
    if not line_masks(m):
        raise PreconditionError("a matrix without lines cannot define a 2-dimensional complex")
    if gm.is_connected() or in_omega1(gm) or in_omega2(gm):
        return "connected"
    return gm


def proper_part_components(lat):
    """Connected components of the Hasse diagram of L - {0, 1}."""
    proper = lat.proper_part()
    if not proper:
        return 0
    pos = {f: i for i, f in enumerate(proper)}
    uf = UnionFind(len(proper))
    for a in proper:
        for b in lat.upper_covers[a]:
            if b in pos:
                uf.union(pos[a], pos[b])
    return len(uf.groups())


def graph_json(g, report=None):
    return json.dumps(g.to_json(report))
