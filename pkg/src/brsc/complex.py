"""Finite simplicial complexes over a fixed, ordered vertex set.

Faces are stored as int bitmasks: bit ``i`` stands for ``vertices[i]``.
The vertex order is fixed at construction and reused everywhere an
orientation is needed (boundary maps, lexicographic tie-breaks).
"""

from collections import deque
from dataclasses import dataclass
from functools import cached_property

from ._bits import bit, lex_key, members, popcount, subsets
from .errors import PreconditionError


class SimplicialComplex:
    """Downward-closed family of vertex subsets.

    ``faces`` may be any generating family (facets, say); it is completed
    downward and every vertex is added as a singleton face.
    """

    def __init__(self, vertices, faces=()):
        self.vertices = tuple(str(v) for v in vertices)
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError("vertex names must be unique")
        self.index = {v: i for i, v in enumerate(self.vertices)}
        gens = {self.to_mask(f) for f in faces}
        gens.update(bit(i) for i in range(len(self.vertices)))
        gens.add(0)
        self._init_faces(_down_close(gens))

    @classmethod
    def from_masks(cls, vertices, masks, closed=False):
        c = cls.__new__(cls)
        c.vertices = tuple(str(v) for v in vertices)
        c.index = {v: i for i, v in enumerate(c.vertices)}
        fam = set(masks)
        fam.add(0)
        fam.update(bit(i) for i in range(len(c.vertices)))
        c._init_faces(frozenset(fam) if closed else _down_close(fam))
        return c

    def _init_faces(self, family):
        self.faces = frozenset(family)
        by_size = {}
        for f in self.faces:
            by_size.setdefault(popcount(f), []).append(f)
        for k in by_size:
            by_size[k].sort(key=members)
        self.by_size = by_size

    # -- naming ------------------------------------------------------------

    @property
    def n(self):
        return len(self.vertices)

    @property
    def full(self):
        return (1 << self.n) - 1

    def to_mask(self, x):
        """Vertex subset -> bitmask.

        Accepts an int mask, an iterable of vertex names, or a string that
        is either one vertex name or a run of one-character names ("123").
        """
        if isinstance(x, int):
            if x >> self.n:
                raise PreconditionError(f"mask {x:#x} has bits outside the vertex set")
            return x
        if isinstance(x, str):
            if x in self.index:
                return bit(self.index[x])
            x = list(x)
        m = 0
        for v in x:
            v = str(v)
            if v not in self.index:
                raise PreconditionError(f"unknown vertex {v!r}")
            m |= bit(self.index[v])
        return m

    def names(self, mask):
        return tuple(self.vertices[i] for i in members(mask))

    def label(self, mask):
        """Compact text label, e.g. ``12`` or ``a1,b1``; ``{}`` for the empty set."""
        if mask == 0:
            return "{}"
        ns = self.names(mask)
        sep = "" if all(len(v) == 1 for v in self.vertices) else ","
        return sep.join(ns)

    def face_sets(self):
        return {frozenset(self.names(f)) for f in self.faces}

    # -- basic structure ---------------------------------------------------

    def __contains__(self, x):
        return self.to_mask(x) in self.faces

    def __len__(self):
        return len(self.faces)

    def __eq__(self, other):
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return set(self.vertices) == set(other.vertices) and self.face_sets() == other.face_sets()

    def __hash__(self):
        return hash((frozenset(self.vertices), frozenset(self.face_sets())))

    def __repr__(self):
        fl = ", ".join(self.label(f) for f in sorted(self.facets, key=lex_key))
        return f"SimplicialComplex(V={list(self.vertices)}, facets=[{fl}])"

    @property
    def dim(self):
        return max(self.by_size) - 1

    def faces_of_size(self, k):
        return self.by_size.get(k, [])

    @cached_property
    def facets(self):
        return frozenset(_maximal(self.faces, self.n))

    @cached_property
    def adjacency(self):
        """Neighbour bitmask of each vertex in the 1-skeleton."""
        adj = [0] * self.n
        for e in self.faces_of_size(2):
            i, j = members(e)
            adj[i] |= bit(j)
            adj[j] |= bit(i)
        return adj

    def components(self):
        """Connected components of the 1-skeleton, as bitmasks."""
        return _components(self.adjacency, self.n)

    def relabel(self, mapping):
        """Copy with vertex names replaced through ``mapping``."""
        return SimplicialComplex.from_masks([mapping.get(v, v) for v in self.vertices], self.faces, closed=True)

    def restrict_order(self, order):
        """Same complex with the vertex order replaced by ``order``."""
        perm = [self.index[str(v)] for v in order]
        if sorted(perm) != list(range(self.n)):
            raise PreconditionError("order must be a permutation of the vertices")
        pos = {old: new for new, old in enumerate(perm)}
        fam = set()
        for f in self.faces:
            m = 0
            for i in members(f):
                m |= bit(pos[i])
            fam.add(m)
        return SimplicialComplex.from_masks(order, fam, closed=True)


def _down_close(gens):
    fam = set()
    for g in sorted(gens, key=popcount, reverse=True):
        if g in fam:
            continue
        for s in subsets(g):
            fam.add(s)
    return frozenset(fam)


def _maximal(faces, n):
    out = []
    for f in faces:
        free = ~f & ((1 << n) - 1)
        maximal = True
        while free:
            low = free & -free
            if (f | low) in faces:
                maximal = False
                break
            free ^= low
        if maximal:
            out.append(f)
    return out


def _components(adj, n):
    seen = 0
    comps = []
    for s in range(n):
        if seen >> s & 1:
            continue
        comp = bit(s)
        frontier = bit(s)
        while frontier:
            nxt = 0
            for i in members(frontier):
                nxt |= adj[i]
            nxt &= ~comp
            comp |= nxt
            frontier = nxt
        seen |= comp
        comps.append(comp)
    return comps


@dataclass(frozen=True)
class ComplexProfile:
    dimension: int
    simple: bool
    pure: bool
    connected: bool
    facet_count: int


def facets(c):
    """Inclusion-maximal faces, as tuples of vertex names in vertex order."""
    return {c.names(f) for f in c.facets}


def classify(c):
    n = c.n
    simple = len(c.faces_of_size(2)) == n * (n - 1) // 2
    sizes = {popcount(f) for f in c.facets}
    return ComplexProfile(
        dimension=c.dim,
        simple=simple,
        pure=len(sizes) <= 1,
        connected=len(c.components()) == 1,
        facet_count=len(c.facets),
    )


def link(c, q):
    """lk(Q) = (V/Q, H/Q); may have an empty vertex set."""
    q = c.to_mask(q)
    if q not in c.faces:
        raise PreconditionError(f"{c.label(q)} is not a face")
    if q == c.full and c.n > 0:
        raise PreconditionError("the link of V is not defined")
    fam = [f & ~q for f in c.faces if f & q == q]
    support = 0
    for f in fam:
        support |= f
    keep = members(support)
    pos = {old: new for new, old in enumerate(keep)}
    out = set()
    for f in fam:
        m = 0
        for i in members(f):
            m |= bit(pos[i])
        out.add(m)
    return SimplicialComplex.from_masks([c.vertices[i] for i in keep], out, closed=True)


def pure_part(c, m):
    """Subcomplex generated by the m-dimensional faces."""
    if not 0 <= m <= c.dim:
        raise PreconditionError(f"pure part dimension {m} outside 0..{c.dim}")
    return _generated(c, c.faces_of_size(m + 1))


def _generated(c, gens):
    support = 0
    for f in gens:
        support |= f
    keep = members(support)
    pos = {old: new for new, old in enumerate(keep)}
    out = set()
    for f in gens:
        g = 0
        for i in members(f):
            g |= bit(pos[i])
        out.add(g)
    return SimplicialComplex.from_masks([c.vertices[i] for i in keep], out)


def is_matroid(c):
    """Exchange-property test.

    Returns ``(True, None)`` or ``(False, (I, J))`` where ``I``, ``J`` are
    name tuples with |I| = |J| + 1 and no i in I - J gives J + i in H.
    Pairs are scanned by |I|, then lexicographically in vertex order.
    """
    for k in sorted(c.by_size):
        if k == 0:
            continue
        smaller = c.faces_of_size(k - 1)
        for i_face in c.faces_of_size(k):
            for j_face in smaller:
                extra = i_face & ~j_face
                if not any((j_face | bit(x)) in c.faces for x in members(extra)):
                    return False, (c.names(i_face), c.names(j_face))
    return True, None


def graph_diameter_check(c):
    """True iff every two vertices are at distance <= 2 in the 1-skeleton."""
    if c.dim < 2:
        raise PreconditionError("diameter bound applies to complexes of dimension >= 2")
    adj = c.adjacency
    for s in range(c.n):
        dist = {s: 0}
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in members(adj[u]):
                if w not in dist:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        if len(dist) < c.n or max(dist.values()) > 2:
            return False
    return True
