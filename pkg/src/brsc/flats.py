"""Flats, the closure operator, boolean representability and simplification."""

import json
from dataclasses import dataclass, field
from functools import cached_property

from ._bits import bit, lex_key, members, popcount
from .boolmat import BoolMatrix, complex_from_matrix
from .complex import SimplicialComplex
from .errors import NotBooleanRepresentable, PreconditionError


def _forced_table(c):
    # face I -> vertices p outside I with I + p not a face
    table = c.__dict__.get("_forced")
    if table is None:
        full = c.full
        table = []
        for f in c.faces:
            forced = 0
            free = full & ~f
            while free:
                low = free & -free
                if (f | low) not in c.faces:
                    forced |= low
                free ^= low
            if forced:
                table.append((f, forced))
        c.__dict__["_forced"] = table
    return table


def closure_mask(c, y):
    """Smallest flat containing the vertex set ``y`` (a bitmask).

    Saturation: while some face I inside Y has a point p outside Y with
    I + p not a face, p is in every flat containing Y, so add it.  A
    facet inside Y forces every remaining point, giving V at once.
    """
    table = _forced_table(c)
    full = c.full
    facets = c.facets
    while True:
        if y == full or any(f & ~y == 0 for f in facets):
            return full
        add = 0
        for f, forced in table:
            if f & ~y == 0:
                add |= forced
        add &= ~y
        if not add:
            return y
        y |= add


def closure(c, x):
    return frozenset(c.names(closure_mask(c, c.to_mask(x))))


def is_flat_mask(c, x):
    """Direct definition: every face inside X extends by every outside point."""
    outside = members(c.full & ~x)
    for f in c.faces:
        if f & ~x:
            continue
        for p in outside:
            if (f | bit(p)) not in c.faces:
                return False
    return True


@dataclass
class FlatLattice:
    """A finite family of subsets of ``vertices`` closed under intersection,
    ordered by inclusion.  ``flats`` is sorted by size, then lexicographically.
    """

    vertices: tuple
    flats: list
    complex: SimplicialComplex = field(default=None, repr=False, compare=False)

    def __post_init__(self):
        self.flats = sorted(set(self.flats), key=lex_key)
        self.position = {f: i for i, f in enumerate(self.flats)}
        full = (1 << len(self.vertices)) - 1
        if self.flats[0] != min(self.flats, key=popcount) or self.flats[-1] != full:
            raise PreconditionError("lattice needs the full vertex set as top")
        for a in self.flats:
            for b in self.flats:
                if (a & b) not in self.position:
                    raise PreconditionError("family is not closed under intersection")

    @classmethod
    def from_sets(cls, vertices, sets):
        vertices = tuple(str(v) for v in vertices)
        idx = {v: i for i, v in enumerate(vertices)}
        masks = []
        for s in sets:
            if isinstance(s, str):
                s = [s] if s in idx else list(s)
            masks.append(sum(bit(idx[str(v)]) for v in s))
        return cls(vertices, masks)

    def __len__(self):
        return len(self.flats)

    @property
    def bottom(self):
        return self.flats[0]

    @property
    def top(self):
        return self.flats[-1]

    def label(self, f):
        if f == 0:
            return "{}"
        ns = [self.vertices[i] for i in members(f)]
        sep = "" if all(len(v) == 1 for v in self.vertices) else ","
        return sep.join(ns)

    def as_sets(self):
        return {frozenset(self.vertices[i] for i in members(f)) for f in self.flats}

    def meet(self, a, b):
        return a & b

    def join(self, a, b):
        u = a | b
        out = self.top
        for f in self.flats:
            if f & u == u:
                out &= f
        return out

    @cached_property
    def upper_covers(self):
        """flat -> list of flats covering it."""
        up = {f: [] for f in self.flats}
        for a in self.flats:
            above = [b for b in self.flats if b != a and b & a == a]
            for b in above:
                if not any(c != b and c & a == a and b & c == c for c in above):
                    up[a].append(b)
        return up

    @property
    def covers(self):
        """Hasse diagram as (lower index, upper index) pairs."""
        return sorted(
            (self.position[a], self.position[b]) for a, ups in self.upper_covers.items() for b in ups
        )

    def proper_part(self):
        return [f for f in self.flats if f not in (self.bottom, self.top)]

    def maximal_chains(self, a=None, b=None):
        """All maximal chains of the interval [a, b], as tuples of flats."""
        a = self.bottom if a is None else a
        b = self.top if b is None else b
        out = []

        def walk(path):
            last = path[-1]
            if last == b:
                out.append(tuple(path))
                return
            for nxt in self.upper_covers[last]:
                if nxt & ~b == 0:
                    path.append(nxt)
                    walk(path)
                    path.pop()

        walk([a])
        return out

    def is_graded(self):
        """Jordan-Dedekind condition: all maximal chains have equal length."""
        return len({len(ch) for ch in self.maximal_chains()}) == 1

    def to_json(self):
        return {
            "flats": [[self.vertices[i] for i in members(f)] for f in self.flats],
            "covers": [list(p) for p in self.covers],
        }

    def dumps(self):
        return json.dumps(self.to_json())


def all_flats(c, method="closure"):
    """Lattice of flats.

    ``method="closure"`` collects the closures of all faces together with
    V; this is the whole lattice whenever ``c`` is boolean representable.
    ``method="definition"`` tests every subset of V against the definition
    and is exact for any complex (exponential in |V|).
    """
    if method == "closure":
        found = {c.full}
        for f in c.faces:
            found.add(closure_mask(c, f))
    elif method == "definition":
        if c.n > 20:
            raise PreconditionError("definition-driven enumeration limited to 20 vertices")
        found = {x for x in range(1 << c.n) if is_flat_mask(c, x)}
    else:
        raise ValueError(f"unknown method {method!r}")
    return FlatLattice(c.vertices, sorted(found), complex=c)


def _enumeration(c, face):
    """An ordering x1..xk of ``face`` with x(i+1) outside the closure of
    x1..xi, or None."""
    dead = set()

    def extend(chosen, order):
        if chosen == face:
            return order
        if chosen in dead:
            return None
        cl = closure_mask(c, chosen)
        for x in members(face & ~chosen & ~cl):
            got = extend(chosen | bit(x), order + [x])
            if got is not None:
                return got
        dead.add(chosen)
        return None

    return extend(0, [])


def is_boolean_representable(c):
    """Returns ``(True, None)`` or ``(False, failing_face_names)``.

    Checking facets suffices: an admissible enumeration of a face restricts
    to one of each subset, since closures are monotone.
    """
    for f in sorted(c.facets, key=lex_key):
        if _enumeration(c, f) is None:
            return False, c.names(f)
    return True, None


def transversal_enumeration(c, face):
    order = _enumeration(c, c.to_mask(face))
    return None if order is None else tuple(c.vertices[i] for i in order)


def _require_br(c):
    ok, bad = is_boolean_representable(c)
    if not ok:
        raise NotBooleanRepresentable(f"face {bad} is not a transversal of a chain of flats")


@dataclass(frozen=True)
class EtaPartition:
    blocks: tuple  # tuples of vertex names, ordered by first member
    block_of: dict

    def masks(self, c):
        return [c.to_mask(b) for b in self.blocks]

    @property
    def is_trivial(self):
        return all(len(b) == 1 for b in self.blocks)


def _partition_from_masks(c, masks):
    blocks = tuple(sorted((c.names(m) for m in masks), key=lambda b: c.index[b[0]]))
    return EtaPartition(blocks, {v: b for b in blocks for v in b})


def eta_partition(c):
    """Vertices with equal singleton closures, cross-checked against the
    criterion a ~ b iff ab is not a face."""
    groups = {}
    for i in range(c.n):
        groups.setdefault(closure_mask(c, bit(i)), 0)
        groups[closure_mask(c, bit(i))] |= bit(i)
    part = _partition_from_masks(c, groups.values())
    for i in range(c.n):
        for j in range(i + 1, c.n):
            same = part.block_of[c.vertices[i]] == part.block_of[c.vertices[j]]
            if same != ((bit(i) | bit(j)) not in c.faces):
                raise NotBooleanRepresentable(
                    f"closure classes disagree with non-edges at {c.vertices[i]}, {c.vertices[j]}"
                )
    return part


def normalize_partition(c, tau):
    """Accepts an EtaPartition, an iterable of blocks, or a vertex->label dict."""
    if isinstance(tau, EtaPartition):
        blocks = tau.blocks
    elif isinstance(tau, dict):
        groups = {}
        for v in c.vertices:
            groups.setdefault(tau.get(v, ("__self__", v)), []).append(v)
        blocks = list(groups.values())
    else:
        blocks = list(tau)
    masks = [c.to_mask(b) for b in blocks]
    covered = 0
    for m in masks:
        if m & covered:
            raise PreconditionError("partition blocks overlap")
        covered |= m
    for i in members(c.full & ~covered):
        masks.append(bit(i))
    return _partition_from_masks(c, masks)


def quotient(c, tau, check=True):
    """H/tau for a partition tau refining eta.

    Each block is named after its first vertex.  Returns the quotient
    complex and the projection (vertex name -> block name).
    """
    part = normalize_partition(c, tau)
    if check:
        eta = eta_partition(c)
        for b in part.blocks:
            if len({eta.block_of[v] for v in b}) != 1:
                raise PreconditionError(f"block {b} does not refine the closure partition")
    proj = {v: b[0] for b in part.blocks for v in b}
    reps = [b[0] for b in part.blocks]
    q_index = {r: i for i, r in enumerate(reps)}
    vmap = [q_index[proj[v]] for v in c.vertices]
    fam = set()
    for f in c.faces:
        m = 0
        for i in members(f):
            m |= bit(vmap[i])
        fam.add(m)
    return SimplicialComplex.from_masks(reps, fam, closed=True), proj


def simplify(c):
    return quotient(c, eta_partition(c), check=False)[0]


def simplification(c):
    """Like :func:`simplify` but also returns the projection."""
    return quotient(c, eta_partition(c), check=False)


def canonical_matrix(c, verify=True):
    """Rows indexed by the flats other than V; 0 at (F, v) iff v in F."""
    _require_br(c)
    lat = all_flats(c)
    rows = [f for f in lat.flats if f != c.full]
    m = BoolMatrix(
        tuple(lat.label(f) for f in rows),
        c.vertices,
        tuple(c.full & ~f for f in rows),
    )
    if verify and complex_from_matrix(m).faces != c.faces:
        raise NotBooleanRepresentable("flat matrix does not reproduce the complex")
    return m


def simplify_matrix(m):
    """Drop repeated columns (first occurrence kept)."""
    seen = {}
    keep = []
    for j in range(len(m.cols)):
        col = tuple(b >> j & 1 for b in m.bits)
        if col not in seen:
            seen[col] = j
            keep.append(j)
    return m.submatrix(range(len(m.rows)), keep)
