"""Edge-path presentation and free rank of the fundamental group."""

from collections import deque
from dataclasses import dataclass
from math import comb

from ._bits import bit, members
from .errors import PreconditionError
from .flats import _require_br, closure_mask, transversal_enumeration
from .gamma import component_report
from .homology import smith_normal_form


@dataclass
class Presentation:
    """Edge-path group presentation.

    One generator a_pq per edge (p before q in vertex order); a_qp stands
    for the inverse of a_pq.  Words are tuples of (generator index, +1/-1).
    """

    vertices: tuple
    generators: list  # (p, q) index pairs, p < q
    triangle_relators: list
    tree_relators: list
    spanning_tree: list  # (p, q) index pairs

    @property
    def relators(self):
        return self.triangle_relators + self.tree_relators

    def generator_name(self, g):
        p, q = self.generators[g]
        return f"a_{self.vertices[p]}_{self.vertices[q]}"

    def inverse_pairs(self):
        """The relators a_qp a_pq^-1 in text form; they hold by the naming
        convention and are not stored as words."""
        return [f"a_{self.vertices[q]}_{self.vertices[p]} = a_{self.vertices[p]}_{self.vertices[q]}^-1" for p, q in self.generators]

    def word_text(self, word):
        return " ".join(self.generator_name(g) + ("" if e > 0 else "^-1") for g, e in word)

    def to_text(self):
        gens = ", ".join(self.generator_name(g) for g in range(len(self.generators)))
        lines = [f"< {gens} |"]
        lines += ["  " + self.word_text(w) for w in self.relators]
        lines.append(">")
        return "\n".join(lines)

    def abelianization(self):
        """(free rank, torsion coefficients) of the abelianized group."""
        ng = len(self.generators)
        rows = []
        for w in self.relators:
            row = [0] * ng
            for g, e in w:
                row[g] += e
            if any(row):
                rows.append(row)
        diag = smith_normal_form(rows, transforms=False).diagonal if rows else []
        return ng - len(diag), [d for d in diag if d > 1]


def _bfs_tree(c):
    adj = c.adjacency
    seen = {0}
    tree = []
    queue = deque([0])
    while queue:
        u = queue.popleft()
        for w in members(adj[u]):
            if w not in seen:
                seen.add(w)
                tree.append((min(u, w), max(u, w)))
                queue.append(w)
    return tree


def _star_tree(c):
    """Spanning tree pz (pz in H) plus yq (qz not in H), where z, y are the
    first two vertices of an admissible enumeration of some triangle."""
    for tri in c.faces_of_size(3):
        order = transversal_enumeration(c, tri)
        if order is None:
            continue
        z, y = c.index[order[0]], c.index[order[1]]
        if closure_mask(c, bit(z)) >> y & 1:
            continue
        near = [p for p in range(c.n) if p != z and (bit(p) | bit(z)) in c.faces]
        far = [q for q in range(c.n) if q != z and q not in near]
        tree = [(min(p, z), max(p, z)) for p in near] + [(min(y, q), max(y, q)) for q in far]
        if all((bit(a) | bit(b)) in c.faces for a, b in tree) and _spans(tree, c.n):
            return tree
    return None


def _spans(tree, n):
    if len(tree) != n - 1:
        return False
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in tree:
        ra, rb = find(a), find(b)
        if ra == rb:
            return False
        parent[ra] = rb
    return True


def edge_path_presentation(c, tree=None):
    if c.n == 0 or len(c.components()) != 1:
        raise PreconditionError("edge-path group needs a connected complex")
    if c.dim < 1 and c.n > 1:
        raise PreconditionError("edge-path group needs dimension >= 1")
    if tree is None:
        tree = (_star_tree(c) if c.dim >= 2 else None) or _bfs_tree(c)
    else:
        tree = [tuple(sorted(c.index[str(v)] for v in e)) for e in tree]
        if not _spans(tree, c.n) or not all((bit(a) | bit(b)) in c.faces for a, b in tree):
            raise PreconditionError("given edges are not a spanning tree of the complex")
    gens = [tuple(members(e)) for e in c.faces_of_size(2)]
    gen_of = {pq: g for g, pq in enumerate(gens)}
    triangles = []
    for t in c.faces_of_size(3):
        p, q, r = members(t)
        triangles.append(((gen_of[(p, q)], 1), (gen_of[(q, r)], 1), (gen_of[(p, r)], -1)))
    tree_rel = [((gen_of[e], 1),) for e in sorted(tree)]
    return Presentation(c.vertices, gens, triangles, tree_rel, sorted(tree))


@dataclass(frozen=True)
class Pi1Report:
    rank: int
    component_data: object  # ComponentReport, or None in dimension <= 1
    formula_terms: tuple  # (s, (f1, ..., fr))

    def to_json(self):
        out = {"rank": self.rank}
        if self.component_data is not None:
            s, fs = self.formula_terms
            out["s"] = s
            out["trivial_sizes"] = list(fs)
        return out


def fung_rank(s, sizes):
    """C(s + sum f - 1, 2) - sum C(f_i, 2)."""
    return comb(s + sum(sizes) - 1, 2) - sum(comb(f, 2) for f in sizes)


def fung_rank_expanded(s, sizes):
    """C(s - 1, 2) + (s - 1) sum f + sum_{i<j} f_i f_j."""
    cross = sum(sizes[i] * sizes[j] for i in range(len(sizes)) for j in range(i + 1, len(sizes)))
    return comb(s - 1, 2) + (s - 1) * sum(sizes) + cross


def pi1_rank(c, check=True):
    """Free rank of the fundamental group of a connected BR complex."""
    if c.n == 0 or len(c.components()) != 1:
        raise PreconditionError("fundamental group rank needs a connected complex")
    if check:
        _require_br(c)
    if c.dim <= 1:
        rank = len(c.faces_of_size(2)) - c.n + 1
        return Pi1Report(rank, None, ())
    rep = component_report(c)
    return Pi1Report(fung_rank(rep.s, rep.trivial_sizes), rep, (rep.s, rep.trivial_sizes))


def simplification_preserves_pi1(c):
    """True iff every H-trivial component of the graph of flats is a single vertex."""
    if c.dim < 2:
        raise PreconditionError("criterion stated for dimension >= 2")
    rep = component_report(c)
    return all(f == 1 for f in rep.trivial_sizes)
