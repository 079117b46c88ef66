"""Worked example complexes and seeded random generators."""

from dataclasses import dataclass, field
from itertools import combinations

import numpy as np

from .boolmat import BoolMatrix, complex_from_matrix, make_reduced, row_bound
from .complex import SimplicialComplex
from .errors import BRSCError, PreconditionError, RepresentationError


@dataclass
class InstanceSpec:
    name: str
    params: dict
    recipe: str  # "faces" or "matrix"
    expected_flats: list = field(default_factory=list)  # vertex-name sets


def _graph_complex(n, edges):
    """P<=2 plus every triangle containing an edge of the graph on 1..n."""
    vs = [str(i) for i in range(1, n + 1)]
    path = {frozenset(e) for e in edges}
    tri = [t for t in combinations(vs, 3) if any(frozenset(p) in path for p in combinations(t, 2))]
    return SimplicialComplex(vs, list(combinations(vs, 2)) + tri)


def occur(t):
    if t < 3:
        raise PreconditionError("occur needs t >= 3")
    vs = [x for i in range(1, t + 1) for x in (f"a{i}", f"b{i}")]
    pairs = [(f"a{i}", f"b{i}") for i in range(1, t + 1)]
    tri = [(a, b, x) for a, b in pairs for x in vs if x not in (a, b)]
    return SimplicialComplex(vs, list(combinations(vs, 2)) + tri)


def chhs():
    vs = list("12345")
    edges = [e for e in combinations(vs, 2) if e != ("4", "5")]
    return SimplicialComplex(vs, edges + ["123", "124", "125"])


def noel():
    return _graph_complex(6, ["12", "23", "34", "56"])


def yesel():
    return _graph_complex(7, ["12", "23", "34", "45", "56", "67"])


def yesel_labeling(lat):
    """Cover labeling of the flats of ``yesel``: atoms get their own index,
    an atom i below the line {i, i+1} gets i+1 and below {i-1, i} gets 0,
    the line 12 gets 3 below V and every other line gets 1."""
    from .ordercx import ELLabeling

    m = {v: 1 << i for i, v in enumerate(lat.vertices)}
    labels = {}
    for i in range(1, 8):
        labels[(0, m[str(i)])] = i
    for i in range(1, 7):
        line = m[str(i)] | m[str(i + 1)]
        labels[(m[str(i)], line)] = i + 1
        labels[(m[str(i + 1)], line)] = 0
        labels[(line, lat.top)] = 3 if i == 1 else 1
    return ELLabeling(labels)


def full_simplex(n):
    vs = [str(i) for i in range(1, n + 1)]
    return SimplicialComplex(vs, [vs])


def hollow_triangle():
    return SimplicialComplex("abc", ["ab", "ac", "bc"])


def uniform_matroid(r, n):
    """U_{r,n}: every subset of size <= r is a face."""
    vs = [str(i) for i in range(1, n + 1)]
    return SimplicialComplex(vs, list(combinations(vs, r)))


CATALOG = {
    "occur": InstanceSpec("occur", {"t": 3}, "faces"),
    "chhs": InstanceSpec("chhs", {}, "faces", [set(), {"1"}, {"2"}, {"3"}, {"1", "2"}, {"4", "5"}, set("12345")]),
    "noel": InstanceSpec(
        "noel", {}, "faces", [set()] + [{str(i)} for i in range(1, 7)] + [set(p) for p in ("12", "23", "34", "56")] + [set("123456")]
    ),
    "yesel": InstanceSpec(
        "yesel", {}, "faces",
        [set()] + [{str(i)} for i in range(1, 8)] + [set(p) for p in ("12", "23", "34", "45", "56", "67")] + [set("1234567")],
    ),
}


def occur_flats(t):
    vs = [x for i in range(1, t + 1) for x in (f"a{i}", f"b{i}")]
    return [set()] + [{v} for v in vs] + [{f"a{i}", f"b{i}"} for i in range(1, t + 1)] + [set(vs)]


def example(name, **params):
    if name == "occur":
        return occur(int(params.get("t", 3)))
    if params:
        raise PreconditionError(f"example {name!r} takes no parameters")
    builders = {
        "chhs": chhs,
        "noel": noel,
        "yesel": yesel,
        "hollow-triangle": hollow_triangle,
    }
    if name not in builders:
        raise PreconditionError(f"unknown example {name!r}; known: occur, {', '.join(builders)}")
    return builders[name]()


def random_brsc_matrix(seed, n, d, max_draws=10_000, connected=True):
    """Random reduced matrix (entries Bernoulli(1/2)) and its complex.

    The row count is uniform on d+1 .. min((d+1) n^d, 4n); draws are
    rejected until the complex has dimension d and, if asked, is connected.
    """
    if d not in (1, 2, 3):
        raise PreconditionError("d must be 1, 2 or 3")
    rng = np.random.default_rng(seed)
    hi = max(min(row_bound(n, d), 4 * n), d + 1)
    cols = [str(j + 1) for j in range(n)]
    for _ in range(max_draws):
        rows = int(rng.integers(d + 1, hi + 1))
        m = BoolMatrix.from_rows(rng.integers(0, 2, size=(rows, n)).tolist(), cols=cols)
        try:
            m = make_reduced(m)
        except RepresentationError:
            continue
        c = complex_from_matrix(m)
        if c.dim == d and (not connected or len(c.components()) == 1):
            return m, c
    raise BRSCError(f"no complex of dimension {d} on {n} vertices in {max_draws} draws")


def random_brsc(seed, n, d, max_draws=10_000, connected=True):
    return random_brsc_matrix(seed, n, d, max_draws, connected)[1]


def random_simple_dim2_matrix(seed, n, n_lines=None):
    """Matrix of a simple complex of dimension exactly 2 on n >= 4 vertices.

    Rows: the complement of each singleton (every pair is independent) and
    the complement of each line, lines being random sets of 2..4 points
    that pairwise share at most one point.  A 4-set would need a line
    through three of its points and a second line through exactly two of
    those three, which the intersection rule forbids.
    """
    if n < 4:
        raise PreconditionError("need at least 4 vertices")
    rng = np.random.default_rng(seed)
    n_lines = n if n_lines is None else n_lines
    full = (1 << n) - 1
    lines = []
    tries = 0
    while len(lines) < n_lines and tries < 50 * n_lines:
        tries += 1
        k = int(rng.integers(2, min(4, n - 1) + 1))
        pts = rng.choice(n, size=k, replace=False)
        m = 0
        for p in pts:
            m |= 1 << int(p)
        if all((m & other).bit_count() <= 1 for other in lines):
            lines.append(m)
    bits = [full & ~(1 << j) for j in range(n)] + [full & ~ln for ln in lines]
    bits = list(dict.fromkeys(bits))
    return BoolMatrix(tuple(f"r{i + 1}" for i in range(len(bits))), tuple(str(j + 1) for j in range(n)), tuple(bits))
