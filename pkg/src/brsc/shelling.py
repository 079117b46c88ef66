"""Shellings: validation, the dimension-2 decision, search, the lift
through closure-equivalent vertices, and Betti numbers from homology facets."""

import json
import time
from dataclasses import dataclass, field

from ._bits import bit, lex_key, members, popcount
from .errors import BRSCError, PreconditionError
from .flats import _require_br, eta_partition, normalize_partition, quotient, simplification, simplify_matrix
from .gamma import graph_of_flats, predict_gamma_fl


class SearchTimeout(BRSCError):
    pass


@dataclass
class Shelling:
    """Facet order B1..Bt (name tuples in vertex order).

    ``certificates[k]`` lists the vertices x of B_k with B_k - x already
    covered by earlier facets; the step is valid iff every intersection
    with an earlier facet misses one of them.
    """

    order: list
    homology_facets: list = field(default_factory=list)
    certificates: list = field(default_factory=list)

    def to_json(self):
        return {"order": [list(f) for f in self.order], "homology_facets": list(self.homology_facets)}

    def dumps(self):
        return json.dumps(self.to_json())


def _step_free(b, previous):
    """Vertices x in b with b - x inside some earlier facet."""
    free = 0
    for x in members(b):
        rest = b & ~bit(x)
        if any(rest & ~p == 0 for p in previous):
            free |= bit(x)
    return free


def _step_ok(b, previous):
    if not previous or popcount(b) < 2:
        return True
    free = _step_free(b, previous)
    if not free:
        return False
    return all((b & ~p) & free for p in previous)


def _as_masks(c, order):
    masks = [c.to_mask(f) for f in order]
    if sorted(masks) != sorted(c.facets) or len(set(masks)) != len(masks):
        raise PreconditionError("order is not a permutation of the facets")
    return masks


def validate_shelling(c, order):
    """``(True, None)`` or ``(False, k)`` with k the first failing (0-based) position."""
    masks = _as_masks(c, order)
    for k in range(1, len(masks)):
        if not _step_ok(masks[k], masks[:k]):
            return False, k
    return True, None


def _homology_facets(masks):
    out = []
    for k in range(1, len(masks)):
        b = masks[k]
        if all(any((b & ~bit(x)) & ~p == 0 for p in masks[:k]) for x in members(b)):
            out.append(k)
    return out


def _build(c, masks):
    return Shelling(
        [c.names(m) for m in masks],
        _homology_facets(masks),
        [c.names(_step_free(masks[k], masks[:k])) if k else () for k in range(len(masks))],
    )


def search_shelling(c, timeout_ms=None):
    """Backtracking search over facet orders, largest facets first.

    A shelling can always be rearranged so facet sizes never increase, so
    only such orders are explored.  Whether a facet may come next depends
    only on the set already placed, which is the memo key for dead ends.
    Returns a Shelling or None.
    """
    facets = sorted(c.facets, key=lambda f: (-popcount(f), members(f)))
    t = len(facets)
    if t == 0:
        return None
    deadline = None if timeout_ms is None else time.monotonic() + timeout_ms / 1000
    dead = set()
    order = []
    steps = [0]

    def extend(used):
        if len(order) == t:
            return True
        if used in dead:
            return False
        steps[0] += 1
        if deadline is not None and steps[0] % 256 == 0 and time.monotonic() > deadline:
            raise SearchTimeout("shelling search exceeded the time budget")
        size = None
        for i in range(t):
            if used >> i & 1:
                continue
            if size is None:
                size = popcount(facets[i])
            elif popcount(facets[i]) != size:
                break
            if _step_ok(facets[i], order):
                order.append(facets[i])
                if extend(used | bit(i)):
                    return True
                order.pop()
        dead.add(used)
        return False

    if extend(0):
        return _build(c, order)
    return None


def _graph_shellable(c):
    with_edges = [m for m in c.components() if popcount(m) > 1]
    return len(with_edges) <= 1


def _shelltwo(graph_components):
    # simple complex: a component carries an edge of H iff it has two vertices
    nontrivial = sum(1 for m in graph_components if popcount(m) > 1)
    return len(graph_components) <= 2 or nontrivial == 1


def is_shellable(c, timeout_ms=None):
    """Shellability of a boolean representable complex.

    Dimension <= 1: at most one component of the graph carries edges.
    Dimension 2: decided on the simplification from its graph of flats.
    Dimension >= 3: exhaustive search (no structural criterion is used).
    """
    _require_br(c)
    if c.dim <= 1:
        return _graph_shellable(c)
    if c.dim == 2:
        hs = simplification(c)[0]
        return _shelltwo(graph_of_flats(hs).component_masks())
    return search_shelling(c, timeout_ms) is not None


def decide_shellable_matrix(m):
    """Shellability of the simple 2-dimensional complex defined by ``m``,
    read off the clique graph of its lines without building the complex."""
    m = simplify_matrix(m)
    g = predict_gamma_fl(m)
    if g == "connected":
        return True
    return _shelltwo(g.component_masks())


def lift_shelling(c, tau, quotient_shelling):
    """Shelling of ``c`` from a shelling of ``c / tau``.

    Each non-representative vertex e of a block is restored in turn: every
    facet B is followed by B with the representative replaced by e, when
    B contains the representative.
    """
    part = normalize_partition(c, tau)
    eta = eta_partition(c)
    for blk in part.blocks:
        if len({eta.block_of[v] for v in blk}) != 1:
            raise PreconditionError(f"block {blk} does not refine the closure partition")
    steps = [(blk[0], e) for blk in part.blocks for e in blk[1:]]

    def partial(j):
        merged = {}
        for rep, e in steps[:j]:
            merged[e] = rep
        return {v: merged.get(v, v) for v in c.vertices}

    qc, _ = quotient(c, partial(len(steps)), check=False)
    order = [tuple(f) for f in quotient_shelling.order]
    ok, bad = validate_shelling(qc, order)
    if not ok:
        raise PreconditionError(f"input shelling fails at position {bad}")
    for j in range(len(steps), 0, -1):
        rep, e = steps[j - 1]
        lower, _ = quotient(c, partial(j - 1), check=False)
        out, seen = [], set()
        for f in order:
            for g in ([f, tuple(e if v == rep else v for v in f)] if rep in f else [f]):
                key = lower.to_mask(g)
                if key not in seen:
                    seen.add(key)
                    out.append(key)
        order = [lower.names(m) for m in out]
    ok, bad = validate_shelling(c, order)
    if not ok:
        raise BRSCError(f"lifted order fails the shelling condition at position {bad}")
    return _build(c, [c.to_mask(f) for f in order])


def find_shelling(c, timeout_ms=None):
    """A validated shelling; for BR complexes of dimension 2 it is found on
    the simplification and lifted back."""
    if c.dim == 2:
        if not is_shellable(c):
            raise PreconditionError("complex is not shellable")
        hs, _ = simplification(c)
        base = search_shelling(hs, timeout_ms)
        if base is None:
            raise BRSCError("search failed on a complex decided shellable")
        return lift_shelling(c, eta_partition(c), base)
    found = search_shelling(c, timeout_ms)
    if found is None:
        raise PreconditionError("complex is not shellable")
    return found


def betti_from_shelling(c, s):
    """w_i = number of homology facets of dimension i, for i = 0..dim."""
    masks = _as_masks(c, s.order)
    ok, bad = validate_shelling(c, s.order)
    if not ok:
        raise PreconditionError(f"invalid shelling at position {bad}")
    w = [0] * (c.dim + 1)
    for k in _homology_facets(masks):
        w[popcount(masks[k]) - 1] += 1
    return w


def exhaustive_shellable(c):
    """Brute force over all facet permutations (test oracle, <= 8 facets)."""
    from itertools import permutations

    facets = sorted(c.facets, key=lex_key)
    if len(facets) > 8:
        raise PreconditionError("exhaustive search limited to 8 facets")
    for perm in permutations(facets):
        if all(_step_ok(perm[k], perm[:k]) for k in range(1, len(perm))):
            return True
    return False
