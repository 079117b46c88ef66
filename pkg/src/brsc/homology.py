"""Integer simplicial homology via Smith normal form.

All arithmetic is on Python ints, so no overflow can masquerade as torsion.
"""

import json
from dataclasses import dataclass

from ._bits import members
from .complex import link, pure_part


@dataclass
class ChainComplex:
    bases: dict  # k -> k-faces (bitmasks), sorted in vertex order
    boundaries: dict  # k >= 1 -> |C_{k-1}| x |C_k| list-of-lists matrix

    def composite_is_zero(self):
        for k in self.boundaries:
            if k + 1 not in self.boundaries:
                continue
            a, b = self.boundaries[k], self.boundaries[k + 1]
            if not a or not b or not b[0]:
                continue
            for i in range(len(a)):
                for j in range(len(b[0])):
                    if sum(a[i][t] * b[t][j] for t in range(len(b))):
                        return False
        return True


def boundary_matrices(c):
    """Boundary of x0 < x1 < ... < xk is sum of (-1)^i (X - {x_i})."""
    bases = {k: list(c.faces_of_size(k + 1)) for k in range(c.dim + 1)}
    boundaries = {}
    for k in range(1, c.dim + 1):
        row_of = {f: i for i, f in enumerate(bases[k - 1])}
        mat = [[0] * len(bases[k]) for _ in bases[k - 1]]
        for j, face in enumerate(bases[k]):
            for i, v in enumerate(members(face)):
                mat[row_of[face & ~(1 << v)]][j] = -1 if i % 2 else 1
        boundaries[k] = mat
    return ChainComplex(bases, boundaries)


@dataclass
class SmithForm:
    diagonal: list  # nonzero invariant factors, each dividing the next
    left: list = None  # unimodular, left @ a @ right == diag
    right: list = None

    @property
    def rank(self):
        return len(self.diagonal)


def _identity(n):
    return [[int(i == j) for j in range(n)] for i in range(n)]


def smith_normal_form(a, transforms=True):
    """Smith normal form of an integer matrix (list of rows).

    Returns the nonzero diagonal entries d1 | d2 | ... (positive) and,
    when ``transforms`` is set, unimodular ``left``, ``right`` with
    ``left @ a @ right`` equal to the diagonal matrix.
    """
    A = [[int(x) for x in row] for row in a]
    m = len(A)
    n = len(A[0]) if m else 0
    L = _identity(m) if transforms else None
    R = _identity(n) if transforms else None

    def swap_rows(i, j):
        if i != j:
            A[i], A[j] = A[j], A[i]
            if transforms:
                L[i], L[j] = L[j], L[i]

    def swap_cols(i, j):
        if i != j:
            for row in A:
                row[i], row[j] = row[j], row[i]
            if transforms:
                for row in R:
                    row[i], row[j] = row[j], row[i]

    def add_row(dst, src, q):
        # row dst -= q * row src
        rs, rd = A[src], A[dst]
        for j in range(n):
            if rs[j]:
                rd[j] -= q * rs[j]
        if transforms:
            ls, ld = L[src], L[dst]
            for j in range(m):
                if ls[j]:
                    ld[j] -= q * ls[j]

    def add_col(dst, src, q):
        for row in A:
            if row[src]:
                row[dst] -= q * row[src]
        if transforms:
            for row in R:
                if row[src]:
                    row[dst] -= q * row[src]

    t = 0
    while t < min(m, n):
        best = None
        for i in range(t, m):
            row = A[i]
            for j in range(t, n):
                v = row[j]
                if v and (best is None or abs(v) < best[0]):
                    best = (abs(v), i, j)
                    if best[0] == 1:
                        break
            if best is not None and best[0] == 1:
                break
        if best is None:
            break
        swap_rows(t, best[1])
        swap_cols(t, best[2])
        while True:
            p = A[t][t]
            clean = True
            for i in range(t + 1, m):
                if A[i][t]:
                    add_row(i, t, A[i][t] // p)
                    if A[i][t]:
                        clean = False
            for j in range(t + 1, n):
                if A[t][j]:
                    add_col(j, t, A[t][j] // p)
                    if A[t][j]:
                        clean = False
            if clean:
                bad = next(
                    (i for i in range(t + 1, m) for j in range(t + 1, n) if A[i][j] % p),
                    None,
                )
                if bad is None:
                    break
                add_row(t, bad, -1)
                continue
            # a remainder survived: move the smallest entry of row/column t to the pivot
            cand = [(abs(A[i][t]), i, t) for i in range(t, m) if A[i][t]]
            cand += [(abs(A[t][j]), t, j) for j in range(t + 1, n) if A[t][j]]
            _, i, j = min(cand)
            swap_rows(t, i)
            swap_cols(t, j)
        if A[t][t] < 0:
            A[t] = [-x for x in A[t]]
            if transforms:
                L[t] = [-x for x in L[t]]
        t += 1
    return SmithForm([A[i][i] for i in range(t)], L, R)


@dataclass
class HomologyReport:
    betti: list  # reduced ranks, index = dimension
    torsion: list  # invariant factors > 1, per dimension

    @property
    def torsion_free(self):
        return not any(self.torsion)

    @property
    def acyclic(self):
        return not any(self.betti) and self.torsion_free

    def to_json(self):
        return {"betti": list(self.betti), "torsion": [list(t) for t in self.torsion]}

    def dumps(self):
        return json.dumps(self.to_json())


def reduced_homology(c, top=None):
    """Reduced integral homology in dimensions 0..top (default dim c)."""
    if c.n == 0:
        return HomologyReport([], [])
    top = c.dim if top is None else min(top, c.dim)
    chain = boundary_matrices(c)
    smith = {}
    for k in range(1, min(top + 1, c.dim) + 1):
        mat = chain.boundaries[k]
        smith[k] = smith_normal_form(mat, transforms=False).diagonal if mat and mat[0] else []
    betti, torsion = [], []
    for k in range(top + 1):
        if k == 0:
            betti.append(len(c.components()) - 1)
        else:
            betti.append(len(chain.bases[k]) - len(smith[k]) - len(smith.get(k + 1, [])))
        torsion.append([d for d in smith.get(k + 1, []) if d > 1])
    return HomologyReport(betti, torsion)


def is_sequentially_cohen_macaulay(c):
    """Duval's criterion: reduced H_k(pure_m(lk X)) = 0 for every face X
    and all 0 <= k < m <= dim.

    Returns ``(True, None)`` or ``(False, (X, m, k))``.  A pure part with
    no m-faces is the void complex and imposes nothing.
    """
    d = c.dim
    for face in sorted(c.faces, key=lambda f: (bin(f).count("1"), members(f))):
        if face == c.full:
            continue
        lk = link(c, face)
        for m in range(1, min(d, lk.dim) + 1):
            rep = reduced_homology(pure_part(lk, m), top=m - 1)
            for k in range(m):
                if rep.betti[k] or rep.torsion[k]:
                    return False, (c.names(face), m, k)
    return True, None
