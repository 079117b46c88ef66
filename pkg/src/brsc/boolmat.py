"""Boolean matrices and M-independence of column sets.

A column set X is M-independent when some square submatrix M[Y, X] is
congruent to a lower unitriangular matrix.  The test below is the
marker recursion: a nonsingular matrix has a row with a single 1 (a
marker); delete that row and its column and recurse.  A marker row is
zero on every remaining column, so the recursion depends only on the
set of remaining columns and can be memoized on it.
"""

from dataclasses import dataclass, field

from ._bits import bit, members, popcount
from .complex import SimplicialComplex
from .errors import PreconditionError, RepresentationError


@dataclass(frozen=True)
class BoolMatrix:
    rows: tuple
    cols: tuple
    bits: tuple  # one int per row; bit j set iff entry (row, cols[j]) is 1
    _memo: dict = field(default_factory=dict, compare=False, repr=False, hash=False)

    def __post_init__(self):
        if len(set(self.rows)) != len(self.rows):
            raise ValueError("row labels must be unique")
        if len(set(self.cols)) != len(self.cols):
            raise ValueError("column labels must be unique")
        if len(self.bits) != len(self.rows):
            raise ValueError("one bit row per row label")
        full = (1 << len(self.cols)) - 1
        if any(b & ~full for b in self.bits):
            raise ValueError("row has bits outside the column range")

    @classmethod
    def from_rows(cls, rows, cols=None, row_labels=None):
        """Build from 0/1 sequences or strings such as ``"0110"``."""
        rows = [[int(ch) for ch in r] for r in rows]
        width = len(rows[0]) if rows else len(cols or ())
        if any(len(r) != width for r in rows):
            raise ValueError("rows have different lengths")
        if any(e not in (0, 1) for r in rows for e in r):
            raise ValueError("entries must be 0 or 1")
        if cols is None:
            cols = [f"v{j + 1}" for j in range(width)]
        if len(cols) != width:
            raise ValueError("column label count does not match the row width")
        if row_labels is None:
            row_labels = [f"r{i + 1}" for i in range(len(rows))]
        bits = tuple(sum(1 << j for j, e in enumerate(r) if e) for r in rows)
        return cls(tuple(row_labels), tuple(str(c) for c in cols), bits)

    @property
    def shape(self):
        return len(self.rows), len(self.cols)

    def entry(self, r, c):
        return self.bits[r] >> c & 1

    def to_lists(self):
        return [[self.entry(r, c) for c in range(len(self.cols))] for r in range(len(self.rows))]

    def column_mask(self, x):
        idx = {c: j for j, c in enumerate(self.cols)}
        if isinstance(x, int):
            return x
        if isinstance(x, str):
            x = [x] if x in idx else list(x)
        m = 0
        for v in x:
            if str(v) not in idx:
                raise PreconditionError(f"unknown column {v!r}")
            m |= bit(idx[str(v)])
        return m

    def zero_columns(self):
        union = 0
        for b in self.bits:
            union |= b
        full = (1 << len(self.cols)) - 1
        return [self.cols[j] for j in members(full & ~union)]

    @property
    def is_reduced(self):
        return (
            len(set(self.bits)) == len(self.bits)
            and 0 not in self.bits
            and not self.zero_columns()
        )

    def independent_mask(self, s):
        """M-independence of the column subset encoded by ``s``."""
        return _independent(s, self.bits, self._memo)

    def submatrix(self, row_idx, col_idx):
        rows = [[self.entry(r, c) for c in col_idx] for r in row_idx]
        return BoolMatrix.from_rows(
            rows,
            cols=[self.cols[c] for c in col_idx],
            row_labels=[self.rows[r] for r in row_idx],
        )


def _independent(s, bits, memo):
    if s == 0:
        return True
    hit = memo.get(s)
    if hit is not None:
        return hit
    markers = 0
    for b in bits:
        r = b & s
        if r and r & (r - 1) == 0:
            markers |= r
    ok = False
    while markers:
        low = markers & -markers
        if _independent(s & ~low, bits, memo):
            ok = True
            break
        markers ^= low
    memo[s] = ok
    return ok


def is_nonsingular(m):
    nr, nc = m.shape
    if nr != nc:
        raise PreconditionError(f"nonsingularity needs a square matrix, got {nr}x{nc}")
    if nr == 0:
        raise PreconditionError("empty matrix")
    return _independent((1 << nc) - 1, m.bits, {})


def is_independent(m, x):
    return m.independent_mask(m.column_mask(x))


def make_reduced(m):
    """Drop zero rows and repeated rows (first copy kept)."""
    zero = m.zero_columns()
    if zero:
        raise RepresentationError(f"zero column(s) {zero}: every vertex must be a face")
    seen = set()
    rows, bits = [], []
    for label, b in zip(m.rows, m.bits):
        if b == 0 or b in seen:
            continue
        seen.add(b)
        rows.append(label)
        bits.append(b)
    return BoolMatrix(tuple(rows), m.cols, tuple(bits))


def zero_sets(m):
    full = (1 << len(m.cols)) - 1
    return [full & ~b for b in m.bits]


def line_masks(m):
    n = len(m.cols)
    return sorted({z for z in zero_sets(m) if 2 <= popcount(z) < n})


def lines(m):
    return {frozenset(m.cols[j] for j in members(z)) for z in line_masks(m)}


def row_bound(n, d):
    return (d + 1) * n**d


def complex_from_matrix(m, expected_dim=None):
    """Complex of all M-independent column sets.

    Faces are enumerated level by level; a candidate is tested only when
    all of its co-dimension one subsets are already faces.
    """
    n = len(m.cols)
    if expected_dim is not None and len(m.rows) > row_bound(n, expected_dim):
        raise RepresentationError(
            f"{len(m.rows)} rows exceed the bound {row_bound(n, expected_dim)} "
            f"for a reduced representation of a {expected_dim}-dimensional complex"
        )
    zero = m.zero_columns()
    if zero:
        raise RepresentationError(f"zero column(s) {zero}: every vertex must be a face")

    faces = {0}
    level = [bit(j) for j in range(n)]
    faces.update(level)
    while level:
        current = set(level)
        nxt = []
        for s in level:
            top = s.bit_length()
            for j in range(top, n):
                cand = s | bit(j)
                if all((cand & ~bit(i)) in current for i in members(s)):
                    if m.independent_mask(cand):
                        nxt.append(cand)
        faces.update(nxt)
        level = nxt
    c = SimplicialComplex.from_masks(m.cols, faces, closed=True)
    if expected_dim is not None and c.dim != expected_dim:
        raise RepresentationError(f"matrix defines a complex of dimension {c.dim}, expected {expected_dim}")
    return c
