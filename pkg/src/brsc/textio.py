"""Plain-text input formats.

Matrix file::

    matrix
    011
    101
    vertices a b c      # optional, anywhere; default v1 v2 ...

Face-list file::

    faces
    vertices 1 2 3 4    # optional, default: vertices seen in the faces
    1 2 3
    2 4

Blank lines and ``#`` comments are ignored.  A face line may also be a run
of one-character names (``123``).  ``{}`` denotes the empty face.
"""

from ._bits import lex_key
from .boolmat import BoolMatrix, complex_from_matrix
from .complex import SimplicialComplex
from .errors import ParseError


def _lines(text):
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line


def parse(text):
    """Returns ``("matrix", BoolMatrix)`` or ``("faces", SimplicialComplex)``."""
    lines = list(_lines(text))
    if not lines:
        raise ParseError("empty input")
    kind = lines[0][1].lower()
    body = lines[1:]
    vertices = None
    rest = []
    for lineno, line in body:
        if line.split()[0].lower() == "vertices":
            if vertices is not None:
                raise ParseError(f"line {lineno}: second vertices line")
            vertices = line.split()[1:]
            if not vertices:
                raise ParseError(f"line {lineno}: empty vertex list")
        else:
            rest.append((lineno, line))
    body = rest
    if kind == "matrix":
        return "matrix", _parse_matrix(body, vertices)
    if kind == "faces":
        return "faces", _parse_faces(body, vertices)
    raise ParseError(f"line {lines[0][0]}: expected 'matrix' or 'faces' header, got {lines[0][1]!r}")


def _parse_matrix(body, vertices):
    rows = []
    for lineno, line in body:
        cells = line.split() if " " in line or "\t" in line else list(line)
        if any(ch not in "01" for ch in cells):
            raise ParseError(f"line {lineno}: matrix entries must be 0 or 1")
        if rows and len(cells) != len(rows[0]):
            raise ParseError(f"line {lineno}: row has {len(cells)} entries, expected {len(rows[0])}")
        rows.append([int(ch) for ch in cells])
    if not rows:
        raise ParseError("matrix has no rows")
    if vertices is not None and len(vertices) != len(rows[0]):
        raise ParseError(f"{len(vertices)} vertex names for {len(rows[0])} columns")
    try:
        return BoolMatrix.from_rows(rows, cols=vertices)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def _parse_faces(body, vertices):
    faces = []
    for lineno, line in body:
        if line == "{}":
            faces.append(())
            continue
        parts = line.replace(",", " ").split()
        if len(parts) == 1 and (vertices is None or parts[0] not in vertices):
            parts = list(parts[0])
        faces.append(tuple(parts))
    if vertices is None:
        seen = []
        for f in faces:
            for v in f:
                if v not in seen:
                    seen.append(v)
        vertices = sorted(seen, key=lambda v: (not v.isdigit(), int(v) if v.isdigit() else 0, v))
    known = set(vertices)
    for f in faces:
        for v in f:
            if v not in known:
                raise ParseError(f"face {f} uses undeclared vertex {v!r}")
    if len(known) != len(vertices):
        raise ParseError("repeated vertex name")
    return SimplicialComplex(vertices, faces)


def read_complex(path_or_text, is_text=False):
    """Complex from a file (matrix input is converted), plus the matrix if given."""
    text = path_or_text if is_text else open(path_or_text).read()
    kind, obj = parse(text)
    if kind == "matrix":
        return complex_from_matrix(obj), obj
    return obj, None


def format_faces(c, facets_only=True):
    out = ["faces", "vertices " + " ".join(c.vertices)]
    chosen = c.facets if facets_only else c.faces
    for f in sorted(chosen, key=lex_key):
        out.append(" ".join(c.names(f)) if f else "{}")
    return "\n".join(out) + "\n"


def format_matrix(m):
    out = ["matrix", "vertices " + " ".join(m.cols)]
    for row in m.to_lists():
        out.append("".join(str(e) for e in row))
    return "\n".join(out) + "\n"
