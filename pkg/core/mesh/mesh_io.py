"""
Plain-text mesh format.

    mesh2d 1
    vertices N
    x y            (N lines)
    cells M
    tri i j k      (or: quad i j k l, M lines)

Blank lines and lines starting with '#' are ignored. Coordinates are written
with 17 significant digits so a write/read cycle reproduces them exactly.
"""

from pathlib import Path
from typing import TextIO

from core.errors import ParseError
from .mesh import CellKind, Mesh

HEADER = "mesh2d"
VERSION = 1


def _tokens(lines):
    for lineno, raw in enumerate(lines, start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith('#'):
            continue
        yield lineno, stripped.split()


def _count(entry, keyword: str) -> int:
    if entry is None:
        raise ParseError(f"unexpected end of file, expected '{keyword}'")
    lineno, words = entry
    if len(words) != 2 or words[0] != keyword:
        raise ParseError(f"expected '{keyword} <count>'", line=lineno)
    try:
        count = int(words[1])
    except ValueError:
        raise ParseError(f"invalid {keyword} count {words[1]!r}", line=lineno)
    if count < 0:
        raise ParseError(f"negative {keyword} count", line=lineno)
    return count


def parse_mesh(text: str) -> Mesh:
    stream = _tokens(text.splitlines())

    entry = next(stream, None)
    if entry is None:
        raise ParseError("empty mesh file")
    lineno, words = entry
    if words != [HEADER, str(VERSION)]:
        raise ParseError(f"expected header '{HEADER} {VERSION}'", line=lineno)

    n_vertices = _count(next(stream, None), 'vertices')
    vertices = []
    for _ in range(n_vertices):
        entry = next(stream, None)
        if entry is None:
            raise ParseError("unexpected end of file in vertex block")
        lineno, words = entry
        if len(words) != 2:
            raise ParseError("vertex line must hold two coordinates", line=lineno)
        try:
            vertices.append((float(words[0]), float(words[1])))
        except ValueError:
            raise ParseError(f"invalid coordinate in {' '.join(words)!r}", line=lineno)

    n_cells = _count(next(stream, None), 'cells')
    cells = []
    for _ in range(n_cells):
        entry = next(stream, None)
        if entry is None:
            raise ParseError("unexpected end of file in cell block")
        lineno, words = entry
        try:
            kind = CellKind(words[0])
        except ValueError:
            raise ParseError(f"unknown cell type {words[0]!r}", line=lineno)
        expected = 3 if kind == CellKind.TRIANGLE else 4
        if len(words) != expected + 1:
            raise ParseError(f"{kind.value} needs {expected} vertex indices", line=lineno)
        try:
            indices = tuple(int(w) for w in words[1:])
        except ValueError:
            raise ParseError("vertex indices must be integers", line=lineno)
        if any(i < 0 or i >= n_vertices for i in indices):
            raise ParseError("vertex index out of range", line=lineno)
        cells.append(indices)

    extra = next(stream, None)
    if extra is not None:
        raise ParseError("trailing content after cell block", line=extra[0])

    return Mesh(vertices, cells)


def format_mesh(mesh: Mesh) -> str:
    lines = [f"{HEADER} {VERSION}", f"vertices {mesh.n_vertices}"]
    lines.extend(f"{x:.17g} {y:.17g}" for x, y in mesh.vertices)
    lines.append(f"cells {mesh.n_cells}")
    for cell in mesh.cells:
        lines.append(" ".join([cell.kind.value] + [str(v) for v in cell.vertices]))
    return "\n".join(lines) + "\n"


def read_mesh(source: str | Path | TextIO) -> Mesh:
    if hasattr(source, 'read'):
        return parse_mesh(source.read())
    return parse_mesh(Path(source).read_text(encoding='utf-8'))


def write_mesh(mesh: Mesh, target: str | Path | TextIO):
    text = format_mesh(mesh)
    if hasattr(target, 'write'):
        target.write(text)
    else:
        Path(target).write_text(text, encoding='utf-8')
