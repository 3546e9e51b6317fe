"""Plain-text diagram format.

A file is a header line `shd 1`, then one line per vertex, edge, and region.
Blank lines are skipped; `#` starts a comment line.  A comment of the form
`# name: <text>` names the diagram.  Example:

    shd 1
    # name: round annulus
    vertex 1 marker
    edge 1 bd 1 1 1
    region 1 genus 0 cycle +1

Canonical output sorts vertices, edges, regions by id, writes explicit
signs on cycle references, single spaces, and a trailing newline.
"""
from __future__ import annotations

import hashlib
import re

from .diagram import Diagram, Edge, Region, Vertex, CURVE_KINDS, VERTEX_KINDS

FORMAT_VERSION = 1


class ParseError(ValueError):
    def __init__(self, message: str, line: int, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


_TOKEN = re.compile(r"\S+")


def _int(tok: str, what: str, line: int, col: int, positive: bool = False) -> int:
    try:
        val = int(tok)
    except ValueError:
        raise ParseError(f"{what} must be an integer, got {tok!r}", line, col) from None
    if positive and val <= 0:
        raise ParseError(f"{what} must be positive, got {val}", line, col)
    return val


def parse(text: str) -> Diagram:
    """Parse diagram text.  Raises ParseError with line and column."""
    vertices: list[Vertex] = []
    edges: list[Edge] = []
    regions: list[Region] = []
    name: str | None = None
    saw_header = False

    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped:
            continue
        if stripped.startswith("#"):
            m = re.match(r"#\s*name:\s*(.*\S)", stripped)
            if m and name is None:
                name = m.group(1)
            continue
        toks = [(m.group(0), m.start() + 1) for m in _TOKEN.finditer(raw)]
        kind = toks[0][0]
        if not saw_header:
            if kind != "shd":
                raise ParseError("expected header 'shd 1'", lineno, toks[0][1])
            if len(toks) != 2 or toks[1][0] != str(FORMAT_VERSION):
                raise ParseError("unsupported format version", lineno,
                                 toks[1][1] if len(toks) > 1 else toks[0][1])
            saw_header = True
            continue
        if kind == "vertex":
            if len(toks) != 3:
                raise ParseError("vertex line needs: vertex <id> <kind>",
                                 lineno, toks[0][1])
            vid = _int(toks[1][0], "vertex id", lineno, toks[1][1], positive=True)
            vkind = toks[2][0]
            if vkind not in VERTEX_KINDS:
                raise ParseError(f"unknown vertex kind {vkind!r}", lineno, toks[2][1])
            vertices.append(Vertex(vid, vkind))
        elif kind == "edge":
            if len(toks) != 6:
                raise ParseError(
                    "edge line needs: edge <id> <curve> <index> <tail> <head>",
                    lineno, toks[0][1])
            eid = _int(toks[1][0], "edge id", lineno, toks[1][1], positive=True)
            curve = toks[2][0]
            if curve not in CURVE_KINDS:
                raise ParseError(f"unknown curve kind {curve!r}", lineno, toks[2][1])
            index = _int(toks[3][0], "circle index", lineno, toks[3][1], positive=True)
            tail = _int(toks[4][0], "tail vertex", lineno, toks[4][1], positive=True)
            head = _int(toks[5][0], "head vertex", lineno, toks[5][1], positive=True)
            edges.append(Edge(eid, curve, index, tail, head))
        elif kind == "region":
            if len(toks) < 5 or toks[2][0] != "genus":
                raise ParseError(
                    "region line needs: region <id> genus <g> cycle <refs>...",
                    lineno, toks[0][1])
            rid = _int(toks[1][0], "region id", lineno, toks[1][1], positive=True)
            genus = _int(toks[3][0], "genus", lineno, toks[3][1])
            if genus < 0:
                raise ParseError("genus must be nonnegative", lineno, toks[3][1])
            cycles: list[list[int]] = []
            i = 4
            if toks[4][0] != "cycle":
                raise ParseError("expected 'cycle'", lineno, toks[4][1])
            while i < len(toks):
                tok, col = toks[i]
                if tok == "cycle":
                    cycles.append([])
                    i += 1
                    continue
                ref = _int(tok.lstrip("+") if tok.startswith("+") else tok,
                           "edge reference", lineno, col)
                if ref == 0:
                    raise ParseError("edge reference cannot be 0", lineno, col)
                if not cycles:
                    raise ParseError("edge reference before 'cycle'", lineno, col)
                cycles[-1].append(ref)
                i += 1
            if any(not c for c in cycles):
                raise ParseError("empty cycle", lineno, toks[0][1])
            regions.append(Region(rid, genus, tuple(tuple(c) for c in cycles)))
        else:
            raise ParseError(f"unknown record {kind!r}", lineno, toks[0][1])

    if not saw_header:
        raise ParseError("empty input, expected header 'shd 1'", 1)
    return Diagram(vertices, edges, regions, name=name)


def serialize(d: Diagram) -> str:
    """Canonical text for a diagram: stable under parse/serialize round trips."""
    lines = [f"shd {FORMAT_VERSION}"]
    if d.name:
        lines.append(f"# name: {d.name}")
    for vid in sorted(d.vertices):
        v = d.vertices[vid]
        lines.append(f"vertex {v.id} {v.kind}")
    for eid in sorted(d.edges):
        e = d.edges[eid]
        lines.append(f"edge {e.id} {e.curve} {e.index} {e.tail} {e.head}")
    for rid in sorted(d.regions):
        r = d.regions[rid]
        parts = [f"region {r.id} genus {r.genus}"]
        for cyc in r.cycles:
            parts.append("cycle " + " ".join(f"{ref:+d}" for ref in cyc))
        lines.append(" ".join(parts))
    return "\n".join(lines) + "\n"


def digest(d: Diagram) -> str:
    """Short stable fingerprint of the diagram's canonical form (name included)."""
    return hashlib.sha256(serialize(d).encode()).hexdigest()[:12]


def load(path: str) -> Diagram:
    with open(path, encoding="utf-8") as fh:
        return parse(fh.read())


def save(path: str, d: Diagram) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(serialize(d))
