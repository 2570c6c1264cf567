"""Line-oriented input documents and their canonical text form.

Four kinds are understood, each introduced by a ``kind`` header:

    kind rank-table          kind graph          kind matroid        kind hypergraph
    n 2                      vertices 3          n 3                 vertices a b
    rank empty 0             edge 1 2            base 1,2            hedge a b
    rank 1 1                 edge 2 3            base 1,3            hedge a b
    rank 2 1                 edge 1 3            base 2,3
    rank 1,2 2

Blank lines and ``#`` comments are ignored.  Rank tables must list
every subset exactly once; subsets are comma-separated element lists
or the word ``empty``.  ``emit_document`` produces a canonical text
form, and parse(emit(parse(text))) == parse(text).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import ClassVar, Union


class ParseError(ValueError):
    def __init__(self, line: int, column: int, message: str):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column
        self.reason = message


@dataclass(frozen=True)
class RankTableDocument:
    kind: ClassVar[str] = "rank-table"
    n: int
    entries: tuple[tuple[tuple[int, ...], int], ...]  # sorted by subset mask


@dataclass(frozen=True)
class GraphDocument:
    kind: ClassVar[str] = "graph"
    vertex_count: int
    edges: tuple[tuple[int, int], ...]  # input order


@dataclass(frozen=True)
class MatroidDocument:
    kind: ClassVar[str] = "matroid"
    n: int
    bases: tuple[tuple[int, ...], ...]  # sorted


@dataclass(frozen=True)
class HypergraphDocument:
    kind: ClassVar[str] = "hypergraph"
    vertices: tuple[str, ...]
    hyperedges: tuple[tuple[str, ...], ...]  # input order, members in vertex order


InputDocument = Union[RankTableDocument, GraphDocument, MatroidDocument, HypergraphDocument]


def _tokenize(text: str):
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.split("#", 1)[0]
        if not stripped.strip():
            continue
        tokens = stripped.split()
        columns = []
        cursor = 0
        for tok in tokens:
            at = stripped.index(tok, cursor)
            columns.append(at + 1)
            cursor = at + len(tok)
        rows.append((lineno, tokens, columns))
    return rows


def _parse_int(token: str, lineno: int, column: int, what: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise ParseError(lineno, column, f"expected an integer {what}, got {token!r}") from None


def _parse_subset(token: str, lineno: int, column: int) -> tuple[int, ...]:
    if token == "empty":
        return ()
    parts = token.split(",")
    out = []
    for part in parts:
        if not part:
            raise ParseError(lineno, column, f"malformed subset {token!r}")
        out.append(_parse_int(part, lineno, column, "element"))
    if len(set(out)) != len(out):
        raise ParseError(lineno, column, f"repeated element in subset {token!r}")
    return tuple(sorted(out))


def parse_document(text: str) -> InputDocument:
    rows = _tokenize(text)
    if not rows:
        raise ParseError(1, 1, "empty document")
    lineno, tokens, columns = rows[0]
    if tokens[0] != "kind" or len(tokens) != 2:
        raise ParseError(lineno, columns[0], "document must start with 'kind <kind>'")
    kind = tokens[1]
    body = rows[1:]
    if kind == "rank-table":
        return _parse_rank_table(body, lineno)
    if kind == "graph":
        return _parse_graph(body, lineno)
    if kind in ("matroid", "matroid-bases"):
        return _parse_matroid(body, lineno)
    if kind == "hypergraph":
        return _parse_hypergraph(body, lineno)
    raise ParseError(lineno, columns[1], f"unknown kind {kind!r}")


def _expect_header(body, name: str, after_line: int):
    if not body:
        raise ParseError(after_line, 1, f"expected '{name} ...' after the kind line")
    lineno, tokens, columns = body[0]
    if tokens[0] != name:
        raise ParseError(lineno, columns[0], f"expected '{name} ...', got {tokens[0]!r}")
    return body[0]


def _parse_rank_table(body, kind_line: int) -> RankTableDocument:
    lineno, tokens, columns = _expect_header(body, "n", kind_line)
    if len(tokens) != 2:
        raise ParseError(lineno, columns[0], "'n' takes exactly one value")
    n = _parse_int(tokens[1], lineno, columns[1], "ground-set size")
    if n < 1:
        raise ParseError(lineno, columns[1], "ground-set size must be positive")
    seen: dict[tuple[int, ...], int] = {}
    last_line = lineno
    for lineno, tokens, columns in body[1:]:
        last_line = lineno
        if tokens[0] != "rank":
            raise ParseError(lineno, columns[0], f"expected 'rank', got {tokens[0]!r}")
        if len(tokens) != 3:
            raise ParseError(lineno, columns[0], "'rank' lines need a subset and a value")
        subset = _parse_subset(tokens[1], lineno, columns[1])
        for e in subset:
            if not 1 <= e <= n:
                raise ParseError(lineno, columns[1], f"element {e} outside ground set 1..{n}")
        if subset in seen:
            raise ParseError(lineno, columns[1], f"duplicate rank entry for {tokens[1]!r}")
        seen[subset] = _parse_int(tokens[2], lineno, columns[2], "rank value")
    if len(seen) != 1 << n:
        missing = _first_missing_subset(seen, n)
        raise ParseError(
            last_line, 1, f"rank table is not total: missing subset {missing or 'empty'}"
        )
    entries = sorted(seen.items(), key=lambda kv: _subset_mask(kv[0]))
    return RankTableDocument(n, tuple(entries))


def _subset_mask(subset: tuple[int, ...]) -> int:
    mask = 0
    for e in subset:
        mask |= 1 << (e - 1)
    return mask


def _first_missing_subset(seen, n: int) -> str:
    for mask in range(1 << n):
        subset = tuple(e + 1 for e in range(n) if mask >> e & 1)
        if subset not in seen:
            return ",".join(map(str, subset))
    return ""


def _parse_graph(body, kind_line: int) -> GraphDocument:
    lineno, tokens, columns = _expect_header(body, "vertices", kind_line)
    if len(tokens) != 2:
        raise ParseError(lineno, columns[0], "'vertices' takes exactly one count")
    nv = _parse_int(tokens[1], lineno, columns[1], "vertex count")
    if nv < 1:
        raise ParseError(lineno, columns[1], "vertex count must be positive")
    edges = []
    for lineno, tokens, columns in body[1:]:
        if tokens[0] != "edge":
            raise ParseError(lineno, columns[0], f"expected 'edge', got {tokens[0]!r}")
        if len(tokens) != 3:
            raise ParseError(lineno, columns[0], "'edge' lines need two endpoints")
        u = _parse_int(tokens[1], lineno, columns[1], "vertex id")
        v = _parse_int(tokens[2], lineno, columns[2], "vertex id")
        for w, col in ((u, columns[1]), (v, columns[2])):
            if not 1 <= w <= nv:
                raise ParseError(lineno, col, f"vertex {w} outside 1..{nv}")
        edges.append((u, v))
    return GraphDocument(nv, tuple(edges))


def _parse_matroid(body, kind_line: int) -> MatroidDocument:
    lineno, tokens, columns = _expect_header(body, "n", kind_line)
    if len(tokens) != 2:
        raise ParseError(lineno, columns[0], "'n' takes exactly one value")
    n = _parse_int(tokens[1], lineno, columns[1], "ground-set size")
    if n < 1:
        raise ParseError(lineno, columns[1], "ground-set size must be positive")
    bases = set()
    for lineno, tokens, columns in body[1:]:
        if tokens[0] != "base":
            raise ParseError(lineno, columns[0], f"expected 'base', got {tokens[0]!r}")
        if len(tokens) != 2:
            raise ParseError(lineno, columns[0], "'base' lines take one subset")
        subset = _parse_subset(tokens[1], lineno, columns[1])
        for e in subset:
            if not 1 <= e <= n:
                raise ParseError(lineno, columns[1], f"element {e} outside ground set 1..{n}")
        bases.add(subset)
    if not bases:
        raise ParseError(kind_line, 1, "a matroid document needs at least one base")
    return MatroidDocument(n, tuple(sorted(bases)))


def _parse_hypergraph(body, kind_line: int) -> HypergraphDocument:
    lineno, tokens, columns = _expect_header(body, "vertices", kind_line)
    names = tuple(tokens[1:])
    if not names:
        raise ParseError(lineno, columns[0], "'vertices' needs at least one name")
    if len(set(names)) != len(names):
        raise ParseError(lineno, columns[0], "vertex names must be unique")
    order = {name: k for k, name in enumerate(names)}
    hyperedges = []
    for lineno, tokens, columns in body[1:]:
        if tokens[0] != "hedge":
            raise ParseError(lineno, columns[0], f"expected 'hedge', got {tokens[0]!r}")
        members = tokens[1:]
        if not members:
            raise ParseError(lineno, columns[0], "'hedge' lines need at least one vertex")
        for k, name in enumerate(members):
            if name not in order:
                raise ParseError(lineno, columns[k + 1], f"unknown vertex {name!r}")
        if len(set(members)) != len(members):
            raise ParseError(lineno, columns[0], "repeated vertex in hyperedge")
        hyperedges.append(tuple(sorted(members, key=order.get)))
    if not hyperedges:
        raise ParseError(kind_line, 1, "a hypergraph document needs at least one hyperedge")
    return HypergraphDocument(names, tuple(hyperedges))


def _subset_text(subset: tuple[int, ...]) -> str:
    return ",".join(map(str, subset)) if subset else "empty"


def emit_document(doc: InputDocument) -> str:
    """Canonical text form; parsing it back yields an equal document."""
    lines = [f"kind {doc.kind}"]
    if isinstance(doc, RankTableDocument):
        lines.append(f"n {doc.n}")
        for subset, value in doc.entries:
            lines.append(f"rank {_subset_text(subset)} {value}")
    elif isinstance(doc, GraphDocument):
        lines.append(f"vertices {doc.vertex_count}")
        for u, v in doc.edges:
            lines.append(f"edge {u} {v}")
    elif isinstance(doc, MatroidDocument):
        lines.append(f"n {doc.n}")
        for base in doc.bases:
            lines.append(f"base {_subset_text(base)}")
    elif isinstance(doc, HypergraphDocument):
        lines.append("vertices " + " ".join(doc.vertices))
        for edge in doc.hyperedges:
            lines.append("hedge " + " ".join(edge))
    else:
        raise TypeError(f"not an input document: {doc!r}")
    return "\n".join(lines) + "\n"
