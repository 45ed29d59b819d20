"""Text formats for graphs and colorings.

Graph files::

    # optional comments
    p um <n> <m>
    e <u> <v>            one line per edge, 0-based ids
    l <v> <key>=<value>  optional vertex labels

Coloring files are JSON objects with ``n``, ``k``, ``colors`` (1-based) and
an optional ``meta`` object.
"""

from __future__ import annotations

import json
from typing import Optional, Union

from .coloring import Coloring
from .graph import Graph


class FormatError(ValueError):
    kind = "format"

    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        where = f"line {line}: " if line is not None else ""
        super().__init__(where + message)


class HeaderError(FormatError):
    kind = "header"


class RangeError(FormatError):
    kind = "range"


class DuplicateEdgeError(FormatError):
    kind = "duplicate"


class EdgeCountError(FormatError):
    kind = "edge-count"


def _text(data: Union[str, bytes]) -> str:
    return data.decode("utf-8") if isinstance(data, bytes) else data


def parse_graph(data: Union[str, bytes]) -> Graph:
    n: Optional[int] = None
    declared = 0
    header_line = 0
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    labels: dict[int, dict[str, str]] = {}
    for lineno, raw in enumerate(_text(data).splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        tag = parts[0]
        if tag == "p":
            if n is not None:
                raise HeaderError("second header line", lineno)
            if len(parts) != 4 or parts[1] != "um":
                raise HeaderError("expected 'p um <n> <m>'", lineno)
            try:
                n, declared = int(parts[2]), int(parts[3])
            except ValueError:
                raise HeaderError("vertex and edge counts must be integers", lineno) from None
            if n < 0 or declared < 0:
                raise HeaderError("counts must be non-negative", lineno)
            header_line = lineno
            continue
        if n is None:
            raise HeaderError("data before the 'p um' header", lineno)
        if tag == "e":
            if len(parts) != 3:
                raise FormatError("expected 'e <u> <v>'", lineno)
            try:
                u, v = int(parts[1]), int(parts[2])
            except ValueError:
                raise FormatError("edge endpoints must be integers", lineno) from None
            for w in (u, v):
                if not 0 <= w < n:
                    raise RangeError(f"vertex {w} outside 0..{n - 1}", lineno)
            if u == v:
                raise FormatError(f"self-loop at vertex {u}", lineno)
            key = (min(u, v), max(u, v))
            if key in seen:
                raise DuplicateEdgeError(f"edge {key} listed twice", lineno)
            seen.add(key)
            edges.append(key)
        elif tag == "l":
            if len(parts) != 3 or "=" not in parts[2]:
                raise FormatError("expected 'l <v> <key>=<value>'", lineno)
            try:
                v = int(parts[1])
            except ValueError:
                raise FormatError("label vertex must be an integer", lineno) from None
            if not 0 <= v < n:
                raise RangeError(f"vertex {v} outside 0..{n - 1}", lineno)
            key, _, value = parts[2].partition("=")
            labels.setdefault(v, {})[key] = value
        else:
            raise FormatError(f"unknown line type {tag!r}", lineno)
    if n is None:
        raise HeaderError("missing 'p um <n> <m>' header")
    if len(edges) != declared:
        raise EdgeCountError(f"header declares {declared} edges, found {len(edges)}", header_line)
    label_list = [labels.get(v, {}) for v in range(n)] if labels else None
    return Graph.from_edges(n, edges, label_list)


def serialize_graph(G: Graph, with_labels: bool = True) -> str:
    out = [f"p um {G.n} {len(G.edges)}"]
    out.extend(f"e {u} {v}" for u, v in sorted(G.edges))
    if with_labels and G.labels is not None:
        for v, lab in enumerate(G.labels):
            for key in sorted(lab or {}):
                out.append(f"l {v} {key}={lab[key]}")
    return "\n".join(out) + "\n"


def parse_coloring(data: Union[str, bytes]) -> tuple[Coloring, dict]:
    try:
        doc = json.loads(_text(data))
    except json.JSONDecodeError as exc:
        raise FormatError(f"invalid JSON: {exc.msg}", exc.lineno) from None
    if not isinstance(doc, dict) or "colors" not in doc:
        raise FormatError("coloring document needs a 'colors' array")
    colors = doc["colors"]
    if not isinstance(colors, list) or not all(isinstance(c, int) and c >= 1 for c in colors):
        raise FormatError("'colors' must be a list of positive integers")
    if "n" in doc and doc["n"] != len(colors):
        raise RangeError(f"'n' is {doc['n']} but {len(colors)} colors are listed")
    if "k" in doc and colors and doc["k"] != max(colors):
        raise RangeError(f"'k' is {doc['k']} but the largest color is {max(colors)}")
    return Coloring(tuple(colors)), dict(doc.get("meta", {}))


def serialize_coloring(C: Coloring, meta: Optional[dict] = None) -> str:
    doc: dict = {"n": C.n, "k": C.k, "colors": list(C.colors)}
    if meta:
        doc["meta"] = meta
    return json.dumps(doc, indent=2, sort_keys=False) + "\n"
