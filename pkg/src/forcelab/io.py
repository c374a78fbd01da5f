"""Edge-list and JSON interchange for graphs.

Text form::

    # name: Py(3,2,1)
    # labels: c u1 u2 u3 v1_1_1 ...
    10 15
    0 1
    ...

The first non-comment line is ``n e``, followed by exactly ``e`` lines ``u v``.
Lines starting with ``#`` are comments; the ``name:`` and ``labels:``
directives are optional. Labels may instead come from a sidecar file
``<path>.labels.json`` holding ``{"labels": [...]}``, which takes precedence.
"""

from __future__ import annotations

import json
import sys
from pathlib import Path
from typing import TextIO

from .errors import ForcelabError
from .graph import Graph, VertexLabel


class GraphFormatError(ForcelabError, ValueError):
    """Malformed graph input."""


def sidecar_path(path: str | Path) -> Path:
    return Path(f"{path}.labels.json")


def format_edge_list(g: Graph, directives: bool = True) -> str:
    lines = []
    if directives:
        if g.name:
            lines.append(f"# name: {g.name}")
        if g.labels is not None:
            lines.append("# labels: " + " ".join(str(label) for label in g.labels))
    lines.append(f"{g.n} {g.num_edges}")
    lines += [f"{u} {v}" for u, v in g.edges]
    return "\n".join(lines) + "\n"


def graph_to_json(g: Graph) -> dict:
    return {
        "name": g.name,
        "n": g.n,
        "edges": [list(e) for e in g.edges],
        "labels": None if g.labels is None else [str(label) for label in g.labels],
    }


def graph_from_json(data: dict) -> Graph:
    try:
        n = int(data["n"])
        edges = [(int(u), int(v)) for u, v in data["edges"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise GraphFormatError(f"bad graph document: {exc}") from exc
    labels = data.get("labels")
    parsed = None if labels is None else [VertexLabel.parse(x) for x in labels]
    return Graph(n, edges, parsed, name=data.get("name") or "")


def parse_edge_list(text: str, labels: list[str] | None = None, name: str = "") -> Graph:
    header = None
    edges: list[tuple[int, int]] = []
    comment_labels = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            body = line[1:].strip()
            if body.startswith("labels:"):
                comment_labels = body[len("labels:"):].split()
            elif body.startswith("name:") and not name:
                name = body[len("name:"):].strip()
            continue
        parts = line.split()
        if len(parts) != 2:
            raise GraphFormatError(f"line {lineno}: expected two integers, got {line!r}")
        try:
            a, b = int(parts[0]), int(parts[1])
        except ValueError as exc:
            raise GraphFormatError(f"line {lineno}: {exc}") from exc
        if header is None:
            header = (a, b)
        else:
            edges.append((a, b))
    if header is None:
        raise GraphFormatError("missing 'n e' header")
    n, e = header
    if n < 0 or e < 0:
        raise GraphFormatError("negative counts in header")
    if len(edges) != e:
        raise GraphFormatError(f"header announces {e} edges, found {len(edges)}")
    label_names = labels if labels is not None else comment_labels
    parsed = None if label_names is None else [VertexLabel.parse(x) for x in label_names]
    try:
        return Graph(n, edges, parsed, name=name)
    except ValueError as exc:
        raise GraphFormatError(str(exc)) from exc


def read_graph(path: str, stdin: TextIO | None = None) -> Graph:
    """Read a graph from an edge-list or JSON file; ``-`` reads standard input."""
    if path == "-":
        text = (stdin or sys.stdin).read()
        labels = None
    else:
        try:
            text = Path(path).read_text()
        except OSError as exc:
            raise GraphFormatError(f"cannot read {path}: {exc}") from exc
        side = sidecar_path(path)
        labels = json.loads(side.read_text())["labels"] if side.exists() else None
    if text.lstrip().startswith("{"):
        try:
            return graph_from_json(json.loads(text))
        except json.JSONDecodeError as exc:
            raise GraphFormatError(f"bad JSON: {exc}") from exc
    return parse_edge_list(text, labels)


def write_graph(g: Graph, path: str) -> None:
    """Write the edge list to ``path`` and, when labelled, the sidecar beside it."""
    Path(path).write_text(format_edge_list(g))
    if g.labels is not None:
        sidecar_path(path).write_text(json.dumps({"labels": [str(x) for x in g.labels]}) + "\n")
