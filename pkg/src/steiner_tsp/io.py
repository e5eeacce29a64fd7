"""Edge-list and cycle text formats.

Edge list::

    # comments start with '#', anywhere on a line
    n m [tree]
    u v
    ...

with ``m`` lines of 0-based vertex pairs. The optional ``tree`` token marks a
spanning-tree file. A cycle is one line of space-separated vertices in cyclic
order.
"""

from pathlib import Path

from .errors import GraphInputError, ParseError
from .graph import from_edge_list


def _content_lines(text):
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line


def parse_edge_list(text):
    """Parse edge-list text into ``(n, edges, is_tree)``."""
    lines = _content_lines(text)
    try:
        lineno, header = next(lines)
    except StopIteration:
        raise ParseError("empty edge list") from None
    parts = header.split()
    is_tree = False
    if len(parts) == 3 and parts[2].lower() == "tree":
        is_tree = True
        parts = parts[:2]
    if len(parts) != 2:
        raise ParseError(f"line {lineno}: expected header 'n m [tree]', got {header!r}")
    try:
        n, m = int(parts[0]), int(parts[1])
    except ValueError:
        raise ParseError(f"line {lineno}: non-integer header {header!r}") from None
    if n < 0 or m < 0:
        raise ParseError(f"line {lineno}: negative counts in header")
    edges = []
    for lineno, line in lines:
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"line {lineno}: expected 'u v', got {line!r}")
        try:
            edges.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise ParseError(f"line {lineno}: non-integer vertex in {line!r}") from None
    if len(edges) != m:
        raise ParseError(f"header announces {m} edges, found {len(edges)}")
    return n, edges, is_tree


def read_graph(path):
    n, edges, _ = parse_edge_list(Path(path).read_text())
    try:
        return from_edge_list(n, edges)
    except GraphInputError as exc:
        raise ParseError(f"{path}: {exc}") from exc


def read_tree_edges(path):
    """Edges of a tree file. The ``tree`` header flag is optional on input."""
    n, edges, _ = parse_edge_list(Path(path).read_text())
    return n, edges


def format_edge_list(n, edges, *, tree=False, comment=None):
    lines = []
    if comment:
        lines.extend(f"# {c}" for c in comment.splitlines())
    lines.append(f"{n} {len(edges)}" + (" tree" if tree else ""))
    lines.extend(f"{u} {v}" for u, v in edges)
    return "\n".join(lines) + "\n"


def write_graph(path, g, comment=None):
    Path(path).write_text(format_edge_list(g.n, g.edges(), comment=comment))


def write_tree(path, tree, comment=None):
    Path(path).write_text(
        format_edge_list(tree.n, sorted(tree.edges), tree=True, comment=comment)
    )


def format_cycle(sequence):
    return " ".join(str(v) for v in sequence)


def parse_cycle(text):
    for lineno, line in _content_lines(text):
        try:
            return tuple(int(tok) for tok in line.split())
        except ValueError:
            raise ParseError(f"line {lineno}: non-integer vertex in cycle") from None
    raise ParseError("empty cycle")
