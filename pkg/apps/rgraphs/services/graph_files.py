"""
Plain-text graph files and DOT export.

File format (vertex ids are 0-based):

    # comment lines start with '#'
    n r
    u v m
    ...

Repeated (u, v) lines add up. Serialization writes one line per nonzero
multiplicity, sorted by (u, v), so parse(serialize(g)) == g and canonical
files survive serialize(parse(text)) unchanged.
"""
import logging
from pathlib import Path

from .core import RGraph, RGraphError

logger = logging.getLogger(__name__)


class GraphFileError(RGraphError):
    def __init__(self, line_number, message):
        self.line_number = line_number
        super().__init__(f"line {line_number}: {message}")


def _integers(text, line_number, expected):
    fields = text.split()
    if len(fields) != expected:
        raise GraphFileError(line_number, f"expected {expected} integers, got {text!r}")
    try:
        return [int(x) for x in fields]
    except ValueError:
        raise GraphFileError(line_number, f"expected {expected} integers, got {text!r}")


def parse_graph(text):
    """
    Parse graph-file text.

    Raises:
        GraphFileError: naming the offending line (bad header, loop, vertex
            out of range, non-positive multiplicity, capacity exceeded)
    """
    header = None
    mult = {}
    for line_number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith('#'):
            continue
        if header is None:
            n, r = _integers(line, line_number, 2)
            if n < 1 or r < 1:
                raise GraphFileError(line_number, f"header needs positive n and r, got {line!r}")
            header = (n, r)
            continue

        n, r = header
        u, v, m = _integers(line, line_number, 3)
        if u == v:
            raise GraphFileError(line_number, f"loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFileError(line_number, f"arc ({u}, {v}) outside vertex range 0..{n - 1}")
        if m < 1:
            raise GraphFileError(line_number, f"multiplicity must be at least 1, got {m}")
        mult[(u, v)] = mult.get((u, v), 0) + m
        total = mult[(u, v)] + mult.get((v, u), 0)
        if total > r:
            raise GraphFileError(line_number, f"pair ({u}, {v}) carries {total} arcs, capacity is r={r}")

    if header is None:
        raise GraphFileError(0, "missing 'n r' header")
    n, r = header
    return RGraph.from_mult(n, r, mult)


def serialize_graph(g):
    lines = [f"{g.n} {g.r}"]
    lines.extend(f"{u} {v} {m}" for u, v, m in g.arcs)
    return '\n'.join(lines) + '\n'


def read_graph(path):
    try:
        text = Path(path).read_text(encoding='utf-8')
    except UnicodeDecodeError as e:
        raise GraphFileError(0, f"not valid UTF-8 at byte {e.start}")
    return parse_graph(text)


def write_graph(g, path):
    Path(path).write_text(serialize_graph(g), encoding='utf-8')
    logger.info(f"Wrote {g.n}-vertex graph with {len(g.arcs)} arc lines to {path}")


def render_dot(g, name='G'):
    """One labelled edge per ordered pair with nonzero multiplicity."""
    lines = [f"digraph {name} {{"]
    lines.extend(f"  v{v};" for v in g.vertices)
    lines.extend(f'  v{u} -> v{v} [label="×{m}"];' for u, v, m in g.arcs)
    lines.append('}')
    return '\n'.join(lines) + '\n'
