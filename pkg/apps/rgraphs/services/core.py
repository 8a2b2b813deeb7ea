"""
The r-graph data model.

An r-graph is a loopless directed multigraph on vertices 0..n-1 in which
every pair of distinct vertices carries at most r arcs in total. Graphs
are immutable: every operation returns a new RGraph.
"""
import logging
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Mapping

from django.db import models

logger = logging.getLogger(__name__)


class RGraphError(Exception):
    """Base class for every domain error raised by the r-graph services."""
    pass


class InvalidParameterError(RGraphError):
    pass


class InvalidOrderError(RGraphError):
    pass


class LoopError(RGraphError):
    pass


class CapacityExceededError(RGraphError):
    def __init__(self, u, v, total, r):
        self.pair = (u, v)
        self.total = total
        self.r = r
        super().__init__(f"Pair ({u}, {v}) would carry {total} arcs, capacity is r={r}")


class SortOrder(models.TextChoices):
    NON_DECREASING = 'non-decreasing', 'Non-decreasing'
    NON_INCREASING = 'non-increasing', 'Non-increasing'


class TripleKind(models.TextChoices):
    TRANSITIVE = 'transitive', 'Transitive'
    INTRANSITIVE = 'intransitive', 'Intransitive'


# The five transitive forms, written u(f-g)v(f-g)w(f-g)u.
TRANSITIVE_TOURNAMENT = 'u(1-0)v(1-0)w(0-1)u'
COMMON_HEAD = 'u(1-0)v(0-1)w(0-0)u'
COMMON_TAIL = 'u(1-0)v(0-0)w(0-1)u'
SINGLE_ARC = 'u(1-0)v(0-0)w(0-0)u'
EMPTY_TRIPLE = 'u(0-0)v(0-0)w(0-0)u'

TRANSITIVE_PATTERNS = (
    TRANSITIVE_TOURNAMENT,
    COMMON_HEAD,
    COMMON_TAIL,
    SINGLE_ARC,
    EMPTY_TRIPLE,
)

CYCLIC_TRIPLE = 'u(1-0)v(1-0)w(1-0)u'
OPEN_PATH = 'u(1-0)v(1-0)w(0-0)u'
DOUBLE_PRESENT = 'double-present'


@dataclass(frozen=True)
class RGraph:
    """
    Sparse r-graph. `arcs` holds one (u, v, multiplicity) entry per ordered
    pair with a nonzero multiplicity, sorted by (u, v), so equal graphs have
    equal fields and equal hashes.
    """
    n: int
    r: int
    arcs: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, 'arcs', tuple(tuple(arc) for arc in self.arcs))
        if self.n < 1 or self.r < 1:
            raise InvalidParameterError(f"n and r must be positive, got n={self.n}, r={self.r}")
        previous = None
        for u, v, m in self.arcs:
            if u == v:
                raise LoopError(f"Loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise InvalidParameterError(f"Arc ({u}, {v}) outside vertex range 0..{self.n - 1}")
            if m < 1:
                raise InvalidParameterError(f"Stored multiplicity of ({u}, {v}) must be positive")
            if previous is not None and (u, v) <= previous:
                raise InvalidParameterError("Arcs must be sorted by (u, v) without repetition")
            previous = (u, v)
        for (u, v), m in self.mult.items():
            if u < v:
                total = m + self.mult.get((v, u), 0)
                if total > self.r:
                    raise CapacityExceededError(u, v, total, self.r)
            elif (v, u) not in self.mult and m > self.r:
                raise CapacityExceededError(v, u, m, self.r)

    @classmethod
    def from_mult(cls, n, r, mult: Mapping):
        """Build a graph from a {(u, v): multiplicity} mapping, dropping zeros."""
        arcs = tuple(sorted((u, v, m) for (u, v), m in mult.items() if m))
        return cls(n=n, r=r, arcs=arcs)

    @cached_property
    def mult(self):
        return {(u, v): m for u, v, m in self.arcs}

    def multiplicity(self, u, v):
        return self.mult.get((u, v), 0)

    def pair_total(self, u, v):
        return self.multiplicity(u, v) + self.multiplicity(v, u)

    @cached_property
    def imbalances(self):
        """Per-vertex outdegree minus indegree, indexed by vertex id."""
        values = [0] * self.n
        for u, v, m in self.arcs:
            values[u] += m
            values[v] -= m
        return tuple(values)

    @property
    def vertices(self):
        return range(self.n)


@dataclass(frozen=True)
class ImbalanceSequence:
    values: tuple
    order: str = SortOrder.NON_DECREASING

    def __post_init__(self):
        object.__setattr__(self, 'values', tuple(self.values))
        if not is_sorted(self.values, self.order):
            raise InvalidOrderError(f"Sequence {list(self.values)} is not {self.order}")

    def __iter__(self):
        return iter(self.values)

    def __len__(self):
        return len(self.values)

    def as_list(self):
        return list(self.values)


@dataclass(frozen=True)
class TripleClass:
    kind: str
    pattern: str
    # The triple's vertices in the roles (u, v, w) of `pattern`.
    roles: tuple = field(default=())

    @property
    def is_transitive(self):
        return self.kind == TripleKind.TRANSITIVE


def is_sorted(values, order):
    if order == SortOrder.NON_DECREASING:
        return all(a <= b for a, b in zip(values, values[1:]))
    if order == SortOrder.NON_INCREASING:
        return all(a >= b for a, b in zip(values, values[1:]))
    raise InvalidParameterError(f"Unknown sort order: {order}")


def sort_values(values, order):
    return sorted(values, reverse=(order == SortOrder.NON_INCREASING))


def new_rgraph(n, r):
    """Empty r-graph on n vertices."""
    if n < 1 or r < 1:
        raise InvalidParameterError(f"n and r must be positive, got n={n}, r={r}")
    return RGraph(n=n, r=r)


def _check_vertex(g, v):
    if not 0 <= v < g.n:
        raise InvalidParameterError(f"Vertex {v} outside range 0..{g.n - 1}")


def add_arcs(g, u, v, m=1):
    """
    Add m arcs directed from u to v.

    Raises:
        LoopError: if u == v
        CapacityExceededError: if the pair {u, v} would exceed r arcs
    """
    if u == v:
        raise LoopError(f"Loop at vertex {u}")
    _check_vertex(g, u)
    _check_vertex(g, v)
    if m < 1:
        raise InvalidParameterError(f"Multiplicity must be at least 1, got {m}")
    total = g.pair_total(u, v) + m
    if total > g.r:
        raise CapacityExceededError(u, v, total, g.r)
    mult = dict(g.mult)
    mult[(u, v)] = mult.get((u, v), 0) + m
    return RGraph.from_mult(g.n, g.r, mult)


def imbalance_sequence(g, order=SortOrder.NON_DECREASING):
    return ImbalanceSequence(sort_values(g.imbalances, order), order)


def converse(g):
    """Reverse the orientation of every arc."""
    return RGraph.from_mult(g.n, g.r, {(v, u): m for (u, v), m in g.mult.items()})


def converse_sequence(values):
    """Imbalance sequence of the converse: negate and reverse."""
    return [-b for b in reversed(values)]


def arc_count(g):
    return sum(m for _u, _v, m in g.arcs)


def pair_notation(g, u, v):
    return f"{u}({g.multiplicity(u, v)}-{g.multiplicity(v, u)}){v}"


def find_doubles(g):
    """Pairs u < v carrying arcs in both directions."""
    return [
        (u, v) for u, v in combinations(g.vertices, 2)
        if g.multiplicity(u, v) and g.multiplicity(v, u)
    ]


def classify_oriented_triple(g, u, v, w):
    """
    Classify the subdigraph induced by {u, v, w} by the sign pattern of its
    three pairs. Triples containing a double are reported as intransitive
    with the pattern 'double-present'.
    """
    if len({u, v, w}) != 3:
        raise InvalidParameterError(f"Triple vertices must be distinct, got ({u}, {v}, {w})")
    for x in (u, v, w):
        _check_vertex(g, x)

    triple = (u, v, w)
    oriented = []
    for a, b in ((u, v), (v, w), (w, u)):
        forward, backward = g.multiplicity(a, b), g.multiplicity(b, a)
        if forward and backward:
            return TripleClass(TripleKind.INTRANSITIVE, DOUBLE_PRESENT, triple)
        if forward:
            oriented.append((a, b))
        elif backward:
            oriented.append((b, a))

    if not oriented:
        return TripleClass(TripleKind.TRANSITIVE, EMPTY_TRIPLE, triple)

    if len(oriented) == 1:
        (a, b), = oriented
        rest = next(x for x in triple if x not in (a, b))
        return TripleClass(TripleKind.TRANSITIVE, SINGLE_ARC, (a, b, rest))

    out_degree = {x: sum(1 for a, _b in oriented if a == x) for x in triple}
    in_degree = {x: sum(1 for _a, b in oriented if b == x) for x in triple}

    if len(oriented) == 2:
        (a1, b1), (a2, b2) = oriented
        if a1 == a2:
            return TripleClass(TripleKind.TRANSITIVE, COMMON_TAIL, (a1, b1, b2))
        if b1 == b2:
            return TripleClass(TripleKind.TRANSITIVE, COMMON_HEAD, (a1, b1, a2))
        middle = next(x for x in triple if out_degree[x] == 1 and in_degree[x] == 1)
        head = next(a for a, b in oriented if b == middle)
        tail = next(b for a, b in oriented if a == middle)
        return TripleClass(TripleKind.INTRANSITIVE, OPEN_PATH, (head, middle, tail))

    if all(out_degree[x] == 1 for x in triple):
        successor = dict(oriented)
        return TripleClass(
            TripleKind.INTRANSITIVE,
            CYCLIC_TRIPLE,
            (u, successor[u], successor[successor[u]]),
        )
    source = next(x for x in triple if out_degree[x] == 2)
    sink = next(x for x in triple if in_degree[x] == 2)
    middle = next(x for x in triple if x not in (source, sink))
    return TripleClass(TripleKind.TRANSITIVE, TRANSITIVE_TOURNAMENT, (source, middle, sink))


def intransitive_triples(g):
    return [
        c for c in (classify_oriented_triple(g, u, v, w) for u, v, w in combinations(g.vertices, 3))
        if not c.is_transitive
    ]


def is_transitive(g):
    """True when no pair carries a double and every oriented triple is transitive."""
    if find_doubles(g):
        return False
    return not intransitive_triples(g)
