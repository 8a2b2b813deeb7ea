"""
Construction of an r-graph with a prescribed imbalance set P ∪ −Q.

With t = gcd(P ∪ Q), p_i = t·f_i and q_j = t·g_j, the vertex set is split
into blocks X and Y. Every vertex of an X block sends t arcs to every vertex
of its partner Y block, so X vertices get imbalance t·|Y| and Y vertices
get −t·|X|.
"""
import logging
import math
from dataclasses import dataclass
from functools import reduce as fold

from .core import RGraph, RGraphError, InvalidParameterError

logger = logging.getLogger(__name__)


class GcdExceedsCapacityError(RGraphError):
    def __init__(self, t, r):
        self.t = t
        self.r = r
        super().__init__(f"gcd t={t} exceeds r={r}")


@dataclass(frozen=True)
class ImbalanceSetSpec:
    p: tuple
    q: tuple
    r: int
    t: int
    f: tuple
    g: tuple


@dataclass(frozen=True)
class Block:
    name: str
    size: int
    first_vertex: int

    @property
    def vertices(self):
        return range(self.first_vertex, self.first_vertex + self.size)


@dataclass(frozen=True)
class BlockLayout:
    blocks: tuple
    total_vertices: int

    def block(self, name):
        return next(b for b in self.blocks if b.name == name)


def _validate_side(values, label):
    values = list(values)
    if not values:
        raise InvalidParameterError(f"{label} must not be empty")
    if any(v < 1 for v in values):
        raise InvalidParameterError(f"{label} must contain positive integers, got {values}")
    if any(a >= b for a, b in zip(values, values[1:])):
        raise InvalidParameterError(f"{label} must be strictly increasing, got {values}")
    return tuple(values)


def build_spec(p, q, r):
    """
    Validate (P, Q, r) and derive t, f and g.

    Raises:
        InvalidParameterError: empty, non-positive or non-increasing input
        GcdExceedsCapacityError: if gcd(P ∪ Q) > r
    """
    p = _validate_side(p, 'P')
    q = _validate_side(q, 'Q')
    if r < 1:
        raise InvalidParameterError(f"Capacity r must be at least 1, got {r}")
    t = fold(math.gcd, p + q)
    if t > r:
        raise GcdExceedsCapacityError(t, r)
    return ImbalanceSetSpec(
        p=p,
        q=q,
        r=r,
        t=t,
        f=tuple(v // t for v in p),
        g=tuple(v // t for v in q),
    )


def block_layout(spec):
    """
    Blocks in vertex-id order X_1^1..X_m^1, X_1^2..X_1^n, Y_1^1..Y_m^1,
    Y_1^2..Y_1^n, with the (X, Y) partner pairs.
    """
    m, n = len(spec.f), len(spec.g)
    sizes = []
    for i in range(1, m + 1):
        sizes.append((f"X_{i}^1", spec.g[min(i, n) - 1]))
    for i in range(2, n + 1):
        sizes.append((f"X_1^{i}", spec.g[i - 1]))
    for i in range(1, m + 1):
        sizes.append((f"Y_{i}^1", spec.f[i - 1]))
    for i in range(2, n + 1):
        sizes.append((f"Y_1^{i}", spec.f[0]))

    blocks = []
    first = 0
    for name, size in sizes:
        blocks.append(Block(name=name, size=size, first_vertex=first))
        first += size

    partners = [(f"X_{i}^1", f"Y_{i}^1") for i in range(1, m + 1)]
    partners += [(f"X_1^{i}", f"Y_1^{i}") for i in range(2, n + 1)]
    return BlockLayout(blocks=tuple(blocks), total_vertices=first), partners


def construct_from_imbalance_set(p, q, r):
    """
    Build an r-graph whose set of distinct imbalances is P ∪ {−q : q ∈ Q}.

    Returns:
        (RGraph, BlockLayout)
    """
    spec = build_spec(p, q, r)
    layout, partners = block_layout(spec)

    mult = {}
    for x_name, y_name in partners:
        for x in layout.block(x_name).vertices:
            for y in layout.block(y_name).vertices:
                mult[(x, y)] = spec.t

    graph = RGraph.from_mult(layout.total_vertices, r, mult)
    logger.info(
        f"Built imbalance-set graph for P={list(spec.p)}, Q={list(spec.q)}, r={r}: "
        f"{layout.total_vertices} vertices, t={spec.t}"
    )
    return graph, layout


def imbalance_set_of(g):
    return set(g.imbalances)
