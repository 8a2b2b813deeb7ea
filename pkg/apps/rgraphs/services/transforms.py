"""
Imbalance-preserving moves on r-graphs.

Three moves, each with a forward (arc-reducing) and an inverse
(arc-increasing) direction:

    triangle-cancel  u→v, v→w, w→u      <->  nothing             (3 arcs)
    path-shortcut    u→v, v→w           <->  u→w                 (1 arc)
    double-cancel    u→v, v→u           <->  nothing             (2 arcs)

Preconditions are stated on multiplicities, so a move applies inside any
r-graph, not only inside graphs whose pairs carry at most one arc.
"""
import logging
from dataclasses import dataclass
from itertools import combinations, permutations

from django.db import models

from .core import RGraph, RGraphError, arc_count

logger = logging.getLogger(__name__)


class MoveKind(models.TextChoices):
    DOUBLE_CANCEL = 'double-cancel', 'Double cancel'
    TRIANGLE_CANCEL = 'triangle-cancel', 'Triangle cancel'
    PATH_SHORTCUT = 'path-shortcut', 'Path shortcut'


class Direction(models.TextChoices):
    FORWARD = 'forward', 'Forward'
    INVERSE = 'inverse', 'Inverse'


# Order in which reduce() tries the kinds.
REDUCTION_ORDER = (MoveKind.DOUBLE_CANCEL, MoveKind.TRIANGLE_CANCEL, MoveKind.PATH_SHORTCUT)

ARCS_REMOVED = {
    MoveKind.TRIANGLE_CANCEL: 3,
    MoveKind.PATH_SHORTCUT: 1,
    MoveKind.DOUBLE_CANCEL: 2,
}


class MoveNotApplicableError(RGraphError):
    def __init__(self, move, reason):
        self.move = move
        self.reason = reason
        super().__init__(f"{move} is not applicable: {reason}")


@dataclass(frozen=True)
class Move:
    kind: str
    vertices: tuple
    direction: str = Direction.FORWARD

    def inverse(self):
        flipped = Direction.INVERSE if self.direction == Direction.FORWARD else Direction.FORWARD
        return Move(self.kind, self.vertices, flipped)

    @property
    def arc_delta(self):
        removed = ARCS_REMOVED[self.kind]
        return -removed if self.direction == Direction.FORWARD else removed

    def __str__(self):
        return f"{self.kind} {self.direction} {self.vertices}"


def _forward_deltas(kind, vertices):
    if kind == MoveKind.DOUBLE_CANCEL:
        u, v = vertices
        return {(u, v): -1, (v, u): -1}
    u, v, w = vertices
    if kind == MoveKind.TRIANGLE_CANCEL:
        return {(u, v): -1, (v, w): -1, (w, u): -1}
    return {(u, v): -1, (v, w): -1, (u, w): 1}


def failed_precondition(g, move):
    """Return the first precondition `move` violates on `g`, or None."""
    expected = 2 if move.kind == MoveKind.DOUBLE_CANCEL else 3
    vertices = move.vertices
    if len(vertices) != expected or len(set(vertices)) != expected:
        return f"{move.kind} needs {expected} distinct vertices"
    if any(not 0 <= x < g.n for x in vertices):
        return f"vertices {vertices} outside range 0..{g.n - 1}"

    a = g.multiplicity

    def room(x, y):
        return g.pair_total(x, y) < g.r

    forward = move.direction == Direction.FORWARD

    if move.kind == MoveKind.DOUBLE_CANCEL:
        u, v = vertices
        if forward:
            if not (a(u, v) >= 1 and a(v, u) >= 1):
                return f"no double on pair ({u}, {v})"
        elif g.pair_total(u, v) > g.r - 2:
            return f"pair ({u}, {v}) has no room for two more arcs"
        return None

    u, v, w = vertices
    if move.kind == MoveKind.TRIANGLE_CANCEL:
        if forward:
            if not (a(u, v) >= 1 and a(v, w) >= 1 and a(w, u) >= 1):
                return f"no directed triangle {u}->{v}->{w}->{u}"
        else:
            for x, y in ((u, v), (v, w), (w, u)):
                if not room(x, y):
                    return f"pair ({x}, {y}) is saturated"
        return None

    if forward:
        if not (a(u, v) >= 1 and a(v, w) >= 1):
            return f"no path {u}->{v}->{w}"
        if a(w, u) != 0:
            return f"arc {w}->{u} present"
        if not room(u, w):
            return f"pair ({u}, {w}) is saturated"
    else:
        if a(u, w) < 1:
            return f"no arc {u}->{w}"
        if a(w, u) != 0:
            return f"arc {w}->{u} present"
        for x, y in ((u, v), (v, w)):
            if not room(x, y):
                return f"pair ({x}, {y}) is saturated"
    return None


def is_applicable(g, move):
    return failed_precondition(g, move) is None


def _candidates(g, kind):
    if kind == MoveKind.DOUBLE_CANCEL:
        yield from combinations(g.vertices, 2)
    elif kind == MoveKind.TRIANGLE_CANCEL:
        # One rotation per triangle: the smallest vertex comes first.
        for u, v, w in permutations(g.vertices, 3):
            if u < v and u < w:
                yield (u, v, w)
    else:
        yield from permutations(g.vertices, 3)


def iter_moves(g, kinds=None, direction=Direction.FORWARD):
    kinds = [k for k in REDUCTION_ORDER if kinds is None or k in kinds]
    for kind in kinds:
        for vertices in _candidates(g, kind):
            move = Move(kind, vertices, direction)
            if is_applicable(g, move):
                yield move


def find_moves(g, kinds=None, direction=Direction.FORWARD):
    """
    Every applicable move of the given kinds and direction, in
    lexicographic vertex order.
    """
    order = {kind: index for index, kind in enumerate(REDUCTION_ORDER)}
    return sorted(
        iter_moves(g, kinds, direction),
        key=lambda m: (m.vertices, order[m.kind]),
    )


def apply_move(g, move):
    """
    Apply a move, returning a new graph with the same vertex imbalances.

    Raises:
        MoveNotApplicableError: naming the failed precondition
    """
    reason = failed_precondition(g, move)
    if reason is not None:
        raise MoveNotApplicableError(move, reason)

    sign = 1 if move.direction == Direction.FORWARD else -1
    mult = dict(g.mult)
    for pair, delta in _forward_deltas(move.kind, move.vertices).items():
        mult[pair] = mult.get(pair, 0) + sign * delta
    return RGraph.from_mult(g.n, g.r, mult)


def reduce_with_log(g):
    """
    Apply forward moves until none applies: doubles first, then triangles,
    then shortcuts, rescanning from the start after every move.

    Returns:
        (reduced graph, list of moves applied in order)
    """
    log = []
    while True:
        move = None
        for kind in REDUCTION_ORDER:
            move = next(iter_moves(g, {kind}, Direction.FORWARD), None)
            if move is not None:
                break
        if move is None:
            break
        g = apply_move(g, move)
        log.append(move)
        logger.debug(f"Applied {move}, {arc_count(g)} arcs left")
    return g, log


def reduce(g):
    reduced, _log = reduce_with_log(g)
    return reduced
