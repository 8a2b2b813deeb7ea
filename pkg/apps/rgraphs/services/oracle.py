"""
Exhaustive ground truth for small r-graphs.

Every unordered pair {u, v} independently takes one of the
(r+1)(r+2)/2 states (a_uv, a_vu) with a_uv + a_vu <= r; graphs are streamed
in odometer order over those per-pair states, never materialized as a list.
"""
import logging
import multiprocessing as mp
import random
from dataclasses import dataclass
from itertools import combinations, product
from typing import Optional

import networkx as nx
from django.conf import settings

from .checks import iter_feasible_sequences
from .core import (
    RGraph,
    RGraphError,
    ImbalanceSequence,
    InvalidOrderError,
    InvalidParameterError,
    SortOrder,
    arc_count,
    is_sorted,
)
from .transforms import Direction, apply_move, iter_moves

logger = logging.getLogger(__name__)

DEFAULT_HARD_CAP = 10 ** 7


class EnumerationTooLargeError(RGraphError):
    def __init__(self, count, hard_cap):
        self.count = count
        self.hard_cap = hard_cap
        super().__init__(f"Enumeration of {count} graphs exceeds the hard cap of {hard_cap}")


class NotRealizableError(RGraphError):
    pass


def pair_states(r):
    """Every (a_uv, a_vu) with a_uv + a_vu <= r, in lexicographic order."""
    return [(a, b) for a in range(r + 1) for b in range(r + 1 - a)]


@dataclass(frozen=True)
class EnumerationLimits:
    n: int
    r: int
    hard_cap: int = DEFAULT_HARD_CAP

    @classmethod
    def from_settings(cls, n, r):
        return cls(n=n, r=r, hard_cap=getattr(settings, 'RGRAPH_ENUMERATION_HARD_CAP', DEFAULT_HARD_CAP))

    @property
    def pair_count(self):
        return self.n * (self.n - 1) // 2

    @property
    def graph_count(self):
        return ((self.r + 1) * (self.r + 2) // 2) ** self.pair_count

    def validate(self):
        if self.n < 1 or self.r < 1:
            raise InvalidParameterError(f"n and r must be positive, got n={self.n}, r={self.r}")
        count = self.graph_count
        if count > self.hard_cap:
            logger.warning(f"Refusing to enumerate {count} graphs (n={self.n}, r={self.r}, cap={self.hard_cap})")
            raise EnumerationTooLargeError(count, self.hard_cap)


def enumerate_rgraphs(limits, first_state=None):
    """
    Yield every r-graph on `limits.n` labelled vertices exactly once.

    Args:
        limits: EnumerationLimits
        first_state: optional (a_01, a_10) fixing the first pair, used to
            partition the enumeration across workers
    """
    limits.validate()
    pairs = list(combinations(range(limits.n), 2))
    states = pair_states(limits.r)
    per_pair = [states] * len(pairs)
    if first_state is not None and pairs:
        per_pair[0] = [tuple(first_state)]

    for assignment in product(*per_pair):
        mult = {}
        for (u, v), (forward, backward) in zip(pairs, assignment):
            if forward:
                mult[(u, v)] = forward
            if backward:
                mult[(v, u)] = backward
        yield RGraph.from_mult(limits.n, limits.r, mult)


def _sorted_sequences(limits, first_state=None):
    return {tuple(sorted(g.imbalances)) for g in enumerate_rgraphs(limits, first_state)}


def _worker_count(workers):
    if workers is None:
        workers = getattr(settings, 'RGRAPH_ORACLE_WORKERS', 1)
    return max(1, int(workers))


def enumerate_imbalance_sequences(limits, workers=None):
    """
    Distinct non-decreasing imbalance sequences over every enumerated graph.

    With more than one worker the enumeration is partitioned by the state of
    the first vertex pair and the partial sets are merged.
    """
    limits.validate()
    workers = _worker_count(workers)
    if workers > 1 and limits.pair_count > 0:
        arguments = [(limits, state) for state in pair_states(limits.r)]
        with mp.Pool(workers) as pool:
            partial = pool.starmap(_sorted_sequences, arguments)
        found = set().union(*partial)
    else:
        found = _sorted_sequences(limits)
    logger.info(f"Enumerated {len(found)} distinct sequences for n={limits.n}, r={limits.r}")
    return {ImbalanceSequence(values, SortOrder.NON_DECREASING) for values in found}


def _target(values, limits):
    values = tuple(values)
    if len(values) != limits.n:
        raise InvalidParameterError(f"Sequence length {len(values)} does not match n={limits.n}")
    return values


def min_arcs_brute(values, limits):
    """
    Minimum arc count over every enumerated realization of a non-decreasing
    sequence, with every realization attaining it.

    Raises:
        NotRealizableError: if no enumerated graph realizes the sequence
    """
    target = _target(values, limits)
    if not is_sorted(target, SortOrder.NON_DECREASING):
        raise InvalidOrderError(f"Sequence {list(target)} is not non-decreasing")

    best = None
    witnesses = []
    for g in enumerate_rgraphs(limits):
        if tuple(sorted(g.imbalances)) != target:
            continue
        count = arc_count(g)
        if best is None or count < best:
            best = count
            witnesses = [g]
        elif count == best:
            witnesses.append(g)
    if best is None:
        raise NotRealizableError(f"No r-graph with n={limits.n}, r={limits.r} realizes {list(target)}")
    return best, witnesses


def realizations(values, limits):
    """Enumerated graphs whose vertex i has imbalance values[i]."""
    target = _target(values, limits)
    return [g for g in enumerate_rgraphs(limits) if g.imbalances == target]


def move_graph(values, limits):
    """
    Undirected graph whose nodes are the realizations of `values` (vertex i
    carrying values[i]) and whose edges are single forward or inverse moves.
    """
    nodes = realizations(values, limits)
    if not nodes:
        raise NotRealizableError(f"No r-graph with n={limits.n}, r={limits.r} realizes {list(values)}")
    graph = nx.Graph()
    graph.add_nodes_from(nodes)
    for g in nodes:
        for direction in (Direction.FORWARD, Direction.INVERSE):
            for move in iter_moves(g, None, direction):
                graph.add_edge(g, apply_move(g, move))
    return graph


def move_graph_connected(values, limits):
    graph = move_graph(values, limits)
    connected = nx.is_connected(graph)
    logger.info(
        f"Move graph of {list(values)} (n={limits.n}, r={limits.r}): "
        f"{graph.number_of_nodes()} realizations, connected={connected}"
    )
    return connected


@dataclass(frozen=True)
class Counterexample:
    values: tuple
    realizable: bool
    passes_check: bool


def verify_equivalence(limits, workers=None) -> Optional[Counterexample]:
    """
    Compare the enumerated sequences with those passing the feasibility
    check; return the smallest sequence on which they disagree, or None.
    """
    realized = {s.values for s in enumerate_imbalance_sequences(limits, workers)}
    feasible = {tuple(s) for s in iter_feasible_sequences(limits.n, limits.r)}
    disagreements = sorted(realized ^ feasible)
    if not disagreements:
        return None
    values = disagreements[0]
    logger.warning(f"Oracle and check disagree on {list(values)} for n={limits.n}, r={limits.r}")
    return Counterexample(values=values, realizable=values in realized, passes_check=values in feasible)


def random_rgraph(n, r, rng=None):
    """Each pair independently uniform over its (r+1)(r+2)/2 states."""
    if rng is None:
        rng = random.Random(getattr(settings, 'RGRAPH_RANDOM_SEED', 0))
    states = pair_states(r)
    mult = {}
    for u, v in combinations(range(n), 2):
        forward, backward = rng.choice(states)
        if forward:
            mult[(u, v)] = forward
        if backward:
            mult[(v, u)] = backward
    return RGraph.from_mult(n, r, mult)
