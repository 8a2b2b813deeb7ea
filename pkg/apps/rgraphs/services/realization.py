"""
Minimum-arc realization of feasible imbalance sequences.

Positions with positive imbalance supply arcs, positions with negative
imbalance consume them. The transportation problem between the two sides
is tried first (greedy, then augmenting paths); sequences that cannot be
realized by supplier-to-consumer arcs alone are solved as a minimum-cost
flow on the complete digraph.
"""
import logging
from dataclasses import dataclass

import networkx as nx
from networkx.algorithms.flow import edmonds_karp

from .checks import Verdict, check_feasible_nondecreasing
from .core import RGraph, RGraphError, InvalidParameterError, arc_count

logger = logging.getLogger(__name__)

GREEDY = 'greedy'
MAX_FLOW = 'max-flow'
MIN_COST_FLOW = 'min-cost-flow'

SOURCE = 'source'
SINK = 'sink'


class InfeasibleSequenceError(RGraphError):
    def __init__(self, values, r, verdict: Verdict):
        self.values = list(values)
        self.r = r
        self.verdict = verdict
        super().__init__(f"Sequence {self.values} is not realizable for r={r}: {verdict.describe()}")


class InternalContradictionError(RGraphError):
    pass


@dataclass(frozen=True)
class RealizationResult:
    graph: RGraph
    # 1-based position in the input sequence -> vertex id
    vertex_map: dict
    arc_count: int
    method: str = GREEDY


def min_arc_lower_bound(values):
    """Every arc raises one imbalance by 1, so Σ max(b_i, 0) arcs are necessary."""
    values = list(values)
    if sum(values) != 0:
        raise InvalidParameterError(f"Imbalances must sum to zero, got {sum(values)}")
    return sum(b for b in values if b > 0)


def _greedy_shipments(suppliers, consumers, r):
    supply = dict(suppliers)
    demand = dict(consumers)
    shipments = {}
    for i, _s in suppliers:
        for j, _d in consumers:
            amount = min(r, supply[i], demand[j])
            if amount:
                shipments[(i, j)] = amount
                supply[i] -= amount
                demand[j] -= amount
    if any(supply.values()):
        return None
    return shipments


def _max_flow_shipments(suppliers, consumers, r):
    network = nx.DiGraph()
    for i, s in suppliers:
        network.add_edge(SOURCE, ('supplier', i), capacity=s)
    for j, d in consumers:
        network.add_edge(('consumer', j), SINK, capacity=d)
    for i, _s in suppliers:
        for j, _d in consumers:
            network.add_edge(('supplier', i), ('consumer', j), capacity=r)

    value, flow = nx.maximum_flow(network, SOURCE, SINK, flow_func=edmonds_karp)
    if value < sum(s for _i, s in suppliers):
        return None
    return {
        (i, j): flow[('supplier', i)][('consumer', j)]
        for i, _s in suppliers
        for j, _d in consumers
        if flow[('supplier', i)][('consumer', j)]
    }


def _min_cost_flow_shipments(values, r):
    network = nx.DiGraph()
    for i, b in enumerate(values):
        # networkx demand is net inflow
        network.add_node(i, demand=-b)
    for i in range(len(values)):
        for j in range(len(values)):
            if i != j:
                network.add_edge(i, j, capacity=r, weight=1)
    try:
        flow = nx.min_cost_flow(network)
    except nx.NetworkXUnfeasible:
        return None
    shipments = {}
    for i, targets in flow.items():
        for j, amount in targets.items():
            if amount:
                shipments[(i, j)] = amount
    # One direction per pair.
    for (i, j), amount in list(shipments.items()):
        back = shipments.get((j, i), 0)
        if i < j and back:
            common = min(amount, back)
            shipments[(i, j)] -= common
            shipments[(j, i)] -= common
    return {pair: amount for pair, amount in shipments.items() if amount}


def realize(values, r):
    """
    Build a minimum-arc r-graph whose vertex i has imbalance values[i].

    Args:
        values: non-decreasing integer sequence
        r: per-pair capacity

    Returns:
        RealizationResult

    Raises:
        InfeasibleSequenceError: if the sequence fails the feasibility check
        InternalContradictionError: if a passing sequence cannot be realized
    """
    values = list(values)
    verdict = check_feasible_nondecreasing(values, r)
    if not verdict:
        raise InfeasibleSequenceError(values, r, verdict)

    n = len(values)
    suppliers = [(i, b) for i, b in enumerate(values) if b > 0]
    consumers = [(j, -b) for j, b in enumerate(values) if b < 0]

    method = GREEDY
    shipments = _greedy_shipments(suppliers, consumers, r)
    if shipments is None:
        logger.debug(f"Greedy transportation left supply for {values} at r={r}, trying augmenting paths")
        method = MAX_FLOW
        shipments = _max_flow_shipments(suppliers, consumers, r)
    if shipments is None:
        logger.debug(f"Transportation infeasible for {values} at r={r}, relaying through the complete digraph")
        method = MIN_COST_FLOW
        shipments = _min_cost_flow_shipments(values, r)
    if shipments is None:
        logger.error(f"Feasible sequence {values} (r={r}) could not be realized")
        raise InternalContradictionError(f"Sequence {values} passed the check but no flow realizes it")

    graph = RGraph.from_mult(n, r, shipments)
    if list(graph.imbalances) != values:
        logger.error(f"Realization of {values} produced imbalances {list(graph.imbalances)}")
        raise InternalContradictionError(f"Realization of {values} has imbalances {list(graph.imbalances)}")

    count = arc_count(graph)
    logger.info(f"Realized {values} at r={r} with {count} arcs ({method})")
    return RealizationResult(
        graph=graph,
        vertex_map={i + 1: i for i in range(n)},
        arc_count=count,
        method=method,
    )
