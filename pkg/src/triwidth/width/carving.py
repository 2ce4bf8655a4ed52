"""Carving-width (congestion) of multigraphs.

carving_width_exact runs a subset DP over all binary leaf trees and is
limited to small node counts (3^n split enumeration).  carving_width_upper
is a cheap caterpillar heuristic usable at any size.
"""

import random

from .. import _kernels
from .embedding import TreeEmbedding, caterpillar_embedding, congestion

DEFAULT_EXACT_LIMIT = 12


def _pair_weights(graph, count_multiplicity):
    n = graph.node_count
    w = [0] * (n * n)
    for (u, v), mult in graph.arc_items():
        if u == v:
            continue
        val = mult if count_multiplicity else 1
        w[u * n + v] = val
        w[v * n + u] = val
    return w


def carving_width_exact(graph, limit=DEFAULT_EXACT_LIMIT,
                        count_multiplicity=False, witness=True):
    """Exact carving-width, with an optimal embedding as witness.

    Returns (value, TreeEmbedding) or (value, None) with witness=False.
    Raises ValueError when graph.node_count exceeds `limit` (the DP is
    exponential; raise the limit explicitly if you mean it).
    """
    n = graph.node_count
    if n == 0:
        raise ValueError("carving-width of the empty graph is undefined")
    if n > limit:
        raise ValueError(
            f"{n} nodes exceeds exact limit {limit}; raise limit= or use "
            "carving_width_upper"
        )
    if n == 1:
        emb = TreeEmbedding([], {0: 0}) if witness else None
        return 0, emb

    value, choice = _kernels.carving_dp(n, _pair_weights(graph, count_multiplicity))

    if not witness:
        return value, None

    # Rebuild the optimal tree from the choice table.  Leaf ids are the
    # graph nodes; internal ids count up from n.
    arcs = []
    next_internal = [n]

    def build(mask):
        if mask & (mask - 1) == 0:
            return mask.bit_length() - 1
        a = choice[mask]
        b = mask ^ a
        ra, rb = build(a), build(b)
        node = next_internal[0]
        next_internal[0] += 1
        arcs.append((node, ra))
        arcs.append((node, rb))
        return node

    full = (1 << n) - 1
    a = choice[full]
    b = full ^ a
    ra, rb = build(a), build(b)
    arcs.append((ra, rb))
    emb = TreeEmbedding(arcs, {v: v for v in range(n)})
    return value, emb


def carving_width_upper(graph, seed=0, shuffles=8, count_multiplicity=False):
    """Heuristic upper bound: best caterpillar over BFS orders from every
    start node plus a few seeded shuffles.

    Returns (value, TreeEmbedding)."""
    n = graph.node_count
    if n == 0:
        raise ValueError("carving-width of the empty graph is undefined")
    if n == 1:
        return 0, TreeEmbedding([], {0: 0})

    orders = []
    for start in range(n):
        seen = [False] * n
        order = []
        queue = [start]
        seen[start] = True
        while queue:
            x = queue.pop(0)
            order.append(x)
            for y in sorted(graph.distinct_neighbours(x)):
                if not seen[y]:
                    seen[y] = True
                    queue.append(y)
        for v in range(n):
            if not seen[v]:
                order.append(v)
        orders.append(order)
    rng = random.Random(seed)
    base = list(range(n))
    for _ in range(shuffles):
        rng.shuffle(base)
        orders.append(list(base))

    best = None
    best_emb = None
    for order in orders:
        emb = caterpillar_embedding(graph, order)
        val = congestion(graph, emb, count_multiplicity)
        if best is None or val < best:
            best, best_emb = val, emb
    return best, best_emb


def carving_width_lower(graph, count_multiplicity=False):
    """Cheap lower bound: the leaf arc of node v is crossed by every pair
    at v, so congestion >= max over nodes of the distinct-neighbour count
    (arc count to distinct neighbours in multiplicity mode)."""
    best = 0
    for v in range(graph.node_count):
        if count_multiplicity:
            val = sum(
                graph.multiplicity(v, u) for u in graph.distinct_neighbours(v)
            )
        else:
            val = len(graph.distinct_neighbours(v))
        if val > best:
            best = val
    return best
