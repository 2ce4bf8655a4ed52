"""Treewidth: exact elimination DP, greedy upper bound, degeneracy lower
bound.  All of them work on the underlying simple graph (loops and
multiplicities never change treewidth) but witnesses are validated against
the original multigraph."""

from .. import _kernels
from .decomposition import TreeDecomposition

DEFAULT_EXACT_LIMIT = 20


def _decomposition_from_elimination(simple, order):
    """Tree decomposition from an elimination order (simple graph).

    Standard construction: eliminate along `order`, bag(v) = {v} + v's
    neighbours at elimination time (fill arcs added as we go); the parent
    of bag(v) is the bag of the earliest-eliminated member of bag(v)-{v}.
    """
    n = simple.node_count
    nbrs = {v: set(simple.distinct_neighbours(v)) for v in range(n)}
    pos = {v: i for i, v in enumerate(order)}
    bag_of = {}
    for v in order:
        later = {u for u in nbrs[v] if pos[u] > pos[v]}
        bag_of[v] = {v} | later
        for a in later:
            nbrs[a].discard(v)
            for b in later:
                if a != b:
                    nbrs[a].add(b)
    bags = [frozenset(bag_of[v]) for v in order]
    arcs = []
    index_of = {v: i for i, v in enumerate(order)}
    roots = []
    for i, v in enumerate(order):
        rest = bag_of[v] - {v}
        if rest:
            parent = min(rest, key=lambda u: pos[u])
            arcs.append((i, index_of[parent]))
        else:
            roots.append(i)
    # a disconnected graph leaves one root per component; chain them so the
    # bag graph is a single tree (node subtrees stay connected: the extra
    # arcs only bridge bags with no node in common)
    for a, b in zip(roots, roots[1:]):
        arcs.append((a, b))
    return TreeDecomposition(bags, arcs)


def treewidth_exact(graph, limit=DEFAULT_EXACT_LIMIT, witness=True):
    """Exact treewidth with an optimal TreeDecomposition witness.

    Returns (value, TreeDecomposition) or (value, None).  Raises
    ValueError above `limit` nodes (the DP visits 2^n subsets)."""
    n = graph.node_count
    if n == 0:
        raise ValueError("treewidth of the empty graph is undefined")
    if n > limit:
        raise ValueError(
            f"{n} nodes exceeds exact limit {limit}; raise limit= or use "
            "treewidth_upper"
        )
    simple = graph.simplify()
    value, choice = _kernels.treewidth_dp(n, simple.neighbour_masks())
    if not witness:
        return value, None
    # peel the elimination order (choice[S] was eliminated last in S)
    order_rev = []
    s = (1 << n) - 1
    while s:
        v = choice[s]
        order_rev.append(v)
        s ^= 1 << v
    order = list(reversed(order_rev))
    td = _decomposition_from_elimination(simple, order)
    return value, td


def treewidth_upper(graph, heuristic="min-fill"):
    """Greedy elimination upper bound; returns (value, TreeDecomposition).

    heuristic: 'min-fill' or 'min-degree'."""
    n = graph.node_count
    if n == 0:
        raise ValueError("treewidth of the empty graph is undefined")
    simple = graph.simplify()
    nbrs = {v: set(simple.distinct_neighbours(v)) for v in range(n)}
    remaining = set(range(n))
    order = []
    width = 0
    while remaining:
        if heuristic == "min-degree":
            v = min(remaining, key=lambda x: (len(nbrs[x]), x))
        elif heuristic == "min-fill":
            def fill(x):
                ns = [u for u in nbrs[x]]
                cnt = 0
                for i in range(len(ns)):
                    for j in range(i + 1, len(ns)):
                        if ns[j] not in nbrs[ns[i]]:
                            cnt += 1
                return cnt
            v = min(remaining, key=lambda x: (fill(x), len(nbrs[x]), x))
        else:
            raise ValueError(f"unknown heuristic {heuristic!r}")
        order.append(v)
        width = max(width, len(nbrs[v]))
        ns = list(nbrs[v])
        for i in range(len(ns)):
            for j in range(i + 1, len(ns)):
                a, b = ns[i], ns[j]
                nbrs[a].add(b)
                nbrs[b].add(a)
        for u in ns:
            nbrs[u].discard(v)
        nbrs.pop(v)
        remaining.discard(v)
    td = _decomposition_from_elimination(simple, order)
    return width, td


def treewidth_lower(graph):
    """Degeneracy lower bound: max over the removal process of the minimum
    degree.  Degeneracy <= treewidth always."""
    simple = graph.simplify()
    nbrs = {v: set(simple.distinct_neighbours(v)) for v in range(simple.node_count)}
    best = 0
    remaining = set(nbrs)
    while remaining:
        v = min(remaining, key=lambda x: (len(nbrs[x]), x))
        best = max(best, len(nbrs[v]))
        for u in nbrs[v]:
            nbrs[u].discard(v)
        nbrs.pop(v)
        remaining.discard(v)
    return best
