"""Pure-Python search kernels.

Two exponential dynamic programs live here, behind a deliberately tiny
array-level interface so the optional compiled twin (_fast.pyx) can mirror
them line for line:

--> carving_dp: optimal carving cost over all binary leaf trees, via
    subset DP on bipartitions (3^n split enumeration).
--> treewidth_dp: optimal elimination width over vertex subsets
    (Held-Karp style DP on elimination prefixes).

Both take the graph as flat integer data and return the optimum plus a
per-subset choice table from which callers rebuild witnesses.
"""


def carving_dp(n, weights):
    """Carving cost DP.

    n        -- number of leaves (graph nodes), n >= 1
    weights  -- flat n*n symmetric non-negative ints, zero diagonal;
                weights[u*n+v] is the cut contribution of the pair {u,v}

    Returns (best, choice) where best is the optimal over all binary trees
    with the n nodes as leaves of the maximum cut weight over tree arcs,
    and choice[S] is the chosen child submask of S (0 for singletons).
    """
    full = (1 << n) - 1
    if n == 1:
        return 0, [0, 0]

    # cut[S] = total weight of pairs split by S
    cut = [0] * (full + 1)
    rows = [weights[u * n:(u + 1) * n] for u in range(n)]
    for s in range(1, full + 1):
        low = (s & -s).bit_length() - 1
        prev = s & (s - 1)
        delta = 0
        row = rows[low]
        for v in range(n):
            w = row[v]
            if w:
                delta += -w if (prev >> v) & 1 else w
        cut[s] = cut[prev] + delta

    cost = [0] * (full + 1)
    choice = [0] * (full + 1)
    for s in range(1, full + 1):
        if s & (s - 1) == 0:
            continue
        pivot = s & -s
        rest = s ^ pivot
        best = None
        best_a = 0
        # enumerate submasks a of rest; child A = pivot | a, B = s ^ A
        a = rest
        while True:
            aa = pivot | a
            bb = s ^ aa
            if bb:
                val = cut[aa]
                cb = cut[bb]
                if cb > val:
                    val = cb
                ca = cost[aa]
                if ca > val:
                    val = ca
                cb2 = cost[bb]
                if cb2 > val:
                    val = cb2
                if best is None or val < best:
                    best = val
                    best_a = aa
            if a == 0:
                break
            a = (a - 1) & rest
        cost[s] = best
        choice[s] = best_a
    return cost[full], choice


def treewidth_dp(n, nbr_masks):
    """Exact treewidth of a simple graph, elimination-prefix DP.

    n          -- number of nodes
    nbr_masks  -- per-node bitmask of distinct neighbours (no loop bits)

    f(S) = width of the best elimination of S as a prefix; eliminating v
    from prefix S costs the number of nodes outside S u {v} reachable from
    v through S.  Returns (treewidth, choice) with choice[S] = node
    eliminated last in the best prefix S.
    """
    full = (1 << n) - 1
    if n == 0:
        return -1, [0]
    f = [0] * (full + 1)
    choice = [0] * (full + 1)
    f[0] = -1
    for s in range(1, full + 1):
        best = None
        best_v = 0
        t = s
        while t:
            vbit = t & -t
            t ^= vbit
            v = vbit.bit_length() - 1
            prev = s ^ vbit
            q = _reach_cost(n, nbr_masks, prev, v)
            val = f[prev]
            if q > val:
                val = q
            if best is None or val < best:
                best = val
                best_v = v
        f[s] = best
        choice[s] = best_v
    return f[full], choice


def _reach_cost(n, nbr_masks, prefix, v):
    """Nodes outside prefix u {v} reachable from v through the prefix."""
    closure = 1 << v
    seen_nbrs = nbr_masks[v]
    frontier = seen_nbrs & prefix & ~closure
    while frontier:
        closure |= frontier
        add = 0
        t = frontier
        while t:
            ubit = t & -t
            t ^= ubit
            add |= nbr_masks[ubit.bit_length() - 1]
        new = add & ~seen_nbrs
        seen_nbrs |= add
        frontier = new & prefix & ~closure
    outside = seen_nbrs & ~prefix & ~(1 << v)
    return bin(outside).count("1")
