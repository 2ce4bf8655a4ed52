"""Binary-tree embeddings of multigraphs and their congestion.

An embedding places the graph nodes on the leaves of an unrooted binary
tree (all internal tree nodes have degree exactly 3).  Each graph arc
between distinct nodes is routed along the unique leaf-to-leaf path; the
congestion of a tree arc is the number of adjacent node pairs routed
across it, and the congestion of the embedding is the maximum over tree
arcs.  Loops are never routed.  With count_multiplicity=True parallel
copies are counted individually instead of once per pair.

Degenerate shapes are allowed:
--> one graph node: a single tree node, no arcs;
--> two graph nodes: two leaves joined by one arc.
"""

import json


class TreeEmbedding:
    def __init__(self, tree_arcs, leaf_of):
        self.tree_arcs = [tuple(a) for a in tree_arcs]
        self.leaf_of = dict(leaf_of)

    def tree_nodes(self):
        nodes = set(self.leaf_of.values())
        for a, b in self.tree_arcs:
            nodes.add(a)
            nodes.add(b)
        return nodes

    def to_json(self):
        return {
            "treeArcs": [list(a) for a in self.tree_arcs],
            "leafOf": {str(v): leaf for v, leaf in sorted(self.leaf_of.items())},
        }

    @staticmethod
    def from_json(data):
        return TreeEmbedding(
            [tuple(a) for a in data["treeArcs"]],
            {int(v): leaf for v, leaf in data["leafOf"].items()},
        )

    def write(self, path_or_file):
        text = json.dumps(self.to_json(), indent=2) + "\n"
        if hasattr(path_or_file, "write"):
            path_or_file.write(text)
        else:
            with open(path_or_file, "w") as f:
                f.write(text)

    @staticmethod
    def read(path_or_file):
        if hasattr(path_or_file, "read"):
            data = json.load(path_or_file)
        else:
            with open(path_or_file) as f:
                data = json.load(f)
        return TreeEmbedding.from_json(data)

    def __repr__(self):
        return f"TreeEmbedding({self.tree_arcs!r}, {self.leaf_of!r})"


def _adjacency(tree_arcs):
    adj = {}
    for a, b in tree_arcs:
        adj.setdefault(a, []).append(b)
        adj.setdefault(b, []).append(a)
    return adj


def validate_embedding(graph, emb):
    """Check emb is a valid binary-tree embedding of graph's nodes.

    Raises ValueError with a reason on failure; returns None on success.
    """
    if set(emb.leaf_of.keys()) != set(range(graph.node_count)):
        raise ValueError("leafOf keys must be exactly the graph nodes")
    leaves = list(emb.leaf_of.values())
    if len(set(leaves)) != len(leaves):
        raise ValueError("two graph nodes share a tree leaf")

    nodes = emb.tree_nodes()
    if graph.node_count == 0:
        raise ValueError("embedding of the empty graph is undefined")
    adj = _adjacency(emb.tree_arcs)
    if len(emb.tree_arcs) != len(nodes) - 1:
        raise ValueError("tree arc count must be (tree nodes - 1)")
    if len(set(map(frozenset, emb.tree_arcs))) != len(emb.tree_arcs):
        raise ValueError("duplicate tree arc")
    # connectivity
    if nodes:
        seen = set()
        stack = [next(iter(nodes))]
        while stack:
            x = stack.pop()
            if x in seen:
                continue
            seen.add(x)
            stack.extend(adj.get(x, []))
        if seen != nodes:
            raise ValueError("tree is not connected")
    leaf_set = set(leaves)
    for x in nodes:
        deg = len(adj.get(x, []))
        if x in leaf_set:
            if deg > 1:
                raise ValueError(f"leaf {x} has tree degree {deg}")
        else:
            if deg != 3:
                raise ValueError(f"internal tree node {x} has degree {deg} != 3")


def congestion(graph, emb, count_multiplicity=False):
    """Maximum congestion over tree arcs; 0 if the tree has no arcs."""
    if not emb.tree_arcs:
        return 0
    adj = _adjacency(emb.tree_arcs)
    nodes = emb.tree_nodes()
    root = next(iter(nodes))
    # orient the tree away from root, then the side of each arc is the
    # descendant leaf set of its lower endpoint
    parent = {root: None}
    order = [root]
    stack = [root]
    while stack:
        x = stack.pop()
        for y in adj.get(x, []):
            if y not in parent:
                parent[y] = x
                order.append(y)
                stack.append(y)
    leaf_node = {leaf: v for v, leaf in emb.leaf_of.items()}
    below = {x: set() for x in nodes}
    for x in reversed(order):
        if x in leaf_node:
            below[x].add(leaf_node[x])
        if parent[x] is not None:
            below[parent[x]].update(below[x])

    pairs = []
    for (u, v), mult in graph.arc_items():
        if u == v:
            continue
        pairs.append((u, v, mult if count_multiplicity else 1))

    best = 0
    for x in nodes:
        if parent[x] is None:
            continue
        side = below[x]
        cong = 0
        for u, v, w in pairs:
            if (u in side) != (v in side):
                cong += w
        if cong > best:
            best = cong
    return best


def caterpillar_embedding(graph, order=None):
    """Embedding along a spine, leaves in the given node order.

    With order None the natural order 0..n-1 is used.  Tree node ids:
    graph node v sits on leaf v; internal spine nodes are n, n+1, ...
    """
    n = graph.node_count
    if order is None:
        order = list(range(n))
    if sorted(order) != list(range(n)):
        raise ValueError("order must be a permutation of the nodes")
    if n == 0:
        raise ValueError("no nodes to embed")
    if n == 1:
        return TreeEmbedding([], {order[0]: order[0]})
    if n == 2:
        return TreeEmbedding([(order[0], order[1])], {v: v for v in order})
    spine = list(range(n, n + n - 2))
    arcs = []
    for i in range(len(spine) - 1):
        arcs.append((spine[i], spine[i + 1]))
    arcs.append((order[0], spine[0]))
    for j in range(1, n - 1):
        arcs.append((order[j], spine[j - 1]))
    arcs.append((order[n - 1], spine[-1]))
    return TreeEmbedding(arcs, {v: v for v in range(n)})


def restrict_embedding(emb, node_subset):
    """Induced embedding on a subset of the graph nodes.

    Deletes the other leaves, prunes dead branches and smooths the
    resulting degree-2 tree nodes.  The congestion of the result on the
    induced subgraph never exceeds the original congestion.
    """
    keep = set(node_subset)
    if not keep:
        raise ValueError("node_subset must be non-empty")
    for v in keep:
        if v not in emb.leaf_of:
            raise ValueError(f"node {v} not in the embedding")
    if len(keep) == 1:
        v = next(iter(keep))
        return TreeEmbedding([], {v: emb.leaf_of[v]})

    adj = {x: set(ys) for x, ys in _adjacency(emb.tree_arcs).items()}
    for x in emb.tree_nodes():
        adj.setdefault(x, set())
    kept_leaves = {emb.leaf_of[v] for v in keep}
    # prune leaves (tree degree <= 1) that are not kept
    frontier = [x for x in adj if len(adj[x]) <= 1 and x not in kept_leaves]
    while frontier:
        x = frontier.pop()
        if x not in adj:
            continue
        nbrs = adj.pop(x)
        for y in nbrs:
            adj[y].discard(x)
            if len(adj[y]) <= 1 and y not in kept_leaves:
                frontier.append(y)
    # smooth degree-2 nodes
    changed = True
    while changed:
        changed = False
        for x in list(adj):
            if x in kept_leaves or x not in adj:
                continue
            if len(adj[x]) == 2:
                a, b = sorted(adj[x])
                adj.pop(x)
                adj[a].discard(x)
                adj[b].discard(x)
                adj[a].add(b)
                adj[b].add(a)
                changed = True
    arcs = set()
    for x, ys in adj.items():
        for y in ys:
            arcs.add((min(x, y), max(x, y)))
    return TreeEmbedding(sorted(arcs), {v: emb.leaf_of[v] for v in keep})


def join_embeddings(emb1, graph1, emb2, graph2, connecting_arcs):
    """Embed the disjoint union of graph1, graph2 plus connecting arcs.

    connecting_arcs is a non-empty list of (u, v) with u a graph1 node
    and v a graph2 node.  graph2's nodes are relabelled by +graph1.node_count
    in the result.  The two trees are bridged next to the leaves of the
    first connecting arc's endpoints.

    Returns (joined_graph, joined_embedding).
    """
    from ..multigraph import MultiGraph

    if not connecting_arcs:
        raise ValueError("need at least one connecting arc")
    n1 = graph1.node_count
    joined = MultiGraph(n1 + graph2.node_count)
    for (u, v), mult in graph1.arc_items():
        joined.add_arc(u, v, mult)
    for (u, v), mult in graph2.arc_items():
        joined.add_arc(u + n1, v + n1, mult)
    for u, v in connecting_arcs:
        graph1._check_node(u)
        graph2._check_node(v)
        joined.add_arc(u, v + n1)

    # relabel tree nodes apart: emb1 nodes -> (0, x), emb2 nodes -> (1, x)
    arcs = [((0, a), (0, b)) for a, b in emb1.tree_arcs]
    arcs += [((1, a), (1, b)) for a, b in emb2.tree_arcs]
    leaf_of = {v: (0, leaf) for v, leaf in emb1.leaf_of.items()}
    leaf_of.update({v + n1: (1, leaf) for v, leaf in emb2.leaf_of.items()})

    u0, v0 = connecting_arcs[0]
    arcs, p1 = _attach_port(arcs, leaf_of[u0], ("join", 1))
    arcs, p2 = _attach_port(arcs, leaf_of[v0 + n1], ("join", 2))
    arcs.append((p1, p2))
    emb = TreeEmbedding(arcs, leaf_of)
    return joined, emb


def _attach_port(arcs, leaf, port):
    """Subdivide leaf's unique tree arc with `port` and return
    (new_arcs, port); the caller then wires `port` to the other side,
    restoring degree 3.  If `leaf` is an isolated tree node (single-node
    tree) there is nothing to subdivide and the leaf itself is the
    attachment point."""
    for i, (a, b) in enumerate(arcs):
        if a == leaf or b == leaf:
            other = b if a == leaf else a
            out = arcs[:i] + arcs[i + 1:]
            out.append((leaf, port))
            out.append((port, other))
            return out, port
    return list(arcs), leaf
