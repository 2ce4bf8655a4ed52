"""Tree decompositions: validation, PACE-style .td files, combinators."""


class TreeDecomposition:
    """bags: list of node sets (index = bag id); tree_arcs: pairs of bag ids."""

    def __init__(self, bags, tree_arcs):
        self.bags = [frozenset(b) for b in bags]
        self.tree_arcs = [tuple(a) for a in tree_arcs]

    def width(self):
        if not self.bags:
            raise ValueError("decomposition has no bags")
        return max(len(b) for b in self.bags) - 1

    def to_json(self):
        return {
            "bags": [sorted(b) for b in self.bags],
            "treeArcs": [list(a) for a in self.tree_arcs],
        }

    @staticmethod
    def from_json(data):
        return TreeDecomposition(data["bags"], data["treeArcs"])

    def __repr__(self):
        return f"TreeDecomposition({[sorted(b) for b in self.bags]}, {self.tree_arcs})"


def td_validate(graph, td):
    """Full validity check of td against graph (multigraphs fine: loops
    and parallel arcs impose the same constraints as a simple arc / a
    node).  Raises ValueError with a reason; returns the width on success.
    """
    nbags = len(td.bags)
    if nbags == 0:
        raise ValueError("no bags")
    for i, (a, b) in enumerate(td.tree_arcs):
        if not (0 <= a < nbags and 0 <= b < nbags) or a == b:
            raise ValueError(f"tree arc {i} out of range or a loop")
    if len(td.tree_arcs) != nbags - 1:
        raise ValueError("bag tree must have (bags - 1) arcs")
    adj = {i: [] for i in range(nbags)}
    for a, b in td.tree_arcs:
        adj[a].append(b)
        adj[b].append(a)
    seen = set()
    stack = [0]
    while stack:
        x = stack.pop()
        if x in seen:
            continue
        seen.add(x)
        stack.extend(adj[x])
    if len(seen) != nbags:
        raise ValueError("bag tree is not connected")

    for v in range(graph.node_count):
        holders = [i for i, b in enumerate(td.bags) if v in b]
        if not holders:
            raise ValueError(f"node {v} is in no bag")
        # connectivity of the holders within the bag tree
        hset = set(holders)
        comp = set()
        stack = [holders[0]]
        while stack:
            x = stack.pop()
            if x in comp:
                continue
            comp.add(x)
            stack.extend(y for y in adj[x] if y in hset)
        if comp != hset:
            raise ValueError(f"bags containing node {v} are not connected")

    for (u, v), _mult in graph.arc_items():
        if not any(u in b and v in b for b in td.bags):
            raise ValueError(f"arc ({u},{v}) is covered by no bag")
    return td.width()


# -- PACE 2017 .td format -------------------------------------------------

def write_td(td, graph_node_count, path_or_file):
    lines = []
    width_plus = max(len(b) for b in td.bags) if td.bags else 0
    lines.append(f"s td {len(td.bags)} {width_plus} {graph_node_count}")
    for i, bag in enumerate(td.bags, start=1):
        items = " ".join(str(v + 1) for v in sorted(bag))
        lines.append(f"b {i} {items}".rstrip())
    for a, b in td.tree_arcs:
        lines.append(f"{a + 1} {b + 1}")
    text = "\n".join(lines) + "\n"
    if hasattr(path_or_file, "write"):
        path_or_file.write(text)
    else:
        with open(path_or_file, "w") as f:
            f.write(text)


def read_td(path_or_file):
    """Parse a .td file; returns (TreeDecomposition, declared_node_count).

    Tolerates comment lines and a trailing '0' sentinel on arc lines, both
    of which appear in the wild."""
    if hasattr(path_or_file, "read"):
        text = path_or_file.read()
    else:
        with open(path_or_file) as f:
            text = f.read()
    nbags = None
    node_count = None
    bags = {}
    arcs = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "s":
            if nbags is not None:
                raise ValueError(f"line {lineno}: duplicate solution line")
            if len(parts) != 5 or parts[1] != "td":
                raise ValueError(f"line {lineno}: expected 's td <bags> <w+1> <n>'")
            nbags = int(parts[2])
            node_count = int(parts[4])
        elif parts[0] == "b":
            if nbags is None:
                raise ValueError(f"line {lineno}: bag before solution line")
            idx = int(parts[1]) - 1
            if idx in bags:
                raise ValueError(f"line {lineno}: duplicate bag {idx + 1}")
            toks = parts[2:]
            if toks and toks[-1] == "0":
                # node ids are 1-based, so a literal trailing 0 can only be
                # a sentinel; some writers emit one
                toks = toks[:-1]
            bags[idx] = frozenset(int(x) - 1 for x in toks)
        else:
            nums = [int(x) for x in parts]
            if nums and nums[-1] == 0:
                nums = nums[:-1]
            if len(nums) != 2:
                raise ValueError(f"line {lineno}: expected a bag-tree arc")
            arcs.append((nums[0] - 1, nums[1] - 1))
    if nbags is None:
        raise ValueError("no solution line found")
    if set(bags) != set(range(nbags)):
        raise ValueError("bag ids do not cover 1..(declared count)")
    td = TreeDecomposition([bags[i] for i in range(nbags)], arcs)
    return td, node_count


# -- combinators ----------------------------------------------------------

def join_decompositions(td1, graph1_node_count, td2, hub, hub_arcs):
    """Decomposition of graph1 u graph2 (graph2 relabelled by +offset)
    plus arcs from `hub` (a graph1 node) into graph2 nodes.

    Every bag of td2 gains `hub`, so all hub_arcs are covered and hub's
    bags stay connected once the two trees are bridged at a td1 bag
    containing hub.  Width grows by at most 1 on the td2 side.

    hub_arcs are graph2-local node ids (pre-offset).  Returns the joined
    TreeDecomposition with graph2 node v appearing as v + offset,
    offset = graph1_node_count.
    """
    offset = graph1_node_count
    anchor = None
    for i, b in enumerate(td1.bags):
        if hub in b:
            anchor = i
            break
    if anchor is None:
        raise ValueError(f"hub {hub} is in no bag of td1")
    for v in hub_arcs:
        if not any(v in b for b in td2.bags):
            raise ValueError(f"hub arc end {v} is in no bag of td2")
    bags = list(td1.bags)
    base = len(bags)
    for b in td2.bags:
        bags.append(frozenset(x + offset for x in b) | {hub})
    arcs = list(td1.tree_arcs)
    for a, b in td2.tree_arcs:
        arcs.append((a + base, b + base))
    arcs.append((anchor, base))
    return TreeDecomposition(bags, arcs)


def blowup_decomposition(td, node_map):
    """Replace every node v in every bag by the node set node_map[v].

    If td is valid for G and node_map sends each node to the node group
    replacing it in a refinement G' whose arcs stay inside groups of
    adjacent-or-equal G nodes, the result is valid for G'."""
    bags = []
    for b in td.bags:
        out = set()
        for v in b:
            out.update(node_map[v])
        bags.append(out)
    return TreeDecomposition(bags, list(td.tree_arcs))
