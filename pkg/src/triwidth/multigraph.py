"""Multigraphs with parallel arcs and loops.

This is the ambient object for all the width machinery: dual graphs of
triangulations are 4-regular-ish multigraphs, and the carving / congestion
side of the toolkit works with parallel arcs and loops kept intact.

Nodes are 0..nodeCount-1.  Arcs are an unordered multiset of node pairs;
a loop is the pair (v, v).
"""

from collections import Counter


class MultiGraph:
    def __init__(self, node_count, arcs=()):
        if node_count < 0:
            raise ValueError("node_count must be >= 0")
        self.node_count = node_count
        self._arcs = Counter()
        for u, v in arcs:
            self.add_arc(u, v)

    # -- mutation ---------------------------------------------------------

    def add_arc(self, u, v, multiplicity=1):
        self._check_node(u)
        self._check_node(v)
        if multiplicity < 1:
            raise ValueError("multiplicity must be >= 1")
        key = (u, v) if u <= v else (v, u)
        self._arcs[key] += multiplicity

    def remove_arc(self, u, v):
        """Remove one copy of the arc (u, v).  Raises if absent."""
        key = (u, v) if u <= v else (v, u)
        if self._arcs[key] <= 0:
            raise ValueError(f"no arc {key} to remove")
        self._arcs[key] -= 1
        if self._arcs[key] == 0:
            del self._arcs[key]

    # -- queries ----------------------------------------------------------

    def _check_node(self, v):
        if not 0 <= v < self.node_count:
            raise ValueError(f"node {v} out of range 0..{self.node_count - 1}")

    def arc_count(self):
        return sum(self._arcs.values())

    def arc_items(self):
        """Iterate (u, v), multiplicity with u <= v, in sorted order."""
        for key in sorted(self._arcs):
            yield key, self._arcs[key]

    def arcs(self):
        """Iterate arcs with multiplicity, each parallel copy separately."""
        for (u, v), mult in self.arc_items():
            for _ in range(mult):
                yield (u, v)

    def multiplicity(self, u, v):
        key = (u, v) if u <= v else (v, u)
        return self._arcs.get(key, 0)

    def degree(self, v):
        """Number of arc endpoints at v; a loop contributes 2."""
        self._check_node(v)
        deg = 0
        for (a, b), mult in self._arcs.items():
            if a == v:
                deg += mult
            if b == v:
                deg += mult
        return deg

    def max_degree(self):
        return max((self.degree(v) for v in range(self.node_count)), default=0)

    def distinct_neighbours(self, v):
        """Set of nodes adjacent to v, not counting v itself."""
        self._check_node(v)
        out = set()
        for (a, b) in self._arcs:
            if a == v and b != v:
                out.add(b)
            elif b == v and a != v:
                out.add(a)
        return out

    def neighbour_masks(self):
        """Distinct-neighbour bitmask per node (loops dropped)."""
        masks = [0] * self.node_count
        for (u, v) in self._arcs:
            if u != v:
                masks[u] |= 1 << v
                masks[v] |= 1 << u
        return masks

    def loop_count(self, v):
        return self._arcs.get((v, v), 0)

    def components(self):
        """List of sorted node lists, one per connected component."""
        parent = list(range(self.node_count))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for (u, v) in self._arcs:
            ru, rv = find(u), find(v)
            if ru != rv:
                parent[ru] = rv
        groups = {}
        for v in range(self.node_count):
            groups.setdefault(find(v), []).append(v)
        return sorted(groups.values())

    def is_connected(self):
        return len(self.components()) <= 1

    def simplify(self):
        """Underlying simple graph: loops dropped, multiplicities collapsed."""
        return MultiGraph(
            self.node_count,
            ((u, v) for (u, v) in self._arcs if u != v),
        )

    def induced(self, nodes):
        """Subgraph induced on `nodes`, relabelled 0..k-1 in the given order.

        Returns (graph, old_of_new) where old_of_new[i] is the original
        label of new node i.
        """
        old_of_new = list(nodes)
        new_of_old = {old: new for new, old in enumerate(old_of_new)}
        g = MultiGraph(len(old_of_new))
        for (u, v), mult in self._arcs.items():
            if u in new_of_old and v in new_of_old:
                g.add_arc(new_of_old[u], new_of_old[v], mult)
        return g, old_of_new

    def copy(self):
        g = MultiGraph(self.node_count)
        g._arcs = Counter(self._arcs)
        return g

    def __eq__(self, other):
        return (
            isinstance(other, MultiGraph)
            and self.node_count == other.node_count
            and self._arcs == other._arcs
        )

    def __ne__(self, other):
        return not self.__eq__(other)

    def __repr__(self):
        return f"MultiGraph({self.node_count}, {sorted(self.arcs())})"


# -- file formats ---------------------------------------------------------

def write_gr(graph, path_or_file):
    """Write PACE-style .gr: 'p tw n m' header, one '<u> <v>' line per arc
    copy, 1-indexed.  Loops appear as 'u u'."""
    lines = [f"p tw {graph.node_count} {graph.arc_count()}"]
    for (u, v) in graph.arcs():
        lines.append(f"{u + 1} {v + 1}")
    text = "\n".join(lines) + "\n"
    if hasattr(path_or_file, "write"):
        path_or_file.write(text)
    else:
        with open(path_or_file, "w") as f:
            f.write(text)


def read_gr(path_or_file):
    if hasattr(path_or_file, "read"):
        text = path_or_file.read()
    else:
        with open(path_or_file) as f:
            text = f.read()
    graph = None
    declared_arcs = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if graph is not None:
                raise ValueError(f"line {lineno}: duplicate problem line")
            if len(parts) != 4 or parts[1] != "tw":
                raise ValueError(f"line {lineno}: expected 'p tw <n> <m>'")
            graph = MultiGraph(int(parts[2]))
            declared_arcs = int(parts[3])
        else:
            if graph is None:
                raise ValueError(f"line {lineno}: arc before problem line")
            if len(parts) != 2:
                raise ValueError(f"line {lineno}: expected '<u> <v>'")
            u, v = int(parts[0]) - 1, int(parts[1]) - 1
            graph.add_arc(u, v)
    if graph is None:
        raise ValueError("no problem line found")
    if graph.arc_count() != declared_arcs:
        raise ValueError(
            f"header declares {declared_arcs} arcs, file has {graph.arc_count()}"
        )
    return graph


def write_dot(graph, path_or_file, name="G"):
    """GraphViz export, one '--' line per arc copy."""
    lines = [f"graph {name} {{"]
    for v in range(graph.node_count):
        lines.append(f"  {v};")
    for (u, v) in graph.arcs():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    text = "\n".join(lines) + "\n"
    if hasattr(path_or_file, "write"):
        path_or_file.write(text)
    else:
        with open(path_or_file, "w") as f:
            f.write(text)
