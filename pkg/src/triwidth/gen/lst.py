"""Layered solid tori.

The base is the one-tet solid torus: face 3 folded onto face 2 by the
cycle 0->3->2->1->0.  Its two free faces form a one-vertex torus whose
three edge classes we keep at fixed positions on the top tetrahedron:

    position a: tet edges (0,3) and (1,2)
    position b: tet edges (0,2) and (1,3)
    position c: tet edge (2,3), the diagonal

The meridian disc of the base crosses these 1, 2 and 3 times.  Layering
glues a fresh tetrahedron over the two free faces so that its bottom
edge (0,1) buries one chosen boundary class; faces 0 and 1 of the new
tetrahedron become the boundary, with the same three positions, and the
new diagonal always lands at position c.  The meridian crossing numbers
transform by the triangle relation: the surviving pair (x, y) keeps its
values and the fresh diagonal takes x + y or |x - y|, whichever the
buried value was not.

A slope (p, q) in the meridian basis corresponds to the crossing triple
{|q|, |p|, |p - q|}.  Building it walks the triple down to the base
triple {1, 2, 3} by removing the largest entry (always the sum of the
other two) and then replays the walk upward as layerings.  The triples
{0, 1, 1} and {1, 1, 2} do not give layered solid tori and are refused.
"""

from math import gcd

from ..multigraph import MultiGraph
from ..perms import Permutation4
from ..triangulation import Triangulation
from ..width.embedding import caterpillar_embedding

POSITION_EDGES = {
    "a": ((0, 3), (1, 2)),
    "b": ((0, 2), (1, 3)),
    "c": ((2, 3),),
}

# position buried -> ((new face, old face, vertex image), ...)
_MOVES = {
    "a": ((3, 0, (1, 2, 3, 0)), (2, 1, (3, 0, 1, 2))),
    "b": ((3, 0, (1, 3, 2, 0)), (2, 1, (2, 0, 1, 3))),
    "c": ((2, 0, (2, 3, 0, 1)), (3, 1, (2, 3, 0, 1))),
}


class LayeredTorus:
    """A layered solid torus plus its boundary bookkeeping.

    tri: the triangulation; top: index of the tetrahedron carrying the
    two free faces (its faces 0 and 1); values: meridian crossing
    numbers at positions (a, b, c) of the top tetrahedron."""

    def __init__(self, tri, top, values):
        self.tri = tri
        self.top = top
        self.values = tuple(values)

    def meridian_triple(self):
        return tuple(sorted(self.values))

    def boundary_faces(self):
        return [(self.top, 0), (self.top, 1)]

    def position_of_edge_class(self, cls):
        """Which position (a/b/c) an edge class of tri touches, else None."""
        members = set(cls)
        for pos, edges in POSITION_EDGES.items():
            if any((self.top, e) in members for e in edges):
                return pos
        return None

    def edge_class_values(self):
        """Map edge-class representative -> meridian crossing number, for
        the three boundary classes."""
        out = {}
        for cls in self.tri.edge_classes():
            pos = self.position_of_edge_class(cls)
            if pos is not None:
                out[cls[0]] = self.values["abc".index(pos)]
        return out

    def __repr__(self):
        return (
            f"LayeredTorus(tets={self.tri.tet_count}, top={self.top}, "
            f"values={self.values})"
        )


def _extended(tri):
    out = Triangulation(tri.tet_count + 1, tri.kind)
    for (t, f), (t2, f2, perm) in tri.gluings.items():
        if (t, f) < (t2, f2):
            out.add_gluing(t, f, t2, f2, perm)
    return out


def _flip(x, y, buried):
    s, d = x + y, abs(x - y)
    return d if buried == s else s


def lst_base():
    """The one-tet solid torus with meridian values (1, 2, 3)."""
    tri = Triangulation(1)
    tri.add_gluing(0, 3, 0, 2, Permutation4((3, 0, 1, 2)))
    return LayeredTorus(tri, 0, (1, 2, 3))


def layer_on(lt, position):
    """Layer one tetrahedron over the boundary, burying the given
    position; returns a new LayeredTorus."""
    if position not in _MOVES:
        raise ValueError(f"position must be a, b or c, not {position!r}")
    va, vb, vc = lt.values
    if position == "a":
        fresh = _flip(vb, vc, va)
        values = (vc, vb, fresh)
    elif position == "b":
        fresh = _flip(va, vc, vb)
        values = (vc, va, fresh)
    else:
        fresh = _flip(va, vb, vc)
        values = (va, vb, fresh)
    n = lt.tri.tet_count
    tri = _extended(lt.tri)
    for (new_face, old_face, image) in _MOVES[position]:
        tri.add_gluing(n, new_face, lt.top, old_face, Permutation4(image))
    return LayeredTorus(tri, n, values)


def slope_triple(p, q):
    """Meridian crossing triple of slope (p, q), sorted ascending."""
    if gcd(p, q) != 1:
        raise ValueError(f"slope ({p}, {q}) is not primitive")
    t = tuple(sorted((abs(q), abs(p), abs(p - q))))
    if t in ((0, 1, 1), (1, 1, 2)):
        raise ValueError(f"slope ({p}, {q}) gives degenerate triple {t}")
    return t


def _down_walk(triple):
    """Steps from the triple down to (1, 2, 3); each step removes the
    largest entry and inserts the difference of the other two."""
    steps = []
    cur = triple
    while cur != (1, 2, 3):
        x, y, z = cur
        if z != x + y:
            raise AssertionError(f"triple {cur} broke the sum relation")
        steps.append((z, y - x))
        cur = tuple(sorted((x, y, y - x)))
    return steps


def layered_solid_torus(p, q):
    """The layered solid torus whose meridian crosses the boundary edges
    |q|, |p| and |p - q| times."""
    triple = slope_triple(p, q)
    lt = lst_base()
    for (diagonal, inserted) in reversed(_down_walk(triple)):
        position = "abc"[lt.values.index(inserted)]
        lt = layer_on(lt, position)
        if lt.values[2] != diagonal:
            raise AssertionError("layering walk lost track of the diagonal")
    return lt


def lst_tet_count(p, q):
    return len(_down_walk(slope_triple(p, q))) + 1


def daisy_graph(n):
    """Dual graph of the n-tet layered solid torus: a loop at node 0 and
    doubled arcs along the path 0-1-...-(n-1)."""
    if n < 1:
        raise ValueError("need at least one node")
    g = MultiGraph(n)
    g.add_arc(0, 0)
    for i in range(n - 1):
        g.add_arc(i, i + 1, 2)
    return g


def daisy_embedding(n):
    """Carving tree witnessing congestion 2 (1 when n = 2): the spine
    caterpillar in path order."""
    return caterpillar_embedding(daisy_graph(n))
