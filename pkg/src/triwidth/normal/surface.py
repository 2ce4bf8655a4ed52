"""Geometric realisation of a normal coordinate vector.

The surface is assembled as an explicit cell complex:

--> discs: one triangle disc per unit of tri[t][v], one quad disc per
    unit of quad[t][k];
--> arcs: intersections of disc boundaries with the faces, indexed by
    (tet, face, corner, depth) where depth counts inward from the corner;
--> points: intersections with the edges, indexed (tet, edge, position)
    with positions counted from the smaller vertex label.

Arcs on glued faces are identified at equal corner depth, points by
position (flipped when the gluing reverses the edge).  Euler
characteristic, connectedness, closedness and orientability all fall out
of the complex; orientability is a parity 2-colouring of discs with a
constraint per interior arc (the two traversals must run opposite ways).
"""

from ..triangulation import SurfaceSummary
from .coords import matching_ok, quad_constraint_ok
from .quads import QUAD_SIDES, quad_type_of_pair


class SurfaceCells:
    """The assembled complex; produced by surface_cells()."""

    def __init__(self):
        self.discs = []
        self.arc_class_of = {}
        self.arc_classes = []
        self.point_class_of = {}
        self.point_classes = []
        self.disc_boundaries = {}
        self.boundary_arc_classes = set()

    def counts(self):
        return (
            len(self.point_classes),
            len(self.arc_classes),
            len(self.discs),
        )


def _arc_point_on(tri_coords, t, f, v, i, other):
    e = (v, other) if v < other else (other, v)
    m = tri_coords.edge_weight(t, e)
    idx = i if v == e[0] else m - 1 - i
    return (t, e, idx)


def _disc_of_arc(coords, t, f, v, i):
    if i < coords.tri(t, v):
        return ("tri", t, v, i)
    k = quad_type_of_pair(v, f)
    jj = i - coords.tri(t, v)
    if v in QUAD_SIDES[k][0]:
        j = jj
    else:
        j = coords.quad(t, k) - 1 - jj
    return ("quad", t, k, j)


def _quad_arc_instance(coords, t, k, j, face, corner):
    """Arc index of quad (t,k,j)'s arc at `corner` on `face`."""
    if corner in QUAD_SIDES[k][0]:
        depth = coords.tri(t, corner) + j
    else:
        depth = coords.tri(t, corner) + coords.quad(t, k) - 1 - j
    return (t, face, corner, depth)


def _disc_boundary(coords, disc):
    """Ordered boundary: list of (arc_key, start_point, end_point) in the
    disc's reference orientation."""
    kind = disc[0]
    out = []
    if kind == "tri":
        _, t, v, j = disc
        x0, x1, x2 = [x for x in range(4) if x != v]
        cycle = [(x0, x1, x2), (x1, x2, x0), (x2, x0, x1)]
        for (s, e, opposite) in cycle:
            arc = (t, opposite, v, j)
            start = _arc_point_on(coords, t, opposite, v, j, s)
            end = _arc_point_on(coords, t, opposite, v, j, e)
            out.append((arc, start, end))
    else:
        _, t, k, j = disc
        p0, p1 = QUAD_SIDES[k][0]
        q0, q1 = QUAD_SIDES[k][1]
        # cycle of corner-vertex/face steps:
        #   point(p0,q0) -[face q1, corner q0]- point(p1,q0)
        #   -[face p0, corner p1]- point(p1,q1) -[face q0, corner q1]-
        #   point(p0,q1) -[face p1, corner p0]- point(p0,q0)
        steps = [
            (q1, q0, (p0, q0), (p1, q0)),
            (p0, p1, (p1, q0), (p1, q1)),
            (q0, q1, (p1, q1), (p0, q1)),
            (p1, p0, (p0, q1), (p0, q0)),
        ]
        for face, corner, (sa, sb), (ea, eb) in steps:
            arc = _quad_arc_instance(coords, t, k, j, face, corner)
            start = _point_on_edge(coords, t, sa, sb, k, j)
            end = _point_on_edge(coords, t, ea, eb, k, j)
            out.append((arc, start, end))
    return out


def _point_on_edge(coords, t, a, b, k, j):
    """Point key of quad copy j of type k on edge {a, b} (which the quad
    crosses; a is on the {0, k+1} side)."""
    e = (a, b) if a < b else (b, a)
    # distance from the P-side endpoint a: tri[a] + j
    idx_from_a = coords.tri(t, a) + j
    m = coords.edge_weight(t, e)
    idx = idx_from_a if a == e[0] else m - 1 - idx_from_a
    return (t, e, idx)


class _ParityUF:
    def __init__(self):
        self.parent = {}
        self.off = {}
        self.consistent = True

    def add(self, x):
        if x not in self.parent:
            self.parent[x] = x
            self.off[x] = 0

    def find(self, x):
        self.add(x)
        path = []
        root = x
        while self.parent[root] != root:
            path.append(root)
            root = self.parent[root]
        par = 0
        for node in reversed(path):
            par ^= self.off[node]
            self.off[node] = par
            self.parent[node] = root
        return root, self.off[x]

    def union(self, x, y, rel):
        rx, px = self.find(x)
        ry, py = self.find(y)
        if rx == ry:
            if px ^ py != rel:
                self.consistent = False
            return
        self.parent[rx] = ry
        self.off[rx] = px ^ py ^ rel


class _PlainUF:
    def __init__(self):
        self.parent = {}

    def add(self, x):
        if x not in self.parent:
            self.parent[x] = x

    def find(self, x):
        self.add(x)
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x, y):
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            self.parent[rx] = ry

    def classes(self):
        groups = {}
        for x in self.parent:
            groups.setdefault(self.find(x), []).append(x)
        return sorted(sorted(g) for g in groups.values())


def surface_cells(tri, coords):
    """Assemble the cell complex of an admissible matching vector."""
    if not quad_constraint_ok(coords):
        raise ValueError("coordinates mix quad types in one tetrahedron")
    if not matching_ok(tri, coords):
        raise ValueError("coordinates violate the matching equations")

    cells = SurfaceCells()

    for t in range(tri.tet_count):
        for v in range(4):
            for j in range(coords.tri(t, v)):
                cells.discs.append(("tri", t, v, j))
        for k in range(3):
            for j in range(coords.quad(t, k)):
                cells.discs.append(("quad", t, k, j))

    for disc in cells.discs:
        cells.disc_boundaries[disc] = _disc_boundary(coords, disc)

    # arc instances and their owning discs
    arc_instances = []
    owner = {}
    for disc, boundary in cells.disc_boundaries.items():
        for arc, _s, _e in boundary:
            if arc in owner:
                raise AssertionError(f"arc {arc} claimed twice")
            owner[arc] = disc
            arc_instances.append(arc)

    # identify arcs and points across gluings
    arc_uf = _PlainUF()
    point_uf = _PlainUF()
    for arc in arc_instances:
        arc_uf.add(arc)
    point_map = {}
    for (t, f), (t2, f2, perm) in tri.gluings.items():
        for v in range(4):
            if v == f:
                continue
            for i in range(coords.arc_count(t, v, f)):
                arc_uf.union((t, f, v, i), (t2, f2, perm(v), i))
        for e in ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)):
            if f in e:
                continue
            m = coords.edge_weight(t, e)
            img = tuple(sorted((perm(e[0]), perm(e[1]))))
            flip = perm(e[0]) != img[0]
            for p in range(m):
                p2 = m - 1 - p if flip else p
                point_uf.union((t, e, p), (t2, img, p2))
                point_map[((t, f), (t, e, p))] = (t2, img, p2)

    for disc, boundary in cells.disc_boundaries.items():
        for arc, s, e in boundary:
            point_uf.add(s)
            point_uf.add(e)

    cells.arc_classes = arc_uf.classes()
    cells.point_classes = point_uf.classes()
    for cls in cells.arc_classes:
        for a in cls:
            cells.arc_class_of[a] = tuple(cls[0])
    for cls in cells.point_classes:
        for p in cls:
            cells.point_class_of[p] = tuple(cls[0])

    # boundary arcs: instances on unglued faces, in singleton classes
    for cls in cells.arc_classes:
        if len(cls) == 1:
            t, f, v, i = cls[0]
            if (t, f) in tri.gluings:
                raise AssertionError(
                    f"interior arc {cls[0]} failed to pair"
                )
            cells.boundary_arc_classes.add(tuple(cls[0]))
        elif len(cls) != 2:
            raise AssertionError(f"arc class with {len(cls)} members")

    cells._owner = owner
    cells._point_map = point_map
    return cells


def build_surface(tri, coords):
    """SurfaceSummary of the normal surface with the given coordinates."""
    if coords.is_zero():
        return SurfaceSummary(
            components=0, euler=0, closed=True, orientable=True, pieces=[]
        )
    cells = surface_cells(tri, coords)
    owner = cells._owner

    comp_uf = _PlainUF()
    for disc in cells.discs:
        comp_uf.add(disc)
    for cls in cells.arc_classes:
        if len(cls) == 2:
            comp_uf.union(owner[tuple(cls[0])], owner[tuple(cls[1])])

    # orientability: parity union-find over discs
    par = _ParityUF()
    for disc in cells.discs:
        par.add(disc)
    direction = {}
    for disc, boundary in cells.disc_boundaries.items():
        for arc, s, e in boundary:
            direction[arc] = (s, e)
    for cls in cells.arc_classes:
        if len(cls) != 2:
            continue
        a1, a2 = tuple(cls[0]), tuple(cls[1])
        d1, d2 = owner[a1], owner[a2]
        s1, e1 = direction[a1]
        s2, e2 = direction[a2]
        t1, f1 = a1[0], a1[1]
        s1_img = cells._point_map[((t1, f1), s1)]
        e1_img = cells._point_map[((t1, f1), e1)]
        if s1_img == e2 and e1_img == s2:
            rel = 0  # opposite traversal: same orientation class
        elif s1_img == s2 and e1_img == e2:
            rel = 1
        else:
            raise AssertionError(f"arc endpoints fail to correspond: {cls}")
        par.union(d1, d2, rel)

    # group cells by component
    comp_of_disc = {d: comp_uf.find(d) for d in cells.discs}
    comp_ids = sorted(set(comp_of_disc.values()))
    piece_data = {
        c: {"discs": 0, "arcs": 0, "points": 0, "boundary": 0} for c in comp_ids
    }
    for d in cells.discs:
        piece_data[comp_of_disc[d]]["discs"] += 1
    for cls in cells.arc_classes:
        c = comp_of_disc[owner[tuple(cls[0])]]
        piece_data[c]["arcs"] += 1
        if len(cls) == 1:
            piece_data[c]["boundary"] += 1
    comp_of_point = {}
    for disc, boundary in cells.disc_boundaries.items():
        for arc, s, e in boundary:
            comp_of_point[cells.point_class_of[s]] = comp_of_disc[disc]
            comp_of_point[cells.point_class_of[e]] = comp_of_disc[disc]
    for cls in cells.point_classes:
        rep = tuple(cls[0])
        if rep not in comp_of_point:
            raise AssertionError(f"point class {cls} touches no arc")
        piece_data[comp_of_point[rep]]["points"] += 1

    # orientability per component: recheck parity consistency separately
    orient_broken = set()
    if not par.consistent:
        # pin down which components broke: redo unions per component
        for c in comp_ids:
            p2 = _ParityUF()
            for cls in cells.arc_classes:
                if len(cls) != 2:
                    continue
                a1, a2 = tuple(cls[0]), tuple(cls[1])
                if comp_of_disc[owner[a1]] != c:
                    continue
                s1, e1 = direction[a1]
                s2, e2 = direction[a2]
                s1_img = cells._point_map[((a1[0], a1[1]), s1)]
                d1, d2 = owner[a1], owner[a2]
                rel = 0 if s1_img == e2 else 1
                p2.union(d1, d2, rel)
            if not p2.consistent:
                orient_broken.add(c)

    pieces = []
    for c in comp_ids:
        d = piece_data[c]
        euler = d["points"] - d["arcs"] + d["discs"]
        pieces.append({
            "euler": euler,
            "orientable": c not in orient_broken,
            "closed": d["boundary"] == 0,
            "discs": d["discs"],
        })
    pieces.sort(key=lambda p: (p["discs"], p["euler"]))
    return SurfaceSummary(
        components=len(pieces),
        euler=sum(p["euler"] for p in pieces),
        closed=all(p["closed"] for p in pieces),
        orientable=all(p["orientable"] for p in pieces),
        pieces=pieces,
    )

