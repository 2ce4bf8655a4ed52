"""Generalised triangulations of 3-manifolds.

A triangulation is a set of abstract tetrahedra 0..n-1 with some faces
glued in pairs by affine maps.  Conventions:

--> Vertices of a tetrahedron are labelled 0..3.
--> Face i is the face opposite vertex i (so face i carries the three
    vertices other than i).
--> Edges are the six unordered vertex pairs.
--> A gluing of face f of tet t to face f2 of tet t2 is recorded with a
    Permutation4 phi on vertex labels satisfying phi(f) = f2; the two
    vertices x != f of t on the face go to phi(x) on the target face.
    Both directions are stored; the reverse carries phi^-1.

Gluings may join two faces of the same tetrahedron but never a face to
itself.  Unglued faces form the boundary.  kind is "finite" (material
vertices) or "ideal" (vertices are cusps, links read as cusp
cross-sections).  Pinched vertices and edges are permitted: this is the
generalised setting, nothing here assumes the result is a manifold.
"""

import json

from .multigraph import MultiGraph
from .perms import Permutation4


class Triangulation:
    def __init__(self, tet_count, kind="finite"):
        if tet_count < 0:
            raise ValueError("tet_count must be >= 0")
        if kind not in ("finite", "ideal"):
            raise ValueError(f"kind must be 'finite' or 'ideal', got {kind!r}")
        self.tet_count = tet_count
        self.kind = kind
        # (tet, face) -> (tet2, face2, Permutation4), both directions
        self.gluings = {}

    # -- construction -----------------------------------------------------

    def _check_face(self, t, f):
        if not 0 <= t < self.tet_count:
            raise ValueError(f"tet {t} out of range")
        if not 0 <= f < 4:
            raise ValueError(f"face {f} out of range")

    def add_gluing(self, t, f, t2, f2, perm):
        if not isinstance(perm, Permutation4):
            perm = Permutation4(perm)
        self._check_face(t, f)
        self._check_face(t2, f2)
        if (t, f) == (t2, f2):
            raise ValueError(f"cannot glue face ({t},{f}) to itself")
        if perm(f) != f2:
            raise ValueError(
                f"gluing perm must send face index {f} to {f2}, got {perm(f)}"
            )
        if (t, f) in self.gluings:
            raise ValueError(f"face ({t},{f}) is already glued")
        if (t2, f2) in self.gluings:
            raise ValueError(f"face ({t2},{f2}) is already glued")
        self.gluings[(t, f)] = (t2, f2, perm)
        self.gluings[(t2, f2)] = (t, f, perm.inverse())

    def remove_gluing(self, t, f):
        if (t, f) not in self.gluings:
            raise ValueError(f"face ({t},{f}) is not glued")
        t2, f2, _ = self.gluings.pop((t, f))
        del self.gluings[(t2, f2)]

    def face_partner(self, t, f):
        """(tet2, face2, perm) or None for a boundary face."""
        return self.gluings.get((t, f))

    def validate(self):
        """Internal consistency check; raises ValueError on breakage."""
        for (t, f), (t2, f2, perm) in self.gluings.items():
            self._check_face(t, f)
            self._check_face(t2, f2)
            if perm(f) != f2:
                raise ValueError(f"gluing ({t},{f}): perm does not send face")
            back = self.gluings.get((t2, f2))
            if back is None or back[0] != t or back[1] != f:
                raise ValueError(f"gluing ({t},{f}) has no matching reverse")
            if back[2] != perm.inverse():
                raise ValueError(f"gluing ({t},{f}) reverse perm is not inverse")

    # -- basic structure --------------------------------------------------

    def boundary_faces(self):
        return [
            (t, f)
            for t in range(self.tet_count)
            for f in range(4)
            if (t, f) not in self.gluings
        ]

    def is_closed(self):
        return self.kind == "finite" and not self.boundary_faces()

    def dual_graph(self):
        """Node per tetrahedron, arc per face gluing (loops allowed)."""
        g = MultiGraph(self.tet_count)
        for (t, f), (t2, f2, _perm) in self.gluings.items():
            if (t, f) < (t2, f2):
                g.add_arc(t, t2)
        return g

    def vertex_classes(self):
        """Vertex identifications: sorted list of sorted [(tet, vertex)]."""
        uf = _UnionFind()
        for t in range(self.tet_count):
            for v in range(4):
                uf.add((t, v))
        for (t, f), (t2, _f2, perm) in self.gluings.items():
            for v in range(4):
                if v != f:
                    uf.union((t, v), (t2, perm(v)))
        return uf.classes()

    def edge_classes(self):
        """Edge identifications: sorted list of sorted [(tet, (a, b))]."""
        uf = _UnionFind()
        for t in range(self.tet_count):
            for e in EDGES:
                uf.add((t, e))
        for (t, f), (t2, _f2, perm) in self.gluings.items():
            for e in EDGES:
                if f not in e:
                    img = (perm(e[0]), perm(e[1]))
                    img = (min(img), max(img))
                    uf.union((t, e), (t2, img))
        return uf.classes()

    # -- boundary surface -------------------------------------------------

    def edge_walk(self, t, f, e):
        """Rotate around edge e of tet t, starting across the face of t
        containing e other than f, until an unglued face is reached.

        Pre-condition: (t, f) is an unglued face and e is an edge of it.
        Returns (t2, f2, e2, psi): the partner boundary side and the
        accumulated Permutation4 from t's labels to t2's labels.
        """
        if (t, f) in self.gluings:
            raise ValueError(f"({t},{f}) is not a boundary face")
        if f in e:
            raise ValueError(f"edge {e} is not on face {f}")
        psi = Permutation4.identity()
        cur_t, cur_e = t, e
        block = f
        while True:
            faces = [x for x in range(4) if x not in cur_e and x != block]
            g = faces[0]
            hit = self.gluings.get((cur_t, g))
            if hit is None:
                return cur_t, g, cur_e, psi
            t3, g3, perm = hit
            psi = perm * psi
            cur_t = t3
            cur_e = tuple(sorted((perm(cur_e[0]), perm(cur_e[1]))))
            block = g3

    def boundary_components(self):
        """Connected pieces of the boundary surface.

        Returns a BoundarySummary.  Each unglued face is a boundary
        triangle; sides are matched by rotating around edges through the
        interior.  Works for both kinds; for ideal triangulations this is
        the face boundary (cusps are vertex links, not boundary here).
        """
        faces = self.boundary_faces()
        corner_uf = _UnionFind()
        tri_uf = _UnionFind()
        side_pairs = {}
        for (t, f) in faces:
            tri_uf.add((t, f))
            for v in range(4):
                if v != f:
                    corner_uf.add((t, f, v))
        for (t, f) in faces:
            for e in EDGES:
                if f in e:
                    continue
                if (t, f, e) in side_pairs:
                    continue
                t2, f2, e2, psi = self.edge_walk(t, f, e)
                side_pairs[(t, f, e)] = (t2, f2, e2, psi)
                side_pairs[(t2, f2, e2)] = (t, f, e, psi.inverse())
                tri_uf.union((t, f), (t2, f2))
                for v in e:
                    corner_uf.union((t, f, v), (t2, f2, psi(v)))

        components = []
        for tris in tri_uf.classes():
            tri_set = set(tris)
            F = len(tris)
            # every side is paired with another boundary side: E = 3F/2
            E = (3 * F) // 2
            corners = [c for c in corner_uf.classes() if (c[0][0], c[0][1]) in tri_set]
            V = len(corners)
            euler = V - E + F
            orient = _boundary_orientable(tris, side_pairs)
            comp = {
                "triangles": F,
                "vertices": V,
                "euler": euler,
                "orientable": orient,
                "genus": (2 - euler) // 2 if orient else None,
                "crosscaps": None if orient else 2 - euler,
            }
            components.append(comp)
        components.sort(key=lambda c: (c["triangles"], c["euler"]))
        return BoundarySummary(components)

    # -- vertex links -----------------------------------------------------

    def vertex_links(self):
        """SurfaceSummary of the link of each vertex class, in
        vertex_classes() order.

        The link of (t, v) is the normal triangle cutting off v; its sides
        sit on the faces of t containing v and match across gluings.  For
        ideal triangulations these are the cusp cross-sections.
        """
        out = []
        for cls in self.vertex_classes():
            out.append(self._link_of_class(cls))
        return out

    def _link_of_class(self, cls):
        members = set(cls)
        vert_uf = _UnionFind()
        side_gluings = []
        boundary_sides = 0
        for (t, v) in members:
            for e in EDGES:
                if v in e:
                    vert_uf.add((t, v, e))
        for (t, v) in members:
            for f in range(4):
                if f == v:
                    continue
                hit = self.gluings.get((t, f))
                if hit is None:
                    boundary_sides += 1
                    continue
                t2, f2, perm = hit
                key = ((t, v, f), (t2, perm(v), f2))
                if (key[1], key[0]) in side_gluings or key in side_gluings:
                    continue
                side_gluings.append(key)
                for e in EDGES:
                    if v in e and f not in e:
                        img = tuple(sorted((perm(e[0]), perm(e[1]))))
                        vert_uf.union((t, v, e), (t2, perm(v), img))
        F = len(members)
        total_sides = 3 * F
        interior = len(side_gluings)
        E = interior + boundary_sides
        V = len(vert_uf.classes())
        euler = V - E + F
        closed = boundary_sides == 0
        orient = _link_orientable(members, self.gluings)
        return SurfaceSummary(
            components=1,
            euler=euler,
            closed=closed,
            orientable=orient,
            pieces=[{
                "euler": euler,
                "orientable": orient,
                "closed": closed,
                "discs": F,
            }],
        )

    # -- components -------------------------------------------------------

    def split_components(self):
        """Split along dual-graph components.

        Returns a list of (Triangulation, tet_map) where tet_map[i] is the
        original index of tet i in that piece; pieces are ordered by their
        smallest original tet."""
        comps = self.dual_graph().components()
        out = []
        for nodes in comps:
            new_of_old = {old: new for new, old in enumerate(nodes)}
            piece = Triangulation(len(nodes), self.kind)
            for (t, f), (t2, f2, perm) in self.gluings.items():
                if t in new_of_old and (t, f) < (t2, f2):
                    piece.add_gluing(new_of_old[t], f, new_of_old[t2], f2, perm)
            out.append((piece, list(nodes)))
        return out

    # -- serialisation ----------------------------------------------------

    def to_json(self):
        glu = []
        for (t, f), (t2, f2, perm) in sorted(self.gluings.items()):
            if (t, f) < (t2, f2):
                glu.append([t, f, t2, f2, list(perm.image)])
        return {"tets": self.tet_count, "kind": self.kind, "gluings": glu}

    @staticmethod
    def from_json(data):
        tri = Triangulation(int(data["tets"]), data.get("kind", "finite"))
        for t, f, t2, f2, image in data["gluings"]:
            tri.add_gluing(t, f, t2, f2, Permutation4(image))
        return tri

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
        return Triangulation.from_json(data)

    def __eq__(self, other):
        return (
            isinstance(other, Triangulation)
            and self.tet_count == other.tet_count
            and self.kind == other.kind
            and self.gluings == other.gluings
        )

    def __repr__(self):
        return (
            f"Triangulation(tets={self.tet_count}, kind={self.kind!r}, "
            f"gluings={len(self.gluings) // 2})"
        )


EDGES = ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))


class BoundarySummary:
    def __init__(self, components):
        self.components = components

    def component_count(self):
        return len(self.components)

    def __repr__(self):
        return f"BoundarySummary({self.components!r})"


class SurfaceSummary:
    def __init__(self, components, euler, closed, orientable, pieces):
        self.components = components
        self.euler = euler
        self.closed = closed
        self.orientable = orientable
        self.pieces = pieces

    def is_torus_piece(self):
        return (
            self.components == 1
            and self.closed
            and self.orientable
            and self.euler == 0
        )

    def __repr__(self):
        return (
            f"SurfaceSummary(components={self.components}, euler={self.euler}, "
            f"closed={self.closed}, orientable={self.orientable})"
        )


class _UnionFind:
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


def _face_cycle(f):
    """Reference orientation of face f: directed side set of the even
    cyclic order of its three vertex labels."""
    c0, c1, c2 = [x for x in range(4) if x != f]
    return {(c0, c1), (c1, c2), (c2, c0)}


def _boundary_orientable(tris, side_pairs):
    """2-colourability of the boundary piece holding `tris`.

    Each triangle gets +-1 relative to its reference orientation; a side
    pairing keeps equal colours exactly when the directed side runs
    against the target's reference orientation (compatible gluing).
    """
    colour = {}
    for start in sorted(tris):
        if start in colour:
            continue
        colour[start] = 1
        stack = [start]
        while stack:
            t, f = stack.pop()
            c = colour[(t, f)]
            for e in EDGES:
                if f in e:
                    continue
                t2, f2, _e2, psi = side_pairs[(t, f, e)]
                a, b = e
                dir1 = (a, b) if (a, b) in _face_cycle(f) else (b, a)
                img = (psi(dir1[0]), psi(dir1[1]))
                want = c if img not in _face_cycle(f2) else -c
                if (t2, f2) not in colour:
                    colour[(t2, f2)] = want
                    stack.append((t2, f2))
                elif colour[(t2, f2)] != want:
                    return False
    return True


def _link_orientable(members, gluings):
    """2-colour the link triangles of one vertex class."""
    colour = {}
    items = sorted(members)
    for start in items:
        if start in colour:
            continue
        colour[start] = 1
        stack = [start]
        while stack:
            t, v = stack.pop()
            c = colour[(t, v)]
            for f in range(4):
                if f == v:
                    continue
                hit = gluings.get((t, f))
                if hit is None:
                    continue
                t2, f2, perm = hit
                v2 = perm(v)
                compatible = _link_side_compatible(v, f, perm)
                want = c if compatible else -c
                if (t2, v2) not in colour:
                    colour[(t2, v2)] = want
                    stack.append((t2, v2))
                elif colour[(t2, v2)] != want:
                    return False
    return True


def _link_side_compatible(v, f, perm):
    """Orientation bookkeeping for link triangles.

    The link triangle at vertex v has one corner per label x != v (the
    edge {v,x}) and one side per face f != v, joining the two corners
    {a, b} = face f minus v.  Orient every link triangle by the even
    cyclic order of its corner labels.  Matching side f to its image is
    orientation-compatible (equal colours) iff the directed side's image
    runs against the target's reference orientation.
    """
    corners = [x for x in range(4) if x != v]
    a, b = [x for x in corners if x != f]
    c0, c1, c2 = corners
    cyc = {(c0, c1), (c1, c2), (c2, c0)}
    dir1 = (a, b) if (a, b) in cyc else (b, a)

    v2 = perm(v)
    d0, d1, d2 = [x for x in range(4) if x != v2]
    cyc2 = {(d0, d1), (d1, d2), (d2, d0)}
    return (perm(dir1[0]), perm(dir1[1])) not in cyc2
