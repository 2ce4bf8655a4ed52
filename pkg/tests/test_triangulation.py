import io

import pytest

from triwidth.perms import Permutation4
from triwidth.triangulation import Triangulation


def lone_tet():
    return Triangulation(1)


def snapped_solid_torus():
    """One tetrahedron, face 3 folded onto face 2 around the edge {0,1}
    twisted by one notch: the 1-tet layered solid torus core."""
    tri = Triangulation(1)
    tri.add_gluing(0, 3, 0, 2, Permutation4((3, 0, 1, 2)))
    return tri


def two_tet_ball():
    tri = Triangulation(2)
    tri.add_gluing(0, 0, 1, 0, Permutation4((0, 1, 2, 3)))
    return tri


def test_lone_tet_structure():
    tri = lone_tet()
    tri.validate()
    assert len(tri.vertex_classes()) == 4
    assert len(tri.edge_classes()) == 6
    assert len(tri.boundary_faces()) == 4
    assert not tri.is_closed()
    g = tri.dual_graph()
    assert g.node_count == 1 and g.arc_count() == 0
    b = tri.boundary_components()
    assert b.component_count() == 1
    comp = b.components[0]
    assert comp["triangles"] == 4
    assert comp["euler"] == 2
    assert comp["orientable"] and comp["genus"] == 0
    for link in tri.vertex_links():
        assert link.euler == 1 and not link.closed


def test_two_tet_ball():
    tri = two_tet_ball()
    tri.validate()
    assert len(tri.vertex_classes()) == 5
    assert len(tri.edge_classes()) == 9
    b = tri.boundary_components()
    assert b.component_count() == 1
    assert b.components[0]["triangles"] == 6
    assert b.components[0]["euler"] == 2
    g = tri.dual_graph()
    assert g.node_count == 2 and g.multiplicity(0, 1) == 1


def test_snapped_solid_torus_invariants():
    tri = snapped_solid_torus()
    tri.validate()
    assert len(tri.vertex_classes()) == 1
    ecs = tri.edge_classes()
    assert len(ecs) == 3
    sizes = sorted(len(c) for c in ecs)
    assert sizes == [1, 2, 3]
    assert [(0, (2, 3))] in ecs  # the boundary-only edge is its own class
    b = tri.boundary_components()
    assert b.component_count() == 1
    comp = b.components[0]
    assert comp["triangles"] == 2
    assert comp["euler"] == 0
    assert comp["orientable"] and comp["genus"] == 1  # torus boundary
    link = tri.vertex_links()[0]
    assert link.euler == 1 and not link.closed and link.orientable
    g = tri.dual_graph()
    assert g.node_count == 1 and g.loop_count(0) == 1


def test_gluing_validation():
    tri = Triangulation(2)
    with pytest.raises(ValueError, match="send face"):
        tri.add_gluing(0, 0, 1, 1, Permutation4((0, 1, 2, 3)))
    with pytest.raises(ValueError, match="itself"):
        tri.add_gluing(0, 0, 0, 0, Permutation4((0, 1, 2, 3)))
    tri.add_gluing(0, 0, 1, 0, Permutation4((0, 1, 2, 3)))
    with pytest.raises(ValueError, match="already glued"):
        tri.add_gluing(0, 0, 1, 1, Permutation4((1, 0, 2, 3)))


def test_validate_detects_tampering():
    tri = two_tet_ball()
    t2, f2, perm = tri.gluings[(0, 0)]
    tri.gluings[(1, 0)] = (0, 0, Permutation4((0, 2, 1, 3)))  # not inverse
    with pytest.raises(ValueError, match="inverse"):
        tri.validate()


def test_edge_walk_lst_base():
    tri = snapped_solid_torus()
    t2, f2, e2, psi = tri.edge_walk(0, 0, (2, 3))
    assert (t2, f2) == (0, 1)
    assert e2 == (2, 3)
    # the walk crossed no gluing
    assert psi.is_identity()
    # a side of the big 3-instance class: from face 0 edge {1,2}
    t2, f2, e2, psi = tri.edge_walk(0, 0, (1, 2))
    assert (t2, f2) == (0, 1)
    assert e2 in ((0, 2), (0, 3))


def test_json_round_trip():
    tri = snapped_solid_torus()
    buf = io.StringIO()
    tri.write(buf)
    back = Triangulation.read(io.StringIO(buf.getvalue()))
    assert back == tri
    assert back.kind == "finite"


def test_ideal_kind_round_trip():
    tri = Triangulation(1, kind="ideal")
    data = tri.to_json()
    assert Triangulation.from_json(data).kind == "ideal"


def test_split_components():
    tri = Triangulation(3)
    tri.add_gluing(0, 0, 2, 0, Permutation4((0, 1, 2, 3)))
    pieces = tri.split_components()
    assert len(pieces) == 2
    (a, amap), (b, bmap) = pieces
    assert amap == [0, 2] and bmap == [1]
    assert a.tet_count == 2 and len(a.gluings) == 2
    assert b.tet_count == 1


def test_kind_checked():
    with pytest.raises(ValueError):
        Triangulation(1, kind="whatever")
