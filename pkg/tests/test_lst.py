import pytest

from triwidth.gen.lst import (
    LayeredTorus,
    daisy_embedding,
    daisy_graph,
    layer_on,
    layered_solid_torus,
    lst_base,
    lst_tet_count,
    slope_triple,
)
from triwidth.multigraph import MultiGraph
from triwidth.normal.ddenum import enumerate_vertex_surfaces
from triwidth.normal.surface import build_surface, surface_cells
from triwidth.width.embedding import congestion, validate_embedding

from trifixtures import snapped_solid_torus


def meridian_values(lt):
    """Recompute the positioned meridian values from scratch: find the
    unique quad-carrying vertex normal disc and count its boundary point
    classes on each positioned edge class."""
    tri = lt.tri
    discs = []
    for coords in enumerate_vertex_surfaces(tri):
        if not coords.has_quad():
            continue
        s = build_surface(tri, coords)
        if (s.components, s.euler, s.closed, s.orientable) == \
                (1, 1, False, True):
            discs.append(coords)
    assert len(discs) == 1, f"expected one meridian disc, got {discs}"
    cells = surface_cells(tri, discs[0])
    position_of = {}
    for cls in tri.edge_classes():
        pos = lt.position_of_edge_class(cls)
        if pos is not None:
            for member in cls:
                position_of[member] = pos
    counts = {"a": 0, "b": 0, "c": 0}
    for pcls in cells.point_classes:
        positions = {position_of.get((t, e)) for (t, e, _i) in pcls}
        positions.discard(None)
        assert len(positions) <= 1, f"point class straddles classes: {pcls}"
        if positions:
            counts[positions.pop()] += 1
    return (counts["a"], counts["b"], counts["c"])


def check_solid_torus_shape(lt):
    tri = lt.tri
    tri.validate()
    assert sorted(tri.boundary_faces()) == [(lt.top, 0), (lt.top, 1)]
    boundary = tri.boundary_components()
    assert boundary.component_count() == 1
    piece = boundary.components[0]
    assert piece["triangles"] == 2
    assert piece["euler"] == 0
    assert piece["orientable"]
    assert piece["genus"] == 1
    links = tri.vertex_links()
    assert len(links) == 1
    assert links[0].euler == 1
    assert links[0].orientable
    # the three positions sit on three distinct boundary edge classes
    assert len(lt.edge_class_values()) == 3


def test_base_is_the_snapped_torus():
    lt = lst_base()
    assert lt.tri.to_json() == snapped_solid_torus().to_json()
    assert lt.top == 0
    assert lt.values == (1, 2, 3)
    check_solid_torus_shape(lt)
    assert meridian_values(lt) == (1, 2, 3)


@pytest.mark.parametrize("position", ["a", "b", "c"])
def test_single_layer_is_valid_and_tracked(position):
    lt = layer_on(lst_base(), position)
    assert lt.tri.tet_count == 2
    assert lt.top == 1
    check_solid_torus_shape(lt)
    assert meridian_values(lt) == lt.values


@pytest.mark.parametrize(
    "sequence",
    [
        "ab", "ac", "ba", "bc", "aa", "bb", "abc", "baa",
    ],
)
def test_layer_sequences_track_meridian(sequence):
    lt = lst_base()
    for position in sequence:
        lt = layer_on(lt, position)
    assert lt.tri.tet_count == 1 + len(sequence)
    check_solid_torus_shape(lt)
    assert meridian_values(lt) == lt.values


def test_slope_triples():
    assert slope_triple(2, -1) == (1, 2, 3)
    assert slope_triple(3, 1) == (1, 2, 3)
    assert slope_triple(5, 2) == (2, 3, 5)
    assert slope_triple(-3, 1) == (1, 3, 4)
    with pytest.raises(ValueError):
        slope_triple(4, 2)
    with pytest.raises(ValueError):
        slope_triple(1, 0)
    with pytest.raises(ValueError):
        slope_triple(2, 1)
    with pytest.raises(ValueError):
        slope_triple(1, -1)


@pytest.mark.parametrize(
    "p, q, tets",
    [(3, 1, 1), (2, -1, 1), (5, 2, 2), (4, 1, 2), (7, 2, 3), (8, 3, 3),
     (12, 5, 4)],
)
def test_layered_solid_torus_slopes(p, q, tets):
    lt = layered_solid_torus(p, q)
    assert lt.tri.tet_count == tets
    assert lst_tet_count(p, q) == tets
    assert lt.meridian_triple() == slope_triple(p, q)
    check_solid_torus_shape(lt)
    assert meridian_values(lt) == lt.values


def test_lst_dual_graph_is_daisy():
    for p, q, n in [(5, 2, 2), (7, 2, 3), (12, 5, 4)]:
        lt = layered_solid_torus(p, q)
        assert lt.tri.dual_graph() == daisy_graph(n)


def test_daisy_graph_shape():
    g = daisy_graph(4)
    assert g.node_count == 4
    assert g.multiplicity(0, 0) == 1
    for i in range(3):
        assert g.multiplicity(i, i + 1) == 2
    assert g.arc_count() == 7
    with pytest.raises(ValueError):
        daisy_graph(0)


def test_daisy_embedding_witnesses_two():
    for n in [2, 3, 4, 7, 40, 200]:
        g = daisy_graph(n)
        emb = daisy_embedding(n)
        validate_embedding(g, emb)
        assert congestion(g, emb) == (1 if n == 2 else 2)
