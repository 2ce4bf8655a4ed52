import pytest

from triwidth.multigraph import MultiGraph
from triwidth.normal.coords import NormalCoords
from triwidth.normal.crush import crush, crush_dual
from triwidth.normal.ddenum import enumerate_vertex_surfaces
from triwidth.normal.pipeline import crush_candidates, one_vertex_pipeline
from triwidth.width.immersion import CrushCertificate, apply_certificate

from trifixtures import (
    capped_base,
    dual_triangle,
    identity_double,
    pair_chain,
    snapped_solid_torus,
)


def test_crush_lone_quad_empties_snapped_base():
    tri = snapped_solid_torus()
    crushed, tet_map = crush(tri, NormalCoords(1, [0, 0, 0, 0, 0, 1, 0]))
    assert crushed.tet_count == 0
    assert tet_map == []


def test_crush_dual_lone_quad_certificate():
    tri = snapped_solid_torus()
    graph, cert = crush_dual(tri, NormalCoords(1, [0, 0, 0, 0, 0, 1, 0]))
    assert graph == MultiGraph(0)
    assert cert.steps == [
        {"op": "removeArc", "u": 0, "v": 0},
        {"op": "removeNode", "v": 0},
    ]
    assert apply_certificate(tri.dual_graph(), cert) == graph


def test_crush_requires_valid_coords():
    tri = snapped_solid_torus()
    with pytest.raises(ValueError):
        crush(tri, NormalCoords(1, [0, 0, 0, 0, 1, 1, 0]))
    with pytest.raises(ValueError):
        crush(tri, NormalCoords(1, [1, 0, 0, 0, 0, 0, 0]))
    with pytest.raises(ValueError):
        crush(tri, NormalCoords(2))


def test_crush_preserves_quadless_tets():
    # a surface with no quads destroys nothing
    tri = capped_base()
    link = NormalCoords(2, [1, 1, 1, 1, 0, 0, 0, 1, 1, 1, 1, 0, 0, 0])
    crushed, tet_map = crush(tri, link)
    assert tet_map == [0, 1]
    assert crushed.to_json() == tri.to_json()


@pytest.mark.parametrize(
    "make",
    [snapped_solid_torus, identity_double, capped_base, pair_chain,
     dual_triangle],
    ids=["snapped", "double", "capped", "pair", "triangle"],
)
def test_crush_diagram_commutes(make):
    # the triangulation-level crush, the graph-level crush, and the
    # certificate replay must all tell the same story
    tri = make()
    for coords in enumerate_vertex_surfaces(tri):
        if not coords.has_quad():
            continue
        crushed, tet_map = crush(tri, coords)
        crushed.validate()
        graph, cert = crush_dual(tri, coords)
        assert crushed.dual_graph() == graph
        assert apply_certificate(tri.dual_graph(), cert) == graph
        survivors = [
            t for t in range(tri.tet_count) if coords.quad_type(t) is None
        ]
        assert tet_map == survivors


@pytest.mark.parametrize(
    "make",
    [snapped_solid_torus, identity_double, capped_base],
    ids=["snapped", "double", "capped"],
)
def test_certificate_json_roundtrip(make):
    tri = make()
    for coords in enumerate_vertex_surfaces(tri):
        if not coords.has_quad():
            continue
        _graph, cert = crush_dual(tri, coords)
        back = CrushCertificate(cert.to_json())
        assert back == cert
        assert apply_certificate(tri.dual_graph(), back) == \
            apply_certificate(tri.dual_graph(), cert)


def test_crush_candidates_on_snapped_base():
    # the meridian disc qualifies; the moebius band and the annulus do not
    tri = snapped_solid_torus()
    cands = crush_candidates(tri)
    assert [tuple(c.values) for c in cands] == [(0, 0, 1, 1, 0, 0, 1)]


def test_pipeline_snapped_base_crushes_to_nothing():
    tri = snapped_solid_torus()
    pieces, history = one_vertex_pipeline(tri)
    assert pieces == []
    assert len(history) == 1
    assert history[0]["tets_before"] == 1
    assert history[0]["tets_after"] == 0


def test_pipeline_settles_without_candidates():
    tri = pair_chain()
    pieces, history = one_vertex_pipeline(tri)
    for piece in pieces:
        assert crush_candidates(piece) == []
    assert sum(h["tets_before"] - h["tets_after"] for h in history) == \
        tri.tet_count - sum(p.tet_count for p in pieces)
