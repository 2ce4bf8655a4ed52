import pytest

from triwidth.normal.coords import NormalCoords, vertex_link_coords
from triwidth.normal.surface import build_surface, surface_cells
from triwidth.triangulation import Triangulation

from trifixtures import (
    capped_base,
    dual_triangle,
    identity_double,
    pair_chain,
    snapped_solid_torus,
)


def test_lone_tet_vertex_link():
    tri = Triangulation(1)
    s = build_surface(tri, vertex_link_coords(tri))
    assert s.components == 4
    assert s.euler == 4
    assert not s.closed
    assert s.orientable
    for p in s.pieces:
        assert p == {
            "euler": 1, "orientable": True, "closed": False, "discs": 1,
        }


def test_zero_coords_is_empty_surface():
    tri = Triangulation(1)
    s = build_surface(tri, NormalCoords(1))
    assert s.components == 0
    assert s.euler == 0
    assert s.closed and s.orientable
    assert s.pieces == []


def test_snapped_base_vertex_link_is_disc():
    # one vertex class whose link is a disc; 4 corner triangles,
    # V - E + F = 6 - 9 + 4 by hand
    tri = snapped_solid_torus()
    s = build_surface(tri, vertex_link_coords(tri))
    assert s.components == 1
    assert s.euler == 1
    assert not s.closed
    assert s.orientable
    cells = surface_cells(tri, vertex_link_coords(tri))
    assert cells.counts() == (6, 9, 4)


def test_snapped_base_lone_quad_is_moebius():
    # the type-1 quad alone: chi = 0, one boundary curve, one-sided
    tri = snapped_solid_torus()
    s = build_surface(tri, NormalCoords(1, [0, 0, 0, 0, 0, 1, 0]))
    assert s.components == 1
    assert s.euler == 0
    assert not s.closed
    assert not s.orientable


def test_snapped_base_meridian_disc():
    # triangles at corners 2 and 3 plus a type-2 quad: chi = 1 disc
    # (V, E, F) = (6, 8, 3) by hand
    tri = snapped_solid_torus()
    coords = NormalCoords(1, [0, 0, 1, 1, 0, 0, 1])
    s = build_surface(tri, coords)
    assert s.components == 1
    assert s.euler == 1
    assert not s.closed
    assert s.orientable
    assert surface_cells(tri, coords).counts() == (6, 8, 3)


def test_snapped_base_annulus():
    # triangles at corners 0 and 1 plus a type-0 quad: chi = 0,
    # two boundary curves, two-sided
    tri = snapped_solid_torus()
    s = build_surface(tri, NormalCoords(1, [1, 1, 0, 0, 1, 0, 0]))
    assert s.components == 1
    assert s.euler == 0
    assert not s.closed
    assert s.orientable


def test_doubling_a_surface_doubles_chi():
    tri = snapped_solid_torus()
    one = NormalCoords(1, [0, 0, 1, 1, 0, 0, 1])
    two = one.scaled(2)
    s1 = build_surface(tri, one)
    s2 = build_surface(tri, two)
    assert s2.components == 2 * s1.components
    assert s2.euler == 2 * s1.euler


def test_rejects_bad_coords():
    tri = snapped_solid_torus()
    mixed = NormalCoords(1, [0, 0, 0, 0, 1, 1, 0])
    with pytest.raises(ValueError):
        build_surface(tri, mixed)
    unmatched = NormalCoords(1, [1, 0, 0, 0, 0, 0, 0])
    with pytest.raises(ValueError):
        build_surface(tri, unmatched)


@pytest.mark.parametrize(
    "make",
    [snapped_solid_torus, identity_double, capped_base, pair_chain,
     dual_triangle],
    ids=["snapped", "double", "capped", "pair", "triangle"],
)
def test_vertex_link_cross_check(make):
    # build_surface on the full vertex link must agree with the direct
    # link computation piece by piece
    tri = make()
    links = tri.vertex_links()
    s = build_surface(tri, vertex_link_coords(tri))
    assert s.components == len(links)
    assert s.euler == sum(l.euler for l in links)
    got = sorted(
        (p["euler"], p["closed"], p["orientable"], p["discs"])
        for p in s.pieces
    )
    want = sorted(
        (l.euler, l.closed, l.orientable, l.pieces[0]["discs"])
        for l in links
    )
    assert got == want


def test_identity_double_vertex_links_are_spheres():
    tri = identity_double()
    s = build_surface(tri, vertex_link_coords(tri))
    assert s.components == 4
    assert s.euler == 8
    assert s.closed
    assert s.orientable
