import io

import pytest

from triwidth.normal.coords import (
    NormalCoords,
    matching_ok,
    matching_violations,
    quad_constraint_ok,
    read_coords,
    vertex_link_coords,
    write_coords,
)
from triwidth.normal.ddenum import matching_rows
from triwidth.normal.quads import (
    PURSE_PAIRS,
    QUAD_EDGES,
    QUAD_SIDES,
    purse_partner,
    quad_crosses_edge,
    quad_type_of_pair,
)

from trifixtures import identity_double, snapped_solid_torus


def test_quad_tables():
    assert QUAD_SIDES[0] == ((0, 1), (2, 3))
    assert QUAD_SIDES[1] == ((0, 2), (1, 3))
    assert QUAD_SIDES[2] == ((0, 3), (1, 2))
    for k in range(3):
        a, b = QUAD_SIDES[k]
        assert quad_type_of_pair(*a) == k
        assert quad_type_of_pair(*b) == k
        # the quad misses exactly the two within-side edges
        assert len(QUAD_EDGES[k]) == 4
        assert tuple(sorted(a)) not in QUAD_EDGES[k]
        assert tuple(sorted(b)) not in QUAD_EDGES[k]


def test_purse_pairs_cover_all_faces():
    for k in range(3):
        faces = []
        for (pair, tau) in PURSE_PAIRS[k]:
            faces.extend(pair)
            # the transposition swaps the two faces of the pair
            assert tau(pair[0]) == pair[1]
            assert tau(pair[1]) == pair[0]
            assert (tau * tau).is_identity()
        assert sorted(faces) == [0, 1, 2, 3]
        for f in range(4):
            partner, tau = purse_partner(k, f)
            assert partner != f
            assert tau(f) == partner


def test_coords_basics():
    c = NormalCoords(2)
    assert c.is_zero()
    c.set_tri(0, 2, 3)
    c.set_quad(1, 1, 5)
    assert c.tri(0, 2) == 3
    assert c.quad(1, 1) == 5
    assert c.has_quad()
    assert c.quad_type(1) == 1
    assert c.quad_type(0) is None
    c2 = c.copy()
    c2.set_quad(1, 0, 1)
    with pytest.raises(ValueError):
        c2.quad_type(1)
    assert not quad_constraint_ok(c2)
    assert quad_constraint_ok(c)
    assert (c + c).values == c.scaled(2).values


def test_coords_rejects_bad_input():
    with pytest.raises(ValueError):
        NormalCoords(1, [0] * 6)
    with pytest.raises(ValueError):
        NormalCoords(1, [0, 0, 0, -1, 0, 0, 0])


def test_arc_count_and_edge_weight():
    c = NormalCoords(1, [1, 1, 0, 0, 1, 0, 0])
    # corner 1 on face 0: one triangle plus the type-0 quad
    assert c.arc_count(0, 1, 0) == 2
    assert c.arc_count(0, 2, 0) == 0
    assert c.arc_count(0, 3, 0) == 0
    with pytest.raises(ValueError):
        c.arc_count(0, 0, 0)
    # type 0 misses edges (0,1) and (2,3)
    assert c.edge_weight(0, (0, 1)) == 2
    assert c.edge_weight(0, (2, 3)) == 0
    assert c.edge_weight(0, (0, 2)) == 2


def test_matching_on_snapped_base():
    tri = snapped_solid_torus()
    link = vertex_link_coords(tri)
    assert matching_ok(tri, link)
    bad = link.copy()
    bad.set_tri(0, 2, 2)
    assert not matching_ok(tri, bad)
    assert matching_violations(tri, bad)
    # hand solution: one quad of type 1 alone satisfies every equation
    quad = NormalCoords(1, [0, 0, 0, 0, 0, 1, 0])
    assert matching_ok(tri, quad)


def test_matching_rows_match_hand_derivation():
    # Against the fold (0,3) -> (0,2) with vertex map 0->3, 1->0, 2->1:
    # corner 0: T0 + Q2 = T3 + Q0; corner 1: T1 = T0;
    # corner 2: T2 + Q0 = T1 + Q2.  Columns: T_v = v, Q_k = 4 + k.
    expected = [
        {0: 1, 6: 1, 3: -1, 4: -1},
        {1: 1, 0: -1},
        {2: 1, 4: 1, 1: -1, 6: -1},
    ]

    def norm(row):
        lead = row[min(row)]
        sign = 1 if lead > 0 else -1
        return tuple(sorted((c, sign * x) for c, x in row.items()))

    got = matching_rows(snapped_solid_torus())
    assert {norm(r) for r in got} == {norm(r) for r in expected}


def test_matching_rows_identity_double():
    rows = matching_rows(identity_double())
    # four gluings, three corners each
    assert len(rows) == 12
    link = vertex_link_coords(identity_double())
    for row in rows:
        assert sum(x * link.values[c] for c, x in row.items()) == 0


def test_coords_io_roundtrip():
    c = NormalCoords(2, [1, 1, 0, 0, 1, 0, 0, 0, 0, 1, 1, 0, 0, 1])
    buf = io.StringIO()
    write_coords(c, buf)
    back = read_coords(io.StringIO(buf.getvalue()))
    assert back == c
    commented = "# comment\n" + buf.getvalue()
    assert read_coords(io.StringIO(commented)) == c
    with pytest.raises(ValueError):
        read_coords(io.StringIO("1 2 3\n"))
