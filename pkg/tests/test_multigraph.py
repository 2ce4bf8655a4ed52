import io

import pytest

from triwidth.multigraph import MultiGraph, read_gr, write_dot, write_gr


def test_basic_counts():
    g = MultiGraph(3, [(0, 1), (1, 0), (1, 2), (2, 2)])
    assert g.arc_count() == 4
    assert g.multiplicity(0, 1) == 2
    assert g.multiplicity(1, 0) == 2
    assert g.degree(0) == 2
    assert g.degree(1) == 3
    assert g.degree(2) == 3  # one arc + one loop
    assert g.loop_count(2) == 1
    assert g.distinct_neighbours(1) == {0, 2}
    assert g.distinct_neighbours(2) == {1}


def test_remove_arc():
    g = MultiGraph(2, [(0, 1), (0, 1)])
    g.remove_arc(1, 0)
    assert g.multiplicity(0, 1) == 1
    g.remove_arc(0, 1)
    with pytest.raises(ValueError):
        g.remove_arc(0, 1)


def test_components():
    g = MultiGraph(5, [(0, 1), (2, 3)])
    assert g.components() == [[0, 1], [2, 3], [4]]
    assert not g.is_connected()
    g.add_arc(1, 2)
    g.add_arc(3, 4)
    assert g.is_connected()


def test_simplify():
    g = MultiGraph(3, [(0, 1), (0, 1), (1, 1), (1, 2)])
    s = g.simplify()
    assert s.arc_count() == 2
    assert s.multiplicity(0, 1) == 1
    assert s.loop_count(1) == 0


def test_neighbour_masks():
    g = MultiGraph(3, [(0, 1), (0, 1), (1, 1)])
    assert g.neighbour_masks() == [0b010, 0b001, 0b000]


def test_induced():
    g = MultiGraph(4, [(0, 1), (1, 2), (2, 3), (3, 3)])
    sub, old = g.induced([1, 3])
    assert old == [1, 3]
    assert sub.node_count == 2
    assert sub.arc_count() == 1  # just the loop at 3
    assert sub.loop_count(1) == 1


def test_gr_round_trip():
    g = MultiGraph(4, [(0, 1), (0, 1), (2, 2), (1, 3)])
    buf = io.StringIO()
    write_gr(g, buf)
    back = read_gr(io.StringIO(buf.getvalue()))
    assert back == g


def test_gr_header_mismatch():
    with pytest.raises(ValueError):
        read_gr(io.StringIO("p tw 2 2\n1 2\n"))


def test_gr_comments_ok():
    g = read_gr(io.StringIO("c hello\np tw 2 1\nc mid\n1 2\n"))
    assert g == MultiGraph(2, [(0, 1)])


def test_dot_export_mentions_all():
    g = MultiGraph(3, [(0, 1), (1, 1)])
    buf = io.StringIO()
    write_dot(g, buf)
    text = buf.getvalue()
    assert "0 -- 1" in text
    assert "1 -- 1" in text
    assert "2;" in text  # isolated node declared


def test_equality_is_bit_exact():
    a = MultiGraph(2, [(0, 1), (0, 1)])
    b = MultiGraph(2, [(0, 1)])
    assert a != b
    b.add_arc(0, 1)
    assert a == b
