"""Quadrilateral conventions, shared by coordinates, surfaces and crushing.

Quad type k in a tetrahedron separates vertices {0, k+1} from the other
two.  Everything downstream keys off this one table:

--> QUAD_SIDES[k]: the two vertex pairs split by type k.
--> quad_type_of_pair(a, b): the type whose separation has {a, b} as one
    of its sides; equivalently the type whose arcs cut off corner a on the
    face opposite b (and vice versa).  Arc counts at corner v of face f
    are tri[v] + quad[quad_type_of_pair(v, f)].
--> QUAD_EDGES[k]: the four edges met by type k (one crossing each).
--> PURSE_PAIRS[k]: when a tetrahedron carrying quads of type k is
    crushed, its boundary sphere flattens to two "purses": faces 0 and
    k+1 are identified by the transposition (0 k+1), and the other two
    faces x, y by the transposition (x y).  Each purse folds across one
    of the two edges missed by the quad.
"""

from ..perms import Permutation4

QUAD_SIDES = (
    ((0, 1), (2, 3)),
    ((0, 2), (1, 3)),
    ((0, 3), (1, 2)),
)

_PAIR_TYPE = {}
for _k, (_p, _q) in enumerate(QUAD_SIDES):
    _PAIR_TYPE[frozenset(_p)] = _k
    _PAIR_TYPE[frozenset(_q)] = _k


def quad_type_of_pair(a, b):
    return _PAIR_TYPE[frozenset((a, b))]


def quad_crosses_edge(k, e):
    """Type k meets edge e iff it separates e's endpoints."""
    side = set(QUAD_SIDES[k][0])
    return (e[0] in side) != (e[1] in side)


QUAD_EDGES = tuple(
    tuple(e for e in ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))
          if quad_crosses_edge(k, e))
    for k in range(3)
)


def _purse_pairs():
    out = []
    for k in range(3):
        a = (0, k + 1)
        b = tuple(x for x in (1, 2, 3) if x != k + 1)
        out.append((
            (a, Permutation4.transposition(*a)),
            (b, Permutation4.transposition(*b)),
        ))
    return tuple(out)


PURSE_PAIRS = _purse_pairs()


def purse_partner(k, f):
    """(partner_face, transposition) for face f of a type-k crushed tet."""
    for (faces, tau) in PURSE_PAIRS[k]:
        if f in faces:
            other = faces[0] if faces[1] == f else faces[1]
            return other, tau
    raise ValueError(f"face {f} out of range")
