"""Iterated crushing toward triangulations with no obvious cheap surface.

One round: enumerate vertex normal surfaces, keep the quad-carrying ones
that are embedded spheres (or discs, when the triangulation has
boundary), crush the lexicographically smallest, split the result into
connected pieces and recurse on each.  Pieces that crush to nothing are
dropped.  The rounds cap is a hard safety net; every crush destroys at
least one tetrahedron, so it is never reached on valid input.
"""

from .crush import crush
from .ddenum import enumerate_vertex_surfaces
from .surface import build_surface


def _crushable(tri, coords):
    if not coords.has_quad():
        return False
    s = build_surface(tri, coords)
    if s.components != 1 or not s.orientable:
        return False
    if s.closed:
        return s.euler == 2
    return s.euler == 1


def crush_candidates(tri, limit=15):
    """Quad-carrying vertex normal spheres and discs of tri, sorted by
    coordinate vector."""
    out = [
        c for c in enumerate_vertex_surfaces(tri, limit=limit)
        if _crushable(tri, c)
    ]
    out.sort(key=lambda c: c.values)
    return out


def one_vertex_pipeline(tri, limit=15, max_rounds=None):
    """Crush spheres and discs until none is left to crush.

    Returns (pieces, history).  pieces: connected triangulations (tets
    descending, ties by construction order) admitting no quad-carrying
    vertex normal sphere or disc.  history: one dict per crush performed,
    with the coordinates used and the tet counts before and after."""
    if max_rounds is None:
        max_rounds = 4 * tri.tet_count + 4
    history = []
    done = []
    todo = [tri]
    rounds = 0
    while todo:
        piece = todo.pop()
        if piece.tet_count == 0:
            continue
        candidates = crush_candidates(piece, limit=limit)
        if not candidates:
            done.append(piece)
            continue
        if rounds >= max_rounds:
            raise RuntimeError(f"crushing failed to settle in {max_rounds} rounds")
        rounds += 1
        chosen = candidates[0]
        crushed, _tet_map = crush(piece, chosen)
        history.append({
            "tets_before": piece.tet_count,
            "tets_after": crushed.tet_count,
            "coords": list(chosen.values),
        })
        for sub, _m in crushed.split_components():
            todo.append(sub)
    done.sort(key=lambda p: -p.tet_count)
    return done, history
