"""Crushing a normal surface, on the triangulation and on its dual graph.

Crushing flattens every tetrahedron met by a quad: the quad is squeezed
to a point and the tetrahedron's boundary folds into two "purses", each
identifying one pair of faces by a transposition (see quads.PURSE_PAIRS).
Quadless tetrahedra survive unchanged.  Triangle coordinates play no
part: their discs shrink into the vertices.

The surviving face gluings are found by chain-following: leave a
survivor through a glued face, and whenever the far side is a flattened
tetrahedron, hop across its purse and continue through the next gluing,
composing vertex maps as we go.  Each chain ends at another survivor
face, at an unglued face (the crushed face becomes boundary), or never
starts (closed chains of flattened tetrahedra vanish without being
visited).  Chains terminate and pair distinct slots: the step map on
directed face-entries is injective and the starting state has no
preimage, and a chain equal to its own reversal would force a face glued
to itself, which valid input cannot contain.

crush_dual performs the same contraction directly on the dual graph,
arc by arc, and emits a CrushCertificate whose replay on the original
dual graph reproduces the result exactly.
"""

from ..multigraph import MultiGraph
from ..triangulation import Triangulation
from ..width.immersion import CrushCertificate
from .coords import matching_ok, quad_constraint_ok
from .quads import PURSE_PAIRS, purse_partner


def _quad_types(tri, coords):
    if coords.tet_count != tri.tet_count:
        raise ValueError("coordinate vector is for a different size")
    if not quad_constraint_ok(coords):
        raise ValueError("coordinates mix quad types in one tetrahedron")
    if not matching_ok(tri, coords):
        raise ValueError("coordinates violate the matching equations")
    return [coords.quad_type(t) for t in range(tri.tet_count)]


def _follow(tri, types, t, f, limit):
    """Walk from survivor face (t, f); return (t2, f2, phi) on reaching a
    survivor, or None when the chain exits through an unglued face."""
    t2, f2, phi = tri.gluings[(t, f)]
    steps = 0
    while types[t2] is not None:
        f3, tau = purse_partner(types[t2], f2)
        phi = tau * phi
        nxt = tri.gluings.get((t2, f3))
        if nxt is None:
            return None
        t2, f2, psi = nxt
        phi = psi * phi
        steps += 1
        if steps > limit:
            raise AssertionError("crush chain failed to terminate")
    return t2, f2, phi


def crush(tri, coords):
    """Crush the quads of `coords` out of `tri`.

    Returns (crushed, tet_map) where tet_map[i] is the original index of
    the i-th surviving tetrahedron (ascending).  Requires admissible
    coordinates satisfying the matching equations."""
    types = _quad_types(tri, coords)
    survivors = [t for t in range(tri.tet_count) if types[t] is None]
    new_of_old = {old: i for i, old in enumerate(survivors)}
    out = Triangulation(len(survivors), tri.kind)
    limit = 8 * tri.tet_count + 8

    for t in survivors:
        for f in range(4):
            if (t, f) not in tri.gluings:
                continue
            existing = out.gluings.get((new_of_old[t], f))
            target = _follow(tri, types, t, f, limit)
            if target is None:
                if existing is not None:
                    raise AssertionError(
                        f"chain from ({t}, {f}) disagrees with its reverse"
                    )
                continue
            t2, f2, phi = target
            entry = (new_of_old[t2], f2, phi)
            if existing is not None:
                if existing != entry:
                    raise AssertionError(
                        f"chain from ({t}, {f}) disagrees with its reverse"
                    )
                continue
            out.add_gluing(new_of_old[t], f, new_of_old[t2], f2, phi)
    return out, survivors


def crush_dual(tri, coords):
    """Contract the dual graph the way crush() contracts the
    triangulation, recording every move.

    Returns (graph, cert): graph equals crush(tri, coords)[0].dual_graph()
    and cert replays on tri.dual_graph() to the same graph (surviving
    nodes renumbered ascending, exactly as apply_certificate compacts).

    Arcs are tracked at slot level (one slot per glued face) so parallel
    arcs and loops stay distinguishable.  Flattened nodes are processed
    in ascending order; for each purse pair of such a node, its two slots
    hold either nothing (skip), one arc (removeArc), the same arc twice
    (a loop closing the purse: removeArc of the loop), or two arcs, which
    the purse concatenates (lift, rewiring the far ends together)."""
    types = _quad_types(tri, coords)

    arc_ends = {}
    slot = {}
    next_id = 0
    for (t, f), (t2, f2, _p) in tri.gluings.items():
        if (t, f) < (t2, f2):
            arc_ends[next_id] = ((t, f), (t2, f2))
            slot[(t, f)] = next_id
            slot[(t2, f2)] = next_id
            next_id += 1

    def other_end(iid, here):
        a, b = arc_ends[iid]
        if a == here:
            return b
        if b == here:
            return a
        raise AssertionError(f"slot {here} not an end of arc {iid}")

    cert = CrushCertificate()
    for v in range(tri.tet_count):
        if types[v] is None:
            continue
        for (faces, _tau) in PURSE_PAIRS[types[v]]:
            fa, fb = faces
            ida = slot.pop((v, fa), None)
            idb = slot.pop((v, fb), None)
            if ida is None and idb is None:
                continue
            if ida is not None and ida == idb:
                cert.append({"op": "removeArc", "u": v, "v": v})
                del arc_ends[ida]
                continue
            if ida is None or idb is None:
                iid = ida if ida is not None else idb
                here = (v, fa) if ida is not None else (v, fb)
                far = other_end(iid, here)
                cert.append({"op": "removeArc", "u": far[0], "v": v})
                del arc_ends[iid]
                popped = slot.pop(far, None)
                if popped != iid:
                    raise AssertionError(f"slot table desync at {far}")
                continue
            far_a = other_end(ida, (v, fa))
            far_b = other_end(idb, (v, fb))
            cert.append({"op": "lift", "u": far_a[0], "v": v, "w": far_b[0]})
            del arc_ends[ida], arc_ends[idb]
            arc_ends[next_id] = (far_a, far_b)
            slot[far_a] = next_id
            slot[far_b] = next_id
            next_id += 1
        cert.append({"op": "removeNode", "v": v})

    survivors = [t for t in range(tri.tet_count) if types[t] is None]
    new_of_old = {old: i for i, old in enumerate(survivors)}
    out = MultiGraph(len(survivors))
    for (a, _fa), (b, _fb) in arc_ends.values():
        out.add_arc(new_of_old[a], new_of_old[b])
    return out, cert
