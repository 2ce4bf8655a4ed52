"""Vertex normal surface enumeration by filtered double description.

Works entirely over the integers in standard (triangle + quad)
coordinates.  Hyperplanes are the matching equations, taken one at a
time; at each stage the current admissible extreme rays are kept, pairs
on opposite sides are combined when adjacent, and anything violating the
one-quad-type-per-tetrahedron condition is discarded immediately.
Dropping inadmissible rays mid-run is sound because admissibility is a
support condition closed under taking subsets of the support, so every
admissible extreme ray of the final cone is reachable through admissible
intermediates.  The survivors are the vertex normal surfaces in the sense
of Jaco and Tollefson (up to positive scaling; each is returned as its
primitive integer representative).
"""

from math import gcd

from .coords import NormalCoords
from .quads import quad_type_of_pair

DEFAULT_TET_LIMIT = 15


def matching_rows(tri):
    """One integer row per (gluing, corner): coefficient dict col -> +-1.

    Columns: 7t + v for triangles, 7t + 4 + k for quads.  Rows are
    returned in a fixed deterministic order."""
    rows = []
    for (t, f) in sorted(tri.gluings):
        t2, f2, perm = tri.gluings[(t, f)]
        if (t, f) > (t2, f2):
            continue
        for v in range(4):
            if v == f:
                continue
            row = {}
            for col, delta in (
                (7 * t + v, 1),
                (7 * t + 4 + quad_type_of_pair(v, f), 1),
                (7 * t2 + perm(v), -1),
                (7 * t2 + 4 + quad_type_of_pair(perm(v), f2), -1),
            ):
                row[col] = row.get(col, 0) + delta
            row = {c: x for c, x in row.items() if x}
            rows.append(row)
    return rows


def _admissible(vec, tet_count):
    for t in range(tet_count):
        base = 7 * t + 4
        nonzero = 0
        for k in range(3):
            if vec[base + k]:
                nonzero += 1
        if nonzero > 1:
            return False
    return True


def _reduce(vec):
    g = 0
    for x in vec:
        g = gcd(g, x)
    if g > 1:
        return tuple(x // g for x in vec)
    return tuple(vec)


def _support(vec):
    mask = 0
    for i, x in enumerate(vec):
        if x:
            mask |= 1 << i
    return mask


def enumerate_vertex_surfaces(tri, limit=DEFAULT_TET_LIMIT):
    """All vertex normal surfaces of tri, lexicographically sorted.

    Returns a list of NormalCoords (primitive, admissible, matching).
    Raises ValueError beyond `limit` tetrahedra: the double description
    cone can grow exponentially, opt in explicitly for big inputs."""
    n = tri.tet_count
    if n == 0:
        return []
    if n > limit:
        raise ValueError(
            f"{n} tetrahedra exceeds enumeration limit {limit}; "
            "pass limit= explicitly to go bigger"
        )
    dim = 7 * n
    rays = []
    for i in range(dim):
        vec = [0] * dim
        vec[i] = 1
        rays.append(tuple(vec))

    for row in matching_rows(tri):
        def value(vec):
            return sum(coef * vec[col] for col, coef in row.items())

        zero, pos, neg = [], [], []
        for r in rays:
            h = value(r)
            if h == 0:
                zero.append(r)
            elif h > 0:
                pos.append((h, r))
            else:
                neg.append((h, r))

        ray_supports = [(r, _support(r)) for r in rays]
        keep = list(zero)
        for hy, y in pos:
            for hz, z in neg:
                combined = tuple(
                    hy * z[i] - hz * y[i] for i in range(dim)
                )
                if not _admissible(combined, n):
                    continue
                if not _adjacent(y, z, ray_supports):
                    continue
                keep.append(_reduce(combined))
        rays = _dedupe(keep)

    out = []
    for r in sorted(set(rays)):
        out.append(NormalCoords(n, list(r)))
    return out


def _adjacent(y, z, ray_supports):
    """No third current ray's support fits inside supp(y) | supp(z)."""
    union = _support(y) | _support(z)
    for r, s in ray_supports:
        if r == y or r == z:
            continue
        if s & ~union == 0:
            return False
    return True


def _dedupe(rays):
    seen = set()
    out = []
    for r in rays:
        r = _reduce(r)
        if r not in seen:
            seen.add(r)
            out.append(r)
    return out
