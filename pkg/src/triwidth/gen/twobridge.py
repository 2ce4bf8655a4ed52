"""Ideal triangulations of two-bridge knot complements.

The complement of a two-bridge knot decomposes into a stack of
tetrahedron layers, two tetrahedra per layer, following the
continued-fraction expansion of the knot's rational number (the model
goes back to Sakuma-Weeks and Gueritaud).  We realise the stack
concretely on the four-punctured sphere pictured as a pillowcase:

--> Punctures are the integer points of the plane modulo the lattice
    2Z^2 together with the point reflection x |-> -x (four classes).
--> At each stage the pillowcase carries a triangulation by arcs of
    three slopes (u, v, w) with w = u + v, four triangles downstairs.
--> The crossing word R^a1 L^a2 ... walks the marking through diagonal
    exchanges.  Each exchange away from the two ends contributes a
    layer: the quadrilateral traced by each flipped arc bounds a
    tetrahedron, two per flip downstairs (four upstairs, identified in
    pairs).
--> Consecutive layers share the intermediate triangulation: the upper
    faces of one layer are glued to the lower faces of the next by
    matching the underlying geometric triangles.
--> The stack is closed off at both ends by folds.  Each outermost
    face carries one crease arc, and the two faces sharing a crease
    arc downstairs fold onto each other by the map that pins the
    crease endpoints.  At the bottom the creases are the diagonals of
    the outermost triangulation, so each square closes like a book and
    the two front triangles are glued to each other, as are the two
    back ones.  At the top the creases are the arcs kept from the
    second-to-last exchange, which again glues the front tetrahedron
    of the last layer to the back one along both remaining faces.

All arithmetic is exact on integer points; face matchings are found by
canonicalising triangles under the lattice translations and the point
reflection, so every gluing permutation is forced by the geometry.

Coefficients [a_1, ..., a_m] denote the continued fraction
a_1 + 1/(a_2 + 1/(... + 1/a_m)) with value p/q.  The generator accepts
the knot normal form: m even, every a_i >= 1, the end coefficients
a_1, a_m >= 2, and p odd (p even gives a two-component link, which has
two cusps and falls outside this builder's contract).  Writing
C = sum(a_i) for the crossing count, the output has 2(C - 3) ideal
tetrahedra and a single ideal vertex whose link is a torus.
"""

from ..perms import Permutation4
from ..triangulation import Triangulation
from ..width.decomposition import TreeDecomposition

_START = ((1, 0), (0, 1), (1, 1))


def _add(p, q):
    return (p[0] + q[0], p[1] + q[1])


def _sub(p, q):
    return (p[0] - q[0], p[1] - q[1])


def _move(state, letter):
    u, v, w = state
    if letter == "R":
        return (u, w, _add(u, w))
    return (w, v, _add(w, v))


def continued_fraction(coeffs):
    """(p, q) with p/q = a_1 + 1/(a_2 + 1/(... + 1/a_m)), gcd(p, q) = 1."""
    p, q = coeffs[-1], 1
    for a in reversed(coeffs[:-1]):
        p, q = a * p + q, p
    return p, q


def _validated(coeffs):
    coeffs = list(coeffs)
    if not coeffs or any(not isinstance(a, int) or a < 1 for a in coeffs):
        raise ValueError("coefficients must be positive integers")
    if len(coeffs) < 2:
        raise ValueError("need at least two coefficients (at least two twist regions)")
    if len(coeffs) % 2 != 0:
        raise ValueError(
            "coefficient count must be even; renormalise with the identity "
            "[..., a, 1] = [..., a + 1] (equivalently [..., a] = [..., a - 1, 1])"
        )
    if coeffs[0] < 2 or coeffs[-1] < 2:
        raise ValueError("first and last coefficients must be at least 2")
    p, _q = continued_fraction(coeffs)
    if p % 2 == 0:
        raise ValueError(
            f"numerator {p} is even: these coefficients describe a "
            "two-component link, not a knot"
        )
    return coeffs


def _word(coeffs):
    """The full crossing word R^a1 L^a2 R^a3 ..., one letter per crossing."""
    out = []
    for i, a in enumerate(coeffs):
        out.extend(("R" if i % 2 == 0 else "L") * a)
    return "".join(out)


def _orbit_reps(slope):
    """Lex-least representatives of the two puncture orbits under
    translation by `slope` (mod 2)."""
    d = (slope[0] % 2, slope[1] % 2)
    seen = set()
    reps = []
    for p in ((0, 0), (0, 1), (1, 0), (1, 1)):
        q = ((p[0] + d[0]) % 2, (p[1] + d[1]) % 2)
        if p in seen or q in seen:
            continue
        seen.add(p)
        seen.add(q)
        reps.append(p)
    return reps


def _layer_corners(letter, state):
    """Corner points of the layer's two tetrahedra.

    A flip of type R at state (u, v, w) retriangulates across the
    v-slope arcs; type L across the u-slope arcs.  Each flipped arc is
    the diagonal of a quadrilateral whose four corners become the
    tetrahedron's vertices 0..3.  With this labelling the lower faces
    (in the pre-flip triangulation) are faces 3 and 0 and the upper
    faces (post-flip) are faces 2 and 1, for both letters.
    """
    u, v, w = state
    if letter == "R":
        flipped, side = v, u
    else:
        flipped, side = u, v
    out = []
    for a in _orbit_reps(flipped):
        out.append((_sub(a, side), a, _add(a, flipped), _add(a, w)))
    return out


_LOWER_FACES = (3, 0)
_UPPER_FACES = (2, 1)


def _canon(pts):
    """Canonical form of a point tuple under 2Z^2 translation and the
    point reflection.  Returns (key, (s, t)) where x |-> s*x + t maps
    the input onto the key's points."""
    best = None
    for s in (1, -1):
        sp = [(s * x, s * y) for (x, y) in pts]
        mx, my = min(sp)
        t = (-2 * (mx // 2), -2 * (my // 2))
        moved = tuple(sorted((x + t[0], y + t[1]) for (x, y) in sp))
        if best is None or moved < best[0]:
            best = (moved, (s, t))
    return best


def _gmap(tr1, tr2):
    """The forced geometric map between two matched triangles: tr1 into
    canonical position, then undo tr2."""
    s1, t1 = tr1
    s2, t2 = tr2

    def g(p):
        y = (s1 * p[0] + t1[0], s1 * p[1] + t1[1])
        return (s2 * (y[0] - t2[0]), s2 * (y[1] - t2[1]))

    return g


def _face_pts(corners, f):
    return tuple(c for i, c in enumerate(corners) if i != f)


def _faces_of(ids, all_corners, face_indices):
    out = []
    for tid in ids:
        for f in face_indices:
            out.append((tid, f, _face_pts(all_corners[tid], f)))
    return out


def _face_perm(corners1, f1, corners2, f2, g):
    image = [None] * 4
    idx2 = {p: i for i, p in enumerate(corners2)}
    for i, p in enumerate(corners1):
        if i == f1:
            continue
        q = g(p)
        if q not in idx2:
            raise AssertionError(
                f"matched corner {p} of face {f1} lands on {q}, "
                f"not a corner of the partner tetrahedron {corners2}"
            )
        image[i] = idx2[q]
    image[f1] = f2
    return Permutation4(tuple(image))


def _glue_layers(tri, all_corners, upper, lower):
    by_key = {}
    for (t2, f2, pts2) in lower:
        key, tr2 = _canon(pts2)
        if key in by_key:
            raise AssertionError("two lower faces share one pillowcase triangle")
        by_key[key] = (t2, f2, tr2)
    for (t1, f1, pts1) in upper:
        key, tr1 = _canon(pts1)
        if key not in by_key:
            raise AssertionError(
                f"upper face ({t1},{f1}) has no matching lower triangle"
            )
        t2, f2, tr2 = by_key[key]
        g = _gmap(tr1, tr2)
        perm = _face_perm(all_corners[t1], f1, all_corners[t2], f2, g)
        tri.add_gluing(t1, f1, t2, f2, perm)


def _crease_fold(tri, all_corners, faces, slope):
    """Close four end faces in pairs by folding across crease arcs of
    the given slope.

    Every face has exactly one side of that slope.  Two faces share
    each crease arc downstairs; they are glued by the map that pins
    the crease endpoints and carries apex to apex.
    """
    neg = (-slope[0], -slope[1])
    groups = {}
    for (t, f, pts) in faces:
        crease = None
        for i in range(3):
            for j in range(i + 1, 3):
                d = _sub(pts[j], pts[i])
                if d == slope or d == neg:
                    if crease is not None:
                        raise AssertionError("face has two crease sides")
                    crease = (i, j)
        if crease is None:
            raise AssertionError(f"face ({t},{f}) has no side of slope {slope}")
        i, j = crease
        key, (s, shift) = _canon((pts[i], pts[j]))
        e1 = (s * pts[i][0] + shift[0], s * pts[i][1] + shift[1])
        ends = {pts[i]: e1, pts[j]: key[0] if e1 == key[1] else key[1]}
        groups.setdefault(key, []).append((t, f, pts, ends))
    if len(groups) != 2 or any(len(grp) != 2 for grp in groups.values()):
        raise AssertionError("crease arcs do not pair up the fold faces")
    for key, ((t1, f1, pts1, ends1), (t2, f2, pts2, ends2)) in groups.items():
        if t1 == t2:
            raise AssertionError("fold would glue a tetrahedron to itself")
        idx2 = {p: i for i, p in enumerate(all_corners[t2])}
        by_canon2 = {ends2[p]: p for p in ends2}
        image = [None] * 4
        apex1 = next(p for p in pts1 if p not in ends1)
        apex2 = next(p for p in pts2 if p not in ends2)
        image[all_corners[t1].index(apex1)] = idx2[apex2]
        for p in ends1:
            image[all_corners[t1].index(p)] = idx2[by_canon2[ends1[p]]]
        image[f1] = f2
        tri.add_gluing(t1, f1, t2, f2, Permutation4(tuple(image)))


def two_bridge(coeffs):
    """Ideal triangulation of the two-bridge knot complement for the
    given continued-fraction coefficients.

    Returns a validated ideal Triangulation with 2(C - 3) tetrahedra
    (C = sum of coefficients), every face glued, and exactly one ideal
    vertex whose link is a torus.  Tetrahedra 2k, 2k+1 form layer k+1;
    consecutive layers are glued four faces to four faces, and the two
    ends of the stack are closed by crease folds.
    """
    coeffs = _validated(coeffs)
    c = sum(coeffs)
    word = _word(coeffs)
    states = [_START]
    for ch in word:
        states.append(_move(states[-1], ch))

    # One layer per crossing away from the ends: crossings 2 .. C-2.
    layer_count = c - 3
    tri = Triangulation(2 * layer_count, kind="ideal")
    all_corners = []
    layers = []
    for i in range(1, c - 2):
        all_corners.extend(_layer_corners(word[i], states[i]))
        layers.append([len(all_corners) - 2, len(all_corners) - 1])

    for k in range(layer_count - 1):
        _glue_layers(tri, all_corners,
                     _faces_of(layers[k], all_corners, _UPPER_FACES),
                     _faces_of(layers[k + 1], all_corners, _LOWER_FACES))

    # Bottom fold: crease along the diagonals of the bottom surface.
    # Top fold: crease along the arcs kept from the second-to-last flip,
    # which sit as u-slope sides of the top surface.
    _crease_fold(tri, all_corners,
                 _faces_of(layers[0], all_corners, _LOWER_FACES), states[1][2])
    _crease_fold(tri, all_corners,
                 _faces_of(layers[-1], all_corners, _UPPER_FACES), states[c - 2][0])

    tri.validate()
    if tri.boundary_faces():
        raise AssertionError("two-bridge stack left unglued faces")
    links = tri.vertex_links()
    if len(links) != 1 or not links[0].is_torus_piece():
        raise AssertionError(
            f"expected one ideal torus vertex, got {len(links)} classes: {links}"
        )
    for k in range(layer_count - 1):
        nxt = set(layers[k + 1])
        for tid in layers[k]:
            partners = {tri.gluings[(tid, f)][0] for f in _UPPER_FACES}
            if partners != nxt:
                raise AssertionError(
                    f"layer {k + 1} tet {tid} does not reach both tets of the "
                    f"next layer: {sorted(partners)} vs {sorted(nxt)}"
                )
    return tri


def two_bridge_td(coeffs):
    """Path decomposition of the dual graph of two_bridge(coeffs): one
    bag per consecutive layer pair, so C - 4 bags of four tetrahedra
    each (width 3).  Requires C >= 6."""
    coeffs = _validated(coeffs)
    c = sum(coeffs)
    if c < 6:
        raise ValueError(
            f"need total crossing count C >= 6 for the layered decomposition, got {c}"
        )
    bags = []
    for k in range(1, c - 3):
        base = 2 * (k - 1)
        bags.append({base, base + 1, base + 2, base + 3})
    arcs = [(i, i + 1) for i in range(len(bags) - 1)]
    return TreeDecomposition(bags, arcs)
