"""Normal surface coordinate vectors.

A surface in an n-tetrahedron triangulation is recorded by 7n
non-negative integers: per tetrahedron, four triangle coordinates
tri[0..3] (triangle cutting off vertex v) and three quad coordinates
quad[0..2] (type k separates {0, k+1} from the rest).

Admissibility: within each tetrahedron at most one quad type is nonzero
(embedded surfaces cannot mix quad types).  Matching: across every face
gluing, at each of the three corners of the face, the arc counts agree.
"""

from .quads import quad_crosses_edge, quad_type_of_pair


class NormalCoords:
    def __init__(self, tet_count, values=None):
        if values is None:
            values = [0] * (7 * tet_count)
        values = [int(x) for x in values]
        if len(values) != 7 * tet_count:
            raise ValueError(
                f"need {7 * tet_count} coordinates, got {len(values)}"
            )
        if any(x < 0 for x in values):
            raise ValueError("coordinates must be non-negative")
        self.tet_count = tet_count
        self.values = values

    def tri(self, t, v):
        return self.values[7 * t + v]

    def quad(self, t, k):
        return self.values[7 * t + 4 + k]

    def set_tri(self, t, v, x):
        self.values[7 * t + v] = x

    def set_quad(self, t, k, x):
        self.values[7 * t + 4 + k] = x

    def quad_type(self, t):
        """The nonzero quad type in tet t, or None."""
        types = [k for k in range(3) if self.quad(t, k) > 0]
        if len(types) > 1:
            raise ValueError(f"tet {t} mixes quad types {types}")
        return types[0] if types else None

    def is_zero(self):
        return not any(self.values)

    def has_quad(self):
        return any(
            self.quad(t, k) for t in range(self.tet_count) for k in range(3)
        )

    def arc_count(self, t, v, f):
        """Normal arcs cutting off corner v on face f of tet t."""
        if v == f:
            raise ValueError("corner must lie on the face")
        return self.tri(t, v) + self.quad(t, quad_type_of_pair(v, f))

    def edge_weight(self, t, e):
        """Points of the surface on edge e of tet t."""
        a, b = e
        total = self.tri(t, a) + self.tri(t, b)
        for k in range(3):
            if quad_crosses_edge(k, e):
                total += self.quad(t, k)
        return total

    def copy(self):
        return NormalCoords(self.tet_count, list(self.values))

    def __add__(self, other):
        if self.tet_count != other.tet_count:
            raise ValueError("tet counts differ")
        return NormalCoords(
            self.tet_count,
            [a + b for a, b in zip(self.values, other.values)],
        )

    def scaled(self, c):
        return NormalCoords(self.tet_count, [c * x for x in self.values])

    def __eq__(self, other):
        return (
            isinstance(other, NormalCoords)
            and self.tet_count == other.tet_count
            and self.values == other.values
        )

    def __hash__(self):
        return hash((self.tet_count, tuple(self.values)))

    def __repr__(self):
        rows = [
            "{} | {}".format(
                " ".join(str(self.tri(t, v)) for v in range(4)),
                " ".join(str(self.quad(t, k)) for k in range(3)),
            )
            for t in range(self.tet_count)
        ]
        return "NormalCoords[" + "; ".join(rows) + "]"


def quad_constraint_ok(coords):
    """At most one quad type per tetrahedron."""
    for t in range(coords.tet_count):
        if sum(1 for k in range(3) if coords.quad(t, k) > 0) > 1:
            return False
    return True


def matching_ok(tri, coords):
    """All matching equations hold for coords on triangulation tri."""
    return not matching_violations(tri, coords)


def matching_violations(tri, coords):
    """List of (t, f, corner) where arc counts disagree across a gluing."""
    if coords.tet_count != tri.tet_count:
        raise ValueError("coordinate vector is for a different size")
    bad = []
    for (t, f), (t2, f2, perm) in tri.gluings.items():
        if (t, f) > (t2, f2):
            continue
        for v in range(4):
            if v == f:
                continue
            if coords.arc_count(t, v, f) != coords.arc_count(t2, perm(v), f2):
                bad.append((t, f, v))
    return bad


def vertex_link_coords(tri):
    """The full vertex linking surface: one triangle per corner."""
    coords = NormalCoords(tri.tet_count)
    for t in range(tri.tet_count):
        for v in range(4):
            coords.set_tri(t, v, 1)
    return coords


def write_coords(coords, path_or_file):
    """Seven integers per line: t0 t1 t2 t3 q0 q1 q2."""
    lines = []
    for t in range(coords.tet_count):
        row = [coords.tri(t, v) for v in range(4)]
        row += [coords.quad(t, k) for k in range(3)]
        lines.append(" ".join(str(x) for x in row))
    text = "\n".join(lines) + "\n"
    if hasattr(path_or_file, "write"):
        path_or_file.write(text)
    else:
        with open(path_or_file, "w") as f:
            f.write(text)


def read_coords(path_or_file):
    if hasattr(path_or_file, "read"):
        text = path_or_file.read()
    else:
        with open(path_or_file) as f:
            text = f.read()
    values = []
    rows = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 7:
            raise ValueError(f"line {lineno}: expected 7 integers")
        values.extend(int(x) for x in parts)
        rows += 1
    return NormalCoords(rows, values)
