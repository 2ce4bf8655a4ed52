"""Immersion operations on multigraphs and crush certificates.

A graph H immerses into G if H arises from G by deleting arcs, deleting
nodes, and lifting: pick two arcs (u,v), (v,w) at a common node v, delete
every parallel copy of both pairs, and add a single arc (u,w).  Congestion
is monotone under all three moves, which is what makes these certificates
useful: a crush certificate replays the dual-graph effect of crushing a
normal surface step by step.

Certificate steps use single-copy semantics instead (remove exactly one
copy of (u,v) and one of (v,w), add one (u,w)): chains through parallel
arcs must each consume their own copy for the replay to land bit-exact on
the crushed dual graph.
"""

import json


def lift(graph, u, v, w):
    """Immersion lifting at v: returns a new graph with every copy of
    (u,v) and (v,w) removed and a single (u,w) added.

    Requires at least one copy of each; for u == w a single parallel class
    (u,v) is removed and a loop appears at u."""
    if graph.multiplicity(u, v) < 1:
        raise ValueError(f"no arc ({u},{v}) to lift")
    if graph.multiplicity(v, w) < 1:
        raise ValueError(f"no arc ({v},{w}) to lift")
    out = graph.copy()
    for _ in range(out.multiplicity(u, v)):
        out.remove_arc(u, v)
    if u != w:
        for _ in range(out.multiplicity(v, w)):
            out.remove_arc(v, w)
    out.add_arc(u, w)
    return out


def remove_node(graph, v):
    """Delete node v with all incident arcs; higher nodes shift down."""
    from ..multigraph import MultiGraph

    graph._check_node(v)
    out = MultiGraph(graph.node_count - 1)

    def m(x):
        return x - 1 if x > v else x

    for (a, b), mult in graph.arc_items():
        if a != v and b != v:
            out.add_arc(m(a), m(b), mult)
    return out


class CrushCertificate:
    """Ordered list of steps, each one of
      {"op": "lift", "u": u, "v": v, "w": w}
      {"op": "removeArc", "u": u, "v": v}
      {"op": "removeNode", "v": v}
    """

    OPS = {"lift": ("u", "v", "w"), "removeArc": ("u", "v"), "removeNode": ("v",)}

    def __init__(self, steps=()):
        self.steps = []
        for s in steps:
            self.append(dict(s))

    def append(self, step):
        op = step.get("op")
        if op not in self.OPS:
            raise ValueError(f"unknown certificate op {op!r}")
        for key in self.OPS[op]:
            if not isinstance(step.get(key), int):
                raise ValueError(f"step {step!r} missing int field {key!r}")
        self.steps.append({k: step[k] for k in ("op",) + self.OPS[op]})

    def to_json(self):
        return list(self.steps)

    @staticmethod
    def from_json(data):
        return CrushCertificate(data)

    def write(self, path_or_file):
        text = json.dumps(self.to_json(), indent=2) + "\n"
        if hasattr(path_or_file, "write"):
            path_or_file.write(text)
        else:
            with open(path_or_file, "w") as f:
                f.write(text)

    @staticmethod
    def read(path_or_file):
        if hasattr(path_or_file, "read"):
            data = json.load(path_or_file)
        else:
            with open(path_or_file) as f:
                data = json.load(f)
        return CrushCertificate.from_json(data)

    def __len__(self):
        return len(self.steps)

    def __eq__(self, other):
        return isinstance(other, CrushCertificate) and self.steps == other.steps

    def __repr__(self):
        return f"CrushCertificate({self.steps!r})"


def apply_certificate(graph, cert, intermediate_hook=None):
    """Replay a certificate on `graph` and return the final multigraph,
    with removed nodes compacted away (surviving nodes keep their relative
    order).

    Single-copy semantics; every step is validated and an inapplicable
    step raises ValueError naming its index.  intermediate_hook, if given,
    is called with (step_index, working_graph, deleted_set) after every
    step, before compaction."""
    from ..multigraph import MultiGraph

    work = graph.copy()
    deleted = set()

    def alive(x, i):
        if not 0 <= x < work.node_count:
            raise ValueError(f"step {i}: node {x} out of range")
        if x in deleted:
            raise ValueError(f"step {i}: node {x} was already removed")

    for i, step in enumerate(cert.steps):
        op = step["op"]
        if op == "lift":
            u, v, w = step["u"], step["v"], step["w"]
            alive(u, i)
            alive(v, i)
            alive(w, i)
            try:
                work.remove_arc(u, v)
                work.remove_arc(v, w)
            except ValueError as e:
                raise ValueError(f"step {i}: {e}") from None
            work.add_arc(u, w)
        elif op == "removeArc":
            u, v = step["u"], step["v"]
            alive(u, i)
            alive(v, i)
            try:
                work.remove_arc(u, v)
            except ValueError as e:
                raise ValueError(f"step {i}: {e}") from None
        elif op == "removeNode":
            v = step["v"]
            alive(v, i)
            if work.degree(v) != 0:
                raise ValueError(f"step {i}: node {v} still has arcs")
            deleted.add(v)
        if intermediate_hook is not None:
            intermediate_hook(i, work, deleted)

    survivors = [v for v in range(work.node_count) if v not in deleted]
    new_of_old = {old: new for new, old in enumerate(survivors)}
    out = MultiGraph(len(survivors))
    for (a, b), mult in work.arc_items():
        out.add_arc(new_of_old[a], new_of_old[b], mult)
    return out


def bienstock_check(graph, cw_limit=12, tw_limit=20):
    """Exact check of the congestion / treewidth sandwich
        (2/3)(tw+1) <= cng <= d(tw+1),  d = max distinct-neighbour degree.

    The lower bound is genuinely false for matching-like graphs (a single
    arc has tw 1 and cng 1), so graphs whose maximum distinct-neighbour
    degree is <= 1 are reported as not applicable rather than failed.

    Returns a dict with keys applicable, cng, tw, degree, lower_ok,
    upper_ok, ok."""
    from .carving import carving_width_exact
    from .treewidth import treewidth_exact

    d = max(
        (len(graph.distinct_neighbours(v)) for v in range(graph.node_count)),
        default=0,
    )
    if d <= 1:
        return {
            "applicable": False,
            "cng": None,
            "tw": None,
            "degree": d,
            "lower_ok": None,
            "upper_ok": None,
            "ok": None,
        }
    cng, _ = carving_width_exact(graph, limit=cw_limit, witness=False)
    tw, _ = treewidth_exact(graph, limit=tw_limit, witness=False)
    lower_ok = 2 * (tw + 1) <= 3 * cng
    upper_ok = cng <= d * (tw + 1)
    return {
        "applicable": True,
        "cng": cng,
        "tw": tw,
        "degree": d,
        "lower_ok": lower_ok,
        "upper_ok": upper_ok,
        "ok": lower_ok and upper_ok,
    }
