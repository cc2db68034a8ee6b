"""Surface-code gadget templates.

Vertex defects (Z type, set C) pair via Z-edge chains, face defects (X type,
set A) via X chains across faces, and fused vertex+face pairs (Y type, set B)
via Y staircases whose X and Z parts share the same qubits.

A fused defect's face sits diagonally on a corner of its vertex; we tag the
four placements NE/NW/SE/SW.  Staircase chains preserve the orientation:
NE/SW defects link along the down-right diagonal, SE/NW along the up-right
diagonal; horizontal and vertical links preserve any orientation but their
X and Z strings do not overlap.
"""

from __future__ import annotations

from qhw.gadgets import Gadget, GadgetKind, Node
from qhw.lattice import Check, DecodingGraph, DefectType, Location, Scenario, build_surface_code

#: fused-face offsets by orientation: face (vx+dx, vy+dy)
ORIENT = {"NE": (0, 0), "NW": (-1, 0), "SE": (0, -1), "SW": (-1, -1)}

CANON_L = 25


def vertex_check(v: tuple) -> Check:
    return ("v", v[0], v[1])


def face_check(f: tuple) -> Check:
    return ("f", f[0], f[1])


def y_checks(v: tuple, orient: str) -> tuple[Check, Check]:
    dx, dy = ORIENT[orient]
    return (("v", v[0], v[1]), ("f", v[0] + dx, v[1] + dy))


def edge_z(edge: tuple) -> Location:
    return ("z",) + edge


def edge_x(edge: tuple) -> Location:
    return ("x",) + edge


def _edges_between(v1: tuple, v2: tuple) -> list[tuple]:
    """Lex-smallest shortest vertex path (length <= 2), as edge coords."""
    paths = []
    (x1, y1), (x2, y2) = v1, v2
    d = abs(x1 - x2) + abs(y1 - y2)
    assert d in (1, 2), (v1, v2)

    def edge(a, b):
        (ax, ay), (bx, by) = sorted((a, b))
        return ("h", ax, ay) if ay == by else ("v", ax, ay)

    if d == 1:
        return [edge(v1, v2)]
    mids = []
    for m in ((x1, y2), (x2, y1), ((x1 + x2) // 2, y1), (x1, (y1 + y2) // 2)):
        if abs(m[0] - x1) + abs(m[1] - y1) == 1 and abs(m[0] - x2) + abs(m[1] - y2) == 1:
            mids.append(m)
    best = None
    for m in set(mids):
        cand = sorted([edge(v1, m), edge(m, v2)])
        if best is None or cand < best:
            best = cand
    return best


def z_chain(v1: tuple, v2: tuple) -> tuple[Location, ...]:
    return tuple(edge_z(e) for e in _edges_between(v1, v2))


def _faces_between(f1: tuple, f2: tuple) -> list[tuple]:
    """Lex-smallest shortest face path (face distance <= 2), as edge coords."""
    (x1, y1), (x2, y2) = f1, f2
    d = abs(x1 - x2) + abs(y1 - y2)
    assert d in (1, 2), (f1, f2)

    def shared_edge(a, b):
        # edge between two adjacent faces
        (ax, ay), (bx, by) = a, b
        if ax == bx:
            return ("h", ax, max(ay, by))
        return ("v", max(ax, bx), ay)

    if d == 1:
        return [shared_edge(f1, f2)]
    best = None
    for m in ((x1, y2), (x2, y1), ((x1 + x2) // 2, y1), (x1, (y1 + y2) // 2)):
        if abs(m[0] - x1) + abs(m[1] - y1) == 1 and abs(m[0] - x2) + abs(m[1] - y2) == 1:
            cand = sorted([shared_edge(f1, m), shared_edge(m, f2)])
            if best is None or cand < best:
                best = cand
    return best


def x_chain(f1: tuple, f2: tuple) -> tuple[Location, ...]:
    return tuple(edge_x(e) for e in _faces_between(f1, f2))


def y_chain(v1: tuple, o1: str, v2: tuple, o2: str) -> tuple[Location, ...]:
    """Y staircase between fused defects at diagonal offset (+-2, +-2): the
    monotone alternating edge path whose X ends match both orientations."""
    (x1, y1), (x2, y2) = v1, v2
    dx, dy = x2 - x1, y2 - y1
    assert abs(dx) == 2 and abs(dy) == 2, (v1, v2)
    sx, sy = (1 if dx > 0 else -1), (1 if dy > 0 else -1)

    def edge(a, b):
        (ax, ay), (bx, by) = sorted((a, b))
        return ("h", ax, ay) if ay == by else ("v", ax, ay)

    for first in ("h", "v"):
        pts = [v1]
        cur = v1
        for i in range(4):
            step = (sx, 0) if (i % 2 == 0) == (first == "h") else (0, sy)
            cur = (cur[0] + step[0], cur[1] + step[1])
            pts.append(cur)
        assert cur == v2
        edges = [edge(a, b) for a, b in zip(pts, pts[1:])]
        locs = tuple(sorted(edge_z(e) for e in edges) + sorted(edge_x(e) for e in edges))
        # check the X-syndrome lands on the declared faces
        flips: dict = {}
        for e in edges:
            o, ex, ey = e
            fs = [(ex, ey), (ex, ey - 1)] if o == "h" else [(ex - 1, ey), (ex, ey)]
            for f in fs:
                flips[f] = flips.get(f, 0) ^ 1
        ends = {f for f, c in flips.items() if c}
        want = {y_checks(v1, o1)[1][1:], y_checks(v2, o2)[1][1:]}
        if ends == want:
            return locs
    raise ValueError(f"no matching staircase {v1}/{o1} -> {v2}/{o2}")


def _seg_chain(a, b) -> tuple[Location, ...]:
    """Canonical chain between two fused/plain defects given as (v, orient)
    or ('f', f) or ('v', v) descriptors."""
    ka, kb = a[0], b[0]
    if ka == "v" and kb == "v":
        return z_chain(a[1], b[1])
    if ka == "f" and kb == "f":
        return x_chain(a[1], b[1])
    if ka == "y" and kb == "y":
        (va, oa), (vb, ob) = a[1:], b[1:]
        dx, dy = vb[0] - va[0], vb[1] - va[1]
        if abs(dx) == 2 and abs(dy) == 2:
            return y_chain(va, oa, vb, ob)
        # horizontal/vertical: disjoint Z and X strings
        fa, fb = y_checks(va, oa)[1][1:], y_checks(vb, ob)[1][1:]
        return tuple(sorted(z_chain(va, vb)) + sorted(x_chain(fa, fb)))
    raise ValueError(f"mixed chain {a} {b}")


def _node(desc, pdesc) -> Node:
    kind = desc[0]
    if kind == "v":
        return Node(
            checks=(vertex_check(desc[1]),),
            partner=(vertex_check(pdesc[1]),),
            connector=tuple(sorted(_seg_chain(desc, pdesc))),
            dtype=DefectType.C,
        )
    if kind == "f":
        return Node(
            checks=(face_check(desc[1]),),
            partner=(face_check(pdesc[1]),),
            connector=tuple(sorted(_seg_chain(desc, pdesc))),
            dtype=DefectType.A,
        )
    return Node(
        checks=y_checks(desc[1], desc[2]),
        partner=y_checks(pdesc[1], pdesc[2]),
        connector=tuple(sorted(_seg_chain(desc, pdesc))),
        dtype=DefectType.B,
    )


def _gadget(kind, name, descs, nodes, excess, extras=(), L=CANON_L, allow_boundary=False):
    defects = []
    fused = []
    for d in descs:
        if d[0] == "v":
            defects.append(vertex_check(d[1]))
        elif d[0] == "f":
            defects.append(face_check(d[1]))
        else:
            pair = y_checks(d[1], d[2])
            defects.extend(pair)
            fused.append(pair)
    return Gadget(
        scenario=Scenario.SC,
        kind=kind,
        name=name,
        defects=tuple(sorted(defects)),
        nodes=tuple(nodes),
        declared_excess=excess,
        fused=tuple(fused),
        extra_locations=tuple(extras),
        graph_params={"L": L},
        allow_boundary=allow_boundary,
    )


def recenter(gadget):
    """Translate into the bulk of the canonical lattice (parity-preserving)."""
    from qhw.place import gadget_in_bulk, translate_gadget
    graph = build_surface_code(gadget.graph_params["L"])
    L = gadget.graph_params["L"]
    xs = [c[1] for c in gadget.defects]
    ys = [c[2] for c in gadget.defects]
    cx, cy = (min(xs) + max(xs)) // 2, (min(ys) + max(ys)) // 2
    dx0, dy0 = (L // 2 - cx), (L // 2 - cy)
    for r in range(6):
        for dx in range(dx0 - r, dx0 + r + 1):
            for dy in range(dy0 - r, dy0 + r + 1):
                if max(abs(dx - dx0), abs(dy - dy0)) != r:
                    continue
                if dx % 2 or dy % 2:
                    continue  # keep bipartite classes and face parities
                cand = translate_gadget(gadget, (dx, dy))
                if gadget_in_bulk(cand, graph):
                    return cand
    raise ValueError(f"{gadget.name}: no bulk placement")


# --------------------------------------------------------------- templates


def wire_z(points: list[tuple], p_first: tuple, p_last: tuple, name="sc-wire-z") -> Gadget:
    """Z wire: vertex defects along ``points`` (consecutive L1 distance 2)."""
    descs = [("v", p) for p in points]
    nodes = (
        _node(("v", points[0]), ("v", p_first)),
        _node(("v", points[-1]), ("v", p_last)),
    )
    return recenter(_gadget(GadgetKind.WIRE, name, descs, nodes, 0))


def wire_x(points: list[tuple], p_first: tuple, p_last: tuple, name="sc-wire-x") -> Gadget:
    descs = [("f", p) for p in points]
    nodes = (
        _node(("f", points[0]), ("f", p_first)),
        _node(("f", points[-1]), ("f", p_last)),
    )
    return recenter(_gadget(GadgetKind.WIRE, name, descs, nodes, 0))


def wire_y(points: list[tuple], orients: list[str], p_first, p_last, name="sc-wire-y") -> Gadget:
    """Y wire: fused defects along ``points`` with per-defect orientations;
    partners are (v, orient) pairs at diagonal offsets from the end nodes."""
    descs = [("y", p, o) for p, o in zip(points, orients)]
    nodes = (
        _node(descs[0], ("y",) + p_first),
        _node(descs[-1], ("y",) + p_last),
    )
    return recenter(_gadget(GadgetKind.WIRE, name, descs, nodes, 0))


def straight_wire_z(n=4, direction=(2, 0)) -> Gadget:
    pts = [(direction[0] * i, direction[1] * i) for i in range(n)]
    neg = (-direction[0] * 1, -direction[1] * 1)
    return wire_z(
        pts,
        (pts[0][0] + neg[0], pts[0][1] + neg[1]),
        (pts[-1][0] + direction[0], pts[-1][1] + direction[1]),
        name=f"sc-wire-z-{direction[0]}_{direction[1]}-{n}",
    )


def straight_wire_x(n=4, direction=(2, 0)) -> Gadget:
    pts = [(direction[0] * i, direction[1] * i) for i in range(n)]
    neg = (-direction[0], -direction[1])
    return wire_x(
        pts,
        (pts[0][0] + neg[0], pts[0][1] + neg[1]),
        (pts[-1][0] + direction[0], pts[-1][1] + direction[1]),
        name=f"sc-wire-x-{direction[0]}_{direction[1]}-{n}",
    )


def straight_wire_y(n=4, direction=(2, 2), orient=None) -> Gadget:
    """Y wire along ``direction``; partners always attach diagonally (the
    2-neighborhood covers exactly half a diagonal staircase, no more)."""
    if orient is None:
        orient = "SE" if direction[0] * direction[1] > 0 else "NE"
    pts = [(direction[0] * i, direction[1] * i) for i in range(n)]
    diag = (2, 2) if orient in ("SE", "NW") else (2, -2)
    if direction[0] * diag[0] + direction[1] * diag[1] < 0:
        diag = (-diag[0], -diag[1])
    neg = (-diag[0], -diag[1])
    return wire_y(
        pts,
        [orient] * n,
        ((pts[0][0] + neg[0], pts[0][1] + neg[1]), orient),
        ((pts[-1][0] + diag[0], pts[-1][1] + diag[1]), orient),
        name=f"sc-wire-y-{direction[0]}_{direction[1]}-{orient}-{n}",
    )


def wire_z_variant() -> Gadget:
    """Bipartite-class-shifting Z wire: nodes at odd distance, with an X pair
    straddling the middle edge so a Y error saves one site (excess -1)."""
    v1, v2 = (0, 0), (3, 0)
    descs = [("v", v1), ("v", v2), ("f", (1, 0)), ("f", (1, -1))]
    nodes = (
        _node(("v", v1), ("v", (-2, 0))),
        _node(("v", v2), ("v", (5, 0))),
    )
    return recenter(_gadget(GadgetKind.WIRE, "sc-wire-z-variant", descs, nodes, -1))


def splitting() -> Gadget:
    """Splitting gadget: one Z node, one X node, one Y node joined at a
    junction where the Z and X strings merge into a Y staircase."""
    vy, oy = (0, 0), "SE"
    vz = (0, 2)
    fx = (1, -2)
    descs = [("y", vy, oy), ("v", vz), ("f", fx)]
    nodes = (
        _node(("v", vz), ("v", (0, 4))),
        _node(("f", fx), ("f", (1, -4))),
        _node(("y", vy, oy), ("y", (-2, -2), oy)),
    )
    return recenter(_gadget(GadgetKind.SPLITTING, "sc-splitting", descs, nodes, 0))


def element_z(k: int) -> Gadget:
    """Element gadget with k Z nodes on a row (nodes at pitch 4, spacers
    between); 2k-1 defects force exactly one TRUE node."""
    descs = [("v", (2 * i, 0)) for i in range(2 * k - 1)]
    nodes = tuple(
        _node(("v", (4 * i, 0)), ("v", (4 * i, -2))) for i in range(k)
    )
    return recenter(_gadget(GadgetKind.ELEMENT, f"sc-element-z-{k}", descs, nodes, 0))


def element_x(k: int) -> Gadget:
    descs = [("f", (2 * i, 0)) for i in range(2 * k - 1)]
    nodes = tuple(
        _node(("f", (4 * i, 0)), ("f", (4 * i, -2))) for i in range(k)
    )
    return recenter(_gadget(GadgetKind.ELEMENT, f"sc-element-x-{k}", descs, nodes, 0))


#: per-gap snake for the Y element: axis steps keep all chains inside the
#: spacers' 1-neighborhoods, and no spacer lands under a partner slot
_Y_GAP = ((2, 0), (4, 0), (4, -2), (6, -2), (8, -2))


def element_y(k: int) -> Gadget:
    """Element gadget with k Y nodes (juxtaposed Z and X element lines).

    Nodes are NE-fused pairs at pitch 8 with partners diagonally up-left;
    spacers are plain vertex+face pairs along a snake dipping below the node
    row, so chains are axis-aligned two-edge strings.
    """
    descs = [("y", (0, 0), "NE")]
    for i in range(k - 1):
        x0 = 8 * i
        for dx, dy in _Y_GAP:
            v = (x0 + dx, dy)
            descs.append(("v", v))
            descs.append(("f", v))  # NE face of the spacer vertex
        descs.append(("y", (x0 + 8, 0), "NE"))
    nodes = tuple(
        _node(("y", (8 * i, 0), "NE"), ("y", (8 * i - 2, 2), "NE")) for i in range(k)
    )
    return recenter(_gadget(GadgetKind.ELEMENT, f"sc-element-y-{k}", descs, nodes, 0))


def special_wire(L: int | None = None, y0: int | None = None) -> tuple[Gadget, list]:
    """Special wire along the horizontal Z logical at row ``y0``: defects at
    every other interior vertex, a two-edge tail at the left boundary and a
    one-edge tail at the right; TRUE costs one extra error outside R.

    Returns the gadget plus the logical-representative rows (Q support).
    """
    L = L or 13
    y0 = 2 if y0 is None else y0
    xs = list(range(2, L, 2))
    assert xs[-1] == L - 1
    descs = [("v", (x, y0)) for x in xs]
    j = len(xs) // 2
    if j % 2 == 1:
        j -= 1
    assert j >= 2 and j + 1 < len(xs), "special wire needs L >= 9"
    nodes = (
        _node(("v", (xs[j - 1], y0)), ("v", (xs[j - 1], y0 + 2))),
        _node(("v", (xs[j], y0)), ("v", (xs[j], y0 + 2))),
    )
    tails = [("z", "h", 0, y0), ("z", "h", 1, y0), ("z", "h", L - 1, y0)]
    g = _gadget(
        GadgetKind.SPECIAL_WIRE,
        f"sc-special-wire-{L}-{y0}",
        descs,
        nodes,
        0,
        extras=tails,
        L=L,
        allow_boundary=True,
    )
    q_support = [("z", "h", x, y0) for x in range(L)]
    return g, q_support
