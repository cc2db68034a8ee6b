"""Color-code gadget templates.

All geometry lives on the dual triangular lattice.  Same-color vertices form
a triangular sublattice with the six unit steps ``(1,1), (2,-1), (1,-2)`` and
their negations; two sublattice-adjacent vertices are linked by a two-triangle
rhombus, which is the basic error chain.  A triangle error creates one defect
of each color, and three collinear triangles create one defect of each color
spread over three consecutive vertices; that triple is the splitting core.

Wires run vertically in compiled layouts: the axial direction ``(1, -2)`` is
straight down in the embedding ``(a, b) -> (a + b/2, b*sqrt(3)/2)``.
"""

from __future__ import annotations

from qhw.gadgets import Contract, Gadget, GadgetKind, Node
from qhw.lattice import CC_COLOR_TO_TYPE, Check, DecodingGraph, DefectType, Location, cc_color

#: sublattice unit steps (same-color moves), in a fixed order
SUB_STEPS = ((1, 1), (2, -1), (1, -2), (-1, -1), (-2, 1), (-1, 2))

#: straight down / up in the euclidean embedding
DOWN = (1, -2)
UP = (-1, 2)


def shift_check(chk: Check, d: tuple) -> Check:
    return ("v", chk[1] + d[0], chk[2] + d[1])


def shift_loc(loc: Location, d: tuple) -> Location:
    return ("t", loc[1] + d[0], loc[2] + d[1], loc[3])


def vertex_add(v: tuple, d: tuple) -> tuple:
    return (v[0] + d[0], v[1] + d[1])


def triangle_corners(loc: Location) -> tuple:
    _, a, b, o = loc
    if o == 0:
        return ((a, b), (a + 1, b), (a, b + 1))
    return ((a + 1, b), (a, b + 1), (a + 1, b + 1))


def triangles_at(v: tuple) -> list[Location]:
    a, b = v
    return sorted(
        [
            ("t", a, b, 0),
            ("t", a - 1, b, 0),
            ("t", a, b - 1, 0),
            ("t", a - 1, b, 1),
            ("t", a, b - 1, 1),
            ("t", a - 1, b - 1, 1),
        ]
    )


def rhombus(v1: tuple, v2: tuple) -> tuple[Location, Location]:
    """The two triangles linking sublattice-adjacent vertices v1, v2
    (syndrome exactly {v1, v2}); deterministic order: triangle at v1 first."""
    t1 = [t for t in triangles_at(v1) if v2 not in triangle_corners(t)]
    best = None
    for a in t1:
        ca = set(triangle_corners(a))
        for b in triangles_at(v2):
            cb = set(triangle_corners(b))
            if len(ca & cb) == 2 and v1 not in cb:
                cand = (a, b)
                if best is None or cand < best:
                    best = cand
    if best is None:
        raise ValueError(f"no rhombus between {v1} and {v2}")
    return best


def chain(points: list[tuple]) -> tuple[Location, ...]:
    """Concatenated rhombi along consecutive sublattice-adjacent points."""
    locs: list[Location] = []
    for p, q in zip(points, points[1:]):
        locs.extend(rhombus(p, q))
    return tuple(locs)


def connector(node_v: tuple, partner_v: tuple) -> tuple[Location, ...]:
    """Canonical error chain lighting the partner slot (one rhombus)."""
    return tuple(sorted(rhombus(node_v, partner_v)))


def _type_of(v: tuple) -> DefectType:
    return CC_COLOR_TO_TYPE[cc_color(*v)]


def _vnode(v: tuple, pdir: tuple) -> Node:
    p = vertex_add(v, pdir)
    return Node(
        checks=(("v", *v),),
        partner=(("v", *p),),
        connector=connector(v, p),
        dtype=_type_of(v),
    )


CANON_L = 31  # canonical certification lattice; gadgets are placed mid-bulk


def _bulk_origin(L: int = CANON_L) -> tuple:
    """A color-0 vertex near the centroid of the triangular patch."""
    Lr = 3 * (L - 1) // 2
    tx, ty = Lr, Lr // 3 + 2
    best = None
    for a in range(-(2 * Lr), Lr + 1):
        for b in range(-Lr, 2 * Lr + 1):
            if cc_color(a, b) != 0:
                continue
            x, y = 3 * a + 4, a + 2 * b
            if not (0 <= y <= Lr and y <= x <= 2 * Lr - y):
                continue
            d = abs(x - tx) + abs(y - ty)
            if best is None or d < best[0]:
                best = (d, (a, b))
    return best[1]


def recenter(gadget):
    """Translate a gadget so it sits fully in the bulk of its canonical
    lattice; raises if no color-preserving translation fits."""
    from qhw.lattice import build_color_code
    from qhw.place import gadget_in_bulk, translate_gadget

    graph = build_color_code(gadget.graph_params["L"])
    Lr = graph._Lr
    vs = [(c[1], c[2]) for c in gadget.defects]
    xs = [3 * a + 4 for a, b in vs]
    ys = [a + 2 * b for a, b in vs]
    cx, cy = (min(xs) + max(xs)) // 2, (min(ys) + max(ys)) // 2
    tx, ty = Lr, Lr // 3 + 4
    da0 = round((tx - cx) / 3)
    db0 = round((ty - cy - da0) / 2)
    for r in range(0, 8):
        for da in range(da0 - r, da0 + r + 1):
            for db in range(db0 - r, db0 + r + 1):
                if max(abs(da - da0), abs(db - db0)) != r:
                    continue
                if (da - db) % 3 != 0:
                    continue
                cand = translate_gadget(gadget, (da, db))
                if gadget_in_bulk(cand, graph):
                    return cand
    raise ValueError(f"{gadget.name}: no bulk placement on L={gadget.graph_params['L']}")


def wire(points: list[tuple], p_first: tuple, p_last: tuple, name: str) -> Gadget:
    """Wire gadget along same-color sublattice ``points`` (ends are nodes)."""
    assert len(points) >= 2 and len(points) % 2 == 0
    col = cc_color(*points[0])
    assert all(cc_color(*p) == col for p in points)
    defects = tuple(sorted(("v", *p) for p in points))
    nodes = (
        _vnode(points[0], p_first),
        _vnode(points[-1], p_last),
    )
    return Gadget(
        scenario=__import__("qhw.lattice", fromlist=["Scenario"]).Scenario.CC,
        kind=GadgetKind.WIRE,
        name=name,
        defects=defects,
        nodes=nodes,
        declared_excess=0,
        graph_params={"L": CANON_L},
    )


def straight_wire(n: int, direction: tuple, color: int = 0) -> Gadget:
    """n-defect straight wire along ``direction`` (recentered into the bulk)."""
    o = (color, 0)
    pts = [vertex_add(o, (direction[0] * i, direction[1] * i)) for i in range(n)]
    neg = (-direction[0], -direction[1])
    g = wire(pts, neg, direction, f"cc-wire-{color}-{direction[0]}_{direction[1]}-{n}")
    return recenter(g)


def bend_wire(n1: int, d1: tuple, n2: int, d2: tuple, color: int = 0) -> Gadget:
    """Wire with ``n1`` defects along d1 then ``n2`` along d2 (total even)."""
    o = (color, 0)
    pts = [vertex_add(o, (d1[0] * i, d1[1] * i)) for i in range(n1)]
    for j in range(1, n2 + 1):
        pts.append(vertex_add(pts[n1 - 1], (d2[0] * j, d2[1] * j)))
    neg = (-d1[0], -d1[1])
    return recenter(wire(
        pts, neg, d2, f"cc-bend-{color}-{d1[0]}_{d1[1]}-{n1}-{d2[0]}_{d2[1]}-{n2}"
    ))


def splitting() -> Gadget:
    """Splitting gadget: a collinear one-of-each-color core plus three arm
    nodes one sublattice step out; covered by three rhombi (all FALSE) or the
    three-triangle core flip plus outward chains (all TRUE)."""
    o = (0, 0)
    core = [o, vertex_add(o, (1, 0)), vertex_add(o, (2, 0))]
    arm_dirs = {0: (-1, -1), 1: (1, -2), 2: (2, -1)}
    arms = [vertex_add(core[c], arm_dirs[c]) for c in range(3)]
    defects = tuple(sorted(("v", *v) for v in core + arms))
    nodes = tuple(_vnode(arms[c], arm_dirs[c]) for c in range(3))
    from qhw.lattice import Scenario

    return recenter(Gadget(
        scenario=Scenario.CC,
        kind=GadgetKind.SPLITTING,
        name="cc-splitting",
        defects=defects,
        nodes=nodes,
        declared_excess=0,
        graph_params={"L": CANON_L},
    ))


def element(k: int, color: int = 0) -> Gadget:
    """Element gadget with k same-color nodes on a horizontal zigzag; the
    odd defect count forces exactly one TRUE node in a minimal cover."""
    assert k >= 1
    o = (color, 0)
    pts = [o]
    for i in range(k - 1):
        pts.append(vertex_add(pts[-1], (1, 1)))
        pts.append(vertex_add(pts[-1], (2, -1)))
    node_pts = pts[0::2]
    assert len(node_pts) == k
    defects = tuple(sorted(("v", *p) for p in pts))
    nodes = tuple(_vnode(p, DOWN) for p in node_pts)
    from qhw.lattice import Scenario

    return recenter(Gadget(
        scenario=Scenario.CC,
        kind=GadgetKind.ELEMENT,
        name=f"cc-element-{color}-{k}",
        defects=defects,
        nodes=nodes,
        declared_excess=0,
        graph_params={"L": CANON_L},
    ))


def crossing_candidate(
    thru_color: int,
    cross_color: int,
    thru_dir: tuple,
    cross_dir: tuple,
    cross_base: tuple,
    n: int = 4,
) -> Gadget:
    """Candidate crossing gadget: a through-wire of ``thru_color`` along
    ``thru_dir`` and a crossing wire of ``cross_color`` along ``cross_dir``
    offset by ``cross_base`` (relative to the through line), n defects each.

    Used by the geometry search; only certified candidates are shipped.
    """
    o_t = (thru_color, 0)
    half = n // 2
    thru_pts = [
        vertex_add(o_t, (thru_dir[0] * i, thru_dir[1] * i)) for i in range(-half, n - half)
    ]
    o_c = vertex_add(o_t, cross_base)
    assert cc_color(*o_c) == cross_color, (cc_color(*o_c), cross_color)
    cross_pts = [
        vertex_add(o_c, (cross_dir[0] * i, cross_dir[1] * i))
        for i in range(-half, n - half)
    ]
    defects = tuple(sorted(("v", *v) for v in thru_pts + cross_pts))
    if len(set(defects)) != len(thru_pts) + len(cross_pts):
        raise ValueError("overlapping wires")
    neg_t = (-thru_dir[0], -thru_dir[1])
    neg_c = (-cross_dir[0], -cross_dir[1])
    nodes = (
        _vnode(thru_pts[0], neg_t),
        _vnode(thru_pts[-1], thru_dir),
        _vnode(cross_pts[0], neg_c),
        _vnode(cross_pts[-1], cross_dir),
    )
    from qhw.lattice import Scenario

    return recenter(Gadget(
        scenario=Scenario.CC,
        kind=GadgetKind.CROSSING,
        name=(
            f"cc-crossing-{thru_color}{cross_color}-{thru_dir[0]}_{thru_dir[1]}"
            f"-{cross_dir[0]}_{cross_dir[1]}-{cross_base[0]}_{cross_base[1]}"
        ),
        defects=defects,
        nodes=nodes,
        declared_excess=0,
        graph_params={"L": CANON_L},
    ))
