"""Search surface-code crossing gadget geometry (XZ at excess -1, YZ/XY at +1).

Sweeps relative placements of a through wire and a crossing wire (plus a few
optional interior defects for the XZ case) and certifies each candidate.
"""

import itertools
import sys
import time

from qhw.gadgets import Contract, Gadget, GadgetKind, enumerate_covers
from qhw.lattice import Scenario, build_surface_code
import qhw.templates_sc as sc


def seg_cross(p1, p2, q1, q2):
    def o(a, b, c):
        return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])

    return o(p1, p2, q1) * o(p1, p2, q2) < 0 and o(q1, q2, p1) * o(q1, q2, p2) < 0


def build(descs, nodes, excess, name):
    g = sc._gadget(GadgetKind.CROSSING, name, descs, nodes, excess)
    try:
        return sc.recenter(g)
    except ValueError:
        return None


def center_face(f):
    return (f[0] + 0.5, f[1] + 0.5)


def assess(graph, cand):
    try:
        covers = enumerate_covers(cand, graph, budget_slack=0)
    except Exception:
        return None
    if not covers:
        return None
    best = min(c.in_weight for c in covers)
    m = best - len(cand.defects)
    ts = {c.truth for c in covers if c.in_weight == best}
    return m, len(ts)


def search_xz(graph, max_extras=2, stop_at=3):
    print("== XZ crossing (target excess -1, 4 combos)")
    t0 = time.time()
    hits = []
    zpts = [(-2, 0), (0, 0), (2, 0), (4, 0)]
    pool = [("v", (x, y)) for x in range(-1, 4) for y in range(-2, 3) if (x, y) not in zpts]
    pool += [("f", (x, y)) for x in range(-1, 4) for y in range(-3, 3)]
    for fb_x in range(0, 3):
        for fb_y in range(-3, 1):
            fpts = [(fb_x, fb_y + 2 * i) for i in range(-1, 3)]
            if not seg_cross((-2, 0), (4, 0), center_face(fpts[0]), center_face(fpts[-1])):
                continue
            for k in range(0, max_extras + 1):
                for extras in itertools.combinations(pool, k):
                    if any(e[0] == "f" and e[1] in fpts for e in extras):
                        continue
                    descs = [("v", p) for p in zpts] + [("f", p) for p in fpts] + list(extras)
                    nodes = (
                        sc._node(("v", zpts[0]), ("v", (-4, 0))),
                        sc._node(("v", zpts[-1]), ("v", (6, 0))),
                        sc._node(("f", fpts[0]), ("f", (fb_x, fb_y - 4))),
                        sc._node(("f", fpts[-1]), ("f", (fb_x, fb_y + 6))),
                    )
                    cand = build(descs, nodes, -1, f"sc-xz-{fb_x}_{fb_y}-{extras}")
                    if cand is None:
                        continue
                    res = assess(graph, cand)
                    if res and res == (-1, 4):
                        hits.append((fb_x, fb_y, extras))
                        print(
                            f"HIT XZ base=({fb_x},{fb_y}) extras={extras} ({time.time()-t0:.0f}s)",
                            flush=True,
                        )
                        if len(hits) >= stop_at:
                            return hits
            print(f"   swept base ({fb_x},{fb_y})  ({time.time()-t0:.0f}s)", flush=True)
    return hits


def search_yz(graph, y_orient="SE"):
    """Y wire through (diagonal), Z wire crossing; Z pair spacing L1=2."""
    print(f"== YZ crossing, Y orient {y_orient} (target excess +1, 4 combos)")
    t0 = time.time()
    hits = []
    ypts = [(0, 0), (2, 2)]
    z_steps = ((1, -1), (-1, 1), (2, 0), (0, 2), (1, 1))
    for zb_x in range(-2, 5):
        for zb_y in range(-2, 5):
            for step in z_steps:
                z1 = (zb_x, zb_y)
                z2 = (zb_x + step[0], zb_y + step[1])
                zpts = [z1, z2]
                if len({*ypts, *zpts}) != 4:
                    continue
                if not seg_cross((-1.4, -1.4), (3.4, 3.4), z1, z2):
                    continue
                descs = [("y", ypts[0], y_orient), ("y", ypts[1], y_orient)] + [
                    ("v", p) for p in zpts
                ]
                p1 = (z1[0] - step[0], z1[1] - step[1])
                p2 = (z2[0] + step[0], z2[1] + step[1])
                try:
                    nodes = (
                        sc._node(("y", ypts[0], y_orient), ("y", (-2, -2), y_orient)),
                        sc._node(("y", ypts[1], y_orient), ("y", (4, 4), y_orient)),
                        sc._node(("v", z1), ("v", p1)),
                        sc._node(("v", z2), ("v", p2)),
                    )
                except Exception:
                    continue
                cand = build(descs, nodes, 1, f"sc-yz-{zb_x}_{zb_y}-{step}")
                if cand is None:
                    continue
                res = assess(graph, cand)
                if res:
                    m, nts = res
                    if (m, nts) == (1, 4):
                        hits.append((zb_x, zb_y, step))
                        print(
                            f"HIT YZ z1=({zb_x},{zb_y}) step={step}  ({time.time()-t0:.0f}s)",
                            flush=True,
                        )
                    elif nts > 1:
                        print(f"   yz ({zb_x},{zb_y}) {step}: m={m} |T|={nts}", flush=True)
    return hits


if __name__ == "__main__":
    graph = build_surface_code(sc.CANON_L)
    which = sys.argv[1] if len(sys.argv) > 1 else "all"
    if which in ("yz", "all"):
        search_yz(graph)
    if which in ("xz", "all"):
        search_xz(graph)
