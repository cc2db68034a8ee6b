"""Search for color-code crossing gadget geometry.

Scans crossing-wire placements augmented with a few interior defects and
certifies each candidate against the crossing contract (excess 0, four truth
combinations).  Results are printed as reusable construction parameters.
"""

import itertools
import sys
import time
from collections import defaultdict

from qhw.gadgets import Contract, Gadget, GadgetKind, Node, enumerate_covers
from qhw.lattice import Scenario, build_color_code, cc_color
import qhw.templates_cc as cc


def euclid(v):
    return (v[0] + v[1] / 2, v[1] * 0.8660254)


def seg_cross(p1, p2, q1, q2):
    def o(a, b, c):
        return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])

    return o(p1, p2, q1) * o(p1, p2, q2) < 0 and o(q1, q2, p1) * o(q1, q2, p2) < 0


def candidate(thru_c, cross_c, td, cd, base, extras, n=4):
    o_t = (thru_c, 0)
    half = n // 2
    thru_pts = [cc.vertex_add(o_t, (td[0] * i, td[1] * i)) for i in range(-half, n - half)]
    o_c = cc.vertex_add(o_t, base)
    cross_pts = [
        cc.vertex_add(o_c, (cd[0] * i, cd[1] * i)) for i in range(-half, n - half)
    ]
    allpts = thru_pts + cross_pts + list(extras)
    if len(set(allpts)) != len(allpts):
        return None
    defects = tuple(sorted(("v", *v) for v in allpts))
    neg_t = (-td[0], -td[1])
    neg_c = (-cd[0], -cd[1])
    nodes = (
        cc._vnode(thru_pts[0], neg_t),
        cc._vnode(thru_pts[-1], td),
        cc._vnode(cross_pts[0], neg_c),
        cc._vnode(cross_pts[-1], cd),
    )
    g = Gadget(
        scenario=Scenario.CC,
        kind=GadgetKind.CROSSING,
        name=f"cand-{thru_c}{cross_c}-{td}-{cd}-{base}-{sorted(extras)}",
        defects=defects,
        nodes=nodes,
        declared_excess=0,
        graph_params={"L": cc.CANON_L},
    )
    try:
        return cc.recenter(g)
    except ValueError:
        return None


def main():
    graph = build_color_code(cc.CANON_L)
    thru_c = 0
    td = (1, 1)
    t0 = time.time()
    hits = []
    for cross_c in (1, 2):
        for cd in cc.SUB_STEPS:
            if cd in ((1, 1), (-1, -1)):
                continue
            bases = []
            for ba in range(-4, 5):
                for bb in range(-4, 5):
                    if cc_color(thru_c + ba, bb) != cross_c:
                        continue
                    t0p, t1p = (thru_c - 2, -2), (thru_c + 1, 1)
                    c0p = (thru_c + ba - 2 * cd[0], bb - 2 * cd[1])
                    c1p = (thru_c + ba + cd[0], bb + cd[1])
                    if seg_cross(euclid(t0p), euclid(t1p), euclid(c0p), euclid(c1p)):
                        bases.append((ba, bb))
            pool = [
                (a, b)
                for a in range(-3, 5)
                for b in range(-3, 4)
                if abs(euclid((a, b))[0] - euclid((thru_c, 0))[0]) < 3.1
                and abs(euclid((a, b))[1]) < 3.1
            ]
            for base in bases:
                for k in (1, 2):
                    for extras in itertools.combinations(pool, k):
                        cand = candidate(thru_c, cross_c, td, cd, base, extras)
                        if cand is None:
                            continue
                        try:
                            covers = enumerate_covers(cand, graph, budget_slack=0)
                        except Exception:
                            continue
                        if not covers:
                            continue
                        best = min(c.in_weight for c in covers)
                        m = best - len(cand.defects)
                        ts = {c.truth for c in covers if c.in_weight == best}
                        if m == 0 and len(ts) == 4:
                            hits.append((cross_c, cd, base, extras))
                            print(
                                f"HIT cross_c={cross_c} cd={cd} base={base} extras={extras}"
                                f"  ({time.time()-t0:.0f}s)",
                                flush=True,
                            )
                if len([h for h in hits if h[0] == cross_c]) >= 3:
                    break
            if len([h for h in hits if h[0] == cross_c]) >= 3:
                break
    print("TOTAL HITS:", len(hits), f"({time.time()-t0:.0f}s)")
    for h in hits[:20]:
        print("  ", h)


if __name__ == "__main__":
    main()
