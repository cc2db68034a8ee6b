"""Translation of gadgets and covers across the lattice.

Bulk gadget geometry is translation invariant: shifting every coordinate of a
certified gadget by a color/sublattice-preserving offset yields an equally
certified gadget.  The compiler certifies each template shape once on a
canonical lattice and instantiates it by translation.
"""

from __future__ import annotations

from qhw.gadgets import Cover, Gadget, Node
from qhw.lattice import Check, DecodingGraph, Location, Scenario


def shift_check(scenario: Scenario, chk: Check, d: tuple) -> Check:
    if scenario is Scenario.CC:
        return ("v", chk[1] + d[0], chk[2] + d[1])
    if scenario is Scenario.SC:
        return (chk[0], chk[1] + d[0], chk[2] + d[1])
    return ("d", chk[1], chk[2] + d[0], chk[3] + d[1], chk[4] + d[2])


def shift_loc(scenario: Scenario, loc: Location, d: tuple) -> Location:
    if scenario is Scenario.CC:
        return ("t", loc[1] + d[0], loc[2] + d[1], loc[3])
    if scenario is Scenario.SC:
        return (loc[0], loc[1], loc[2] + d[0], loc[3] + d[1])
    if loc[0] == "q":
        return ("q", loc[1], loc[2], loc[3] + d[0], loc[4] + d[1], loc[5] + d[2])
    return ("m", loc[1], loc[2] + d[0], loc[3] + d[1], loc[4] + d[2])


def valid_offset(scenario: Scenario, d: tuple) -> bool:
    """Offsets must preserve colors (cc) / bipartite classes where relevant."""
    if scenario is Scenario.CC:
        return (d[0] - d[1]) % 3 == 0
    return True


def translate_gadget(gadget: Gadget, d: tuple, name: str | None = None) -> Gadget:
    s = gadget.scenario
    if not valid_offset(s, d):
        raise ValueError(f"offset {d} does not preserve the sublattice")
    nodes = tuple(
        Node(
            checks=tuple(shift_check(s, c, d) for c in n.checks),
            partner=tuple(shift_check(s, c, d) for c in n.partner),
            connector=tuple(shift_loc(s, l, d) for l in n.connector),
            dtype=n.dtype,
        )
        for n in gadget.nodes
    )
    return Gadget(
        scenario=s,
        kind=gadget.kind,
        name=name or gadget.name,
        defects=tuple(sorted(shift_check(s, c, d) for c in gadget.defects)),
        nodes=nodes,
        declared_excess=gadget.declared_excess,
        fused=tuple(
            (shift_check(s, a, d), shift_check(s, b, d)) for a, b in gadget.fused
        ),
        extra_locations=tuple(shift_loc(s, l, d) for l in gadget.extra_locations),
        graph_params=dict(gadget.graph_params),
        allow_boundary=gadget.allow_boundary,
    )


def translate_cover(scenario: Scenario, cover: Cover, d: tuple) -> Cover:
    return Cover(
        locations=tuple(sorted(shift_loc(scenario, l, d) for l in cover.locations)),
        truth=cover.truth,
        in_weight=cover.in_weight,
        out_weight=cover.out_weight,
        total_weight=cover.total_weight,
    )


def gadget_in_bulk(gadget: Gadget, graph: DecodingGraph) -> bool:
    """True when every region location has its full bulk degree and all
    partner checks exist."""
    from qhw.gadgets import full_degree

    try:
        region = gadget.region(graph)
    except Exception:
        return False
    for n in gadget.nodes:
        for c in n.partner:
            if not graph.check_exists(c):
                return False
    for c in gadget.defects:
        if not graph.check_exists(c):
            return False
    for l in region:
        if not graph.location_exists(l):
            return False
        if len(graph.checks_of(l)) < full_degree(graph, l):
            return False
    return True
