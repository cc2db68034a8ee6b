"""Gadgets: typed defect patterns with certified catalogs of minimal covers.

A gadget is a set of defects (checks forced to 1), a designated subset of
*nodes* with partner slots in neighboring gadgets, a neighborhood ``R_g``
(union of 1-neighborhoods, 2-neighborhoods for fused Y defects), and an error
excess ``m_g``: the minimum over covering errors of the number of sites
touched inside ``R_g`` equals ``|g| + m_g``.

``enumerate_covers`` exhaustively lists every cover of the gadget whose
in-neighborhood cost stays within a budget, restricted to the gadget's search
region (``R_g``, one canonical connector chain per partner slot, plus any
declared extra locations such as boundary tails).  ``certify`` checks the
catalog against the gadget's declared contract.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from qhw.lattice import Check, DecodingGraph, DefectType, ErrorSet, Location, Scenario


class GadgetKind:
    WIRE = "wire"
    CROSSING = "crossing"
    ELEMENT = "element"
    SPLITTING = "splitting"
    SPECIAL_WIRE = "special-wire"


def full_degree(graph: DecodingGraph, loc: Location) -> int:
    """Generic (bulk) check degree of a location."""
    if graph.scenario is Scenario.CC:
        return 3
    if graph.scenario is Scenario.SC:
        return 2
    if loc[0] == "q":
        return 2
    # measurement flip: the gate-slice ones on patch 2 touch three detectors
    return 3 if (loc[1] == 2 and loc[4] == graph.t_gate - 1) else 2


@dataclass(frozen=True)
class Node:
    """A gadget node: its own checks, the partner defect position(s), and the
    canonical connector chain realizing a TRUE link."""

    checks: tuple
    partner: tuple
    connector: tuple
    dtype: DefectType


@dataclass
class Gadget:
    """A defect pattern plus everything needed to certify and place it."""

    scenario: Scenario
    kind: str
    name: str
    defects: tuple  # sorted tuple of checks
    nodes: tuple  # tuple of Node, fixed order
    declared_excess: int
    fused: tuple = ()  # tuple of (vertex check, face check) pairs read as Y
    extra_locations: tuple = ()  # search-region locations beyond R_g + connectors
    graph_params: dict = field(default_factory=dict)  # canonical certification lattice
    allow_boundary: bool = False  # special wires deliberately touch the boundary

    def k_of(self):
        fused_checks = {c for pair in self.fused for c in pair}
        return lambda chk: 2 if chk in fused_checks else 1

    def neighborhood(self, graph: DecodingGraph) -> frozenset:
        return graph.neighborhood(self.defects, self.k_of())

    def partner_checks(self) -> frozenset:
        return frozenset(c for n in self.nodes for c in n.partner)

    def region(self, graph: DecodingGraph) -> frozenset:
        locs = set(self.neighborhood(graph))
        for n in self.nodes:
            locs.update(n.connector)
        locs.update(self.extra_locations)
        if graph.scenario is Scenario.SC:
            # the sibling variable of a reachable site costs nothing extra
            sites = {graph.site_of(l) for l in locs}
            for site in sites:
                for var in ("z", "x"):
                    locs.add((var, *site))
        return frozenset(l for l in locs if graph.location_exists(l))


@dataclass(frozen=True)
class Cover:
    """One catalog entry: an error set with its node truth values."""

    locations: tuple
    truth: tuple  # one bool per node
    in_weight: int  # sites touched inside R_g
    out_weight: int  # sites outside R_g and outside all connector chains
    total_weight: int  # all sites


@dataclass
class Contract:
    """Allowed truth tables for each gadget kind."""

    kind: str
    n_nodes: int

    def allowed(self) -> set[tuple]:
        k = self.n_nodes
        if self.kind in (GadgetKind.WIRE, GadgetKind.SPECIAL_WIRE):
            return {(False,) * k, (True,) * k}
        if self.kind == GadgetKind.SPLITTING:
            return {(False,) * k, (True,) * k}
        if self.kind == GadgetKind.ELEMENT:
            return {
                tuple(i == j for i in range(k)) for j in range(k)
            }
        if self.kind == GadgetKind.CROSSING:
            # nodes ordered pair0a, pair0b, pair1a, pair1b
            return {
                (a, a, b, b) for a in (False, True) for b in (False, True)
            }
        raise ValueError(f"no contract for kind {self.kind!r}")


@dataclass
class CertReport:
    gadget: str
    passed: bool
    measured_excess: int | None
    truth_set: set
    failures: list
    n_covers: int

    def __str__(self):
        state = "PASS" if self.passed else "FAIL"
        return f"{state} {self.gadget}: excess={self.measured_excess} covers={self.n_covers}" + (
            "" if self.passed else " [" + "; ".join(self.failures) + "]"
        )


def enumerate_covers(
    gadget: Gadget,
    graph: DecodingGraph,
    budget_slack: int = 0,
    max_entries: int = 400000,
) -> list[Cover]:
    """All covers with in-neighborhood site cost <= |g| + declared excess +
    ``budget_slack``, with syndrome contained in g plus partner positions.

    Deterministic: the search branches on the lowest-index pending check and
    candidates in sorted order with inclusion-exclusion canonicalization.
    """
    region = sorted(gadget.region(graph))
    if len(region) > 420:
        raise ValueError(
            f"search region of {gadget.name} has {len(region)} locations; too large"
        )
    if not gadget.allow_boundary:
        for n in gadget.nodes:
            for c in n.partner:
                if not graph.check_exists(c):
                    raise ValueError(f"{gadget.name}: partner check {c} off-lattice")
        for l in region:
            if len(graph.checks_of(l)) < full_degree(graph, l):
                raise ValueError(
                    f"{gadget.name}: region location {l} touches the lattice boundary"
                )
    nbhd = gadget.neighborhood(graph)
    conn_locs = {l for n in gadget.nodes for l in n.connector}
    gset = frozenset(gadget.defects)
    partner = gadget.partner_checks()

    # index checks touched by the region
    checks = sorted({c for l in region for c in graph.checks_of(l)})
    cidx = {c: i for i, c in enumerate(checks)}
    required_mask = 0
    partner_mask = 0
    for c in gadget.defects:
        if c in cidx:
            required_mask |= 1 << cidx[c]
    missing = [c for c in gadget.defects if c not in cidx]
    if missing:
        raise ValueError(f"{gadget.name}: defects {missing} untouched by region")
    for c in partner:
        if c in cidx:
            partner_mask |= 1 << cidx[c]
    free_mask = required_mask | partner_mask

    loc_syn = []
    loc_in = []  # site key if location counts toward R_g, else None
    loc_site = []
    for l in region:
        m = 0
        for c in graph.checks_of(l):
            m |= 1 << cidx[c]
        loc_syn.append(m)
        loc_site.append(graph.site_of(l))
        loc_in.append(graph.site_of(l) if l in nbhd else None)

    cand_of_check = [
        [i for i, l in enumerate(region) if loc_syn[i] >> k & 1] for k in range(len(checks))
    ]
    budget = len(gadget.defects) + gadget.declared_excess + budget_slack

    # greedy disjoint-defect lower bound on additional in-R sites needed
    sites_of_check = [
        frozenset(loc_site[i] for i in cand_of_check[k] if loc_in[i] is not None)
        for k in range(len(checks))
    ]

    results: list[Cover] = []

    def lower_bound(syn: int, in_sites: frozenset) -> int:
        need = 0
        used: set = set()
        for k in range(len(checks)):
            if (required_mask >> k & 1) and not (syn >> k & 1):
                if sites_of_check[k] & in_sites:
                    continue  # satisfiable via the sibling variable of a paid site
                s = sites_of_check[k]
                if s and not (s & used):
                    need += 1
                    used |= s
        return need

    def dfs(syn: int, chosen: tuple, excluded: frozenset, in_sites: frozenset, all_sites: frozenset):
        if len(results) > max_entries:
            raise RuntimeError(f"{gadget.name}: catalog exceeded {max_entries} entries")
        if len(in_sites) + lower_bound(syn, in_sites) > budget:
            return
        pending = -1
        # a check is pending if required-but-off, or disallowed-but-on
        bad = (syn & ~free_mask) | (required_mask & ~syn)
        if bad:
            pending = (bad & -bad).bit_length() - 1
        if pending < 0:
            truth = tuple(
                all(c in cidx and (syn >> cidx[c] & 1) for c in n.partner)
                for n in gadget.nodes
            )
            # reject covers that half-light a fused partner slot
            for n in gadget.nodes:
                lit = [c for c in n.partner if c in cidx and (syn >> cidx[c] & 1)]
                if lit and len(lit) != len(n.partner):
                    return
            in_w = len(in_sites)
            tot = len(all_sites)
            conn_sites = {
                loc_site[i]
                for i in chosen
                if region[i] in conn_locs and loc_in[i] is None
            }
            out_w = tot - in_w - len(conn_sites - in_sites)
            results.append(
                Cover(
                    locations=tuple(sorted(region[i] for i in chosen)),
                    truth=truth,
                    in_weight=in_w,
                    out_weight=out_w,
                    total_weight=tot,
                )
            )
            return
        new_excluded = set(excluded)
        for i in cand_of_check[pending]:
            if i in excluded or i in chosen:
                continue
            nin = in_sites if loc_in[i] is None else in_sites | {loc_in[i]}
            if len(nin) > budget:
                new_excluded.add(i)
                continue
            dfs(
                syn ^ loc_syn[i],
                chosen + (i,),
                frozenset(new_excluded),
                nin,
                all_sites | {loc_site[i]},
            )
            new_excluded.add(i)

    dfs(0, (), frozenset(), frozenset(), frozenset())
    # keep deterministic order
    results.sort(key=lambda cv: (cv.in_weight, cv.total_weight, cv.truth, cv.locations))
    return results


def minimal_covers(gadget: Gadget, graph: DecodingGraph, slack: int = 0) -> list[Cover]:
    """Covers at the measured minimum in-neighborhood cost (+``slack`` tiers)."""
    allc = enumerate_covers(gadget, graph, budget_slack=slack)
    if not allc:
        return []
    best = min(c.in_weight for c in allc)
    return [c for c in allc if c.in_weight <= best + slack]


def error_excess(gadget: Gadget, graph: DecodingGraph) -> int:
    """Measured excess; asserts Lemma-2 nonnegativity for isolated defects."""
    covers = enumerate_covers(gadget, graph, budget_slack=0)
    if not covers:
        raise ValueError(f"{gadget.name}: no cover within declared budget")
    m = min(c.in_weight for c in covers) - len(gadget.defects)
    if m < 0 and _defects_isolated(gadget, graph):
        raise AssertionError(
            f"{gadget.name}: isolated defects but measured excess {m} < 0"
        )
    return m


def _defects_isolated(gadget: Gadget, graph: DecodingGraph) -> bool:
    ds = gadget.defects
    for i in range(len(ds)):
        for j in range(i + 1, len(ds)):
            d = graph.tanner_distance(ds[i], ds[j], cap=4)
            if d != -1 and d < 4:
                return False
    return True


def certify(gadget: Gadget, graph: DecodingGraph, contract: Contract) -> CertReport:
    """Check the gadget against its contract by exhaustive enumeration."""
    failures = []
    covers = enumerate_covers(gadget, graph, budget_slack=0)
    if not covers:
        return CertReport(gadget.name, False, None, set(), ["no cover found"], 0)
    best = min(c.in_weight for c in covers)
    m = best - len(gadget.defects)
    if m != gadget.declared_excess:
        failures.append(
            f"excess {m} != declared {gadget.declared_excess}"
        )
    minimal = [c for c in covers if c.in_weight == best]
    truth_set = {c.truth for c in minimal}
    allowed = contract.allowed()
    if truth_set != allowed:
        missing = allowed - truth_set
        extra = truth_set - allowed
        if missing:
            failures.append(f"missing truth assignments {sorted(missing)}")
        if extra:
            failures.append(f"forbidden truth assignments {sorted(extra)}")
    if _defects_isolated(gadget, graph) and m < 0:
        failures.append("Lemma-2 violation: isolated defects with negative excess")
    # parity consistency: the per-type TRUE-count parity vector of every entry
    # lies in one coset of {(0,0,0),(1,1,1)} (single errors flip either two
    # defects of one type or one defect of each type)
    vecs = set()
    for c in minimal:
        vec = tuple(
            sum(1 for n, t in zip(gadget.nodes, c.truth) if t and n.dtype is dtype) % 2
            for dtype in DefectType
        )
        vecs.add(vec)
    ref = min(vecs) if vecs else (0, 0, 0)
    for v in vecs:
        diff = tuple((a - b) % 2 for a, b in zip(v, ref))
        if diff not in ((0, 0, 0), (1, 1, 1)):
            failures.append(f"truth parity vector {v} outside coset of {ref}")
    if contract.kind == GadgetKind.SPECIAL_WIRE:
        # connector halves are excluded: they sit in the partner's neighborhood
        k = len(gadget.nodes)
        f_min = min(
            (c.in_weight + c.out_weight for c in minimal if c.truth == (False,) * k),
            default=None,
        )
        t_min = min(
            (c.in_weight + c.out_weight for c in minimal if c.truth == (True,) * k),
            default=None,
        )
        if f_min is None or t_min is None or t_min != f_min + 1:
            failures.append(
                f"special wire weights: FALSE {f_min}, TRUE {t_min}, want TRUE=FALSE+1"
            )
    return CertReport(gadget.name, not failures, m, truth_set, failures, len(minimal))


# ------------------------------------------------------------- GADGET files


def _coords_str(obj) -> str:
    return " ".join(str(v) for v in obj)


def dump_gadget(gadget: Gadget, covers: Sequence[Cover]) -> str:
    """Serialize a gadget and its certified minimal-cover catalog."""
    gp = gadget.graph_params
    params = " ".join(str(gp[k]) for k in sorted(gp))
    lines = [
        f"GADGET v1 {gadget.scenario} {gadget.kind} {gadget.declared_excess} {gadget.name} {params}".rstrip()
    ]
    for d in gadget.defects:
        lines.append(f"def {_coords_str(d)}")
    for i, n in enumerate(gadget.nodes):
        checks = " | ".join(_coords_str(c) for c in n.checks)
        partner = " | ".join(_coords_str(c) for c in n.partner)
        conn = " | ".join(_coords_str(l) for l in n.connector)
        lines.append(f"node {i} {n.dtype} checks {checks} @ partner {partner} @ conn {conn}")
    for pair in gadget.fused:
        lines.append(f"fused {_coords_str(pair[0])} | {_coords_str(pair[1])}")
    for l in gadget.extra_locations:
        lines.append(f"extra {_coords_str(l)}")
    for c in covers:
        bits = "".join("1" if t else "0" for t in c.truth)
        locs = " | ".join(_coords_str(l) for l in c.locations)
        lines.append(
            f"cover {bits or '-'} {c.in_weight} {c.out_weight} {c.total_weight} {locs}"
        )
    return "\n".join(lines) + "\n"


def _parse_tuple(tokens: list[str]) -> tuple:
    out = []
    for t in tokens:
        try:
            out.append(int(t))
        except ValueError:
            out.append(t)
    return tuple(out)


def load_gadget(text: str) -> tuple[Gadget, list[Cover]]:
    lines = [l for l in text.splitlines() if l.strip()]
    head = lines[0].split()
    if head[0] != "GADGET" or head[1] != "v1":
        raise ValueError("not a GADGET v1 file")
    scenario = Scenario(head[2])
    kind = head[3]
    excess = int(head[4])
    name = head[5]
    params = [int(v) for v in head[6:]]
    if scenario is Scenario.TCNOT:
        gp = {"L": params[0], "rounds": params[1]}
    else:
        gp = {"L": params[0]}
    defects = []
    nodes = []
    fused = []
    extras = []
    covers = []
    for line in lines[1:]:
        parts = line.split()
        if parts[0] == "def":
            defects.append(_parse_tuple(parts[1:]))
        elif parts[0] == "node":
            dtype = DefectType(parts[2])
            body = " ".join(parts[3:])
            seg_c, seg_p, seg_n = body.split(" @ ")
            def _tuples(seg, prefix):
                seg = seg[len(prefix):].strip()
                if not seg:
                    return ()
                return tuple(_parse_tuple(s.split()) for s in seg.split(" | "))
            checks = _tuples(seg_c, "checks")
            partner = _tuples(seg_p, "partner")
            conn = _tuples(seg_n, "conn")
            nodes.append(Node(checks, partner, conn, dtype))
        elif parts[0] == "fused":
            txt = " ".join(parts[1:])
            a, b = txt.split(" | ")
            fused.append((_parse_tuple(a.split()), _parse_tuple(b.split())))
        elif parts[0] == "extra":
            extras.append(_parse_tuple(parts[1:]))
        elif parts[0] == "cover":
            bits = parts[1]
            truth = tuple(b == "1" for b in bits) if bits != "-" else ()
            in_w, out_w, tot = int(parts[2]), int(parts[3]), int(parts[4])
            locs_txt = " ".join(parts[5:])
            locs = tuple(
                _parse_tuple(seg.split()) for seg in locs_txt.split(" | ") if seg
            )
            covers.append(Cover(locs, truth, in_w, out_w, tot))
        else:
            raise ValueError(f"unknown GADGET record {parts[0]!r}")
    g = Gadget(
        scenario=scenario,
        kind=kind,
        name=name,
        defects=tuple(sorted(defects)),
        nodes=tuple(nodes),
        declared_excess=excess,
        fused=tuple(fused),
        extra_locations=tuple(extras),
        graph_params=gp,
    )
    return g, covers
