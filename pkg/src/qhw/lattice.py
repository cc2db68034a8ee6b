"""Decoding graphs for the three minimum-weight decoding scenarios.

Three Tanner-graph geometries are provided:

* ``cc``    -- triangular color code (dual picture: qubits on triangles of a
  triangular lattice, checks on its 3-colorable vertices), phase-flip noise.
* ``sc``    -- planar surface code on a square lattice with two variables per
  qubit (X part and Z part of a Pauli), vertex checks detect the Z variables
  and face checks detect the X variables.
* ``tcnot`` -- two surface-code patches measured repeatedly with a transversal
  CNOT after half of the rounds; variables are qubit phase flips at integer
  times and measurement flips at half-integer times, checks are detectors.

Coordinates are integer tuples throughout so that positions hash and compare
exactly.  Checks and error locations are plain tuples with a leading tag:

* color code: check ``('v', a, b)``, location ``('t', a, b, o)`` with ``o=0``
  for the up triangle ``{(a,b),(a+1,b),(a,b+1)}`` and ``o=1`` for the down
  triangle ``{(a+1,b),(a,b+1),(a+1,b+1)}``.
* surface code: checks ``('v', x, y)`` / ``('f', x, y)``; locations
  ``('z', o, x, y)`` and ``('x', o, x, y)`` for the Z/X variable of edge
  ``(o, x, y)`` where ``o`` is ``'h'`` or ``'v'``.
* tCNOT: checks ``('d', p, x, y, t)``; locations ``('q', p, o, x, y, t)`` and
  ``('m', p, x, y, t)`` (the measurement between detector rounds t and t+1).
"""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Iterator

Coord = tuple
Check = tuple
Location = tuple


class Scenario(str, enum.Enum):
    """The three decoding problems."""

    CC = "cc"
    SC = "sc"
    TCNOT = "tcnot"

    def __str__(self):
        return self.value


class DefectType(str, enum.Enum):
    A = "A"
    B = "B"
    C = "C"

    def __str__(self):
        return self.value


#: fixed color -> type map for the color code (any fixed bijection works)
CC_COLOR_TO_TYPE = (DefectType.A, DefectType.B, DefectType.C)


def cc_color(a: int, b: int) -> int:
    """3-coloring of the triangular lattice vertices (0, 1, 2)."""
    return (a - b) % 3


@dataclass(frozen=True)
class ErrorSet:
    """An assignment of error values to locations (the support of an error)."""

    active: frozenset

    @staticmethod
    def of(locs: Iterable[Location]) -> "ErrorSet":
        return ErrorSet(frozenset(locs))

    def __xor__(self, other: "ErrorSet") -> "ErrorSet":
        return ErrorSet(self.active ^ other.active)

    def __or__(self, other: "ErrorSet") -> "ErrorSet":
        return ErrorSet(self.active | other.active)

    def __len__(self):
        return len(self.active)


@dataclass(frozen=True)
class Syndrome:
    """The set of triggered checks."""

    triggered: frozenset

    @staticmethod
    def of(checks: Iterable[Check]) -> "Syndrome":
        return Syndrome(frozenset(checks))

    def __xor__(self, other: "Syndrome") -> "Syndrome":
        return Syndrome(self.triggered ^ other.triggered)

    def __len__(self):
        return len(self.triggered)


class DecodingGraph:
    """Tanner graph of one decoding problem.

    Adjacency is computed from coordinates on demand; nothing is materialized
    unless an explicit index is requested (serialization, H-matrix oracles).
    """

    def __init__(self, scenario: Scenario, params: dict):
        self.scenario = scenario
        self.params = dict(params)
        self._explicit = None  # set for graphs loaded from DGRAPH files
        if scenario is Scenario.CC:
            L = params["L"]
            if L < 3 or L % 2 == 0:
                raise ValueError(f"color code size must be odd and >= 3, got {L}")
            self._Lr = 3 * (L - 1) // 2
        elif scenario is Scenario.SC:
            L = params["L"]
            if L < 3 or L % 2 == 0:
                raise ValueError(f"surface code size must be odd and >= 3, got {L}")
        elif scenario is Scenario.TCNOT:
            L, rounds = params["L"], params["rounds"]
            if L < 3 or L % 2 == 0:
                raise ValueError(f"patch size must be odd and >= 3, got {L}")
            if rounds != 2 * L:
                raise ValueError(f"expected rounds == 2L == {2*L}, got {rounds}")
            self.t_gate = rounds // 2

    # ------------------------------------------------------------------ CC

    def _cc_stim(self, kind: str, a: int, b: int) -> tuple[int, int]:
        # embed the dual lattice into the triangular-region coordinate system
        if kind == "v":
            return 3 * a + 4, a + 2 * b
        if kind == "up":
            return 3 * a + 5, a + 2 * b + 1
        return 3 * a + 6, a + 2 * b + 2  # down

    def _cc_in_region(self, xy: tuple[int, int]) -> bool:
        x, y = xy
        return 0 <= y <= self._Lr and y <= x <= 2 * self._Lr - y

    # ------------------------------------------------------------- existence

    def check_exists(self, chk: Check) -> bool:
        if self._explicit is not None:
            return chk in self._explicit["chk_set"]
        s = self.scenario
        if s is Scenario.CC:
            _, a, b = chk
            return self._cc_in_region(self._cc_stim("v", a, b))
        if s is Scenario.SC:
            L = self.params["L"]
            tag, x, y = chk
            if tag == "v":
                return 1 <= x <= L - 1 and 0 <= y <= L - 1
            if tag == "f":
                return 0 <= x <= L - 1 and 0 <= y <= L - 2
            return False
        L, rounds = self.params["L"], self.params["rounds"]
        _, p, x, y, t = chk
        return p in (1, 2) and 1 <= x <= L - 1 and 0 <= y <= L - 1 and 0 <= t <= rounds

    def location_exists(self, loc: Location) -> bool:
        if self._explicit is not None:
            return loc in self._explicit["loc_set"]
        s = self.scenario
        if s is Scenario.CC:
            _, a, b, o = loc
            return self._cc_in_region(self._cc_stim("up" if o == 0 else "down", a, b))
        if s is Scenario.SC:
            L = self.params["L"]
            _, o, x, y = loc
            if o == "h":
                return 0 <= x <= L - 1 and 0 <= y <= L - 1
            if o == "v":
                return 1 <= x <= L - 1 and 0 <= y <= L - 2
            return False
        L, rounds = self.params["L"], self.params["rounds"]
        if loc[0] == "q":
            _, p, o, x, y, t = loc
            if not 0 <= t <= rounds or p not in (1, 2):
                return False
            if o == "h":
                return 0 <= x <= L - 1 and 0 <= y <= L - 1
            if o == "v":
                return 1 <= x <= L - 1 and 0 <= y <= L - 2
            return False
        if loc[0] == "m":
            _, p, x, y, t = loc
            return (
                p in (1, 2)
                and 1 <= x <= L - 1
                and 0 <= y <= L - 1
                and 0 <= t <= rounds - 1
            )
        return False

    # ------------------------------------------------------------- adjacency

    def checks_of(self, loc: Location) -> list[Check]:
        """Existing checks incident to a location, in sorted order."""
        if self._explicit is not None:
            return self._explicit["loc_adj"][loc]
        s = self.scenario
        out: list[Check] = []
        if s is Scenario.CC:
            _, a, b, o = loc
            if o == 0:
                corners = ((a, b), (a + 1, b), (a, b + 1))
            else:
                corners = ((a + 1, b), (a, b + 1), (a + 1, b + 1))
            out = [("v", ca, cb) for ca, cb in corners]
        elif s is Scenario.SC:
            _, o, x, y = loc
            if loc[0] == "z":
                if o == "h":
                    out = [("v", x, y), ("v", x + 1, y)]
                else:
                    out = [("v", x, y), ("v", x, y + 1)]
            else:
                if o == "h":
                    out = [("f", x, y - 1), ("f", x, y)]
                else:
                    out = [("f", x - 1, y), ("f", x, y)]
        else:
            if loc[0] == "q":
                _, p, o, x, y, t = loc
                if o == "h":
                    vs = ((x, y), (x + 1, y))
                else:
                    vs = ((x, y), (x, y + 1))
                out = [("d", p, vx, vy, t) for vx, vy in vs]
            else:
                _, p, x, y, t = loc
                out = [("d", p, x, y, t), ("d", p, x, y, t + 1)]
                if p == 2 and t == self.t_gate - 1:
                    out.append(("d", 1, x, y, self.t_gate))
        return sorted(c for c in out if self.check_exists(c))

    def locations_of(self, chk: Check) -> list[Location]:
        """Existing locations incident to a check, in sorted order."""
        if self._explicit is not None:
            return self._explicit["chk_adj"][chk]
        s = self.scenario
        out: list[Location] = []
        if s is Scenario.CC:
            _, a, b = chk
            cand = [
                ("t", a, b, 0),
                ("t", a - 1, b, 0),
                ("t", a, b - 1, 0),
                ("t", a - 1, b, 1),
                ("t", a, b - 1, 1),
                ("t", a - 1, b - 1, 1),
            ]
            out = cand
        elif s is Scenario.SC:
            tag, x, y = chk
            if tag == "v":
                out = [
                    ("z", "h", x - 1, y),
                    ("z", "h", x, y),
                    ("z", "v", x, y),
                    ("z", "v", x, y - 1),
                ]
            else:
                out = [
                    ("x", "h", x, y),
                    ("x", "h", x, y + 1),
                    ("x", "v", x, y),
                    ("x", "v", x + 1, y),
                ]
        else:
            _, p, x, y, t = chk
            rounds = self.params["rounds"]
            out = [
                ("q", p, "h", x - 1, y, t),
                ("q", p, "h", x, y, t),
                ("q", p, "v", x, y, t),
                ("q", p, "v", x, y - 1, t),
                ("m", p, x, y, t - 1),
                ("m", p, x, y, t),
            ]
            if p == 1 and t == self.t_gate:
                out.append(("m", 2, x, y, self.t_gate - 1))
        return sorted(l for l in out if self.location_exists(l))

    # ------------------------------------------------------------ enumeration

    def all_checks(self) -> Iterator[Check]:
        if self._explicit is not None:
            yield from self._explicit["chk_list"]
            return
        s = self.scenario
        if s is Scenario.CC:
            Lr = self._Lr
            for a in range(-(2 * Lr), Lr + 1):
                for b in range(-(Lr), 2 * Lr + 1):
                    if self._cc_in_region(self._cc_stim("v", a, b)):
                        yield ("v", a, b)
        elif s is Scenario.SC:
            L = self.params["L"]
            for x in range(1, L):
                for y in range(L):
                    yield ("v", x, y)
            for x in range(L):
                for y in range(L - 1):
                    yield ("f", x, y)
        else:
            L, rounds = self.params["L"], self.params["rounds"]
            for p in (1, 2):
                for x in range(1, L):
                    for y in range(L):
                        for t in range(rounds + 1):
                            yield ("d", p, x, y, t)

    def all_locations(self) -> Iterator[Location]:
        if self._explicit is not None:
            yield from self._explicit["loc_list"]
            return
        s = self.scenario
        if s is Scenario.CC:
            Lr = self._Lr
            for a in range(-(2 * Lr), Lr + 1):
                for b in range(-(Lr), 2 * Lr + 1):
                    for o in (0, 1):
                        loc = ("t", a, b, o)
                        if self.location_exists(loc):
                            yield loc
        elif s is Scenario.SC:
            L = self.params["L"]
            for var in ("x", "z"):
                for x in range(L):
                    for y in range(L):
                        yield (var, "h", x, y)
                for x in range(1, L):
                    for y in range(L - 1):
                        yield (var, "v", x, y)
        else:
            L, rounds = self.params["L"], self.params["rounds"]
            for p in (1, 2):
                for t in range(rounds + 1):
                    for x in range(L):
                        for y in range(L):
                            yield ("q", p, "h", x, y, t)
                    for x in range(1, L):
                        for y in range(L - 1):
                            yield ("q", p, "v", x, y, t)
                for t in range(rounds):
                    for x in range(1, L):
                        for y in range(L):
                            yield ("m", p, x, y, t)

    # ------------------------------------------------------------- semantics

    def site_of(self, loc: Location):
        """The site a location belongs to (two SC variables share one qubit)."""
        if self.scenario is Scenario.SC:
            return loc[1:]
        return loc

    def weight(self, error: ErrorSet) -> int:
        """Number of distinct sites touched (Pauli support for ``sc``)."""
        return len({self.site_of(l) for l in error.active})

    def syndrome_of(self, error: ErrorSet) -> Syndrome:
        trig = set()
        for loc in error.active:
            for chk in self.checks_of(loc):
                trig ^= {chk}
        return Syndrome(frozenset(trig))

    def defect_type(self, chk: Check, fused: frozenset | None = None) -> DefectType:
        """Type of a defect; ``fused`` marks an SC vertex+face pair read as one
        Y defect (supply the pair itself)."""
        s = self.scenario
        if s is Scenario.CC:
            return CC_COLOR_TO_TYPE[cc_color(chk[1], chk[2])]
        if s is Scenario.SC:
            if fused is not None and chk in fused:
                return DefectType.B
            return DefectType.C if chk[0] == "v" else DefectType.A
        p, t = chk[1], chk[4]
        if p == 1:
            return DefectType.B
        return DefectType.C if t >= self.t_gate else DefectType.A

    def sc_adjacent_pair(self, vchk: Check, fchk: Check) -> bool:
        """True when an SC vertex check sits on a corner of a face check."""
        if vchk[0] != "v" or fchk[0] != "f":
            return False
        _, vx, vy = vchk
        _, fx, fy = fchk
        return vx in (fx, fx + 1) and vy in (fy, fy + 1)

    # ----------------------------------------------------- graph exploration

    def neighborhood(self, defects: Iterable[Check], k_of=None) -> frozenset:
        """Union of k-neighborhoods: locations at Tanner distance <= 2k-1.

        ``k_of`` maps a check to its radius k (defaults to 1 everywhere; the
        caller passes 2 for the constituents of a fused Y defect).
        """
        out = set()
        for chk in defects:
            k = 1 if k_of is None else k_of(chk)
            out |= self._ball(chk, 2 * k - 1)
        return frozenset(out)

    def _ball(self, chk: Check, radius: int) -> set:
        seen_c = {chk}
        seen_l: set = set()
        frontier_c = [chk]
        depth = 0
        while depth < radius and frontier_c:
            new_l = []
            for c in frontier_c:
                for l in self.locations_of(c):
                    if l not in seen_l:
                        seen_l.add(l)
                        new_l.append(l)
            depth += 1
            if depth >= radius or not new_l:
                break
            frontier_c = []
            for l in new_l:
                for c in self.checks_of(l):
                    if c not in seen_c:
                        seen_c.add(c)
                        frontier_c.append(c)
            depth += 1
        return seen_l

    def location_neighbors(self, loc: Location) -> list[Location]:
        """Locations adjacent to ``loc`` (sharing a check), sorted."""
        out = set()
        for chk in self.checks_of(loc):
            out.update(self.locations_of(chk))
        out.discard(loc)
        return sorted(out)

    def connected_components(self, error: ErrorSet) -> list[frozenset]:
        """Partition of an error into connected components under location
        adjacency, sorted by smallest member."""
        remaining = set(error.active)
        comps = []
        while remaining:
            seed = min(remaining)
            comp = {seed}
            queue = deque([seed])
            remaining.discard(seed)
            while queue:
                cur = queue.popleft()
                for nb in self.location_neighbors(cur):
                    if nb in remaining:
                        remaining.discard(nb)
                        comp.add(nb)
                        queue.append(nb)
            comps.append(frozenset(comp))
        return comps

    def tanner_distance(self, a, b, cap: int = 64) -> int:
        """BFS distance in the bipartite Tanner graph between two nodes
        (checks or locations); ``-1`` if further than ``cap``."""
        if a == b:
            return 0
        is_chk = self.check_exists(a)
        seen = {a}
        frontier = [a]
        for depth in range(1, cap + 1):
            nxt = []
            expand = self.locations_of if is_chk else self.checks_of
            for node in frontier:
                for nb in expand(node):
                    if nb == b:
                        return depth
                    if nb not in seen:
                        seen.add(nb)
                        nxt.append(nb)
            frontier = nxt
            is_chk = not is_chk
            if not frontier:
                return -1
        return -1


# ------------------------------------------------------------------ builders


def build_color_code(L: int) -> DecodingGraph:
    """Triangular color code with linear size (= distance) L, L odd."""
    return DecodingGraph(Scenario.CC, {"L": L})


def build_surface_code(L: int) -> DecodingGraph:
    """Planar surface code of distance L, L odd."""
    return DecodingGraph(Scenario.SC, {"L": L})


def build_tcnot_graph(L: int, rounds: int) -> DecodingGraph:
    """Two L x L surface-code patches, ``rounds`` = 2L measurement rounds,
    transversal CNOT applied after L rounds."""
    return DecodingGraph(Scenario.TCNOT, {"L": L, "rounds": rounds})


def syndrome_of(graph: DecodingGraph, error: ErrorSet) -> Syndrome:
    return graph.syndrome_of(error)


# -------------------------------------------------------------- logical data


def cc_bottom_logical(graph: DecodingGraph) -> list[Location]:
    """Bottom-boundary representative of the color-code logical (weight L)."""
    out = []
    Lr = graph._Lr
    for a in range(-(2 * Lr), Lr + 1):
        for b in range(-Lr, 2 * Lr + 1):
            for o in (0, 1):
                loc = ("t", a, b, o)
                if graph.location_exists(loc):
                    xy = graph._cc_stim("up" if o == 0 else "down", a, b)
                    if xy[1] == 0:
                        out.append((xy[0], loc))
    return [loc for _, loc in sorted(out)]


def cc_left_logical(graph: DecodingGraph) -> list[Location]:
    """Left-boundary representative of the color-code logical."""
    out = []
    Lr = graph._Lr
    for a in range(-(2 * Lr), Lr + 1):
        for b in range(-Lr, 2 * Lr + 1):
            for o in (0, 1):
                loc = ("t", a, b, o)
                if graph.location_exists(loc):
                    x, y = graph._cc_stim("up" if o == 0 else "down", a, b)
                    if x == y:
                        out.append((y, loc))
    return [loc for _, loc in sorted(out)]


def sc_z_logical(graph: DecodingGraph, row: int) -> list[Location]:
    """Horizontal Z-logical representative along edge row ``row``."""
    L = graph.params["L"]
    return [("z", "h", x, row) for x in range(L)]


def sc_x_logical(graph: DecodingGraph, col: int) -> list[Location]:
    """Vertical X-logical representative through edge column ``col``."""
    L = graph.params["L"]
    return [("x", "h", col, y) for y in range(L)]


# -------------------------------------------------------------- DGRAPH files


def _fmt_token(v) -> str:
    return str(v)


def dump_dgraph(graph: DecodingGraph) -> str:
    """Serialize a graph in the line-oriented ``DGRAPH v1`` format."""
    s = graph.scenario
    if s is Scenario.TCNOT:
        header = f"DGRAPH v1 {s} {graph.params['L']} {graph.params['rounds']}"
    else:
        header = f"DGRAPH v1 {s} {graph.params['L']}"
    locs = sorted(graph.all_locations())
    chks = sorted(graph.all_checks())
    loc_idx = {l: i for i, l in enumerate(locs)}
    chk_idx = {c: i for i, c in enumerate(chks)}
    sites = sorted({graph.site_of(l) for l in locs})
    site_idx = {x: i for i, x in enumerate(sites)}
    lines = [header]
    for l in locs:
        coords = " ".join(_fmt_token(v) for v in l)
        lines.append(f"loc {loc_idx[l]} {site_idx[graph.site_of(l)]} {coords}")
    for c in chks:
        tag = str(graph.defect_type(c))
        coords = " ".join(_fmt_token(v) for v in c)
        lines.append(f"chk {chk_idx[c]} {tag} {coords}")
    for l in locs:
        for c in graph.checks_of(l):
            lines.append(f"inc {loc_idx[l]} {chk_idx[c]}")
    return "\n".join(lines) + "\n"


def _parse_coord_tokens(tokens: list[str]) -> tuple:
    out = []
    for t in tokens:
        try:
            out.append(int(t))
        except ValueError:
            out.append(t)
    return tuple(out)


def load_dgraph(text: str) -> DecodingGraph:
    """Parse a ``DGRAPH v1`` dump into an explicit graph."""
    lines = text.splitlines()
    if not lines or not lines[0].startswith("DGRAPH v1 "):
        raise ValueError("not a DGRAPH v1 file")
    head = lines[0].split()
    scenario = Scenario(head[2])
    if scenario is Scenario.TCNOT:
        params = {"L": int(head[3]), "rounds": int(head[4])}
    else:
        params = {"L": int(head[3])}
    graph = DecodingGraph(scenario, params)
    locs: dict[int, Location] = {}
    chks: dict[int, Check] = {}
    loc_adj: dict[Location, list] = {}
    chk_adj: dict[Check, list] = {}
    for ln, line in enumerate(lines[1:], start=2):
        if not line.strip():
            continue
        parts = line.split()
        if parts[0] == "loc":
            loc = _parse_coord_tokens(parts[3:])
            locs[int(parts[1])] = loc
            loc_adj[loc] = []
        elif parts[0] == "chk":
            chk = _parse_coord_tokens(parts[3:])
            chks[int(parts[1])] = chk
            chk_adj[chk] = []
        elif parts[0] == "inc":
            l, c = locs[int(parts[1])], chks[int(parts[2])]
            loc_adj[l].append(c)
            chk_adj[c].append(l)
        else:
            raise ValueError(f"line {ln}: unknown record {parts[0]!r}")
    for l in loc_adj:
        loc_adj[l] = sorted(loc_adj[l])
    for c in chk_adj:
        chk_adj[c] = sorted(chk_adj[c])
    graph._explicit = {
        "loc_list": [locs[i] for i in sorted(locs)],
        "chk_list": [chks[i] for i in sorted(chks)],
        "loc_set": set(loc_adj),
        "chk_set": set(chk_adj),
        "loc_adj": loc_adj,
        "chk_adj": chk_adj,
    }
    return graph
