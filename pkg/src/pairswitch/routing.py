"""Routing: compute switch states that bring every demanded pair together.

Each router returns a :class:`RoutingPlan` whose states, applied to the
matching network from :mod:`pairswitch.topology`, permute the inputs so the
two photons of every demanded pair exit on one output pair (2j, 2j+1).
Which output pair a demand lands on is emergent, not chosen.
"""
from __future__ import annotations

import json
import re
from dataclasses import dataclass
from typing import Iterable

from .errors import BoundExceeded, InvalidDemand, InvalidInput
from .topology import Design, Network, State, build_network

_PAIR_TOKEN = re.compile(r"^(\d+)-(\d+)$")


@dataclass(frozen=True)
class PairList:
    """A perfect matching of the N inputs: the demand.

    Pairs are kept canonical: each as (i, j) with i < j, sorted by i.
    """

    ports: int
    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        if self.ports < 2 or self.ports % 2:
            raise InvalidDemand(f"ports must be an even integer >= 2, got {self.ports}")
        canonical = tuple(sorted((a, b) if a < b else (b, a) for a, b in self.pairs))
        object.__setattr__(self, "pairs", canonical)
        seen: list[int] = []
        for a, b in canonical:
            if a == b:
                raise InvalidDemand(f"index {a} paired with itself")
            seen.extend((a, b))
        if sorted(seen) != list(range(self.ports)):
            raise InvalidDemand(
                f"pairs {canonical} are not a perfect matching of 0..{self.ports - 1}"
            )

    @classmethod
    def from_pairs(
        cls, pairs: Iterable[tuple[int, int]], ports: int | None = None
    ) -> PairList:
        pairs = tuple(pairs)
        if ports is None:
            ports = 2 * len(pairs)
        return cls(ports=ports, pairs=pairs)

    @classmethod
    def from_text(cls, text: str, ports: int | None = None) -> PairList:
        """Parse the ``i-j,k-l,...`` wire format (whitespace ignored)."""
        pairs = []
        for token in re.sub(r"\s+", "", text).split(","):
            if not token:
                continue
            m = _PAIR_TOKEN.match(token)
            if not m:
                raise InvalidDemand(f"malformed pair token {token!r}")
            pairs.append((int(m.group(1)), int(m.group(2))))
        if not pairs:
            raise InvalidDemand("empty pair list")
        return cls.from_pairs(pairs, ports)

    def to_text(self) -> str:
        return ",".join(f"{a}-{b}" for a, b in self.pairs)

    def partner(self) -> dict[int, int]:
        mate: dict[int, int] = {}
        for a, b in self.pairs:
            mate[a] = b
            mate[b] = a
        return mate


@dataclass(frozen=True)
class RoutingPlan:
    states: dict[int, State]
    permuted: tuple[int, ...]
    bsa: dict[int, tuple[int, int]]


class OpCounter:
    """Counts elementary routing operations: photon-list touches and
    switch-state commits."""

    __slots__ = ("count",)

    def __init__(self) -> None:
        self.count = 0

    def tick(self, n: int = 1) -> None:
        self.count += n


def _bsa_assignment(permuted: list[int]) -> dict[int, tuple[int, int]]:
    return {
        j: (permuted[2 * j], permuted[2 * j + 1]) for j in range(len(permuted) // 2)
    }


def _check_demand(ports: int, demand: PairList) -> None:
    if demand.ports != ports:
        raise InvalidDemand(
            f"demand covers {demand.ports} ports, network has {ports}"
        )


def _switch_ids(net: Network) -> dict[tuple[int, int], int]:
    return {(sp.layer, sp.line): sp.id for sp in net.switches}


def route(design: Design | str, ports: int, demand: PairList,
          counter: OpCounter | None = None) -> RoutingPlan:
    """Dispatch to the router for ``design``."""
    design = Design(design)
    if design is Design.TRIANGULAR:
        return route_triangular(ports, demand, counter)
    if design is Design.CHEVRON:
        return route_chevron(ports, demand, counter)
    return route_brickwork(ports, demand, counter)


# ---------------------------------------------------------------------------
# Triangular
# ---------------------------------------------------------------------------

def route_triangular(ports: int, demand: PairList,
                     counter: OpCounter | None = None) -> RoutingPlan:
    """Bubble-style peeling: per layer, cascade the partner of the current
    bottom photon down to meet it, then recurse on the first n-2 photons."""
    _check_demand(ports, demand)
    swid = _switch_ids(build_network(Design.TRIANGULAR, ports))
    mate = demand.partner()
    photons = list(range(ports))
    states: dict[int, State] = {}
    n = ports
    while n > 2:
        layer = n // 2 - 1
        idx = photons.index(mate[photons[n - 1]])
        if counter:
            counter.tick(idx + 1)
        for j in range(idx):
            states[swid[(layer, j)]] = State.BAR
        for j in range(idx, n - 2):
            states[swid[(layer, j)]] = State.CROSS
        photons = (
            photons[:idx] + photons[idx + 1 : n - 1] + [photons[idx]] + photons[n - 1 :]
        )
        if counter:
            counter.tick(2 * n - 2)
        n -= 2
    permuted = tuple(photons)
    return RoutingPlan(states, permuted, _bsa_assignment(photons))


# ---------------------------------------------------------------------------
# Chevron
# ---------------------------------------------------------------------------

def route_chevron(ports: int, demand: PairList,
                  counter: OpCounter | None = None) -> RoutingPlan:
    """Recursive routing over nested windows.

    Strip the top- and bottom-most photons.  If they pair with each other,
    the whole layer goes Cross and they meet at the middle.  Otherwise their
    partners become one virtual pair for the inner window; once the inner
    arrangement is known, at most two layer switches go Bar: one stopping
    the outer photon next to its partner, and the switch at the virtual
    pair itself when its orientation is already correct.
    """
    _check_demand(ports, demand)
    swid = _switch_ids(build_network(Design.CHEVRON, ports))
    mate = demand.partner()
    states: dict[int, State] = {}

    def assign_layer(layer: int, left: int, n: int, bars: dict[int, State]) -> None:
        # bars maps window-relative lines to explicit states; rest is Cross.
        half = n // 2
        rel_lines = list(range(half - 1))
        if layer % 2 == 0:
            rel_lines += list(range(n - 2, half - 1, -1))
        else:
            rel_lines += list(range(n - 2, half, -1)) + [half - 1]
        for rel in rel_lines:
            states[swid[(layer, left + rel)]] = bars.get(rel, State.CROSS)
        if counter:
            counter.tick(len(rel_lines))

    def solve(photons: list[int], left: int) -> list[int]:
        n = len(photons)
        if n == 2:
            return photons
        layer = n // 2 - 1
        half = n // 2
        top, bot = photons[0], photons[-1]
        if counter:
            counter.tick(n)
        if mate[top] == bot:
            inner = solve(photons[1:-1], left + 1)
            assign_layer(layer, left, n, {})
            if layer % 2:
                return inner[:half] + [top, bot] + inner[half:]
            return inner[: half - 1] + [top, bot] + inner[half - 1 :]

        top_mate, bot_mate = mate[top], mate[bot]
        mate[top_mate], mate[bot_mate] = bot_mate, top_mate  # virtual pair
        inner = solve(photons[1:-1], left + 1)
        q = min(inner.index(top_mate), inner.index(bot_mate))
        if counter:
            counter.tick(n)
        v = q + 1  # window line of the virtual pair's upper member (odd)
        oriented = inner[v - 1] == top_mate
        orient_state = State.BAR if oriented else State.CROSS
        if layer % 2 and v == half - 1:
            # virtual pair straddles the middle; the tip fixes orientation
            assign_layer(layer, left, n, {half - 2: State.BAR, v: orient_state})
            return (
                inner[: half - 2]
                + [top, top_mate, bot_mate, bot]
                + inner[half:]
            )
        if v + 1 <= half - 1:
            # virtual pair in the upper half: outer top stops just above it,
            # its other member rides the rest of the arm down to the middle
            assign_layer(layer, left, n, {v - 1: State.BAR, v: orient_state})
            if layer % 2:
                return (
                    inner[: v - 1] + [top, top_mate] + inner[v + 1 : half]
                    + [bot_mate, bot] + inner[half:]
                )
            return (
                inner[: v - 1] + [top, top_mate] + inner[v + 1 : half - 1]
                + [bot_mate, bot] + inner[half - 1 :]
            )
        # virtual pair in the lower half (mirror of the upper case)
        assign_layer(layer, left, n, {v + 1: State.BAR, v: orient_state})
        if layer % 2:
            return (
                inner[:half] + [top, top_mate] + inner[half : v - 1]
                + [bot_mate, bot] + inner[v + 1 :]
            )
        return (
            inner[: half - 1] + [top, top_mate] + inner[half - 1 : v - 1]
            + [bot_mate, bot] + inner[v + 1 :]
        )

    permuted = solve(list(range(ports)), 0)
    return RoutingPlan(states, tuple(permuted), _bsa_assignment(permuted))


# ---------------------------------------------------------------------------
# Brickwork
# ---------------------------------------------------------------------------
#
# The brickwork router works in "frame" coordinates.  A frame of size n is a
# standard brickwork grid: columns c = 0..n/2-1 (column c holds layer
# n/2 - c), with the parity pattern of _frame_col_lines below.  One
# iteration pairs the frame's bottom photon with its partner:
#
#   * the partner drops one line per column along a diagonal of Cross
#     switches, starting at the first switch it encounters (if that switch
#     couples it from above, it is set Bar and the diagonal starts one
#     column later);
#   * if the diagonal cannot reach line n-2, the bottom photon rises to
#     meet it, using the latest possible columns (also Cross).
#
# Removing the two committed paths leaves a grid whose surviving switches
# form a standard brickwork of size n-2 under the coordinate shifts of
# _down_cell: cells left of a removed corridor keep their column, cells
# right of it shift by one, and lines close up around the removed pair.
# Switches that survive but fit no cell of the smaller frame can only ever
# touch a committed photon, so they are forced to Bar (done at the end for
# everything never assigned).

def _frame_col_lines(n: int, c: int) -> tuple[int, int]:
    """(parity, max_line) of frame column c; lines are parity, parity+2, ..."""
    layer = n // 2 - c
    parity = layer % 2
    if c == 0:
        max_line = parity + 2 * (n // 4 - 1)
    elif parity:
        max_line = n - 3
    else:
        max_line = n - 2
    return parity, max_line


def _frame_has(n: int, c: int, line: int) -> bool:
    parity, max_line = _frame_col_lines(n, c)
    return line % 2 == parity and parity <= line <= max_line


def _down_cell(c: int, j: int, level: tuple[int, int, int, int]) -> tuple[int, int]:
    """Map a cell of frame k+1 onto frame k, undoing one iteration's shifts."""
    half, i, cstart, j_meet = level
    if j < i:
        return c + 1, j
    if j < j_meet:
        if c <= cstart + (j - i) - 1:
            return c, j + 1
        return c + 1, j
    if c <= half + j_meet - j - 3:
        return c, j + 1
    return c + 1, j + 2


def route_brickwork(ports: int, demand: PairList,
                    counter: OpCounter | None = None) -> RoutingPlan:
    """Pair the bottom-most photon first: its partner moves down as soon as
    possible, the bottom photon up as late as necessary; recurse on the
    surviving smaller brickwork."""
    _check_demand(ports, demand)
    net = build_network(Design.BRICKWORK, ports)
    swid = _switch_ids(net)
    half0 = ports // 2
    mate = demand.partner()
    states: dict[int, State] = {}
    photons = list(range(ports))
    frame_out = list(range(ports))  # frame line -> physical output line
    levels: list[tuple[int, int, int, int]] = []
    result: list[int | None] = [None] * ports

    def commit(c: int, j: int, state: State) -> None:
        for level in reversed(levels):
            c, j = _down_cell(c, j, level)
        states[swid[(half0 - c, j)]] = state
        if counter:
            counter.tick()

    n = ports
    while n > 2:
        half = n // 2
        bottom = photons[-1]
        i = photons.index(mate[bottom])
        if counter:
            counter.tick(i + 1)
        if i == n - 2:
            # already adjacent at the bottom; nothing to move
            cstart, j_meet = 0, n - 2
        else:
            c0 = 0
            while not (_frame_has(n, c0, i) or (i > 0 and _frame_has(n, c0, i - 1))):
                c0 += 1
            if _frame_has(n, c0, i):
                cstart = c0
            else:
                commit(c0, i - 1, State.BAR)  # would pull the partner upward
                cstart = c0 + 1
            j_meet = min(n - 2, i + (half - cstart))
            for t in range(j_meet - i):
                commit(cstart + t, i + t, State.CROSS)
            if j_meet < n - 2:
                for q in range(j_meet + 1, n - 1):
                    commit(half + j_meet - q, q, State.CROSS)
        result[frame_out[j_meet]] = photons[i]
        result[frame_out[j_meet + 1]] = bottom
        photons = photons[:i] + photons[i + 1 : n - 1]
        frame_out = [frame_out[j if j < j_meet else j + 2] for j in range(n - 2)]
        if counter:
            counter.tick(2 * n)
        levels.append((half, i, cstart, j_meet))
        n -= 2

    result[frame_out[0]] = photons[0]
    result[frame_out[1]] = photons[1]
    permuted = [p for p in result if p is not None]
    assert len(permuted) == ports
    for sp in net.switches:
        states.setdefault(sp.id, State.BAR)
    return RoutingPlan(states, tuple(permuted), _bsa_assignment(permuted))


# ---------------------------------------------------------------------------
# Reference router (oracle)
# ---------------------------------------------------------------------------

def brute_force_route(net: Network, demand: PairList,
                      max_switches: int = 24) -> RoutingPlan | None:
    """Exhaustively try all 2^S state assignments in counter order (switch
    at tuple position k is bit k, Cross when set) and return the first one
    that realizes the demand, or None when the demand is unroutable."""
    _check_demand(net.ports, demand)
    count = len(net.switches)
    if count > max_switches:
        raise BoundExceeded(
            f"{count} switches exceed the {max_switches}-switch enumeration budget"
        )
    lines = [sp.line for sp in net.switches]
    wanted = set(demand.pairs)
    n = net.ports
    for assignment in range(1 << count):
        perm = list(range(n))
        for k, line in enumerate(lines):
            if (assignment >> k) & 1:
                perm[line], perm[line + 1] = perm[line + 1], perm[line]
        ok = True
        for j in range(0, n, 2):
            a, b = perm[j], perm[j + 1]
            if ((a, b) if a < b else (b, a)) not in wanted:
                ok = False
                break
        if ok:
            states = {
                sp.id: State.CROSS if (assignment >> k) & 1 else State.BAR
                for k, sp in enumerate(net.switches)
            }
            return RoutingPlan(states, tuple(perm), _bsa_assignment(perm))
    return None


# ---------------------------------------------------------------------------
# Wire format
# ---------------------------------------------------------------------------

def plan_to_json(plan: RoutingPlan) -> str:
    doc = {
        "states": {str(i): plan.states[i].value for i in sorted(plan.states)},
        "permuted": list(plan.permuted),
        "bsa": {str(j): list(plan.bsa[j]) for j in sorted(plan.bsa)},
    }
    return json.dumps(doc, indent=2)


def plan_from_json(text: str) -> RoutingPlan:
    try:
        doc = json.loads(text)
        states = {int(k): State(v) for k, v in doc["states"].items()}
        permuted = tuple(int(x) for x in doc["permuted"])
        bsa = {int(k): (int(v[0]), int(v[1])) for k, v in doc["bsa"].items()}
        return RoutingPlan(states, permuted, bsa)
    except (KeyError, TypeError, ValueError) as exc:
        raise InvalidInput(f"malformed plan document: {exc}") from exc


def states_from_json(text: str) -> dict[int, State]:
    """Accept either a full plan document or a bare id->state mapping."""
    try:
        doc = json.loads(text)
        if isinstance(doc, dict) and "states" in doc:
            doc = doc["states"]
        return {int(k): State(v) for k, v in doc.items()}
    except (AttributeError, KeyError, TypeError, ValueError) as exc:
        raise InvalidInput(f"malformed states document: {exc}") from exc
