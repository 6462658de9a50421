"""Construction of the three planar paired-egress switch networks.

A network routes N photons, entering on lines 0 (top) through N-1 (bottom),
through 2x2 switch elements that each couple a pair of adjacent lines.
Switches are stored in traversal order: propagation applies them by
ascending id.  All three designs use exactly N*(N-2)/4 switches.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, replace
from enum import Enum
from typing import Iterator

from .errors import InvalidInput, InvalidPorts


class Design(str, Enum):
    TRIANGULAR = "triangular"
    CHEVRON = "chevron"
    BRICKWORK = "brickwork"


class State(str, Enum):
    BAR = "bar"      # photons pass straight through
    CROSS = "cross"  # photons on the two lines are exchanged


@dataclass(frozen=True)
class SwitchPoint:
    """A 2x2 element coupling lines ``line`` and ``line + 1``.

    ``id`` is the global traversal index (dense, 0-based), ``layer`` the
    1-based group the design assigns, ``col`` a rendering column hint.
    """

    id: int
    layer: int
    line: int
    col: int


@dataclass(frozen=True)
class Network:
    design: Design
    ports: int
    switches: tuple[SwitchPoint, ...]
    reversed: bool = False


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    violations: tuple[tuple[str, object, str], ...]


def optimal_switch_count(ports: int) -> int:
    """Number of switches every design uses for an N-port network."""
    return ports * (ports - 2) // 4


def _check_ports(ports: int) -> None:
    if not isinstance(ports, int) or ports < 2 or ports % 2:
        raise InvalidPorts(f"ports must be an even integer >= 2, got {ports!r}")


def _triangular_cells(ports: int) -> Iterator[tuple[int, int, int]]:
    # Largest layer sits on the input side; each layer is a cascade that
    # carries one photon down to the bottom of its sub-network.
    col = 0
    for layer in range(ports // 2 - 1, 0, -1):
        for line in range(2 * layer):
            yield layer, line, col
            col += 1


def _chevron_cells(ports: int) -> Iterator[tuple[int, int, int]]:
    # Layer 1 sits innermost on the input side.  Each layer is two arms
    # converging on the middle lines; odd layers swap the lowest arm switch
    # for a tip element at line half-1, traversed after both arms.
    half = ports // 2
    col = 0
    for layer in range(1, half):
        for t in range(layer):
            yield layer, half - layer - 1 + t, col + t
        if layer % 2 == 0:
            for t in range(layer):
                yield layer, half + layer - 1 - t, col + t
            col += layer
        else:
            for t in range(layer - 1):
                yield layer, half + layer - 1 - t, col + t
            yield layer, half - 1, col + layer
            col += layer + 1


def _brickwork_cells(ports: int) -> Iterator[tuple[int, int, int]]:
    # Layer N/2 is traversed first.  Odd layers hold lines 1,3,..,N-3 and
    # even layers 0,2,..,N-2; the first-traversed layer is truncated to
    # floor(N/4) switches with the same parity as its index.
    half = ports // 2
    for col, layer in enumerate(range(half, 0, -1)):
        parity = layer % 2
        if layer == half:
            count = ports // 4
        elif parity:
            count = half - 1
        else:
            count = half
        for t in range(count):
            yield layer, parity + 2 * t, col


_BUILDERS = {
    Design.TRIANGULAR: _triangular_cells,
    Design.CHEVRON: _chevron_cells,
    Design.BRICKWORK: _brickwork_cells,
}


def build_network(design: Design | str, ports: int) -> Network:
    """Construct the named design for an even number of ports.

    N = 2 yields the trivial zero-switch network.
    """
    design = Design(design)
    _check_ports(ports)
    switches = tuple(
        SwitchPoint(i, layer, line, col)
        for i, (layer, line, col) in enumerate(_BUILDERS[design](ports))
    )
    return Network(design=design, ports=ports, switches=switches)


def reverse_network(net: Network) -> Network:
    """Mirror the traversal order, for operation with sources behind the
    former output side: adjacent input pairs are distributed to arbitrary
    output pairings."""
    if not net.switches:
        return replace(net, reversed=not net.reversed)
    max_col = max(sp.col for sp in net.switches)
    flipped = tuple(
        SwitchPoint(i, sp.layer, sp.line, max_col - sp.col)
        for i, sp in enumerate(reversed(net.switches))
    )
    return Network(
        design=net.design,
        ports=net.ports,
        switches=flipped,
        reversed=not net.reversed,
    )


def validate_network(net: Network) -> ValidationReport:
    """Report violations of the structural rules.  Never raises."""
    violations: list[tuple[str, object, str]] = []
    n = net.ports
    if not isinstance(n, int) or n < 2 or n % 2:
        violations.append(("ports", n, "ports must be an even integer >= 2"))
        return ValidationReport(False, tuple(violations))

    for sp in net.switches:
        if not 0 <= sp.line <= n - 2:
            violations.append(
                ("planarity", sp.id, f"switch line {sp.line} outside 0..{n - 2}")
            )

    expected = optimal_switch_count(n)
    if len(net.switches) != expected:
        violations.append(
            ("count", None, f"{len(net.switches)} switches != N(N-2)/4 = {expected}")
        )

    ids = [sp.id for sp in net.switches]
    if ids != list(range(len(ids))):
        violations.append(("id-density", None, "ids are not dense 0..S-1 in order"))

    seen = set()
    for sp in net.switches:
        key = (sp.layer, sp.line)
        if key in seen:
            violations.append(("duplicate", sp.id, f"second switch at layer/line {key}"))
        seen.add(key)

    try:
        reference = build_network(net.design, n)
        if net.reversed:
            reference = reverse_network(reference)
        got = [(sp.layer, sp.line) for sp in net.switches]
        want = [(sp.layer, sp.line) for sp in reference.switches]
        if got != want:
            violations.append(
                ("layer-structure", None, "switch placement differs from the design rules")
            )
    except (InvalidPorts, ValueError):
        violations.append(("layer-structure", None, "design rules not checkable"))

    return ValidationReport(not violations, tuple(violations))


def network_to_json(net: Network) -> str:
    """Serialize with deterministic key and array order (byte-stable)."""
    doc = {
        "design": net.design.value,
        "ports": net.ports,
        "reversed": net.reversed,
        "switches": [
            {"id": sp.id, "layer": sp.layer, "line": sp.line, "col": sp.col}
            for sp in net.switches
        ],
    }
    return json.dumps(doc, indent=2)


def network_from_json(text: str) -> Network:
    try:
        doc = json.loads(text)
        design = Design(doc["design"])
        switches = tuple(
            SwitchPoint(int(s["id"]), int(s["layer"]), int(s["line"]), int(s["col"]))
            for s in doc["switches"]
        )
        return Network(
            design=design,
            ports=int(doc["ports"]),
            switches=switches,
            reversed=bool(doc.get("reversed", False)),
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise InvalidInput(f"malformed network document: {exc}") from exc
