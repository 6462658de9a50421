"""Deterministic single-pass photon propagation and derived measurements."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

from .errors import IncompleteStates, InvalidInput
from .routing import PairList
from .topology import Network, State


def _check_states(net: Network, states: Mapping[int, State]) -> None:
    ids = {sp.id for sp in net.switches}
    given = set(states)
    if given != ids:
        missing = sorted(ids - given)
        extra = sorted(given - ids)
        raise IncompleteStates(
            f"states do not cover the network exactly (missing {missing}, extra {extra})"
        )


def propagate(net: Network, states: Mapping[int, State]) -> tuple[int, ...]:
    """Apply switches in traversal order; photon i starts on line i.

    Returns the final line occupancy: result[line] = photon index.
    """
    _check_states(net, states)
    lines = list(range(net.ports))
    for sp in net.switches:
        if states[sp.id] is State.CROSS:
            i = sp.line
            lines[i], lines[i + 1] = lines[i + 1], lines[i]
    assert sorted(lines) == list(range(net.ports))
    return tuple(lines)


def traversal_depths(net: Network, states: Mapping[int, State]) -> tuple[int, ...]:
    """Per-photon count of switch elements traversed (Bar counts too).

    Indexed by photon: depths[photon] = number of switches encountered.
    """
    _check_states(net, states)
    lines = list(range(net.ports))
    depths = [0] * net.ports
    for sp in net.switches:
        i = sp.line
        depths[lines[i]] += 1
        depths[lines[i + 1]] += 1
        if states[sp.id] is State.CROSS:
            lines[i], lines[i + 1] = lines[i + 1], lines[i]
    return tuple(depths)


@dataclass(frozen=True)
class PairingReport:
    ok: bool
    matched: tuple[tuple[int, tuple[int, int]], ...]
    mismatches: tuple[int, ...]


def check_pairing(perm: Sequence[int], demand: PairList) -> PairingReport:
    """Check that each adjacent output pair (2j, 2j+1) holds a demanded pair."""
    if len(perm) != demand.ports:
        raise InvalidInput(
            f"permutation has {len(perm)} entries, demand covers {demand.ports} ports"
        )
    wanted = set(demand.pairs)
    matched = []
    mismatches = []
    for j in range(len(perm) // 2):
        a, b = perm[2 * j], perm[2 * j + 1]
        pair = (a, b) if a < b else (b, a)
        if pair in wanted:
            matched.append((j, pair))
        else:
            mismatches.append(j)
    return PairingReport(not mismatches, tuple(matched), tuple(mismatches))


def estimate_loss(
    depths: Sequence[int], per_switch_db: float, insertion_db: float
) -> tuple[float, ...]:
    """Linear loss model: loss_i = insertion_db + depth_i * per_switch_db."""
    if per_switch_db < 0 or insertion_db < 0:
        raise InvalidInput("loss parameters must be non-negative")
    return tuple(insertion_db + d * per_switch_db for d in depths)
