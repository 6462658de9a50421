"""Exhaustive and randomized harnesses for the non-blocking, bound, and
minimality claims."""
from __future__ import annotations

import json
import random
from dataclasses import dataclass, replace
from typing import Iterator

from .errors import BoundExceeded, InvalidPorts
from .routing import PairList, brute_force_route, route
from .simulation import check_pairing, propagate, traversal_depths
from .topology import Design, build_network


def lower_bound(ports: int) -> int:
    """Minimum switch count for paired egress: sum_{k=1}^{N/2-1} (N-2k)."""
    if ports < 2 or ports % 2:
        raise InvalidPorts(f"ports must be an even integer >= 2, got {ports}")
    return ports * (ports - 2) // 4


def worst_case_pair_list(ports: int) -> PairList:
    """The demand pairing the two most distant inputs at every step."""
    return PairList.from_pairs(
        [(k, ports - 1 - k) for k in range(ports // 2)], ports
    )


def enumerate_pair_lists(ports: int) -> Iterator[PairList]:
    """Yield every perfect matching of 0..N-1 exactly once, smallest free
    index first; stream length is (N-1)!!."""
    if ports < 2 or ports % 2:
        raise InvalidPorts(f"ports must be an even integer >= 2, got {ports}")

    def rec(free: tuple[int, ...]) -> Iterator[tuple[tuple[int, int], ...]]:
        if not free:
            yield ()
            return
        first = free[0]
        for k in range(1, len(free)):
            rest = free[1:k] + free[k + 1 :]
            for tail in rec(rest):
                yield ((first, free[k]),) + tail

    for pairs in rec(tuple(range(ports))):
        yield PairList.from_pairs(pairs, ports)


def random_pair_list(ports: int, rng: random.Random) -> PairList:
    """Uniform random perfect matching: shuffle, pair consecutive entries."""
    order = list(range(ports))
    rng.shuffle(order)
    return PairList.from_pairs(
        [(order[2 * j], order[2 * j + 1]) for j in range(ports // 2)], ports
    )


def double_factorial(n: int) -> int:
    out = 1
    while n > 1:
        out *= n
        n -= 2
    return out


@dataclass(frozen=True)
class VerificationReport:
    design: Design
    ports: int
    mode: str  # "exhaustive" | "random"
    demands_checked: int
    failures: tuple[tuple[str, str], ...]  # (demand text, diagnostic)
    max_depth: int
    min_depth: int
    samples: int | None = None
    seed: int | None = None

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_dict(self) -> dict:
        return {
            "design": self.design.value,
            "ports": self.ports,
            "mode": self.mode,
            "samples": self.samples,
            "seed": self.seed,
            "demands_checked": self.demands_checked,
            "failures": [list(f) for f in self.failures],
            "max_depth": self.max_depth,
            "min_depth": self.min_depth,
        }


def verify_design(
    design: Design | str,
    ports: int,
    mode: str = "exhaustive",
    samples: int = 1000,
    seed: int = 0,
    cap: int = 12,
) -> VerificationReport:
    """Route every demand (or a seeded sample), simulate, and check the
    paired egress; collect depth extrema across all checked routings."""
    design = Design(design)
    net = build_network(design, ports)
    if mode == "exhaustive":
        if ports > cap:
            raise BoundExceeded(
                f"exhaustive verification capped at {cap} ports, got {ports}"
            )
        demands: Iterator[PairList] = enumerate_pair_lists(ports)
        samples_field = seed_field = None
    elif mode == "random":
        rng = random.Random(seed)
        demands = (random_pair_list(ports, rng) for _ in range(samples))
        samples_field, seed_field = samples, seed
    else:
        raise ValueError(f"unknown mode {mode!r}")

    failures: list[tuple[str, str]] = []
    checked = 0
    max_depth = 0
    min_depth = ports * ports
    for demand in demands:
        checked += 1
        plan = route(design, ports, demand)
        perm = propagate(net, plan.states)
        if perm != plan.permuted:
            failures.append(
                (demand.to_text(), f"router predicted {plan.permuted}, simulator got {perm}")
            )
            continue
        report = check_pairing(perm, demand)
        if not report.ok:
            failures.append(
                (demand.to_text(), f"output pairs wrong at BSAs {list(report.mismatches)}")
            )
            continue
        depths = traversal_depths(net, plan.states)
        max_depth = max(max_depth, max(depths))
        min_depth = min(min_depth, min(depths))
    failures.sort(key=lambda f: f[0])
    return VerificationReport(
        design=design,
        ports=ports,
        mode=mode,
        demands_checked=checked,
        failures=tuple(failures),
        max_depth=max_depth,
        min_depth=min_depth if checked else 0,
        samples=samples_field,
        seed=seed_field,
    )


@dataclass(frozen=True)
class MinimalityReport:
    design: Design
    ports: int
    outcomes: tuple[tuple[int, bool], ...]  # (deleted switch id, still routable)

    @property
    def passed(self) -> bool:
        return all(not routable for _, routable in self.outcomes)

    def to_dict(self) -> dict:
        return {
            "design": self.design.value,
            "ports": self.ports,
            "outcomes": [
                {"deleted": i, "routable": routable} for i, routable in self.outcomes
            ],
            "passed": self.passed,
        }


def verify_minimality(
    design: Design | str, ports: int, max_switches: int = 24
) -> MinimalityReport:
    """Delete each switch in turn and brute-force the worst-case demand on
    the damaged network; a minimal design leaves every deletion unroutable."""
    design = Design(design)
    net = build_network(design, ports)
    if len(net.switches) - 1 > max_switches:
        raise BoundExceeded(
            f"{len(net.switches) - 1} switches exceed the brute-force budget"
        )
    demand = worst_case_pair_list(ports)
    outcomes = []
    for sp in net.switches:
        damaged = replace(
            net, switches=tuple(s for s in net.switches if s.id != sp.id)
        )
        plan = brute_force_route(damaged, demand, max_switches=max_switches)
        outcomes.append((sp.id, plan is not None))
    return MinimalityReport(design=design, ports=ports, outcomes=tuple(outcomes))


def report_to_json(report: VerificationReport | MinimalityReport) -> str:
    return json.dumps(report.to_dict(), indent=2)
