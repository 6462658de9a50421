import json
from dataclasses import replace

import pytest

from pairswitch import (
    Design,
    InvalidInput,
    InvalidPorts,
    Network,
    State,
    SwitchPoint,
    build_network,
    network_from_json,
    network_to_json,
    optimal_switch_count,
    propagate,
    reverse_network,
    validate_network,
)

ALL_N = list(range(4, 65, 2))


@pytest.mark.parametrize("design", list(Design))
def test_switch_count_matches_bound(design):
    for n in ALL_N:
        net = build_network(design, n)
        assert len(net.switches) == optimal_switch_count(n) == n * (n - 2) // 4
    assert build_network(design, 2).switches == ()


def test_triangular_4_layout():
    net = build_network(Design.TRIANGULAR, 4)
    assert [(sp.layer, sp.line) for sp in net.switches] == [(1, 0), (1, 1)]


def test_triangular_12_layers():
    net = build_network(Design.TRIANGULAR, 12)
    assert len(net.switches) == 30
    layers = [sp.layer for sp in net.switches]
    # largest layer first (input side), layer 1 last
    assert layers == sorted(layers, reverse=True)
    for k in range(1, 6):
        members = [sp for sp in net.switches if sp.layer == k]
        assert len(members) == 2 * k
        assert [sp.line for sp in members] == list(range(2 * k))


@pytest.mark.parametrize("n", ALL_N)
def test_chevron_layer_sizes(n):
    net = build_network(Design.CHEVRON, n)
    for k in range(1, n // 2):
        assert sum(1 for sp in net.switches if sp.layer == k) == 2 * k


@pytest.mark.parametrize("n", ALL_N)
def test_brickwork_layer_sizes(n):
    net = build_network(Design.BRICKWORK, n)
    half = n // 2
    for k in range(1, half + 1):
        count = sum(1 for sp in net.switches if sp.layer == k)
        if k == half:
            assert count == n // 4
        elif k % 2:
            assert count == half - 1
        else:
            assert count == half


def test_brickwork_12_traversal_column_sizes():
    net = build_network(Design.BRICKWORK, 12)
    sizes = []
    for col in range(max(sp.col for sp in net.switches) + 1):
        sizes.append(sum(1 for sp in net.switches if sp.col == col))
    assert sizes == [3, 5, 6, 5, 6, 5]
    assert len(net.switches) == 30


def test_chevron_2_is_empty():
    assert build_network(Design.CHEVRON, 2).switches == ()


@pytest.mark.parametrize("design", list(Design))
def test_planarity_and_id_density(design):
    for n in (2, 6, 12, 26, 64):
        net = build_network(design, n)
        assert [sp.id for sp in net.switches] == list(range(len(net.switches)))
        for sp in net.switches:
            assert 0 <= sp.line <= n - 2
        assert len({(sp.layer, sp.line) for sp in net.switches}) == len(net.switches)


@pytest.mark.parametrize("bad", [3, 0, -4, 7])
def test_invalid_ports_rejected(bad):
    with pytest.raises(InvalidPorts):
        build_network(Design.TRIANGULAR, bad)


def test_constructors_deterministic_bytes():
    for design in Design:
        a = network_to_json(build_network(design, 14))
        b = network_to_json(build_network(design, 14))
        assert a == b


def test_triangular_4_golden_json():
    doc = json.loads(network_to_json(build_network(Design.TRIANGULAR, 4)))
    assert doc == {
        "design": "triangular",
        "ports": 4,
        "reversed": False,
        "switches": [
            {"id": 0, "layer": 1, "line": 0, "col": 0},
            {"id": 1, "layer": 1, "line": 1, "col": 1},
        ],
    }


def test_brickwork_6_golden_bytes():
    golden = (
        '{\n'
        '  "design": "brickwork",\n'
        '  "ports": 6,\n'
        '  "reversed": false,\n'
        '  "switches": [\n'
        '    {\n      "id": 0,\n      "layer": 3,\n      "line": 1,\n      "col": 0\n    },\n'
        '    {\n      "id": 1,\n      "layer": 2,\n      "line": 0,\n      "col": 1\n    },\n'
        '    {\n      "id": 2,\n      "layer": 2,\n      "line": 2,\n      "col": 1\n    },\n'
        '    {\n      "id": 3,\n      "layer": 2,\n      "line": 4,\n      "col": 1\n    },\n'
        '    {\n      "id": 4,\n      "layer": 1,\n      "line": 1,\n      "col": 2\n    },\n'
        '    {\n      "id": 5,\n      "layer": 1,\n      "line": 3,\n      "col": 2\n    }\n'
        '  ]\n'
        '}'
    )
    assert network_to_json(build_network(Design.BRICKWORK, 6)) == golden


def test_json_round_trip():
    for design in Design:
        net = build_network(design, 10)
        assert network_from_json(network_to_json(net)) == net
    with pytest.raises(InvalidInput):
        network_from_json("{\"ports\": 4}")


def test_validate_built_networks():
    for design in Design:
        for n in (2, 4, 8, 12):
            report = validate_network(build_network(design, n))
            assert report.ok, report.violations


def test_validate_flags_planarity():
    net = build_network(Design.TRIANGULAR, 8)
    bad = replace(
        net,
        switches=net.switches[:-1]
        + (replace(net.switches[-1], line=net.ports - 1),),
    )
    report = validate_network(bad)
    assert not report.ok
    assert any(rule == "planarity" for rule, _, _ in report.violations)


def test_validate_flags_deleted_switch():
    net = build_network(Design.TRIANGULAR, 12)
    damaged = replace(net, switches=net.switches[:-1])
    report = validate_network(damaged)
    assert not report.ok
    assert any(rule == "count" for rule, _, _ in report.violations)


def test_reverse_is_involution():
    for design in Design:
        net = build_network(design, 10)
        assert reverse_network(reverse_network(net)) == net
        assert reverse_network(net).reversed


def test_reverse_triangular_4_order():
    rnet = reverse_network(build_network(Design.TRIANGULAR, 4))
    assert [sp.line for sp in rnet.switches] == [1, 0]
    assert validate_network(rnet).ok


def test_reverse_propagation_spot_check():
    # reversed traversal inverts the permutation (exhaustive version in acceptance)
    net = build_network(Design.CHEVRON, 6)
    rnet = reverse_network(net)
    size = len(net.switches)
    states = {i: State.CROSS if i % 3 else State.BAR for i in range(size)}
    rstates = {size - 1 - i: states[i] for i in range(size)}
    fwd = propagate(net, states)
    rev = propagate(rnet, rstates)
    for line, photon in enumerate(fwd):
        assert rev[photon] == line


def test_hand_built_network_is_rejected_by_structure_rule():
    sws = (SwitchPoint(0, 1, 1, 0), SwitchPoint(1, 1, 0, 1))
    net = Network(Design.TRIANGULAR, 4, sws)
    report = validate_network(net)
    assert not report.ok
    assert any(rule == "layer-structure" for rule, _, _ in report.violations)


def test_validate_rejects_odd_ports():
    report = validate_network(Network(Design.TRIANGULAR, 5, ()))
    assert not report.ok
    assert report.violations[0][0] == "ports"


def test_reversed_network_distributes_adjacent_pairs():
    # source-pool mode: the inverse configuration takes the pairs that the
    # forward plan gathered onto adjacent lines and fans them back out
    from pairswitch import PairList, route

    for design in Design:
        n = 8
        demand = PairList.from_text("0-6,1-4,2-7,3-5")
        plan = route(design, n, demand)
        net = build_network(design, n)
        rnet = reverse_network(net)
        size = len(net.switches)
        rstates = {size - 1 - i: s for i, s in plan.states.items()}
        rperm = propagate(rnet, rstates)
        for j in range(n // 2):
            out_a = rperm.index(2 * j)
            out_b = rperm.index(2 * j + 1)
            pair = tuple(sorted((out_a, out_b)))
            assert pair in demand.pairs
