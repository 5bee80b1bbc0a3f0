import math

from hypothesis import given, strategies as st

from freqroute import (
    Scenario,
    build_link_graph,
    euclid,
    generate_scenario,
    shared_frequency_pairs,
)
from freqroute.model import GenSpec
from conftest import make_vehicle


def test_euclid_345():
    assert euclid((0, 0), (3, 4)) == 5.0


def test_euclid_identity():
    assert euclid((7, 7), (7, 7)) == 0.0


def test_euclid_sqrt2():
    assert abs(euclid((0, 0), (1, 1)) - math.sqrt(2)) <= 1e-9


def test_shared_pairs_bridge(bridge):
    a, c = bridge.vehicle(1), bridge.vehicle(3)
    assert shared_frequency_pairs(a, c) == [(2, 6)]
    assert shared_frequency_pairs(c, bridge.vehicle(2)) == [(5, 3)]


def test_shared_pairs_none(bridge):
    assert shared_frequency_pairs(bridge.vehicle(1), bridge.vehicle(2)) == []


def test_shared_pairs_identical_plans():
    a = make_vehicle(1, 0, 0, [(1, 1, 4.0), (2, 2, 4.0)])
    b = make_vehicle(2, 5, 0, [(7, 1, 4.0), (8, 2, 4.0)])
    assert shared_frequency_pairs(a, b) == [(1, 7), (2, 8)]


def test_shared_pairs_a_major_order():
    a = make_vehicle(1, 0, 0, [(1, 1, 4.0), (2, 1, 4.0)])
    b = make_vehicle(2, 5, 0, [(5, 1, 4.0), (6, 1, 4.0)])
    assert shared_frequency_pairs(a, b) == [(1, 5), (1, 6), (2, 5), (2, 6)]


def test_bridge_graph_links(bridge):
    g = build_link_graph(bridge)
    assert g.link_count() == 2
    assert g.link(1, 3) is not None
    assert g.link(3, 2) is not None
    assert g.link(1, 2) is None
    assert g.link(1, 3).distance == 150.0


def test_in_range_without_shared_channel_is_no_link(bridge):
    vehicles = list(bridge.vehicles)
    v2 = vehicles[1]
    vehicles[1] = make_vehicle(2, 160, 0, [(r.radio_id, r.frequency, r.bandwidth) for r in v2.radios])
    s = Scenario(bridge.area, bridge.comm_range, tuple(vehicles))
    g = build_link_graph(s)
    assert g.link(1, 2) is None  # 160 m is in range, but no channel matches


def test_single_vehicle_graph():
    s = Scenario((100.0, 100.0), 50.0, (make_vehicle(1, 0, 0, [(1, 1, 1.0)]),))
    g = build_link_graph(s)
    assert g.vehicle_ids == (1,)
    assert g.neighbors(1) == ()
    assert g.link_count() == 0


def test_distance_equal_to_range_is_connected():
    s = Scenario(
        (300.0, 300.0), 200.0,
        (make_vehicle(1, 0, 0, [(1, 1, 1.0)]), make_vehicle(2, 200, 0, [(1, 1, 1.0)])),
    )
    g = build_link_graph(s)
    assert g.link(1, 2) is not None
    assert g.link(1, 2).distance == 200.0


def test_no_self_links(diamond):
    g = build_link_graph(diamond)
    for vid in g.vehicle_ids:
        assert all(l.to_vehicle != vid for l in g.neighbors(vid))


def test_neighbor_lists_ascend(diamond):
    g = build_link_graph(diamond)
    for vid in g.vehicle_ids:
        ids = [l.to_vehicle for l in g.neighbors(vid)]
        assert ids == sorted(ids)


def test_mirrored_links(diamond):
    g = build_link_graph(diamond)
    for vid in g.vehicle_ids:
        for link in g.neighbors(vid):
            back = g.link(link.to_vehicle, vid)
            assert back is not None
            assert back.distance == link.distance
            assert back.radio_pairs == tuple(
                shared_frequency_pairs(
                    diamond.vehicle(link.to_vehicle), diamond.vehicle(vid)
                )
            )


def test_every_link_pair_matches_frequency(bridge):
    g = build_link_graph(bridge)
    for vid in g.vehicle_ids:
        for link in g.neighbors(vid):
            for tx, rx in link.radio_pairs:
                tx_radio = bridge.vehicle(vid).radio(tx)
                rx_radio = bridge.vehicle(link.to_vehicle).radio(rx)
                assert tx_radio.frequency == rx_radio.frequency


def test_reachability(bridge):
    g = build_link_graph(bridge)
    assert g.reachable(1) == {1, 2, 3}
    s = Scenario(bridge.area, bridge.comm_range, bridge.vehicles[:2])
    g2 = build_link_graph(s)
    assert g2.reachable(1) == {1}
    assert g2.components() == [{1}, {2}]


def small_gen(seed, count=8, radios=1, pool=(1,), comm_range=200.0):
    return generate_scenario(
        GenSpec(
            seed=seed,
            vehicle_count=count,
            area=(500.0, 500.0),
            comm_range=comm_range,
            radios_per_vehicle=radios,
            frequency_pool=pool,
            bandwidth_range=(2.0, 10.0),
        )
    )


def test_brute_force_equivalence():
    # independent all-pairs recomputation of the adjacency definition
    for seed in range(12):
        s = small_gen(seed, count=6 + seed % 5, radios=1 + seed % 2, pool=(1, 2))
        g = build_link_graph(s)
        for a in s.vehicles:
            for b in s.vehicles:
                if a.vehicle_id == b.vehicle_id:
                    continue
                d = math.dist(a.position, b.position)
                pairs = [
                    (ra.radio_id, rb.radio_id)
                    for ra in a.radios
                    for rb in b.radios
                    if ra.frequency == rb.frequency
                ]
                link = g.link(a.vehicle_id, b.vehicle_id)
                if d <= s.comm_range and pairs:
                    assert link is not None
                    assert link.distance == d
                    assert list(link.radio_pairs) == pairs
                else:
                    assert link is None


@given(seed=st.integers(0, 2**32), radios=st.integers(1, 2))
def test_symmetry_property(seed, radios):
    s = small_gen(seed, count=7, radios=radios, pool=(1, 2, 3))
    g = build_link_graph(s)
    for vid in g.vehicle_ids:
        for link in g.neighbors(vid):
            back = g.link(link.to_vehicle, vid)
            assert back is not None and back.distance == link.distance


@given(
    seed=st.integers(0, 2**32),
    r1=st.floats(50.0, 300.0),
    grow=st.floats(1.0, 3.0),
)
def test_threshold_monotonicity(seed, r1, grow):
    s1 = small_gen(seed, count=7, comm_range=r1)
    s2 = Scenario(s1.area, r1 * grow, s1.vehicles)
    e1 = edge_set(build_link_graph(s1))
    e2 = edge_set(build_link_graph(s2))
    assert e1 <= e2


def edge_set(graph):
    return {
        (vid, l.to_vehicle) for vid in graph.vehicle_ids for l in graph.neighbors(vid)
    }
