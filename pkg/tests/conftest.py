import pytest
from hypothesis import settings

from freqroute import Radio, Scenario, Vehicle

settings.register_profile("suite", max_examples=60, deadline=None)
settings.load_profile("suite")


def make_vehicle(vid, x, y, radios):
    """radios: iterable of (radio_id, frequency, bandwidth)."""
    return Vehicle(vid, (float(x), float(y)), tuple(Radio(*r) for r in radios))


@pytest.fixture
def bridge():
    # three-vehicle chain: 1 and 2 share no channel and are out of range,
    # 3 sits between them bridging channel 2 (to 1) and channel 3 (to 2)
    return Scenario(
        area=(1000.0, 1000.0),
        comm_range=200.0,
        vehicles=(
            make_vehicle(1, 0, 0, [(1, 1, 4.0), (2, 2, 4.0)]),
            make_vehicle(2, 300, 0, [(3, 3, 4.0), (4, 4, 4.0)]),
            make_vehicle(3, 150, 0, [(5, 3, 4.0), (6, 2, 4.0)]),
        ),
    )


@pytest.fixture
def diamond():
    # single channel; 2 is the slow (bw 2) relay on the straight line,
    # 3 the fast (bw 10) relay slightly off it; 1 and 4 are 300 m apart
    return Scenario(
        area=(1000.0, 1000.0),
        comm_range=200.0,
        vehicles=(
            make_vehicle(1, 0, 0, [(1, 1, 10.0)]),
            make_vehicle(2, 150, 0, [(1, 1, 2.0)]),
            make_vehicle(3, 150, 50, [(1, 1, 10.0)]),
            make_vehicle(4, 300, 0, [(1, 1, 10.0)]),
        ),
    )


@pytest.fixture
def k4():
    # complete graph: four vehicles in a tight square, one shared channel
    return Scenario(
        area=(100.0, 100.0),
        comm_range=50.0,
        vehicles=(
            make_vehicle(1, 0, 0, [(1, 1, 5.0)]),
            make_vehicle(2, 10, 0, [(1, 1, 5.0)]),
            make_vehicle(3, 0, 10, [(1, 1, 5.0)]),
            make_vehicle(4, 10, 10, [(1, 1, 5.0)]),
        ),
    )


def assert_route_feasible(scenario, graph, route):
    """Per-hop feasibility: linked, channel-matched, simple, costs consistent."""
    seq = route.vehicle_sequence
    assert len(set(seq)) == len(seq), f"route revisits a vehicle: {seq}"
    prev = route.source
    for hop in route.hops:
        link = graph.link(prev, hop.vehicle_id)
        assert link is not None, f"no link {prev}-{hop.vehicle_id}"
        tx, rx = hop.radio_pair
        tx_radio = scenario.vehicle(prev).radio(tx)
        rx_radio = scenario.vehicle(hop.vehicle_id).radio(rx)
        assert tx_radio.frequency == rx_radio.frequency
        assert hop.distance == link.distance
        assert hop.bandwidth == rx_radio.bandwidth
        prev = hop.vehicle_id
    assert prev == route.destination
