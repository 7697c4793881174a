import copy

import pytest

from portsim import scenario_from_dict, validate_scenario

MINIMAL_SCENARIO = {
    "name": "test-port",
    "throughput": {"teu_per_year": 1.0e6, "unit_energy": 100.0},
    "shares": {
        "equipment_share": 0.5,
        "transport_share": 0.3,
        "buildings_share": 0.2,
    },
    "factors": {
        "equipment_factor": 0.5,
        "transport_factor": 0.7,
        "buildings_factor": 1.2,
        "grid_factor": 0.4,
    },
    "renewables": {"renewable_energy": 10000.0, "source": "explicit"},
    "costs": {"baseline_cost_per_teu": 100.0, "optimized_cost_per_teu": 90.0},
}


def make_scenario_dict(**overrides):
    """Fresh minimal scenario dict with top-level keys replaced by overrides."""
    raw = copy.deepcopy(MINIMAL_SCENARIO)
    raw.update(copy.deepcopy(overrides))
    return raw


@pytest.fixture
def minimal_scenario():
    return validate_scenario(scenario_from_dict(make_scenario_dict()))


@pytest.fixture
def zero_scenario_dict():
    return make_scenario_dict(
        name="empty-port",
        throughput={"teu_per_year": 0.0, "unit_energy": 0.0},
        renewables={"renewable_energy": 0.0, "source": "explicit"},
        costs={"baseline_cost_per_teu": 0.0, "optimized_cost_per_teu": 0.0},
    )


PAPER_MATRIX = [
    [420.0, 350.0, 450.0],
    [450.0, 400.0, 280.0],
    [420.0, 360.0, 390.0],
]
