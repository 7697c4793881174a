import math

from hypothesis import given
from hypothesis import strategies as st

from portsim import ObjectiveWeights, score_scenario

quantities = st.floats(min_value=0, max_value=1e9, allow_nan=False)
positive = st.floats(min_value=1e-3, max_value=1e6, allow_nan=False)


def test_reference_scenario_score():
    score = score_scenario(559125.0, 708750.0, 1050.0, 78750.0, ObjectiveWeights())
    assert score.total == 559125.0 + 708750.0 + 1050.0 - 78750.0 == 1190175.0
    assert score.emissions_term == 559125.0
    assert score.energy_term == 708750.0
    assert score.dispatch_term == 1050.0
    assert score.renewables_term == -78750.0


def test_all_zero_inputs():
    score = score_scenario(0.0, 0.0, 0.0, 0.0, ObjectiveWeights())
    assert score.total == 0.0


def test_renewable_weight_ablation():
    weights = ObjectiveWeights(w_renewables=0.0)
    score = score_scenario(559125.0, 708750.0, 1050.0, 78750.0, weights)
    assert score.total == 559125.0 + 708750.0 + 1050.0
    assert score.renewables_term == 0.0


def test_literal_summed_form_switch():
    weights = ObjectiveWeights(renewables_reduce_score=False)
    score = score_scenario(559125.0, 708750.0, 1050.0, 78750.0, weights)
    assert score.total == 559125.0 + 708750.0 + 1050.0 + 78750.0
    assert score.renewables_term == 78750.0


def test_normalizers_rescale_terms():
    weights = ObjectiveWeights(norm_emissions=1000.0, norm_energy=1000.0, norm_dispatch=10.0)
    score = score_scenario(559125.0, 708750.0, 1050.0, 0.0, weights)
    assert score.emissions_term == 559.125
    assert score.energy_term == 708.75
    assert score.dispatch_term == 105.0


def test_total_is_sum_of_terms():
    score = score_scenario(1.1, 2.2, 3.3, 4.4, ObjectiveWeights(w_renewables=0.5))
    assert score.total == math.fsum(
        [score.emissions_term, score.energy_term, score.dispatch_term, score.renewables_term]
    )


@given(e=quantities, n=quantities, d=quantities, r=quantities, delta=positive)
def test_monotonicity(e, n, d, r, delta):
    weights = ObjectiveWeights()
    base = score_scenario(e, n, d, r, weights).total
    assert score_scenario(e + delta, n, d, r, weights).total >= base
    assert score_scenario(e, n + delta, d, r, weights).total >= base
    assert score_scenario(e, n, d + delta, r, weights).total >= base
    assert score_scenario(e, n, d, r + delta, weights).total <= base


@given(
    a=st.tuples(quantities, quantities, quantities, quantities),
    b=st.tuples(quantities, quantities, quantities, quantities),
    k=st.floats(min_value=1e-3, max_value=1e3, allow_nan=False),
)
def test_ranking_invariant_under_common_weight_scaling(a, b, k):
    base = ObjectiveWeights()
    scaled = ObjectiveWeights(w_emissions=k, w_energy=k, w_dispatch=k, w_renewables=k)
    total_a, total_b = (score_scenario(*a, base).total, score_scenario(*b, base).total)
    scaled_a, scaled_b = (score_scenario(*a, scaled).total, score_scenario(*b, scaled).total)
    # skip near-ties where float rounding could legitimately flip the order
    margin = 1e-9 * max(abs(total_a), abs(total_b), 1.0)
    if abs(total_a - total_b) <= margin:
        return
    assert (total_a < total_b) == (scaled_a < scaled_b)
