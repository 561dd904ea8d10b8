"""Tests for the asymptotic cost models."""

import json
import math

import pytest

from asymptotics.entropy import h
from asymptotics.models import (
    AsymptoticPoint,
    InternalParams,
    bjmm_cost,
    iteration_exponent,
    level_weights,
    stern_cost,
    target_weight,
)
from shared.errors import DomainError, InputError

POINT = AsymptoticPoint.of(157, 2, 0.5, 0.52)


@pytest.mark.parametrize("args", [(157, 2, 0.0, 0.5), (157, 2, 1.0, 0.5), (157, 2, 0.5, 1.5), (2, 4, 0.5, 0.5)])
def test_invalid_points(args):
    with pytest.raises(InputError):
        AsymptoticPoint.of(*args)


def test_iteration_exponent_trivial():
    zero = AsymptoticPoint.of(157, 2, 0.5, 0.0)
    assert iteration_exponent(zero, 0.0, 0.0) == 0.0


def test_proportional_split_needs_no_iterations():
    point = AsymptoticPoint.of(157, 2, 0.5, 0.3)
    # V/(R+L) = (W-V)/(1-R-L) = W
    assert iteration_exponent(point, 0.1, 0.18) == pytest.approx(0.0, abs=1e-12)


def test_iteration_exponent_domain():
    with pytest.raises(DomainError):
        iteration_exponent(POINT, 0.0, 0.0)


def test_stern_without_enumeration_is_prange():
    point = AsymptoticPoint.of(157, 2, 0.5, 0.2)
    cost = stern_cost(point, 0.0, 0.0)
    assert cost.C == 0.0
    assert cost.F == pytest.approx(h(0.2) - 0.5 * h(0.4))


def test_stern_full_weight():
    point = AsymptoticPoint.of(157, 2, 0.5, 1.0)
    L = 0.25 / (0.5 + math.log2(157) - 1)
    cost = stern_cost(point, L, 0.5 + L)
    assert cost.N == pytest.approx(0.0, abs=1e-12)
    assert cost.F == pytest.approx(0.2684, abs=5e-4)


def test_plain_single_level_matches_stern_sizes():
    stern = stern_cost(POINT, 0.05, 0.2)
    plain = bjmm_cost(POINT, InternalParams("plain", 1, 0.05, 0.2))
    assert plain.sigma[0] == pytest.approx(stern.sigma[0])
    assert plain.N == pytest.approx(stern.N)
    # no cancellations: U_0 = V
    assert plain.U == pytest.approx([0.2])


def test_plus_without_extension_symbols_is_plain():
    plain = bjmm_cost(POINT, InternalParams("plain", 2, 0.06, 0.2, E=(0.02, 0.01)))
    plus = bjmm_cost(POINT, InternalParams("plus_z2", 2, 0.06, 0.2, E=(0.02, 0.01)))
    assert plus.sigma == pytest.approx(plain.sigma)
    assert plus.U == pytest.approx(plain.U)
    assert plus.F == pytest.approx(plain.F)


def test_z4_without_overlaps_is_z2():
    point = AsymptoticPoint.of(157, 4, 0.5, 0.52)
    params = dict(levels=2, L=0.06, V=0.2, E=(0.02, 0.01))
    z2 = bjmm_cost(point, InternalParams("plus_z2", **params))
    z4 = bjmm_cost(point, InternalParams("plus_z4", **params))
    assert z4.U == pytest.approx(z2.U)


def test_z4_bonus_counts_value_assignments():
    point = AsymptoticPoint.of(157, 4, 0.5, 0.52)
    params = dict(levels=2, L=0.05, V=0.2, E=(0.01, 0.02), B=(0.03, 0.01), C=(0.0, 0.02))
    z2 = bjmm_cost(point, InternalParams("plus_z2", **params))
    z4 = bjmm_cost(point, InternalParams("plus_z4", **params))
    # 2 choices per side on an overlap, 2 on an absorbed pair
    bonus = [u4 - u2 for u4, u2 in zip(z4.U, z2.U)]
    assert bonus == pytest.approx([2 * 0.03 + 0.0, 2 * 0.01 + 0.02])


def test_level_weights():
    params = InternalParams("plus_z2", 2, 0.05, 0.2, E=(0.01, 0.02), B=(0.03, 0.01), C=(0.0, 0.02))
    Vs, Ms = level_weights(params)
    assert Vs == pytest.approx([0.2, 0.11, 0.095])
    assert Ms == pytest.approx([0.0, 0.03, 0.015])


def test_shifted_weights():
    params = InternalParams("shifted", 1, 0.05, 0.3, E=(0.02,))
    Vs, Ms = level_weights(params)
    assert Vs == pytest.approx([0.3, 0.17])
    assert Ms == pytest.approx([0.0, 0.02])


def test_shifted_targets_half_weight():
    assert target_weight(AsymptoticPoint.of(29, 2, 0.5, 1.0), "shifted") == 0.5
    with pytest.raises(DomainError):
        target_weight(POINT, "shifted")


def test_weights_outside_domain():
    point = AsymptoticPoint.of(157, 2, 0.5, 1.0)
    with pytest.raises(DomainError):
        bjmm_cost(point, InternalParams("plain", 1, 0.0, 0.6))


def test_bad_params():
    with pytest.raises(InputError):
        InternalParams("mmt", 1, 0.0, 0.0)
    with pytest.raises(InputError):
        bjmm_cost(POINT, InternalParams("plain", 0, 0.05, 0.1))


def test_memory_cap_is_a_violation():
    free = stern_cost(POINT, 0.05, 0.2)
    capped = stern_cost(POINT, 0.05, 0.2, max_mem=free.memory / 2)
    assert free.feasible
    assert not capped.feasible
    assert capped.violation == pytest.approx(free.memory / 2)


def test_enumeration_is_the_largest_term():
    cost = bjmm_cost(POINT, InternalParams("plain", 2, 0.06, 0.2, E=(0.02, 0.01)))
    assert cost.C == max(value for _, value in cost.terms)
    assert cost.F == pytest.approx(cost.N + cost.C)
    assert [label for label, _ in cost.terms][:2] == ["Sigma2/2", "Sigma2-U1"]
    assert cost.dominant in dict(cost.terms)


def test_to_dict_is_json():
    cost = bjmm_cost(POINT, InternalParams("plus_z2", 2, 0.06, 0.2, E=(0.02, 0.01), B=(0.01, 0.0)))
    data = json.loads(json.dumps(cost.to_dict()))
    assert data["params"]["variant"] == "plus_z2"
    assert data["feasible"] == cost.feasible
