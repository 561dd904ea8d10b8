"""Tests for the cost-model optimizer."""

import math
from dataclasses import replace

import numpy as np
import pytest

from asymptotics.models import AsymptoticPoint
from asymptotics.optimizer import (
    OptimizerSettings,
    decode,
    dimension,
    embed_plain,
    evaluate,
    optimize,
)
from shared.errors import ConfigError, InfeasibleError

Q157 = math.log2(157)


def _point(z, W, q=157, R=0.5):
    return AsymptoticPoint.of(q, z, R, W)


def test_dimensions():
    assert dimension("stern", 0) == 2
    assert dimension("plain", 3) == 5
    assert dimension("plus_z6", 2) == 6
    assert dimension("plus_z4", 3) == 11


def test_zero_weight(fast_optimizer):
    result = optimize(_point(2, 0.0), "plain", 2, fast_optimizer)
    assert result.F == 0.0
    assert result.params.L == 0.0 and result.params.V == 0.0
    assert not result.unit.any()


@pytest.mark.parametrize("variant,levels,z,W", [
    ("stern", 0, 2, 0.52),
    ("plain", 2, 2, 0.52),
    ("plain", 3, 4, 1.0),
    ("plus_z2", 2, 2, 0.3),
    ("plus_z4", 3, 4, 1.0),
    ("plus_z6", 2, 6, 0.7),
    ("shifted", 2, 2, 1.0),
])
def test_decoded_points_stay_in_domain(variant, levels, z, W):
    point = _point(z, W)
    rng = np.random.default_rng(1)
    for t in rng.random((200, dimension(variant, levels))):
        cost = evaluate(point, decode(point, variant, levels, t))
        assert np.isfinite(cost.F)
        assert cost.F >= 0


def test_restricted_base_has_no_extension_symbols():
    point = _point(2, 0.4)
    params = decode(point, "plus_z2", 2, np.full(8, 0.5), restricted_base=True)
    assert params.B[-1] == 0.0
    assert evaluate(point, params).M[-1] == pytest.approx(0.0, abs=1e-15)


@pytest.mark.parametrize("variant", ["plus_z2", "plus_z4", "plus_z6"])
def test_embedded_plain_point_has_plain_cost(variant):
    z = int(variant[-1])
    point = _point(z, 0.6)
    t_plain = np.array([0.3, 0.5, 0.2, 0.1])
    plain = evaluate(point, decode(point, "plain", 2, t_plain))
    plus_t = embed_plain(t_plain, variant, 2)
    assert plus_t.size == dimension(variant, 2)
    plus = evaluate(point, decode(point, variant, 2, plus_t))
    assert plus.F == pytest.approx(plain.F)
    assert plus.sigma == pytest.approx(plain.sigma)


def test_deterministic(fast_optimizer):
    a = optimize(_point(2, 0.52), "plain", 2, fast_optimizer)
    b = optimize(_point(2, 0.52), "plain", 2, fast_optimizer)
    assert a.F == b.F
    assert np.array_equal(a.unit, b.unit)


def test_result_is_feasible(fast_optimizer):
    result = optimize(_point(2, 0.52), "plain", 2, fast_optimizer)
    assert result.cost.feasible
    assert result.evaluations > 0
    assert evaluate(_point(2, 0.52), result.params).F == pytest.approx(result.F)


def test_plus_is_no_worse_than_plain(fast_optimizer):
    plain = optimize(_point(2, 0.52), "plain", 2, fast_optimizer)
    plus = optimize(_point(2, 0.52), "plus_z2", 2, fast_optimizer)
    assert plus.F <= plain.F + 1e-9


def test_memory_cap(fast_optimizer):
    free = optimize(_point(2, 0.52), "stern", settings=fast_optimizer)
    cap = 0.8 * free.cost.memory
    capped = optimize(_point(2, 0.52), "stern", settings=replace(fast_optimizer, max_mem=cap))
    assert capped.cost.memory <= cap + 1e-9


def test_infeasible(fast_optimizer):
    with pytest.raises(InfeasibleError):
        optimize(_point(2, 0.3), "stern", settings=replace(fast_optimizer, max_mem=-1.0))


def test_levels_required():
    with pytest.raises(ConfigError):
        optimize(_point(2, 0.3), "plain", 0)


@pytest.mark.parametrize("kwargs", [
    {"tolerance": 0.0},
    {"grid_density": 1},
    {"shrink": 1.0},
    {"initial_step": 0.0},
    {"restarts": -1},
    {"top_seeds": 0},
])
def test_bad_settings(kwargs):
    with pytest.raises(ConfigError):
        OptimizerSettings(**kwargs)


def test_settings_from_file():
    settings = OptimizerSettings.from_settings(max_mem=0.2)
    assert settings.max_mem == 0.2
    assert settings.restarts == 48
    assert settings.restart_seed == 2023


def test_stern_full_weight():
    # V = R + L is forced, so F = min over L of max(K/2, K - Q L)
    assert optimize(_point(2, 1.0), "stern").F == pytest.approx(0.2684, abs=5e-3)


CURVE_POINTS = [
    # z, W, variant, levels, F
    (2, 0.2, "stern", 0, 0.1978),
    (2, 0.52, "stern", 0, 0.4170),
    (2, 0.52, "plain", 2, 0.2433),
    (2, 0.52, "plain", 3, 0.2168),
    (2, 0.52, "plus_z2", 3, 0.2117),
    (2, 1.0, "plus_z2", 3, 0.2749),
    (4, 1.0, "stern", 0, 0.5795),
    (4, 1.0, "plain", 2, 0.7444),
    (4, 1.0, "plus_z4", 2, 0.5865),
    (4, 1.0, "plus_z4", 3, 0.5500),
    (6, 1.0, "stern", 0, 0.7855),
    (6, 1.0, "plain", 2, 1.0000),
    (6, 1.0, "plus_z6", 2, 0.6698),
    (6, 1.0, "plus_z6", 3, 0.6557),
]


@pytest.mark.slow
@pytest.mark.parametrize("z,W,variant,levels,expected", CURVE_POINTS)
def test_published_curves(z, W, variant, levels, expected):
    assert optimize(_point(z, W), variant, levels).F == pytest.approx(expected, abs=5e-3)
