"""Representation counts checked by exhaustive decomposition."""

from collections import Counter

import numpy as np
import pytest

from galois_core.error_sets import IN_E, IN_PLUS, ZERO, binary_set, build_error_sets
from galois_core.field import PrimeField
from shared.errors import ConfigError
from solvers.merge import WellFormed, enumerate_vectors
from solvers.representations import count_representations, floor_log, trinomial

E, P, O = IN_E, IN_PLUS, ZERO


def _vector(restricted, length, v, m):
    e = np.zeros(length, dtype=np.int64)
    e[:v] = [restricted.E[i % len(restricted.E)] for i in range(v)]
    e[v:v + m] = [restricted.E_plus[i % len(restricted.E_plus)] for i in range(m)]
    return e


def _child_shape(variant, v, m, b, c, eps):
    if variant == "plain":
        return v // 2 + eps, 0
    if variant in ("plus_z2", "plus_z4"):
        return v // 2 + eps + c, (m - c) // 2 + b
    if variant == "plus_z6":
        return v // 2 + eps + b, 0
    return v // 2 + eps, m // 2 + eps


def _pattern(variant, v, m, b, c, eps):
    """Class triples (e, x1, x2) per position and how often each occurs."""
    if variant == "plain":
        pattern = {(E, E, O): v // 2, (E, O, E): v // 2, (O, E, E): eps}
    elif variant in ("plus_z2", "plus_z4"):
        pattern = {(E, E, O): v // 2 - b, (E, O, E): v // 2 - b, (E, E, P): b, (E, P, E): b,
                   (P, E, E): c, (P, P, O): (m - c) // 2, (P, O, P): (m - c) // 2, (O, E, E): eps}
    elif variant == "plus_z6":
        pattern = {(E, E, E): 2 * b, (E, E, O): v // 2 - b, (E, O, E): v // 2 - b, (O, E, E): eps}
    else:
        pattern = {(E, E, O): v // 2, (E, O, E): v // 2, (P, P, O): m // 2, (P, O, P): m // 2,
                   (O, E, P): eps, (O, P, E): eps}
    return Counter({key: count for key, count in pattern.items() if count})


def _tally(restricted, variant, length, v, m, b, c, eps):
    q = restricted.q
    classes = restricted.symbol_classes()
    e = _vector(restricted, length, v, m)
    child = _child_shape(variant, v, m, b, c, eps)
    x1s = enumerate_vectors(length, *child, tuple(restricted.E), tuple(restricted.E_plus))
    x2s = np.mod(e - x1s, q)
    ok = WellFormed(classes, *child)(x2s)
    want = _pattern(variant, v, m, b, c, eps)
    count = 0
    for x1, x2 in zip(x1s[ok], x2s[ok]):
        seen = Counter(zip(classes[e].tolist(), classes[x1].tolist(), classes[x2].tolist()))
        del seen[(O, O, O)]
        count += seen == want
    return count


CASES = [
    # variant, z, k+l, v, m, b, c, eps
    ("plain", 4, 8, 2, 0, 0, 0, 0),
    ("plain", 4, 8, 4, 0, 0, 0, 1),
    ("plain", 2, 10, 4, 0, 0, 0, 2),
    ("plus_z2", 2, 8, 4, 2, 1, 0, 0),
    ("plus_z2", 2, 8, 2, 2, 1, 2, 1),
    ("plus_z2", 2, 10, 4, 2, 2, 2, 1),
    ("plus_z4", 4, 8, 4, 2, 1, 0, 0),
    ("plus_z4", 4, 8, 2, 2, 1, 2, 1),
    ("plus_z6", 6, 10, 4, 0, 1, 0, 0),
    ("plus_z6", 6, 8, 2, 0, 1, 0, 1),
    ("shifted", 2, 8, 2, 0, 0, 0, 1),
    ("shifted", 2, 10, 4, 2, 0, 0, 2),
]


@pytest.mark.parametrize("variant,z,length,v,m,b,c,eps", CASES)
def test_count_matches_exhaustive_decomposition(variant, z, length, v, m, b, c, eps):
    if variant == "shifted":
        restricted = binary_set(PrimeField(13))
    else:
        restricted = build_error_sets(13, z)
    r, _ = count_representations(v, m, length, b, c, eps, restricted.z, variant, 13)
    assert r > 0
    assert _tally(restricted, variant, length, v, m, b, c, eps) == r


def test_support_split():
    for k_ell in (2, 7, 30):
        assert count_representations(2, 0, k_ell, 0, 0, 0, 4, "plain", 13) == (2, 0)


def test_z6_example():
    assert count_representations(4, 0, 10, 1, 0, 0, 6, "plus_z6", 13) == (48, 1)


@pytest.mark.parametrize("v,k_ell,eps", [(2, 10, 0), (4, 16, 2), (6, 20, 3), (8, 30, 1)])
def test_plus_reduces_to_plain(v, k_ell, eps):
    plain = count_representations(v, 0, k_ell, 0, 0, eps, 2, "plain", 13)
    assert count_representations(v, 0, k_ell, 0, 0, eps, 2, "plus_z2", 13) == plain


def test_window_from_count():
    # C(4,2) * C(12,2) * 4^2 = 6336, 13^3 <= 6336 < 13^4
    assert count_representations(4, 0, 16, 0, 0, 2, 4, "plain", 13) == (6336, 3)


def test_too_many_symbols():
    assert count_representations(6, 4, 8, 0, 0, 0, 2, "plus_z2", 13) == (0, 0)


@pytest.mark.parametrize("args", [
    (3, 0, 10, 0, 0, 0, 4, "plain"),
    (4, 1, 10, 0, 0, 0, 2, "plus_z2"),
    (4, 0, 10, 1, 0, 0, 4, "plain"),
    (4, 2, 10, 0, 1, 0, 6, "plus_z6"),
    (4, 3, 10, 0, 0, 0, 2, "shifted"),
    (4, 0, 10, 0, 0, 0, 4, "bjmm"),
    (4, 0, 10, -1, 0, 0, 4, "plain"),
])
def test_invalid_splits(args):
    with pytest.raises(ConfigError):
        count_representations(*args, q=13)


def test_trinomial():
    assert trinomial(5, 2, 1) == 30
    assert trinomial(4, 3, 2) == 0
    assert trinomial(4, -1, 0) == 0


@pytest.mark.parametrize("r,expected", [(0, 0), (1, 0), (12, 0), (13, 1), (168, 1), (169, 2), (2197, 3)])
def test_floor_log(r, expected):
    assert floor_log(r, 13) == expected
