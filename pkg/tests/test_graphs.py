"""Spec validation, family classification, realization and connectivity."""

import numpy as np
import pytest

from bforest import (
    ConnectionSpec,
    EmptySpokes,
    HalfWithoutEvenN,
    OutOfRange,
    SpecError,
    check_connectivity,
    classify_family,
    is_connected,
    realize,
    validate_spec,
)


def test_normalization_sorts_and_dedupes():
    spec = validate_spec({"n": 10, "alphas": [3, 1, 3], "betas": [4, 2], "gammas": [7, 0, 7]})
    assert spec.alphas == (1, 3)
    assert spec.betas == (2, 4)
    assert spec.gammas == (0, 7)
    assert (spec.r, spec.t, spec.s) == (2, 2, 2)


def test_half_flags_classify_families():
    base = {"n": 6, "alphas": [1], "betas": [1], "gammas": [0]}
    assert validate_spec(base).family == 1
    assert validate_spec({**base, "half_r": True}).family == 2
    assert validate_spec({**base, "half_t": True}).family == 3
    assert validate_spec({**base, "half_r": True, "half_t": True}).family == 4


def test_half_flag_requires_even_order():
    with pytest.raises(HalfWithoutEvenN):
        validate_spec({"n": 5, "alphas": [1], "betas": [], "gammas": [0], "half_r": True})


def test_range_checks():
    with pytest.raises(OutOfRange):
        validate_spec({"n": 6, "alphas": [3], "betas": [], "gammas": [0]})  # 3 = n/2
    with pytest.raises(OutOfRange):
        validate_spec({"n": 6, "alphas": [1], "betas": [], "gammas": [6]})
    with pytest.raises(OutOfRange):
        validate_spec({"n": 0, "alphas": [], "betas": [], "gammas": [0]})
    with pytest.raises(SpecError):
        validate_spec(["not", "a", "mapping"])


def test_connected_requires_spokes():
    with pytest.raises(EmptySpokes):
        validate_spec({"n": 4, "alphas": [1], "betas": [1], "gammas": []}, require_connected=True)


def test_json_round_trip():
    spec = validate_spec({"n": 8, "alphas": [1, 2], "betas": [3], "gammas": [0, 5], "half_t": True})
    again = ConnectionSpec.from_json(spec.to_json())
    assert again == spec


def test_realize_prism_is_cubic():
    spec = validate_spec({"n": 3, "alphas": [1], "betas": [1], "gammas": [0]})
    g = realize(spec)
    assert g.vertex_count == 6
    assert np.array_equal(g.adjacency, g.adjacency.T)
    assert (g.adjacency.sum(axis=1) == 3).all()
    assert np.trace(g.adjacency) == 0


def test_realize_half_generator_adds_matching():
    spec = validate_spec({"n": 4, "alphas": [1], "betas": [], "gammas": [0], "half_r": True})
    adj = realize(spec).adjacency
    assert adj[0, 2] == 1 and adj[1, 3] == 1  # the n/2 chords on the right
    assert adj[4:, 4:].sum() == 0  # no left-layer edges


def test_gcd_flags_imply_search_connectivity():
    spec = validate_spec({"n": 9, "alphas": [1], "betas": [2], "gammas": [0, 1]})
    report = check_connectivity(spec)
    assert all(report["gcd_flags"])
    assert report["connected"]


def test_single_spoke_difference_condition_is_false():
    spec = validate_spec({"n": 5, "alphas": [1], "betas": [1], "gammas": [0]})
    report = check_connectivity(spec)
    assert report["gcd_flags"][2] is False
    assert report["connected"]


def test_disconnected_layers():
    # steps of 2 on both layers of an even cycle with parity-preserving spokes
    spec = validate_spec({"n": 8, "alphas": [2], "betas": [2], "gammas": [0]})
    assert not is_connected(spec)
    assert classify_family(spec) == 1
