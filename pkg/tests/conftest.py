"""Shared fixtures: the four worked-example connection specs and helpers."""

import random

import pytest

from bforest import is_connected, validate_spec


@pytest.fixture(scope="session")
def family_specs():
    """One representative spec per family (prism family and its three
    half-generator variants); families 2-4 need an even group order."""
    return {
        1: validate_spec({"n": 3, "alphas": [1], "betas": [1], "gammas": [0]}),
        2: validate_spec({"n": 4, "alphas": [1], "betas": [], "gammas": [0], "half_r": True}),
        3: validate_spec({"n": 4, "alphas": [1], "betas": [], "gammas": [0], "half_t": True}),
        4: validate_spec(
            {"n": 4, "alphas": [1], "betas": [], "gammas": [0], "half_r": True, "half_t": True}
        ),
    }


def random_connected_specs(count, seed, n_max=12, r_max=2, t_max=2, s_max=3):
    """Deterministic stream of random connected specs within the bounds."""
    rng = random.Random(seed)
    specs = []
    while len(specs) < count:
        n = rng.randint(3, n_max)
        top = (n - 1) // 2
        r = rng.randint(0, min(r_max, top))
        t = rng.randint(0, min(t_max, top))
        s = rng.randint(1, min(s_max, n))
        data = {
            "n": n,
            "alphas": rng.sample(range(1, top + 1), r) if top else [],
            "betas": rng.sample(range(1, top + 1), t) if top else [],
            "gammas": rng.sample(range(n), s),
            "half_r": n % 2 == 0 and rng.random() < 0.3,
            "half_t": n % 2 == 0 and rng.random() < 0.3,
        }
        spec = validate_spec(data)
        if spec.family != 1 and spec.n % 2 != 0:
            continue
        if is_connected(spec):
            specs.append(spec)
    return specs
