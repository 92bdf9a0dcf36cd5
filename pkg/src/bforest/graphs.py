"""Bicirculant graph specifications and their adjacency realizations.

A bicirculant graph lives on two copies of Z_n.  The right copy carries a
circulant layer generated by ``{+-a : a in alphas}`` (optionally plus n/2),
the left copy one generated by the betas, and the two copies are joined by
spoke edges: right vertex h is adjacent to left vertex h + g for every g in
``gammas``.
"""

from __future__ import annotations

import json
import math
from collections import deque
from dataclasses import dataclass

import numpy as np

from .errors import EmptySpokes, HalfWithoutEvenN, OutOfRange, SpecError

__all__ = [
    "ConnectionSpec",
    "GraphRealization",
    "validate_spec",
    "classify_family",
    "check_connectivity",
    "is_connected",
    "realize",
]


@dataclass(frozen=True)
class ConnectionSpec:
    """Normalized connection data (n, alphas, betas, gammas, half flags).

    ``alphas`` and ``betas`` are the strictly increasing generators below n/2;
    the optional n/2 generator is carried by the ``half_r`` / ``half_t`` flags.
    """

    n: int
    alphas: tuple[int, ...]
    betas: tuple[int, ...]
    gammas: tuple[int, ...]
    half_r: bool = False
    half_t: bool = False

    @property
    def r(self) -> int:
        return len(self.alphas)

    @property
    def t(self) -> int:
        return len(self.betas)

    @property
    def s(self) -> int:
        return len(self.gammas)

    @property
    def family(self) -> int:
        return classify_family(self)

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "alphas": list(self.alphas),
            "betas": list(self.betas),
            "gammas": list(self.gammas),
            "half_r": self.half_r,
            "half_t": self.half_t,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "ConnectionSpec":
        return validate_spec(data)

    @classmethod
    def from_json(cls, text: str) -> "ConnectionSpec":
        return validate_spec(json.loads(text))


@dataclass(frozen=True)
class GraphRealization:
    """Concrete 2n-vertex graph: adjacency in block-circulant form.

    Right vertices occupy indices 0..n-1, left vertices n..2n-1.
    """

    spec: ConnectionSpec
    adjacency: np.ndarray

    @property
    def vertex_count(self) -> int:
        return 2 * self.spec.n


def _as_sorted_ints(values, name: str) -> tuple[int, ...]:
    try:
        ints = sorted({int(v) for v in values})
    except (TypeError, ValueError) as exc:
        raise SpecError(f"{name} must be a list of integers") from exc
    return tuple(ints)


def validate_spec(raw, require_connected: bool = False) -> ConnectionSpec:
    """Normalize candidate connection data into a :class:`ConnectionSpec`.

    Inputs are sorted and deduplicated before the range checks.  Raises
    :class:`HalfWithoutEvenN`, :class:`OutOfRange` or :class:`EmptySpokes`
    on invalid data.
    """
    if isinstance(raw, ConnectionSpec):
        raw = raw.to_dict()
    if not isinstance(raw, dict):
        raise SpecError("connection data must be a mapping")
    try:
        n = int(raw["n"])
    except (KeyError, TypeError, ValueError) as exc:
        raise SpecError("missing or invalid group order n") from exc
    if n < 1:
        raise OutOfRange(f"group order must be positive, got {n}")

    alphas = _as_sorted_ints(raw.get("alphas", ()), "alphas")
    betas = _as_sorted_ints(raw.get("betas", ()), "betas")
    gammas = _as_sorted_ints(raw.get("gammas", ()), "gammas")
    half_r = bool(raw.get("half_r", False))
    half_t = bool(raw.get("half_t", False))

    if (half_r or half_t) and n % 2 != 0:
        raise HalfWithoutEvenN(f"half generator n/2 requires even n, got n={n}")
    for a in alphas:
        if not 0 < 2 * a < n:
            raise OutOfRange(f"alpha={a} outside (0, n/2) for n={n}")
    for b in betas:
        if not 0 < 2 * b < n:
            raise OutOfRange(f"beta={b} outside (0, n/2) for n={n}")
    for g in gammas:
        if not 0 <= g <= n - 1:
            raise OutOfRange(f"gamma={g} outside [0, n-1] for n={n}")
    if require_connected and not gammas:
        raise EmptySpokes("a connected bicirculant needs at least one spoke")

    return ConnectionSpec(n, alphas, betas, gammas, half_r, half_t)


def classify_family(spec: ConnectionSpec) -> int:
    """Family index in {1,2,3,4} from the two half flags."""
    return 1 + (1 if spec.half_r else 0) + (2 if spec.half_t else 0)


def _gcd_many(n: int, values) -> int:
    g = n
    for v in values:
        g = math.gcd(g, v)
    return g


def check_connectivity(spec: ConnectionSpec) -> dict:
    """Sufficient gcd conditions plus ground-truth search connectivity.

    The three gcd flags are sufficient but not necessary, so both are
    reported.  For a single spoke the pairwise-difference gcd condition has
    an empty difference set and is reported as False.
    """
    cond_a = spec.s > 0 and _gcd_many(spec.n, spec.alphas) == 1
    cond_b = spec.s > 0 and _gcd_many(spec.n, spec.betas) == 1
    diffs = [
        spec.gammas[i] - spec.gammas[j]
        for j in range(spec.s)
        for i in range(j + 1, spec.s)
    ]
    cond_c = bool(diffs) and _gcd_many(spec.n, diffs) == 1
    return {
        "gcd_flags": (cond_a, cond_b, cond_c),
        "connected": _connected_by_search(realize(spec)),
    }


def _connected_by_search(g: GraphRealization) -> bool:
    adj = g.adjacency
    total = g.vertex_count
    seen = [False] * total
    seen[0] = True
    queue = deque([0])
    count = 1
    while queue:
        v = queue.popleft()
        for w in np.nonzero(adj[v])[0]:
            if not seen[w]:
                seen[w] = True
                count += 1
                queue.append(int(w))
    return count == total


def is_connected(spec: ConnectionSpec) -> bool:
    return _connected_by_search(realize(spec))


def realize(spec: ConnectionSpec) -> GraphRealization:
    """Build the 2n x 2n 0/1 adjacency matrix in block-circulant form."""
    n = spec.n
    right_set = set()
    for a in spec.alphas:
        right_set.add(a % n)
        right_set.add(-a % n)
    if spec.half_r:
        right_set.add(n // 2)
    left_set = set()
    for b in spec.betas:
        left_set.add(b % n)
        left_set.add(-b % n)
    if spec.half_t:
        left_set.add(n // 2)

    adj = np.zeros((2 * n, 2 * n), dtype=np.int64)
    for h in range(n):
        for u in right_set:
            adj[h, (h + u) % n] = 1
        for u in left_set:
            adj[n + h, n + (h + u) % n] = 1
        for g in spec.gammas:
            adj[h, n + (h + g) % n] = 1
            adj[n + (h + g) % n, h] = 1
    return GraphRealization(spec, adj)
