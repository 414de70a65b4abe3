"""Deterministic and seeded-random complexes for test corpora.

Randomness comes from SplitMix64 (Steele, Lea & Flood 2014): state advances by
``0x9E3779B97F4A7C15``, output mixing uses the multipliers
``0xBF58476D1CE4E5B9`` and ``0x94D049BB133111EB`` with shifts 30, 27, 31.
A uniform draw in ``[0, 1)`` is the top 53 bits times ``2**-53``.  Faces are
sampled in lexicographic order, one draw each, so a (parameters, seed) pair
names the same complex on every platform.
"""

from __future__ import annotations

from itertools import combinations

import networkx as nx

from .bounds import SetFamily
from .complex import ComplexError, SimplicialComplex, skeleton, to_mask

MASK64 = (1 << 64) - 1


class SplitMix64:
    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def random(self) -> float:
        return (self.next() >> 11) * (1.0 / (1 << 53))

    def below(self, k: int) -> int:
        """Uniform integer in ``range(k)`` (rejection sampling, no modulo bias)."""
        if k <= 0:
            raise ValueError("k must be positive")
        limit = (1 << 64) - ((1 << 64) % k)
        while True:
            x = self.next()
            if x < limit:
                return x % k


def paper_join_family(a: list[int]) -> list[SimplicialComplex]:
    """``X_i`` = join of full simplices on every block except block ``i``,
    which contributes only its boundary.  Blocks are consecutive index runs.
    """
    if not a or any(ai <= 0 for ai in a):
        raise ComplexError("block sizes must be positive")
    n = sum(a)
    blocks = []
    start = 0
    for ai in a:
        blocks.append(to_mask(range(start, start + ai)))
        start += ai
    full = (1 << n) - 1
    family = []
    for block in blocks:
        rest = full & ~block
        facets = [rest | (block & ~(1 << v)) for v in range(n) if block >> v & 1]
        family.append(SimplicialComplex(n, facets))
    return family


def random_lm(n: int, d: int, p_face: float, seed: int) -> SimplicialComplex:
    """Full ``(d-1)``-skeleton plus each ``d``-face independently with probability ``p_face``."""
    if not 0.0 <= p_face <= 1.0:
        raise ValueError("p_face must lie in [0, 1]")
    if not 0 <= d < n:
        raise ValueError("need 0 <= d < n")
    rng = SplitMix64(seed)
    base = skeleton(n, d - 1)
    chosen = [to_mask(c) for c in combinations(range(n), d + 1) if rng.random() < p_face]
    return SimplicialComplex(n, list(base.facet_masks) + chosen)


def random_graph_edges(n: int, p_edge: float, seed: int) -> list[tuple[int, int]]:
    rng = SplitMix64(seed)
    return [e for e in combinations(range(n), 2) if rng.random() < p_edge]


def flag_complex(n: int, edges) -> SimplicialComplex:
    g = nx.Graph()
    g.add_nodes_from(range(n))
    g.add_edges_from(edges)
    return SimplicialComplex(n, [to_mask(c) for c in nx.find_cliques(g)])


def random_flag(n: int, p_edge: float, seed: int) -> SimplicialComplex:
    """Clique complex of an Erdős–Rényi graph ``G(n, p_edge)``."""
    if not 0.0 <= p_edge <= 1.0:
        raise ValueError("p_edge must lie in [0, 1]")
    return flag_complex(n, random_graph_edges(n, p_edge, seed))


_PROBS = (0.25, 0.5, 0.75)


def random_complex(n: int, model: str, seed: int) -> SimplicialComplex:
    """A corpus member: model parameters are themselves drawn from ``seed``."""
    rng = SplitMix64(seed)
    if model == "mix":
        model = ("lm", "flag")[rng.below(2)]
    if model == "lm":
        d = 0 if n == 1 else 1 + rng.below(min(3, n - 1))
        p = _PROBS[rng.below(3)]
        return random_lm(n, d, p, rng.next())
    if model == "flag":
        p = _PROBS[rng.below(3)]
        return random_flag(n, p, rng.next())
    raise ValueError(f"unknown model {model!r}; expected lm, flag or mix")


def trial_seed(seed: int, trial: int) -> int:
    return SplitMix64(seed * 0x100000001B3 + trial).next()


def random_family(ground: int, size: int, seed: int, p: float = 0.5) -> SetFamily:
    rng = SplitMix64(seed)
    sets = [[g for g in range(ground) if rng.random() < p] for _ in range(size)]
    return SetFamily.of(ground, sets)


def random_interval_family(ground: int, size: int, seed: int) -> SetFamily:
    rng = SplitMix64(seed)
    sets = []
    for _ in range(size):
        a = rng.below(ground)
        b = a + rng.below(ground - a)
        sets.append(list(range(a, b + 1)))
    return SetFamily.of(ground, sets)
