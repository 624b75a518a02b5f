"""Product-replacement random elements and the randomised Schreier-Sims."""

from __future__ import annotations

import numpy as np

from .chain import ChainConfig, StabilizerChain, partial_chain
from .errors import NoGenerators

DEFAULT_BURN_IN = 60
DEFAULT_SIFT_THRESHOLD = 20


def make_rng(seed=None) -> np.random.Generator:
    """Default generator: 64-bit counter-based Philox stream."""
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.Generator(np.random.Philox(seed))


def spawn_rngs(seed, n: int) -> list[np.random.Generator]:
    """Independent streams, one per trial index."""
    return [np.random.Generator(np.random.Philox(s)) for s in np.random.SeedSequence(seed).spawn(n)]


class ShakeState:
    """Slot vector of the product-replacement ("Shake") generator."""

    def __init__(self, slots, rng):
        self.slots = list(slots)
        self.rng = rng

    @property
    def m(self) -> int:
        return len(self.slots)

    def next(self):
        rng, m = self.rng, len(self.slots)
        i = int(rng.integers(m))
        j = i
        while j == i:
            j = int(rng.integers(m))
        a, b = self.slots[i], self.slots[j]
        prod = a * b if int(rng.integers(2)) == 0 else b * a
        self.slots[i] = prod
        return prod

    __next__ = next

    def __iter__(self):
        return self


def shake_init(gens, m: int | None = None, burn_in: int = DEFAULT_BURN_IN, rng=None) -> ShakeState:
    gens = list(gens)
    if not gens:
        raise NoGenerators("product replacement needs at least one generator")
    n = len(gens)
    m_min = max(10, 2 * n + 1)
    m = m_min if m is None else m
    if m < m_min:
        raise ValueError(f"slot count must be at least max(10, 2n+1) = {m_min}")
    ident = gens[0].__class__.identity(gens[0].field, gens[0].d)
    state = ShakeState(gens + [ident] * (m - n), make_rng(rng))
    for _ in range(burn_in):
        state.next()
    return state


def shake_next(state: ShakeState):
    return state.next()


def random_schreier_sims(gens, stop: int = DEFAULT_SIFT_THRESHOLD, rng=None,
                         config: ChainConfig | None = None, literal: bool = False,
                         on_update=None, shake: ShakeState | None = None) -> StabilizerChain:
    """Sift product-replacement elements until ``stop`` in a row are trivial.

    On a non-trivial residue the residue (or, with ``literal=True``, the
    random element itself) is added, the base is extended when needed and
    every level tree is recomputed.  The returned chain is only flagged
    ``probably_complete``; run a verification pass to set ``complete``.
    ``on_update(chain)`` is called after every change and once at the start.
    """
    if stop < 1:
        raise ValueError("stop parameter must be >= 1")
    chain = partial_chain(gens, (), config)
    chain.rebuild_all()
    if on_update is not None:
        on_update(chain)
    if shake is None:
        shake = shake_init(list(gens), rng=rng)
    sifts = 0
    while sifts < stop:
        element = shake.next()
        res = chain.sift(element)
        if res.residue.is_identity:
            sifts += 1
            continue
        chain.insert(element if literal else res.residue)
        chain.rebuild_all()
        sifts = 0
        if on_update is not None:
            on_update(chain)
    chain.probably_complete = True
    return chain
