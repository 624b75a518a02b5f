"""Coset enumeration and Schreier-Todd-Coxeter-Sims level verification.

Words are sequences of signed, 1-based generator indices: ``3`` is the
third generator and ``-3`` its inverse.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction

from .chain import StabilizerChain, _run_schreier_sims, complete_chain
from .errors import InvalidWord

DEFAULT_RATIO = Fraction(6, 5)
POWER_RELATOR_MAX = 64
# re-enumerate once the relator count has grown by this factor
ENUM_GROWTH = Fraction(3, 2)


def free_reduce(word) -> tuple:
    out = []
    for x in word:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    # cyclic reduction keeps relators short
    i, j = 0, len(out) - 1
    while i < j and out[i] == -out[j]:
        i += 1
        j -= 1
    return tuple(out[i:j + 1])


def parse_ratio(text) -> Fraction:
    try:
        r = Fraction(str(text).strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"bad ratio {text!r}") from exc
    if r < 1:
        raise ValueError("stcs ratio must be >= 1")
    return r


@dataclass
class Presentation:
    generator_count: int
    relators: list = field(default_factory=list)
    subgroup_words: list = field(default_factory=list)

    def check(self):
        n = self.generator_count
        for w in list(self.relators) + list(self.subgroup_words):
            for x in w:
                if not isinstance(x, int) or x == 0 or abs(x) > n:
                    raise InvalidWord(f"letter {x!r} out of range for {n} generators")


class Status(str, enum.Enum):
    COMPLETE = "Complete"
    CUTOFF = "CutoffReached"


@dataclass
class CosetTable:
    rows: list
    status: Status
    defined_count: int
    live: int

    @property
    def index(self) -> int | None:
        return self.live if self.status is Status.COMPLETE else None


class _Cutoff(Exception):
    pass


def todd_coxeter(pres: Presentation, max_cosets: int) -> CosetTable:
    """HLT enumeration of the cosets of <subgroup_words> in the presented group.

    Stops with CutoffReached as soon as a definition would make the number
    of live cosets exceed ``max_cosets``.  The returned rows are indexed by
    the live cosets renumbered 0..index-1; column 2k is generator k+1 and
    column 2k+1 its inverse.
    """
    if max_cosets < 1:
        raise ValueError("max_cosets must be >= 1")
    pres.check()
    ncols = 2 * pres.generator_count

    def col(x):
        return 2 * (x - 1) if x > 0 else 2 * (-x - 1) + 1

    rels = [[col(x) for x in free_reduce(w)] for w in pres.relators]
    rels = [r for r in rels if r]
    subs = [[col(x) for x in w] for w in pres.subgroup_words]

    table = [[-1] * ncols]
    parent = [0]
    live = [1]

    def rep(c):
        root = c
        while parent[root] != root:
            root = parent[root]
        while parent[c] != root:
            parent[c], c = root, parent[c]
        return root

    def define(c, x):
        if live[0] >= max_cosets:
            raise _Cutoff
        n = len(table)
        table.append([-1] * ncols)
        parent.append(n)
        live[0] += 1
        table[c][x] = n
        table[n][x ^ 1] = c

    def merge(k, l, queue):
        k, l = rep(k), rep(l)
        if k == l:
            return
        mu, nu = min(k, l), max(k, l)
        parent[nu] = mu
        live[0] -= 1
        queue.append(nu)

    def coincidence(a, b):
        queue = []
        merge(a, b, queue)
        i = 0
        while i < len(queue):
            g = queue[i]
            i += 1
            row = table[g]
            for x in range(ncols):
                d = row[x]
                if d < 0:
                    continue
                if table[d][x ^ 1] == g:
                    table[d][x ^ 1] = -1
                mu, nu = rep(g), rep(d)
                if table[mu][x] >= 0:
                    merge(nu, table[mu][x], queue)
                elif table[nu][x ^ 1] >= 0:
                    merge(mu, table[nu][x ^ 1], queue)
                else:
                    table[mu][x] = nu
                    table[nu][x ^ 1] = mu

    def scan_and_fill(a, w):
        f, i = a, 0
        b, j = a, len(w) - 1
        while True:
            while i <= j and table[f][w[i]] >= 0:
                f = table[f][w[i]]
                i += 1
            if i > j:
                if f != a:
                    coincidence(f, a)
                return
            while j >= i and table[b][w[j] ^ 1] >= 0:
                b = table[b][w[j] ^ 1]
                j -= 1
            if j < i:
                coincidence(f, b)
                return
            if i == j:
                table[f][w[i]] = b
                table[b][w[i] ^ 1] = f
                return
            define(f, w[i])

    status = Status.COMPLETE
    try:
        for w in subs:
            if w:
                scan_and_fill(0, w)
        a = 0
        while a < len(table):
            if parent[a] == a:
                for w in rels:
                    if parent[a] != a:
                        break
                    scan_and_fill(a, w)
                if parent[a] == a:
                    for x in range(ncols):
                        if table[a][x] < 0:
                            define(a, x)
            a += 1
    except _Cutoff:
        status = Status.CUTOFF

    alive = [c for c in range(len(table)) if parent[c] == c]
    if status is Status.COMPLETE:
        pos = {c: k for k, c in enumerate(alive)}
        rows = [[pos[rep(table[c][x])] for x in range(ncols)] for c in alive]
    else:
        rows = [list(table[c]) for c in alive]
    return CosetTable(rows, status, len(table), live[0])


# -- relators harvested from a stabiliser chain -------------------------------

def evaluate_word(chain: StabilizerChain, word):
    g = chain.identity
    for x in word:
        s = chain.sgs[abs(x) - 1]
        g = g * (s if x > 0 else s.inverse())
    return g


class RelatorStore:
    """Relators over the strong generators, each checked at insertion."""

    def __init__(self):
        self.words = []
        self._seen = set()
        self._seeded = 0

    def __len__(self):
        return len(self.words)

    def add(self, chain: StabilizerChain, word) -> bool:
        w = free_reduce(word)
        if not w or w in self._seen:
            return False
        if not evaluate_word(chain, w).is_identity:
            raise ValueError(f"word {w} is not a relator")
        self._seen.add(w)
        self.words.append(w)
        return True

    def seed(self, chain: StabilizerChain):
        """Inverse-pair and power relators for strong generators not seen yet."""
        for k in range(self._seeded, len(chain.sgs)):
            g = chain.sgs[k]
            j = chain._index.get(g.inverse().entries)
            if j is not None and j != k:
                self.add(chain, (k + 1, j + 1))
            n = g.order(POWER_RELATOR_MAX)
            if n is not None:
                self.add(chain, (k + 1,) * n)
        self._seeded = len(chain.sgs)

    def presentation(self, chain: StabilizerChain, level: int) -> tuple[Presentation, list]:
        """Presentation of <S^(level-1)> with subgroup <S^level>, local numbering."""
        ids = chain.level_gens(level)
        local = {k + 1: n + 1 for n, k in enumerate(ids)}
        rels = []
        for w in self.words:
            if all(abs(x) in local for x in w):
                rels.append([local[x] if x > 0 else -local[-x] for x in w])
        sub_ids = chain.level_gens(level + 1)
        subs = [[local[k + 1]] for k in sub_ids]
        return Presentation(len(ids), rels, subs), list(ids)


@dataclass
class LevelStats:
    sifts: int = 0
    enumerations: int = 0
    early_exit: bool = False


class StcsHook:
    """Plugs coset enumeration into the Schreier-Sims driver.

    A level i is declared complete as soon as an enumeration of the cosets
    of <S^i> in <S^(i-1)> closes within the cutoff with index equal to
    the orbit size of the base point.
    """

    def __init__(self, store: RelatorStore | None = None, ratio=DEFAULT_RATIO):
        self.store = store if store is not None else RelatorStore()
        self.ratio = Fraction(ratio)
        self.stats = {}
        self._last = {}

    def _stats(self, level):
        return self.stats.setdefault(level, LevelStats())

    def begin(self, chain, frame):
        self.store.seed(chain)
        self._last.pop(frame.level, None)
        self._stats(frame.level)

    def relator(self, chain, frame, word):
        self._stats(frame.level).sifts += 1
        self.store.add(chain, word)

    def changed(self, chain, frame):
        self._stats(frame.level).sifts += 1
        self.store.seed(chain)
        self._last.pop(frame.level, None)

    def done(self, chain, frame) -> bool:
        level = frame.level
        n = len(self.store)
        last = self._last.get(level)
        if last is not None and n < max(last + 1, math.ceil(last * ENUM_GROWTH)):
            return False
        self._last[level] = n
        orbit = len(frame.tree)
        cutoff = math.ceil(self.ratio * orbit)
        pres, _ = self.store.presentation(chain, level)
        st = self._stats(level)
        st.enumerations += 1
        table = todd_coxeter(pres, cutoff)
        if table.status is Status.COMPLETE and table.live == orbit:
            st.early_exit = True
            return True
        return False


def stcs_level(chain: StabilizerChain, level: int, store: RelatorStore | None = None,
               ratio=DEFAULT_RATIO) -> StcsHook:
    """Complete one level (deeper levels must already be complete)."""
    hook = StcsHook(store, ratio)
    _run_schreier_sims(chain, level, hook)
    chain.refresh()
    return hook


def verify_chain_stcs(chain: StabilizerChain, ratio=DEFAULT_RATIO,
                      store: RelatorStore | None = None) -> StabilizerChain:
    """Verify (and if needed repair) a chain from any construction path."""
    hook = StcsHook(store, ratio)
    complete_chain(chain, hook)
    chain.stcs_stats = hook.stats
    return chain
