"""Stabiliser chains: partial BSGS, sifting, Schreier-Sims and queries.

Levels are numbered from 1.  Level i has base point ``base[i-1]`` and
generator set S^(i-1), the strong generators fixing the first i-1 base
points; its Schreier tree spans the orbit of the base point under them.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field
from typing import NamedTuple

from .errors import GeneratorBlowup, GroupTooLarge, IncompleteChain, NotAMember
from .heuristics import BaseStrategy, select_base_point
from .matrix import BasePoint, GroupMatrix, act_point
from .schreier import (
    DEFAULT_ORBIT_LIMIT,
    TRANSVERSAL_LABELS,
    SchreierTree,
    boil_schreier_generators,
    depth_is_excessive,
)


@dataclass
class ChainConfig:
    label_mode: str = TRANSVERSAL_LABELS
    rebuild: str = "always"  # or "extend"
    orbit_limit: int = DEFAULT_ORBIT_LIMIT
    strategy: str = BaseStrategy.NATURAL.value
    # add sifted residues (True) or the raw elements that produced them
    add_residue: bool = True
    max_sgs: int = 5000
    enumerate_limit: int = 10**6

    def __post_init__(self):
        if self.rebuild not in ("always", "extend"):
            raise ValueError(f"unknown rebuild policy {self.rebuild!r}")
        self.strategy = BaseStrategy(self.strategy).value


class SiftResult(NamedTuple):
    residue: GroupMatrix
    dropout: int
    # orbit points met at the levels that were passed
    points: tuple = ()

    @property
    def trivial(self) -> bool:
        return self.residue.is_identity


@dataclass
class Level:
    gens: tuple
    tree: SchreierTree


@dataclass
class StabilizerChain:
    field: object
    d: int
    config: ChainConfig = dc_field(default_factory=ChainConfig)
    generators: list = dc_field(default_factory=list)
    base: list = dc_field(default_factory=list)
    sgs: list = dc_field(default_factory=list)
    levels: list = dc_field(default_factory=list)
    complete: bool = False
    probably_complete: bool = False

    def __post_init__(self):
        self.identity = GroupMatrix.identity(self.field, self.d)
        gens, self.sgs = list(self.sgs), []
        self._index = {}
        self._fix = []
        for g in gens:
            self._append(g)
        if len(self.levels) != len(self.base):
            self.levels = [None] * len(self.base)

    def __repr__(self):
        return (f"StabilizerChain(d={self.d}, field={self.field!r}, base_len={len(self.base)}, "
                f"sgs={len(self.sgs)}, orbits={self.orbit_sizes()}, complete={self.complete})")

    # -- bookkeeping -----------------------------------------------------

    def fixed_prefix(self, g: GroupMatrix, start: int = 0) -> int:
        """Number of leading base points fixed by g (scan starts at ``start``)."""
        k = start
        for bp in self.base[start:]:
            if act_point(bp.coords, g, bp.projective) != bp.coords:
                break
            k += 1
        return k

    def add_base_points(self, points):
        old = len(self.base)
        self.base.extend(points)
        self.levels.extend([None] * len(points))
        for k, f in enumerate(self._fix):
            if f == old:
                self._fix[k] = self.fixed_prefix(self.sgs[k], old)

    def _append(self, g: GroupMatrix) -> bool:
        if g.is_identity or g.entries in self._index:
            return False
        self._index[g.entries] = len(self.sgs)
        self.sgs.append(g)
        self._fix.append(self.fixed_prefix(g))
        return True

    def insert(self, g: GroupMatrix) -> bool:
        """Add g and g^-1 as strong generators, extending the base if g fixes it."""
        if g.is_identity or g.entries in self._index:
            return False
        if self.fixed_prefix(g) == len(self.base):
            self.add_base_points(select_base_point(self.config.strategy, self.generators, g))
        self._append(g)
        self._append(g.inverse())
        if len(self.sgs) > self.config.max_sgs:
            raise GeneratorBlowup(self.config.max_sgs)
        return True

    def reset_sgs(self, gens):
        self.sgs = []
        self._index = {}
        self._fix = []
        self.levels = [None] * len(self.base)
        for g in gens:
            self.insert(g)

    def level_gens(self, i: int) -> tuple:
        """Indices into ``sgs`` of the level-i generators S^(i-1)."""
        return tuple(k for k, f in enumerate(self._fix) if f >= i - 1)

    def fix_depth(self, k: int) -> int:
        return self._fix[k]

    # -- trees -------------------------------------------------------------

    def _new_tree(self, i, ids):
        bp = self.base[i - 1]
        cfg = self.config
        return SchreierTree([self.sgs[k] for k in ids], bp.coords, mode=cfg.label_mode,
                            projective=bp.projective, limit=cfg.orbit_limit,
                            gen_ids=ids, identity=self.identity)

    def build_level(self, i: int) -> SchreierTree:
        """(Re)compute the level-i tree from the current generator set."""
        ids = self.level_gens(i)
        lvl = self.levels[i - 1]
        if lvl is not None and lvl.gens == ids:
            return lvl.tree
        if self.config.rebuild == "extend" and lvl is not None and set(lvl.gens) <= set(ids):
            old = set(lvl.gens)
            new_ids = [k for k in ids if k not in old]
            tree = lvl.tree.copy().extend([self.sgs[k] for k in new_ids], new_ids)
            if depth_is_excessive(tree):
                tree = self._new_tree(i, ids)
            ids = tuple(tree.gen_ids)
        else:
            tree = self._new_tree(i, ids)
        self.levels[i - 1] = Level(ids, tree)
        return tree

    def tree(self, i: int) -> SchreierTree:
        lvl = self.levels[i - 1]
        return lvl.tree if lvl is not None else self.build_level(i)

    def refresh(self):
        """Rebuild every tree whose generator set is out of date."""
        for i in range(1, len(self.base) + 1):
            lvl = self.levels[i - 1]
            if lvl is None or set(lvl.gens) != set(self.level_gens(i)):
                self.build_level(i)

    def rebuild_all(self):
        self.levels = [None] * len(self.base)
        for i in range(1, len(self.base) + 1):
            self.build_level(i)

    # -- sifting -------------------------------------------------------------

    def sift(self, g: GroupMatrix, start: int = 1) -> SiftResult:
        r = g
        pts = []
        n = len(self.base)
        for i in range(start, n + 1):
            bp = self.base[i - 1]
            tree = self.tree(i)
            img = act_point(bp.coords, r, bp.projective)
            if img not in tree:
                return SiftResult(r, i, tuple(pts))
            if img != bp.coords:
                r = r * tree.orbit_element_inverse(img)
            pts.append(img)
        return SiftResult(r, n + 1, tuple(pts))

    # -- queries ---------------------------------------------------------

    def orbit_sizes(self) -> list[int]:
        return [len(self.tree(i)) for i in range(1, len(self.base) + 1)]

    def orbit_product(self) -> int:
        out = 1
        for n in self.orbit_sizes():
            out *= n
        return out

    def _require_complete(self):
        if not self.complete:
            raise IncompleteChain("chain has not been completed or verified")

    def order(self) -> int:
        self._require_complete()
        return self.orbit_product()

    def transversals(self) -> list[list[GroupMatrix]]:
        return [[t.orbit_element(p) for p in t.points]
                for t in (self.tree(i) for i in range(1, len(self.base) + 1))]

    def copy(self) -> "StabilizerChain":
        new = StabilizerChain(self.field, self.d, config=ChainConfig(**vars(self.config)),
                              generators=list(self.generators), base=list(self.base),
                              sgs=list(self.sgs), complete=self.complete,
                              probably_complete=self.probably_complete)
        return new


# -- construction -------------------------------------------------------------

def _prepare(gens):
    gens = list(gens)
    if not gens:
        raise ValueError("need at least one generator")
    F, d = gens[0].field, gens[0].d
    for g in gens:
        g._check(gens[0])
    return F, d, gens


def partial_chain(gens, seed_base=(), config: ChainConfig | None = None) -> StabilizerChain:
    """Chain holding the partial base and partial SGS for ``gens``."""
    F, d, gens = _prepare(gens)
    config = config or ChainConfig()
    chain = StabilizerChain(F, d, config=config, generators=[g for g in gens if not g.is_identity])
    seed = [bp if isinstance(bp, BasePoint) else BasePoint(tuple(bp), False) for bp in seed_base]
    chain.add_base_points(seed)
    for s in gens:
        chain.insert(s)
    return chain


def get_partial_bsgs(gens, seed_base=(), config: ChainConfig | None = None):
    """(base, sgs) where no strong generator fixes every base point."""
    chain = partial_chain(gens, seed_base, config)
    return list(chain.base), list(chain.sgs)


def sift(chain: StabilizerChain, g: GroupMatrix) -> SiftResult:
    return chain.sift(g)


class _Frame:
    __slots__ = ("level", "tree", "gens", "points", "pi", "si", "pending")

    def __init__(self, chain, level):
        self.level = level
        self.tree = chain.build_level(level)
        self.gens = list(self.tree.gens)
        self.points = self.tree.points
        self.pi = 0
        self.si = 0
        self.pending = []

    def next_pair(self):
        if self.si == len(self.gens):
            self.si = 0
            self.pi += 1
        if self.pi >= len(self.points) or not self.gens:
            return None
        pair = (self.points[self.pi], self.gens[self.si])
        self.si += 1
        return pair

    @property
    def at_point_boundary(self):
        return self.si == 0 or self.si == len(self.gens)


def inverse_word(w):
    return [-x for x in reversed(w)]


def schreier_relator(chain, frame, p, s_pos, res: SiftResult):
    """Word (signed sgs ids, 1-based) that evaluates to the identity.

    It reads t(p) s t(p^s)^-1 followed by the inverses of the transversal
    elements met while sifting that Schreier generator.
    """
    tree = frame.tree
    s = tree.gens[s_pos]
    img = act_point(p, s, tree.projective)
    word = [k + 1 for k in tree.word(p)] + [tree.gen_ids[s_pos] + 1]
    word += inverse_word([k + 1 for k in tree.word(img)])
    for j, pt in enumerate(res.points, start=frame.level + 1):
        word += inverse_word([k + 1 for k in chain.tree(j).word(pt)])
    return word


def _run_schreier_sims(chain: StabilizerChain, i: int, hook=None):
    """Make levels i..n satisfy H^(j-1)_(alpha_j) = H^j, given j > i already do.

    The recursion of the textbook algorithm ("for j := dropout down to
    i+1") is driven by an explicit stack of frames.
    """
    stack = [_Frame(chain, i)]
    if hook is not None:
        hook.begin(chain, stack[-1])
    while stack:
        f = stack[-1]
        if f.pending:
            nf = _Frame(chain, f.pending.pop())
            stack.append(nf)
            if hook is not None:
                hook.begin(chain, nf)
            continue
        if hook is not None and f.at_point_boundary and hook.done(chain, f):
            stack.pop()
            continue
        pair = f.next_pair()
        if pair is None:
            stack.pop()
            continue
        p, s = pair
        pos = f.si - 1
        gen = f.tree.schreier_generator(p, s)
        if gen.is_identity:
            res = SiftResult(gen, len(chain.base) + 1)
        else:
            res = chain.sift(gen, f.level + 1)
        if res.residue.is_identity:
            if hook is not None:
                hook.relator(chain, f, schreier_relator(chain, f, p, pos, res))
            continue
        new = res.residue if chain.config.add_residue else gen
        n_before = len(chain.base)
        chain.insert(new)
        top = len(chain.base) if len(chain.base) > n_before else min(res.dropout, len(chain.base))
        f.pending = list(range(f.level + 1, top + 1))
        if hook is not None:
            hook.changed(chain, f)


def schreier_sims(chain: StabilizerChain, i: int) -> StabilizerChain:
    _run_schreier_sims(chain, i)
    return chain


def complete_chain(chain: StabilizerChain, hook=None) -> StabilizerChain:
    """Run Schreier-Sims from the deepest level up to level 1."""
    for i in range(len(chain.base), 0, -1):
        _run_schreier_sims(chain, i, hook)
    chain.refresh()
    chain.complete = True
    return chain


def compute_bsgs_deterministic(gens, config: ChainConfig | None = None, seed_base=()) -> StabilizerChain:
    chain = partial_chain(gens, seed_base, config)
    return complete_chain(chain)


def compute_bsgs_naive(gens, config: ChainConfig | None = None) -> StabilizerChain:
    """Add every Schreier generator level by level, boiling after each level."""
    chain = partial_chain(gens, (), config)
    i = 1
    while i <= len(chain.base):
        tree = chain.build_level(i)
        level_gens = list(tree.gens)
        for p in tree.points:
            for s in level_gens:
                g = tree.schreier_generator(p, s)
                if not g.is_identity:
                    chain.insert(g)
        boiled = boil_schreier_generators(chain.base, chain.sgs, i)
        chain.reset_sgs(boiled)
        i += 1
    chain.refresh()
    chain.complete = True
    return chain


# -- queries --------------------------------------------------------------------

def group_order(chain: StabilizerChain) -> int:
    return chain.order()


def is_member(chain: StabilizerChain, g: GroupMatrix) -> bool:
    chain._require_complete()
    res = chain.sift(g)
    return res.dropout == len(chain.base) + 1 and res.residue.is_identity


def enumerate_elements(chain: StabilizerChain, limit: int | None = None):
    """Yield every group element exactly once as u_n ... u_1."""
    chain._require_complete()
    limit = chain.config.enumerate_limit if limit is None else limit
    if chain.orbit_product() > limit:
        raise GroupTooLarge(f"group order {chain.orbit_product()} exceeds {limit}")
    levels = chain.transversals()
    ident = chain.identity

    def rec(k, acc):
        # acc = u_n ... u_(k+2) u_(k+1); next multiply by level-k elements on the right
        if k == 0:
            yield acc
            return
        for u in levels[k - 1]:
            yield from rec(k - 1, u if acc is None else (acc if u.is_identity else acc * u))

    for g in rec(len(levels), None):
        yield ident if g is None else g


def factorize(chain: StabilizerChain, g: GroupMatrix) -> list[GroupMatrix]:
    """Transversal elements (u_n, ..., u_1) with g = u_n * ... * u_1."""
    chain._require_complete()
    res = chain.sift(g)
    if res.dropout != len(chain.base) + 1 or not res.residue.is_identity:
        raise NotAMember("element is not in the group")
    us = [chain.tree(i).orbit_element(pt) for i, pt in enumerate(res.points, start=1)]
    return us[::-1]


def random_element_from_chain(chain: StabilizerChain, rng) -> GroupMatrix:
    """Exactly uniform element: a uniform transversal element from each level."""
    chain._require_complete()
    g = chain.identity
    for i in range(len(chain.base), 0, -1):
        tree = chain.tree(i)
        pts = tree.points
        u = tree.orbit_element(pts[int(rng.integers(len(pts)))])
        if not u.is_identity:
            g = u if g.is_identity else g * u
    return g


def leon_check(chain: StabilizerChain) -> bool:
    """Every Schreier generator at every level sifts to the identity below it."""
    for i in range(1, len(chain.base) + 1):
        tree = chain.tree(i)
        for p in tree.points:
            for s in tree.gens:
                gen = tree.schreier_generator(p, s)
                if gen.is_identity:
                    continue
                res = chain.sift(gen, i + 1)
                if not res.residue.is_identity:
                    return False
    return True


def strong_generator_levels_ok(chain: StabilizerChain) -> bool:
    """Each level's generator set is exactly the sgs members fixing the earlier base points."""
    for i in range(1, len(chain.base) + 1):
        ids = set(chain.level_gens(i))
        for k, g in enumerate(chain.sgs):
            fixes = all(act_point(bp.coords, g, bp.projective) == bp.coords
                        for bp in chain.base[:i - 1])
            if fixes != (k in ids):
                return False
        if set(chain.tree(i).gen_ids) != ids:
            return False
    for g in chain.sgs:
        if chain.fixed_prefix(g) == len(chain.base):
            return False
    return True


def ordered_product(mats) -> GroupMatrix:
    mats = list(mats)
    out = mats[0]
    for m in itertools.islice(mats, 1, None):
        out = out * m
    return out
