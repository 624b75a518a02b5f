"""Schreier trees, orbit-element tracing, Schreier generators and boiling."""

from __future__ import annotations

import math

from .errors import OrbitLimitExceeded, PointNotInOrbit
from .matrix import GroupMatrix, act_point

GENERATOR_LABELS = "generators"
TRANSVERSAL_LABELS = "transversal"
DEFAULT_ORBIT_LIMIT = 10**6


class SchreierTree:
    """Breadth-first spanning tree of an orbit, stored as back-pointers.

    ``edges`` maps every non-root point to the position (in ``gens``) of
    the generator labelling its inbound edge and ``parent`` gives the other
    end of that edge.  In transversal-label mode ``transversal`` also holds,
    for every point p, the full coset representative t(p) with
    root^t(p) = p, so tracing needs no multiplication.
    """

    def __init__(self, gens, root, mode=GENERATOR_LABELS, projective=False,
                 limit=DEFAULT_ORBIT_LIMIT, gen_ids=None, identity=None):
        if mode not in (GENERATOR_LABELS, TRANSVERSAL_LABELS):
            raise ValueError(f"unknown label mode {mode!r}")
        self.root = tuple(root)
        self.mode = mode
        self.projective = projective
        self.limit = limit
        self.gens = []
        self.gen_ids = []
        self.parent = {self.root: None}
        self.edges = {}
        self.depth = {self.root: 0}
        self.identity = identity
        self.transversal = {self.root: identity} if mode == TRANSVERSAL_LABELS else None
        if identity is None and gens:
            self.identity = GroupMatrix.identity(gens[0].field, gens[0].d)
            if self.transversal is not None:
                self.transversal[self.root] = self.identity
        self.extend(gens, gen_ids)

    def __contains__(self, p):
        return p in self.parent

    def __len__(self):
        return len(self.parent)

    @property
    def points(self):
        """Orbit points in breadth-first order."""
        return list(self.parent)

    @property
    def max_depth(self):
        return max(self.depth.values())

    @property
    def depth_stats(self):
        return {"max_depth": self.max_depth, "nodes": len(self.parent)}

    def copy(self):
        new = SchreierTree.__new__(SchreierTree)
        new.__dict__.update(self.__dict__)
        new.gens = list(self.gens)
        new.gen_ids = list(self.gen_ids)
        new.parent = dict(self.parent)
        new.edges = dict(self.edges)
        new.depth = dict(self.depth)
        if self.transversal is not None:
            new.transversal = dict(self.transversal)
        return new

    def extend(self, new_gens, gen_ids=None):
        """Add generators and grow the tree breadth-first from every node."""
        new_gens = list(new_gens)
        if gen_ids is None:
            gen_ids = range(len(self.gens), len(self.gens) + len(new_gens))
        first_new = len(self.gens)
        self.gens.extend(new_gens)
        self.gen_ids.extend(gen_ids)
        if self.identity is None and self.gens:
            self.identity = GroupMatrix.identity(self.gens[0].field, self.gens[0].d)
            if self.transversal is not None:
                self.transversal[self.root] = self.identity
        if not new_gens:
            return self
        parent, edges, depth = self.parent, self.edges, self.depth
        trans = self.transversal
        proj = self.projective
        limit = self.limit
        gens = self.gens
        # existing nodes only need the new generators; new nodes need all
        old = list(parent)
        frontier = [(p, first_new) for p in old]
        while frontier:
            children = []
            for p, start in frontier:
                dp = depth[p] + 1
                for k in range(start, len(gens)):
                    s = gens[k]
                    img = act_point(p, s, proj)
                    if img not in parent:
                        parent[img] = p
                        edges[img] = k
                        depth[img] = dp
                        if trans is not None:
                            trans[img] = trans[p] * s if p != self.root else s
                        children.append((img, 0))
                        if len(parent) > limit:
                            raise OrbitLimitExceeded(limit)
            frontier = children
        return self

    def label(self, p) -> GroupMatrix:
        return self.gens[self.edges[p]]

    def orbit_element(self, p) -> GroupMatrix:
        """The element t(p) with root^t(p) = p."""
        p = tuple(p)
        if p not in self.parent:
            raise PointNotInOrbit(p)
        if self.transversal is not None:
            return self.transversal[p]
        g = None
        root = self.root
        while p != root:
            s = self.gens[self.edges[p]]
            g = s if g is None else s * g
            p = self.parent[p]
        return self.identity if g is None else g

    def orbit_element_inverse(self, p) -> GroupMatrix:
        p = tuple(p)
        if p not in self.parent:
            raise PointNotInOrbit(p)
        if self.transversal is not None:
            return self.transversal[p].inverse()
        h = None
        root = self.root
        while p != root:
            s = self.gens[self.edges[p]].inverse()
            h = s if h is None else h * s
            p = self.parent[p]
        return self.identity if h is None else h

    def word(self, p) -> list:
        """Generator ids along the path from the root to p."""
        p = tuple(p)
        if p not in self.parent:
            raise PointNotInOrbit(p)
        out = []
        while p != self.root:
            out.append(self.gen_ids[self.edges[p]])
            p = self.parent[p]
        out.reverse()
        return out

    def schreier_generator(self, p, s: GroupMatrix) -> GroupMatrix:
        """t(p) * s * t(p^s)^-1, an element of the root's stabiliser."""
        p = tuple(p)
        img = act_point(p, s, self.projective)
        t1 = self.orbit_element(p)
        t2inv = self.orbit_element_inverse(img)
        g = s if p == self.root else t1 * s
        return g if img == self.root else g * t2inv


def compute_schreier_tree(gens, root, mode=GENERATOR_LABELS, projective=False,
                          limit=DEFAULT_ORBIT_LIMIT, gen_ids=None, identity=None) -> SchreierTree:
    return SchreierTree(gens, root, mode=mode, projective=projective, limit=limit,
                        gen_ids=gen_ids, identity=identity)


def orbit_element(tree: SchreierTree, p) -> GroupMatrix:
    return tree.orbit_element(p)


def schreier_generator(tree: SchreierTree, p, s: GroupMatrix) -> GroupMatrix:
    return tree.schreier_generator(p, s)


def depth_is_excessive(tree: SchreierTree, factor: float = 4.0) -> bool:
    n = len(tree)
    return n > 2 and tree.max_depth > factor * math.log2(n)


def fixes_prefix(g: GroupMatrix, base, k: int) -> bool:
    """True when g fixes the first k base points."""
    for bp in base[:k]:
        if act_point(bp.coords, g, bp.projective) != bp.coords:
            return False
    return True


def boil_schreier_generators(base, sgs, m: int) -> list:
    """Sims's reduction of a partial strong generating set.

    For each level i <= m, the level's generators that send the base
    point to the same moved image are collapsed: the first such g is kept
    and every later h is replaced by g * h^-1, which fixes the point.
    Identities and duplicates are dropped.
    """
    S = list(sgs)
    for i in range(min(m, len(base))):
        bp = base[i]
        first = {}
        out = []
        for h in S:
            if fixes_prefix(h, base, i):
                img = act_point(bp.coords, h, bp.projective)
                if img != bp.coords:
                    g = first.get(img)
                    if g is None:
                        first[img] = h
                    else:
                        h = g * h.inverse()
            if not h.is_identity:
                out.append(h)
        S = list(dict.fromkeys(out))
    return S
