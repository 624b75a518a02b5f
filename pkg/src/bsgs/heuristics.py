"""Base-point selection strategies.

``natural`` uses :func:`~bsgs.matrix.new_base_point`.  ``projective``
precedes every vector base point by the line it spans, so that one large
vector orbit is split into a line orbit and a small orbit inside the
line.  ``eigen`` prefers vectors that are eigenvectors of as many input
generators as possible, which tends to give short orbits.
"""

from __future__ import annotations

import enum
import functools

from .errors import DimensionTooLarge, IdentityMatrix, ZeroVector
from .matrix import BasePoint, GroupMatrix, act_vector, canonical_line, new_base_point

EIGEN_MAX_DIM = 8


class BaseStrategy(str, enum.Enum):
    NATURAL = "natural"
    PROJECTIVE = "projective"
    EIGEN = "eigen"


def alternating_base_points(v, field) -> tuple[BasePoint, BasePoint]:
    """The pair (line(v), v); the line is acted on projectively."""
    v = tuple(v)
    if not any(v):
        raise ZeroVector("cannot take the line through the zero vector")
    return BasePoint(canonical_line(v, field), True), BasePoint(v, False)


# -- polynomials over GF(q), ascending coefficients ---------------------------

def _padd(F, a, b):
    n = max(len(a), len(b))
    a = list(a) + [0] * (n - len(a))
    b = list(b) + [0] * (n - len(b))
    out = [F.add(x, y) for x, y in zip(a, b)]
    while out and out[-1] == 0:
        out.pop()
    return out


def _pmul(F, a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] = F.add(out[i + j], F.mul(x, y))
    while out and out[-1] == 0:
        out.pop()
    return out


def _peval(F, poly, x):
    acc = 0
    for c in reversed(poly):
        acc = F.add(F.mul(acc, x), c)
    return acc


def characteristic_polynomial(m: GroupMatrix) -> list:
    """det(xI - m) by cofactor expansion with memoised minors."""
    F, d = m.field, m.d
    if d > EIGEN_MAX_DIM:
        raise DimensionTooLarge(f"characteristic polynomial capped at d <= {EIGEN_MAX_DIM}")
    entry = {}
    for i in range(d):
        for j in range(d):
            c = F.neg(m[i, j])
            entry[i, j] = [c, 1] if i == j else ([c] if c else [])

    @functools.lru_cache(maxsize=None)
    def minor(col, rows):
        if col == d:
            return (1,)
        total = []
        for pos, r in enumerate(rows):
            e = entry[r, col]
            if not e:
                continue
            term = _pmul(F, e, list(minor(col + 1, rows[:pos] + rows[pos + 1:])))
            if pos % 2:
                term = [F.neg(c) for c in term]
            total = _padd(F, total, term)
        return tuple(total)

    return list(minor(0, tuple(range(d))))


def eigenvalues(m: GroupMatrix) -> list[int]:
    F = m.field
    cp = characteristic_polynomial(m)
    return [x for x in range(1, F.q) if _peval(F, cp, x) == 0]


def left_eigenspace(m: GroupMatrix, lam: int) -> list[tuple]:
    """Basis of {v : v m = lam v}, each vector scaled to leading 1."""
    F, d = m.field, m.d
    # solve (m - lam I)^T x = 0 by row reduction
    rows = [[F.sub(m[j, i], lam) if i == j else m[j, i] for j in range(d)] for i in range(d)]
    pivots = []
    r = 0
    for c in range(d):
        piv = next((k for k in range(r, d) if rows[k][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        s = F.inv(rows[r][c])
        rows[r] = [F.mul(s, x) for x in rows[r]]
        for k in range(d):
            if k != r and rows[k][c]:
                f = F.neg(rows[k][c])
                rows[k] = [F.add(x, F.mul(f, y)) for x, y in zip(rows[k], rows[r])]
        pivots.append(c)
        r += 1
    basis = []
    for free in (c for c in range(d) if c not in pivots):
        v = [0] * d
        v[free] = 1
        for k, c in enumerate(pivots):
            v[c] = F.neg(rows[k][free])
        basis.append(canonical_line(v, F))
    return basis


def _is_eigenvector(v, g: GroupMatrix) -> bool:
    w = act_vector(v, g)
    return any(w) and canonical_line(w, g.field) == canonical_line(v, g.field)


def _vector_key(v):
    lead = next(i for i, x in enumerate(v) if x)
    return (lead, v)


@functools.lru_cache(maxsize=256)
def _ranked_candidates(gens: tuple) -> tuple:
    scored = {}
    for g in gens:
        F = g.field
        for lam in eigenvalues(g):
            order = F.order(lam)
            for v in left_eigenspace(g, lam):
                prev = scored.get(v)
                if prev is None or order < prev:
                    scored[v] = order
    ranked = sorted(
        scored,
        key=lambda v: (-sum(_is_eigenvector(v, g) for g in gens), scored[v], _vector_key(v)),
    )
    return tuple(ranked)


def eigenvector_candidates(gens) -> list[tuple]:
    """Eigenvectors of the generators, best first.

    Score is the number of generators the vector is an eigenvector of;
    ties go to the smaller multiplicative order of the eigenvalue, then
    to the earlier leading coordinate, then lexicographically.
    """
    gens = tuple(g for g in gens)
    if not gens:
        raise ValueError("need at least one generator")
    if gens[0].d > EIGEN_MAX_DIM:
        raise DimensionTooLarge(f"eigenvector heuristic capped at d <= {EIGEN_MAX_DIM}")
    return list(_ranked_candidates(gens))


def eigenvector_base_point(gens):
    cands = eigenvector_candidates(gens)
    return cands[0] if cands else None


def select_base_point(strategy, gens, residue: GroupMatrix) -> list[BasePoint]:
    """New base points, all but possibly a leading line moved by ``residue``."""
    if residue.is_identity:
        raise IdentityMatrix("the identity moves no point")
    strategy = BaseStrategy(strategy)
    if strategy is BaseStrategy.EIGEN and residue.d <= EIGEN_MAX_DIM and gens:
        for v in eigenvector_candidates(gens):
            if act_vector(v, residue) != v:
                return [BasePoint(v, False)]
    v = new_base_point(residue)
    if strategy is BaseStrategy.PROJECTIVE:
        return list(alternating_base_points(v, residue.field))
    return [BasePoint(v, False)]
