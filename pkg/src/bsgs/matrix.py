"""Invertible matrices over GF(q), row vectors and the two group actions.

A :class:`GroupMatrix` wraps a flat row-major tuple of field indices.  Row
vectors are plain tuples; a projective point (a line of F_q^d) is the
tuple of its canonical representative, whose first nonzero coordinate
is 1.  Matrices act on the right: ``v^M = v * M``.
"""

from __future__ import annotations

from typing import NamedTuple

from .errors import DimensionMismatch, IdentityMatrix, SingularMatrix, ZeroVector
from .gf import GF


class OpCounter:
    """Global tally of matrix multiplications and inversions."""

    __slots__ = ("mul", "inv")

    def __init__(self):
        self.reset()

    def reset(self):
        self.mul = 0
        self.inv = 0


STATS = OpCounter()


class GroupMatrix:
    __slots__ = ("field", "d", "entries", "_hash", "_inv")

    def __init__(self, field: GF, d: int, entries):
        entries = tuple(entries)
        if len(entries) != d * d:
            raise DimensionMismatch(f"expected {d * d} entries, got {len(entries)}")
        self.field = field
        self.d = d
        self.entries = entries
        self._hash = None
        self._inv = None

    @classmethod
    def from_rows(cls, field: GF, rows) -> "GroupMatrix":
        rows = [tuple(int(x) for x in row) for row in rows]
        d = len(rows)
        if any(len(row) != d for row in rows):
            raise DimensionMismatch("matrix must be square")
        q = field.q
        if any(not 0 <= x < q for row in rows for x in row):
            raise ValueError(f"entries must lie in [0, {q})")
        return cls(field, d, [x for row in rows for x in row])

    @classmethod
    def identity(cls, field: GF, d: int) -> "GroupMatrix":
        return cls(field, d, _identity_entries(d))

    @classmethod
    def scalar(cls, field: GF, d: int, c: int) -> "GroupMatrix":
        return cls(field, d, [c if i == j else 0 for i in range(d) for j in range(d)])

    @classmethod
    def diag(cls, field: GF, values) -> "GroupMatrix":
        values = list(values)
        d = len(values)
        return cls(field, d, [values[i] if i == j else 0 for i in range(d) for j in range(d)])

    def rows(self):
        d = self.d
        return [self.entries[i * d:(i + 1) * d] for i in range(d)]

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.d + j]

    def __repr__(self):
        return f"GroupMatrix({[list(r) for r in self.rows()]}, {self.field!r})"

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, GroupMatrix):
            return NotImplemented
        return self.entries == other.entries and self.d == other.d and self.field == other.field

    def __hash__(self):
        h = self._hash
        if h is None:
            h = self._hash = hash(self.entries)
        return h

    def __reduce__(self):
        return (GroupMatrix, (self.field, self.d, self.entries))

    @property
    def is_identity(self) -> bool:
        return self.entries == _identity_entries(self.d)

    def _check(self, other):
        if other.d != self.d or (other.field is not self.field and other.field != self.field):
            raise DimensionMismatch(f"cannot combine {self.d}x{self.d} over {self.field} "
                                    f"with {other.d}x{other.d} over {other.field}")

    def __mul__(self, other: "GroupMatrix") -> "GroupMatrix":
        if not isinstance(other, GroupMatrix):
            return NotImplemented
        self._check(other)
        STATS.mul += 1
        return GroupMatrix(self.field, self.d, self.field.ops.matmul(self.entries, other.entries, self.d))

    def inverse(self) -> "GroupMatrix":
        """Gauss-Jordan inverse, cached on the instance."""
        inv = self._inv
        if inv is None:
            STATS.inv += 1
            ent = self.field.ops.matinv(self.entries, self.d)
            if ent is None:
                raise SingularMatrix("matrix is not invertible")
            inv = self._inv = GroupMatrix(self.field, self.d, ent)
            inv._inv = self
        return inv

    def __pow__(self, n: int) -> "GroupMatrix":
        base = self if n >= 0 else self.inverse()
        n = abs(n)
        result = GroupMatrix.identity(self.field, self.d)
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def det(self) -> int:
        return determinant(self)

    def order(self, limit: int | None = None) -> int | None:
        """Multiplicative order; None if it exceeds ``limit``."""
        x = self
        k = 1
        while not x.is_identity:
            k += 1
            if limit is not None and k > limit:
                return None
            x = x * self
        return k


_ID_CACHE: dict[int, tuple] = {}


def _identity_entries(d):
    ent = _ID_CACHE.get(d)
    if ent is None:
        ent = _ID_CACHE[d] = tuple(1 if i == j else 0 for i in range(d) for j in range(d))
    return ent


def mat_mul(a: GroupMatrix, b: GroupMatrix) -> GroupMatrix:
    return a * b


def mat_inv(a: GroupMatrix) -> GroupMatrix:
    return a.inverse()


def determinant(m: GroupMatrix) -> int:
    F, d = m.field, m.d
    rows = [list(r) for r in m.rows()]
    det = 1
    for col in range(d):
        piv = next((r for r in range(col, d) if rows[r][col]), None)
        if piv is None:
            return 0
        if piv != col:
            rows[col], rows[piv] = rows[piv], rows[col]
            det = F.neg(det)
        pv = rows[col][col]
        det = F.mul(det, pv)
        s = F.inv(pv)
        for r in range(col + 1, d):
            if rows[r][col]:
                f = F.neg(F.mul(rows[r][col], s))
                rows[r] = [F.add(x, F.mul(f, y)) for x, y in zip(rows[r], rows[col])]
    return det


# -- points and actions -------------------------------------------------------

class BasePoint(NamedTuple):
    """A base point: a row vector, or a line given by its canonical vector."""

    coords: tuple
    projective: bool = False

    def act(self, m: GroupMatrix) -> "BasePoint":
        return BasePoint(act_point(self.coords, m, self.projective), self.projective)


def unit_vector(d: int, i: int) -> tuple:
    return tuple(1 if k == i else 0 for k in range(d))


def act_vector(v, m: GroupMatrix) -> tuple:
    if len(v) != m.d:
        raise DimensionMismatch(f"vector of length {len(v)} against {m.d}x{m.d} matrix")
    return m.field.ops.vecmat(tuple(v), m.entries, m.d)


def canonical_line(v, field: GF) -> tuple:
    """Canonical representative of the line spanned by v."""
    if not any(v):
        raise ZeroVector("the zero vector does not span a line")
    return field.ops.canon(tuple(v))


def act_projective(pt, m: GroupMatrix) -> tuple:
    if len(pt) != m.d:
        raise DimensionMismatch(f"point of length {len(pt)} against {m.d}x{m.d} matrix")
    return m.field.ops.projmat(tuple(pt), m.entries, m.d)


def act_point(pt, m: GroupMatrix, projective: bool) -> tuple:
    if projective:
        return m.field.ops.projmat(pt, m.entries, m.d)
    return m.field.ops.vecmat(pt, m.entries, m.d)


def new_base_point(m: GroupMatrix) -> tuple:
    """A row vector moved by m (row-major first hit)."""
    d = m.d
    ent = m.entries
    for i in range(d):
        for j in range(d):
            if i != j and ent[i * d + j]:
                return unit_vector(d, i)
    for i in range(d):
        for j in range(d):
            if i != j and ent[i * d + i] != ent[j * d + j]:
                v = [0] * d
                v[i] = v[j] = 1
                return tuple(v)
    if ent[0] == 1:
        raise IdentityMatrix("the identity moves no point")
    return unit_vector(d, 0)


def random_invertible(field: GF, d: int, rng) -> GroupMatrix:
    """Uniformly random element of GL(d, q) by rejection sampling.

    ``rng`` is a :class:`numpy.random.Generator`.
    """
    if d < 1:
        raise ValueError("dimension must be >= 1")
    while True:
        ent = [int(x) for x in rng.integers(0, field.q, size=d * d)]
        m = GroupMatrix(field, d, ent)
        if determinant(m):
            return m
