"""Pure-Python matrix kernels over GF(q).

Matrices are flat row-major tuples of field indices, vectors are tuples.
Every ops class exposes the same methods as the compiled kernel:
``matmul``, ``vecmat``, ``projmat``, ``canon`` and ``matinv``.
"""

from __future__ import annotations

from operator import mul as _imul


class _OpsBase:
    def __init__(self, field):
        self.field = field
        self.q = field.q
        self.inv = field.inv_table
        self.neg = field.neg_table

    def canon(self, v):
        """Scale v so that its first nonzero coordinate is 1."""
        for x in v:
            if x:
                if x == 1:
                    return tuple(v)
                return self._scale(v, self.inv[x])
        raise ValueError("zero vector has no projective point")

    def projmat(self, v, m, d):
        return self.canon(self.vecmat(v, m, d))

    def matinv(self, a, d):
        """Gauss-Jordan inverse; None when a is singular."""
        add, mul = self._add, self._mul
        inv, neg = self.inv, self.neg
        rows = [list(a[i * d:(i + 1) * d]) + [1 if j == i else 0 for j in range(d)] for i in range(d)]
        w = 2 * d
        for col in range(d):
            piv = next((r for r in range(col, d) if rows[r][col]), None)
            if piv is None:
                return None
            rows[col], rows[piv] = rows[piv], rows[col]
            prow = rows[col]
            s = inv[prow[col]]
            if s != 1:
                prow = rows[col] = [mul(s, x) for x in prow]
            for r in range(d):
                if r != col and rows[r][col]:
                    f = neg[rows[r][col]]
                    row = rows[r]
                    rows[r] = [add(row[k], mul(f, prow[k])) for k in range(w)]
        return tuple(x for row in rows for x in row[d:])


class PrimeOps(_OpsBase):
    """GF(p) with plain modular integer arithmetic."""

    def __init__(self, field):
        super().__init__(field)
        self.p = field.p

    def _add(self, a, b):
        return (a + b) % self.p

    def _mul(self, a, b):
        return a * b % self.p

    def _scale(self, v, s):
        p = self.p
        return tuple(x * s % p for x in v)

    def matmul(self, a, b, d):
        p = self.p
        cols = [b[j::d] for j in range(d)]
        return tuple(
            sum(map(_imul, a[i:i + d], col)) % p
            for i in range(0, d * d, d)
            for col in cols
        )

    def vecmat(self, v, m, d):
        p = self.p
        return tuple(sum(map(_imul, v, m[j::d])) % p for j in range(d))


class TableOps(_OpsBase):
    """Extension fields with full q*q addition and multiplication tables."""

    def __init__(self, field):
        super().__init__(field)
        self.add_table = field.add_table
        self.mul_table = field.mul_table

    def _add(self, a, b):
        return self.add_table[a * self.q + b]

    def _mul(self, a, b):
        return self.mul_table[a * self.q + b]

    def _scale(self, v, s):
        mt, q = self.mul_table, self.q
        s *= q
        return tuple(mt[s + x] for x in v)

    def matmul(self, a, b, d):
        at, mt, q = self.add_table, self.mul_table, self.q
        cols = [b[j::d] for j in range(d)]
        out = []
        for i in range(0, d * d, d):
            row = a[i:i + d]
            for col in cols:
                acc = 0
                for x, y in zip(row, col):
                    if x and y:
                        acc = at[acc * q + mt[x * q + y]]
                out.append(acc)
        return tuple(out)

    def vecmat(self, v, m, d):
        at, mt, q = self.add_table, self.mul_table, self.q
        out = []
        for j in range(d):
            acc = 0
            for x, y in zip(v, m[j::d]):
                if x and y:
                    acc = at[acc * q + mt[x * q + y]]
            out.append(acc)
        return tuple(out)


class SlowOps(_OpsBase):
    """Any supported field, via the field's own add/mul (log tables)."""

    def __init__(self, field):
        super().__init__(field)
        self._add = field.add
        self._mul = field.mul

    def _scale(self, v, s):
        mul = self._mul
        return tuple(mul(s, x) for x in v)

    def matmul(self, a, b, d):
        add, mul = self._add, self._mul
        out = []
        for i in range(0, d * d, d):
            row = a[i:i + d]
            for j in range(d):
                acc = 0
                for x, y in zip(row, b[j::d]):
                    if x and y:
                        acc = add(acc, mul(x, y))
                out.append(acc)
        return tuple(out)

    def vecmat(self, v, m, d):
        add, mul = self._add, self._mul
        out = []
        for j in range(d):
            acc = 0
            for x, y in zip(v, m[j::d]):
                if x and y:
                    acc = add(acc, mul(x, y))
            out.append(acc)
        return tuple(out)


def make_ops(field):
    if field.r == 1:
        return PrimeOps(field)
    if field.has_full_tables:
        return TableOps(field)
    return SlowOps(field)
