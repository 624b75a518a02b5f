"""Classical generating sets and order formulas for GL(d, q) and SL(d, q)."""

from __future__ import annotations

import re

from .errors import BadDimension, ParseError
from .gf import GF, field_from_order
from .matrix import GroupMatrix


def gl_order(d: int, q: int) -> int:
    out = 1
    for i in range(d):
        out *= q**d - q**i
    return out


def sl_order(d: int, q: int) -> int:
    return gl_order(d, q) // (q - 1)


def _check(d, field):
    if d < 1:
        raise BadDimension(f"dimension must be >= 1, got {d}")


def _cycle_matrix(field: GF, d: int) -> GroupMatrix:
    """e_1 -> -e_1 + e_d, e_i -> -e_(i-1) for i > 1."""
    one, minus = 1, field.neg(1)
    m = [[0] * d for _ in range(d)]
    m[0][0] = minus
    m[0][d - 1] = one
    for i in range(1, d):
        m[i][i - 1] = minus
    return GroupMatrix.from_rows(field, m)


def make_gl(d: int, field: GF) -> list[GroupMatrix]:
    """Two generators of GL(d, q): diag(z, 1, ..., 1) and a signed cycle."""
    _check(d, field)
    z = field.primitive_element
    if d == 1:
        return [GroupMatrix.from_rows(field, [[z]])]
    if field.q == 2:
        return make_sl(d, field)
    return [GroupMatrix.diag(field, [z] + [1] * (d - 1)), _cycle_matrix(field, d)]


def make_sl(d: int, field: GF) -> list[GroupMatrix]:
    """Two generators of SL(d, q).

    The first is diag(z, z^-1, 1, ..., 1), or the transvection I + E_12
    when q <= 3; the second is the signed cycle also used for GL, which
    has determinant 1.
    """
    _check(d, field)
    if d == 1:
        return [GroupMatrix.identity(field, 1)]
    a = [[1 if i == j else 0 for j in range(d)] for i in range(d)]
    if field.q > 3:
        z = field.primitive_element
        a[0][0] = z
        a[1][1] = field.inv(z)
    else:
        a[0][1] = 1
    return [GroupMatrix.from_rows(field, a), _cycle_matrix(field, d)]


_BUILTIN = re.compile(r"^(GL|SL)\(\s*(\d+)\s*,\s*(\d+)\s*\)$", re.IGNORECASE)


def parse_builtin(spec: str):
    """Parse ``GL(d,q)``/``SL(d,q)`` (optionally prefixed ``builtin:``).

    Returns (label, field, generators, oracle order).
    """
    name = spec.split(":", 1)[1] if spec.startswith("builtin:") else spec
    m = _BUILTIN.match(name.strip())
    if not m:
        raise ParseError(f"unknown builtin group {spec!r}")
    kind, d, q = m.group(1).upper(), int(m.group(2)), int(m.group(3))
    try:
        field = field_from_order(q)
    except ValueError as exc:
        raise ParseError(str(exc)) from exc
    if kind == "GL":
        return f"GL({d},{q})", field, make_gl(d, field), gl_order(d, q)
    return f"SL({d},{q})", field, make_sl(d, field), sl_order(d, q)
