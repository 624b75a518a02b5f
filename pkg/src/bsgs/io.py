"""Line-oriented text format for matrix generating sets.

    matgroup v1
    q=3^2 d=2 poly=1,0,1
    # comments run to the end of the line
    gen
    1 0
    0 2

Entries are field elements under the base-p digit encoding.  ``poly``
lists the ascending coefficients of the defining polynomial and may be
omitted (the default polynomial is then used); it is always written
when r > 1.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from pathlib import Path

from .errors import ParseError
from .gf import GF, make_field
from .matrix import GroupMatrix, determinant

MAGIC = "matgroup v1"
_Q = re.compile(r"^(\d+)(?:\^(\d+))?$")


@dataclass
class GroupFile:
    field: GF
    d: int
    gens: list

    def serialize(self) -> str:
        return serialize(self.field, self.d, self.gens)


def _strip(line: str) -> str:
    return line.split("#", 1)[0].strip()


def _parse_header(line: str):
    fields = {}
    for tok in line.split():
        if "=" not in tok:
            raise ParseError(f"bad header token {tok!r}")
        k, v = tok.split("=", 1)
        fields[k] = v
    if "q" not in fields or "d" not in fields:
        raise ParseError("header needs q= and d=")
    m = _Q.match(fields["q"])
    if not m:
        raise ParseError(f"bad field size {fields['q']!r}")
    p, r = int(m.group(1)), int(m.group(2) or 1)
    try:
        d = int(fields["d"])
    except ValueError:
        raise ParseError(f"bad dimension {fields['d']!r}") from None
    if d < 1:
        raise ParseError("dimension must be >= 1")
    poly = None
    if "poly" in fields:
        try:
            poly = tuple(int(c) for c in fields["poly"].split(","))
        except ValueError:
            raise ParseError(f"bad polynomial {fields['poly']!r}") from None
    try:
        F = make_field(p, r, poly)
    except (ValueError, ArithmeticError) as exc:
        raise ParseError(str(exc)) from exc
    return F, d


def parse(text: str) -> GroupFile:
    lines = [ln for ln in (_strip(x) for x in text.splitlines()) if ln]
    if not lines or lines[0] != MAGIC:
        raise ParseError(f"missing {MAGIC!r} header")
    if len(lines) < 2:
        raise ParseError("missing field/dimension line")
    F, d = _parse_header(lines[1])
    gens = []
    i = 2
    while i < len(lines):
        if lines[i] != "gen":
            raise ParseError(f"expected 'gen', got {lines[i]!r}")
        rows = lines[i + 1:i + 1 + d]
        if len(rows) < d:
            raise ParseError("truncated matrix")
        ent = []
        for row in rows:
            try:
                vals = [int(x) for x in row.split()]
            except ValueError:
                raise ParseError(f"bad matrix row {row!r}") from None
            if len(vals) != d or any(not 0 <= x < F.q for x in vals):
                raise ParseError(f"row {row!r} needs {d} entries in [0,{F.q})")
            ent.extend(vals)
        m = GroupMatrix(F, d, ent)
        if not determinant(m):
            raise ParseError(f"generator {len(gens) + 1} is singular")
        gens.append(m)
        i += 1 + d
    return GroupFile(F, d, gens)


def serialize(field: GF, d: int, gens) -> str:
    head = f"q={field.p}^{field.r} d={d}"
    if field.r > 1:
        head += " poly=" + ",".join(str(c) for c in field.poly)
    out = [MAGIC, head]
    for g in gens:
        out.append("gen")
        out.extend(" ".join(str(x) for x in row) for row in g.rows())
    return "\n".join(out) + "\n"


def load(path) -> GroupFile:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
    return parse(text)
