"""Independent brute-force oracles shared by the tests.

Nothing here uses the package's field tables or kernels: field arithmetic
is redone with plain polynomial multiplication mod the defining polynomial.
"""

from bsgs.matrix import GroupMatrix


def digits(a, p, r):
    out = []
    for _ in range(r):
        out.append(a % p)
        a //= p
    return out


def undigits(ds, p):
    return sum(c * p**i for i, c in enumerate(ds))


def ref_add(a, b, p, r):
    return undigits([(x + y) % p for x, y in zip(digits(a, p, r), digits(b, p, r))], p)


def ref_mul(a, b, p, r, poly):
    x, y = digits(a, p, r), digits(b, p, r)
    prod = [0] * (2 * r - 1)
    for i, u in enumerate(x):
        for j, v in enumerate(y):
            prod[i + j] = (prod[i + j] + u * v) % p
    # reduce by the monic poly of degree r
    for k in range(len(prod) - 1, r - 1, -1):
        c = prod[k]
        if c:
            for i in range(r + 1):
                prod[k - r + i] = (prod[k - r + i] - c * poly[i]) % p
    return undigits(prod[:r], p)


def ref_matmul(F, d, a, b):
    out = []
    for i in range(d):
        for j in range(d):
            acc = 0
            for k in range(d):
                acc = ref_add(acc, ref_mul(a[i * d + k], b[k * d + j], F.p, F.r, F.poly), F.p, F.r)
            out.append(acc)
    return tuple(out)


def closure(gens, limit=200000):
    """All products of the generators, by breadth-first search."""
    gens = list(gens)
    ident = GroupMatrix.identity(gens[0].field, gens[0].d)
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for g in frontier:
            for s in gens:
                h = g * s
                if h not in seen:
                    seen.add(h)
                    nxt.append(h)
                    assert len(seen) <= limit
        frontier = nxt
    return seen


def orbit(point, gens, act):
    seen = {point}
    frontier = [point]
    while frontier:
        nxt = []
        for p in frontier:
            for s in gens:
                q = act(p, s)
                if q not in seen:
                    seen.add(q)
                    nxt.append(q)
        frontier = nxt
    return seen


def mat(F, rows):
    return GroupMatrix.from_rows(F, rows)
