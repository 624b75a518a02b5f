"""Table-driven arithmetic in GF(p^r) for q = p^r <= 2^16.

Elements are plain ints in ``range(q)``.  The integer ``sum(e_i * p**i)``
encodes the polynomial ``sum(e_i * x**i)`` reduced modulo the field's
defining polynomial, so index 0 is zero and index 1 is one.
"""

from __future__ import annotations

import functools
import itertools

from .errors import DivisionByZero, FieldTooLarge, NonPrimeCharacteristic

MAX_FIELD_SIZE = 1 << 16
# full q*q addition/multiplication tables are only built up to this size;
# larger fields use log/antilog tables
FULL_TABLE_MAX = 256


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    k = 3
    while k * k <= n:
        if n % k == 0:
            return False
        k += 2
    return True


# -- dense polynomials over GF(p), ascending coefficient lists ---------------

def _trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mod(a, b, p):
    """Remainder of a modulo b over GF(p); b must be nonzero."""
    a = _trim(list(a))
    inv_lead = pow(b[-1], p - 2, p)
    db = len(b) - 1
    while len(a) - 1 >= db and a:
        coef = a[-1] * inv_lead % p
        shift = len(a) - 1 - db
        for i, c in enumerate(b):
            a[shift + i] = (a[shift + i] - coef * c) % p
        _trim(a)
    return a


def is_irreducible(poly, p: int) -> bool:
    """Trial division by every monic polynomial of degree <= deg(poly)/2."""
    poly = _trim(list(poly))
    deg = len(poly) - 1
    if deg < 1:
        return False
    if deg == 1:
        return True
    for k in range(1, deg // 2 + 1):
        for low in itertools.product(range(p), repeat=k):
            if not _poly_mod(poly, list(low) + [1], p):
                return False
    return True


def least_irreducible(p: int, r: int) -> tuple[int, ...]:
    """Lexicographically least monic irreducible of degree r (c0 compared first)."""
    if r == 1:
        return (0, 1)
    for low in itertools.product(range(p), repeat=r):
        cand = list(low) + [1]
        if is_irreducible(cand, p):
            return tuple(cand)
    raise AssertionError("no irreducible polynomial found")  # pragma: no cover


class GF:
    """The finite field GF(p^r) with integer-encoded elements.

    Construct through :func:`make_field`, which caches instances so that
    equal fields are also identical objects.
    """

    def __init__(self, p: int, r: int = 1, poly=None):
        if not is_prime(p):
            raise NonPrimeCharacteristic(f"{p} is not prime")
        if r < 1:
            raise ValueError("extension degree must be >= 1")
        q = p**r
        if q > MAX_FIELD_SIZE:
            raise FieldTooLarge(f"q = {p}^{r} exceeds {MAX_FIELD_SIZE}")
        if poly is None:
            poly = least_irreducible(p, r)
        poly = tuple(int(c) % p for c in poly)
        if r > 1:
            if len(poly) != r + 1 or poly[-1] != 1:
                raise ValueError(f"defining polynomial must be monic of degree {r}")
            if not is_irreducible(poly, p):
                raise ValueError(f"polynomial {poly} is reducible over GF({p})")
        else:
            poly = (0, 1)
        self.p = p
        self.r = r
        self.q = q
        self.poly = poly
        self._build_tables()
        self.ops = None  # filled in by the kernel layer

    def __repr__(self):
        if self.r == 1:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.r}, poly={list(self.poly)})"

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, GF):
            return NotImplemented
        return (self.p, self.r, self.poly) == (other.p, other.r, other.poly)

    def __hash__(self):
        return hash((self.p, self.r, self.poly))

    def __reduce__(self):
        return (make_field, (self.p, self.r, self.poly))

    # -- construction ------------------------------------------------------

    def _digits(self, a):
        p = self.p
        out = []
        for _ in range(self.r):
            out.append(a % p)
            a //= p
        return out

    def _from_digits(self, digits):
        a = 0
        for c in reversed(digits):
            a = a * self.p + c
        return a

    def _poly_mul(self, a, b):
        p, r = self.p, self.r
        da, db = self._digits(a), self._digits(b)
        prod = [0] * (2 * r - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] = (prod[i + j] + x * y) % p
        rem = _poly_mod(prod, list(self.poly), p) if r > 1 else prod
        rem = rem + [0] * (r - len(rem))
        return self._from_digits(rem[:r])

    def _build_tables(self):
        p, q = self.p, self.q
        # find the least primitive element and the log/antilog tables
        for g in range(2 if q > 2 else 1, q):
            exp = [1]
            x = 1
            for _ in range(q - 2):
                x = self._poly_mul(x, g) if self.r > 1 else x * g % p
                if x == 1:
                    break
                exp.append(x)
            if len(exp) == q - 1:
                break
        self.primitive_element = g
        self.exp_table = exp + exp
        log = [0] * q
        for k, x in enumerate(exp):
            log[x] = k
        self.log_table = log
        self.inv_table = [0] + [exp[(q - 1 - log[a]) % (q - 1)] for a in range(1, q)]
        self.neg_table = [self._from_digits([(-c) % p for c in self._digits(a)]) for a in range(q)]
        if q <= FULL_TABLE_MAX:
            self.add_table = [self._add_slow(a, b) for a in range(q) for b in range(q)]
            self.mul_table = [self._mul_log(a, b) for a in range(q) for b in range(q)]
        else:
            self.add_table = None
            self.mul_table = None

    def _add_slow(self, a, b):
        if self.r == 1:
            return (a + b) % self.p
        if self.p == 2:
            return a ^ b
        p = self.p
        return self._from_digits([(x + y) % p for x, y in zip(self._digits(a), self._digits(b))])

    def _mul_log(self, a, b):
        if a == 0 or b == 0:
            return 0
        return self.exp_table[self.log_table[a] + self.log_table[b]]

    # -- arithmetic --------------------------------------------------------

    @property
    def has_full_tables(self) -> bool:
        return self.add_table is not None

    def elements(self):
        return range(self.q)

    def add(self, a: int, b: int) -> int:
        if self.add_table is not None:
            return self.add_table[a * self.q + b]
        return self._add_slow(a, b)

    def neg(self, a: int) -> int:
        return self.neg_table[a]

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg_table[b])

    def mul(self, a: int, b: int) -> int:
        if self.mul_table is not None:
            return self.mul_table[a * self.q + b]
        return self._mul_log(a, b)

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("inverse of zero")
        return self.inv_table[a]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, n: int) -> int:
        if a == 0:
            if n < 0:
                raise DivisionByZero("negative power of zero")
            return 1 if n == 0 else 0
        return self.exp_table[(self.log_table[a] * n) % (self.q - 1)]

    def order(self, a: int) -> int:
        """Multiplicative order of a nonzero element."""
        if a == 0:
            raise DivisionByZero("zero has no multiplicative order")
        n = self.q - 1
        k = self.log_table[a]
        from math import gcd

        return n // gcd(n, k)


@functools.lru_cache(maxsize=None)
def _cached_field(p, r, poly):
    field = GF(p, r, poly)
    from . import kernel

    kernel.attach_ops(field)
    return field


def make_field(p: int, r: int = 1, poly=None) -> GF:
    """Return the (cached) field GF(p^r).

    >>> make_field(3, 2).poly
    (1, 0, 1)
    """
    if not is_prime(p):
        raise NonPrimeCharacteristic(f"{p} is not prime")
    if r >= 1 and p**r > MAX_FIELD_SIZE:
        raise FieldTooLarge(f"q = {p}^{r} exceeds {MAX_FIELD_SIZE}")
    if poly is None:
        poly = least_irreducible(p, r) if r >= 1 else None
    else:
        poly = tuple(int(c) % p for c in poly)
        if r == 1:
            poly = (0, 1)
    return _cached_field(p, r, poly)


def field_from_order(q: int) -> GF:
    """Field of order q given as a prime power."""
    for p in range(2, q + 1):
        if q % p == 0:
            break
    r = 0
    n = q
    while n % p == 0:
        n //= p
        r += 1
    if n != 1 or not is_prime(p):
        raise NonPrimeCharacteristic(f"{q} is not a prime power")
    return make_field(p, r)
