"""Exact arithmetic in cyclotomic fields Q(zeta_m).

A value of conductor m is stored as its unique coordinate vector over the
power basis 1, z, ..., z^(phi(m)-1) of Q(zeta_m), with Fraction
coefficients, arithmetic performed modulo the m-th cyclotomic polynomial.
Values of different conductors mix by promotion to the lcm (zeta_m maps
to zeta_M^(M/m)).  No floating point is involved anywhere.
"""

import functools
import math
from fractions import Fraction


@functools.lru_cache(maxsize=None)
def cyclotomic_poly(m: int) -> tuple:
    """Integer coefficients of the m-th cyclotomic polynomial (little endian)."""
    if m < 1:
        raise ValueError("conductor must be positive")
    if m == 1:
        return (-1, 1)
    poly = [-1] + [0] * (m - 1) + [1]  # x^m - 1
    for d in range(1, m):
        if m % d == 0:
            poly = _int_div_exact(poly, cyclotomic_poly(d))
    return tuple(poly)


def _int_div_exact(a, b):
    """Divide integer polynomial a by monic-up-to-sign b; remainder must vanish."""
    a = list(a)
    db = len(b) - 1
    lead = b[-1]
    quo = [0] * (len(a) - db)
    while len(a) - 1 >= db:
        c = a[-1]
        if c % lead:
            raise ArithmeticError("non-exact polynomial division")
        c //= lead
        shift = len(a) - 1 - db
        quo[shift] = c
        for i in range(db + 1):
            a[shift + i] -= c * b[i]
        while a and a[-1] == 0:
            a.pop()
        if not a:
            break
    if a:
        raise ArithmeticError("non-exact polynomial division")
    return quo


@functools.lru_cache(maxsize=None)
def _power_rows(m: int) -> tuple:
    """Rows of x^k reduced mod the m-th cyclotomic polynomial.

    Integer tuples of length phi(m), for k up to max(2*phi(m)-2, m-1),
    enough for products of reduced values and for any zeta_m power.
    """
    phi = cyclotomic_poly(m)
    deg = len(phi) - 1
    bound = max(2 * deg - 2, m - 1, deg - 1)
    rows = []
    cur = [0] * deg
    cur[0] = 1
    rows.append(tuple(cur))
    for _ in range(bound):
        nxt = [0] + cur[:-1] if deg > 1 else [0]
        top = cur[-1]
        if top:
            # x^deg = -(phi without leading term)
            for i in range(deg):
                nxt[i] -= top * phi[i]
        rows.append(tuple(nxt))
        cur = nxt
    return tuple(rows)


def conductor_degree(m: int) -> int:
    return len(cyclotomic_poly(m)) - 1


class Cyc:
    """An element of Q(zeta_m) in the power basis; immutable."""

    __slots__ = ("m", "coeffs")

    def __init__(self, m, coeffs):
        deg = conductor_degree(m)
        coeffs = tuple(Fraction(c) for c in coeffs)
        if len(coeffs) != deg:
            raise ValueError(f"need {deg} coefficients for conductor {m}")
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "coeffs", coeffs)

    def __setattr__(self, *a):
        raise AttributeError("Cyc is immutable")

    # -- constructors

    @staticmethod
    def from_rational(c, m: int = 1) -> "Cyc":
        deg = conductor_degree(m)
        return Cyc(m, (Fraction(c),) + (Fraction(0),) * (deg - 1))

    @staticmethod
    def zeta(m: int, k: int = 1) -> "Cyc":
        k %= m
        row = _power_rows(m)[k]
        return Cyc(m, row)

    @staticmethod
    def coerce(v, m: int = 1) -> "Cyc":
        if isinstance(v, Cyc):
            return v
        return Cyc.from_rational(v, m)

    # -- structure

    def promote(self, big: int) -> "Cyc":
        if big == self.m:
            return self
        if big % self.m:
            raise ValueError(f"{big} is not a multiple of conductor {self.m}")
        step = big // self.m
        deg = conductor_degree(big)
        rows = _power_rows(big)
        out = [Fraction(0)] * deg
        for i, c in enumerate(self.coeffs):
            if c:
                row = rows[i * step]
                for j in range(deg):
                    if row[j]:
                        out[j] += c * row[j]
        return Cyc(big, out)

    def _common(self, other):
        other = Cyc.coerce(other, 1)
        m = math.lcm(self.m, other.m)
        return self.promote(m), other.promote(m), m

    @property
    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def as_rational(self):
        """The value as a Fraction, or None if it is irrational."""
        if any(self.coeffs[1:]):
            return None
        return self.coeffs[0]

    # -- arithmetic

    def __add__(self, other):
        a, b, m = self._common(other)
        return Cyc(m, tuple(x + y for x, y in zip(a.coeffs, b.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return Cyc(self.m, tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        return self + (-Cyc.coerce(other, 1))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            # scalar: no conductor promotion needed
            f = Fraction(other)
            return Cyc(self.m, tuple(c * f for c in self.coeffs))
        a, b, m = self._common(other)
        deg = len(a.coeffs)
        prod = [Fraction(0)] * (2 * deg - 1)
        for i, x in enumerate(a.coeffs):
            if x:
                for j, y in enumerate(b.coeffs):
                    if y:
                        prod[i + j] += x * y
        rows = _power_rows(m)
        out = [Fraction(0)] * deg
        for k, c in enumerate(prod):
            if c:
                row = rows[k]
                for j in range(deg):
                    if row[j]:
                        out[j] += c * row[j]
        return Cyc(m, out)

    __rmul__ = __mul__

    def inverse(self) -> "Cyc":
        if self.is_zero:
            raise ZeroDivisionError("inverse of zero cyclotomic value")
        m = self.m
        if m == 1:
            return Cyc(1, (Fraction(1) / self.coeffs[0],))
        # extended Euclid in Q[x] against the (irreducible) cyclotomic poly
        phi = [Fraction(c) for c in cyclotomic_poly(m)]
        r0, s0 = phi, []
        r1 = list(self.coeffs)
        while r1 and r1[-1] == 0:
            r1.pop()
        s1 = [Fraction(1)]
        while len(r1) > 1:
            q, rem = _q_divmod(r0, r1)
            r0, r1 = r1, rem
            s0, s1 = s1, _q_sub(s0, _q_mul(q, s1))
        if not r1:
            raise ZeroDivisionError("zero divisor mod cyclotomic polynomial")
        c = r1[0]
        deg = conductor_degree(m)
        out = [x / c for x in s1] + [Fraction(0)] * deg
        return Cyc(m, tuple(out[:deg]))

    def __truediv__(self, other):
        other = Cyc.coerce(other, 1)
        return self * other.inverse()

    def __rtruediv__(self, other):
        return Cyc.coerce(other, 1) * self.inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        out = Cyc.from_rational(1, self.m)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    # -- comparison and rendering

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Cyc.from_rational(other)
        if not isinstance(other, Cyc):
            return NotImplemented
        a, b, _ = self._common(other)
        return a.coeffs == b.coeffs

    __hash__ = None

    def key(self):
        """Deterministic sort key; values must share a conductor to be compared."""
        return (self.m,) + tuple((c.numerator, c.denominator) for c in self.coeffs)

    def to_json(self):
        return {
            "conductor": self.m,
            "num": [c.numerator for c in self.coeffs],
            "den": [c.denominator for c in self.coeffs],
        }

    @staticmethod
    def from_json(obj) -> "Cyc":
        return Cyc(obj["conductor"],
                   [Fraction(n, d) for n, d in zip(obj["num"], obj["den"])])

    def __repr__(self):
        if self.as_rational() is not None:
            return f"Cyc({self.coeffs[0]})"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                terms.append(f"{c}*z{self.m}^{i}" if i else f"{c}")
        return "Cyc(" + " + ".join(terms) + ")"


# rational polynomial helpers for the inverse


def _q_divmod(a, b):
    a = list(a)
    db = len(b) - 1
    inv = Fraction(1) / b[-1]
    quo = [Fraction(0)] * max(0, len(a) - db)
    while a and len(a) - 1 >= db:
        c = a[-1] * inv
        shift = len(a) - 1 - db
        quo[shift] = c
        for i in range(db + 1):
            a[shift + i] -= c * b[i]
        while a and a[-1] == 0:
            a.pop()
    return quo, a


def _q_mul(a, b):
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    while out and out[-1] == 0:
        out.pop()
    return out


def _q_sub(a, b):
    n = max(len(a), len(b))
    out = [(a[i] if i < len(a) else Fraction(0)) -
           (b[i] if i < len(b) else Fraction(0)) for i in range(n)]
    while out and out[-1] == 0:
        out.pop()
    return out
