"""Arithmetic in small finite fields F_{p^d} and polynomials over them.

A field element is a plain int ``0 <= code < q`` encoding its coefficient
vector over F_p: ``code = c0 + c1*p + ... + c_{d-1}*p^(d-1)``.  The field
object carries lookup tables (discrete log for multiplication, an
addition table for small q), which keeps brute-force linear algebra over
F_q fast enough in pure Python.

Reproducibility: the defining modulus is the *first* monic irreducible of
degree d in code order, and the stored primitive element is the smallest
code of multiplicative order q-1.  Nothing here depends on hashing order
or platform.

Polynomials over the field are little-endian tuples of codes with no
trailing zeros; the zero polynomial is ``()``.
"""

import functools
import random

from .errors import RepringError

_ADD_TABLE_MAX_Q = 256


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    k = 2
    while k * k <= n:
        if n % k == 0:
            return False
        k += 1
    return True


def _prime_factors(n: int) -> list:
    out = []
    k = 2
    while k * k <= n:
        if n % k == 0:
            out.append(k)
            while n % k == 0:
                n //= k
        k += 1
    if n > 1:
        out.append(n)
    return out


# ---------------------------------------------------------------------
# polynomials over the prime field F_p, used only to bootstrap the field
# tables.  Coefficients are ints in [0, p), little endian lists.

def _pf_trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _pf_mul(p, a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _pf_trim(out)


def _pf_sub(p, a, b):
    n = max(len(a), len(b))
    out = [((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % p
           for i in range(n)]
    return _pf_trim(out)


def _pf_mod(p, a, f):
    # f monic
    a = list(a)
    df = len(f) - 1
    while len(a) - 1 >= df and a:
        c = a[-1]
        if c:
            shift = len(a) - 1 - df
            for i in range(df):
                a[shift + i] = (a[shift + i] - c * f[i]) % p
        a.pop()
    return _pf_trim(a)


def _pf_powmod(p, base, e, f):
    result = [1]
    base = _pf_mod(p, base, f)
    while e:
        if e & 1:
            result = _pf_mod(p, _pf_mul(p, result, base), f)
        base = _pf_mod(p, _pf_mul(p, base, base), f)
        e >>= 1
    return result


def _pf_gcd(p, a, b):
    a, b = list(a), list(b)
    while b:
        a, b = b, _pf_mod_general(p, a, b)
    if a:
        inv = pow(a[-1], p - 2, p)
        a = [(c * inv) % p for c in a]
    return a


def _pf_mod_general(p, a, f):
    if not f:
        raise ZeroDivisionError
    inv = pow(f[-1], p - 2, p)
    a = list(a)
    df = len(f) - 1
    while a and len(a) - 1 >= df:
        c = (a[-1] * inv) % p
        if c:
            shift = len(a) - 1 - df
            for i in range(df):
                a[shift + i] = (a[shift + i] - c * f[i]) % p
        a.pop()
        _pf_trim(a)
    return a


def _pf_is_irreducible(p, f):
    """Monic f of degree >= 1 over F_p."""
    d = len(f) - 1
    if d == 1:
        return True
    x = [0, 1]
    # x^(p^d) == x mod f
    h = _pf_powmod(p, x, p ** d, f)
    if _pf_sub(p, h, x):
        return False
    for ell in _prime_factors(d):
        h = _pf_powmod(p, x, p ** (d // ell), f)
        if len(_pf_gcd(p, _pf_sub(p, h, x), f)) > 1:
            return False
    return True


# ---------------------------------------------------------------------


class GF:
    """The finite field F_{p^d} with table-driven arithmetic on int codes."""

    def __init__(self, p: int, d: int):
        if not _is_prime(p):
            raise ValueError(f"p = {p} is not prime")
        if d < 1:
            raise ValueError("d must be >= 1")
        self.p = p
        self.d = d
        self.q = q = p ** d
        self.modulus = self._find_modulus()
        self._neg = [self._digit_neg(c) for c in range(q)]
        self.exp, self.log, self.primitive = self._build_log_tables()
        if q <= _ADD_TABLE_MAX_Q:
            self._add = [[self._digit_add(a, b) for b in range(q)]
                         for a in range(q)]
        else:
            self._add = None

    # -- construction helpers

    def _find_modulus(self):
        p, d = self.p, self.d
        for code in range(p ** d):
            f = self._int_digits(code, d) + [1]
            if _pf_is_irreducible(p, f):
                return tuple(f)
        raise RepringError(f"no irreducible of degree {d} over F_{p}")

    def _int_digits(self, code, length):
        p = self.p
        out = []
        for _ in range(length):
            out.append(code % p)
            code //= p
        return out

    def _digit_add(self, a, b):
        p = self.p
        out = 0
        mult = 1
        for _ in range(self.d):
            out += ((a + b) % p) * mult
            a //= p
            b //= p
            mult *= p
        return out

    def _digit_neg(self, a):
        p = self.p
        out = 0
        mult = 1
        for _ in range(self.d):
            out += ((-a) % p) * mult
            a //= p
            mult *= p
        return out

    def _raw_mul(self, a, b):
        """Multiply two codes by honest polynomial arithmetic mod modulus."""
        p, d = self.p, self.d
        da = self._int_digits(a, d)
        db = self._int_digits(b, d)
        prod = _pf_mul(p, da, db)
        prod = _pf_mod(p, prod, list(self.modulus))
        out = 0
        mult = 1
        for c in prod:
            out += c * mult
            mult *= p
        return out

    def _build_log_tables(self):
        q = self.q
        if q == 2:
            return [1], [-1, 0], 1
        for cand in range(2, q):
            powers = [1]
            x = cand
            while x != 1:
                powers.append(x)
                x = self._raw_mul(x, cand)
                if len(powers) > q:
                    raise RepringError("multiplicative order overflow")
            if len(powers) == q - 1:
                log = [-1] * q
                for e, c in enumerate(powers):
                    log[c] = e
                return powers, log, cand
        raise RepringError("no primitive element found")

    # -- arithmetic on codes

    def add(self, a, b):
        if self._add is not None:
            return self._add[a][b]
        return self._digit_add(a, b)

    def neg(self, a):
        return self._neg[a]

    def sub(self, a, b):
        return self.add(a, self._neg[b])

    def mul(self, a, b):
        if a == 0 or b == 0:
            return 0
        return self.exp[(self.log[a] + self.log[b]) % (self.q - 1)]

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero in GF")
        return self.exp[(-self.log[a]) % (self.q - 1)]

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, e):
        if a == 0:
            if e == 0:
                return 1
            if e < 0:
                raise ZeroDivisionError
            return 0
        return self.exp[(self.log[a] * e) % (self.q - 1)]

    # -- conversions

    def coeffs(self, code):
        """Coefficient vector (length d) of an element over F_p."""
        return tuple(self._int_digits(code, self.d))

    def code(self, coeffs):
        out = 0
        mult = 1
        for c in coeffs:
            out += (c % self.p) * mult
            mult *= self.p
        return out

    def from_int(self, n):
        """The image of an ordinary integer in the prime subfield."""
        return n % self.p

    def pth_root(self, a):
        """Inverse of the Frobenius x -> x^p."""
        return self.pow(a, self.q // self.p)

    def __repr__(self):
        return f"GF({self.p}^{self.d})"

    def __eq__(self, other):
        return isinstance(other, GF) and (self.p, self.d) == (other.p, other.d)

    def __hash__(self):
        return hash((self.p, self.d))


@functools.lru_cache(maxsize=None)
def gf_field(p: int, d: int) -> GF:
    return GF(p, d)


def multiplicative_order(p: int, m: int) -> int:
    """Order of p in (Z/m)^*; m = 1 gives 1.  Requires gcd(p, m) = 1."""
    if m == 1:
        return 1
    x = p % m
    if x == 0:
        raise ValueError("p divides m")
    d = 1
    y = x
    while y != 1:
        y = (y * x) % m
        d += 1
        if d > m:
            raise ValueError(f"gcd({p}, {m}) != 1")
    return d


# ---------------------------------------------------------------------
# polynomials over GF: little-endian tuples of codes, no trailing zeros


def poly_trim(a):
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return tuple(a)


def poly_deg(a):
    return len(a) - 1


def poly_add(F, a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] = F.add(out[i], c)
    return poly_trim(out)


def poly_neg(F, a):
    return tuple(F.neg(c) for c in a)


def poly_sub(F, a, b):
    return poly_add(F, a, poly_neg(F, b))


def poly_scale(F, a, s):
    if s == 0:
        return ()
    return tuple(F.mul(c, s) for c in a)


def poly_mul(F, a, b):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    add, mul = F.add, F.mul
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    out[i + j] = add(out[i + j], mul(ai, bj))
    return poly_trim(out)


def poly_divmod(F, a, b):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = list(a)
    db, lead = len(b) - 1, b[-1]
    ilead = F.inv(lead)
    quo = [0] * max(0, len(a) - db)
    add, mul, neg = F.add, F.mul, F.neg
    while len(a) - 1 >= db and a:
        c = mul(a[-1], ilead)
        shift = len(a) - 1 - db
        if c:
            quo[shift] = c
            nc = neg(c)
            for i in range(db):
                a[shift + i] = add(a[shift + i], mul(nc, b[i]))
        a.pop()
        while a and a[-1] == 0:
            a.pop()
    return poly_trim(quo), poly_trim(a)


def poly_mod(F, a, b):
    return poly_divmod(F, a, b)[1]


def poly_monic(F, a):
    if not a:
        return a
    if a[-1] == 1:
        return tuple(a)
    return poly_scale(F, a, F.inv(a[-1]))


def poly_gcd(F, a, b):
    a, b = tuple(a), tuple(b)
    while b:
        a, b = b, poly_mod(F, a, b)
    return poly_monic(F, a)


def poly_powmod(F, base, e, mod):
    result = (1,)
    base = poly_mod(F, base, mod)
    while e:
        if e & 1:
            result = poly_mod(F, poly_mul(F, result, base), mod)
        base = poly_mod(F, poly_mul(F, base, base), mod)
        e >>= 1
    return result


def poly_eval(F, a, x):
    out = 0
    for c in reversed(a):
        out = F.add(F.mul(out, x), c)
    return out


def poly_deriv(F, a):
    # codes 0..p-1 are exactly the prime subfield
    return poly_trim([F.mul(a[i], i % F.p) for i in range(1, len(a))])


_X = (0, 1)


def _pth_root_poly(F, f):
    """f with only p-divisible exponents; return g with g^p = f."""
    p = F.p
    out = []
    for i in range(0, len(f), p):
        out.append(F.pth_root(f[i]))
    for i, c in enumerate(f):
        if i % p and c:
            raise RepringError("polynomial is not a p-th power")
    return poly_trim(out)


def _squarefree_parts(F, f):
    """Decompose monic f as a product of squarefree factors with multiplicity.

    Returns dict {monic squarefree poly: multiplicity}; standard char-p
    algorithm handling vanishing derivative via p-th roots.
    """
    out = {}

    def accumulate(g, mult):
        if poly_deg(g) < 1:
            return
        out[g] = out.get(g, 0) + mult

    def rec(f, outer):
        df = poly_deriv(F, f)
        if not df:
            rec(_pth_root_poly(F, f), outer * F.p)
            return
        c = poly_gcd(F, f, df)
        w = poly_divmod(F, f, c)[0]
        i = 1
        while poly_deg(w) > 0:
            y = poly_gcd(F, w, c)
            z = poly_divmod(F, w, y)[0]
            accumulate(z, i * outer)
            w = y
            c = poly_divmod(F, c, y)[0]
            i += 1
        if poly_deg(c) > 0:
            rec(_pth_root_poly(F, c), outer * F.p)

    rec(poly_monic(F, f), 1)
    return out


def _distinct_degree(F, f):
    """Split squarefree monic f into products of same-degree irreducibles.

    Returns list of (factor, degree of its irreducible parts).
    """
    out = []
    h = _X
    i = 1
    rest = f
    while poly_deg(rest) >= 2 * i:
        h = poly_powmod(F, h, F.q, rest)
        g = poly_gcd(F, poly_sub(F, h, _X), rest)
        if poly_deg(g) > 0:
            out.append((g, i))
            rest = poly_divmod(F, rest, g)[0]
            h = poly_mod(F, h, rest)
        i += 1
    if poly_deg(rest) > 0:
        out.append((rest, poly_deg(rest)))
    return out


def _random_poly(F, deg_bound, rng):
    coeffs = [rng.randrange(F.q) for _ in range(deg_bound)]
    return poly_trim(coeffs)


def _equal_degree(F, f, d, rng):
    """f squarefree monic, all irreducible factors of degree d."""
    n = poly_deg(f)
    if n == d:
        return [f]
    while True:
        r = _random_poly(F, n, rng)
        if poly_deg(r) < 1:
            continue
        if F.p == 2:
            # trace map over F_2 splits in characteristic 2
            s = r
            t = r
            for _ in range(F.d * d - 1):
                t = poly_mod(F, poly_mul(F, t, t), f)
                s = poly_add(F, s, t)
            g = poly_gcd(F, s, f)
        else:
            s = poly_powmod(F, r, (F.q ** d - 1) // 2, f)
            g = poly_gcd(F, poly_sub(F, s, (1,)), f)
        if 0 < poly_deg(g) < n:
            rest = poly_divmod(F, f, g)[0]
            return _equal_degree(F, g, d, rng) + _equal_degree(F, rest, d, rng)


def factor_poly(F, f, seed=None, rng=None):
    """Full factorization of f over F into monic irreducibles.

    Returns a list of (irreducible factor, multiplicity) sorted by degree
    then coefficient codes; the product over the list times the leading
    coefficient of f reproduces f.  Randomized splitting is driven by the
    seed (or an explicit random.Random), so runs are reproducible.
    """
    f = poly_trim(f)
    if poly_deg(f) < 1:
        return []
    if rng is None:
        from .config import DEFAULT_SEED
        if seed is None:
            seed = DEFAULT_SEED
        rng = random.Random(f"gf-factor:{F.p}:{F.d}:{seed}")
    found = {}
    for sqf, mult in _squarefree_parts(F, f).items():
        for same_deg, d in _distinct_degree(F, sqf):
            for irr in _equal_degree(F, same_deg, d, rng):
                found[irr] = found.get(irr, 0) + mult
    return sorted(found.items(), key=lambda kv: (poly_deg(kv[0]), kv[0]))


def poly_roots(F, f, seed=None, rng=None):
    """Roots in F with multiplicity, or None if f does not split.

    Returns a list of (root, multiplicity) when every irreducible factor
    is linear, otherwise None.
    """
    factors = factor_poly(F, f, seed=seed, rng=rng)
    out = []
    for g, mult in factors:
        if poly_deg(g) != 1:
            return None
        # monic x + c has root -c
        out.append((F.neg(g[0]), mult))
    return out
