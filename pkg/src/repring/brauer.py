"""Brauer characters, projective characters, and the Cartan matrix.

Everything is exact.  Character values live in a cyclotomic field whose
conductor is the lcm of the p-regular element orders; the working finite
field is the splitting field F_{p^d} with d the multiplicative order of
p modulo that conductor.  Eigenvalues of p-regular elements are lifted
to roots of unity through a fixed multiplicative section, so character
values are reproducible, not just well defined up to Galois action.
"""

from fractions import Fraction
from math import gcd

from .config import default_seed
from .cyclo import Cyc
from .errors import (
    NonIntegralCartan,
    NonIntegralDecomposition,
    NonSplitCharPoly,
    NotSubgroup,
    SingularPhi,
)
from .gf import gf_field, multiplicative_order, poly_roots
from .groups import PermGroup, p_part
from .lift import BrauerLift
from .linalg import gf_charpoly, mat_inv, smith_normal_form
from .meataxe import chop_regular


def splitting_field(G: PermGroup, p: int):
    """(field, lift, conductor) for G at p.

    The conductor m is the lcm of the orders of p-regular elements and
    the field degree is the order of p modulo m, the smallest degree
    over which every simple module is absolutely irreducible.
    """
    m = 1
    for i in G.p_regular_classes(p):
        o = G.element_order(G.conjugacy_classes()[i][0])
        m = m * o // gcd(m, o)
    d = multiplicative_order(p, m)
    F = gf_field(p, d)
    return F, BrauerLift(F, m), m


class SimpleModule:
    """A simple kG-module with its Brauer character."""

    __slots__ = ("name", "index", "module", "dim", "phi",
                 "multiplicity_in_regular")

    def __init__(self, name, index, module, phi):
        self.name = name
        self.index = index
        self.module = module
        self.dim = module.dim
        self.phi = tuple(phi)
        # head multiplicity; equals dim because the identification
        # element found during dedup certifies End = ground field
        self.multiplicity_in_regular = module.dim

    def __repr__(self):
        return f"SimpleModule({self.name}, dim={self.dim})"


def _phi_value(lift, F, mat):
    """Brauer character value: eigenvalues lifted to roots of unity."""
    roots = poly_roots(F, gf_charpoly(F, mat))
    if roots is None:
        raise NonSplitCharPoly(
            "characteristic polynomial does not split over "
            f"GF({F.p},{F.d}); field is not a splitting field")
    val = Cyc.from_rational(0)
    for code, mult in roots:
        val = val + mult * lift.lift(code)
    return val


def _phi_sort_key(m, row):
    """Descending-lex on promoted coefficient vectors."""
    key = []
    for v in row:
        key.append(tuple(-c for c in v.promote(m).coeffs))
    return tuple(key)


class BrauerData:
    """All modular character data of one group at one prime."""

    def __init__(self, G: PermGroup, p: int, seed):
        self.G = G
        self.p = p
        self.seed = seed
        self.F, self.lift, self.m = splitting_field(G, p)
        classes = G.conjugacy_classes()
        self.pregular = tuple(G.p_regular_classes(p))
        self.class_reps = tuple(classes[i][0] for i in self.pregular)
        self.class_sizes = tuple(len(classes[i]) for i in self.pregular)
        self._pos = {ci: k for k, ci in enumerate(self.pregular)}
        inv_map = G.inverse_class_map()
        self._inv_pos = tuple(self._pos[inv_map[ci]] for ci in self.pregular)

        modules, counts = chop_regular(G, self.F, seed)
        rows = [tuple(_phi_value(self.lift, self.F,
                                 mod.element_matrix(G, x))
                      for x in self.class_reps)
                for mod in modules]
        order = sorted(range(len(modules)),
                       key=lambda i: (modules[i].dim,
                                      _phi_sort_key(self.m, rows[i])))
        self.simples = tuple(
            SimpleModule(f"S{k + 1}", k, modules[i], rows[i])
            for k, i in enumerate(order))
        self.composition_multiplicities = tuple(counts[i] for i in order)
        self.phi = tuple(s.phi for s in self.simples)
        self.Phi = self._projective_characters()
        self.cartan = self._cartan_matrix()
        self._phi_inv = None
        self._check_invariants()

    # -- construction helpers

    def _projective_characters(self):
        """Dual basis to phi under the p-regular pairing."""
        n = len(self.simples)
        gsize = Fraction(1, self.G.order)
        B = [[gsize * self.class_sizes[i] * self.phi[s][self._inv_pos[i]]
              for s in range(n)] for i in range(n)]
        try:
            P = mat_inv(B)
        except ZeroDivisionError as exc:
            raise SingularPhi(
                "Brauer character table is singular; simples are "
                "incomplete or duplicated") from exc
        return tuple(tuple(Cyc.coerce(v) for v in row) for row in P)

    def pairing(self, alpha, beta):
        """<alpha, beta> = (1/|G|) sum over p-regular x of a(x) b(x^-1),
        both given as rows over the p-regular classes."""
        total = Cyc.from_rational(0)
        for i, size in enumerate(self.class_sizes):
            total = total + size * (Cyc.coerce(alpha[i])
                                    * Cyc.coerce(beta[self._inv_pos[i]]))
        return total * Fraction(1, self.G.order)

    def _cartan_matrix(self):
        n = len(self.simples)
        out = []
        for t in range(n):
            row = []
            for s in range(n):
                v = self.pairing(self.Phi[t], self.Phi[s]).as_rational()
                if v is None or v.denominator != 1 or v < 0:
                    raise NonIntegralCartan(
                        f"<Phi_{t}, Phi_{s}> = {v!r} is not a "
                        "non-negative integer")
                row.append(int(v))
            out.append(row)
        for t in range(n):
            for s in range(n):
                if out[t][s] != out[s][t]:
                    raise NonIntegralCartan("Cartan matrix not symmetric")
        return tuple(tuple(r) for r in out)

    def _check_invariants(self):
        G, n = self.G, len(self.simples)
        assert n == len(self.pregular)
        one = Cyc.from_rational(1)
        first = self.simples[0]
        assert first.dim == 1 and all(v == one for v in first.phi)
        for s in self.simples:
            assert s.phi[0] == s.dim  # value at the identity class
        # dim P_S from Phi at the identity, and mass formula
        proj_dims = [self.Phi[t][0].as_rational() for t in range(n)]
        assert all(d is not None and d.denominator == 1 for d in proj_dims)
        self.projective_dims = tuple(int(d) for d in proj_dims)
        assert sum(pd * s.dim
                   for pd, s in zip(self.projective_dims, self.simples)) \
            == G.order
        # composition multiplicity of S in kG equals sum_T dim T * c_{T,S}
        for s in range(n):
            expect = sum(self.simples[t].dim * self.cartan[t][s]
                         for t in range(n))
            assert self.composition_multiplicities[s] == expect

    # -- derived data

    def elementary_divisors(self):
        """Nonzero Smith normal form divisors of the Cartan matrix."""
        divs = smith_normal_form([list(r) for r in self.cartan])
        assert all(divs)
        return tuple(divs)

    def centralizer_p_parts(self):
        """p-part of |C_G(x)| per p-regular class; by Brauer-Nesbitt
        this multiset equals the Cartan elementary divisors."""
        out = []
        for x in self.class_reps:
            out.append(p_part(self.G.centralizer(x).order, self.p))
        return tuple(out)

    def _phi_matrix_inverse(self):
        if self._phi_inv is None:
            try:
                self._phi_inv = mat_inv([[self.phi[s][i]
                                          for i in range(len(self.pregular))]
                                         for s in range(len(self.simples))])
            except ZeroDivisionError as exc:
                raise SingularPhi("Brauer characters are dependent") from exc
        return self._phi_inv

    def decompose(self, values, require_integral=True):
        """Coefficients of a class function on p-regular classes in the
        Brauer character basis.  values is a row over the p-regular
        classes in table order.
        """
        inv = self._phi_matrix_inverse()
        n = len(self.simples)
        coeffs = []
        for s in range(n):
            total = Cyc.from_rational(0)
            for i in range(n):
                total = total + Cyc.coerce(values[i]) * inv[i][s]
            r = total.as_rational()
            if require_integral:
                if r is None or r.denominator != 1:
                    raise NonIntegralDecomposition(
                        f"coefficient of {self.simples[s].name} is "
                        f"{total!r}")
                coeffs.append(int(r))
            else:
                coeffs.append(total)
        return coeffs

    def phi_of_element(self, x):
        """Brauer character row evaluated at an arbitrary p-regular
        element (looked up through its class)."""
        ci = self.G.class_index_of(x)
        k = self._pos[ci]
        return tuple(self.phi[s][k] for s in range(len(self.simples)))


_CACHE = {}


def brauer_data(G: PermGroup, p: int, seed=None) -> BrauerData:
    if seed is None:
        seed = default_seed()
    key = (G.key(), p, seed)
    if key not in _CACHE:
        _CACHE[key] = BrauerData(G, p, seed)
    return _CACHE[key]


def induce_class_function(G: PermGroup, H: PermGroup, values,
                          class_indices=None):
    """Induce a class function from a subgroup.

    values maps elements of H (as tuples padded to G's degree) to Cyc.
    Returns a list over G's conjugacy classes, or over class_indices
    when given (values then only needs keys that can actually arise as
    conjugates landing in H):
    (Ind f)(g) = (1/|H|) sum over t in G with t^-1 g t in H of f(t^-1 g t).
    """
    hset = set(H.elements)
    for h in hset:
        if h not in G:
            raise NotSubgroup("induction subgroup is not contained in G")
    classes = G.conjugacy_classes()
    if class_indices is None:
        class_indices = range(len(classes))
    out = []
    scale = Fraction(1, H.order)
    for ci in class_indices:
        g = classes[ci][0]
        total = Cyc.from_rational(0)
        for t in G.elements:
            u = G.conjugate(g, t)
            if u in hset:
                total = total + Cyc.coerce(values[u])
        out.append(total * scale)
    return out


def cartan_via_endomorphisms(bd: BrauerData):
    """Recompute the Cartan matrix as Hom dimensions between projective
    isotypic summands of the regular module, via lifted idempotents.

    Independent of the character-theoretic route; intended for small
    groups (the regular algebra is |G|-dimensional).
    """
    G, F = bd.G, bd.F
    n = G.order
    elems = G.elements
    index = {g: i for i, g in enumerate(elems)}

    from .groups import perm_mul
    mul_table = [[index[perm_mul(elems[i], elems[j])] for j in range(n)]
                 for i in range(n)]

    def alg_mul(a, b):
        out = [0] * n
        for i, ai in enumerate(a):
            if not ai:
                continue
            row = mul_table[i]
            for j, bj in enumerate(b):
                if bj:
                    k = row[j]
                    out[k] = F.add(out[k], F.mul(ai, bj))
        return out

    sims = [s.module for s in bd.simples]
    dims = [s.dim for s in bd.simples]
    width = sum(d * d for d in dims)
    # pi : kG -> sum of matrix blocks, one row per group element
    pi = []
    for g in elems:
        row = []
        for mod in sims:
            mat = mod.element_matrix(G, g)
            for r in mat:
                row.extend(r)
        pi.append(row)

    from .linalg import gf_rank, gf_solve, gf_transpose

    pit = gf_transpose(pi)
    idems = []
    for s, d in enumerate(dims):
        target = []
        for t, dt in enumerate(dims):
            blk = [1 if (t == s and i == j) else 0
                   for i in range(dt) for j in range(dt)]
            target.extend(blk)
        e = gf_solve(F, pit, target)
        assert e is not None
        # lift to a genuine idempotent: e <- 3e^2 - 2e^3 squares the
        # radical error term each pass
        while True:
            e2 = alg_mul(e, e)
            if e2 == e:
                break
            e3 = alg_mul(e2, e)
            three, mtwo = 3 % F.p, (-2) % F.p
            e = [F.add(F.mul(three, a), F.mul(mtwo, b))
                 for a, b in zip(e2, e3)]
        idems.append(e)

    basis_vecs = []
    for g in range(n):
        v = [0] * n
        v[g] = 1
        basis_vecs.append(v)
    out = []
    for t in range(len(dims)):
        row = []
        for s in range(len(dims)):
            spanned = [alg_mul(alg_mul(idems[s], bv), idems[t])
                       for bv in basis_vecs]
            r = gf_rank(F, spanned)
            num, den = r, dims[s] * dims[t]
            assert num % den == 0
            row.append(num // den)
        out.append(row)
    return tuple(tuple(r) for r in out)
