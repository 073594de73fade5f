"""Defect classification and the functor layer on kR_k(G).

A p-regular class has defect [R] where R is a Sylow p-subgroup of the
centralizer of a representative.  Defect-zero classes carry the basis
elements gamma_{G,x} of the reduced Cartan image; general classes carry
U_x, built by inducing an inflated gamma from R_x C_G(R_x).  Spans of
the U_x over prefixes of the p-group catalog give the dimensions of the
subquotient functors evaluated at G.
"""

from fractions import Fraction

from .brauer import BrauerData, brauer_data, induce_class_function
from .catalog import PGroupCatalog
from .config import default_seed
from .cyclo import Cyc
from .errors import (
    CatalogTooSmall,
    DefectNotZeroInQuotient,
    NotDefectZero,
    PreconditionViolated,
)
from .groups import PermGroup, p_part, perm_order
from .linalg import gf_rank


class RkElement:
    """A vector in kR_k(G): one field coefficient per simple module."""

    __slots__ = ("bd", "coeffs", "exact")

    def __init__(self, bd: BrauerData, coeffs, exact=None):
        assert len(coeffs) == len(bd.simples)
        self.bd = bd
        self.coeffs = tuple(coeffs)
        # pre-reduction cyclotomic vector, kept for diagnostics when the
        # element came from an exact construction
        self.exact = None if exact is None else tuple(exact)

    def _check(self, other):
        if self.bd is not other.bd:
            raise PreconditionViolated("elements of different group contexts")

    def __add__(self, other):
        self._check(other)
        F = self.bd.F
        return RkElement(self.bd, tuple(F.add(a, b) for a, b in
                                        zip(self.coeffs, other.coeffs)))

    def scale(self, c):
        F = self.bd.F
        return RkElement(self.bd, tuple(F.mul(c, a) for a in self.coeffs))

    def __eq__(self, other):
        return (isinstance(other, RkElement)
                and self.bd.G.key() == other.bd.G.key()
                and self.bd.p == other.bd.p
                and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.bd.G.key(), self.bd.p, self.coeffs))

    def __repr__(self):
        return f"RkElement{self.coeffs}"


class DefectRow:
    __slots__ = ("position", "class_index", "rep", "sylow",
                 "catalog_index", "defect_zero")

    def __init__(self, position, class_index, rep, sylow, catalog_index):
        self.position = position
        self.class_index = class_index
        self.rep = rep
        self.sylow = sylow
        self.catalog_index = catalog_index
        self.defect_zero = sylow.order == 1


class DefectReport:
    """Defect data for every p-regular class of one group."""

    def __init__(self, G, p, catalog, rows):
        self.G = G
        self.p = p
        self.catalog = catalog
        self.rows = tuple(rows)
        self._by_class = {r.class_index: r for r in self.rows}

    def row_of(self, x) -> DefectRow:
        ci = self.G.class_index_of(x)
        row = self._by_class.get(ci)
        if row is None:
            raise PreconditionViolated(
                f"element of order {perm_order(tuple(x))} is not "
                f"{self.p}-regular")
        return row

    def defect_zero_rows(self):
        return [r for r in self.rows if r.defect_zero]


def defect_classification(G: PermGroup, p: int,
                          catalog: PGroupCatalog) -> DefectReport:
    """Assign each p-regular class the catalog index of the isomorphism
    type of a Sylow p-subgroup of its centralizer."""
    classes = G.conjugacy_classes()
    rows = []
    for pos, ci in enumerate(G.p_regular_classes(p)):
        rep = classes[ci][0]
        R = G.centralizer(rep).sylow_subgroup(p)
        j = catalog.index_of_isomorphic(R)
        if j is None:
            raise CatalogTooSmall(
                f"defect group of order {R.order} for class {ci} of "
                f"{G.describe()} is not in the catalog "
                f"(p={p}, max order {catalog.max_order})")
        rows.append(DefectRow(pos, ci, rep, R, j))
    return DefectReport(G, p, catalog, rows)


def gamma_element(G: PermGroup, p: int, x, seed=None) -> RkElement:
    """gamma_{G,x} for a defect-zero x: coefficient at S is the
    reduction of Phi_S(x^-1) / |C_G(x)|."""
    bd = brauer_data(G, p, seed)
    x = tuple(x)
    ci = G.class_index_of(x)
    if ci not in bd._pos:
        raise NotDefectZero(f"element of {G.describe()} is not {p}-regular")
    k = bd._pos[ci]
    csize = G.centralizer(x).order
    if csize % p == 0:
        raise NotDefectZero(
            f"class has defect of order {p_part(csize, p)}, not zero")
    n = len(bd.simples)
    inv = bd._inv_pos[k]
    exact = tuple(bd.Phi[s][inv] * Fraction(1, csize) for s in range(n))
    return RkElement(bd, tuple(bd.lift.reduce(v) for v in exact),
                     exact=exact)


def _indicator_check(bd: BrauerData, G, x, csize, ind_vals):
    """The induced function of |x| * 1_x on <x> must be |C_G(x)| at the
    class of x and 0 at every other p-regular class."""
    xci = G.class_index_of(x)
    for pos, ci in enumerate(bd.pregular):
        want = csize if ci == xci else 0
        assert ind_vals[pos] == want


def cartan_image_basis(G: PermGroup, p: int, seed=None):
    """{gamma_{G,x} : x defect zero}, with the reduced-Cartan-image
    identities verified along the way."""
    bd = brauer_data(G, p, seed)
    F = bd.F
    n = len(bd.simples)
    zero_pos = [k for k in range(n)
                if G.centralizer(bd.class_reps[k]).order % p != 0]
    gammas = [gamma_element(G, p, bd.class_reps[k], seed) for k in zero_pos]

    assert gf_rank(F, [list(g.coeffs) for g in gammas]) == len(gammas)

    # each reduced Cartan column equals the Phi-weighted sum of gammas
    for t in range(n):
        col = tuple(bd.lift.reduce_rational(Fraction(bd.cartan[t][s]))
                    for s in range(n))
        acc = [0] * n
        for k, g in zip(zero_pos, gammas):
            w = bd.lift.reduce(bd.Phi[t][k])
            for s in range(n):
                acc[s] = F.add(acc[s], F.mul(w, g.coeffs[s]))
        assert tuple(acc) == col

    # the reduced Cartan image of v_x = Ind_<x>^G(|x| 1_x) is |C| gamma_x
    for k, g in zip(zero_pos, gammas):
        x = bd.class_reps[k]
        csize = G.centralizer(x).order
        cyc = G.generated_subgroup([x])
        o = cyc.order
        vals = {h: Cyc.coerce(o if h == x else 0) for h in cyc.elements}
        ind = induce_class_function(G, cyc, vals,
                                    class_indices=bd.pregular)
        _indicator_check(bd, G, x, csize, ind)
        coeffs = bd.decompose(ind, require_integral=False)
        lhs = tuple(bd.lift.reduce(c) for c in coeffs)
        assert lhs == g.scale(bd.lift.reduce_rational(Fraction(csize))).coeffs
    return gammas


def _u_from(G: PermGroup, p: int, bd: BrauerData, x, R, seed=None):
    """The U_x pipeline with an explicit Sylow subgroup R of C_G(x)."""
    CR = G.centralizer_of_subgroup(R)
    H = G.generated_subgroup(list(R.gens) + list(CR.gens))
    Hbar, proj = H.quotient_group(R)
    xbar = proj[tuple(x)]
    if Hbar.centralizer(xbar).order % p == 0:
        raise DefectNotZeroInQuotient(
            f"image of x in {H.describe()}/{R.describe()} has positive "
            "defect; the Sylow subgroup R was not correct")
    gq = gamma_element(Hbar, p, xbar, seed)
    bdq = brauer_data(Hbar, p, seed)
    # inflate: the class function of gamma on H, through the projection
    vals = {}
    for h in H.elements:
        if perm_order(h) % p:
            row = bdq.phi_of_element(proj[h])
            total = Cyc.from_rational(0)
            for c, v in zip(gq.exact, row):
                total = total + c * v
            vals[h] = total
    ind = induce_class_function(G, H, vals, class_indices=bd.pregular)
    coeffs = bd.decompose(ind, require_integral=False)
    return RkElement(bd, tuple(bd.lift.reduce(c) for c in coeffs))


_U_CACHE = {}


def u_element(G: PermGroup, p: int, x, report: DefectReport,
              seed=None) -> RkElement:
    """U_x: induced inflation of the defect-zero gamma over R_x C_G(R_x).

    Uses the report's Sylow subgroup when x is the stored representative
    and recomputes one otherwise; the result is independent of both
    choices.  Results for stored representatives are memoized per class,
    since span computations ask for the same vectors repeatedly.
    """
    if seed is None:
        seed = default_seed()
    bd = brauer_data(G, p, seed)
    x = tuple(x)
    row = report.row_of(x)
    if x == row.rep:
        key = (G.key(), p, row.class_index, seed)
        if key not in _U_CACHE:
            _U_CACHE[key] = _u_from(G, p, bd, x, row.sylow, seed).coeffs
        return RkElement(bd, _U_CACHE[key])
    R = G.centralizer(x).sylow_subgroup(p)
    return _u_from(G, p, bd, x, R, seed)


def genk_basis(G: PermGroup, p: int, P: int, report: DefectReport,
               seed=None):
    """{U_x : defect of x embeds into catalog entry P}; a basis."""
    cat = report.catalog
    out = []
    for r in report.rows:
        if cat.embed[r.catalog_index][P]:
            out.append(u_element(G, p, r.rep, report, seed))
    bd = brauer_data(G, p, seed)
    assert gf_rank(bd.F, [list(u.coeffs) for u in out]) == len(out)
    return out


def sp_dimension(G: PermGroup, p: int, P: int, report: DefectReport,
                 seed=None) -> int:
    """dim S_P(G) = number of classes with defect isomorphic to P,
    cross-checked as a rank difference of spanning sets."""
    direct = sum(1 for r in report.rows if r.catalog_index == P)
    bd = brauer_data(G, p, seed)
    upper = genk_basis(G, p, P, report, seed)
    pool = []
    for q in sorted(report.catalog.down_set(P).members - {P}):
        pool.extend(genk_basis(G, p, q, report, seed))
    lower_rank = gf_rank(bd.F, [list(u.coeffs) for u in pool])
    assert len(upper) - lower_rank == direct
    return direct


def filtration_table(G: PermGroup, p: int, catalog: PGroupCatalog,
                     seed=None):
    """Cumulative dim over the catalog prefix order; ends at the number
    of p-regular classes, increasing only under the Sylow subgroup."""
    report = defect_classification(G, p, catalog)
    sylow_idx = catalog.index_of_isomorphic(G.sylow_subgroup(p))
    if sylow_idx is None:
        raise CatalogTooSmall(
            f"Sylow {p}-subgroup of {G.describe()} not in catalog")
    out = []
    total = 0
    for j in range(len(catalog)):
        step = sp_dimension(G, p, j, report, seed)
        if step:
            assert catalog.embed[j][sylow_idx]
        total += step
        out.append(total)
    assert total == len(G.p_regular_classes(p))
    return tuple(out)


def rk_multiply(a: RkElement, b: RkElement) -> RkElement:
    """Product in kR_k(G): structure constants from decomposing the
    pointwise products of Brauer characters, reduced mod p."""
    a._check(b)
    bd = a.bd
    F = bd.F
    n = len(bd.simples)
    table = _structure_constants(bd)
    out = [0] * n
    for s in range(n):
        if not a.coeffs[s]:
            continue
        for t in range(n):
            if not b.coeffs[t]:
                continue
            w = F.mul(a.coeffs[s], b.coeffs[t])
            for u in range(n):
                c = table[s][t][u]
                if c:
                    out[u] = F.add(out[u], F.mul(w, c))
    return RkElement(bd, tuple(out))


_STRUCTURE = {}


def _structure_constants(bd: BrauerData):
    key = (bd.G.key(), bd.p, bd.seed)
    if key not in _STRUCTURE:
        n = len(bd.simples)
        table = []
        for s in range(n):
            row = []
            for t in range(n):
                vals = [bd.phi[s][i] * bd.phi[t][i]
                        for i in range(len(bd.pregular))]
                ints = bd.decompose(vals)  # integral by Brauer theory
                row.append(tuple(bd.lift.reduce_rational(Fraction(c))
                                 for c in ints))
            table.append(row)
        _STRUCTURE[key] = table
    return _STRUCTURE[key]


def rk_identity(bd: BrauerData) -> RkElement:
    """[k_G]: the trivial module is always first in the simple order."""
    coeffs = [0] * len(bd.simples)
    coeffs[0] = 1
    return RkElement(bd, tuple(coeffs))


def rk_basis_element(bd: BrauerData, s: int) -> RkElement:
    coeffs = [0] * len(bd.simples)
    coeffs[s] = 1
    return RkElement(bd, tuple(coeffs))


def closed_set_dimension(G: PermGroup, p: int, closed,
                         report: DefectReport, seed=None) -> int:
    """dim of the subfunctor attached to a closed catalog subset,
    evaluated at G: rank of the union of the genk bases over members."""
    bd = brauer_data(G, p, seed)
    pool = []
    for j in closed.sorted_members():
        pool.extend(genk_basis(G, p, j, report, seed))
    rank = gf_rank(bd.F, [list(u.coeffs) for u in pool])
    expect = sum(1 for r in report.rows
                 if any(report.catalog.embed[r.catalog_index][j]
                        for j in closed.members))
    assert rank == expect
    return rank


def product_group_check(L: PermGroup, Q: PermGroup, p: int,
                        catalog: PGroupCatalog, seed=None) -> dict:
    """Evaluate the functor on L x Q with p coprime to |L| and Q a
    p-group: dimensions must factor through the class count of L."""
    if L.order % p == 0:
        raise PreconditionViolated(f"|{L.describe()}| is divisible by {p}")
    if any(p_part(Q.element_order(g), p) != Q.element_order(g)
           for g in Q.elements):
        raise PreconditionViolated(f"{Q.describe()} is not a {p}-group")
    from .groups import direct_product
    GxQ = direct_product(L, Q)
    nl = len(L.conjugacy_classes())
    report = defect_classification(GxQ, p, catalog)
    qidx = catalog.index_of_isomorphic(Q)
    if qidx is None:
        raise CatalogTooSmall(f"{Q.describe()} not in catalog")
    dim_total = len(GxQ.p_regular_classes(p))
    dims = {j: sp_dimension(GxQ, p, j, report, seed)
            for j in range(len(catalog))}
    expected = {j: (nl if j == qidx else 0) for j in range(len(catalog))}
    ok = dim_total == nl * 1 and dims == expected
    return {
        "group": GxQ.describe(),
        "classes_of_L": nl,
        "dim_total": dim_total,
        "sp_dims": dims,
        "expected": expected,
        "ok": ok,
    }
