"""Regenerate the bundled small p-group tables (src/repring/data/pgroups.json).

Each group of order up to 16 (p=2), 27 (p=3) and 25 (p=5) is constructed
explicitly as a permutation group, cross-checked against classical
invariants (counts per order, pairwise non-isomorphism, involution
counts, exponents, elementary abelian content), and stored as 1-based
generator tables.
"""

import json
import pathlib
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parents[1] / "src"))

from repring.groups import (
    PermGroup,
    cyclic_group,
    dihedral_group,
    direct_product,
    embeds_into,
    is_isomorphic,
    perm_order,
    quaternion_group,
    trivial_group,
)

OUT = pathlib.Path(__file__).resolve().parents[1] / "src" / "repring" / "data" / "pgroups.json"


def regular_rep(elements, mul, gens):
    """Right-translation permutation group from an abstract multiplication."""
    elements = sorted(elements)
    index = {e: i for i, e in enumerate(elements)}
    perms = []
    for g in gens:
        perms.append(tuple(index[mul(e, g)] for e in elements))
    return PermGroup(len(elements), perms)


def group_c2sq_semi_c4():
    """(C2 x C2) : C4 with the C4 swapping the two C2 coordinates."""
    elements = [(a, b, c) for a in range(2) for b in range(2) for c in range(4)]

    def mul(x, y):
        a, b, c = x
        d, e, f = y
        if c % 2:
            d, e = e, d
        return ((a + d) % 2, (b + e) % 2, (c + f) % 4)

    return regular_rep(elements, mul, [(0, 0, 1), (1, 0, 0)])


def group_c4_semi_c4():
    """C4 : C4, the generator of the second factor inverting the first."""
    elements = [(i, j) for i in range(4) for j in range(4)]

    def mul(x, y):
        i, j = x
        k, l = y
        sign = -1 if j % 2 else 1
        return ((i + sign * k) % 4, (j + l) % 4)

    return regular_rep(elements, mul, [(1, 0), (0, 1)])


def group_q16():
    """Generalized quaternion of order 16: a^8=1, b^2=a^4, b a b^-1 = a^-1."""
    elements = [(i, j) for i in range(8) for j in range(2)]

    def mul(x, y):
        i, j = x
        k, l = y
        sign = -1 if j else 1
        i2 = (i + sign * k) % 8
        if j + l >= 2:
            i2 = (i2 + 4) % 8
        return (i2, (j + l) % 2)

    return regular_rep(elements, mul, [(1, 0), (0, 1)])


def affine_group(n, pairs):
    """Subgroup of Sym(Z_n) generated by maps x -> a*x + b for (a, b) pairs."""
    gens = [tuple((a * x + b) % n for x in range(n)) for a, b in pairs]
    return PermGroup(n, gens)


def group_heisenberg3():
    """Extraspecial 3^(1+2) of exponent 3 as affine maps of F_3^2."""
    def idx(u, v):
        return 3 * u + v

    x = [0] * 9
    y = [0] * 9
    for u in range(3):
        for v in range(3):
            x[idx(u, v)] = idx((u + 1) % 3, v)
            y[idx(u, v)] = idx(u, (v + u) % 3)
    return PermGroup(9, [tuple(x), tuple(y)])


def group_c4_central_d8():
    """Central product C4 o D8 (the order-16 Pauli group)."""
    prod = direct_product(cyclic_group(4), dihedral_group(8))
    # identify the square of the C4 with the central rotation of D8
    z = (2, 3, 0, 1, 6, 7, 4, 5)
    N = prod.generated_subgroup([z])
    quot, _ = prod.quotient_group(N)
    return quot


def n_involutions(G):
    return sum(1 for g in G.elements if perm_order(g) == 2)


def build_all():
    C2, C4, C8, C16 = (cyclic_group(n) for n in (2, 4, 8, 16))
    V4 = direct_product(C2, cyclic_group(2))
    entries = []

    def add(p, label, G, checks=()):
        for chk in checks:
            assert chk(G), f"structure check failed for {label}"
        entries.append((p, label, G))

    # --- p = 2
    add(2, "1", trivial_group())
    add(2, "C2", C2)
    add(2, "C4", C4)
    add(2, "C2^2", V4)
    add(2, "C8", C8)
    add(2, "C4xC2", direct_product(C4, C2))
    add(2, "C2^3", direct_product(V4, C2))
    add(2, "D8", dihedral_group(8), [lambda G: n_involutions(G) == 5])
    add(2, "Q8", quaternion_group(), [lambda G: n_involutions(G) == 1])
    add(2, "C16", C16)
    add(2, "C4^2", direct_product(C4, C4))
    add(2, "C2^2:C4", group_c2sq_semi_c4(),
        [lambda G: n_involutions(G) == 7,
         lambda G: embeds_into(direct_product(V4, C2), G)])
    add(2, "C4:C4", group_c4_semi_c4(), [lambda G: n_involutions(G) == 3])
    add(2, "C8xC2", direct_product(C8, C2))
    add(2, "M16", affine_group(8, [(1, 1), (5, 0)]),
        [lambda G: n_involutions(G) == 3, lambda G: G.exponent() == 8])
    add(2, "D16", affine_group(8, [(1, 1), (-1, 0)]),
        [lambda G: n_involutions(G) == 9])
    add(2, "SD16", affine_group(8, [(1, 1), (3, 0)]),
        [lambda G: n_involutions(G) == 5, lambda G: G.exponent() == 8])
    add(2, "Q16", group_q16(), [lambda G: n_involutions(G) == 1])
    add(2, "C4xC2^2", direct_product(C4, V4))
    add(2, "D8xC2", direct_product(dihedral_group(8), C2),
        [lambda G: n_involutions(G) == 11])
    add(2, "Q8xC2", direct_product(quaternion_group(), C2),
        [lambda G: n_involutions(G) == 3])
    add(2, "C4oD8", group_c4_central_d8(),
        [lambda G: n_involutions(G) == 7,
         lambda G: not embeds_into(direct_product(V4, C2), G)])
    add(2, "C2^4", direct_product(direct_product(V4, C2), C2),
        [lambda G: G.exponent() == 2])

    # --- p = 3
    C3, C9, C27 = (cyclic_group(n) for n in (3, 9, 27))
    add(3, "1", trivial_group())
    add(3, "C3", C3)
    add(3, "C9", C9)
    add(3, "C3^2", direct_product(C3, C3))
    add(3, "C27", C27)
    add(3, "C9xC3", direct_product(C9, C3))
    add(3, "C3^3", direct_product(direct_product(C3, C3), C3),
        [lambda G: G.exponent() == 3])
    add(3, "He3", group_heisenberg3(),
        [lambda G: G.exponent() == 3, lambda G: G.center().order == 3])
    add(3, "C9:C3", affine_group(9, [(1, 1), (4, 0)]),
        [lambda G: G.exponent() == 9, lambda G: G.center().order == 3])

    # --- p = 5
    C5, C25 = cyclic_group(5), cyclic_group(25)
    add(5, "1", trivial_group())
    add(5, "C5", C5)
    add(5, "C25", C25)
    add(5, "C5^2", direct_product(C5, C5))

    return entries


EXPECTED_COUNTS = {
    (2, 1): 1, (2, 2): 1, (2, 4): 2, (2, 8): 5, (2, 16): 14,
    (3, 1): 1, (3, 3): 1, (3, 9): 2, (3, 27): 5,
    (5, 1): 1, (5, 5): 1, (5, 25): 2,
}


def validate(entries):
    counts = {}
    for p, label, G in entries:
        order = G.order
        n = order
        while n % p == 0:
            n //= p
        assert n == 1, f"{label}: order {order} is not a power of {p}"
        counts[(p, order)] = counts.get((p, order), 0) + 1
    assert counts == EXPECTED_COUNTS, counts
    by_key = {}
    for p, label, G in entries:
        by_key.setdefault((p, G.order), []).append((label, G))
    for (p, order), bucket in sorted(by_key.items()):
        for i in range(len(bucket)):
            for j in range(i + 1, len(bucket)):
                la, Ga = bucket[i]
                lb, Gb = bucket[j]
                assert not is_isomorphic(Ga, Gb), f"{la} == {lb}"
        print(f"p={p} order={order}: {len(bucket)} classes, pairwise distinct")


def main():
    entries = build_all()
    validate(entries)
    data = [
        {
            "p": p,
            "order": G.order,
            "label": label,
            "degree": G.degree,
            "generators": [[i + 1 for i in g] for g in G.gens],
        }
        for p, label, G in entries
    ]
    OUT.parent.mkdir(parents=True, exist_ok=True)
    OUT.write_text(json.dumps(data, indent=1, sort_keys=True) + "\n")
    print(f"wrote {len(data)} entries to {OUT}")


if __name__ == "__main__":
    main()
