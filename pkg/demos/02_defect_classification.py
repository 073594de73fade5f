"""Defect groups of p-regular classes and the gamma basis.

Each p-regular class x gets the isomorphism type of a Sylow p-subgroup
of its centralizer, looked up in the bundled catalog of small p-groups.
Defect-zero classes contribute basis vectors gamma_{G,x} spanning the
reduced Cartan image; their coefficients are reductions of exact
p-local rationals.
"""

from repring.catalog import build_catalog
from repring.defects import cartan_image_basis, defect_classification
from repring.groups import parse_group_spec

for spec, p in [("S4", 2), ("A4", 2), ("S3xC2", 2), ("S3", 3)]:
    G = parse_group_spec(spec)
    catalog = build_catalog(p)
    report = defect_classification(G, p, catalog)

    print(f"== {spec} at p = {p}")
    for row in report.rows:
        o = G.element_order(row.rep)
        tag = "  <- defect zero" if row.defect_zero else ""
        print(f"   class of order-{o} element: defect "
              f"{catalog.label(row.catalog_index)}{tag}")

    gammas = cartan_image_basis(G, p, seed=1)
    if gammas:
        print(f"   gamma vectors over GF({gammas[0].bd.F.q}) "
              "(one per defect-zero class):")
        for r, g in zip(report.defect_zero_rows(), gammas):
            exact = [str(v) for v in g.exact]
            print(f"     class {r.class_index}: codes {list(g.coeffs)}, "
                  f"exact {exact}")
    else:
        print("   no defect-zero classes, the reduced Cartan image is 0")
    print()

# cartan_image_basis also re-derives each gamma from the induced
# indicator function of its class and fails loudly on any mismatch
