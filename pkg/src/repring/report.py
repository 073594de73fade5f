"""Schema-versioned JSON reports for the analyze and lattice commands.

Reports contain only exact data: field elements as integer codes,
cyclotomic numbers as rational coefficient vectors, never decimals.
Serialization is canonical (sorted keys, no whitespace), so two runs
with the same seed produce byte-identical output.
"""

import json

from .brauer import brauer_data
from .catalog import build_catalog, enumerate_closed_sets, is_completely_prime
from .config import default_max_order, default_seed
from .defects import (
    cartan_image_basis,
    defect_classification,
    genk_basis,
    sp_dimension,
    u_element,
)
from .groups import PermGroup, parse_group_spec, perm_order
from .linalg import int_mat_rank_mod_p

SCHEMA_VERSION = 1


def to_canonical_json(report) -> bytes:
    return json.dumps(report, sort_keys=True,
                      separators=(",", ":")).encode("ascii")


def _cyc_row(values):
    return [v.to_json() for v in values]


def analyze_report(spec, p: int, max_p_order=None, seed=None) -> dict:
    """Full evaluation of one group at one prime as a plain dict."""
    if seed is None:
        seed = default_seed()
    if max_p_order is None:
        max_p_order = default_max_order(p)
    G = spec if isinstance(spec, PermGroup) else parse_group_spec(spec)
    spec_str = spec if isinstance(spec, str) else G.describe()

    bd = brauer_data(G, p, seed)
    catalog = build_catalog(p, max_p_order)
    report = defect_classification(G, p, catalog)
    n = len(bd.simples)

    classes = []
    for row in report.rows:
        classes.append({
            "index": row.class_index,
            "position": row.position,
            "representative": [i + 1 for i in row.rep],
            "element_order": perm_order(row.rep),
            "size": bd.class_sizes[row.position],
            "centralizer_order": G.order // bd.class_sizes[row.position],
            "defect": catalog.label(row.catalog_index),
            "defect_order": row.sylow.order,
            "defect_zero": row.defect_zero,
        })

    gammas = cartan_image_basis(G, p, seed)
    zero_rows = report.defect_zero_rows()
    gamma_json = [{
        "class_index": r.class_index,
        "coeffs": list(g.coeffs),
        "exact": _cyc_row(g.exact),
    } for r, g in zip(zero_rows, gammas)]

    u_json = [{
        "class_index": r.class_index,
        "coeffs": list(u_element(G, p, r.rep, report, seed).coeffs),
    } for r in report.rows]

    genk_dims = {}
    sp_dims = {}
    filtration = []
    total = 0
    for j in range(len(catalog)):
        label = catalog.label(j)
        genk_dims[label] = len(genk_basis(G, p, j, report, seed))
        sp_dims[label] = sp_dimension(G, p, j, report, seed)
        total += sp_dims[label]
        filtration.append(total)

    F = bd.F
    return {
        "schema": SCHEMA_VERSION,
        "kind": "analyze",
        "seed": seed,
        "group": {
            "spec": spec_str,
            "name": G.describe(),
            "order": G.order,
            "degree": G.degree,
        },
        "p": p,
        "field": {
            "p": F.p,
            "d": F.d,
            "q": F.q,
            "modulus": list(F.modulus),
            "primitive": F.primitive,
        },
        "conductor": bd.m,
        "classes": classes,
        "simple_dimensions": [s.dim for s in bd.simples],
        "phi": [_cyc_row(row) for row in bd.phi],
        "Phi": [_cyc_row(row) for row in bd.Phi],
        "cartan": [list(row) for row in bd.cartan],
        "elementary_divisors": list(bd.elementary_divisors()),
        "cartan_rank_mod_p": int_mat_rank_mod_p(
            [list(r) for r in bd.cartan], p),
        "gamma": gamma_json,
        "u": u_json,
        "catalog": {
            "p": p,
            "max_order": catalog.max_order,
            "labels": list(catalog.labels),
        },
        "genk_dims": genk_dims,
        "sp_dims": sp_dims,
        "filtration": filtration,
    }


def _maximal_members(catalog, members):
    out = []
    for j in members:
        if not any(i != j and catalog.embed[j][i] for i in members):
            out.append(j)
    return sorted(out)


def lattice_report(p: int, max_order=None) -> dict:
    """The truncated p-group poset and its lattice of closed sets."""
    if max_order is None:
        max_order = default_max_order(p)
    catalog = build_catalog(p, max_order)
    closed = enumerate_closed_sets(catalog)

    sets_json = []
    for C in closed:
        members = C.sorted_members()
        maximals = _maximal_members(catalog, members)
        sets_json.append({
            "members": members,
            "labels": C.labels(),
            # one maximal generator makes the set a principal down-set,
            # which in a down-set lattice is the same as join irreducible
            "join_irreducible": len(maximals) == 1,
            "completely_prime": is_completely_prime(C),
        })

    principal = [{
        "top": catalog.label(j),
        "members": catalog.down_set(j).labels(),
    } for j in range(len(catalog))]

    return {
        "schema": SCHEMA_VERSION,
        "kind": "lattice",
        "p": p,
        "max_order": catalog.max_order,
        "entries": [{
            "index": j,
            "label": catalog.label(j),
            "order": catalog.group(j).order,
        } for j in range(len(catalog))],
        "embedding": [[1 if catalog.embed[i][j] else 0
                       for j in range(len(catalog))]
                      for i in range(len(catalog))],
        "closed_sets": sets_json,
        "closed_set_count": len(closed),
        "principal_down_sets": principal,
    }
