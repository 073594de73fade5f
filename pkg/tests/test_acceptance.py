"""Acceptance gate: the twelve verification criteria, one test each.

Every test prints a single pass/fail line and asserts the structured
result of the matching suite in repring.verify, run over the default
corpus at primes 2 and 3 with a pinned seed.  All comparisons are
exact; there are no tolerances anywhere.
"""

import pytest

from repring import verify as V

SEED = 1
PRIMES = (2, 3)


@pytest.fixture(scope="module")
def contexts():
    return [V._Context(spec, p, SEED)
            for spec in V.DEFAULT_CORPUS for p in PRIMES]


def _gate(suite):
    d = suite.as_dict()
    status = "PASS" if d["pass"] else "FAIL"
    print(f"criterion {d['criterion']:>2} {d['name']}: {status} "
          f"({len(d['checks'])} checks)")
    failures = [c for c in d["checks"] if not c["pass"]]
    assert not failures, failures


def test_criterion_01_simple_count(contexts):
    _gate(V.suite_simple_count(contexts, SEED))


def test_criterion_02_cartan_divisors(contexts):
    _gate(V.suite_cartan_divisors(contexts, SEED))


def test_criterion_03_cartan_rank(contexts):
    _gate(V.suite_cartan_rank(contexts, SEED))


def test_criterion_04_gamma_basis(contexts):
    _gate(V.suite_gamma_basis(contexts, SEED))


def test_criterion_05_genk_basis(contexts):
    _gate(V.suite_genk_basis(contexts, SEED))


def test_criterion_06_sp_dimension(contexts):
    _gate(V.suite_sp_dimension(contexts, SEED))


def test_criterion_07_pgroup_indicator():
    _gate(V.suite_pgroup_indicator(PRIMES, SEED))


def test_criterion_08_closed_set_lattice():
    _gate(V.suite_closed_set_lattice(PRIMES, SEED))


def test_criterion_09_ideal_property(contexts):
    _gate(V.suite_ideal_property(contexts, SEED))


def test_criterion_10_product_factorization():
    _gate(V.suite_product_factorization(SEED))


def test_criterion_11_cartan_cross_oracle(contexts):
    _gate(V.suite_cartan_cross_oracle(contexts, SEED))


def test_criterion_12_determinism():
    _gate(V.suite_determinism(PRIMES, SEED))


def test_full_run_reports_all_pass():
    out = V.run_verify(seed=SEED)
    assert out["all_pass"] is True
    assert [c["criterion"] for c in out["criteria"]] == list(range(1, 13))
