"""Acceptance criteria 1 to 11 at the stated instance counts.

Each test prints one PASS or FAIL line (also collected into the terminal
summary) before asserting, so a failing criterion still reports its line.
"""

import json

import pytest

from bqgraph import admissible_quotient, are_isomorphic
from bqgraph.classify import NotCTDecomposable, ct_decompose
from bqgraph.fixtures import TRIANGLE_DAG
from bqgraph.harness import SuiteConfig, converse_experiment, ct_catalog, fixture_checks, run_suite
from bqgraph.io import parse_json_graph

from conftest import ACCEPTANCE_LINES

pytestmark = pytest.mark.slow

CONFIG = SuiteConfig(
    seed=1,
    trials=200,
    max_vertices=6,
    random_vertices=8,
    random_edges=16,
    exhaustive_vertices=5,
    pair_vertices=4,
    total_quotient_instances=500,
    index_instances=200,
    chain_instances=200,
    relabel_instances=200,
    oracle_pairs=2000,
    experiments=False,
)


@pytest.fixture(scope="module")
def report():
    return run_suite(config=CONFIG)


def verdict(number, title, ok, detail):
    line = f"criterion {number:>2} {'PASS' if ok else 'FAIL'}  {title}: {detail}"
    print(line)
    ACCEPTANCE_LINES[number] = line
    return ok


def claim_summary(claim):
    text = f"{claim.instances} instances, {len(claim.failures)} failures"
    if claim.failures:
        text += f"; first: {claim.failures[0]['detail']}"
    return text


def check_claims(report, number, title, *ids):
    claims = [report.claim(cid) for cid in ids]
    ok = all(c.passed and c.instances > 0 for c in claims)
    detail = "; ".join(f"{c.id} {claim_summary(c)}" for c in claims)
    assert verdict(number, title, ok, detail), detail


def test_criterion_01_total_quotient(report):
    assert report.claim("c01-total-quotient").instances == 500
    check_claims(report, 1, "total quotient is L_|E|", "c01-total-quotient")


def test_criterion_02_fixtures(report):
    names = [name for name, _ in fixture_checks()]
    assert report.claim("c02-fixtures").instances == len(names) == 12
    check_claims(report, 2, "worked examples", "c02-fixtures")


def test_criterion_03_index_identity(report):
    c03 = report.claim("c03-index-identity")
    mismatches = sum(1 for f in c03.failures if f["detail"].startswith("InternalMismatch"))
    assert mismatches == 0
    check_claims(report, 3, "index identity over the sweep", "c03-index-identity")


def test_criterion_04_corollaries(report):
    check_claims(report, 4, "index one exactly for H = G", "c04-index-corollaries")


def test_criterion_05_chain_rule(report):
    assert report.claim("c05-chain-rule").instances == 200
    check_claims(report, 5, "chain rule and telescoping", "c05-chain-rule")


def test_criterion_06_dual_chain(report):
    # known to fail: see the README section on criterion 6
    check_claims(report, 6, "dual-chain embedding and duality", "c06a-dual-chain-embedding",
                 "c06b-duality-identity")


def test_criterion_07_range(report):
    check_claims(report, 7, "index values lie in the discrete range", "c07-index-range")


def test_criterion_08_inter_graph_index(report):
    check_claims(report, 8, "mutual index one iff isomorphic", "c08-inter-graph-index")


def test_criterion_09_relabel_invariance(report):
    assert report.claim("c09-relabel-invariance").instances == 200
    check_claims(report, 9, "relabelling invariance", "c09-relabel-invariance")


def test_criterion_10_iso_oracle(report):
    assert report.claim("c10-iso-oracle").instances == 2000
    check_claims(report, 10, "isomorphism agrees with brute force", "c10-iso-oracle")


def test_criterion_11_experiments_are_deterministic():
    first = json.dumps([converse_experiment(6), ct_catalog(6)], sort_keys=True)
    second = json.dumps([converse_experiment(6), ct_catalog(6)], sort_keys=True)
    converse, catalog = json.loads(first)
    with pytest.raises(NotCTDecomposable):
        ct_decompose(TRIANGLE_DAG)
    # spot-check one reported pair independently
    pairs = converse["violating_pairs"]
    if pairs:
        a = parse_json_graph(json.dumps(pairs[0]["first"]))
        b = parse_json_graph(json.dumps(pairs[0]["second"]))
        assert are_isomorphic(a, b) is None
        assert are_isomorphic(admissible_quotient(a).graph, admissible_quotient(b).graph) is not None
    ok = first == second and catalog["triangle_dag_listed"] and catalog["catalog"]
    detail = (f"converse: {converse['graphs_checked']} mixed graphs, "
              f"{converse['violating_pair_count']} violating pairs; "
              f"non-decomposable catalog lists {len(catalog['catalog'])} graphs up to 4 vertices")
    assert verdict(11, "experimental reports (seed 1)", bool(ok), detail), detail
