import json
from fractions import Fraction
from pathlib import Path

import jsonschema
import pytest
from referencing import Registry, Resource

import hyperramsey as hr

SCHEMA = Path(__file__).resolve().parents[2] / "docs" / "schema"


def schema(name):
    return json.loads((SCHEMA / name).read_text())


REGISTRY = Registry().with_resource(
    "cover_bound.schema.json", Resource.from_contents(schema("cover_bound.schema.json"))
)


def validate(instance, name):
    jsonschema.Draft202012Validator(schema(name), registry=REGISTRY).validate(instance)


def pentagon():
    k5 = hr.Hypergraph.complete(5, 2)
    ring = {(1, 2), (2, 3), (3, 4), (4, 5), (1, 5)}
    return hr.Coloring(k5, 2, [1 if tuple(e) in ring else 2 for e in k5.edges])


def test_hypergraph_roundtrip():
    h = hr.Hypergraph(5, 3, [[3, 4, 5], [1, 2, 3]])
    assert h.edges == [[1, 2, 3], [3, 4, 5]]
    assert len(h) == 2
    assert hr.Hypergraph.parse(h.to_uhg()) == h
    with pytest.raises(ValueError):
        hr.Hypergraph(4, 3, [[1, 1, 2]])
    with pytest.raises(ValueError):
        hr.Hypergraph.parse("uhg 4 3\n1 2 3\n1 2 3\n")


def test_primal_and_density():
    g = hr.primal_r_graph(hr.Hypergraph(5, 3, [[1, 2, 3], [3, 4, 5]]), 2)
    assert len(g) == 6
    assert hr.clique_density(4, 2) == Fraction(5, 2)
    value, witness = hr.max_r_density(hr.Hypergraph.complete(4, 3))
    assert value == 3 and witness == [1, 2, 3, 4]
    assert len(hr.enumerate_cliques(hr.Hypergraph.complete(4, 2), 3)) == 4


def test_covers():
    tri = [[1, 2], [1, 3], [2, 3]]
    assert hr.minimal_covers([1, 2, 3], tri, 2) == [tri]
    assert hr.phi([1, 2, 3], 2, tri, 3) == 1
    ok, lhs = hr.check_cover_inequality([1, 2, 3], 2, tri, 3)
    assert ok and lhs == -3
    steps = hr.reduction_sequence([1, 2, 3], 2, [[1, 2, 3]], 3)
    assert [phi for _, phi in steps] == [1, 1]
    report = hr.expected_cover_bound(200, 4, 2, 3, "n^-2.75")
    validate(report, "cover_bound.schema.json")
    assert report["ratio_upper"] < 0.1


def test_construct_pipeline():
    h = hr.sample(2000, 5, "n^-4", 1)
    assert h.k == 5
    h0, report = hr.clean(h, 2, 3)
    validate(report, "clean_report.schema.json")
    assert hr.is_r_linear(h0, 2) and hr.is_conformal(h0, 2, 3)
    lifted = hr.lift_coloring(h0, 2, pentagon())
    assert hr.is_good_coloring(lifted, 2, [3, 3])


def test_trials_deterministic():
    a = hr.run_trials(200, 4, 2, 3, "n^-2.75", 8, 5, threads=1)
    b = hr.run_trials(200, 4, 2, 3, "n^-2.75", 8, 5, threads=3)
    assert a == b
    stats, csv = a
    validate(stats, "trial_stats.schema.json")
    assert csv.splitlines()[0] == "seed,e_H,X,Y,deleted,e_H0"
    assert len(csv.splitlines()) == 9


def test_arrows():
    verdict, witness = hr.arrows(hr.Hypergraph.complete(5, 2), [3, 3])
    assert not verdict and hr.is_good_coloring(witness, 2, [3, 3])
    verdict, witness = hr.arrows(hr.Hypergraph.complete(6, 2), [3, 3])
    assert verdict and witness is None
    assert "p cnf 20 40" in hr.export_cnf(hr.Hypergraph.complete(5, 2), [3, 3])
    assert hr.ramsey_number([3, 3], 2, 8) == 6
    with pytest.raises(hr.NotFound):
        hr.ramsey_number([3, 3], 2, 5)
    with pytest.raises(hr.NoneExists):
        hr.base_coloring(6, [3, 3], 2)
    with pytest.raises(hr.BudgetExceeded):
        hr.arrows(hr.Hypergraph.complete(6, 2), [3, 3], max_nodes=5)
    with pytest.raises(ValueError):
        hr.arrows(hr.Hypergraph.complete(6, 2), [2, 3])
