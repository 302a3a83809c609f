import math

import pytest

import satstar


def test_graph_roundtrip():
    g = satstar.Graph(4, [(0, 1), (2, 3), (1, 2)])
    text = g.serialize()
    assert text == "4 3\n0 1\n1 2\n2 3\n"
    assert satstar.Graph.parse(text) == g
    assert g.order == 4 and g.size == 3
    with pytest.raises(ValueError):
        satstar.Graph.parse("3 1\n0 7\n")


def test_gnp_is_reproducible():
    a = satstar.Graph.gnp(30, 0.5, seed=11)
    b = satstar.Graph.gnp(30, 0.5, seed=11)
    c = satstar.Graph.gnp(30, 0.5, seed=11, stream=1)
    assert a == b
    assert a != c


def test_predict():
    pred = satstar.predict(1_000_000, 0.5, 5)
    assert pred["x0"] == 33
    assert pred["case"] == "two-point"
    assert pred["values"] == [1999934, 1999935]
    with pytest.raises(ValueError):
        satstar.predict(1000, 1.5, 4)


def test_phi_and_alpha():
    assert math.isclose(math.exp(satstar.log_phi(12, 0.5, 5, 1)), 792 * 10 / 1024)
    assert satstar.alpha_p(1024, 0.5) == pytest.approx(15.2415, abs=1e-4)


def test_sparse_set_and_counts():
    c5 = satstar.Graph.cycle(5)
    res = satstar.max_sparse_set(c5, 0)
    assert res["size"] == 2 and res["exact"]
    assert satstar.max_sparse_set(satstar.Graph.complete(4), 2, mode="exactly") is None
    assert satstar.count_sets(c5, 2, 1) == 5


def test_solve_construct_verify():
    k5 = satstar.Graph.complete(5)
    exact = satstar.solve(k5, 3)
    assert exact["value"] == 4
    assert satstar.solve(k5, 3, method="oracle")["value"] == 4
    g = satstar.Graph.gnp(60, 0.5, seed=3)
    built = satstar.construct(g, 4, seed=1, p=0.5)
    h = satstar.Graph(60, built["edges"])
    ok, why = satstar.verify(g, h, 4)
    assert ok, why
    value, _ = satstar.sat_generic(satstar.Graph.complete(6), satstar.Graph.complete(3))
    assert value == 5


def test_experiment(tmp_path):
    config = {"mode": "alpha", "n": 30, "p": 0.5, "trials": 6, "master_seed": 4}
    csv1, summary = satstar.run_experiment(config, out_dir=str(tmp_path), workers=1)
    csv3, _ = satstar.run_experiment(config, workers=3)
    assert csv1 == csv3
    assert csv1.count("\r\n") == 7
    assert summary["trials"] == 6
    assert (tmp_path / "records.csv").read_bytes().decode() == csv1
    with pytest.raises(satstar.ConfigError):
        satstar.run_experiment({"mode": "alpha", "n": 30, "bogus": 1})
