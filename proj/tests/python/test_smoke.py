import pytest

import hedgehog as hh


def test_hcol_round_trip():
    c = hh.random_colouring(7, 3, 2, seed=3)
    assert len(c) == 35
    assert hh.CompleteColouring.from_hcol(c.to_hcol()) == c


def test_finder_embedding_verifies():
    c = hh.random_colouring(108, 3, 2, seed=0)
    emb = hh.find_monochromatic_hedgehog(c, 3)
    assert len(emb.body) == 3
    assert len(emb.spines) == 3
    assert hh.verify_embedding(emb, c) is None


def test_exhaustive_counterexample_is_hedgehog_free():
    outcome, witness, checked = hh.exhaustive_ramsey_check(3, 2, 6)
    assert outcome == "counterexample"
    assert checked > 0
    for colour in (0, 1):
        assert hh.has_monochromatic_hedgehog(witness, 3, colour) is None


def test_scattered_lift():
    g = hh.find_scattered_colouring(8, 4, q=4, seed=1)
    assert g is not None
    lifted = hh.complement_lift(g, [0, 1, 2, 3])
    assert lifted.k == 3 and lifted.n == 8


def test_spencer():
    edges = [[0, 1, 2], [1, 2, 3], [2, 3, 4]]
    s = hh.spencer_independent_set(5, edges, seed=0)
    assert len(s) >= hh.spencer_guarantee(5, 3)
    for e in edges:
        assert not set(e) <= set(s)


def test_gallai_clique():
    c = hh.CompleteColouring(6, 2, 3, fill=1)
    w = hh.gallai_two_coloured_clique(c)
    assert len(w.vertices) == 6


def test_f_oracle_small():
    value, lower, agree = hh.f_oracle(3, 5)
    assert value == 3 and lower == 3 and agree


def test_errors_and_cli():
    with pytest.raises(hh.HedgehogError):
        hh.CompleteColouring.from_hcol("not a colouring")
    code, out, _ = hh.cli(["generate", "random", "-n", "5", "-k", "3", "-q", "2", "--seed", "1"])
    assert code == 0 and out.startswith("HCOL v1 n=5 k=3 q=2")
    assert hh.cli(["search", "exhaustive", "--t", "3", "--q", "2", "--n", "7"])[0] == 3
