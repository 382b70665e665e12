import os
from pathlib import Path

import pytest

import arset

DATA = Path(os.environ.get("ARSET_DATA", Path(__file__).resolve().parents[2] / "data"))


@pytest.fixture
def seed():
    return arset.Presentation.parse("gens: x1 x2\nrel: x1^2\nrel: x2^3")


def test_words():
    w = arset.Word.parse("(a b)^2 b^-1", ["a", "b"])
    assert str(w) == "a b a"
    assert len(w) == 3
    assert str(w * w.inverse()) == ""
    assert str(arset.Word.parse("[a,b]", ["a", "b"])) == "a b a^-1 b^-1"
    with pytest.raises(arset.ParseError):
        arset.Word.parse("a ^", ["a"])
    with pytest.raises(arset.InputError):
        arset.Word.parse("c", ["a"])


def test_presentations(seed):
    assert seed.generators == ["x1", "x2"]
    assert arset.generator_orders(seed) == [2, 3]
    assert arset.abelian_invariants(seed) == [6]
    assert arset.extended_gcd([4, 9]) == (1, [-2, 1])
    p = arset.Presentation.parse("gens: x y\nrel: y x^-2\nrel: y^3")
    assert str(arset.tietze_eliminate(p, "y", 0)) == "gens: x\nrel: x^6\n"
    cert = arset.check_condition_21(seed)
    assert cert["generators"] == ["x1", "x2"]
    assert cert["bezout"] == [-1, 1]


def test_construction(seed):
    out = arset.build_pw(seed, seed.word("x1 x1"))
    assert out["pw"].generators == ["a", "b"]
    assert len(out["pw"].relators) == 3
    assert len(out["qw"].generators) == 6
    assert arset.abelian_invariants(out["pw"]) == []
    assert arset.hom_count(out["qw"], "s3") == arset.hom_count(out["pw"], "s3")
    assert arset.is_free_basis(arset.rhs_basis_set(2))
    assert out["log"].startswith("elim al via rel 3")


def test_oracles(seed):
    assert arset.hom_count(seed, "s3") == 12
    s3 = arset.Presentation.load(DATA / "s3.pres")
    r = arset.enumerate_cosets(s3, strategy="felsch")
    assert r["finite"] and r["order"] == 6
    assert not arset.enumerate_cosets(seed, max_cosets=200)["finite"]
    trivial, nf = arset.wp_cyclic_free_product([2, 3], "x2^-1 x1^2 x2")
    assert trivial and str(nf) == ""
    trivial, nf = arset.wp_cyclic_free_product([2, None], "x1 x2^4 x1^3")
    assert not trivial and str(nf) == "x1 x2^4 x1"


def test_handles():
    s = arset.slide_reduce([2, 3])
    assert s["final"] == [1, 0]
    assert s["text"] == "sub 2 1 x1\nsub 1 2 x2\nperm 2 1\n"
    with pytest.raises(arset.PreconditionError):
        arset.slide_reduce([2, 4])
    p = arset.Presentation.parse("gens: a b\nrel: a\nrel: b\nrel: a b")
    b = arset.predict_boundary(p, reduced=True, verdict="trivial")
    assert b["connected_sum"] == 2 and b["b2"] == 4 and b["signature"] == 0


def test_pipeline():
    report = arset.run_pipeline(DATA / "c2c3.pres", "x1 x1", markov=True)
    assert "pw.abelianization = trivial" in report
    assert "markov.boundary = #2(S2xS2)" in report
    with pytest.raises(arset.InputError):
        arset.run_pipeline(DATA / "missing.pres", "x1")
