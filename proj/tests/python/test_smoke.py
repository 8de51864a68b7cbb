import pytest

import ordertop
from ordertop import FinitePoset, OrderError


def diamond():
    return FinitePoset.from_covers(
        ["b", "x", "y", "t"],
        [("b", "x"), ("b", "y"), ("x", "t"), ("y", "t")],
    )


def test_poset_basics():
    c = FinitePoset.chain(3)
    assert len(c) == 3
    assert c.leq(c.labels[0], c.labels[2])
    assert not c.leq(c.labels[2], c.labels[0])
    assert c.closed_set_count() == 4
    assert len(FinitePoset.antichain(2).with_top()) == 3


def test_analyze_chain():
    report = ordertop.analyze(FinitePoset.chain(2))
    assert report["counts"]["closed_sets"] == 3
    assert report["flags"]["sober"] is True
    assert report["flags"]["dl_sup"] is True


def test_analyze_diamond():
    report = ordertop.analyze(diamond())
    assert report["flags"]["quasicontinuous"] is True
    assert report["elements"]["t"]["down_linear"] is False


def test_canonical_and_isomorphism():
    other = FinitePoset.from_covers(
        ["n", "w", "e", "s"],
        [("s", "w"), ("s", "e"), ("w", "n"), ("e", "n")],
    )
    assert ordertop.isomorphic(diamond(), other)
    assert diamond().canonical() == other.canonical()
    assert not ordertop.isomorphic(FinitePoset.chain(2), FinitePoset.antichain(2))


def test_json_round_trip():
    p = diamond()
    assert ordertop.isomorphic(ordertop.poset_from_json(p.to_json()), p)
    assert "digraph" in p.to_dot()
    with pytest.raises(OrderError):
        ordertop.poset_from_json("{not json")


def test_enumeration_and_verify():
    assert [len(ordertop.enumerate_posets(n)) for n in (1, 2, 3, 4)] == [1, 2, 5, 16]
    assert "kappa" in ordertop.verification_suites()
    report = ordertop.verify("kappa", 4)
    assert report["checked"] > 0
    assert report["failures"] == []


def test_symbolic_oracles():
    t = ordertop.johnstone_truncate(2, 2)
    assert len(t) == 6
    with pytest.raises(OrderError):
        ordertop.johnstone_truncate(0, 1)
    report = ordertop.sample("kou", seed=5, trials=300)
    assert report["violations"] == 0 and report["passed"]


def test_sobrify():
    doc = ordertop.sobrify(FinitePoset.chain(2))
    assert len(doc["points"]) == 2
    assert len(doc["eta"]) == 2
