import math

import pytest

avoid132 = pytest.importorskip("avoid132")


def test_counts_are_python_ints():
    assert avoid132.catalan(12) == 208012
    assert avoid132.binomial(-1, 0) == 1
    assert avoid132.catalan(60) == math.comb(120, 60) // 61
    assert avoid132.kappa(2, 3, -1) == 1


def test_enumeration_and_bijections():
    perms = avoid132.enumerate_avoiders(5)
    assert len(perms) == 42
    for p in perms:
        assert avoid132.avoids_132(p)
        assert avoid132.jr_tree_to_perm(avoid132.jr_perm_to_tree(p)) == p
        assert avoid132.phi_tree_to_perm(avoid132.phi_perm_to_tree(p)) == p
    assert len(set(avoid132.enumerate_trees(6))) == 132


def test_decompositions():
    assert avoid132.decompose([5, 3, 4, 6, 1, 2, 7], "ird") == [[5], [3, 4, 6], [1, 2, 7]]
    assert avoid132.length_distribution([5, 3, 4, 6, 1, 2, 7], "vcis") == [3, 2, 2]
    with pytest.raises(ValueError):
        avoid132.decompose([1, 3, 2], "lde")


def test_stats_and_verify():
    assert avoid132.tree_stats("(())()")["internal_outdegrees"] == [2, 1]
    report = avoid132.verify("heights-rsw", 6, shards=2)
    assert report["status"] == "pass"
    assert set(avoid132.claim_ids()) >= {"catalan", "formulas", "roundtrips"}
    with pytest.raises(avoid132.ResourceLimitError):
        avoid132.enumerate_trees(20)
