from __future__ import annotations

import random

import pytest

from gbh import borelcodes as bc
from gbh import spacelab as sl
from gbh.borelcodes import CodeTree, leaf, node


@pytest.fixture
def sp():
    return sl.FiniteSpace.build(2, 2)


def names(ps):
    return {sl.seq_str(x) for x in ps.members}


def test_json_round_trip():
    obj = {"nodes": {"": ["a", "b"], "a": [], "b": []}, "labels": {"a": "0", "b": "1"}}
    c = CodeTree.from_json(obj)
    assert c.nodes == frozenset({"", "a", "b"})
    assert CodeTree.from_json(c.to_json()) == c


def test_validation():
    with pytest.raises(bc.NotPrefixClosed):
        CodeTree(frozenset({"", "ab"}), {"ab": ()})
    with pytest.raises(bc.MissingLabel):
        CodeTree(frozenset({"", "a"}), {})
    with pytest.raises(bc.CodeError):
        CodeTree(frozenset({"", "a"}), {"a": (0,), "": ()})


def test_ranks():
    assert bc.rank(leaf("0")) == {"": 0}
    three = node(leaf("0"), leaf("1"), leaf("00"))
    r = bc.rank(three)
    assert r[""] == 1 and all(r[s] == 0 for s in three.leaves())
    chain = node(node(leaf("0")))
    assert sorted(bc.rank(chain).values(), reverse=True) == [2, 1, 0]


def test_interpret_examples(sp):
    assert names(bc.interpret(node(leaf("0")), sp)) == {"10", "11"}
    assert names(bc.interpret(node(leaf("0"), leaf("1")), sp)) == set()
    assert names(bc.interpret(node(node(leaf("0"))), sp)) == {"00", "01"}


def test_interpret_relative_to_a_subset(sp):
    X = sl.PointSet(sp, frozenset({(0, 0), (1, 0)}))
    assert names(bc.interpret(node(leaf("0")), sp, X)) == {"10"}


def test_combinators(sp):
    zero, one = leaf("0"), leaf("1")
    assert names(bc.interpret(bc.complement(node(zero)), sp)) == {"00", "01"}
    assert bc.interpret(bc.union(bc.empty_code(), bc.full_code()), sp) == sp.full()
    assert names(bc.interpret(bc.intersection(zero, one), sp)) == set()
    assert bc.code_intersection is bc.intersection


def _oracle_expr(code: CodeTree, sp, s=""):
    kids = code.children(s)
    if not kids:
        return sl.basic(sp, code.labels[s])
    return ("inter", *(("compl", _oracle_expr(code, sp, t)) for t in kids))


def test_random_codes_against_the_set_algebra_oracle(sp):
    rng = random.Random(11)
    stems = list(sp.stems(2))
    for _ in range(300):
        c = bc.random_code(rng, 7, stems)
        assert bc.interpret(c, sp) == sl.set_algebra_oracle(_oracle_expr(c, sp), sp)


def test_rank_bounds_of_combinators():
    rng = random.Random(3)
    stems = [(), (0,), (1,)]
    for _ in range(200):
        a, b = bc.random_code(rng, 6, stems), bc.random_code(rng, 6, stems)
        ra, rb = bc.code_rank(a), bc.code_rank(b)
        assert bc.code_rank(bc.complement(a)) == ra + 1
        assert bc.code_rank(bc.union(a, b)) <= max(ra, rb) + 2
        assert bc.code_rank(bc.intersection(a, b)) <= max(ra, rb, 2)


def test_shape_count_is_catalan():
    # ordered rooted trees with n nodes: Catalan(n - 1) = 1, 1, 2, 5, 14, 42, 132
    assert sum(1 for _ in bc.tree_shapes(7)) == 197


def test_canonical_tree_trivial_cases(sp):
    assert bc.canonical_tree(bc.full_code(), sp).project() == sp.points
    assert bc.canonical_tree(bc.empty_code(), sp).project() == set()


def test_canonical_tree_matches_brute_force(sp):
    rng = random.Random(5)
    stems = list(sp.stems(2))
    for _ in range(20):
        c = bc.random_code(rng, 5, stems)
        tree = bc.canonical_tree(c, sp)
        assert tree.project() == bc.interpret(c, sp).members
        assert tree.branches() == bc.brute_force_triples(c, sp)


def test_suslin_tree_projection():
    assert bc.SuslinTree(frozenset({()}), 2, 2, ("",)).project() == set()
    br = ((0, 1, ""), (1, None, None))
    t = bc.SuslinTree(frozenset({(), br[:1], br}), 2, 2, ("",))
    assert t.project() == {(0, 1)}


def test_canonical_cap(sp):
    c = node(*[leaf("0")] * 3)
    with pytest.raises(sl.CapExceeded):
        bc.brute_force_triples(c, sp, cap=10)
