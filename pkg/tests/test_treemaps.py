from __future__ import annotations

import itertools

import pytest

from gbh import treemaps as tm
from gbh.treemaps import FiniteTree, TreeMap

BIN1 = FiniteTree.full((0, 1), 1)
BIN2 = FiniteTree.full((0, 1), 2)


def identity(tree):
    return TreeMap(tree, tree.depth, {s: s for s in tree.nodes})


def doubling():
    return TreeMap(BIN1, 2, {s: s + s for s in BIN1.nodes})


def test_identity_flags():
    p = tm.check_order_props(identity(BIN2))
    assert p.order_preserving and p.strict and p.preserves_incompatibility and p.order_embedding


def test_constant_map():
    p = tm.check_order_props(TreeMap(BIN2, 2, {s: () for s in BIN2.nodes}))
    assert p.order_preserving and not p.strict


def test_comparable_images_of_incomparable_nodes():
    phi = TreeMap(BIN1, 2, {(): (), (0,): (0,), (1,): (0, 0)})
    assert not tm.check_order_props(phi).preserves_incompatibility


def test_perfect_criteria():
    copy = tm.from_json({"source_depth": 1, "source_alphabet": 2, "map": {"": "", "0": "a0", "1": "b0"}})
    assert tm.check_exists_perfect(copy).exists
    same = tm.from_json({"source_depth": 1, "source_alphabet": 2, "map": {"": "", "0": "a0", "1": "a1"}})
    assert not tm.check_exists_perfect(same).exists


def test_perfect_needs_order_preserving():
    bad = TreeMap(BIN1, 1, {(): ((0, 0),), (0,): (), (1,): ()})
    with pytest.raises(tm.NotOrderPreserving):
        tm.check_exists_perfect(bad)


def test_body_maps():
    assert tm.body_map(identity(BIN2)) == {b: b for b in BIN2.branches()}
    assert tm.body_map(doubling()) == {(0,): (0, 0), (1,): (1, 1)}


def test_body_map_needs_strict_and_depth():
    with pytest.raises(tm.NotStrict):
        tm.body_map(TreeMap(BIN1, 1, {s: () for s in BIN1.nodes}))
    short = TreeMap(BIN1, 3, {s: s for s in BIN1.nodes})
    with pytest.raises(tm.DepthShortfall):
        tm.body_map(short)


def test_closed_images():
    assert tm.closed_image_check(identity(BIN2))
    assert tm.closed_image_check(doubling())
    with pytest.raises(tm.NotEmbedding):
        tm.closed_image_check(TreeMap(BIN1, 2, {(): (), (0,): (0,), (1,): (0, 0)}))


def _strict_maps(source, target):
    for phi in tm.order_preserving_maps(source, target):
        if tm.check_order_props(phi).strict:
            yield phi


def test_injective_iff_incompatibility_preserved():
    target = FiniteTree.full((0, 1), 3)
    seen = 0
    for phi in _strict_maps(BIN1, target):
        try:
            f = tm.body_map(phi)
        except tm.DepthShortfall:
            continue
        seen += 1
        injective = len(set(f.values())) == len(f)
        assert injective == tm.check_order_props(phi).preserves_incompatibility
    assert seen > 0


def _embeddings(source, target):
    """Order embeddings, choosing images parent first and pruning clashes."""
    order = sorted(source.nodes, key=lambda s: (len(s), s))
    by_len = sorted(target.nodes, key=len)

    def extend(i, acc):
        if i == len(order):
            yield TreeMap(source, target.depth, dict(acc))
            return
        s = order[i]
        for v in by_len:
            if s and not (tm.is_prefix(acc[s[:-1]], v) and v != acc[s[:-1]]):
                continue
            if any(tm.is_prefix(t, s) != tm.is_prefix(w, v) or tm.incompatible(t, s) != tm.incompatible(w, v)
                   for t, w in acc.items()):
                continue
            acc[s] = v
            yield from extend(i + 1, acc)
            del acc[s]

    yield from extend(0, {})


def test_embeddings_into_ternary_trees_have_closed_images():
    target = FiniteTree.full((0, 1, 2), 3)
    count = 0
    for phi in _embeddings(BIN2, target):
        if any(len(phi(b)) < target.depth for b in BIN2.branches()):
            continue
        assert tm.check_order_props(phi).order_embedding
        assert tm.closed_image_check(phi)
        count += 1
    assert count > 100


def test_order_preserving_enumeration_by_brute_force():
    target = tm.product_tree(2, 1, 1)
    nodes = sorted(BIN1.nodes)
    tnodes = sorted(target.nodes)
    brute = 0
    for images in itertools.product(tnodes, repeat=len(nodes)):
        phi = TreeMap(BIN1, 1, dict(zip(nodes, images)))
        brute += tm.check_order_props(phi).order_preserving
    assert brute == sum(1 for _ in tm.order_preserving_maps(BIN1, target))


def test_composition_identity():
    copy = tm.from_json({"source_depth": 1, "source_alphabet": 2, "target_depth": 1,
                         "map": {"": "", "0": "a0", "1": "b1"}})
    assert tm.composition_identity(copy)


def test_from_json_requires_every_node():
    with pytest.raises(tm.TreeMapError):
        tm.from_json({"source_depth": 1, "source_alphabet": 2, "map": {"": ""}})
