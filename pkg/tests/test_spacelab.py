from __future__ import annotations

import itertools

import pytest

from gbh import spacelab as sl
from gbh.spacelab import FiniteSpace, basic, to_seq


@pytest.fixture
def two_two():
    return FiniteSpace.build(2, 2)


def names(ps):
    return {sl.seq_str(x) for x in ps.members}


def test_basic_sets(two_two):
    assert names(basic(two_two, "0")) == {"00", "01"}
    assert basic(two_two, "").members == two_two.points
    assert names(basic(two_two, "10")) == {"10"}


def test_bad_stem(two_two):
    with pytest.raises(sl.BadStem):
        basic(two_two, "2")
    with pytest.raises(sl.BadStem):
        basic(two_two, "000")


def test_subspace_points():
    sp = FiniteSpace.build(2, 2, ["00", "01", "10"])
    assert names(basic(sp, "1")) == {"10"}
    with pytest.raises(sl.SpaceError):
        FiniteSpace.build(2, 2, ["001"])


def test_cap():
    with pytest.raises(sl.CapExceeded):
        FiniteSpace.build(3, 9, cap=1000)


def test_json_round_trip(two_two):
    assert FiniteSpace.from_json(two_two.to_json()) == two_two


def test_set_algebra(two_two):
    a = PointSetOf(two_two, "00", "01")
    assert names(a.complement()) == {"10", "11"}
    assert (two_two.empty() | two_two.full()) == two_two.full()
    assert names(basic(two_two, "0") & basic(two_two, "1")) == set()


def PointSetOf(sp, *pts):
    return sl.PointSet(sp, frozenset(to_seq(p) for p in pts))


def test_mixed_spaces(two_two):
    other = FiniteSpace.build(2, 1)
    with pytest.raises(sl.SpaceMismatch):
        _ = two_two.full() | other.full()


def test_oracle(two_two):
    e = ("compl", ("union", basic(two_two, "0"), basic(two_two, "11")))
    assert names(sl.set_algebra_oracle(e)) == {"10"}
    with pytest.raises(sl.SpaceError):
        sl.set_algebra_oracle(("xor", two_two.full()))


def test_embedding():
    sp = FiniteSpace.build(2, 2, ["00", "01"])
    emb = sl.embed_into_cantor([basic(sp, "0"), basic(sp, "01")])
    assert emb == {(0, 0): (1, 0), (0, 1): (1, 1)}


def test_singleton_embedding():
    sp = FiniteSpace.build(2, 2, ["11"])
    assert sl.embed_into_cantor([basic(sp, "0")]) == {(1, 1): (0,)}


def test_not_t0(two_two):
    with pytest.raises(sl.NotT0):
        sl.embed_into_cantor([basic(two_two, "0"), basic(two_two, "1")])


def test_cylinder_preimage_matches_the_embedding(two_two):
    basis = [basic(two_two, s) for s in ("0", "1", "00", "10")]
    emb = sl.embed_into_cantor(basis)
    for s in itertools.product((0, 1), repeat=3):
        want = {x for x, row in emb.items() if row[:3] == s}
        assert sl.cylinder_preimage(basis, s).members == want


def test_level_one_sections():
    sp = FiniteSpace.build(2, 1)
    u = sl.build_universal(1, sp, [basic(sp, "0"), basic(sp, "1")])
    assert names(u.section((1, 0))) == {"0"}
    assert names(u.section((0, 0))) == set()
    assert u.sections() == sl.open_sets(u.basis)


def test_level_one_universality_by_brute_force(two_two):
    stems = ["0", "1", "00", "11"]
    basis = [basic(two_two, s) for s in stems]
    unions = set()
    for r in range(len(basis) + 1):
        for combo in itertools.combinations(basis, r):
            unions.add(frozenset().union(*(U.members for U in combo)))
    assert sl.build_universal(1, two_two, basis).sections() == unions


def test_level_two_sections_are_closed_sets(two_two):
    basis = [basic(two_two, s) for s in ("0", "1", "01")]
    u = sl.build_universal(2, two_two, basis, m=1)
    closed = {two_two.points - o for o in sl.open_sets(basis)}
    assert u.sections() == closed


def test_pairing_is_a_bijection():
    for width in range(1, 6):
        for m in range(1, 5):
            codes = [sl.pair(d, i, width) for d in range(m) for i in range(width)]
            assert sorted(codes) == list(range(m * width))
            assert all(sl.unpair(sl.pair(d, i, width), width) == (d, i)
                       for d in range(m) for i in range(width))


def test_parameter_cap(two_two):
    basis = [basic(two_two, s) for s in ("0", "1", "00", "01", "10", "11")]
    with pytest.raises(sl.CapExceeded):
        sl.build_universal(2, two_two, basis, m=4, cap=1 << 10)
