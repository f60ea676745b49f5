"""Property tests for the invariants each module promises."""

from __future__ import annotations

import random

from hypothesis import given, settings
from hypothesis import strategies as st

from gbh import borelcodes as bc
from gbh import calculus as c
from gbh import forcinglab as fl
from gbh import ordinals as o
from gbh import spacelab as sl
from gbh.ordinals import CofClass

SING = c.CardinalContext("singular", CofClass.OMEGA)
CANTOR = c.space("subspace_of_cantor")
SP = sl.FiniteSpace.build(2, 2)


@st.composite
def pure_ordinals(draw, max_exp=3):
    """Pure Cantor normal forms below w^(max_exp+1) with small coefficients."""
    parts = []
    for e in range(max_exp, -1, -1):
        k = draw(st.integers(0, 3))
        if k:
            parts.append(str(k) if e == 0 else f"w^{e}*{k}")
    return o.parse("+".join(parts) or "0")


@st.composite
def symbolic_ordinals(draw):
    cof = draw(st.sampled_from(["omega", "cofk", "oltk", "kappa"]))
    return o.abstract_limit(o.cof_from_name(cof), draw(st.integers(0, 9)))


ordinals = st.one_of(pure_ordinals(), symbolic_ordinals())


# -- ordinals ---------------------------------------------------------------------------


@given(ordinals)
def test_print_parse_round_trip(a):
    assert o.parse(str(a)) == a


@given(ordinals)
def test_half_after_double(a):
    assert o.ord_half(o.ord_double(a)) == a


@given(ordinals)
def test_double_after_half_on_even(a):
    if a.is_even:
        assert o.ord_double(o.ord_half(a)) == a


@given(ordinals)
def test_parity_alternates(a):
    assert o.ord_succ(a).is_even != a.is_even


@given(pure_ordinals(), pure_ordinals(), pure_ordinals())
def test_addition_is_associative(a, b, d):
    assert o.ord_add(o.ord_add(a, b), d) == o.ord_add(a, o.ord_add(b, d))


@given(ordinals)
def test_zero_is_an_identity(a):
    assert o.ord_add(a, o.ZERO) == a
    assert o.ord_add(o.ZERO, a) == a


@given(pure_ordinals(), pure_ordinals(), pure_ordinals())
def test_comparison_is_a_total_order(a, b, d):
    ab, ba = o.ord_cmp(a, b), o.ord_cmp(b, a)
    assert {ab, ba} in ({"eq"}, {"lt", "gt"})
    assert (ab == "eq") == (a == b)
    if o.ord_le(a, b) and o.ord_le(b, d):
        assert o.ord_le(a, d)


@given(pure_ordinals(), st.integers(0, 5))
def test_comparison_agrees_with_addition(a, n):
    # a + n + 1 is always strictly above a
    assert o.ord_cmp(a, o.ord_add(a, o.nat(n + 1))) == "lt"


# -- calculus ---------------------------------------------------------------------------


levels = st.one_of(st.integers(1, 12).map(o.nat),
                   st.tuples(st.sampled_from(["w", "w*2", "w^2", "L(omega)", "L(cofk)"]),
                             st.integers(0, 6)).map(lambda t: o.parse(f"{t[0]}+{t[1]}")))
kinds = st.sampled_from(["Sigma", "Pi", "Delta"])
bases = st.sampled_from([c.K, c.KPLUS])


@given(kinds, levels, bases)
def test_normalize_is_idempotent(kind, level, base):
    p = c.PointclassDesc(kind, level, base)
    n = c.normalize(p, SING, CANTOR)
    assert c.normalize(n, SING, CANTOR) == n


@given(kinds, levels, bases)
def test_dual_is_an_involution(kind, level, base):
    p = c.PointclassDesc(kind, level, base)
    assert c.dual(c.dual(p)) == p


@given(kinds, levels)
def test_parity_split_at_base_k(kind, level):
    p = c.PointclassDesc(kind, level, c.K)
    n = c.normalize(p, SING, CANTOR)
    a = o.ord_drop_one(level)
    if a.is_even:
        assert n.base == c.KPLUS and o.ord_double(o.ord_drop_one(n.level)) == a
        assert c.normalize(c.dual(p), SING, CANTOR) == c.dual(n)
    else:
        assert n == c.PointclassDesc("Delta", level, c.K)


@given(levels)
def test_translation_round_trip(level):
    f = c.OrderFact("le", level, c.KPLUS)
    there = c.translate_order(f, SING, CANTOR)
    assert c.translate_order(there, SING, CANTOR) == f


@given(kinds, levels, kinds, levels, st.lists(levels, max_size=2))
@settings(max_examples=200)
def test_definite_verdicts_audit_clean(k1, l1, k2, l2, gts):
    facts = [c.OrderFact("gt", g) for g in gts]
    p, q = c.PointclassDesc(k1, l1, c.KPLUS), c.PointclassDesc(k2, l2, c.KPLUS)
    try:
        v = c.compare(p, q, c.CardinalContext(), c.space(c.INC), facts)
    except c.InconsistentFacts:
        return
    if v.answer != "unknown":
        assert v.trace and c.audit(v) == []


# -- spaces and codes -------------------------------------------------------------------


stems = st.lists(st.integers(0, 1), max_size=2).map(tuple)


@given(stems, stems)
def test_basic_sets_shrink_along_extensions(s, t):
    if t == s[: len(t)]:
        assert sl.basic(SP, s).members <= sl.basic(SP, t).members


@st.composite
def codes(draw, max_nodes=6):
    rng = random.Random(draw(st.integers(0, 2**32)))
    return bc.random_code(rng, max_nodes, list(SP.stems(2)))


@given(st.lists(codes(), min_size=1, max_size=3))
def test_de_morgan(cs):
    lhs = bc.interpret(bc.complement(bc.union(*cs)), SP).members
    rhs = SP.points
    for k in cs:
        rhs = rhs & bc.interpret(bc.complement(k), SP).members
    assert lhs == rhs


@given(st.lists(codes(), min_size=1, max_size=3))
def test_union_and_intersection(cs):
    sets = [bc.interpret(k, SP).members for k in cs]
    assert bc.interpret(bc.union(*cs), SP).members == frozenset().union(*sets)
    assert bc.interpret(bc.intersection(*cs), SP).members == frozenset.intersection(*sets)


@given(codes())
def test_complement_semantics_and_rank(code):
    assert bc.interpret(bc.complement(code), SP).members == SP.points - bc.interpret(code, SP).members
    assert bc.code_rank(bc.complement(code)) == bc.code_rank(code) + 1


@given(codes(5))
@settings(max_examples=40)
def test_canonical_tree_projects_onto_the_coded_set(code):
    assert bc.canonical_tree(code, SP).project() == bc.interpret(code, SP).members


# -- forcing ----------------------------------------------------------------------------


FORCING = fl.AlphaForcing.build(2, 3, SP, [(0, 0), (1, 1)], A=[(0, 0)], B=[(1, 1)], s_max=2)
CONDS = list(FORCING.conditions())
conditions = st.sampled_from(CONDS)


@given(conditions, conditions, conditions)
def test_order_is_a_partial_order(p, q, r):
    F = FORCING
    assert F.leq(p, p)
    if F.leq(p, q) and F.leq(q, p):
        assert p == q
    if F.leq(p, q) and F.leq(q, r):
        assert F.leq(p, r)


@given(conditions, conditions)
@settings(max_examples=200)
def test_meets_are_greatest_lower_bounds(p, q):
    F = FORCING
    try:
        m = F.meet(p, q)
    except (fl.Incompatible, fl.BudgetExceeded):
        assert not any(F.leq(r, p) and F.leq(r, q) for r in CONDS)
        return
    assert F.leq(m, p) and F.leq(m, q)
    assert all(F.leq(r, m) for r in CONDS if F.leq(r, p) and F.leq(r, q))
    H = [(0, 0)]
    assert F.crank(m, H) == max(F.crank(p, H), F.crank(q, H))
