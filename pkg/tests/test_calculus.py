from __future__ import annotations

import pytest

from gbh import calculus as c
from gbh.calculus import K, KPLUS, CardinalContext, OrderFact, pc, space
from gbh.ordinals import CofClass, parse

REG = CardinalContext()
SING = CardinalContext("singular", CofClass.OMEGA)
CANTOR = space("subspace_of_cantor")
NONE = space()


def ids(v):
    return [rid for rid, _ in v.trace]


# -- normal form -----------------------------------------------------------------------


def test_even_level_moves_to_the_plus_scale():
    assert c.normalize(pc("Sigma", 3, K), SING, CANTOR) == pc("Sigma", 2, KPLUS)


def test_odd_level_is_delta():
    assert c.normalize(pc("Sigma", 2, K), SING, CANTOR) == pc("Delta", 2, K)


def test_plus_base_is_fixed():
    assert c.normalize(pc("Pi", 5, KPLUS), REG, NONE) == pc("Pi", 5, KPLUS)


def test_normalize_needs_singular_and_hypothesis():
    with pytest.raises(c.MissingAssumption) as info:
        c.normalize(pc("Sigma", 3, K), REG, NONE)
    assert set(info.value.missing) == {"singular kappa", c.HYP}


def test_normalize_limit_level():
    assert c.normalize(pc("Pi", "w", K), SING, CANTOR) == pc("Pi", "w", KPLUS)
    assert c.normalize(pc("Pi", "w+1", K), SING, CANTOR) == pc("Delta", "w+1", K)
    assert c.normalize(pc("Pi", "w+2", K), SING, CANTOR) == pc("Pi", "w+1", KPLUS)


def test_dual():
    assert c.dual(pc("Sigma", 2)) == pc("Pi", 2)
    assert c.dual(pc("Delta", 3)) == pc("Delta", 3)
    s = pc("Sigma", "w")
    assert c.dual(c.dual(s)) == s


def test_parse_pointclass():
    assert c.parse_pointclass("Sigma(0,3,k)") == pc("Sigma", 3, K)
    assert c.parse_pointclass("Borel(k+)") == c.PointclassDesc("Borel", None, KPLUS)
    assert str(pc("Pi", "w+1")) == "Pi(0,w+1,k+)"
    with pytest.raises(c.CalculusError):
        c.parse_pointclass("Sigma(1,3,k)")


# -- inclusions ------------------------------------------------------------------------


def test_increasing_with_regular_hausdorff_flag():
    v = c.compare(pc("Sigma", 1), pc("Sigma", 2), REG, space(c.INC))
    assert v.answer == "holds"
    assert "INC-REG" in ids(v)


def test_increasing_unknown_without_flag():
    v = c.compare(pc("Sigma", 1), pc("Sigma", 2), REG, NONE)
    assert v.answer == "unknown"
    assert c.INC in v.missing


def test_delta_below_sigma():
    v = c.compare(pc("Delta", 4), pc("Sigma", 4), REG, NONE)
    assert v.answer == "holds" and "DELTA-SUB" in ids(v)


def test_proper_delta():
    v = c.compare(pc("Sigma", 3), pc("Delta", 3), REG, NONE, [OrderFact("gt", parse("3"))])
    assert v.answer == "fails" and "PROPER-DELTA" in ids(v)


def test_inconsistent_facts():
    facts = [OrderFact("gt", parse("3")), OrderFact("le", parse("2"))]
    with pytest.raises(c.InconsistentFacts):
        c.compare(pc("Sigma", 3), pc("Delta", 3), REG, NONE, facts)


# -- closure ---------------------------------------------------------------------------


def test_successor_closure_below_cof_kappa():
    v = c.closure(pc("Sigma", "w+1"), "intersection", c.parse_size("<cofk"), REG, NONE)
    assert v.answer == "holds"


def test_pi_two_not_closed_under_complement():
    v = c.closure(pc("Pi", 2), "complement", None, REG, NONE, [OrderFact("gt", parse("2"))])
    assert v.answer == "fails" and "OPT-REG" in ids(v)


def test_delta_limit_not_closed_under_omega_unions():
    v = c.closure(pc("Delta", "w"), "union", c.parse_size("=omega"), REG, NONE, [OrderFact("gt", parse("w"))])
    assert v.answer == "fails"


def test_closure_needs_size():
    with pytest.raises(c.CalculusError):
        c.closure(pc("Sigma", 2), "union", None, REG, NONE)


# -- order translation -----------------------------------------------------------------


@pytest.mark.parametrize("fact, want", [
    (OrderFact("le", parse("3"), KPLUS), OrderFact("le", parse("5"), K)),
    (OrderFact("le", parse("w"), KPLUS), OrderFact("le", parse("w"), K)),
    (OrderFact("le", parse("1"), K), OrderFact("le", parse("1"), KPLUS)),
    (OrderFact("le", parse("4"), K), OrderFact("le", parse("3"), KPLUS)),
    (OrderFact("gt", parse("4"), K), OrderFact("gt", parse("2"), KPLUS)),
])
def test_translate(fact, want):
    assert c.translate_order(fact, SING, CANTOR) == want


def test_translate_refuses_equalities():
    with pytest.raises(c.CalculusError):
        c.translate_order(OrderFact("eq", parse("3")), SING, CANTOR)


def test_translate_needs_singular():
    with pytest.raises(c.MissingAssumption):
        c.translate_order(OrderFact("le", parse("3")), REG, CANTOR)


# -- collapse --------------------------------------------------------------------------


def test_self_dual_forces_collapse():
    ev = [c.Equal(pc("Sigma", 3), pc("Pi", 3))]
    v = c.collapse_criteria(ev, parse("3"), REG, NONE)
    assert v.answer == "holds" and "SELF-DUAL-COLLAPSE" in ids(v)


def test_odd_self_duality_at_k_says_nothing():
    ev = [c.Equal(pc("Sigma", 2, K), pc("Pi", 2, K))]
    assert c.collapse_criteria(ev, parse("2"), SING, CANTOR, base=K).answer == "unknown"


def test_no_evidence():
    assert c.collapse_criteria([], parse("3"), REG, NONE).answer == "unknown"


# -- universal sets and functions ------------------------------------------------------


def test_universal_sigma():
    assert c.universal_exists(pc("Sigma", 4), "cantor", REG, NONE).answer == "holds"


def test_universal_odd_k_level():
    assert c.universal_exists(pc("Sigma", 2, K), "cantor", SING, CANTOR).answer == "fails"


def test_universal_delta_over_self():
    assert c.universal_exists(pc("Delta", 3), "self", REG, NONE).answer == "fails"


def test_function_hierarchy():
    f = c.function_hierarchy_order(OrderFact("eq", parse("5")), True)
    assert f.subject == "functions" and f.bound == parse("5")
    back = c.function_hierarchy_order(OrderFact("le", parse("2"), subject="functions"), True)
    assert back == OrderFact("le", parse("2"))
    with pytest.raises(c.MissingAssumption):
        c.function_hierarchy_order(OrderFact("eq", parse("1")), False)


# -- traces ----------------------------------------------------------------------------


def test_definite_verdicts_carry_traces_that_audit_clean():
    v = c.compare(pc("Sigma", 3), pc("Delta", 3), REG, NONE, [OrderFact("gt", parse("3"))])
    assert v.trace and c.audit(v) == []
    for rid, cit in v.trace:
        assert c.RULES[rid].citation == cit


def test_audit_flags_unknown_rules():
    v = c.Verdict("holds", (("MADE-UP", "no such rule"),))
    assert c.audit(v)


def test_exit_codes():
    assert [c.Verdict(a, (c.step("REFL"),)).exit_code for a in ("holds", "fails")] == [0, 1]
    assert c.Verdict("unknown").exit_code == 2


def test_load_context():
    ctx, sa, facts, ev = c.load_context({
        "kappa": "singular", "cof_kappa": "omega", "space": ["subspace_of_cantor"],
        "facts": [{"ord": {"base": "k+", "rel": "gt", "bound": "3"}}],
        "evidence": [{"eq": ["Sigma(0,3,k+)", "Pi(0,3,k+)"]}],
    })
    assert ctx == SING and c.HYP in sa
    assert facts == [OrderFact("gt", parse("3"))]
    assert ev == [c.Equal(pc("Sigma", 3), pc("Pi", 3))]


def test_bad_context():
    with pytest.raises(c.CalculusError):
        CardinalContext("regular", CofClass.OMEGA)
    with pytest.raises(c.CalculusError):
        space("not_a_flag")
