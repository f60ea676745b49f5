"""Rule engine for inclusions, closure and collapse of Borel pointclasses.

Pointclasses live at base ``k`` (unions of size below kappa) or ``k+``
(unions of size kappa).  Every verdict carries a trace of the rules that
produced it; the rule table below is plain data and can be audited.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .ordinals import (
    ONE,
    CofClass,
    OrdinalExpr,
    cof_from_name,
    nat,
    ord_cmp,
    ord_cof,
    ord_double,
    ord_drop_one,
    ord_half,
    ord_one_plus,
    parse as parse_ordinal,
)

K = "k"
KPLUS = "k+"
KINDS = ("Sigma", "Pi", "Delta", "Borel")

FLAGS = (
    "regular_hausdorff_weight_le_kappa",
    "opens_are_cofk_unions_of_closed",
    "subspace_of_cantor",
    "cofk_additive",
    "has_cantor_copy",
    "has_kplus_borel_embedding_of_cantor",
    "at_most_one_nonisolated_point",
    "size_gt_kappa",
)
INC = "regular_hausdorff_weight_le_kappa"
HYP = "opens_are_cofk_unions_of_closed"


class CalculusError(ValueError):
    pass


class MissingAssumption(CalculusError):
    def __init__(self, missing: Sequence[str], msg: str = ""):
        self.missing = tuple(missing)
        super().__init__(msg or f"missing assumption(s): {', '.join(self.missing)}")


class InconsistentFacts(CalculusError):
    pass


# -- rule table ----------------------------------------------------------------


@dataclass(frozen=True)
class Rule:
    rule_id: str
    pattern: str
    conclusion: str
    citation: str


_RULE_ROWS = [
    ("REFL", "p = q", "p <= q", "every pointclass is included in itself"),
    ("DUAL", "Sigma <-> Pi", "dual class", "Pi(a) is the class of complements of sets in Sigma(a)"),
    ("DELTA-SUB", "Delta(a) vs Sigma(a), Pi(a)", "Delta(a) <= Sigma(a), Pi(a)",
     "Delta(a) is the intersection of Sigma(a) and Pi(a)"),
    ("PI1-SIGMA2", "level 1 vs level 2, opposite kinds", "Pi(1) <= Sigma(2), Sigma(1) <= Pi(2)",
     "a closed set is a one-element union of closed sets, and dually"),
    ("INC-ABOVE-2", "2 <= a < b", "Sigma(a), Pi(a) <= Delta(b)",
     "from level 2 on the hierarchy increases in every space: Sigma(a) and Pi(a) lie in Delta(b) for 2 <= a < b, "
     "and Sigma(1), Pi(1) lie in Delta(b) for b >= 3"),
    ("INC-REG", "level 1, regular Hausdorff weight <= kappa", "Sigma(1) <= Sigma(2)",
     "in a regular Hausdorff space of weight at most kappa every open set is a kappa-union of closed sets"),
    ("INC-HYP", "base k, singular, open sets are cof(kappa)-unions of closed sets",
     "the k-hierarchy increases from level 1",
     "if every open set is a cof(kappa)-union of closed sets then Sigma(1)(k) <= Sigma(2)(k) and the k-hierarchy increases"),
    ("DELTA-MONO", "Delta(a), Delta(b), a <= b", "Delta(a) <= Delta(b)",
     "Delta(a) <= Delta(b) whenever a <= b, in every space"),
    ("BOREL-TOP", "q = Borel", "p <= Borel", "every class of the hierarchy consists of Borel sets"),
    ("PARITY-EVEN", "base k, level 1+a, a even", "same kind at base k+, level 1+a/2",
     "for singular kappa with open sets cof(kappa)-unions of closed sets, "
     "Sigma(1+a)(k) = Sigma(1+a/2)(k+) when a is even (likewise Pi, Delta)"),
    ("PARITY-ODD", "base k, level 1+a, a odd", "Delta at base k, level 1+a",
     "for singular kappa with open sets cof(kappa)-unions of closed sets, "
     "Sigma(1+a)(k) = Pi(1+a)(k) = Delta(1+a)(k) when a is odd"),
    ("PARITY-PLUS", "base k+", "unchanged", "k+-based classes are already in normal form"),
    ("BOREL-SINGULAR", "Borel(k), singular kappa", "Borel(k+)",
     "for singular kappa the k-Borel and k+-Borel sets coincide"),
    ("FACT", "order fact given", "order fact", "order fact supplied as input"),
    ("ORDER-TRANSLATE", "order fact at one base", "order fact at the other base",
     "ord(k+) <= 1+a holds exactly when ord(k) <= 1+2a; limit bounds are fixed points"),
    ("ORDER-DEF", "class at level a equals Borel", "ord <= a",
     "the order is the least level at which Sigma (equivalently Pi or Delta) exhausts the Borel sets"),
    ("COLLAPSE-UP", "ord <= m, levels >= m", "all classes equal Borel",
     "once ord <= m every class at a level >= m equals the Borel sets"),
    ("BOREL-NOT-BELOW", "a < ord", "Borel not <= Gamma(a)",
     "below the order none of Sigma(a), Pi(a), Delta(a) contains every Borel set"),
    ("PROPER-DELTA", "base k+, a < ord", "Sigma(a), Pi(a) not <= Delta(a)",
     "below the order Delta(a)(k+) is a proper subclass of Sigma(a)(k+) and of Pi(a)(k+)"),
    ("SELF-DUAL-COLLAPSE", "Sigma(a)(k+) = Pi(a)(k+)", "ord(k+) <= a",
     "k+ is not a singular cardinal, so self-duality of Sigma(a)(k+) forces ord(k+) <= a"),
    ("EQ-COLLAPSE", "classes at levels a < b coincide, increasing above a", "ord <= a",
     "if a class at level a coincides with a class at a higher level b and the hierarchy increases above a, then ord <= a"),
    ("PROPER-K", "base k, 1+a < ord(k), a even", "Sigma(1+a)(k) not <= Delta(1+a)(k)",
     "below ord(k) and at even a, Delta(1+a)(k) is a proper subclass of Sigma(1+a)(k) and of Pi(1+a)(k)"),
    ("SELF-DUAL-K", "Sigma(1+a)(k) = Pi(1+a)(k), a even", "ord(k) <= 1+a",
     "at even a, self-duality of Sigma(1+a)(k) forces ord(k) <= 1+a; at odd a it carries no information"),
    ("EQ-COLLAPSE-K", "k-classes at levels 1+a < 1+b coincide", "ord(k) <= 1+a",
     "if a k-class at level 1+a coincides with one at a higher level then ord(k) <= 1+a"),
    ("BOREL-ALGEBRA", "Borel", "closed under complement and kappa-unions",
     "the Borel sets form a k+-algebra"),
    ("COMPLEMENT-DELTA", "Delta", "closed under complement", "Delta(a) is closed under complements"),
    ("CLOSURE-PLUS", "Sigma/Pi/Delta at base k+", "closure pattern",
     "Sigma(a)(k+) is closed under kappa-unions and under intersections of fewer than hat(a) sets, "
     "Pi(a)(k+) dually, Delta(a)(k+) is a hat(a)-algebra; hat(a) = cof(kappa) for successor a, cof(a) for limit a"),
    ("CLOSURE-LEVEL1", "level 1", "open-set closure",
     "open sets are closed under kappa-unions and finite intersections, and under intersections of fewer than "
     "cof(kappa) sets when the space is cof(kappa)-additive"),
    ("OPT-REG", "regular kappa, 1 <= a < ord", "optimality",
     "for regular kappa and 1 <= a < ord, Sigma(a)(k+) is neither closed under complements nor under "
     "intersections of hat(a) sets, dually for Pi; Delta(a) is not closed under hat(a)-unions when a > 1, "
     "or when a = 1 and the space is a subspace of the Cantor space"),
    ("OPT-SING", "singular kappa, hypothesis, 1 <= a < ord", "optimality",
     "for singular kappa whose open sets are cof(kappa)-unions of closed sets the same optimality holds "
     "at base k+ below the order"),
    ("CLOSURE-K-ODD", "base k, level 1+a, a odd", "cof(kappa)-algebra",
     "at odd a the self-dual class Sigma(1+a)(k) is a cof(kappa)-algebra"),
    ("OPT-K-ODD", "base k, a odd, 1+a < ord(k)", "not closed under cof(kappa)-unions",
     "at odd a with 1+a < ord(k), Sigma(1+a)(k) is not closed under unions or intersections of cof(kappa) sets"),
    ("COLLAPSE-CLOSED", "Sigma(a) closed under kappa-intersections, Sigma(1), Pi(1) <= Sigma(a)", "ord <= a",
     "if Sigma(a)(k+) contains all open and closed sets and is closed under intersections of size kappa "
     "(Pi dually, or Delta under either), then ord(k+) <= a"),
    ("COLLAPSE-CLOSED-K", "Delta(1+a)(k), a >= 1, closed under kappa-unions", "ord(k) <= 1+a",
     "if Delta(1+a)(k) with a >= 1 is closed under kappa-unions or kappa-intersections then ord(k) <= 1+a"),
    ("UNIV-SIGMA-PI", "Sigma/Pi at base k+", "Cantor-universal set exists",
     "for every a >= 1, Sigma(a)(k+) and Pi(a)(k+) on any space admit a universal set parametrized by the "
     "generalized Cantor space"),
    ("UNIV-SELF", "Sigma/Pi at base k+, Cantor space embeds", "X-universal set exists",
     "when the generalized Cantor space embeds into X, the parameter space can be replaced by X"),
    ("UNIV-SELFDUAL", "self-dual class", "no X-universal set",
     "a self-dual class on X has no X-universal set, by diagonalization"),
    ("UNIV-K-ODD", "base k, a odd", "no Cantor-universal set",
     "at odd a, Sigma(1+a)(k) on the generalized Cantor space is self-dual, so it has no universal set"),
    ("FUNC-ORDER", "function hierarchy, Hausdorff target with >= 2 points", "same order",
     "for a Hausdorff target with at least two points, the function hierarchy has the same order as the set hierarchy"),
]

RULES: dict[str, Rule] = {r[0]: Rule(*r) for r in _RULE_ROWS}


def step(rule_id: str) -> tuple[str, str]:
    return (rule_id, RULES[rule_id].citation)


# -- data types ----------------------------------------------------------------


@dataclass(frozen=True)
class CardinalContext:
    kappa_kind: str = "regular"
    cof_kappa: CofClass = CofClass.KAPPA

    def __post_init__(self):
        if self.kappa_kind == "regular":
            if self.cof_kappa is not CofClass.KAPPA:
                raise CalculusError("regular kappa has cofinality kappa")
        elif self.kappa_kind == "singular":
            if self.cof_kappa not in (CofClass.OMEGA, CofClass.OTHER_LT_KAPPA):
                raise CalculusError("singular kappa has cofinality omega or another cardinal below kappa")
        else:
            raise CalculusError(f"kappa_kind must be regular or singular, not {self.kappa_kind!r}")

    @property
    def singular(self) -> bool:
        return self.kappa_kind == "singular"

    def resolve(self, c: CofClass) -> CofClass:
        """Replace ``cof_kappa`` by what the context knows about it."""
        if c is CofClass.COF_KAPPA:
            if not self.singular:
                return CofClass.KAPPA
            if self.cof_kappa is CofClass.OMEGA:
                return CofClass.OMEGA
        return c


@dataclass(frozen=True)
class SpaceAssumptions:
    flags: frozenset[str] = frozenset()

    def __post_init__(self):
        bad = set(self.flags) - set(FLAGS)
        if bad:
            raise CalculusError(f"unknown space flag(s): {sorted(bad)}")
        fl = set(self.flags)
        if "subspace_of_cantor" in fl:
            fl |= {INC, HYP}
        object.__setattr__(self, "flags", frozenset(fl))

    def __contains__(self, flag: str) -> bool:
        return flag in self.flags


def space(*flags: str) -> SpaceAssumptions:
    return SpaceAssumptions(frozenset(flags))


@dataclass(frozen=True)
class PointclassDesc:
    kind: str
    level: OrdinalExpr | None
    base: str

    def __post_init__(self):
        if self.kind not in KINDS:
            raise CalculusError(f"bad kind {self.kind!r}")
        if self.base not in (K, KPLUS):
            raise CalculusError(f"bad base {self.base!r}")
        if self.kind == "Borel":
            if self.level is not None:
                raise CalculusError("Borel carries no level")
        elif self.level is None or self.level.is_zero:
            raise CalculusError("levels start at 1")

    def __str__(self) -> str:
        if self.kind == "Borel":
            return f"Borel({self.base})"
        return f"{self.kind}(0,{self.level},{self.base})"


def pc(kind: str, level: int | str | OrdinalExpr | None, base: str = KPLUS) -> PointclassDesc:
    if isinstance(level, int):
        level = nat(level)
    elif isinstance(level, str):
        level = parse_ordinal(level)
    return PointclassDesc(kind, level, base)


_PC_RE = re.compile(r"^\s*(Sigma|Pi|Delta)\s*\(\s*0\s*,(.+),\s*(k\+|k)\s*\)\s*$")
_BOREL_RE = re.compile(r"^\s*Borel\s*\(\s*(k\+|k)\s*\)\s*$")


def parse_pointclass(text: str) -> PointclassDesc:
    m = _BOREL_RE.match(text)
    if m:
        return PointclassDesc("Borel", None, m.group(1))
    m = _PC_RE.match(text)
    if not m:
        raise CalculusError(f"cannot parse pointclass {text!r}")
    return PointclassDesc(m.group(1), parse_ordinal(m.group(2)), m.group(3))


@dataclass(frozen=True)
class OrderFact:
    """``ord(base) relation bound``; a bound of None is the k+ ceiling."""

    relation: str
    bound: OrdinalExpr | None
    base: str = KPLUS
    subject: str = "sets"

    def __post_init__(self):
        if self.relation not in ("le", "gt", "eq", "ge"):
            raise CalculusError(f"bad relation {self.relation!r}")
        if self.base not in (K, KPLUS):
            raise CalculusError(f"bad base {self.base!r}")
        if self.bound is not None and self.bound.is_zero:
            raise CalculusError("order bounds start at 1")
        if self.bound is None and self.relation in ("gt", "eq", "ge"):
            raise CalculusError("nothing lies above the k+ ceiling")

    def __str__(self) -> str:
        sym = {"le": "<=", "gt": ">", "eq": "=", "ge": ">="}[self.relation]
        b = "k+" if self.bound is None else str(self.bound)
        pre = "ordf" if self.subject == "functions" else "ord"
        return f"{pre}({self.base}) {sym} {b}"


@dataclass(frozen=True)
class Size:
    """A family size: ``rel`` is ``<`` (fewer than) or ``=`` (exactly)."""

    rel: str
    card: CofClass

    def __str__(self) -> str:
        names = {CofClass.FINITE: "finite", CofClass.OMEGA: "omega", CofClass.COF_KAPPA: "cofk",
                 CofClass.OTHER_LT_KAPPA: "oltk", CofClass.KAPPA: "kappa"}
        return f"{self.rel}{names[self.card]}"


def parse_size(text: str) -> Size:
    text = text.strip()
    if not text or text[0] not in "<=":
        raise CalculusError(f"size must start with < or =: {text!r}")
    return Size(text[0], cof_from_name(text[1:].strip()))


@dataclass(frozen=True)
class Equal:
    left: PointclassDesc
    right: PointclassDesc


@dataclass(frozen=True)
class Closed:
    cls: PointclassDesc
    op: str
    size: Size


@dataclass(frozen=True)
class Verdict:
    answer: str
    trace: tuple[tuple[str, str], ...] = ()
    missing: tuple[str, ...] = ()

    def __post_init__(self):
        if self.answer not in ("holds", "fails", "unknown"):
            raise CalculusError(f"bad answer {self.answer!r}")
        if self.answer != "unknown" and not self.trace:
            raise CalculusError("a definite verdict needs a trace")

    @property
    def exit_code(self) -> int:
        return {"holds": 0, "fails": 1, "unknown": 2}[self.answer]


def _holds(trace) -> Verdict:
    return Verdict("holds", tuple(_dedup(trace)))


def _fails(trace) -> Verdict:
    return Verdict("fails", tuple(_dedup(trace)))


def _unknown(trace=(), missing=()) -> Verdict:
    return Verdict("unknown", tuple(_dedup(trace)), tuple(sorted(set(missing))))


def _dedup(trace):
    seen, out = set(), []
    for s in trace:
        if s not in seen:
            seen.add(s)
            out.append(s)
    return out


def audit(verdict: Verdict) -> list[str]:
    """Problems with a verdict's trace; empty when it is well-formed."""
    problems = []
    if verdict.answer != "unknown" and not verdict.trace:
        problems.append("definite verdict without trace")
    for rid, cit in verdict.trace:
        rule = RULES.get(rid)
        if rule is None:
            problems.append(f"unknown rule {rid}")
        elif rule.citation != cit:
            problems.append(f"citation mismatch for {rid}")
    return problems


# -- level arithmetic between the two bases ------------------------------------------


def _lt(a: OrdinalExpr, b: OrdinalExpr) -> bool:
    return ord_cmp(a, b) == "lt"


def _le(a: OrdinalExpr, b: OrdinalExpr) -> bool:
    return ord_cmp(a, b) in ("lt", "eq")


def plus_level_to_k(level: OrdinalExpr) -> OrdinalExpr:
    """Level 1+a at base k+ sits at level 1+2a at base k."""
    return ord_one_plus(ord_double(ord_drop_one(level)))


def k_level_to_plus(level: OrdinalExpr, rounding: str = "exact") -> OrdinalExpr:
    """Level 1+a at base k (a even) sits at level 1+a/2 at base k+.

    For odd a, ``rounding`` selects ``up`` (a+1) or ``down`` (a-1).
    """
    a = ord_drop_one(level)
    if a.tail % 2:
        if rounding == "up":
            a = a.with_tail(a.tail + 1)
        elif rounding == "down":
            a = a.with_tail(a.tail - 1)
        else:
            raise CalculusError(f"level {level} is odd at base k")
    return ord_one_plus(ord_half(a))


def _pred(level: OrdinalExpr) -> OrdinalExpr:
    return level.with_tail(level.tail - 1)


def _require_translation(ctx: CardinalContext, sa: SpaceAssumptions):
    missing = []
    if not ctx.singular:
        missing.append("singular kappa")
    if HYP not in sa:
        missing.append(HYP)
    if missing:
        raise MissingAssumption(missing)


def translate_order(fact: OrderFact, ctx: CardinalContext, sa: SpaceAssumptions) -> OrderFact:
    """Move an order fact to the other base; relations le, gt and ge."""
    _require_translation(ctx, sa)
    if fact.relation == "eq":
        raise CalculusError("split equalities into le and ge before translating")
    b = fact.bound
    if b is None:
        return OrderFact(fact.relation, None, K if fact.base == KPLUS else KPLUS, fact.subject)
    if fact.relation == "ge" and b.is_successor:
        b, rel = _pred(b), "gt"
        if b.is_zero:
            # ord >= 1 always
            return OrderFact("ge", ONE, K if fact.base == KPLUS else KPLUS, fact.subject)
    else:
        rel = fact.relation
    if fact.base == KPLUS:
        nb = plus_level_to_k(b)
        if rel == "gt":
            return OrderFact("gt", nb, K, fact.subject)
        return OrderFact(rel, nb, K, fact.subject)
    rounding = "up" if rel == "le" else "down"
    nb = k_level_to_plus(b, rounding)
    if rel == "ge":
        return OrderFact("ge", nb, KPLUS, fact.subject)
    return OrderFact(rel, nb, KPLUS, fact.subject)


# -- fact bookkeeping ------------------------------------------------------------------


@dataclass
class _Bounds:
    """What the facts say about ord at one base."""

    upper: list[tuple[OrdinalExpr | None, list]] = field(default_factory=list)
    # ("gt", m) means m < ord; ("ge", m) means m <= ord
    lower: list[tuple[str, OrdinalExpr, list]] = field(default_factory=list)

    def below(self, level: OrdinalExpr):
        """Trace showing ``level < ord``, or None."""
        for rel, m, tr in self.lower:
            c = ord_cmp(level, m)
            if c == "lt" or (c == "eq" and rel == "gt"):
                return tr
        return None

    def at_most(self, level: OrdinalExpr):
        """Trace showing ``ord <= level``, or None."""
        for m, tr in self.upper:
            if m is not None and _le(m, level):
                return tr
        return None


def _split(fact: OrderFact) -> list[OrderFact]:
    if fact.relation == "eq":
        return [OrderFact("le", fact.bound, fact.base, fact.subject),
                OrderFact("ge", fact.bound, fact.base, fact.subject)]
    return [fact]


def _bounds(facts: Iterable[OrderFact], ctx: CardinalContext, sa: SpaceAssumptions,
            subject: str = "sets") -> dict[str, _Bounds]:
    out = {K: _Bounds(), KPLUS: _Bounds()}
    can_translate = ctx.singular and HYP in sa
    for fact in facts:
        if fact.subject != subject:
            continue
        for f in _split(fact):
            items = [(f, [step("FACT")])]
            if can_translate:
                items.append((translate_order(f, ctx, sa), [step("FACT"), step("ORDER-TRANSLATE")]))
            for g, tr in items:
                b = out[g.base]
                if g.relation == "le":
                    b.upper.append((g.bound, tr))
                else:
                    b.lower.append((g.relation, g.bound, tr))
    for base, b in out.items():
        for m, _ in b.upper:
            if m is None:
                continue
            if b.below(m) is not None:
                raise InconsistentFacts(f"order facts at base {base} contradict each other")
    return out


# -- normal form -------------------------------------------------------------------


def normalize(p: PointclassDesc, ctx: CardinalContext, sa: SpaceAssumptions,
              trace: list | None = None) -> PointclassDesc:
    """Rewrite a base-k class in the k+ scale where possible."""
    tr = trace if trace is not None else []
    if p.base == KPLUS:
        tr.append(step("PARITY-PLUS"))
        return p
    _require_translation(ctx, sa)
    if p.kind == "Borel":
        tr.append(step("BOREL-SINGULAR"))
        return PointclassDesc("Borel", None, KPLUS)
    a = ord_drop_one(p.level)
    if a.is_even:
        tr.append(step("PARITY-EVEN"))
        return PointclassDesc(p.kind, ord_one_plus(ord_half(a)), KPLUS)
    tr.append(step("PARITY-ODD"))
    return PointclassDesc("Delta", p.level, K)


def dual(p: PointclassDesc) -> PointclassDesc:
    swap = {"Sigma": "Pi", "Pi": "Sigma"}
    return PointclassDesc(swap.get(p.kind, p.kind), p.level, p.base)


# -- inclusion -----------------------------------------------------------------------


def _to_scale(p: PointclassDesc, scale: str, ctx, sa, tr: list):
    """(kind, level) of ``p`` on the given scale."""
    if p.kind == "Borel":
        return ("Borel", None)
    if scale == KPLUS:
        return (p.kind, p.level)
    if p.base == KPLUS:
        tr.append(step("PARITY-EVEN"))
        return (p.kind, plus_level_to_k(p.level))
    if not ord_drop_one(p.level).is_even:
        if p.kind != "Delta":
            tr.append(step("PARITY-ODD"))
        return ("Delta", p.level)
    return (p.kind, p.level)


def _increasing(level: OrdinalExpr, scale: str, sa) -> list | None:
    """Trace showing the hierarchy increases from ``level`` on, or None."""
    if scale == K:
        return [step("INC-HYP")]
    if level != ONE:
        return [step("INC-ABOVE-2")]
    if INC in sa:
        return [step("INC-REG"), step("INC-ABOVE-2")]
    return None


def compare(p: PointclassDesc, q: PointclassDesc, ctx: CardinalContext, sa: SpaceAssumptions,
            facts: Sequence[OrderFact] = ()) -> Verdict:
    """Decide ``p <= q``."""
    if K in (p.base, q.base):
        try:
            _require_translation(ctx, sa)
        except MissingAssumption as exc:
            return _unknown(missing=exc.missing)
        scale = K if (p.kind != "Borel" and p.base == K) or (q.kind != "Borel" and q.base == K) else KPLUS
    else:
        scale = KPLUS
    tr: list = []
    kp, lp = _to_scale(p, scale, ctx, sa, tr)
    kq, lq = _to_scale(q, scale, ctx, sa, tr)
    if p.kind == "Borel" and p.base == K or q.kind == "Borel" and q.base == K:
        tr.append(step("BOREL-SINGULAR"))
    bnd = _bounds(facts, ctx, sa)[scale]
    missing: list[str] = []

    # positive
    if kq == "Borel":
        return _holds(tr + [step("BOREL-TOP")])
    if kp == "Borel":
        up = bnd.at_most(lq)
        if up is not None:
            return _holds(tr + up + [step("COLLAPSE-UP")])
        lo = bnd.below(lq)
        if lo is not None:
            return _fails(tr + lo + [step("BOREL-NOT-BELOW")])
        return _unknown(tr)
    c = ord_cmp(lp, lq)
    if c == "eq":
        if kp == kq:
            return _holds(tr + [step("REFL")])
        if kp == "Delta":
            return _holds(tr + [step("DELTA-SUB")])
    elif c == "lt":
        if kp == "Delta" and kq == "Delta":
            return _holds(tr + [step("DELTA-MONO")])
        inc = _increasing(lp, scale, sa)
        into_delta = None
        if inc is not None:
            into_delta = inc
        elif kp == "Delta":
            into_delta = [step("DELTA-MONO")]
        elif _lt(nat(2), lq):
            into_delta = [step("PI1-SIGMA2"), step("INC-ABOVE-2")]
        if into_delta is not None:
            extra = [] if kq == "Delta" else [step("DELTA-SUB")]
            return _holds(tr + into_delta + extra)
        if lp == ONE and lq == nat(2) and {kp, kq} == {"Sigma", "Pi"}:
            return _holds(tr + [step("PI1-SIGMA2")])
        missing.append(INC)
    if c != "incomparable":
        lo_lvl = lp if c == "lt" else lq
        up = bnd.at_most(lo_lvl)
        if up is not None:
            return _holds(tr + up + [step("COLLAPSE-UP")])

    # negative
    if c == "eq":
        lo = bnd.below(lq)
        if lo is not None:
            if kq == "Delta":
                rid = "PROPER-K" if scale == K else "PROPER-DELTA"
            else:
                rid = "SELF-DUAL-K" if scale == K else "SELF-DUAL-COLLAPSE"
            return _fails(tr + lo + [step(rid)])
    elif c == "gt":
        lo = bnd.below(lq)
        inc = _increasing(lq, scale, sa)
        if lo is not None and inc is not None:
            rid = "EQ-COLLAPSE-K" if scale == K else "EQ-COLLAPSE"
            return _fails(tr + lo + inc + [step(rid)])
        if lo is not None:
            missing.append(INC)
    return _unknown(tr, missing)


# -- closure -------------------------------------------------------------------------


_CARD_RANK = {CofClass.FINITE: 0, CofClass.OMEGA: 1, CofClass.KAPPA: 3}


def card_cmp(a: CofClass, b: CofClass, ctx: CardinalContext) -> str | None:
    """Compare two symbolic cardinals; None when undetermined."""
    a, b = ctx.resolve(a), ctx.resolve(b)
    if a == b:
        return None if a is CofClass.OTHER_LT_KAPPA else "eq"
    ra, rb = _CARD_RANK.get(a, 2), _CARD_RANK.get(b, 2)
    if ra == rb:
        # cof_kappa against some other uncountable cardinal below kappa
        return None
    return "lt" if ra < rb else "gt"


def alpha_hat(level: OrdinalExpr, ctx: CardinalContext) -> CofClass:
    """cof(kappa) at successor levels, cof(level) at limits."""
    if level.is_successor:
        return ctx.resolve(CofClass.COF_KAPPA)
    return ctx.resolve(ord_cof(level))


def _size_below(size: Size, thr: CofClass, ctx) -> bool | None:
    """Is every family of this size strictly smaller than ``thr``?"""
    c = card_cmp(size.card, thr, ctx)
    if c is None:
        return None
    if size.rel == "<":
        return c in ("lt", "eq")
    return c == "lt"


def _size_reaches(size: Size, thr: CofClass, ctx) -> bool | None:
    """Does the size admit a family of exactly ``thr`` members?"""
    c = card_cmp(size.card, thr, ctx)
    if c is None:
        return None
    if size.rel == "<":
        return c == "gt"
    return c in ("gt", "eq")


OPS = ("union", "intersection", "complement")


def closure(p: PointclassDesc, op: str, size: Size | None, ctx: CardinalContext,
            sa: SpaceAssumptions, facts: Sequence[OrderFact] = ()) -> Verdict:
    """Is ``p`` closed under the operation applied to families of ``size``?"""
    if op not in OPS:
        raise CalculusError(f"op must be one of {OPS}")
    if op != "complement" and size is None:
        raise CalculusError("unions and intersections need a size")
    tr: list = []
    if p.base == K:
        try:
            p = normalize(p, ctx, sa, tr)
        except MissingAssumption as exc:
            return _unknown(missing=exc.missing)
    bnd = _bounds(facts, ctx, sa)
    if p.kind == "Borel":
        return _holds(tr + [step("BOREL-ALGEBRA")])
    b = bnd[p.base]
    up = b.at_most(p.level)
    if up is not None:
        return _holds(tr + up + [step("COLLAPSE-UP"), step("BOREL-ALGEBRA")])
    below = b.below(p.level)

    if p.base == K:
        # odd level: self-dual cof(kappa)-algebra
        if op == "complement":
            return _holds(tr + [step("CLOSURE-K-ODD")])
        thr = ctx.resolve(CofClass.COF_KAPPA)
        if _size_below(size, thr, ctx):
            return _holds(tr + [step("CLOSURE-K-ODD")])
        if below is not None and _size_reaches(size, thr, ctx):
            return _fails(tr + below + [step("OPT-K-ODD")])
        return _unknown(tr)

    level = p.level
    if op == "complement":
        if p.kind == "Delta":
            return _holds(tr + [step("COMPLEMENT-DELTA")])
        opt = _optimality(ctx, sa)
        if below is not None and opt[0] is not None:
            return _fails(tr + below + opt[0])
        return _unknown(tr, opt[1] if below is not None else ())
    big = {"Sigma": "union", "Pi": "intersection"}.get(p.kind)
    if op == big:
        rid = "CLOSURE-LEVEL1" if level == ONE and p.kind == "Sigma" else "CLOSURE-PLUS"
        return _holds(tr + [step(rid)])
    # the "small" operation: bounded by hat(level)
    thr = alpha_hat(level, ctx)
    missing: list[str] = []
    if level == ONE and p.kind != "Delta":
        finite = size.card is CofClass.FINITE or (size.rel == "<" and size.card is CofClass.OMEGA)
        if finite:
            return _holds(tr + [step("CLOSURE-LEVEL1")])
        if _size_below(size, thr, ctx):
            if "cofk_additive" in sa:
                return _holds(tr + [step("CLOSURE-LEVEL1")])
            missing.append("cofk_additive")
    elif _size_below(size, thr, ctx):
        return _holds(tr + [step("CLOSURE-PLUS")])
    if below is not None and _size_reaches(size, thr, ctx):
        opt, miss = _optimality(ctx, sa)
        if p.kind == "Delta" and level == ONE and "subspace_of_cantor" not in sa:
            opt, miss = None, ["subspace_of_cantor"]
        if opt is not None:
            return _fails(tr + below + opt)
        missing += miss
    return _unknown(tr, missing)


def _optimality(ctx, sa):
    if not ctx.singular:
        return [step("OPT-REG")], []
    if HYP in sa:
        return [step("OPT-SING")], []
    return None, [HYP]


# -- collapse ------------------------------------------------------------------------


def _evidence_bounds(item, ctx, sa) -> list[tuple[OrdinalExpr, str, list]]:
    """Upper bounds ``(m, base, trace)`` for ord(base) implied by one item."""
    out = []
    if isinstance(item, Equal):
        l, r = item.left, item.right
        if "Borel" in (l.kind, r.kind):
            other = r if l.kind == "Borel" else l
            if other.kind == "Borel":
                return []
            if other.base == K:
                try:
                    _require_translation(ctx, sa)
                except MissingAssumption:
                    return []
            return [(other.level, other.base, [step("ORDER-DEF")])]
        if K in (l.base, r.base):
            try:
                _require_translation(ctx, sa)
            except MissingAssumption:
                return []
            scale = K
        else:
            scale = KPLUS
        tr = []
        kl, ll = _to_scale(l, scale, ctx, sa, tr)
        kr, lr = _to_scale(r, scale, ctx, sa, tr)
        c = ord_cmp(ll, lr)
        if c == "incomparable":
            return []
        if c == "eq":
            if kl == kr:
                return []
            if scale == K and not ord_drop_one(ll).is_even:
                return []
            if "Delta" in (kl, kr):
                rid = "PROPER-K" if scale == K else "PROPER-DELTA"
            else:
                rid = "SELF-DUAL-K" if scale == K else "SELF-DUAL-COLLAPSE"
            out.append((ll, scale, tr + [step(rid)]))
        else:
            lo = ll if c == "lt" else lr
            inc = _increasing(lo, scale, sa)
            if inc is not None:
                rid = "EQ-COLLAPSE-K" if scale == K else "EQ-COLLAPSE"
                out.append((lo, scale, tr + inc + [step(rid)]))
    elif isinstance(item, Closed):
        p, op, size = item.cls, item.op, item.size
        tr = []
        if p.kind == "Borel":
            return []
        if p.base == K:
            try:
                p = normalize(p, ctx, sa, tr)
            except MissingAssumption:
                return []
        if p.base == K:
            big = size is not None and card_cmp(size.card, CofClass.KAPPA, ctx) == "eq" and size.rel == "="
            if op in ("union", "intersection") and big and ord_drop_one(p.level) != nat(0):
                out.append((p.level, K, tr + [step("COLLAPSE-CLOSED-K")]))
            return out
        if op == "complement" and p.kind != "Delta":
            out.append((p.level, KPLUS, tr + [step("SELF-DUAL-COLLAPSE")]))
            return out
        if size is None or not (size.rel == "=" and ctx.resolve(size.card) is CofClass.KAPPA):
            return out
        small = {"Sigma": ("intersection",), "Pi": ("union",), "Delta": ("union", "intersection")}[p.kind]
        if op not in small:
            return out
        lvl = p.level
        if _lt(nat(2), lvl):
            out.append((lvl, KPLUS, tr + [step("INC-ABOVE-2"), step("COLLAPSE-CLOSED")]))
        elif lvl == nat(2) and INC in sa:
            out.append((lvl, KPLUS, tr + [step("INC-REG"), step("COLLAPSE-CLOSED")]))
    elif isinstance(item, OrderFact):
        pass
    else:
        raise CalculusError(f"unsupported evidence {item!r}")
    return out


def collapse_criteria(evidence: Sequence, target: OrdinalExpr, ctx: CardinalContext,
                      sa: SpaceAssumptions, base: str = KPLUS,
                      facts: Sequence[OrderFact] = ()) -> Verdict:
    """Decide ``ord(base) <= target`` from pointclass evidence and order facts."""
    facts = list(facts) + [e for e in evidence if isinstance(e, OrderFact)]
    bnd = _bounds(facts, ctx, sa)
    if base == K:
        try:
            _require_translation(ctx, sa)
        except MissingAssumption as exc:
            return _unknown(missing=exc.missing)
    derived = []
    for item in evidence:
        for m, b, tr in _evidence_bounds(item, ctx, sa):
            derived.append((m, b, tr))
            if b != base:
                f = translate_order(OrderFact("le", m, b), ctx, sa)
                derived.append((f.bound, base, tr + [step("ORDER-TRANSLATE")]))
    for m, b, tr in derived:
        for bb in (K, KPLUS):
            if bb != b:
                continue
            if bnd[bb].below(m) is not None:
                raise InconsistentFacts("evidence contradicts the order facts")
    own = bnd[base]
    up = own.at_most(target)
    if up is not None:
        return _holds(up)
    for m, b, tr in derived:
        if b == base and _le(m, target):
            return _holds(tr)
    lo = own.below(target)
    if lo is not None:
        return _fails(lo)
    return _unknown()


# -- universal sets ------------------------------------------------------------------


def universal_exists(p: PointclassDesc, over: str, ctx: CardinalContext, sa: SpaceAssumptions,
                     facts: Sequence[OrderFact] = ()) -> Verdict:
    """Is there a universal set for ``p``?

    ``over="cantor"`` parametrizes by the generalized Cantor space, and
    the negative answers then concern classes on that space; ``over="self"``
    parametrizes by the space itself.
    """
    if over not in ("cantor", "self"):
        raise CalculusError("over must be cantor or self")
    tr: list = []
    if p.base == K:
        try:
            p = normalize(p, ctx, sa, tr)
        except MissingAssumption as exc:
            return _unknown(missing=exc.missing)
    if p.kind in ("Delta", "Borel") and p.base == KPLUS or p.base == K:
        if p.base == K and over == "cantor":
            return _fails(tr + [step("UNIV-K-ODD")])
        if over == "self":
            return _fails(tr + [step("UNIV-SELFDUAL")])
        if "has_cantor_copy" in sa:
            return _fails(tr + [step("UNIV-SELF"), step("UNIV-SELFDUAL")])
        return _unknown(tr, ["has_cantor_copy"])
    # Sigma / Pi at base k+
    if over == "cantor":
        return _holds(tr + [step("UNIV-SIGMA-PI")])
    if "has_cantor_copy" in sa:
        return _holds(tr + [step("UNIV-SIGMA-PI"), step("UNIV-SELF")])
    up = _bounds(facts, ctx, sa)[KPLUS].at_most(p.level)
    if up is not None:
        return _fails(tr + up + [step("COLLAPSE-UP"), step("UNIV-SELFDUAL")])
    return _unknown(tr, ["has_cantor_copy"])


def function_hierarchy_order(fact: OrderFact, target_hausdorff_two_points: bool) -> OrderFact:
    """Copy an order fact between the set and function hierarchies."""
    if not target_hausdorff_two_points:
        raise MissingAssumption(["hausdorff target with at least two points"])
    if fact.base != KPLUS:
        raise CalculusError("the function hierarchy is indexed at base k+")
    other = "functions" if fact.subject == "sets" else "sets"
    return OrderFact(fact.relation, fact.bound, fact.base, other)


# -- JSON contexts -------------------------------------------------------------------


def parse_fact(obj: dict) -> OrderFact:
    body = obj.get("ord", obj)
    bound = str(body["bound"]).strip()
    b = None if bound in ("k+", "kappa+", "top") else parse_ordinal(bound)
    base = body.get("base", KPLUS)
    return OrderFact(body["rel"], b, base, body.get("subject", "sets"))


def parse_evidence(obj: dict):
    if "eq" in obj:
        l, r = obj["eq"]
        return Equal(parse_pointclass(l), parse_pointclass(r))
    if "closed" in obj:
        c = obj["closed"]
        size = parse_size(c["size"]) if c.get("size") else None
        return Closed(parse_pointclass(c["class"]), c["op"], size)
    if "ord" in obj:
        return parse_fact(obj)
    raise CalculusError(f"unrecognized evidence {obj!r}")


def load_context(obj: dict) -> tuple[CardinalContext, SpaceAssumptions, list[OrderFact], list]:
    kind = obj.get("kappa", "regular")
    cof = obj.get("cof_kappa", "kappa" if kind == "regular" else "omega")
    ctx = CardinalContext(kind, cof_from_name(cof))
    sa = SpaceAssumptions(frozenset(obj.get("space", ())))
    facts = [parse_fact(f) for f in obj.get("facts", ())]
    evidence = [parse_evidence(e) for e in obj.get("evidence", ())]
    return ctx, sa, facts, evidence
