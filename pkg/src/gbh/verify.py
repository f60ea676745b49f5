"""Acceptance checks with independent brute-force oracles.

Each check returns a ``CheckResult``; ``run_all`` runs them in order.
"""

from __future__ import annotations

import inspect
import itertools
import random
import time
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from . import borelcodes as bc
from . import calculus as calc
from . import forcinglab as fl
from . import ordinals as o
from . import spacelab as sl
from . import treemaps as tm


@dataclass
class CheckResult:
    key: str
    title: str
    ok: bool
    detail: str
    elapsed: float
    limit: float
    notes: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.ok and self.elapsed <= self.limit

    def line(self, timing: bool = True) -> str:
        status = "PASS" if self.passed else "FAIL"
        t = f" [{self.elapsed:.2f}s / {self.limit:g}s]" if timing else ""
        slow = " (over the time limit)" if self.ok and not self.passed else ""
        return f"{status} {self.key} {self.title}: {self.detail}{slow}{t}"


class _Check:
    def __init__(self, key: str, title: str, limit: float):
        self.key, self.title, self.limit = key, title, limit
        self.failures: list[str] = []
        self.count = 0

    def expect(self, cond: bool, msg):
        """``msg`` may be a callable so passing checks skip the formatting."""
        self.count += 1
        if not cond and len(self.failures) < 5:
            self.failures.append(msg() if callable(msg) else msg)
        elif not cond:
            self.failures.append("")

    def result(self, start: float, what: str) -> CheckResult:
        el = time.perf_counter() - start
        ok = not self.failures
        detail = f"{self.count} {what} checked" if ok else \
            f"{len(self.failures)} failures, first: {'; '.join(f for f in self.failures[:3] if f)}"
        return CheckResult(self.key, self.title, ok, detail, el, self.limit)


# -- 1. ordinals ------------------------------------------------------------------------


def _triple_text(a: int, b: int, c: int) -> str:
    parts = []
    if a:
        parts.append("w^2" + (f"*{a}" if a > 1 else ""))
    if b:
        parts.append("w" + (f"*{b}" if b > 1 else ""))
    if c or not parts:
        parts.append(str(c))
    return " + ".join(parts)


def _normal(e: o.OrdinalExpr) -> bool:
    prev = None
    for ex, c in e.terms:
        if c <= 0 or not _normal(ex):
            return False
        if prev is not None and o.ord_cmp(ex, prev) != "lt":
            return False
        prev = ex
    return True


def check_ordinals(seed: int = 7) -> CheckResult:
    ck = _Check("C1", "ordinal arithmetic vs triple oracle", 1.0)
    start = time.perf_counter()
    rng = random.Random(seed)
    triples = [(rng.randint(0, 9), rng.randint(0, 9), rng.randint(0, 12)) for _ in range(500)]
    ords = [o.parse(_triple_text(*t)) for t in triples]
    for t, a in zip(triples, ords):
        ck.expect(_normal(a), lambda: f"{a} not normal")
        ck.expect(o.parse(str(a)) == a, lambda: f"{a} does not round-trip")
        ck.expect(a.is_even == (t[2] % 2 == 0), lambda: f"parity of {a}")
        ck.expect(o.ord_succ(a).is_even != a.is_even, lambda: f"parity does not alternate at {a}")
        ck.expect(o.ord_half(o.ord_double(a)) == a, lambda: f"half(double({a}))")
        if t[2] % 2 == 0:
            ck.expect(o.ord_double(o.ord_half(a)) == a, lambda: f"double(half({a}))")
    rel = {-1: "lt", 0: "eq", 1: "gt"}
    for (ta, a), (tb, b) in itertools.product(list(zip(triples, ords))[:250], list(zip(triples, ords))[250:]):
        want = rel[(ta > tb) - (ta < tb)]
        if o.ord_cmp(a, b) != want:
            ck.expect(False, lambda: f"cmp({a},{b})")
    ck.count += 250 * 250
    cofs = ["omega", "cofk", "oltk", "kappa"]
    lams = [(cofs[i % 4], rng.randint(0, 20)) for i in range(50)]
    lam_ords = [o.parse(f"L({c})" + (f"+{n}" if n else "")) for c, n in lams]
    for (c, n), a in zip(lams, lam_ords):
        ck.expect(o.parse(str(a)) == a, lambda: f"{a} round-trip")
        ck.expect(o.ord_succ(a).is_even != a.is_even, lambda: f"parity at {a}")
        ck.expect(o.ord_half(o.ord_double(a)) == a, lambda: f"half(double({a}))")
        if n % 2 == 0:
            ck.expect(o.ord_double(o.ord_half(a)) == a, lambda: f"double(half({a}))")
        for pure in ords[:20]:
            ck.expect(o.ord_cmp(a, pure) == "gt" and o.ord_cmp(pure, a) == "lt", lambda: f"{a} vs {pure}")
    for (ca, na), a in zip(lams, lam_ords):
        for (cb, nb), b in zip(lams, lam_ords):
            want = "incomparable" if ca != cb else rel[(na > nb) - (na < nb)]
            ck.expect(o.ord_cmp(a, b) == want, lambda: f"cmp({a},{b})")
    return ck.result(start, "ordinal facts")


# -- 2 and 3. parity and order translation ---------------------------------------------


def _sample_levels() -> list[o.OrdinalExpr]:
    out = [o.nat(n) for n in range(1, 25)]
    out += [o.parse(f"w*{k}+{n}") if n else o.parse(f"w*{k}") for k in (1, 2, 3) for n in range(8)]
    out += [o.parse(f"w^2+w*{k}+{n}") for k in range(3) for n in range(5)]
    out += [o.parse(f"L({c})+{n}") if n else o.parse(f"L({c})")
            for c in ("omega", "cofk", "oltk", "kappa") for n in range(6)]
    return out


def _singular_ctx():
    return (calc.CardinalContext("singular", o.CofClass.OMEGA),
            calc.space("opens_are_cofk_unions_of_closed"))


def check_parity() -> CheckResult:
    ck = _Check("C2", "parity normal form", 1.0)
    start = time.perf_counter()
    ctx, sa = _singular_ctx()
    for level in _sample_levels():
        alpha = o.ord_drop_one(level)
        for kind in ("Sigma", "Pi", "Delta"):
            p = calc.PointclassDesc(kind, level, calc.K)
            n = calc.normalize(p, ctx, sa)
            ck.expect(calc.normalize(n, ctx, sa) == n, lambda: f"normalize not idempotent at {p}")
            if alpha.is_even:
                ok = n.base == calc.KPLUS and n.kind == kind and \
                    o.ord_double(o.ord_drop_one(n.level)) == alpha
                ck.expect(ok, lambda: f"{p} -> {n}")
            else:
                ck.expect(n == calc.PointclassDesc("Delta", level, calc.K), lambda: f"{p} -> {n}")
    return ck.result(start, "normal forms")


def check_translation() -> CheckResult:
    ck = _Check("C3", "order translation between bases", 1.0)
    start = time.perf_counter()
    ctx, sa = _singular_ctx()
    for level in _sample_levels():
        f = calc.OrderFact("le", level, calc.KPLUS)
        g = calc.translate_order(f, ctx, sa)
        back = calc.translate_order(g, ctx, sa)
        ck.expect(back == f, lambda: f"{f} -> {g} -> {back}")
        if level.is_limit:
            ck.expect(g.bound == level, lambda: f"limit {level} moved to {g.bound}")
        else:
            want = o.ord_one_plus(o.ord_double(o.ord_drop_one(level)))
            ck.expect(g.bound == want, lambda: f"{f} -> {g}")
    return ck.result(start, "translations")


# -- 4. consistency of the rule engine -------------------------------------------------


def _random_context(rng: random.Random):
    if rng.random() < 0.5:
        ctx = calc.CardinalContext()
    else:
        ctx = calc.CardinalContext("singular", rng.choice([o.CofClass.OMEGA, o.CofClass.OTHER_LT_KAPPA]))
    flags = [f for f in calc.FLAGS if rng.random() < 0.35]
    sa = calc.SpaceAssumptions(frozenset(flags))
    levels = [o.nat(n) for n in range(1, 8)] + [o.OMEGA, o.parse("w+1"), o.parse("w+2"), o.parse("L(cofk)")]
    true = rng.choice(levels + [None])  # None: the k+ ceiling
    facts = []
    for _ in range(rng.randint(0, 3)):
        m = rng.choice(levels)
        below = true is None or o.ord_cmp(m, true) == "lt"
        if below:
            facts.append(calc.OrderFact("gt", m, calc.KPLUS))
        elif true is not None and o.ord_cmp(true, m) in ("lt", "eq"):
            facts.append(calc.OrderFact("le", m, calc.KPLUS))
    return ctx, sa, facts, levels


def check_consistency(seed: int = 7) -> CheckResult:
    ck = _Check("C4", "rule engine consistency", 5.0)
    start = time.perf_counter()
    rng = random.Random(seed)
    kappa = calc.Size("=", o.CofClass.KAPPA)
    for _ in range(200):
        ctx, sa, facts, levels = _random_context(rng)
        for lvl in levels:
            v1 = calc.closure(calc.PointclassDesc("Sigma", lvl, calc.KPLUS), "intersection", kappa, ctx, sa, facts)
            v2 = calc.collapse_criteria([], lvl, ctx, sa, facts=facts)
            ck.expect(not (v1.answer == "holds" and v2.answer == "fails"),
                      lambda: f"closed under kappa-intersections at {lvl} yet ord > {lvl}")
            for v in (v1, v2):
                ck.expect(not calc.audit(v), lambda: f"bad trace {calc.audit(v)}")
            for kp, kq in (("Sigma", "Pi"), ("Delta", "Sigma"), ("Sigma", "Delta")):
                p = calc.PointclassDesc(kp, lvl, calc.KPLUS)
                q = calc.PointclassDesc(kq, lvl, calc.KPLUS)
                v = calc.compare(p, q, ctx, sa, facts)
                ck.expect(not calc.audit(v), lambda: f"bad trace for {p} <= {q}")
                if v.answer == "holds" and kp != "Delta":
                    ck.expect(v2.answer != "fails", lambda: f"{p} <= {q} holds while ord > {lvl}")
    return ck.result(start, "queries")


# -- 5 and 6. Borel codes -----------------------------------------------------------------


def _shape_formula(shape: frozenset[str]):
    """Membership formula of a tree shape, written out independently."""
    kids = {s: sorted(t for t in shape if t and t[:-1] == s) for s in shape}
    leaves = sorted(s for s in shape if not kids[s])

    def expr(s: str) -> str:
        if not kids[s]:
            return f"v[{leaves.index(s)}]"
        return "(" + " and ".join(f"not {expr(t)}" for t in kids[s]) + ")"

    return leaves, eval("lambda v: " + expr(""))  # noqa: S307 - generated from the shape only


def _shape_rank(shape: frozenset[str]) -> int:
    """Height of the tree: the longest root-to-leaf path."""
    return max(len(s) for s in shape)


def check_codes_exhaustive(max_nodes: int = 7) -> CheckResult:
    """Every code up to ``max_nodes`` nodes against the point oracle.

    Combinator identities run on a nested sub-corpus to stay in budget:
    complement on codes up to 6 nodes, union, intersection and De Morgan
    against a rotating leaf partner up to 5 nodes and against every leaf
    up to 4 nodes.
    """
    ck = _Check("C5", "code interpretation vs point oracle", 10.0)
    start = time.perf_counter()
    sp = sl.FiniteSpace.build(2, 2)
    pts = sp.sorted_points()
    stems = list(sp.stems(2))
    pref = [[x[: len(st)] == st for x in pts] for st in stems]
    full = (1 << len(pts)) - 1
    leaf_codes = [(bc.leaf(st), bc.interpret_mask(bc.leaf(st), sp)) for st in stems]
    turn = 0

    def binary(code, got, other, om):
        u = bc.interpret_mask(bc.union(code, other), sp)
        i = bc.interpret_mask(bc.intersection(code, other), sp)
        ck.expect(u == got | om and i == got & om, lambda: f"union/intersection at {code.to_json()}")
        dm1 = bc.interpret_mask(bc.complement(bc.union(code, other)), sp)
        dm2 = bc.interpret_mask(bc.intersection(bc.complement(code), bc.complement(other)), sp)
        ck.expect(dm1 == dm2, lambda: f"De Morgan at {code.to_json()}")

    # sorted-point bit order matches the library's mask order by construction
    for shape in bc.tree_shapes(max_nodes):
        leaves, fn = _shape_formula(shape)
        base = bc.CodeTree(shape, {s: () for s in leaves})
        size = len(shape)
        r = bc.code_rank(base)
        ck.expect(r == _shape_rank(shape), lambda: f"rank of {sorted(shape)}")
        lf = bc.leaf(())
        ck.expect(bc.code_rank(bc.complement(base)) == r + 1, "complement rank")
        ck.expect(bc.code_rank(bc.union(base, lf)) <= r + 2, "union rank")
        ck.expect(bc.code_rank(bc.intersection(base, base)) <= max(r, 2), "intersection rank")
        for labs in itertools.product(range(len(stems)), repeat=len(leaves)):
            code = base.relabel(dict(zip(leaves, (stems[i] for i in labs))))
            got = bc.interpret_mask(code, sp)
            want = 0
            for j in range(len(pts)):
                if fn([pref[i][j] for i in labs]):
                    want |= 1 << j
            if got != want:
                ck.expect(False, lambda: f"{code.to_json()}")
            ck.count += 1
            if size <= 6:
                ck.expect(bc.interpret_mask(bc.complement(code), sp) == full & ~got, "complement")
            if size <= 4:
                for other, om in leaf_codes:
                    binary(code, got, other, om)
            elif size <= 5:
                turn = (turn + 1) % len(leaf_codes)
                binary(code, got, *leaf_codes[turn])
    return ck.result(start, "codes and identities")


def check_canonical(seed: int = 7) -> CheckResult:
    ck = _Check("C6", "canonical trees project onto the coded set", 30.0)
    start = time.perf_counter()
    rng = random.Random(seed)
    sp = sl.FiniteSpace.build(2, 2)
    stems = list(sp.stems())
    for _ in range(100):
        code = bc.random_code(rng, 6, stems)
        tree = bc.canonical_tree(code, sp)
        coded = set(bc.interpret(code, sp).members)
        ck.expect(tree.project() == coded, lambda: f"projection differs for {code.to_json()}")
        ck.expect(tree.branches() == bc.brute_force_triples(code, sp),
                  lambda: f"triples differ for {code.to_json()}")
    return ck.result(start, "codes")


# -- 7. universal sets ----------------------------------------------------------------------


def check_universal() -> CheckResult:
    ck = _Check("C7", "universal sets and pairing", 5.0)
    start = time.perf_counter()
    sp = sl.FiniteSpace.build(2, 2)
    all_basic = [sl.basic(sp, s) for s in sp.stems()]
    pts = sp.points
    for L in range(1, 7):
        for basis in itertools.combinations(all_basic, L):
            u = sl.build_universal(1, sp, basis)
            ck.expect(u.sections() == sl.open_sets(basis), lambda: f"level 1, L={L}")
            emb = sl.embed_into_cantor(list(basis)) if _t0(basis) else None
            if emb is not None:
                for s in itertools.product((0, 1), repeat=min(L, 3)):
                    pre = {x for x in pts if emb[x][: len(s)] == s}
                    ck.expect(sl.cylinder_preimage(basis, s).members == pre, "cylinder preimage")
        basis = all_basic[:L]
        opens = sl.open_sets(basis)
        for m in range(1, 5):
            if m * L > 12:
                continue
            u = sl.build_universal(2, sp, basis, m)
            want = set()
            for fam in itertools.product(opens, repeat=m):
                want.add(frozenset().union(*(pts - O for O in fam)))
            ck.expect(u.sections() == want, lambda: f"level 2, L={L}, m={m}")
    for L in range(1, 7):
        for m in range(1, 5):
            codes = [sl.pair(d, i, L) for d in range(m) for i in range(L)]
            ck.expect(sorted(codes) == list(range(m * L)), lambda: f"pairing L={L} m={m}")
            ck.expect(all(sl.unpair(sl.pair(d, i, L), L) == (d, i) for d in range(m) for i in range(L)),
                      "unpair")
    return ck.result(start, "sections and pairings")


def _t0(basis) -> bool:
    rows = {tuple(x in U.members for U in basis) for x in basis[0].space.points}
    return len(rows) == len(basis[0].space.points)


# -- 8. tree maps ----------------------------------------------------------------------------


def check_tree_maps() -> CheckResult:
    ck = _Check("C8", "perfect-image criteria on tree maps", 60.0)
    start = time.perf_counter()
    src = tm.FiniteTree.full(range(2), 1)
    n_total = 0
    for depth in (2, 3):
        tgt = tm.product_tree(3, 2, depth)
        for phi in tm.order_preserving_maps(src, tgt):
            n_total += 1
            try:
                tm.check_exists_perfect(phi)
            except tm.CharacterizationMismatch as exc:
                ck.expect(False, str(exc))
                continue
            props = tm.check_order_props(phi)
            reach = all(len(phi(x)) >= depth for x in src.branches())
            if props.strict and reach:
                ck.expect(tm.composition_identity(phi), lambda: f"composition at {dict(phi.phi)}")
                if props.order_embedding:
                    ck.expect(tm.closed_image_check(phi), lambda: f"closed image at {dict(phi.phi)}")
            ck.count += 1
    ck.expect(n_total >= 10_000, lambda: f"only {n_total} maps")
    return ck.result(start, "maps and identities")


# -- 9. forcing laws ---------------------------------------------------------------------------


def _forcing_instance(n_points: int) -> fl.AlphaForcing:
    sp = sl.FiniteSpace.build(2, 2)
    X = sp.sorted_points()[:n_points]
    return fl.AlphaForcing.build(2, 3, sp, X, A=[X[0]], B=[X[-1]], s_max=2)


def forcing_laws(F: fl.AlphaForcing, ck: _Check):
    conds = list(F.conditions())
    n = len(conds)
    index = {p: i for i, p in enumerate(conds)}
    # L[r, p]: r is stronger than p
    # built from subset bitmasks, then cross-checked against F.leq
    L = np.ones((n, n), dtype=bool)
    for part in ("f", "R"):
        items = sorted({e for c in conds for e in getattr(c, part)})
        if len(items) > 64:
            raise ValueError("bitmask words hold 64 items")
        bit = {e: np.uint64(1) << np.uint64(k) for k, e in enumerate(items)}
        m = np.array([sum((int(bit[e]) for e in getattr(c, part)), 0) for c in conds], dtype=np.uint64)
        L &= (m[None, :] & ~m[:, None]) == 0
    rng = random.Random(0)
    related = np.argwhere(L)
    for i, j in related:
        ck.expect(F.leq(conds[i], conds[j]), "leq disagrees with subset order")
    for _ in range(200_000):
        i, j = rng.randrange(n), rng.randrange(n)
        ck.expect(F.leq(conds[i], conds[j]) == bool(L[i, j]), "leq disagrees with subset order")
    ck.expect(bool(L.diagonal().all()), "reflexivity")
    ck.expect(not bool((L & L.T & ~np.eye(n, dtype=bool)).any()), "antisymmetry")
    Lf = L.astype(np.float32)
    ck.expect(not bool(((Lf @ Lf) > 0)[~L].any()), "transitivity")
    ck.count += 3

    C = np.zeros((n, n), dtype=bool)  # logical compatibility
    # common[i, j] counts the common extensions of i and j; with transitivity
    # already checked, L[:, k] is inside that set for any lower bound k, so a
    # count match means k is the greatest lower bound
    common = (Lf.T @ Lf).round().astype(np.int64)
    below = L.sum(axis=0)
    meets = []
    for i in range(n):
        for j in range(i, n):
            p, q = conds[i], conds[j]
            try:
                m = F.meet(p, q)
            except fl.Incompatible:
                ck.expect(common[i, j] == 0, lambda: f"incompatible {p} / {q} have a common extension")
                continue
            except fl.BudgetExceeded:
                C[i, j] = C[j, i] = True
                ck.expect(common[i, j] == 0, "over-budget meet yet a bounded common extension")
                continue
            C[i, j] = C[j, i] = True
            k = index[m]
            ck.expect(L[k, i] and L[k, j] and common[i, j] == below[k],
                      lambda: f"meet of {p} and {q} is not the glb")
            meets.append((i, j, k))
    ck.count += n * (n + 1) // 2
    # compatibility by meets agrees with the direct test on a sample
    rng = random.Random(1)
    for _ in range(2000):
        i, j = rng.randrange(n), rng.randrange(n)
        ck.expect(F.compatible(conds[i], conds[j]) == bool(C[i, j]), "compatible() disagrees with meet")

    # density below the budget frontier
    small = np.array([p.size < F.s_max for p in conds])
    for t in F.template.internal():
        for x in sorted(F.X):
            D = np.array([F.in_dense(t, x, p) for p in conds], dtype=np.float32)
            reach = (Lf.T @ D) > 0
            ck.expect(bool(reach[small].all()), lambda: f"D<{t},{x}> not dense")
            for p in conds:
                if p.size < F.s_max:
                    q = F.extend_into(t, x, p)
                    ck.expect(F.leq(q, p) and F.in_dense(t, x, q) and F.is_condition(q), "extend_into")

    # crank is a max over the meet
    subsets = [frozenset(s) for r in range(len(F.X) + 1) for s in itertools.combinations(sorted(F.X), r)]
    if meets:
        mi = np.array(meets)
        for H in subsets:
            cr = np.array([F.crank(p, H) for p in conds])
            ck.expect(bool((cr[mi[:, 2]] == np.maximum(cr[mi[:, 0]], cr[mi[:, 1]])).all()), "crank max law")
            ck.count += len(meets)

    # projection: restriction compatible with low-rank r implies p compatible with r
    for H in subsets:
        low = np.array([F.crank(r, H) < 1 for r in conds])
        for i, p in enumerate(conds):
            q = F.restrict(p, H, 1)
            k = index[q]
            ck.expect(F.leq(p, q), "restriction is weaker")
            bad = low & C[k] & ~C[i]
            ck.expect(not bool(bad.any()), lambda: f"projection fails for {p}, H={sorted(H)}")
    ck.count += len(subsets) * n * n

    # linked reduction
    maps = [F.linked_map(p) for p in conds]
    r_only = [index[fl.Condition(frozenset(), p.R)] for p in conds]
    for i in range(n):
        for j in range(i, n):
            star = bool(C[r_only[i], r_only[j]])
            ck.expect(star == F.star_compatible(conds[i], conds[j]), "star compatibility")
            if F.functions_compatible(maps[i][1], maps[j][1]):
                ck.expect(star, lambda: f"linked map compatible but not star: {conds[i]} / {conds[j]}")
            if star and maps[i][0] == maps[j][0]:
                ck.expect(bool(C[i, j]), lambda: f"star and equal labels but incompatible: {conds[i]} / {conds[j]}")
    return n


def check_forcing(sizes=(2, 3)) -> CheckResult:
    ck = _Check("C9", "forcing poset laws", 300.0)
    start = time.perf_counter()
    counts = []
    for k in sizes:
        counts.append(forcing_laws(_forcing_instance(k), ck))
    res = ck.result(start, f"law instances over {counts} conditions")
    return res


# -- 10. generic conditions -------------------------------------------------------------------


def check_generic(seed: int = 7, runs: int = 50) -> CheckResult:
    ck = _Check("C10", "generic codes interpret their promises", 30.0)
    start = time.perf_counter()
    rng = random.Random(seed)
    sp = sl.FiniteSpace.build(2, 2)
    pts = sp.sorted_points()
    for run in range(runs):
        X = rng.sample(pts, rng.choice([2, 3]))
        roles = [rng.choice("AB-") for _ in X]
        A = [x for x, r in zip(X, roles) if r == "A"]
        B = [x for x, r in zip(X, roles) if r == "B"]
        F = fl.AlphaForcing.build(2, 3, sp, X, A, B, s_max=64)
        try:
            g = fl.build_generic(F, fl.standard_dense_list(F), seed=rng.randrange(1 << 30))
        except fl.Stuck as exc:
            ck.expect(False, lambda: f"run {run}: {exc}")
            continue
        ck.expect(F.is_condition(g), lambda: f"run {run}: result is not a condition")
        for t in F.template.internal():
            G = fl.interpret_generic(F, g, t)
            for x in F.X:
                ck.expect((x in G.members) == ((t, x) in g.R), lambda: f"run {run}: node {t}, point {x}")
        G = fl.interpret_generic(F, g).members
        ck.expect(set(A) <= G <= set(X) - set(B), lambda: f"run {run}: separation")
    return ck.result(start, "generic facts")


CHECKS: dict[str, Callable[[], CheckResult]] = {
    "C1": check_ordinals,
    "C2": check_parity,
    "C3": check_translation,
    "C4": check_consistency,
    "C5": check_codes_exhaustive,
    "C6": check_canonical,
    "C7": check_universal,
    "C8": check_tree_maps,
    "C9": check_forcing,
    "C10": check_generic,
}


def run_all(seed: int = 7, only: list[str] | None = None) -> list[CheckResult]:
    out = []
    for key, fn in CHECKS.items():
        if only and key not in only:
            continue
        if "seed" in inspect.signature(fn).parameters:
            out.append(fn(seed=seed))
        else:
            out.append(fn())
    return out
