"""A bounded, finite model of the forcing that adds a Borel code separating A from B.

Conditions pair a partial labelling ``f`` of the leaves of a template tree
with a finite set ``R`` of promises ``(t, x)``: "x belongs to the set coded
at node t".  The budget ``s_max`` plays the role of the size bound on
conditions.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator, Mapping, Sequence

from . import borelcodes
from .spacelab import FiniteSpace, Point, PointSet, seq_str, to_seq

Node = tuple[int, ...]
Stem = tuple[int, ...]


class ForcingError(ValueError):
    pass


class InvalidCondition(ForcingError):
    pass


class Incompatible(ForcingError):
    pass


class BudgetExceeded(ForcingError):
    pass


class Stuck(ForcingError):
    pass


class PartialLabels(ForcingError):
    pass


@dataclass(frozen=True)
class Template:
    """All sequences over ``range(b)`` of length at most ``alpha``."""

    alpha: int
    b: int

    def __post_init__(self):
        if self.alpha < 1 or self.b < 1:
            raise ForcingError("need alpha >= 1 and b >= 1")

    def nodes(self) -> list[Node]:
        return [t for n in range(self.alpha + 1) for t in itertools.product(range(self.b), repeat=n)]

    def internal(self) -> list[Node]:
        return [t for t in self.nodes() if len(t) < self.alpha]

    def leaves(self) -> list[Node]:
        return list(itertools.product(range(self.b), repeat=self.alpha))

    def rank(self, t: Node) -> int:
        return self.alpha - len(t)

    def children(self, t: Node) -> list[Node]:
        if len(t) >= self.alpha:
            return []
        return [t + (i,) for i in range(self.b)]

    def below(self, t: Node) -> list[Node]:
        return [s for s in self.nodes() if s[: len(t)] == t]


@dataclass(frozen=True)
class Condition:
    f: frozenset[tuple[Node, Stem]] = frozenset()
    R: frozenset[tuple[Node, Point]] = frozenset()

    @classmethod
    def make(cls, f: Mapping[Node, Stem] | Iterable = (), R: Iterable = ()) -> "Condition":
        items = f.items() if isinstance(f, Mapping) else f
        return cls(frozenset((tuple(t), tuple(s)) for t, s in items),
                   frozenset((tuple(t), tuple(x)) for t, x in R))

    @property
    def fmap(self) -> dict[Node, Stem]:
        return dict(self.f)

    @property
    def size(self) -> int:
        return len(self.f) + len(self.R)

    def __or__(self, other: "Condition") -> "Condition":
        return Condition(self.f | other.f, self.R | other.R)

    def to_json(self) -> dict:
        return {"f": {seq_str(t): seq_str(s) for t, s in sorted(self.f)},
                "R": [[seq_str(t), seq_str(x)] for t, x in sorted(self.R)]}

    def __str__(self) -> str:
        fs = ", ".join(f"{seq_str(t) or '()'}:{seq_str(s) or '()'}" for t, s in sorted(self.f))
        rs = ", ".join(f"<{seq_str(t) or '()'},{seq_str(x)}>" for t, x in sorted(self.R))
        return f"f{{{fs}}} R{{{rs}}}"


def condition_from_json(obj: dict) -> Condition:
    return Condition.make({to_seq(t): to_seq(s) for t, s in obj.get("f", {}).items()},
                          [(to_seq(t), to_seq(x)) for t, x in obj.get("R", [])])


@dataclass
class AlphaForcing:
    template: Template
    space: FiniteSpace
    X: frozenset[Point]
    A: frozenset[Point]
    B: frozenset[Point]
    s_max: int
    _internal: frozenset = field(init=False, repr=False)
    _leaves: frozenset = field(init=False, repr=False)

    def __post_init__(self):
        self.X = frozenset(self.X)
        self.A = frozenset(self.A)
        self.B = frozenset(self.B)
        if not self.X <= self.space.points:
            raise ForcingError("X must lie in the space")
        if not (self.A | self.B) <= self.X:
            raise ForcingError("A and B must be subsets of X")
        if self.A & self.B:
            raise ForcingError("A and B must be disjoint")
        self._internal = frozenset(self.template.internal())
        self._leaves = frozenset(self.template.leaves())

    @classmethod
    def build(cls, alpha: int, b: int, space: FiniteSpace, X, A=(), B=(), s_max: int = 2) -> "AlphaForcing":
        return cls(Template(alpha, b), space, frozenset(X), frozenset(A), frozenset(B), s_max)

    # -- validity ------------------------------------------------------------

    def _covers(self, stem: Stem, x: Point) -> bool:
        return x[: len(stem)] == stem

    def _problems(self, p: Condition, bounded: bool) -> Iterator[str]:
        """Lazily yield violated clauses so validity tests stop at the first."""
        fmap: dict[Node, Stem] = {}
        for t, s in p.f:
            if t not in self._leaves:
                yield f"a: {seq_str(t) or '()'} is not a leaf"
            if len(s) > self.space.d or any(not 0 <= c < self.space.b for c in s):
                yield f"a: bad stem {s}"
            if t in fmap and fmap[t] != s:
                yield f"a: two labels on {seq_str(t)}"
            fmap[t] = s
        for t, x in p.R:
            if t not in self._internal:
                yield f"b: {seq_str(t) or '()'} is not an internal node"
            if x not in self.X:
                yield f"b: {seq_str(x)} is not in X"
        if bounded and p.size > self.s_max:
            yield f"size: {p.size} > {self.s_max}"
        for t, x in p.R:
            for c in self.template.children(t):
                if (c, x) in p.R:
                    yield f"c: <{seq_str(t) or '()'},{seq_str(x)}> and its child both promise"
                if c in fmap and self._covers(fmap[c], x):
                    yield f"c: leaf {seq_str(c)} label covers {seq_str(x)}"
            if len(t) == 1 and x in self.A:
                yield f"d: <{seq_str(t)},{seq_str(x)}> with x in A"
            if t == () and x in self.B:
                yield f"e: <(),{seq_str(x)}> with x in B"

    def violations(self, p: Condition, bounded: bool = True) -> list[str]:
        return list(self._problems(p, bounded))

    def is_condition(self, p: Condition, bounded: bool = True) -> bool:
        return next(self._problems(p, bounded), None) is None

    def check(self, p: Condition) -> Condition:
        v = self.violations(p)
        if v:
            raise InvalidCondition("; ".join(v))
        return p

    # -- order ---------------------------------------------------------------

    @staticmethod
    def leq(q: Condition, p: Condition) -> bool:
        """``q`` is stronger than ``p``."""
        return p.f <= q.f and p.R <= q.R

    def meet(self, p: Condition, q: Condition) -> Condition:
        u = p | q
        problem = next(self._problems(u, bounded=False), None)
        if problem is not None:
            raise Incompatible(problem)
        if u.size > self.s_max:
            raise BudgetExceeded(f"meet has size {u.size} > {self.s_max}")
        return u

    def compatible(self, p: Condition, q: Condition, bounded: bool = False) -> bool:
        """Compatibility; ``bounded`` also requires the meet to fit the budget."""
        return self.is_condition(p | q, bounded=bounded)

    # -- dense sets ----------------------------------------------------------

    def in_dense(self, t: Node, x: Point, p: Condition) -> bool:
        if (t, x) in p.R:
            return True
        kids = self.template.children(t)
        if self.template.rank(t) == 1:
            fmap = p.fmap
            return any(c in fmap and self._covers(fmap[c], x) for c in kids)
        return any((c, x) in p.R for c in kids)

    def dense_set(self, t: Node, x: Point) -> Callable[[Condition], bool]:
        if t not in self._internal or x not in self.X:
            raise ForcingError("dense sets are indexed by internal nodes and points of X")
        return lambda p: self.in_dense(t, x, p)

    def totality_set(self, leaf: Node) -> Callable[[Condition], bool]:
        return lambda p: any(t == leaf for t, _ in p.f)

    def extend_into(self, t: Node, x: Point, p: Condition) -> Condition:
        """One-step extension of ``p`` into the dense set at ``(t, x)``.

        Uses a child of ``t`` untouched by ``p``; raises Stuck when every
        child is in use.
        """
        if self.in_dense(t, x, p):
            return p
        if x in self.A and t == ():
            q = Condition(p.f, p.R | {((), x)})
            return self.check(q)
        used = {s for s, _ in p.f} | {s for s, _ in p.R}
        for c in self.template.children(t):
            if any(u[: len(c)] == c for u in used):
                continue
            if self.template.rank(t) == 1:
                q = Condition(p.f | {(c, x)}, p.R)
            else:
                q = Condition(p.f, p.R | {(c, x)})
            return self.check(q)
        raise Stuck(f"no fresh child below {seq_str(t) or '()'}")

    # -- enumeration ---------------------------------------------------------

    def stems(self) -> list[Stem]:
        return list(self.space.stems())

    def pool(self) -> list[tuple[str, tuple]]:
        R = [("R", (t, x)) for t in sorted(self._internal) for x in sorted(self.X)]
        F = [("f", (t, s)) for t in sorted(self._leaves) for s in self.stems()]
        return R + F

    def conditions(self, max_size: int | None = None) -> Iterator[Condition]:
        top = self.s_max if max_size is None else max_size
        pool = self.pool()
        for n in range(top + 1):
            for combo in itertools.combinations(pool, n):
                p = Condition(frozenset(e for k, e in combo if k == "f"),
                              frozenset(e for k, e in combo if k == "R"))
                if self.is_condition(p):
                    yield p

    # -- ranks and restriction ----------------------------------------------

    def crank(self, p: Condition, H: Iterable[Point]) -> int:
        H = frozenset(H)
        return max((self.template.rank(t) for t, x in p.R if x not in H), default=0)

    def restrict(self, p: Condition, H: Iterable[Point], beta: int) -> Condition:
        H = frozenset(H)
        return Condition(p.f, frozenset((t, x) for t, x in p.R
                                        if x in H or self.template.rank(t) <= beta))

    def projection_counterexamples(self, p: Condition, H: Iterable[Point], beta: int,
                                   others: Iterable[Condition]) -> list[Condition]:
        """Conditions r of low rank outside H meeting the restriction but not p."""
        if not 0 < beta < self.template.alpha:
            raise ForcingError("need 0 < beta < alpha")
        H = frozenset(H)
        q = self.restrict(p, H, beta)
        return [r for r in others
                if self.crank(r, H) < beta and self.compatible(q, r) and not self.compatible(p, r)]

    # -- linked reduction ------------------------------------------------------

    def _node_index(self) -> dict[Node, int]:
        return {t: i for i, t in enumerate(sorted(self._internal, key=lambda s: (len(s), s)))}

    def promise_profile(self, p: Condition) -> dict[Point, frozenset[Node]]:
        out: dict[Point, set[Node]] = {}
        for t, x in p.R:
            out.setdefault(x, set()).add(t)
        return {x: frozenset(v) for x, v in out.items()}

    def linked_map(self, p: Condition) -> tuple[dict[Node, Stem], dict[Point, int]]:
        """``(f_p, g_p)`` with ``g_p(x)`` an injective code of the nodes promising x."""
        idx = self._node_index()
        g = {x: sum(1 << idx[t] for t in h) for x, h in self.promise_profile(p).items()}
        return p.fmap, g

    @staticmethod
    def functions_compatible(g: Mapping, h: Mapping) -> bool:
        return all(g[x] == h[x] for x in g.keys() & h.keys())

    def star_compatible(self, p: Condition, q: Condition) -> bool:
        return self.compatible(Condition(frozenset(), p.R), Condition(frozenset(), q.R))


# -- generic objects ------------------------------------------------------------------


def standard_dense_list(forcing: AlphaForcing, top: Node = ()) -> list[tuple[str, Callable]]:
    """Dense sets for every internal node below ``top`` (higher ranks first), then totality."""
    tpl = forcing.template
    inner = sorted((t for t in tpl.below(top) if len(t) < tpl.alpha), key=lambda s: (len(s), s))
    out = []
    for t in inner:
        for x in sorted(forcing.X):
            out.append((f"D<{seq_str(t) or '()'},{seq_str(x)}>", forcing.dense_set(t, x)))
    for leaf_ in sorted(t for t in tpl.below(top) if len(t) == tpl.alpha):
        out.append((f"L<{seq_str(leaf_)}>", forcing.totality_set(leaf_)))
    return out


def build_generic(forcing: AlphaForcing, dense: Sequence[tuple[str, Callable]],
                  seed: int = 0, start: Condition | None = None) -> Condition:
    """Descend greedily, meeting each dense set with a one-element extension."""
    rng = random.Random(seed)
    p = start or Condition()
    pool = forcing.pool()
    for name, member in dense:
        if member(p):
            continue
        order = list(pool)
        rng.shuffle(order)
        for kind, e in order:
            q = Condition(p.f | {e}, p.R) if kind == "f" else Condition(p.f, p.R | {e})
            if q != p and forcing.is_condition(q) and member(q):
                p = q
                break
        else:
            raise Stuck(f"cannot meet {name} below {p}")
    return p


def interpret_generic(forcing: AlphaForcing, g: Condition, t: Node = ()) -> PointSet:
    """The set coded by the labelled subtree at ``t``."""
    tpl = forcing.template
    fmap = g.fmap
    sub = tpl.below(t)
    leaves = [s for s in sub if len(s) == tpl.alpha]
    missing = [s for s in leaves if s not in fmap]
    if missing:
        raise PartialLabels(f"unlabelled leaves {[seq_str(s) for s in missing]}")
    n = len(t)
    letters = "0123456789abcdefghijklmnopqrstuvwxyz"
    name = lambda s: "".join(letters[c] for c in s[n:])
    code = borelcodes.CodeTree(frozenset(name(s) for s in sub), {name(s): fmap[s] for s in leaves})
    X = PointSet(forcing.space, forcing.X)
    return borelcodes.interpret(code, forcing.space, X)
