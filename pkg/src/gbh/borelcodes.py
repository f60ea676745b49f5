"""Well-founded trees coding Borel sets, and their canonical Suslin trees.

Nodes are strings: the root is ``""`` and each character is one step.
A leaf ``s`` with label ``f(s)`` codes ``[f(s)] & X``; an internal node
codes the intersection of the complements of what its children code.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from dataclasses import dataclass
from typing import Iterator, Mapping, Sequence

from .spacelab import CapExceeded, FiniteSpace, Point, PointSet, seq_str, to_seq

CANON_CAP = 1 << 20


class CodeError(ValueError):
    pass


class NotPrefixClosed(CodeError):
    pass


class MissingLabel(CodeError):
    pass


@dataclass(frozen=True, eq=False)
class CodeTree:
    nodes: frozenset[str]
    labels: Mapping[str, tuple[int, ...]]

    def __post_init__(self):
        if "" not in self.nodes:
            raise NotPrefixClosed("the root is missing")
        kids: dict[str, list[str]] = {s: [] for s in self.nodes}
        for s in self.nodes:
            if s:
                if s[:-1] not in kids:
                    raise NotPrefixClosed(f"node {s!r} has no parent")
                kids[s[:-1]].append(s)
        for v in kids.values():
            v.sort()
        leaves = {s for s, v in kids.items() if not v}
        if self.labels.keys() != leaves:
            missing = sorted(leaves - set(self.labels))
            if missing:
                raise MissingLabel(f"unlabelled leaves {missing}")
            raise CodeError(f"labels on non-leaves {sorted(set(self.labels) - leaves)}")
        object.__setattr__(self, "labels", dict(self.labels))
        object.__setattr__(self, "_kids", kids)

    def __hash__(self):
        return hash((self.nodes, tuple(sorted(self.labels.items()))))

    def __eq__(self, other):
        if not isinstance(other, CodeTree):
            return NotImplemented
        return self.nodes == other.nodes and self.labels == other.labels

    def relabel(self, labels: Mapping[str, tuple[int, ...]]) -> "CodeTree":
        """Same shape, new leaf labels."""
        if labels.keys() != self.labels.keys():
            raise CodeError("relabelling must keep the set of leaves")
        return _trusted(self.nodes, dict(labels), self._kids)

    def children(self, s: str) -> list[str]:
        return list(self._kids[s])

    def is_leaf(self, s: str) -> bool:
        return s in self.labels

    def leaves(self) -> list[str]:
        return sorted(self.labels)

    def ordered_nodes(self) -> list[str]:
        """Nodes by length then lexicographically; parents precede children."""
        return sorted(self.nodes, key=lambda s: (len(s), s))

    def subtree(self, s: str) -> "CodeTree":
        n = len(s)
        kids = {t[n:]: [u[n:] for u in v] for t, v in self._kids.items() if t.startswith(s)}
        labels = {t[n:]: f for t, f in self.labels.items() if t.startswith(s)}
        return _trusted(kids.keys(), labels, kids)

    @classmethod
    def from_json(cls, obj: dict) -> "CodeTree":
        nodes = set(obj["nodes"])
        for s, kids in obj["nodes"].items():
            for k in kids:
                nodes.add(s + k if len(k) == 1 else k)
        return cls(frozenset(nodes), {s: to_seq(v) for s, v in obj["labels"].items()})

    def to_json(self) -> dict:
        return {"nodes": {s: [c[-1] for c in self.children(s)] for s in self.ordered_nodes()},
                "labels": {s: seq_str(v) for s, v in sorted(self.labels.items())}}


def _trusted(nodes, labels, kids) -> CodeTree:
    new = object.__new__(CodeTree)
    object.__setattr__(new, "nodes", frozenset(nodes))
    object.__setattr__(new, "labels", labels)
    object.__setattr__(new, "_kids", kids)
    return new


_LETTERS = "0123456789abcdefghijklmnopqrstuvwxyz"


def leaf(stem: Sequence[int] | str) -> CodeTree:
    f = to_seq(stem) if isinstance(stem, str) else tuple(stem)
    return _trusted(("",), {"": f}, {"": []})


def node(*kids: CodeTree) -> CodeTree:
    """Internal root whose children are the given codes, in order."""
    if not kids:
        raise CodeError("an internal node needs children")
    if len(kids) > len(_LETTERS):
        raise CodeError(f"at most {len(_LETTERS)} children per node")
    labels: dict[str, tuple[int, ...]] = {}
    allkids: dict[str, list[str]] = {"": []}
    for c, k in zip(_LETTERS, kids):
        allkids[""].append(c)
        for s, v in k._kids.items():
            allkids[c + s] = [c + t for t in v]
        for s, f in k.labels.items():
            labels[c + s] = f
    return _trusted(allkids.keys(), labels, allkids)


@lru_cache(maxsize=4096)
def _plan(nodes: frozenset[str]) -> tuple:
    """Post-order evaluation plan for a tree shape."""
    order = sorted(nodes, key=lambda s: (-len(s), s))
    index = {s: i for i, s in enumerate(order)}
    kids: dict[str, list[int]] = {s: [] for s in nodes}
    for s in nodes:
        if s:
            kids[s[:-1]].append(index[s])
    return tuple((s, tuple(kids[s])) for s in order)


def _masks(space: FiniteSpace) -> tuple[list[Point], dict[tuple[int, ...], int], int]:
    cache = space.__dict__.get("_stem_masks")
    if cache is None:
        pts = space.sorted_points()
        stems = {}
        for st in space.stems():
            n = len(st)
            stems[st] = sum(1 << i for i, x in enumerate(pts) if x[:n] == st)
        cache = (pts, stems, (1 << len(pts)) - 1)
        object.__setattr__(space, "_stem_masks", cache)
    return cache


def interpret_mask(code: CodeTree, space: FiniteSpace, X: PointSet | None = None) -> int:
    """Like ``interpret``; bit ``i`` stands for the ``i``-th point in sorted order."""
    pts, stems, xm = _masks(space)
    if X is not None:
        xm = sum(1 << i for i, x in enumerate(pts) if x in X.members)
    vals = []
    labels = code.labels
    for s, kids in _plan(code.nodes):
        if kids:
            acc = xm
            for k in kids:
                acc &= ~vals[k]
            vals.append(acc)
        else:
            m = stems.get(labels[s])
            if m is None:
                space.check_stem(labels[s])
            vals.append(m & xm)
    return vals[-1]


def rank(code: CodeTree) -> dict[str, int]:
    """0 at leaves, otherwise one more than the largest child rank."""
    out: dict[str, int] = {}
    for s in sorted(code.nodes, key=len, reverse=True):
        kids = code._kids[s]
        out[s] = max(out[t] for t in kids) + 1 if kids else 0
    return out


def code_rank(code: CodeTree) -> int:
    return rank(code)[""]


def mask_to_set(mask: int, space: FiniteSpace) -> PointSet:
    pts = _masks(space)[0]
    return PointSet(space, frozenset(x for i, x in enumerate(pts) if mask >> i & 1))


def interpret(code: CodeTree, space: FiniteSpace, X: PointSet | None = None) -> PointSet:
    return mask_to_set(interpret_mask(code, space, X), space)


# -- combinators ---------------------------------------------------------------


def empty_code() -> CodeTree:
    return node(leaf(()))


def full_code() -> CodeTree:
    return leaf(())


def complement(code: CodeTree) -> CodeTree:
    return node(code)


def union(*codes: CodeTree) -> CodeTree:
    """Root rank at most two more than the largest argument rank."""
    if not codes:
        return empty_code()
    return node(node(*codes))


def intersection(*codes: CodeTree) -> CodeTree:
    """Merge the children of internal roots; wrap leaf roots twice.

    The root rank is at most the largest argument rank, or 2 when an
    argument is a leaf.
    """
    if not codes:
        return full_code()
    kids: list[CodeTree] = []
    for c in codes:
        if c.is_leaf(""):
            kids.append(complement(c))
        else:
            kids.extend(c.subtree(t) for t in c.children(""))
    return node(*kids)


code_complement, code_union, code_intersection = complement, union, intersection


# -- canonical trees -----------------------------------------------------------------


@dataclass(frozen=True)
class SuslinTree:
    """Prefix-closed set of sequences of ``(x_i, y_i, z_i)`` triples.

    Position ``i`` carries the point coordinate ``x_i`` (``None`` past the
    point length) and the values of ``y`` and ``z`` at the ``i``-th node of
    the code in the fixed enumeration (``None`` past the last node).
    """

    nodes: frozenset[tuple]
    length: int
    point_len: int
    order: tuple[str, ...]

    def branches(self) -> set[tuple]:
        return {t for t in self.nodes if len(t) == self.length}

    def project(self) -> set[tuple[int, ...]]:
        return {tuple(c[0] for c in br[: self.point_len]) for br in self.branches()}


def is_canonical_triple(code: CodeTree, x, y: Mapping[str, int], z: Mapping[str, str], space) -> bool:
    """Check the defining conditions of a canonical triple directly."""
    if y[""] != 1:
        return False
    for s in code.nodes:
        kids = code.children(s)
        if kids:
            if (y[s] == 0) != any(y[t] == 1 for t in kids):
                return False
            if y[s] == 0:
                if z[s] not in kids or y[z[s]] != 1:
                    return False
            elif z[s] != "":
                return False
        else:
            f = code.labels[s]
            if y[s] != int(tuple(x[: len(f)]) == tuple(f)):
                return False
            if z[s] != "":
                return False
    return True


def _encode(code: CodeTree, x, y, z, point_len: int) -> tuple:
    order = code.ordered_nodes()
    n = max(point_len, len(order))
    return tuple(
        (x[i] if i < point_len else None,
         y[order[i]] if i < len(order) else None,
         z[order[i]] if i < len(order) else None)
        for i in range(n)
    )


def _tree_from(code, branches, point_len) -> SuslinTree:
    order = tuple(code.ordered_nodes())
    n = max(point_len, len(order))
    nodes = {br[:k] for br in branches for k in range(n + 1)}
    nodes.add(())
    return SuslinTree(frozenset(nodes), n, point_len, order)


def canonical_triples(code: CodeTree, space: FiniteSpace, X: PointSet | None = None,
                      cap: int = CANON_CAP) -> Iterator[tuple]:
    """All canonical triples, built by evaluating the code at each point."""
    X = space.full() if X is None else X
    order = code.ordered_nodes()
    budget = cap
    for x in X:
        y: dict[str, int] = {}
        for s in reversed(order):
            if code.is_leaf(s):
                f = code.labels[s]
                y[s] = int(x[: len(f)] == f)
            else:
                y[s] = int(not any(y[t] for t in code.children(s)))
        if y[""] != 1:
            continue
        choices = []
        for s in order:
            if code.is_leaf(s) or y[s] == 1:
                choices.append([""])
            else:
                choices.append([t for t in code.children(s) if y[t] == 1])
        for pick in itertools.product(*choices):
            budget -= 1
            if budget < 0:
                raise CapExceeded(f"more than {cap} canonical triples")
            yield x, dict(y), dict(zip(order, pick))


def canonical_tree(code: CodeTree, space: FiniteSpace, X: PointSet | None = None,
                   cap: int = CANON_CAP) -> SuslinTree:
    branches = {_encode(code, x, y, z, space.d) for x, y, z in canonical_triples(code, space, X, cap)}
    return _tree_from(code, branches, space.d)


def brute_force_triples(code: CodeTree, space: FiniteSpace, X: PointSet | None = None,
                        cap: int = CANON_CAP) -> set[tuple]:
    """Filter every candidate ``(x, y, z)`` through the defining conditions.

    ``z(s)`` ranges over the children of ``s`` and the empty node; any
    other value violates the conditions outright.
    """
    X = space.full() if X is None else X
    order = code.ordered_nodes()
    zopts = [[""] + code.children(s) for s in order]
    total = len(X) * 2 ** len(order)
    for o in zopts:
        total *= len(o)
    if total > cap:
        raise CapExceeded(f"{total} candidates exceed the cap {cap}")
    out = set()
    for x in X:
        for ybits in itertools.product((0, 1), repeat=len(order)):
            y = dict(zip(order, ybits))
            if y[""] != 1:
                continue
            for pick in itertools.product(*zopts):
                z = dict(zip(order, pick))
                if is_canonical_triple(code, x, y, z, space):
                    out.add(_encode(code, x, y, z, space.d))
    return out


# -- enumeration --------------------------------------------------------------------


def tree_shapes(max_nodes: int) -> Iterator[frozenset[str]]:
    """Finite rooted ordered trees up to ``max_nodes`` nodes, each once."""

    def forests(n: int) -> Iterator[list[frozenset[str]]]:
        # ordered forests with n nodes in total
        if n == 0:
            yield []
            return
        for first in range(1, n + 1):
            for t in trees(first):
                for rest in forests(n - first):
                    yield [t] + rest

    def trees(n: int) -> Iterator[frozenset[str]]:
        for f in forests(n - 1):
            nodes = {""}
            for i, t in enumerate(f):
                c = "0123456789abcdefghijklmnopqrstuvwxyz"[i]
                nodes |= {c + s for s in t}
            yield frozenset(nodes)

    for n in range(1, max_nodes + 1):
        yield from trees(n)


def all_codes(max_nodes: int, stems: Sequence[tuple[int, ...]]) -> Iterator[CodeTree]:
    for shape in tree_shapes(max_nodes):
        lv = sorted(s for s in shape if not any(t != s and t[:-1] == s for t in shape))
        for labs in itertools.product(stems, repeat=len(lv)):
            yield CodeTree(shape, dict(zip(lv, labs)))


def random_code(rng, max_nodes: int, stems: Sequence[tuple[int, ...]]) -> CodeTree:
    """Grow a random tree by attaching nodes to random parents."""
    n = rng.randint(1, max_nodes)
    nodes = [""]
    kids: dict[str, int] = {"": 0}
    for _ in range(n - 1):
        parent = rng.choice(nodes)
        c = "0123456789abcdefghijklmnopqrstuvwxyz"[kids[parent]]
        new = parent + c
        kids[parent] += 1
        kids[new] = 0
        nodes.append(new)
    shape = frozenset(nodes)
    lv = sorted(s for s in nodes if kids[s] == 0)
    return CodeTree(shape, {s: tuple(rng.choice(stems)) for s in lv})
