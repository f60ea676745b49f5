"""Finite stand-ins for subspaces of the generalized Cantor space.

A point is a tuple of length ``d`` over ``range(b)``; stems are shorter
tuples and ``[s]`` is the set of points extending ``s``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

DEFAULT_CAP = 4096
PARAM_CAP = 1 << 16

Point = tuple[int, ...]


class SpaceError(ValueError):
    pass


class BadStem(SpaceError):
    pass


class SpaceMismatch(SpaceError):
    pass


class NotT0(SpaceError):
    pass


class CapExceeded(SpaceError):
    pass


def to_seq(text: str) -> tuple[int, ...]:
    """``"012"`` -> ``(0, 1, 2)``; letters beyond 9 use a-z."""
    return tuple(int(ch, 36) for ch in text)


def seq_str(seq: Sequence[int]) -> str:
    return "".join(_digit(i) for i in seq)


def _digit(i: int) -> str:
    return "0123456789abcdefghijklmnopqrstuvwxyz"[i]


@dataclass(frozen=True)
class FiniteSpace:
    b: int
    d: int
    points: frozenset[Point]

    def __post_init__(self):
        if self.b < 1 or self.d < 0:
            raise SpaceError("need b >= 1 and d >= 0")
        for x in self.points:
            if len(x) != self.d or any(not 0 <= c < self.b for c in x):
                raise SpaceError(f"point {seq_str(x)} does not fit {self.b}^{self.d}")

    @classmethod
    def build(cls, b: int, d: int, points: Iterable[Sequence[int] | str] | None = None,
              cap: int = DEFAULT_CAP) -> "FiniteSpace":
        if points is None:
            if b ** d > cap:
                raise CapExceeded(f"{b}^{d} points exceed the cap {cap}")
            pts = frozenset(itertools.product(range(b), repeat=d))
        else:
            pts = frozenset(to_seq(p) if isinstance(p, str) else tuple(p) for p in points)
        if len(pts) > cap:
            raise CapExceeded(f"{len(pts)} points exceed the cap {cap}")
        return cls(b, d, pts)

    @classmethod
    def from_json(cls, obj: dict, cap: int = DEFAULT_CAP) -> "FiniteSpace":
        return cls.build(obj["b"], obj["d"], obj.get("points"), cap)

    def to_json(self) -> dict:
        return {"b": self.b, "d": self.d, "points": sorted(seq_str(x) for x in self.points)}

    def sorted_points(self) -> list[Point]:
        return sorted(self.points)

    def stems(self, max_len: int | None = None) -> Iterator[tuple[int, ...]]:
        top = self.d if max_len is None else min(max_len, self.d)
        for n in range(top + 1):
            yield from itertools.product(range(self.b), repeat=n)

    def check_stem(self, stem: Sequence[int]) -> tuple[int, ...]:
        stem = tuple(stem)
        if len(stem) > self.d or any(not 0 <= c < self.b for c in stem):
            raise BadStem(f"stem {seq_str(stem) if all(0 <= c < 36 for c in stem) else stem} "
                          f"does not fit {self.b}^<={self.d}")
        return stem

    def full(self) -> "PointSet":
        return PointSet(self, self.points)

    def empty(self) -> "PointSet":
        return PointSet(self, frozenset())


@dataclass(frozen=True)
class PointSet:
    space: FiniteSpace
    members: frozenset[Point]

    def _same(self, other: "PointSet"):
        if self.space != other.space:
            raise SpaceMismatch("point sets live in different spaces")

    def __or__(self, other: "PointSet") -> "PointSet":
        self._same(other)
        return PointSet(self.space, self.members | other.members)

    def __and__(self, other: "PointSet") -> "PointSet":
        self._same(other)
        return PointSet(self.space, self.members & other.members)

    def complement(self) -> "PointSet":
        return PointSet(self.space, self.space.points - self.members)

    def __contains__(self, x) -> bool:
        return tuple(x) in self.members

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(sorted(self.members))


def basic(space: FiniteSpace, stem: Sequence[int] | str) -> PointSet:
    """The basic open set ``[stem]`` intersected with the space."""
    s = space.check_stem(to_seq(stem) if isinstance(stem, str) else stem)
    n = len(s)
    return PointSet(space, frozenset(x for x in space.points if x[:n] == s))


# -- brute-force set algebra -------------------------------------------------


def _spaces(expr) -> set:
    if isinstance(expr, PointSet):
        return {expr.space}
    return set().union(*(_spaces(e) for e in expr[1:])) if len(expr) > 1 else set()


def _member(expr, x: Point) -> bool:
    if isinstance(expr, PointSet):
        return x in expr.members
    op, *args = expr
    if op == "union":
        return any(_member(a, x) for a in args)
    if op == "inter":
        return all(_member(a, x) for a in args)
    if op == "compl":
        (a,) = args
        return not _member(a, x)
    raise SpaceError(f"unknown set operation {op!r}")


def set_algebra_oracle(expr, space: FiniteSpace | None = None) -> PointSet:
    """Evaluate nested ``("union"|"inter"|"compl", ...)`` point by point."""
    spaces = _spaces(expr)
    if space is not None:
        spaces.add(space)
    if len(spaces) != 1:
        raise SpaceMismatch("expression mixes spaces" if spaces else "no space given")
    (sp,) = spaces
    return PointSet(sp, frozenset(x for x in sp.points if _member(expr, x)))


# -- embedding into 2^L ------------------------------------------------------------


def embed_into_cantor(basis: Sequence[PointSet]) -> dict[Point, tuple[int, ...]]:
    """Send each point to its indicator vector over the basis."""
    if not basis:
        raise SpaceError("empty basis")
    sp = basis[0].space
    for U in basis:
        U._same(basis[0])
    emb = {x: tuple(int(x in U.members) for U in basis) for x in sp.sorted_points()}
    seen: dict[tuple[int, ...], Point] = {}
    for x, row in emb.items():
        if row in seen:
            raise NotT0(f"points {seq_str(seen[row])} and {seq_str(x)} have the same basic neighbourhoods")
        seen[row] = x
    return emb


def cylinder_preimage(basis: Sequence[PointSet], s: Sequence[int]) -> PointSet:
    """Preimage of the cylinder ``[s]`` of 2^L under the indicator embedding.

    Computed as the intersection of the basis sets where ``s`` is 1 and
    the complements of those where it is 0, without evaluating the map.
    """
    sp = basis[0].space
    acc = sp.full()
    for i, bit in enumerate(s):
        acc = acc & (basis[i] if bit else basis[i].complement())
    return acc


# -- universal sets ----------------------------------------------------------------


def pair(delta: int, i: int, width: int) -> int:
    """Coordinate of slice ``delta``, position ``i``."""
    if not 0 <= i < width:
        raise SpaceError("position out of range")
    return delta * width + i


def unpair(n: int, width: int) -> tuple[int, int]:
    return divmod(n, width)


def slice_param(y: Sequence[int], delta: int, width: int) -> tuple[int, ...]:
    return tuple(y[pair(delta, i, width)] for i in range(width))


@dataclass(frozen=True)
class UniversalSet:
    """A finite universal set with parameters in ``2^param_len``.

    Level 1 sections are the unions of basis sets (the open sets); level 2
    sections are unions of at most ``m`` complements of open sets.
    """

    level: int
    space: FiniteSpace
    basis: tuple[PointSet, ...]
    m: int

    @property
    def width(self) -> int:
        return len(self.basis)

    @property
    def param_len(self) -> int:
        return self.width if self.level == 1 else self.m * self.width

    def contains(self, y: Sequence[int], x: Point) -> bool:
        if len(y) != self.param_len:
            raise SpaceError("parameter has the wrong length")
        if self.level == 1:
            return any(y[i] and x in U.members for i, U in enumerate(self.basis))
        L = self.width
        for delta in range(self.m):
            if not any(yy and x in U.members
                       for yy, U in zip(slice_param(y, delta, L), self.basis)):
                return True
        return False

    def section(self, y: Sequence[int]) -> PointSet:
        return PointSet(self.space, frozenset(x for x in self.space.points if self.contains(y, x)))

    def params(self) -> Iterator[tuple[int, ...]]:
        return itertools.product((0, 1), repeat=self.param_len)

    def sections(self) -> set[frozenset[Point]]:
        return {self.section(y).members for y in self.params()}


def build_universal(level: int, space: FiniteSpace, basis: Sequence[PointSet], m: int = 1,
                    cap: int = PARAM_CAP) -> UniversalSet:
    if level not in (1, 2):
        raise SpaceError("only levels 1 and 2 are built")
    for U in basis:
        if U.space != space:
            raise SpaceMismatch("basis set from another space")
    if m < 1:
        raise SpaceError("need m >= 1")
    u = UniversalSet(level, space, tuple(basis), m)
    if 2 ** u.param_len > cap:
        raise CapExceeded(f"2^{u.param_len} parameters exceed the cap {cap}")
    return u


def open_sets(basis: Sequence[PointSet]) -> set[frozenset[Point]]:
    """All unions of subfamilies of the basis, by enumeration."""
    out = set()
    for r in range(len(basis) + 1):
        for fam in itertools.combinations(basis, r):
            out.add(frozenset().union(*(U.members for U in fam)))
    return out
