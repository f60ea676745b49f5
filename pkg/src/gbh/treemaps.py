"""Maps between finite trees of sequences and the maps they induce on branches.

Trees are sets of tuples closed under prefixes.  ``s <= t`` means ``s`` is
a prefix of ``t``; ``s`` and ``t`` are incompatible when neither extends
the other.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Hashable, Iterator, Mapping, Sequence

Seq = tuple


class TreeMapError(ValueError):
    pass


class NotStrict(TreeMapError):
    pass


class DepthShortfall(TreeMapError):
    pass


class NotEmbedding(TreeMapError):
    pass


class NotOrderPreserving(TreeMapError):
    pass


class CharacterizationMismatch(TreeMapError):
    pass


def is_prefix(s: Seq, t: Seq) -> bool:
    return len(s) <= len(t) and t[: len(s)] == s


def incompatible(s: Seq, t: Seq) -> bool:
    return not is_prefix(s, t) and not is_prefix(t, s)


@dataclass(frozen=True)
class FiniteTree:
    nodes: frozenset[Seq]
    depth: int

    @classmethod
    def full(cls, alphabet: Sequence[Hashable], depth: int) -> "FiniteTree":
        nodes = [()]
        for n in range(1, depth + 1):
            nodes.extend(itertools.product(alphabet, repeat=n))
        return cls(frozenset(nodes), depth)

    def branches(self) -> list[Seq]:
        """Nodes of full length, in sorted order when comparable."""
        out = [t for t in self.nodes if len(t) == self.depth]
        try:
            return sorted(out)
        except TypeError:
            return out


def product_tree(a: int, b: int, depth: int) -> FiniteTree:
    """The tree over the letters ``(i, j)`` with ``i < a`` and ``j < b``."""
    return FiniteTree.full([(i, j) for i in range(a) for j in range(b)], depth)


def project(t: Seq) -> Seq:
    """First-coordinate projection of a sequence over a product alphabet."""
    return tuple(c[0] for c in t)


@dataclass(frozen=True)
class TreeMap:
    source: FiniteTree
    target_depth: int
    phi: Mapping[Seq, Seq]

    def __post_init__(self):
        if set(self.phi) != set(self.source.nodes):
            raise TreeMapError("the map must be defined on every source node")

    def __call__(self, s: Seq) -> Seq:
        return self.phi[s]

    def compose_projection(self) -> "TreeMap":
        return TreeMap(self.source, self.target_depth, {s: project(v) for s, v in self.phi.items()})


@dataclass(frozen=True)
class OrderProps:
    order_preserving: bool
    strict: bool
    preserves_incompatibility: bool

    @property
    def order_embedding(self) -> bool:
        return self.strict and self.preserves_incompatibility


def _props(nodes: Sequence[Seq], f) -> OrderProps:
    op = st = inc = True
    for s, t in itertools.permutations(nodes, 2):
        fs, ft = f(s), f(t)
        if is_prefix(s, t):
            ok = is_prefix(fs, ft)
            op = op and ok
            st = st and ok and fs != ft
        elif not is_prefix(t, s):
            inc = inc and incompatible(fs, ft)
    return OrderProps(op, st, inc)


def check_order_props(phi: TreeMap) -> OrderProps:
    return _props(sorted(phi.source.nodes, key=len), phi)


def _image_props(phi: TreeMap) -> OrderProps:
    """Order properties of the projection restricted to the image of phi."""
    image = list(set(phi.phi.values()))
    return _props(image, project)


@dataclass(frozen=True)
class PerfectReport:
    via_strict_and_projection: bool
    via_projection_embedding: bool
    via_both_embeddings: bool

    @property
    def exists(self) -> bool:
        return self.via_strict_and_projection


def check_exists_perfect(phi: TreeMap) -> PerfectReport:
    """Evaluate three equivalent criteria for the image to contain a perfect set.

    1. phi is strict and pi o phi preserves incompatibility;
    2. pi o phi is an order embedding;
    3. phi and pi restricted to the image of phi are order embeddings.
    """
    own = check_order_props(phi)
    if not own.order_preserving:
        raise NotOrderPreserving("criteria apply to order preserving maps only")
    proj = check_order_props(phi.compose_projection())
    c1 = own.strict and proj.preserves_incompatibility
    c2 = proj.order_embedding
    c3 = own.order_embedding and _image_props(phi).order_embedding
    if not c1 == c2 == c3:
        raise CharacterizationMismatch(f"criteria disagree: {c1}, {c2}, {c3}")
    return PerfectReport(c1, c2, c3)


def body_map(phi: TreeMap) -> dict[Seq, Seq]:
    """Send each full-length source branch to the union of its images."""
    props = check_order_props(phi)
    if not props.strict:
        raise NotStrict("body maps need a strictly order preserving map")
    out = {}
    for x in phi.source.branches():
        chain = [phi(x[:i]) for i in range(len(x) + 1)]
        top = max(chain, key=len)
        if not all(is_prefix(c, top) for c in chain):
            raise NotStrict("images of a branch do not form a chain")
        if len(top) < phi.target_depth:
            raise DepthShortfall(f"branch {x} reaches only depth {len(top)}")
        out[x] = top[: phi.target_depth]
    return out


def projection_body(branches) -> dict[Seq, Seq]:
    return {y: project(y) for y in branches}


def composition_identity(phi: TreeMap) -> bool:
    """Check that the body map of pi o phi is pi after the body map of phi."""
    f_phi = body_map(phi)
    f_pi_phi = body_map(phi.compose_projection())
    f_pi = projection_body(f_phi.values())
    return all(f_pi_phi[x] == f_pi[f_phi[x]] for x in f_phi)


def closed_image_check(phi: TreeMap) -> bool:
    """The image of the body map equals the full branches of its downward closure."""
    if not check_order_props(phi).order_embedding:
        raise NotEmbedding("closed images are guaranteed for order embeddings only")
    image = set(body_map(phi).values())
    down = {y[:i] for y in image for i in range(len(y) + 1)}
    full = {t for t in down if len(t) == phi.target_depth}
    return full == image


def order_preserving_maps(source: FiniteTree, target: FiniteTree) -> Iterator[TreeMap]:
    """Every order preserving map, by extending images along the source."""
    order = sorted(source.nodes, key=lambda s: (len(s), s))
    by_prefix: dict[Seq, list[Seq]] = {u: [v for v in target.nodes if is_prefix(u, v)]
                                       for u in target.nodes}

    def extend(i: int, acc: dict):
        if i == len(order):
            yield TreeMap(source, target.depth, dict(acc))
            return
        s = order[i]
        options = by_prefix[acc[s[:-1]]] if s else list(target.nodes)
        for v in options:
            acc[s] = v
            yield from extend(i + 1, acc)
        del acc[s]

    yield from extend(0, {})


def from_json(obj: dict) -> TreeMap:
    """``{"source_depth": 1, "source_alphabet": 2, "map": {"": "", "0": "a0", "1": "b0"}}``.

    Targets are letter/digit pairs (``a0`` is ``(0, 0)``), ``(i,j)`` groups or lists.
    """
    source = FiniteTree.full(range(obj["source_alphabet"]), obj["source_depth"])
    phi = {}
    for k, v in obj["map"].items():
        phi[tuple(int(c) for c in k)] = _parse_target(v)
    return TreeMap(source, obj.get("target_depth", obj["source_depth"]), phi)


def _parse_target(v) -> Seq:
    if isinstance(v, list):
        return tuple(tuple(c) if isinstance(c, list) else c for c in v)
    v = v.strip()
    if not v:
        return ()
    if v[0].isalpha():
        # letter for the first coordinate, digit for the second: "a0b1" is ((0,0),(1,1))
        if len(v) % 2:
            raise TreeMapError(f"bad target {v!r}")
        return tuple((ord(v[i]) - ord("a"), int(v[i + 1])) for i in range(0, len(v), 2))
    out = []
    for part in v.replace(" ", "").split(")("):
        a, b = part.strip("()").split(",")
        out.append((int(a), int(b)))
    return tuple(out)
