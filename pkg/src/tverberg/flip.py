"""Flip graphs of ordered Radon pairs sharing a fixed point y.

A state (a, b) is a pair of disjoint nonempty index sets whose hulls both
contain y.  A move adds an unused index to one side or removes an index
from one side.  A path from (A, B) to (B, A) frees every swapped index at
some step, and each such step is a Radon partition of S minus that index
through y, i.e. evidence that y lies in the 1-core of T_2.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .gallery import paper_blocks, paper_counterexample
from .linalg import PointSet, Vector, to_vector
from .lp import Feasible, in_convex_hull
from .partitions import Partition, SearchExhausted, is_tverberg_partition, search_tverberg
from .regions import core_member

DEFAULT_BUDGET = 200_000


class IndexNeverFree(ValueError):
    pass


class InvalidState(ValueError):
    pass


@dataclass(frozen=True, order=True)
class RadonState:
    a: frozenset
    b: frozenset

    def __post_init__(self):
        object.__setattr__(self, "a", frozenset(self.a))
        object.__setattr__(self, "b", frozenset(self.b))
        if not self.a or not self.b:
            raise InvalidState("both sides must be nonempty")
        if self.a & self.b:
            raise InvalidState("sides must be disjoint")

    def swapped(self) -> RadonState:
        return RadonState(self.b, self.a)

    def used(self) -> frozenset:
        return self.a | self.b

    def key(self) -> tuple:
        return (tuple(sorted(self.a)), tuple(sorted(self.b)))

    def to_json(self) -> dict:
        return {"a": [i + 1 for i in sorted(self.a)], "b": [i + 1 for i in sorted(self.b)]}


Move = tuple[str, str, int]  # ("add" | "remove", "a" | "b", index)


@dataclass
class FlipPath:
    states: list[RadonState]
    moves: list[Move] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.moves)

    def reversed_swapped(self) -> FlipPath:
        """The mirror path: run backwards with the sides exchanged, (B, A) to (A, B)."""
        inverse = {"add": "remove", "remove": "add"}
        other = {"a": "b", "b": "a"}
        states = [st.swapped() for st in reversed(self.states)]
        moves = [(inverse[op], other[side], i) for op, side, i in reversed(self.moves)]
        return FlipPath(states, moves)

    def to_json(self) -> dict:
        return {
            "states": [st.to_json() for st in self.states],
            "moves": [[op, side, i + 1] for op, side, i in self.moves],
        }


class _Hulls:
    """Memoized ``y in conv(ground[subset])`` tests."""

    def __init__(self, s: PointSet, y: Vector):
        self.s, self.y = s, y
        self.cache: dict[frozenset, bool] = {}

    def __call__(self, subset: frozenset) -> bool:
        hit = self.cache.get(subset)
        if hit is None:
            hit = isinstance(in_convex_hull(self.y, self.s, sorted(subset)), Feasible)
            self.cache[subset] = hit
        return hit


def _apply(st: RadonState, move: Move) -> tuple[frozenset, frozenset]:
    op, side, i = move
    a, b = set(st.a), set(st.b)
    target = a if side == "a" else b
    if op == "add":
        target.add(i)
    else:
        target.discard(i)
    return frozenset(a), frozenset(b)


def _neighbors(st: RadonState, n: int, contains) -> list[tuple[Move, RadonState]]:
    out = []
    for i in range(n):
        if i in st.a:
            if len(st.a) > 1 and contains(st.a - {i}):
                out.append((("remove", "a", i), RadonState(st.a - {i}, st.b)))
        elif i in st.b:
            if len(st.b) > 1 and contains(st.b - {i}):
                out.append((("remove", "b", i), RadonState(st.a, st.b - {i})))
        else:
            # growing a side never loses y
            out.append((("add", "a", i), RadonState(st.a | {i}, st.b)))
            out.append((("add", "b", i), RadonState(st.a, st.b | {i})))
    return out


def flip_neighbors(st: RadonState, s: PointSet, y: Sequence) -> list[RadonState]:
    return [nb for _, nb in _neighbors(st, len(s), _Hulls(s, to_vector(y)))]


def state_valid(st: RadonState, s: PointSet, y: Sequence) -> bool:
    y = to_vector(y)
    return all(isinstance(in_convex_hull(y, s, sorted(side)), Feasible) for side in (st.a, st.b))


def find_flip_path(s: PointSet, y: Sequence, start: RadonState, budget: int = DEFAULT_BUDGET) -> FlipPath | None:
    """Shortest single-move path from ``start`` to its swap, by breadth-first search.

    Returns None when the swap is not in start's component; raises
    :class:`SearchExhausted` when more than ``budget`` states get discovered.
    """
    y = to_vector(y)
    contains = _Hulls(s, y)
    if not (contains(start.a) and contains(start.b)):
        raise InvalidState("y is not in both hulls of the start state")
    target = start.swapped()
    parent: dict[RadonState, tuple[RadonState, Move] | None] = {start: None}
    queue = deque([start])
    while queue:
        st = queue.popleft()
        for move, nb in _neighbors(st, len(s), contains):
            if nb in parent:
                continue
            parent[nb] = (st, move)
            if nb == target:
                states, moves = [nb], []
                cur = nb
                while parent[cur] is not None:
                    prev, mv = parent[cur]
                    states.append(prev)
                    moves.append(mv)
                    cur = prev
                return FlipPath(states[::-1], moves[::-1])
            if len(parent) > budget:
                raise SearchExhausted(f"flip graph exceeded {budget} states")
            queue.append(nb)
    return None


def verify_path(path: FlipPath, s: PointSet, y: Sequence) -> bool:
    """Re-check every state with fresh LPs and every move for legality."""
    y = to_vector(y)
    if not path.states or len(path.moves) != len(path.states) - 1:
        return False
    if path.states[-1] != path.states[0].swapped():
        return False
    n = len(s)
    for st in path.states:
        if any(i < 0 or i >= n for i in st.used()) or not state_valid(st, s, y):
            return False
    for st, move, nxt in zip(path.states, path.moves, path.states[1:]):
        op, side, i = move
        if op not in ("add", "remove") or side not in ("a", "b"):
            return False
        if op == "add" and i in st.used():
            return False
        if op == "remove" and i not in (st.a if side == "a" else st.b):
            return False
        if _apply(st, move) != (nxt.a, nxt.b):
            return False
    return True


def core_certificate_from_path(path: FlipPath, s: PointSet, y: Sequence) -> dict[int, int]:
    """For every index, a step of the path at which it is in neither side.

    Each entry is re-verified as a Radon partition of s minus that index
    whose hulls both contain y.
    """
    y = to_vector(y)
    out: dict[int, int] = {}
    for i in s.indices:
        step = next((k for k, st in enumerate(path.states) if i not in st.used()), None)
        if step is None:
            raise IndexNeverFree(f"index {i} is used at every step")
        st = path.states[step]
        rest, keep = s.without([i])
        pos = {orig: k for k, orig in enumerate(keep)}
        part = Partition((tuple(pos[j] for j in st.a), tuple(pos[j] for j in st.b)))
        if is_tverberg_partition(rest, part, point=y) is None:
            raise IndexNeverFree(f"step {step} does not certify index {i}")
        out[i] = step
    return out


def expand_set_moves(s: PointSet, y: Sequence, pairs: Sequence[tuple[Iterable[int], Iterable[int]]]) -> FlipPath:
    """Refine a sequence of set-level Radon pairs into single moves.

    Between consecutive pairs all additions come first (in index order),
    then removals in an order that keeps y in both hulls.
    """
    y = to_vector(y)
    contains = _Hulls(s, y)
    pairs = [(frozenset(a), frozenset(b)) for a, b in pairs]
    st = RadonState(*pairs[0])
    path = FlipPath([st])

    def step(move):
        nonlocal st
        st = RadonState(*_apply(st, move))
        path.states.append(st)
        path.moves.append(move)

    for a2, b2 in pairs[1:]:
        for i in sorted(a2 - st.a):
            step(("add", "a", i))
        for i in sorted(b2 - st.b):
            step(("add", "b", i))
        removals = [("a", i) for i in sorted(st.a - a2)] + [("b", i) for i in sorted(st.b - b2)]
        order = _removal_order(st, removals, contains)
        if order is None:
            raise InvalidState(f"cannot shrink {st.key()} to {(sorted(a2), sorted(b2))} through y")
        for side, i in order:
            step(("remove", side, i))
    return path


def _removal_order(st: RadonState, removals, contains):
    if not removals:
        return []
    for k, (side, i) in enumerate(removals):
        a, b = st.a, st.b
        if side == "a":
            a = a - {i}
        else:
            b = b - {i}
        if a and b and contains(a) and contains(b):
            rest = _removal_order(RadonState(a, b), removals[:k] + removals[k + 1:], contains)
            if rest is not None:
                return [(side, i)] + rest
    return None


def path_from_tverberg_triple(s: PointSet, y: Sequence, a: Iterable[int], b: Iterable[int], c: Iterable[int]) -> FlipPath:
    """Flip (A, B) to (B, A) using a third part C through the same point."""
    a, b, c = frozenset(a), frozenset(b), frozenset(c)
    pairs = [(a, b), (a, b | c), (a, c), (a | b, c), (b, c), (b, a | c), (b, a)]
    return expand_set_moves(s, y, pairs)


def paper_flip_pairs() -> list[tuple[frozenset, frozenset]]:
    """(X1,X2) -> (X1 u X3, X2) -> (X3, X2) -> ... -> (X2, X1)."""
    x = [frozenset(b) for b in paper_blocks()]
    X = lambda i: x[(i - 1) % 5]
    return [
        (X(1), X(2)), (X(1) | X(3), X(2)), (X(3), X(2)), (X(3), X(2) | X(4)), (X(3), X(4)),
        (X(3) | X(5), X(4)), (X(5), X(4)), (X(5), X(4) | X(1)), (X(5), X(1)),
        (X(5) | X(2), X(1)), (X(2), X(1)),
    ]


@dataclass
class PaperReport:
    checks: dict[str, bool]
    details: dict[str, object] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(self.checks.values())


def verify_paper_example(points: PointSet | None = None) -> PaperReport:
    """Run the five checks on the ten-point set in R^5 (or a variant of it)."""
    s = points if points is not None else paper_counterexample()
    zero = (0,) * s.dim
    blocks = paper_blocks()
    checks: dict[str, bool] = {}
    details: dict[str, object] = {}

    memberships = [in_convex_hull(zero, s, b) for b in blocks]
    checks["origin-in-each-X"] = all(isinstance(v, Feasible) for v in memberships)
    details["X"] = [[i + 1 for i in b] for b in blocks]

    checks["consecutive-X-disjoint"] = all(
        not set(blocks[i]) & set(blocks[(i + 1) % 5]) for i in range(5)
    )

    try:
        path = expand_set_moves(s, zero, paper_flip_pairs())
        checks["flip-sequence"] = verify_path(path, s, zero)
        details["flip-moves"] = len(path)
    except (InvalidState, ValueError):
        checks["flip-sequence"] = False

    search = search_tverberg(s, 3)
    refuted = len(search.refutations)
    checks["no-tverberg-3-partition"] = search.witness is None and all(r.verify(s) for r in search.refutations)
    details["3-partitions-refuted"] = refuted
    details["3-partitions-examined"] = search.examined

    checks["origin-in-core"] = core_member(zero, s, 2, 1)
    return PaperReport(checks, details)
