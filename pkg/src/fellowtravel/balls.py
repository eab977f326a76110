"""Exact word metrics by breadth-first search over Cayley balls.

``bfs_ball`` enumerates every element within a given radius of the identity,
recording exact distances and BFS parents so shortest words can be read back.
Construction is single-writer; a finished ``BallIndex`` is read-only and safe
for concurrent lookups.
"""

from __future__ import annotations

from collections import Counter, deque
from typing import Any, Hashable, Iterator, NamedTuple, Optional

from .groups import GroupModel
from .words import GenSymbol, Word, invert_word

DEFAULT_BUDGET = 5_000_000


class BallBudgetError(RuntimeError):
    """Raised when a search would store more elements than its budget allows."""


class OutOfBallError(LookupError):
    """Raised when an element lies outside the indexed radius."""


class _Entry(NamedTuple):
    distance: int
    parent: Optional[Hashable]
    step: Optional[GenSymbol]
    element: Any


class BallIndex:
    """All elements at distance <= radius, with distances and BFS parents."""

    def __init__(self, model: GroupModel, radius: int, entries: dict):
        self.model = model
        self.radius = radius
        self._entries = entries

    def __len__(self) -> int:
        return len(self._entries)

    def __contains__(self, g: Any) -> bool:
        return self.model.key(g) in self._entries

    def elements(self) -> Iterator[Any]:
        """Elements in discovery order: by distance, then deterministic BFS order."""
        for entry in self._entries.values():
            yield entry.element

    def distance(self, g: Any) -> int:
        key = self.model.key(g)
        entry = self._entries.get(key)
        if entry is None:
            raise OutOfBallError(
                f"element with key {key!r} is outside the radius-{self.radius} "
                f"ball of {self.model.name}; rebuild with a larger radius")
        return entry.distance

    def shortest_word(self, g: Any) -> Word:
        """A geodesic word for ``g``, read back along BFS parents."""
        key = self.model.key(g)
        entry = self._entries.get(key)
        if entry is None:
            raise OutOfBallError(
                f"element with key {key!r} is outside the radius-{self.radius} "
                f"ball of {self.model.name}; rebuild with a larger radius")
        steps: list[GenSymbol] = []
        while entry.step is not None:
            steps.append(entry.step)
            entry = self._entries[entry.parent]
        return tuple(reversed(steps))

    def census(self) -> Counter:
        """Element counts per exact distance."""
        counts: Counter = Counter()
        for entry in self._entries.values():
            counts[entry.distance] += 1
        return counts


def bfs_ball(model: GroupModel, radius: int,
             budget: int = DEFAULT_BUDGET) -> BallIndex:
    """Breadth-first search from the identity out to the given radius.

    Visits all directions of the symmetrized alphabet in the model's fixed
    order, so the index (and every shortest word read from it) is reproducible
    across runs.  Aborts with ``BallBudgetError`` rather than exceed
    ``budget`` stored elements.
    """
    if radius < 0:
        raise ValueError("radius must be nonnegative")
    identity = model.identity()
    entries: dict = {model.key(identity): _Entry(0, None, None, identity)}
    frontier = deque([identity])
    directions = model.directions()
    for dist in range(1, radius + 1):
        next_frontier: deque = deque()
        while frontier:
            g = frontier.popleft()
            gkey = model.key(g)
            for s in directions:
                h = model.apply(g, s)
                hkey = model.key(h)
                if hkey in entries:
                    continue
                if len(entries) >= budget:
                    raise BallBudgetError(
                        f"ball of {model.name} exceeded the element budget "
                        f"of {budget} at radius {dist} (requested {radius})")
                entries[hkey] = _Entry(dist, gkey, s, h)
                next_frontier.append(h)
        frontier = next_frontier
    return BallIndex(model, radius, entries)


class GrowingBall:
    """A distance oracle that enlarges its ball on demand.

    Lookups that fall outside the current radius trigger a rebuild at a
    larger radius, so callers never need to size the oracle in advance.
    Growth is deterministic and bounded only by the element budget.
    """

    def __init__(self, model: GroupModel, radius: int = 2,
                 budget: int = DEFAULT_BUDGET, step: int = 2):
        self.model = model
        self.budget = budget
        self.step = step
        self._ball = bfs_ball(model, radius, budget)

    @property
    def radius(self) -> int:
        return self._ball.radius

    @property
    def ball(self) -> BallIndex:
        return self._ball

    def _grow(self) -> None:
        self._ball = bfs_ball(self.model, self._ball.radius + self.step,
                              self.budget)

    def distance(self, g: Any) -> int:
        while True:
            try:
                return self._ball.distance(g)
            except OutOfBallError:
                self._grow()

    def shortest_word(self, g: Any) -> Word:
        while True:
            try:
                return self._ball.shortest_word(g)
            except OutOfBallError:
                self._grow()


class SplitBall:
    """Exact distances far beyond the stored radius, by midpoint splits.

    Any geodesic to an element at distance D passes through a midpoint g with
    d(g) = ceil(D/2), so d(delta) = min over ball elements g of
    d(g) + d(g^-1 * delta) as soon as the ball radius reaches ceil(D/2).
    Requires a model with composition (``multiply``/``invert``); grows its
    ball only when a query exceeds twice the current radius.
    """

    def __init__(self, model: GroupModel, radius: int = 4,
                 budget: int = DEFAULT_BUDGET, step: int = 1):
        if not model.has_composition:
            raise ValueError(f"{model.name} has no composition; use GrowingBall")
        self.model = model
        self.budget = budget
        self.step = step
        self._cache: dict = {}
        self._install(bfs_ball(model, radius, budget))

    def _install(self, ball: BallIndex) -> None:
        self._ball = ball
        # BFS discovery order is nondecreasing in distance.
        self._scan = [(entry.distance, entry.element)
                      for entry in ball._entries.values()]
        self._cache.clear()

    @property
    def radius(self) -> int:
        return self._ball.radius

    @property
    def ball(self) -> BallIndex:
        return self._ball

    def _grow(self) -> None:
        self._install(bfs_ball(self.model, self._ball.radius + self.step,
                               self.budget))

    def _split(self, g):
        """Best (total, midpoint, remainder key) split over the current ball.

        Scans midpoints in nondecreasing distance; since word length is
        symmetric under inversion, d(mid^-1 * g) = d(g^-1 * mid), so one
        inversion of the query serves the whole scan.  The scan may stop once
        its distance passes half the best total: a strictly better split
        would have shown its midpoint earlier.
        """
        model = self.model
        entries = self._ball._entries
        scan = model.product_scanner(model.invert(g), self._ball.radius)
        best = None
        for dist, mid in self._scan:
            if best is not None and dist > (best[0] + 1) // 2:
                break
            rest_key = scan(mid)
            if rest_key is None:
                continue
            entry = entries.get(rest_key)
            if entry is None:
                continue
            total = dist + entry.distance
            if best is None or total < best[0]:
                best = (total, mid, rest_key)
        return best

    def distance(self, g) -> int:
        key = self.model.key(g)
        hit = self._cache.get(key)
        if hit is not None:
            return hit
        entry = self._ball._entries.get(key)
        if entry is not None:
            return entry.distance
        while True:
            best = self._split(g)
            if best is not None:
                self._cache[key] = best[0]
                return best[0]
            self._grow()

    def shortest_word(self, g) -> Word:
        key = self.model.key(g)
        entry = self._ball._entries.get(key)
        if entry is not None:
            return self._ball.shortest_word(g)
        while True:
            best = self._split(g)
            if best is not None:
                _, mid, rest_key = best
                # The scan found delta^-1 * mid; its geodesic reversed is a
                # geodesic for the remainder mid^-1 * delta.
                rest_inverse = self._ball._entries[rest_key].element
                return self._ball.shortest_word(mid) + \
                    invert_word(self._ball.shortest_word(rest_inverse))
            self._grow()


def make_distance_oracle(model: GroupModel, radius: int = 2,
                         budget: int = DEFAULT_BUDGET):
    """The preferred on-demand distance oracle for a model."""
    if model.has_composition:
        return SplitBall(model, max(radius, 2), budget)
    return GrowingBall(model, radius, budget)


def distance_between(oracle, model: GroupModel, g_word: Word, h_word: Word) -> int:
    """Distance between two elements given by words, via the difference element."""
    from .groups import evaluate

    delta = evaluate(model, invert_word(g_word) + h_word)
    return oracle.distance(delta)
