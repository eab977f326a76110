"""The wreath product Z_2 wr Z^2: lamps on the square grid.

An element is a pair (support, position): the finite set of lit lamps and
the lamplighter's location.  Generators ``a`` and ``b`` translate the
position by unit steps, and the involution ``c`` toggles the lamp underfoot.

Normal forms follow a fixed space-filling walk: the counterclockwise square
spiral starting (0,0) -> (1,0).  ``spiral`` and ``spiral_index`` convert both
ways in closed form, and consecutive spiral cells differ by a unit step, so
the walk itself is a path in the grid.  The index of a cell at Chebyshev
radius r always lies between (2r-1)^2 - 1 and (2r+1)^2 - 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

from .groups import GroupModel
from .words import GenSymbol, Word

_A, _B, _C = 0, 1, 2

LAMP_LETTERS = ("a", "b", "c")

Point = tuple[int, int]

_STEP_SYMBOL = {
    (1, 0): GenSymbol(_A, False),
    (-1, 0): GenSymbol(_A, True),
    (0, 1): GenSymbol(_B, False),
    (0, -1): GenSymbol(_B, True),
}


@dataclass(frozen=True)
class LampElement:
    support: frozenset[Point]
    position: Point = (0, 0)


LAMP_IDENTITY = LampElement(frozenset())


def spiral(k: int) -> Point:
    """The k-th cell of the spiral walk, in closed form."""
    if k < 0:
        raise ValueError("spiral index must be nonnegative")
    if k == 0:
        return (0, 0)
    r = (math.isqrt(k) + 1) // 2
    j = k - (2 * r - 1) ** 2
    side, offset = divmod(j, 2 * r)
    if side == 0:    # up the right edge, from (r, -r+1) to (r, r)
        return (r, -r + 1 + offset)
    if side == 1:    # left along the top edge, to (-r, r)
        return (r - 1 - offset, r)
    if side == 2:    # down the left edge, to (-r, -r)
        return (-r, r - 1 - offset)
    return (-r + 1 + offset, -r)  # right along the bottom edge, to (r, -r)


def spiral_index(p: Point) -> int:
    """Inverse of ``spiral``, in closed form."""
    x, y = p
    r = max(abs(x), abs(y))
    if r == 0:
        return 0
    start = (2 * r - 1) ** 2
    if x == r and y > -r:
        return start + (y + r - 1)
    if y == r:
        return start + 2 * r + (r - 1 - x)
    if x == -r:
        return start + 4 * r + (r - 1 - y)
    return start + 6 * r + (x + r - 1)


def chebyshev(p: Point) -> int:
    return max(abs(p[0]), abs(p[1]))


def lamp_mul_gen(g: LampElement, s: GenSymbol) -> LampElement:
    """Right multiplication: a/b move the lamplighter, c toggles the lamp here."""
    if s.base == _C:
        support = g.support ^ {g.position}
        return LampElement(support, g.position)
    step = -1 if s.inverted else 1
    x, y = g.position
    position = (x + step, y) if s.base == _A else (x, y + step)
    return LampElement(g.support, position)


def lamp_multiply(g: LampElement, h: LampElement) -> LampElement:
    """Wreath product law: h's lamps are planted relative to g's position."""
    gx, gy = g.position
    shifted = frozenset((x + gx, y + gy) for x, y in h.support)
    return LampElement(g.support ^ shifted, (gx + h.position[0], gy + h.position[1]))


def lamp_invert(g: LampElement) -> LampElement:
    gx, gy = g.position
    support = frozenset((x - gx, y - gy) for x, y in g.support)
    return LampElement(support, (-gx, -gy))


class PlaneLamplighter(GroupModel):
    """Group model for lamps over the grid; ``c`` is involutive."""

    name = "lamp"
    letters = LAMP_LETTERS
    involutions = frozenset({_C})
    has_composition = True

    def identity(self) -> LampElement:
        return LAMP_IDENTITY

    def apply(self, g: LampElement, s: GenSymbol) -> LampElement:
        return lamp_mul_gen(g, s)

    def key(self, g: LampElement):
        return (tuple(sorted(g.support)), g.position)

    def multiply(self, g: LampElement, h: LampElement) -> LampElement:
        return lamp_multiply(g, h)

    def invert(self, g: LampElement) -> LampElement:
        return lamp_invert(g)

    def product_scanner(self, g, radius):
        # A word for g*h must walk the lighter to the product position, visit
        # every lit lamp, and toggle each one; those lower bounds prune the
        # scan before any product is materialized in full.
        gx, gy = g.position
        g_support = g.support
        # Lamps of g too far out to appear in any in-radius product; h must
        # cancel them, which pins points of h's support.
        required = frozenset((x - gx, y - gy) for x, y in g_support
                             if abs(x) + abs(y) + 1 > radius)

        def scan(h):
            h_support = h.support
            if not required <= h_support:
                return None
            hx, hy = h.position
            x, y = gx + hx, gy + hy
            walk = abs(x) + abs(y)
            if walk > radius:
                return None
            support = set(g_support)
            for sx, sy in h_support:
                point = (sx + gx, sy + gy)
                if point in support:
                    support.remove(point)
                else:
                    support.add(point)
            toggles = len(support)
            if toggles + walk > radius:
                return None
            for px, py in support:
                if toggles + abs(px) + abs(py) > radius:
                    return None
            return (tuple(sorted(support)), (x, y))

        return scan


def _walk_step(src: Point, dst: Point) -> GenSymbol:
    return _STEP_SYMBOL[(dst[0] - src[0], dst[1] - src[1])]


def lamp_normal_form(g: LampElement) -> Word:
    """Canonical word: sweep the spiral past every lit lamp, then park.

    The word walks the spiral from cell 0 to the last lit cell, emitting a
    move letter per step and ``c`` on arrival at each lit lamp (a leading
    ``c`` if the origin is lit), then continues forward or retreats backward
    along the spiral to the lamplighter's cell.  Every prefix of such a word
    is again of this shape, so the normal form is prefix-closed.
    """
    out: list[GenSymbol] = []
    if g.support:
        sweep_end = max(spiral_index(p) for p in g.support)
    else:
        sweep_end = 0
    if (0, 0) in g.support:
        out.append(GenSymbol(_C, False))
    here = (0, 0)
    for i in range(1, sweep_end + 1):
        there = spiral(i)
        out.append(_walk_step(here, there))
        if there in g.support:
            out.append(GenSymbol(_C, False))
        here = there
    park = spiral_index(g.position)
    step = 1 if park >= sweep_end else -1
    for i in range(sweep_end, park, step):
        there = spiral(i + step)
        out.append(_walk_step(here, there))
        here = there
    return tuple(out)


class LampSharpnessProbe(NamedTuple):
    element: LampElement      # one lamp lit at spiral cell m, lighter at origin
    claimed_distance: int     # 2 * (|x_m| + |y_m| + 1)


def lamp_sharpness_family(m: int) -> LampSharpnessProbe:
    """The family of single-lamp elements witnessing square-root divergence.

    With the lamp at spiral cell m = (x_m, y_m), the canonical paths of the
    element and of its c-successor disagree after m + 1 steps by a round trip
    to the origin: distance exactly 2(|x_m| + |y_m| + 1).  For m >= 1 this is
    at least sqrt(m + 1) by the spiral ring bounds.
    """
    if m < 0:
        raise ValueError("m must be nonnegative")
    x, y = spiral(m)
    element = LampElement(frozenset({(x, y)}))
    return LampSharpnessProbe(element, 2 * (abs(x) + abs(y) + 1))
