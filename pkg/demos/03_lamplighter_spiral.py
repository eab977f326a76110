"""The plane lamplighter and its spiral-sweep normal form.

The canonical word walks the square spiral past the last lit lamp, toggling
lamps as it passes, then parks the lighter.  Because the spiral reaches cell
k only after about sqrt(k) rings, neighbor words diverge like sqrt(n), and
the one-lamp family realizes that rate exactly.
"""

import fellowtravel as ft
from fellowtravel.lamplighter import (LampElement, lamp_normal_form,
                                      lamp_sharpness_family, spiral,
                                      spiral_index)

lamp = ft.PlaneLamplighter()

# --- the spiral --------------------------------------------------------------

print("first spiral cells:", [spiral(k) for k in range(10)])
print("index of (2, -2):  ", spiral_index((2, -2)))
for k in (10, 100, 10_000, 1_000_000):
    x, y = spiral(k)
    r = max(abs(x), abs(y))
    print(f"cell {k}: ({x}, {y})  ring {r}  bounds "
          f"[{(2 * r - 1) ** 2 - 1}, {(2 * r + 1) ** 2 - 1}]")
print()

# --- normal forms ------------------------------------------------------------

examples = [
    LampElement(frozenset()),
    LampElement(frozenset({(0, 0)})),
    LampElement(frozenset({(1, 0)})),
    LampElement(frozenset({(1, 1), (-1, 0)}), (0, 1)),
]
for g in examples:
    word = lamp_normal_form(g)
    lamps = sorted(g.support)
    print(f"lamps {lamps!s:22} at {g.position}: {lamp.format(word)!r}")
print()

# --- the extremal family -----------------------------------------------------

# One lamp at spiral cell m: toggling it as generator c forces the two
# canonical paths a full round trip apart after m + 1 steps.
oracle = ft.balls.make_distance_oracle(lamp, 4)
c = ft.GenSymbol(2, False)
for m in (1, 4, 9, 16):
    probe = lamp_sharpness_family(m)
    w1 = lamp_normal_form(probe.element)
    w2 = lamp_normal_form(lamp.apply(probe.element, c))
    profile = ft.divergence(lamp, w1, w2, oracle)
    print(f"m={m:3} lamp at {spiral(m)!s:9} claimed {probe.claimed_distance:2} "
          f"measured {profile[m + 1]:2}")
