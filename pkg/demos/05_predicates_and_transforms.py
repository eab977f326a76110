"""Geometric predicates and the three normal-form transformations.

Slowing a form's divergence is easy if nothing else is asked of it: pad
every word with a loop prefix, or interleave loops after each letter.  The
price is quasigeodesity and quasiregularity, checked here exhaustively over
balls.  Conversely, a quasiregular form can always be upgraded to a
quasiprefix-closed one at a fixed multiple of its constant.
"""

import fellowtravel as ft
from fellowtravel.predicates import check_nf_property
from fellowtravel.transforms import (quasiprefix_closure, repeat_loop_chooser,
                                     searched_completion_rule,
                                     with_interleaved_loops, with_loop_prefix)

grid = ft.grid_lex_provider()
model = grid.model
loop = model.parse("abAB")


def verdict(provider, mode, constant=None, radius=5):
    witness = check_nf_property(provider, mode, radius, constant=constant)
    if witness is None:
        return "pass"
    return f"witness {model.format(witness.word)!r}"


# --- the lexicographic grid form is as tame as it gets -------------------------

print("grid quasigeodesic(1):", verdict(grid, "quasigeodesic", 1))
print("grid prefix-closed:   ", verdict(grid, "prefix_closed"))
print()

# --- loop padding slows divergence but wrecks both properties ------------------

padded = with_loop_prefix(grid, loop)
print("padded nf of (1,1):", model.format(padded.nf((1, 1))))
curve = ft.divergence_curve(padded, 6)
print("padded curve fits sqrt with C =",
      round(ft.fit_bound(curve.values, ft.GrowthModel.sqrt()), 2))
print("padded quasigeodesic(16):", verdict(padded, "quasigeodesic", 16))
print("padded quasiregular(4):  ", verdict(padded, "quasiregular", 4))
print()

# --- interleaved loops: two-thirds power divergence -----------------------------

braided = with_interleaved_loops(grid, repeat_loop_chooser(loop))
curve = ft.divergence_curve(braided, 6)
print("braided curve fits n^(2/3) with C =",
      round(ft.fit_bound(curve.values, ft.GrowthModel.pow(2 / 3)), 2))
print()

# --- closing a quasiregular form under prefixes ----------------------------------

toy = ft.patched(ft.z_power_provider(),
                 {(2,): ft.IntLattice(1).parse("aaaA")}, name="z-toy")
print("toy prefix-closed:", verdict(toy, "prefix_closed", radius=6))
print("toy quasiregular(2):", verdict(toy, "quasiregular", 2, radius=6))
closed = quasiprefix_closure(toy, searched_completion_rule(toy, 2))
print("closed nf of 6:", toy.model.format(closed.nf((6,))))
print("closed quasiprefix-closed(8):",
      verdict(closed, "quasiprefix_closed", 8, radius=6))
