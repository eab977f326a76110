"""Block canonical forms in the Baumslag-Solitar groups BS(p,q).

Every element is a^{e_l} t^{s_l} ... a^{e_1} t^{s_1} a^k with small block
powers and an arbitrary integer tail; multiplication by a generator rewrites
only the tail region.  The two-sided length estimate and the family of
logarithmically diverging neighbor pairs both fall out of the block shape.
"""

import fellowtravel as ft
from fellowtravel.baumslag import (bs_sharpness_family, bs_to_word,
                                   calibrate_metric_constants, bs_metric_bounds)

bs = ft.BaumslagSolitar(1, 2)

# --- rewriting ---------------------------------------------------------------

for text in ("taT", "aatA", "ttaTT", "Ata"):
    nf = ft.bs_normal_form_of(bs.parse(text), bs.params)
    print(f"{text:8} -> {bs.format(bs_to_word(nf))!r:10} "
          f"(blocks={nf.blocks}, tail={nf.tail})")
print()

# --- the length estimate -----------------------------------------------------

ball = ft.bfs_ball(bs, 8)
consts = calibrate_metric_constants(ball)
print("calibrated constants:", tuple(round(c, 3) for c in consts))
for text in ("aaaa", "ta", "ttaTT"):
    g = ft.evaluate(bs, bs.parse(text))
    lower, upper = bs_metric_bounds(g.t_length, g.tail, consts)
    print(f"{text:8} distance {ball.distance(g)} in [{lower:.2f}, {upper:.2f}]")
print()

# --- sharply diverging neighbors ---------------------------------------------

# The pair (a^{4m}, t a^{2m}) differs by one t, yet after 2m synchronous
# steps the paths sit a growing distance apart.
oracle = ft.GrowingBall(bs, 8)
for m in (1, 2, 4, 8, 16):
    probe = bs_sharpness_family(m, bs.params)
    w1 = ft.word_prefix(probe.word, probe.index)
    w2 = ft.word_prefix(probe.word_t, probe.index)
    profile = ft.divergence(bs, w1, w2, oracle)
    print(f"m={m:3}  split at n={probe.index:3}  divergence={profile[probe.index]}")
