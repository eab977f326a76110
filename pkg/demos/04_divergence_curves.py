"""Divergence curves: how far synchronous fellow travelers drift apart.

For every element g of a Cayley ball and every generator, trace the normal
forms of g and its neighbor with the same speed and record the running
maximum distance.  Automatic-style forms stay bounded; the Baumslag-Solitar
block form grows like log n; the lamplighter sweep grows like sqrt(n).
"""

import math

import fellowtravel as ft

# --- bounded baselines --------------------------------------------------------

line = ft.divergence_curve(ft.z_power_provider(), 6)
grid = ft.divergence_curve(ft.grid_lex_provider(), 6)
print("line curve:", line.values[:10], "...")
print("grid curve:", grid.values[:10], "...")
print()

# --- logarithmic growth ---------------------------------------------------------

bs_curve = ft.divergence_curve(ft.bs_provider(1, 2), 8)
print(f"bs(1,2) radius 8: s(n) reaches {bs_curve.final} by n={len(bs_curve) - 1}")
fit = ft.fit_bound(bs_curve.values, ft.GrowthModel.log())
print(f"least C with s(n) <= C*log2(n) + C: {fit:.2f}")
print()

# --- square-root growth ---------------------------------------------------------

lamp_curve = ft.divergence_curve(ft.lamp_provider(), 5)
print(f"lamp radius 5: s(n) reaches {lamp_curve.final} by n={len(lamp_curve) - 1}")
worst = max(s - 8 * math.sqrt(n + 1) - 16 for n, s in lamp_curve.samples())
print(f"slack under 8*sqrt(n+1) + 16: {-worst:.1f}")
print()

# --- CSV output ------------------------------------------------------------------

print(ft.curve_to_csv(grid)[:120], "...")
