"""Words, free reduction, and exact word metrics from Cayley balls.

Every group here is driven through the same tiny interface: an identity, a
generator action, and a canonical key.  Breadth-first search over that
interface gives exact distances and geodesic words.
"""

import fellowtravel as ft

# --- words -----------------------------------------------------------------

grid = ft.IntLattice(2)
w = grid.parse("abAabB")
print("word:           ", grid.format(w))
print("freely reduced: ", grid.format(ft.free_reduce(w)))
print("inverse:        ", grid.format(ft.invert_word(w)))
print("prefix 3:       ", grid.format(ft.word_prefix(w, 3)))
print("evaluates to:   ", ft.evaluate(grid, w))
print()

# --- balls and distances ----------------------------------------------------

for radius in range(5):
    ball = ft.bfs_ball(grid, radius)
    print(f"grid ball radius {radius}: {len(ball)} elements")
print()

ball = ft.bfs_ball(grid, 6)
for point in [(0, 0), (3, -2), (1, 1)]:
    word = ball.shortest_word(point)
    print(f"d({point}) = {ball.distance(point)}  geodesic = {grid.format(word)!r}")
print()

# --- the same machinery on a nonabelian group --------------------------------

bs = ft.BaumslagSolitar(1, 2)
ball = ft.bfs_ball(bs, 8)
print(f"bs(1,2) ball radius 8: {len(ball)} elements")
census = ball.census()
print("census:", dict(sorted(census.items())))

# a^16 compresses through the t-ladder: t^2 a^4 t^-2 spells it in 8 letters
a16 = ft.evaluate(bs, bs.parse("a" * 16))
print(f"d(a^16) = {ball.distance(a16)}")
print("geodesic:", bs.format(ball.shortest_word(a16)))
