"""Independent oracles used by the tests.

These deliberately avoid the library's own canonical-form code paths: the
relation oracle decides word equality in BS(p,q) by pinch reduction alone,
and the spiral walker enumerates cells step by step.  Keep them dumb.
"""

from __future__ import annotations

from fellowtravel.words import Word


def _letters(w: Word) -> list[tuple[str, int]]:
    # (gen, exponent) runs over {a, t}; gen 0 is a, gen 1 is t.
    runs: list[tuple[str, int]] = []
    for s in w:
        gen = "a" if s.base == 0 else "t"
        exp = -1 if s.inverted else 1
        if runs and runs[-1][0] == gen:
            runs[-1] = (gen, runs[-1][1] + exp)
        else:
            runs.append((gen, exp))
        if runs and runs[-1][1] == 0:
            runs.pop()
    return runs


def _normalize(runs: list[tuple[str, int]]) -> list[tuple[str, int]]:
    out: list[tuple[str, int]] = []
    for gen, exp in runs:
        if exp == 0:
            continue
        if out and out[-1][0] == gen:
            merged = out[-1][1] + exp
            out.pop()
            if merged:
                out.append((gen, merged))
        else:
            out.append((gen, exp))
    return out


def britton_reduce(w: Word, p: int, q: int) -> list[tuple[str, int]]:
    """Remove pinches t a^{kp} t^-1 -> a^{kq} and t^-1 a^{kq} t -> a^{kp}."""
    runs = _normalize(_letters(w))
    changed = True
    while changed:
        changed = False
        for i in range(len(runs)):
            if runs[i][0] != "t":
                continue
            # Locate the a-run (possibly absent) between this t and the next.
            if i + 1 < len(runs) and runs[i + 1][0] == "a":
                mid, nxt = runs[i + 1][1], i + 2
            else:
                mid, nxt = 0, i + 1
            if nxt >= len(runs) or runs[nxt][0] != "t":
                continue
            left, right = runs[i][1], runs[nxt][1]
            if left > 0 and right < 0 and mid % p == 0:
                new_mid = mid // p * q
            elif left < 0 and right > 0 and mid % q == 0:
                new_mid = mid // q * p
            else:
                continue
            step = 1 if left > 0 else -1
            replacement = []
            if left - step:
                replacement.append(("t", left - step))
            if new_mid:
                replacement.append(("a", new_mid))
            if right + step:
                replacement.append(("t", right + step))
            runs = _normalize(runs[:i] + replacement + runs[nxt + 1:])
            changed = True
            break
    return runs


def britton_is_identity(w: Word, p: int, q: int) -> bool:
    return not britton_reduce(w, p, q)


def britton_equal(w1: Word, w2: Word, p: int, q: int) -> bool:
    from fellowtravel.words import invert_word

    return britton_is_identity(w1 + invert_word(w2), p, q)


def walk_spiral(count: int) -> list[tuple[int, int]]:
    """First ``count`` cells of the square spiral, produced step by step.

    Walks counterclockwise: one step right from each ring's closing corner,
    then up, left, down, right along the ring edges.
    """
    cells = [(0, 0)]
    x = y = 0
    leg = 1
    while len(cells) < count:
        for dx, dy, steps in ((1, 0, 1), (0, 1, 2 * leg - 1), (-1, 0, 2 * leg),
                              (0, -1, 2 * leg), (1, 0, 2 * leg)):
            for _ in range(steps):
                x, y = x + dx, y + dy
                cells.append((x, y))
                if len(cells) == count:
                    return cells
        leg += 1
    return cells


def naive_staircase(n: int) -> int:
    """Plateau staircase straight from its recurrence, by linear scan."""
    bounds = [0, 1]
    while bounds[-1] <= n:
        i = len(bounds) - 1
        bounds.append(bounds[-1] * 2 ** (2 * i))
    for i in range(len(bounds) - 1):
        if bounds[i] <= n < bounds[i + 1]:
            return 2 * bounds[i]
    raise AssertionError("unreachable")
