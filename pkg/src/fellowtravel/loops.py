"""Ladder decomposition of Cayley-graph loops into small cells.

A loop w = s_1 ... s_n is cut along the normal forms u_i of its prefix
elements into two end loops (s_1 u_1^-1 and u_{n-1} s_n) and, for each edge
s_{i+1}, a ladder of cells between the paths u_i and u_{i+1}.  Rungs are
geodesic connectors between same-level prefix points, so a cell at level j
is at most s(j) + s(j-1) + 2 letters long when the provider's divergence
curve is s.  Every cell is itself a loop.
"""

from __future__ import annotations

from dataclasses import dataclass

from .groups import evaluate
from .providers import NormalFormProvider
from .words import Word, invert_word


class NotALoopError(ValueError):
    """Raised when a word required to close up does not evaluate to identity."""


@dataclass(frozen=True)
class LoopCell:
    kind: str      # "end", "ladder", or "top"
    index: int     # which edge of the loop the cell belongs to
    level: int     # height j along the normal forms
    word: Word


def loop_cells(w: Word, provider: NormalFormProvider, oracle) -> list[LoopCell]:
    """Decompose a loop into identity-evaluating cells.

    ``oracle`` supplies geodesic connector words (a ``BallIndex`` or
    ``GrowingBall``); a connector outside a fixed ball raises its
    out-of-range error.  The empty loop has no cells.
    """
    model = provider.model
    if model.key(evaluate(model, w)) != model.key(model.identity()):
        raise NotALoopError("word does not evaluate to the identity")
    n = len(w)
    if n == 0:
        return []
    forms: list[Word] = []
    g = model.identity()
    for s in w[:n - 1]:
        g = model.apply(g, s)
        forms.append(provider.nf(g))
    if n == 1:
        # A one-letter loop is already a cell; no generator of the built-in
        # models is trivial, so this only happens for degenerate custom models.
        return [LoopCell("end", 0, 1, w)]
    cells = [LoopCell("end", 0, max(1, len(forms[0])),
                      (w[0],) + invert_word(forms[0]))]
    for i in range(n - 2):
        left, right = forms[i], forms[i + 1]
        top = max(len(left), len(right))
        prev_rung: Word = ()
        for j in range(1, top + 1):
            up = (left[j - 1],) if j <= len(left) else ()
            down = (right[j - 1].inverse(),) if j <= len(right) else ()
            if j < top:
                delta = evaluate(model,
                                 invert_word(left[:j]) + right[:j])
                rung = oracle.shortest_word(delta)
                cells.append(LoopCell("ladder", i + 1, j,
                                      up + rung + down + invert_word(prev_rung)))
                prev_rung = rung
            else:
                cells.append(LoopCell("top", i + 1, j,
                                      up + (w[i + 1],) + down + invert_word(prev_rung)))
    cells.append(LoopCell("end", n - 1, max(1, len(forms[-1])),
                          forms[-1] + (w[n - 1],)))
    return cells
