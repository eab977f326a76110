"""Geometric predicates on normal forms, checked exhaustively over a ball.

Each check either passes or produces a concrete witness word:

- quasigeodesic(C): every normal form satisfies |w| <= C*(d(g) + 1);
- prefix_closed: every prefix of a normal form is itself a normal form;
- quasiregular(c): every prefix extends to a normal form with at most c
  extra letters (searched over all extensions);
- quasiprefix_closed(C): the extension can be taken from the remaining
  suffix itself.

A pass is relative to the inspected radius; witnesses are unconditional.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .balls import DEFAULT_BUDGET, BallIndex, bfs_ball
from .providers import NormalFormProvider
from .words import Word

MODES = ("quasigeodesic", "prefix_closed", "quasiregular", "quasiprefix_closed")

# Extension search is exponential in the constant; refuse silly values.
SEARCH_CAP = 8


@dataclass(frozen=True)
class NormalFormWitness:
    mode: str
    constant: Optional[float]
    word: Word          # the offending normal form or prefix
    reason: str


def check_nf_property(provider: NormalFormProvider, mode: str, radius: int,
                      constant: Optional[float] = None,
                      ball: Optional[BallIndex] = None,
                      budget: int = DEFAULT_BUDGET,
                      search_cap: int = SEARCH_CAP) -> Optional[NormalFormWitness]:
    """Run one predicate over every element of the radius ball.

    Returns None on a clean pass, otherwise the first witness in
    deterministic ball order.
    """
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}; expected one of {MODES}")
    needs_constant = mode != "prefix_closed"
    if needs_constant and constant is None:
        raise ValueError(f"mode {mode!r} requires a constant")
    if mode == "quasiregular" and constant > search_cap:
        raise ValueError(
            f"quasiregular search with c={constant} exceeds the cap "
            f"{search_cap}; raise search_cap explicitly if you mean it")
    model = provider.model
    if ball is None:
        ball = bfs_ball(model, radius, budget)

    if mode == "quasigeodesic":
        for g in ball.elements():
            w = provider.nf(g)
            if len(w) > constant * (ball.distance(g) + 1):
                return NormalFormWitness(
                    mode, constant, w,
                    f"|w|={len(w)} exceeds {constant}*(d+1) with d={ball.distance(g)}")
        return None

    directions = model.directions()

    def extension_exists(element, prefix: Word, limit: int) -> bool:
        # Depth-first over all extension words of length <= limit.
        if provider.nf(element) == prefix:
            return True
        if limit == 0:
            return False
        for s in directions:
            if extension_exists(model.apply(element, s), prefix + (s,), limit - 1):
                return True
        return False

    for g in ball.elements():
        w = provider.nf(g)
        element = model.identity()
        for j in range(1, len(w) + 1):
            element = model.apply(element, w[j - 1])
            prefix = w[:j]
            if mode == "prefix_closed":
                if provider.nf(element) != prefix:
                    return NormalFormWitness(mode, None, prefix,
                                             "prefix is not a normal form")
            elif mode == "quasiregular":
                if not extension_exists(element, prefix, int(constant)):
                    return NormalFormWitness(
                        mode, constant, prefix,
                        f"no extension of length <= {int(constant)} reaches a normal form")
            else:  # quasiprefix_closed
                limit = min(int(constant), len(w) - j)
                probe = element
                ok = provider.nf(probe) == prefix
                for i in range(limit):
                    if ok:
                        break
                    probe = model.apply(probe, w[j + i])
                    ok = provider.nf(probe) == w[:j + i + 1]
                if not ok:
                    return NormalFormWitness(
                        mode, constant, prefix,
                        f"no suffix prefix of length <= {int(constant)} "
                        "reaches a normal form")
    return None
