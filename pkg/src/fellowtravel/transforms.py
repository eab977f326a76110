"""Transformations that rebuild a normal form with controlled divergence.

Three constructions, each returning a fresh provider over the same model:

- ``with_loop_prefix``: prepend u^{l^2} (u a fixed loop, l the word length);
  slows divergence to square-root order at the cost of quasigeodesity.
- ``with_interleaved_loops``: splice a loop of length about sqrt(k) after the
  k-th letter; divergence falls to the two-thirds power.
- ``quasiprefix_closure``: given a completion rule witnessing quasiregularity
  with constant c, insert out-and-back excursions after each block of c+1
  letters so that every prefix reaches a normal form along its own suffix
  within 4c letters.

Transformed words are computed on demand; nothing is materialized.  The
completion memo is single-writer per provider instance.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

from .groups import evaluate
from .loops import NotALoopError
from .providers import NormalFormProvider
from .words import GenSymbol, Word, invert_word


class LoopBandError(ValueError):
    """Raised when a chosen loop leaves its required length band."""


class CompletionError(ValueError):
    """Raised when a completion rule emits an invalid extension."""


@dataclass(frozen=True)
class LoopChooser:
    """Per-index loop picker with a square-root length band.

    ``rule(k, w)`` must return a loop u_k with
    lower*sqrt(k) <= |u_k| <= upper*sqrt(k).
    """

    rule: Callable[[int, Word], Word]
    lower: float
    upper: float


def repeat_loop_chooser(loop: Word) -> LoopChooser:
    """u_k = loop repeated ceil(sqrt(k)) times; band (|loop|, 2|loop|)."""
    if not loop:
        raise NotALoopError("loop must be nonempty")
    size = len(loop)

    def rule(k: int, _w: Word) -> Word:
        r = math.isqrt(k)
        if r * r < k:
            r += 1
        return loop * r

    return LoopChooser(rule, float(size), 2.0 * size)


def _require_loop(provider: NormalFormProvider, u: Word) -> None:
    model = provider.model
    if model.key(evaluate(model, u)) != model.key(model.identity()):
        raise NotALoopError("the given word does not evaluate to the identity")


def with_loop_prefix(provider: NormalFormProvider, loop: Word) -> NormalFormProvider:
    """nf'(g) = loop^{l^2} + nf(g) with l = |nf(g)|.

    Injective because the total length determines l, hence the original
    suffix.  The identity keeps the empty word.
    """
    if not loop:
        raise NotALoopError("loop must be nonempty")
    _require_loop(provider, loop)
    base = provider.nf

    def nf(g) -> Word:
        w = base(g)
        return loop * (len(w) * len(w)) + w

    label = provider.model.format(loop)
    return NormalFormProvider(provider.model, nf,
                              f"{provider.name}+loop-prefix[{label}]")


def with_interleaved_loops(provider: NormalFormProvider,
                           chooser: LoopChooser) -> NormalFormProvider:
    """nf'(g) = s_1 u_1 s_2 u_2 ... s_m u_m; the empty word stays empty."""
    base = provider.nf
    model = provider.model
    identity_key = model.key(model.identity())

    def nf(g) -> Word:
        w = base(g)
        if not w:
            return ()
        parts: list[Word] = []
        for k in range(1, len(w) + 1):
            u = chooser.rule(k, w)
            bound = math.sqrt(k)
            if not chooser.lower * bound <= len(u) <= chooser.upper * bound:
                raise LoopBandError(
                    f"loop for k={k} has length {len(u)}, outside "
                    f"[{chooser.lower}, {chooser.upper}]*sqrt(k)")
            if model.key(evaluate(model, u)) != identity_key:
                raise NotALoopError(f"chosen word for k={k} is not a loop")
            parts.append((w[k - 1],) + u)
        return tuple(s for part in parts for s in part)

    return NormalFormProvider(model, nf, f"{provider.name}+interleave")


@dataclass(frozen=True)
class CompletionRule:
    """Witness of quasiregularity: prefix -> extension of length <= limit."""

    extend: Callable[[Word], Word]
    limit: int


def searched_completion_rule(provider: NormalFormProvider, limit: int) -> CompletionRule:
    """Synthesize a completion rule by bounded search, memoized per prefix.

    Searches extensions in order of length, then direction order, and
    returns the first x with nf(pi(prefix + x)) == prefix + x.  Raises
    ``CompletionError`` for prefixes admitting none (the provider is then
    not quasiregular with this constant).
    """
    model = provider.model
    memo: dict[Word, Word] = {}
    directions = model.directions()

    def extend(prefix: Word) -> Word:
        hit = memo.get(prefix)
        if hit is not None:
            return hit
        frontier = [(evaluate(model, prefix), ())]
        for _depth in range(limit + 1):
            for element, x in frontier:
                if provider.nf(element) == prefix + x:
                    memo[prefix] = x
                    return x
            frontier = [(model.apply(element, s), x + (s,))
                        for element, x in frontier for s in directions]
        raise CompletionError(
            f"no extension of length <= {limit} completes the prefix "
            f"{model.format(prefix)!r}")

    return CompletionRule(extend, limit)


def quasiprefix_closure(provider: NormalFormProvider,
                        rule: CompletionRule) -> NormalFormProvider:
    """Insert excursions q(u) = x y y^-1 x^-1 after each (c+1)-letter block.

    With x the rule's completion of the running prefix and y the first
    positive generator repeated c - |x| times, each excursion is a loop of
    exactly 2c letters.  A rule with c = 0 certifies prefix-closedness and
    the provider is returned unchanged.  The resulting form is
    quasiprefix-closed with constant 4c.
    """
    c = rule.limit
    if c == 0:
        return provider
    model = provider.model
    base = provider.nf
    filler = GenSymbol(0, False)
    memo: dict[Word, Word] = {}

    def excursion(prefix: Word) -> Word:
        hit = memo.get(prefix)
        if hit is not None:
            return hit
        x = rule.extend(prefix)
        if len(x) > c:
            raise CompletionError(
                f"rule returned {len(x)} letters for a limit of {c}")
        completed = prefix + x
        if base(evaluate(model, completed)) != completed:
            raise CompletionError(
                f"rule extension {model.format(x)!r} does not complete "
                f"{model.format(prefix)!r} to a normal form")
        y = (filler,) * (c - len(x))
        loop = x + y + invert_word(y) + invert_word(x)
        memo[prefix] = loop
        return loop

    def nf(g) -> Word:
        w = base(g)
        size = c + 1
        full_blocks = len(w) // size
        parts: list[Word] = []
        for i in range(full_blocks):
            parts.append(w[i * size:(i + 1) * size])
            if i < full_blocks - 1:
                parts.append(excursion(w[:(i + 1) * size]))
        parts.append(w[full_blocks * size:])
        return tuple(s for part in parts for s in part)

    return NormalFormProvider(model, nf, f"{provider.name}+qpc[{c}]")
