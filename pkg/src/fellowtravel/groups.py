"""Abstract group models and the free-abelian lattice instances.

A ``GroupModel`` exposes exactly what exhaustive Cayley-graph search needs:
an identity element, right multiplication by a single generator symbol, and a
canonical key that is injective on elements.  Elements themselves are opaque
immutable values, so models and words are safe to share across threads.
"""

from __future__ import annotations

from abc import ABC, abstractmethod
from typing import Any, Hashable, Iterable, Optional

from .words import GenSymbol, Word, format_word, parse_word


class AlphabetError(ValueError):
    """Raised when a word mentions a generator outside the model's alphabet."""


class GroupModel(ABC):
    """A finitely generated group presented through generator actions.

    Subclasses fix ``name``, ``letters`` (one lowercase letter per
    generator), optionally ``involutions`` (indices of order-two generators)
    and ``commutative``, and implement the three primitives below.
    """

    name: str = "group"
    letters: tuple[str, ...] = ()
    involutions: frozenset[int] = frozenset()
    commutative: bool = False
    # True when multiply/invert are implemented; distance oracles then get
    # to split long queries across half-radius balls.
    has_composition: bool = False

    @property
    def alphabet_size(self) -> int:
        return len(self.letters)

    @abstractmethod
    def identity(self) -> Any:
        ...

    @abstractmethod
    def apply(self, g: Any, s: GenSymbol) -> Any:
        """Right-multiply ``g`` by the generator named by ``s``."""
        ...

    @abstractmethod
    def key(self, g: Any) -> Hashable:
        """Canonical hashable key, injective on group elements."""
        ...

    def multiply(self, g: Any, h: Any) -> Any:
        raise NotImplementedError(f"{self.name} does not implement composition")

    def invert(self, g: Any) -> Any:
        raise NotImplementedError(f"{self.name} does not implement composition")

    def product_scanner(self, g: Any, radius: int):
        """A function h -> key(g*h), or None when g*h provably exceeds ``radius``.

        Ball scans evaluate this over many h for one fixed g; models may
        override to precompute pruning state per g and skip hopeless
        candidates cheaply.  The default computes every product outright.
        """
        multiply, key = self.multiply, self.key

        def scan(h: Any) -> Optional[Hashable]:
            return key(multiply(g, h))

        return scan

    def directions(self) -> tuple[GenSymbol, ...]:
        """Generator symbols explored by search, in a fixed deterministic order.

        The order is generator 0, its inverse, generator 1, its inverse, and
        so on; involutions contribute a single direction.
        """
        out: list[GenSymbol] = []
        for i in range(self.alphabet_size):
            out.append(GenSymbol(i, False))
            if i not in self.involutions:
                out.append(GenSymbol(i, True))
        return tuple(out)

    def generators(self, include_inverses: bool = False) -> tuple[GenSymbol, ...]:
        """The positive generators, optionally followed by their inverses."""
        out = [GenSymbol(i, False) for i in range(self.alphabet_size)]
        if include_inverses:
            out.extend(GenSymbol(i, True) for i in range(self.alphabet_size)
                       if i not in self.involutions)
        return tuple(out)

    def apply_word(self, g: Any, w: Iterable[GenSymbol]) -> Any:
        for s in w:
            g = self.apply(g, s)
        return g

    def parse(self, text: str) -> Word:
        return parse_word(text, self.letters, self.involutions)

    def format(self, w: Word) -> str:
        return format_word(w, self.letters, self.involutions)


def evaluate(model: GroupModel, w: Word) -> Any:
    """Project a word to the group element it spells, starting from identity."""
    m = model.alphabet_size
    for pos, s in enumerate(w):
        if not 0 <= s.base < m:
            raise AlphabetError(
                f"symbol {s} at position {pos} is outside the alphabet "
                f"of {model.name} (size {m})")
    return model.apply_word(model.identity(), w)


class IntLattice(GroupModel):
    """The free abelian lattice of rank 1 or 2 with unit-step generators.

    Elements are coordinate tuples; rank 1 gives the integer line with
    generator ``a``, rank 2 the square grid with generators ``a`` and ``b``.
    """

    commutative = True
    has_composition = True

    def __init__(self, rank: int):
        if rank not in (1, 2):
            raise ValueError("rank must be 1 or 2")
        self.rank = rank
        self.name = "z" if rank == 1 else "z2"
        self.letters = ("a",) if rank == 1 else ("a", "b")

    def identity(self):
        return (0,) * self.rank

    def apply(self, g, s: GenSymbol):
        step = -1 if s.inverted else 1
        if s.base == 0:
            return (g[0] + step,) + g[1:]
        return (g[0], g[1] + step)

    def key(self, g):
        return g

    def multiply(self, g, h):
        return tuple(x + y for x, y in zip(g, h))

    def invert(self, g):
        return tuple(-x for x in g)
