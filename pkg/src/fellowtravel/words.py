"""Words over a symmetrized generator alphabet.

A word is a plain tuple of ``GenSymbol``s.  Each symbol names a generator by
index and carries an inversion flag, so a word over m generators ranges over
2m directions.  Words are the common currency of normal forms and Cayley-graph
paths, and they serialize to the text format used everywhere in this package:
lowercase letter = generator, uppercase letter = its formal inverse, letters
concatenated with no separator.  Involutive generators (order two) have no
uppercase form.
"""

from __future__ import annotations

from typing import NamedTuple


class GenSymbol(NamedTuple):
    base: int
    inverted: bool = False

    def inverse(self) -> "GenSymbol":
        return GenSymbol(self.base, not self.inverted)


# A word is a tuple of symbols; the empty word is ().
Word = tuple[GenSymbol, ...]

EMPTY_WORD: Word = ()


class WordFormatError(ValueError):
    """Raised when text cannot be parsed as a word over the given letters."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (position {position})")
        self.position = position


def free_reduce(w: Word) -> Word:
    """Cancel adjacent formal inverse pairs until none remain.

    The result is the unique freely reduced word obtainable from ``w`` and
    evaluates to the same element in every group model.
    """
    out: list[GenSymbol] = []
    for s in w:
        if out and out[-1].base == s.base and out[-1].inverted != s.inverted:
            out.pop()
        else:
            out.append(s)
    return tuple(out)


def word_prefix(w: Word, t: int) -> Word:
    """Prefix of length ``t``, or the whole word when ``t`` exceeds its length."""
    if t >= len(w):
        return w
    return w[:t]


def invert_word(w: Word) -> Word:
    """Formal inverse: reverse the word and flip every inversion flag."""
    return tuple(s.inverse() for s in reversed(w))


def parse_word(text: str, letters: tuple[str, ...],
               involutions: frozenset[int] = frozenset()) -> Word:
    """Parse concatenated letters into a word.

    ``letters`` maps generator index to its lowercase letter; an uppercase
    letter denotes the inverse.  Involutive generators admit only the
    lowercase spelling.
    """
    index = {letter: i for i, letter in enumerate(letters)}
    out: list[GenSymbol] = []
    for pos, ch in enumerate(text):
        base = index.get(ch.lower())
        if base is None:
            raise WordFormatError(f"unknown letter {ch!r}", pos)
        inverted = ch.isupper()
        if inverted and base in involutions:
            raise WordFormatError(
                f"letter {ch!r} is involutive and has no uppercase form", pos)
        out.append(GenSymbol(base, inverted))
    return tuple(out)


def format_word(w: Word, letters: tuple[str, ...],
                involutions: frozenset[int] = frozenset()) -> str:
    """Serialize a word; the empty word prints as the empty string."""
    parts = []
    for s in w:
        letter = letters[s.base]
        # Involutions are their own inverses; always print lowercase.
        if s.inverted and s.base not in involutions:
            letter = letter.upper()
        parts.append(letter)
    return "".join(parts)
