"""Baumslag-Solitar groups BS(p,q) = <a, t | t a^p t^-1 = a^q> for 1 <= p < q.

Elements are kept in a block canonical form

    a^{e_l} t^{s_l} ... a^{e_1} t^{s_1} a^k

where each block pairs a nonnegative power of ``a`` with a signed ``t``
letter, subject to three constraints: a block followed by t^-1 carries an
exponent below p, a block followed by t^+1 carries an exponent below q, and
a zero-exponent block never flips the sign of the previous t (the serialized
word stays freely reduced).  The trailing ``a`` power is an arbitrary
integer.  By Britton's lemma every element has exactly one such form, so the
serialized word doubles as a canonical key.

Right multiplication by a generator rewrites only the tail region: for
``t^s`` the tail splits as k = m*d + r with d = q (s = +1) or d = p
(s = -1) and 0 <= r < d (floor division), pushing a^{m*d} through the new t
letter and either emitting a fresh block or cancelling against an adjacent
opposite t.  A single step always restores every constraint, making the
operation O(1) block edits plus one big-integer divmod.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

from .groups import GroupModel
from .words import GenSymbol, Word

_A = 0
_T = 1

BS_LETTERS = ("a", "t")


class BSParams(NamedTuple):
    p: int
    q: int

    @staticmethod
    def checked(p: int, q: int) -> "BSParams":
        if not 1 <= p < q:
            raise ValueError(f"require 1 <= p < q, got p={p}, q={q}")
        return BSParams(p, q)


class Block(NamedTuple):
    exponent: int
    eps: int  # +1 for t, -1 for t^-1


@dataclass(frozen=True)
class BSNormalForm:
    """Block canonical form; ``blocks`` are listed left to right as written."""

    blocks: tuple[Block, ...] = ()
    tail: int = 0

    @property
    def t_length(self) -> int:
        """Number of t letters (the block count)."""
        return len(self.blocks)


BS_IDENTITY = BSNormalForm()


class BSParseError(ValueError):
    """Raised when a word does not have the block canonical shape."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (position {position})")
        self.position = position


def bs_validate(nf: BSNormalForm, params: BSParams) -> bool:
    """Check the three block constraints; True exactly when ``nf`` is canonical."""
    p, q = params
    blocks = nf.blocks
    for exponent, eps in blocks:
        if eps not in (1, -1) or exponent < 0:
            return False
        bound = p - 1 if eps == -1 else q - 1
        if exponent > bound:
            return False
    # Free reduction: a zero-exponent block repeats the preceding t sign.
    # blocks[j] sits left of blocks[j + 1] in the word.
    for j in range(len(blocks) - 1):
        if blocks[j + 1].exponent == 0 and blocks[j].eps != blocks[j + 1].eps:
            return False
    return True


def bs_to_word(nf: BSNormalForm) -> Word:
    """Serialize to letters over {a, t}; length is t_length + sum(exponents) + |tail|."""
    out: list[GenSymbol] = []
    for exponent, eps in nf.blocks:
        out.extend([GenSymbol(_A, False)] * exponent)
        out.append(GenSymbol(_T, eps < 0))
    tail_symbol = GenSymbol(_A, nf.tail < 0)
    out.extend([tail_symbol] * abs(nf.tail))
    return tuple(out)


def bs_parse(w: Word, params: BSParams) -> BSNormalForm:
    """Parse a word of the canonical shape back into a block form.

    Rejects, with the offending position, any word that is not literally of
    the serialized shape: a nonnegative ``a`` run before each t letter and a
    sign-uniform ``a`` run after the last one.
    """
    blocks: list[Block] = []
    run = 0          # pending count of uninverted a's
    run_start = 0
    tail = 0
    tail_sign = 0
    seen_tail = False
    for pos, s in enumerate(w):
        if s.base == _T:
            if seen_tail:
                raise BSParseError("t letter after the trailing a-power began", pos)
            blocks.append(Block(run, -1 if s.inverted else 1))
            run = 0
            run_start = pos + 1
        elif s.base == _A:
            sign = -1 if s.inverted else 1
            if sign == 1 and not seen_tail:
                run += 1
            else:
                # A negative a can only open the trailing power; fold any
                # pending positive run into it first.
                if not seen_tail:
                    seen_tail = True
                    tail = run
                    tail_sign = 1 if run else sign
                    run = 0
                if sign != tail_sign:
                    raise BSParseError("mixed signs in the trailing a-power", pos)
                tail += sign
        else:
            raise BSParseError(f"symbol {s} is not over the {{a, t}} alphabet", pos)
    if not seen_tail:
        tail = run
    nf = BSNormalForm(tuple(blocks), tail)
    if not bs_validate(nf, params):
        raise BSParseError(
            f"word violates the block constraints of BS({params.p},{params.q})",
            run_start)
    return nf


def bs_mul_gen(nf: BSNormalForm, s: GenSymbol, params: BSParams) -> BSNormalForm:
    """Canonical form of ``nf`` times one generator.

    ``a``-letters shift the tail.  A ``t^s`` letter rewrites the tail
    a^k t^s -> a^r t^s a^{m*other} (k = m*d + r, 0 <= r < d, floor division
    toward minus infinity) and then either appends the new block or cancels
    it against an adjacent opposite t letter, absorbing the displaced power
    into the new tail.  The result is canonical in one step.
    """
    p, q = params
    if s.base == _A:
        return BSNormalForm(nf.blocks, nf.tail + (-1 if s.inverted else 1))
    sign = -1 if s.inverted else 1
    divisor, pushed = (q, p) if sign == 1 else (p, q)
    m, r = divmod(nf.tail, divisor)
    if r != 0:
        return BSNormalForm(nf.blocks + (Block(r, sign),), m * pushed)
    blocks = nf.blocks
    if blocks and blocks[-1].eps == -sign:
        # ... a^{e} t^{-s} t^{s} a^{m*pushed} collapses; the freed power
        # joins the tail.
        return BSNormalForm(blocks[:-1], blocks[-1].exponent + m * pushed)
    return BSNormalForm(blocks + (Block(0, sign),), m * pushed)


def bs_normal_form_of(w: Word, params: BSParams) -> BSNormalForm:
    """Fold generator multiplication over the word, starting at the identity."""
    nf = BS_IDENTITY
    for s in w:
        nf = bs_mul_gen(nf, s, params)
    return nf


class BaumslagSolitar(GroupModel):
    """Group model whose elements are block canonical forms."""

    letters = BS_LETTERS

    def __init__(self, p: int, q: int):
        self.params = BSParams.checked(p, q)
        self.name = f"bs({p},{q})"

    def identity(self) -> BSNormalForm:
        return BS_IDENTITY

    def apply(self, g: BSNormalForm, s: GenSymbol) -> BSNormalForm:
        return bs_mul_gen(g, s, self.params)

    def key(self, g: BSNormalForm):
        # The serialized canonical word; injectivity is Britton uniqueness.
        return self.format(bs_to_word(g))


class BSMetricConstants(NamedTuple):
    c_lower: float
    c_upper: float
    d_lower: float
    d_upper: float


def bs_metric_bounds(t_length: int, tail: int,
                     consts: BSMetricConstants) -> tuple[float, float]:
    """Two-sided word-length estimate from the block shape.

    With x = t_length + log2(|tail| + 1), returns
    (max(0, c_lower*x - d_lower), c_upper*x + d_upper).
    """
    if min(consts) <= 0:
        raise ValueError("metric constants must be positive")
    x = t_length + math.log2(abs(tail) + 1)
    lower = max(0.0, consts.c_lower * x - consts.d_lower)
    upper = consts.c_upper * x + consts.d_upper
    return lower, upper


def calibrate_metric_constants(ball) -> BSMetricConstants:
    """Fit positive constants so the bounds bracket every ball element.

    The ball must index a ``BaumslagSolitar`` model.  The fit is the tightest
    multiplicative pair with unit additive slack, so the sandwich holds with
    equality somewhere on the calibration ball.
    """
    lo = math.inf
    hi = 0.0
    for g in ball.elements():
        x = g.t_length + math.log2(abs(g.tail) + 1)
        d = ball.distance(g)
        if x == 0:
            continue  # identity only
        lo = min(lo, d / x)
        hi = max(hi, d / (x + 1))
    if not math.isfinite(lo) or hi <= 0:
        raise ValueError("calibration ball must contain non-identity elements")
    return BSMetricConstants(lo, hi, 1.0, hi)


class BSSharpnessProbe(NamedTuple):
    word: Word        # a^{m*q^2}
    word_t: Word      # its t-successor's canonical word, t a^{m*p*q}
    index: int        # the step at which the two paths have split apart


def bs_sharpness_family(m: int, params: BSParams) -> BSSharpnessProbe:
    """The family of element pairs witnessing logarithmic divergence.

    For m >= 1 the element a^{m*q^2} and its t-successor t a^{m*p*q} are at
    distance one, yet after m*q synchronous steps the two canonical paths
    stand at a^{m*q} and t a^{m*q-1}, whose gap grows with log m.
    """
    if m < 1:
        raise ValueError("m must be positive")
    p, q = params
    w = bs_to_word(BSNormalForm((), m * q * q))
    w_t = bs_to_word(BSNormalForm((Block(0, 1),), m * p * q))
    return BSSharpnessProbe(w, w_t, m * q)
