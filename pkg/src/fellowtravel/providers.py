"""Normal-form providers: total injective maps from elements to words.

A provider bundles a group model with a rule assigning each element one word
that evaluates back to it.  Providers are immutable and pure, so transformed
providers can stack on top of each other freely.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Callable, Hashable

from .baumslag import BaumslagSolitar, bs_to_word
from .groups import GroupModel, IntLattice
from .lamplighter import PlaneLamplighter, lamp_normal_form
from .words import GenSymbol, Word


@dataclass(frozen=True)
class NormalFormProvider:
    model: GroupModel
    nf: Callable[[Any], Word]
    name: str

    def nf_of_key(self, *_):  # pragma: no cover - guard against misuse
        raise TypeError("providers map elements, not keys; call nf(element)")


def z_power_provider() -> NormalFormProvider:
    """The integer line with nf(k) = a^k."""
    model = IntLattice(1)

    def nf(g) -> Word:
        (k,) = g
        return (GenSymbol(0, k < 0),) * abs(k)

    return NormalFormProvider(model, nf, "z-power")


def grid_lex_provider() -> NormalFormProvider:
    """The square grid with the lexicographic form nf(x, y) = a^x b^y."""
    model = IntLattice(2)

    def nf(g) -> Word:
        x, y = g
        return (GenSymbol(0, x < 0),) * abs(x) + (GenSymbol(1, y < 0),) * abs(y)

    return NormalFormProvider(model, nf, "z2-lex")


def bs_provider(p: int, q: int) -> NormalFormProvider:
    """BS(p,q) elements are already canonical forms; serialize them."""
    model = BaumslagSolitar(p, q)
    return NormalFormProvider(model, bs_to_word, model.name)


def lamp_provider() -> NormalFormProvider:
    """The plane lamplighter with the spiral-sweep form."""
    return NormalFormProvider(PlaneLamplighter(), lamp_normal_form, "lamp")


def patched(provider: NormalFormProvider,
            overrides: dict[Hashable, Word],
            name: str | None = None) -> NormalFormProvider:
    """Replace the normal forms of finitely many elements, keyed canonically.

    The caller is responsible for keeping the map injective and evaluation
    correct; this is the standard way to build small counterexample forms.
    """
    base = provider.nf
    model = provider.model

    def nf(g) -> Word:
        word = overrides.get(model.key(g))
        return base(g) if word is None else word

    return NormalFormProvider(model, nf, name or f"{provider.name}+patched")
