"""Synchronous divergence of normal-form paths and its summary curve.

Two words traced with the same speed from the identity stay some distance
apart at each step; ``divergence`` measures that profile exactly through a
BFS distance oracle.  ``divergence_curve`` sweeps all pairs (g, g*gen) with g
in a Cayley ball and records the running maximum: a nondecreasing curve,
bounded by 2n, whose growth class is the object of interest.

The sweep maximizes over positive generators only (inverses optional) and
over base elements restricted to the chosen ball radius, which is recorded in
the curve metadata: enlarging the radius can only raise the curve.
"""

from __future__ import annotations

import io
from dataclasses import dataclass
from typing import Iterable, TextIO

from .balls import DEFAULT_BUDGET, bfs_ball, make_distance_oracle
from .groups import GroupModel, evaluate
from .providers import NormalFormProvider
from .words import Word, invert_word, word_prefix


def _common_prefix_length(w1: Word, w2: Word) -> int:
    n = min(len(w1), len(w2))
    for i in range(n):
        if w1[i] != w2[i]:
            return i
    return n


def divergence(model: GroupModel, w1: Word, w2: Word, oracle) -> list[int]:
    """Distances between same-length prefixes, for t = 0 .. max(|w1|, |w2|).

    The difference element at step t is evaluated from the two prefixes
    directly, so the only distance authority is the oracle's ball.  With a
    fixed ``BallIndex`` an out-of-range difference raises; pass a
    ``GrowingBall`` to have the oracle enlarge itself on demand.
    """
    top = max(len(w1), len(w2))
    shared = _common_prefix_length(w1, w2)
    out = [0] * (min(shared, top) + 1)
    if model.commutative:
        delta = model.identity()
        for t in range(1, top + 1):
            if t <= len(w1):
                delta = model.apply(delta, w1[t - 1].inverse())
            if t <= len(w2):
                delta = model.apply(delta, w2[t - 1])
            if t > shared:
                out.append(oracle.distance(delta))
        return out
    for t in range(shared + 1, top + 1):
        # The shared prefix cancels freely; only the differing suffixes count.
        tail1 = word_prefix(w1, t)[shared:]
        tail2 = word_prefix(w2, t)[shared:]
        delta = evaluate(model, invert_word(tail1) + tail2)
        out.append(oracle.distance(delta))
    return out


@dataclass(frozen=True)
class DivergenceCurve:
    """Running-maximum divergence s(n) with the provenance of its sweep."""

    values: tuple[int, ...]
    group: str
    radius: int
    distance_radius: int
    generators: tuple[str, ...]

    def __len__(self) -> int:
        return len(self.values)

    def samples(self) -> Iterable[tuple[int, int]]:
        return enumerate(self.values)

    @property
    def final(self) -> int:
        return self.values[-1] if self.values else 0


def divergence_curve(provider: NormalFormProvider, radius: int,
                     distance_radius: int = 2,
                     include_inverses: bool = False,
                     budget: int = DEFAULT_BUDGET) -> DivergenceCurve:
    """Sweep all (element, neighbor) pairs in the radius ball.

    For every g in the ball and every generator, the pair of normal forms of
    g and g*gen contributes its divergence profile; the curve is the running
    maximum over all pairs and all steps up to each n.
    """
    model = provider.model
    ball = bfs_ball(model, radius, budget)
    oracle = make_distance_oracle(model, distance_radius, budget)
    gens = model.generators(include_inverses)
    peak: list[int] = [0]
    for g in ball.elements():
        w1 = provider.nf(g)
        for s in gens:
            w2 = provider.nf(model.apply(g, s))
            profile = divergence(model, w1, w2, oracle)
            if len(profile) > len(peak):
                peak.extend([0] * (len(profile) - len(peak)))
            for t, d in enumerate(profile):
                if d > peak[t]:
                    peak[t] = d
    running = 0
    values = []
    for v in peak:
        running = max(running, v)
        values.append(running)
    return DivergenceCurve(tuple(values), provider.name, radius,
                           oracle.radius, model.letters)


def write_curve_csv(curve: DivergenceCurve, out: TextIO) -> None:
    """CSV with '#' metadata comments, a header, and one row per sample."""
    out.write(f"# group={curve.group}\n")
    out.write(f"# radius={curve.radius}\n")
    out.write(f"# distance_radius={curve.distance_radius}\n")
    out.write(f"# generators={','.join(curve.generators)}\n")
    out.write("n,s\n")
    for n, s in curve.samples():
        out.write(f"{n},{s}\n")


def curve_to_csv(curve: DivergenceCurve) -> str:
    buf = io.StringIO()
    write_curve_csv(curve, buf)
    return buf.getvalue()


def read_curve_csv(text: str) -> DivergenceCurve:
    meta: dict[str, str] = {}
    values: list[int] = []
    header_seen = False
    for line in text.splitlines():
        line = line.strip()
        if not line:
            continue
        if line.startswith("#"):
            key, _, value = line[1:].strip().partition("=")
            meta[key.strip()] = value.strip()
        elif not header_seen:
            if line != "n,s":
                raise ValueError(f"expected header 'n,s', got {line!r}")
            header_seen = True
        else:
            n_text, _, s_text = line.partition(",")
            n, s = int(n_text), int(s_text)
            if n != len(values):
                raise ValueError(f"non-contiguous sample index {n}")
            values.append(s)
    return DivergenceCurve(tuple(values), meta.get("group", ""),
                           int(meta.get("radius", 0)),
                           int(meta.get("distance_radius", 0)),
                           tuple(g for g in meta.get("generators", "").split(",") if g))
