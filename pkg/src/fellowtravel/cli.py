"""Command-line interface.

Subcommands: ball (ball census), nf (normal form of a word), scurve
(divergence curve as CSV), check (predicate pass or witness), transform
(write a provider spec file for later use), family (sharpness families with
divergence probes), plus group-scoped helpers ``bs nf``, ``bs mul``,
``lamp nf``, ``lamp spiral``.

Exit codes: 0 on pass or success, 1 on a witness, violation, or resource
failure, 2 on usage errors.  The element budget resolves as flag >
FELLOW_BUDGET environment variable > default.  Identical invocations produce
byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional

from .balls import DEFAULT_BUDGET, BallBudgetError, OutOfBallError, bfs_ball, GrowingBall
from .baumslag import (BaumslagSolitar, bs_mul_gen, bs_parse,
                       bs_sharpness_family, bs_to_word)
from .curves import divergence, divergence_curve, write_curve_csv
from .groups import AlphabetError, evaluate
from .lamplighter import (LampElement, PlaneLamplighter, lamp_normal_form,
                          lamp_sharpness_family, spiral)
from .predicates import check_nf_property
from .providers import (NormalFormProvider, bs_provider, grid_lex_provider,
                        lamp_provider, z_power_provider)
from .transforms import (quasiprefix_closure, repeat_loop_chooser,
                         searched_completion_rule, with_interleaved_loops,
                         with_loop_prefix)
from .words import WordFormatError

GROUPS = ("z", "z2", "bs", "lamp")


class UsageError(Exception):
    pass


def _resolve_budget(flag: Optional[int]) -> int:
    if flag is not None:
        return flag
    env = os.environ.get("FELLOW_BUDGET")
    if env:
        try:
            return int(env)
        except ValueError as exc:
            raise UsageError(f"FELLOW_BUDGET must be an integer, got {env!r}") from exc
    return DEFAULT_BUDGET


def _base_provider(args) -> NormalFormProvider:
    group = args.group
    if group == "z":
        return z_power_provider()
    if group == "z2":
        return grid_lex_provider()
    if group == "bs":
        if args.p is None or args.q is None:
            raise UsageError("group bs requires --p and --q")
        return bs_provider(args.p, args.q)
    if group == "lamp":
        return lamp_provider()
    raise UsageError(f"unknown group {group!r}; expected one of {GROUPS}")


def provider_from_spec(spec: dict) -> NormalFormProvider:
    """Rebuild a transformed provider from a spec dictionary."""

    class _Shim:
        group = spec.get("group")
        p = spec.get("p")
        q = spec.get("q")

    base = _base_provider(_Shim)
    kind = spec.get("kind", "base")
    if kind == "base":
        return base
    if kind == "first-way":
        return with_loop_prefix(base, base.model.parse(spec["loop"]))
    if kind == "second-way":
        return with_interleaved_loops(
            base, repeat_loop_chooser(base.model.parse(spec["loop"])))
    if kind == "qpc-closure":
        c = int(spec["c"])
        return quasiprefix_closure(base, searched_completion_rule(base, c))
    raise UsageError(f"unknown transform kind {kind!r}")


def _provider_for(args) -> NormalFormProvider:
    if getattr(args, "provider", None):
        with open(args.provider, "r", encoding="utf-8") as fh:
            return provider_from_spec(json.load(fh))
    if not getattr(args, "group", None):
        raise UsageError("give --group or --provider")
    return _base_provider(args)


def _parse_point(text: str) -> tuple[int, int]:
    try:
        x_text, y_text = text.split(",")
        return int(x_text), int(y_text)
    except ValueError as exc:
        raise UsageError(f"expected 'x,y', got {text!r}") from exc


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fellowtravel",
        description="Normal forms, Cayley balls, and divergence curves.")
    sub = parser.add_subparsers(dest="cmd", required=True)

    def add_group_flags(p, with_provider=True):
        p.add_argument("--group", choices=GROUPS)
        p.add_argument("--p", type=int)
        p.add_argument("--q", type=int)
        if with_provider:
            p.add_argument("--provider", help="provider spec file from 'transform'")
        p.add_argument("--budget", type=int)

    p_ball = sub.add_parser("ball", help="count elements of a Cayley ball")
    add_group_flags(p_ball, with_provider=False)
    p_ball.add_argument("--radius", type=int, required=True)
    p_ball.add_argument("--per-distance", action="store_true",
                        help="also print 'distance,count' lines")

    p_nf = sub.add_parser("nf", help="normal form of the element a word spells")
    add_group_flags(p_nf)
    p_nf.add_argument("--word", required=True)

    p_curve = sub.add_parser("scurve", help="divergence curve as CSV")
    add_group_flags(p_curve)
    p_curve.add_argument("--radius", type=int, required=True)
    p_curve.add_argument("--distance-radius", type=int, default=2)
    p_curve.add_argument("--include-inverses", action="store_true")
    p_curve.add_argument("--out", help="output path (default stdout)")

    p_check = sub.add_parser("check", help="check a normal-form predicate")
    add_group_flags(p_check)
    p_check.add_argument("--mode", required=True,
                         choices=["quasigeodesic", "prefix-closed",
                                  "quasiregular", "quasiprefix-closed"])
    p_check.add_argument("--constant", type=float)
    p_check.add_argument("--radius", type=int, required=True)

    p_tr = sub.add_parser("transform", help="write a provider spec file")
    p_tr.add_argument("kind", choices=["first-way", "second-way", "qpc-closure"])
    add_group_flags(p_tr, with_provider=False)
    p_tr.add_argument("--loop", help="loop word for the loop transforms")
    p_tr.add_argument("--c", type=int, help="constant for qpc-closure")
    p_tr.add_argument("--out", required=True)

    p_fam = sub.add_parser("family", help="sharpness family probe")
    add_group_flags(p_fam, with_provider=False)
    p_fam.add_argument("--m", type=int, required=True)

    p_bs = sub.add_parser("bs", help="Baumslag-Solitar helpers")
    bs_sub = p_bs.add_subparsers(dest="bs_cmd", required=True)
    p_bs_nf = bs_sub.add_parser("nf", help="canonical form of a word")
    p_bs_nf.add_argument("word")
    p_bs_nf.add_argument("--p", type=int, required=True)
    p_bs_nf.add_argument("--q", type=int, required=True)
    p_bs_mul = bs_sub.add_parser("mul", help="multiply a canonical form by a generator")
    p_bs_mul.add_argument("nf")
    p_bs_mul.add_argument("gen", help="one of a, A, t, T")
    p_bs_mul.add_argument("--p", type=int, required=True)
    p_bs_mul.add_argument("--q", type=int, required=True)

    p_lamp = sub.add_parser("lamp", help="lamplighter helpers")
    lamp_sub = p_lamp.add_subparsers(dest="lamp_cmd", required=True)
    p_lamp_nf = lamp_sub.add_parser("nf", help="normal form of (lamps, position)")
    p_lamp_nf.add_argument("--lamps", default="",
                           help="semicolon-separated points 'x1,y1;x2,y2'")
    p_lamp_nf.add_argument("--pos", default="0,0")
    p_lamp_spiral = lamp_sub.add_parser("spiral", help="coordinates of a spiral cell")
    p_lamp_spiral.add_argument("k", type=int)

    return parser


def _cmd_ball(args) -> int:
    provider = _provider_for(args) if getattr(args, "provider", None) else None
    model = provider.model if provider else _base_provider(args).model
    ball = bfs_ball(model, args.radius, _resolve_budget(args.budget))
    print(len(ball))
    if args.per_distance:
        census = ball.census()
        for dist in sorted(census):
            print(f"{dist},{census[dist]}")
    return 0


def _cmd_nf(args) -> int:
    provider = _provider_for(args)
    word = provider.model.parse(args.word)
    element = evaluate(provider.model, word)
    print(provider.model.format(provider.nf(element)))
    return 0


def _cmd_scurve(args) -> int:
    provider = _provider_for(args)
    curve = divergence_curve(provider, args.radius,
                             distance_radius=args.distance_radius,
                             include_inverses=args.include_inverses,
                             budget=_resolve_budget(args.budget))
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            write_curve_csv(curve, fh)
    else:
        write_curve_csv(curve, sys.stdout)
    return 0


def _cmd_check(args) -> int:
    provider = _provider_for(args)
    mode = args.mode.replace("-", "_")
    witness = check_nf_property(provider, mode, args.radius,
                                constant=args.constant,
                                budget=_resolve_budget(args.budget))
    if witness is None:
        print("PASS")
        return 0
    print(f"VIOLATION n={len(witness.word)} "
          f"word={provider.model.format(witness.word)}")
    return 1


def _cmd_transform(args) -> int:
    if not args.group:
        raise UsageError("transform requires --group")
    spec = {"kind": args.kind, "group": args.group}
    if args.p is not None:
        spec["p"] = args.p
    if args.q is not None:
        spec["q"] = args.q
    if args.kind in ("first-way", "second-way"):
        if not args.loop:
            raise UsageError(f"{args.kind} requires --loop")
        spec["loop"] = args.loop
    else:
        if args.c is None:
            raise UsageError("qpc-closure requires --c")
        spec["c"] = args.c
    provider = provider_from_spec(spec)  # validates eagerly
    with open(args.out, "w", encoding="utf-8") as fh:
        json.dump(spec, fh, sort_keys=True)
        fh.write("\n")
    print(provider.name)
    return 0


def _cmd_family(args) -> int:
    budget = _resolve_budget(args.budget)
    if args.group == "bs":
        provider = _base_provider(args)
        model = provider.model
        probe = bs_sharpness_family(args.m, model.params)
        oracle = GrowingBall(model, 2, budget)
        profile = divergence(model, probe.word, probe.word_t, oracle)
        d = profile[probe.index]
        print(f"m={args.m} n={probe.index} w={model.format(probe.word)} "
              f"wt={model.format(probe.word_t)} divergence={d}")
        return 0
    if args.group == "lamp":
        probe = lamp_sharpness_family(args.m)
        model = PlaneLamplighter()
        lamps = ";".join(f"{x},{y}" for x, y in sorted(probe.element.support))
        print(f"m={args.m} lamp={lamps} claimed={probe.claimed_distance} "
              f"nf={model.format(lamp_normal_form(probe.element))}")
        return 0
    raise UsageError("family requires --group bs or --group lamp")


def _cmd_bs(args) -> int:
    model = BaumslagSolitar(args.p, args.q)
    if args.bs_cmd == "nf":
        word = model.parse(args.word)
        nf = model.apply_word(model.identity(), word)
        print(model.format(bs_to_word(nf)))
        return 0
    nf = bs_parse(model.parse(args.nf), model.params)
    (symbol,) = model.parse(args.gen)
    print(model.format(bs_to_word(bs_mul_gen(nf, symbol, model.params))))
    return 0


def _cmd_lamp(args) -> int:
    if args.lamp_cmd == "spiral":
        x, y = spiral(args.k)
        print(f"{x},{y}")
        return 0
    lamps = frozenset(_parse_point(part) for part in args.lamps.split(";") if part)
    element = LampElement(lamps, _parse_point(args.pos))
    print(PlaneLamplighter().format(lamp_normal_form(element)))
    return 0


def dispatch(argv: list[str]) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code if isinstance(exc.code, int) else 2
        return 0 if code == 0 else 2
    handlers = {
        "ball": _cmd_ball,
        "nf": _cmd_nf,
        "scurve": _cmd_scurve,
        "check": _cmd_check,
        "transform": _cmd_transform,
        "family": _cmd_family,
        "bs": _cmd_bs,
        "lamp": _cmd_lamp,
    }
    try:
        return handlers[args.cmd](args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (WordFormatError, AlphabetError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (BallBudgetError, OutOfBallError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(dispatch(sys.argv[1:]))
