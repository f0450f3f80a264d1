"""
Command-line front end.

    kchevalley expand --type A2 --word 2,1,2 --weight 1,0 --format text
    kchevalley bott-samelson --type G2 --word 1,2,1,2 --weight 0,1 --verify
    kchevalley table --type A2 --weight 1,0
    kchevalley verify --type G2 --weight 1,0 --weight 0,1

Exit codes: 0 success, 1 a requested verification failed, 2 usage or input error.
Negative weights need the ``=`` form, e.g. ``--weight=-1,1``.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import jsonschema

from . import render
from .bott_samelson import DEFAULT_MAX_WORD_LENGTH, BSContext, line_bundle_expansion, verify_localization
from .chevalley import (
    chevalley_expand,
    check_positivity,
    verify_support_and_leading_term,
    verify_word_independence,
)
from .errors import KChevalleyError
from .report import Report
from .root_system import CartanSpec, RootSystem, Weight, build_root_system, cartan_matrix, is_dominant
from .weyl import DEFAULT_MAX_GROUP, DEFAULT_MAX_WORDS, all_elements

EXIT_OK, EXIT_VERIFY_FAILED, EXIT_USAGE = 0, 1, 2

# positivity is asserted for these types; elsewhere a failure is reported as a finding
POSITIVITY_ASSERTED = {"A2", "B2", "G2"}

SCHEMAS = {
    "expand": render.EXPAND_SCHEMA,
    "bott-samelson": render.BOTT_SAMELSON_SCHEMA,
    "table": render.TABLE_SCHEMA,
    "verify": render.VERIFY_SCHEMA,
}


class UsageError(KChevalleyError):
    pass


@dataclass
class RunConfig:
    subcommand: str
    cartan: CartanSpec
    word: tuple[int, ...] | None = None
    weights: list[tuple[int, ...]] = field(default_factory=list)
    weight_mode: str = render.FUNDAMENTAL
    display: str = render.FUNDAMENTAL
    fmt: str = "text"
    verify: bool = False
    ordinary: bool = False
    auto_reduce: bool = False
    validate_json: bool = False
    max_length: int = DEFAULT_MAX_WORD_LENGTH
    max_group: int = DEFAULT_MAX_GROUP
    max_words: int = DEFAULT_MAX_WORDS
    threads: int = 1
    output: str | None = None


def _int_list(flag: str, text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.replace(" ", "").split(",") if x != "")
    except ValueError:
        raise UsageError(f"{flag}: expected comma-separated integers, got {text!r}") from None


def _env_int(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if raw is None:
        return default
    try:
        value = int(raw)
    except ValueError:
        raise UsageError(f"environment variable {name}={raw!r} is not an integer") from None
    if value <= 0:
        raise UsageError(f"environment variable {name} must be positive")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="kchevalley", description=__doc__.split("\n\n")[0].strip())
    sub = parser.add_subparsers(dest="subcommand", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--type", required=True, dest="cartan",
                        help='Cartan type such as "G2", or a JSON integer matrix')
    common.add_argument("--root-coords", action="store_true",
                        help="read --weight as coefficients of simple roots")
    common.add_argument("--display", choices=[render.FUNDAMENTAL, render.ROOT_COORDS], default=render.FUNDAMENTAL)
    common.add_argument("--format", choices=["json", "text", "latex"], default="text", dest="fmt")
    common.add_argument("--output", "-o", help="write to this file instead of stdout")
    common.add_argument("--validate-json", action="store_true",
                        help="re-parse the JSON output and check it against its schema")
    common.add_argument("--max-length", type=int, help="cap on word length (env KCHEVALLEY_MAX_LENGTH)")
    common.add_argument("--max-group", type=int, help="cap on |W| (env KCHEVALLEY_MAX_GROUP)")
    common.add_argument("--threads", type=int, default=1, help="worker processes for sweeps")

    p = sub.add_parser("expand", parents=[common], help="[L_lambda] * O_w in the Schubert basis")
    p.add_argument("--word", required=True)
    p.add_argument("--weight", required=True)
    p.add_argument("--ordinary", action="store_true", help="specialise to ordinary K-theory")
    p.add_argument("--verify", action="store_true")
    p.add_argument("--auto-reduce", action="store_true",
                   help="replace a non-reduced word by the canonical word of its product")

    p = sub.add_parser("bott-samelson", parents=[common], help="line bundle on a Bott-Samelson variety")
    p.add_argument("--word", required=True)
    p.add_argument("--weight", required=True)
    p.add_argument("--verify", action="store_true")

    p = sub.add_parser("table", parents=[common], help="expansion for every w in W")
    p.add_argument("--weight", required=True)
    p.add_argument("--ordinary", action="store_true")

    p = sub.add_parser("verify", parents=[common], help="localization, word-independence and positivity suite")
    p.add_argument("--weight", action="append", required=True, help="repeatable")
    p.add_argument("--max-words", type=int, help="cap on reduced words per element (env KCHEVALLEY_MAX_WORDS)")
    return parser


def parse_args(argv: list[str] | None = None) -> RunConfig:
    args = build_parser().parse_args(argv)
    weights = args.weight if isinstance(args.weight, list) else [args.weight]
    config = RunConfig(
        subcommand=args.subcommand,
        cartan=CartanSpec.parse(args.cartan),
        word=_int_list("--word", args.word) if getattr(args, "word", None) is not None else None,
        weights=[_int_list("--weight", w) for w in weights],
        weight_mode=render.ROOT_COORDS if args.root_coords else render.FUNDAMENTAL,
        display=args.display,
        fmt=args.fmt,
        verify=getattr(args, "verify", False),
        ordinary=getattr(args, "ordinary", False),
        auto_reduce=getattr(args, "auto_reduce", False),
        validate_json=args.validate_json,
        max_length=args.max_length or _env_int("KCHEVALLEY_MAX_LENGTH", DEFAULT_MAX_WORD_LENGTH),
        max_group=args.max_group or _env_int("KCHEVALLEY_MAX_GROUP", DEFAULT_MAX_GROUP),
        max_words=getattr(args, "max_words", None) or _env_int("KCHEVALLEY_MAX_WORDS", DEFAULT_MAX_WORDS),
        threads=args.threads,
        output=args.output,
    )
    if config.cartan.type_letter is not None:
        cartan_matrix(config.cartan.type_letter, config.cartan.rank)
    if min(config.max_length, config.max_group, config.max_words, config.threads) <= 0:
        raise UsageError("caps and --threads must be positive")
    if config.validate_json and config.fmt != "json":
        raise UsageError("--validate-json requires --format json")
    return config


def _weight(rs: RootSystem, config: RunConfig, raw: tuple[int, ...]) -> Weight:
    if config.weight_mode == render.ROOT_COORDS:
        return rs.root_coords_to_weight(raw)
    return rs.check_weight(raw)


def _parallel_map(fn, items, threads: int) -> list:
    if threads <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(fn, items, chunksize=max(1, len(items) // (4 * threads))))


def _run_expand(rs: RootSystem, config: RunConfig) -> tuple[object, str, bool]:
    weight = _weight(rs, config, config.weights[0])
    exp = chevalley_expand(rs, config.word, weight, auto_reduce=config.auto_reduce, max_length=config.max_length)
    verified = None
    if config.verify:
        verified = (verify_localization(BSContext(rs, exp.word), weight, exp.bs).passed
                    and verify_support_and_leading_term(exp).passed)
    shown = exp.ordinary() if config.ordinary else exp
    payload = render.expansion_json(shown, verified, exp.auto_reduced)
    if config.fmt == "text":
        text = render.expansion_text(shown, config.display, verified)
        if exp.auto_reduced:
            text = f"note: word {','.join(map(str, config.word))} is not reduced; used {','.join(map(str, exp.word))}\n" + text
    elif config.fmt == "latex":
        text = render.expansion_latex(shown, config.display)
    else:
        text = None
    return payload, text, verified is not False


def _run_bott_samelson(rs: RootSystem, config: RunConfig):
    weight = _weight(rs, config, config.weights[0])
    ctx = BSContext(rs, config.word)
    bs = line_bundle_expansion(ctx, weight, max_length=config.max_length)
    verified = verify_localization(ctx, weight, bs).passed if config.verify else None
    payload = render.bs_json(bs, verified)
    if config.fmt == "text":
        text = render.bs_text(bs, config.display, verified)
    elif config.fmt == "latex":
        text = render.bs_latex(bs, config.display)
    else:
        text = None
    return payload, text, verified is not False


def _table_row(args):
    rs, w, weight, ordinary = args
    exp = chevalley_expand(rs, w, weight)
    return exp.ordinary() if ordinary else exp


def _run_table(rs: RootSystem, config: RunConfig):
    weight = _weight(rs, config, config.weights[0])
    elements = all_elements(rs, config.max_group)
    rows = _parallel_map(_table_row, [(rs, w, weight, config.ordinary) for w in elements], config.threads)
    payload = render.table_json(rs, weight, rows, config.ordinary)
    if config.fmt == "text":
        text = "".join(render.expansion_text(e, config.display) for e in rows)
    elif config.fmt == "latex":
        text = "".join(render.expansion_latex(e, config.display) for e in rows)
    else:
        text = None
    return payload, text, True


def _verify_element(args) -> list[Report]:
    rs, w, weight, max_words = args
    exp = chevalley_expand(rs, w, weight)
    return [
        verify_localization(BSContext(rs, exp.word), weight, exp.bs),
        verify_support_and_leading_term(exp),
        verify_word_independence(rs, w, weight, max_words),
    ]


def _run_verify(rs: RootSystem, config: RunConfig):
    elements = all_elements(rs, config.max_group)
    weights = [_weight(rs, config, raw) for raw in config.weights]
    checks: list[dict] = []
    ok = True
    for weight in weights:
        per_w = _parallel_map(_verify_element, [(rs, w, weight, config.max_words) for w in elements], config.threads)
        merged = [Report(f"{kind} {rs.name} weight={list(weight)}") for kind in
                  ("localization", "support/leading term", "reduced-word independence")]
        for reports in per_w:
            for acc, rep in zip(merged, reports):
                acc.merge(rep)
        for rep in merged:
            ok &= rep.passed
            checks.append(rep.to_json())
        if is_dominant(weight):
            rep = check_positivity(rs, weight, elements)
            finding = rs.name not in POSITIVITY_ASSERTED
            if not finding:
                ok &= rep.passed
            checks.append({**rep.to_json(), "finding_only": finding})
    payload = {"group": rs.name, "weights": [list(w) for w in weights], "checks": checks, "passed": ok}
    if config.fmt == "json":
        text = None
    else:
        lines = [f"{'PASS' if c['passed'] else 'FAIL'} {c['name']}: "
                 f"{c['checked'] - len(c['failures'])}/{c['checked']}"
                 + (" (finding only)" if c.get("finding_only") and not c["passed"] else "")
                 for c in checks]
        lines.append(f"overall: {'PASS' if ok else 'FAIL'}")
        text = "\n".join(lines) + "\n"
    return payload, text, ok


RUNNERS = {
    "expand": _run_expand,
    "bott-samelson": _run_bott_samelson,
    "table": _run_table,
    "verify": _run_verify,
}


def _origin(exc: BaseException) -> str:
    tb = exc.__traceback__
    name = "kchevalley"
    while tb is not None:
        mod = tb.tb_frame.f_globals.get("__name__", "")
        if mod.startswith("kchevalley."):
            name = mod
        tb = tb.tb_next
    return name


def run(config: RunConfig) -> tuple[int, str]:
    """Execute a parsed configuration; returns the exit code and the rendered output."""
    rs = build_root_system(config.cartan)
    payload, text, ok = RUNNERS[config.subcommand](rs, config)
    if text is None:
        text = json.dumps(payload, indent=2) + "\n"
        if config.validate_json:
            jsonschema.validate(json.loads(text), SCHEMAS[config.subcommand])
    return (EXIT_OK if ok else EXIT_VERIFY_FAILED), text


def main(argv: list[str] | None = None) -> int:
    try:
        config = parse_args(argv)
        code, text = run(config)
    except SystemExit as exc:  # argparse usage errors
        return int(exc.code or 0)
    except jsonschema.ValidationError as exc:
        print(f"kchevalley: output failed schema validation: {exc.message}", file=sys.stderr)
        return EXIT_VERIFY_FAILED
    except KChevalleyError as exc:
        print(f"kchevalley: error [{_origin(exc)}] {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if config.output:
        with open(config.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
