"""
Recompute the worked A2 and G2 examples and print them in root coordinates,
then certify each Bott-Samelson expansion by localization.

    python3 scripts/reproduce_examples.py [--format text|latex]
"""

import argparse
from dataclasses import dataclass

from kchevalley import render
from kchevalley.bott_samelson import BSContext, line_bundle_expansion, verify_localization
from kchevalley.chevalley import chevalley_expand
from kchevalley.root_system import build_root_system


@dataclass(frozen=True)
class Example:
    group: str
    word: tuple[int, ...]
    weight: tuple[int, ...]


EXAMPLES = [
    Example("A2", (2, 1, 2), (1, 0)),
    Example("G2", (1, 2, 1, 2), (0, 1)),
]


def show(example: Example, fmt: str) -> bool:
    rs = build_root_system(example.group)
    display = render.ROOT_COORDS if example.group == "G2" else render.FUNDAMENTAL
    ctx = BSContext(rs, example.word)
    bs = line_bundle_expansion(ctx, example.weight)
    ok = verify_localization(ctx, example.weight, bs).passed
    exp = chevalley_expand(rs, example.word, example.weight)
    if fmt == "latex":
        print(render.bs_latex(bs, display))
        print(render.expansion_latex(exp, display))
        print(render.expansion_latex(exp.ordinary(), display))
    else:
        print(render.bs_text(bs, display, ok))
        print(render.expansion_text(exp, display))
        print(render.expansion_text(exp.ordinary(), display))
    return ok


def main():
    parser = argparse.ArgumentParser(description=__doc__.split("\n\n")[0].strip())
    parser.add_argument("--format", choices=["text", "latex"], default="text")
    args = parser.parse_args()
    ok = all([show(ex, args.format) for ex in EXAMPLES])
    raise SystemExit(0 if ok else 1)


if __name__ == "__main__":
    main()
