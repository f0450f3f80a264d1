"""
Sweep dominant weights over whole Weyl groups and tabulate positivity of the
grouped equivariant coefficients, plus support/leading-term and word-independence
checks. Types outside A2/B2/G2 are reported as findings.

    python3 scripts/positivity_sweep.py --types A2 B2 G2 A3 B3 C3 --max-coord 2
"""

import argparse
import itertools
import time
from dataclasses import dataclass, field

from kchevalley.chevalley import (
    chevalley_expand,
    is_positive,
    verify_support_and_leading_term,
    verify_word_independence,
)
from kchevalley.root_system import build_root_system
from kchevalley.weyl import all_elements


@dataclass
class SweepConfig:
    types: list[str] = field(default_factory=lambda: ["A2", "B2", "G2", "A3", "B3", "C3"])
    max_coord: int = 1
    word_independence: bool = True
    max_words: int = 50


@dataclass
class SweepRow:
    group: str
    weight: tuple[int, ...]
    coefficients: int = 0
    non_positive: int = 0
    support_failures: int = 0
    word_failures: int = 0
    seconds: float = 0.0


def sweep_type(name: str, config: SweepConfig) -> list[SweepRow]:
    rs = build_root_system(name)
    elements = all_elements(rs)
    rows = []
    for weight in itertools.product(range(config.max_coord + 1), repeat=rs.rank):
        if not any(weight):
            continue
        row = SweepRow(name, weight)
        start = time.perf_counter()
        for w in elements:
            exp = chevalley_expand(rs, w, weight)
            row.coefficients += len(exp.terms)
            row.non_positive += sum(not is_positive(q) for q in exp.terms.values())
            row.support_failures += not verify_support_and_leading_term(exp).passed
            if config.word_independence:
                row.word_failures += not verify_word_independence(rs, w, weight, config.max_words).passed
        row.seconds = time.perf_counter() - start
        rows.append(row)
    return rows


def main():
    parser = argparse.ArgumentParser(description=__doc__.split("\n\n")[0].strip())
    parser.add_argument("--types", nargs="+", default=SweepConfig().types)
    parser.add_argument("--max-coord", type=int, default=1)
    parser.add_argument("--no-word-independence", action="store_true")
    parser.add_argument("--max-words", type=int, default=50)
    args = parser.parse_args()
    config = SweepConfig(args.types, args.max_coord, not args.no_word_independence, args.max_words)

    print(f"{'type':<5} {'weight':<14} {'coeffs':>7} {'non-pos':>8} {'support':>8} {'words':>6} {'time':>7}")
    bad = False
    for name in config.types:
        for r in sweep_type(name, config):
            print(f"{r.group:<5} {str(list(r.weight)):<14} {r.coefficients:>7} {r.non_positive:>8} "
                  f"{r.support_failures:>8} {r.word_failures:>6} {r.seconds:>6.2f}s")
            bad |= bool(r.support_failures or r.word_failures)
            bad |= bool(r.non_positive and name in {"A2", "B2", "G2"})
    raise SystemExit(1 if bad else 0)


if __name__ == "__main__":
    main()
