"""
Chevalley formula in equivariant K-theory of G/B:

    [L_lambda] * O_w = sum_v q(w, v) O_v,

obtained by pushing the Bott-Samelson line-bundle expansion of a reduced word
of ``w`` forward: cell ``eps`` lands on the Demazure product of the letters it
selects. Specialising every character to 1 gives ordinary K-theory.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass, field

from .bott_samelson import DEFAULT_MAX_WORD_LENGTH, BSContext, BSExpansion, line_bundle_expansion
from .errors import NotDominant, NotReduced
from .group_algebra import GroupAlgebraElem, augment_ev
from .report import Report
from .root_system import RootSystem, Weight, is_dominant
from .weyl import (
    DEFAULT_MAX_GROUP,
    DEFAULT_MAX_WORDS,
    Word,
    WeylElem,
    all_elements,
    bruhat_leq,
    check_word,
    demazure_product,
    from_word,
    reduced_words,
)


def output_order(elements) -> list[WeylElem]:
    return sorted(elements, key=lambda v: (v.length, v.reduced_word), reverse=True)


@dataclass
class ChevalleyExpansion:
    rs: RootSystem
    w: WeylElem
    weight: Weight
    word: Word
    terms: dict[WeylElem, GroupAlgebraElem] = field(default_factory=dict)
    auto_reduced: bool = False
    bs: BSExpansion | None = field(default=None, repr=False)

    def coefficient(self, v: WeylElem) -> GroupAlgebraElem:
        return self.terms.get(v, GroupAlgebraElem.zero(self.rs.rank))

    def items(self) -> list[tuple[WeylElem, GroupAlgebraElem]]:
        """Terms ordered by decreasing (length, canonical word)."""
        return [(v, self.terms[v]) for v in output_order(self.terms)]

    def ordinary(self) -> OrdinaryExpansion:
        ints = {v: augment_ev(q) for v, q in self.terms.items()}
        return OrdinaryExpansion(self.rs, self.w, self.weight, self.word, {v: c for v, c in ints.items() if c})


@dataclass
class OrdinaryExpansion:
    rs: RootSystem
    w: WeylElem
    weight: Weight
    word: Word
    terms: dict[WeylElem, int] = field(default_factory=dict)

    def items(self) -> list[tuple[WeylElem, int]]:
        return [(v, self.terms[v]) for v in output_order(self.terms)]


def resolve_word(rs: RootSystem, w_or_word: WeylElem | Sequence[int], auto_reduce: bool = False) -> tuple[Word, bool]:
    """Reduced word to expand with, and whether it was substituted for a non-reduced input."""
    if isinstance(w_or_word, WeylElem):
        return w_or_word.reduced_word, False
    word = check_word(rs, w_or_word)
    w = from_word(rs, word)
    if w.length == len(word):
        return word, False
    if not auto_reduce:
        raise NotReduced(f"word {list(word)} is not reduced (its product has length {w.length})")
    return w.reduced_word, True


def chevalley_expand(
    rs: RootSystem,
    w_or_word: WeylElem | Sequence[int],
    weight: Weight,
    auto_reduce: bool = False,
    max_length: int = DEFAULT_MAX_WORD_LENGTH,
) -> ChevalleyExpansion:
    """
    >>> from kchevalley.root_system import build_root_system
    >>> rs = build_root_system("A2")
    >>> exp = chevalley_expand(rs, (2, 1, 2), (1, 0))
    >>> [(v.reduced_word, q.terms()) for v, q in exp.items()]
    [((1, 2, 1), [((0, -1), 1)]), ((1, 2), [((-1, 1), 1)]), ((2,), [((1, 0), 1)])]
    """
    word, substituted = resolve_word(rs, w_or_word, auto_reduce)
    weight = rs.check_weight(weight)
    ctx = BSContext(rs, word)
    bs = line_bundle_expansion(ctx, weight, max_length=max_length)
    grouped: dict[WeylElem, GroupAlgebraElem] = {}
    for eps, coeff in bs.coefficients.items():
        v = demazure_product(rs, word, eps)
        grouped[v] = grouped[v] + coeff if v in grouped else coeff
    terms = {v: q for v, q in grouped.items() if q}
    return ChevalleyExpansion(rs, from_word(rs, word), weight, word, terms, substituted, bs)


def chevalley_ordinary(
    rs: RootSystem, w_or_word: WeylElem | Sequence[int], weight: Weight, auto_reduce: bool = False
) -> OrdinaryExpansion:
    return chevalley_expand(rs, w_or_word, weight, auto_reduce).ordinary()


def verify_word_independence(
    rs: RootSystem, w: WeylElem, weight: Weight, limit: int = DEFAULT_MAX_WORDS
) -> Report:
    """Every reduced word of ``w`` (up to ``limit``) must give the same grouped expansion."""
    report = Report(f"word independence {rs.name} w={list(w.reduced_word)} weight={list(weight)}")
    words = reduced_words(w, limit)
    reference = chevalley_expand(rs, words[0], weight).terms
    for word in words[1:]:
        report.record(chevalley_expand(rs, word, weight).terms == reference, word)
    if len(words) == 1:
        report.record(True)
    return report


def verify_support_and_leading_term(expansion: ChevalleyExpansion) -> Report:
    """``q(w, v) != 0`` only for ``v <= w``, and ``q(w, w) = e^{w lambda}``."""
    w = expansion.w
    report = Report(f"support/leading {expansion.rs.name} w={list(w.reduced_word)} weight={list(expansion.weight)}")
    for v in expansion.terms:
        report.record(bruhat_leq(v, w), ("not below w", v))
    leading = GroupAlgebraElem.monomial(w.apply(expansion.weight))
    report.record(expansion.coefficient(w) == leading, ("leading term", w))
    return report


def is_positive(q: GroupAlgebraElem) -> bool:
    return all(c > 0 for _, c in q.terms())


def check_positivity(
    rs: RootSystem, weight: Weight, elements: Sequence[WeylElem] | None = None, max_size: int = DEFAULT_MAX_GROUP
) -> Report:
    """For dominant ``weight``, every grouped coefficient over all of W has only positive coefficients."""
    weight = rs.check_weight(weight)
    if not is_dominant(weight):
        raise NotDominant(f"weight {list(weight)} is not dominant")
    report = Report(f"positivity {rs.name} weight={list(weight)}")
    for w in elements if elements is not None else all_elements(rs, max_size):
        exp = chevalley_expand(rs, w, weight)
        for v, q in exp.terms.items():
            report.record(is_positive(q), (w, v, q))
    return report


def table(rs: RootSystem, weight: Weight, max_size: int = DEFAULT_MAX_GROUP) -> list[ChevalleyExpansion]:
    """Expansion of ``[L_lambda] * O_w`` for every ``w``, ordered by (length, canonical word)."""
    return [chevalley_expand(rs, w, weight) for w in all_elements(rs, max_size)]
