"""
Cells of a Bott-Samelson variety for a word ``(mu_1, ..., mu_N)`` of simple indices,
and the decomposition of an equivariant line bundle in the basis of cell closures.

Cells and torus-fixed points are both indexed by bit tuples ``eps``. The
coefficient of cell ``eps`` in ``[L_lambda]`` is

    R(eps) = T^{eps_1}_{mu_1} T^{eps_2}_{mu_2} ... T^{eps_N}_{mu_N} (e^lambda)

with ``T^0``/``T^1`` from :mod:`kchevalley.group_algebra`. Every result can be
certified by restricting both sides to the ``2^N`` fixed points.
"""

from __future__ import annotations

import itertools
from collections.abc import Sequence
from dataclasses import dataclass, field

from .errors import IndexOutOfRange, KChevalleyError, LengthMismatch
from .group_algebra import GroupAlgebraElem, demazure_op
from .report import Report
from .root_system import RootSystem, Weight
from .weyl import Word, WeylElem, check_word, identity, simple_reflection

Cell = tuple[int, ...]

DEFAULT_MAX_WORD_LENGTH = 20


class WordTooLong(KChevalleyError):
    pass


@dataclass(frozen=True)
class BSContext:
    rs: RootSystem
    word: Word

    def __post_init__(self):
        object.__setattr__(self, "word", check_word(self.rs, self.word))

    @property
    def n(self) -> int:
        return len(self.word)

    def check_cell(self, eps: Sequence[int]) -> Cell:
        if len(eps) != self.n:
            raise LengthMismatch(f"cell {tuple(eps)} has length {len(eps)}, word has length {self.n}")
        return tuple(int(bool(b)) for b in eps)

    def cells(self) -> list[Cell]:
        """All of ``{0,1}^N`` ordered by (number of ones, bits)."""
        return sorted(itertools.product((0, 1), repeat=self.n), key=cell_sort_key)


def cell_sort_key(eps: Cell) -> tuple[int, Cell]:
    return (sum(eps), eps)


def cell_order_leq(eps: Sequence[int], eps2: Sequence[int]) -> bool:
    """``eps <= eps2`` iff every 1 of ``eps`` is a 1 of ``eps2``."""
    if len(eps) != len(eps2):
        raise LengthMismatch(f"cells of lengths {len(eps)} and {len(eps2)}")
    return all(b2 or not b for b, b2 in zip(eps, eps2))


def _prefix_elements(ctx: BSContext, eps: Cell) -> list[WeylElem]:
    # v_1(eps), ..., v_N(eps)
    out = []
    v = identity(ctx.rs)
    for bit, mu in zip(eps, ctx.word):
        if bit:
            v = v * simple_reflection(ctx.rs, mu)
        out.append(v)
    return out


def v_prefix(ctx: BSContext, eps: Sequence[int], i: int) -> WeylElem:
    """Ordinary product of ``s_{mu_j}`` over ``j <= i`` with ``eps_j = 1``, in word order."""
    eps = ctx.check_cell(eps)
    if not 1 <= i <= ctx.n:
        raise IndexOutOfRange(f"position {i} outside 1..{ctx.n}")
    return _prefix_elements(ctx, eps)[i - 1]


def alpha_at(ctx: BSContext, eps: Sequence[int], i: int) -> Weight:
    """The root ``v_i(eps)(alpha_{mu_i})``."""
    return v_prefix(ctx, eps, i).apply(ctx.rs.simple_roots[ctx.word[i - 1] - 1])


def alphas(ctx: BSContext, eps: Sequence[int]) -> list[Weight]:
    eps = ctx.check_cell(eps)
    return [
        v.apply(ctx.rs.simple_roots[mu - 1])
        for v, mu in zip(_prefix_elements(ctx, eps), ctx.word)
    ]


def restrict_line_bundle(ctx: BSContext, weight: Weight, eps: Sequence[int]) -> GroupAlgebraElem:
    """Value of ``[L_lambda]`` at fixed point ``eps``: ``e^{v(eps) lambda}``."""
    eps = ctx.check_cell(eps)
    weight = ctx.rs.check_weight(weight)
    if ctx.n == 0:
        return GroupAlgebraElem.monomial(weight)
    return GroupAlgebraElem.monomial(_prefix_elements(ctx, eps)[-1].apply(weight))


def _one_minus_inverse(root: Weight) -> GroupAlgebraElem:
    r = len(root)
    return GroupAlgebraElem({(0,) * r: 1, tuple(-x for x in root): -1}, r)


def _structure_sheaf_value(rank: int, cell: Cell, fixed: Cell, roots: list[Weight]) -> GroupAlgebraElem:
    if not cell_order_leq(fixed, cell):
        return GroupAlgebraElem.zero(rank)
    out = GroupAlgebraElem.one(rank)
    for bit, root in zip(cell, roots):
        if not bit:
            out = out * _one_minus_inverse(root)
    return out


def restrict_structure_sheaf(ctx: BSContext, cell: Sequence[int], fixed: Sequence[int]) -> GroupAlgebraElem:
    """
    Value at fixed point ``fixed`` of the class of the closure of ``cell``:
    the product of ``1 - e^{-alpha_i(fixed)}`` over positions where ``cell`` is 0,
    or zero when ``fixed`` does not lie in the closure.
    """
    cell = ctx.check_cell(cell)
    fixed = ctx.check_cell(fixed)
    return _structure_sheaf_value(ctx.rs.rank, cell, fixed, alphas(ctx, fixed))


@dataclass
class BSExpansion:
    ctx: BSContext
    weight: Weight
    coefficients: dict[Cell, GroupAlgebraElem] = field(default_factory=dict)

    def coefficient(self, eps: Sequence[int]) -> GroupAlgebraElem:
        eps = self.ctx.check_cell(eps)
        return self.coefficients.get(eps, GroupAlgebraElem.zero(self.ctx.rs.rank))

    def items(self) -> list[tuple[Cell, GroupAlgebraElem]]:
        return sorted(self.coefficients.items(), key=lambda kv: cell_sort_key(kv[0]))

    def __len__(self) -> int:
        return len(self.coefficients)


def line_bundle_expansion(
    ctx: BSContext, weight: Weight, max_length: int = DEFAULT_MAX_WORD_LENGTH
) -> BSExpansion:
    """
    Coefficients ``R(eps)`` for every cell, built innermost operator first.

    Each level applies ``T^0`` and ``T^1`` of the next letter (moving leftwards)
    to every surviving polynomial, so common suffixes are computed once and
    zero branches are pruned immediately.

    >>> from kchevalley.root_system import build_root_system
    >>> ctx = BSContext(build_root_system("A2"), (2, 1, 2))
    >>> sorted(line_bundle_expansion(ctx, (1, 0)).coefficients)
    [(0, 1, 1), (1, 0, 1), (1, 1, 1)]
    """
    if ctx.n > max_length:
        raise WordTooLong(f"word of length {ctx.n} exceeds the cap of {max_length}")
    weight = ctx.rs.check_weight(weight)
    level: dict[Cell, GroupAlgebraElem] = {(): GroupAlgebraElem.monomial(weight)}
    for mu in reversed(ctx.word):
        nxt: dict[Cell, GroupAlgebraElem] = {}
        for suffix, poly in level.items():
            for bit in (0, 1):
                child = demazure_op(ctx.rs, mu, bit, poly)
                if child:
                    nxt[(bit,) + suffix] = child
        level = nxt
    return BSExpansion(ctx, weight, level)


def verify_localization(ctx: BSContext, weight: Weight, expansion: BSExpansion | None = None) -> Report:
    """
    Check ``sum_cell R(cell) * O_cell|fixed == e^{v(fixed) lambda}`` at every fixed point.

    Fixed-point restriction is injective on this K-group, so passing at all
    ``2^N`` points certifies the whole expansion.
    """
    if expansion is None:
        expansion = line_bundle_expansion(ctx, weight)
    weight = ctx.rs.check_weight(weight)
    rank = ctx.rs.rank
    report = Report(f"localization {ctx.rs.name} word={list(ctx.word)} weight={list(weight)}")
    terms = list(expansion.coefficients.items())
    for fixed in itertools.product((0, 1), repeat=ctx.n):
        prefixes = _prefix_elements(ctx, fixed)
        roots = [v.apply(ctx.rs.simple_roots[mu - 1]) for v, mu in zip(prefixes, ctx.word)]
        lhs = GroupAlgebraElem.zero(rank)
        for cell, coeff in terms:
            if cell_order_leq(fixed, cell):
                lhs = lhs + coeff * _structure_sheaf_value(rank, cell, fixed, roots)
        v = prefixes[-1] if prefixes else identity(ctx.rs)
        rhs = GroupAlgebraElem.monomial(v.apply(weight))
        report.record(lhs == rhs, fixed)
    return report


def verify_cell_product(ctx: BSContext) -> Report:
    """
    Check at every fixed point that a cell closure class is the product of the
    divisor classes ``[i]`` (all ones except position ``i``) over its zero positions.
    """
    rank = ctx.rs.rank
    n = ctx.n
    report = Report(f"cell product {ctx.rs.name} word={list(ctx.word)}")
    divisors = [tuple(int(j != i) for j in range(n)) for i in range(n)]
    for fixed in itertools.product((0, 1), repeat=n):
        roots = alphas(ctx, fixed)
        div_values = [_structure_sheaf_value(rank, d, fixed, roots) for d in divisors]
        for cell in itertools.product((0, 1), repeat=n):
            lhs = _structure_sheaf_value(rank, cell, fixed, roots)
            rhs = GroupAlgebraElem.one(rank)
            for i, bit in enumerate(cell):
                if not bit:
                    rhs = rhs * div_values[i]
            report.record(lhs == rhs, (cell, fixed))
    return report
