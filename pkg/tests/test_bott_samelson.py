import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from kchevalley.bott_samelson import (
    BSContext,
    WordTooLong,
    alpha_at,
    alphas,
    cell_order_leq,
    line_bundle_expansion,
    restrict_line_bundle,
    restrict_structure_sheaf,
    v_prefix,
    verify_cell_product,
    verify_localization,
)
from kchevalley.errors import IndexOutOfRange, LengthMismatch
from kchevalley.group_algebra import GroupAlgebraElem, demazure_op
from kchevalley.weyl import from_word, identity


def in_roots(rs, table):
    """Polynomial from ``{root_coords: coeff}``."""
    return GroupAlgebraElem({rs.root_coords_to_weight(k): c for k, c in table.items()}, rs.rank)


def compose_ops(rs, word, eps, weight):
    """Oracle: apply T^{eps_N}_{mu_N} first, then leftwards, one cell at a time."""
    f = GroupAlgebraElem.monomial(weight)
    for mu, bit in reversed(list(zip(word, eps))):
        f = demazure_op(rs, mu, bit, f)
    return f


A2_GOLDEN = {
    (1, 1, 1): {(0, -1): 1},
    (0, 1, 1): {(-1, 1): 1},
    (1, 0, 1): {(1, 0): 1},
}

# root coordinates (alpha_1, alpha_2); () is the constant 1
G2_GOLDEN = {
    (1, 1, 1, 1): {(-3, -1): 1},
    (0, 1, 1, 1): {(0, -1): 1, (-1, -1): 1, (-2, -1): 1},
    (1, 0, 1, 1): {(3, 1): 1, (0, 0): 1},
    (0, 0, 1, 1): {(1, 1): -1, (2, 1): -1, (3, 1): -1},
    (1, 1, 0, 1): {(3, 2): 1, (1, 1): 1, (-1, 0): 1},
    (0, 1, 0, 1): {(2, 1): 1, (1, 0): 1, (0, 0): 1},
    (1, 0, 0, 1): {(3, 2): -1, (2, 1): 1},
    (0, 0, 0, 1): {(2, 1): -1},
    (1, 1, 1, 0): {(0, 1): 1},
    (0, 1, 1, 0): {(3, 1): 1, (2, 1): 1, (1, 1): 1},
    (1, 0, 1, 0): {(3, 2): 1},
}


# cells and fixed points

def test_cells_ordering(a2):
    ctx = BSContext(a2, (2, 1, 2))
    cells = ctx.cells()
    assert len(cells) == 8
    assert cells[0] == (0, 0, 0) and cells[-1] == (1, 1, 1)
    assert cells[1:4] == [(0, 0, 1), (0, 1, 0), (1, 0, 0)]


def test_cell_order(a2):
    assert cell_order_leq((0, 1, 0), (1, 1, 0))
    assert not cell_order_leq((0, 1, 1), (1, 1, 0))
    assert cell_order_leq((0, 0, 0), (0, 0, 0))
    with pytest.raises(LengthMismatch):
        cell_order_leq((0, 1), (0, 1, 1))


def test_context_validation(a2):
    with pytest.raises(IndexOutOfRange):
        BSContext(a2, (1, 3))
    ctx = BSContext(a2, (2, 1, 2))
    with pytest.raises(LengthMismatch):
        ctx.check_cell((1, 0))


def test_v_prefix_and_alpha_at(a2):
    ctx = BSContext(a2, (2, 1, 2))
    assert v_prefix(ctx, (1, 1, 1), 2) == from_word(a2, (2, 1))
    assert v_prefix(ctx, (0, 1, 0), 3) == from_word(a2, (1,))
    assert v_prefix(ctx, (0, 0, 0), 3) == identity(a2)
    # the prefix includes position i: s2 s1 s2 (alpha_2) = -alpha_1
    assert alpha_at(ctx, (1, 1, 1), 3) == (-2, 1)
    # s2 s1 (alpha_1) = s2 (-alpha_1) = -(alpha_1 + alpha_2)
    assert alpha_at(ctx, (1, 1, 1), 2) == (-1, -1)
    # i = 1 with eps_1 = 1: the reflection negates its own root
    assert alpha_at(ctx, (1, 1, 0), 1) == (1, -2)
    assert alphas(ctx, (0, 0, 0)) == [a2.simple_root(2), a2.simple_root(1), a2.simple_root(2)]
    with pytest.raises(IndexOutOfRange):
        v_prefix(ctx, (1, 1, 1), 4)
    with pytest.raises(IndexOutOfRange):
        alpha_at(ctx, (1, 1, 1), 0)


def test_alpha_at_are_roots(g2):
    ctx = BSContext(g2, (1, 2, 1, 2, 1))
    for eps in ctx.cells():
        for root in alphas(ctx, eps):
            assert g2.is_root(root)


def test_restrictions(a2):
    ctx = BSContext(a2, (2, 1, 2))
    assert restrict_line_bundle(ctx, (1, 0), (1, 1, 1)) == GroupAlgebraElem.monomial((0, -1))
    assert restrict_line_bundle(ctx, (1, 0), (0, 0, 0)) == GroupAlgebraElem.monomial((1, 0))
    # closure of the top cell is everything
    for fixed in ctx.cells():
        assert restrict_structure_sheaf(ctx, (1, 1, 1), fixed) == 1
    # a point cell only sees its own fixed point
    assert restrict_structure_sheaf(ctx, (0, 0, 0), (0, 1, 0)) == 0
    # (1 - e^{-alpha_2}) (1 - e^{-alpha_1}) (1 - e^{-alpha_2}) at the base point
    one_minus = lambda r: 1 - GroupAlgebraElem.monomial(tuple(-x for x in r))
    a1, a2r = a2.simple_root(1), a2.simple_root(2)
    assert restrict_structure_sheaf(ctx, (0, 0, 0), (0, 0, 0)) == one_minus(a2r) * one_minus(a1) * one_minus(a2r)


# golden expansions

def test_a2_golden(a2):
    exp = line_bundle_expansion(BSContext(a2, (2, 1, 2)), (1, 0))
    assert set(exp.coefficients) == set(A2_GOLDEN)
    for eps, q in A2_GOLDEN.items():
        assert exp.coefficient(eps) == GroupAlgebraElem(q, 2)
    assert exp.coefficient((0, 0, 0)) == 0


def test_a2_intermediate_values(a2):
    rho1 = GroupAlgebraElem.monomial((1, 0))
    t = lambda i, b, f: demazure_op(a2, i, b, f)
    assert t(2, 0, rho1) == 0
    assert t(2, 1, rho1) == rho1
    assert t(1, 0, t(2, 1, rho1)) == rho1
    assert t(1, 1, t(2, 1, rho1)) == GroupAlgebraElem.monomial((-1, 1))


def test_g2_golden(g2):
    exp = line_bundle_expansion(BSContext(g2, (1, 2, 1, 2)), (0, 1))
    assert len(exp) == 11
    assert set(exp.coefficients) == set(G2_GOLDEN)
    for eps, table in G2_GOLDEN.items():
        assert exp.coefficient(eps) == in_roots(g2, table), eps


def test_g2_intermediate_values(g2):
    rho2 = (0, 1)
    word = (1, 2, 1, 2)
    # three-letter suffix values, written as (eps_2, eps_3, eps_4)
    three = {
        (0, 1, 0): {(3, 2): 1},
        (1, 1, 0): {(3, 1): 1},
        (0, 0, 1): {(3, 2): -1, (1, 1): 1},
        (1, 0, 1): {(3, 2): 1, (2, 1): 1, (1, 0): 1},
        (0, 1, 1): {(0, 1): 1, (0, 0): 1},
        (1, 1, 1): {(0, -1): 1},
    }
    for eps, table in three.items():
        assert compose_ops(g2, word[1:], eps, rho2) == in_roots(g2, table)
    assert compose_ops(g2, word[1:], (0, 0, 0), rho2) == 0
    assert compose_ops(g2, word[1:], (1, 0, 0), rho2) == 0


def test_g2_cells_with_zero_coefficient(g2):
    exp = line_bundle_expansion(BSContext(g2, (1, 2, 1, 2)), (0, 1))
    zero_cells = [eps for eps in itertools.product((0, 1), repeat=4) if eps not in G2_GOLDEN]
    assert len(zero_cells) == 5
    for eps in zero_cells:
        assert exp.coefficient(eps) == 0
        assert compose_ops(g2, (1, 2, 1, 2), eps, (0, 1)) == 0


def test_zero_weight(g2):
    ctx = BSContext(g2, (1, 2, 1))
    exp = line_bundle_expansion(ctx, (0, 0))
    assert dict(exp.coefficients) == {(1, 1, 1): GroupAlgebraElem.one(2)}


def test_empty_word(a2):
    ctx = BSContext(a2, ())
    exp = line_bundle_expansion(ctx, (2, -1))
    assert dict(exp.coefficients) == {(): GroupAlgebraElem.monomial((2, -1))}
    assert verify_localization(ctx, (2, -1)).passed


def test_word_cap(a2):
    with pytest.raises(WordTooLong):
        line_bundle_expansion(BSContext(a2, (1, 2) * 4), (1, 0), max_length=7)


# localization

def test_localization_examples(a2, g2):
    rep = verify_localization(BSContext(a2, (2, 1, 2)), (1, 0))
    assert rep.passed and rep.checked == 8
    rep = verify_localization(BSContext(g2, (1, 2, 1, 2)), (0, 1))
    assert rep.passed and rep.checked == 16


def test_localization_detects_corruption(g2):
    ctx = BSContext(g2, (1, 2, 1, 2))
    exp = line_bundle_expansion(ctx, (0, 1))
    exp.coefficients[(0, 0, 0, 1)] = exp.coefficients[(0, 0, 0, 1)] + 1
    rep = verify_localization(ctx, (0, 1), exp)
    assert not rep.passed
    assert rep.failures


words = st.lists(st.integers(1, 2), max_size=6)
weights = st.tuples(st.integers(-3, 3), st.integers(-3, 3))


@pytest.mark.parametrize("name", ["A2", "B2", "G2"])
@given(word=words, weight=weights)
def test_tree_matches_per_cell_composition(root_systems, name, word, weight):
    rs = root_systems[name]
    ctx = BSContext(rs, word)
    exp = line_bundle_expansion(ctx, weight)
    for eps in ctx.cells():
        assert exp.coefficient(eps) == compose_ops(rs, ctx.word, eps, weight)


@pytest.mark.parametrize("name", ["A2", "B2", "G2"])
@given(word=words, weight=weights)
def test_localization_property(root_systems, name, word, weight):
    ctx = BSContext(root_systems[name], word)
    assert verify_localization(ctx, weight).passed


@pytest.mark.parametrize("name", ["A2", "B2", "G2"])
@given(word=st.lists(st.integers(1, 2), max_size=5))
def test_cell_product_property(root_systems, name, word):
    assert verify_cell_product(BSContext(root_systems[name], word)).passed


def test_cell_product_rank3(root_systems):
    rep = verify_cell_product(BSContext(root_systems["B3"], (3, 2, 1, 3)))
    assert rep.passed and rep.checked == 16 * 16
