"""
Weyl group elements as integer matrices acting on fundamental-weight coordinates.

Two elements are equal iff their matrices are equal. Products follow function
composition: ``(w * u)(x) == w(u(x))``, and ``from_word(rs, (i1, ..., ik))`` is
``s_i1 * ... * s_ik``.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from functools import cached_property, lru_cache

from .errors import DimensionMismatch, GroupTooLarge, LengthMismatch
from .root_system import Matrix, RootSystem, Weight

Word = tuple[int, ...]

DEFAULT_MAX_GROUP = 10**6
DEFAULT_MAX_WORDS = 5000


def _matmul(a: Matrix, b: Matrix) -> Matrix:
    n = len(b)
    cols = list(zip(*b))
    return tuple(tuple(sum(a[i][k] * col[k] for k in range(n)) for col in cols) for i in range(len(a)))


@dataclass(frozen=True)
class WeylElem:
    matrix: Matrix
    rs: RootSystem = field(compare=False, repr=False)

    def apply(self, weight: Sequence[int]) -> Weight:
        if len(weight) != len(self.matrix):
            raise DimensionMismatch(f"weight of rank {len(weight)} acted on by rank {len(self.matrix)} element")
        return tuple(sum(m * x for m, x in zip(row, weight)) for row in self.matrix)

    __call__ = apply

    def __mul__(self, other: WeylElem) -> WeylElem:
        if not isinstance(other, WeylElem):
            return NotImplemented
        if len(other.matrix) != len(self.matrix):
            raise DimensionMismatch("cannot compose Weyl elements of different rank")
        return WeylElem(_matmul(self.matrix, other.matrix), self.rs)

    @cached_property
    def is_identity(self) -> bool:
        return self.matrix == _identity_matrix(self.rs.rank)

    @cached_property
    def rho_image(self) -> Weight:
        # w(rho) with rho = sum of fundamental weights; determines w
        return tuple(sum(row) for row in self.matrix)

    def has_left_descent(self, i: int) -> bool:
        """True iff ``l(s_i w) < l(w)``, read off as ``<w rho, alpha_i^vee> < 0``."""
        return self.rho_image[i - 1] < 0

    def has_right_descent(self, i: int) -> bool:
        """True iff ``l(w s_i) < l(w)``, i.e. ``w(alpha_i)`` is a negative root."""
        return not self.rs.is_positive_root(self.apply(self.rs.simple_roots[i - 1]))

    @cached_property
    def length(self) -> int:
        rs = self.rs
        return sum(1 for g in rs.positive_roots if not rs.is_positive_root(self.apply(g)))

    @cached_property
    def reduced_word(self) -> Word:
        """Canonical reduced word: repeatedly strip the smallest left descent."""
        word = []
        w = self
        r = self.rs.rank
        while not w.is_identity:
            i = next(i for i in range(1, r + 1) if w.has_left_descent(i))
            word.append(i)
            w = simple_reflection(self.rs, i) * w
        return tuple(word)

    def inverse(self) -> WeylElem:
        return from_word(self.rs, self.reduced_word[::-1])

    def sort_key(self) -> tuple[int, Word]:
        return (self.length, self.reduced_word)

    def __repr__(self) -> str:
        return f"WeylElem({word_name(self.reduced_word)})"


def word_name(word: Sequence[int]) -> str:
    return "".join(f"s{i}" for i in word) or "e"


@lru_cache(maxsize=None)
def _identity_matrix(r: int) -> Matrix:
    return tuple(tuple(int(i == j) for j in range(r)) for i in range(r))


@lru_cache(maxsize=None)
def _reflection_matrix(cartan: Matrix, i: int) -> Matrix:
    r = len(cartan)
    # s_i(x)_k = x_k - x_i * cartan[k][i]
    return tuple(
        tuple(int(k == l) - (cartan[k][i] if l == i else 0) for l in range(r)) for k in range(r)
    )


def identity(rs: RootSystem) -> WeylElem:
    return WeylElem(_identity_matrix(rs.rank), rs)


def simple_reflection(rs: RootSystem, i: int) -> WeylElem:
    rs.check_index(i)
    return WeylElem(_reflection_matrix(rs.cartan, i - 1), rs)


def compose(w: WeylElem, u: WeylElem) -> WeylElem:
    """Apply ``u`` first, then ``w``."""
    return w * u


def apply(w: WeylElem, weight: Sequence[int]) -> Weight:
    return w.apply(weight)


def length(w: WeylElem) -> int:
    return w.length


def reduced_word(w: WeylElem) -> Word:
    return w.reduced_word


def check_word(rs: RootSystem, word: Iterable[int]) -> Word:
    word = tuple(word)
    for i in word:
        rs.check_index(i)
    return word


def from_word(rs: RootSystem, word: Iterable[int]) -> WeylElem:
    """Ordinary product ``s_i1 s_i2 ... s_ik``."""
    w = identity(rs)
    for i in check_word(rs, word):
        w = w * simple_reflection(rs, i)
    return w


def is_reduced(rs: RootSystem, word: Sequence[int]) -> bool:
    return from_word(rs, word).length == len(word)


def demazure_product(rs: RootSystem, word: Sequence[int], mask: Sequence[int] | None = None) -> WeylElem:
    """
    Weyl element corresponding to the 0-Hecke product of the letters selected by ``mask``.

    Letters are multiplied in word order; a letter that would shorten the running
    product is absorbed (``s_i s_i = s_i`` in the monoid).

    >>> from kchevalley.root_system import build_root_system
    >>> rs = build_root_system("A2")
    >>> demazure_product(rs, (2, 1, 2), (1, 0, 1)).reduced_word
    (2,)
    """
    word = check_word(rs, word)
    if mask is not None and len(mask) != len(word):
        raise LengthMismatch(f"mask of length {len(mask)} for word of length {len(word)}")
    w = identity(rs)
    for pos, i in enumerate(word):
        if mask is not None and not mask[pos]:
            continue
        if not w.has_right_descent(i):
            w = w * simple_reflection(rs, i)
    return w


def bruhat_leq(v: WeylElem, w: WeylElem) -> bool:
    """
    Bruhat comparison ``v <= w`` by scanning the canonical word of ``w``.

    Uses the lifting property: for a left descent ``s`` of ``w``, ``v <= w`` iff
    ``s v <= s w`` when ``s`` is also a descent of ``v``, and iff ``v <= s w`` otherwise.
    """
    if len(v.matrix) != len(w.matrix):
        raise DimensionMismatch("cannot compare Weyl elements of different rank")
    rs = w.rs
    while True:
        if v.length > w.length:
            return False
        if w.is_identity:
            return v.is_identity
        i = w.reduced_word[0]
        s = simple_reflection(rs, i)
        if v.has_left_descent(i):
            v = s * v
        w = s * w


def longest_element(rs: RootSystem) -> WeylElem:
    w = identity(rs)
    while True:
        for i in range(1, rs.rank + 1):
            if not w.has_right_descent(i):
                w = w * simple_reflection(rs, i)
                break
        else:
            return w


def all_elements(rs: RootSystem, max_size: int = DEFAULT_MAX_GROUP) -> list[WeylElem]:
    """Every element once, ordered by (length, canonical word)."""
    seen = {identity(rs).matrix: identity(rs)}
    frontier = [identity(rs)]
    gens = [simple_reflection(rs, i) for i in range(1, rs.rank + 1)]
    while frontier:
        nxt = []
        for w in frontier:
            for s in gens:
                u = s * w
                if u.matrix not in seen:
                    seen[u.matrix] = u
                    nxt.append(u)
                    if len(seen) > max_size:
                        raise GroupTooLarge(f"Weyl group of {rs.name} has more than {max_size} elements")
        frontier = nxt
    return sorted(seen.values(), key=WeylElem.sort_key)


def reduced_words(w: WeylElem, limit: int = DEFAULT_MAX_WORDS) -> list[Word]:
    """All reduced words of ``w`` in lexicographic order, truncated to the first ``limit``."""
    rs = w.rs
    out: list[Word] = []

    def walk(u: WeylElem, prefix: Word) -> None:
        if len(out) >= limit:
            return
        if u.is_identity:
            out.append(prefix)
            return
        for i in range(1, rs.rank + 1):
            if u.has_left_descent(i):
                walk(simple_reflection(rs, i) * u, prefix + (i,))

    walk(w, ())
    return out
