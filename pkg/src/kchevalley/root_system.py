"""
Finite-type Cartan data and the weight lattice in fundamental-weight coordinates.

A weight is a plain tuple of integers ``coords`` with ``coords[i-1] = <lambda, alpha_i^vee>``,
so pairing with a simple coroot is a coordinate read. Simple indices are 1-based
throughout the public API.

Cartan convention: ``cartan[i][j] = <alpha_j, alpha_i^vee>``, so column ``j`` of the
matrix is ``alpha_j`` written in fundamental coordinates.

>>> rs = build_root_system("A2")
>>> rs.simple_roots
((2, -1), (-1, 2))
>>> rs.reflect(1, (1, 0))
(-1, 1)
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .errors import DimensionMismatch, IndexOutOfRange, InvalidCartan, UnsupportedRank

Weight = tuple[int, ...]
Matrix = tuple[tuple[int, ...], ...]

_MIN_RANK = {"A": 1, "B": 2, "C": 2, "D": 3, "G": 2, "F": 4, "E": 6}


@dataclass(frozen=True)
class CartanSpec:
    """Either a named type (``type_letter`` + ``rank``) or an explicit integer matrix."""

    type_letter: str | None = None
    rank: int | None = None
    matrix: Matrix | None = None

    @classmethod
    def parse(cls, text: str) -> CartanSpec:
        """Accept ``"G2"``-style names or a JSON integer matrix such as ``"[[2,-1],[-1,2]]"``."""
        text = text.strip()
        if text.startswith("["):
            try:
                rows = json.loads(text)
            except json.JSONDecodeError as exc:
                raise InvalidCartan(f"cannot parse Cartan matrix {text!r}: {exc}") from None
            if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
                raise InvalidCartan(f"Cartan matrix must be a list of rows, got {text!r}")
            if not all(isinstance(x, int) and not isinstance(x, bool) for r in rows for x in r):
                raise InvalidCartan("Cartan matrix entries must be integers")
            return cls(matrix=tuple(tuple(r) for r in rows))
        m = re.fullmatch(r"([A-Ga-g])\s*(\d+)", text)
        if m is None:
            raise UnsupportedRank(f"unrecognised Cartan type {text!r}")
        return cls(type_letter=m.group(1).upper(), rank=int(m.group(2)))

    @property
    def name(self) -> str:
        if self.type_letter is not None:
            return f"{self.type_letter}{self.rank}"
        return json.dumps([list(r) for r in self.matrix], separators=(",", ":"))


def cartan_matrix(letter: str, rank: int) -> Matrix:
    """Bourbaki-labelled Cartan matrix of a named type; G2 has alpha_1 short."""
    letter = letter.upper()
    if letter not in _MIN_RANK:
        raise UnsupportedRank(f"unknown Cartan type letter {letter!r}")
    if rank < _MIN_RANK[letter] or (letter == "E" and rank > 8) or (
        letter in "FG" and rank != _MIN_RANK[letter]
    ):
        raise UnsupportedRank(f"type {letter} does not exist in rank {rank}")

    a = [[2 if i == j else 0 for j in range(rank)] for i in range(rank)]

    def link(i: int, j: int, a_ij: int = -1, a_ji: int = -1) -> None:
        a[i][j] = a_ij
        a[j][i] = a_ji

    n = rank
    if letter in "ABC":
        for i in range(n - 1):
            link(i, i + 1)
        if letter == "B":
            # alpha_n short: <alpha_{n-1}, alpha_n^vee> = -2
            link(n - 2, n - 1, -1, -2)
        elif letter == "C":
            link(n - 2, n - 1, -2, -1)
    elif letter == "D":
        for i in range(n - 2):
            link(i, i + 1)
        link(n - 3, n - 1)
    elif letter == "E":
        link(0, 2)
        link(1, 3)
        for i in range(2, n - 1):
            link(i, i + 1)
    elif letter == "F":
        link(0, 1)
        link(1, 2, -1, -2)
        link(2, 3)
    elif letter == "G":
        link(0, 1, -3, -1)
    return tuple(tuple(r) for r in a)


def _symmetrizer(a: Matrix) -> list[Fraction]:
    """Positive d with d_i a_ij = d_j a_ji, found component by component."""
    r = len(a)
    d: list[Fraction | None] = [None] * r
    for start in range(r):
        if d[start] is not None:
            continue
        d[start] = Fraction(1)
        stack = [start]
        while stack:
            i = stack.pop()
            for j in range(r):
                if j == i or a[i][j] == 0:
                    continue
                dj = d[i] * a[i][j] / a[j][i]
                if d[j] is None:
                    d[j] = dj
                    stack.append(j)
                elif d[j] != dj:
                    raise InvalidCartan("Cartan matrix is not symmetrizable")
    return d  # type: ignore[return-value]


def _leading_minors_positive(m: list[list[Fraction]]) -> bool:
    # Gaussian elimination without pivoting: all pivots > 0 iff all leading minors > 0
    m = [row[:] for row in m]
    n = len(m)
    for k in range(n):
        if m[k][k] <= 0:
            return False
        for i in range(k + 1, n):
            f = m[i][k] / m[k][k]
            for j in range(k, n):
                m[i][j] -= f * m[k][j]
    return True


def validate_cartan(a: Matrix) -> None:
    r = len(a)
    if r == 0 or any(len(row) != r for row in a):
        raise InvalidCartan("Cartan matrix must be square and non-empty")
    for i in range(r):
        if a[i][i] != 2:
            raise InvalidCartan(f"diagonal entry ({i + 1},{i + 1}) is {a[i][i]}, expected 2")
        for j in range(r):
            if i == j:
                continue
            if a[i][j] > 0:
                raise InvalidCartan(f"off-diagonal entry ({i + 1},{j + 1}) is positive")
            if (a[i][j] == 0) != (a[j][i] == 0):
                raise InvalidCartan(f"entries ({i + 1},{j + 1}) and ({j + 1},{i + 1}) disagree on zero")
    d = _symmetrizer(a)
    sym = [[d[i] * a[i][j] for j in range(r)] for i in range(r)]
    if not _leading_minors_positive(sym):
        raise InvalidCartan("Cartan matrix is not of finite type")


@dataclass(frozen=True)
class RootSystem:
    name: str
    cartan: Matrix
    simple_roots: tuple[Weight, ...]
    positive_roots: tuple[Weight, ...]
    # fundamental coordinates -> simple-root coordinates, for every root (both signs)
    _root_coords: dict[Weight, tuple[int, ...]] = field(repr=False, compare=False, hash=False)

    @property
    def rank(self) -> int:
        return len(self.cartan)

    def check_index(self, i: int) -> int:
        if not 1 <= i <= self.rank:
            raise IndexOutOfRange(f"simple index {i} outside 1..{self.rank}")
        return i

    def check_weight(self, weight: Sequence[int]) -> Weight:
        if len(weight) != self.rank:
            raise DimensionMismatch(f"weight {tuple(weight)} has {len(weight)} coordinates, rank is {self.rank}")
        return tuple(weight)

    def simple_root(self, i: int) -> Weight:
        return self.simple_roots[self.check_index(i) - 1]

    def fundamental_weight(self, i: int) -> Weight:
        self.check_index(i)
        return tuple(int(k == i - 1) for k in range(self.rank))

    def zero(self) -> Weight:
        return (0,) * self.rank

    def pairing(self, weight: Weight, i: int) -> int:
        self.check_index(i)
        return self.check_weight(weight)[i - 1]

    def reflect(self, i: int, weight: Weight) -> Weight:
        """``s_i(lambda) = lambda - <lambda, alpha_i^vee> alpha_i``."""
        m = self.pairing(weight, i)
        if m == 0:
            return tuple(weight)
        alpha = self.simple_roots[i - 1]
        return tuple(x - m * a for x, a in zip(weight, alpha))

    def root_coords_to_weight(self, coeffs: Sequence[int]) -> Weight:
        """Fundamental coordinates of ``sum_j coeffs[j] * alpha_{j+1}``."""
        if len(coeffs) != self.rank:
            raise DimensionMismatch(f"expected {self.rank} root coordinates, got {len(coeffs)}")
        return tuple(sum(self.cartan[i][j] * coeffs[j] for j in range(self.rank)) for i in range(self.rank))

    def weight_to_root_coords(self, weight: Weight) -> tuple[Fraction, ...]:
        """Inverse of :meth:`root_coords_to_weight`; rational in general (e.g. rho_1 in A2)."""
        weight = self.check_weight(weight)
        if weight in self._root_coords:
            return tuple(Fraction(c) for c in self._root_coords[weight])
        r = self.rank
        aug = [[Fraction(self.cartan[i][j]) for j in range(r)] + [Fraction(weight[i])] for i in range(r)]
        for k in range(r):
            p = next(i for i in range(k, r) if aug[i][k] != 0)
            aug[k], aug[p] = aug[p], aug[k]
            for i in range(r):
                if i != k and aug[i][k] != 0:
                    f = aug[i][k] / aug[k][k]
                    aug[i] = [x - f * y for x, y in zip(aug[i], aug[k])]
        return tuple(aug[i][r] / aug[i][i] for i in range(r))

    def is_root(self, weight: Weight) -> bool:
        return weight in self._root_coords

    def is_positive_root(self, weight: Weight) -> bool:
        c = self._root_coords.get(weight)
        return c is not None and all(x >= 0 for x in c)


def _positive_roots_in_root_coords(a: Matrix) -> list[tuple[int, ...]]:
    r = len(a)
    simple = [tuple(int(k == j) for k in range(r)) for j in range(r)]
    seen = set(simple)
    frontier = list(simple)
    while frontier:
        nxt = []
        for c in frontier:
            for i in range(r):
                # <gamma, alpha_i^vee> = sum_j c_j <alpha_j, alpha_i^vee>
                m = sum(a[i][j] * c[j] for j in range(r))
                if m == 0:
                    continue
                new = tuple(c[k] - (m if k == i else 0) for k in range(r))
                if all(x >= 0 for x in new) and any(new) and new not in seen:
                    seen.add(new)
                    nxt.append(new)
        frontier = nxt
    return sorted(seen)


def build_root_system(spec: CartanSpec | str) -> RootSystem:
    """Validate Cartan data and enumerate the positive roots by reflection closure.

    >>> len(build_root_system("G2").positive_roots)
    6
    """
    if isinstance(spec, str):
        spec = CartanSpec.parse(spec)
    if spec.matrix is not None:
        a = tuple(tuple(int(x) for x in row) for row in spec.matrix)
    elif spec.type_letter is not None and spec.rank is not None:
        a = cartan_matrix(spec.type_letter, spec.rank)
    else:
        raise InvalidCartan("CartanSpec needs either a type and rank or a matrix")
    validate_cartan(a)
    r = len(a)

    def to_weight(c):
        return tuple(sum(a[i][j] * c[j] for j in range(r)) for i in range(r))

    pos_rc = _positive_roots_in_root_coords(a)
    root_coords: dict[Weight, tuple[int, ...]] = {}
    for c in pos_rc:
        root_coords[to_weight(c)] = c
        root_coords[to_weight(tuple(-x for x in c))] = tuple(-x for x in c)
    simple = tuple(tuple(a[i][j] for i in range(r)) for j in range(r))
    return RootSystem(
        name=spec.name,
        cartan=a,
        simple_roots=simple,
        positive_roots=tuple(to_weight(c) for c in pos_rc),
        _root_coords=root_coords,
    )


def pairing(weight: Weight, i: int) -> int:
    if not 1 <= i <= len(weight):
        raise IndexOutOfRange(f"simple index {i} outside 1..{len(weight)}")
    return weight[i - 1]


def is_dominant(weight: Weight) -> bool:
    return all(x >= 0 for x in weight)
