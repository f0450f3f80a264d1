"""
The group algebra Z[weight lattice] and the operators acting on it.

Elements are immutable, finitely supported maps ``weight -> int`` with zero
coefficients never stored. Iteration and serialisation order is lexicographic
on the weight coordinates.

The two operators ``demazure_t0`` and ``demazure_t1`` split the classical
Demazure operator, ``D_i = T0_i + T1_i``.
"""

from __future__ import annotations

from collections.abc import Iterator, Mapping
from typing import Union

from .errors import DimensionMismatch
from .root_system import RootSystem, Weight
from .weyl import WeylElem, simple_reflection


class GroupAlgebraElem:
    __slots__ = ("_terms", "rank", "_hash")

    def __init__(self, terms: Mapping[Weight, int] | None = None, rank: int | None = None):
        clean = {}
        for wt, c in (terms or {}).items():
            wt = tuple(wt)
            if rank is None:
                rank = len(wt)
            elif len(wt) != rank:
                raise DimensionMismatch(f"exponent {wt} does not have rank {rank}")
            if c:
                clean[wt] = clean.get(wt, 0) + c
        self._terms = {k: v for k, v in clean.items() if v}
        self.rank = rank
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict[Weight, int], rank: int | None) -> GroupAlgebraElem:
        # trusted constructor: terms already normalised
        obj = cls.__new__(cls)
        obj._terms = terms
        obj.rank = rank
        obj._hash = None
        return obj

    @classmethod
    def monomial(cls, weight: Weight, coeff: int = 1) -> GroupAlgebraElem:
        weight = tuple(weight)
        return cls._raw({weight: coeff} if coeff else {}, len(weight))

    @classmethod
    def zero(cls, rank: int | None = None) -> GroupAlgebraElem:
        return cls._raw({}, rank)

    @classmethod
    def one(cls, rank: int) -> GroupAlgebraElem:
        return cls.monomial((0,) * rank)

    def _check_rank(self, other: GroupAlgebraElem) -> int | None:
        if self.rank is None:
            return other.rank
        if other.rank is not None and other.rank != self.rank:
            raise DimensionMismatch(f"rank {self.rank} element combined with rank {other.rank} element")
        return self.rank

    def _coerce(self, other) -> GroupAlgebraElem | None:
        if isinstance(other, GroupAlgebraElem):
            return other
        if isinstance(other, int):
            if other == 0:
                return GroupAlgebraElem.zero(self.rank)
            if self.rank is None:
                raise DimensionMismatch("cannot embed an integer into a rank-less zero element")
            return GroupAlgebraElem.monomial((0,) * self.rank, other)
        return None

    # ring structure

    def __add__(self, other) -> GroupAlgebraElem:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        rank = self._check_rank(other)
        out = dict(self._terms)
        for wt, c in other._terms.items():
            s = out.get(wt, 0) + c
            if s:
                out[wt] = s
            else:
                del out[wt]
        return GroupAlgebraElem._raw(out, rank)

    __radd__ = __add__

    def __neg__(self) -> GroupAlgebraElem:
        return GroupAlgebraElem._raw({wt: -c for wt, c in self._terms.items()}, self.rank)

    def __sub__(self, other) -> GroupAlgebraElem:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> GroupAlgebraElem:
        return (-self) + other

    def __mul__(self, other) -> GroupAlgebraElem:
        if isinstance(other, int):
            if other == 0:
                return GroupAlgebraElem.zero(self.rank)
            return GroupAlgebraElem._raw({wt: c * other for wt, c in self._terms.items()}, self.rank)
        if not isinstance(other, GroupAlgebraElem):
            return NotImplemented
        rank = self._check_rank(other)
        out: dict[Weight, int] = {}
        for w1, c1 in self._terms.items():
            for w2, c2 in other._terms.items():
                wt = tuple(a + b for a, b in zip(w1, w2))
                out[wt] = out.get(wt, 0) + c1 * c2
        return GroupAlgebraElem._raw({k: v for k, v in out.items() if v}, rank)

    __rmul__ = __mul__

    # inspection

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __iter__(self) -> Iterator[tuple[Weight, int]]:
        return iter(self.terms())

    def terms(self) -> list[tuple[Weight, int]]:
        return sorted(self._terms.items())

    def coefficient(self, weight: Weight) -> int:
        return self._terms.get(tuple(weight), 0)

    def support(self) -> list[Weight]:
        return sorted(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = self._coerce(other)
        if not isinstance(other, GroupAlgebraElem):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __repr__(self) -> str:
        if not self._terms:
            return "0"
        return " + ".join(f"{c}*e^{wt}" for wt, c in self.terms())

    def to_json(self) -> list[dict]:
        return [{"exponent": list(wt), "coeff": c} for wt, c in self.terms()]

    @classmethod
    def from_json(cls, data: list[dict], rank: int | None = None) -> GroupAlgebraElem:
        return cls({tuple(t["exponent"]): t["coeff"] for t in data}, rank)

    def map_weights(self, fn) -> GroupAlgebraElem:
        out: dict[Weight, int] = {}
        for wt, c in self._terms.items():
            nw = fn(wt)
            out[nw] = out.get(nw, 0) + c
        return GroupAlgebraElem._raw({k: v for k, v in out.items() if v}, self.rank)


Scalar = Union[int, GroupAlgebraElem]


def monomial(weight: Weight) -> GroupAlgebraElem:
    return GroupAlgebraElem.monomial(weight)


def weyl_act(w: WeylElem, f: GroupAlgebraElem) -> GroupAlgebraElem:
    """Relabel every exponent by the action of ``w``; a ring automorphism."""
    if f.rank is not None and f.rank != w.rs.rank:
        raise DimensionMismatch(f"rank {f.rank} element acted on by a rank {w.rs.rank} Weyl element")
    if w.is_identity:
        return f
    return f.map_weights(w.apply)


def demazure_t1(rs: RootSystem, i: int, f: GroupAlgebraElem) -> GroupAlgebraElem:
    """``e^lambda -> e^{s_i lambda}``."""
    return weyl_act(simple_reflection(rs, i), f)


def demazure_t0(rs: RootSystem, i: int, f: GroupAlgebraElem) -> GroupAlgebraElem:
    """
    Z-linear extension of, with ``m = <lambda, alpha_i^vee>``::

        m = 0:  0
        m > 0:  e^lambda + e^{lambda - alpha_i} + ... + e^{lambda - (m-1) alpha_i}
        m < 0:  -(e^{lambda + alpha_i} + ... + e^{lambda + |m| alpha_i})
    """
    rs.check_index(i)
    if f.rank is not None and f.rank != rs.rank:
        raise DimensionMismatch(f"rank {f.rank} element, root system rank {rs.rank}")
    alpha = rs.simple_roots[i - 1]
    out: dict[Weight, int] = {}
    for wt, c in f._terms.items():
        m = wt[i - 1]
        if m > 0:
            steps, sign = range(0, -m, -1), 1
        elif m < 0:
            steps, sign = range(1, -m + 1), -1
        else:
            continue
        for k in steps:
            nw = tuple(x + k * a for x, a in zip(wt, alpha))
            out[nw] = out.get(nw, 0) + sign * c
    return GroupAlgebraElem._raw({k: v for k, v in out.items() if v}, rs.rank)


def demazure_op(rs: RootSystem, i: int, bit: int, f: GroupAlgebraElem) -> GroupAlgebraElem:
    return demazure_t1(rs, i, f) if bit else demazure_t0(rs, i, f)


def demazure_classical(rs: RootSystem, i: int, f: GroupAlgebraElem) -> GroupAlgebraElem:
    """Classical isobaric Demazure operator ``(e^lambda - e^{s_i lambda - alpha_i}) / (1 - e^{-alpha_i})``."""
    return demazure_t0(rs, i, f) + demazure_t1(rs, i, f)


def augment_ev(f: GroupAlgebraElem) -> int:
    """Augmentation: every character goes to 1."""
    return sum(c for _, c in f._terms.items())
