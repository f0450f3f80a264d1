"""Text, LaTeX and JSON renderers for expansions; all output is deterministic."""

from __future__ import annotations

from .bott_samelson import BSExpansion
from .chevalley import ChevalleyExpansion, OrdinaryExpansion
from .group_algebra import GroupAlgebraElem
from .root_system import RootSystem, Weight
from .weyl import WeylElem

FUNDAMENTAL = "fundamental"
ROOT_COORDS = "root-coords"

_COEFF_LIST = {
    "type": "array",
    "items": {
        "type": "object",
        "properties": {
            "exponent": {"type": "array", "items": {"type": "integer"}},
            "coeff": {"type": "integer"},
        },
        "required": ["exponent", "coeff"],
        "additionalProperties": False,
    },
}

_TERM = {
    "type": "object",
    "properties": {
        "v_word": {"type": "array", "items": {"type": "integer", "minimum": 1}},
        "v_length": {"type": "integer", "minimum": 0},
        "coefficient": {"oneOf": [_COEFF_LIST, {"type": "integer"}]},
    },
    "required": ["v_word", "v_length", "coefficient"],
    "additionalProperties": False,
}

EXPAND_SCHEMA = {
    "type": "object",
    "properties": {
        "group": {"type": "string"},
        "weight": {"type": "array", "items": {"type": "integer"}},
        "word": {"type": "array", "items": {"type": "integer", "minimum": 1}},
        "mode": {"enum": ["equivariant", "ordinary"]},
        "auto_reduced": {"type": "boolean"},
        "terms": {"type": "array", "items": _TERM},
        "verified": {"type": ["boolean", "null"]},
    },
    "required": ["group", "weight", "word", "terms", "verified"],
}

BOTT_SAMELSON_SCHEMA = {
    "type": "object",
    "properties": {
        "group": {"type": "string"},
        "weight": {"type": "array", "items": {"type": "integer"}},
        "word": {"type": "array", "items": {"type": "integer", "minimum": 1}},
        "cells": {
            "type": "array",
            "items": {
                "type": "object",
                "properties": {
                    "epsilon": {"type": "array", "items": {"enum": [0, 1]}},
                    "length": {"type": "integer", "minimum": 0},
                    "coefficient": _COEFF_LIST,
                },
                "required": ["epsilon", "length", "coefficient"],
            },
        },
        "verified": {"type": ["boolean", "null"]},
    },
    "required": ["group", "weight", "word", "cells", "verified"],
}

TABLE_SCHEMA = {
    "type": "object",
    "properties": {
        "group": {"type": "string"},
        "weight": {"type": "array", "items": {"type": "integer"}},
        "mode": {"enum": ["equivariant", "ordinary"]},
        "rows": {
            "type": "array",
            "items": {
                "type": "object",
                "properties": {
                    "w_word": {"type": "array", "items": {"type": "integer"}},
                    "w_length": {"type": "integer"},
                    "terms": {"type": "array", "items": _TERM},
                },
                "required": ["w_word", "w_length", "terms"],
            },
        },
    },
    "required": ["group", "weight", "rows"],
}

VERIFY_SCHEMA = {
    "type": "object",
    "properties": {
        "group": {"type": "string"},
        "weights": {"type": "array", "items": {"type": "array", "items": {"type": "integer"}}},
        "checks": {
            "type": "array",
            "items": {
                "type": "object",
                "properties": {
                    "name": {"type": "string"},
                    "checked": {"type": "integer"},
                    "passed": {"type": "boolean"},
                    "failures": {"type": "array", "items": {"type": "string"}},
                    "finding_only": {"type": "boolean"},
                },
                "required": ["name", "checked", "passed", "failures"],
            },
        },
        "passed": {"type": "boolean"},
    },
    "required": ["group", "weights", "checks", "passed"],
}


# symbolic weights

def _linear_combination(coeffs, symbols: list[str]) -> str:
    parts = []
    for c, sym in zip(coeffs, symbols):
        if c == 0:
            continue
        mag = abs(c)
        body = sym if mag == 1 else f"{mag}{sym}"
        parts.append(("-" if c < 0 else "+") + body)
    if not parts:
        return "0"
    s = "".join(parts)
    return s[1:] if s.startswith("+") else s


def format_weight(rs: RootSystem, weight: Weight, display: str = FUNDAMENTAL, latex: bool = False) -> str:
    r = rs.rank
    if display == ROOT_COORDS:
        coeffs = rs.weight_to_root_coords(weight)
        coeffs = [int(c) if c.denominator == 1 else c for c in coeffs]
        symbols = [rf"\alpha_{{{i}}}" if latex else f"a{i}" for i in range(1, r + 1)]
    else:
        coeffs = list(weight)
        symbols = [rf"\rho_{{{i}}}" if latex else f"rho{i}" for i in range(1, r + 1)]
    return _linear_combination(coeffs, symbols)


def format_poly(rs: RootSystem, q: GroupAlgebraElem, display: str = FUNDAMENTAL, latex: bool = False) -> str:
    if not q:
        return "0"
    parts = []
    for wt, c in q.terms():
        if any(wt):
            exp = format_weight(rs, wt, display, latex)
            mono = f"e^{{{exp}}}" if latex else f"e^({exp})"
        else:
            mono = "1"
        mag = abs(c)
        body = mono if mag == 1 else (str(mag) if mono == "1" else f"{mag}{mono}")
        parts.append(("- " if c < 0 else "+ ") + body)
    s = " ".join(parts)
    return s[2:] if s.startswith("+ ") else "-" + s[2:]


def element_name(v: WeylElem, latex: bool = False) -> str:
    if v.is_identity:
        return "1"
    if latex:
        return "".join(f"s_{{{i}}}" for i in v.reduced_word)
    return "".join(f"s{i}" for i in v.reduced_word)


def _wrap(body: str) -> str:
    return f"({body})" if (" + " in body or " - " in body) else body


# JSON payloads

def term_json(v: WeylElem, coeff) -> dict:
    return {
        "v_word": list(v.reduced_word),
        "v_length": v.length,
        "coefficient": coeff if isinstance(coeff, int) else coeff.to_json(),
    }


def expansion_json(exp: ChevalleyExpansion | OrdinaryExpansion, verified: bool | None = None,
                   auto_reduced: bool = False) -> dict:
    ordinary = isinstance(exp, OrdinaryExpansion)
    return {
        "group": exp.rs.name,
        "weight": list(exp.weight),
        "word": list(exp.word),
        "mode": "ordinary" if ordinary else "equivariant",
        "auto_reduced": auto_reduced,
        "terms": [term_json(v, q) for v, q in exp.items()],
        "verified": verified,
    }


def bs_json(bs: BSExpansion, verified: bool | None = None) -> dict:
    return {
        "group": bs.ctx.rs.name,
        "weight": list(bs.weight),
        "word": list(bs.ctx.word),
        "cells": [
            {"epsilon": list(eps), "length": sum(eps), "coefficient": q.to_json()} for eps, q in bs.items()
        ],
        "verified": verified,
    }


def table_json(rs: RootSystem, weight: Weight, rows, ordinary: bool = False) -> dict:
    return {
        "group": rs.name,
        "weight": list(weight),
        "mode": "ordinary" if ordinary else "equivariant",
        "rows": [
            {"w_word": list(e.w.reduced_word), "w_length": e.w.length,
             "terms": [term_json(v, q) for v, q in e.items()]}
            for e in rows
        ],
    }


# text and LaTeX

def expansion_text(exp, display: str = FUNDAMENTAL, verified: bool | None = None) -> str:
    rs = exp.rs
    head = (f"[L_({format_weight(rs, exp.weight, display)})] * O[{element_name(exp.w)}]"
            f"   type {rs.name}, word {','.join(map(str, exp.word))}")
    lines = [head]
    for v, q in exp.items():
        val = str(q) if isinstance(q, int) else format_poly(rs, q, display)
        lines.append(f"  O[{element_name(v)}]: {val}")
    if not exp.terms:
        lines.append("  0")
    if verified is not None:
        lines.append(f"verified: {'yes' if verified else 'NO'}")
    return "\n".join(lines) + "\n"


def expansion_latex(exp, display: str = FUNDAMENTAL) -> str:
    rs = exp.rs
    lhs = (rf"[\mathcal{{L}}_{{{format_weight(rs, exp.weight, display, latex=True)}}}^X]^H"
           rf" \times \mathcal{{O}}_{{{element_name(exp.w, latex=True)}}}^H")
    parts = []
    for v, q in exp.items():
        basis = rf"\mathcal{{O}}_{{{element_name(v, latex=True)}}}"
        if isinstance(q, int):
            parts.append(("" if q == 1 else str(q)) + basis)
        else:
            parts.append(_wrap(format_poly(rs, q, display, latex=True)) + " " + basis + "^H")
    rhs = " + ".join(parts) if parts else "0"
    return f"$${lhs} = {rhs}$$\n"


def bs_text(bs: BSExpansion, display: str = FUNDAMENTAL, verified: bool | None = None) -> str:
    rs = bs.ctx.rs
    lines = [f"[L_({format_weight(rs, bs.weight, display)})] on Bott-Samelson {rs.name}"
             f" word {','.join(map(str, bs.ctx.word))}"]
    for eps, q in bs.items():
        lines.append(f"  O_({','.join(map(str, eps))}): {format_poly(rs, q, display)}")
    if verified is not None:
        lines.append(f"verified: {'yes' if verified else 'NO'}")
    return "\n".join(lines) + "\n"


def bs_latex(bs: BSExpansion, display: str = FUNDAMENTAL) -> str:
    rs = bs.ctx.rs
    n = bs.ctx.n
    lhs = rf"[\mathcal{{L}}_{{{format_weight(rs, bs.weight, display, latex=True)}}}^\Gamma]^H"
    parts = [
        _wrap(format_poly(rs, q, display, latex=True)) + rf" \mathcal{{O}}_{{{n},({','.join(map(str, eps))})}}^H"
        for eps, q in bs.items()
    ]
    return f"$${lhs} = {' + '.join(parts) if parts else '0'}$$\n"
