"""JSON document format shared by the command-line tools.

Four document kinds exist:

    {"kind": "seifert_pair", "p": int, "n": int, "S": [[int]], "N": [[int]]}
    {"kind": "laurent", "terms": {"<half-exponent k>": int}}
    {"kind": "triple", "plus": <laurent>, "minus": <laurent>,
     "zero": <laurent>, "move": "pass" | "twist"}
    {"kind": "arf", "a": [int], "b": [int]}

Laurent term keys are half-exponents as decimal strings: the key k maps
a coefficient onto t^(k/2), so even keys are integer powers of t.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Any

from .errors import AlexpolyError, InvalidDocument
from .invariants import ArfData
from .laurent import LaurentPoly
from .seifert import SeifertPair


@dataclass(frozen=True)
class Triple:
    plus: LaurentPoly
    minus: LaurentPoly
    zero: LaurentPoly
    move: str


@dataclass(frozen=True)
class Document:
    kind: str
    value: SeifertPair | LaurentPoly | Triple | ArfData


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise InvalidDocument(message)


def laurent_from_doc(obj: Any) -> LaurentPoly:
    _require(isinstance(obj, dict), "laurent document must be an object")
    _require(obj.get("kind") == "laurent", "expected a laurent document")
    terms = obj.get("terms")
    _require(isinstance(terms, dict), "laurent document needs a terms object")
    out = {}
    for key, coeff in terms.items():
        try:
            halfexp = int(key)
        except (TypeError, ValueError):
            raise InvalidDocument(f"bad half-exponent key {key!r}") from None
        _require(isinstance(coeff, int) and not isinstance(coeff, bool),
                 f"coefficient for key {key!r} must be an integer")
        out[halfexp] = coeff
    return LaurentPoly(out)


def laurent_to_doc(f: LaurentPoly) -> dict:
    return {"kind": "laurent", "terms": {str(k): c for k, c in sorted(f.terms.items())}}


def seifert_pair_from_doc(obj: Any) -> SeifertPair:
    _require(isinstance(obj, dict), "seifert_pair document must be an object")
    _require(obj.get("kind") == "seifert_pair", "expected a seifert_pair document")
    for key in ("p", "n", "S", "N"):
        _require(key in obj, f"seifert_pair document needs {key!r}")
    _require(isinstance(obj["p"], int) and isinstance(obj["n"], int),
             "p and n must be integers")
    try:
        return SeifertPair(obj["S"], obj["N"], obj["p"], obj["n"])
    except (AlexpolyError, ValueError, TypeError) as exc:
        raise InvalidDocument(f"bad seifert_pair document: {exc}") from None


def seifert_pair_to_doc(pair: SeifertPair) -> dict:
    return {
        "kind": "seifert_pair",
        "p": pair.p,
        "n": pair.n,
        "S": [list(row) for row in pair.S],
        "N": [list(row) for row in pair.N],
    }


def triple_from_doc(obj: Any) -> Triple:
    _require(isinstance(obj, dict), "triple document must be an object")
    _require(obj.get("kind") == "triple", "expected a triple document")
    move = obj.get("move")
    _require(move in ("pass", "twist"), 'triple move must be "pass" or "twist"')
    polys = {}
    for key in ("plus", "minus", "zero"):
        _require(key in obj, f"triple document needs {key!r}")
        polys[key] = laurent_from_doc(obj[key])
    return Triple(polys["plus"], polys["minus"], polys["zero"], move)


def arf_from_doc(obj: Any) -> ArfData:
    _require(isinstance(obj, dict), "arf document must be an object")
    _require(obj.get("kind") == "arf", "expected an arf document")
    for key in ("a", "b"):
        _require(isinstance(obj.get(key), list), f"arf document needs a list {key!r}")
        _require(all(isinstance(v, int) and not isinstance(v, bool) for v in obj[key]),
                 f"arf list {key!r} must hold integers")
    try:
        return ArfData(len(obj["a"]), obj["a"], obj["b"])
    except (AlexpolyError, ValueError) as exc:
        raise InvalidDocument(f"bad arf document: {exc}") from None


_PARSERS = {
    "seifert_pair": seifert_pair_from_doc,
    "laurent": laurent_from_doc,
    "triple": triple_from_doc,
    "arf": arf_from_doc,
}


def parse_document(obj: Any) -> Document:
    _require(isinstance(obj, dict), "document must be a JSON object")
    kind = obj.get("kind")
    _require(kind in _PARSERS, f"unknown document kind {kind!r}")
    return Document(kind, _PARSERS[kind](obj))


def load_document(path: str) -> Document:
    try:
        with open(path, encoding="utf-8") as handle:
            obj = json.load(handle)
    except json.JSONDecodeError as exc:
        raise InvalidDocument(f"{path}: {exc}") from None
    return parse_document(obj)
