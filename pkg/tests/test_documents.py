import json

import pytest

from alexpoly import InvalidDocument, LaurentPoly, SeifertPair, T
from alexpoly.documents import (
    Triple,
    arf_from_doc,
    laurent_from_doc,
    laurent_to_doc,
    load_document,
    parse_document,
    seifert_pair_from_doc,
    seifert_pair_to_doc,
    triple_from_doc,
)

LAURENT_DOC = {"kind": "laurent", "terms": {"-2": -1, "0": 2, "2": -1}}
PAIR_DOC = {"kind": "seifert_pair", "p": 1, "n": 2, "S": [[4]], "N": [[4]]}


def test_laurent_roundtrip():
    f = laurent_from_doc(LAURENT_DOC)
    assert f == -LaurentPoly.t_power(-1) + 2 - T
    assert laurent_to_doc(f) == LAURENT_DOC


def test_laurent_zero():
    assert laurent_from_doc({"kind": "laurent", "terms": {}}) == LaurentPoly()
    assert laurent_to_doc(LaurentPoly()) == {"kind": "laurent", "terms": {}}


def test_laurent_bad_key():
    with pytest.raises(InvalidDocument):
        laurent_from_doc({"kind": "laurent", "terms": {"half": 1}})


def test_laurent_bad_coefficient():
    for coeff in (1.5, "1", True, None):
        with pytest.raises(InvalidDocument):
            laurent_from_doc({"kind": "laurent", "terms": {"0": coeff}})


def test_seifert_pair_roundtrip():
    pair = seifert_pair_from_doc(PAIR_DOC)
    assert pair == SeifertPair([[4]], [[4]], 1, 2)
    assert seifert_pair_to_doc(pair) == PAIR_DOC


def test_seifert_pair_errors():
    with pytest.raises(InvalidDocument):
        seifert_pair_from_doc({"kind": "seifert_pair", "p": 1, "n": 2, "S": [[1]]})
    with pytest.raises(InvalidDocument):
        seifert_pair_from_doc(
            {"kind": "seifert_pair", "p": 1, "n": 2, "S": [[1, 2]], "N": [[1]]}
        )
    with pytest.raises(InvalidDocument):
        seifert_pair_from_doc(
            {"kind": "seifert_pair", "p": 9, "n": 2, "S": [[1]], "N": [[1]]}
        )
    with pytest.raises(InvalidDocument):
        seifert_pair_from_doc(
            {"kind": "seifert_pair", "p": 1, "n": 2, "S": [[1.5]], "N": [[1]]}
        )


def test_triple_document():
    doc = {
        "kind": "triple",
        "move": "pass",
        "plus": {"kind": "laurent", "terms": {"2": 1}},
        "minus": {"kind": "laurent", "terms": {"0": -1, "2": 2}},
        "zero": {"kind": "laurent", "terms": {"0": -1}},
    }
    triple = triple_from_doc(doc)
    assert isinstance(triple, Triple)
    assert triple.move == "pass"
    assert triple.plus == T


def test_triple_bad_move():
    with pytest.raises(InvalidDocument):
        triple_from_doc(
            {
                "kind": "triple",
                "move": "slide",
                "plus": {"kind": "laurent", "terms": {}},
                "minus": {"kind": "laurent", "terms": {}},
                "zero": {"kind": "laurent", "terms": {}},
            }
        )


def test_arf_document():
    data = arf_from_doc({"kind": "arf", "a": [1, 1], "b": [1, 0]})
    assert data.nu == 2
    assert data.a == (1, 1)
    with pytest.raises(InvalidDocument):
        arf_from_doc({"kind": "arf", "a": [1], "b": [True]})


def test_parse_document_dispatch():
    assert parse_document(PAIR_DOC).kind == "seifert_pair"
    assert parse_document(LAURENT_DOC).kind == "laurent"
    with pytest.raises(InvalidDocument):
        parse_document({"kind": "mystery"})
    with pytest.raises(InvalidDocument):
        parse_document([1, 2, 3])


def test_laurent_doc_roundtrip_randomized():
    import random

    from conftest import random_poly

    rng = random.Random(20260815)
    for _ in range(300):
        f = random_poly(rng)
        assert laurent_from_doc(laurent_to_doc(f)) == f


def test_load_document(tmp_path):
    path = tmp_path / "pair.json"
    path.write_text(json.dumps(PAIR_DOC), encoding="utf-8")
    doc = load_document(str(path))
    assert doc.kind == "seifert_pair"
    bad = tmp_path / "bad.json"
    bad.write_text("{not json", encoding="utf-8")
    with pytest.raises(InvalidDocument):
        load_document(str(bad))
