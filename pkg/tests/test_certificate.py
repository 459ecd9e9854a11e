import copy
import json

import pytest

from cyclocert.certificate import (
    document_verifies,
    documents_from_report,
    emit,
    emit_many,
    parse,
    parse_many,
    recheck_document,
)
from cyclocert.verify import verify_all


@pytest.fixture(scope="module")
def docs12():
    return documents_from_report(verify_all(12, prime_bound=13))


def test_round_trip_is_identity(docs12):
    for doc in docs12:
        assert parse(emit(doc)) == doc
    assert parse_many(emit_many(docs12)) == docs12


def test_integers_are_strings_and_keys_sorted(docs12):
    obj = json.loads(emit(docs12[0]))
    assert obj["n"] == "12" and obj["p"] == "2"
    assert obj["phi_n"] == ["1", "0", "-1", "0", "1"]
    text = emit(docs12[0])
    assert text == json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def test_reloaded_documents_reverify(docs12):
    for doc in parse_many(emit_many(docs12)):
        assert doc.verdict
        assert document_verifies(doc)
        assert recheck_document(doc) == doc.checks


def test_unramified_document_contents(docs12):
    doc = next(d for d in docs12 if d.p == 13)
    assert doc.case == "unramified"
    assert len(doc.splitting) == 4
    assert all(s["e"] == 1 and s["f"] == 1 and s["ideal_norm"] == 13 for s in doc.splitting)


def test_tampered_ramified_document_fails(docs12):
    doc = copy.deepcopy(next(d for d in docs12 if d.p == 2))
    doc.witnesses["certificates"][0]["R"][0] += 1
    assert not document_verifies(doc)


def test_tampered_unramified_document_fails(docs12):
    doc = copy.deepcopy(next(d for d in docs12 if d.p == 5))
    doc.witnesses["invertibility"][0]["a"][0][0] += 1
    assert not document_verifies(doc)


def test_tampered_ideal_fails(docs12):
    doc = copy.deepcopy(next(d for d in docs12 if d.p == 13))
    doc.splitting[0]["ideal_hnf"][0][1] += 1
    assert not document_verifies(doc)


def test_malformed_hnf_is_rejected_not_crashed(docs12):
    doc = copy.deepcopy(next(d for d in docs12 if d.p == 3))
    doc.splitting[0]["ideal_hnf"][0][0] = 0
    assert not document_verifies(doc)
