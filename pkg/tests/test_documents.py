import pytest

from evansk import (
    DocumentError,
    GraphDocument,
    document_from_dict,
    document_to_dict,
    dumps_document,
    dumps_documents,
    loads_document,
    loads_documents,
    monoid_spec,
)
from evansk.corpus import exhaustive_monoid_documents


def test_round_trip_dict():
    doc = GraphDocument(spec=monoid_spec([3, 5]), name="demo")
    assert document_from_dict(document_to_dict(doc)) == doc


def test_round_trip_json():
    doc = GraphDocument(spec=monoid_spec([3, 5, 7]))
    assert loads_document(dumps_document(doc)) == doc


def test_round_trip_document_list():
    docs = exhaustive_monoid_documents(2, range(2, 4))
    assert loads_documents(dumps_documents(docs)) == docs


def test_name_is_optional():
    doc = loads_document('{"k": 1, "vertices": ["v"], "adjacency": [[[2]]]}')
    assert doc.name is None
    assert doc.spec == monoid_spec([2])


def test_json_syntax_error_has_position():
    with pytest.raises(DocumentError) as info:
        loads_document('{"k": 1,\n  "vertices": [}', source="bad.json")
    message = str(info.value)
    assert message.startswith("bad.json: line 2")
    assert "column" in message


def test_wrong_matrix_count_is_structural():
    text = '{"k": 2, "vertices": ["v"], "adjacency": [[[2]]]}'
    with pytest.raises(DocumentError) as info:
        loads_document(text)
    assert "expected 2 adjacency matrices" in str(info.value)


def test_non_square_matrix_rejected():
    text = '{"k": 1, "vertices": ["a", "b"], "adjacency": [[[1, 2]]]}'
    with pytest.raises(DocumentError) as info:
        loads_document(text)
    assert "adjacency[0]" in str(info.value)


def test_bad_entry_types_rejected():
    for adjacency in ('[[["2"]]]', "[[[2.5]]]", "[[[true]]]"):
        text = f'{{"k": 1, "vertices": ["v"], "adjacency": {adjacency}}}'
        with pytest.raises(DocumentError):
            loads_document(text)


def test_bad_top_level_fields():
    with pytest.raises(DocumentError):
        document_from_dict([1, 2])
    with pytest.raises(DocumentError):
        document_from_dict({"k": "2", "vertices": ["v"], "adjacency": []})
    with pytest.raises(DocumentError):
        document_from_dict({"k": 1, "vertices": "v", "adjacency": [[[1]]]})
    with pytest.raises(DocumentError):
        document_from_dict({"k": 1, "vertices": ["v"], "adjacency": {}})
    with pytest.raises(DocumentError):
        document_from_dict({"k": 1, "vertices": ["v"], "adjacency": [[[1]]], "name": 5})


def test_documents_array_wrapper_errors():
    with pytest.raises(DocumentError):
        loads_documents('{"k": 1}')
    with pytest.raises(DocumentError) as info:
        loads_documents('[{"k": 1}]')
    assert "[0]" in str(info.value)
