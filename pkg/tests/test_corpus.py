import pytest

from evansk import dumps_documents, validate
from evansk.corpus import (
    CorpusError,
    companion_matrix,
    evaluate_polynomial,
    exhaustive_monoid_documents,
    monoid_document,
    polynomial_family_document,
    random_polynomial_documents,
)
from evansk.intmat import IntMatrix


def test_monoid_document_naming():
    doc = monoid_document([3, 5])
    assert doc.name == "monoid-3-5"
    assert doc.spec.rank == 2
    assert validate(doc.spec).ok


def test_exhaustive_count():
    docs = exhaustive_monoid_documents(2, range(2, 5))
    assert len(docs) == 9
    assert len({d.name for d in docs}) == 9
    assert all(validate(d.spec).ok for d in docs)


def test_exhaustive_rejects_bad_parameters():
    with pytest.raises(CorpusError):
        exhaustive_monoid_documents(0, range(1, 3))
    with pytest.raises(CorpusError):
        exhaustive_monoid_documents(2, [0, 1])


def test_polynomial_family_example():
    doc = polynomial_family_document([[1, 1], [1, 0]], [[0, 1], [0, 0, 1]])
    m1, m2 = doc.spec.adjacency
    assert m1.to_lists() == [[1, 1], [1, 0]]
    assert m2.to_lists() == [[2, 1], [1, 1]]
    assert validate(doc.spec).ok


def test_polynomial_evaluation():
    a = IntMatrix.from_rows([[1, 1], [1, 0]])
    assert evaluate_polynomial([2], a).to_lists() == [[2, 0], [0, 2]]
    assert evaluate_polynomial([1, 0, 1], a).to_lists() == [[3, 1], [1, 2]]


def test_companion_matrix_shape_and_charpoly():
    c = companion_matrix([1, 1])
    assert c.to_lists() == [[1, 1], [1, 0]]
    # det(I - C) = 1 - (sum of coefficients)
    for coeffs in ([2], [1, 1], [0, 2], [1, 0, 1]):
        c = companion_matrix(coeffs)
        n = c.rows
        assert (IntMatrix.identity(n) - c).det() == 1 - sum(coeffs)


def test_zero_polynomial_rejected_with_witness():
    with pytest.raises(CorpusError) as info:
        polynomial_family_document([[1, 1], [1, 0]], [[0, 1], [0]])
    assert "polynomial 2" in str(info.value)
    assert "zero row" in str(info.value)


def test_zero_row_base_rejected():
    with pytest.raises(CorpusError) as info:
        polynomial_family_document([[0, 0], [1, 1]], [[0, 1]])
    assert "zero row 0" in str(info.value)


def test_negative_inputs_rejected():
    with pytest.raises(CorpusError):
        polynomial_family_document([[1, -1], [1, 1]], [[0, 1]])
    with pytest.raises(CorpusError):
        polynomial_family_document([[1, 1], [1, 1]], [[-1, 1]])


def test_random_documents_all_valid():
    docs = random_polynomial_documents(25, seed=11)
    assert len(docs) == 25
    for doc in docs:
        assert validate(doc.spec).ok
        assert doc.spec.rank <= 4 and doc.spec.num_vertices <= 4


def test_random_documents_deterministic():
    first = random_polynomial_documents(10, seed=7)
    second = random_polynomial_documents(10, seed=7)
    assert dumps_documents(first) == dumps_documents(second)
    other = random_polynomial_documents(10, seed=8)
    assert dumps_documents(first) != dumps_documents(other)


def test_unimodular_base_has_unimodular_coadjacency():
    from evansk import coadjacency

    docs = random_polynomial_documents(15, seed=13, unimodular_base=True)
    for doc in docs:
        assert coadjacency(doc.spec, 1).det() in (1, -1)
        assert validate(doc.spec).ok
