import pytest

from skewkit.composition import (
    compose,
    factorizations,
    irreducible_factorization,
    predicted_class_size,
)
from skewkit.composition.factorization import SINGLE_CELL, trivial_factorizations
from skewkit.diagrams import make_skew, straight
from skewkit.utils.errors import EnumerationCapError


def test_staircase_factorization(staircase, hook):
    result = factorizations(staircase, max_cells=8)
    assert not result.irreducible
    assert any(
        f.D == hook and f.E == hook and f.W == straight([1])
        for f in result.nontrivial
    )
    assert result.minimal
    key = result.minimal[0].minimality_key
    assert all(f.minimality_key >= key for f in result.nontrivial)


def test_staircase_chain_predicts_four(staircase):
    chain = irreducible_factorization(staircase, max_cells=8)
    assert chain.asymmetric_factors == 2
    assert chain.predicted_class_size == 4
    assert predicted_class_size(staircase, max_cells=8) == 4
    assert chain.to_json()["r"] == 2


def test_hook_is_irreducible(hook):
    result = factorizations(hook)
    assert result.irreducible
    assert result.minimal == []
    chain = irreducible_factorization(hook)
    assert chain.steps == []
    assert chain.factors == [hook]


def test_trivial_factorizations(hook):
    found = trivial_factorizations(hook)
    assert all(f.trivial for f in found)
    assert found[0].D == SINGLE_CELL and found[0].W.is_empty
    assert found[-1].D == hook and found[-1].E == SINGLE_CELL
    assert any(f.D == SINGLE_CELL and f.W == straight([1]) for f in found)
    for f in found:
        assert compose(f.D, f.E, f.placement) == hook


def test_single_cell_has_no_duplicate_trivial_factorization():
    found = trivial_factorizations(SINGLE_CELL)
    assert [f.D for f in found] == [SINGLE_CELL]


def test_factorization_cap(staircase):
    with pytest.raises(EnumerationCapError):
        factorizations(staircase, max_cells=7)


def test_symmetric_factor_does_not_count():
    square = straight([2, 2])
    chain = irreducible_factorization(square)
    assert chain.asymmetric_factors == sum(1 for e in chain.factors if e != e.rotate180())
    assert chain.predicted_class_size == 2 ** chain.asymmetric_factors
    assert make_skew([2, 2], [1]).rotate180() == straight([2, 1])
