import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from skewkit.diagrams import make_skew, straight
from skewkit.ribbons import (
    DecompositionKind,
    IntervalKind,
    check_hamel_goulden,
    decompose,
    hash_op,
    is_outside,
    jacobi_trudi_decomposition,
    northwest_decomposition,
    southeast_decomposition,
    strip_interval,
    sylvester_check,
)
from skewkit.schur import schur

from conftest import diagrams_up_to

SMALL = diagrams_up_to(6)


def test_northwest_decomposition_example():
    d = make_skew([3, 3, 3, 1], [1])
    dec = northwest_decomposition(d)
    assert dec.intervals == [(-3, 2), (-1, 1)]
    hashed = hash_op(dec, 0, 1)
    assert (hashed.p, hashed.q) == (-1, 2)
    assert hashed.kind is IntervalKind.RIBBON
    assert is_outside(dec)


def test_decompositions_cover_the_diagram():
    d = make_skew([3, 3, 3, 1], [1])
    for kind in DecompositionKind:
        dec = decompose(d, kind)
        assert frozenset().union(*dec.ribbons) == d.cells
        assert sum(len(r) for r in dec.ribbons) == len(d)
        assert len(dec.strip) == d.content_span + 1


def test_jacobi_trudi_decomposition_is_by_rows():
    dec = jacobi_trudi_decomposition(straight([3, 2]))
    assert [len(r) for r in dec.ribbons] == [3, 2]
    assert dec.kind is DecompositionKind.JACOBI_TRUDI


def test_kind_aliases():
    assert DecompositionKind.parse("northwest") is DecompositionKind.NORTHWEST
    assert DecompositionKind.parse("SE") is DecompositionKind.SOUTHEAST
    assert DecompositionKind.parse("jacobi-trudi") is DecompositionKind.JACOBI_TRUDI
    with pytest.raises(ValueError):
        DecompositionKind.parse("diagonal")


def test_strip_interval_kinds():
    dec = southeast_decomposition(straight([2, 2]))
    assert strip_interval(dec, 1, 0).kind is IntervalKind.EMPTY
    assert strip_interval(dec, 3, 0).kind is IntervalKind.UNDEFINED
    assert strip_interval(dec, -1, 1).kind is IntervalKind.RIBBON
    assert strip_interval(dec, -5, 1).kind is IntervalKind.UNDEFINED


def test_hamel_goulden_report():
    report = check_hamel_goulden(straight([2, 2]), "se")
    assert report.holds
    assert report.determinant == schur([2, 2])
    payload = report.to_json(show_matrix=True)
    assert payload["kind"] == "se"
    assert len(payload["matrix"]) == len(report.decomposition)


@pytest.mark.parametrize("kind", ["nw", "se", "jt"])
@given(d=st.sampled_from(SMALL))
@settings(max_examples=40, deadline=None)
def test_hamel_goulden_holds(kind, d):
    assert check_hamel_goulden(d, kind).holds


@given(st.sampled_from(SMALL))
@settings(max_examples=40, deadline=None)
def test_border_decompositions_are_outside(d):
    assert is_outside(northwest_decomposition(d))
    assert is_outside(southeast_decomposition(d))


def test_sylvester_on_integer_matrices():
    rng = np.random.default_rng(7)
    for _ in range(10):
        m = rng.integers(-5, 6, size=(5, 5)).tolist()
        assert sylvester_check(m, [0, 2])
        assert sylvester_check(m, [])


def test_sylvester_on_schur_entries():
    s1, s2, s11 = schur([1]), schur([2]), schur([1, 1])
    matrix = [[s1, s2, s11], [s11, s1, s2], [s2, s11, s1]]
    assert sylvester_check(matrix, [1])


def test_sylvester_rejects_bad_subsets():
    m = [[1, 2], [3, 4]]
    with pytest.raises(ValueError):
        sylvester_check(m, [0, 1])
    with pytest.raises(ValueError):
        sylvester_check(m, [5])


@given(st.sampled_from(SMALL))
@settings(max_examples=60, deadline=None)
def test_full_cutting_strip_is_the_border_ribbon(d):
    nw = northwest_decomposition(d)
    se = southeast_decomposition(d)
    lo, hi = d.min_content, d.max_content
    assert strip_interval(nw, lo, hi).ribbon == d.nw_ribbon()
    assert strip_interval(se, lo, hi).ribbon == d.se_ribbon()
    assert nw.strip_ribbon() == d.nw_ribbon()
