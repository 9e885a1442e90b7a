import pytest
from hypothesis import given, settings, strategies as st

from skewkit.diagrams import (
    EMPTY,
    Partition,
    SkewDiagram,
    corner_subdiagrams,
    enumerate_by_span,
    enumerate_connected,
    make_skew,
    partitions,
    straight,
)
from skewkit.utils.diagram_io import (
    diagram_from_json,
    load_json_argument,
    parse_art,
    parse_marked_art,
    render,
)
from skewkit.utils.errors import (
    ConnectivityError,
    EnumerationCapError,
    InvalidDiagramError,
)

from conftest import diagrams_up_to

SMALL = diagrams_up_to(6)


def test_partition_validation():
    assert Partition([3, 1, 0, 0]) == (3, 1)
    assert Partition([3, 1]).conjugate() == (2, 1, 1)
    with pytest.raises(InvalidDiagramError):
        Partition([1, 2])
    with pytest.raises(InvalidDiagramError):
        Partition([2, -1])


def test_partitions_of_four():
    assert [tuple(p) for p in partitions(4)] == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    assert list(partitions(0)) == [()]


def test_shape_parameters():
    d = make_skew([3, 2, 2, 1], [2, 1])
    assert len(d) == 5
    assert d.rows == 4
    assert d.lam == (3, 2, 2, 1)
    assert d.mu == (2, 1)
    assert not d.is_connected


def test_containment_is_required():
    with pytest.raises(InvalidDiagramError):
        make_skew([2], [3])


def test_canonical_form_removes_empty_rows_and_columns():
    scattered = SkewDiagram(frozenset({(0, 5), (3, 2)}))
    assert scattered == make_skew([2, 1], [1])
    assert not scattered.is_connected


def test_non_skew_cells_are_rejected():
    with pytest.raises(InvalidDiagramError):
        SkewDiagram(frozenset({(0, 0), (1, 1)}))
    with pytest.raises(InvalidDiagramError):
        SkewDiagram(frozenset({(0, 0), (0, 2), (1, 1)}))


def test_transpose_and_rotation():
    assert make_skew([4, 3, 2, 1], [2]).transpose() == make_skew([4, 3, 2, 1], [1, 1])
    assert straight([2, 1]).rotate180() == make_skew([2, 2], [1])


@given(st.sampled_from(SMALL))
@settings(max_examples=60)
def test_transforms_are_involutions(d):
    assert d.transpose().transpose() == d
    assert d.rotate180().rotate180() == d
    assert len(d.rotate180()) == len(d)
    assert sorted(d.rotate180().row_lengths) == sorted(d.row_lengths)


def test_ribbons_and_bodies():
    square = straight([2, 2])
    assert not square.is_ribbon
    assert make_skew([2, 2], [1]).is_ribbon
    assert square.nw_body() == straight([1])
    assert square.up_body_size() == 2
    assert len(square.nw_ribbon()) == 3
    assert square.se_ribbon() == make_skew([2, 2], [1])


def test_connectivity_required_for_border_ribbons():
    with pytest.raises(ConnectivityError):
        make_skew([2, 1], [1]).nw_ribbon()


def test_empty_diagram():
    assert EMPTY.is_empty
    assert not EMPTY.is_connected
    assert EMPTY.describe() == "∅"


def test_enumeration_counts():
    assert [len(enumerate_connected(n)) for n in range(1, 6)] == [1, 2, 4, 9, 20]


def test_enumeration_respects_cap():
    with pytest.raises(EnumerationCapError):
        enumerate_connected(0)
    with pytest.raises(EnumerationCapError):
        enumerate_connected(5, cap=4)


@given(st.sampled_from(SMALL))
@settings(max_examples=60)
def test_enumeration_yields_connected_canonical_diagrams(d):
    assert d.is_connected
    assert SkewDiagram(d.cells) == d
    assert d in enumerate_connected(len(d))


def test_enumerate_by_span():
    assert enumerate_by_span(0) == [straight([1])]
    assert set(enumerate_by_span(1)) == {straight([2]), straight([1, 1])}
    assert all(d.content_span == 3 for d in enumerate_by_span(3, max_cells=5))


def test_corner_subdiagrams_share_the_corner():
    d = make_skew([3, 3], [1])
    subsets = corner_subdiagrams(d.cells, d.ne_cell)
    assert frozenset({(0, 2)}) in subsets
    assert d.cells in subsets
    assert all((0, 2) in s and SkewDiagram(s).is_connected for s in subsets)


def test_parse_and_render_art():
    cells, marked = parse_art(".xw/wxw/wx")
    assert len(cells) == 7
    assert marked == {(0, 2), (1, 0), (1, 2), (2, 0)}
    assert render(make_skew([2, 2], [1])) == ".×\n××"
    assert render(straight([2, 1]), marked=[(0, 0)]) == "w×\n×"


def test_marked_art_uses_canonical_coordinates():
    d, marked = parse_marked_art("..../..xw/.xxw/wx/wx")
    assert d == make_skew([4, 4, 2, 2], [2, 1])
    assert marked == {(0, 3), (1, 3), (2, 0), (3, 0)}


def test_diagram_json_forms():
    expected = make_skew([2, 2], [1])
    assert diagram_from_json({"lambda": [2, 2], "mu": [1]}) == expected
    assert diagram_from_json({"cells": [[0, 1], [1, 0], [1, 1]]}) == expected
    assert diagram_from_json({"art": ".x/xx"}) == expected
    assert expected.to_json() == {"lambda": [2, 2], "mu": [1]}
    with pytest.raises(InvalidDiagramError):
        diagram_from_json([1, 2])
    with pytest.raises(InvalidDiagramError):
        diagram_from_json({"shape": [1]})


def test_json_argument_from_file(tmp_path):
    path = tmp_path / "d.json"
    path.write_text('{"lambda": [3]}', encoding="utf-8")
    assert load_json_argument(str(path)) == {"lambda": [3]}
    with pytest.raises(InvalidDiagramError):
        load_json_argument(str(tmp_path / "missing.json"))


def test_connectivity_examples():
    assert make_skew([3, 3, 2], [1]).is_connected
    assert make_skew([2, 2, 1], [2]).is_connected
    assert not make_skew([4, 1], [2]).is_connected


def test_self_transpose_shape():
    d = make_skew([3, 3, 2], [1])
    assert d.transpose() == d


@given(st.sampled_from(SMALL))
@settings(max_examples=60)
def test_up_body_size_counts_rows(d):
    assert d.up_body_size() == len(d.nw_body()) + d.rows - 1


@pytest.mark.parametrize("parts", ["ab", 5, None, [1.5, 1], [2, "1"]])
def test_partition_rejects_non_integer_parts(parts):
    with pytest.raises(InvalidDiagramError):
        Partition(parts)
