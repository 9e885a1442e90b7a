import pytest
from hypothesis import given, settings, strategies as st

from skewkit.composition import (
    amalg_power,
    amalgamate,
    check_hypotheses,
    compose,
    compose_southeast,
    dot_candidates,
    empty_placement,
    enhanced_nw_decomposition,
    expected_sign,
    find_w_placements,
    jacobi_trudi_lengths,
    overlap_shapes,
    place_w,
    placement_from_cells,
    placement_from_marked,
    placement_from_spec,
    sign_of,
    verify_main_identity,
)
from skewkit.diagrams import EMPTY, enumerate_connected, make_skew, straight
from skewkit.utils.diagram_io import diagram_from_json, parse_marked_art
from skewkit.utils.errors import HypothesisError, PlacementError
from skewkit.verification import load_corpus

CORPUS = load_corpus()


def _shape(payload):
    return EMPTY if payload is None else diagram_from_json(payload)


def _placement(entry):
    if "W" in entry:
        e = _shape(entry["E"])
        return e, place_w(e, _shape(entry["W"]))
    e, marked = parse_marked_art(entry["E"]["art"])
    return e, placement_from_marked(e, marked)


def _ids(entries):
    return [entry["name"] for entry in entries]


@pytest.fixture
def staircase_placement(hook):
    return place_w(hook, straight([1]))


def test_staircase_placement(staircase_placement):
    pl = staircase_placement
    assert pl.ne == {(0, 1)}
    assert pl.sw == {(1, 0)}
    assert pl.O == {(0, 0)}
    assert pl.case == "d"


def test_rotation_turns_case_d_into_case_c(staircase_placement):
    rotated = staircase_placement.rotated()
    assert rotated.E == make_skew([2, 2], [1])
    assert rotated.case == "c"
    assert rotated.rotated() == staircase_placement


def test_placement_errors(hook):
    with pytest.raises(PlacementError):
        place_w(hook, straight([2]))
    with pytest.raises(PlacementError):
        place_w(hook, make_skew([2, 1], [1]))
    with pytest.raises(PlacementError):
        empty_placement(EMPTY)
    with pytest.raises(PlacementError):
        placement_from_cells(hook, [(1, 0)], [(0, 0)])


def test_placement_from_spec(hook):
    assert placement_from_spec(hook, None).is_empty
    assert placement_from_spec(hook, {"empty": True}).is_empty
    assert placement_from_spec(hook, {"lambda": [1]}).case == "d"
    assert placement_from_spec(hook, {"sw": [[1, 0]], "ne": [[0, 1]]}).case == "d"


def test_find_w_placements_starts_with_empty(hook):
    placements = find_w_placements(hook)
    assert placements[0].is_empty
    assert [len(pl.W) for pl in placements] == sorted(len(pl.W) for pl in placements)
    assert any(pl.W == straight([1]) for pl in placements)


def test_empty_placement_shift(hook):
    pl = empty_placement(hook)
    assert pl.shift == (-1, 2)
    assert pl.case == "a"


@pytest.mark.parametrize("entry", CORPUS["amalgamations"], ids=_ids(CORPUS["amalgamations"]))
def test_amalgamations(entry):
    e = _shape(entry["E"])
    assert amalgamate(e, _shape(entry["W"]), e) == _shape(entry["expected"])


def test_amalgam_power(staircase_placement, hook):
    pl = staircase_placement
    assert amalg_power(hook, pl, 0) == straight([1])
    assert amalg_power(hook, pl, 1) == hook
    assert len(amalg_power(hook, pl, 3)) == 7
    with pytest.raises(ValueError):
        amalg_power(hook, pl, -1)


@pytest.mark.parametrize("entry", CORPUS["compositions"], ids=_ids(CORPUS["compositions"]))
def test_corpus_compositions(entry):
    d = _shape(entry["D"])
    e, pl = _placement(entry)
    assert pl.case == entry["case"]
    assert compose(d, e, pl) == _shape(entry["expected"])
    if pl.case == "c":
        assert compose_southeast(d, pl) == compose(d, e, pl)


def test_composition_with_empty_d_is_w(staircase_placement, hook):
    assert compose(EMPTY, hook, staircase_placement) == straight([1])
    assert compose(straight([1]), hook, staircase_placement) == hook


def test_southeast_construction_requires_case_c(staircase_placement):
    with pytest.raises(PlacementError):
        compose_southeast(straight([2, 1]), staircase_placement)


def test_dot_candidates(staircase_placement):
    candidates = dot_candidates(staircase_placement)
    assert set(candidates) == {"A", "B", "C", "D"}
    cells, valid = candidates["D"]
    assert valid


@pytest.mark.parametrize("entry", CORPUS["overlaps"], ids=_ids(CORPUS["overlaps"]))
def test_overlap_shapes(entry):
    _, pl = _placement(entry)
    shapes = overlap_shapes(pl)
    assert shapes.barW == _shape(entry["barW"])
    if "barO" in entry:
        assert shapes.barO == _shape(entry["barO"])


def test_overlap_needs_three_copies(staircase_placement):
    with pytest.raises(ValueError):
        overlap_shapes(staircase_placement, copies=2)


@pytest.mark.parametrize("entry", CORPUS["hypotheses"], ids=_ids(CORPUS["hypotheses"]))
def test_corpus_hypotheses(entry):
    _, pl = _placement(entry)
    report = check_hypotheses(pl)
    assert report.overall_I_to_IV == entry["holds_I_to_IV"]
    assert set(entry["fails"]) <= set(report.failed())
    assert set(report.witnesses) >= {"I", "II", "III", "IV", "V"}


def test_compose_rejects_failing_hypotheses():
    entry = CORPUS["hypotheses"][0]
    e, pl = _placement(entry)
    with pytest.raises(HypothesisError):
        compose(straight([2]), e, pl)
    with pytest.raises(HypothesisError):
        verify_main_identity(straight([2]), e, pl)


def test_jacobi_trudi_lengths():
    entry = CORPUS["map_expansions"][0]
    assert jacobi_trudi_lengths(_shape(entry["D"])) == entry["jacobi_trudi_lengths"]


def test_signs(hook):
    assert sign_of(EMPTY) == 1
    assert expected_sign(hook, "a") == 1
    assert expected_sign(hook, "b") == 1
    assert expected_sign(hook, "c") == sign_of(hook)
    assert expected_sign(hook, "d") == sign_of(hook.rotate180())


@pytest.mark.parametrize("basis", ["h", "schur"])
def test_main_identity_on_staircase(staircase_placement, hook, basis):
    result = verify_main_identity(hook, hook, staircase_placement, basis=basis)
    assert result.composed == make_skew([4, 3, 2, 1], [2])
    assert result.holds
    assert result.sign_consistent
    assert result.to_json()["basis"] == basis


@pytest.mark.slow
@pytest.mark.parametrize("entry", CORPUS["compositions"], ids=_ids(CORPUS["compositions"]))
def test_main_identity_on_corpus(entry):
    d = _shape(entry["D"])
    e, pl = _placement(entry)
    result = verify_main_identity(d, e, pl, basis="h")
    assert result.holds
    assert result.sign == result.expected_sign


def _admissible_triples(max_d, max_e):
    ds = [d for n in range(1, max_d + 1) for d in enumerate_connected(n)]
    triples = []
    for n in range(2, max_e + 1):
        for e in enumerate_connected(n):
            for pl in find_w_placements(e):
                if check_hypotheses(pl).overall_I_to_IV:
                    triples.extend((d, e, pl) for d in ds)
    return triples


TRIPLES = _admissible_triples(3, 5)
CASE_C = [t for t in TRIPLES if t[2].case == "c"]


@given(st.sampled_from(TRIPLES))
@settings(max_examples=80, deadline=None)
def test_composition_commutes_with_rotation(triple):
    d, e, pl = triple
    rotated = pl.rotated()
    assert compose(d, e, pl, check=False).rotate180() == \
        compose(d.rotate180(), rotated.E, rotated, check=False)


@given(st.sampled_from(TRIPLES))
@settings(max_examples=80, deadline=None)
def test_composition_commutes_with_transpose(triple):
    d, e, pl = triple
    flipped = pl.transposed()
    assert compose(d, e, pl, check=False).transpose() == \
        compose(d.transpose(), flipped.E, flipped, check=False)


@given(st.sampled_from(CASE_C))
@settings(max_examples=60, deadline=None)
def test_southeast_construction_agrees_in_case_c(triple):
    d, e, pl = triple
    assert compose_southeast(d, pl) == compose(d, e, pl, check=False)


@pytest.mark.parametrize("d", [d for n in range(1, 8) for d in enumerate_connected(n)],
                         ids=lambda d: d.describe())
def test_enhanced_decomposition_matches_rows(d):
    ribbons = enhanced_nw_decomposition(d)
    lam, mu = d.lam, d.mu
    assert len(ribbons) == d.rows
    assert [r.q for r in ribbons] == [lam[i] - i - 1 for i in range(d.rows)]
    assert sorted(r.p for r in ribbons) == sorted(mu.part(i) - i for i in range(d.rows))
    assert sum(len(r.cells) for r in ribbons) == len(d)
