import pytest

from skewkit.verification import (
    SUITES,
    SuiteContext,
    load_corpus,
    run_suite,
    sample_identity_triples,
)


def test_suite_registry():
    assert set(SUITES) == {"paper-examples", "random-identities", "hamel-goulden", "properties"}
    with pytest.raises(KeyError):
        run_suite("no-such-suite")


def test_corpus_sections():
    corpus = load_corpus()
    assert {
        "diagrams", "amalgamations", "compositions", "overlaps", "hypotheses",
        "hamel_goulden", "map_expansions", "equivalences", "staircase_class",
        "single_contact",
    } <= set(corpus)
    assert len(corpus["equivalences"]["configurations"]) == 6


def test_properties_suite():
    result = run_suite("properties", SuiteContext(max_cells=4, seed=3))
    assert result.passed, result.failures
    names = [c.name for c in result.checks]
    assert "sylvester" in names
    assert "omega-transpose" in names


def test_hamel_goulden_suite():
    result = run_suite("hamel-goulden", SuiteContext(max_cells=5))
    assert result.passed
    assert len(result.checks) == 3
    assert all(c.detail["diagrams"] == 1 + 2 + 4 + 9 + 20 for c in result.checks)


def test_sampled_triples_are_reproducible():
    first = sample_identity_triples(4, 11, 3, 5)
    second = sample_identity_triples(4, 11, 3, 5)
    assert first == second
    assert len(first) == 4
    assert all(pl.E == e for _, e, pl in first)


def test_random_identities_suite(settings_env):
    settings_env(max_d_cells=3, max_e_cells=5)
    result = run_suite("random-identities", SuiteContext(samples=4, seed=5, workers=1))
    assert len(result.checks) == 4
    assert result.passed, [c.witness for c in result.failures]


def test_suite_json_is_deterministic_without_timings():
    result = run_suite("hamel-goulden", SuiteContext(max_cells=3))
    payload = result.to_json()
    assert "duration_ms" not in payload
    assert all("duration_ms" not in c for c in payload["results"])
    assert "duration_ms" in result.to_json(timings=True)


@pytest.mark.slow
def test_paper_examples_suite():
    result = run_suite("paper-examples", SuiteContext(workers=1))
    assert result.passed, [(c.name, c.witness) for c in result.failures]


def test_adjointness_with_uncontained_inner_shape():
    # (2) / (1, 1) is not a skew shape, so ⟨s_{λ/μ}, s_ν⟩ = 0 = c^{(2)}_{(1,1),∅}
    result = run_suite("properties", SuiteContext(max_cells=2, seed=1))
    by_name = {c.name: c for c in result.checks}
    assert by_name["adjointness"].passed
    assert by_name["lr-symmetry"].passed


def test_passing_checks_carry_no_witness():
    from skewkit.verification.suites import _Recorder

    rec = _Recorder("demo")
    rec.check("ok", lambda: (True, "expansion differs"))
    rec.check("bad", lambda: (False, "expansion differs"))
    ok, bad = rec.result.checks
    assert ok.witness is None
    assert "witness" not in ok.to_json()
    assert bad.witness == "expansion differs"
    assert rec.result.to_json()["failures"] == ["bad"]


@pytest.mark.slow
def test_properties_suite_full_range():
    result = run_suite("properties", SuiteContext(max_cells=8, seed=1729))
    assert result.passed, [(c.name, c.witness) for c in result.failures]
