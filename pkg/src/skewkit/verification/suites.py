"""
验证套件
作者: XYZ-Algorithm-Team
用途: 已发表算例语料、随机主恒等式、Hamel-Goulden 穷举与性质校验四个套件，逐项记录结果、耗时与反例
"""

import logging
import time
from functools import lru_cache
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Callable, Dict, Iterable, List, Optional, Tuple

import numpy as np
import yaml
from joblib import Parallel, delayed

from ..composition.compose import amalg_power, amalgamate, compose, compose_southeast
from ..composition.factorization import predicted_class_size
from ..composition.identity import jacobi_trudi_lengths, schur_compose, verify_main_identity
from ..composition.overlap import check_hypotheses, overlap_shapes
from ..composition.placement import (
    WPlacement,
    empty_placement,
    find_w_placements,
    place_w,
    placement_from_marked,
)
from ..diagrams.enumeration import enumerate_connected
from ..diagrams.partition import partitions
from ..diagrams.skew import EMPTY, SkewDiagram, make_skew, translate
from ..equivalence.classify import classify, nontrivial_classes
from ..equivalence.theorems import verify_rotation_equivalence
from ..ribbons.decomposition import DecompositionKind, hash_op
from ..ribbons.hamel_goulden import check_hamel_goulden
from ..ribbons.sylvester import sylvester_check
from ..schur.algebra import multiply, omega, schur, skew_schur
from ..schur.hbasis import make_ring
from ..schur.lr import lr_coefficient
from ..schur.oracle import schur_monomial_coefficients, symmetric_coefficients
from ..utils.diagram_io import diagram_from_json, parse_marked_art
from ..utils.errors import SkewKitError
from ..utils.logging_utils import LogCategory, VerificationLog, get_logger

logger = logging.getLogger(__name__)

CORPUS_PATH = Path(__file__).parent.parent / "data" / "paper_examples.yaml"


@dataclass
class CheckResult:
    """单项检查"""
    name: str
    passed: bool
    duration_ms: float
    witness: Optional[str] = None
    detail: Dict[str, Any] = field(default_factory=dict)

    def to_json(self) -> Dict[str, Any]:
        payload = {"name": self.name, "passed": self.passed, "duration_ms": round(self.duration_ms, 3)}
        if self.witness:
            payload["witness"] = self.witness
        if self.detail:
            payload["detail"] = self.detail
        return payload


@dataclass
class SuiteResult:
    suite: str
    checks: List[CheckResult] = field(default_factory=list)
    duration_ms: float = 0.0

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> List[CheckResult]:
        return [c for c in self.checks if not c.passed]

    def to_json(self, timings: bool = False) -> Dict[str, Any]:
        checks = [c.to_json() for c in self.checks]
        if not timings:
            for c in checks:
                c.pop("duration_ms")
        payload = {
            "suite": self.suite,
            "passed": self.passed,
            "checks": len(self.checks),
            "failures": [c.name for c in self.failures],
            "results": checks,
        }
        if timings:
            payload["duration_ms"] = round(self.duration_ms, 3)
        return payload


@dataclass
class SuiteContext:
    """套件参数；None 表示取配置默认值"""
    max_cells: Optional[int] = None
    samples: Optional[int] = None
    seed: Optional[int] = None
    workers: Optional[int] = None


class _Recorder:
    """逐项执行检查；检查函数返回 (是否通过, 反例说明)"""

    def __init__(self, suite: str):
        self.result = SuiteResult(suite=suite)

    def check(self, name: str, fn: Callable[[], Tuple[bool, Optional[str]]],
              **detail) -> bool:
        start = time.perf_counter()
        try:
            passed, witness = fn()
        except SkewKitError as e:
            passed, witness = False, f"{type(e).__name__}: {e}"
        duration = (time.perf_counter() - start) * 1000
        if passed:
            witness = None
        self.result.checks.append(CheckResult(name, bool(passed), duration, witness, detail))
        if not passed:
            logger.error(f"检查未通过 {name}: {witness}")
        return bool(passed)


# ---------------------------------------------------------------------------
# 语料解析
# ---------------------------------------------------------------------------

def load_corpus(path: Optional[Path] = None) -> Dict[str, Any]:
    with open(path or CORPUS_PATH, 'r', encoding='utf-8') as f:
        return yaml.safe_load(f)


def _shape(payload: Any) -> SkewDiagram:
    return EMPTY if payload is None else diagram_from_json(payload)


def _placement(entry: Dict[str, Any]) -> Tuple[SkewDiagram, WPlacement]:
    """E 为带 w 标记的 ASCII 图时按标记取放置，否则按 W 形状放置"""
    spec = entry["E"]
    if "art" in spec and "W" not in entry:
        e, marked = parse_marked_art(spec["art"])
        return e, placement_from_marked(e, marked) if marked else empty_placement(e)
    e = _shape(spec)
    w = _shape(entry.get("W"))
    return e, place_w(e, w)


def _fits_inside(small: SkewDiagram, big: SkewDiagram) -> bool:
    """small 的某个平移落在 big 中"""
    if small.is_empty:
        return True
    anchor = min(small.cells)
    return any(translate(small.cells, (i - anchor[0], j - anchor[1])) <= big.cells
               for i, j in big.cells)


def _same_pair(found: Iterable[SkewDiagram], expected: Iterable[SkewDiagram]) -> Tuple[bool, Optional[str]]:
    found, expected = set(found), set(expected)
    if found == expected:
        return True, None
    return False, f"got {sorted(d.describe() for d in found)}"


# ---------------------------------------------------------------------------
# paper-examples
# ---------------------------------------------------------------------------

def _paper_diagrams(rec: _Recorder, corpus: Dict[str, Any]):
    for entry in corpus.get("diagrams", []):
        d = _shape(entry["diagram"])
        if "cells" in entry:
            rec.check(f"{entry['name']}:shape",
                      lambda: (len(d) == entry["cells"] and d.rows == entry["rows"],
                               f"{len(d)} cells, {d.rows} rows"))
        if "transpose" in entry:
            t = _shape(entry["transpose"])
            rec.check(f"{entry['name']}:transpose",
                      lambda: (d.transpose() == t, d.transpose().describe()))


def _paper_amalgams(rec: _Recorder, corpus: Dict[str, Any]):
    for entry in corpus.get("amalgamations", []):
        e, w, expected = _shape(entry["E"]), _shape(entry["W"]), _shape(entry["expected"])

        def run(e=e, w=w, expected=expected):
            glued = amalgamate(e, w, e)
            power = amalg_power(e, place_w(e, w), 2)
            return glued == expected and power == expected, f"got {glued.describe()}"

        rec.check(entry["name"], run)


def _paper_compositions(rec: _Recorder, corpus: Dict[str, Any], basis: Optional[str]):
    for entry in corpus.get("compositions", []):
        d = _shape(entry["D"])
        e, pl = _placement(entry)
        expected = _shape(entry["expected"])
        name = entry["name"]

        rec.check(f"{name}:case", lambda: (pl.case == entry["case"], f"case {pl.case}"))

        def composed(d=d, e=e, pl=pl, expected=expected):
            f = compose(d, e, pl)
            return f == expected, f"got {f.describe()}"

        rec.check(f"{name}:compose", composed)
        if pl.case == "c":
            def southeast(d=d, e=e, pl=pl):
                f = compose_southeast(d, pl)
                return f == compose(d, e, pl), f"got {f.describe()}"

            rec.check(f"{name}:southeast", southeast)

        def identity(d=d, e=e, pl=pl):
            result = verify_main_identity(d, e, pl, basis=basis)
            return result.holds and result.sign_consistent, \
                f"sign {result.sign}, expected {result.expected_sign}"

        rec.check(f"{name}:identity", identity)


def _paper_overlaps(rec: _Recorder, corpus: Dict[str, Any]):
    for entry in corpus.get("overlaps", []):
        _, pl = _placement(entry)

        def run(pl=pl, entry=entry):
            shapes = overlap_shapes(pl)
            ok = shapes.barW == _shape(entry["barW"])
            if "barO" in entry:
                ok = ok and shapes.barO == _shape(entry["barO"])
            ok = ok and _fits_inside(shapes.barW, pl.W) == entry["barW_fits_in_W"]
            return ok, f"barW={shapes.barW.describe()} barO={shapes.barO.describe()} W={pl.W.describe()}"

        rec.check(entry["name"], run)


def _paper_hypotheses(rec: _Recorder, corpus: Dict[str, Any]):
    for entry in corpus.get("hypotheses", []):
        _, pl = _placement(entry)

        def run(pl=pl, entry=entry):
            report = check_hypotheses(pl)
            failed = report.failed()
            ok = report.overall_I_to_IV == entry["holds_I_to_IV"] and set(entry["fails"]) <= set(failed)
            return ok, f"failed {failed}, case {report.case}"

        rec.check(entry["name"], run)


def _paper_hamel_goulden(rec: _Recorder, corpus: Dict[str, Any]):
    for entry in corpus.get("hamel_goulden", []):
        d = _shape(entry["diagram"])
        report = check_hamel_goulden(d, entry["kind"])
        dec = report.decomposition
        rec.check(f"{entry['name']}:intervals",
                  lambda: ([list(iv) for iv in dec.intervals] == entry["intervals"], str(dec.intervals)))
        if "hash_01" in entry:
            entry_01 = hash_op(dec, 0, 1)
            rec.check(f"{entry['name']}:hash",
                      lambda: ([entry_01.p, entry_01.q] == entry["hash_01"], f"[{entry_01.p}, {entry_01.q}]"))
        rec.check(f"{entry['name']}:determinant", lambda: (report.holds, "determinant differs from s_D"))


def _paper_maps(rec: _Recorder, corpus: Dict[str, Any]):
    for entry in corpus.get("map_expansions", []):
        d = _shape(entry["D"])
        e, pl = _placement(entry)
        lengths = jacobi_trudi_lengths(d)
        rec.check(f"{entry['name']}:lengths", lambda: (lengths == entry["jacobi_trudi_lengths"], str(lengths)))

        def run(d=d, e=e, pl=pl, entry=entry):
            top = max(k for row in lengths for k in row)
            ring = make_ring("h", len(amalg_power(e, pl, top)))
            values = {k: ring.skew(amalg_power(e, pl, k)) for k in range(top + 1)}
            expected = ring.zero
            for coeff, powers in entry["terms"]:
                term = ring.one * coeff
                for k in powers:
                    term = term * values[k]
                expected = expected + term
            return schur_compose(d, e, pl, ring=ring) == expected, "expansion differs"

        rec.check(f"{entry['name']}:expansion", run)


def _paper_equivalences(rec: _Recorder, corpus: Dict[str, Any]):
    block = corpus.get("equivalences")
    if not block:
        return
    d = _shape(block["D"])
    d_star = d.rotate180()
    for entry in block["configurations"]:
        e, pl = _placement(entry)
        name = entry["name"]

        def pair(e=e, pl=pl):
            return compose(d, e, pl, check=False), compose(d_star, e, pl, check=False)

        rec.check(f"{name}:equivalent",
                  lambda: (skew_schur(pair()[0]) == skew_schur(pair()[1]),
                           " vs ".join(f.describe() for f in pair())))
        if "pair" in entry:
            rec.check(f"{name}:pair", lambda: _same_pair(pair(), map(_shape, entry["pair"])))


def _paper_staircase(rec: _Recorder, corpus: Dict[str, Any], ctx: SuiteContext):
    block = corpus.get("staircase_class")
    if not block:
        return
    members = [_shape(m) for m in block["members"]]
    classes = classify(block["max_cells"], workers=ctx.workers)
    special = nontrivial_classes(classes)

    def unique():
        if len(special) != 1:
            return False, f"{len(special)} classes not explained by rotation"
        cls = special[0]
        return set(members) <= set(cls.members) and cls.size == block["size"], \
            f"class {[m.describe() for m in cls.members]}"

    rec.check("staircase:unique-class", unique)
    rec.check("staircase:predicted-size",
              lambda: (predicted_class_size(members[0]) == block["size"],
                       f"predicted {predicted_class_size(members[0])}"))


def _paper_single_contact(rec: _Recorder, corpus: Dict[str, Any], basis: Optional[str]):
    block = corpus.get("single_contact")
    if not block:
        return
    e, pl = _placement(block)
    d = _shape(block["D"])
    expected = [_shape(f) for f in block["pair"]]

    report = check_hypotheses(pl)
    rec.check("single-contact:hypothesis-V",
              lambda: (not report.h5 and report.overall_I_to_IV, str(report.failed())))
    for label, shape in (("D", d), ("D*", d.rotate180())):
        def run(shape=shape):
            result = verify_main_identity(shape, e, pl, basis=basis)
            return result.holds, f"sign {result.sign}"
        rec.check(f"single-contact:identity-{label}", run)

    rec.check("single-contact:pair",
              lambda: _same_pair([compose(d, e, pl), compose(d.rotate180(), e, pl)], expected))
    rec.check("single-contact:equivalent",
              lambda: (skew_schur(expected[0]) == skew_schur(expected[1]), "expansions differ"))

    for k, entry in enumerate(block.get("factorizations", [])):
        factor_d = _shape(entry["D"])
        factor_pl = place_w(e, _shape(entry["W"]))

        def run(factor_d=factor_d, factor_pl=factor_pl):
            f = compose(factor_d, e, factor_pl, check=False)
            return f in expected and f == f.transpose(), f.describe()

        rec.check(f"single-contact:factorization-{k}", run)


def paper_examples(ctx: SuiteContext) -> SuiteResult:
    from ..config import get_compute_settings

    basis = get_compute_settings().identity_basis
    corpus = load_corpus()
    rec = _Recorder("paper-examples")
    _paper_diagrams(rec, corpus)
    _paper_amalgams(rec, corpus)
    _paper_compositions(rec, corpus, basis)
    _paper_overlaps(rec, corpus)
    _paper_hypotheses(rec, corpus)
    _paper_hamel_goulden(rec, corpus)
    _paper_maps(rec, corpus)
    _paper_equivalences(rec, corpus)
    _paper_staircase(rec, corpus, ctx)
    _paper_single_contact(rec, corpus, basis)
    return rec.result


# ---------------------------------------------------------------------------
# random-identities
# ---------------------------------------------------------------------------

def _identity_case(d: SkewDiagram, e: SkewDiagram, pl: WPlacement) -> Tuple[bool, str]:
    result = verify_main_identity(d, e, pl)
    ok = result.holds and result.sign_consistent
    return ok, f"D={d.describe()} {pl.describe()} sign={result.sign} expected={result.expected_sign}"


def sample_identity_triples(samples: int, seed: int, max_d: int, max_e: int) -> List[Tuple[SkewDiagram, SkewDiagram, WPlacement]]:
    """按种子抽取满足假设 I–V 的 (D, E, W) 三元组"""
    rng = np.random.default_rng(seed)
    d_pool = [d for n in range(1, max_d + 1) for d in enumerate_connected(n, max_d)]
    e_pool = [e for n in range(2, max_e + 1) for e in enumerate_connected(n, max_e)]
    triples = []
    attempts = 0
    while len(triples) < samples and attempts < samples * 50:
        attempts += 1
        e = e_pool[int(rng.integers(len(e_pool)))]
        admissible = [pl for pl in find_w_placements(e) if check_hypotheses(pl).overall_I_to_V]
        if not admissible:
            continue
        pl = admissible[int(rng.integers(len(admissible)))]
        d = d_pool[int(rng.integers(len(d_pool)))]
        triples.append((d, e, pl))
    if len(triples) < samples:
        logger.warning(f"仅抽到 {len(triples)} / {samples} 个满足假设的三元组")
    return triples


def random_identities(ctx: SuiteContext) -> SuiteResult:
    from ..config import get_compute_settings, get_corpus_settings

    corpus = get_corpus_settings()
    samples = ctx.samples if ctx.samples is not None else corpus.random_samples
    seed = ctx.seed if ctx.seed is not None else corpus.seed
    workers = ctx.workers if ctx.workers is not None else get_compute_settings().workers
    triples = sample_identity_triples(samples, seed, corpus.max_d_cells, corpus.max_e_cells)

    rec = _Recorder("random-identities")
    if workers == 1:
        outcomes = [_identity_case(*t) for t in triples]
    else:
        outcomes = Parallel(n_jobs=workers)(delayed(_identity_case)(*t) for t in triples)
    for k, (ok, witness) in enumerate(outcomes):
        rec.check(f"identity-{k}", lambda: (ok, None if ok else witness))
    return rec.result


# ---------------------------------------------------------------------------
# hamel-goulden
# ---------------------------------------------------------------------------

def hamel_goulden_suite(ctx: SuiteContext) -> SuiteResult:
    n = ctx.max_cells or 9
    rec = _Recorder("hamel-goulden")
    for kind in DecompositionKind:
        failures: List[str] = []
        count = 0
        for m in range(1, n + 1):
            for d in enumerate_connected(m, max(n, m)):
                count += 1
                if not check_hamel_goulden(d, kind).holds:
                    failures.append(d.describe())
        rec.check(f"hamel-goulden-{kind.value}",
                  lambda: (not failures, ", ".join(failures[:5])), diagrams=count)
    return rec.result


# ---------------------------------------------------------------------------
# properties
# ---------------------------------------------------------------------------

def _diagrams_up_to(n: int) -> List[SkewDiagram]:
    return [d for m in range(1, n + 1) for d in enumerate_connected(m, n)]


def _first_failure(items: Iterable[Any], predicate: Callable[[Any], bool]) -> Tuple[bool, Optional[str]]:
    for item in items:
        if not predicate(item):
            return False, item.describe() if isinstance(item, SkewDiagram) else str(item)
    return True, None


def _lr_triples(size: int):
    for total in range(1, size + 1):
        for lam in partitions(total):
            for k in range(total + 1):
                for mu in partitions(k):
                    for nu in partitions(total - k):
                        yield lam, mu, nu


def properties(ctx: SuiteContext) -> SuiteResult:
    from ..config import get_corpus_settings

    n = ctx.max_cells or 8
    seed = ctx.seed if ctx.seed is not None else get_corpus_settings().seed
    rec = _Recorder("properties")
    small = _diagrams_up_to(min(n, 8))

    rec.check("lr-symmetry", lambda: _first_failure(
        _lr_triples(n),
        lambda t: lr_coefficient(t[0], t[1], t[2]) == lr_coefficient(t[0], t[2], t[1])))
    rec.check("adjointness", lambda: _first_failure(_lr_triples(n), _adjoint))
    rec.check("omega-involution", lambda: _first_failure(
        small, lambda d: omega(omega(skew_schur(d))) == skew_schur(d)))
    rec.check("omega-transpose", lambda: _first_failure(
        small, lambda d: omega(skew_schur(d)) == skew_schur(d.transpose())))
    rec.check("rotation-equivalence", lambda: _first_failure(
        _diagrams_up_to(min(n + 2, 10)), verify_rotation_equivalence))
    rec.check("monomial-oracle", lambda: _first_failure(
        small, lambda d: symmetric_coefficients(d, len(d)) == schur_monomial_coefficients(skew_schur(d), len(d))))

    rng = np.random.default_rng(seed)

    def sylvester():
        for _ in range(100):
            matrix = rng.integers(-5, 6, size=(5, 5)).tolist()
            subset = sorted(rng.choice(5, size=int(rng.integers(1, 4)), replace=False).tolist())
            if not sylvester_check(matrix, subset):
                return False, f"matrix {matrix}, subset {subset}"
        return True, None

    rec.check("sylvester", sylvester)
    return rec.result


@lru_cache(maxsize=None)
def _skew_expansion(lam, mu):
    return skew_schur(make_skew(lam, mu))


@lru_cache(maxsize=None)
def _product(mu, nu):
    return multiply(schur(mu), schur(nu))


def _adjoint(triple) -> bool:
    """⟨s_{λ/μ}, s_ν⟩ = ⟨s_λ, s_μ s_ν⟩；μ ⊄ λ 时左侧为 0"""
    lam, mu, nu = triple
    left = _skew_expansion(lam, mu).coeff(nu) if lam.contains(mu) else 0
    return left == _product(mu, nu).coeff(lam)


# ---------------------------------------------------------------------------
# 调度
# ---------------------------------------------------------------------------

SUITES: Dict[str, Callable[[SuiteContext], SuiteResult]] = {
    "paper-examples": paper_examples,
    "random-identities": random_identities,
    "hamel-goulden": hamel_goulden_suite,
    "properties": properties,
}


def run_suite(name: str, ctx: Optional[SuiteContext] = None) -> SuiteResult:
    """
    运行指定套件并记录 VerificationLog

    Raises:
        KeyError: 未知套件名
    """
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}, expected one of {sorted(SUITES)}")
    ctx = ctx or SuiteContext()
    started = time.time()
    try:
        result = SUITES[name](ctx)
    except Exception as e:
        get_logger().log_error(LogCategory.VERIFICATION, f"套件 {name} 异常终止", e)
        get_logger().log_verification(VerificationLog(
            suite=name, timestamp=started, duration_ms=(time.time() - started) * 1000,
            checks=0, failures=0, error=str(e),
        ))
        raise

    result.duration_ms = (time.time() - started) * 1000
    get_logger().log_verification(VerificationLog(
        suite=name,
        timestamp=started,
        duration_ms=result.duration_ms,
        checks=len(result.checks),
        failures=len(result.failures),
        failed_checks=[c.name for c in result.failures] or None,
    ))
    return result
