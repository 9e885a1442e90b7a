"""
SkewKit 命令行工具
作者: XYZ-Algorithm-Team
用途: 展开、等价判定、复合、假设检查、行列式校验、等价类扫描、验证套件、渲染与分解
"""

import argparse
import sys
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Tuple

from .composition import (
    check_hypotheses,
    compose,
    factorizations,
    find_w_placements,
    irreducible_factorization,
    placement_from_spec,
    verify_main_identity,
)
from .diagrams import SkewDiagram
from .equivalence import classification_report, classify
from .ribbons import check_hamel_goulden, sylvester_check
from .schur import skew_schur
from .utils.diagram_io import diagram_from_json, dumps, load_json_argument, render
from .utils.errors import SkewKitError
from .utils.logging_utils import LogCategory, get_logger
from .verification import SUITES, SuiteContext, run_suite

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_INVALID = 2

# (输出载荷, 文本呈现, 退出码)
Outcome = Tuple[Any, str, int]


def _diagram(value: str) -> SkewDiagram:
    return diagram_from_json(load_json_argument(value))


def _workers(value: str) -> int:
    """并行进程数：正整数或 -1"""
    try:
        workers = int(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid worker count: {value!r}")
    if workers < 1 and workers != -1:
        raise argparse.ArgumentTypeError(f"worker count must be >= 1 or -1, got {workers}")
    return workers


def _placement(e: SkewDiagram, value: Optional[str]):
    return placement_from_spec(e, load_json_argument(value) if value else None)


class SkewKitCLI:
    """各子命令返回 Outcome，由 main 统一输出"""

    def expand(self, args) -> Outcome:
        d = _diagram(args.diagram)
        s = skew_schur(d)
        return s.to_json(), str(s), EXIT_OK

    def equal(self, args) -> Outcome:
        a, b = _diagram(args.a), _diagram(args.b)
        sa, sb = skew_schur(a), skew_schur(b)
        diff = sa.first_difference(sb)
        if diff is None:
            return {"equivalent": True, "fingerprint": sa.to_json()}, "equivalent", EXIT_OK
        p, ca, cb = diff
        payload = {
            "equivalent": False,
            "first_difference": {"partition": list(p), "coeff_a": ca, "coeff_b": cb},
        }
        return payload, f"not equivalent: s{list(p)} has {ca} vs {cb}", EXIT_FAILED

    def compose(self, args) -> Outcome:
        d, e = _diagram(args.d), _diagram(args.e)
        pl = _placement(e, args.w)
        f = compose(d, e, pl)
        payload: Dict[str, Any] = {"composed": f.to_json(), "case": pl.case, "cells": len(f)}
        text = render(f)
        code = EXIT_OK
        if args.verify:
            result = verify_main_identity(d, e, pl)
            payload["identity"] = result.to_json()
            text += f"\nidentity: sign={result.sign} expected={result.expected_sign}"
            if not (result.holds and result.sign_consistent):
                code = EXIT_FAILED
        return payload, text, code

    def hypotheses(self, args) -> Outcome:
        e = _diagram(args.e)
        if args.all:
            reports = [check_hypotheses(pl) for pl in find_w_placements(e)]
            text = "\n".join(
                f"W={r.placement.W.describe()} case={r.case} failed={r.failed()}" for r in reports
            )
            return [r.to_json() for r in reports], text, EXIT_OK
        report = check_hypotheses(_placement(e, args.w))
        lines = [f"case: {report.case}"]
        lines += [f"{k}: {v}" for k, v in sorted(report.witnesses.items())]
        code = EXIT_OK if report.overall_I_to_IV else EXIT_FAILED
        return report.to_json(), "\n".join(lines), code

    def hg(self, args) -> Outcome:
        report = check_hamel_goulden(_diagram(args.diagram), args.kind)
        text = f"{report.decomposition.kind.value}: intervals {report.decomposition.intervals}, " \
               f"{'holds' if report.holds else 'FAILS'}"
        return report.to_json(show_matrix=args.show_matrix), text, EXIT_OK if report.holds else EXIT_FAILED

    def sylvester(self, args) -> Outcome:
        matrix = load_json_argument(args.matrix)
        subset = load_json_argument(args.subset)
        if not isinstance(matrix, list) or not all(isinstance(row, list) and len(row) == len(matrix) for row in matrix):
            raise SkewKitError("matrix must be a square JSON array of arrays")
        try:
            holds = sylvester_check(matrix, subset)
        except ValueError as e:
            raise SkewKitError(str(e)) from e
        return {"holds": holds}, "holds" if holds else "FAILS", EXIT_OK if holds else EXIT_FAILED

    def classes(self, args) -> Outcome:
        classes = classify(args.max_cells, workers=args.workers)
        report = classification_report(classes, args.max_cells)
        if args.out:
            Path(args.out).write_text(dumps(report), encoding='utf-8')
        summary = {k: report[k] for k in ("max_cells", "diagrams", "class_count", "size_histogram")}
        summary["nontrivial"] = report["nontrivial"]
        summary["findings"] = report["findings"]
        summary["invariant_violations"] = report["invariant_violations"]
        text = "\n".join([
            f"{report['diagrams']} diagrams, {report['class_count']} classes",
            f"sizes: {report['size_histogram']}",
            f"nontrivial: {len(report['nontrivial'])}",
        ] + [f"size {f['size']} is not a power of 2: {f['members']}" for f in report["findings"]])
        failed = report["findings"] or report["invariant_violations"]
        return summary, text, EXIT_FAILED if failed else EXIT_OK

    def verify(self, args) -> Outcome:
        ctx = SuiteContext(max_cells=args.max_cells, samples=args.samples, seed=args.seed, workers=args.workers)
        names = sorted(SUITES) if args.suite == "all" else [args.suite]
        results = [run_suite(name, ctx) for name in names]
        payload = [r.to_json(timings=args.timings) for r in results]
        lines = []
        for r in results:
            lines.append(f"{r.suite}: {len(r.checks) - len(r.failures)}/{len(r.checks)} passed")
            lines += [f"  FAIL {c.name}: {c.witness}" for c in r.failures]
        code = EXIT_OK if all(r.passed for r in results) else EXIT_FAILED
        return payload[0] if len(payload) == 1 else payload, "\n".join(lines), code

    def render(self, args) -> Outcome:
        d = _diagram(args.diagram)
        marked = _placement(d, args.w).marked if args.w else ()
        art = render(d, marked)
        return {"diagram": d.to_json(), "art": art.split("\n")}, art, EXIT_OK

    def factor(self, args) -> Outcome:
        f = _diagram(args.diagram)
        result = factorizations(f, args.max_cells)
        chain = irreducible_factorization(f, args.max_cells)
        payload = dict(result.to_json(), chain=chain.to_json())
        lines = [f"{len(result.nontrivial)} nontrivial factorizations"]
        lines += [f"  D={x.D.describe()} E={x.E.describe()} W={x.W.describe()} case={x.placement.case}"
                  for x in result.minimal]
        lines.append(f"r={chain.asymmetric_factors}, predicted class size {chain.predicted_class_size}")
        return payload, "\n".join(lines), EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog='skewkit', description='SkewKit 斜 Schur 函数与斜图复合工具')
    parser.add_argument('--format', choices=['json', 'text'], default='json', help='输出格式')
    sub = parser.add_subparsers(dest='command', required=True)

    p = sub.add_parser('expand', help='s_D 的 Schur 展开')
    p.add_argument('--diagram', required=True, help='斜图 JSON 或文件路径')

    p = sub.add_parser('equal', help='判定 s_A = s_B')
    p.add_argument('--a', required=True, help='斜图 A')
    p.add_argument('--b', required=True, help='斜图 B')

    p = sub.add_parser('compose', help='构造 D ∘_W E')
    p.add_argument('--d', required=True, help='外层斜图 D')
    p.add_argument('--e', required=True, help='连通斜图 E')
    p.add_argument('--w', help='W 形状、{"sw","ne"} 锚点或 {"empty": true}，默认 W = ∅')
    p.add_argument('--verify', action='store_true', help='同时核验主恒等式')

    p = sub.add_parser('hypotheses', help='检查假设 I–V')
    p.add_argument('--e', required=True, help='连通斜图 E')
    p.add_argument('--w', help='W 放置，默认 W = ∅')
    p.add_argument('--all', action='store_true', help='列出 E 的全部 W 放置')

    p = sub.add_parser('hg', help='Hamel-Goulden 行列式校验')
    p.add_argument('--diagram', required=True, help='斜图 JSON 或文件路径')
    p.add_argument('--kind', choices=['nw', 'se', 'jt'], default='nw', help='外分解类型')
    p.add_argument('--show-matrix', action='store_true', help='输出矩阵各项')

    p = sub.add_parser('sylvester', help='整数矩阵上的 Sylvester 恒等式')
    p.add_argument('--matrix', required=True, help='方阵 JSON')
    p.add_argument('--subset', required=True, help='指标集 JSON 数组')

    p = sub.add_parser('classes', help='等价类穷举')
    p.add_argument('--max-cells', type=int, required=True, help='最大单元格数')
    p.add_argument('--workers', type=_workers, help='并行进程数，-1 为全部核心')
    p.add_argument('--out', help='完整报告输出路径')

    p = sub.add_parser('verify', help='运行验证套件')
    p.add_argument('--suite', choices=sorted(SUITES) + ['all'], default='paper-examples', help='套件名称')
    p.add_argument('--max-cells', type=int, help='穷举规模')
    p.add_argument('--samples', type=int, help='随机样本数')
    p.add_argument('--seed', type=int, help='随机种子')
    p.add_argument('--workers', type=_workers, help='并行进程数')
    p.add_argument('--timings', action='store_true', help='输出耗时')

    p = sub.add_parser('render', help='ASCII 渲染')
    p.add_argument('--diagram', required=True, help='斜图 JSON 或文件路径')
    p.add_argument('--w', help='以 w 标出 W 的两个副本')

    p = sub.add_parser('factor', help='复合分解与不可约分解链')
    p.add_argument('--diagram', required=True, help='斜图 JSON 或文件路径')
    p.add_argument('--max-cells', type=int, help='分解搜索上限')
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """主函数"""
    parser = build_parser()
    args = parser.parse_args(argv)
    logger = get_logger()
    cli = SkewKitCLI()
    handler: Callable[[Any], Outcome] = getattr(cli, args.command)

    try:
        payload, text, code = handler(args)
    except (SkewKitError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        logger.log_error(LogCategory.CLI, f"命令 {args.command} 输入无效", e,
                         {"argv": argv or sys.argv[1:]}, console=False)
        return EXIT_INVALID

    print(dumps(payload) if args.format == 'json' else text)
    return code


if __name__ == '__main__':
    sys.exit(main())
