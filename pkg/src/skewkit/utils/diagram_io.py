"""
斜图编解码
作者: XYZ-Algorithm-Team
用途: JSON 编码 {"lambda","mu"} / {"cells"} / {"art"}，ASCII 图解析与渲染，命令行参数读取
"""

import json
import operator
from pathlib import Path
from typing import Any, Dict, FrozenSet, Iterable, Optional, Tuple

from ..diagrams.skew import Cell, SkewDiagram, make_skew
from .errors import InvalidDiagramError

CELL_CHARS = frozenset("xX×")
MARK_CHARS = frozenset("wW")
BLANK_CHARS = frozenset(". ")


def parse_art(art: str) -> Tuple[FrozenSet[Cell], FrozenSet[Cell]]:
    """
    解析 ASCII 图，行之间用换行或 "/" 分隔

    Returns:
        (全部单元格, 标记为 w 的单元格)，坐标为原始行列
    """
    text = art.strip("\n")
    lines = text.split("\n") if "\n" in text else text.split("/")
    cells, marked = set(), set()
    for i, line in enumerate(lines):
        for j, ch in enumerate(line):
            if ch in CELL_CHARS:
                cells.add((i, j))
            elif ch in MARK_CHARS:
                cells.add((i, j))
                marked.add((i, j))
            elif ch not in BLANK_CHARS:
                raise InvalidDiagramError(f"unexpected character {ch!r} in diagram art")
    return frozenset(cells), frozenset(marked)


def parse_marked_art(art: str) -> Tuple[SkewDiagram, FrozenSet[Cell]]:
    """解析带 w 标记的 ASCII 图，标记单元格换算到斜图的规范坐标"""
    cells, marked = parse_art(art)
    rows = {r: k for k, r in enumerate(sorted({i for i, _ in cells}))}
    cols = {c: k for k, c in enumerate(sorted({j for _, j in cells}))}
    return SkewDiagram(cells), frozenset((rows[i], cols[j]) for i, j in marked)


def render(diagram_or_cells, marked: Optional[Iterable[Cell]] = None,
           cell_char: str = "×", mark_char: str = "w", blank_char: str = ".") -> str:
    """按单元格原始坐标渲染；marked 中的单元格画成 w"""
    cells = diagram_or_cells.cells if isinstance(diagram_or_cells, SkewDiagram) \
        else frozenset(diagram_or_cells)
    if not cells:
        return ""
    marked = frozenset(marked or ())
    rmin = min(i for i, _ in cells)
    rmax = max(i for i, _ in cells)
    cmin = min(j for _, j in cells)
    lines = []
    for i in range(rmin, rmax + 1):
        width = max((j for r, j in cells if r == i), default=cmin - 1) - cmin + 1
        row = []
        for j in range(cmin, cmin + width):
            if (i, j) in marked:
                row.append(mark_char)
            elif (i, j) in cells:
                row.append(cell_char)
            else:
                row.append(blank_char)
        lines.append("".join(row))
    return "\n".join(lines)


def diagram_from_json(payload: Any) -> SkewDiagram:
    """接受 {"lambda","mu"}、{"cells"} 或 {"art"}"""
    if not isinstance(payload, dict):
        raise InvalidDiagramError(f"diagram must be a JSON object, got {type(payload).__name__}")
    if "lambda" in payload:
        return make_skew(payload["lambda"], payload.get("mu", []))
    if "cells" in payload:
        return SkewDiagram(cells_from_json(payload["cells"]))
    if "art" in payload:
        if not isinstance(payload["art"], str):
            raise InvalidDiagramError("diagram art must be a string")
        cells, _ = parse_art(payload["art"])
        return SkewDiagram(cells)
    raise InvalidDiagramError("diagram JSON needs one of 'lambda', 'cells' or 'art'")


def diagram_to_json(diagram: SkewDiagram) -> Dict[str, Any]:
    return diagram.to_json()


def cells_from_json(payload: Any) -> FrozenSet[Cell]:
    """原始坐标单元格列表 [[i, j], ...]"""
    try:
        return frozenset((operator.index(i), operator.index(j)) for i, j in payload)
    except (TypeError, ValueError) as e:
        raise InvalidDiagramError(f"malformed cell list: {payload!r}") from e


def load_json_argument(value: str) -> Any:
    """命令行参数可以是内联 JSON，也可以是 JSON 文件路径"""
    try:
        return json.loads(value)
    except json.JSONDecodeError:
        pass
    path = Path(value)
    if not path.is_file():
        raise InvalidDiagramError(f"argument is neither valid JSON nor an existing file: {value!r}")
    with open(path, 'r', encoding='utf-8') as f:
        try:
            return json.load(f)
        except json.JSONDecodeError as e:
            raise InvalidDiagramError(f"invalid JSON in {path}: {e}") from e


def dumps(payload: Any) -> str:
    """紧凑且确定的 JSON 输出"""
    return json.dumps(payload, separators=(",", ":"), ensure_ascii=False)
