"""
状态文件 / 可观测量文件的 JSON 编解码

StateFile:      {"dims": [d1, d2], "rho": [[[re, im], ...], ...], "label": "..."}
ObservableFile: {"matrix": [[[re, im], ...], ...], "label": "...", "dims": [...]}

浮点数以 Python repr 写出（最短可逆表示），写出再读回逐位相同
"""

import json
from pathlib import Path
from typing import IO

import numpy as np
from pydantic import BaseModel, Field, ValidationError, field_validator

from backend.errors import GeometryError, NotHermitian, StateFileError
from backend.matcore import BipartiteState, Observable, matrix_of

Entry = tuple[float, float]


class _StateEncoder(json.JSONEncoder):
    """(n, n, 2) 实数数组 → [[[re, im], ...], ...]"""

    def default(self, obj):
        if isinstance(obj, np.ndarray):
            return obj.tolist()
        return super().default(obj)


# ============================================================
# Pydantic Models
# ============================================================

class StateFile(BaseModel):
    dims: list[int] = Field(min_length=2, max_length=2)
    rho: list[list[Entry]]
    label: str | None = None

    @field_validator("dims")
    @classmethod
    def _positive_dims(cls, dims: list[int]) -> list[int]:
        if any(d < 1 for d in dims):
            raise ValueError(f"dims 必须为正整数: {dims}")
        return dims


class ObservableFile(BaseModel):
    matrix: list[list[Entry]]
    label: str | None = None
    dims: list[int] | None = None


# ============================================================
# 解码
# ============================================================

def _position_from_loc(loc: tuple) -> tuple[int, int] | None:
    ints = [x for x in loc if isinstance(x, int)]
    if len(ints) >= 2:
        return ints[0], ints[1]
    return None


def _validate(model: type[BaseModel], data) -> BaseModel:
    try:
        return model.model_validate(data)
    except ValidationError as exc:
        first = exc.errors()[0]
        loc = tuple(first.get("loc", ()))
        field = ".".join(str(x) for x in loc)
        raise StateFileError(f"字段 {field} 校验失败: {first.get('msg')}",
                             position=_position_from_loc(loc)) from exc


def _to_matrix(rows: list[list[Entry]], n: int) -> np.ndarray:
    if len(rows) != n:
        raise StateFileError(f"矩阵行数 {len(rows)} 与维度 {n} 不符")
    for r, row in enumerate(rows):
        if len(row) != n:
            raise StateFileError(f"第 {r} 行长度 {len(row)} 与维度 {n} 不符",
                                 position=(r, min(len(row), n - 1)))
    arr = np.array(rows, dtype=np.float64)
    bad = np.argwhere(~np.isfinite(arr))
    if bad.size:
        r, c = int(bad[0][0]), int(bad[0][1])
        raise StateFileError("矩阵元素非有限", position=(r, c))
    return arr[..., 0] + 1j * arr[..., 1]


def _hermitian_position(m: np.ndarray) -> tuple[int, int]:
    r, c = np.unravel_index(int(np.argmax(np.abs(m - m.conj().T))), m.shape)
    return int(r), int(c)


def _load_json(source) -> object:
    try:
        if isinstance(source, (str, Path)):
            text = Path(source).read_text(encoding="utf-8")
        else:
            text = source.read()
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise StateFileError(f"JSON 解析失败: {exc.msg} (行 {exc.lineno}, 列 {exc.colno})") from exc


def parse_state(data) -> BipartiteState:
    """已解析的 JSON 对象 → BipartiteState"""
    model = _validate(StateFile, data)
    d1, d2 = model.dims
    m = _to_matrix(model.rho, d1 * d2)
    try:
        return BipartiteState.from_array(m, d1, d2, label=model.label)
    except NotHermitian as exc:
        raise StateFileError(str(exc), position=_hermitian_position(m)) from exc
    except GeometryError as exc:
        raise StateFileError(str(exc)) from exc


def read_state(source) -> BipartiteState:
    """
    读取状态文件

    Args:
        source: 文件路径或文本流

    Raises:
        StateFileError: JSON 语法错误、字段缺失、形状不符或不是合法态
    """
    return parse_state(_load_json(source))


def read_observable(source) -> Observable:
    model = _validate(ObservableFile, _load_json(source))
    n = len(model.matrix)
    if n == 0:
        raise StateFileError("可观测量矩阵为空")
    if model.dims is not None and int(np.prod(model.dims)) != n:
        raise StateFileError(f"dims {model.dims} 与矩阵维度 {n} 不符")
    m = _to_matrix(model.matrix, n)
    try:
        return Observable.from_array(m)
    except NotHermitian as exc:
        raise StateFileError(str(exc), position=_hermitian_position(m)) from exc


# ============================================================
# 编码
# ============================================================

def _pairs(m: np.ndarray) -> np.ndarray:
    return np.stack([m.real, m.imag], axis=-1)


def state_to_json(s: BipartiteState, label: str | None = None) -> str:
    payload = {
        "dims": [s.d1, s.d2],
        "rho": _pairs(np.asarray(s.matrix)),
        "label": label if label is not None else s.label,
    }
    return json.dumps(payload, cls=_StateEncoder, ensure_ascii=False)


def observable_to_json(a, label: str | None = None, dims=None) -> str:
    payload = {"matrix": _pairs(matrix_of(a)), "label": label}
    if dims is not None:
        payload["dims"] = [int(d) for d in dims]
    return json.dumps(payload, cls=_StateEncoder, ensure_ascii=False)


def _write(text: str, target: str | Path | IO[str]) -> None:
    if isinstance(target, (str, Path)):
        path = Path(target)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text + "\n", encoding="utf-8")
    else:
        target.write(text + "\n")


def write_state(s: BipartiteState, target, label: str | None = None) -> None:
    _write(state_to_json(s, label), target)


def write_observable(a, target, label: str | None = None, dims=None) -> None:
    _write(observable_to_json(a, label, dims), target)
