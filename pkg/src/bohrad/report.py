"""Reference tables and curve data.

Six tables cover the built-in radius families over a gamma grid:

    1-4  closed-form radii R1..R4, one column per exponent p
    5    order-alpha averaging radii, one column per alpha
    6    integral-operator radii, one column per (m, beta)

Rows are half-open gamma intervals; each cell stores the radius at both
interval endpoints.  The printed endpoint gamma = 1 lies outside the open
parameter range and is evaluated at 1 - 1e-9 (labelled 1-).  Curves sample
the three defining equations whose smallest positive roots are the tabled
radii.
"""

from __future__ import annotations

import io
import json
from dataclasses import dataclass
from typing import Dict, List, Sequence, Tuple

import numpy as np

from . import radii, weights
from .errors import DomainError

GAMMA_ONE = weights.R_MAX

_GAMMAS_COARSE = (0.0, 0.2, 0.4, 0.6, 0.8, 1.0)
_GAMMAS_CESARO = (0.0, 0.3, 0.5, 0.7, 0.9, 1.0)

#: table id -> (row gamma endpoints, column parameter dicts)
TABLE_DEFS: Dict[int, Tuple[Tuple[float, ...], List[dict]]] = {
    1: (_GAMMAS_COARSE, [{"which": "R1", "p": p} for p in (1.0, 1.5, 1.7, 2.0)]),
    2: (_GAMMAS_COARSE, [{"which": "R2", "p": p} for p in (1.0, 1.4, 1.8, 2.0)]),
    3: (_GAMMAS_COARSE, [{"which": "R3", "p": p} for p in (1.0, 1.5, 1.8, 2.0)]),
    4: (_GAMMAS_COARSE, [{"which": "R4", "p": p} for p in (1.0, 1.3, 1.6, 2.0)]),
    5: (_GAMMAS_CESARO, [{"alpha": a} for a in (0.0, 10.0, 20.0, 30.0)]),
    6: (
        _GAMMAS_COARSE,
        [{"m": m, "beta": b} for (m, b) in ((0, 1.0), (0, 2.0), (1, 2.0), (4, 0.0))],
    ),
}


@dataclass(frozen=True)
class TableSpec:
    """One reproduced table: row intervals, columns, cell endpoint pairs."""

    table_id: int
    row_gammas: Tuple[float, ...]
    column_params: Tuple[dict, ...]
    column_labels: Tuple[str, ...]
    cell_values: Tuple[Tuple[Tuple[float, float], ...], ...]


@dataclass(frozen=True)
class CurveSample:
    """Sampled points (r, value) of one radius equation."""

    family_tag: str
    params: dict
    points: Tuple[Tuple[float, float], ...]


def _column_label(table_id: int, params: dict) -> str:
    if table_id <= 4:
        return f"{params['which']}(p={params['p']:g})"
    if table_id == 5:
        return f"R(alpha={params['alpha']:g})"
    return f"R(m={params['m']},beta={params['beta']:g})"


def _column_value(table_id: int, params: dict, gamma: float) -> float:
    g = min(gamma, GAMMA_ONE)
    if table_id <= 4:
        return radii.closed_form_radius(params["which"], params["p"], g)
    if table_id == 5:
        return radii.cesaro_radius(g, params["alpha"], x_tol=1e-12).root
    return radii.bernardi_radius(params["m"], params["beta"], g, x_tol=1e-12).root


def reproduce_table(table_id: int) -> TableSpec:
    """Compute every cell endpoint of one of the six reference tables."""
    if table_id not in TABLE_DEFS:
        raise DomainError(f"table id must be in 1..6, got {table_id!r}")
    gammas, columns = TABLE_DEFS[table_id]
    endpoint_values = [
        [_column_value(table_id, params, g) for g in gammas] for params in columns
    ]
    rows = tuple(
        tuple((endpoint_values[c][i], endpoint_values[c][i + 1]) for c in range(len(columns)))
        for i in range(len(gammas) - 1)
    )
    return TableSpec(
        table_id=table_id,
        row_gammas=tuple(gammas),
        column_params=tuple(columns),
        column_labels=tuple(_column_label(table_id, p) for p in columns),
        cell_values=rows,
    )


_CURVE_TAGS = ("G", "C", "B")


def sample_curve(tag: str, params: dict, n_samples: int) -> CurveSample:
    """Sample one radius equation on a uniform grid in (0, 1).

    Tags: G needs p and gamma; C needs gamma and alpha; B needs m, beta and
    gamma.  gamma = 1 is accepted and evaluated just inside the range.
    """
    if tag not in _CURVE_TAGS:
        raise DomainError(f"tag must be one of {_CURVE_TAGS}, got {tag!r}")
    if n_samples < 2:
        raise DomainError(f"n_samples must be >= 2, got {n_samples}")
    g = min(float(params["gamma"]), GAMMA_ONE)
    if tag == "G":
        p = float(params["p"])
        fn = lambda r: radii.r4_equation(p, g, r)
    elif tag == "C":
        alpha = float(params["alpha"])
        fn = lambda r: radii.cesaro_equation(g, alpha, r)
    else:
        m, beta = int(params["m"]), float(params["beta"])
        fn = lambda r: radii.bernardi_equation(m, beta, g, r)
    grid = np.linspace(1e-4, 1.0 - 1e-4, n_samples)
    points = tuple((float(r), fn(float(r))) for r in grid)
    return CurveSample(family_tag=tag, params=dict(params), points=points)


# --- emission -------------------------------------------------------------

_FORMATS = ("csv", "json", "markdown")


def _num(x: float) -> str:
    return format(x, ".10g")


def emit(item, fmt: str) -> str:
    """Serialize a TableSpec or CurveSample to csv, json or markdown."""
    if fmt not in _FORMATS:
        raise DomainError(f"format must be one of {_FORMATS}, got {fmt!r}")
    if isinstance(item, CurveSample):
        return _emit_curve(item, fmt)
    if isinstance(item, TableSpec):
        return _emit_table(item, fmt)
    raise DomainError(f"cannot emit object of type {type(item).__name__}")


def _emit_curve(curve: CurveSample, fmt: str) -> str:
    if fmt == "csv":
        out = io.StringIO()
        out.write("r,value\n")
        for r, v in curve.points:
            out.write(f"{_num(r)},{_num(v)}\n")
        return out.getvalue()
    if fmt == "json":
        return json.dumps(
            {
                "family_tag": curve.family_tag,
                "params": curve.params,
                "points": [[r, v] for r, v in curve.points],
            }
        )
    lines = ["| r | value |", "| --- | --- |"]
    lines += [f"| {r:.4f} | {v:.4f} |" for r, v in curve.points]
    return "\n".join(lines) + "\n"


def _gamma_label(g: float) -> str:
    return "1⁻" if g >= 1.0 else f"{g:g}"


def _emit_table(table: TableSpec, fmt: str) -> str:
    if fmt == "csv":
        out = io.StringIO()
        cols = ",".join(f"{lab}_lo,{lab}_hi" for lab in table.column_labels)
        out.write(f"gamma_lo,gamma_hi,{cols}\n")
        for i, row in enumerate(table.cell_values):
            cells = ",".join(f"{_num(lo)},{_num(hi)}" for lo, hi in row)
            out.write(
                f"{_num(table.row_gammas[i])},{_num(table.row_gammas[i + 1])},{cells}\n"
            )
        return out.getvalue()
    if fmt == "json":
        return json.dumps(
            {
                "table_id": table.table_id,
                "row_gammas": list(table.row_gammas),
                "column_params": list(table.column_params),
                "column_labels": list(table.column_labels),
                "cell_values": [[[lo, hi] for lo, hi in row] for row in table.cell_values],
            }
        )
    header = "| gamma | " + " | ".join(table.column_labels) + " |"
    rule = "| --- |" + " --- |" * len(table.column_labels)
    lines = [header, rule]
    for i, row in enumerate(table.cell_values):
        lo_g = _gamma_label(table.row_gammas[i])
        hi_g = _gamma_label(table.row_gammas[i + 1])
        cells = " | ".join(f"{lo:.4f} ↗ {hi:.4f}" for lo, hi in row)
        lines.append(f"| [{lo_g}, {hi_g}) | {cells} |")
    return "\n".join(lines) + "\n"


__all__ = [
    "GAMMA_ONE",
    "TABLE_DEFS",
    "TableSpec",
    "CurveSample",
    "reproduce_table",
    "sample_curve",
    "emit",
]
