"""Result rows and their CSV / JSON encodings.

The CSV schema is frozen: columns in OutputRow field order, header always
present, "\\n" line terminator, numbers rendered with 6 significant digits.
"""

from __future__ import annotations

import csv
import json
from collections.abc import Iterable
from typing import Any, TextIO

from pydantic import BaseModel, ConfigDict

from .harness.seeding import STREAM_SCHEME_VERSION
from .regret import RegretReport

OUTPUT_SCHEMA_VERSION = 1


def sig6(value: float) -> float:
    return float(f"{value:.6g}")


class OutputRow(BaseModel):
    """One (family, algorithm, p) cell."""

    model_config = ConfigDict(frozen=True)

    instance_family: str
    algorithm: str
    p: float
    T: int
    explore_period: int
    clamped: bool
    min_reward_ok: bool
    explore_period_ok: bool
    remark_ok: bool
    estimator: str
    R: int
    regret_mean: float
    regret_std: float | None
    instance_seed: int
    base_seed: int


CSV_COLUMNS = tuple(OutputRow.model_fields)


def rows_from_report(report: RegretReport) -> list[OutputRow]:
    """One row per p, values rounded to 6 significant digits."""
    return [
        OutputRow(
            instance_family=report.family,
            algorithm=report.algorithm,
            p=sig6(est.p),
            T=report.T,
            explore_period=est.explore_period,
            clamped=est.clamped,
            min_reward_ok=est.min_reward_ok,
            explore_period_ok=est.explore_period_ok,
            remark_ok=est.remark_ok,
            estimator=report.estimator.value,
            R=report.R,
            regret_mean=sig6(est.mean),
            regret_std=None if est.std is None else sig6(est.std),
            instance_seed=report.instance_seed,
            base_seed=report.base_seed,
        )
        for est in report.estimates
    ]


def _cell(value: Any) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return f"{value:.6g}"
    return str(value)


def write_csv(rows: Iterable[OutputRow], stream: TextIO) -> None:
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for row in rows:
        writer.writerow([_cell(getattr(row, column)) for column in CSV_COLUMNS])


def write_json(rows: Iterable[OutputRow], stream: TextIO) -> None:
    payload = {
        "schema_version": OUTPUT_SCHEMA_VERSION,
        "stream_scheme_version": STREAM_SCHEME_VERSION,
        "rows": [row.model_dump() for row in rows],
    }
    stream.write(json.dumps(payload, indent=2))
    stream.write("\n")


def read_json(stream: TextIO) -> list[OutputRow]:
    """Parse rows written by write_json."""
    payload = json.load(stream)
    if payload.get("schema_version") != OUTPUT_SCHEMA_VERSION:
        raise ValueError(f"Unsupported schema version: {payload.get('schema_version')}")
    return [OutputRow.model_validate(row) for row in payload["rows"]]


def write_rows(rows: Iterable[OutputRow], stream: TextIO, fmt: str) -> None:
    if fmt == "json":
        write_json(rows, stream)
    else:
        write_csv(rows, stream)
