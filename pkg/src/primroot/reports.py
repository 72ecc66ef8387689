"""CSV and JSON-lines artifacts.

Integers are written as decimal strings, reals at 12 significant digits, and
thresholds as their base-10 logarithm. Every artifact carries the config
hash and seed so a run can be matched to its inputs. Nothing time-dependent
is written, so equal inputs give byte-identical files.
"""

from __future__ import annotations

import csv
import io
import json
from pathlib import Path
from typing import Iterable, TextIO

from .logreal import LogReal
from .screen import ExceptionClass, Mode, TableRow

TABLE_COLUMNS = (
    "alpha",
    "omega_lower",
    "omega_upper",
    "mode",
    "omega_cap",
    "log10_p_star",
    "robin_omega",
    "log10_p_bound",
)


def fmt_real(x: float) -> str:
    return format(x, ".12g")


def fmt_value(v) -> str:
    """Decimal-string form of a table cell; None becomes the empty string."""
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, int):
        return str(v)
    if isinstance(v, LogReal):
        return fmt_real(v.log10)
    if isinstance(v, Mode):
        return v.value
    if isinstance(v, float):
        return fmt_real(v)
    return str(v)


def provenance_line(config_hash: str, seed: int) -> str:
    return f"# config_sha256={config_hash} seed={seed}"


def row_cells(row: TableRow) -> list[str]:
    values = (
        row.alpha,
        row.omega_lower,
        row.omega_upper,
        row.mode,
        row.omega_cap,
        row.p_star,
        row.robin_omega,
        row.p_bound,
    )
    return [fmt_value(v) for v in values]


def table_csv(rows: Iterable[TableRow], config_hash: str, seed: int) -> str:
    """One provenance comment, a header, then one line per alpha."""
    buf = io.StringIO()
    buf.write(provenance_line(config_hash, seed) + "\n")
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(TABLE_COLUMNS)
    for row in rows:
        writer.writerow(row_cells(row))
    return buf.getvalue()


def read_table_csv(text: str) -> list[dict[str, str]]:
    lines = [ln for ln in text.splitlines() if not ln.startswith("#")]
    return list(csv.DictReader(lines))


def class_record(k: ExceptionClass, config_hash: str, seed: int) -> dict:
    rec = {
        "alpha": fmt_real(k.alpha),
        "omega": str(k.omega),
        "p_min": str(k.p_min),
        "log10_p_threshold": fmt_real(k.p_threshold.log10),
        "is_exception": k.is_exception,
        "mode": k.mode.value,
        "config_sha256": config_hash,
        "seed": str(seed),
    }
    if k.interval is not None:
        rec["interval"] = [str(k.interval[0]), str(k.interval[1])]
    return rec


def class_from_record(rec: dict) -> ExceptionClass:
    interval = rec.get("interval")
    return ExceptionClass(
        alpha=float(rec["alpha"]),
        omega=int(rec["omega"]),
        p_min=int(rec["p_min"]),
        p_threshold=LogReal.from_log10(float(rec["log10_p_threshold"])),
        is_exception=bool(rec["is_exception"]),
        mode=Mode(rec["mode"]),
        interval=None if interval is None else (int(interval[0]), int(interval[1])),
    )


def dumps_jsonl(records: Iterable[dict]) -> str:
    return "".join(json.dumps(r, sort_keys=True) + "\n" for r in records)


def loads_jsonl(text: str) -> list[dict]:
    return [json.loads(ln) for ln in text.splitlines() if ln.strip()]


def write_text(path: str | Path | None, text: str, stream: TextIO | None = None) -> None:
    """Write ``text`` to ``path``, or to ``stream`` when no path is given."""
    if path is None:
        if stream is not None:
            stream.write(text)
        return
    Path(path).write_text(text)
