import csv
import io
import math
from pathlib import Path
from typing import Iterable, List, Sequence, Union

from app.constants.trajectory import CSV_SIGNIFICANT_DIGITS
from app.exceptions.config_exceptions import SchemaMismatchError


def format_real(value: float) -> str:
    """17 significant digits, '.' decimal point regardless of locale."""
    if math.isnan(value):
        return "nan"
    if math.isinf(value):
        return "inf" if value > 0 else "-inf"
    return format(value, f".{CSV_SIGNIFICANT_DIGITS}g")


def format_cell(value: object) -> str:
    if isinstance(value, bool):
        return str(value).lower()
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        return format_real(value)
    return str(value)


def format_row(values: Iterable[object]) -> str:
    return ",".join(format_cell(v) for v in values)


def read_table(path: Union[str, Path], header: Sequence[str]) -> List[dict]:
    """Rows of a CSV file whose first line must equal `header` exactly."""
    text = Path(path).read_text(encoding="utf-8")
    reader = csv.reader(io.StringIO(text))
    try:
        found = next(reader)
    except StopIteration:
        raise SchemaMismatchError(f"{path} is empty")
    if tuple(found) != tuple(header):
        raise SchemaMismatchError(
            f"{path}: expected header {','.join(header)!r}, got {','.join(found)!r}"
        )
    rows = []
    for number, row in enumerate(reader, start=2):
        if not row:
            continue
        if len(row) != len(header):
            raise SchemaMismatchError(f"{path}:{number}: expected {len(header)} columns")
        rows.append(dict(zip(header, row)))
    return rows
