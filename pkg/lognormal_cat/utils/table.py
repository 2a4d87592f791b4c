"""
Long-format CSV ingestion: header `group,value`, one observation per row.
"""
import csv
import io
import logging
import math
from dataclasses import dataclass, field
from pathlib import Path

from lognormal_cat.errors import InvalidTable, NonPositiveObservation, TooFewGroups, TooFewObservations
from lognormal_cat.estimation.groups import MIN_GROUP_SIZE, make_group_sample
from lognormal_cat.models.samples import GroupSample

logger = logging.getLogger(__name__)

HEADER = ["group", "value"]


@dataclass
class InputTable:
    """Observations keyed by group label, in order of first appearance."""

    groups: dict[str, list[float]] = field(default_factory=dict)

    @property
    def labels(self) -> list[str]:
        return list(self.groups)

    def to_samples(self) -> list[GroupSample]:
        return [make_group_sample(values) for values in self.groups.values()]


def parse_table(text: str) -> InputTable:
    if text.startswith("\ufeff"):
        text = text[1:]
    reader = csv.reader(io.StringIO(text))
    table = InputTable()

    header = next(reader, None)
    if header is None:
        raise InvalidTable("line 1: input is empty; expected header 'group,value'")
    if [h.strip().lower() for h in header] != HEADER:
        raise InvalidTable(f"line 1: expected header 'group,value', got {','.join(header)!r}")

    for row in reader:
        line = reader.line_num
        if not row or all(not cell.strip() for cell in row):
            continue
        if len(row) != 2:
            raise InvalidTable(f"line {line}: expected 2 columns, got {len(row)}")
        label, raw = row[0].strip(), row[1].strip()
        if not label:
            raise InvalidTable(f"line {line}: empty group label")
        try:
            value = float(raw)
        except ValueError:
            raise InvalidTable(f"line {line}: value {raw!r} is not a number")
        if not (math.isfinite(value) and value > 0):
            raise NonPositiveObservation(f"line {line}: value {raw} must be a finite number > 0")
        table.groups.setdefault(label, []).append(value)

    if len(table.groups) < 2:
        raise TooFewGroups(f"need at least 2 distinct groups, found {len(table.groups)}")
    for label, values in table.groups.items():
        if len(values) < MIN_GROUP_SIZE:
            raise TooFewObservations(
                f"group {label!r} has {len(values)} row(s); at least {MIN_GROUP_SIZE} required"
            )
    logger.info("Parsed %d groups: %s", len(table.groups),
                {label: len(values) for label, values in table.groups.items()})
    return table


def load_table(path: str | Path) -> InputTable:
    path = Path(path)
    try:
        text = path.read_text("utf-8")
    except FileNotFoundError:
        raise InvalidTable(f"input file not found: {path}")
    except UnicodeDecodeError as exc:
        raise InvalidTable(f"{path}: not valid UTF-8 ({exc.reason})")
    except OSError as exc:
        raise InvalidTable(f"cannot read input file {path}: {exc.strerror}")
    return parse_table(text)
