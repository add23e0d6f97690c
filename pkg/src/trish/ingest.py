"""Strict LIBSVM-format ingestion.

One example per line: `<label> <index>:<value> ...` with 1-based,
strictly increasing indices.  Blank lines and lines whose first
non-space character is '#' are skipped.  Anything else malformed raises
ParseError carrying the exact line:column position; silent repairs
(duplicate indices, reordered indices, non-finite values) are refused
on purpose, since they usually mean the file is not what the user
thinks it is.

Parsing streams line by line, so memory is one line plus the
accumulated rows, and time is linear in the input size.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator

import numpy as np
import scipy.sparse as sp

__all__ = [
    "ParseError",
    "SparseRow",
    "DatasetStats",
    "parse_libsvm",
    "load_libsvm",
    "serialize_libsvm",
    "dataset_stats",
    "to_matrix",
]

_TOKEN = re.compile(r"\S+")
_INDEX = re.compile(r"[0-9]+\Z")


class ParseError(ValueError):
    """Malformed LIBSVM input; str() renders as 'line:column: reason'."""

    def __init__(self, line: int, column: int, reason: str):
        super().__init__(f"{line}:{column}: {reason}")
        self.line = line
        self.column = column
        self.reason = reason
        self.path: str | None = None  # filled in when parsing from disk


@dataclass(eq=False)
class SparseRow:
    """One parsed example: label plus aligned index/value arrays (1-based)."""

    label: float
    indices: np.ndarray
    values: np.ndarray

    def __post_init__(self) -> None:
        self.indices = np.asarray(self.indices, dtype=np.int64)
        self.values = np.asarray(self.values, dtype=float)
        if self.indices.shape != self.values.shape or self.indices.ndim != 1:
            raise ValueError("indices and values must be aligned 1-d arrays")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SparseRow):
            return NotImplemented
        return (
            self.label == other.label
            and np.array_equal(self.indices, other.indices)
            and np.array_equal(self.values, other.values)
        )


def _parse_float(token: str, lineno: int, column: int, what: str) -> float:
    # float() tolerates '1_0' and 'nan'; neither belongs in a data file.
    if "_" in token:
        raise ParseError(lineno, column, f"malformed {what} '{token}'")
    try:
        value = float(token)
    except ValueError:
        raise ParseError(lineno, column, f"malformed {what} '{token}'") from None
    if not np.isfinite(value):
        raise ParseError(lineno, column, f"non-finite {what} '{token}'")
    return value


def parse_libsvm(lines: Iterable[str]) -> tuple[list[SparseRow], int]:
    """Parse an iterable of text lines; returns (rows, max_index).

    max_index is the largest feature index seen anywhere, 0 for an empty
    dataset.  The caller chooses the feature dimension; when a dataset
    has train and test splits, take the max over both so the two agree.
    """
    rows: list[SparseRow] = []
    max_index = 0
    for lineno, line in enumerate(lines, start=1):
        tokens = _TOKEN.finditer(line)
        first = next(tokens, None)
        if first is None or first.group().startswith("#"):
            continue
        label = _parse_float(first.group(), lineno, first.start() + 1, "label")
        indices: list[int] = []
        values: list[float] = []
        prev = 0
        for tok in tokens:
            column = tok.start() + 1
            head, sep, tail = tok.group().partition(":")
            if not sep or not head or not tail:
                raise ParseError(
                    lineno, column, f"malformed index:value pair '{tok.group()}'"
                )
            if not _INDEX.match(head):
                raise ParseError(lineno, column, f"malformed index '{head}'")
            index = int(head)
            if index < 1:
                raise ParseError(lineno, column, f"index {index} below 1")
            if index == prev:
                raise ParseError(lineno, column, f"duplicate index {index}")
            if index < prev:
                raise ParseError(
                    lineno, column, f"non-increasing index {index} after {prev}"
                )
            value = _parse_float(tail, lineno, column + len(head) + 1, "value")
            indices.append(index)
            values.append(value)
            prev = index
        if prev > max_index:
            max_index = prev
        rows.append(
            SparseRow(
                label=label,
                indices=np.asarray(indices, dtype=np.int64),
                values=np.asarray(values, dtype=float),
            )
        )
    return rows, max_index


def load_libsvm(path: str) -> tuple[list[SparseRow], int]:
    """parse_libsvm over a file on disk; parse errors carry the path."""
    with open(path, "r", encoding="utf-8") as handle:
        try:
            return parse_libsvm(handle)
        except ParseError as exc:
            exc.path = path
            raise


def serialize_libsvm(rows: Iterable[SparseRow]) -> str:
    """Canonical text form: single spaces, shortest round-trip floats.

    parse_libsvm(serialize_libsvm(rows)) reproduces rows exactly, and
    serializing again yields byte-identical text.
    """
    out: list[str] = []
    for row in rows:
        parts = [repr(float(row.label))]
        parts.extend(
            f"{int(i)}:{repr(float(v))}" for i, v in zip(row.indices, row.values)
        )
        out.append(" ".join(parts))
    return "\n".join(out) + ("\n" if out else "")


@dataclass(frozen=True)
class DatasetStats:
    """Row count, largest index, stored entries, and fraction of positive labels."""

    count: int
    max_index: int
    nnz: int
    label_balance: float

    def as_dict(self) -> dict:
        return {
            "count": self.count,
            "max_index": self.max_index,
            "nnz": self.nnz,
            "label_balance": self.label_balance,
        }


def dataset_stats(rows: list[SparseRow]) -> DatasetStats:
    """Summary statistics; an empty dataset reports zeros across the board."""
    if not rows:
        return DatasetStats(count=0, max_index=0, nnz=0, label_balance=0.0)
    max_index = max((int(r.indices[-1]) for r in rows if r.indices.size), default=0)
    nnz = sum(r.indices.size for r in rows)
    positive = sum(1 for r in rows if r.label > 0)
    return DatasetStats(
        count=len(rows),
        max_index=max_index,
        nnz=nnz,
        label_balance=positive / len(rows),
    )


def to_matrix(rows: list[SparseRow], dimension: int) -> tuple[sp.csr_matrix, np.ndarray]:
    """Assemble rows into a CSR matrix of the given width plus a label vector.

    dimension must cover every stored index; rows are emitted in order,
    and 1-based file indices become 0-based columns.
    """
    stats_max = max((int(r.indices[-1]) for r in rows if r.indices.size), default=0)
    if dimension < max(stats_max, 1):
        raise ValueError(f"dimension {dimension} below largest index {stats_max}")
    indptr = np.zeros(len(rows) + 1, dtype=np.int64)
    for i, row in enumerate(rows):
        indptr[i + 1] = indptr[i] + row.indices.size
    indices = np.concatenate([r.indices for r in rows]) - 1 if rows else np.empty(0, np.int64)
    data = np.concatenate([r.values for r in rows]) if rows else np.empty(0, float)
    labels = np.asarray([r.label for r in rows], dtype=float)
    matrix = sp.csr_matrix((data, indices, indptr), shape=(len(rows), dimension))
    return matrix, labels
