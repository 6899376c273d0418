"""Partitions, numbered diagrams and Schensted column insertion.

Diagrams are stored column-major: ``columns[c]`` holds the labels of column
``c + 1`` read top to bottom.  Column insertion and its inverse only ever
touch columns, so this keeps both operations a sequence of bisections.
Public coordinates are ``(row, column)``, 1-indexed.
"""
from __future__ import annotations

from bisect import bisect_left, bisect_right
from dataclasses import dataclass
from typing import Iterable, Sequence


class TableauError(ValueError):
    """Invalid diagram, label or removal request."""


@dataclass(frozen=True)
class Partition:
    """Weakly decreasing row lengths with trailing zeros dropped."""

    parts: tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(int(x) for x in self.parts)
        if any(x < 0 for x in parts):
            raise TableauError(f"negative part in {parts}")
        if any(parts[k] < parts[k + 1] for k in range(len(parts) - 1)):
            raise TableauError(f"partition {parts} is not weakly decreasing")
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        object.__setattr__(self, "parts", parts)

    @classmethod
    def from_columns(cls, col_lengths: Iterable[int]) -> "Partition":
        """Build the partition whose column ``j`` has length ``col_lengths[j]``."""
        cols = [c for c in col_lengths if c > 0]
        if any(cols[k] < cols[k + 1] for k in range(len(cols) - 1)):
            raise TableauError(f"column lengths {tuple(cols)} are not weakly decreasing")
        return cls(tuple(sum(1 for c in cols if c > r) for r in range(cols[0] if cols else 0)))

    def conjugate(self) -> "Partition":
        return Partition.from_columns(self.parts)

    @property
    def size(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.parts)) + ")" if self.parts else "()"


@dataclass(frozen=True)
class NumberedDiagram:
    """A partition diagram with distinct labels increasing along rows and columns."""

    columns: tuple[tuple[int, ...], ...] = ()

    def __post_init__(self):
        cols = tuple(tuple(int(v) for v in col) for col in self.columns)
        while cols and not cols[-1]:
            cols = cols[:-1]
        seen = set()
        for c, col in enumerate(cols):
            if not col:
                raise TableauError(f"empty column {c + 1} before a non-empty one")
            if c and len(col) > len(cols[c - 1]):
                raise TableauError("column lengths must be weakly decreasing")
            for r, v in enumerate(col):
                if v < 1:
                    raise TableauError(f"label {v} is not a positive integer")
                if v in seen:
                    raise TableauError(f"duplicate label {v}")
                seen.add(v)
                if r and col[r - 1] >= v:
                    raise TableauError(f"labels not increasing down column {c + 1}")
                if c and cols[c - 1][r] >= v:
                    raise TableauError(f"labels not increasing along row {r + 1}")
        object.__setattr__(self, "columns", cols)

    @classmethod
    def empty(cls) -> "NumberedDiagram":
        return cls(())

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "NumberedDiagram":
        Partition(tuple(len(r) for r in rows))  # rows must be weakly decreasing
        ncols = len(rows[0]) if rows else 0
        return cls(tuple(tuple(row[c] for row in rows if len(row) > c) for c in range(ncols)))

    @property
    def rows(self) -> tuple[tuple[int, ...], ...]:
        nrows = len(self.columns[0]) if self.columns else 0
        return tuple(tuple(col[r] for col in self.columns if len(col) > r) for r in range(nrows))

    @property
    def shape(self) -> Partition:
        return Partition.from_columns(len(c) for c in self.columns)

    @property
    def labels(self) -> dict[tuple[int, int], int]:
        return {(r + 1, c + 1): v for c, col in enumerate(self.columns) for r, v in enumerate(col)}

    def __len__(self) -> int:
        return sum(len(c) for c in self.columns)

    def __contains__(self, label: int) -> bool:
        return any(label in col for col in self.columns)

    def position(self, label: int) -> tuple[int, int]:
        for c, col in enumerate(self.columns):
            i = bisect_left(col, label)
            if i < len(col) and col[i] == label:
                return i + 1, c + 1
        raise TableauError(f"label {label} not in diagram")

    def remove_corner(self, label: int) -> "NumberedDiagram":
        """Delete the box carrying ``label``; it must be a removable corner."""
        r, c = self.position(label)
        cols = list(self.columns)
        if r != len(cols[c - 1]) or (c < len(cols) and len(cols[c]) >= r):
            raise TableauError(f"box ({r},{c}) holding {label} is not a corner")
        cols[c - 1] = cols[c - 1][:-1]
        return NumberedDiagram(tuple(cols))

    def to_json(self) -> dict:
        return {
            "shape": list(self.shape.parts),
            "labels": [[r, c, v] for (r, c), v in sorted(self.labels.items())],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "NumberedDiagram":
        shape = Partition(tuple(obj["shape"]))
        grid = {(r, c): v for r, c, v in obj["labels"]}
        expected = {(r + 1, c + 1) for r, n in enumerate(shape.parts) for c in range(n)}
        if set(grid) != expected:
            raise TableauError("labelled boxes do not match the shape")
        return cls.from_rows([[grid[r + 1, c + 1] for c in range(n)] for r, n in enumerate(shape.parts)])

    def __str__(self) -> str:
        if not self.columns:
            return "∅"
        width = max(len(str(v)) for col in self.columns for v in col)
        return "\n".join(" ".join(str(v).rjust(width) for v in row) for row in self.rows)


def _insert(columns: tuple[tuple[int, ...], ...], v: int) -> tuple[tuple[tuple[int, ...], ...], int]:
    cols = list(columns)
    c = 0
    while True:
        if c == len(cols):
            cols.append((v,))
            return tuple(cols), c + 1
        col = cols[c]
        i = bisect_right(col, v)
        if i == len(col):
            cols[c] = col + (v,)
            return tuple(cols), c + 1
        cols[c] = col[:i] + (v,) + col[i + 1:]
        v = col[i]
        c += 1


def column_insert(d: NumberedDiagram, v: int) -> NumberedDiagram:
    """Schensted column insertion of ``v`` into ``d``.

    ``v`` replaces the smallest entry of column 1 exceeding it, and the
    displaced entry is inserted into column 2 in the same way; an entry larger
    than everything in its column is appended at the bottom.
    """
    return column_insert_path(d, v)[0]


def column_insert_path(d: NumberedDiagram, v: int) -> tuple[NumberedDiagram, int]:
    """Like :func:`column_insert`, also returning the column where the new box landed."""
    v = int(v)
    if v < 1:
        raise TableauError(f"label {v} is not a positive integer")
    if v in d:
        raise TableauError(f"label {v} already present")
    cols, end = _insert(d.columns, v)
    return NumberedDiagram(cols), end


def reverse_column_insert(d: NumberedDiagram, j: int) -> tuple[NumberedDiagram, int]:
    """Remove the bottom box of column ``j`` and reverse-bump it out of column 1.

    Returns the reduced diagram and the ejected label.  Column-inserting the
    ejected label into the result restores ``d``.
    """
    cols = list(d.columns)
    if not 1 <= j <= len(cols):
        raise TableauError(f"column {j} is empty")
    if j < len(cols) and len(cols[j]) == len(cols[j - 1]):
        raise TableauError(f"bottom box of column {j} is not removable")
    y = cols[j - 1][-1]
    cols[j - 1] = cols[j - 1][:-1]
    for c in range(j - 2, -1, -1):
        col = cols[c]
        i = bisect_left(col, y) - 1
        cols[c] = col[:i] + (y,) + col[i + 1:]
        y = col[i]
    return NumberedDiagram(tuple(cols)), y


def lds(seq: Sequence[int]) -> int:
    """Length of the longest strictly decreasing subsequence, O(n log n)."""
    seq = list(seq)
    if len(set(seq)) != len(seq):
        raise TableauError("lds requires distinct entries")
    # tails[k] = largest possible last element of a decreasing run of length
    # k+1, stored negated so the list stays increasing
    tails: list[int] = []
    for v in seq:
        i = bisect_left(tails, -v)
        if i == len(tails):
            tails.append(-v)
        else:
            tails[i] = -v
    return len(tails)

