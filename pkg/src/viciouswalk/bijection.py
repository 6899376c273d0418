"""Walker words <-> oscillating tableaux <-> two-line arrays <-> involutions.

Reading a word left to right, a right step at time ``i`` adds a box labelled
``i`` and a left step removes a box by reverse column insertion, recording
the pair ``(i, ejected)``.  For :class:`~viciouswalk.walks.ClassTwo` walker
``j`` owns column ``j`` of the diagram; for
:class:`~viciouswalk.walks.ClassOne` it owns row ``j``.  The recorded pairs
form a two-line array, i.e. a fixed-point-free involution, whose bottom line
has longest decreasing subsequence equal to the largest first-column length
seen along the way.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .tableaux import (
    NumberedDiagram,
    column_insert,
    lds,
    reverse_column_insert,
)
from .walks import (
    ClassOne,
    ClassTwo,
    ConfigClass,
    Direction,
    InvalidWordError,
    Letter,
    WalkerWord,
    WordErrorCode,
    validate_word,
)


class InvalidArrayError(ValueError):
    pass


@dataclass(frozen=True)
class TwoLineArray:
    top: tuple[int, ...]
    bottom: tuple[int, ...]

    def __post_init__(self):
        top = tuple(int(v) for v in self.top)
        bottom = tuple(int(v) for v in self.bottom)
        if len(top) != len(bottom):
            raise InvalidArrayError("top and bottom lines differ in length")
        if any(a >= b for a, b in zip(top, top[1:])):
            raise InvalidArrayError(f"top line {top} is not strictly increasing")
        if any(x >= i for i, x in zip(top, bottom)):
            raise InvalidArrayError("every bottom entry must be smaller than the top entry above it")
        values = top + bottom
        if len(set(values)) != len(values):
            raise InvalidArrayError("entries are not distinct")
        if values and set(values) != set(range(1, len(values) + 1)):
            raise InvalidArrayError(f"entries must be exactly 1..{len(values)}")
        object.__setattr__(self, "top", top)
        object.__setattr__(self, "bottom", bottom)

    @property
    def pairs(self) -> tuple[tuple[int, int], ...]:
        return tuple(zip(self.top, self.bottom))

    @property
    def N(self) -> int:
        return len(self.top)

    @classmethod
    def parse(cls, text: str) -> "TwoLineArray":
        """Parse ``"4 5 6 / 1 3 2"``."""
        try:
            upper, lower = text.split("/")
            return cls(tuple(map(int, upper.split())), tuple(map(int, lower.split())))
        except ValueError as exc:
            if isinstance(exc, InvalidArrayError):
                raise
            raise InvalidArrayError(f"cannot parse two-line array {text!r}") from None

    def __str__(self) -> str:
        return " ".join(map(str, self.top)) + " / " + " ".join(map(str, self.bottom))

    def to_json(self) -> dict:
        return {"top": list(self.top), "bottom": list(self.bottom)}

    @classmethod
    def from_json(cls, obj: dict) -> "TwoLineArray":
        return cls(tuple(obj["top"]), tuple(obj["bottom"]))


@dataclass(frozen=True)
class Involution:
    """Fixed-point-free involution of ``{1..2N}``; ``sigma[k - 1]`` is the image of ``k``."""

    sigma: tuple[int, ...]

    def __post_init__(self):
        sigma = tuple(int(v) for v in self.sigma)
        n = len(sigma)
        for k, s in enumerate(sigma, start=1):
            if not 1 <= s <= n:
                raise InvalidArrayError(f"sigma({k}) = {s} out of range")
            if s == k:
                raise InvalidArrayError(f"fixed point at {k}")
            if sigma[s - 1] != k:
                raise InvalidArrayError(f"sigma is not an involution at {k}")
        object.__setattr__(self, "sigma", sigma)

    def __call__(self, k: int) -> int:
        return self.sigma[k - 1]

    def __len__(self) -> int:
        return len(self.sigma)

    @property
    def word(self) -> tuple[int, ...]:
        return self.sigma

    def to_json(self) -> dict:
        return {"sigma": list(self.sigma)}


def _oscillate(w: WalkerWord, c: ConfigClass) -> tuple[list[NumberedDiagram], list[tuple[int, int]]]:
    by_rows = isinstance(c, ClassOne)
    d = NumberedDiagram.empty()
    steps = [d]
    pairs = []
    for i, (j, direction) in enumerate(w, start=1):
        cols = d.columns
        if direction is Direction.RIGHT:
            if by_rows:
                # row j grows by one box, in column len(row j) + 1
                col = sum(1 for cc in cols if len(cc) >= j)
            else:
                col = j - 1
            new = list(cols)
            if col == len(new):
                new.append(())
            new[col] = new[col] + (i,)
            d = NumberedDiagram(tuple(new))
        else:
            col = sum(1 for cc in cols if len(cc) >= j) if by_rows else j
            d, x = reverse_column_insert(d, col)
            pairs.append((i, x))
        steps.append(d)
    return steps, pairs


def tableau_sequence(w, c: ConfigClass) -> list[NumberedDiagram]:
    """The ``2N + 1`` numbered diagrams built while reading ``w``."""
    return _oscillate(validate_word(w, c), c)[0]


def walk_to_array(w, c: ConfigClass) -> TwoLineArray:
    w = validate_word(w, c)
    _, pairs = _oscillate(w, c)
    return TwoLineArray(tuple(i for i, _ in pairs), tuple(x for _, x in pairs))


def array_tableaux(a: TwoLineArray) -> list[NumberedDiagram]:
    """Rebuild the diagram sequence from the array by running it backwards.

    Going from step ``i`` to ``i - 1``: if ``i`` is a top entry, column insert
    its partner; otherwise delete the box labelled ``i``.
    """
    partner = dict(a.pairs)
    d = NumberedDiagram.empty()
    steps = [d]
    for i in range(2 * a.N, 0, -1):
        d = column_insert(d, partner[i]) if i in partner else d.remove_corner(i)
        steps.append(d)
    steps.reverse()
    return steps


def _read_word(steps: Sequence[NumberedDiagram], by_rows: bool) -> tuple[Letter, ...]:
    letters = []
    for before, after in zip(steps, steps[1:]):
        b = [len(col) for col in before.columns]
        a = [len(col) for col in after.columns]
        width = max(len(a), len(b))
        b += [0] * (width - len(b))
        a += [0] * (width - len(a))
        (col,) = [k for k in range(width) if a[k] != b[k]]
        grew = a[col] > b[col]
        row = max(a[col], b[col])  # row of the box that changed, 1-indexed
        j = row if by_rows else col + 1
        letters.append(Letter(j, Direction.RIGHT if grew else Direction.LEFT))
    return tuple(letters)


def array_to_walk(a: TwoLineArray, c: ConfigClass) -> WalkerWord:
    q = lds(a.bottom)
    if q > c.p:
        raise InvalidWordError(
            WordErrorCode.CLASS,
            f"bottom line has a decreasing subsequence of length {q} > p = {c.p}",
        )
    steps = array_tableaux(a)
    return validate_word(_read_word(steps, isinstance(c, ClassOne)), c)


def array_to_involution(a: TwoLineArray) -> Involution:
    sigma = [0] * (2 * a.N)
    for i, x in a.pairs:
        sigma[i - 1] = x
        sigma[x - 1] = i
    return Involution(tuple(sigma))


def involution_to_array(s: Involution) -> TwoLineArray:
    if not isinstance(s, Involution):
        s = Involution(tuple(s))
    top = tuple(k for k in range(1, len(s) + 1) if s(k) < k)
    return TwoLineArray(top, tuple(s(k) for k in top))


def lds_involution(s: Involution) -> int:
    """Longest decreasing subsequence of ``(sigma(1), ..., sigma(2N))``."""
    return lds(s.sigma if isinstance(s, Involution) else s)


def max_first_column(steps: Sequence[NumberedDiagram]) -> int:
    return max((len(d.columns[0]) if d.columns else 0) for d in steps)


def class_two_walk(s: Involution, p: int | None = None) -> WalkerWord:
    """Shortcut: the :class:`ClassTwo` word of an involution, with the
    loosest class bound unless ``p`` is given."""
    a = involution_to_array(s)
    return array_to_walk(a, ClassTwo(p if p is not None else max(a.N, 1)))
