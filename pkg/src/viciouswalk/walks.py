"""Walker words for vicious walkers on the half line.

A configuration of ``2N`` single-walker moves is written as a word in the
letters ``j`` (walker ``j`` steps right) and ``j~`` (walker ``j`` steps left).
Walkers are numbered from the right, so walker 1 is the rightmost one.  With
``n_j`` the net number of right steps of walker ``j`` so far, a word is legal
when ``n_1 >= n_2 >= ... >= 0`` after every prefix and all ``n_j`` vanish at
the end.

Two configuration classes are supported:

* :class:`ClassOne` -- exactly ``p`` walkers, so only letters ``1..p`` occur.
* :class:`ClassTwo` -- arbitrarily many walkers, but the rightmost one never
  gets more than ``p`` sites away from its starting point.
"""
from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple, Sequence

from .tableaux import Partition


class Direction(enum.Enum):
    RIGHT = "R"
    LEFT = "L"


class Letter(NamedTuple):
    walker: int
    direction: Direction

    @property
    def is_right(self) -> bool:
        return self.direction is Direction.RIGHT

    def __str__(self) -> str:
        return f"{self.walker}" if self.is_right else f"{self.walker}~"


def R(j: int) -> Letter:
    return Letter(j, Direction.RIGHT)


def L(j: int) -> Letter:
    return Letter(j, Direction.LEFT)


class WordErrorCode(enum.Enum):
    ORDERING = "ordering"            # n_j > n_{j-1} at some prefix
    NEGATIVE = "negative"            # n_j < 0 at some prefix
    NONZERO_FINAL = "nonzero-final"  # some n_j != 0 after the last step
    CLASS = "class-constraint"       # walker index > p, or displacement > p
    SYNTAX = "syntax"


class InvalidWordError(ValueError):
    def __init__(self, code: WordErrorCode, message: str, position: int | None = None):
        super().__init__(f"[{code.value}] {message}")
        self.code = code
        self.position = position


@dataclass(frozen=True)
class ConfigClass:
    p: int

    def __post_init__(self):
        if int(self.p) < 1:
            raise ValueError(f"class parameter p must be >= 1, got {self.p}")

    @property
    def name(self) -> str:
        raise NotImplementedError


@dataclass(frozen=True)
class ClassOne(ConfigClass):
    """Exactly ``p`` walkers starting on sites ``1..p``."""

    @property
    def name(self) -> str:
        return "one"


@dataclass(frozen=True)
class ClassTwo(ConfigClass):
    """Rightmost walker displaced by at most ``p`` sites."""

    @property
    def name(self) -> str:
        return "two"


def config_class(name: str, p: int) -> ConfigClass:
    key = str(name).lower()
    if key in ("one", "1", "i"):
        return ClassOne(p)
    if key in ("two", "2", "ii"):
        return ClassTwo(p)
    raise ValueError(f"unknown configuration class {name!r}")


@dataclass(frozen=True)
class WalkerWord:
    letters: tuple[Letter, ...] = ()

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[Letter]:
        return iter(self.letters)

    def __getitem__(self, i):
        return self.letters[i]

    @property
    def N(self) -> int:
        return len(self.letters) // 2

    def __str__(self) -> str:
        return format_word(self.letters)

    def to_json(self) -> list:
        return [[l.walker, l.direction.value] for l in self.letters]


_TOKEN = re.compile(r"^(\d+)(~|̄|')?$")


def parse_word(text: str) -> tuple[Letter, ...]:
    """Parse ``"1 2 1 2~ 1~ 1~"``; ``j~``, ``j'`` and ``j̄`` all denote a left step."""
    letters = []
    for tok in text.split():
        m = _TOKEN.match(tok)
        if not m or int(m.group(1)) < 1:
            raise InvalidWordError(WordErrorCode.SYNTAX, f"bad letter {tok!r}")
        letters.append(Letter(int(m.group(1)), Direction.LEFT if m.group(2) else Direction.RIGHT))
    return tuple(letters)


def format_word(letters: Iterable[Letter]) -> str:
    return " ".join(str(l) for l in letters)


def word_from_json(obj: Sequence) -> tuple[Letter, ...]:
    try:
        return tuple(Letter(int(j), Direction(d)) for j, d in obj)
    except (TypeError, ValueError) as exc:
        raise InvalidWordError(WordErrorCode.SYNTAX, f"bad JSON word: {exc}") from None


def _as_letters(w) -> tuple[Letter, ...]:
    if isinstance(w, WalkerWord):
        return w.letters
    if isinstance(w, str):
        return parse_word(w)
    return tuple(Letter(int(l[0]), Direction(l[1])) for l in w)


def validate_word(w, c: ConfigClass) -> WalkerWord:
    """Check the ordering constraint at every prefix, the return to the
    origin, and the class constraint; return the word as a :class:`WalkerWord`.
    """
    letters = _as_letters(w)
    n: dict[int, int] = {}
    n1_max = 0
    for t, (j, direction) in enumerate(letters, start=1):
        if j < 1:
            raise InvalidWordError(WordErrorCode.SYNTAX, f"walker index {j} < 1", t)
        if isinstance(c, ClassOne) and j > c.p:
            raise InvalidWordError(
                WordErrorCode.CLASS, f"walker {j} used at t={t} but only {c.p} walkers exist", t)
        nj = n.get(j, 0)
        if direction is Direction.RIGHT:
            nj += 1
            if j > 1 and nj > n.get(j - 1, 0):
                raise InvalidWordError(
                    WordErrorCode.ORDERING, f"n_{j} exceeds n_{j - 1} after t={t}", t)
        else:
            nj -= 1
            if nj < 0:
                raise InvalidWordError(WordErrorCode.NEGATIVE, f"n_{j} < 0 after t={t}", t)
            if nj < n.get(j + 1, 0):
                raise InvalidWordError(
                    WordErrorCode.ORDERING, f"n_{j + 1} exceeds n_{j} after t={t}", t)
        n[j] = nj
        if j == 1:
            n1_max = max(n1_max, nj)
            if isinstance(c, ClassTwo) and n1_max > c.p:
                raise InvalidWordError(
                    WordErrorCode.CLASS, f"rightmost walker displaced by {n1_max} > {c.p} at t={t}", t)
    left = {j: v for j, v in n.items() if v}
    if left:
        raise InvalidWordError(WordErrorCode.NONZERO_FINAL, f"walkers not back home: {left}")
    return WalkerWord(letters)


def _counts(letters: Iterable[Letter]) -> Iterator[list[int]]:
    n: list[int] = []
    yield []
    for j, direction in letters:
        while len(n) < j:
            n.append(0)
        n[j - 1] += 1 if direction is Direction.RIGHT else -1
        while n and n[-1] == 0:
            n.pop()
        yield list(n)


def word_to_shape_sequence(w: WalkerWord, c: ConfigClass) -> list[Partition]:
    """The ``2N + 1`` diagrams coding the walk.

    For :class:`ClassTwo` column ``j`` has length ``n_j``; for
    :class:`ClassOne` row ``j`` does.
    """
    w = validate_word(w, c)
    if isinstance(c, ClassTwo):
        return [Partition.from_columns(n) for n in _counts(w)]
    return [Partition(tuple(n)) for n in _counts(w)]


def max_displacement(w: WalkerWord) -> int:
    """Largest excursion of the rightmost walker, ``max_t n_1(t)``."""
    best = n1 = 0
    for j, direction in _as_letters(w):
        if j == 1:
            n1 += 1 if direction is Direction.RIGHT else -1
            best = max(best, n1)
    return best


def enumerate_words(N: int, c: ConfigClass) -> Iterator[WalkerWord]:
    """Yield every legal word of length ``2N`` in ``c`` once.

    Depth-first in lexicographic order of ``(walker, direction)`` with right
    steps before left steps.  Branches are cut as soon as the remaining steps
    cannot bring every walker home.
    """
    total = 2 * N
    if N < 0:
        raise ValueError("N must be non-negative")
    max_walker = c.p if isinstance(c, ClassOne) else N
    cap1 = c.p if isinstance(c, ClassTwo) else N
    n = [0] * (max_walker + 2)  # n[0] is a sentinel of +inf, n[-1] stays 0
    n[0] = total + 1
    prefix: list[Letter] = []

    def rec(t: int, outstanding: int):
        if t == total:
            yield WalkerWord(tuple(prefix))
            return
        remaining = total - t
        for j in range(1, max_walker + 1):
            # right step: needs n_j < n_{j-1} and room to come back
            if n[j] < n[j - 1] and outstanding + 1 <= remaining - 1 and (j > 1 or n[1] < cap1):
                n[j] += 1
                prefix.append(Letter(j, Direction.RIGHT))
                yield from rec(t + 1, outstanding + 1)
                prefix.pop()
                n[j] -= 1
            if n[j] > n[j + 1]:
                n[j] -= 1
                prefix.append(Letter(j, Direction.LEFT))
                yield from rec(t + 1, outstanding - 1)
                prefix.pop()
                n[j] += 1
            if n[j] == 0:
                break  # walkers further left cannot have moved yet

    yield from rec(0, 0)
