"""Braid words, their parser, and combinatorial statistics of their closures.

A braid word on ``strands`` strands is a sequence of nonzero integers; the
letter ``i`` stands for the generator sigma_|i|, positive when ``i > 0`` and
inverse when ``i < 0``. Words are read left to right, bottom to top.

Convention for pictures: a positive letter sigma_i is the crossing in which
the strand at position i passes over the strand at position i+1 while moving
up and to the right. Every statement about A/B smoothings in
:mod:`braidwidth.smoothing` is made relative to this convention.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .errors import BraidError, NotPositiveError, ParseError

__all__ = [
    "BraidWord",
    "Permutation",
    "WordStats",
    "parse_word",
    "render",
    "stats",
    "permutation",
    "components",
    "positive_genus",
    "crossing_number_if_minimal_braid_index",
    "torus_word",
    "twist_regions",
]


@dataclass(frozen=True)
class BraidWord:
    strands: int
    letters: tuple[int, ...]

    def __post_init__(self):
        if self.strands < 1:
            raise BraidError(f"strand count must be at least 1, got {self.strands}")
        object.__setattr__(self, "letters", tuple(int(x) for x in self.letters))
        for x in self.letters:
            if x == 0 or abs(x) > self.strands - 1:
                raise BraidError(
                    f"generator {x} out of range for {self.strands} strands"
                )

    @classmethod
    def from_letters(cls, letters: Iterable[int], strands: int | None = None) -> BraidWord:
        letters = tuple(letters)
        if strands is None:
            strands = 1 + max((abs(x) for x in letters), default=0)
        return cls(strands, letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __mul__(self, other: BraidWord) -> BraidWord:
        if not isinstance(other, BraidWord):
            return NotImplemented
        if other.strands != self.strands:
            raise BraidError("cannot multiply words on different strand counts")
        return BraidWord(self.strands, self.letters + other.letters)

    def __pow__(self, k: int) -> BraidWord:
        if k < 0:
            return self.inverse() ** (-k)
        return BraidWord(self.strands, self.letters * k)

    def __str__(self) -> str:
        return render(self)

    def inverse(self) -> BraidWord:
        return BraidWord(self.strands, tuple(-x for x in reversed(self.letters)))

    def rotate(self, k: int) -> BraidWord:
        """Cyclic rotation (a conjugation, so the closure is unchanged)."""
        if not self.letters:
            return self
        k %= len(self.letters)
        return BraidWord(self.strands, self.letters[k:] + self.letters[:k])

    def is_positive(self) -> bool:
        return all(x > 0 for x in self.letters)

    def with_strands(self, strands: int) -> BraidWord:
        return BraidWord(strands, self.letters)


@dataclass(frozen=True)
class Permutation:
    """Underlying permutation of a braid, 1-indexed.

    ``images[j - 1]`` is the top position reached by the strand that starts
    at bottom position ``j``.
    """

    images: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise BraidError(f"not a permutation: {self.images}")

    def cycles(self) -> list[tuple[int, ...]]:
        seen = set()
        out = []
        for start in range(1, len(self.images) + 1):
            if start in seen:
                continue
            cycle = []
            j = start
            while j not in seen:
                seen.add(j)
                cycle.append(j)
                j = self.images[j - 1]
            out.append(tuple(cycle))
        return out


@dataclass(frozen=True)
class WordStats:
    crossing_count: int
    odd_letters: int
    even_letters: int
    twist_regions: int
    exponent_sum: int


# -- parsing ---------------------------------------------------------------


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def integer(self, signed: bool) -> int:
        self.skip()
        start = self.pos
        if signed and self.text.startswith("-", self.pos):
            self.pos += 1
        digits = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == digits:
            raise ParseError("expected an integer", self.pos)
        return int(self.text[start:self.pos])

    def word(self, nested: bool) -> list[int]:
        out: list[int] = []
        while True:
            c = self.peek()
            if c == "" or (c == ")" and nested):
                break
            out.extend(self.term())
        return out

    def term(self) -> list[int]:
        letters = self.atom()
        if self.peek() == "^":
            self.pos += 1
            k = self.integer(signed=True)
            if k < 0:
                letters = [-x for x in reversed(letters)]
                k = -k
            letters = letters * k
        return letters

    def atom(self) -> list[int]:
        c = self.peek()
        start = self.pos
        if c == "(":
            self.pos += 1
            inner = self.word(nested=True)
            if self.peek() != ")":
                raise ParseError("unbalanced parenthesis", start)
            self.pos += 1
            if not inner:
                raise ParseError("empty group", start)
            return inner
        numeric_s = c == "s" and self.text[self.pos + 1:self.pos + 2].isdigit()
        if "a" <= c <= "y" and not numeric_s:
            self.pos += 1
            return [ord(c) - ord("a") + 1]
        sign = 1
        if c == "-":
            sign = -1
            self.pos += 1
        if self.pos < len(self.text) and self.text[self.pos] == "s":
            self.pos += 1
        if not (self.pos < len(self.text) and self.text[self.pos].isdigit()):
            raise ParseError(f"unexpected character {self.text[start:start + 1]!r}", start)
        index = self.integer(signed=False)
        if index == 0:
            raise ParseError("generator index must be at least 1", start)
        return [sign * index]


def parse_word(text: str, strands: int | None = None) -> BraidWord:
    """Parse a braid word.

    Accepts alphabetic letters (``"abcde"``, ``a`` = sigma_1) and numeric
    letters (``"s1 s2 -s3"`` or ``"1 2 -3"``), with ``^k`` powers and
    parenthesized groups, e.g. ``"(s1 s2 s3 s3 s2 s1)^3"``. A negative power
    inverts the group. If ``strands`` is omitted it is one more than the
    largest generator index used.
    """
    p = _Parser(text)
    letters = p.word(nested=False)
    if p.peek() == ")":
        raise ParseError("unbalanced parenthesis", p.pos)
    if strands is None:
        strands = 1 + max((abs(x) for x in letters), default=0)
    for x in letters:
        if abs(x) > strands - 1:
            raise BraidError(
                f"generator index {abs(x)} exceeds strands-1 = {strands - 1}"
            )
    return BraidWord(strands, tuple(letters))


def render(word: BraidWord) -> str:
    return " ".join(f"s{x}" if x > 0 else f"-s{-x}" for x in word.letters)


# -- statistics --------------------------------------------------------------


def twist_regions(word: BraidWord) -> list[tuple[int, int]]:
    """Maximal blocks ``(letter, length)`` of the cyclic word.

    When the first and last blocks carry the same letter they are one region
    of the closed braid and are merged.
    """
    blocks: list[list[int]] = []
    for x in word.letters:
        if blocks and blocks[-1][0] == x:
            blocks[-1][1] += 1
        else:
            blocks.append([x, 1])
    if len(blocks) > 1 and blocks[0][0] == blocks[-1][0]:
        blocks[0][1] += blocks.pop()[1]
    return [(x, k) for x, k in blocks]


def stats(word: BraidWord) -> WordStats:
    odd = sum(1 for x in word.letters if abs(x) % 2 == 1)
    return WordStats(
        crossing_count=len(word),
        odd_letters=odd,
        even_letters=len(word) - odd,
        twist_regions=len(twist_regions(word)),
        exponent_sum=sum(1 if x > 0 else -1 for x in word.letters),
    )


def permutation(word: BraidWord) -> Permutation:
    # strand_at[pos] = which starting strand currently occupies pos
    strand_at = list(range(word.strands))
    for x in word.letters:
        i = abs(x) - 1
        strand_at[i], strand_at[i + 1] = strand_at[i + 1], strand_at[i]
    images = [0] * word.strands
    for pos, s in enumerate(strand_at):
        images[s] = pos + 1
    return Permutation(tuple(images))


def components(word: BraidWord) -> int:
    """Number of components of the closure."""
    return len(permutation(word).cycles())


def _require_positive(word: BraidWord) -> None:
    if not word.is_positive():
        raise NotPositiveError(f"expected a positive braid word, got {render(word)!r}")


def positive_genus(word: BraidWord) -> Fraction:
    """Genus of the canonical Seifert surface of a positive braid closure.

    The Euler characteristic is ``strands - crossings``; for positive braids
    this surface realises the minimal genus of the closure.
    """
    _require_positive(word)
    chi = word.strands - len(word)
    return Fraction(2 - components(word) - chi, 2)


def crossing_number_if_minimal_braid_index(word: BraidWord) -> int:
    """Crossing number of the closure of a positive word.

    Only valid when the closure has braid index equal to ``word.strands``;
    that precondition is the caller's responsibility and is not checked.
    """
    _require_positive(word)
    return len(word)


def torus_word(p: int, q: int) -> BraidWord:
    """The standard word (sigma_1 ... sigma_{p-1})^q on p strands."""
    if p < 1:
        raise BraidError(f"torus link needs p >= 1, got {p}")
    step = tuple(range(1, p))
    if q < 0:
        step = tuple(-x for x in reversed(step))
    return BraidWord(p, step * abs(q))

