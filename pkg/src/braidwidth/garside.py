"""Word problem in B_n via the left-greedy Garside normal form.

Every braid is written uniquely as Delta^p A_1 ... A_k where Delta is the
half twist and the A_j are permutation braids (positive braids in which each
pair of strands crosses at most once), none equal to 1 or Delta, and each
pair (A_j, A_{j+1}) is left-weighted: every generator that can start A_{j+1}
can already finish A_j.

Permutation braids are handled as 0-indexed tuples ``perm`` with
``perm[j]`` the final position of the strand starting at position ``j``.
Generator sigma_{i+1} swaps positions ``i`` and ``i+1``.

This module also holds the positive-word search machinery (flip closure,
square exposure) and Markov destabilization.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from .errors import BraidError, NotPositiveError, SearchCapExceeded
from .word import BraidWord, render

__all__ = [
    "GarsideNormalForm",
    "FlipClosure",
    "DEFAULT_CAP",
    "normal_form",
    "braid_equal",
    "positive_flip_closure",
    "flip_neighbors",
    "expose_square",
    "expose_square_search",
    "destabilize",
    "factor_word",
]

Perm = tuple[int, ...]

DEFAULT_CAP = 5_000_000


def _identity(n: int) -> Perm:
    return tuple(range(n))


def _delta(n: int) -> Perm:
    return tuple(range(n - 1, -1, -1))


def _inverse(p: Perm) -> Perm:
    inv = [0] * len(p)
    for j, v in enumerate(p):
        inv[v] = j
    return tuple(inv)


def starting_set(p: Perm) -> frozenset[int]:
    """Indices i such that sigma_{i+1} left-divides the permutation braid."""
    return frozenset(i for i in range(len(p) - 1) if p[i] > p[i + 1])


def finishing_set(p: Perm) -> frozenset[int]:
    """Indices i such that sigma_{i+1} right-divides the permutation braid."""
    inv = _inverse(p)
    return frozenset(i for i in range(len(p) - 1) if inv[i] > inv[i + 1])


def _times_generator(p: Perm, i: int) -> Perm:
    # p * sigma_{i+1}: swap the values i and i+1
    return tuple(i + 1 if v == i else i if v == i + 1 else v for v in p)


def _generator_times_inverse(p: Perm, i: int) -> Perm:
    # sigma_{i+1}^{-1} * p for i in starting_set(p): swap entries i and i+1
    q = list(p)
    q[i], q[i + 1] = q[i + 1], q[i]
    return tuple(q)


def _flip(p: Perm) -> Perm:
    # Delta p Delta^{-1}: sigma_i -> sigma_{n-i}
    n = len(p)
    return tuple(n - 1 - p[n - 1 - j] for j in range(n))


@lru_cache(maxsize=None)
def _left_weight(a: Perm, b: Perm) -> tuple[Perm, Perm]:
    """Move letters from the front of b to the back of a until left-weighted."""
    n = len(a)
    while True:
        inv_a = _inverse(a)
        for i in range(n - 1):
            if b[i] > b[i + 1] and inv_a[i] < inv_a[i + 1]:
                a = _times_generator(a, i)
                b = _generator_times_inverse(b, i)
                break
        else:
            return a, b


def factor_word(p: Perm) -> tuple[int, ...]:
    """A positive word (1-indexed letters) for the permutation braid ``p``."""
    out = []
    while True:
        s = starting_set(p)
        if not s:
            return tuple(out)
        i = min(s)
        out.append(i + 1)
        p = _generator_times_inverse(p, i)


@dataclass(frozen=True)
class GarsideNormalForm:
    strands: int
    delta_power: int
    factors: tuple[Perm, ...]

    @property
    def key(self) -> str:
        """Canonical string ``"Δ^p : f1 | f2 | ..."``, factors in one-line notation."""
        body = " | ".join(",".join(str(v + 1) for v in f) for f in self.factors)
        return f"Δ^{self.delta_power} :" + (f" {body}" if body else "")

    def __str__(self) -> str:
        return self.key

    @classmethod
    def from_key(cls, key: str, strands: int) -> GarsideNormalForm:
        head, _, body = key.partition(":")
        head = head.strip()
        if not head.startswith("Δ^"):
            raise BraidError(f"malformed normal form key {key!r}")
        power = int(head[2:])
        factors = []
        for chunk in body.split("|"):
            chunk = chunk.strip()
            if chunk:
                factors.append(tuple(int(v) - 1 for v in chunk.split(",")))
        for f in factors:
            if sorted(f) != list(range(strands)):
                raise BraidError(f"malformed factor {f} in normal form key")
        return cls(strands, power, tuple(factors))

    @property
    def length(self) -> int:
        """Number of canonical factors (excluding the Delta power)."""
        return len(self.factors)

    def is_canonical(self) -> bool:
        n = self.strands
        ident, delta = _identity(n), _delta(n)
        if any(f in (ident, delta) for f in self.factors):
            return False
        return all(
            starting_set(b) <= finishing_set(a)
            for a, b in zip(self.factors, self.factors[1:])
        )

    def to_word(self) -> BraidWord:
        n = self.strands
        delta_word = factor_word(_delta(n))
        if self.delta_power >= 0:
            letters = list(delta_word) * self.delta_power
        else:
            inv = [-x for x in reversed(delta_word)]
            letters = inv * (-self.delta_power)
        for f in self.factors:
            letters.extend(factor_word(f))
        return BraidWord(n, tuple(letters))


def _normalize(n: int, power: int, factors: list[Perm], new: Perm) -> tuple[int, list[Perm]]:
    """Right-multiply a left-weighted factor list by the permutation braid ``new``."""
    ident, delta = _identity(n), _delta(n)
    factors = factors + [new]
    for j in range(len(factors) - 2, -1, -1):
        a, b = _left_weight(factors[j], factors[j + 1])
        if a == factors[j] and b == factors[j + 1]:
            break
        factors[j], factors[j + 1] = a, b
    while factors and factors[0] == delta:
        factors.pop(0)
        power += 1
    while factors and factors[-1] == ident:
        factors.pop()
    return power, factors


def normal_form(word: BraidWord) -> GarsideNormalForm:
    n = word.strands
    if n == 1:
        return GarsideNormalForm(1, 0, ())
    delta = _delta(n)
    power = 0
    factors: list[Perm] = []
    gens = [_times_generator(_identity(n), i) for i in range(n - 1)]
    # Delta sigma_i^{-1}, a permutation braid since sigma_i right-divides Delta
    cogens = [tuple(g[v] for v in delta) for g in gens]
    for x in word.letters:
        if x > 0:
            power, factors = _normalize(n, power, factors, gens[x - 1])
        else:
            # B sigma_i^{-1} = B Delta^{-1} (Delta sigma_i^{-1})
            power -= 1
            factors = [_flip(f) for f in factors]
            power, factors = _normalize(n, power, factors, cogens[-x - 1])
    return GarsideNormalForm(n, power, tuple(factors))


def braid_equal(w1: BraidWord, w2: BraidWord) -> bool:
    if w1.strands != w2.strands:
        raise BraidError(
            f"cannot compare braids on {w1.strands} and {w2.strands} strands"
        )
    return normal_form(w1) == normal_form(w2)


# -- positive word search ---------------------------------------------------


def flip_neighbors(letters: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    """Positive words one commutation or braid relation away from ``letters``."""
    m = len(letters)
    for j in range(m - 1):
        a, b = letters[j], letters[j + 1]
        d = abs(a - b)
        if d >= 2:
            yield letters[:j] + (b, a) + letters[j + 2:]
        elif d == 1 and j + 2 < m and letters[j + 2] == a:
            yield letters[:j] + (b, a, b) + letters[j + 3:]


@dataclass(frozen=True)
class FlipClosure:
    words: frozenset[BraidWord]
    complete: bool

    def __contains__(self, word) -> bool:
        return word in self.words

    def __len__(self) -> int:
        return len(self.words)


def _require_positive(word: BraidWord) -> None:
    if not word.is_positive():
        raise NotPositiveError(f"expected a positive braid word, got {render(word)!r}")


def _bfs(word: BraidWord, cap: int, seen: set | None = None) -> Iterator[tuple[int, ...]]:
    """Breadth-first enumeration of the flip class; raises when ``cap`` is hit.

    ``seen``, if given, is filled with every visited word.
    """
    start = word.letters
    if seen is None:
        seen = set()
    seen.add(start)
    queue = deque([start])
    while queue:
        cur = queue.popleft()
        yield cur
        for nxt in flip_neighbors(cur):
            if nxt not in seen:
                if len(seen) >= cap:
                    raise SearchCapExceeded(cap)
                seen.add(nxt)
                queue.append(nxt)


def positive_flip_closure(word: BraidWord, cap: int = DEFAULT_CAP) -> FlipClosure:
    """All positive words reachable from ``word`` by commutations and braid relations.

    If more than ``cap`` words would be visited the partial set is returned
    with ``complete=False``.
    """
    _require_positive(word)
    seen: set = set()
    complete = True
    try:
        for _ in _bfs(word, cap, seen):
            pass
    except SearchCapExceeded:
        complete = False
    n = word.strands
    return FlipClosure(frozenset(BraidWord(n, w) for w in seen), complete)


def _has_square(letters: tuple[int, ...]) -> bool:
    return any(a == b for a, b in zip(letters, letters[1:]))


def expose_square(word: BraidWord) -> BraidWord | None:
    """An equal positive word containing some sigma_i sigma_i, or None.

    A positive braid admits such a word exactly when it is not a permutation
    braid, i.e. when its normal form has at least two factors counting each
    Delta. Left-weightedness then guarantees that some sigma_i finishes the
    first factor and starts the second; splitting it off both sides gives the
    square.
    """
    _require_positive(word)
    if _has_square(word.letters):
        return word
    nf = normal_form(word)
    n = word.strands
    factors = [_delta(n)] * nf.delta_power + list(nf.factors)
    if len(factors) < 2:
        return None
    first, second = factors[0], factors[1]
    i = min(starting_set(second) & finishing_set(first))
    head = _times_generator(first, i)  # first with its final sigma_{i+1} removed
    tail = _generator_times_inverse(second, i)
    letters = list(factor_word(head)) + [i + 1, i + 1] + list(factor_word(tail))
    for f in factors[2:]:
        letters.extend(factor_word(f))
    return BraidWord(n, tuple(letters))


def expose_square_search(word: BraidWord, cap: int = DEFAULT_CAP) -> BraidWord | None:
    """Breadth-first version of :func:`expose_square` over the flip class.

    Returns the first word with a square in BFS order, None if the whole class
    is square-free, and raises :class:`SearchCapExceeded` if the cap is hit
    first.
    """
    _require_positive(word)
    for letters in _bfs(word, cap):
        if _has_square(letters):
            return BraidWord(word.strands, letters)
    return None


def destabilize(word: BraidWord) -> tuple[BraidWord, int]:
    """Apply Markov destabilizations until none applies.

    A generator of index ``strands - 1`` (or index 1, followed by renumbering)
    that occurs exactly once can be conjugated to the end of the word and
    removed together with the outermost strand; the closure is unchanged.
    """
    letters = list(word.letters)
    n = word.strands
    while n > 1:
        top = [j for j, x in enumerate(letters) if abs(x) == n - 1]
        if len(top) == 1:
            del letters[top[0]]
            n -= 1
            continue
        bottom = [j for j, x in enumerate(letters) if abs(x) == 1]
        if len(bottom) == 1:
            del letters[bottom[0]]
            letters = [x - 1 if x > 0 else x + 1 for x in letters]
            n -= 1
            continue
        break
    return BraidWord(n, tuple(letters)), n
