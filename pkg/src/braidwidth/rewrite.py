"""Torus-braid representatives with few even-index generators.

On 6 strands, with ``P = s1 s2 s3 s4 s5`` and ``Q = s1 s3 s2 s3 s3 s4 s3 s5``,
two identities drive everything::

    P^3     = s1 s3 P Q
    P^2 s_i = s_{i+2} P^2      (i in {1, 3, 5}, indices mod 6)

Writing ``P^(2l+3) = P^2 * P^(2l+1)`` and pushing the odd prefix of the
previous word to the left through ``P^2`` gives the recursion
``prefix(l+1) = shift(prefix(l)) + [1, 3]``, so that
``P^(2n+1) = prefix(n) P Q^n`` with a prefix of 2n odd letters. The 4-strand
construction has the same shape, with its base identity found by searching
the positive flip class of ``(s1 s2 s3)^3``.

Every word produced here is checked against the Garside engine; the result is
returned as a :class:`RewriteCertificate` carrying the normal form key.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache

from .errors import BraidError, SearchCapExceeded, VerificationError
from .garside import (
    _bfs,
    braid_equal,
    expose_square,
    expose_square_search,
    normal_form,
)
from .word import BraidWord, parse_word, render, stats

__all__ = [
    "RewriteCertificate",
    "BlockDecomposition",
    "T4_BASE_CAP",
    "t6_low_even_word",
    "t6_even_link_word",
    "t6_prefix_exponents",
    "t4_low_even_word",
    "t4_even_link_word",
    "t4_base_identity",
    "delete_even",
    "t2_subsurface_word",
    "block_decompose",
    "verify_certificate",
]

STEP6 = (1, 2, 3, 4, 5)
TAIL6 = (1, 3, 2, 3, 3, 4, 3, 5)
STEP4 = (1, 2, 3)

T4_BASE_CAP = 100_000


@dataclass(frozen=True)
class RewriteCertificate:
    input_word: BraidWord
    output_word: BraidWord
    odd_count: int
    even_count: int
    normal_form_key: str
    verified: bool
    construction: str

    def to_json(self) -> dict:
        return {
            "strands": self.input_word.strands,
            "input": render(self.input_word),
            "output": render(self.output_word),
            "odd": self.odd_count,
            "even": self.even_count,
            "normal_form": self.normal_form_key,
            "verified": self.verified,
            "construction": self.construction,
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json())


def _certify(input_word: BraidWord, output_word: BraidWord, construction: str) -> RewriteCertificate:
    st = stats(output_word)
    nf = normal_form(output_word)
    verified = nf == normal_form(input_word)
    cert = RewriteCertificate(
        input_word=input_word,
        output_word=output_word,
        odd_count=st.odd_letters,
        even_count=st.even_letters,
        normal_form_key=nf.key,
        verified=verified,
        construction=construction,
    )
    if not verified:
        raise VerificationError(f"{construction} rewrite failed verification: {cert.dumps()}")
    return cert


def verify_certificate(data: dict) -> dict:
    """Re-check a certificate produced by :meth:`RewriteCertificate.to_json`.

    Returns a copy of ``data`` with ``verified`` recomputed from scratch and a
    ``checks`` map naming each individual test.
    """
    n = int(data["strands"])
    inp = parse_word(data["input"], n)
    out = parse_word(data["output"], n)
    st = stats(out)
    nf = normal_form(out)
    checks = {
        "braid_equal": nf == normal_form(inp),
        "odd": st.odd_letters == data["odd"],
        "even": st.even_letters == data["even"],
        "normal_form": nf.key == data.get("normal_form", nf.key),
        "positive": out.is_positive(),
    }
    result = dict(data)
    result["verified"] = all(checks.values())
    result["checks"] = checks
    return result


# -- 6 strands -------------------------------------------------------------


def _shift6(i: int) -> int:
    return (i + 2) % 6


def _t6_prefix(n: int) -> list[int]:
    prefix: list[int] = []
    for _ in range(n):
        prefix = [_shift6(i) for i in prefix] + [1, 3]
    return prefix


def t6_prefix_exponents(n: int) -> tuple[int, int, int]:
    """Exponents (k1, k3, k5) of the odd prefix of the n-th word; they sum to 2n."""
    prefix = _t6_prefix(n)
    return prefix.count(1), prefix.count(3), prefix.count(5)


@lru_cache(maxsize=None)
def t6_low_even_word(n: int) -> RewriteCertificate:
    """A word for ``(s1..s5)^(2n+1)`` with 8n+3 odd and 2n+2 even letters.

    The output has the shape ``s1^k1 s3^k3 s5^k5 P Q^n``.
    """
    if n < 0:
        raise BraidError(f"n must be non-negative, got {n}")
    # the odd letters in the prefix pairwise commute, so sorting is free
    letters = tuple(sorted(_t6_prefix(n))) + STEP6 + TAIL6 * n
    return _certify(BraidWord(6, STEP6 * (2 * n + 1)), BraidWord(6, letters), "t6")


@lru_cache(maxsize=None)
def t6_even_link_word(n: int) -> RewriteCertificate:
    """A word for ``(s1..s5)^(2n)`` with 2n+2 even letters: the (n-1)-th odd word times P."""
    if n < 1:
        raise BraidError(f"n must be at least 1, got {n}")
    base = t6_low_even_word(n - 1).output_word
    out = base * BraidWord(6, STEP6)
    return _certify(BraidWord(6, STEP6 * (2 * n)), out, "t6even")


# -- 4 strands -------------------------------------------------------------


@lru_cache(maxsize=None)
def t4_base_identity(cap: int = T4_BASE_CAP) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Split ``(s1 s2 s3)^3 = head P tail`` with ``head`` odd and two even letters in total.

    The first such word in breadth-first order over the positive flip class
    is used. Also checks the commuting identity ``P^2 s_i = s_{i+2 mod 4} P^2``
    that the induction relies on.
    """
    p = BraidWord(4, STEP4)
    for i in (1, 3):
        j = 3 if i == 1 else 1
        if not braid_equal(p ** 2 * BraidWord(4, (i,)), BraidWord(4, (j,)) * p ** 2):
            raise VerificationError(f"4-strand commuting identity fails for s{i}")
    for letters in _bfs(p ** 3, cap):
        if sum(1 for x in letters if x % 2 == 0) != 2:
            continue
        for j in range(len(letters) - 2):
            head = letters[:j]
            if any(x % 2 == 0 for x in head):
                break
            if letters[j:j + 3] == STEP4:
                return head, letters[j + 3:]
    raise BraidError("no 4-strand base identity of the required shape exists")


def _t4_prefix(n: int, head: tuple[int, ...]) -> list[int]:
    prefix: list[int] = []
    for _ in range(n):
        prefix = [4 - i for i in prefix] + list(head)
    return prefix


@lru_cache(maxsize=None)
def t4_low_even_word(n: int, cap: int = T4_BASE_CAP) -> RewriteCertificate:
    """A word for ``(s1 s2 s3)^(2n+1)`` with 5n+2 odd and n+1 even letters."""
    if n < 0:
        raise BraidError(f"n must be non-negative, got {n}")
    if n == 0:
        letters = STEP4
    else:
        head, tail = t4_base_identity(cap)
        letters = tuple(sorted(_t4_prefix(n, head))) + STEP4 + tail * n
    return _certify(BraidWord(4, STEP4 * (2 * n + 1)), BraidWord(4, letters), "t4")


@lru_cache(maxsize=None)
def t4_even_link_word(n: int, cap: int = T4_BASE_CAP) -> RewriteCertificate:
    """A word for ``(s1 s2 s3)^(2n)`` with n+1 even letters."""
    if n < 1:
        raise BraidError(f"n must be at least 1, got {n}")
    base = t4_low_even_word(n - 1, cap).output_word
    return _certify(BraidWord(4, STEP4 * (2 * n)), base * BraidWord(4, STEP4), "t4even")


# -- band deletion ---------------------------------------------------------


def delete_even(word: BraidWord) -> BraidWord:
    return BraidWord(word.strands, tuple(x for x in word.letters if abs(x) % 2 == 1))


def t2_subsurface_word(n: int) -> BraidWord:
    """``P^2 s1^k1 s3^k3 s5^k5`` with k1+k3+k5 = 8n-5, closing up to T(2, 8n+1).

    Obtained from ``P^(2n+1) = P^2 * beta_{n-1}`` by deleting the 2n even
    letters of ``beta_{n-1}`` only; the leading ``P^2`` is kept intact.
    """
    if n < 2:
        raise BraidError(f"n must be at least 2, got {n}")
    beta = t6_low_even_word(n - 1).output_word
    odd = sorted(delete_even(beta).letters)
    return BraidWord(6, STEP6 * 2 + tuple(odd))


# -- block decomposition ---------------------------------------------------


@dataclass(frozen=True)
class BlockDecomposition:
    blocks: tuple[BraidWord, ...]
    remainder: BraidWord
    square_count: int
    exposed: tuple[BraidWord | None, ...]
    unknown: int = 0

    @property
    def block_size(self) -> int:
        n = self.remainder.strands
        return n * (n - 1) // 2 + 1


def block_decompose(word: BraidWord, search_cap: int | None = None) -> BlockDecomposition:
    """Split a positive word greedily into blocks of n(n-1)/2 + 1 letters.

    Each block is long enough that two of its strands cross twice, so an equal
    positive word with a square exists. By default the square is exposed with
    the normal form construction; with ``search_cap`` set, a breadth-first
    search is used instead and blocks whose search hits the cap are counted as
    ``unknown`` (contributing no square).
    """
    n = word.strands
    size = n * (n - 1) // 2 + 1
    letters = word.letters
    k = len(letters) // size
    blocks = tuple(BraidWord(n, letters[j * size:(j + 1) * size]) for j in range(k))
    remainder = BraidWord(n, letters[k * size:])
    exposed = []
    unknown = 0
    for b in blocks:
        if search_cap is None:
            exposed.append(expose_square(b))
        else:
            try:
                exposed.append(expose_square_search(b, search_cap))
            except SearchCapExceeded:
                exposed.append(None)
                unknown += 1
    square_count = sum(1 for e in exposed if e is not None)
    return BlockDecomposition(blocks, remainder, square_count, tuple(exposed), unknown)

