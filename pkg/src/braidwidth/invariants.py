"""Concordance invariants of torus knots and bounds on dalt and Khovanov width.

Only closed forms are implemented: tau equals the genus of a positive torus
knot, and upsilon is known here for braid index 2 and 6 only::

    upsilon(T(2, 2k+1)) = -k
    upsilon(T(6, 6k+1)) = -9k
    upsilon(T(6, 6k+5)) = -9k - 6

Mirroring (negative q) negates both. The dealternation number ``dalt`` is
bounded below by ``|tau + upsilon|`` and by ``w_Kh - 2``; the upper bounds come
from crossing changes on concrete braid words.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import BraidError, NotPositiveError, UnsupportedFamilyError, VerificationError
from .rewrite import (
    block_decompose,
    t4_even_link_word,
    t4_low_even_word,
    t6_even_link_word,
    t6_low_even_word,
)
from .smoothing import adequacy, khovanov_width_adequate
from .word import BraidWord, render, stats, torus_word, twist_regions

__all__ = [
    "TorusParams",
    "BoundSource",
    "BoundsReport",
    "torus_genus",
    "tau_torus",
    "upsilon_torus",
    "dalt_lower_tau_upsilon",
    "dalt_upper_parity",
    "dalt_upper_twist",
    "dalt_upper_blocks",
    "dalt_upper_even_twist",
    "certified_torus_word",
    "word_bounds",
    "torus_bounds",
    "width_bounds",
    "cobordism_distance",
    "cobordism_distance_explicit",
    "subsurface_cobordism_genus",
    "alt_bounds_torus",
]


@dataclass(frozen=True)
class TorusParams:
    """T(p, q); a negative q denotes the mirror image."""

    p: int
    q: int

    def __post_init__(self):
        if self.p < 2:
            raise BraidError(f"torus parameter p must be at least 2, got {self.p}")
        if self.q == 0:
            raise BraidError("torus parameter q must be nonzero")

    @property
    def is_knot(self) -> bool:
        return math.gcd(self.p, abs(self.q)) == 1

    @property
    def mirrored(self) -> bool:
        return self.q < 0


def _knot(p: int, q: int) -> TorusParams:
    t = TorusParams(p, q)
    if not t.is_knot:
        raise BraidError(f"T({p},{q}) is a link, not a knot")
    return t


def torus_genus(p: int, q: int) -> int:
    """Seifert genus (p-1)(q-1)/2 of the positive torus knot T(p, q)."""
    if q < 1:
        raise BraidError(f"genus formula needs q >= 1, got {q}; pass |q| for mirrors")
    _knot(p, q)
    return (p - 1) * (q - 1) // 2


def tau_torus(p: int, q: int) -> int:
    t = _knot(p, q)
    g = torus_genus(p, abs(q))
    return -g if t.mirrored else g


def upsilon_torus(p: int, q: int) -> int:
    t = _knot(p, q)
    a = abs(q)
    if p == 2:
        value = -(a - 1) // 2
    elif p == 6:
        k, r = divmod(a, 6)
        value = -9 * k if r == 1 else -9 * k - 6
    else:
        raise UnsupportedFamilyError(f"upsilon is only available for p in {{2, 6}}, got p={p}")
    return -value if t.mirrored else value


def dalt_lower_tau_upsilon(p: int, q: int) -> int:
    return abs(tau_torus(p, q) + upsilon_torus(p, q))


# -- upper bounds from words -------------------------------------------------


def _require_positive(word: BraidWord) -> None:
    if not word.is_positive():
        raise NotPositiveError(f"expected a positive braid word, got {render(word)!r}")


def dalt_upper_parity(word: BraidWord) -> int:
    """Crossing changes needed to make odd letters positive and even ones negative, or vice versa.

    Either sign pattern gives an alternating braid diagram. For a positive
    word this is ``min(odd_letters, even_letters)``.
    """
    odd_pos = sum(1 for x in word.letters if x > 0 and x % 2)
    odd_neg = sum(1 for x in word.letters if x < 0 and x % 2)
    even_pos = sum(1 for x in word.letters if x > 0 and not x % 2)
    even_neg = sum(1 for x in word.letters if x < 0 and not x % 2)
    return min(odd_neg + even_pos, odd_pos + even_neg)


def dalt_upper_twist(word: BraidWord) -> int:
    """One crossing change per two twist regions of a positive word: floor(t/2)."""
    _require_positive(word)
    return stats(word).twist_regions // 2


def dalt_upper_blocks(word: BraidWord, search_cap: int | None = None) -> int:
    """floor((c - k)/2) with k the number of blocks in which a square was exposed."""
    _require_positive(word)
    k = block_decompose(word, search_cap).square_count
    return (len(word) - k) // 2


def dalt_upper_even_twist(word: BraidWord) -> int:
    """Number of cyclic twist regions of sigma_2 in a positive word on at most 4 strands.

    Changing one crossing per such region makes the diagram alternating.
    """
    _require_positive(word)
    if word.strands > 4:
        raise UnsupportedFamilyError("the sigma_2 twist-region bound needs at most 4 strands")
    return sum(1 for x, _ in twist_regions(word) if x == 2)


# -- reports -----------------------------------------------------------------


@dataclass(frozen=True)
class BoundSource:
    name: str
    quantity: str  # one of dalt_lower, dalt_upper, width_lower, width_upper, width_exact
    value: int
    statement: str
    caveat: bool = False


@dataclass
class BoundsReport:
    dalt_lower: int | None = None
    dalt_upper: int | None = None
    width_lower: int | None = None
    width_upper: int | None = None
    crossing_count: int | None = None
    sources: list[BoundSource] = field(default_factory=list)

    def add(self, name: str, quantity: str, value: int, statement: str, caveat: bool = False):
        self.sources.append(BoundSource(name, quantity, value, statement, caveat))

    def combine(self) -> BoundsReport:
        """Fold the sources into the four headline bounds (caveated sources skipped)."""
        lo_d, hi_d, lo_w, hi_w = [], [], [], []
        for s in self.sources:
            if s.caveat:
                continue
            if s.quantity == "dalt_lower":
                lo_d.append(s.value)
            elif s.quantity == "dalt_upper":
                hi_d.append(s.value)
            elif s.quantity == "width_lower":
                lo_w.append(s.value)
            elif s.quantity == "width_upper":
                hi_w.append(s.value)
            elif s.quantity == "width_exact":
                lo_w.append(s.value)
                hi_w.append(s.value)
        # w_Kh <= dalt + 2 links the two columns in both directions
        if hi_d:
            hi_w.append(min(hi_d) + 2)
        if lo_w:
            lo_d.append(max(lo_w) - 2)
        self.dalt_lower = max(lo_d) if lo_d else None
        self.dalt_upper = min(hi_d) if hi_d else None
        self.width_lower = max(lo_w) if lo_w else None
        self.width_upper = min(hi_w) if hi_w else None
        return self

    def is_consistent(self) -> bool:
        pairs = [(self.dalt_lower, self.dalt_upper), (self.width_lower, self.width_upper)]
        return all(lo is None or hi is None or lo <= hi for lo, hi in pairs)

    def ratio(self, value: int | None) -> float | None:
        if value is None or not self.crossing_count:
            return None
        return value / self.crossing_count

    def to_json(self) -> dict:
        return {
            "c": self.crossing_count,
            "dalt_lower": self.dalt_lower,
            "dalt_upper": self.dalt_upper,
            "width_lower": self.width_lower,
            "width_upper": self.width_upper,
            "sources": [
                {
                    "name": s.name,
                    "quantity": s.quantity,
                    "value": s.value,
                    "statement": s.statement,
                    "caveat": s.caveat,
                }
                for s in self.sources
            ],
        }


def _collect_word_bounds(report: BoundsReport, word: BraidWord, search_cap: int | None) -> None:
    c = len(word)
    report.add("half_crossings", "dalt_upper", c // 2, "dalt <= floor(c/2) for any diagram")
    report.add(
        "parity_change",
        "dalt_upper",
        dalt_upper_parity(word),
        "changing one parity class of generators gives an alternating braid diagram",
    )
    if word.is_positive():
        report.add(
            "twist_regions",
            "dalt_upper",
            dalt_upper_twist(word),
            "dalt <= floor(t/2), t = cyclic twist regions of a positive braid",
        )
        report.add(
            "square_blocks",
            "dalt_upper",
            dalt_upper_blocks(word, search_cap),
            "dalt <= floor((c-k)/2), k = blocks of n(n-1)/2+1 letters with an exposed square",
        )
        if word.strands <= 4:
            report.add(
                "sigma2_twist_regions",
                "dalt_upper",
                dalt_upper_even_twist(word),
                "one crossing change per cyclic twist region of sigma_2 (at most 4 strands)",
            )
    adeq = adequacy(word)
    if adeq.adequate:
        report.add(
            "adequate_width",
            "width_exact",
            khovanov_width_adequate(word, adeq),
            "w_Kh = (c - s_A - s_B)/2 + 3 for an adequate diagram",
        )


def word_bounds(word: BraidWord, search_cap: int | None = None) -> BoundsReport:
    """Every bound derivable from the diagram of this word's closure."""
    report = BoundsReport(crossing_count=len(word))
    _collect_word_bounds(report, word, search_cap)
    return report.combine()


def certified_torus_word(p: int, q: int) -> BraidWord:
    """A positive word for T(p, |q|) with few even letters when p is 4 or 6."""
    a = abs(q)
    if p == 6:
        cert = t6_low_even_word(a // 2) if a % 2 else t6_even_link_word(a // 2)
        return cert.output_word
    if p == 4:
        cert = t4_low_even_word(a // 2) if a % 2 else t4_even_link_word(a // 2)
        return cert.output_word
    return torus_word(p, a)


def torus_bounds(p: int, q: int, search_cap: int | None = None) -> BoundsReport:
    """Bounds for T(p, q), using the certified word and the torus-specific lower bounds.

    Both dalt and Khovanov width are mirror invariant, so only |q| matters.
    The crossing count is that of the standard (p-1)|q| crossing diagram,
    which is the crossing number when the braid index is p.
    """
    t = TorusParams(p, q)
    a = abs(q)
    word = certified_torus_word(p, a)
    report = BoundsReport(crossing_count=len(word))
    _collect_word_bounds(report, word, search_cap)
    if t.is_knot and p in (2, 6):
        report.add(
            "tau_upsilon",
            "dalt_lower",
            dalt_lower_tau_upsilon(p, a),
            "|tau + upsilon| <= dalt",
        )
    if p == 6 and a % 6 == 0:
        k = a // 6
        report.add(
            "torus6_width",
            "width_lower",
            6 * k + 2,
            "w_Kh(T(6,6k)) >= 6k + 2",
        )
    if p == 4 and a % 4 == 0:
        k = a // 4
        report.add(
            "torus4_width",
            "width_lower",
            2 * k + 2,
            "w_Kh(T(4,4k)) >= 2k + 2",
        )
    if p == 4 and a % 2 == 1:
        report.add(
            "torus4_alternation",
            "dalt_lower",
            alt_bounds_torus(4, a)[0],
            "dalt >= alt(T(4,2n+1)) = n",
        )
    if a % p == 0:
        k = a // p
        report.add(
            "generic_torus_width",
            "width_lower",
            p * (p - 1) * k + 2,
            "w_Kh(T(n,kn)) >= n(n-1)k + 2; contradicts the upper bounds for p in {4, 6}",
            caveat=True,
        )
    return report.combine()


def width_bounds(p: int | None = None, q: int | None = None, *, word: BraidWord | None = None,
                 search_cap: int | None = None) -> BoundsReport:
    if word is not None:
        if p is not None or q is not None:
            raise BraidError("give either torus parameters or a word, not both")
        return word_bounds(word, search_cap)
    if p is None or q is None:
        raise BraidError("torus bounds need both p and q")
    return torus_bounds(p, q, search_cap)


# -- cobordism distance ------------------------------------------------------


def _check_cobordism_args(n: int, m: int) -> None:
    if n % 2 == 0:
        raise BraidError(f"T(2,n) is a knot only for odd n, got {n}")
    if math.gcd(m, 6) != 1:
        raise BraidError(f"T(6,m) is a knot only for m coprime to 6, got {m}")


def cobordism_distance_explicit(n: int, m: int) -> int:
    """``|4(m-1) + 1 - n| / 2 + (m-1)/2`` (after mirroring so that m > 0).

    This closed form agrees with :func:`cobordism_distance` for m >= 7 and
    n >= 1. For negative n it is one too large: there the distance is
    g(T(6,m)) + g(T(2,|n|)) with g(T(2,|n|)) = (|n| - 1)/2, while the formula
    contributes (|n| + 1)/2. For example T(2,-1) is the unknot, at distance
    g(T(6,7)) = 15 from T(6,7), and the formula gives 16.
    """
    _check_cobordism_args(n, m)
    if m < 0:
        n, m = -n, -m
    num = abs(4 * (m - 1) + 1 - n) + (m - 1)
    return num // 2


def cobordism_distance(n: int, m: int) -> int:
    """Cobordism distance between T(2, n) and T(6, m).

    Equal to the larger of |delta upsilon| and |delta tau|. Both knots are
    mirrored when m < 0, which leaves the distance unchanged. For m >= 7 and
    n >= 1 the result is cross-checked against the closed form.
    """
    _check_cobordism_args(n, m)
    if m < 0:
        n, m = -n, -m
    d = max(
        abs(upsilon_torus(6, m) - upsilon_torus(2, n)),
        abs(tau_torus(6, m) - tau_torus(2, n)),
    )
    if m >= 7 and n >= 1 and d != cobordism_distance_explicit(n, m):
        raise VerificationError(f"distance formulas disagree at n={n}, m={m}")
    return d


def subsurface_cobordism_genus(n: int) -> tuple[int, int]:
    """(genus, bands) of the cobordism T(2, 8n+1) -> T(6, 2n+1) from band deletion.

    The 2n saddles give a connected cobordism of Euler characteristic -2n, so
    its genus is (2n + 1 - mu)/2 with mu = gcd(6, 2n+1) components on the
    6-strand side: n for knots, n - 1 when 3 divides 2n + 1.
    """
    if n < 2:
        raise BraidError(f"n must be at least 2, got {n}")
    mu = math.gcd(6, 2 * n + 1)
    genus = (2 * n + 1 - mu) // 2
    if mu == 1 and genus != torus_genus(6, 2 * n + 1) - torus_genus(2, 8 * n + 1):
        raise VerificationError(f"band count and genera disagree at n={n}")
    return genus, 2 * n


def alt_bounds_torus(p: int, q: int) -> tuple[int, int]:
    """Interval containing the alternation number of T(4, odd) or T(6, 6k+-1)."""
    _knot(p, q)
    a = abs(q)
    if p == 4:
        return a // 2, a // 2
    if p == 6:
        if a < 5:
            raise UnsupportedFamilyError("alternation bounds for T(6,q) need |q| >= 5")
        k, r = divmod(a, 6)
        if r == 1:
            return 6 * k, 6 * k + 2
        k += 1
        return 6 * k - 2, 6 * k
    raise UnsupportedFamilyError(f"alternation bounds only for p in {{4, 6}}, got p={p}")
