"""Exact braid-word calculus for dealternation and Khovanov width bounds of positive braid links."""

from .alexander import alexander_closure, alexander_torus, reduced_burau, verify_t2_reduction
from .errors import (
    BraidError,
    NotAdequateError,
    NotPositiveError,
    ParseError,
    SearchCapExceeded,
    UnsupportedFamilyError,
    VerificationError,
)
from .garside import (
    GarsideNormalForm,
    braid_equal,
    destabilize,
    expose_square,
    normal_form,
    positive_flip_closure,
)
from .invariants import (
    BoundsReport,
    cobordism_distance,
    tau_torus,
    torus_bounds,
    upsilon_torus,
    width_bounds,
    word_bounds,
)
from .laurent import LaurentPoly
from .rewrite import (
    RewriteCertificate,
    block_decompose,
    delete_even,
    t4_low_even_word,
    t6_even_link_word,
    t6_low_even_word,
)
from .smoothing import AdequacyReport, adequacy, count_circles, khovanov_width_adequate
from .word import BraidWord, components, parse_word, positive_genus, render, stats, torus_word

__version__ = "0.1.0"
