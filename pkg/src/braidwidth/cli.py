"""Command-line interface: ``braidwidth <command> ...``.

Exit status is 0 on success, 1 on a domain error (bad word, non-adequate
diagram, unsupported family, failed verification) and 2 on a usage error.
Words starting with ``-`` must follow a ``--`` separator.
"""

from __future__ import annotations

import argparse
import contextlib
import csv
import io
import json
import sys
from typing import Sequence

from . import alexander, garside, invariants, rewrite, smoothing, word as wordmod
from .errors import BraidError, VerificationError
from .word import BraidWord, parse_word, render

TABLE_COLUMNS = [
    "family", "param", "c", "dalt_lower", "dalt_upper",
    "width_lower", "width_upper", "dalt_ratio", "width_ratio",
]


def _emit(out, fmt: str, payload, text: str | None = None) -> None:
    if fmt == "json":
        out.write(json.dumps(payload, indent=2, ensure_ascii=False) + "\n")
    else:
        out.write((text if text is not None else str(payload)) + "\n")


def _word(args, text: str | None = None) -> BraidWord:
    return parse_word(text if text is not None else args.word, args.strands)


def cmd_parse(args, out):
    w = _word(args)
    _emit(out, args.format, {"strands": w.strands, "letters": list(w.letters),
                             "word": render(w)}, render(w))


def cmd_equal(args, out):
    w1 = parse_word(args.word1, args.strands)
    w2 = parse_word(args.word2, args.strands)
    n = max(w1.strands, w2.strands)
    w1, w2 = w1.with_strands(n), w2.with_strands(n)
    nf1, nf2 = garside.normal_form(w1), garside.normal_form(w2)
    eq = nf1 == nf2
    _emit(out, args.format, {"strands": n, "equal": eq, "normal_forms": [nf1.key, nf2.key]},
          "true" if eq else "false")


def cmd_normal_form(args, out):
    w = _word(args)
    nf = garside.normal_form(w)
    _emit(out, args.format, {"strands": w.strands, "normal_form": nf.key}, nf.key)


def cmd_stats(args, out):
    w = _word(args)
    st = wordmod.stats(w)
    payload = {
        "strands": w.strands,
        "crossing_count": st.crossing_count,
        "odd_letters": st.odd_letters,
        "even_letters": st.even_letters,
        "twist_regions": st.twist_regions,
        "exponent_sum": st.exponent_sum,
        "components": wordmod.components(w),
        "genus": str(wordmod.positive_genus(w)) if w.is_positive() else None,
    }
    text = "\n".join(f"{k}: {v}" for k, v in payload.items())
    _emit(out, args.format, payload, text)


def cmd_smooth(args, out):
    w = _word(args)
    r = smoothing.adequacy(w)
    width = smoothing.khovanov_width_adequate(w, r) if r.adequate else None
    payload = {"c": r.crossing_count, "sA": r.s_A, "sB": r.s_B,
               "aAdequate": r.a_adequate, "bAdequate": r.b_adequate, "width": width}
    text = " ".join(f"{k}={v}" for k, v in payload.items())
    _emit(out, args.format, payload, text)


def cmd_width(args, out):
    w = _word(args)
    width = smoothing.khovanov_width_adequate(w)
    _emit(out, args.format, {"width": width}, str(width))


def _bounds_text(report: invariants.BoundsReport) -> str:
    def fmt(v):
        return "?" if v is None else str(v)

    lines = [
        f"c = {report.crossing_count}",
        f"{fmt(report.dalt_lower)} <= dalt <= {fmt(report.dalt_upper)}",
        f"{fmt(report.width_lower)} <= w_Kh <= {fmt(report.width_upper)}",
    ]
    for s in report.sources:
        flag = " (not used)" if s.caveat else ""
        lines.append(f"  {s.quantity} {s.value}: {s.name}: {s.statement}{flag}")
    return "\n".join(lines)


def cmd_bounds(args, out):
    if args.torus is not None:
        if args.word is not None:
            raise BraidError("give either a word or --torus P Q, not both")
        report = invariants.torus_bounds(args.torus[0], args.torus[1], args.cap)
    elif args.word is not None:
        report = invariants.word_bounds(_word(args), args.cap)
    else:
        raise BraidError("bounds needs a word or --torus P Q")
    _emit(out, args.format, report.to_json(), _bounds_text(report))


_CONSTRUCTIONS = {
    "t6": rewrite.t6_low_even_word,
    "t6even": rewrite.t6_even_link_word,
    "t4": rewrite.t4_low_even_word,
    "t4even": rewrite.t4_even_link_word,
}


def cmd_rewrite(args, out):
    build = _CONSTRUCTIONS[args.construction]
    if args.construction.startswith("t4"):
        cert = build(args.n, args.cap if args.cap is not None else rewrite.T4_BASE_CAP)
    else:
        cert = build(args.n)
    data = cert.to_json()
    text = (f"{data['input']}\n= {data['output']}\n"
            f"odd={data['odd']} even={data['even']} verified={str(data['verified']).lower()}")
    _emit(out, args.format, data, text)


def cmd_cobdist(args, out):
    d = invariants.cobordism_distance(args.two, args.six)
    _emit(out, args.format, {"two": args.two, "six": args.six, "distance": d}, str(d))


def cmd_alexander(args, out):
    w = _word(args)
    poly = alexander.alexander_closure(w)
    payload = {"polynomial": str(poly), "coefficients": poly.coefficients(),
               "link": wordmod.components(w) > 1}
    text = f"{poly}\n{json.dumps(poly.coefficients())}"
    _emit(out, args.format, payload, text)


def cmd_verify(args, out):
    if args.certificate == "-":
        raw = sys.stdin.read()
    else:
        with open(args.certificate, encoding="utf-8") as fh:
            raw = fh.read()
    try:
        data = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise BraidError(f"certificate is not valid JSON: {exc}") from exc
    result = rewrite.verify_certificate(data)
    _emit(out, args.format, result, "verified" if result["verified"] else "NOT verified")
    if not result["verified"]:
        raise VerificationError("certificate did not verify")


def _family_rows(family: str, lo: int, hi: int, cap: int | None):
    for param in range(lo, hi + 1):
        if family == "Ln":
            step = tuple(range(1, param)) + tuple(range(param - 1, 0, -1))
            report = invariants.word_bounds(BraidWord(param, step * (param - 1)), cap)
        elif family == "box4":
            report = invariants.word_bounds(BraidWord(4, (1, 2, 3, 3, 2, 1) * param), cap)
        elif family == "T6":
            report = invariants.torus_bounds(6, param, cap)
        elif family == "T4":
            report = invariants.torus_bounds(4, param, cap)
        else:
            raise BraidError(f"unknown family {family!r}")
        yield param, report


# (smallest allowed parameter, default start); torus rows default to q >= p so
# that the standard diagram has minimal braid index
_FAMILY_RANGE = {"Ln": (2, 2), "box4": (1, 1), "T6": (1, 6), "T4": (1, 4)}


def table_rows(family: str, lo: int | None, hi: int, cap: int | None = None) -> list[dict]:
    least, default = _FAMILY_RANGE[family]
    lo = default if lo is None else lo
    if lo < least:
        raise BraidError(f"family {family} starts at {least}")
    rows = []
    for param, r in _family_rows(family, lo, hi, cap):
        dr, wr = r.ratio(r.dalt_upper), r.ratio(r.width_upper)
        rows.append({
            "family": family,
            "param": param,
            "c": r.crossing_count,
            "dalt_lower": r.dalt_lower,
            "dalt_upper": r.dalt_upper,
            "width_lower": r.width_lower,
            "width_upper": r.width_upper,
            "dalt_ratio": None if dr is None else round(dr, 6),
            "width_ratio": None if wr is None else round(wr, 6),
        })
    return rows


def cmd_table(args, out):
    if args.family not in _FAMILY_RANGE:
        raise BraidError(f"unknown family {args.family!r}")
    rows = table_rows(args.family, args.min, args.max, args.cap)
    if args.format == "json":
        _emit(out, "json", rows)
        return
    if args.format == "csv":
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=TABLE_COLUMNS, lineterminator="\n")
        writer.writeheader()
        for row in rows:
            writer.writerow({k: ("" if v is None else v) for k, v in row.items()})
        out.write(buf.getvalue())
        return
    widths = [max(len(c), 10) for c in TABLE_COLUMNS]
    out.write("  ".join(c.rjust(w) for c, w in zip(TABLE_COLUMNS, widths)) + "\n")
    for row in rows:
        cells = ["-" if row[c] is None else str(row[c]) for c in TABLE_COLUMNS]
        out.write("  ".join(v.rjust(w) for v, w in zip(cells, widths)) + "\n")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["text", "json", "csv"], default="text")

    def with_word(p, name="word", nargs=None):
        p.add_argument(name, nargs=nargs, help="braid word, e.g. 'abcde' or '(s1 s2)^3'")
        p.add_argument("--strands", type=int, default=None)
        return p

    parser = argparse.ArgumentParser(
        prog="braidwidth",
        description="Braid words, Garside normal forms, Kauffman states and dalt/width bounds.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    with_word(sub.add_parser("parse", parents=[common], help="parse and render a word"))
    p = sub.add_parser("equal", parents=[common], help="decide equality in B_n")
    p.add_argument("word1")
    p.add_argument("word2")
    p.add_argument("--strands", type=int, default=None)
    with_word(sub.add_parser("normal-form", parents=[common], help="Garside normal form"))
    with_word(sub.add_parser("stats", parents=[common], help="letter and closure statistics"))
    with_word(sub.add_parser("smooth", parents=[common], help="all-A/all-B states and adequacy"))
    with_word(sub.add_parser("width", parents=[common], help="Khovanov width of an adequate closure"))

    p = with_word(sub.add_parser("bounds", parents=[common], help="dalt and width bounds"),
                  nargs="?")
    p.add_argument("--torus", type=int, nargs=2, metavar=("P", "Q"))
    p.add_argument("--cap", type=int, default=None,
                   help="expose squares by BFS with this visited-word cap instead of normal forms")

    p = sub.add_parser("rewrite", parents=[common], help="low-even-count torus braid words")
    p.add_argument("construction", choices=sorted(_CONSTRUCTIONS))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--cap", type=int, default=None,
                   help=f"visited-word cap for the 4-strand base search (default {rewrite.T4_BASE_CAP})")

    p = sub.add_parser("cobdist", parents=[common], help="cobordism distance T(2,n) to T(6,m)")
    p.add_argument("--two", type=int, required=True, metavar="N")
    p.add_argument("--six", type=int, required=True, metavar="M")

    with_word(sub.add_parser("alexander", parents=[common], help="Alexander polynomial of the closure"))

    p = sub.add_parser("verify", parents=[common], help="re-verify a rewrite certificate")
    p.add_argument("certificate", help="path to a JSON certificate, or - for stdin")

    p = sub.add_parser("table", parents=[common], help="sweep a family and tabulate bounds")
    p.add_argument("--family", required=True, choices=["Ln", "T6", "T4", "box4"])
    p.add_argument("--min", type=int, default=None)
    p.add_argument("--max", type=int, required=True)
    p.add_argument("--cap", type=int, default=None)

    return parser


_COMMANDS = {
    "parse": cmd_parse,
    "equal": cmd_equal,
    "normal-form": cmd_normal_form,
    "stats": cmd_stats,
    "smooth": cmd_smooth,
    "width": cmd_width,
    "bounds": cmd_bounds,
    "rewrite": cmd_rewrite,
    "cobdist": cmd_cobdist,
    "alexander": cmd_alexander,
    "verify": cmd_verify,
    "table": cmd_table,
}


def run(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = build_parser()
    try:
        with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
            args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        _COMMANDS[args.command](args, out)
    except (BraidError, VerificationError, OSError) as exc:
        err.write(f"braidwidth: error: {exc}\n")
        return 1
    return 0


def main() -> None:
    sys.exit(run())
