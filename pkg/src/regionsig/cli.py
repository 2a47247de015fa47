"""Command-line entry point.

Exit codes: 0 success, 1 bad input data, 2 usage error, 3 a failed identity
or a strict conjecture mismatch.
"""

from __future__ import annotations

import argparse
import math
import re
import sys
from fractions import Fraction
from pathlib import Path

from . import __version__
from .amplitude import amplitude, to_csv, to_json, to_latex
from .corpus import CorpusError, find_diagram, load_corpus
from .diagram import DiagramError, load_diagram
from .sreduce import det_poly, final_pair, inertia_at, reduced_det_poly, signature_profile, profile_csv
from .tlsig import ConjectureError, conjecture_table, sign_flip_report
from .verify import run_all

EXIT_OK, EXIT_DOMAIN, EXIT_USAGE, EXIT_FAIL = 0, 1, 2, 3

_RATIONAL = re.compile(r"^\s*(-?\d+)\s*/\s*(\d+)\s*$")


def rational(text: str) -> Fraction:
    """Parse "num/den"; decimals are rejected on purpose."""
    m = _RATIONAL.match(text)
    if not m:
        raise argparse.ArgumentTypeError(f"expected num/den, got {text!r}")
    num, den = int(m.group(1)), int(m.group(2))
    if den == 0:
        raise argparse.ArgumentTypeError("denominator must be nonzero")
    return Fraction(num, den)


def positive_int(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if n < 2:
        raise argparse.ArgumentTypeError("need at least 2 samples")
    return n


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="regionsig", description="Region amplitudes of oriented link diagrams.")
    p.add_argument("--version", action="store_true", help="print the version to stderr and exit")
    sub = p.add_subparsers(dest="verb", parser_class=_Parser)

    a = sub.add_parser("amplitude", help="print the amplitude matrix")
    a.add_argument("file")
    a.add_argument("--out", choices=("csv", "latex", "json"), default="csv")

    i = sub.add_parser("invariant", help="inertia and final pair at a rational x")
    i.add_argument("file")
    i.add_argument("--x", type=rational, required=True, metavar="NUM/DEN")

    pr = sub.add_parser("profile", help="signature profile over x in [0, 1]")
    pr.add_argument("file")
    pr.add_argument("--samples", type=positive_int, default=101)
    pr.add_argument("--out", choices=("csv", "svg"), default="csv")

    d = sub.add_parser("det", help="determinant and reduced determinant")
    d.add_argument("file")

    sub.add_parser("verify", help="check the congruence identities")

    c = sub.add_parser("conjecture", help="compare with twice the Tristram-Levine signature")
    c.add_argument("link")
    c.add_argument("--samples", type=positive_int, default=50)
    c.add_argument("--strict", action="store_true")

    co = sub.add_parser("corpus", help="inspect the bundled corpus")
    co.add_argument("action", choices=("list",))
    return p


def resolve(target: str):
    """A diagram from a file path, or from a corpus diagram name."""
    path = Path(target)
    if path.is_file():
        return load_diagram(path)
    try:
        return find_diagram(path.name[:-5] if path.name.endswith(".json") else path.name).load()
    except KeyError:
        raise DiagramError(f"no such file or corpus diagram: {target}") from None


def step_svg(profile, width: int = 480, height: int = 240) -> str:
    """Step plot of sig_corr against theta = 2 arccos(x)."""
    pts = sorted((s.theta, s.sig_corr) for s in profile.samples)
    lo = min(v for _, v in pts) - 1
    hi = max(v for _, v in pts) + 1
    pad = 30

    def sx(t):
        return pad + (width - 2 * pad) * t / math.pi

    def sy(v):
        return height - pad - (height - 2 * pad) * (v - lo) / (hi - lo)

    path = [f"M{sx(pts[0][0]):.2f},{sy(pts[0][1]):.2f}"]
    for (t0, v0), (t1, v1) in zip(pts, pts[1:]):
        path.append(f"H{sx(t1):.2f}")
        if v1 != v0:
            path.append(f"V{sy(v1):.2f}")
    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}">',
        f'<line x1="{pad}" y1="{height - pad}" x2="{width - pad}" y2="{height - pad}" stroke="black"/>',
        f'<line x1="{pad}" y1="{pad}" x2="{pad}" y2="{height - pad}" stroke="black"/>',
        f'<text x="{width - pad}" y="{height - 8}" text-anchor="end">theta</text>',
        f'<text x="4" y="{pad - 8}">sig_corr</text>',
        f'<text x="{pad - 4}" y="{sy(lo + 1):.2f}" text-anchor="end">{lo + 1}</text>',
        f'<text x="{pad - 4}" y="{sy(hi - 1):.2f}" text-anchor="end">{hi - 1}</text>',
        f'<path d="{" ".join(path)}" fill="none" stroke="blue"/>',
        "</svg>",
    ]
    return "\n".join(lines) + "\n"


def _amplitude(args):
    a = amplitude(resolve(args.file))
    out = {"csv": lambda: to_csv(a.matrix), "latex": lambda: to_latex(a.matrix), "json": lambda: to_json(a)}
    sys.stdout.write(out[args.out]())
    return EXIT_OK


def _invariant(args):
    a = amplitude(resolve(args.file))
    inn = inertia_at(a.matrix, args.x)
    fin = final_pair(a, args.x)
    print(f"p={inn.p} q={inn.q} z={inn.z} final=({fin.a},{fin.b}) sig_corr={inn.signature - a.writhe}")
    return EXIT_OK


def _profile(args):
    prof = signature_profile(amplitude(resolve(args.file)), args.samples)
    sys.stdout.write(profile_csv(prof) if args.out == "csv" else step_svg(prof))
    return EXIT_OK


def _det(args):
    a = amplitude(resolve(args.file))
    red, rank = reduced_det_poly(a.matrix)
    print(f"det={det_poly(a.matrix)}")
    print(f"generic_rank={rank}")
    print(f"reduced_det={red}")
    return EXIT_OK


def _verify(args):
    results = run_all()
    for r in results:
        print(f"{r.name}: {'PASS' if r.passed else 'FAIL'}")
    return EXIT_OK if all(r.passed for r in results) else EXIT_FAIL


def _conjecture(args):
    try:
        report = conjecture_table(args.link, args.samples)
    except KeyError as exc:
        raise DiagramError(str(exc.args[0])) from None
    sys.stdout.write(report.to_csv())
    for r in report.mismatches:
        print(f"# mismatch at x = {r.x}: sig_corr={r.sig_corr} two_sigma_tl={r.two_sigma_tl}")
    note = sign_flip_report([report])
    if note:
        print(f"# {note}")
    if args.strict and report.mismatches:
        return EXIT_FAIL
    return EXIT_OK


def _corpus(args):
    for e in load_corpus():
        print(f"{e.link_name}: {' '.join(d.name for d in e.diagrams)}")
    return EXIT_OK


VERBS = {
    "amplitude": _amplitude, "invariant": _invariant, "profile": _profile, "det": _det,
    "verify": _verify, "conjecture": _conjecture, "corpus": _corpus,
}


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    if args.version:
        print(f"regionsig {__version__}", file=sys.stderr)
        return EXIT_OK
    if args.verb is None:
        parser.print_usage(sys.stderr)
        return EXIT_USAGE
    try:
        return VERBS[args.verb](args)
    except (DiagramError, CorpusError, ConjectureError, ValueError) as exc:
        print(f"regionsig: error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


def main() -> None:
    sys.exit(run())
