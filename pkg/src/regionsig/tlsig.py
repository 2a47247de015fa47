"""Tristram-Levine signatures from Seifert matrices, and the comparison with sig_corr.

This module is an independent oracle: it never looks at the amplitude
matrix, only at stored Seifert data.  Floating point is used here and
nowhere else.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .exactalg import Matrix, PolyZ, bareiss_det
from .sreduce import inertia_at, reduced_det_poly, refine_jump, signature_profile

THETA_MARGIN = 1e-6
EIG_TOL = 1e-9


class ConjectureError(ValueError):
    pass


@dataclass(frozen=True)
class SeifertMatrix:
    V: tuple
    link_name: str = ""
    # det(V - t V^T), lowest degree first, if known
    alexander: tuple | None = None

    def __post_init__(self):
        rows = tuple(tuple(int(a) for a in row) for row in self.V)
        if any(len(r) != len(rows) for r in rows):
            raise ValueError("Seifert matrix must be square")
        object.__setattr__(self, "V", rows)
        if self.alexander is not None:
            object.__setattr__(self, "alexander", tuple(int(c) for c in self.alexander))

    @property
    def size(self) -> int:
        return len(self.V)

    def alexander_poly(self) -> PolyZ:
        """det(V - t V^T) as a polynomial in t."""
        n = self.size
        if n == 0:
            return PolyZ(1)
        m = Matrix([[PolyZ((self.V[i][j], -self.V[j][i])) for j in range(n)] for i in range(n)])
        return PolyZ._coerce(bareiss_det(m))

    def alexander_ok(self) -> bool:
        """The computed polynomial agrees with the stored one up to a factor of +-t^k."""
        if self.alexander is None:
            return True
        return _normalize(self.alexander_poly()) == _normalize(PolyZ(self.alexander))


def _normalize(p: PolyZ):
    c = list(p.coeffs)
    while c and c[0] == 0:
        c.pop(0)
    if c and c[-1] < 0:
        c = [-a for a in c]
    return tuple(c)


def tl_form(V: SeifertMatrix, theta: float) -> np.ndarray:
    w = complex(math.cos(theta), math.sin(theta))
    v = np.array(V.V, dtype=float).reshape(V.size, V.size)
    return (1 - w) * v + (1 - w.conjugate()) * v.T


def tl_signature(V: SeifertMatrix, theta: float) -> int:
    """Signature of (1 - w) V + (1 - conj(w)) V^T at w = exp(i theta)."""
    if not (THETA_MARGIN <= theta <= 2 * math.pi - THETA_MARGIN):
        raise ValueError(f"theta = {theta} is too close to 0 mod 2*pi")
    if V.size == 0:
        return 0
    h = tl_form(V, theta)
    eig = np.linalg.eigvalsh(h)
    tol = EIG_TOL * max(np.linalg.norm(h), 1.0)
    return int(np.sum(eig > tol) - np.sum(eig < -tol))


def theta_of(x) -> float:
    """theta with 2x = 2cos(theta/2), i.e. theta = 2 arccos(x)."""
    return 2.0 * math.acos(float(x))


@dataclass(frozen=True)
class ConjectureRow:
    theta: float
    x: Fraction
    sig_corr: int
    two_sigma_tl: int

    @property
    def match(self) -> bool:
        return self.sig_corr == self.two_sigma_tl


@dataclass(frozen=True)
class ConjectureReport:
    link_name: str
    diagram: str
    rows: tuple
    excluded: tuple
    brackets: tuple

    @property
    def mismatches(self):
        return tuple(r for r in self.rows if not r.match)

    @property
    def all_match(self) -> bool:
        return not self.mismatches

    @property
    def flipped_all_match(self) -> bool:
        """Would every row match if the oracle's sign convention were reversed?"""
        return all(r.sig_corr == -r.two_sigma_tl for r in self.rows)

    def to_csv(self) -> str:
        lines = ["theta,x_num,x_den,sig_corr,two_sigma_tl,match"]
        for r in self.rows:
            lines.append(f"{r.theta:.6f},{r.x.numerator},{r.x.denominator},{r.sig_corr},"
                         f"{r.two_sigma_tl},{str(r.match).lower()}")
        for x in self.excluded:
            lines.append(f"# excluded x = {x}")
        for lo, hi in self.brackets:
            lines.append(f"# jump in ({lo}, {hi})")
        return "\n".join(lines) + "\n"


def interior_points(n_samples: int):
    """n_samples equally spaced rationals strictly inside (0, 1)."""
    if n_samples < 1:
        raise ValueError("need at least one sample")
    return [Fraction(k, n_samples + 1) for k in range(1, n_samples + 1)]


def conjecture_table(link_name: str, n_samples: int, entries=None, bracket_width=Fraction(1, 100)) -> ConjectureReport:
    """Compare sig_corr with twice the Tristram-Levine signature on a grid of x in (0, 1).

    Samples where the reduced determinant vanishes are nullity points and
    are left out.  Brackets between consecutive samples where the inertia
    changes are narrowed by bisection to ``bracket_width``.
    """
    from .amplitude import amplitude
    from .corpus import find_entry

    entry = find_entry(link_name, entries)
    if entry.seifert is None:
        raise ConjectureError(f"no Seifert data stored for {entry.link_name!r}")
    diagram = entry.diagrams[0]
    amp = amplitude(diagram.load())
    xs = interior_points(n_samples)
    profile = signature_profile(amp, len(xs), points=xs)
    disc, _ = reduced_det_poly(amp.matrix)
    rows, excluded = [], []
    for s in profile.samples:
        if disc.eval(s.x) == 0:
            excluded.append(s.x)
            continue
        th = theta_of(s.x)
        rows.append(ConjectureRow(th, s.x, s.sig_corr, 2 * tl_signature(entry.seifert, th)))
    brackets = []
    for lo, hi in profile.jump_brackets:
        if inertia_at(amp.matrix, lo) != inertia_at(amp.matrix, hi):
            lo, hi = refine_jump(amp, lo, hi, bracket_width)
        brackets.append((lo, hi))
    return ConjectureReport(entry.link_name, diagram.name, tuple(rows), tuple(excluded), tuple(brackets))


def sign_flip_report(reports) -> str | None:
    """A note when reversing the oracle's sign convention would make every link match."""
    reports = list(reports)
    if all(r.all_match for r in reports):
        return None
    if all(r.flipped_all_match for r in reports):
        return "all rows match after a global sign flip of the Tristram-Levine convention"
    return "rows do not match under either sign convention"
