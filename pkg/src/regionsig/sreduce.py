"""Reduction of (m, A) pairs at exact rational evaluation points.

Over the reals every symmetric matrix is congruent to a diagonal of +1, -1
and 0 entries.  Stripping those one-by-one blocks adds (1, 0), (0, 1) and
(1, 1) to the integer pair respectively, so a pair (m, A) reduces to
``m + (p + z, q + z)`` where (p, q, z) is the inertia of A.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .amplitude import Amplitude
from .exactalg import Matrix, PolyZ, bareiss_det, charpoly


@dataclass(frozen=True)
class Inertia:
    p: int
    q: int
    z: int

    @property
    def size(self) -> int:
        return self.p + self.q + self.z

    @property
    def signature(self) -> int:
        return self.p - self.q


@dataclass(frozen=True)
class InvariantPair:
    m: tuple
    matrix: Matrix

    def __post_init__(self):
        if not self.matrix.is_symmetric():
            raise ValueError("InvariantPair needs a symmetric matrix")


@dataclass(frozen=True)
class FinalPair:
    a: int
    b: int

    def as_tuple(self):
        return (self.a, self.b)


@dataclass(frozen=True)
class ProfileSample:
    x: Fraction
    inertia: Inertia
    final: FinalPair
    sig_corr: int

    @property
    def theta(self) -> float:
        """Display-only angle with x = cos(theta / 2)."""
        return 2.0 * math.acos(float(self.x))


@dataclass(frozen=True)
class SignatureProfile:
    samples: tuple
    jump_brackets: tuple


def inertia_rational(a: Matrix) -> Inertia:
    """Inertia of a symmetric rational matrix by exact congruence reduction.

    Nonzero diagonal entries are used as 1x1 pivots.  When the remaining
    diagonal vanishes but some entry b off the diagonal does not, the 2x2
    block [[0, b], [b, 0]] is split off; it contributes one positive and one
    negative direction.
    """
    if not a.is_symmetric():
        raise ValueError("inertia needs a symmetric matrix")
    m = {(i, j): Fraction(a[i, j]) for i in range(a.nrows) for j in range(a.ncols)}
    alive = list(range(a.nrows))
    p = q = 0
    while alive:
        piv = next((i for i in alive if m[i, i] != 0), None)
        if piv is not None:
            d = m[piv, piv]
            if d > 0:
                p += 1
            else:
                q += 1
            alive.remove(piv)
            for j in alive:
                f = m[j, piv] / d
                if f:
                    for k in alive:
                        m[j, k] -= f * m[piv, k]
            continue
        pair = next(((i, j) for i in alive for j in alive if i < j and m[i, j] != 0), None)
        if pair is None:
            break
        i, j = pair
        b = m[i, j]
        p += 1
        q += 1
        alive.remove(i)
        alive.remove(j)
        rows_i = {k: m[k, i] for k in alive}
        rows_j = {k: m[k, j] for k in alive}
        for k in alive:
            for l in alive:
                m[k, l] -= (rows_i[k] * rows_j[l] + rows_j[k] * rows_i[l]) / b
    return Inertia(p, q, len(alive))


def inertia_at(a: Matrix, x0) -> Inertia:
    """Inertia of a symmetric polynomial matrix evaluated at the rational x0."""
    if not a.is_symmetric():
        raise ValueError("inertia needs a symmetric matrix")
    return inertia_rational(a.evaluate(Fraction(x0)))


def strip_pair(m, a: Matrix, x0) -> FinalPair:
    """Fully strip (m, A) at x0: m + (p + z, q + z)."""
    inn = inertia_at(a, x0)
    return FinalPair(m[0] + inn.p + inn.z, m[1] + inn.q + inn.z)


def final_pair(amp: Amplitude, x0) -> FinalPair:
    """The stripped form of (-m_D, M_D) at x0, i.e. (p + z - c_plus, q + z - c_minus)."""
    return strip_pair((-amp.c_plus, -amp.c_minus), amp.matrix, x0)


def sig_corr(amp: Amplitude, x0) -> int:
    """Signature of M_D(x0) corrected by the writhe."""
    return inertia_at(amp.matrix, x0).signature - amp.writhe


def det_poly(a: Matrix) -> PolyZ:
    """Exact determinant over Z[x] by fraction-free elimination."""
    if not a.is_square():
        raise ValueError("determinant of a non-square matrix")
    return PolyZ._coerce(bareiss_det(a.map(PolyZ._coerce)))


def reduced_det_poly(a: Matrix):
    """Lowest non-vanishing coefficient of det(t*I - A) and the generic rank.

    Closed-diagram amplitudes are singular, so their determinant vanishes
    identically.  Up to sign this coefficient is the sum of the principal
    minors of size equal to the generic rank r; at a point where the rank
    is still r it equals the product of the nonzero eigenvalues.
    """
    coeffs = charpoly(a.map(PolyZ._coerce))
    n = a.nrows
    for k, c in enumerate(coeffs):
        if PolyZ._coerce(c):
            return PolyZ._coerce(c), n - k
    return PolyZ(), 0


def _sign(v) -> int:
    return (v > 0) - (v < 0)


def sample_points(n_samples: int):
    """n_samples equally spaced rationals covering [0, 1]."""
    if n_samples < 2:
        raise ValueError("need at least two samples")
    return [Fraction(k, n_samples - 1) for k in range(n_samples)]


def signature_profile(amp: Amplitude, n_samples: int, points=None) -> SignatureProfile:
    """Inertia, final pair and corrected signature on a grid of x in [0, 1].

    An interval between consecutive samples is reported as a jump bracket
    when the inertia differs at its ends, or when the reduced determinant
    changes sign or vanishes at an end.
    """
    xs = list(points) if points is not None else sample_points(n_samples)
    disc, _ = reduced_det_poly(amp.matrix)
    samples = []
    for x0 in xs:
        inn = inertia_at(amp.matrix, x0)
        fin = FinalPair(inn.p + inn.z - amp.c_plus, inn.q + inn.z - amp.c_minus)
        samples.append(ProfileSample(x0, inn, fin, inn.signature - amp.writhe))
    brackets = []
    for s0, s1 in zip(samples, samples[1:]):
        d0, d1 = _sign(disc.eval(s0.x)), _sign(disc.eval(s1.x))
        if s0.inertia != s1.inertia or d0 != d1 or d0 == 0 or d1 == 0:
            brackets.append((s0.x, s1.x))
    return SignatureProfile(tuple(samples), tuple(brackets))


def refine_jump(amp: Amplitude, lo, hi, width) -> tuple:
    """Bisect a bracket whose ends have different inertia down to the given width."""
    lo, hi, width = Fraction(lo), Fraction(hi), Fraction(width)
    at_lo = inertia_at(amp.matrix, lo)
    if at_lo == inertia_at(amp.matrix, hi):
        raise ValueError("inertia is the same at both ends of the bracket")
    while hi - lo > width:
        mid = (lo + hi) / 2
        if inertia_at(amp.matrix, mid) != at_lo:
            hi = mid
        else:
            lo = mid
    return lo, hi


def profile_csv(profile: SignatureProfile) -> str:
    lines = ["x_num,x_den,theta_display,p,q,z,final_a,final_b,sig_corr"]
    for s in profile.samples:
        lines.append(
            f"{s.x.numerator},{s.x.denominator},{s.theta:.6f},{s.inertia.p},{s.inertia.q},"
            f"{s.inertia.z},{s.final.a},{s.final.b},{s.sig_corr}")
    for lo, hi in profile.jump_brackets:
        lines.append(f"# jump in ({lo}, {hi})")
    return "\n".join(lines) + "\n"
