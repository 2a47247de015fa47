"""The region-indexed amplitude matrix of an oriented diagram."""

from __future__ import annotations

import json
from dataclasses import dataclass

from .diagram import Checkerboard, RegionMap, crossing_counts, region_map
from .exactalg import Matrix, PolyZ

PAIRING = (
    (2, 1, 0, 1),
    (1, 0, 1, 0),
    (0, 1, 2, 1),
    (1, 0, 1, 0),
)

# 1, x, 2x^2 - 1
HERMITE = (PolyZ((1,)), PolyZ((0, 1)), PolyZ((-1, 0, 2)))


@dataclass(frozen=True)
class Amplitude:
    matrix: Matrix
    c_plus: int
    c_minus: int

    @property
    def n_regions(self) -> int:
        return self.matrix.nrows

    @property
    def writhe(self) -> int:
        return self.c_plus - self.c_minus


def crossing_amplitude(sign: int, quadrants, n_regions: int) -> Matrix:
    """sign * sum over (i, j) in 4x4 of h_{i.j} placed at (c_i, c_j).

    Repeated region ids accumulate, which is the push-forward of the 4x4
    local block along the quadrant map.
    """
    entries = [[0] * n_regions for _ in range(n_regions)]
    for i in range(4):
        for j in range(4):
            r, s = quadrants[i], quadrants[j]
            entries[r][s] = entries[r][s] + HERMITE[PAIRING[i][j]]
    zero = PolyZ()
    m = Matrix([[PolyZ._coerce(a) if a != 0 else zero for a in row] for row in entries], ncols=n_regions)
    return m if sign == 1 else -m


def amplitude(obj) -> Amplitude:
    """Amplitude of a RegionMap (or an OrientedDiagram, via face extraction)."""
    r: RegionMap = region_map(obj)
    n = r.n_regions
    acc = [[PolyZ() for _ in range(n)] for _ in range(n)]
    for sign, quads in r.crossings:
        for i in range(4):
            for j in range(4):
                a, b = quads[i], quads[j]
                h = HERMITE[PAIRING[i][j]]
                acc[a][b] = acc[a][b] + h if sign == 1 else acc[a][b] - h
    c_plus, c_minus = crossing_counts(r)
    return Amplitude(Matrix(acc, ncols=n), c_plus, c_minus)


def checkerboard_flip_check(a: Amplitude, colors: Checkerboard) -> bool:
    """S M(x) S == M(-x) with S = diag((-1)**colour), as a polynomial identity."""
    m = a.matrix
    if len(colors.colors) != m.nrows:
        raise ValueError("colouring does not match the amplitude size")
    sgn = [(-1) ** c for c in colors.colors]
    n = m.nrows
    return all(
        sgn[i] * sgn[j] * m[i, j] == m[i, j].negate_x()
        for i in range(n) for j in range(n)
    )


def in_z2x(a: Amplitude) -> bool:
    return all(e.in_z2x() for e in a.matrix.entries())


# -- output formats ------------------------------------------------------------


def to_csv(m: Matrix) -> str:
    return "".join(",".join(str(e) for e in row) + "\n" for row in m.rows())


def to_latex(m: Matrix) -> str:
    body = " \\\\\n".join(" & ".join(PolyZ._coerce(e).latex() for e in row) for row in m.rows())
    return "\\begin{bmatrix}\n" + body + "\n\\end{bmatrix}\n"


def to_json(a: Amplitude) -> str:
    data = {
        "c_plus": a.c_plus,
        "c_minus": a.c_minus,
        "matrix": [[list(PolyZ._coerce(e).coeffs) for e in row] for row in a.matrix.rows()],
    }
    return json.dumps(data) + "\n"


def matrix_from_strings(rows, y_var: bool = False) -> Matrix:
    """Build a PolyZ matrix from entry strings such as ``"2*x^2-1"``.

    With ``y_var`` the strings are read in ``y = 2x``.
    """
    def conv(s):
        s = str(s)
        if y_var:
            return PolyZ.parse(s.replace("y", "x")).compose(PolyZ((0, 2)))
        return PolyZ.parse(s)
    return Matrix([[conv(s) for s in row] for row in rows])
