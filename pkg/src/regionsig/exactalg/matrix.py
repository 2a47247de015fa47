"""Dense exact matrices over Z, Q, Z[x] or Z[x, 1/(2x+1)].

Entries are any objects supporting ``+``, ``-``, ``*`` and comparison with
the integer 0; ``int``, ``Fraction``, :class:`PolyZ` and :class:`LocElem`
all qualify and mix with plain integers.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Integral

from .local import LocElem
from .poly import PolyZ


class Matrix:
    __slots__ = ("_rows", "nrows", "ncols")

    def __init__(self, rows, ncols: int | None = None):
        rows = tuple(tuple(r) for r in rows)
        if ncols is None:
            ncols = len(rows[0]) if rows else 0
        for r in rows:
            if len(r) != ncols:
                raise ValueError("ragged matrix")
        object.__setattr__(self, "_rows", rows)
        object.__setattr__(self, "nrows", len(rows))
        object.__setattr__(self, "ncols", ncols)

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    # -- constructors ----------------------------------------------------

    @classmethod
    def zeros(cls, m: int, n: int | None = None, zero=0) -> Matrix:
        n = m if n is None else n
        return cls([[zero] * n for _ in range(m)], ncols=n)

    @classmethod
    def identity(cls, n: int, one=1, zero=0) -> Matrix:
        return cls([[one if i == j else zero for j in range(n)] for i in range(n)], ncols=n)

    @classmethod
    def from_function(cls, m: int, n: int, f) -> Matrix:
        return cls([[f(i, j) for j in range(n)] for i in range(m)], ncols=n)

    @classmethod
    def diag(cls, entries, zero=0) -> Matrix:
        entries = list(entries)
        n = len(entries)
        return cls([[entries[i] if i == j else zero for j in range(n)] for i in range(n)], ncols=n)

    @classmethod
    def column(cls, v) -> Matrix:
        return cls([[a] for a in v], ncols=1)

    @classmethod
    def outer(cls, u, v) -> Matrix:
        """The rank-one matrix u v^T."""
        return cls([[a * b for b in v] for a in u], ncols=len(v))

    @classmethod
    def unit(cls, n: int, i: int, j: int) -> Matrix:
        """The basis matrix E_{i,j} of size n x n."""
        return cls.from_function(n, n, lambda a, b: 1 if (a, b) == (i, j) else 0)

    # -- access ------------------------------------------------------------

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    def __getitem__(self, key):
        i, j = key
        return self._rows[i][j]

    def rows(self):
        return self._rows

    def row(self, i):
        return self._rows[i]

    def col(self, j):
        return tuple(r[j] for r in self._rows)

    def diagonal(self):
        return tuple(self._rows[i][i] for i in range(min(self.shape)))

    def entries(self):
        for r in self._rows:
            yield from r

    def tolist(self):
        return [list(r) for r in self._rows]

    # -- algebra -------------------------------------------------------------

    def _check_same(self, other):
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")

    def __add__(self, other: Matrix) -> Matrix:
        self._check_same(other)
        return Matrix([[a + b for a, b in zip(r, s)] for r, s in zip(self._rows, other._rows)],
                      ncols=self.ncols)

    def __sub__(self, other: Matrix) -> Matrix:
        self._check_same(other)
        return Matrix([[a - b for a, b in zip(r, s)] for r, s in zip(self._rows, other._rows)],
                      ncols=self.ncols)

    def __neg__(self) -> Matrix:
        return self.map(lambda a: -a)

    def scale(self, c) -> Matrix:
        return self.map(lambda a: c * a)

    def __matmul__(self, other: Matrix) -> Matrix:
        if self.ncols != other.nrows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        cols = [other.col(j) for j in range(other.ncols)]
        out = []
        for r in self._rows:
            row = []
            for c in cols:
                acc = 0
                for a, b in zip(r, c):
                    if a != 0 and b != 0:
                        acc = a * b + acc
                row.append(acc)
            out.append(row)
        return Matrix(out, ncols=other.ncols)

    def apply(self, v):
        """Matrix-vector product with v given as a sequence."""
        return (self @ Matrix.column(v)).col(0)

    @property
    def T(self) -> Matrix:
        return Matrix([self.col(j) for j in range(self.ncols)], ncols=self.nrows)

    def congruence(self, m: Matrix) -> Matrix:
        """The congruent matrix m^T A m."""
        return m.T @ self @ m

    def map(self, f) -> Matrix:
        return Matrix([[f(a) for a in r] for r in self._rows], ncols=self.ncols)

    def direct_sum(self, other: Matrix, zero=0) -> Matrix:
        k, l = self.shape
        m, n = other.shape
        rows = [list(r) + [zero] * n for r in self._rows]
        rows += [[zero] * l + list(r) for r in other._rows]
        return Matrix(rows, ncols=l + n)

    __or__ = direct_sum

    def submatrix(self, rows, cols) -> Matrix:
        rows, cols = list(rows), list(cols)
        return Matrix([[self._rows[i][j] for j in cols] for i in rows], ncols=len(cols))

    def permuted(self, perm) -> Matrix:
        """Relabel indices: entry (perm[i], perm[j]) of the result is entry (i, j) here."""
        n = self.nrows
        inv = [0] * n
        for i, p in enumerate(perm):
            inv[p] = i
        return Matrix.from_function(n, n, lambda a, b: self._rows[inv[a]][inv[b]])

    def with_entry(self, i: int, j: int, value) -> Matrix:
        rows = self.tolist()
        rows[i][j] = value
        return Matrix(rows, ncols=self.ncols)

    # -- predicates --------------------------------------------------------

    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def is_symmetric(self) -> bool:
        if not self.is_square():
            return False
        n = self.nrows
        return all(self._rows[i][j] == self._rows[j][i] for i in range(n) for j in range(i + 1, n))

    def is_zero(self) -> bool:
        return all(a == 0 for a in self.entries())

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.shape != other.shape:
            return False
        return all(a == b for a, b in zip(self.entries(), other.entries()))

    def __hash__(self):
        return hash((self.shape, tuple(self.entries())))

    def __repr__(self):
        return f"Matrix({[[str(a) for a in r] for r in self._rows]})"

    # -- conversions -------------------------------------------------------

    def evaluate(self, x0) -> Matrix:
        """Substitute a rational value for x in every entry."""
        x0 = Fraction(x0)

        def ev(a):
            if isinstance(a, (PolyZ, LocElem)):
                return Fraction(a.eval(x0))
            return Fraction(a)

        return self.map(ev)

    def to_poly(self) -> Matrix:
        return self.map(lambda a: a.to_poly() if isinstance(a, LocElem) else PolyZ._coerce(a))

    def to_local(self) -> Matrix:
        return self.map(LocElem._coerce)


def _exact_div(a, b):
    if isinstance(a, PolyZ) or isinstance(b, PolyZ):
        return PolyZ._coerce(a).exact_div(PolyZ._coerce(b))
    if isinstance(a, Integral) and isinstance(b, Integral):
        q, r = divmod(a, b)
        if r:
            raise ArithmeticError(f"{b} does not divide {a}")
        return q
    return a / b


def bareiss_det(a: Matrix):
    """Determinant by fraction-free (Bareiss) elimination.

    Works over any integral domain with exact division: Z, Q and Z[x].
    """
    if not a.is_square():
        raise ValueError("determinant of a non-square matrix")
    n = a.nrows
    if n == 0:
        return 1
    m = a.tolist()
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if swap is None:
                return 0 * m[0][0]
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        pivot = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = _exact_div(m[i][j] * pivot - m[i][k] * m[k][j], prev)
            m[i][k] = 0 * pivot
        prev = pivot
    return m[n - 1][n - 1] if sign > 0 else -m[n - 1][n - 1]


def charpoly(a: Matrix):
    """Coefficients ``c[0..n]`` of det(t*I - A) = sum c[k] t**k.

    Faddeev-LeVerrier recursion; the divisions by k are exact because the
    coefficients lie in the entry ring whenever it contains Z.
    """
    if not a.is_square():
        raise ValueError("characteristic polynomial of a non-square matrix")
    n = a.nrows
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    mk = Matrix.zeros(n)
    for k in range(1, n + 1):
        shifted = (a @ mk).tolist()
        for i in range(n):
            shifted[i][i] = shifted[i][i] + coeffs[n - k + 1]
        mk = Matrix(shifted, ncols=n)
        am = a @ mk
        trace = 0
        for i in range(n):
            trace = trace + am[i, i]
        if isinstance(trace, PolyZ):
            coeffs[n - k] = -trace.scale_div(k)
        elif isinstance(trace, Integral):
            q, r = divmod(-trace, k)
            if r:
                raise ArithmeticError("non-integral characteristic coefficient")
            coeffs[n - k] = q
        else:
            coeffs[n - k] = -trace / k
    return coeffs
