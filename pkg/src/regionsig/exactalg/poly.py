"""Integer polynomials in one indeterminate ``x``."""

from __future__ import annotations

import re
from fractions import Fraction
from numbers import Integral, Rational


def _trim(coeffs):
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


class PolyZ:
    """Immutable element of Z[x].

    ``coeffs[k]`` is the coefficient of ``x**k``; the zero polynomial has
    an empty coefficient tuple.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        if isinstance(coeffs, Integral):
            coeffs = (coeffs,)
        trimmed = _trim(int(c) for c in coeffs)
        object.__setattr__(self, "coeffs", trimmed)

    def __setattr__(self, name, value):
        raise AttributeError("PolyZ is immutable")

    @classmethod
    def const(cls, c: int) -> PolyZ:
        return cls((c,))

    @classmethod
    def monomial(cls, c: int, k: int) -> PolyZ:
        return cls((0,) * k + (c,))

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lead(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    # -- ring operations -------------------------------------------------

    @staticmethod
    def _coerce(other):
        if isinstance(other, PolyZ):
            return other
        if isinstance(other, Integral):
            return PolyZ((int(other),))
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return PolyZ(out)

    __radd__ = __add__

    def __neg__(self):
        return PolyZ(-c for c in self.coeffs)

    def __pos__(self):
        return self

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return ZERO
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    out[i + j] += ca * cb
        return PolyZ(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result, base = ONE, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def divmod(self, other: PolyZ):
        """Division with remainder over Q, returning (q, r) only when q and r are integral.

        Raises ``ArithmeticError`` if the quotient would need a non-integer
        coefficient.
        """
        other = self._coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = other.degree
        lc = other.lead
        quot = [0] * max(len(rem) - dq, 0)
        for k in range(len(rem) - dq - 1, -1, -1):
            c = rem[k + dq]
            if c == 0:
                continue
            q, r = divmod(c, lc)
            if r:
                raise ArithmeticError("quotient leaves Z[x]")
            quot[k] = q
            for i, oc in enumerate(other.coeffs):
                rem[k + i] -= q * oc
        return PolyZ(quot), PolyZ(rem)

    def exact_div(self, other) -> PolyZ:
        q, r = self.divmod(other)
        if r:
            raise ArithmeticError(f"{other} does not divide {self}")
        return q

    def __floordiv__(self, other):
        return self.exact_div(other)

    def divides(self, other: PolyZ) -> bool:
        """True iff ``self`` divides ``other`` in Z[x]."""
        try:
            _, r = other.divmod(self)
        except ArithmeticError:
            return False
        return r.is_zero()

    def scale_div(self, k: int) -> PolyZ:
        """Divide every coefficient by the integer ``k`` (must be exact)."""
        out = []
        for c in self.coeffs:
            q, r = divmod(c, k)
            if r:
                raise ArithmeticError(f"{k} does not divide {self}")
            out.append(q)
        return PolyZ(out)

    # -- evaluation and substitution -----------------------------------

    def __call__(self, x0):
        return self.eval(x0)

    def eval(self, x0):
        """Horner evaluation; exact for ints and Fractions."""
        if isinstance(x0, Rational) and not isinstance(x0, Integral):
            x0 = Fraction(x0)
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x0 + c
        return acc

    def compose(self, other: PolyZ) -> PolyZ:
        acc = ZERO
        for c in reversed(self.coeffs):
            acc = acc * other + c
        return acc

    def negate_x(self) -> PolyZ:
        """The image under x -> -x."""
        return PolyZ(c if k % 2 == 0 else -c for k, c in enumerate(self.coeffs))

    def in_z2x(self) -> bool:
        """Membership in Z[2x]: the coefficient of x^k is divisible by 2^k."""
        return all(c % (1 << k) == 0 for k, c in enumerate(self.coeffs))

    # -- comparison, hashing, display -----------------------------------

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        if len(self.coeffs) <= 1:
            return hash(self.coeffs[0] if self.coeffs else 0)
        return hash(self.coeffs)

    def __repr__(self):
        return f"PolyZ({list(self.coeffs)!r})"

    def __str__(self):
        return self.format()

    def format(self, var: str = "x", mul: str = "*", power: str = "^") -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if k == 0:
                body = str(a)
            else:
                mono = var if k == 1 else f"{var}{power}{k}"
                body = mono if a == 1 else f"{a}{mul}{mono}"
            terms.append((sign, body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f"{sign}{body}"
        return out

    def latex(self, var: str = "x") -> str:
        return self.format(var=var, mul="", power="^")

    @classmethod
    def parse(cls, text: str) -> PolyZ:
        """Parse strings like ``"2*x^2-1"``, ``"-x"``, ``"4x^2"``."""
        s = text.replace(" ", "").replace("**", "^")
        if not s:
            raise ValueError("empty polynomial")
        if s[0] not in "+-":
            s = "+" + s
        pieces = re.findall(r"[+-][^+-]+", s)
        if "".join(pieces) != s:
            raise ValueError(f"cannot parse polynomial {text!r}")
        out = ZERO
        for piece in pieces:
            m = re.fullmatch(r"([+-])(\d*)\*?(x(?:\^(\d+))?)?", piece)
            if not m or (not m.group(2) and not m.group(3)):
                raise ValueError(f"cannot parse term {piece!r} in {text!r}")
            c = int(m.group(2)) if m.group(2) else 1
            if m.group(1) == "-":
                c = -c
            k = 0
            if m.group(3):
                k = int(m.group(4)) if m.group(4) else 1
            out = out + PolyZ.monomial(c, k)
        return out


ZERO = PolyZ()
ONE = PolyZ((1,))
X = PolyZ((0, 1))
TWO_X_PLUS_ONE = PolyZ((1, 2))
