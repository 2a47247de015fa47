"""The localized ring R = Z[x, 1/(2x+1)].

Elements are stored as ``num / (2x+1)**k`` in normal form: either ``k == 0``
or ``2x+1`` does not divide ``num``.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Integral

from .poly import ONE, ZERO, PolyZ, TWO_X_PLUS_ONE


def loc_normalize(num: PolyZ, k: int) -> LocElem:
    """Cancel common factors of (2x+1) between ``num`` and the denominator."""
    if k < 0:
        raise ValueError("denominator exponent must be non-negative")
    num = PolyZ._coerce(num)
    if num.is_zero():
        return LocElem._raw(ZERO, 0)
    while k > 0:
        q = _div_by_unit(num)
        if q is None:
            break
        num, k = q, k - 1
    return LocElem._raw(num, k)


def _div_by_unit(num: PolyZ):
    # 2x+1 is primitive, so it divides num in Z[x] iff num(-1/2) == 0
    if num.is_zero() or num.eval(Fraction(-1, 2)) != 0:
        return None
    return num.exact_div(TWO_X_PLUS_ONE)


class LocElem:
    __slots__ = ("num", "k")

    def __init__(self, num=ZERO, k: int = 0):
        if isinstance(num, LocElem):
            norm = loc_normalize(num.num, num.k + k)
        else:
            norm = loc_normalize(PolyZ._coerce(num), k)
        object.__setattr__(self, "num", norm.num)
        object.__setattr__(self, "k", norm.k)

    @classmethod
    def _raw(cls, num: PolyZ, k: int) -> LocElem:
        obj = object.__new__(cls)
        object.__setattr__(obj, "num", num)
        object.__setattr__(obj, "k", k)
        return obj

    def __setattr__(self, name, value):
        raise AttributeError("LocElem is immutable")

    @staticmethod
    def _coerce(other):
        if isinstance(other, LocElem):
            return other
        if isinstance(other, (PolyZ, Integral)):
            return LocElem._raw(PolyZ._coerce(other), 0)
        return NotImplemented

    @classmethod
    def unit_power(cls, j: int) -> LocElem:
        """(2x+1)**j for any integer j."""
        if j >= 0:
            return cls._raw(TWO_X_PLUS_ONE ** j, 0)
        return cls._raw(ONE, -j)

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        k = max(self.k, other.k)
        num = (self.num * TWO_X_PLUS_ONE ** (k - self.k)
               + other.num * TWO_X_PLUS_ONE ** (k - other.k))
        return loc_normalize(num, k)

    __radd__ = __add__

    def __neg__(self):
        return LocElem._raw(-self.num, self.k)

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
        return loc_normalize(self.num * other.num, self.k + other.k)

    __rmul__ = __mul__

    def is_unit(self) -> bool:
        """Units of R are +-(2x+1)**j."""
        n = self.num
        if n.is_zero():
            return False
        while n.degree > 0:
            n = _div_by_unit(n)
            if n is None:
                return False
        return abs(n.lead) == 1

    def inverse(self) -> LocElem:
        if not self.is_unit():
            raise ZeroDivisionError(f"{self} is not invertible in Z[x, 1/(2x+1)]")
        # num = c * (2x+1)**deg with c = +-1
        deg = self.num.degree
        c = self.num.exact_div(TWO_X_PLUS_ONE ** deg).lead
        return LocElem._raw(PolyZ.const(c) * TWO_X_PLUS_ONE ** self.k, deg)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def eval(self, x0):
        den = TWO_X_PLUS_ONE.eval(x0) ** self.k
        return Fraction(self.num.eval(x0)) / den

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __bool__(self):
        return not self.num.is_zero()

    def to_poly(self) -> PolyZ:
        if self.k:
            raise ValueError(f"{self} is not a polynomial")
        return self.num

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        k = max(self.k, other.k)
        return (self.num * TWO_X_PLUS_ONE ** (k - self.k)
                == other.num * TWO_X_PLUS_ONE ** (k - other.k))

    def __hash__(self):
        if self.k == 0:
            return hash(self.num)
        return hash((self.num, self.k))

    def __repr__(self):
        return f"LocElem({self.num!r}, {self.k})"

    def __str__(self):
        if self.k == 0:
            return str(self.num)
        den = "(2*x+1)" if self.k == 1 else f"(2*x+1)^{self.k}"
        return f"({self.num})/{den}"
