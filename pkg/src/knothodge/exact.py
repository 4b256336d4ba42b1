"""Exact rational kernel: polynomials in x, truncated series and Laurent polynomials in u.

The rational type is ``gmpy2.mpq`` when gmpy2 is importable and
``fractions.Fraction`` otherwise; both are exact and normalized.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence

try:  # pragma: no cover - exercised implicitly
    from gmpy2 import mpq as _mpq

    def Rational(num=0, den=1):
        return _mpq(num, den)

    RATIONAL_BACKEND = "gmpy2"
except ImportError:  # pragma: no cover
    def Rational(num=0, den=1):
        return Fraction(num, den)

    RATIONAL_BACKEND = "fractions"

__all__ = [
    "Rational",
    "RATIONAL_BACKEND",
    "TruncationError",
    "XPoly",
    "USeries",
    "ULaurent",
    "series_mul",
    "series_exp",
    "series_log",
    "series_pow_poly",
    "series_compose",
    "series_inverse",
    "as_int",
]

_ZERO = Rational(0)
_ONE = Rational(1)


class TruncationError(ValueError):
    """Raised when two series with different truncation orders are combined."""


def as_int(q) -> int:
    """Return *q* as a Python int, raising if it is not integral."""
    q = Rational(q)
    if q.denominator != 1:
        raise ValueError(f"{q} is not an integer")
    return int(q.numerator)


def _trim(coeffs: list) -> tuple:
    n = len(coeffs)
    while n and coeffs[n - 1] == 0:
        n -= 1
    return tuple(coeffs[:n])


class XPoly:
    """Dense polynomial in ``x`` with exact rational coefficients.

    ``coeffs[k]`` is the coefficient of ``x**k``; trailing zeros are stripped,
    so the zero polynomial has an empty coefficient tuple and degree -1.
    """

    __slots__ = ("coeffs", "_hash")

    def __init__(self, coeffs: Iterable = ()):
        self.coeffs = _trim([Rational(c) for c in coeffs])
        self._hash = None

    @classmethod
    def _raw(cls, coeffs: tuple) -> "XPoly":
        obj = cls.__new__(cls)
        obj.coeffs = coeffs
        obj._hash = None
        return obj

    @classmethod
    def const(cls, c) -> "XPoly":
        return cls((c,))

    @classmethod
    def monomial(cls, k: int, c=1) -> "XPoly":
        return cls([0] * k + [c])

    @classmethod
    def x(cls) -> "XPoly":
        return cls((0, 1))

    # -- basic queries -------------------------------------------------
    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __getitem__(self, k: int):
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return _ZERO

    def __len__(self) -> int:
        return len(self.coeffs)

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def int_coeffs(self) -> list[int]:
        return [as_int(c) for c in self.coeffs]

    # -- arithmetic ----------------------------------------------------
    def __add__(self, other):
        if not isinstance(other, XPoly):
            other = XPoly.const(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for k, c in enumerate(b):
            out[k] += c
        return XPoly._raw(_trim(out))

    __radd__ = __add__

    def __neg__(self):
        return XPoly._raw(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        if not isinstance(other, XPoly):
            other = XPoly.const(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, XPoly):
            if isinstance(other, (USeries, ULaurent)):
                return NotImplemented
            c = Rational(other)
            if c == 0:
                return XPoly._raw(())
            return XPoly._raw(tuple(a * c for a in self.coeffs))
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return XPoly._raw(())
        out = [_ZERO] * (len(a) + len(b) - 1)
        for p, ap in enumerate(a):
            if ap == 0:
                continue
            for q, bq in enumerate(b):
                out[p + q] += ap * bq
        return XPoly._raw(_trim(out))

    def __rmul__(self, other):
        return self.__mul__(other)

    def __truediv__(self, c):
        c = Rational(c)
        return XPoly._raw(tuple(a / c for a in self.coeffs))

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = XPoly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __call__(self, x0):
        """Evaluate at a scalar (Horner), or compose when *x0* is an XPoly."""
        if isinstance(x0, XPoly):
            return self.compose(x0)
        acc = _ZERO
        x0 = Rational(x0)
        for c in reversed(self.coeffs):
            acc = acc * x0 + c
        return acc

    def compose(self, inner: "XPoly") -> "XPoly":
        acc = XPoly._raw(())
        for c in reversed(self.coeffs):
            acc = acc * inner + c
        return acc

    def __eq__(self, other):
        if isinstance(other, XPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (USeries, ULaurent)):
            return NotImplemented
        try:
            r = Rational(other)
        except (TypeError, ValueError):
            return NotImplemented
        return self.coeffs == _trim([r])

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(tuple((c.numerator, c.denominator) for c in self.coeffs))
        return self._hash

    def __repr__(self):
        return f"XPoly({self})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            a = -c if c < 0 else c
            if k == 0:
                body = str(a)
            else:
                mono = "x" if k == 1 else f"x^{k}"
                body = mono if a == 1 else f"{a}*{mono}"
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out


_XZERO = XPoly._raw(())
_XONE = XPoly.const(1)


def _as_xpoly(c) -> XPoly:
    return c if isinstance(c, XPoly) else XPoly.const(c)


class USeries:
    """Power series in ``u`` truncated after ``u**order``, with XPoly coefficients."""

    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs: Sequence, order: int):
        if order < 0:
            raise ValueError("truncation order must be non-negative")
        cs = [_as_xpoly(c) for c in list(coeffs)[: order + 1]]
        cs.extend([_XZERO] * (order + 1 - len(cs)))
        self.order = order
        self.coeffs = tuple(cs)

    @classmethod
    def _raw(cls, coeffs: tuple, order: int) -> "USeries":
        obj = cls.__new__(cls)
        obj.order = order
        obj.coeffs = coeffs
        return obj

    @classmethod
    def one(cls, order: int) -> "USeries":
        return cls((_XONE,), order)

    @classmethod
    def zero(cls, order: int) -> "USeries":
        return cls((), order)

    @classmethod
    def from_scalars(cls, values: Sequence, order: int) -> "USeries":
        return cls([XPoly.const(v) for v in values], order)

    @classmethod
    def from_terms(cls, terms: Mapping[int, object], order: int) -> "USeries":
        cs = [_XZERO] * (order + 1)
        for k, c in terms.items():
            if k < 0:
                raise ValueError("negative exponent in a power series")
            if k <= order:
                cs[k] = cs[k] + _as_xpoly(c)
        return cls._raw(tuple(cs), order)

    def __getitem__(self, k: int) -> XPoly:
        if 0 <= k <= self.order:
            return self.coeffs[k]
        raise IndexError(f"coefficient u^{k} is beyond truncation order {self.order}")

    def coeff(self, j: int, i: int):
        """Rational coefficient of ``x**i * u**j``."""
        return self[j][i]

    def valuation(self) -> int | None:
        for k, c in enumerate(self.coeffs):
            if c:
                return k
        return None

    def truncate(self, order: int) -> "USeries":
        if order > self.order:
            raise TruncationError("cannot extend a truncated series")
        return USeries._raw(self.coeffs[: order + 1], order)

    def map_coeffs(self, fn) -> "USeries":
        return USeries._raw(tuple(_as_xpoly(fn(c)) for c in self.coeffs), self.order)

    def specialize(self, x0) -> list:
        """Evaluate every coefficient at ``x = x0``; returns a list of rationals."""
        return [c(x0) for c in self.coeffs]

    def _check(self, other: "USeries"):
        if self.order != other.order:
            raise TruncationError(
                f"truncation orders differ: {self.order} != {other.order}")

    def __add__(self, other):
        if isinstance(other, USeries):
            self._check(other)
            return USeries._raw(
                tuple(a + b for a, b in zip(self.coeffs, other.coeffs)), self.order)
        cs = list(self.coeffs)
        cs[0] = cs[0] + other
        return USeries._raw(tuple(cs), self.order)

    __radd__ = __add__

    def __neg__(self):
        return USeries._raw(tuple(-c for c in self.coeffs), self.order)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, USeries):
            return series_mul(self, other)
        if isinstance(other, ULaurent):
            return NotImplemented
        return USeries._raw(tuple(c * other for c in self.coeffs), self.order)

    def __rmul__(self, other):
        return USeries._raw(tuple(c * other for c in self.coeffs), self.order)

    def __eq__(self, other):
        if not isinstance(other, USeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.order, self.coeffs))

    def __repr__(self):
        terms = [f"({c})*u^{k}" for k, c in enumerate(self.coeffs) if c]
        return f"USeries[{self.order}](" + (" + ".join(terms) or "0") + ")"


def series_mul(a: USeries, b: USeries) -> USeries:
    """Cauchy product truncated at the common order."""
    a._check(b)
    J = a.order
    ac, bc = a.coeffs, b.coeffs
    out = [_XZERO] * (J + 1)
    for p in range(J + 1):
        ap = ac[p]
        if not ap:
            continue
        for q in range(J + 1 - p):
            bq = bc[q]
            if bq:
                out[p + q] = out[p + q] + ap * bq
    return USeries._raw(tuple(out), J)


def series_exp(v: USeries) -> USeries:
    """Formal exponential; requires a zero constant coefficient."""
    if v.coeffs[0]:
        raise ValueError("series_exp needs a zero constant coefficient")
    J = v.order
    # s' = v' s  =>  n s_n = sum_{k=1}^{n} k v_k s_{n-k}
    kv = [v.coeffs[k] * k for k in range(J + 1)]
    s = [_XONE] + [_XZERO] * J
    for n in range(1, J + 1):
        acc = _XZERO
        for k in range(1, n + 1):
            if kv[k] and s[n - k]:
                acc = acc + kv[k] * s[n - k]
        s[n] = acc / n
    return USeries._raw(tuple(s), J)


def series_log(s: USeries) -> USeries:
    """Formal logarithm; requires constant coefficient exactly 1."""
    if s.coeffs[0] != _XONE:
        raise ValueError("series_log needs constant coefficient 1")
    J = s.order
    # n L_n = n s_n - sum_{k=1}^{n-1} k L_k s_{n-k}
    kL = [_XZERO] * (J + 1)
    L = [_XZERO] * (J + 1)
    for n in range(1, J + 1):
        acc = s.coeffs[n] * n
        for k in range(1, n):
            if kL[k] and s.coeffs[n - k]:
                acc = acc - kL[k] * s.coeffs[n - k]
        kL[n] = acc
        L[n] = acc / n
    return USeries._raw(tuple(L), J)


def series_pow_poly(s: USeries, alpha) -> USeries:
    """``s ** alpha`` for a polynomial (or rational) exponent, as ``exp(alpha*log s)``."""
    if s.coeffs[0] != _XONE:
        raise ValueError("series_pow_poly needs constant coefficient 1")
    return series_exp(series_log(s) * _as_xpoly(alpha))


def series_inverse(s: USeries) -> USeries:
    """Reciprocal of a series with constant coefficient 1."""
    return series_pow_poly(s, -1)


def series_compose(outer: USeries, t: USeries) -> USeries:
    """Substitute ``u -> t`` in *outer*; *t* must have zero constant term.

    Only the terms ``outer_j t**j`` with ``j * valuation(t) <= t.order``
    survive truncation, so *outer* may carry a lower order than *t*.
    """
    if t.coeffs[0]:
        raise ValueError("series_compose needs t with zero constant coefficient")
    J = t.order
    val = t.valuation()
    result = [_XZERO] * (J + 1)
    result[0] = outer.coeffs[0]
    if val is None:
        return USeries._raw(tuple(result), J)
    top = J // val
    if top > outer.order:
        raise TruncationError(
            f"outer series truncated at {outer.order}, needs {top} terms")
    out = USeries._raw(tuple(result), J)
    power = t
    for j in range(1, top + 1):
        if outer.coeffs[j]:
            out = out + power * outer.coeffs[j]
        if j < top:
            power = series_mul(power, t)
    return out


class ULaurent:
    """Finite Laurent polynomial in ``u`` with XPoly coefficients.

    ``coeffs[k]`` multiplies ``u**(min_degree + k)``; the representation is
    trimmed at both ends, and zero has ``min_degree == 0`` and no coefficients.
    """

    __slots__ = ("min_degree", "coeffs")

    def __init__(self, min_degree: int, coeffs: Sequence):
        cs = [_as_xpoly(c) for c in coeffs]
        lo, hi = 0, len(cs)
        while lo < hi and not cs[lo]:
            lo += 1
        while hi > lo and not cs[hi - 1]:
            hi -= 1
        if lo == hi:
            self.min_degree, self.coeffs = 0, ()
        else:
            self.min_degree, self.coeffs = min_degree + lo, tuple(cs[lo:hi])

    @classmethod
    def from_terms(cls, terms: Mapping[int, object]) -> "ULaurent":
        if not terms:
            return cls(0, ())
        lo, hi = min(terms), max(terms)
        cs = [_XZERO] * (hi - lo + 1)
        for k, c in terms.items():
            cs[k - lo] = cs[k - lo] + _as_xpoly(c)
        return cls(lo, cs)

    @classmethod
    def monomial(cls, k: int, c=1) -> "ULaurent":
        return cls(k, (c,))

    @property
    def max_degree(self) -> int:
        return self.min_degree + len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def terms(self) -> dict:
        return {self.min_degree + k: c for k, c in enumerate(self.coeffs) if c}

    def __add__(self, other):
        if not isinstance(other, ULaurent):
            other = ULaurent(0, (_as_xpoly(other),))
        t = self.terms()
        for k, c in other.terms().items():
            t[k] = t.get(k, _XZERO) + c
        return ULaurent.from_terms(t)

    __radd__ = __add__

    def __neg__(self):
        return ULaurent(self.min_degree, [-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, ULaurent):
            if self.is_zero() or other.is_zero():
                return ULaurent(0, ())
            out = [_XZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
            for p, a in enumerate(self.coeffs):
                if not a:
                    continue
                for q, b in enumerate(other.coeffs):
                    if b:
                        out[p + q] = out[p + q] + a * b
            return ULaurent(self.min_degree + other.min_degree, out)
        return ULaurent(self.min_degree, [c * other for c in self.coeffs])

    def __rmul__(self, other):
        return self.__mul__(other)

    def __truediv__(self, c):
        return ULaurent(self.min_degree, [a / c for a in self.coeffs])

    def __eq__(self, other):
        if not isinstance(other, ULaurent):
            return NotImplemented
        return self.min_degree == other.min_degree and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.min_degree, self.coeffs))

    def to_series(self, order: int) -> USeries:
        """Truncate to a power series; negative exponents must be absent."""
        if self.coeffs and self.min_degree < 0:
            raise ValueError(
                f"Laurent polynomial has a u^{self.min_degree} term; not a power series")
        return USeries.from_terms(self.terms(), order)

    def __repr__(self):
        terms = [f"({c})*u^{k}" for k, c in self.terms().items()]
        return "ULaurent(" + (" + ".join(terms) or "0") + ")"
