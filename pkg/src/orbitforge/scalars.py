"""Exact scalars: rationals, Gaussian rationals and quaternions over Q(i).

Rationals are plain ``fractions.Fraction`` values.  A Gaussian rational is a
pair of rationals ``re + im*i``.  A quaternion is stored as a pair of Gaussian
rationals ``a + b*j`` with ``j*j = -1`` and ``alpha*j = j*conj(alpha)``.
"""

from __future__ import annotations

import re as _re
from fractions import Fraction

__all__ = [
    "Gaussian",
    "Quaternion",
    "ZERO",
    "ONE",
    "I",
    "as_gaussian",
    "as_rational",
    "parse_rational",
    "parse_gaussian",
    "parse_quaternion",
    "format_rational",
    "quaternion_multiply",
    "quaternion_anti_involution",
    "ScalarParseError",
]

_F0 = Fraction(0)
_F1 = Fraction(1)


class ScalarParseError(ValueError):
    pass


def as_rational(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return parse_rational(x)
    if isinstance(x, Gaussian):
        if x.im:
            raise ValueError(f"{x} is not real")
        return x.re
    raise TypeError(f"cannot convert {type(x).__name__} to a rational")


class Gaussian:
    """Element re + im*i of Q(i).  Immutable."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", as_rational(re))
        object.__setattr__(self, "im", as_rational(im))

    @staticmethod
    def _raw(re: Fraction, im: Fraction) -> "Gaussian":
        g = object.__new__(Gaussian)
        object.__setattr__(g, "re", re)
        object.__setattr__(g, "im", im)
        return g

    def __setattr__(self, name, value):
        raise AttributeError("Gaussian is immutable")

    def __reduce__(self):
        return (Gaussian, (self.re, self.im))

    # arithmetic -----------------------------------------------------------
    def __add__(self, other):
        if not isinstance(other, Gaussian):
            if isinstance(other, (int, Fraction)):
                return Gaussian._raw(self.re + other, self.im)
            return NotImplemented
        return Gaussian._raw(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, Gaussian):
            if isinstance(other, (int, Fraction)):
                return Gaussian._raw(self.re - other, self.im)
            return NotImplemented
        return Gaussian._raw(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        if isinstance(other, (int, Fraction)):
            return Gaussian._raw(other - self.re, -self.im)
        return NotImplemented

    def __neg__(self):
        return Gaussian._raw(-self.re, -self.im)

    def __pos__(self):
        return self

    def __mul__(self, other):
        if not isinstance(other, Gaussian):
            if isinstance(other, (int, Fraction)):
                return Gaussian._raw(self.re * other, self.im * other)
            return NotImplemented
        a, b, c, d = self.re, self.im, other.re, other.im
        if not b:
            if not d:
                return Gaussian._raw(a * c, _F0)
            return Gaussian._raw(a * c, a * d)
        if not d:
            return Gaussian._raw(a * c, b * c)
        return Gaussian._raw(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def inverse(self) -> "Gaussian":
        a, b = self.re, self.im
        if not b:
            if not a:
                raise ZeroDivisionError("Gaussian division by zero")
            return Gaussian._raw(1 / a, _F0)
        n = a * a + b * b
        return Gaussian._raw(a / n, -b / n)

    def __truediv__(self, other):
        if not isinstance(other, Gaussian):
            if isinstance(other, (int, Fraction)):
                if not other:
                    raise ZeroDivisionError("Gaussian division by zero")
                return Gaussian._raw(self.re / other, self.im / other)
            return NotImplemented
        if not other.im:
            c = other.re
            if not c:
                raise ZeroDivisionError("Gaussian division by zero")
            return Gaussian._raw(self.re / c, self.im / c)
        return self * other.inverse()

    def __rtruediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return Gaussian._raw(Fraction(other), _F0) / self
        return NotImplemented

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        out, base = ONE, self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def conjugate(self) -> "Gaussian":
        if not self.im:
            return self
        return Gaussian._raw(self.re, -self.im)

    def norm(self) -> Fraction:
        """|z|^2 as a rational."""
        return self.re * self.re + self.im * self.im

    def is_real(self) -> bool:
        return not self.im

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        if isinstance(other, Gaussian):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Fraction)):
            return not self.im and self.re == other
        return NotImplemented

    def __hash__(self):
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    def __repr__(self):
        return f"Gaussian({format_gaussian(self)!r})"

    def __str__(self):
        return format_gaussian(self)


ZERO = Gaussian._raw(_F0, _F0)
ONE = Gaussian._raw(_F1, _F0)
I = Gaussian._raw(_F0, _F1)


def as_gaussian(x) -> Gaussian:
    if isinstance(x, Gaussian):
        return x
    if isinstance(x, (int, Fraction)):
        return Gaussian._raw(Fraction(x), _F0)
    if isinstance(x, str):
        return parse_gaussian(x)
    raise TypeError(f"cannot convert {type(x).__name__} to a Gaussian rational")


class Quaternion:
    """Quaternion a + b*j with a, b in Q(i).  Immutable."""

    __slots__ = ("a", "b")

    def __init__(self, a=0, b=0):
        object.__setattr__(self, "a", as_gaussian(a))
        object.__setattr__(self, "b", as_gaussian(b))

    def __setattr__(self, name, value):
        raise AttributeError("Quaternion is immutable")

    def __reduce__(self):
        return (Quaternion, (self.a, self.b))

    def __add__(self, other):
        other = _as_quaternion(other)
        if other is None:
            return NotImplemented
        return Quaternion(self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __sub__(self, other):
        other = _as_quaternion(other)
        if other is None:
            return NotImplemented
        return Quaternion(self.a - other.a, self.b - other.b)

    def __rsub__(self, other):
        other = _as_quaternion(other)
        if other is None:
            return NotImplemented
        return other - self

    def __neg__(self):
        return Quaternion(-self.a, -self.b)

    def __mul__(self, other):
        other = _as_quaternion(other)
        if other is None:
            return NotImplemented
        return quaternion_multiply(self, other)

    def __rmul__(self, other):
        other = _as_quaternion(other)
        if other is None:
            return NotImplemented
        return quaternion_multiply(other, self)

    def q(self) -> "Quaternion":
        return quaternion_anti_involution(self)

    def conjugate(self) -> "Quaternion":
        """Standard conjugate conj(a) - b j, so that x x* = |a|^2 + |b|^2."""
        return Quaternion(self.a.conjugate(), -self.b)

    def norm(self) -> Fraction:
        return self.a.norm() + self.b.norm()

    def inverse(self) -> "Quaternion":
        n = self.norm()
        if not n:
            raise ZeroDivisionError("quaternion division by zero")
        c = self.conjugate()
        return Quaternion(c.a / n, c.b / n)

    def __bool__(self):
        return bool(self.a) or bool(self.b)

    def __eq__(self, other):
        other = _as_quaternion(other)
        if other is None:
            return NotImplemented
        return self.a == other.a and self.b == other.b

    def __hash__(self):
        return hash((self.a, self.b))

    def __repr__(self):
        return f"Quaternion({format_quaternion(self)!r})"

    def __str__(self):
        return format_quaternion(self)


QZERO = Quaternion(0, 0)
QONE = Quaternion(1, 0)
QJ = Quaternion(0, 1)


def _as_quaternion(x):
    if isinstance(x, Quaternion):
        return x
    if isinstance(x, (Gaussian, int, Fraction)):
        return Quaternion(x, 0)
    return None


def quaternion_multiply(x: Quaternion, y: Quaternion) -> Quaternion:
    """(alpha + beta j)(gamma + delta j) = (alpha gamma - beta conj(delta)) + (alpha delta + beta conj(gamma)) j."""
    al, be, ga, de = x.a, x.b, y.a, y.b
    return Quaternion(al * ga - be * de.conjugate(), al * de + be * ga.conjugate())


def quaternion_anti_involution(x: Quaternion) -> Quaternion:
    """alpha + beta j  ->  alpha - conj(beta) j."""
    return Quaternion(x.a, -x.b.conjugate())


# text grammar ------------------------------------------------------------

_RAT = r"[+-]?\d+(?:/\d+)?"
_RAT_RE = _re.compile(rf"^\s*({_RAT})\s*$")


def parse_rational(text: str) -> Fraction:
    m = _RAT_RE.match(text)
    if not m:
        raise ScalarParseError(f"bad rational: {text!r}")
    try:
        return Fraction(m.group(1))
    except ZeroDivisionError as exc:
        raise ScalarParseError(f"zero denominator in {text!r}") from exc


_UNSIGNED = r"\d+(?:/\d+)?"
_GAUSS_RE = _re.compile(
    rf"^(?:(?P<re>[+-]?{_UNSIGNED})(?:(?P<sign>[+-])(?:(?P<coef>{_UNSIGNED})\*)?i)?"
    rf"|(?P<isign>[+-])?(?:(?P<icoef>{_UNSIGNED})\*)?i)$"
)


def parse_gaussian(text: str) -> Gaussian:
    """Parse ``p/q+r/s*i``; either part may be omitted (``3``, ``-i``, ``1/2*i``)."""
    s = text.replace(" ", "")
    m = _GAUSS_RE.match(s)
    if not s or not m:
        raise ScalarParseError(f"bad Gaussian rational: {text!r}")
    try:
        if m.group("re") is not None:
            re_part = Fraction(m.group("re"))
            sign, coef = m.group("sign"), m.group("coef")
            has_i = sign is not None
        else:
            re_part = _F0
            sign, coef = m.group("isign"), m.group("icoef")
            has_i = True
        im_part = _F0
        if has_i:
            im_part = Fraction(coef) if coef else _F1
            if sign == "-":
                im_part = -im_part
    except ZeroDivisionError as exc:
        raise ScalarParseError(f"zero denominator in {text!r}") from exc
    return Gaussian._raw(re_part, im_part)


_QUAT_RE = _re.compile(r"^(?P<a>.*?)(?:(?P<sign>[+-])\((?P<b>[^()]*)\)\*j)?$")


def parse_quaternion(text: str) -> Quaternion:
    """Parse ``<gaussian>+(<gaussian>)*j``; the j part is optional."""
    s = text.replace(" ", "")
    m = _QUAT_RE.match(s)
    if not m:
        raise ScalarParseError(f"bad quaternion: {text!r}")
    a_txt, sign, b_txt = m.group("a"), m.group("sign"), m.group("b")
    if b_txt is None and s.endswith("j"):
        raise ScalarParseError(f"bad quaternion: {text!r}")
    a = parse_gaussian(a_txt) if a_txt else ZERO
    if b_txt is None:
        return Quaternion(a, 0)
    b = parse_gaussian(b_txt)
    if sign == "-":
        b = -b
    return Quaternion(a, b)


def format_rational(x: Fraction) -> str:
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def format_gaussian(z: Gaussian) -> str:
    if not z.im:
        return format_rational(z.re)
    im = z.im
    mag = format_rational(abs(im))
    im_txt = "i" if abs(im) == 1 else f"{mag}*i"
    if not z.re:
        return ("-" if im < 0 else "") + im_txt
    return format_rational(z.re) + ("-" if im < 0 else "+") + im_txt


def format_quaternion(x: Quaternion) -> str:
    return f"{format_gaussian(x.a)}+({format_gaussian(x.b)})*j"
