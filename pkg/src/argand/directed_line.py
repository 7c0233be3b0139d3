"""Complex arithmetic on directed lines.

A directed line is a segment of the plane with a length and a direction,
drawn relative to a fixed positive unit ``+1`` and its perpendicular
``+sqrt(-1)``.  Lines are stored in rectangular form ``re + im*i``; the
polar view (modulus, argument) is derived on demand.

Addition composes displacements (FG + GH = FH).  Multiplication is the
fourth proportional with unity as first term: lengths multiply and angles
add, which in rectangular form is the familiar
``(a*c - b*d, a*d + b*c)``.

Everything here is pure Python floats; Python's built-in ``complex`` is not
used anywhere in the arithmetic.
"""

import math
import re as _re

from .errors import NegativeModulusError, NonFiniteError, ParseError, ZeroArgumentError

__all__ = [
    "DirectedLine",
    "ZERO",
    "ONE",
    "I",
    "add",
    "sub",
    "neg",
    "mul",
    "div",
    "conj",
    "modulus",
    "argument",
    "from_polar",
    "int_pow",
    "principal_nth_root",
    "as_line",
    "format_line",
    "parse_line",
]

_isfinite = math.isfinite


class DirectedLine:
    """An immutable complex value ``re + im*sqrt(-1)``.

    Both components must be finite; constructing a line from NaN or an
    infinity raises :class:`NonFiniteError`.  This is also how overflow in
    any arithmetic operation surfaces, since every result goes through the
    constructor.
    """

    __slots__ = ("re", "im")

    def __init__(self, re=0.0, im=0.0):
        re = float(re)
        im = float(im)
        if not (_isfinite(re) and _isfinite(im)):
            raise NonFiniteError(f"non-finite directed line ({re!r}, {im!r})")
        object.__setattr__(self, "re", re)
        object.__setattr__(self, "im", im)

    def __setattr__(self, name, value):
        raise AttributeError("DirectedLine is immutable")

    def __reduce__(self):
        return (DirectedLine, (self.re, self.im))

    # -- views ----------------------------------------------------------------

    @property
    def modulus(self):
        return modulus(self)

    @property
    def argument(self):
        return argument(self)

    def as_pair(self):
        return (self.re, self.im)

    def is_zero(self):
        return self.re == 0.0 and self.im == 0.0

    def conjugate(self):
        return DirectedLine(self.re, -self.im)

    # -- arithmetic -----------------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return DirectedLine(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return DirectedLine(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return DirectedLine(other.re - self.re, other.im - self.im)

    def __neg__(self):
        return DirectedLine(-self.re, -self.im)

    def __pos__(self):
        return self

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return mul(self, other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return div(self, other)

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return div(other, self)

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        return int_pow(self, k)

    def __abs__(self):
        return modulus(self)

    # -- comparison / display ------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, DirectedLine):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, float)):
            return self.im == 0.0 and self.re == other
        return NotImplemented

    def __hash__(self):
        return hash((self.re, self.im))

    def __repr__(self):
        return f"DirectedLine({self.re!r}, {self.im!r})"

    def __str__(self):
        return format_line(self)


def _coerce(value):
    if isinstance(value, DirectedLine):
        return value
    if isinstance(value, (int, float)) and not isinstance(value, bool):
        return DirectedLine(value, 0.0)
    return NotImplemented


def as_line(value):
    """Convert a number, ``(re, im)`` pair, complex or text to a DirectedLine."""
    if isinstance(value, DirectedLine):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not directed lines")
    if isinstance(value, (int, float)):
        return DirectedLine(value, 0.0)
    if isinstance(value, complex):
        return DirectedLine(value.real, value.imag)
    if isinstance(value, str):
        return parse_line(value)
    try:
        re_part, im_part = value
    except (TypeError, ValueError):
        raise TypeError(f"cannot interpret {value!r} as a directed line") from None
    return DirectedLine(re_part, im_part)


ZERO = DirectedLine(0.0, 0.0)
ONE = DirectedLine(1.0, 0.0)
I = DirectedLine(0.0, 1.0)


# -- the two rules -------------------------------------------------------------

def add(u, v):
    """Compose two displacements: componentwise sum."""
    return DirectedLine(u.re + v.re, u.im + v.im)


def sub(u, v):
    return DirectedLine(u.re - v.re, u.im - v.im)


def neg(v):
    return DirectedLine(-v.re, -v.im)


def mul(u, v):
    """Product by the proportion rule (moduli multiply, arguments add)."""
    return DirectedLine(u.re * v.re - u.im * v.im, u.re * v.im + u.im * v.re)


def conj(v):
    return DirectedLine(v.re, -v.im)


def div(u, v):
    """Quotient ``u / v`` using Smith's scaling to avoid spurious overflow."""
    a, b, c, d = u.re, u.im, v.re, v.im
    if c == 0.0 and d == 0.0:
        raise ZeroDivisionError("division by the zero directed line")
    if abs(c) >= abs(d):
        ratio = d / c
        denom = c + d * ratio
        return DirectedLine((a + b * ratio) / denom, (b - a * ratio) / denom)
    ratio = c / d
    denom = c * ratio + d
    return DirectedLine((a * ratio + b) / denom, (b * ratio - a) / denom)


# -- polar view ------------------------------------------------------------------

def modulus(v):
    """Length ``sqrt(re**2 + im**2)``, scaled by the larger component."""
    x = abs(v.re)
    y = abs(v.im)
    if x < y:
        x, y = y, x
    if x == 0.0:
        return 0.0
    q = y / x
    return x * math.sqrt(1.0 + q * q)


def argument(v):
    """Angle with the positive real direction, in ``(-pi, pi]``."""
    if v.re == 0.0 and v.im == 0.0:
        raise ZeroArgumentError("the zero line has no direction")
    theta = math.atan2(v.im, v.re)
    # atan2(-0.0, negative) gives -pi, which lies outside the half-open range.
    if theta == -math.pi:
        theta = math.pi
    return theta


def from_polar(r, theta):
    """The line of length ``r`` at angle ``theta``."""
    if r < 0:
        raise NegativeModulusError(f"negative modulus {r!r}")
    if not math.isfinite(theta):
        raise NonFiniteError(f"non-finite angle {theta!r}")
    return DirectedLine(r * math.cos(theta), r * math.sin(theta))


# -- powers and roots ---------------------------------------------------------------

def int_pow(v, k):
    """``v**k`` for integer ``k >= 0`` by repeated squaring; ``v**0`` is 1."""
    if k < 0:
        raise ValueError("exponent must be non-negative")
    result = ONE
    base = v
    while k:
        if k & 1:
            result = mul(result, base)
        k >>= 1
        if k:
            base = mul(base, base)
    return result


def principal_nth_root(v, n):
    """The nth root whose argument is ``argument(v) / n``; zero maps to zero."""
    if n < 1:
        raise ValueError("root order must be at least 1")
    if v.re == 0.0 and v.im == 0.0:
        return ZERO
    if n == 1:
        return v
    return from_polar(modulus(v) ** (1.0 / n), argument(v) / n)


# -- text form ------------------------------------------------------------------------

def _fmt(x):
    text = repr(x)
    if text.endswith(".0"):
        text = text[:-2]
    return text


def format_line(v):
    """Render as ``a+bi`` / ``a-bi`` with shortest round-trip decimals."""
    im_text = _fmt(abs(v.im))
    sign = "-" if math.copysign(1.0, v.im) < 0 else "+"
    return f"{_fmt(v.re)}{sign}{im_text}i"


_NUM = r"(?:\d+(?:\.\d*)?|\.\d+)(?:[eE][+-]?\d+)?"
_REAL_ONLY = _re.compile(rf"^\s*(?P<s>[+-]?)\s*(?P<x>{_NUM})\s*$")
_IMAG_ONLY = _re.compile(rf"^\s*(?P<s>[+-]?)\s*(?P<y>{_NUM})?\s*i\s*$")
_FULL = _re.compile(
    rf"^\s*(?P<s>[+-]?)\s*(?P<x>{_NUM})\s*(?P<t>[+-])\s*(?P<y>{_NUM})?\s*i\s*$"
)


def parse_line(text):
    """Parse ``"a"``, ``"bi"``, ``"a+bi"`` or ``"a-bi"`` (whitespace allowed)."""
    m = _REAL_ONLY.match(text)
    if m:
        return DirectedLine(float(m["s"] + m["x"]), 0.0)
    m = _IMAG_ONLY.match(text)
    if m:
        return DirectedLine(0.0, float(m["s"] + (m["y"] or "1")))
    m = _FULL.match(text)
    if m:
        return DirectedLine(float(m["s"] + m["x"]), float(m["t"] + (m["y"] or "1")))
    raise ParseError(f"cannot parse {text!r} as a directed line")
