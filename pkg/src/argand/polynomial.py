"""Complex polynomials: evaluation, Taylor shift, deflation, normalization.

Coefficients are stored highest degree first everywhere, in storage and in
all I/O, so ``Polynomial([1, 0, -1])`` is ``x**2 - 1``.

The inner loops (Horner, synthetic division) run on parallel lists of
real and imaginary parts instead of allocating a :class:`DirectedLine` per
operation.  They apply exactly the same product rule as
:func:`argand.directed_line.mul`; the test-suite checks the two agree.
"""

from dataclasses import dataclass
import math

from .directed_line import DirectedLine, ZERO, as_line, modulus
from .errors import EmptyPolynomialError, LeadingZeroError

__all__ = [
    "ZERO_THRESHOLD",
    "Polynomial",
    "ShiftedExpansion",
    "evaluate",
    "taylor_coefficients",
    "taylor_shift",
    "deflate",
    "monic_normalize",
    "cauchy_root_bound",
    "residual_scale",
    "horner_error_bound",
]

#: Relative level below which a Taylor-shift coefficient counts as zero.
ZERO_THRESHOLD = 1e-14


class Polynomial:
    """A polynomial with complex coefficients, highest degree first.

    The leading coefficient must be nonzero; a degree-0 polynomial is
    allowed (it is what deflating a linear polynomial leaves behind) but
    the solvers require degree >= 1.
    """

    __slots__ = ("coefficients", "_re", "_im")

    def __init__(self, coefficients):
        coeffs = tuple(as_line(c) for c in coefficients)
        if not coeffs:
            raise EmptyPolynomialError("a polynomial needs at least one coefficient")
        if coeffs[0].is_zero():
            raise LeadingZeroError("leading coefficient is zero")
        object.__setattr__(self, "coefficients", coeffs)
        object.__setattr__(self, "_re", [c.re for c in coeffs])
        object.__setattr__(self, "_im", [c.im for c in coeffs])

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    @classmethod
    def from_roots(cls, roots):
        """The monic polynomial with the given roots (with multiplicity)."""
        coeffs = [DirectedLine(1.0, 0.0)]
        for r in roots:
            r = as_line(r)
            nxt = coeffs + [ZERO]
            for k in range(1, len(nxt)):
                nxt[k] = nxt[k] - r * coeffs[k - 1]
            coeffs = nxt
        return cls(coeffs)

    @property
    def degree(self):
        return len(self.coefficients) - 1

    @property
    def leading(self):
        return self.coefficients[0]

    def is_monic(self):
        return self.coefficients[0] == 1.0

    def __call__(self, x):
        return evaluate(self, as_line(x))

    def __len__(self):
        return len(self.coefficients)

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.coefficients == other.coefficients

    def __hash__(self):
        return hash(self.coefficients)

    def __repr__(self):
        return f"Polynomial([{', '.join(str(c) for c in self.coefficients)}])"


@dataclass(frozen=True)
class ShiftedExpansion:
    """``y(z + i) = base + sum(c * i**k for k, c in terms)``.

    Only coefficients that survive the zero threshold are kept, so the
    first term is the lowest-order nonvanishing one and the last is always
    ``(degree, leading coefficient)``.
    """

    base: DirectedLine
    terms: tuple

    @property
    def degree(self):
        return self.terms[-1][0]

    @property
    def lowest(self):
        """``(exponent, coefficient)`` of the first surviving term."""
        return self.terms[0]

    def is_degenerate(self):
        """True when nothing but the top-degree term survives."""
        return len(self.terms) == 1

    def evaluate(self, w):
        total_re, total_im = self.base.re, self.base.im
        wr, wi = w.re, w.im
        for k, c in self.terms:
            pr, pi = _pow_pair(wr, wi, k)
            total_re += c.re * pr - c.im * pi
            total_im += c.re * pi + c.im * pr
        return DirectedLine(total_re, total_im)


def _pow_pair(xr, xi, k):
    rr, ri = 1.0, 0.0
    while k:
        if k & 1:
            rr, ri = rr * xr - ri * xi, rr * xi + ri * xr
        k >>= 1
        if k:
            xr, xi = xr * xr - xi * xi, 2.0 * xr * xi
    return rr, ri


def _horner(cre, cim, xr, xi):
    sr, si = cre[0], cim[0]
    for k in range(1, len(cre)):
        sr, si = sr * xr - si * xi + cre[k], sr * xi + si * xr + cim[k]
    return sr, si


def evaluate(p, x):
    """Value of ``p`` at ``x`` by Horner's scheme."""
    sr, si = _horner(p._re, p._im, x.re, x.im)
    return DirectedLine(sr, si)


def _synthetic_division(cre, cim, xr, xi):
    """Divide by ``(t - x)``: returns quotient parts and the remainder."""
    n = len(cre)
    qr = [0.0] * (n - 1)
    qi = [0.0] * (n - 1)
    sr, si = cre[0], cim[0]
    for k in range(1, n):
        qr[k - 1] = sr
        qi[k - 1] = si
        sr, si = sr * xr - si * xi + cre[k], sr * xi + si * xr + cim[k]
    return qr, qi, sr, si


def taylor_coefficients(p, z):
    """All coefficients of ``y(z + i)`` in powers of ``i``, lowest first.

    Entry ``k`` multiplies ``i**k``; entry 0 is ``y(z)``.  Computed by
    ``n`` rounds of synthetic division by ``(x - z)``, nothing dropped.
    """
    cre, cim = list(p._re), list(p._im)
    xr, xi = z.re, z.im
    out = []
    for _ in range(p.degree):
        cre, cim, rr, ri = _synthetic_division(cre, cim, xr, xi)
        out.append(DirectedLine(rr, ri))
    out.append(DirectedLine(cre[0], cim[0]))
    return out


def taylor_shift(p, z, zero_threshold=ZERO_THRESHOLD):
    """Expand ``p`` about ``z`` and drop the coefficients that vanish.

    A coefficient ``c_k`` (``k >= 1``) is dropped when
    ``|c_k| <= zero_threshold * (1 + max_k |c_k|)``.  The top term is never
    dropped.
    """
    if p.degree < 1:
        raise ValueError("Taylor shift needs degree >= 1")
    coeffs = taylor_coefficients(p, z)
    mods = [modulus(c) for c in coeffs]
    cutoff = zero_threshold * (1.0 + max(mods[1:]))
    n = p.degree
    terms = tuple(
        (k, coeffs[k]) for k in range(1, n + 1) if k == n or mods[k] > cutoff
    )
    return ShiftedExpansion(coeffs[0], terms)


def deflate(p, root):
    """Split off ``(x - root)``: returns ``(quotient, remainder)``."""
    if p.degree < 1:
        raise ValueError("cannot deflate a constant")
    qr, qi, rr, ri = _synthetic_division(p._re, p._im, root.re, root.im)
    quotient = Polynomial([DirectedLine(a, b) for a, b in zip(qr, qi)])
    return quotient, DirectedLine(rr, ri)


def monic_normalize(p):
    """Divide through by the leading coefficient; the roots are unchanged."""
    lead = p.coefficients[0]
    if lead.is_zero():
        raise LeadingZeroError("leading coefficient is zero")
    if lead == 1.0:
        return p
    return Polynomial([c / lead for c in p.coefficients])


def cauchy_root_bound(p):
    """``1 + max |a_k / a_n|`` over the non-leading coefficients.

    Every root of ``p`` lies in the closed disk of this radius.
    """
    lead = modulus(p.coefficients[0])
    if p.degree < 1:
        return 1.0
    return 1.0 + max(modulus(c) for c in p.coefficients[1:]) / lead


def residual_scale(p, z):
    """``sum |a_k| * max(1, |z|)**k``, the size a residual at ``z`` is judged against."""
    s = max(1.0, modulus(z))
    total = 0.0
    for c in p.coefficients:
        total = total * s + modulus(c)
    return total


def horner_error_bound(p, z):
    """Worst-case rounding error of :func:`evaluate` at ``z``.

    Roughly ``2n`` unit roundoffs times the absolute Horner sum; residuals
    below this are indistinguishable from zero in double precision.
    """
    s = modulus(z)
    total = 0.0
    for c in p.coefficients:
        total = total * s + modulus(c)
    return 2.0 * max(p.degree, 1) * 2.0 * math.ulp(1.0) * total
