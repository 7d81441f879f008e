"""Gaussian rational scalars.

Every quantity in the engine lives in Q(i): a value ``re + im*i`` with both
parts arbitrary-precision ``fractions.Fraction``.  Purely rational data never
acquires an imaginary part, so rational inputs stay rational through every
pipeline.  All operations are exact; there is no floating point anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import ParseError

_F0 = Fraction(0)
_F1 = Fraction(1)


@dataclass(frozen=True, slots=True)
class Scalar:
    """An element of Q(i), immutable and hashable.

    ``Fraction`` keeps numerators/denominators in lowest terms with a
    positive denominator, which makes equality structural.
    """

    re: Fraction = _F0
    im: Fraction = _F0

    # -- coercion ---------------------------------------------------------

    @staticmethod
    def of(value: "Scalar | Fraction | int | str") -> "Scalar":
        if isinstance(value, Scalar):
            return value
        if isinstance(value, (int, Fraction)):
            return Scalar(Fraction(value))
        if isinstance(value, str):
            return parse_scalar(value)
        raise TypeError(f"cannot build a Scalar from {type(value).__name__}")

    # -- predicates -------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.re and not self.im

    def is_rational(self) -> bool:
        return not self.im

    def __bool__(self) -> bool:
        return not self.is_zero()

    # -- field operations -------------------------------------------------

    @staticmethod
    def _coerce(value) -> "Scalar | None":
        if isinstance(value, Scalar):
            return value
        if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
            return Scalar(Fraction(value))
        return None

    def __add__(self, other):
        o = Scalar._coerce(other)
        if o is None:
            return NotImplemented
        return Scalar(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self) -> "Scalar":
        return Scalar(-self.re, -self.im)

    def __sub__(self, other):
        o = Scalar._coerce(other)
        if o is None:
            return NotImplemented
        return Scalar(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = Scalar._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = Scalar._coerce(other)
        if o is None:
            return NotImplemented
        if not self.im and not o.im:
            return Scalar(self.re * o.re)
        return Scalar(
            self.re * o.re - self.im * o.im,
            self.re * o.im + self.im * o.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = Scalar._coerce(other)
        if o is None:
            return NotImplemented
        if o.is_zero():
            raise ZeroDivisionError("scalar division by zero")
        if not self.im and not o.im:
            return Scalar(self.re / o.re)
        norm = o.re * o.re + o.im * o.im
        return Scalar(
            (self.re * o.re + self.im * o.im) / norm,
            (self.im * o.re - self.re * o.im) / norm,
        )

    def __rtruediv__(self, other):
        o = Scalar._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, exponent: int) -> "Scalar":
        if exponent < 0:
            return ONE / (self ** (-exponent))
        result = ONE
        base = self
        k = exponent
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def conjugate(self) -> "Scalar":
        return Scalar(self.re, -self.im)

    def inverse(self) -> "Scalar":
        return ONE / self

    # -- display ----------------------------------------------------------

    def __str__(self) -> str:
        return format_scalar(self)

    def __repr__(self) -> str:
        return f"Scalar({format_scalar(self)!r})"


ZERO = Scalar()
ONE = Scalar(_F1)
I = Scalar(_F0, _F1)


def scalar(value: "Scalar | Fraction | int | str") -> Scalar:
    """Shorthand coercion, used pervasively in fixtures and tests."""
    return Scalar.of(value)


def format_scalar(x: Scalar) -> str:
    """Canonical string form: ``a/b``, ``c/d*i`` or ``a/b+c/d*i``.

    Fractions print in lowest terms ("5/6", "-2", "0"); the imaginary part
    carries an explicit sign when a real part is present.
    """
    if not x.im:
        return str(x.re)
    imag = f"{x.im}*i"
    if not x.re:
        return imag
    if x.im > 0:
        return f"{x.re}+{imag}"
    return f"{x.re}-{-x.im}*i"


def parse_scalar(text: str) -> Scalar:
    """Parse the canonical string form back into a Scalar."""
    s = text.strip().replace(" ", "")
    if not s:
        raise ParseError("empty scalar string")
    try:
        if s.endswith("i"):
            body = s[:-1]
            if body.endswith("*"):
                body = body[:-1]
            split = None
            for k in range(1, len(body)):
                if body[k] in "+-" and body[k - 1] not in "+-/*":
                    split = k
            if split is None:
                re_part, im_part = "0", body
            else:
                re_part, im_part = body[:split], body[split:]
            if im_part in ("", "+"):
                im = _F1
            elif im_part == "-":
                im = -_F1
            else:
                im = Fraction(im_part)
            return Scalar(Fraction(re_part), im)
        return Scalar(Fraction(s))
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"bad scalar {text!r}: {exc}") from None
