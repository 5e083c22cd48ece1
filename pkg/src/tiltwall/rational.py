"""Exact rational helpers: coercion, canonical strings, square roots."""

from __future__ import annotations

import math
import re
from decimal import ROUND_HALF_EVEN, Decimal, localcontext
from fractions import Fraction
from numbers import Rational

from .errors import InvalidAmpleClass, ParseError

_CANONICAL = re.compile(r"^(0|-?[1-9][0-9]*)(/([1-9][0-9]*))?$")


def Q(x) -> Fraction:
    """Coerce ``x`` to a Fraction without ever passing through floating point.

    Accepts ints, Fractions (any ``numbers.Rational``) and strings such as
    ``"3/4"``. Floats are refused.
    """
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("bool is not a rational")
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    if isinstance(x, str):
        return parse_rational(x, strict=False)
    raise TypeError(f"cannot use {type(x).__name__} as an exact rational")


def parse_rational(text: str, strict: bool = True) -> Fraction:
    """Parse ``"p/q"`` or ``"p"``.

    With ``strict`` the string must be the canonical lowest-terms form
    produced by :func:`format_rational` (no ``+``, no ``2/4``, no ``3/1``).
    """
    if not isinstance(text, str):
        raise ParseError(f"expected rational string, got {text!r}")
    s = text.strip()
    m = _CANONICAL.match(s)
    if not strict and m is None:
        m = re.match(r"^[+-]?[0-9]+(/[0-9]+)?$", s)
    if m is None:
        raise ParseError(f"malformed rational {text!r}")
    num, _, den = s.partition("/")
    if den and int(den) == 0:
        raise ParseError(f"zero denominator in {text!r}")
    value = Fraction(int(num), int(den) if den else 1)
    if strict and format_rational(value) != s:
        raise ParseError(f"rational {text!r} is not in lowest terms")
    return value


def format_rational(q: Fraction) -> str:
    return str(Fraction(q))


def to_decimal_string(q: Fraction, places: int = 12) -> str:
    """Render ``q`` rounded half-even to ``places`` fractional digits."""
    q = Fraction(q)
    with localcontext() as ctx:
        ctx.prec = max(50, places + len(str(abs(q.numerator))) + 10)
        d = Decimal(q.numerator) / Decimal(q.denominator)
        return str(d.quantize(Decimal(1).scaleb(-places), rounding=ROUND_HALF_EVEN))


def rational_sqrt(x: Fraction) -> Fraction | None:
    """Exact square root of a nonnegative rational, or None if irrational."""
    x = Fraction(x)
    if x < 0:
        return None
    p, q = math.isqrt(x.numerator), math.isqrt(x.denominator)
    if p * p == x.numerator and q * q == x.denominator:
        return Fraction(p, q)
    return None


def resolve_alpha_sq(alpha, t) -> Fraction:
    """Return t = alpha**2 from whichever of the two was supplied."""
    if (alpha is None) == (t is None):
        raise TypeError("give exactly one of alpha and t (= alpha**2)")
    if t is not None:
        t = Q(t)
        if t <= 0:
            raise InvalidAmpleClass(f"t = alpha^2 must be positive, got {t}")
        return t
    alpha = Q(alpha)
    if alpha <= 0:
        raise InvalidAmpleClass(f"alpha must be positive, got {alpha}")
    return alpha * alpha


def check_alpha(alpha) -> Fraction:
    alpha = Q(alpha)
    if alpha <= 0:
        raise InvalidAmpleClass(f"alpha must be positive, got {alpha}")
    return alpha
