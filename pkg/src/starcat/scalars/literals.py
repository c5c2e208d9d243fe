"""
Text forms of scalars.

Literal grammar (whitespace ignored, omitted terms allowed):

- rational:   "p/q" or "n"
- gaussian:   "a/b+c/d*i"
- quaternion: "a+b*i+c*j+d*k"
- ratfun:     "(c0+c1*x+c2*x^2)/(d0+d1*x)" or a bare polynomial

format_scalar() always emits the canonical form, so
parse_scalar(format_scalar(a), a.ring) == a.
"""

import re
from fractions import Fraction

from starcat.errors import DivisionByZeroError, LiteralParseError
from starcat.scalars.base import (
    Gaussian,
    Quaternion,
    Rational,
    RingId,
    Scalar,
)
from starcat.scalars.ratfun import (
    POLY_RING,
    RatFun,
    poly_coefficients,
    poly_from_coefficients,
)

_TERM = re.compile(
    r"^(?P<coef>\d+(?:/\d+)?)?\*?(?P<unit>[ijk]|x(?:\^(?P<exp>\d+))?)?$"
)
_SIGNED_TERM = re.compile(r"([+-]?)([^+-]*)")
_FRACTION = re.compile(r"\((?P<num>[^()]*)\)(?:/\((?P<den>[^()]*)\))?")

_UNITS = {
    RingId.RATIONAL: ("",),
    RingId.GAUSSIAN: ("", "i"),
    RingId.QUATERNION: ("", "i", "j", "k"),
}


def _split_terms(text: str) -> list[tuple[str, Fraction]]:
    """Split a sum into (unit, coefficient) pairs; unit "x3" for x^3."""
    if not text:
        raise LiteralParseError("empty literal")
    terms: list[tuple[str, Fraction]] = []
    for match in _SIGNED_TERM.finditer(text):
        sign, body = match.groups()
        if not sign and not body:
            continue
        term = _TERM.match(body)
        if not body or term is None or not (
            term.group("coef") or term.group("unit")
        ):
            raise LiteralParseError(f"malformed term {sign + body!r}")
        try:
            coefficient = Fraction(term.group("coef") or "1")
        except ZeroDivisionError as exc:
            raise LiteralParseError(f"zero denominator in {body!r}") from exc
        if sign == "-":
            coefficient = -coefficient
        unit = term.group("unit") or ""
        if unit.startswith("x"):
            unit = "x" + (term.group("exp") or "1")
        terms.append((unit, coefficient))
    return terms


def _collect(text: str, allowed: tuple[str, ...]) -> dict[str, Fraction]:
    collected: dict[str, Fraction] = {}
    for unit, coefficient in _split_terms(text):
        if unit not in allowed:
            raise LiteralParseError(f"unexpected unit {unit!r} in {text!r}")
        collected[unit] = collected.get(unit, Fraction(0)) + coefficient
    return collected


def _parse_polynomial(text: str) -> dict[int, Fraction]:
    coefficients: dict[int, Fraction] = {}
    for unit, coefficient in _split_terms(text):
        if unit and not unit.startswith("x"):
            raise LiteralParseError(f"unexpected unit {unit!r} in {text!r}")
        degree = int(unit[1:]) if unit else 0
        coefficients[degree] = (
            coefficients.get(degree, Fraction(0)) + coefficient
        )
    return coefficients


def _parse_ratfun(text: str) -> RatFun:
    match = _FRACTION.fullmatch(text)
    if match is not None:
        num_text, den_text = match.group("num"), match.group("den") or "1"
    elif "(" in text or ")" in text:
        raise LiteralParseError(f"unbalanced rational function {text!r}")
    else:
        num_text, den_text = text, "1"
    num = poly_from_coefficients(_parse_polynomial(num_text))
    den = poly_from_coefficients(_parse_polynomial(den_text))
    try:
        return RatFun.from_polys(num, den)
    except DivisionByZeroError as exc:
        raise LiteralParseError(f"zero denominator in {text!r}") from exc


def parse_scalar(text: str, ring: RingId) -> Scalar:
    """
    Parse a scalar literal in the given ring.

    Args:
        text: The literal, e.g. "1/2", "1+i", "(1+x^2)/(1-x)"
        ring: The ring the literal belongs to

    Returns:
        The canonical Scalar

    Raises:
        LiteralParseError: If the literal is malformed for the ring
    """
    compact = re.sub(r"\s+", "", text)
    if ring is RingId.RATFUN:
        return _parse_ratfun(compact)
    parts = _collect(compact, _UNITS[ring])
    zero = Fraction(0)
    if ring is RingId.RATIONAL:
        return Rational(parts.get("", zero))
    if ring is RingId.GAUSSIAN:
        return Gaussian(parts.get("", zero), parts.get("i", zero))
    return Quaternion(
        parts.get("", zero),
        parts.get("i", zero),
        parts.get("j", zero),
        parts.get("k", zero),
    )


def _format_sum(terms: list[tuple[Fraction, str]]) -> str:
    """Join (coefficient, unit) terms, skipping zeros."""
    pieces: list[str] = []
    for coefficient, unit in terms:
        if coefficient == 0:
            continue
        sign = "-" if coefficient < 0 else "+"
        magnitude = abs(coefficient)
        if not unit:
            body = str(magnitude)
        elif magnitude == 1:
            body = unit
        else:
            body = f"{magnitude}*{unit}"
        pieces.append(sign + body)
    if not pieces:
        return "0"
    text = "".join(pieces)
    return text[1:] if text.startswith("+") else text


def _format_polynomial(coefficients: dict[int, Fraction]) -> str:
    terms = []
    for degree in sorted(coefficients):
        unit = "" if degree == 0 else "x" if degree == 1 else f"x^{degree}"
        terms.append((coefficients[degree], unit))
    return _format_sum(terms)


def format_scalar(value: Scalar) -> str:
    """Canonical literal of a scalar."""
    if isinstance(value, Rational):
        return str(value.value)
    if isinstance(value, Gaussian):
        return _format_sum([(value.re, ""), (value.im, "i")])
    if isinstance(value, Quaternion):
        return _format_sum(
            [(value.a, ""), (value.b, "i"), (value.c, "j"), (value.d, "k")]
        )
    if isinstance(value, RatFun):
        num = _format_polynomial(poly_coefficients(value.num))
        if value.den == POLY_RING.one:
            return num
        den = _format_polynomial(poly_coefficients(value.den))
        return f"({num})/({den})"
    raise TypeError(f"not a scalar: {value!r}")
