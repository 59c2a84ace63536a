"""Exact integer polynomials with non-negative coefficients.

Coefficients are Python ints, so nothing overflows regardless of degree.
"""

from __future__ import annotations

import json
import re
from typing import Any, Iterable, Mapping

from .errors import PolynomialFormatError


class AlliancePolynomial:
    """Dense coefficient vector ``coeffs[k]`` = coefficient of ``x**k``.

    Trailing zeros are stripped, so ``degree`` is the highest nonzero index
    (``-1`` for the zero polynomial).
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()) -> None:
        cs = [int(c) for c in coeffs]
        if any(c < 0 for c in cs):
            raise ValueError(f"negative coefficient in {cs}")
        while cs and cs[-1] == 0:
            cs.pop()
        self._coeffs = tuple(cs)

    @classmethod
    def from_mapping(cls, terms: Mapping[int, int]) -> AlliancePolynomial:
        if not terms:
            return cls()
        if min(terms) < 0:
            raise ValueError("negative exponent")
        cs = [0] * (max(terms) + 1)
        for k, c in terms.items():
            cs[k] += c
        return cls(cs)

    @classmethod
    def monomial(cls, coeff: int, power: int) -> AlliancePolynomial:
        return cls.from_mapping({power: coeff})

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self._coeffs

    @property
    def degree(self) -> int:
        return len(self._coeffs) - 1

    def __getitem__(self, k: int) -> int:
        return self._coeffs[k] if 0 <= k < len(self._coeffs) else 0

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, AlliancePolynomial):
            return self._coeffs == other._coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __add__(self, other: AlliancePolynomial) -> AlliancePolynomial:
        return poly_add(self, other)

    def __mul__(self, other: AlliancePolynomial) -> AlliancePolynomial:
        return poly_mul(self, other)

    def __call__(self, x: int) -> int:
        acc = 0
        for c in reversed(self._coeffs):
            acc = acc * x + c
        return acc

    def terms(self) -> dict[int, int]:
        return {k: c for k, c in enumerate(self._coeffs) if c}

    def __repr__(self) -> str:
        return f"AlliancePolynomial({format_poly(self)!r})"

    def __str__(self) -> str:
        return format_poly(self)


ZERO = AlliancePolynomial()
ONE = AlliancePolynomial([1])


def poly_add(p: AlliancePolynomial, q: AlliancePolynomial) -> AlliancePolynomial:
    a, b = p.coeffs, q.coeffs
    if len(a) < len(b):
        a, b = b, a
    return AlliancePolynomial([x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)])


def poly_mul(p: AlliancePolynomial, q: AlliancePolynomial) -> AlliancePolynomial:
    a, b = p.coeffs, q.coeffs
    if not a or not b:
        return ZERO
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return AlliancePolynomial(out)


def evaluate_at_one(p: AlliancePolynomial) -> int:
    return sum(p.coeffs)


def min_support(p: AlliancePolynomial) -> int:
    """Lowest power with a nonzero coefficient."""
    for k, c in enumerate(p.coeffs):
        if c:
            return k
    raise ValueError("zero polynomial has no support")


# -- text form ---------------------------------------------------------------


def format_poly(p: AlliancePolynomial) -> str:
    """Descending powers, unit coefficients elided: ``"x^4 + 4x^3 + 4x^2"``."""
    if not p:
        return "0"
    parts = []
    for k in range(p.degree, -1, -1):
        c = p[k]
        if not c:
            continue
        if k == 0:
            parts.append(str(c))
            continue
        head = "" if c == 1 else str(c)
        parts.append(f"{head}x" if k == 1 else f"{head}x^{k}")
    return " + ".join(parts)


_TERM = re.compile(r"^(?:(\d+)\s*\*?\s*)?(x(?:\s*\^\s*(\d+))?)?$")


def parse_poly(text: str) -> AlliancePolynomial:
    """Inverse of :func:`format_poly`; also accepts ``c*x^k`` and any term order."""
    s = text.strip()
    if not s:
        raise PolynomialFormatError("empty polynomial")
    if "-" in s:
        raise PolynomialFormatError(f"negative coefficients are not allowed: {text!r}")
    if s == "0":
        return ZERO
    terms: dict[int, int] = {}
    for raw in s.split("+"):
        term = raw.strip()
        m = _TERM.match(term)
        if not term or not m or (m.group(1) is None and m.group(2) is None):
            raise PolynomialFormatError(f"malformed term {raw!r} in {text!r}")
        coeff = int(m.group(1)) if m.group(1) is not None else 1
        if m.group(2) is None:
            power = 0
        else:
            power = int(m.group(3)) if m.group(3) is not None else 1
        terms[power] = terms.get(power, 0) + coeff
    return AlliancePolynomial.from_mapping(terms)


# -- JSON form ---------------------------------------------------------------


def poly_to_json(p: AlliancePolynomial) -> dict[str, Any]:
    """``{"degree": d, "coeffs": {"k": "decimal"}}`` with nonzero terms only."""
    return {"degree": p.degree, "coeffs": {str(k): str(c) for k, c in p.terms().items()}}


def poly_from_json(obj: Mapping[str, Any] | str) -> AlliancePolynomial:
    if isinstance(obj, str):
        obj = json.loads(obj)
    try:
        terms = {int(k): int(v) for k, v in obj["coeffs"].items()}
        declared = int(obj["degree"])
    except (KeyError, TypeError, ValueError) as exc:
        raise PolynomialFormatError(f"bad polynomial JSON: {exc}") from None
    try:
        p = AlliancePolynomial.from_mapping(terms)
    except ValueError as exc:
        raise PolynomialFormatError(str(exc)) from None
    if p.degree != declared:
        raise PolynomialFormatError(f"declared degree {declared} but coefficients give {p.degree}")
    return p
