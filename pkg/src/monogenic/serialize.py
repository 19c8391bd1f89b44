"""Canonical JSON wire format for all value types.

Rationals travel as reduced "p/q" strings (bare "p" when q = 1, "-"
only in front).  Serialization is canonical: terms are emitted in a
fixed sort order, so parse(serialize(x)) == x bit-exactly and equal
values serialize to identical bytes.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Any

from .clifford import CliffordNumber, GaussianRational
from .fock import FockElement
from .poly import CliffordPolynomial, MultiIndex
from .transform import HermiteExpansion


class SchemaError(ValueError):
    """Input JSON violates the wire schema."""


_RATIONAL_RE = re.compile(r"^-?(0|[1-9][0-9]*)(/[1-9][0-9]*)?$")


def format_fraction(value: Fraction) -> str:
    return str(value)


def parse_fraction(text: Any) -> Fraction:
    if not isinstance(text, str) or not _RATIONAL_RE.match(text):
        raise SchemaError(f"malformed rational {text!r}")
    value = Fraction(text)
    if str(value) != text:
        raise SchemaError(f"rational {text!r} is not in lowest terms")
    return value


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise SchemaError(message)


def _parse_blade(data: Any, n: int) -> tuple[int, ...]:
    _require(isinstance(data, list), f"blade must be a list, got {data!r}")
    prev = 0
    for i in data:
        _require(isinstance(i, int) and not isinstance(i, bool), f"blade index {i!r} not an int")
        _require(1 <= i <= n, f"blade index {i} out of range [1, {n}]")
        _require(i > prev, f"blade indices must be strictly increasing, got {data}")
        prev = i
    return tuple(data)


def _parse_beta(data: Any, n: int) -> MultiIndex:
    _require(isinstance(data, list) and len(data) == n,
             f"multi-index must be a list of {n} ints, got {data!r}")
    for b in data:
        _require(isinstance(b, int) and not isinstance(b, bool) and b >= 0,
                 f"multi-index entry {b!r} must be a nonnegative int")
    return MultiIndex(data)


# -- CliffordNumber ---------------------------------------------------------

def clifford_to_json(value: CliffordNumber) -> list[dict]:
    return [
        {"blade": list(indices), "re": str(coeff.re), "im": str(coeff.im)}
        for indices, coeff in value.terms()
    ]


def clifford_from_json(data: Any, n: int) -> CliffordNumber:
    _require(isinstance(data, list), f"Clifford value must be a list of terms, got {data!r}")
    coeffs: dict[tuple[int, ...], GaussianRational] = {}
    for item in data:
        _require(isinstance(item, dict) and set(item) == {"blade", "re", "im"},
                 f"Clifford term must have keys blade/re/im, got {item!r}")
        blade = _parse_blade(item["blade"], n)
        _require(blade not in coeffs, f"duplicate blade {list(blade)}")
        coeffs[blade] = GaussianRational(parse_fraction(item["re"]), parse_fraction(item["im"]))
    return CliffordNumber(n, coeffs)


# -- CliffordPolynomial -----------------------------------------------------

def poly_to_json(f: CliffordPolynomial) -> dict:
    return {
        "n": f.n,
        "terms": [
            {"x0": k0, "beta": list(beta), "coeff": clifford_to_json(coeff)}
            for k0, beta, coeff in f.terms()
        ],
    }


def _parse_dimension(data: Any) -> int:
    _require(isinstance(data, dict) and "n" in data, "object must carry an 'n' field")
    n = data["n"]
    _require(isinstance(n, int) and not isinstance(n, bool) and n >= 1, f"bad dimension {n!r}")
    return n


def poly_from_json(data: Any) -> CliffordPolynomial:
    n = _parse_dimension(data)
    _require(set(data) == {"n", "terms"} and isinstance(data["terms"], list),
             "polynomial must have exactly the fields n and terms")
    terms: dict[tuple[int, MultiIndex], CliffordNumber] = {}
    for item in data["terms"]:
        _require(isinstance(item, dict) and set(item) == {"x0", "beta", "coeff"},
                 f"polynomial term must have keys x0/beta/coeff, got {item!r}")
        k0 = item["x0"]
        _require(isinstance(k0, int) and not isinstance(k0, bool) and k0 >= 0,
                 f"x0 exponent {k0!r} must be a nonnegative int")
        beta = _parse_beta(item["beta"], n)
        _require((k0, beta) not in terms, f"duplicate term x0^{k0} * x^{tuple(beta)}")
        terms[(k0, beta)] = clifford_from_json(item["coeff"], n)
    return CliffordPolynomial(n, terms)


# -- HermiteExpansion -------------------------------------------------------

def expansion_to_json(f: HermiteExpansion) -> dict:
    return {
        "n": f.n,
        "coeffs": [
            {"beta": list(beta), "value": clifford_to_json(value)}
            for beta, value in f.coefficients()
        ],
    }


def expansion_from_json(data: Any) -> HermiteExpansion:
    n = _parse_dimension(data)
    _require(set(data) == {"n", "coeffs"} and isinstance(data["coeffs"], list),
             "expansion must have exactly the fields n and coeffs")
    coeffs: dict[MultiIndex, CliffordNumber] = {}
    for item in data["coeffs"]:
        _require(isinstance(item, dict) and set(item) == {"beta", "value"},
                 f"expansion entry must have keys beta/value, got {item!r}")
        beta = _parse_beta(item["beta"], n)
        _require(beta not in coeffs, f"duplicate multi-index {tuple(beta)}")
        coeffs[beta] = clifford_from_json(item["value"], n)
    return HermiteExpansion(n, coeffs)


# -- FockElement ------------------------------------------------------------

def fock_to_json(alpha: FockElement) -> dict:
    return {
        "n": alpha.n,
        "entries": [
            {"beta": list(beta), "value": clifford_to_json(value)}
            for beta, value in alpha.entries()
        ],
    }


def fock_from_json(data: Any) -> FockElement:
    n = _parse_dimension(data)
    _require(set(data) == {"n", "entries"} and isinstance(data["entries"], list),
             "Fock element must have exactly the fields n and entries")
    entries: dict[MultiIndex, CliffordNumber] = {}
    for item in data["entries"]:
        _require(isinstance(item, dict) and set(item) == {"beta", "value"},
                 f"Fock entry must have keys beta/value, got {item!r}")
        beta = _parse_beta(item["beta"], n)
        _require(beta not in entries, f"duplicate multi-index {tuple(beta)}")
        entries[beta] = clifford_from_json(item["value"], n)
    return FockElement(n, entries)


# -- plain text -------------------------------------------------------------

def scalar_to_text(value: GaussianRational) -> str:
    re_part = f"{value.re.numerator}/{value.re.denominator}"
    if not value.im:
        return re_part
    sign = "+" if value.im > 0 else "-"
    im = abs(value.im)
    return f"{re_part} {sign} {im.numerator}/{im.denominator} i"


def clifford_to_text(value: CliffordNumber) -> str:
    if value.is_zero():
        return "0"
    parts = []
    for indices, coeff in value.terms():
        blade = "e" + "".join(str(i) for i in indices) if indices else "1"
        parts.append(f"({scalar_to_text(coeff)}) {blade}")
    return " + ".join(parts)


def poly_to_text(f: CliffordPolynomial) -> str:
    """Aligned term table: one row per monomial."""
    rows = [("x0", "beta", "coeff")]
    for k0, beta, coeff in f.terms():
        rows.append((str(k0), ",".join(map(str, beta)), clifford_to_text(coeff)))
    if len(rows) == 1:
        rows.append(("-", "-", "0"))
    widths = [max(len(r[c]) for r in rows) for c in range(3)]
    return "\n".join("  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip()
                     for row in rows)


def fock_to_text(alpha: FockElement) -> str:
    rows = [("beta", "value")]
    for beta, value in alpha.entries():
        rows.append((",".join(map(str, beta)), clifford_to_text(value)))
    if len(rows) == 1:
        rows.append(("-", "0"))
    widths = [max(len(r[c]) for r in rows) for c in range(2)]
    return "\n".join("  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip()
                     for row in rows)
