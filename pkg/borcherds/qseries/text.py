#!/usr/bin/env python3
"""
Plain-text rendering and parsing of ExactSeries.

The format lists the nonzero terms in increasing exponent order and closes
with the truncation, e.g. ``q^-3 - 248*q + 26752*q^4 + O(q^5)``.
"""

import re
from typing import Dict, List, Tuple

from ..errors import PreconditionError
from .rings import CoefficientRing
from .series import ExactSeries

_TERM_PATTERN = re.compile(r"^(?:(?P<coef>.+?)\*)?q(?:\^(?P<exp>-?\d+))?$")
_TAIL_PATTERN = re.compile(r"^O\(q(?:\^(?P<exp>-?\d+))?\)$")


def _power(n: int) -> str:
    if n == 1:
        return "q"
    return f"q^{n}"


def render_series(a: ExactSeries) -> str:
    """Render a series as text, ending with its O(q^trunc) term."""
    ring = a.ring
    parts: List[str] = []
    for n, c in a.items():
        text = ring.render(c)
        negative = text.startswith("-")
        if negative:
            text = text[1:]
        if n != 0:
            text = _power(n) if text == "1" else f"{text}*{_power(n)}"
        if not parts:
            parts.append(f"-{text}" if negative else text)
        else:
            parts.append(f"{'-' if negative else '+'} {text}")
    parts.append(f"{'+ ' if parts else ''}O({_power(a.trunc)})")
    return " ".join(parts)


def _split_terms(text: str) -> List[Tuple[bool, str]]:
    """Split at top-level ' + ' and ' - ' separators; return (negated, term) pairs."""
    terms: List[Tuple[bool, str]] = []
    depth = 0
    start = 0
    negated = False
    i = 0
    while i < len(text):
        ch = text[i]
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif depth == 0 and text[i : i + 3] in (" + ", " - "):
            terms.append((negated, text[start:i].strip()))
            negated = text[i + 1] == "-"
            start = i + 3
            i += 3
            continue
        i += 1
    terms.append((negated, text[start:].strip()))
    return terms


def parse_series(text: str, ring: CoefficientRing) -> ExactSeries:
    """
    Parse the output of render_series back into a series.

    Args:
        text: Series text ending with an O(q^T) term
        ring: Ring the coefficients belong to

    Returns:
        ExactSeries: The parsed series

    Raises:
        PreconditionError: If the text is malformed
    """
    terms = _split_terms(text.strip())
    negated, tail = terms.pop()
    match = _TAIL_PATTERN.match(tail.replace(" ", ""))
    if negated or not match:
        raise PreconditionError(f"series text must end with + O(q^T): {text!r}")
    trunc = int(match.group("exp") or 1)

    coefficients: Dict[int, object] = {}
    for negated, term in terms:
        if term.startswith("-") and not term.startswith("-("):
            negated, term = not negated, term[1:]
        match = _TERM_PATTERN.match(term)
        if match:
            exponent = int(match.group("exp") or 1)
            coef_text = match.group("coef")
            value = ring.parse(coef_text) if coef_text else ring.one
        else:
            exponent, value = 0, ring.parse(term)
        if negated:
            value = ring.neg(value)
        if exponent in coefficients:
            raise PreconditionError(f"exponent {exponent} appears twice in {text!r}")
        coefficients[exponent] = value
    return ExactSeries.from_dict(ring, coefficients, trunc)
