"""
Line-oriented complex files.

    intcomplex v1
    # comment
    <interaction> [<decimal weight>]

Either every interaction carries a weight or none does. Subset files list one
interaction per line with the same comment rules and no header.
"""

import logging
import re
from fractions import Fraction
from pathlib import Path

from errors import ComplexFileError, InteractionSyntaxError
from interactions import parse_prefix
from models import IntComplex, Interaction, WeightedIntComplex

from complexes.operations import build_complex

HEADER = "intcomplex v1"
DECIMAL_PATTERN = re.compile(r"[+-]?(\d+(\.\d*)?|\.\d+)([eE][+-]?\d+)?")


def _content_lines(text: str) -> list[tuple[int, str]]:
    lines = []
    for number, raw in enumerate(text.splitlines(), 1):
        content = raw.split("#", 1)[0]
        if content.strip():
            lines.append((number, content))
    return lines


def _parse_line(content: str, number: int, path: str | None) -> tuple[Interaction, Fraction | None]:
    start = len(content) - len(content.lstrip())
    try:
        sigma, end = parse_prefix(content, start)
    except InteractionSyntaxError as exc:
        column = len(content.encode("utf-8")[: exc.offset].decode("utf-8", "ignore")) + 1
        raise ComplexFileError(str(exc), number, column, path) from exc
    rest = content[end:]
    literal = rest.strip()
    if not literal:
        return sigma, None
    if not DECIMAL_PATTERN.fullmatch(literal):
        column = end + (len(rest) - len(rest.lstrip())) + 1
        raise ComplexFileError(f"invalid weight {literal!r}", number, column, path)
    return sigma, Fraction(literal)


def parse_complex_text(text: str, path: str | None = None) -> IntComplex | WeightedIntComplex:
    """
    Parse a complex file body.

    Returns:
        A WeightedIntComplex when the lines carry weights, otherwise an IntComplex
    """
    lines = text.splitlines()
    if not lines or lines[0].strip() != HEADER:
        raise ComplexFileError(f"expected header {HEADER!r}", 1, 1, path)
    entries: dict[Interaction, Fraction | None] = {}
    weighted: bool | None = None
    for number, content in _content_lines("\n".join(lines[1:])):
        number += 1
        sigma, weight = _parse_line(content, number, path)
        if weighted is None:
            weighted = weight is not None
        elif weighted != (weight is not None):
            message = "missing weight" if weighted else "unexpected weight in an unweighted file"
            raise ComplexFileError(message, number, 1, path)
        if sigma in entries and entries[sigma] != weight:
            raise ComplexFileError(f"conflicting weights for {sigma.text}", number, 1, path)
        entries[sigma] = weight
    if not entries:
        raise ComplexFileError("no interactions", len(lines), 1, path)
    complex_ = build_complex(entries)
    logging.info(f"[ComplexFile] read {len(complex_)} interactions from {path or '<text>'}")
    if weighted:
        return WeightedIntComplex(complex=complex_, weights=entries)
    return complex_


def read_complex_file(path: str | Path) -> IntComplex | WeightedIntComplex:
    path = Path(path)
    return parse_complex_text(path.read_text(encoding="utf-8"), str(path))


def format_weight(weight: Fraction) -> str:
    """Exact decimal literal; weights without one are rejected"""
    denominator = weight.denominator
    if denominator == 1:
        return str(weight.numerator)
    digits = 0
    while (10**digits) % denominator:
        digits += 1
        if digits > 64:
            raise ValueError(f"{weight} has no finite decimal form")
    scaled = str(abs(weight.numerator) * (10**digits // denominator)).rjust(digits + 1, "0")
    sign = "-" if weight < 0 else ""
    return f"{sign}{scaled[:-digits]}.{scaled[-digits:]}"


def format_complex_text(complex_: IntComplex | WeightedIntComplex) -> str:
    weights = None
    if isinstance(complex_, WeightedIntComplex):
        weights = complex_.weights
        complex_ = complex_.complex
    lines = [HEADER]
    for sigma in complex_.members():
        if weights is None:
            lines.append(sigma.text)
        else:
            lines.append(f"{sigma.text} {format_weight(weights[sigma])}")
    return "\n".join(lines) + "\n"


def parse_subset_text(text: str, path: str | None = None) -> list[Interaction]:
    subset = []
    for number, content in _content_lines(text):
        sigma, weight = _parse_line(content, number, path)
        if weight is not None:
            raise ComplexFileError("subset lines carry no weights", number, 1, path)
        subset.append(sigma)
    if not subset:
        raise ComplexFileError("empty subset", 1, 1, path)
    return subset


def read_subset_file(path: str | Path) -> list[Interaction]:
    path = Path(path)
    return parse_subset_text(path.read_text(encoding="utf-8"), str(path))
