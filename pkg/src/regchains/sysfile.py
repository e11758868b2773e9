"""Reading polynomial system files.

Format::

    vars: z > y > x
    # comments run to end of line
    x^3 - 3*x^2 + 2*x
    2*y*x^2 - x^2 - 3*y*x + x
    expected:
    {x}
    {y; x - 1}

The ``vars:`` line lists variables greatest first and must come first.
Every other non-blank line holds one polynomial until an optional
``expected:`` line, after which each line is a chain written greatest
member first.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

from .chain import RegularChain, normalize_member
from .poly import Polynomial, PolynomialSyntaxError, VariableOrder, parse


class SystemFileError(ValueError):
    def __init__(self, source: str, line: int, column: int, message: str):
        super().__init__(f"{source}:{line}:{column}: {message}")
        self.source = source
        self.line = line
        self.column = column
        self.message = message


@dataclass
class SystemFile:
    name: str
    order: VariableOrder
    polynomials: List[Polynomial]
    expected: Optional[List[RegularChain]] = None
    path: Optional[str] = None
    comments: List[str] = field(default_factory=list)


def _strip_comment(line: str) -> Tuple[str, str]:
    i = line.find("#")
    if i < 0:
        return line, ""
    return line[:i], line[i + 1:].strip()


def _parse_poly(text: str, order: VariableOrder, source: str, lineno: int, offset: int) -> Polynomial:
    try:
        return parse(text, order)
    except PolynomialSyntaxError as exc:
        raise SystemFileError(source, lineno, offset + exc.position + 1, exc.message) from None


def parse_chain_text(text: str, order: VariableOrder, source: str = "<chain>", lineno: int = 1) -> RegularChain:
    """Parse ``{p; q; ...}`` into a chain of normalized members."""
    body = text.strip()
    if not (body.startswith("{") and body.endswith("}")):
        raise SystemFileError(source, lineno, 1, "expected chain in braces")
    inner = body[1:-1]
    members = []
    offset = text.index("{") + 1
    for part in inner.split(";"):
        if part.strip():
            members.append(normalize_member(_parse_poly(part, order, source, lineno, offset)))
        offset += len(part) + 1
    try:
        return RegularChain(order, members)
    except ValueError as exc:
        raise SystemFileError(source, lineno, 1, str(exc)) from None


def loads(text: str, name: str = "system", source: str = "<string>") -> SystemFile:
    order: Optional[VariableOrder] = None
    polys: List[Polynomial] = []
    expected: Optional[List[RegularChain]] = None
    comments: List[str] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line, comment = _strip_comment(raw)
        if comment:
            comments.append(comment)
        if not line.strip():
            continue
        stripped = line.strip()
        col = len(line) - len(line.lstrip()) + 1
        if order is None:
            if not stripped.startswith("vars:"):
                raise SystemFileError(source, lineno, col, "first line must be 'vars: v1 > v2 > ...'")
            try:
                order = VariableOrder.parse(stripped[len("vars:"):])
            except ValueError as exc:
                raise SystemFileError(source, lineno, col, str(exc)) from None
            continue
        if stripped == "expected:":
            if expected is not None:
                raise SystemFileError(source, lineno, col, "duplicate 'expected:' block")
            expected = []
            continue
        if expected is not None:
            expected.append(parse_chain_text(line, order, source, lineno))
        else:
            polys.append(_parse_poly(line, order, source, lineno, 0))
    if order is None:
        raise SystemFileError(source, 1, 1, "missing 'vars:' line")
    return SystemFile(name, order, polys, expected, None, comments)


def load_system(path: str) -> SystemFile:
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    name = os.path.splitext(os.path.basename(path))[0]
    sysf = loads(text, name=name, source=path)
    sysf.path = path
    return sysf
