"""Plain-text serialization of MOFS sets.

Format: a header line ``MOFS m=<m> lambda=<lam> count=<t>``, then each
square as n lines of n space-separated symbols, consecutive squares
separated by exactly one blank line.  Lines starting with ``#`` are
comments and are ignored on decode.  Files end with a newline.
"""

from __future__ import annotations

import re

from .core import FSquare, MofsError, Params
from .verify import MofsSet, verify_mofs


class ParseError(MofsError):
    def __init__(self, line_no, message):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


class HeaderMismatch(MofsError):
    pass


_HEADER_RE = re.compile(r"^MOFS m=(\d+) lambda=(\d+) count=(\d+)$")


def encode(mset: MofsSet) -> str:
    params = mset.params
    lines = [f"MOFS m={params.m} lambda={params.lam} count={mset.t}"]
    for idx, s in enumerate(mset.squares):
        if idx:
            lines.append("")
        for row in s.grid:
            lines.append(" ".join(str(int(v)) for v in row))
    return "\n".join(lines) + "\n"


def decode(text: str) -> MofsSet:
    """Parse and fully validate (regularity and pairwise orthogonality)."""
    numbered = [
        (i + 1, line)
        for i, line in enumerate(text.split("\n"))
        if not line.startswith("#")
    ]
    # Drop the artifact of the trailing newline.
    if numbered and numbered[-1][1] == "":
        numbered.pop()

    pos = 0
    while pos < len(numbered) and numbered[pos][1] == "":
        pos += 1
    if pos == len(numbered):
        raise ParseError(1, "empty file")
    line_no, header = numbered[pos]
    match = _HEADER_RE.match(header)
    if match is None:
        raise ParseError(line_no, f"bad header: {header!r}")
    m, lam, count = (int(g) for g in match.groups())
    try:
        params = Params(m, lam)
    except MofsError as exc:
        raise ParseError(line_no, str(exc)) from exc
    n = params.n
    pos += 1

    squares = []
    for _ in range(count):
        while pos < len(numbered) and numbered[pos][1] == "":
            pos += 1
        rows = []
        first_line = None
        for _ in range(n):
            if pos >= len(numbered) or numbered[pos][1] == "":
                raise ParseError(
                    numbered[pos][0] if pos < len(numbered) else numbered[-1][0],
                    f"square {len(squares) + 1} is truncated",
                )
            line_no, line = numbered[pos]
            if first_line is None:
                first_line = line_no
            try:
                row = [int(v) for v in line.split()]
            except ValueError as exc:
                raise ParseError(line_no, f"non-integer entry: {line!r}") from exc
            if len(row) != n:
                raise ParseError(line_no, f"expected {n} entries, got {len(row)}")
            rows.append(row)
            pos += 1
        try:
            squares.append(FSquare(params, rows))
        except MofsError as exc:
            raise ParseError(first_line, str(exc)) from exc

    while pos < len(numbered) and numbered[pos][1] == "":
        pos += 1
    if pos < len(numbered):
        raise ParseError(numbered[pos][0], "trailing content after the last square")
    if len(squares) != count:
        raise HeaderMismatch(f"header says {count} squares, found {len(squares)}")
    return verify_mofs(squares)
