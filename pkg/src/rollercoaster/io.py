"""Readers and writers for the plain-text input formats."""
from fractions import Fraction

from .core import NumberSequence
from .errors import RollercoasterError


class ParseError(RollercoasterError):
    pass


def _content_lines(text):
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if stripped and not stripped.startswith("#"):
            yield lineno, stripped


def _number(token, lineno):
    try:
        return int(token)
    except ValueError:
        pass
    try:
        return Fraction(token)
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"line {lineno}: not a number: {token!r}") from None


def parse_sequence(text: str) -> NumberSequence:
    """Numbers separated by whitespace or newlines; ``#`` lines are comments."""
    values = [_number(tok, lineno) for lineno, line in _content_lines(text) for tok in line.split()]
    if any(isinstance(v, Fraction) for v in values):
        return NumberSequence.from_reals(values)
    return NumberSequence(values)


def format_sequence(values) -> str:
    return "".join(f"{v}\n" for v in values)


def parse_points(text: str) -> list[tuple[int, int]]:
    """One ``x y`` integer pair per line."""
    points = []
    for lineno, line in _content_lines(text):
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"line {lineno}: expected 'x y', got {line!r}")
        try:
            points.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise ParseError(f"line {lineno}: coordinates must be integers") from None
    return points


def format_points(points) -> str:
    return "".join(f"{x} {y}\n" for x, y in points)


def read_text(path: str) -> str:
    with open(path, encoding="ascii") as fh:
        return fh.read()
