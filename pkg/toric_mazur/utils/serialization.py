import json
from fractions import Fraction
from typing import Any, Iterable, List, Sequence, Tuple, Union

JSONRational = Union[int, str]


def format_rational(value: Fraction) -> JSONRational:
    """
    Format an exact rational for JSON: an int when integral, otherwise a "p/q" string.
    """
    value = Fraction(value)
    if value.denominator == 1:
        return value.numerator
    return f"{value.numerator}/{value.denominator}"


def parse_rational(value: Any) -> Fraction:
    """
    Parse an int, a Fraction or a "p/q" string. Floats are rejected.

    :raises ValueError: If the value is not an exact rational.
    """
    if isinstance(value, bool) or isinstance(value, float):
        raise ValueError(f"Inexact value {value!r}; use an integer or a 'p/q' string")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        if "." in text or "e" in text.lower():
            raise ValueError(f"Inexact value {value!r}; use an integer or a 'p/q' string")
        return Fraction(text)
    raise ValueError(f"Cannot read {value!r} as a rational")


def format_vector(values: Iterable[Fraction]) -> List[JSONRational]:
    return [format_rational(v) for v in values]


def parse_vector(value: Union[str, Sequence[Any]]) -> Tuple[Fraction, ...]:
    """
    Parse "1,-1,0" or a JSON list into a tuple of Fractions.
    """
    if isinstance(value, str):
        parts = [p for p in value.replace(" ", "").strip("()[]").split(",") if p]
        return tuple(parse_rational(p) for p in parts)
    return tuple(parse_rational(v) for v in value)


def dumps(payload: Any) -> str:
    return json.dumps(payload, indent=2, ensure_ascii=False)
