from fractions import Fraction
from typing import Iterable, Iterator


def to_rational(x: int | str | Fraction) -> Fraction:
    """
    Converts an int, a Fraction or an exact decimal / fraction string such as
    "-0.25" or "7/3" to a Fraction. Floats are refused: they are not exact.
    """
    if isinstance(x, bool) or isinstance(x, float):
        raise ValueError(f"Inexact or invalid rational {x!r}")
    if isinstance(x, (int, Fraction)):
        return Fraction(x)
    if isinstance(x, str):
        try:
            return Fraction(x.strip())
        except (ValueError, ZeroDivisionError):
            raise ValueError(f"Invalid rational {x!r}") from None
    raise ValueError(f"Invalid rational {x!r}")


def format_rational(x: Fraction) -> str:
    """
    "num/den" form used in certificates; the denominator is always written.
    """
    return f"{x.numerator}/{x.denominator}"


class WeightSet():
    """
    A set of three distinct rational weights, stored as a < b < c.
    """
    def __init__(self, values: Iterable[int | str | Fraction]):
        vs = sorted(to_rational(v) for v in values)
        if len(vs) != 3:
            raise ValueError(f"A weight set has exactly three values, got {len(vs)}")
        if vs[0] == vs[1] or vs[1] == vs[2]:
            raise ValueError(f"Weight set values must be distinct: {vs}")
        self._values = tuple(vs)

    @classmethod
    def parse(cls, text: str) -> 'WeightSet':
        """
        Parses "a,b,c" in any order, e.g. "-1,0,2" or "1/2,0.75,3".
        """
        return cls(p for p in text.split(","))

    @property
    def a(self) -> Fraction:
        return self._values[0]

    @property
    def b(self) -> Fraction:
        return self._values[1]

    @property
    def c(self) -> Fraction:
        return self._values[2]

    @property
    def values(self) -> tuple[Fraction, Fraction, Fraction]:
        return self._values

    @property
    def is_arithmetic(self) -> bool:
        return self.b - self.a == self.c - self.b

    @property
    def affine_branch(self) -> str:
        """
        "ascending" when b-a < c-b, "descending" when b-a > c-b, else "arithmetic".
        """
        lower, upper = self.b - self.a, self.c - self.b
        if lower < upper:
            return "ascending"
        if lower > upper:
            return "descending"
        return "arithmetic"

    def __contains__(self, x) -> bool:
        return x in self._values

    def __iter__(self) -> Iterator[Fraction]:
        return iter(self._values)

    def __eq__(self, other) -> bool:
        if isinstance(other, WeightSet):
            return self._values == other._values
        return False

    def __hash__(self) -> int:
        return hash(self._values)

    def __str__(self):
        return "{" + ", ".join(str(v) for v in self._values) + "}"

    def __repr__(self):
        return f"WeightSet({self})"
