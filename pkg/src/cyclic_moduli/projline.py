"""Points and effective divisors on the rational projective line.

A point is stored in normalized homogeneous coordinates: finite points as
[a : 1] with a a rational in lowest terms, the point at infinity as [1 : 0].
Divisors are finite multisets of points with positive integer multiplicities,
kept sorted so that equal divisors compare and hash equal.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Tuple, Union

Rational = Union[int, Fraction]


@dataclass(frozen=True, order=False)
class ProjPoint:
    """A normalized point [a : b] of the projective line over the rationals."""

    a: Fraction
    b: Fraction

    def __post_init__(self):
        if self.a == 0 and self.b == 0:
            raise ValueError("[0 : 0] is not a point of the projective line")
        if self.b != 0:
            if self.b != 1:
                raise ValueError("finite points must be normalized to [a : 1]")
        elif self.a != 1:
            raise ValueError("the point at infinity must be normalized to [1 : 0]")

    @staticmethod
    def finite(value: Rational) -> "ProjPoint":
        return ProjPoint(Fraction(value), Fraction(1))

    @staticmethod
    def infinity() -> "ProjPoint":
        return ProjPoint(Fraction(1), Fraction(0))

    @staticmethod
    def of(a: Rational, b: Rational) -> "ProjPoint":
        """Normalize arbitrary homogeneous coordinates [a : b]."""
        a, b = Fraction(a), Fraction(b)
        if b != 0:
            return ProjPoint(a / b, Fraction(1))
        if a == 0:
            raise ValueError("[0 : 0] is not a point of the projective line")
        return ProjPoint(Fraction(1), Fraction(0))

    @property
    def is_infinity(self) -> bool:
        return self.b == 0

    def sort_key(self) -> Tuple[int, Fraction]:
        # Finite points ordered by value, infinity last.
        if self.is_infinity:
            return (1, Fraction(0))
        return (0, self.a)

    def __lt__(self, other: "ProjPoint") -> bool:
        return self.sort_key() < other.sort_key()

    def __str__(self) -> str:
        if self.is_infinity:
            return "inf"
        return f"({self.a}:1)"


@dataclass(frozen=True)
class Divisor:
    """An effective divisor: sorted tuple of (point, multiplicity) pairs."""

    entries: Tuple[Tuple[ProjPoint, int], ...] = ()

    def __post_init__(self):
        seen = set()
        for point, mult in self.entries:
            if mult < 1:
                raise ValueError(f"multiplicity {mult} at {point} is not positive")
            if point in seen:
                raise ValueError(f"duplicate point {point}")
            seen.add(point)
        ordered = tuple(sorted(self.entries, key=lambda e: e[0].sort_key()))
        if ordered != self.entries:
            object.__setattr__(self, "entries", ordered)

    @staticmethod
    def of(points: Union[Mapping[ProjPoint, int], Iterable[Tuple[ProjPoint, int]]]) -> "Divisor":
        if isinstance(points, Mapping):
            points = points.items()
        merged: dict = {}
        for point, mult in points:
            merged[point] = merged.get(point, 0) + mult
        return Divisor(tuple((p, m) for p, m in merged.items() if m != 0))

    @staticmethod
    def from_points(points: Iterable[ProjPoint]) -> "Divisor":
        merged: dict = {}
        for point in points:
            merged[point] = merged.get(point, 0) + 1
        return Divisor(tuple(merged.items()))

    @property
    def degree(self) -> int:
        return sum(m for _, m in self.entries)

    def multiplicity(self, point: ProjPoint) -> int:
        for p, m in self.entries:
            if p == point:
                return m
        return 0

    def points(self) -> Iterator[ProjPoint]:
        """The support, in canonical order."""
        return (p for p, _ in self.entries)

    def expanded(self) -> Tuple[ProjPoint, ...]:
        """Points repeated by multiplicity, in canonical order."""
        out = []
        for p, m in self.entries:
            out.extend([p] * m)
        return tuple(out)

    def multiplicity_profile(self) -> Tuple[int, ...]:
        """Multiplicities sorted descending; the branching data of the divisor."""
        return tuple(sorted((m for _, m in self.entries), reverse=True))

    def __add__(self, other: "Divisor") -> "Divisor":
        merged = dict(self.entries)
        for p, m in other.entries:
            merged[p] = merged.get(p, 0) + m
        return Divisor(tuple(merged.items()))

    def __sub__(self, other: "Divisor") -> "Divisor":
        merged = dict(self.entries)
        for p, m in other.entries:
            have = merged.get(p, 0)
            if have < m:
                raise ValueError(f"cannot remove {m} copies of {p}: only {have} present")
            if have == m:
                del merged[p]
            else:
                merged[p] = have - m
        return Divisor(tuple(merged.items()))

    def contains(self, other: "Divisor") -> bool:
        """True iff every multiplicity of ``other`` is <= the one here."""
        return all(self.multiplicity(p) >= m for p, m in other.entries)

    def sort_key(self) -> Tuple[Tuple[int, Fraction], ...]:
        return tuple(p.sort_key() for p in self.expanded())

    def __str__(self) -> str:
        if not self.entries:
            return "(empty)"
        parts = []
        for p, m in self.entries:
            parts.append(str(p) if m == 1 else f"{p}^{m}")
        return "".join(parts)


def divisor_contains(small: Divisor, big: Divisor) -> bool:
    """True iff ``small`` <= ``big`` pointwise (divisor containment)."""
    return big.contains(small)
