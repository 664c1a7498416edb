"""Shared generators for randomized tests (seeded, so runs are reproducible)."""

from fractions import Fraction
from random import Random
from typing import List, Optional

from cyclic_moduli import (
    CyclicQuiver,
    CyclicRep,
    Divisor,
    K1Quiver,
    ProjPoint,
    Section,
    reindex_canonical,
)

POINT_POOL = [ProjPoint.finite(v) for v in (-3, -2, -1, 0, 1, 2, 3, Fraction(1, 2))] + [
    ProjPoint.infinity()
]


def random_admissible_quiver(
    rng: Random, max_n: int = 5, max_t: int = 4, max_nt: Optional[int] = 10
) -> CyclicQuiver:
    """A canonical admissible quiver built from nonnegative arrow degrees."""
    while True:
        n = rng.randint(2, max_n)
        t = rng.randint(0, max_t)
        if max_nt is not None and n * t > max_nt:
            continue
        # compositions of n*t into n nonnegative arrow degrees
        total = n * t
        cuts = sorted(rng.randint(0, total) for _ in range(n - 1))
        arrows = [b - a for a, b in zip([0] + cuts, cuts + [total])]
        base = rng.randint(-3, 3)
        degrees = [base]
        for e in arrows[:-1]:
            degrees.append(degrees[-1] + e - t)
        return reindex_canonical(CyclicQuiver(t, tuple(degrees)))


def random_nonzero_scale(rng: Random) -> Fraction:
    num = rng.choice([-3, -2, -1, 1, 2, 3, 5])
    den = rng.choice([1, 1, 1, 2, 3])
    return Fraction(num, den)


def random_section(rng: Random, degree: int, allow_zero: bool = False) -> Section:
    if allow_zero and rng.random() < 0.3:
        return Section.zero(degree)
    points = [rng.choice(POINT_POOL) for _ in range(degree)]
    return Section(degree, random_nonzero_scale(rng), Divisor.from_points(points))


def random_rep(rng: Random, q: CyclicQuiver, allow_zero: bool = True) -> CyclicRep:
    maps = tuple(
        random_section(rng, e, allow_zero=allow_zero) for e in q.arrow_degrees()
    )
    return CyclicRep(q, maps)


def random_k1_quiver(rng: Random, max_k: int = 3) -> K1Quiver:
    while True:
        k = rng.randint(1, max_k)
        top = rng.randint(-1, 3)
        splitting = [top]
        for _ in range(k - 1):
            splitting.append(splitting[-1] - rng.randint(1, 2))
        a = tuple(splitting)
        # need a_1 - t <= d_2 < (k+1)*a_k - sum(a) for both constraints to hold
        upper = (k + 1) * a[-1] - sum(a)  # d_2 strictly below this
        for t in range(1, 9):
            lo = a[0] - t
            if lo < upper:
                d2 = rng.randint(lo, upper - 1)
                return K1Quiver(t, a, d2)


def random_coeffs(rng: Random, degree: int, lead_nonzero: bool = True) -> List[Fraction]:
    coeffs = [Fraction(rng.randint(-4, 4)) for _ in range(degree + 1)]
    if lead_nonzero and coeffs[-1] == 0:
        coeffs[-1] = Fraction(rng.choice([-2, -1, 1, 2, 3]))
    return coeffs
