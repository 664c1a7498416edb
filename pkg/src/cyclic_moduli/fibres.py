"""Enumeration and counting of moduli points over a fixed base point.

A point of the fibre over a nonzero gamma is an ordered splitting of the
divisor of gamma into blocks whose degrees match the arrow degrees; the
interior maps take scale 1 and the last map carries gamma's scale.  Counts
depend only on the multiplicity profile of the divisor and are computed by
convolving per-point compositions against the remaining block capacities.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

from .errors import DegreeMismatch, ProfileMismatch, ZeroGamma
from .projline import Divisor
from .quivers import CyclicQuiver, eta, require_canonical
from .reps import CanonicalRep
from .sections import Section


@dataclass(frozen=True)
class FibreSet:
    """The enumerated points of the moduli space over a fixed base point."""

    gamma: Section
    points: Tuple[CanonicalRep, ...]
    is_nilcone: bool = False
    nilcone_descriptor: Optional[Tuple[int, ...]] = None

    @property
    def count(self) -> int:
        return len(self.points)


def _compositions(total: int, caps: Sequence[int]) -> Iterator[Tuple[int, ...]]:
    """Compositions of ``total`` into len(caps) parts with part i <= caps[i]."""
    n = len(caps)

    def rec(i: int, left: int, acc: List[int]) -> Iterator[Tuple[int, ...]]:
        if i == n - 1:
            if left <= caps[i]:
                yield tuple(acc + [left])
            return
        for c in range(min(left, caps[i]) + 1):
            yield from rec(i + 1, left - c, acc + [c])

    yield from rec(0, total, [])


def _assignments(
    mults: Sequence[int], caps: Sequence[int], first_choice: Optional[Tuple[int, ...]] = None
) -> Iterator[Tuple[Tuple[int, ...], ...]]:
    """Matrices of nonnegative integers with row sums ``mults`` and column sums ``caps``."""
    rows = len(mults)

    def rec(j: int, caps_left: Tuple[int, ...], acc: List[Tuple[int, ...]]):
        if j == rows:
            yield tuple(acc)
            return
        for comp in _compositions(mults[j], caps_left):
            yield from rec(j + 1, tuple(a - b for a, b in zip(caps_left, comp)), acc + [comp])

    if first_choice is not None:
        left = tuple(a - b for a, b in zip(caps, first_choice))
        yield from rec(1, left, [first_choice])
    else:
        yield from rec(0, tuple(caps), [])


def _worker_count() -> int:
    raw = os.environ.get("CYCLIC_MODULI_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def enumerate_fibre(q: CyclicQuiver, gamma: Section, threads: Optional[int] = None) -> FibreSet:
    """All stable, pairwise inequivalent points with product map equal to gamma.

    Output order is canonical: splittings sorted lexicographically by the
    divisors of (phi_1, ..., phi_{n-1}) with finite points ordered by value
    and infinity last, independent of any internal parallelism.
    """
    require_canonical(q)
    expected = q.n * q.twist
    if gamma.is_zero:
        raise ZeroGamma("the fibre over zero is the nilpotent cone; use nilcone_fibre")
    if gamma.ambient_degree != expected:
        raise DegreeMismatch(
            f"gamma has ambient degree {gamma.ambient_degree}, need n*t = {expected}"
        )
    parts = q.arrow_degrees()
    entries = gamma.zeros.entries
    mults = [m for _, m in entries]
    points_of = [p for p, _ in entries]
    threads = threads if threads is not None else _worker_count()

    section_cache: Dict[Tuple[int, Tuple[Tuple[int, int], ...]], Section] = {}

    def build_section(slot: int, column: Tuple[Tuple[int, int], ...]) -> Section:
        key = (slot, column)
        cached = section_cache.get(key)
        if cached is None:
            div = Divisor(tuple((points_of[j], c) for j, c in column))
            scale = gamma.scale if slot == len(parts) - 1 else 1
            cached = Section.of(scale, div)
            section_cache[key] = cached
        return cached

    def build_points(matrices: Iterable[Tuple[Tuple[int, ...], ...]]) -> List[CanonicalRep]:
        out = []
        for matrix in matrices:
            maps = []
            for slot in range(len(parts)):
                column = tuple(
                    (j, matrix[j][slot]) for j in range(len(mults)) if matrix[j][slot]
                )
                maps.append(build_section(slot, column))
            out.append(CanonicalRep(q, tuple(maps)))
        return out

    if threads > 1 and mults:
        first_comps = list(_compositions(mults[0], parts))
        with ThreadPoolExecutor(max_workers=threads) as pool:
            chunks = pool.map(
                lambda fc: build_points(_assignments(mults, parts, first_choice=fc)),
                first_comps,
            )
        reps: List[CanonicalRep] = [r for chunk in chunks for r in chunk]
    else:
        reps = build_points(_assignments(mults, parts))

    reps.sort(key=lambda r: tuple(phi.zeros.sort_key() for phi in r.maps[:-1]))
    return FibreSet(gamma=gamma, points=tuple(reps))


def count_fibre(q: CyclicQuiver, multiplicity_profile: Sequence[int]) -> int:
    """Number of fibre points over any base point with the given multiplicity
    profile, computed by capacity convolution (no divisor is materialized)."""
    require_canonical(q)
    expected = q.n * q.twist
    profile = list(multiplicity_profile)
    if any(m < 1 for m in profile):
        raise ProfileMismatch("multiplicities must be positive")
    if sum(profile) != expected:
        raise ProfileMismatch(f"profile sums to {sum(profile)}, need n*t = {expected}")
    return count_splittings(profile, q.arrow_degrees())


def count_splittings(profile: Sequence[int], parts: Sequence[int]) -> int:
    """Matrices with row sums ``profile`` and column sums ``parts``, by DP."""
    states: Dict[Tuple[int, ...], int] = {tuple(parts): 1}
    for m in profile:
        nxt: Dict[Tuple[int, ...], int] = {}
        for caps, ways in states.items():
            for comp in _compositions(m, caps):
                key = tuple(a - b for a, b in zip(caps, comp))
                nxt[key] = nxt.get(key, 0) + ways
        states = nxt
    zero = tuple(0 for _ in parts)
    return states.get(zero, 0)


def nilcone_fibre(q: CyclicQuiver) -> FibreSet:
    """The fibre over zero: the last map vanishes and the remaining data is a
    point of the product of projective spaces of the arrow degrees."""
    require_canonical(q)
    dims = q.arrow_degrees()[:-1]
    return FibreSet(
        gamma=Section.zero(q.n * q.twist),
        points=(),
        is_nilcone=True,
        nilcone_descriptor=dims,
    )


def branches_below_eta(q: CyclicQuiver, multiplicity_profile: Sequence[int]) -> bool:
    """True iff the profile has a repeated root, so the fibre count drops."""
    return count_fibre(q, multiplicity_profile) < eta(q)
