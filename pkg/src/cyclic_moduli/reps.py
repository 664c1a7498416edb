"""Representations of type (1,...,1) cyclic quivers: stability, torus action,
canonical forms, the product map to the base, and flow limits.

A representation assigns to arrow i a section phi_i of O(e_i).  Stability is
the slope condition over coordinate subbundles closed under the nonzero
arrows; for this quiver type any destabilizing subsheaf saturates to such a
subbundle, so the check below is exhaustive.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product as iproduct
from typing import Iterable, List, Optional, Sequence, Tuple

from .errors import DegreeMismatch, QuiverMismatch, ZeroInteriorMap, ZeroScalar
from .quivers import CyclicQuiver, require_canonical
from .sections import Section, product


@dataclass(frozen=True)
class CyclicRep:
    """Maps (phi_1, ..., phi_n) on a canonically indexed cyclic quiver."""

    quiver: CyclicQuiver
    maps: Tuple[Section, ...]

    def __post_init__(self):
        require_canonical(self.quiver)
        expected = self.quiver.arrow_degrees()
        if len(self.maps) != self.quiver.n:
            raise DegreeMismatch(
                f"need {self.quiver.n} maps, got {len(self.maps)}"
            )
        for i, (phi, e) in enumerate(zip(self.maps, expected), start=1):
            if phi.ambient_degree != e:
                raise DegreeMismatch(
                    f"phi_{i} has ambient degree {phi.ambient_degree}, the arrow needs {e}"
                )

    @property
    def n(self) -> int:
        return self.quiver.n

    def zero_arrows(self) -> Tuple[int, ...]:
        """0-based indices of vanishing maps."""
        return tuple(i for i, phi in enumerate(self.maps) if phi.is_zero)


class CanonicalRep(CyclicRep):
    """A representation with scale 1 on every interior map: the unique
    torus-orbit representative among reps with the same zero divisors."""

    def __post_init__(self):
        super().__post_init__()
        for i, phi in enumerate(self.maps[:-1], start=1):
            if phi.is_zero:
                raise ZeroInteriorMap(f"phi_{i} is zero; no canonical representative")
            if phi.scale != 1:
                raise ValueError(f"phi_{i} has scale {phi.scale}; canonical reps use scale 1")


def _invariant_subsets(rep: CyclicRep) -> Iterable[Tuple[int, ...]]:
    """Proper nonempty coordinate subbundles closed under the nonzero arrows.

    Every such subset is a union, over the vanishing arrows z, of a suffix of
    the arc of nodes feeding z; enumerate those unions instead of the power set.
    """
    n = rep.n
    zeros = rep.zero_arrows()
    if not zeros:
        return
    # arc for zero arrow z: nodes from (previous zero arrow)+1 up to z, in cycle order
    arcs: List[List[int]] = []
    for idx, z in enumerate(zeros):
        prev = zeros[idx - 1]
        length = (z - prev) % n or n
        arcs.append([(prev + 1 + j) % n for j in range(length)])
    choices = [range(len(arc) + 1) for arc in arcs]
    for picks in iproduct(*choices):
        size = sum(picks)
        if size == 0 or size == n:
            continue
        subset: List[int] = []
        for arc, take in zip(arcs, picks):
            if take:
                subset.extend(arc[-take:])
        yield tuple(sorted(subset))


def destabilizing_subbundle(rep: CyclicRep) -> Optional[Tuple[int, ...]]:
    """A coordinate invariant subbundle with slope >= the total slope, if any
    exists (0-based node indices)."""
    d = rep.quiver.degrees
    mu = rep.quiver.slope
    for subset in _invariant_subsets(rep):
        if Fraction(sum(d[i] for i in subset), len(subset)) >= mu:
            return subset
    return None


def is_stable(rep: CyclicRep) -> bool:
    """Slope stability over arrow-closed coordinate subbundles."""
    return destabilizing_subbundle(rep) is None


def hitchin_image(rep: CyclicRep) -> Section:
    """The product phi_1 * ... * phi_n, a section of O(nt): the nonzero
    coefficient of the characteristic polynomial det(lambda - Phi)."""
    return product(rep.maps)


def torus_act(rep: CyclicRep, scalars: Sequence[Fraction]) -> CyclicRep:
    """Scale phi_i by lambda_i for i < n; phi_n absorbs the inverse product."""
    if len(scalars) != rep.n - 1:
        raise ValueError(f"need {rep.n - 1} scalars, got {len(scalars)}")
    scalars = [Fraction(c) for c in scalars]
    if any(c == 0 for c in scalars):
        raise ZeroScalar("torus scalars must be nonzero")
    new_maps = []
    for phi, c in zip(rep.maps[:-1], scalars):
        new_maps.append(phi if phi.is_zero else Section.of(phi.scale * c, phi.zeros))
    last = rep.maps[-1]
    inv = Fraction(1)
    for c in scalars:
        inv /= c
    new_maps.append(last if last.is_zero else Section.of(last.scale * inv, last.zeros))
    return CyclicRep(rep.quiver, tuple(new_maps))


def canonical_form(rep: CyclicRep) -> CanonicalRep:
    """Normalize the interior scales to 1, pushing the residual into phi_n."""
    residual = Fraction(1)
    new_maps = []
    for i, phi in enumerate(rep.maps[:-1], start=1):
        if phi.is_zero:
            raise ZeroInteriorMap(f"phi_{i} is zero; canonical form undefined")
        residual *= phi.scale
        new_maps.append(Section.of(1, phi.zeros))
    last = rep.maps[-1]
    if last.is_zero:
        new_maps.append(last)
    else:
        new_maps.append(Section.of(last.scale * residual, last.zeros))
    return CanonicalRep(rep.quiver, tuple(new_maps))


def equivalent(r1: CyclicRep, r2: CyclicRep) -> bool:
    """True iff the two representations lie on the same torus orbit."""
    if r1.quiver != r2.quiver:
        raise QuiverMismatch(f"quivers differ: {r1.quiver} vs {r2.quiver}")
    return canonical_form(r1) == canonical_form(r2)


def flow_limit(rep: CyclicRep) -> CyclicRep:
    """The limit of (phi_1, ..., c*phi_n) as c -> 0: the point of the
    nilpotent cone under the last arrow's contraction."""
    new_maps = rep.maps[:-1] + (Section.zero(rep.maps[-1].ambient_degree),)
    return CyclicRep(rep.quiver, new_maps)
