"""Labelled cyclic and A-type quivers with twist: admission, indexing, counts.

Nodes are line bundles of degrees (d_1, ..., d_n) on the projective line;
arrow i carries a map of ambient degree e_i = d_(i+1) - d_i + t (indices mod n).
A quiver admits stable representations exactly when every e_i is nonnegative:
a negative arrow forces its map to vanish, and the interval of nodes feeding
that arrow then destabilizes (its slope cannot stay below the total slope).

Canonical indexing follows the convention that the last arrow is the unique
one whose map may vanish in a stable representation.  When slope ties leave
no arrow with that property (only possible when n and the total degree share
a factor), the lexicographically smallest rotation is chosen instead.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, gcd
from typing import Optional, Tuple

from .errors import InvalidSplitting, NoStableIndexing


@dataclass(frozen=True)
class CyclicQuiver:
    """A cyclic quiver with all node ranks 1, twist degree t and node degrees d_i."""

    twist: int
    degrees: Tuple[int, ...]

    def __post_init__(self):
        if self.twist < 0:
            raise ValueError("twist degree must be nonnegative")
        if len(self.degrees) < 2:
            raise ValueError("a cyclic quiver needs at least 2 nodes")
        object.__setattr__(self, "degrees", tuple(int(d) for d in self.degrees))

    @property
    def n(self) -> int:
        return len(self.degrees)

    def arrow_degrees(self) -> Tuple[int, ...]:
        """Ambient degree of the map on each arrow, e_i = d_(i+1) - d_i + t."""
        d, t, n = self.degrees, self.twist, self.n
        return tuple(d[(i + 1) % n] - d[i] + t for i in range(n))

    @property
    def total_degree(self) -> int:
        return sum(self.degrees)

    @property
    def slope(self) -> Fraction:
        return Fraction(self.total_degree, self.n)

    @property
    def coprime(self) -> bool:
        """False signals possible strictly semistable objects (warning flag)."""
        return gcd(self.n, self.total_degree) == 1

    def rotation(self, start: int) -> "CyclicQuiver":
        """The same cycle re-indexed to begin at node ``start`` (0-based)."""
        d = self.degrees
        return CyclicQuiver(self.twist, d[start:] + d[:start])


def _interval_slopes_ok(q: CyclicQuiver, arrow: int) -> bool:
    """True iff every proper node interval ending at ``arrow`` (0-based) has
    slope strictly below the total slope."""
    d, n = q.degrees, q.n
    mu = q.slope
    total = 0
    # intervals {arrow}, {arrow-1, arrow}, ..., all proper
    for size in range(1, n):
        total += d[(arrow - size + 1) % n]
        if Fraction(total, size) >= mu:
            return False
    return True


def allowed_zero_arrow(q: CyclicQuiver) -> Optional[int]:
    """The unique arrow (0-based) whose map may vanish in a stable rep, if any."""
    for arrow in range(q.n):
        if _interval_slopes_ok(q, arrow):
            return arrow
    return None


def admits_stable(q: CyclicQuiver) -> bool:
    """True iff some rotation of the indices admits stable representations."""
    return all(e >= 0 for e in q.arrow_degrees())


@lru_cache(maxsize=4096)
def reindex_canonical(q: CyclicQuiver) -> CyclicQuiver:
    """Rotate the indices so the last arrow is the one allowed to vanish."""
    if not admits_stable(q):
        raise NoStableIndexing(
            f"no rotation of degrees {q.degrees} with t={q.twist} admits stable representations"
        )
    arrow = allowed_zero_arrow(q)
    if arrow is not None:
        return q.rotation((arrow + 1) % q.n)
    # No arrow is strictly allowed to vanish (slope ties); fall back to the
    # lexicographically smallest rotation for determinism.
    return min((q.rotation(s) for s in range(q.n)), key=lambda r: r.degrees)


def is_canonical(q: CyclicQuiver) -> bool:
    return admits_stable(q) and reindex_canonical(q) == q


def require_canonical(q: CyclicQuiver) -> None:
    if not admits_stable(q):
        raise NoStableIndexing(
            f"degrees {q.degrees} with t={q.twist} admit no stable representations"
        )
    if reindex_canonical(q) != q:
        raise ValueError(
            f"quiver degrees {q.degrees} are not in canonical indexing; "
            f"expected {reindex_canonical(q).degrees}"
        )


def eta(q: CyclicQuiver) -> int:
    """Sheet count over the base: the multinomial of nt over the arrow degrees."""
    require_canonical(q)
    parts = q.arrow_degrees()
    out, running = 1, 0
    for p in parts:
        running += p
        out *= comb(running, p)
    return out


@dataclass(frozen=True)
class ATypeQuiver:
    """The chain obtained from a cyclic quiver by deleting the last arrow."""

    twist: int
    degrees: Tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.degrees)

    def chain_degrees(self) -> Tuple[int, ...]:
        d, t = self.degrees, self.twist
        return tuple(d[i + 1] - d[i] + t for i in range(self.n - 1))

    def projective_dims(self) -> Tuple[int, ...]:
        """Dimensions of the factors of the moduli: a product of projective spaces."""
        return self.chain_degrees()


def associated_a_type(q: CyclicQuiver) -> ATypeQuiver:
    """Delete the arrow allowed to vanish; the result supports the fixed-point locus."""
    require_canonical(q)
    return ATypeQuiver(q.twist, q.degrees)


@dataclass(frozen=True)
class ModuliDescriptor:
    """Symbolic structure report for the moduli space of a cyclic quiver."""

    sheet_count: int
    nilcone_dims: Tuple[int, ...]
    bundle_rank: int
    rep_dim: int
    moduli_dim: int
    coprime: bool

    def __post_init__(self):
        if self.moduli_dim != self.rep_dim - len(self.nilcone_dims):
            raise ValueError("moduli_dim must equal rep_dim - (n - 1)")
        if sum(self.nilcone_dims) + self.bundle_rank != self.moduli_dim:
            raise ValueError("nilcone dims plus bundle rank must equal moduli_dim")


def moduli_descriptor(q: CyclicQuiver) -> ModuliDescriptor:
    """Sheet count, nilpotent-cone shape and tautological-bundle rank for q."""
    sheet = eta(q)
    e = q.arrow_degrees()
    nilcone = e[:-1]
    bundle_rank = e[-1] + 1
    rep_dim = sum(ei + 1 for ei in e)
    return ModuliDescriptor(
        sheet_count=sheet,
        nilcone_dims=nilcone,
        bundle_rank=bundle_rank,
        rep_dim=rep_dim,
        moduli_dim=rep_dim - (q.n - 1),
        coprime=q.coprime,
    )


@dataclass(frozen=True)
class K1Quiver:
    """A two-node cyclic quiver with one node of rank k and a fixed splitting type.

    The rank-k node splits as O(a_1) + ... + O(a_k) with strictly decreasing
    degrees; the rank-1 node has degree d_2 (the tail).  The constraints keep
    all odd maps (out of the splitting summands) forced nonzero by stability.
    """

    twist: int
    splitting: Tuple[int, ...]
    tail_degree: int

    def __post_init__(self):
        if self.twist < 0:
            raise ValueError("twist degree must be nonnegative")
        object.__setattr__(self, "splitting", tuple(int(a) for a in self.splitting))
        a = self.splitting
        if not a:
            raise InvalidSplitting("splitting type is empty")
        if any(a[i] <= a[i + 1] for i in range(len(a) - 1)):
            raise InvalidSplitting(f"splitting {a} must be strictly decreasing")
        mu = self.slope
        if not all(mu < ai for ai in a):
            raise InvalidSplitting(
                f"total slope {mu} must be smaller than every splitting degree {a}"
            )
        if any(-ai + self.tail_degree + self.twist < 0 for ai in a):
            raise InvalidSplitting(
                f"need -a_i + d_2 + t >= 0 for all i: a={a}, d_2={self.tail_degree}, t={self.twist}"
            )

    @property
    def k(self) -> int:
        return len(self.splitting)

    @property
    def rank(self) -> int:
        return self.k + 1

    @property
    def slope(self) -> Fraction:
        return Fraction(sum(self.splitting) + self.tail_degree, self.k + 1)

    def odd_degrees(self) -> Tuple[int, ...]:
        """Ambient degrees of phi_1, phi_3, ..., phi_(2k-1)."""
        return tuple(-a + self.tail_degree + self.twist for a in self.splitting)

    def even_degrees(self) -> Tuple[int, ...]:
        """Ambient degrees of phi_2, phi_4, ..., phi_(2k)."""
        return tuple(a - self.tail_degree + self.twist for a in self.splitting)

    def factor_quiver(self, i: int) -> CyclicQuiver:
        """The two-node cyclic quiver of the i-th splitting summand (0-based)."""
        return CyclicQuiver(self.twist, (self.splitting[i], self.tail_degree))
