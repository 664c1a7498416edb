"""Sections of O(d) on the rational projective line, in factored and coefficient form.

A nonzero section that factors completely over the rationals is a scale times
an effective divisor of degree exactly d; a zero of the affine polynomial "at
degree deficit" is recorded as multiplicity at infinity, so no chart
special-casing is needed anywhere downstream.

Coefficient forms fix the convention c_j <-> z^j w^(d-j), lowest first.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, gcd, isqrt
from typing import Dict, Iterable, List, Tuple

from .errors import ChartDegenerate, IrrationalRoots
from .projline import Divisor, ProjPoint, Rational

INF = ProjPoint.infinity()


@dataclass(frozen=True)
class Section:
    """A section of O(ambient_degree): zero, or a nonzero scale times its zero divisor."""

    ambient_degree: int
    scale: Fraction = Fraction(0)
    zeros: Divisor = Divisor()

    def __post_init__(self):
        if self.ambient_degree < 0:
            raise ValueError("ambient degree must be nonnegative")
        if self.scale == 0:
            if self.zeros.entries:
                raise ValueError("the zero section carries no divisor")
        elif self.zeros.degree != self.ambient_degree:
            raise ValueError(
                f"divisor degree {self.zeros.degree} != ambient degree {self.ambient_degree}"
            )

    @staticmethod
    def zero(ambient_degree: int) -> "Section":
        return Section(ambient_degree)

    @staticmethod
    def of(scale: Rational, zeros: Divisor) -> "Section":
        scale = Fraction(scale)
        if scale == 0:
            raise ValueError("use Section.zero for the zero section")
        return Section(zeros.degree, scale, zeros)

    @staticmethod
    def from_affine_roots(
        scale: Rational, roots: Iterable[Rational], ambient_degree: int
    ) -> "Section":
        """Section with the given affine roots; the degree deficit goes to infinity."""
        points = [ProjPoint.finite(r) for r in roots]
        deficit = ambient_degree - len(points)
        if deficit < 0:
            raise ValueError("more roots than the ambient degree allows")
        div = Divisor.from_points(points)
        if deficit:
            div = div + Divisor(((INF, deficit),))
        return Section(ambient_degree, Fraction(scale), div)

    @staticmethod
    def constant(scale: Rational) -> "Section":
        return Section.of(scale, Divisor())

    @property
    def is_zero(self) -> bool:
        return self.scale == 0

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        parts = [f"{self.scale}*"]
        for p, m in self.zeros.entries:
            parts.append(str(p) if m == 1 else f"{p}^{m}")
        return "".join(parts)


def mul(s1: Section, s2: Section) -> Section:
    """Product of sections: degrees and divisors add, scales multiply, zero absorbs."""
    degree = s1.ambient_degree + s2.ambient_degree
    if s1.is_zero or s2.is_zero:
        return Section.zero(degree)
    return Section(degree, s1.scale * s2.scale, s1.zeros + s2.zeros)


def product(sections: Iterable[Section]) -> Section:
    out = Section.constant(1)
    for s in sections:
        out = mul(out, s)
    return out


@dataclass(frozen=True)
class CoeffForm:
    """Coefficients (c_0, ..., c_d) of the binary form sum c_j z^j w^(d-j)."""

    degree: int
    coeffs: Tuple[Fraction, ...]

    def __post_init__(self):
        if self.degree < 0:
            raise ValueError("degree must be nonnegative")
        if len(self.coeffs) != self.degree + 1:
            raise ValueError(f"need {self.degree + 1} coefficients, got {len(self.coeffs)}")
        if not all(isinstance(c, Fraction) for c in self.coeffs):
            object.__setattr__(self, "coeffs", tuple(Fraction(c) for c in self.coeffs))

    @staticmethod
    def of(degree: int, coeffs: Iterable[Rational]) -> "CoeffForm":
        return CoeffForm(degree, tuple(Fraction(c) for c in coeffs))

    @staticmethod
    def zero(degree: int) -> "CoeffForm":
        return CoeffForm(degree, (Fraction(0),) * (degree + 1))

    @property
    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def effective_degree(self) -> int:
        """Largest j with c_j nonzero; -1 for the zero form."""
        for j in range(self.degree, -1, -1):
            if self.coeffs[j] != 0:
                return j
        return -1

    def eval_affine(self, z: Rational) -> Fraction:
        z = Fraction(z)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * z + c
        return acc

    def add(self, other: "CoeffForm") -> "CoeffForm":
        if self.degree != other.degree:
            raise ValueError("cannot add forms of different ambient degree")
        return CoeffForm(self.degree, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def scale_by(self, factor: Rational) -> "CoeffForm":
        factor = Fraction(factor)
        return CoeffForm(self.degree, tuple(c * factor for c in self.coeffs))

    def multiply(self, other: "CoeffForm") -> "CoeffForm":
        out = [Fraction(0)] * (self.degree + other.degree + 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                if b != 0:
                    out[i + j] += a * b
        return CoeffForm(self.degree + other.degree, tuple(out))

    def shift(self, s: Rational) -> "CoeffForm":
        """Substitute z -> z + s (fixes infinity, permutes finite points)."""
        s = Fraction(s)
        out = [Fraction(0)] * (self.degree + 1)
        for j, c in enumerate(self.coeffs):
            if c == 0:
                continue
            for i in range(j + 1):
                out[i] += c * comb(j, i) * s ** (j - i)
        return CoeffForm(self.degree, tuple(out))

    def poly_str(self) -> str:
        """Human-readable affine polynomial in z (the w = 1 chart)."""
        if self.is_zero:
            return "0"
        terms = []
        for j, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if j == 0:
                terms.append(str(c))
            else:
                mono = "z" if j == 1 else f"z^{j}"
                if c == 1:
                    terms.append(mono)
                elif c == -1:
                    terms.append(f"-{mono}")
                else:
                    terms.append(f"{c}*{mono}")
        out = terms[0]
        for t in terms[1:]:
            out += f" - {t[1:]}" if t.startswith("-") else f" + {t}"
        return out


def to_coeffs(s: Section) -> CoeffForm:
    """Expand scale * prod (z - a*w)^m * w^(m_inf) into coefficients."""
    coeffs = [Fraction(1)]
    inf_mult = 0
    if not s.is_zero:
        for point, m in s.zeros.entries:
            if point.is_infinity:
                inf_mult += m
                continue
            for _ in range(m):
                a = point.a
                nxt = [Fraction(0)] * (len(coeffs) + 1)
                for j, c in enumerate(coeffs):
                    nxt[j + 1] += c
                    nxt[j] -= a * c
                coeffs = nxt
        coeffs = [c * s.scale for c in coeffs]
        coeffs.extend([Fraction(0)] * inf_mult)
        return CoeffForm(s.ambient_degree, tuple(coeffs))
    return CoeffForm.zero(s.ambient_degree)


def _trial_factorize(n: int) -> Dict[int, int]:
    """Prime factorization of n >= 1 by trial division."""
    factors: Dict[int, int] = {}
    for p in (2, 3):
        while n % p == 0:
            factors[p] = factors.get(p, 0) + 1
            n //= p
    d = 5
    while d <= isqrt(n):
        for p in (d, d + 2):
            while n % p == 0:
                factors[p] = factors.get(p, 0) + 1
                n //= p
        d += 6
    if n > 1:
        factors[n] = factors.get(n, 0) + 1
    return factors


def _divisors(n: int) -> List[int]:
    divs = [1]
    for p, e in _trial_factorize(n).items():
        divs = [d * p**i for d in divs for i in range(e + 1)]
    return divs


def _rational_roots(coeffs: List[Fraction]) -> Tuple[Dict[Fraction, int], int]:
    """All rational roots with multiplicity of the affine polynomial, plus leftover degree.

    ``coeffs`` is low-to-high with nonzero leading coefficient.
    """
    roots: Dict[Fraction, int] = {}
    poly = list(coeffs)
    while len(poly) > 1 and poly[0] == 0:
        roots[Fraction(0)] = roots.get(Fraction(0), 0) + 1
        poly = poly[1:]
    if len(poly) == 1:
        return roots, 0
    # Rational root theorem on the primitive integer model of the polynomial.
    denom_lcm = 1
    for c in poly:
        denom_lcm = denom_lcm * c.denominator // gcd(denom_lcm, c.denominator)
    ints = [int(c * denom_lcm) for c in poly]
    content = 0
    for v in ints:
        content = gcd(content, v)
    ints = [v // content for v in ints]
    candidates = set()
    for p in _divisors(abs(ints[0])):
        for q in _divisors(abs(ints[-1])):
            candidates.add(Fraction(p, q))
            candidates.add(Fraction(-p, q))
    for cand in sorted(candidates):
        while len(poly) > 1:
            acc = Fraction(0)
            for c in reversed(poly):
                acc = acc * cand + c
            if acc != 0:
                break
            roots[cand] = roots.get(cand, 0) + 1
            # synthetic division by (z - cand)
            n = len(poly) - 1
            quot = [Fraction(0)] * n
            quot[n - 1] = poly[n]
            for j in range(n - 1, 0, -1):
                quot[j - 1] = poly[j] + cand * quot[j]
            poly = quot
        if len(poly) == 1:
            break
    return roots, len(poly) - 1


def from_coeffs(f: CoeffForm) -> Section:
    """Recover the factored section; requires complete factorization over the rationals."""
    if f.is_zero:
        return Section.zero(f.degree)
    m = f.effective_degree()
    inf_mult = f.degree - m
    roots, leftover = _rational_roots(list(f.coeffs[: m + 1]))
    if leftover:
        raise IrrationalRoots(
            f"degree {leftover} factor of {f.poly_str()} has no rational roots"
        )
    entries = {ProjPoint.finite(r): mult for r, mult in roots.items()}
    if inf_mult:
        entries[INF] = inf_mult
    return Section(f.degree, f.coeffs[m], Divisor.of(entries))


def reduce_top(f: CoeffForm, g: CoeffForm, m: int) -> Tuple[CoeffForm, CoeffForm]:
    """Eliminate the top m coefficients of f by adding a multiple of g.

    Returns (f + g*psi, psi) where psi has ambient degree deg f - deg g and the
    coefficients of z^(deg f), ..., z^(deg f - m + 1) in the result vanish.
    Requires the top coefficient of g to be nonzero in this chart.
    """
    if f.degree < g.degree:
        raise ValueError("deg f must be at least deg g")
    span = f.degree - g.degree
    if not 0 <= m <= span + 1:
        raise ValueError(f"m must lie in [0, {span + 1}]")
    top = g.coeffs[g.degree]
    if top == 0:
        raise ChartDegenerate("leading coefficient of the reducer vanishes in this chart")
    psi = [Fraction(0)] * (span + 1)
    current = list(f.coeffs)
    for step in range(m):
        pos = f.degree - step
        k = span - step
        # only psi_k can still change position pos; solve it
        psi[k] = -current[pos] / top
        if psi[k] != 0:
            for j, c in enumerate(g.coeffs):
                current[j + k] += c * psi[k]
    return CoeffForm(f.degree, tuple(current)), CoeffForm(span, tuple(psi))


def coeff_product_of_sections(sections: Iterable[Section]) -> CoeffForm:
    """Coefficient form of a product of sections (convenience for cross-checks)."""
    out = CoeffForm.of(0, [1])
    for s in sections:
        out = out.multiply(to_coeffs(s))
    return out
