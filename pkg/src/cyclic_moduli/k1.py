"""Two-node cyclic quivers with a rank-k node: reduction and decomposition.

Representations carry k "odd" maps out of the splitting summands and k "even"
maps back into them, all stored in coefficient form (triangular conjugation
mixes maps additively, so factored storage is not closed under reduction).

The triangular automorphisms between splitting summands let each odd map
after the first lose its top coefficients; the compensating change on the
even maps is applied too, so the reduced representation is genuinely
equivalent and the characteristic data is preserved exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from .errors import ChartDegenerate, DegreeMismatch, InvalidSplitting, ProfileMismatch, ZeroInteriorMap
from .fibres import count_splittings
from .quivers import CyclicQuiver, K1Quiver, require_canonical
from .sections import CoeffForm, Section, from_coeffs, to_coeffs


@dataclass(frozen=True)
class K1Rep:
    """Maps (phi_1, ..., phi_2k) of a (k,1) cyclic quiver, in coefficient form."""

    quiver: K1Quiver
    odd_maps: Tuple[CoeffForm, ...]
    even_maps: Tuple[CoeffForm, ...]

    def __post_init__(self):
        k = self.quiver.k
        if len(self.odd_maps) != k or len(self.even_maps) != k:
            raise DegreeMismatch(f"need {k} odd and {k} even maps")
        for i, (f, e) in enumerate(zip(self.odd_maps, self.quiver.odd_degrees())):
            if f.degree != e:
                raise DegreeMismatch(f"phi_{2 * i + 1} has degree {f.degree}, needs {e}")
            if f.is_zero:
                raise ZeroInteriorMap(f"phi_{2 * i + 1} is zero; stability needs it nonzero")
        for i, (f, e) in enumerate(zip(self.even_maps, self.quiver.even_degrees())):
            if f.degree != e:
                raise DegreeMismatch(f"phi_{2 * i + 2} has degree {f.degree}, needs {e}")

    @staticmethod
    def from_sections(
        quiver: K1Quiver, odd: Sequence[Section], even: Sequence[Section]
    ) -> "K1Rep":
        return K1Rep(
            quiver,
            tuple(to_coeffs(s) for s in odd),
            tuple(to_coeffs(s) for s in even),
        )

    @property
    def k(self) -> int:
        return self.quiver.k


# ---------------------------------------------------------------------------
# Characteristic polynomial of the block matrix
# ---------------------------------------------------------------------------

# A polynomial in lambda whose coefficients are affine polynomials in z:
# {lambda_exponent: {z_exponent: rational}}.
_LPoly = Dict[int, Dict[int, Fraction]]


def _lp_add(p: _LPoly, q: _LPoly) -> _LPoly:
    out = {m: dict(zc) for m, zc in p.items()}
    for m, zc in q.items():
        tgt = out.setdefault(m, {})
        for e, c in zc.items():
            v = tgt.get(e, Fraction(0)) + c
            if v:
                tgt[e] = v
            else:
                tgt.pop(e, None)
    return {m: zc for m, zc in out.items() if zc}


def _lp_mul(p: _LPoly, q: _LPoly) -> _LPoly:
    out: _LPoly = {}
    for m1, zc1 in p.items():
        for m2, zc2 in q.items():
            tgt = out.setdefault(m1 + m2, {})
            for e1, c1 in zc1.items():
                for e2, c2 in zc2.items():
                    e = e1 + e2
                    v = tgt.get(e, Fraction(0)) + c1 * c2
                    if v:
                        tgt[e] = v
                    else:
                        tgt.pop(e, None)
    return {m: zc for m, zc in out.items() if zc}


def _lp_neg(p: _LPoly) -> _LPoly:
    return {m: {e: -c for e, c in zc.items()} for m, zc in p.items()}


def _lp_from_form(f: CoeffForm, negate: bool = False) -> _LPoly:
    zc = {j: (-c if negate else c) for j, c in enumerate(f.coeffs) if c != 0}
    return {0: zc} if zc else {}


def _det(matrix: List[List[_LPoly]]) -> _LPoly:
    n = len(matrix)
    if n == 1:
        return matrix[0][0]
    out: _LPoly = {}
    for col in range(n):
        entry = matrix[0][col]
        if not entry:
            continue
        minor = [[row[c] for c in range(n) if c != col] for row in matrix[1:]]
        term = _lp_mul(entry, _det(minor))
        out = _lp_add(out, term if col % 2 == 0 else _lp_neg(term))
    return out


def k1_charpoly(rep: K1Rep) -> Dict[int, CoeffForm]:
    """Coefficients of det(lambda - Phi) by cofactor expansion of the block
    matrix: maps each lambda exponent m to a form of degree (k+1-m)*t."""
    k, t = rep.k, rep.quiver.twist
    size = k + 1
    lam: _LPoly = {1: {0: Fraction(1)}}
    matrix: List[List[_LPoly]] = [[{} for _ in range(size)] for _ in range(size)]
    for i in range(k):
        matrix[i][i] = lam
        matrix[i][k] = _lp_from_form(rep.even_maps[i], negate=True)
        matrix[k][i] = _lp_from_form(rep.odd_maps[i], negate=True)
    matrix[k][k] = lam
    det = _det(matrix)
    out: Dict[int, CoeffForm] = {}
    for m, zc in det.items():
        degree = (size - m) * t
        coeffs = [Fraction(0)] * (degree + 1)
        for e, c in zc.items():
            coeffs[e] = c
        out[m] = CoeffForm(degree, tuple(coeffs))
    return out


def k1_char_subleading(rep: K1Rep) -> Tuple[int, CoeffForm]:
    """The highest lambda exponent below the leading term carrying a nonzero
    coefficient, and that coefficient.  Adjudicates where the quadratic term
    of the characteristic polynomial actually sits (at lambda^(k-1))."""
    char = k1_charpoly(rep)
    k = rep.k
    lead = char.get(k + 1)
    if lead is None or lead.coeffs != (Fraction(1),):
        raise AssertionError("characteristic polynomial must be monic of degree k+1")
    for m in range(k, -1, -1):
        form = char.get(m)
        if form is not None and not form.is_zero:
            return m, form
    return k - 1, CoeffForm.zero(2 * rep.quiver.twist)


def k1_hitchin_image(rep: K1Rep) -> CoeffForm:
    """The base-point coordinate: minus the subleading coefficient of the
    characteristic polynomial, a form of degree 2t (equals the sum of the
    products phi_(2i-1) * phi_(2i))."""
    _, form = k1_char_subleading(rep)
    expected = 2 * rep.quiver.twist
    if form.degree != expected:
        raise AssertionError(f"subleading coefficient has degree {form.degree}, not {expected}")
    return form.scale_by(-1)


def k1_hitchin_section(rep: K1Rep) -> Section:
    """The base point in factored form; only when it splits over the rationals."""
    return from_coeffs(k1_hitchin_image(rep))


# ---------------------------------------------------------------------------
# Reduction amounts and decomposition
# ---------------------------------------------------------------------------


def reduction_amounts(q: K1Quiver) -> Tuple[int, ...]:
    """How many coefficients each odd map loses: b_i = sum_(j<i) (a_j - a_i + 1)."""
    a = q.splitting
    return tuple(sum(a[j] - a[i] + 1 for j in range(i)) for i in range(q.k))


@dataclass(frozen=True)
class DecompositionDescriptor:
    """Shape of the product decomposition into adjusted two-node factors."""

    factors: Tuple[Tuple[int, int], ...]  # (splitting degree a_i, reduction b_i)
    cover_count: int
    special_locus_dim: int


def decompose(q: K1Quiver) -> DecompositionDescriptor:
    """Product decomposition data: per-summand adjusted factors, the generic
    fibre cover count, and the projective-space dimension over the locus
    where the residual section vanishes."""
    amounts = reduction_amounts(q)
    odd = q.odd_degrees()
    for i, (b, e) in enumerate(zip(amounts, odd)):
        if b > e:
            raise InvalidSplitting(
                f"reduction {b} leaves phi_{2 * i + 1} (degree {e}) with no freedom"
            )
    b_last = amounts[-1]
    free = 2 * q.twist - b_last
    slot = odd[-1] - b_last
    return DecompositionDescriptor(
        factors=tuple(zip(q.splitting, amounts)),
        cover_count=comb(free, slot),
        special_locus_dim=slot,
    )


@dataclass(frozen=True)
class K1FibreCount:
    """Fibre count for a residual profile, or the special-locus marker."""

    is_special: bool
    count: Optional[int]
    special_locus_dim: Optional[int]


def k1_fibre_count(q: K1Quiver, residual_profile: Optional[Sequence[int]]) -> K1FibreCount:
    """Splittings of the residual divisor (after the top b_k reduced degrees
    are ignored) into the last odd and even slots.  ``None`` means the
    residual section is zero: the fibre is a projective space there."""
    desc = decompose(q)
    if residual_profile is None:
        return K1FibreCount(True, None, desc.special_locus_dim)
    b_last = reduction_amounts(q)[-1]
    count = adjusted_fibre_count(q.factor_quiver(q.k - 1), b_last, residual_profile)
    return K1FibreCount(False, count, None)


def adjusted_fibre_count(q: CyclicQuiver, reduction: int, profile: Sequence[int]) -> int:
    """Fibre count of a two-node quiver whose first map lost ``reduction``
    coefficients: distribute the residual zeros into the shrunken slots."""
    require_canonical(q)
    if q.n != 2:
        raise ValueError("adjusted quivers are two-node quivers")
    e1, e2 = q.arrow_degrees()
    if reduction > e1:
        raise InvalidSplitting(f"reduction {reduction} exceeds the freedom of the first map")
    profile = list(profile)
    if any(m < 1 for m in profile):
        raise ProfileMismatch("multiplicities must be positive")
    if sum(profile) != e1 + e2 - reduction:
        raise ProfileMismatch(
            f"profile sums to {sum(profile)}, need 2t - b = {e1 + e2 - reduction}"
        )
    return count_splittings(profile, (e1 - reduction, e2))


def adjusted_nilcone_dims(q: CyclicQuiver, reduction: int) -> Tuple[int, ...]:
    """Nilpotent-cone shape of the adjusted two-node quiver."""
    require_canonical(q)
    if q.n != 2:
        raise ValueError("adjusted quivers are two-node quivers")
    e1 = q.arrow_degrees()[0]
    if reduction > e1:
        raise InvalidSplitting(f"reduction {reduction} exceeds the freedom of the first map")
    return (e1 - reduction,)


# ---------------------------------------------------------------------------
# Euclidean reduction by triangular conjugation
# ---------------------------------------------------------------------------


def _solve_window(
    target: CoeffForm,
    reducers: Sequence[CoeffForm],
    multiplier_degrees: Sequence[int],
    window: int,
) -> Optional[List[CoeffForm]]:
    """Multipliers chi_j with deg <= multiplier_degrees[j] such that
    target + sum reducers[j] * chi_j has its top ``window`` coefficients zero.
    Returns None when the linear system is inconsistent."""
    columns: List[Tuple[int, int]] = []  # (reducer index, shift)
    for j, md in enumerate(multiplier_degrees):
        columns.extend((j, s) for s in range(md + 1))
    positions = [target.degree - p for p in range(window)]
    # rows: window positions (top down); unknowns: one per column
    mat: List[List[Fraction]] = []
    rhs: List[Fraction] = []
    for pos in positions:
        row = []
        for j, s in columns:
            g = reducers[j]
            zi = pos - s
            row.append(g.coeffs[zi] if 0 <= zi <= g.degree else Fraction(0))
        mat.append(row)
        rhs.append(-target.coeffs[pos])
    solution = _solve_exact(mat, rhs)
    if solution is None:
        return None
    out: List[CoeffForm] = []
    idx = 0
    for md in multiplier_degrees:
        coeffs = [Fraction(0)] * (md + 1)
        for s in range(md + 1):
            coeffs[s] = solution[idx]
            idx += 1
        out.append(CoeffForm(md, tuple(coeffs)))
    return out


def _solve_exact(mat: List[List[Fraction]], rhs: List[Fraction]) -> Optional[List[Fraction]]:
    """Gaussian elimination over the rationals; free variables are set to zero.
    Returns None for an inconsistent system."""
    rows, cols = len(mat), len(mat[0]) if mat else 0
    a = [list(row) + [r] for row, r in zip(mat, rhs)]
    pivots: List[Tuple[int, int]] = []
    r = 0
    for c in range(cols):
        pivot = next((i for i in range(r, rows) if a[i][c] != 0), None)
        if pivot is None:
            continue
        a[r], a[pivot] = a[pivot], a[r]
        inv = a[r][c]
        a[r] = [v / inv for v in a[r]]
        for i in range(rows):
            if i != r and a[i][c] != 0:
                factor = a[i][c]
                a[i] = [v - factor * w for v, w in zip(a[i], a[r])]
        pivots.append((r, c))
        r += 1
        if r == rows:
            break
    for i in range(r, rows):
        if a[i][cols] != 0:
            return None
    solution = [Fraction(0)] * cols
    for row, col in pivots:
        solution[col] = a[row][cols]
    return solution


def _unipotent(k: int) -> List[List[Optional[CoeffForm]]]:
    """Identity matrix of the triangular automorphism group; entry (j, i) with
    j < i has form degree a_j - a_i, None encodes zero."""
    mat: List[List[Optional[CoeffForm]]] = [[None] * k for _ in range(k)]
    for i in range(k):
        mat[i][i] = CoeffForm.of(0, [1])
    return mat


def _mat_mul(
    a: List[List[Optional[CoeffForm]]],
    b: List[List[Optional[CoeffForm]]],
) -> List[List[Optional[CoeffForm]]]:
    """Upper-triangular polynomial matrix product (None entries are zero)."""
    k = len(a)
    out: List[List[Optional[CoeffForm]]] = [[None] * k for _ in range(k)]
    for j in range(k):
        for i in range(j, k):
            acc: Optional[CoeffForm] = None
            for l in range(j, i + 1):
                x, y = a[j][l], b[l][i]
                if x is None or y is None:
                    continue
                term = x.multiply(y)
                acc = term if acc is None else acc.add(term)
            if acc is not None and not acc.is_zero:
                out[j][i] = acc
    return out


def _mat_inverse(u: List[List[Optional[CoeffForm]]]):
    """Inverse of a unipotent upper-triangular matrix via the Neumann series."""
    k = len(u)
    nil: List[List[Optional[CoeffForm]]] = [[None] * k for _ in range(k)]
    for j in range(k):
        for i in range(j + 1, k):
            nil[j][i] = u[j][i]
    out = _unipotent(k)
    power = nil
    sign = -1
    for _ in range(k - 1):
        for j in range(k):
            for i in range(j + 1, k):
                entry = power[j][i]
                if entry is None:
                    continue
                term = entry.scale_by(sign)
                out[j][i] = term if out[j][i] is None else out[j][i].add(term)
        power = _mat_mul(power, nil)
        sign = -sign
    for j in range(k):
        for i in range(j + 1, k):
            if out[j][i] is not None and out[j][i].is_zero:
                out[j][i] = None
    return out


@dataclass(frozen=True)
class K1Reduction:
    """A reduced representation together with the multipliers that realize it.

    ``multipliers[(i, j)]`` (1-based summand indices, i > j) is the form
    chi with phi'_(2i-1) = phi_(2i-1) + sum_j chi * phi_(2j-1); the even maps
    carry the compensating inverse so the whole thing is a conjugation.
    """

    rep: K1Rep
    multipliers: Mapping[Tuple[int, int], CoeffForm]
    chart_shift: int


def reduce_rep(rep: K1Rep) -> K1Reduction:
    """Normal form under triangular conjugation: for each i >= 2 the top b_i
    coefficients of phi_(2i-1) vanish; even maps are conjugated along."""
    q = rep.quiver
    k = q.k
    amounts = reduction_amounts(q)
    odd_deg = q.odd_degrees()
    for i, (b, e) in enumerate(zip(amounts, odd_deg)):
        if b > e:
            raise InvalidSplitting(
                f"reduction {b} leaves phi_{2 * i + 1} (degree {e}) with no freedom"
            )
    if k == 1:
        return K1Reduction(rep, {}, 0)

    a = q.splitting
    last_error: Optional[str] = None
    for shift in range(k + 2):
        s = Fraction(shift)
        odd = [f.shift(s) for f in rep.odd_maps]
        even = [f.shift(s) for f in rep.even_maps]
        total = _unipotent(k)
        reduced = list(odd)
        ok = True
        for i in range(1, k):
            if amounts[i] == 0:
                continue
            mult_degs = [a[j] - a[i] for j in range(i)]
            chis = _solve_window(reduced[i], reduced[:i], mult_degs, amounts[i])
            if chis is None:
                ok = False
                last_error = f"cannot zero the top {amounts[i]} coefficients of phi_{2 * i + 1}"
                break
            step = _unipotent(k)
            for j, chi in enumerate(chis):
                if not chi.is_zero:
                    step[j][i] = chi
            new_fi = reduced[i]
            for j, chi in enumerate(chis):
                if not chi.is_zero:
                    new_fi = new_fi.add(reduced[j].multiply(chi))
            reduced[i] = new_fi
            total = _mat_mul(total, step)
        if not ok:
            continue
        inverse = _mat_inverse(total)
        new_even: List[CoeffForm] = []
        for j in range(k):
            acc = even[j]
            for i in range(j + 1, k):
                entry = inverse[j][i]
                if entry is not None and not entry.is_zero:
                    acc = acc.add(entry.multiply(even[i]))
            new_even.append(acc)
        back = -s
        final_odd = tuple(f.shift(back) for f in reduced)
        final_even = tuple(f.shift(back) for f in new_even)
        multipliers: Dict[Tuple[int, int], CoeffForm] = {}
        for j in range(k):
            for i in range(j + 1, k):
                entry = total[j][i]
                if entry is not None and not entry.is_zero:
                    multipliers[(i + 1, j + 1)] = entry.shift(back)
        return K1Reduction(
            K1Rep(q, final_odd, final_even), multipliers, shift
        )
    raise ChartDegenerate(last_error or "reduction failed in every chart")
