"""Command handlers shared by the CLI and the HTTP service.

Each handler takes the textual inputs, runs the library, and returns a plain
dict (JSON-ready: exact rationals are rendered as strings).  Parse errors
raise SpecError subclasses; everything else raises CyclicModuliError.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, List, Optional, Sequence

from .errors import DegreeMismatch
from .fibres import FibreSet, count_fibre, enumerate_fibre, nilcone_fibre
from .k1 import (
    K1Rep,
    decompose,
    k1_char_subleading,
    k1_hitchin_image,
    reduce_rep,
    reduction_amounts,
)
from .quivers import CyclicQuiver, moduli_descriptor, reindex_canonical
from .reps import CyclicRep, destabilizing_subbundle, flow_limit, hitchin_image
from .sections import CoeffForm
from .speclang import (
    QuiverSpec,
    cyclic_quiver_of,
    k1_quiver_of,
    parse_rep_sections,
    parse_section,
    parse_spec,
)


def _canonical_cyclic(spec: QuiverSpec) -> CyclicQuiver:
    return reindex_canonical(cyclic_quiver_of(spec))


def _require_spec_canonical(spec: QuiverSpec) -> CyclicQuiver:
    q = cyclic_quiver_of(spec)
    canonical = reindex_canonical(q)
    if canonical != q:
        raise DegreeMismatch(
            f"this command reads phi indices off the spec, so the spec must be in "
            f"canonical indexing; use nodes={canonical.degrees}"
        )
    return q


def _coeff_json(form: CoeffForm) -> Dict:
    return {"degree": form.degree, "coeffs": [str(c) for c in form.coeffs]}


def _fibre_json(fs: FibreSet, quiver: CyclicQuiver) -> Dict:
    return {
        "gamma": str(fs.gamma),
        "count": fs.count,
        "points": [{"phis": [str(phi) for phi in rep.maps]} for rep in fs.points],
        "nilcone": fs.is_nilcone,
        "nilcone_dims": list(fs.nilcone_descriptor) if fs.nilcone_descriptor is not None else None,
        "canonical_degrees": list(quiver.degrees),
        "twist": quiver.twist,
    }


def analyze(spec_text: str) -> Dict:
    spec = parse_spec(spec_text)
    q = _canonical_cyclic(spec)
    desc = moduli_descriptor(q)
    return {
        "twist": q.twist,
        "canonical_degrees": list(q.degrees),
        "eta": desc.sheet_count,
        "nilcone_dims": list(desc.nilcone_dims),
        "bundle_rank": desc.bundle_rank,
        "rep_dim": desc.rep_dim,
        "moduli_dim": desc.moduli_dim,
        "coprime": desc.coprime,
    }


def fibre(spec_text: str, gamma_text: str, threads: Optional[int] = None) -> Dict:
    spec = parse_spec(spec_text)
    q = _canonical_cyclic(spec)
    gamma = parse_section(gamma_text, q.n * q.twist)
    fs = enumerate_fibre(q, gamma, threads=threads)
    return _fibre_json(fs, q)


def count(spec_text: str, profile: Sequence[int]) -> Dict:
    spec = parse_spec(spec_text)
    q = _canonical_cyclic(spec)
    value = count_fibre(q, profile)
    return {
        "count": value,
        "profile": list(profile),
        "canonical_degrees": list(q.degrees),
        "twist": q.twist,
    }


def nilcone(spec_text: str) -> Dict:
    spec = parse_spec(spec_text)
    q = _canonical_cyclic(spec)
    fs = nilcone_fibre(q)
    out = _fibre_json(fs, q)
    out["vanishing_map"] = f"phi{q.n}"
    return out


def flow(spec_text: str, rep_text: str) -> Dict:
    spec = parse_spec(spec_text)
    q = _require_spec_canonical(spec)
    maps = parse_rep_sections(rep_text, q.arrow_degrees())
    rep = CyclicRep(q, maps)
    limit = flow_limit(rep)
    return {
        "phis": [str(phi) for phi in limit.maps],
        "hitchin": str(hitchin_image(limit)),
        "nilcone_dims": list(q.arrow_degrees()[:-1]),
    }


def stable(spec_text: str, rep_text: str) -> Dict:
    spec = parse_spec(spec_text)
    q = _require_spec_canonical(spec)
    maps = parse_rep_sections(rep_text, q.arrow_degrees())
    rep = CyclicRep(q, maps)
    witness = destabilizing_subbundle(rep)
    out: Dict = {"stable": witness is None}
    if witness is not None:
        out["witness"] = {
            "nodes": [i + 1 for i in witness],
            "slope": str(Fraction(sum(q.degrees[i] for i in witness), len(witness))),
            "total_slope": str(q.slope),
        }
    return out


def reduce(spec_text: str, rep_text: str) -> Dict:
    spec = parse_spec(spec_text)
    q = k1_quiver_of(spec)
    degrees: List[int] = []
    for o, e in zip(q.odd_degrees(), q.even_degrees()):
        degrees.extend((o, e))
    sections = parse_rep_sections(rep_text, tuple(degrees))
    rep = K1Rep.from_sections(q, sections[0::2], sections[1::2])
    reduction = reduce_rep(rep)
    exponent, _ = k1_char_subleading(reduction.rep)
    return {
        "reduction_amounts": list(reduction_amounts(q)),
        "odd_maps": [_coeff_json(f) for f in reduction.rep.odd_maps],
        "even_maps": [_coeff_json(f) for f in reduction.rep.even_maps],
        "multipliers": [
            {"i": i, "j": j, **_coeff_json(chi)}
            for (i, j), chi in sorted(reduction.multipliers.items())
        ],
        "chart_shift": reduction.chart_shift,
        "hitchin": _coeff_json(k1_hitchin_image(reduction.rep)),
        "lambda_exponent": exponent,
    }


def decompose_cmd(spec_text: str) -> Dict:
    spec = parse_spec(spec_text)
    q = k1_quiver_of(spec)
    desc = decompose(q)
    return {
        "twist": q.twist,
        "tail_degree": q.tail_degree,
        "factors": [
            {"node_degree": a, "reduction": b, "tail_degree": q.tail_degree}
            for a, b in desc.factors
        ],
        "cover_count": desc.cover_count,
        "special_locus_dim": desc.special_locus_dim,
    }
