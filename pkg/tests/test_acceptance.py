"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -s`` to see the per-criterion lines.
All assertions are exact (rational arithmetic); the only tolerances are the
stated wall-clock bounds on criteria 1 and 3.
"""

import json
import sys
import time
from fractions import Fraction
from itertools import combinations
from random import Random

from cyclic_moduli import (
    CoeffForm,
    CyclicQuiver,
    Divisor,
    K1Rep,
    ProjPoint,
    Section,
    adjusted_fibre_count,
    adjusted_nilcone_dims,
    canonical_form,
    count_fibre,
    decompose,
    enumerate_fibre,
    equivalent,
    eta,
    hitchin_image,
    is_stable,
    k1_char_subleading,
    k1_hitchin_image,
    moduli_descriptor,
    nilcone_fibre,
    reduce_rep,
    reduction_amounts,
    torus_act,
)
from cyclic_moduli.cli import main as cli_main
from cyclic_moduli.quivers import K1Quiver

from conftest import (
    random_admissible_quiver,
    random_coeffs,
    random_k1_quiver,
    random_rep,
)

P = ProjPoint.finite


class _Criterion:
    """Prints the per-criterion verdict on the real stdout, past any capture."""

    def __init__(self, number, label):
        self.number = number
        self.label = label

    def __enter__(self):
        return self

    def __exit__(self, exc_type, exc, tb):
        verdict = "PASS" if exc_type is None else "FAIL"
        print(f"ACCEPTANCE {self.number}: {verdict} - {self.label}", file=sys.__stdout__)
        return False


def test_criterion_1_two_node_example_reproduction(capsys):
    with _Criterion(1, "t=4 nodes (0,-1): eta 56, nilcone P^3, rank 6, 56-point fibre"):
        start = time.perf_counter()
        assert cli_main(["--json", "analyze", "cyclic t=4 nodes=(0,-1)"]) == 0
        out = json.loads(capsys.readouterr().out)
        assert out["eta"] == 56
        assert out["nilcone_dims"] == [3]
        assert out["bundle_rank"] == 6

        gamma_text = "1*" + "".join(f"({m}:1)" for m in range(8))
        assert cli_main(
            ["--json", "fibre", "cyclic t=4 nodes=(0,-1)", "--gamma", gamma_text]
        ) == 0
        fibre_out = json.loads(capsys.readouterr().out)
        assert fibre_out["count"] == 56 and len(fibre_out["points"]) == 56

        gamma = Section.of(1, Divisor.from_points([P(m) for m in range(8)]))
        fs = enumerate_fibre(CyclicQuiver(4, (0, -1)), gamma)
        assert fs.count == 56
        for rep in fs.points:
            assert is_stable(rep)
            assert hitchin_image(rep) == gamma
        for a, b in combinations(fs.points, 2):
            assert not equivalent(a, b)
        elapsed = time.perf_counter() - start
        assert elapsed < 1.0, f"took {elapsed:.3f}s"


def test_criterion_2_adjusted_factor_reproduction():
    with _Criterion(2, "adjusted two-node factor (t=4, (0,-1)) reduced by 2: count 6, nilcone P^1"):
        q = CyclicQuiver(4, (0, -1))
        assert adjusted_fibre_count(q, 2, [1] * 6) == 6
        assert adjusted_nilcone_dims(q, 2) == (1,)


def test_criterion_3_k1_reduction_reproduction():
    with _Criterion(3, "k1 t=5 split (1,0) tail -2: amounts (0,2), cover 8, locus P^1, exact reduction"):
        start = time.perf_counter()
        q = K1Quiver(5, (1, 0), -2)
        assert reduction_amounts(q) == (0, 2)
        desc = decompose(q)
        assert desc.cover_count == 8
        assert desc.special_locus_dim == 1

        # phi_3 has 4 coefficients; the reduction leaves exactly 2 free
        odd = (CoeffForm.of(2, [1, 2, 1]), CoeffForm.of(3, [1, 1, 1, 1]))
        even = (
            CoeffForm.of(8, [1, 0, 0, 1, 0, 0, 0, 0, 2]),
            CoeffForm.of(7, [0, 3, 0, 0, 1, 0, 0, 1]),
        )
        rep = K1Rep(q, odd, even)
        gamma = k1_hitchin_image(rep)
        reduced = reduce_rep(rep)
        phi3 = reduced.rep.odd_maps[1]
        assert phi3.coeffs[3] == 0 and phi3.coeffs[2] == 0
        assert phi3.coeffs[1] != 0  # exactly the top two are eliminated
        assert k1_hitchin_image(reduced.rep) == gamma  # full conjugation, exact
        elapsed = time.perf_counter() - start
        assert elapsed < 1.0, f"took {elapsed:.3f}s"


def _multiset_splitting_oracle_count(divisor, sizes):
    entries = list(divisor.entries)

    def sub_multisets(entries, size):
        if size == 0:
            yield [], entries
            return
        if not entries:
            return
        (point, mult), rest = entries[0], entries[1:]
        for take in range(min(mult, size) + 1):
            for chosen, left in sub_multisets(rest, size - take):
                taken = ([(point, take)] if take else []) + chosen
                remaining = ([(point, mult - take)] if mult - take else []) + left
                yield taken, remaining

    def rec(entries, sizes):
        if not sizes:
            return 1 if not entries else 0
        total = 0
        for chosen, left in sub_multisets(entries, sizes[0]):
            total += rec(left, sizes[1:])
        return total

    return rec(entries, list(sizes))


def test_criterion_4_sheet_count_law():
    with _Criterion(4, "sheet-count law on 100 random quivers (distinct and repeated roots)"):
        rng = Random(101)
        distinct_pool = [P(v) for v in range(-6, 6)] + [ProjPoint.infinity()]
        for _ in range(100):
            q = random_admissible_quiver(rng, max_n=5, max_t=4, max_nt=10)
            nt = q.n * q.twist
            scale = Fraction(rng.choice([1, 2, -1, 3]), rng.choice([1, 2]))

            # distinct-rooted base point: the fibre realizes every sheet
            points = rng.sample(distinct_pool, nt)
            gamma = Section(nt, scale, Divisor.from_points(points)) if nt else Section.constant(scale)
            fs = enumerate_fibre(q, gamma)
            assert fs.count == eta(q)

            if nt < 2:
                continue
            # repeated-root base point: enumeration, convolution count and the
            # brute-force multiset-splitting oracle must all agree
            profile = [2]
            left = nt - 2
            while left:
                m = rng.randint(1, min(left, 3))
                profile.append(m)
                left -= m
            support = rng.sample(distinct_pool, len(profile))
            divisor = Divisor.of(list(zip(support, profile)))
            gamma2 = Section(nt, scale, divisor)
            fs2 = enumerate_fibre(q, gamma2)
            counted = count_fibre(q, profile)
            oracle = _multiset_splitting_oracle_count(divisor, q.arrow_degrees())
            assert fs2.count == counted == oracle
            assert fs2.count <= eta(q)
            # branching drops the count strictly whenever there are at least
            # two positive slots to redistribute the repeated root across
            if sum(1 for e in q.arrow_degrees() if e > 0) >= 2:
                assert fs2.count < eta(q)


def _naive_power_set_stable(rep):
    n = rep.n
    d = rep.quiver.degrees
    mu = Fraction(sum(d), n)
    for size in range(1, n):
        for subset in combinations(range(n), size):
            closed = all(
                (i + 1) % n in subset for i in subset if not rep.maps[i].is_zero
            )
            if closed and Fraction(sum(d[i] for i in subset), size) >= mu:
                return False
    return True


def test_criterion_5_stability_suite():
    with _Criterion(5, "stability matches the power-set slope oracle; stable => at most one zero map"):
        rng = Random(103)
        stable_seen = 0
        for _ in range(400):
            q = random_admissible_quiver(rng, max_n=6, max_t=3, max_nt=12)
            rep = random_rep(rng, q, allow_zero=True)
            verdict = is_stable(rep)
            assert verdict == _naive_power_set_stable(rep)
            if verdict:
                stable_seen += 1
                assert len(rep.zero_arrows()) <= 1
        assert stable_seen > 20


def test_criterion_6_torus_orbit_suite():
    with _Criterion(6, "500 trials: canonical form, product map and stability are orbit invariants"):
        rng = Random(107)
        for _ in range(500):
            q = random_admissible_quiver(rng, max_n=5, max_t=3)
            scalars = [
                Fraction(rng.choice([1, 2, 3, -1, -2, 5]), rng.choice([1, 2, 3]))
                for _ in range(q.n - 1)
            ]
            rep = random_rep(rng, q, allow_zero=True)
            moved = torus_act(rep, scalars)
            assert hitchin_image(moved) == hitchin_image(rep)
            assert is_stable(moved) == is_stable(rep)
            if not any(phi.is_zero for phi in rep.maps[:-1]):
                assert canonical_form(moved) == canonical_form(rep)


def test_criterion_7_determinant_cross_check():
    with _Criterion(7, "block determinant equals the sum of odd*even products; exponent recorded"):
        rng = Random(109)
        exponents = {}
        for _ in range(100):
            q = random_k1_quiver(rng, max_k=3)
            odd = tuple(
                CoeffForm.of(d, random_coeffs(rng, d, lead_nonzero=True))
                for d in q.odd_degrees()
            )
            even = tuple(
                CoeffForm.of(d, random_coeffs(rng, d, lead_nonzero=False))
                for d in q.even_degrees()
            )
            rep = K1Rep(q, odd, even)
            # independent route: bare list convolution of the products
            direct = [Fraction(0)] * (2 * q.twist + 1)
            for f, g in zip(odd, even):
                for i, a in enumerate(f.coeffs):
                    for j, b in enumerate(g.coeffs):
                        direct[i + j] += a * b
            gamma = k1_hitchin_image(rep)
            assert gamma.coeffs == tuple(direct)
            if not gamma.is_zero:
                exponent, _ = k1_char_subleading(rep)
                assert exponent == q.k - 1
                exponents[q.k] = exponent
        assert exponents, "no nonzero characteristic data sampled"
        observed = ", ".join(
            f"k={k}: lambda^{e} (= lambda^(r-2))" for k, e in sorted(exponents.items())
        )
        print(f"  [exponent adjudication] quadratic term sits at {observed}")


def test_criterion_8_dimension_identities():
    with _Criterion(8, "200 random quivers: moduli_dim = rep_dim - (n-1) = sum(nilcone) + rank"):
        rng = Random(113)
        for _ in range(200):
            q = random_admissible_quiver(rng, max_n=6, max_t=6, max_nt=None)
            desc = moduli_descriptor(q)
            assert desc.moduli_dim == desc.rep_dim - (q.n - 1)
            assert sum(desc.nilcone_dims) + desc.bundle_rank == desc.moduli_dim
            assert nilcone_fibre(q).nilcone_descriptor == desc.nilcone_dims
