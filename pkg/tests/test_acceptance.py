"""Acceptance criteria, one test per criterion, each with its time budget.

A summary line per criterion is printed at the end of the pytest run.
"""

import time
from contextlib import contextmanager
from fractions import Fraction

import pytest

from superdirac import weylchar
from superdirac.charring import odd_denominator, weyl_denominator, weyl_numerator
from superdirac.lifting import bijection_suite, genuine_grid, lift_ds_parameter, verify_adams_transfer
from superdirac.oscillator import dirac_index_character, transfer_factor_identity
from superdirac.rootdata import Kind, Weight, rho
from superdirac.superalg import (
    Enveloping,
    build_module,
    build_structure,
    casimir,
    casimir_scalar,
    dirac_cohomology,
    evaluate_polynomial,
    hc_image,
    kostant_constant,
    verify_dirac_square,
)
from superdirac.weylchar import (
    character_B,
    character_osp,
    freudenthal_multiplicities,
    highest_weight_grid,
    infinitesimal_character,
    weyl_dimension,
)


@contextmanager
def budget(seconds):
    t0 = time.perf_counter()
    yield
    elapsed = time.perf_counter() - t0
    assert elapsed < seconds, f"took {elapsed:.2f}s, budget {seconds}s"


def fresh_characters():
    weylchar._character_B.cache_clear()
    weylchar._character_osp.cache_clear()


def fresh_engine(n):
    build_structure.cache_clear()
    return Enveloping(build_structure(n))


def grid(n_max):
    return [hw for n in range(1, n_max + 1) for hw in highest_weight_grid(n)]


@pytest.mark.criterion(1, "D_C = D_B * D_1 for n = 1..4")
def test_denominator_factorization():
    with budget(1):
        for n in range(1, 5):
            assert weyl_denominator(Kind.C, n) == weyl_denominator(Kind.B, n) * odd_denominator(n)


@pytest.mark.criterion(2, "Weyl denominator identity for B and C, n = 1..4")
def test_weyl_denominator_identity():
    with budget(5):
        for n in range(1, 5):
            for kind in (Kind.B, Kind.C):
                assert weyl_numerator(rho(kind, n)) == weyl_denominator(kind, n)


@pytest.mark.criterion(3, "B, osp and Freudenthal characters agree, n <= 3")
def test_three_way_characters():
    fresh_characters()
    hws = grid(3)
    assert len(hws) == 2 + 8 + 32
    with budget(60):
        for hw in hws:
            b, o = character_B(hw), character_osp(hw)
            fr = {tuple(k): v for k, v in freudenthal_multiplicities(hw).items()}
            assert b.character.terms == o.character.terms == fr, hw
            assert b.dimension == o.dimension == weyl_dimension(hw, Kind.B), hw


@pytest.mark.criterion(4, "infinitesimal characters agree on the same grid")
def test_infinitesimal_characters():
    with budget(1):
        for hw in grid(3):
            assert infinitesimal_character(hw, Kind.OSP) == infinitesimal_character(hw, Kind.B)


@pytest.mark.criterion(5, "oscillator identities, n <= 3, order 20")
def test_oscillator_identities():
    with budget(10):
        for n in (1, 2, 3):
            assert transfer_factor_identity(n, 20)


@pytest.mark.criterion(6, "Dirac index identity, n <= 2, order 16")
def test_dirac_index():
    fresh_characters()
    with budget(60):
        for hw in grid(2):
            assert dirac_index_character(hw, 16).verdict, hw


@pytest.mark.criterion(7, "D^2 + Omega_g - Omega_g0Delta + C = 0 at n = 1, 2")
def test_dirac_square():
    with budget(10):
        cert = verify_dirac_square(fresh_engine(1))
        assert cert.passed
    with budget(600):
        cert = verify_dirac_square(fresh_engine(2))
        assert cert.passed
        assert cert.centrality_ok
        assert not any(cert.invariance_residuals.values())


@pytest.mark.criterion(8, "sum of alpha squares is the scalar (1/8) tr(Omega_g0 | g1), n = 1, 2")
@pytest.mark.xfail(
    strict=True,
    raises=AssertionError,
    reason="the sum is a scalar, but it equals -(1/8) tr = (1/8) str on the purely odd g1: "
    "3/2 and 5 against 1/8 tr = -3/2 and -5",
)
def test_kostant_constant():
    for n in (1, 2):
        res = kostant_constant(n)
        assert res.value == res.trace / 8, (n, res.value, res.trace)


@pytest.mark.criterion(9, "Dirac cohomology of osp(1|2)-modules, m <= 4")
def test_dirac_cohomology():
    with budget(60):
        for m in range(5):
            mod = build_module(m)
            res = dirac_cohomology(mod, max(12, 2 * mod.dimension))
            assert res.euler_ok, m
            assert res.scalar_ok, m


@pytest.mark.criterion(10, "Harish-Chandra image of the Casimir element at n = 1")
def test_harish_chandra():
    eng = fresh_engine(1)
    s = eng.structure
    h = s.index("h1")
    # form induced on h* by B: <e1, e1> = 1 / B(h, h) since e1(h) = 1
    norm = 1 / s.B(h, h)
    rho_osp = Fraction(1, 2)
    gamma = hc_image(casimir(eng))
    for m in range(5):
        lam = m + rho_osp
        assert evaluate_polynomial(gamma, lam) == norm * (lam * lam - rho_osp * rho_osp)
        assert evaluate_polynomial(gamma, lam) == casimir_scalar(build_module(m))


@pytest.mark.criterion(11, "lifting examples and the bijection, n <= 3, |lambda_i| <= 6")
def test_lifting():
    with budget(30):
        assert str(lift_ds_parameter(Weight.parse("2,1")).weight) == "3/2,1/2"
        assert str(lift_ds_parameter(Weight.parse("3,1,-2")).weight) == "5/2,1/2,-3/2"
        for n in (1, 2, 3):
            rep = bijection_suite(n, 6)
            assert rep.passed, rep.to_json()


@pytest.mark.criterion(12, "Adams transfer, genuine lambda with coordinates <= 7/2, n <= 2, order 12")
def test_adams_transfer():
    with budget(60):
        count = 0
        for n in (1, 2):
            for lam in genuine_grid(n, 7):
                for k in range(n + 1):
                    cert = verify_adams_transfer(lam, k, 12)
                    assert cert.passed, cert.to_json()
                    count += 1
        assert count == 4 * 2 + 12 * 3
