"""Verification suites: every identity of the library, run at configurable limits.

Each suite returns a list of entries
``{"identity", "anchor", "params", "pass"}``; a failing entry carries its
certificate under ``"certificate"``.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

from .charring import odd_denominator, weyl_denominator, weyl_numerator
from .lifting import bijection_suite, genuine_grid, lift_ds_parameter, verify_adams_transfer
from .oscillator import dirac_index_character, dirac_index_trivial, transfer_factor_identity, transfer_factor_sign
from .rootdata import Kind, Weight, rho
from .weylchar import (
    character_B,
    character_osp,
    freudenthal_multiplicities,
    highest_weight_grid,
    infinitesimal_character,
    weyl_dimension,
)

ANCHORS = {
    "denominator_factorization": "transfer factor as a ratio of Weyl denominators",
    "weyl_denominator": "Weyl denominator identity",
    "character_agreement": "Rittenberg-Scheunert correspondence of weight multiplicities",
    "infinitesimal_character": "Rittenberg-Scheunert correspondence of infinitesimal characters",
    "transfer_factor": "Weil module characters and the transfer factor",
    "dirac_index_trivial": "Dirac index of the trivial module",
    "dirac_index": "symplectic Dirac index of finite-dimensional modules",
    "dirac_square": "square of the symplectic Dirac operator",
    "kostant_constant": "Kostant's constant",
    "dirac_cohomology": "Dirac cohomology and its Euler characteristic",
    "harish_chandra": "Harish-Chandra image of the Casimir element",
    "lifting": "lifting of discrete series parameters from Sp(2n,R) to Mp(2n,R)",
    "adams_transfer": "Adams transfer of stable characters from SO to Mp",
}

SUITES = (
    "denominator",
    "characters",
    "oscillator",
    "dirac-index",
    "dirac-square",
    "kostant",
    "cohomology",
    "hc",
    "lifting",
    "transfer",
)

CHARACTER_RANK_LIMIT = 3
SYMBOLIC_RANK_LIMIT = 2


def _entry(identity, params, ok, certificate=None):
    out = {"identity": identity, "anchor": ANCHORS[identity], "params": params, "pass": bool(ok)}
    if not ok and certificate is not None:
        out["certificate"] = certificate
    return out


def suite_denominator(n_max, order):
    out = []
    for n in range(1, n_max + 1):
        dc, db, d1 = weyl_denominator(Kind.C, n), weyl_denominator(Kind.B, n), odd_denominator(n)
        out.append(_entry("denominator_factorization", {"n": n}, dc == db * d1))
        for kind in (Kind.B, Kind.C):
            ok = weyl_numerator(rho(kind, n)) == weyl_denominator(kind, n)
            out.append(_entry("weyl_denominator", {"n": n, "type": kind.value}, ok))
    return out


def suite_characters(n_max, order):
    out = []
    for n in range(1, min(n_max, CHARACTER_RANK_LIMIT) + 1):
        for hw in highest_weight_grid(n):
            b, o = character_B(hw), character_osp(hw)
            fr = freudenthal_multiplicities(hw)
            ok = (
                b.character == o.character
                and dict(b.character.terms) == {tuple(k): v for k, v in fr.items()}
                and b.dimension == o.dimension == weyl_dimension(hw)
            )
            params = {"n": n, "hw": str(hw.weight)}
            cert = {"B": b.to_json(), "osp": o.to_json()} if not ok else None
            out.append(_entry("character_agreement", params, ok, cert))
            same = infinitesimal_character(hw, Kind.OSP) == infinitesimal_character(hw, Kind.B)
            out.append(_entry("infinitesimal_character", params, same))
    return out


def suite_oscillator(n_max, order):
    out = []
    for n in range(1, min(n_max, CHARACTER_RANK_LIMIT) + 1):
        out.append(
            _entry(
                "transfer_factor",
                {"n": n, "order": order, "sign": transfer_factor_sign(n, order)},
                transfer_factor_identity(n, order),
            )
        )
        cert = dirac_index_trivial(n, order)
        out.append(_entry("dirac_index_trivial", {"n": n, "order": order}, cert.verdict, cert.to_json()))
    return out


def suite_dirac_index(n_max, order):
    out = []
    for n in range(1, min(n_max, SYMBOLIC_RANK_LIMIT) + 1):
        for hw in highest_weight_grid(n):
            cert = dirac_index_character(hw, order)
            out.append(_entry("dirac_index", {"n": n, "hw": str(hw.weight), "order": order}, cert.verdict, cert.to_json()))
    return out


def suite_dirac_square(n_max, order):
    from .superalg import verify_dirac_square

    out = []
    for n in range(1, min(n_max, SYMBOLIC_RANK_LIMIT) + 1):
        cert = verify_dirac_square(n)
        out.append(_entry("dirac_square", {"n": n}, cert.passed, cert.to_json()))
    return out


def suite_kostant(n_max, order):
    """Scalar-ness and C = (1/8) str(Omega_{g_0} | g_1); the ordinary trace is reported alongside."""
    from .superalg import kostant_constant

    out = []
    for n in range(1, min(n_max, SYMBOLIC_RANK_LIMIT) + 1):
        res = kostant_constant(n)
        params = {
            "n": n,
            "C": str(res.value),
            "eighth_of_trace": str(res.trace_formula),
            "eighth_of_supertrace": str(res.supertrace_formula),
        }
        out.append(_entry("kostant_constant", params, res.agrees_supertrace, res.to_json()))
    return out


def suite_cohomology(n_max, order, m_max=4):
    from .superalg import build_module, dirac_cohomology

    out = []
    for m in range(m_max + 1):
        mod = build_module(m)
        res = dirac_cohomology(mod, max(order, 2 * mod.dimension))
        out.append(_entry("dirac_cohomology", {"m": m, "order": res.order}, res.passed, res.to_json()))
    return out


def suite_hc(n_max, order, m_max=4):
    from .superalg import build_module, casimir, casimir_scalar, default_engine, evaluate_polynomial, hc_image

    gamma = hc_image(casimir(default_engine(1)))
    # <lambda, lambda> - <rho, rho> with <e1, e1> = -2 and rho = e1 / 2
    expected = {0: Fraction(1, 2), 2: Fraction(-2)}
    out = [_entry("harish_chandra", {"gamma": {str(k): str(v) for k, v in gamma.items()}}, gamma == expected)]
    for m in range(m_max + 1):
        lam = Fraction(m) + Fraction(1, 2)
        ok = evaluate_polynomial(gamma, lam) == casimir_scalar(build_module(m))
        out.append(_entry("harish_chandra", {"m": m}, ok))
    return out


def suite_lifting(n_max, order, bound=6):
    out = []
    for text, want in (("2,1", "3/2,1/2"), ("3,1,-2", "5/2,1/2,-3/2")):
        got = str(lift_ds_parameter(Weight.parse(text)).weight)
        out.append(_entry("lifting", {"lambda": text, "lambda_prime": got}, got == want))
    for n in range(1, min(n_max, CHARACTER_RANK_LIMIT) + 1):
        rep = bijection_suite(n, bound)
        out.append(_entry("lifting", {"n": n, "bound": bound}, rep.passed, rep.to_json()))
    return out


def suite_transfer(n_max, order):
    out = []
    for n in range(1, min(n_max, SYMBOLIC_RANK_LIMIT) + 1):
        for lam in genuine_grid(n):
            for k in range(n + 1):
                cert = verify_adams_transfer(lam, k, order)
                out.append(
                    _entry("adams_transfer", {"lambda": str(lam), "k": k, "order": order}, cert.passed, cert.to_json())
                )
    return out


RUNNERS = {
    "denominator": suite_denominator,
    "characters": suite_characters,
    "oscillator": suite_oscillator,
    "dirac-index": suite_dirac_index,
    "dirac-square": suite_dirac_square,
    "kostant": suite_kostant,
    "cohomology": suite_cohomology,
    "hc": suite_hc,
    "lifting": suite_lifting,
    "transfer": suite_transfer,
}


def _run_one(args):
    name, n_max, order = args
    return name, RUNNERS[name](n_max, order)


def run_suites(selection, n_max: int = 2, order: int = 12, jobs: int = 1) -> dict:
    """Run the selected suites; the report is sorted and independent of ``jobs``."""
    if isinstance(selection, str):
        selection = SUITES if selection == "all" else (selection,)
    for name in selection:
        if name not in RUNNERS:
            raise ValueError(f"unknown suite {name!r}; choose from all, {', '.join(SUITES)}")
    tasks = [(name, n_max, order) for name in selection]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_run_one, tasks))
    else:
        results = [_run_one(t) for t in tasks]
    suites = {}
    for name, entries in sorted(results):
        suites[name] = {"entries": entries, "pass": all(e["pass"] for e in entries)}
    return {
        "schema_version": 1,
        "limits": {"n_max": n_max, "order": order},
        "suites": suites,
        "pass": all(s["pass"] for s in suites.values()),
    }
