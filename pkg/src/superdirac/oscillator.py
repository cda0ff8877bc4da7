"""Oscillator (Weil) module characters and symplectic Dirac index identities.

The Weil module is C[x_1, ..., x_n]; the monomial x^a has weight
``-sum (a_i + 1/2) e_i``, so in the variables q_i = e^{-e_i/2} its character
is ``q^{2a+1}``.  The transfer factor is fixed as ``ch M+ - ch M-`` (leading
coefficient +1 on q_1...q_n).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .charring import (
    RationalCharacter,
    TruncatedSeries,
    expand,
    odd_denominator,
    weyl_denominator,
    weyl_numerator,
)
from .rootdata import Kind, Weight, rho
from .weylchar import HighestWeight, character_osp

PHI_CONVENTION = {"phi_sign": "+leading"}
PARITIES = ("even", "odd", "difference")


def weil_monomials(n: int, order: int):
    """Exponent vectors a of the monomials x^a whose weight has q-degree <= order."""
    top = (order - n) // 2
    if top < 0:
        return
    for a in itertools.product(range(top + 1), repeat=n):
        if sum(2 * x + 1 for x in a) <= order:
            yield a


def weil_character(n: int, parity: str, order: int) -> TruncatedSeries:
    if parity not in PARITIES:
        raise ValueError(f"parity must be one of {PARITIES}, got {parity!r}")
    if order < 1:
        raise ValueError("order must be at least 1")
    coeffs = {}
    for a in weil_monomials(n, order):
        deg_parity = sum(a) % 2
        if parity == "even" and deg_parity:
            continue
        if parity == "odd" and not deg_parity:
            continue
        sign = -1 if (parity == "difference" and deg_parity) else 1
        coeffs[tuple(2 * x + 1 for x in a)] = sign
    return TruncatedSeries(Weight.zero(n), order, coeffs)


def transfer_factor(n: int, order: int) -> TruncatedSeries:
    """``ch M+ - ch M-`` up to total q-degree ``order``."""
    return weil_character(n, "difference", order)


@dataclass
class DiracIndexCertificate:
    highest_weight: HighestWeight | None
    order: int
    lhs: TruncatedSeries
    rhs: TruncatedSeries
    verdict: bool = field(init=False)

    def __post_init__(self):
        self.verdict = self.lhs == self.rhs

    def to_json(self) -> dict:
        return {
            "identity": "dirac_index",
            "highest_weight": None if self.highest_weight is None else self.highest_weight.to_json(),
            "order": self.order,
            "lhs": self.lhs.to_json(),
            "rhs": self.rhs.to_json(),
            "pass": self.verdict,
            "convention": dict(PHI_CONVENTION),
        }


def _alternating_product(n: int, order: int) -> TruncatedSeries:
    """prod_i (q_i - q_i^3 + q_i^5 - ...), built one coordinate at a time."""
    out = TruncatedSeries.one(n, order)
    for i in range(n):
        coeffs = {}
        for a in range((order + 1) // 2):
            key = [0] * n
            key[i] = 2 * a + 1
            coeffs[tuple(key)] = (-1) ** a
        out = out * TruncatedSeries(Weight.zero(n), order, coeffs)
    return out


def dirac_index_trivial(n: int, order: int) -> DiracIndexCertificate:
    """``ch M+ - ch M- = ch H_D+(1) - ch H_D-(1)``.

    D has an odd U(g)-factor in every term, so it vanishes on 1 (x) M and the
    cohomology is all of M, graded by degree parity.
    """
    if order < 1:
        raise ValueError("order must be at least 1")
    lhs = _alternating_product(n, order)
    coeffs = {}
    for a in weil_monomials(n, order):
        coeffs[tuple(2 * x + 1 for x in a)] = 1 if sum(a) % 2 == 0 else -1
    rhs = TruncatedSeries(Weight.zero(n), order, coeffs)
    return DiracIndexCertificate(None, order, lhs, rhs)


def transfer_factor_sign(n: int, order: int) -> int:
    """+1 or -1 according to which of +-D_B/D_C matches ch M+ - ch M-; 0 if neither."""
    ratio = expand(RationalCharacter(weyl_denominator(Kind.B, n), weyl_denominator(Kind.C, n)), order)
    phi = transfer_factor(n, order)
    if ratio == phi:
        return 1
    if -ratio == phi:
        return -1
    return 0


def transfer_factor_identity(n: int, order: int) -> bool:
    """``(ch M+ - ch M-) * D_1 = 1`` and ``D_B / D_C = ch M+ - ch M-`` up to ``order``."""
    if order < 1:
        raise ValueError("order must be at least 1")
    phi = transfer_factor(n, order)
    d1 = TruncatedSeries.from_character(odd_denominator(n), order)
    inverse_ok = phi * d1 == TruncatedSeries.one(n, order)
    return inverse_ok and transfer_factor_sign(n, order) == 1


def dirac_index_character(hw, order: int) -> DiracIndexCertificate:
    """``ch V * (ch M+ - ch M-)`` against the expansion of ``N_{L+rho} / D_C``."""
    rec = character_osp(hw)
    n = rec.highest_weight.rank
    lhs = TruncatedSeries.from_character(rec.character, order) * transfer_factor(n, order)
    lam = rec.highest_weight.weight + rho(Kind.OSP, n)
    rhs = expand(RationalCharacter(weyl_numerator(lam), weyl_denominator(Kind.C, n)), order)
    return DiracIndexCertificate(rec.highest_weight, order, lhs, rhs)
