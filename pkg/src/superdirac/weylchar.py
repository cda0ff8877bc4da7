"""Irreducible characters of o(2n+1) and osp(1|2n), with an independent oracle.

``character_B`` uses the Weyl character formula for B_n,
``character_osp`` the super character formula
``(N_{L+rho} * D_1) / D_C``; the Rittenberg-Scheunert correspondence says
the two agree term by term.  ``freudenthal_multiplicities`` recomputes the
same multiplicities by a recursion that never touches the character ring.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .charring import FormalCharacter, exact_div, odd_denominator, weyl_denominator, weyl_numerator
from .rootdata import (
    Kind,
    Weight,
    from_dynkin_labels,
    positive_roots,
    rho,
    validate_highest_weight,
)


@dataclass(frozen=True)
class HighestWeight:
    weight: Weight
    labels: tuple[int, ...]

    def __post_init__(self):
        if tuple(validate_highest_weight(self.weight)) != tuple(self.labels):
            raise ValueError(f"labels {self.labels} do not reconstruct {self.weight}")

    @classmethod
    def from_weight(cls, weight) -> "HighestWeight":
        weight = Weight(weight)
        return cls(weight, tuple(validate_highest_weight(weight)))

    @classmethod
    def from_labels(cls, labels) -> "HighestWeight":
        return cls.from_weight(from_dynkin_labels(labels))

    @classmethod
    def parse(cls, text: str) -> "HighestWeight":
        return cls.from_weight(Weight.parse(text))

    @property
    def rank(self) -> int:
        return len(self.weight)

    def to_json(self) -> dict:
        return {"2lambda": list(self.weight), "labels": list(self.labels)}


def _hw(hw) -> HighestWeight:
    return hw if isinstance(hw, HighestWeight) else HighestWeight.from_weight(hw)


@dataclass(frozen=True)
class IrreducibleCharacterRecord:
    kind: Kind
    highest_weight: HighestWeight
    character: FormalCharacter
    dimension: int
    infinitesimal_character: Weight

    def to_json(self) -> dict:
        return {
            "kind": self.kind.value,
            "highest_weight": self.highest_weight.to_json(),
            "dimension": str(self.dimension),
            "inf_char": self.infinitesimal_character.to_json(),
            "terms": self.character.to_json(),
        }

    @classmethod
    def from_json(cls, data) -> "IrreducibleCharacterRecord":
        hw = HighestWeight.from_weight(Weight(data["highest_weight"]["2lambda"]))
        return cls(
            Kind.parse(data["kind"]),
            hw,
            FormalCharacter.from_json(data["terms"], rank=hw.rank),
            int(data["dimension"]),
            Weight.from_json(data["inf_char"]),
        )


def _record(kind, hw, ch):
    return IrreducibleCharacterRecord(kind, hw, ch, ch.dimension(), infinitesimal_character(hw, kind))


@lru_cache(maxsize=4096)
def _character_B(hw_key: tuple) -> FormalCharacter:
    n = len(hw_key)
    lam = Weight(hw_key) + rho(Kind.B, n)
    return exact_div(weyl_numerator(lam), weyl_denominator(Kind.B, n))


@lru_cache(maxsize=4096)
def _character_osp(hw_key: tuple) -> FormalCharacter:
    n = len(hw_key)
    lam = Weight(hw_key) + rho(Kind.OSP, n)
    return exact_div(weyl_numerator(lam) * odd_denominator(n), weyl_denominator(Kind.C, n))


def character_B(hw) -> IrreducibleCharacterRecord:
    """Character of the o(2n+1)-module of highest weight hw (Weyl formula)."""
    hw = _hw(hw)
    return _record(Kind.B, hw, _character_B(tuple(hw.weight)))


def character_osp(hw) -> IrreducibleCharacterRecord:
    """sp(2n)-character of the graded irreducible osp(1|2n)-module of highest weight hw."""
    hw = _hw(hw)
    return _record(Kind.OSP, hw, _character_osp(tuple(hw.weight)))


def _dominant_rep(mu):
    return tuple(sorted((abs(x) for x in mu), reverse=True))


def _dominated_dominant_weights(hw: Weight):
    """Dominant integral mu with hw - mu a nonnegative sum of B_n simple roots.

    Returned with the height of hw - mu, in doubled coordinates.
    """
    n = len(hw)
    top = hw[0] // 2
    out = []
    for combo in itertools.combinations_with_replacement(range(top, -1, -1), n):
        mu = tuple(2 * x for x in combo)
        diff = [(a - b) // 2 for a, b in zip(hw, mu)]
        partial, coeffs = 0, []
        for d in diff:
            partial += d
            coeffs.append(partial)
        if all(c >= 0 for c in coeffs):
            out.append((sum(coeffs), mu))
    out.sort()
    return out


def freudenthal_multiplicities(hw) -> dict[Weight, int]:
    """Weight multiplicities of the o(2n+1)-module of highest weight hw by Freudenthal's recursion.

    Uses the B_n positive roots and the coordinate inner product; the result
    is the full W-invariant map ``weight -> multiplicity`` (zero weights omitted).
    """
    hw = _hw(hw).weight
    n = len(hw)
    roots = positive_roots(Kind.B, n).even_positive_roots
    r = rho(Kind.B, n)

    def norm(v):
        return sum(x * x for x in v)

    top_norm = norm(tuple(a + b for a, b in zip(hw, r)))
    mult: dict[tuple, int] = {}
    for height, mu in _dominated_dominant_weights(hw):
        if height == 0:
            mult[mu] = 1
            continue
        total = 0
        for a in roots:
            k = 1
            while True:
                nu = tuple(x + k * y for x, y in zip(mu, a))
                m = mult.get(_dominant_rep(nu), 0)
                if not m:
                    break
                total += m * sum(x * y for x, y in zip(nu, a))
                k += 1
        denom = top_norm - norm(tuple(a + b for a, b in zip(mu, r)))
        value = Fraction(2 * total, denom)
        if value.denominator != 1:
            raise ArithmeticError(f"non-integral multiplicity {value} at {Weight(mu)}")
        if value:
            mult[mu] = int(value)
    out = {}
    for mu, m in mult.items():
        for perm in set(itertools.permutations(mu)):
            for signs in itertools.product((1, -1), repeat=n):
                out[Weight(s * x for s, x in zip(signs, perm))] = m
    return out


def weyl_dimension(hw, kind=Kind.B) -> int:
    """Weyl dimension formula over the positive roots of ``kind`` (OSP uses B_n)."""
    hw = _hw(hw).weight
    kind = Kind.parse(kind)
    if kind is Kind.OSP:
        kind = Kind.B
    n = len(hw)
    r = rho(kind, n)
    shifted = hw + r
    value = Fraction(1)
    for a in positive_roots(kind, n).even_positive_roots:
        value *= Fraction(shifted.dot(a)) / r.dot(a)
    if value.denominator != 1:
        raise ArithmeticError(f"non-integral dimension {value}")
    return int(value)


def infinitesimal_character(hw, kind=Kind.OSP) -> Weight:
    """Lambda + rho for the given kind."""
    hw = _hw(hw).weight
    return hw + rho(kind, len(hw))


def highest_weight_grid(n: int, max_label: int = 3):
    """All valid highest weights with labels p_i <= max_label (p_n even)."""
    ranges = [range(max_label + 1)] * (n - 1) + [range(0, max_label + 1, 2)]
    for labels in itertools.product(*ranges):
        yield HighestWeight.from_labels(labels)
