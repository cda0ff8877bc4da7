"""Harish-Chandra parameters, stable numerators and the lifting between Sp(2n,R) and Mp(2n,R).

Parameters are weights in doubled coordinates.  omega_n = (1/2, ..., 1/2)
is the weight with doubled coordinates (1, ..., 1).
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field
from fractions import Fraction

from .charring import FormalCharacter, RationalCharacter, expand, weyl_denominator
from .errors import ParityError, RegularityError
from .oscillator import transfer_factor
from .rootdata import Kind, Weight, WeylElement, is_regular, make_dominant, weyl_group


class Parity(str, enum.Enum):
    INTEGRAL = "integral"
    GENUINE = "genuine"


@dataclass(frozen=True)
class HarishChandraParameter:
    weight: Weight
    parity: Parity

    @property
    def rank(self) -> int:
        return len(self.weight)

    def is_dominant(self) -> bool:
        w = self.weight
        return all(a > b for a, b in zip(w, w[1:])) and w[-1] > 0

    def to_json(self) -> dict:
        return {"2lambda": list(self.weight), "parity": self.parity.value}

    @classmethod
    def from_json(cls, data) -> "HarishChandraParameter":
        p = classify(Weight(data["2lambda"]))
        if "parity" in data and data["parity"] != p.parity.value:
            raise ParityError(f"recorded parity {data['parity']!r} does not match {p.weight}")
        return p

    def __str__(self):
        return str(self.weight)


def omega_n(n: int) -> Weight:
    return Weight((1,) * n)


def classify(lam) -> HarishChandraParameter:
    """Regular integral (all coordinates in Z) or genuine (all in Z + 1/2) parameter."""
    lam = lam.weight if isinstance(lam, HarishChandraParameter) else Weight(lam)
    odd = [d % 2 for d in lam]
    if all(odd):
        parity = Parity.GENUINE
    elif not any(odd):
        parity = Parity.INTEGRAL
    else:
        raise ParityError(f"{lam} mixes integral and half-integral coordinates")
    make_dominant(lam)  # raises RegularityError naming the offending coordinates
    return HarishChandraParameter(lam, parity)


def _param(lam) -> HarishChandraParameter:
    return lam if isinstance(lam, HarishChandraParameter) else classify(lam)


@dataclass(frozen=True)
class VirtualCharacter:
    """sum_w a_w e^{w lam_dom} / D, with lam_dom strictly dominant and a_w rational."""

    lam_dom: HarishChandraParameter
    coeffs: dict = field(hash=False)

    def __post_init__(self):
        if not self.lam_dom.is_dominant():
            raise RegularityError(f"{self.lam_dom.weight} is not strictly dominant")
        clean = {w: Fraction(c) for w, c in self.coeffs.items() if c}
        object.__setattr__(self, "coeffs", clean)

    @classmethod
    def from_parameter(cls, lam, coeffs=None) -> "VirtualCharacter":
        """Reorganize sum_w a_w e^{w lam} around the dominant representative of lam."""
        p = _param(lam)
        v, dom = make_dominant(p.weight)
        coeffs = {WeylElement.identity(p.rank): 1} if coeffs is None else coeffs
        vinv = v.inverse()
        # e^{w lam} = e^{w v^{-1} lam_dom}
        moved: dict = {}
        for w, c in coeffs.items():
            key = w * vinv
            moved[key] = moved.get(key, 0) + Fraction(c)
        return cls(HarishChandraParameter(dom, p.parity), moved)

    @classmethod
    def stable(cls, lam) -> "VirtualCharacter":
        """The stable sum: a_w = sgn(w) over the whole Weyl group."""
        p = _param(lam)
        _, dom = make_dominant(p.weight)
        return cls(HarishChandraParameter(dom, p.parity), {w: s for w, s in weyl_group(p.rank)})

    def numerator_terms(self) -> dict:
        out: dict = {}
        for w, c in self.coeffs.items():
            mu = w.act(self.lam_dom.weight)
            out[mu] = out.get(mu, 0) + c
        return {k: v for k, v in out.items() if v}

    def __eq__(self, other):
        if not isinstance(other, VirtualCharacter):
            return NotImplemented
        return self.lam_dom == other.lam_dom and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.lam_dom, frozenset(self.coeffs.items())))

    def to_json(self) -> dict:
        return {
            "lambda_dom": self.lam_dom.to_json(),
            "coeffs": sorted(
                ({"w": w.to_json(), "coef": str(c)} for w, c in self.coeffs.items()),
                key=lambda r: (r["w"]["perm"], r["w"]["signs"]),
            ),
        }


def lift_gamma(theta: VirtualCharacter, direction: str = "forward") -> VirtualCharacter:
    """Shift the parameter by -omega_n (forward, Sp -> Mp) or +omega_n (inverse); coefficients unchanged."""
    lam = theta.lam_dom
    n = lam.rank
    if direction == "forward":
        if lam.parity is not Parity.INTEGRAL:
            raise ParityError(f"forward lifting needs an integral parameter, got {lam.weight}")
        new = lam.weight - omega_n(n)
        parity = Parity.GENUINE
    elif direction == "inverse":
        if lam.parity is not Parity.GENUINE:
            raise ParityError(f"inverse lifting needs a genuine parameter, got {lam.weight}")
        new = lam.weight + omega_n(n)
        parity = Parity.INTEGRAL
    else:
        raise ValueError("direction must be 'forward' or 'inverse'")
    return VirtualCharacter(HarishChandraParameter(new, parity), dict(theta.coeffs))


def lift_ds_parameter(lam) -> HarishChandraParameter:
    """lambda' = lambda - w^{-1} omega_n, where w lambda is dominant."""
    p = _param(lam)
    if p.parity is not Parity.INTEGRAL:
        raise ParityError(f"discrete series of Sp(2n,R) have integral parameters, got {p.weight}")
    w, _ = make_dominant(p.weight)
    return HarishChandraParameter(p.weight - w.inverse().act(omega_n(p.rank)), Parity.GENUINE)


def unlift_ds_parameter(lam) -> HarishChandraParameter:
    """Inverse of :func:`lift_ds_parameter`: lambda = lambda' + w^{-1} omega_n."""
    p = _param(lam)
    if p.parity is not Parity.GENUINE:
        raise ParityError(f"genuine discrete series of Mp(2n,R) have half-integral parameters, got {p.weight}")
    w, _ = make_dominant(p.weight)
    return HarishChandraParameter(p.weight + w.inverse().act(omega_n(p.rank)), Parity.INTEGRAL)


def closed_form_lift(lam) -> Weight:
    """(a_1 - 1/2, ..., a_k - 1/2, -b_l + 1/2, ..., -b_1 + 1/2) read off the signs of lambda.

    Positive coordinates move toward zero by 1/2 and so do negative ones; this
    is the same map as :func:`lift_ds_parameter`, written coordinatewise.
    """
    lam = _param(lam).weight
    return Weight(d - 1 if d > 0 else d + 1 for d in lam)


def stable_numerator(lam) -> FormalCharacter:
    """sum_{w in W} sgn(w) e^{w lambda}; zero exactly when lambda is singular."""
    lam = lam.weight if isinstance(lam, HarishChandraParameter) else Weight(lam)
    terms: dict = {}
    for w, s in weyl_group(len(lam)):
        mu = w.act(lam)
        terms[mu] = terms.get(mu, 0) + s
    return FormalCharacter(len(lam), terms)


def mp_packet(lam) -> tuple[tuple[Weight, int], ...]:
    """Genuine discrete series parameters of Mp(2n,R) with the infinitesimal character of lam.

    W_{K'} = S_n, so the cosets W_{K'}\\W are the 2^n sign patterns; each
    pattern contributes its coordinates sorted decreasingly.  The integer
    attached to each parameter is the sign with which its S_n-alternating
    numerator enters :func:`stable_numerator`.
    """
    p = _param(lam)
    if p.parity is not Parity.GENUINE:
        raise ParityError(f"genuine parameters are half-integral, got {p.weight}")
    _, dom = make_dominant(p.weight)
    out = []
    for signs in itertools.product((1, -1), repeat=p.rank):
        flipped = [s * d for s, d in zip(signs, dom)]
        order = tuple(sorted(range(p.rank), key=lambda i: -flipped[i]))
        tau = WeylElement(order, (1,) * p.rank)
        sign = tau.sgn()
        for s in signs:
            sign *= s
        out.append((tau.act(flipped), sign))
    return tuple(sorted(out, reverse=True))


def compact_numerator(lam) -> FormalCharacter:
    """sum_{s in S_n} sgn(s) e^{s lambda}."""
    lam = Weight(lam)
    terms: dict = {}
    for perm in itertools.permutations(range(len(lam))):
        w = WeylElement(perm, (1,) * len(lam))
        mu = w.act(lam)
        terms[mu] = terms.get(mu, 0) + w.sgn()
    return FormalCharacter(len(lam), terms)


@dataclass(frozen=True)
class LiftCertificate:
    lam: HarishChandraParameter
    lam_prime: Weight
    witness: WeylElement
    order: int
    numerator_ok: bool
    series_ok: bool

    @property
    def orbit_sign(self) -> int:
        return self.witness.sgn()

    @property
    def passed(self) -> bool:
        return self.numerator_ok and self.series_ok

    def to_json(self) -> dict:
        return {
            "lambda": self.lam.to_json(),
            "lambda_prime": {"2lambda": list(self.lam_prime), "parity": Parity.GENUINE.value},
            "orbit_witness": self.witness.to_json(),
            "orbit_sign": self.orbit_sign,
            "order": self.order,
            "pass": self.passed,
        }


def adams_partner(lam, k: int) -> tuple[Weight, WeylElement]:
    """(a_1..a_k, -b_l..-b_1) from (a_1..a_k, b_1..b_l), with the signed permutation relating them."""
    lam = _param(lam).weight
    n = len(lam)
    if not 0 <= k <= n:
        raise ValueError(f"split point k must lie in 0..{n}, got {k}")
    perm = tuple(range(k)) + tuple(range(n - 1, k - 1, -1))
    signs = (1,) * k + (-1,) * (n - k)
    w = WeylElement(perm, signs)
    return w.act(lam), w


def verify_adams_transfer(lam, k: int, order: int = 12) -> LiftCertificate:
    """N_{lambda'} = sgn(w) N_lambda, and expand(N_lambda / D_B) * Phi = sgn(w) expand(N_{lambda'} / D_C)."""
    p = _param(lam)
    if p.parity is not Parity.GENUINE:
        raise ParityError(f"the orthogonal side needs a half-integral parameter, got {p.weight}")
    if any(d <= 0 for d in p.weight):
        raise ValueError(f"entries must be positive, got {p.weight}")
    n = p.rank
    lam_prime, w = adams_partner(p, k)
    sign = w.sgn()
    n_lam = stable_numerator(p.weight)
    n_prime = stable_numerator(lam_prime)
    numerator_ok = n_prime == n_lam * sign
    so_side = expand(RationalCharacter(n_lam, weyl_denominator(Kind.B, n)), order)
    sp_side = expand(RationalCharacter(n_prime, weyl_denominator(Kind.C, n)), order)
    series_ok = so_side * transfer_factor(n, order) == sp_side * sign
    return LiftCertificate(p, lam_prime, w, order, numerator_ok, series_ok)


def genuine_grid(n: int, max_coord2: int = 7):
    """Positive regular genuine parameters with doubled coordinates <= max_coord2, every ordering."""
    values = range(1, max_coord2 + 1, 2)
    for combo in itertools.permutations(values, n):
        yield Weight(combo)


def integral_grid(n: int, bound: int):
    """All regular integral parameters with |lambda_i| <= bound, every Weyl chamber."""
    values = [v for v in range(-bound, bound + 1) if v]
    for combo in itertools.product(values, repeat=n):
        lam = Weight(2 * v for v in combo)
        if is_regular(lam):
            yield lam


@dataclass
class BijectionReport:
    n: int
    bound: int
    total: int
    dominant: int
    injective: bool
    genuine: bool
    roundtrip: bool
    chamber_compatible: bool
    surjective: bool
    dominant_map: dict

    @property
    def passed(self) -> bool:
        return self.injective and self.genuine and self.roundtrip and self.chamber_compatible and self.surjective

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "bound": self.bound,
            "parameters": self.total,
            "dominant_parameters": self.dominant,
            "injective": self.injective,
            "genuine": self.genuine,
            "roundtrip": self.roundtrip,
            "chamber_compatible": self.chamber_compatible,
            "surjective": self.surjective,
            "pass": self.passed,
        }


def bijection_suite(n: int, bound: int) -> BijectionReport:
    if bound < 1:
        raise ValueError("bound must be at least 1")
    images = {}
    genuine = roundtrip = chamber = True
    dominant_map = {}
    total = dominant = 0
    om = omega_n(n)
    for lam in integral_grid(n, bound):
        total += 1
        out = lift_ds_parameter(lam)
        images[out.weight] = lam
        if out.parity is not Parity.GENUINE or not is_regular(out.weight) or not out.weight.is_genuine():
            genuine = False
        if unlift_ds_parameter(out).weight != lam:
            roundtrip = False
        w, dom = make_dominant(lam)
        w2, dom2 = make_dominant(out.weight)
        if w2 != w or dom2 != dom - om:
            chamber = False
        if lam == dom:
            dominant += 1
            dominant_map[lam] = out.weight
    # every genuine regular parameter with |lambda'_i| <= bound - 1/2 is hit
    odd = [v for v in range(-(2 * bound - 1), 2 * bound, 2)]
    surjective = all(
        Weight(c) in images for c in itertools.product(odd, repeat=n) if is_regular(c)
    )
    return BijectionReport(
        n, bound, total, dominant, len(images) == total, genuine, roundtrip, chamber, surjective, dominant_map
    )
