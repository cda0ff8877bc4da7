"""Root data for B_n, C_n and osp(1|2n) with exact half-integer weights.

Weights live in (1/2 Z)^n and are stored as *doubled* integer coordinates, so
no rational type is needed and exponent vectors hash quickly.  The Weyl group
of B_n and C_n is the same hyperoctahedral group; it is realised here as
signed permutations.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

from .errors import (
    DominanceError,
    RankError,
    RegularityError,
    ResourceLimitError,
    SpinorialWeightError,
)

MAX_WEYL_RANK = 8


class Weight(tuple):
    """A point of (1/2 Z)^n, stored as the tuple of doubled coordinates.

    ``Weight((3, 1))`` is the weight (3/2, 1/2).  Arithmetic is componentwise
    on the doubled coordinates; a Weight compares and hashes equal to the plain
    tuple of its doubled coordinates, so either may be used as a dict key.
    """

    __slots__ = ()

    def __new__(cls, doubled: Iterable[int]):
        vals = tuple(doubled)
        for v in vals:
            if not isinstance(v, int) or isinstance(v, bool):
                raise TypeError(f"doubled coordinates must be ints, got {v!r}")
        return super().__new__(cls, vals)

    @classmethod
    def from_coords(cls, coords: Iterable) -> "Weight":
        out = []
        for c in coords:
            d = Fraction(c) * 2
            if d.denominator != 1:
                raise ValueError(f"coordinate {c} is not a half-integer")
            out.append(int(d))
        return cls(out)

    @classmethod
    def parse(cls, text: str) -> "Weight":
        """Parse ``"3/2,1/2"`` (comma-separated rationals)."""
        parts = [p.strip() for p in text.split(",") if p.strip()]
        if not parts:
            raise ValueError("empty weight")
        return cls.from_coords(Fraction(p) for p in parts)

    @classmethod
    def zero(cls, n: int) -> "Weight":
        return cls((0,) * n)

    @property
    def rank(self) -> int:
        return len(self)

    @property
    def coords(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(d, 2) for d in self)

    def __add__(self, other):
        _check_same_rank(self, other)
        return Weight(a + b for a, b in zip(self, other))

    def __sub__(self, other):
        _check_same_rank(self, other)
        return Weight(a - b for a, b in zip(self, other))

    def __neg__(self):
        return Weight(-a for a in self)

    def scale(self, k: int) -> "Weight":
        return Weight(k * a for a in self)

    def is_integral(self) -> bool:
        return all(d % 2 == 0 for d in self)

    def is_genuine(self) -> bool:
        """True when every coordinate lies in Z + 1/2."""
        return all(d % 2 == 1 for d in self)

    def dot(self, other) -> Fraction:
        """Coordinate inner product <e_i, e_j> = delta_ij."""
        _check_same_rank(self, other)
        return Fraction(sum(a * b for a, b in zip(self, other)), 4)

    def __str__(self):
        return ",".join(_fmt_half(d) for d in self)

    def __repr__(self):
        return f"Weight({str(self)})"

    def to_json(self) -> dict:
        return {"2lambda": list(self)}

    @classmethod
    def from_json(cls, obj) -> "Weight":
        return cls(obj["2lambda"])


def _fmt_half(d: int) -> str:
    return str(d // 2) if d % 2 == 0 else f"{d}/2"


def _check_same_rank(a, b):
    if len(a) != len(b):
        raise RankError(f"rank mismatch: {len(a)} vs {len(b)}")


def _check_rank(n: int):
    if not isinstance(n, int) or n < 1:
        raise RankError(f"invalid rank {n!r}; rank must be a positive integer")


def unit(n: int, i: int, doubled: int = 2) -> Weight:
    """``doubled/2 * e_i`` (0-based i)."""
    v = [0] * n
    v[i] = doubled
    return Weight(v)


class Kind(str, enum.Enum):
    B = "B"
    C = "C"
    OSP = "OSP"

    @classmethod
    def parse(cls, value) -> "Kind":
        if isinstance(value, Kind):
            return value
        try:
            return cls(str(value).upper())
        except ValueError:
            raise ValueError(f"unknown kind {value!r}; expected one of B, C, OSP") from None


def _canonical(roots: Iterable[Weight]) -> tuple[Weight, ...]:
    return tuple(sorted(set(roots), reverse=True))


@dataclass(frozen=True)
class RootSystemData:
    kind: Kind
    rank: int
    even_positive_roots: tuple[Weight, ...]
    odd_positive_roots: tuple[Weight, ...] = ()

    @property
    def positive_roots(self) -> tuple[Weight, ...]:
        return _canonical(self.even_positive_roots + self.odd_positive_roots)


@lru_cache(maxsize=None)
def positive_roots(kind, n: int) -> RootSystemData:
    kind = Kind.parse(kind)
    _check_rank(n)
    long_roots = []
    for i in range(n):
        for j in range(i + 1, n):
            long_roots.append(unit(n, i) - unit(n, j))
            long_roots.append(unit(n, i) + unit(n, j))
    short = [unit(n, i) for i in range(n)]
    doubled_long = [unit(n, i, 4) for i in range(n)]
    if kind is Kind.B:
        return RootSystemData(kind, n, _canonical(long_roots + short))
    if kind is Kind.C:
        return RootSystemData(kind, n, _canonical(long_roots + doubled_long))
    return RootSystemData(kind, n, _canonical(long_roots + doubled_long), _canonical(short))


def simple_roots(kind, n: int) -> tuple[Weight, ...]:
    """e_1-e_2, ..., e_{n-1}-e_n and then e_n (B, osp) or 2e_n (C)."""
    kind = Kind.parse(kind)
    _check_rank(n)
    out = [unit(n, i) - unit(n, i + 1) for i in range(n - 1)]
    out.append(unit(n, n - 1, 4 if kind is Kind.C else 2))
    return tuple(out)


def _half_sum(roots: Sequence[Weight], n: int) -> Weight:
    total = [0] * n
    for r in roots:
        for i, d in enumerate(r):
            total[i] += d
    # half of a sum of doubled coordinates is again a doubled coordinate
    return Weight(t // 2 for t in total)


def rho0(n: int) -> Weight:
    """Half-sum of the even positive roots of osp(1|2n): (n, ..., 1)."""
    return _half_sum(positive_roots(Kind.OSP, n).even_positive_roots, n)


def rho1(n: int) -> Weight:
    """Half-sum of the odd positive roots of osp(1|2n): (1/2, ..., 1/2)."""
    return _half_sum(positive_roots(Kind.OSP, n).odd_positive_roots, n)


def rho(kind, n: int) -> Weight:
    kind = Kind.parse(kind)
    if kind is Kind.OSP:
        return rho0(n) - rho1(n)
    return _half_sum(positive_roots(kind, n).even_positive_roots, n)


def fundamental_weights(n: int) -> tuple[Weight, ...]:
    _check_rank(n)
    out = [Weight([2] * (i + 1) + [0] * (n - i - 1)) for i in range(n - 1)]
    out.append(Weight([1] * n))
    return tuple(out)


@dataclass(frozen=True)
class WeylElement:
    """Signed permutation acting by ``(w lam)_i = signs[i] * lam[perm[i]]``.

    ``perm`` is 0-based.  Composition ``w1 * w2`` means "apply w2, then w1".
    """

    perm: tuple[int, ...]
    signs: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.perm) != list(range(len(self.perm))):
            raise ValueError(f"{self.perm} is not a permutation")
        if len(self.signs) != len(self.perm) or any(s not in (1, -1) for s in self.signs):
            raise ValueError(f"bad sign vector {self.signs}")

    @classmethod
    def identity(cls, n: int) -> "WeylElement":
        return cls(tuple(range(n)), (1,) * n)

    @property
    def rank(self) -> int:
        return len(self.perm)

    def act(self, lam: Sequence[int]) -> Weight:
        return Weight(s * lam[p] for s, p in zip(self.signs, self.perm))

    def __call__(self, lam):
        return self.act(lam)

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        perm = tuple(other.perm[p] for p in self.perm)
        signs = tuple(s * other.signs[p] for s, p in zip(self.signs, self.perm))
        return WeylElement(perm, signs)

    def inverse(self) -> "WeylElement":
        n = len(self.perm)
        inv = [0] * n
        for i, p in enumerate(self.perm):
            inv[p] = i
        return WeylElement(tuple(inv), tuple(self.signs[inv[j]] for j in range(n)))

    def sgn(self) -> int:
        return _perm_sign(self.perm) * _prod(self.signs)

    def matrix(self) -> list[list[int]]:
        n = len(self.perm)
        m = [[0] * n for _ in range(n)]
        for i, (s, p) in enumerate(zip(self.signs, self.perm)):
            m[i][p] = s
        return m

    def to_json(self) -> dict:
        return {"perm": list(self.perm), "signs": list(self.signs)}


def _prod(xs):
    out = 1
    for x in xs:
        out *= x
    return out


def _perm_sign(perm) -> int:
    seen = [False] * len(perm)
    sign = 1
    for i in range(len(perm)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def weyl_iter(n: int, max_rank: int = MAX_WEYL_RANK) -> Iterator[tuple[WeylElement, int]]:
    """Yield every signed permutation of rank n with its sign.

    Order: permutations lexicographically, and within each permutation the
    sign vectors in binary order (+1 before -1, first coordinate most
    significant).
    """
    _check_rank(n)
    if n > max_rank:
        raise ResourceLimitError(
            f"Weyl group of rank {n} has {2**n * _factorial(n)} elements; limit is rank {max_rank}"
        )
    for perm in itertools.permutations(range(n)):
        psign = _perm_sign(perm)
        for signs in itertools.product((1, -1), repeat=n):
            yield WeylElement(perm, signs), psign * _prod(signs)


def _factorial(n):
    out = 1
    for k in range(2, n + 1):
        out *= k
    return out


@lru_cache(maxsize=None)
def weyl_group(n: int) -> tuple[tuple[WeylElement, int], ...]:
    """Materialised :func:`weyl_iter` (cached)."""
    return tuple(weyl_iter(n))


def is_regular(lam: Sequence[int]) -> bool:
    absvals = [abs(d) for d in lam]
    return 0 not in absvals and len(set(absvals)) == len(absvals)


def make_dominant(lam: Sequence[int]) -> tuple[WeylElement, Weight]:
    """Return the unique ``w`` with ``w lam`` strictly dominant, and ``w lam``."""
    lam = Weight(lam)
    zeros = [i + 1 for i, d in enumerate(lam) if d == 0]
    if zeros:
        raise RegularityError(f"weight {lam} is singular: zero coordinate(s) {zeros}", zeros)
    seen = {}
    for i, d in enumerate(lam):
        if abs(d) in seen:
            bad = (seen[abs(d)] + 1, i + 1)
            raise RegularityError(
                f"weight {lam} is singular: coordinates {bad[0]} and {bad[1]} have equal absolute value",
                bad,
            )
        seen[abs(d)] = i
    perm = tuple(sorted(range(len(lam)), key=lambda i: -abs(lam[i])))
    signs = tuple(1 if lam[p] > 0 else -1 for p in perm)
    w = WeylElement(perm, signs)
    return w, w.act(lam)


def validate_highest_weight(hw: Sequence[int], n: int | None = None) -> list[int]:
    """Dynkin labels (p_1, ..., p_n) of hw = sum p_i omega_i.

    Accepts exactly the weights with all p_i nonnegative integers and p_n even.
    """
    hw = Weight(hw)
    if n is not None and len(hw) != n:
        raise RankError(f"weight {hw} has rank {len(hw)}, expected {n}")
    n = len(hw)
    _check_rank(n)
    labels = [Fraction(hw[i] - hw[i + 1], 2) for i in range(n - 1)]
    labels.append(Fraction(hw[n - 1]))  # p_n = 2 * lambda_n = doubled lambda_n
    bad = [i + 1 for i, p in enumerate(labels[:-1]) if p < 0 or p.denominator != 1]
    if labels[-1] < 0:
        bad.append(n)
    if bad:
        raise DominanceError(
            f"weight {hw} is not dominant integral: Dynkin labels {[str(p) for p in labels]}, bad at {bad}"
        )
    p = [int(x) for x in labels]
    if p[-1] % 2:
        raise SpinorialWeightError(
            f"weight {hw} has odd last label p_{n}={p[-1]}: spinorial for o(2n+1), not a highest weight of osp(1|2n)"
        )
    return p


def from_dynkin_labels(labels: Sequence[int]) -> Weight:
    n = len(labels)
    total = Weight.zero(n)
    for p, w in zip(labels, fundamental_weights(n)):
        total = total + w.scale(p)
    return total
