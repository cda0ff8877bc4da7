"""The formal character ring and its truncated power-series completion.

A :class:`FormalCharacter` is a finite sum ``sum c_mu e^mu`` with integer
coefficients and exponents in (1/2 Z)^n (doubled-integer keys).  Quotients of
characters are expanded in the antidominant direction, as power series in
``q_i = e^{-e_i/2}``; see :class:`TruncatedSeries` and :func:`expand`.
"""

from __future__ import annotations

import logging
from functools import lru_cache
from typing import Iterable, Mapping

from . import kernels
from .errors import ExpansionError, InexactDivisionError, RankError
from .rootdata import Kind, Weight, is_regular, positive_roots, unit, weyl_group

log = logging.getLogger(__name__)


def _canonical_items(terms: Mapping):
    return sorted(terms.items(), key=lambda kv: kv[0], reverse=True)


class FormalCharacter:
    """Sparse Laurent polynomial ``{doubled exponent tuple: int}``."""

    __slots__ = ("rank", "terms")

    def __init__(self, rank: int, terms: Mapping | None = None):
        self.rank = rank
        clean = {}
        for k, c in (terms or {}).items():
            if len(k) != rank:
                raise RankError(f"exponent {k} has rank {len(k)}, expected {rank}")
            if c:
                clean[tuple(k)] = int(c)
        self.terms = clean

    @classmethod
    def _raw(cls, rank, terms):
        obj = cls.__new__(cls)
        obj.rank = rank
        obj.terms = terms
        return obj

    @classmethod
    def monomial(cls, weight, coef: int = 1) -> "FormalCharacter":
        return cls(len(weight), {tuple(weight): coef})

    @classmethod
    def one(cls, n: int) -> "FormalCharacter":
        return cls.monomial((0,) * n)

    @classmethod
    def zero(cls, n: int) -> "FormalCharacter":
        return cls(n)

    def _check(self, other):
        if not isinstance(other, FormalCharacter):
            return NotImplemented
        if other.rank != self.rank:
            raise RankError(f"rank mismatch: {self.rank} vs {other.rank}")
        return other

    def __add__(self, other):
        if isinstance(other, int):
            other = FormalCharacter.one(self.rank) * other
        if self._check(other) is NotImplemented:
            return NotImplemented
        out = dict(self.terms)
        for k, c in other.terms.items():
            v = out.get(k, 0) + c
            if v:
                out[k] = v
            else:
                out.pop(k, None)
        return FormalCharacter._raw(self.rank, out)

    __radd__ = __add__

    def __neg__(self):
        return FormalCharacter._raw(self.rank, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return FormalCharacter(self.rank)
            return FormalCharacter._raw(self.rank, {k: c * other for k, c in self.terms.items()})
        if self._check(other) is NotImplemented:
            return NotImplemented
        return FormalCharacter._raw(self.rank, kernels.laurent_mul(self.terms, other.terms))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = FormalCharacter.one(self.rank)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, int):
            other = FormalCharacter.one(self.rank) * other
        if not isinstance(other, FormalCharacter):
            return NotImplemented
        return self.rank == other.rank and self.terms == other.terms

    def __hash__(self):
        return hash((self.rank, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def coefficient(self, weight) -> int:
        return self.terms.get(tuple(weight), 0)

    def items(self):
        """Terms in canonical order (lexicographically descending exponents)."""
        return [(Weight(k), c) for k, c in _canonical_items(self.terms)]

    def dimension(self) -> int:
        return sum(self.terms.values())

    def leading(self) -> Weight:
        return Weight(max(self.terms))

    def top(self) -> Weight:
        """Coordinatewise maximum of the support."""
        if not self.terms:
            raise ValueError("zero character has no support")
        return Weight(max(col) for col in zip(*self.terms))

    def act(self, w) -> "FormalCharacter":
        return FormalCharacter._raw(self.rank, {tuple(w.act(k)): c for k, c in self.terms.items()})

    def to_json(self) -> list:
        return [{"2exp": list(k), "coef": str(c)} for k, c in _canonical_items(self.terms)]

    @classmethod
    def from_json(cls, data, rank: int | None = None) -> "FormalCharacter":
        if rank is None:
            if not data:
                raise ValueError("rank needed for the empty character")
            rank = len(data[0]["2exp"])
        return cls(rank, {tuple(t["2exp"]): int(t["coef"]) for t in data})

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for k, c in _canonical_items(self.terms):
            mono = "1" if not any(k) else f"e^({Weight(k)})"
            parts.append((c, mono))
        return _join_terms(parts)


def _join_terms(parts) -> str:
    """Render [(coef, monomial)] as ``a - 2*b + c``."""
    out = ""
    for i, (c, mono) in enumerate(parts):
        mag = abs(c)
        body = mono if mag == 1 else (str(mag) if mono == "1" else f"{mag}*{mono}")
        if i == 0:
            out = ("-" if c < 0 else "") + body
        else:
            out += (" - " if c < 0 else " + ") + body
    return out or "0"


def exact_div(f: FormalCharacter, g: FormalCharacter) -> FormalCharacter:
    """The Laurent polynomial q with f = q*g; InexactDivisionError if none exists."""
    if f.rank != g.rank:
        raise RankError(f"rank mismatch: {f.rank} vs {g.rank}")
    if not g:
        raise ZeroDivisionError("division by the zero character")
    quot, rem = kernels.laurent_divide(f.terms, g.terms)
    if rem:
        r = FormalCharacter._raw(f.rank, rem)
        raise InexactDivisionError(f"{g!r} does not divide the dividend; remainder has {len(rem)} terms", r)
    return FormalCharacter._raw(f.rank, quot)


def divides(g: FormalCharacter, f: FormalCharacter) -> bool:
    try:
        exact_div(f, g)
    except InexactDivisionError:
        return False
    return True


def weyl_numerator(lam) -> FormalCharacter:
    """Alternating sum ``sum_w sgn(w) e^{w lam}`` over the signed permutations."""
    lam = Weight(lam)
    if not is_regular(lam):
        log.info("weyl_numerator: %s is singular, the alternating sum vanishes", lam)
        return FormalCharacter(len(lam))
    terms = {}
    for w, s in weyl_group(len(lam)):
        terms[tuple(w.act(lam))] = s
    return FormalCharacter._raw(len(lam), terms)


def _binomial(half_root: Weight, sign: int) -> FormalCharacter:
    return FormalCharacter(len(half_root), {tuple(half_root): 1, tuple(-half_root): sign})


def root_factor(root, sign: int = -1) -> FormalCharacter:
    """``e^{root/2} + sign * e^{-root/2}``; ``root`` in doubled coordinates."""
    root = Weight(root)
    if any(d % 2 for d in root):
        raise ValueError(f"root {root} is not integral")
    return _binomial(Weight(d // 2 for d in root), sign)


@lru_cache(maxsize=None)
def weyl_denominator(kind, n: int) -> FormalCharacter:
    """Product of ``e^{a/2} - e^{-a/2}`` over the positive roots of B_n or C_n."""
    kind = Kind.parse(kind)
    if kind is Kind.OSP:
        raise ValueError("use weyl_denominator('C', n) and odd_denominator(n) for osp(1|2n)")
    out = FormalCharacter.one(n)
    for a in positive_roots(kind, n).even_positive_roots:
        out = out * root_factor(a)
    return out


@lru_cache(maxsize=None)
def odd_denominator(n: int) -> FormalCharacter:
    """Product of ``e^{e_i/2} + e^{-e_i/2}`` over the odd positive roots."""
    out = FormalCharacter.one(n)
    for i in range(n):
        out = out * root_factor(unit(n, i), +1)
    return out


class RationalCharacter:
    """A formal quotient ``numerator / denominator`` of characters."""

    __slots__ = ("numerator", "denominator")

    def __init__(self, numerator: FormalCharacter, denominator: FormalCharacter | None = None):
        if denominator is None:
            denominator = FormalCharacter.one(numerator.rank)
        if numerator.rank != denominator.rank:
            raise RankError("numerator and denominator ranks differ")
        if not denominator:
            raise ZeroDivisionError("zero denominator")
        self.numerator = numerator
        self.denominator = denominator

    @property
    def rank(self):
        return self.numerator.rank

    def __eq__(self, other):
        if not isinstance(other, RationalCharacter):
            return NotImplemented
        return self.numerator * other.denominator == other.numerator * self.denominator

    __hash__ = None

    def __mul__(self, other):
        if isinstance(other, FormalCharacter):
            other = RationalCharacter(other)
        return RationalCharacter(self.numerator * other.numerator, self.denominator * other.denominator)

    def __add__(self, other):
        if isinstance(other, FormalCharacter):
            other = RationalCharacter(other)
        return RationalCharacter(
            self.numerator * other.denominator + other.numerator * self.denominator,
            self.denominator * other.denominator,
        )

    def __neg__(self):
        return RationalCharacter(-self.numerator, self.denominator)

    def __sub__(self, other):
        return self + (-other)

    def expand(self, order: int, offset=None) -> "TruncatedSeries":
        return expand(self, order, offset)

    def __repr__(self):
        return f"({self.numerator!r}) / ({self.denominator!r})"


class TruncatedSeries:
    """Power series in ``q_i = e^{-e_i/2}`` about a base weight ``offset``.

    A key ``a`` (nonnegative ints) stands for ``e^{offset} q^a``, i.e. the
    weight whose doubled coordinates are ``offset - a``.  Only keys of total
    degree ``<= order`` are known; everything above is unknown, not zero.
    Series with different offsets are compared after rebasing both to the
    coordinatewise maximum of their offsets.
    """

    __slots__ = ("rank", "offset", "order", "coeffs")

    def __init__(self, offset, order: int, coeffs: Mapping | None = None):
        self.offset = Weight(offset)
        self.rank = len(self.offset)
        self.order = int(order)
        clean = {}
        for k, c in (coeffs or {}).items():
            if len(k) != self.rank or min(k) < 0:
                raise ValueError(f"bad exponent vector {k} for rank {self.rank}")
            if c and sum(k) <= self.order:
                clean[tuple(k)] = int(c)
        self.coeffs = clean

    @classmethod
    def _raw(cls, offset, order, coeffs):
        obj = cls.__new__(cls)
        obj.offset = offset
        obj.rank = len(offset)
        obj.order = order
        obj.coeffs = coeffs
        return obj

    @classmethod
    def from_character(cls, f: FormalCharacter, order: int, offset=None) -> "TruncatedSeries":
        """Faithful truncation of f.  The default offset is max(top(f), 0) coordinatewise."""
        if offset is None:
            offset = default_offset(f.top() if f else Weight.zero(f.rank))
        offset = Weight(offset)
        coeffs = {}
        for mu, c in f.terms.items():
            a = tuple(o - m for o, m in zip(offset, mu))
            if min(a) < 0:
                raise ValueError(f"term e^({Weight(mu)}) lies above the offset {offset}")
            if sum(a) <= order:
                coeffs[a] = c
        return cls._raw(offset, int(order), coeffs)

    @classmethod
    def one(cls, n: int, order: int) -> "TruncatedSeries":
        return cls._raw(Weight.zero(n), order, {(0,) * n: 1})

    def to_character(self) -> FormalCharacter:
        """The known terms, as a character."""
        return FormalCharacter._raw(
            self.rank, {tuple(o - x for o, x in zip(self.offset, a)): c for a, c in self.coeffs.items()}
        )

    def coefficient(self, weight) -> int:
        a = tuple(o - m for o, m in zip(self.offset, weight))
        if min(a) < 0:
            return 0
        if sum(a) > self.order:
            raise ValueError(f"e^({Weight(weight)}) is beyond the truncation order")
        return self.coeffs.get(a, 0)

    def rebase(self, offset) -> "TruncatedSeries":
        offset = Weight(offset)
        shift = tuple(n - o for n, o in zip(offset, self.offset))
        if min(shift) < 0:
            raise ValueError(f"cannot rebase {self.offset} down to {offset}")
        if not any(shift):
            return self
        coeffs = {tuple(x + s for x, s in zip(a, shift)): c for a, c in self.coeffs.items()}
        return TruncatedSeries._raw(offset, self.order + sum(shift), coeffs)

    def truncate(self, order: int) -> "TruncatedSeries":
        order = min(order, self.order)
        return TruncatedSeries._raw(self.offset, order, {a: c for a, c in self.coeffs.items() if sum(a) <= order})

    def _aligned(self, other):
        if not isinstance(other, TruncatedSeries):
            return None
        if other.rank != self.rank:
            raise RankError(f"rank mismatch: {self.rank} vs {other.rank}")
        off = Weight(max(a, b) for a, b in zip(self.offset, other.offset))
        x, y = self.rebase(off), other.rebase(off)
        order = min(x.order, y.order)
        return x.truncate(order), y.truncate(order)

    def __add__(self, other):
        pair = self._aligned(other)
        if pair is None:
            return NotImplemented
        x, y = pair
        out = dict(x.coeffs)
        for a, c in y.coeffs.items():
            v = out.get(a, 0) + c
            if v:
                out[a] = v
            else:
                out.pop(a, None)
        return TruncatedSeries._raw(x.offset, x.order, out)

    def __neg__(self):
        return TruncatedSeries._raw(self.offset, self.order, {a: -c for a, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return TruncatedSeries._raw(
                self.offset, self.order, {a: c * other for a, c in self.coeffs.items() if c * other}
            )
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        if other.rank != self.rank:
            raise RankError(f"rank mismatch: {self.rank} vs {other.rank}")
        order = min(self.order, other.order)
        return TruncatedSeries._raw(
            self.offset + other.offset, order, kernels.series_mul(self.coeffs, other.coeffs, order)
        )

    __rmul__ = __mul__

    def __eq__(self, other):
        pair = self._aligned(other)
        if pair is None:
            return NotImplemented
        return pair[0].coeffs == pair[1].coeffs

    __hash__ = None

    def inverse(self) -> "TruncatedSeries":
        """Multiplicative inverse; needs a unit constant term (coefficient +-1 at q^0)."""
        zero = (0,) * self.rank
        c0 = self.coeffs.get(zero, 0)
        if c0 not in (1, -1):
            raise ExpansionError(f"constant term {c0} is not a unit; series is not invertible")
        return TruncatedSeries._raw(-self.offset, self.order, _series_inverse(self.coeffs, c0, self.order))

    def items(self):
        """Known terms as ``(weight, coefficient)`` in canonical order."""
        return self.to_character().items()

    def to_json(self) -> dict:
        return {
            "offset2": list(self.offset),
            "order": self.order,
            "terms": self.to_character().to_json(),
        }

    @classmethod
    def from_json(cls, data) -> "TruncatedSeries":
        offset = Weight(data["offset2"])
        ch = FormalCharacter.from_json(data["terms"], rank=len(offset))
        return cls.from_character(ch, data["order"], offset)

    def __repr__(self):
        if self.offset == Weight.zero(self.rank):
            parts = []
            for a, c in sorted(self.coeffs.items(), key=lambda kv: (sum(kv[0]), tuple(-x for x in kv[0]))):
                mono = "*".join(
                    (f"q{i + 1}" if self.rank > 1 else "q") + (f"^{x}" if x > 1 else "")
                    for i, x in enumerate(a)
                    if x
                ) or "1"
                parts.append((c, mono))
            body = _join_terms(parts)
        else:
            body = repr(self.to_character())
        return f"<{body} + O(q^{self.order + 1}) @ {self.offset}>"


def default_offset(top) -> Weight:
    return Weight(max(d, 0) for d in top)


def _series_inverse(coeffs, c0, order):
    # Newton iteration s <- s (2 - g s); precision p -> 2p + 1
    n = len(next(iter(coeffs)))
    zero = (0,) * n
    s = {zero: c0}
    p = 0
    while p < order:
        p = min(2 * p + 1, order)
        e = kernels.series_mul(coeffs, s, p)
        corr = {a: -c for a, c in e.items()}
        corr[zero] = corr.get(zero, 0) + 2
        s = kernels.series_mul(s, {a: c for a, c in corr.items() if c}, p)
    return s


def _type_a_factors(n: int):
    for i in range(n):
        for j in range(i + 1, n):
            yield root_factor(unit(n, i) - unit(n, j))


def reduce_for_expansion(r: RationalCharacter) -> RationalCharacter:
    """Cancel common factors ``e^{(e_i-e_j)/2} - e^{-(e_i-e_j)/2}``.

    These factors have no coordinatewise-dominant term, so a denominator
    containing them has no one-sided expansion in the q_i.  Every other
    factor of a B_n/C_n/odd Weyl denominator has one.
    """
    num, den = r.numerator, r.denominator
    for a in _type_a_factors(r.rank):
        while True:
            try:
                den2 = exact_div(den, a)
            except InexactDivisionError:
                break
            try:
                num2 = exact_div(num, a)
            except InexactDivisionError:
                raise ExpansionError(
                    f"denominator contains {a!r} but the numerator is not divisible by it"
                ) from None
            num, den = num2, den2
    return RationalCharacter(num, den)


def expand(r: RationalCharacter, order: int, offset=None) -> TruncatedSeries:
    """Expand ``r`` as a power series in ``q_i = e^{-e_i/2}`` up to total degree ``order``.

    The denominator (after :func:`reduce_for_expansion`) must contain a
    coordinatewise-dominant term with coefficient +-1.  The default offset
    of the result is the coordinatewise maximum of the zero weight and the
    top of the expansion's support.
    """
    if isinstance(r, FormalCharacter):
        r = RationalCharacter(r)
    r = reduce_for_expansion(r)
    num, den = r.numerator, r.denominator
    n = r.rank
    dtop = den.top()
    if tuple(dtop) not in den.terms or den.terms[tuple(dtop)] not in (1, -1):
        raise ExpansionError(f"denominator {den!r} has no unit coordinatewise-leading term")
    if not num:
        off = Weight(offset) if offset is not None else Weight.zero(n)
        return TruncatedSeries._raw(off, order, {})
    base = num.top() - dtop
    off = Weight(offset) if offset is not None else default_offset(base)
    shift = off - base
    if min(shift) < 0:
        raise ValueError(f"offset {off} lies below the expansion's top {base}")
    inner = order - sum(shift)
    if inner < 0:
        return TruncatedSeries._raw(off, order, {})
    dser = TruncatedSeries.from_character(den, inner, dtop)
    inv = dser.inverse()
    nser = TruncatedSeries.from_character(num, inner, num.top())
    prod = TruncatedSeries._raw(nser.offset + inv.offset, inner, kernels.series_mul(nser.coeffs, inv.coeffs, inner))
    return prod.rebase(off)
