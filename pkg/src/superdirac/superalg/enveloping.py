"""Normal forms in U(g) (x) W(g_1) for g = osp(1|2n).

A basis element is a pair ``(u, w)``:

* ``u`` is a PBW word, a tuple of generator indices sorted by the engine's
  generator order; odd generators occur at most once.  Straightening uses
  ``ab = (-1)^{|a||b|} ba + [a, b]`` and, for odd a, ``aa = [a, a] / 2``.
* ``w`` is a Weyl monomial ``d^a x^b`` (all d's to the left), stored as the
  exponent tuple ``a + b`` of length 2n.

Products are taken factorwise, ``(u1 (x) w1)(u2 (x) w2) = u1 u2 (x) w1 w2``:
the Weyl algebra is an ordinary algebra and commutes with U(g).  This is the
product under which D^2 = -Omega_g (x) 1 + Omega_{g_0 Delta} - C holds.
``koszul=True`` inserts the sign ``(-1)^{|w1||u2|}`` (W(g_1) graded by
polynomial degree); under it that identity fails.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from math import comb, factorial

from .structure import SuperAlgebraStructure, build_structure


class Enveloping:
    """Multiplication tables for one structure and one PBW generator order."""

    def __init__(self, structure: SuperAlgebraStructure, order=None, koszul: bool = False):
        self.structure = structure
        self.n = structure.rank
        self.koszul = koszul
        if order is None:
            order = list(range(structure.dim))
        order = [structure.index(g) if isinstance(g, str) else g for g in order]
        if sorted(order) != list(range(structure.dim)):
            raise ValueError("order must list every generator exactly once")
        self.order = tuple(order)
        self.pos = {g: i for i, g in enumerate(order)}
        self._gen_cache = {}
        self._word_cache = {}
        self._weyl_cache = {}

    # -- U(g) ------------------------------------------------------------

    def u_parity(self, word) -> int:
        p = self.structure.parity
        return sum(p[g] for g in word) & 1

    def _mul_gen(self, word: tuple, g: int) -> dict:
        """Normal form of (sorted word) * g."""
        key = (word, g)
        hit = self._gen_cache.get(key)
        if hit is not None:
            return hit
        s = self.structure
        out: dict = {}
        if not word or self.pos[word[-1]] < self.pos[g] or (word[-1] == g and not s.parity[g]):
            out = {word + (g,): Fraction(1)}
        else:
            last, head = word[-1], word[:-1]
            if last == g:
                # odd g: g g = [g, g] / 2
                for h, c in s.bracket(g, g).items():
                    _acc(out, self._mul_gen(head, h), c / 2)
            else:
                sign = -1 if (s.parity[last] and s.parity[g]) else 1
                for w, c in self._mul_gen(head, g).items():
                    _acc(out, self._mul_gen(w, last), sign * c)
                for h, c in s.bracket(last, g).items():
                    _acc(out, self._mul_gen(head, h), c)
        self._gen_cache[key] = out
        return out

    def mul_words(self, u1: tuple, u2: tuple) -> dict:
        key = (u1, u2)
        hit = self._word_cache.get(key)
        if hit is not None:
            return hit
        cur = {u1: Fraction(1)}
        for g in u2:
            nxt: dict = {}
            for w, c in cur.items():
                _acc(nxt, self._mul_gen(w, g), c)
            cur = nxt
        self._word_cache[key] = cur
        return cur

    def normal_u(self, word) -> dict:
        return self.mul_words((), tuple(word))

    # -- W(g_1) ----------------------------------------------------------

    def mul_weyl(self, w1: tuple, w2: tuple) -> dict:
        """(d^a x^b)(d^c x^e) in d-left normal order."""
        key = (w1, w2)
        hit = self._weyl_cache.get(key)
        if hit is not None:
            return hit
        n = self.n
        per_var = []
        for i in range(n):
            a, b = w1[i], w1[n + i]
            c, e = w2[i], w2[n + i]
            # x^b d^c = sum_k (-1)^k k! C(b,k) C(c,k) d^{c-k} x^{b-k}
            per_var.append(
                [((-1) ** k * factorial(k) * comb(b, k) * comb(c, k), a + c - k, b + e - k) for k in range(min(b, c) + 1)]
            )
        out: dict = {}
        for choice in itertools.product(*per_var):
            coef = 1
            for t in choice:
                coef *= t[0]
            k = tuple(t[1] for t in choice) + tuple(t[2] for t in choice)
            out[k] = out.get(k, 0) + coef
        out = {k: Fraction(v) for k, v in out.items() if v}
        self._weyl_cache[key] = out
        return out

    def normal_w(self, letters) -> dict:
        """Normal form of a word of letters ('d', i) / ('x', i), 1-based i."""
        n = self.n
        cur = {(0,) * (2 * n): Fraction(1)}
        for kind, i in letters:
            unit = [0] * (2 * n)
            unit[(i - 1) + (n if kind == "x" else 0)] = 1
            unit = tuple(unit)
            nxt: dict = {}
            for w, c in cur.items():
                _acc(nxt, self.mul_weyl(w, unit), c)
            cur = nxt
        return cur

    # -- elements --------------------------------------------------------

    def zero(self) -> "TensorElement":
        return TensorElement(self, {})

    def one(self) -> "TensorElement":
        return self.scalar(1)

    def scalar(self, c) -> "TensorElement":
        return TensorElement(self, {((), (0,) * (2 * self.n)): Fraction(c)} if c else {})

    def gen(self, name) -> "TensorElement":
        """X (x) 1 for a generator of g."""
        g = self.structure.index(name) if isinstance(name, str) else name
        return TensorElement(self, {((g,), (0,) * (2 * self.n)): Fraction(1)})

    def combo(self, coeffs: dict) -> "TensorElement":
        """sum c_g g (x) 1."""
        z = (0,) * (2 * self.n)
        return TensorElement(self, {((g,), z): Fraction(c) for g, c in coeffs.items() if c})

    def weyl(self, letters, coef=1) -> "TensorElement":
        """1 (x) (product of letters), normal ordered."""
        return TensorElement(self, {((), w): c * coef for w, c in self.normal_w(letters).items()})

    def element(self, u_word=(), w_letters=(), coef=1) -> "TensorElement":
        """(u word) (x) (w letters), both normal ordered."""
        u = [self.structure.index(g) if isinstance(g, str) else g for g in u_word]
        terms: dict = {}
        for uw, cu in self.normal_u(u).items():
            for ww, cw in self.normal_w(w_letters).items():
                terms[(uw, ww)] = terms.get((uw, ww), 0) + Fraction(coef) * cu * cw
        return TensorElement(self, terms)

    def d(self, i: int) -> "TensorElement":
        return self.weyl([("d", i)])

    def x(self, i: int) -> "TensorElement":
        return self.weyl([("x", i)])

    def tensor(self, left: "TensorElement", right: "TensorElement") -> "TensorElement":
        """a (x) w for a in U(g) (x) 1 and w in 1 (x) W(g_1)."""
        terms: dict = {}
        for (u, w0), c in left.terms.items():
            if any(w0):
                raise ValueError("left factor must lie in U(g) (x) 1")
            for (u1, w), d in right.terms.items():
                if u1:
                    raise ValueError("right factor must lie in 1 (x) W(g_1)")
                terms[(u, w)] = terms.get((u, w), 0) + c * d
        return TensorElement(self, terms)

    def reorder(self, elem: "TensorElement") -> "TensorElement":
        """Rewrite an element of another engine (same structure) in this engine's PBW order."""
        if elem.engine.structure is not self.structure:
            raise ValueError("elements belong to different structures")
        terms: dict = {}
        for (u, w), c in elem.terms.items():
            for u2, cu in self.normal_u(u).items():
                _acc_key(terms, (u2, w), c * cu)
        return TensorElement(self, terms)


def _acc(out: dict, src: dict, c) -> None:
    if not c:
        return
    for k, v in src.items():
        nv = out.get(k, 0) + c * v
        if nv:
            out[k] = nv
        else:
            out.pop(k, None)


def _acc_key(out: dict, k, v) -> None:
    nv = out.get(k, 0) + v
    if nv:
        out[k] = nv
    else:
        out.pop(k, None)


class TensorElement:
    """Element of U(g) (x) W(g_1) held in normal form."""

    __slots__ = ("engine", "terms")

    def __init__(self, engine: Enveloping, terms: dict):
        self.engine = engine
        self.terms = {k: Fraction(v) for k, v in terms.items() if v}

    @property
    def n(self):
        return self.engine.n

    def _w_parity(self, w):
        return sum(w) & 1

    def parity(self):
        """0 or 1 if homogeneous, None for the zero element, raises if mixed."""
        ps = {(self.engine.u_parity(u) + self._w_parity(w)) & 1 for u, w in self.terms}
        if not ps:
            return None
        if len(ps) > 1:
            raise ValueError("element is not homogeneous")
        return ps.pop()

    def _check(self, other):
        if isinstance(other, TensorElement):
            if other.engine is not self.engine:
                raise ValueError("elements belong to different engines")
            return other
        return self.engine.scalar(other)

    def __add__(self, other):
        other = self._check(other)
        terms = dict(self.terms)
        for k, v in other.terms.items():
            _acc_key(terms, k, v)
        return TensorElement(self.engine, terms)

    __radd__ = __add__

    def __neg__(self):
        return TensorElement(self.engine, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._check(other))

    def __rsub__(self, other):
        return self._check(other) - self

    def __mul__(self, other):
        if not isinstance(other, TensorElement):
            c = Fraction(other)
            return TensorElement(self.engine, {k: v * c for k, v in self.terms.items()})
        other = self._check(other)
        eng = self.engine
        out: dict = {}
        for (u1, w1), c1 in self.terms.items():
            pw1 = sum(w1) & 1
            for (u2, w2), c2 in other.terms.items():
                sign = -1 if (eng.koszul and pw1 and eng.u_parity(u2)) else 1
                us = eng.mul_words(u1, u2)
                ws = eng.mul_weyl(w1, w2)
                c = sign * c1 * c2
                for u, cu in us.items():
                    for w, cw in ws.items():
                        _acc_key(out, (u, w), c * cu * cw)
        return TensorElement(self.engine, out)

    def __rmul__(self, other):
        return self * other

    def __pow__(self, k: int):
        out = self.engine.one()
        for _ in range(k):
            out = out * self
        return out

    def supercommutator(self, other):
        """[X, Y] = XY - (-1)^{|X||Y|} YX for homogeneous X, Y."""
        other = self._check(other)
        px, py = self.parity(), other.parity()
        if px is None or py is None:
            return self.engine.zero()
        sign = -1 if (px and py) else 1
        return self * other - other * self * sign

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.engine.scalar(other)
        if not isinstance(other, TensorElement):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def is_scalar(self):
        zero = (0,) * (2 * self.n)
        return all(u == () and w == zero for u, w in self.terms)

    def scalar_value(self):
        if not self.is_scalar():
            raise ValueError("element is not a scalar")
        return self.terms.get(((), (0,) * (2 * self.n)), Fraction(0))

    def u_degree(self):
        return max((len(u) for u, _ in self.terms), default=0)

    def leading(self):
        """The term with the longest words, ties broken by sort order; None if zero."""
        if not self.terms:
            return None
        return max(self.terms.items(), key=lambda kv: (len(kv[0][0]) + sum(kv[0][1]), self._format_key(kv[0])))

    def _format_u(self, u):
        names = self.engine.structure.names
        return "*".join(names[g] for g in u)

    def _format_w(self, w):
        n = self.n
        parts = []
        for i in range(n):
            if w[i]:
                parts.append(f"d{i + 1}" + (f"^{w[i]}" if w[i] > 1 else ""))
        for i in range(n):
            if w[n + i]:
                parts.append(f"x{i + 1}" + (f"^{w[n + i]}" if w[n + i] > 1 else ""))
        return "*".join(parts)

    def _format_key(self, key):
        return (self._format_u(key[0]), self._format_w(key[1]))

    def to_json(self):
        rows = [
            {"u_word": self._format_u(u), "w_word": self._format_w(w), "coef": str(c)}
            for (u, w), c in self.terms.items()
        ]
        rows.sort(key=lambda r: (r["u_word"], r["w_word"]))
        return rows

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for r in self.to_json():
            mono = " (x) ".join(x or "1" for x in (r["u_word"], r["w_word"]))
            parts.append(f"{r['coef']}*[{mono}]")
        return " + ".join(parts)


def normal_form(elem: TensorElement) -> TensorElement:
    """Elements are stored normalized; this returns a fresh normalized copy.

    Idempotent by construction; provided so call sites can state intent.
    """
    return TensorElement(elem.engine, dict(elem.terms))


def default_engine(n: int, koszul: bool = False) -> Enveloping:
    return _engines(n, koszul)


_ENGINES: dict = {}


def _engines(n, koszul):
    key = (n, koszul)
    eng = _ENGINES.get(key)
    if eng is None:
        eng = _ENGINES[key] = Enveloping(build_structure(n), koszul=koszul)
    return eng
