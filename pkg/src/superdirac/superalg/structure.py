"""Structure constants of osp(1|2n) from its supermatrix model in gl(1|2n).

Index 0 of C^{1|2n} is even; indices 1..2n carry the odd part
g_1 = span(d_1..d_n, x_1..x_n) with symplectic form w(d_i, x_j) = delta_ij.
An even generator is block-diag(0, A) with A in sp(2n) acting on (d, x) in
column convention; an odd generator X_u sends e_0 to u and f to s*w(u, f) e_0.
The invariant form is a multiple of the supertrace form, fixed by
B(d_i, x_j) = 1/2.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from ..errors import StructureError
from . import linalg

MAX_STRUCTURE_RANK = 3
ODD_SIGN = 1


def _sp_basis(n):
    """(name, 2n x 2n matrix) for the sp(2n) basis h, a, b, c."""
    out = []

    def unit(pairs):
        m = linalg.zeros(2 * n, 2 * n)
        for (r, c), v in pairs:
            m[r][c] += v
        return m

    for i in range(n):
        out.append((f"h{i + 1}", unit([((i, i), 1), ((n + i, n + i), -1)])))
    for i in range(n):
        for j in range(n):
            if i != j:
                out.append((f"a{i + 1}{j + 1}", unit([((i, j), 1), ((n + j, n + i), -1)])))
    for i in range(n):
        for j in range(i, n):
            out.append((f"b{i + 1}{j + 1}", unit([((i, n + j), 1), ((j, n + i), 1)])))
    for i in range(n):
        for j in range(i, n):
            out.append((f"c{i + 1}{j + 1}", unit([((n + i, j), 1), ((n + j, i), 1)])))
    return out


def _embed_even(a):
    size = len(a) + 1
    m = linalg.zeros(size, size)
    for r, row in enumerate(a):
        for c, v in enumerate(row):
            m[r + 1][c + 1] = v
    return m


def _omega(n, k, l):
    """w(basis_k, basis_l) with basis (d_1..d_n, x_1..x_n)."""
    if k < n and l == k + n:
        return 1
    if k >= n and l == k - n:
        return -1
    return 0


def _embed_odd(n, k, s):
    m = linalg.zeros(2 * n + 1, 2 * n + 1)
    m[1 + k][0] = Fraction(1)
    for l in range(2 * n):
        w = _omega(n, k, l)
        if w:
            m[0][1 + l] = Fraction(s * w)
    return m


def _supertrace(m):
    return m[0][0] - sum(m[i][i] for i in range(1, len(m)))


@dataclass(frozen=True)
class SuperAlgebraStructure:
    """Basis, brackets and invariant form of osp(1|2n).

    Generators are indexed 0..dim-1: the even basis of sp(2n) first, then
    d_1..d_n, x_1..x_n.  ``brackets[(i, j)]`` is ``{k: Fraction}``.
    """

    rank: int
    names: tuple
    parity: tuple
    matrices: tuple = field(repr=False)
    brackets: dict = field(repr=False)
    bform: tuple = field(repr=False)
    dual: tuple = field(repr=False)
    even_dual: tuple = field(repr=False)
    odd_sign: int = ODD_SIGN

    @property
    def dim(self):
        return len(self.names)

    @property
    def even_indices(self):
        return [i for i, p in enumerate(self.parity) if p == 0]

    @property
    def odd_indices(self):
        return [i for i, p in enumerate(self.parity) if p == 1]

    @property
    def even_basis(self):
        return [self.names[i] for i in self.even_indices]

    @property
    def odd_basis(self):
        return [self.names[i] for i in self.odd_indices]

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise KeyError(f"no generator named {name!r}") from None

    def d(self, i: int) -> int:
        """Index of d_i (1-based i)."""
        return self.index(f"d{i}")

    def x(self, i: int) -> int:
        return self.index(f"x{i}")

    def bracket(self, i: int, j: int) -> dict:
        return self.brackets[(i, j)]

    def B(self, i: int, j: int) -> Fraction:
        return self.bform[i][j]

    def nu(self, i: int):
        """Matrix of ad_X on g_1 in the basis (d, x), column convention."""
        if self.parity[i]:
            raise ValueError(f"{self.names[i]} is odd")
        odd = self.odd_indices
        m = linalg.zeros(len(odd), len(odd))
        for c, j in enumerate(odd):
            for k, v in self.brackets[(i, j)].items():
                m[odd.index(k)][c] = v
        return m

    def to_json(self):
        return {
            "n": self.rank,
            "names": list(self.names),
            "parity": list(self.parity),
            "brackets": [
                {"a": self.names[i], "b": self.names[j], "result": {self.names[k]: str(v) for k, v in sorted(r.items())}}
                for (i, j), r in sorted(self.brackets.items())
                if r
            ],
        }


def _coordinates(n, m):
    """Coordinates of a supermatrix in the generator basis, read off distinguishing entries."""
    coords = []
    for i in range(n):
        coords.append(m[1 + i][1 + i])
    for i in range(n):
        for j in range(n):
            if i != j:
                coords.append(m[1 + i][1 + j])
    for i in range(n):
        for j in range(i, n):
            coords.append(m[1 + i][1 + n + j] / (2 if i == j else 1))
    for i in range(n):
        for j in range(i, n):
            coords.append(m[1 + n + i][1 + j] / (2 if i == j else 1))
    for k in range(2 * n):
        coords.append(m[1 + k][0])
    return coords


def _super_bracket(a, pa, b, pb):
    ab = linalg.matmul(a, b)
    ba = linalg.matmul(b, a)
    sign = -1 if (pa and pb) else 1
    return linalg.add(ab, ba, -sign)


def _dual_basis(gram, indices):
    """f_k with B(e_j, f_k) = delta_jk, within span(indices); returned as coefficient dicts."""
    size = len(indices)
    mat = [[gram[j][k] for k in indices] for j in indices]
    out = []
    for k in range(size):
        rhs = [Fraction(int(j == k)) for j in range(size)]
        sol = linalg.solve(mat, rhs)
        if sol is None:
            raise StructureError("invariant form is degenerate", indices[k])
        out.append({indices[c]: v for c, v in enumerate(sol) if v})
    return tuple(out)


@lru_cache(maxsize=None)
def build_structure(n: int, odd_sign: int = ODD_SIGN, verify: bool = True) -> SuperAlgebraStructure:
    """osp(1|2n) with Jacobi and invariance verified on every basis triple."""
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"rank must be a positive integer, got {n!r}")
    if n > MAX_STRUCTURE_RANK:
        raise ValueError(f"symbolic structure supports n <= {MAX_STRUCTURE_RANK}, got {n}")
    if odd_sign not in (1, -1):
        raise ValueError("odd_sign must be +1 or -1")
    names, parity, mats = [], [], []
    for name, a in _sp_basis(n):
        names.append(name)
        parity.append(0)
        mats.append(_embed_even(a))
    for k in range(2 * n):
        names.append(f"d{k + 1}" if k < n else f"x{k - n + 1}")
        parity.append(1)
        mats.append(_embed_odd(n, k, odd_sign))
    dim = len(names)

    brackets = {}
    for i, j in itertools.product(range(dim), repeat=2):
        m = _super_bracket(mats[i], parity[i], mats[j], parity[j])
        coords = _coordinates(n, m)
        recon = linalg.zeros(2 * n + 1, 2 * n + 1)
        for c, v in enumerate(coords):
            if v:
                recon = linalg.add(recon, mats[c], v)
        if recon != m:
            raise StructureError("bracket leaves the algebra", (names[i], names[j]))
        brackets[(i, j)] = {k: v for k, v in enumerate(coords) if v}

    raw = [[_supertrace(linalg.matmul(mats[i], mats[j])) for j in range(dim)] for i in range(dim)]
    d1, x1 = names.index("d1"), names.index("x1")
    if raw[d1][x1] == 0:
        raise StructureError("supertrace form vanishes on (d1, x1)", ("d1", "x1"))
    kappa = Fraction(1, 2) / raw[d1][x1]
    gram = tuple(tuple(kappa * v for v in row) for row in raw)

    even = [i for i in range(dim) if parity[i] == 0]
    dual = _dual_basis(gram, list(range(dim)))
    even_dual = _dual_basis(gram, even)
    s = SuperAlgebraStructure(n, tuple(names), tuple(parity), tuple(mats), brackets, gram, dual, even_dual, odd_sign)
    if verify:
        verify_structure(s)
    return s


def _combo_bracket(s, combo, j):
    out = {}
    for i, c in combo.items():
        for k, v in s.brackets[(i, j)].items():
            out[k] = out.get(k, 0) + c * v
    return {k: v for k, v in out.items() if v}


def _bracket_combo(s, i, combo):
    out = {}
    for j, c in combo.items():
        for k, v in s.brackets[(i, j)].items():
            out[k] = out.get(k, 0) + c * v
    return {k: v for k, v in out.items() if v}


def verify_structure(s: SuperAlgebraStructure) -> None:
    """Super Jacobi, B-invariance, B(d_i, x_j) = delta_ij / 2 and g_0 orthogonal to g_1."""
    n, dim, p = s.rank, s.dim, s.parity
    for a, b, c in itertools.product(range(dim), repeat=3):
        # [a,[b,c]] = [[a,b],c] + (-1)^{|a||b|} [b,[a,c]]
        lhs = _bracket_combo(s, a, s.brackets[(b, c)])
        r1 = _combo_bracket(s, s.brackets[(a, b)], c)
        r2 = _bracket_combo(s, b, s.brackets[(a, c)])
        sign = -1 if (p[a] and p[b]) else 1
        keys = set(lhs) | set(r1) | set(r2)
        if any(lhs.get(k, 0) != r1.get(k, 0) + sign * r2.get(k, 0) for k in keys):
            raise StructureError("super Jacobi identity fails", (s.names[a], s.names[b], s.names[c]))
        left = sum((v * s.bform[k][c] for k, v in s.brackets[(a, b)].items()), Fraction(0))
        right = sum((v * s.bform[a][k] for k, v in s.brackets[(b, c)].items()), Fraction(0))
        if left != right:
            raise StructureError("invariant form is not invariant", (s.names[a], s.names[b], s.names[c]))
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if s.B(s.d(i), s.x(j)) != Fraction(int(i == j), 2):
                raise StructureError("odd pairing is not delta/2", (f"d{i}", f"x{j}"))
    for a in s.even_indices:
        for b in s.odd_indices:
            if s.bform[a][b] or s.bform[b][a]:
                raise StructureError("even and odd parts are not orthogonal", (s.names[a], s.names[b]))
