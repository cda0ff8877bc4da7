"""The map alpha, Casimir elements, Kostant's constant and the symplectic Dirac operator."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from ..errors import StructureError
from . import linalg
from .enveloping import Enveloping, TensorElement, default_engine
from .structure import SuperAlgebraStructure


def _engine(n_or_engine, koszul=False) -> Enveloping:
    if isinstance(n_or_engine, Enveloping):
        return n_or_engine
    return default_engine(n_or_engine, koszul)


def sp_blocks(m):
    """Split a 2n x 2n matrix [[A, B], [C, -A^t]] into (A, B, C), checking the shape."""
    n = len(m) // 2
    a = [row[:n] for row in m[:n]]
    b = [row[n:] for row in m[:n]]
    c = [row[:n] for row in m[n:]]
    d = [row[n:] for row in m[n:]]
    for i in range(n):
        for j in range(n):
            if d[i][j] != -a[j][i] or b[i][j] != b[j][i] or c[i][j] != c[j][i]:
                raise StructureError("matrix is not in sp(2n)", (i, j))
    return a, b, c


def weyl_from_matrix(eng: Enveloping, m) -> TensorElement:
    """The element of sigma(S^2 g_1) that acts on g_1 = span(d, x) by m.

    sigma(d_i x_j) <-> -E_ij + E_{n+j,n+i}, sigma(d_i d_j) <-> E_{i,n+j} + E_{j,n+i},
    sigma(x_i x_j) <-> -E_{n+i,j} - E_{n+j,i}.
    """
    a, b, c = sp_blocks(m)
    n = len(a)
    out = eng.zero()
    for i in range(n):
        for j in range(n):
            if a[i][j]:
                sym = eng.weyl([("d", i + 1), ("x", j + 1)]) - Fraction(int(i == j), 2)
                out = out - sym * a[i][j]
            if b[i][j]:
                out = out + eng.weyl([("d", i + 1), ("d", j + 1)]) * (b[i][j] / 2)
            if c[i][j]:
                out = out - eng.weyl([("x", i + 1), ("x", j + 1)]) * (c[i][j] / 2)
    return out


def matrix_from_weyl(eng: Enveloping, w: TensorElement):
    """Commutator action of a quadratic Weyl element on span(d, x), column convention."""
    n = eng.n
    basis = [eng.d(i + 1) for i in range(n)] + [eng.x(i + 1) for i in range(n)]
    keys = [next(iter(v.terms)) for v in basis]
    m = linalg.zeros(2 * n, 2 * n)
    for col, v in enumerate(basis):
        img = w * v - v * w
        for k, c in img.terms.items():
            if k not in keys:
                raise StructureError("element does not preserve g_1", eng.structure.names and k)
            m[keys.index(k)][col] = c
    return m


def alpha(X, n_or_engine=1) -> TensorElement:
    """alpha(X) in 1 (x) W(g_1) for an even generator X (name or index)."""
    eng = _engine(n_or_engine)
    s = eng.structure
    i = s.index(X) if isinstance(X, str) else X
    if s.parity[i]:
        raise ValueError(f"{s.names[i]} is not in g_0")
    return weyl_from_matrix(eng, s.nu(i))


def alpha_combo(eng: Enveloping, combo: dict) -> TensorElement:
    out = eng.zero()
    for g, c in combo.items():
        out = out + alpha(g, eng) * c
    return out


def delta(eng: Enveloping, combo: dict) -> TensorElement:
    """X (x) 1 + 1 (x) alpha(X) for X = sum c_g g in g_0."""
    return eng.combo(combo) + alpha_combo(eng, combo)


def _dual_pairs(s: SuperAlgebraStructure, indices, duals, dual_basis=None):
    """(e_k, f_k) as coefficient dicts with B(e_j, f_k) = delta_jk."""
    if dual_basis is not None:
        return dual_basis
    return [({e: Fraction(1)}, f) for e, f in zip(indices, duals)]


def casimir(n_or_engine=1, pairs=None, check: bool = True) -> TensorElement:
    """Omega_g = sum_k f_k e_k over a basis e_k of g and its B-dual basis f_k."""
    eng = _engine(n_or_engine)
    s = eng.structure
    pairs = _dual_pairs(s, list(range(s.dim)), s.dual, pairs)
    out = eng.zero()
    for e, f in pairs:
        out = out + eng.combo(f) * eng.combo(e)
    if check:
        for g in range(s.dim):
            r = out.supercommutator(eng.gen(g))
            if r:
                raise StructureError("Casimir element is not central", (s.names[g], r.leading()))
    return out


def even_casimir_delta(n_or_engine=1, pairs=None) -> TensorElement:
    """Omega_{g_0 Delta} = sum_k Delta(f_k) Delta(e_k) over a basis of g_0."""
    eng = _engine(n_or_engine)
    s = eng.structure
    pairs = _dual_pairs(s, s.even_indices, s.even_dual, pairs)
    out = eng.zero()
    for e, f in pairs:
        out = out + delta(eng, f) * delta(eng, e)
    return out


def kostant_constant_sum(n_or_engine=1) -> TensorElement:
    """sum_k alpha(f_k) alpha(e_k) in normal form (a scalar, by Kostant)."""
    eng = _engine(n_or_engine)
    s = eng.structure
    out = eng.zero()
    for e, f in zip(s.even_indices, s.even_dual):
        out = out + alpha_combo(eng, f) * alpha(e, eng)
    return out


def even_casimir_on_odd(s: SuperAlgebraStructure):
    """Matrix of Omega_{g_0} = sum_k f_k e_k acting on g_1."""
    size = len(s.odd_indices)
    total = linalg.zeros(size, size)
    for e, f in zip(s.even_indices, s.even_dual):
        nf = linalg.zeros(size, size)
        for g, c in f.items():
            nf = linalg.add(nf, s.nu(g), c)
        total = linalg.add(total, linalg.matmul(nf, s.nu(e)))
    return total


@dataclass(frozen=True)
class KostantResult:
    n: int
    value: Fraction
    trace: Fraction
    trace_formula: Fraction

    @property
    def agrees(self) -> bool:
        """C equals 1/8 of the ordinary trace of Omega_{g_0} on g_1."""
        return self.value == self.trace_formula

    @property
    def supertrace_formula(self) -> Fraction:
        """1/8 of the supertrace; g_1 is purely odd, so this is -trace/8."""
        return -self.trace_formula

    @property
    def agrees_supertrace(self) -> bool:
        return self.value == self.supertrace_formula

    def to_json(self):
        return {
            "identity": "kostant_constant",
            "n": self.n,
            "value": str(self.value),
            "trace_on_g1": str(self.trace),
            "eighth_of_trace": str(self.trace_formula),
            "eighth_of_supertrace": str(self.supertrace_formula),
            "residual_terms": [] if self.agrees else [{"coef": str(self.value - self.trace_formula)}],
            "pass": self.agrees,
        }


def kostant_constant(n_or_engine=1) -> KostantResult:
    eng = _engine(n_or_engine)
    total = kostant_constant_sum(eng)
    if not total.is_scalar():
        raise StructureError("sum of alpha squares is not a scalar", total.leading())
    m = even_casimir_on_odd(eng.structure)
    tr = sum((m[i][i] for i in range(len(m))), Fraction(0))
    return KostantResult(eng.n, total.scalar_value(), tr, tr / 8)


def dirac_operator(n_or_engine=1, pairs=None) -> TensorElement:
    """D = sum_j e_j (x) f_j over a basis e_j of g_1 and its B-dual basis f_j.

    With the default basis this is 2 sum_i (d_i (x) x_i - x_i (x) d_i).
    ``pairs`` may supply other (e_j, f_j) as coefficient dicts over the odd generators.
    """
    eng = _engine(n_or_engine)
    s = eng.structure
    pairs = _dual_pairs(s, s.odd_indices, [s.dual[i] for i in s.odd_indices], pairs)
    out = eng.zero()
    for e, f in pairs:
        out = out + eng.tensor(eng.combo(e), _odd_to_weyl(eng, f))
    return out


def _odd_to_weyl(eng: Enveloping, combo: dict) -> TensorElement:
    s = eng.structure
    out = eng.zero()
    for g, c in combo.items():
        name = s.names[g]
        out = out + eng.weyl([(name[0], int(name[1:]))]) * c
    return out


@dataclass
class DiracSquareCertificate:
    n: int
    residual: TensorElement
    invariance_residuals: dict
    centrality_ok: bool
    constant: Fraction

    @property
    def passed(self) -> bool:
        return not self.residual and not any(self.invariance_residuals.values()) and self.centrality_ok

    def to_json(self):
        terms = self.residual.to_json()
        for name, r in self.invariance_residuals.items():
            for row in r.to_json():
                terms.append(dict(row, context=f"[Delta({name}), D]"))
        return {
            "identity": "dirac_square",
            "n": self.n,
            "constant": str(self.constant),
            "residual_terms": terms,
            "pass": self.passed,
        }


def dirac_square_residual(n_or_engine=1) -> TensorElement:
    """D^2 + Omega_g (x) 1 - Omega_{g_0 Delta} + C."""
    eng = _engine(n_or_engine)
    D = dirac_operator(eng)
    C = kostant_constant_sum(eng)
    return D * D + casimir(eng, check=False) - even_casimir_delta(eng) + C


def verify_dirac_square(n_or_engine=1) -> DiracSquareCertificate:
    eng = _engine(n_or_engine)
    s = eng.structure
    D = dirac_operator(eng)
    C = kostant_constant_sum(eng)
    if not C.is_scalar():
        raise StructureError("sum of alpha squares is not a scalar", C.leading())
    omega = casimir(eng, check=False)
    residual = D * D + omega - even_casimir_delta(eng) + C
    inv = {}
    for g in s.even_indices:
        inv[s.names[g]] = delta(eng, {g: 1}).supercommutator(D)
    central = all(not omega.supercommutator(eng.gen(g)) for g in range(s.dim))
    return DiracSquareCertificate(eng.n, residual, inv, central, C.scalar_value())


def rescaled_pairs(s: SuperAlgebraStructure, indices, seed: int = 0):
    """A second basis of span(indices) (a triangular change of basis) with its B-dual.

    Used to check that Casimir elements and D do not depend on the basis.
    """
    k = len(indices)
    # upper triangular with diagonal 1, 2, 3, ... and small off-diagonal entries
    change = [[Fraction(0)] * k for _ in range(k)]
    for i in range(k):
        change[i][i] = Fraction(i + 1 + seed)
        for j in range(i + 1, k):
            change[i][j] = Fraction((i + 2 * j + seed) % 3 - 1)
    new = [{indices[j]: change[i][j] for j in range(k) if change[i][j]} for i in range(k)]
    gram = [[sum(a * b * s.bform[p][q] for p, a in ei.items() for q, b in ej.items()) for ej in new] for ei in new]
    duals = []
    for col in range(k):
        rhs = [Fraction(int(r == col)) for r in range(k)]
        sol = linalg.solve(gram, rhs)
        # f = sum sol_r e'_r satisfies B(e'_j, f) = delta_j,col
        f: dict = {}
        for r, v in enumerate(sol):
            for g, c in new[r].items():
                f[g] = f.get(g, 0) + v * c
        duals.append({g: c for g, c in f.items() if c})
    return list(zip(new, duals))


# -- Harish-Chandra image (n = 1) -------------------------------------------


def _hc_engine(s: SuperAlgebraStructure, ordering: str) -> Enveloping:
    """n^- then h then n^+ ("lowering-first") or the reverse ("raising-first")."""
    low = [s.index("c11"), s.index("x1")]
    high = [s.index("d1"), s.index("b11")]
    h = [s.index("h1")]
    if ordering == "lowering-first":
        order = low + h + high
    elif ordering == "raising-first":
        order = high[::-1] + h + low[::-1]
    else:
        raise ValueError("ordering must be 'lowering-first' or 'raising-first'")
    return Enveloping(s, order)


def hc_image(z: TensorElement, ordering: str = "lowering-first") -> dict:
    """gamma(z) as {power: coefficient} of a polynomial in lambda = lambda(h_1), n = 1.

    z is rewritten in a PBW basis ordered n^- h n^+ (or the reverse), the part
    lying in U(h_0) is kept, and the rho-shift P(lambda) -> P(lambda - rho) is
    applied (rho = 1/2 in the coordinate of e_1).  With the default ordering
    a central z satisfies z v = P(Lambda) v on a highest weight vector.
    """
    s = z.engine.structure
    if s.rank != 1:
        raise ValueError("hc_image is implemented for n = 1")
    zero_w = (0, 0)
    for g in range(s.dim):
        if z.supercommutator(z.engine.gen(g)):
            raise StructureError("element is not central", s.names[g])
    eng = _hc_engine(s, ordering)
    y = eng.reorder(z)
    h = s.index("h1")
    poly: dict = {}
    for (u, w), c in y.terms.items():
        if w != zero_w:
            raise ValueError("element does not lie in U(g) (x) 1")
        if all(g == h for g in u):
            poly[len(u)] = poly.get(len(u), 0) + c
    rho = Fraction(1, 2)
    shifted: dict = {}
    # P(lambda - rho) = sum_k c_k (lambda - rho)^k
    from math import comb

    for k, c in poly.items():
        for j in range(k + 1):
            shifted[j] = shifted.get(j, 0) + c * comb(k, j) * (-rho) ** (k - j)
    return {k: v for k, v in sorted(shifted.items()) if v}


def evaluate_polynomial(poly: dict, value) -> Fraction:
    return sum((Fraction(c) * Fraction(value) ** k for k, c in poly.items()), Fraction(0))
