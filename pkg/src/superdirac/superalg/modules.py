"""Explicit osp(1|2)-modules and their Dirac cohomology against the Weil module."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from ..errors import OrderTooSmallError, StructureError
from ..charring import TruncatedSeries
from ..oscillator import transfer_factor
from ..rootdata import Weight
from ..weylchar import character_osp
from . import linalg
from .dirac import casimir, dirac_operator, even_casimir_delta, evaluate_polynomial, hc_image, kostant_constant
from .enveloping import TensorElement, default_engine
from .structure import build_structure


@dataclass(frozen=True)
class ExplicitModule:
    """Finite-dimensional osp(1|2)-module; ``action[name]`` is a d x d matrix."""

    highest_weight: Weight
    weight_basis: tuple
    parities: tuple
    action: dict = field(repr=False)

    @property
    def dimension(self) -> int:
        return len(self.weight_basis)

    @property
    def m(self) -> int:
        return self.highest_weight[0] // 2

    def matrix(self, gen) -> list:
        s = build_structure(1)
        name = s.names[gen] if isinstance(gen, int) else gen
        return self.action[name]

    def word_matrix(self, word) -> list:
        """pi(g_1 g_2 ... g_k) = pi(g_1) pi(g_2) ... pi(g_k)."""
        out = linalg.identity(self.dimension)
        for g in word:
            out = linalg.matmul(out, self.matrix(g))
        return out

    def bracket_residuals(self) -> dict:
        """pi([X,Y]) - (pi(X)pi(Y) - (-1)^{|X||Y|} pi(Y)pi(X)) for every nonzero residual."""
        s = build_structure(1)
        out = {}
        for i in range(s.dim):
            for j in range(s.dim):
                a, b = self.matrix(i), self.matrix(j)
                sign = -1 if (s.parity[i] and s.parity[j]) else 1
                lhs = linalg.add(linalg.matmul(a, b), linalg.matmul(b, a), -sign)
                rhs = linalg.zeros(self.dimension, self.dimension)
                for k, c in s.bracket(i, j).items():
                    rhs = linalg.add(rhs, self.matrix(k), c)
                if lhs != rhs:
                    out[(s.names[i], s.names[j])] = linalg.add(rhs, lhs, -1)
        return out

    def to_json(self):
        return {
            "highest_weight": self.highest_weight.to_json(),
            "dimension": self.dimension,
            "weights": [w.to_json() for w in self.weight_basis],
            "parities": list(self.parities),
            "action": {k: [[str(x) for x in row] for row in v] for k, v in sorted(self.action.items())},
        }


def build_module(m: int) -> ExplicitModule:
    """The graded irreducible osp(1|2)-module of highest weight m e_1.

    Basis v_k = x^k v_0 (k = 0..2m) of weight m - k and parity k mod 2.  The
    entries of d are solved from the relation for [d, x]; the even generators
    act through brackets of odd ones.
    """
    if not isinstance(m, int) or m < 0:
        raise ValueError(f"highest weight coefficient must be a nonnegative integer, got {m!r}")
    s = build_structure(1)
    dim = 2 * m + 1
    h, d, x = s.index("h1"), s.index("d1"), s.index("x1")
    px = linalg.zeros(dim, dim)
    for k in range(dim - 1):
        px[k + 1][k] = Fraction(1)
    ph = linalg.zeros(dim, dim)
    for k in range(dim):
        ph[k][k] = Fraction(m - k)

    # unknowns c_1..c_{2m}: d v_k = c_k v_{k-1}; impose pi(d)pi(x) + pi(x)pi(d) = pi([d, x])
    target = linalg.zeros(dim, dim)
    for g, c in s.bracket(d, x).items():
        if g != h:
            raise StructureError("[d1, x1] is not a multiple of h1", s.names[g])
        target = linalg.add(target, ph, c)
    rows, rhs = [], []
    for k in range(dim):
        # (d x + x d) v_k = c_{k+1} v_k + c_k v_k
        row = [Fraction(0)] * (dim - 1)
        if k + 1 <= dim - 1:
            row[k] += 1
        if k >= 1:
            row[k - 1] += 1
        rows.append(row)
        rhs.append(target[k][k])
    if dim > 1:
        sol = linalg.solve(rows, rhs)
        if sol is None:
            raise StructureError("no solution for the odd lowering relations", m)
    else:
        sol = []
    pd = linalg.zeros(dim, dim)
    for k in range(1, dim):
        pd[k - 1][k] = sol[k - 1]

    action = {"h1": ph, "d1": pd, "x1": px}
    _even_from_odd(s, action)
    weights = tuple(Weight((2 * (m - k),)) for k in range(dim))
    mod = ExplicitModule(Weight((2 * m,)), weights, tuple(k % 2 for k in range(dim)), action)
    bad = mod.bracket_residuals()
    if bad:
        raise StructureError("module violates bracket relations", next(iter(bad)))
    return mod


def _even_from_odd(s, action):
    """Define pi on g_0 through pi([a, b]) = pi(a)pi(b) + pi(b)pi(a) for odd a, b."""
    odd = s.odd_indices
    pairs = [(a, b) for i, a in enumerate(odd) for b in odd[i:]]
    even = s.even_indices
    cols = [[s.bracket(a, b).get(e, Fraction(0)) for e in even] for a, b in pairs]
    mats = []
    for a, b in pairs:
        pa, pb = action[s.names[a]], action[s.names[b]]
        mats.append(linalg.add(linalg.matmul(pa, pb), linalg.matmul(pb, pa)))
    rows = [list(r) for r in zip(*cols)]  # even-coordinate x pair
    for t, e in enumerate(even):
        name = s.names[e]
        if name in action:
            continue
        rhs = [Fraction(int(r == t)) for r in range(len(even))]
        coeffs = linalg.solve(rows, rhs)
        if coeffs is None:
            raise StructureError("odd brackets do not span g_0", name)
        dim = len(mats[0])
        m = linalg.zeros(dim, dim)
        for c, mat in zip(coeffs, mats):
            if c:
                m = linalg.add(m, mat, c)
        action[name] = m


def casimir_scalar(module: ExplicitModule) -> Fraction:
    """Eigenvalue of Omega_g on the module, read off the highest weight vector."""
    om = casimir(default_engine(1))
    vec = _apply_u_only(om, module, [Fraction(int(k == 0)) for k in range(module.dimension)])
    for k, v in enumerate(vec):
        if k and v:
            raise StructureError("highest weight vector is not an eigenvector of Omega_g", k)
    return vec[0]


def _apply_u_only(elem: TensorElement, module: ExplicitModule, vec):
    out = [Fraction(0)] * module.dimension
    zero = (0,) * (2 * elem.n)
    for (u, w), c in elem.terms.items():
        if w != zero:
            raise ValueError("element has a Weyl-algebra factor")
        img = linalg.matvec(module.word_matrix(u), vec)
        out = [a + c * b for a, b in zip(out, img)]
    return out


# -- V (x) M ----------------------------------------------------------------


def act_on_tensor(elem: TensorElement, module: ExplicitModule, vec: dict) -> dict:
    """Apply elem to a vector of V (x) M given as {(k, a): coef} for v_k (x) x^a.

    The U(g) factor acts on V through the module matrices and a Weyl monomial
    d^p x^r acts on x^a by x^{a+r} followed by p derivatives.
    """
    if elem.n != 1:
        raise ValueError("explicit modules are rank 1")
    out: dict = {}
    cache = {}
    for (u, w), c in elem.terms.items():
        if u not in cache:
            cache[u] = module.word_matrix(u)
        mat = cache[u]
        p, r = w
        for (k, a), v in vec.items():
            b = a + r
            if p > b:
                continue
            fall = 1
            for t in range(p):
                fall *= b - t
            tgt_a = b - p
            for i in range(module.dimension):
                coef = mat[i][k]
                if coef:
                    key = (i, tgt_a)
                    nv = out.get(key, 0) + c * v * coef * fall
                    if nv:
                        out[key] = nv
                    else:
                        out.pop(key, None)
    return out


def level_basis(module: ExplicitModule, j: int):
    """Basis of the weight space m - 1/2 - j of V (x) M: v_k (x) x^{j-k}."""
    return [(k, j - k) for k in range(min(j, module.dimension - 1) + 1)]


def operator_matrix(elem: TensorElement, module: ExplicitModule, src, dst):
    idx = {b: i for i, b in enumerate(dst)}
    mat = linalg.zeros(len(dst), len(src))
    for col, b in enumerate(src):
        img = act_on_tensor(elem, module, {b: Fraction(1)})
        for key, v in img.items():
            if key not in idx:
                raise StructureError("operator leaves the weight space", key)
            mat[idx[key]][col] = v
    return mat


def _column_space(mat, ncols):
    cols = [[mat[r][c] for r in range(len(mat))] for c in range(ncols)]
    return [c for c in cols if any(c)]


@dataclass
class DiracCohomologyResult:
    module: ExplicitModule
    order: int
    hplus: dict
    hminus: dict
    euler: TruncatedSeries
    expected: TruncatedSeries
    omega_scalars: dict
    expected_scalar: Fraction

    @property
    def euler_ok(self) -> bool:
        return self.euler == self.expected

    @property
    def scalar_ok(self) -> bool:
        return all(v == self.expected_scalar for v in self.omega_scalars.values())

    @property
    def passed(self) -> bool:
        return self.euler_ok and self.scalar_ok

    def to_json(self):
        return {
            "identity": "dirac_cohomology",
            "n": 1,
            "highest_weight": self.module.highest_weight.to_json(),
            "order": self.order,
            "hplus": [{"2mu": list(w), "mult": m} for w, m in sorted(self.hplus.items(), reverse=True)],
            "hminus": [{"2mu": list(w), "mult": m} for w, m in sorted(self.hminus.items(), reverse=True)],
            "euler": self.euler.to_json(),
            "expected": self.expected.to_json(),
            "omega_scalar": str(self.expected_scalar),
            "residual_terms": [] if self.passed else ["euler" if not self.euler_ok else "omega"],
            "pass": self.passed,
        }


def reliable_levels(order: int) -> int:
    """Largest level j whose weight space lies entirely below the truncation, or -1."""
    return (order - 1) // 2


def dirac_cohomology(module: ExplicitModule, order: int) -> DiracCohomologyResult:
    """Kernel/image computation of D on each reliable weight space of V (x) M.

    A level j needs x^a for a <= j, i.e. q-degrees up to 2j + 1 <= order.
    H^+ collects the even-degree part of M, H^- the odd part.
    """
    top = reliable_levels(order)
    if top < 0:
        raise OrderTooSmallError(f"order {order} leaves no reliable weight; use order >= 1")
    eng = default_engine(1)
    D = dirac_operator(eng)
    omega0 = even_casimir_delta(eng)
    C = kostant_constant(eng).value
    expected_scalar = evaluate_polynomial(hc_image(casimir(eng)), Fraction(module.m) + Fraction(1, 2)) + C

    m2 = module.highest_weight[0]
    hplus, hminus, scalars = {}, {}, {}
    euler = {}
    for j in range(top + 1):
        basis = level_basis(module, j)
        even = [b for b in basis if b[1] % 2 == 0]
        odd = [b for b in basis if b[1] % 2 == 1]
        dp = operator_matrix(D, module, even, odd)
        dm = operator_matrix(D, module, odd, even)
        mu = Weight((m2 - 1 - 2 * j,))
        hp = _cohomology_dim(dp, dm, len(even), len(odd))
        hm = _cohomology_dim(dm, dp, len(odd), len(even))
        if hp:
            hplus[mu] = hp
        if hm:
            hminus[mu] = hm
        if hp != hm:
            euler[(2 * j + 1,)] = hp - hm
        # Omega_{g_0 Delta} on Ker D at this weight
        full = operator_matrix(D, module, basis, basis)
        ker = linalg.nullspace(full) if basis else []
        for v in ker:
            vec = {b: c for b, c in zip(basis, v) if c}
            img = act_on_tensor(omega0, module, vec)
            ratio = _scalar_multiple(vec, img)
            if ratio is None:
                raise StructureError("Omega_{g_0 Delta} does not preserve Ker D as a scalar", mu)
            scalars.setdefault(mu, ratio)
            if scalars[mu] != ratio:
                raise StructureError("Omega_{g_0 Delta} is not scalar on Ker D", mu)
    series_order = 2 * top + 1
    euler_series = TruncatedSeries(Weight((m2,)), series_order, euler)
    chv = TruncatedSeries.from_character(character_osp(module.highest_weight).character, series_order)
    expected = chv * transfer_factor(1, series_order)
    return DiracCohomologyResult(module, order, hplus, hminus, euler_series, expected, scalars, expected_scalar)


def _cohomology_dim(d_out, d_in, n_src, n_in):
    """dim ker(d_out) - dim(ker(d_out) cap im(d_in)) on a space of dimension n_src."""
    if n_src == 0:
        return 0
    ker = linalg.nullspace(d_out) if d_out else [[Fraction(int(i == j)) for j in range(n_src)] for i in range(n_src)]
    im = _column_space(d_in, n_in) if n_in else []
    if not ker:
        return 0
    r_ker, r_im = len(ker), linalg.rank(im) if im else 0
    r_sum = linalg.rank(ker + im) if im else r_ker
    return r_ker - (r_ker + r_im - r_sum)


def _scalar_multiple(vec: dict, img: dict):
    ratio = None
    for key in set(vec) | set(img):
        a, b = vec.get(key, 0), img.get(key, 0)
        if a == 0:
            if b:
                return None
            continue
        r = Fraction(b) / a
        if ratio is None:
            ratio = r
        elif r != ratio:
            return None
    return ratio if ratio is not None else Fraction(0)
