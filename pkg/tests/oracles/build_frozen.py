"""Independent oracles; writes tests/frozen/oracle_values.json.

Nothing here imports superdirac.  Run from the repository root:

    python3 tests/oracles/build_frozen.py
"""

from __future__ import annotations

import itertools
import json
from pathlib import Path

import sympy as sp

OUT = Path(__file__).resolve().parent.parent / "frozen" / "oracle_values.json"


# -- characters as rational functions in z_i = e^{e_i / 2} --------------------


def _mono(z, doubled):
    return sp.Mul(*[zi ** d for zi, d in zip(z, doubled)])


def _perm_sign(perm):
    inversions = sum(1 for i, j in itertools.combinations(range(len(perm)), 2) if perm[i] > perm[j])
    return -1 if inversions % 2 else 1


def _b_roots(n):
    out = []
    for i in range(n):
        v = [0] * n
        v[i] = 2
        out.append(v)
    for i, j in itertools.combinations(range(n), 2):
        for s in (1, -1):
            v = [0] * n
            v[i], v[j] = 2, 2 * s
            out.append(v)
    return out


def _c_roots(n):
    out = [[4 if k == i else 0 for k in range(n)] for i in range(n)]
    for i, j in itertools.combinations(range(n), 2):
        for s in (1, -1):
            v = [0] * n
            v[i], v[j] = 2, 2 * s
            out.append(v)
    return out


def _laurent_terms(expr, z):
    """{doubled exponent: coef} of a Laurent polynomial in z (z_i^k means weight k/... e_i)."""
    expr = sp.expand(expr)
    out = {}
    for term in sp.Add.make_args(expr):
        c, rest = term.as_coeff_Mul()
        powers = rest.as_powers_dict()
        key = tuple(int(powers.get(zi, 0)) for zi in z)
        out[key] = out.get(key, 0) + int(c)
    return {k: v for k, v in out.items() if v}


def character_oracle(hw2, kind):
    """Weight multiplicities in doubled coordinates.

    z_i stands for e^{e_i/2}, so a weight with doubled coordinates d has monomial z^d.
    """
    n = len(hw2)
    z = sp.symbols(f"z1:{n + 1}")
    # alternant exponents are doubled coordinates; use z^d directly
    def alt(lam2):
        total = 0
        for perm in itertools.permutations(range(n)):
            psign = _perm_sign(perm)
            for signs in itertools.product((1, -1), repeat=n):
                mu = [s * lam2[p] for s, p in zip(signs, perm)]
                total += psign * sp.prod(signs) * _mono(z, mu)
        return total

    def den(roots):
        return sp.Mul(*[_mono(z, [x // 2 for x in a]) - _mono(z, [-x // 2 for x in a]) for a in roots])

    if kind == "B":
        rho2 = [2 * (n - i) - 1 for i in range(n)]
        num = alt([h + r for h, r in zip(hw2, rho2)])
        q = sp.cancel(num / den(_b_roots(n)))
    else:
        rho2 = [2 * (n - i) - 1 for i in range(n)]  # rho_0 - rho_1 = rho_B
        d1 = sp.Mul(*[z[i] + 1 / z[i] for i in range(n)])
        num = alt([h + r for h, r in zip(hw2, rho2)]) * d1
        q = sp.cancel(num / den(_c_roots(n)))
    # the quotient is a Laurent polynomial; z^d with d the doubled weight
    num_q, den_q = sp.fraction(sp.together(q))
    den_terms = _laurent_terms(den_q, z)
    if len(den_terms) != 1:
        raise AssertionError("quotient is not a Laurent polynomial")
    (shift, c), = den_terms.items()
    terms = _laurent_terms(num_q, z)
    return {tuple(k - s for k, s in zip(key, shift)): v // c for key, v in terms.items()}


# -- Weil module -----------------------------------------------------------------


def weil_difference(n, order):
    out = {}
    for a in itertools.product(range(order + 1), repeat=n):
        key = tuple(2 * x + 1 for x in a)
        if sum(key) <= order:
            out[key] = (-1) ** sum(a)
    return out


# -- osp(1|2n) in gl(1|2n) and alpha as differential operators ------------------


def osp_data(n):
    """Even basis matrices (2n x 2n on (d, x)), the odd pairing and the normalised form."""
    size = 2 * n
    even = []
    E = lambda r, c: sp.Matrix(size, size, lambda i, j: 1 if (i, j) == (r, c) else 0)  # noqa: E731
    for i in range(n):
        for j in range(n):
            even.append(E(i, j) - E(n + j, n + i))
    for i in range(n):
        for j in range(i, n):
            even.append(E(i, n + j) + E(j, n + i))
            even.append(E(n + i, j) + E(n + j, i))
    # supertrace form on block-diag(0, A): str = -tr(A A'); rescale so that
    # B(d_1, x_1) = 1/2 where str(X_d X_x) = 2 for the odd generators of the model
    full = lambda a: sp.diag(0, a)  # noqa: E731
    def odd(k):
        m = sp.zeros(size + 1, size + 1)
        m[1 + k, 0] = 1
        partner = k + n if k < n else k - n
        m[0, 1 + partner] = 1 if k < n else -1
        return m
    st = lambda m: m[0, 0] - sum(m[i, i] for i in range(1, m.rows))  # noqa: E731
    kappa = sp.Rational(1, 2) / st(odd(0) * odd(n))
    gram = sp.Matrix(len(even), len(even), lambda i, j: kappa * st(full(even[i]) * full(even[j])))
    return even, gram, kappa


def alpha_operator(a, n, xs):
    """alpha(A) as a function on sympy polynomials in xs."""
    A = a[:n, :n]
    Bm = a[:n, n:]
    Cm = a[n:, :n]

    def op(f):
        out = 0
        for i in range(n):
            for j in range(n):
                if A[i, j]:
                    # sigma(d_i x_j) f = d_i(x_j f) - delta_ij f / 2
                    out -= A[i, j] * (sp.diff(xs[j] * f, xs[i]) - sp.Rational(int(i == j), 2) * f)
                if Bm[i, j]:
                    out += sp.Rational(1, 2) * Bm[i, j] * sp.diff(f, xs[i], xs[j])
                if Cm[i, j]:
                    out -= sp.Rational(1, 2) * Cm[i, j] * xs[i] * xs[j] * f
        return sp.expand(out)

    return op


def kostant_oracle(n):
    xs = sp.symbols(f"x1:{n + 1}")
    even, gram, _ = osp_data(n)
    inv = gram.inv()
    ops = [alpha_operator(a, n, xs) for a in even]
    # C f = sum_{k,l} (G^{-1})_{lk} alpha(e_l) alpha(e_k) f, with f_k = sum_l (G^{-1})_{lk} e_l
    tests = [sp.Integer(1), xs[0], xs[-1] ** 2 + xs[0]]
    values = set()
    for f in tests:
        total = 0
        for k in range(len(even)):
            g = ops[k](f)
            for l in range(len(even)):
                if inv[l, k]:
                    total += inv[l, k] * ops[l](g)
        ratio = sp.simplify(sp.expand(total) / f)
        values.add(ratio)
    assert len(values) == 1, values
    c = values.pop()
    # trace of Omega_{g_0} on g_1 = sum (G^{-1})_{lk} tr(e_l e_k)
    tr = sum(inv[l, k] * (even[l] * even[k]).trace() for k in range(len(even)) for l in range(len(even)))
    return str(c), str(tr)


# -- osp(1|2)-modules and Dirac cohomology ---------------------------------------


def module_d_entries(m):
    """d v_k = c_k v_{k-1}: c_k = -(m - (k-1)/2) for odd k, k/2 for even k (hand-derived)."""
    return [(-(m - (k - 1) // 2) if k % 2 else k // 2) for k in range(1, 2 * m + 1)]


def dirac_cohomology_oracle(m, levels):
    """Multiplicities of H_D^+ and H_D^- per level j, D = 2(d (x) x - x (x) d) on V (x) C[x]."""
    dim = 2 * m + 1
    c = module_d_entries(m)
    out = []
    for j in range(levels + 1):
        basis = [(k, j - k) for k in range(min(j, dim - 1) + 1)]
        idx = {b: i for i, b in enumerate(basis)}
        D = sp.zeros(len(basis), len(basis))
        for col, (k, a) in enumerate(basis):
            # d (x) x: v_k -> c_k v_{k-1}, x^a -> x^{a+1}
            if k >= 1 and (k - 1, a + 1) in idx:
                D[idx[(k - 1, a + 1)], col] += 2 * c[k - 1]
            # x (x) d: v_k -> v_{k+1}, x^a -> a x^{a-1}
            if k + 1 < dim and a >= 1 and (k + 1, a - 1) in idx:
                D[idx[(k + 1, a - 1)], col] -= 2 * a
        even = [i for i, b in enumerate(basis) if b[1] % 2 == 0]
        odd = [i for i, b in enumerate(basis) if b[1] % 2 == 1]

        def h(src, dst):
            if not src:
                return 0
            Dout = D.extract(dst, src) if dst else sp.zeros(0, len(src))
            Din = D.extract(src, dst) if dst else sp.zeros(len(src), 0)
            ker = Dout.nullspace() if dst else [sp.eye(len(src))[:, i] for i in range(len(src))]
            if not ker:
                return 0
            K = sp.Matrix.hstack(*ker)
            r_im = Din.rank() if dst else 0
            r_sum = sp.Matrix.hstack(K, Din).rank() if dst else K.rank()
            return len(ker) - (len(ker) + r_im - r_sum)

        out.append([h(even, odd), h(odd, even)])
    return out


def main():
    data = {}
    chars = {}
    for kind in ("B", "osp"):
        for hw in ([2], [4], [2, 0], [2, 2], [4, 2], [2, 0, 0], [2, 2, 2]):
            terms = character_oracle(hw, kind)
            chars[f"{kind}:{','.join(map(str, hw))}"] = sorted([list(k), v] for k, v in terms.items())
    data["characters"] = chars
    data["weil_difference"] = {
        f"{n}:{order}": sorted([list(k), v] for k, v in weil_difference(n, order).items())
        for n, order in ((1, 8), (2, 6), (3, 9))
    }
    data["kostant"] = {str(n): dict(zip(("C", "trace"), kostant_oracle(n))) for n in (1, 2)}
    data["module_d"] = {str(m): module_d_entries(m) for m in range(5)}
    data["dirac_cohomology"] = {str(m): dirac_cohomology_oracle(m, 8) for m in range(5)}
    OUT.parent.mkdir(exist_ok=True)
    OUT.write_text(json.dumps(data, indent=1, sort_keys=True) + "\n")
    print(f"wrote {OUT}")


if __name__ == "__main__":
    main()
