from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from superdirac.errors import StructureError
from superdirac.superalg import (
    Enveloping,
    alpha,
    build_structure,
    casimir,
    default_engine,
    dirac_operator,
    dirac_square_residual,
    even_casimir_delta,
    hc_image,
    kostant_constant,
    matrix_from_weyl,
    normal_form,
    verify_dirac_square,
    verify_structure,
    weyl_from_matrix,
)
from superdirac.superalg.dirac import rescaled_pairs, sp_blocks


def test_rank_one_brackets():
    s = build_structure(1)
    i = s.index

    def br(a, b):
        return {s.names[k]: c for k, c in s.bracket(i(a), i(b)).items()}

    assert br("h1", "b11") == {"b11": 2}
    assert br("h1", "c11") == {"c11": -2}
    assert br("b11", "c11") == {"h1": 4}
    assert br("b11", "x1") == {"d1": 2}
    assert br("c11", "d1") == {"x1": 2}
    assert br("d1", "d1") == {"b11": 1}
    assert br("d1", "x1") == {"h1": -1}
    assert br("x1", "x1") == {"c11": -1}


@pytest.mark.parametrize("n", [1, 2, 3])
def test_structure_axioms(n):
    s = build_structure(n)
    verify_structure(s)
    assert s.dim == 2 * n * n + n + 2 * n
    for a in range(1, n + 1):
        for b in range(1, n + 1):
            assert s.B(s.d(a), s.x(b)) == Fraction(int(a == b), 2)
            assert s.B(s.d(a), s.d(b)) == 0


def test_other_odd_sign_is_consistent():
    verify_structure(build_structure(1, odd_sign=-1))


def test_structure_json():
    data = build_structure(1).to_json()
    assert data["names"] == ["h1", "b11", "c11", "d1", "x1"]
    assert data["parity"] == [0, 0, 0, 1, 1]


# -- alpha and the sp-block table ------------------------------------------


def test_alpha_rank_one():
    eng = default_engine(1)
    assert alpha("h1", eng) == eng.scalar(Fraction(1, 2)) - eng.weyl([("d", 1), ("x", 1)])
    assert alpha("b11", eng) == eng.weyl([("d", 1), ("d", 1)])
    assert alpha("c11", eng) == -eng.weyl([("x", 1), ("x", 1)])


def test_alpha_rejects_odd():
    with pytest.raises(ValueError):
        alpha("d1", 1)


@pytest.mark.parametrize("n", [1, 2])
def test_alpha_is_homomorphism(n):
    eng = default_engine(n)
    s = eng.structure
    for a in s.even_indices:
        for b in s.even_indices:
            lhs = alpha(a, eng).supercommutator(alpha(b, eng))
            rhs = eng.zero()
            for k, c in s.bracket(a, b).items():
                rhs = rhs + alpha(k, eng) * c
            assert lhs == rhs, (s.names[a], s.names[b])


def sp_matrices(n):
    entry = st.integers(-3, 3)
    block = st.lists(st.lists(entry, min_size=n, max_size=n), min_size=n, max_size=n)

    def build(t):
        a, b, c = t
        b = [[b[i][j] + b[j][i] for j in range(n)] for i in range(n)]
        c = [[c[i][j] + c[j][i] for j in range(n)] for i in range(n)]
        top = [a[i] + b[i] for i in range(n)]
        bottom = [c[i] + [-a[j][i] for j in range(n)] for i in range(n)]
        return [[Fraction(x) for x in row] for row in top + bottom]

    return st.tuples(block, block, block).map(build)


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 2).flatmap(lambda n: sp_matrices(n)))
def test_block_table_roundtrip(m):
    eng = default_engine(len(m) // 2)
    assert matrix_from_weyl(eng, weyl_from_matrix(eng, m)) == m


def test_sp_blocks_rejects():
    with pytest.raises(StructureError):
        sp_blocks([[1, 0], [0, 1]])


# -- normal forms ---------------------------------------------------------


def elements(n):
    eng = default_engine(n)
    s = eng.structure
    gens = st.sampled_from(range(s.dim))
    letters = st.tuples(st.sampled_from("dx"), st.integers(1, n))
    mono = st.tuples(st.lists(gens, max_size=2), st.lists(letters, max_size=2), st.integers(-2, 2))

    def build(monos):
        out = eng.zero()
        for u, w, c in monos:
            out = out + eng.element(u, w, c)
        return out

    return st.lists(mono, min_size=1, max_size=3).map(build)


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 2).flatmap(lambda n: st.tuples(elements(n), elements(n), elements(n))))
def test_normal_form_associative_and_idempotent(triple):
    a, b, c = triple
    assert (a * b) * c == a * (b * c)
    nf = normal_form(a * b)
    assert normal_form(nf) == nf
    assert (a + b) * c == a * c + b * c


def test_weyl_relation():
    eng = default_engine(2)
    dx = eng.weyl([("d", 1), ("x", 1)])
    xd = eng.weyl([("x", 1), ("d", 1)])
    assert dx - xd == eng.one()
    assert eng.weyl([("d", 1), ("x", 2)]) == eng.weyl([("x", 2), ("d", 1)])


def test_odd_square_is_half_bracket():
    eng = default_engine(1)
    d = eng.gen("d1")
    assert d * d == eng.gen("b11") * Fraction(1, 2)


# -- Casimir, Kostant, D^2 ----------------------------------------------------


@pytest.mark.parametrize("n", [1, 2])
def test_casimir_basis_independent(n):
    eng = default_engine(n)
    s = eng.structure
    pairs = rescaled_pairs(s, list(range(s.dim)), seed=1)
    assert casimir(eng, pairs) == casimir(eng)
    even = rescaled_pairs(s, s.even_indices, seed=2)
    assert even_casimir_delta(eng, even) == even_casimir_delta(eng)


@pytest.mark.parametrize("n", [1, 2])
def test_dirac_operator_basis_independent(n):
    eng = default_engine(n)
    s = eng.structure
    pairs = rescaled_pairs(s, s.odd_indices, seed=3)
    assert dirac_operator(eng, pairs) == dirac_operator(eng)


def test_dirac_operator_rank_one():
    eng = default_engine(1)
    want = (eng.tensor(eng.gen("d1"), eng.x(1)) - eng.tensor(eng.gen("x1"), eng.d(1))) * 2
    assert dirac_operator(eng) == want


@pytest.mark.parametrize("n", [1, 2])
def test_dirac_square(n):
    cert = verify_dirac_square(n)
    assert cert.passed
    assert cert.to_json()["residual_terms"] == []


def test_graded_tensor_product_leaves_residual():
    eng = Enveloping(build_structure(1), koszul=True)
    assert dirac_square_residual(eng)


@pytest.mark.parametrize("n,c,tr", [(1, Fraction(3, 2), -12), (2, Fraction(5), -40)])
def test_kostant_constant_is_eighth_of_supertrace(n, c, tr):
    res = kostant_constant(n)
    assert res.value == c and res.trace == tr
    assert res.agrees_supertrace and not res.agrees
    assert res.to_json()["eighth_of_supertrace"] == str(c)


def test_harish_chandra_image():
    z = casimir(1)
    assert hc_image(z) == {0: Fraction(1, 2), 2: Fraction(-2)}
    # the opposite ordering is not a W-invariant polynomial
    other = hc_image(z, ordering="raising-first")
    assert other.get(1, 0) != 0


def test_hc_needs_known_ordering():
    with pytest.raises(ValueError):
        hc_image(casimir(1), ordering="sideways")
