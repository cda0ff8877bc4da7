import itertools
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from superdirac.errors import DominanceError, RankError, RegularityError, ResourceLimitError, SpinorialWeightError
from superdirac.rootdata import (
    Kind,
    Weight,
    WeylElement,
    fundamental_weights,
    from_dynkin_labels,
    is_regular,
    make_dominant,
    positive_roots,
    rho,
    rho0,
    rho1,
    simple_roots,
    validate_highest_weight,
    weyl_group,
    weyl_iter,
)


def signed_perms(n):
    return st.tuples(st.permutations(range(n)), st.lists(st.sampled_from((1, -1)), min_size=n, max_size=n)).map(
        lambda t: WeylElement(tuple(t[0]), tuple(t[1]))
    )


def test_weight_parse_and_format():
    w = Weight.parse("3/2, 1/2")
    assert tuple(w) == (3, 1)
    assert str(w) == "3/2,1/2"
    assert w.coords == (Fraction(3, 2), Fraction(1, 2))
    assert str(Weight.parse("2,-1")) == "2,-1"
    assert Weight.from_json(w.to_json()) == w


@pytest.mark.parametrize("bad", ["", "1/3", "a,b"])
def test_weight_parse_rejects(bad):
    with pytest.raises(ValueError):
        Weight.parse(bad)


def test_weight_rank_mismatch():
    with pytest.raises(RankError):
        Weight((2,)) + Weight((2, 2))


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_rho_closed_forms(n):
    assert rho(Kind.B, n) == Weight(2 * (n - i) - 1 for i in range(n))
    assert rho(Kind.C, n) == Weight(2 * (n - i) for i in range(n))
    assert rho0(n) == rho(Kind.C, n)
    assert rho1(n) == Weight([1] * n)
    assert rho(Kind.OSP, n) == rho0(n) - rho1(n) == rho(Kind.B, n)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_root_counts(n):
    assert len(positive_roots(Kind.B, n).even_positive_roots) == n * n
    assert len(positive_roots(Kind.C, n).even_positive_roots) == n * n
    osp = positive_roots(Kind.OSP, n)
    assert len(osp.odd_positive_roots) == n
    assert len(osp.positive_roots) == n * n + n


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_fundamental_weights_dual_to_simple_coroots(n):
    for kind in (Kind.B, Kind.OSP):
        for i, om in enumerate(fundamental_weights(n)):
            for j, a in enumerate(simple_roots(kind, n)):
                assert 2 * om.dot(a) / a.dot(a) == int(i == j)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_weyl_group_order_and_sign_sum(n):
    group = weyl_group(n)
    assert len(group) == 2**n * [1, 1, 2, 6][n]
    assert sum(s for _, s in group) == 0
    assert len({(w.perm, w.signs) for w, _ in group}) == len(group)


def test_weyl_rank_limit():
    with pytest.raises(ResourceLimitError):
        next(weyl_iter(3, max_rank=2))


@given(st.integers(1, 4).flatmap(lambda n: st.tuples(signed_perms(n), signed_perms(n), signed_perms(n))))
def test_composition_matches_matrices(triple):
    a, b, c = triple
    n = a.rank

    def mm(x, y):
        return [[sum(x[i][k] * y[k][j] for k in range(n)) for j in range(n)] for i in range(n)]

    assert (a * b).matrix() == mm(a.matrix(), b.matrix())
    assert (a * b) * c == a * (b * c)
    assert (a * b).sgn() == a.sgn() * b.sgn()
    assert a * a.inverse() == WeylElement.identity(n)
    lam = Weight(range(1, 2 * n, 2))
    assert (a * b).act(lam) == a.act(b.act(lam))


@given(st.integers(1, 4).flatmap(lambda n: st.tuples(st.just(n), signed_perms(n))))
def test_make_dominant_idempotent(data):
    n, w = data
    dom = Weight(2 * (n - i) + 1 for i in range(n))
    w2, back = make_dominant(w.act(dom))
    assert back == dom
    assert w2.act(w.act(dom)) == dom


def test_make_dominant_rejects_singular():
    with pytest.raises(RegularityError):
        make_dominant(Weight((2, -2)))
    with pytest.raises(RegularityError):
        make_dominant(Weight((0, 2)))
    assert not is_regular((2, -2)) and is_regular((4, -2))


def test_highest_weight_validation():
    assert validate_highest_weight(Weight((4, 2))) == [1, 2]
    assert from_dynkin_labels([1, 2]) == Weight((4, 2))
    with pytest.raises(SpinorialWeightError):
        validate_highest_weight(Weight((1,)))
    with pytest.raises(DominanceError):
        validate_highest_weight(Weight((2, 4)))
    with pytest.raises(RankError):
        validate_highest_weight(Weight((2, 0)), n=3)


@pytest.mark.parametrize("labels", list(itertools.product(range(3), range(0, 4, 2))))
def test_labels_roundtrip(labels):
    assert tuple(validate_highest_weight(from_dynkin_labels(labels))) == labels
