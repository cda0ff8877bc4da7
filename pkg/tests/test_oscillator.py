import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from superdirac.charring import TruncatedSeries
from superdirac.oscillator import (
    DiracIndexCertificate,
    dirac_index_character,
    dirac_index_trivial,
    transfer_factor,
    transfer_factor_identity,
    transfer_factor_sign,
    weil_character,
    weil_monomials,
)
from superdirac.weylchar import highest_weight_grid


@pytest.mark.parametrize("n", [1, 2, 3])
def test_transfer_identities(backend, n):
    assert transfer_factor_identity(n, 14)
    assert transfer_factor_sign(n, 14) == 1


@pytest.mark.parametrize("n", [1, 2, 3])
def test_even_plus_odd(n):
    even, odd = weil_character(n, "even", 9), weil_character(n, "odd", 9)
    assert even - odd == transfer_factor(n, 9)
    assert set(even.coeffs.values()) <= {1} and set(odd.coeffs.values()) <= {1}


@settings(max_examples=25, deadline=None)
@given(st.integers(1, 3), st.integers(1, 16))
def test_difference_factorizes(n, order):
    rank_one = transfer_factor(1, order).coeffs
    series = transfer_factor(n, order)
    for key, c in series.coeffs.items():
        expected = 1
        for k in key:
            expected *= rank_one.get((k,), 0)
        assert c == expected
    assert set(series.coeffs.values()) <= {1, -1}


def test_monomial_count():
    # x^a with sum(2a_i + 1) <= 9 in rank 2
    got = set(weil_monomials(2, 9))
    want = {a for a in itertools.product(range(5), repeat=2) if 2 * sum(a) + 2 <= 9}
    assert got == want


def test_rank_one_series():
    assert repr(transfer_factor(1, 7)) == "<q - q^3 + q^5 - q^7 + O(q^8) @ 0>"


@pytest.mark.parametrize("n", [1, 2, 3])
def test_trivial_index(n):
    assert dirac_index_trivial(n, 12).verdict


@pytest.mark.parametrize("hw", [h for n in (1, 2) for h in highest_weight_grid(n)], ids=lambda h: str(h.weight))
def test_index_grid(hw):
    cert = dirac_index_character(hw, 12)
    assert cert.verdict
    data = cert.to_json()
    assert data["pass"] is True and data["identity"] == "dirac_index"
    assert TruncatedSeries.from_json(data["lhs"]) == cert.lhs


def test_failing_certificate_reports_false():
    one = TruncatedSeries.one(1, 4)
    cert = DiracIndexCertificate(None, 4, one, one * 2)
    assert not cert.verdict
    assert cert.to_json()["pass"] is False


@pytest.mark.parametrize("bad", [dict(parity="mixed", order=4), dict(parity="even", order=0)])
def test_weil_character_arguments(bad):
    with pytest.raises(ValueError):
        weil_character(1, **bad)
