"""Tests for the BSC-mixture joint pmfs and the mapping oracle."""
import math

import numpy as np
import pytest

from rdfc.common.errors import MappingAmbiguityError
from rdfc.discrete import (
    CANDIDATES,
    BscMixtureParams,
    MixtureMapping,
    binary_entropy,
    bsc_mixture,
    disambiguate_mapping,
    marginal_entropies,
    maxtrace,
    mutual_information_discrete,
    wci_lower_bound_discrete,
)
from rdfc.harness import ReferenceTables

# (I, WCI bound) in nats for the published rows, unrounded
EXPECTED = [
    (0.023825, 0.097696),
    (0.082200, 0.099779),
    (0.256946, 0.327640),
    (0.040251, 0.096724),
    (0.021628, 0.131512),
    (0.041141, 0.136473),
    (0.360076, 0.532475),
    (0.001366, 0.011722),
]


@pytest.fixture(scope="module")
def table2_rows():
    return ReferenceTables.load().table2.rows


@pytest.fixture(scope="module")
def mapping(table2_rows):
    return disambiguate_mapping([(r.params, r.mi, r.wci) for r in table2_rows])


def test_oracle_returns_unrelabelled_representative(mapping):
    assert mapping in CANDIDATES
    assert mapping.relabel_x is False


def test_published_rows(table2_rows, mapping):
    """Test I and the WCI bound of every published row to six decimals."""
    for row, (mi, wci) in zip(table2_rows, EXPECTED):
        Q = bsc_mixture(row.params, mapping)
        assert mutual_information_discrete(Q) == pytest.approx(mi, abs=1e-6)
        assert wci_lower_bound_discrete(Q).wci_lower == pytest.approx(wci, abs=1e-6)


@pytest.mark.parametrize("mapping_", CANDIDATES)
def test_mixture_structure(rr_row1, mapping_):
    Q = bsc_mixture(rr_row1, mapping_)
    assert Q.k == 4
    assert Q.q.sum() == pytest.approx(1.0, abs=1e-15)
    # complementing both sides reverses both axes
    np.testing.assert_allclose(Q.q, Q.q[::-1, ::-1], atol=1e-16)
    np.testing.assert_allclose(Q.p_x, Q.p_x[::-1], atol=1e-16)


def test_marginal_entropies_depend_on_weights_only(rng):
    """Test H(X~) = ln 2 + H_b(d) and H(Y) = ln 2 + H_b(c)."""
    for _ in range(10):
        params = BscMixtureParams(**dict(zip(("p1", "p2", "p3", "p4", "c", "d"), rng.random(6))))
        h_x, h_y = marginal_entropies(bsc_mixture(params))
        assert h_x == pytest.approx(math.log(2) + binary_entropy(params.d), abs=1e-12)
        assert h_y == pytest.approx(math.log(2) + binary_entropy(params.c), abs=1e-12)


def test_relabel_keeps_information_and_maxtrace(rr_row8):
    plain = bsc_mixture(rr_row8, MixtureMapping(False, False))
    relabelled = bsc_mixture(rr_row8, MixtureMapping(False, True))
    np.testing.assert_allclose(relabelled.q, plain.q[[0, 2, 1, 3]])
    assert mutual_information_discrete(relabelled) == pytest.approx(mutual_information_discrete(plain))
    assert maxtrace(relabelled)[0] == pytest.approx(maxtrace(plain)[0])


def test_swap_is_invisible_when_crossovers_agree():
    params = BscMixtureParams(p1=0.3, p2=0.5, p3=0.3, p4=0.0, c=0.5, d=0.4)
    np.testing.assert_array_equal(
        bsc_mixture(params, MixtureMapping(True, False)).q, bsc_mixture(params).q
    )


def test_oracle_rejects_unmatched_references(rr_row1):
    with pytest.raises(MappingAmbiguityError):
        disambiguate_mapping([(rr_row1, 10.0, 0.1)])


def test_oracle_rejects_ambiguous_references():
    """Test that rows with p1 = p3 cannot separate the mapping classes."""
    params = BscMixtureParams(p1=0.1, p2=0.05, p3=0.1, p4=0.0, c=0.1, d=0.05)
    Q = bsc_mixture(params)
    refs = [(params, mutual_information_discrete(Q), wci_lower_bound_discrete(Q).wci_lower)]
    with pytest.raises(MappingAmbiguityError):
        disambiguate_mapping(refs)
