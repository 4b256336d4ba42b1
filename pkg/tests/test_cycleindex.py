from __future__ import annotations

import pytest
import sympy

from knothodge.cycleindex import (
    CycleIndexSeries,
    Partition,
    conf_cycle_index,
    factor_operator,
    hodge_cycle_index,
    identity_cycle_index,
    pair,
    partitions,
)
from knothodge.exact import USeries, XPoly
from knothodge.gamma import gamma_expansion
from knothodge.genfun import Parity, assemble, factor

X = XPoly.x()
P = Partition.from_dict


def test_partitions_count_and_weight():
    for n in range(9):
        parts = list(partitions(n))
        assert len(parts) == int(sympy.functions.combinatorial.numbers.partition(n))
        assert all(p.weight == n for p in parts)
        assert len(set(parts)) == len(parts)


def test_class_weight_is_centralizer_order():
    # n! / |class| for cycle type 2+1+1 in S_4: 4!/6 = 4
    assert P({2: 1, 1: 2}).class_weight() == 4
    assert P({}).class_weight() == 1


def test_conf_index_examples():
    Z = conf_cycle_index(Parity.ODD, 4, 3)
    assert Z[P({})] == USeries.one(3)
    assert Z[P({1: 1})][0] == XPoly()


@pytest.mark.parametrize("parity", list(Parity))
def test_normalization_is_a_product_with_identity(parity):
    N, J = 5, 3
    raw = conf_cycle_index(parity, N, J, normalized=False)
    norm = conf_cycle_index(parity, N, J)
    assert raw == norm * identity_cycle_index(N, J)


def test_hodge_index_examples():
    H = hodge_cycle_index(4)
    assert H[P({})] == XPoly.const(1)
    assert H[P({1: 1})] == X
    assert H[P({2: 1})] == (X - X ** 2) / 2


@pytest.mark.parametrize("n", range(1, 8))
def test_hodge_index_on_regular_representation(n):
    # the regular representation has cycle index a_1^n, paired weight n!;
    # its Hodge pieces have dimensions given by unsigned Stirling numbers of the first kind
    got = hodge_cycle_index(n)[P({1: n})] * int(sympy.factorial(n))
    want = XPoly([0] + [int(sympy.functions.combinatorial.numbers.stirling(n, i, kind=1)) for i in range(1, n + 1)])
    assert got == want


@pytest.mark.parametrize("n", range(1, 8))
def test_hodge_index_on_trivial_representation(n):
    # summing all coefficients sets a_l = t^l; the cyclotomic identity
    # prod (1 - s^l)^(-E_l(x)) = 1/(1 - x s) turns the product into (1 + x t)/(1 - x t^2)
    H = hodge_cycle_index(n)
    total = XPoly()
    for lam in partitions(n):
        total = total + H[lam]
    assert total == X ** ((n + 1) // 2)


def test_pair_with_constant_series():
    one = CycleIndexSeries(4, {P({}): XPoly.const(3)})
    Z = conf_cycle_index(Parity.EVEN, 4, 2)
    assert pair(one, Z) == Z[P({})] * 3


def test_pair_first_coefficient():
    got = pair(hodge_cycle_index(2), conf_cycle_index(Parity.ODD, 2, 1))
    assert got[1] == X ** 2


@pytest.mark.parametrize("parity", list(Parity))
def test_pairing_reproduces_generating_function(parity):
    got = pair(hodge_cycle_index(8), conf_cycle_index(parity, 8, 4))
    assert got == assemble(parity, 4)


def test_pairing_needs_desuspension_sign():
    got = pair(hodge_cycle_index(8), conf_cycle_index(Parity.ODD, 8, 4), desuspend=False)
    assert got != assemble(Parity.ODD, 4)


def test_factor_operator_examples():
    assert factor_operator(1, Parity.ODD, 6) == gamma_expansion(6)
    G = factor_operator(1, Parity.ODD, 4).specialize(-3)
    assert G == USeries.from_scalars([1, 3, 2, 0, 0], 4).specialize(0)


@pytest.mark.parametrize("parity", list(Parity))
@pytest.mark.parametrize("ell", [1, 2, 3, 4, 6])
def test_factor_operator_matches_factor(parity, ell):
    assert factor_operator(ell, parity, 6) == factor(ell, parity, 6)
