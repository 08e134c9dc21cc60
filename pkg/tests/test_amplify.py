from fractions import Fraction

import pytest

from dualdeg.dualcraft.amplify import (
    AmplificationParams,
    amplifier_Psi,
    ceil_log2_power,
    check_amplification,
    icbrt,
    lemma48_constant_upper,
    scheduled_N,
)
from dualdeg.dualcraft.compose import dual_block_compose
from dualdeg.exactlp import one_sided_dual_witness
from dualdeg.fncore import block_compose, make_basic
from dualdeg.hypercube import DualWitness


@pytest.mark.parametrize("M", [1, 2, 3, 4])
def test_amplifier_is_balanced_unit(M):
    Psi = amplifier_Psi(M)
    assert Psi.total() == 0 and Psi.l1 == 1


def test_amplifier_shape():
    Psi = amplifier_Psi(3)
    assert Psi.support == ((1, 1, 1), (-1, -1, -1)) or set(Psi.support) == {(1, 1, 1), (-1, -1, -1)}
    assert Psi[(1, 1, 1)] == Fraction(1, 2)


def test_or1_identity_instance():
    psi = DualWitness(1, {(1,): Fraction(1, 2), (-1,): Fraction(-1, 2)})
    comp = dual_block_compose(amplifier_Psi(1), psi)
    assert comp.correlation(make_basic("OR", 1)) == 1


@pytest.mark.parametrize(
    "M,n,expected",
    [(1, 2, Fraction(1, 2)), (2, 2, Fraction(3, 4)), (3, 2, Fraction(7, 8)), (1, 3, Fraction(2, 3)), (2, 3, Fraction(8, 9)), (3, 3, Fraction(26, 27))],
)
def test_composed_correlation(M, n, expected):
    f = make_basic("OR", n)
    psi = one_sided_dual_witness(f, 2)
    comp = dual_block_compose(amplifier_Psi(M), psi)
    assert comp.correlation(block_compose(make_basic("AND", M), f)) == expected
    assert check_amplification(M, f, psi).all_certified


def test_icbrt_and_log():
    assert [icbrt(v) for v in (0, 1, 7, 8, 26, 27, 10**18)] == [0, 1, 1, 2, 2, 3, 10**6]
    assert ceil_log2_power(2, 3) == 3
    assert ceil_log2_power(3, 2) == 4  # 2^4 = 16 >= 9 > 8


def test_constant_bound_is_close_and_above():
    C = lemma48_constant_upper()
    assert Fraction(142, 100) < C < Fraction(143, 100)


def test_schedule():
    p = AmplificationParams.schedule(1000, 10)
    assert p.k == 16 and p.D == 8
    assert p.R == ceil_log2_power(1000, 10000)
    assert p.N == scheduled_N(p.R, p.c2)
    assert p.m == p.R * p.N


def test_schedule_overrides_listed():
    p = AmplificationParams.schedule(64, 8, N=5, R=3)
    assert (p.N, p.R, p.m) == (5, 3, 15)
    assert p.to_json()["overrides"] == ["N", "R"]
    with pytest.raises(ValueError):
        AmplificationParams.schedule(64, 8, m=3)
    with pytest.raises(ValueError):
        AmplificationParams.schedule(4, 8)
