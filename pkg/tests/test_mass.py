import itertools
import random
from fractions import Fraction

import pytest

from dualdeg.dualcraft.amplify import amplifier_Psi
from dualdeg.dualcraft.compose import dual_block_compose
from dualdeg.dualcraft.mass import (
    basel_upper,
    binomial_bound_check,
    check_helper_bounds,
    combinatorial_bound_check,
    convolve,
    inverse_square_tail_check,
    layer_split,
    mass_outside,
    mass_outside_brute,
    product_tail_dp,
    product_tail_enum,
)
from dualdeg.exactlp import one_sided_dual_witness
from dualdeg.fncore import make_basic

from conftest import random_witness


def test_convolve():
    assert convolve([Fraction(1), Fraction(2)], [Fraction(3), Fraction(1)]) == [3, 7, 2]


def test_layer_split_reassembles():
    psi = one_sided_dual_witness(make_basic("OR", 3), 2)
    plus, minus = layer_split(psi)
    assert sum(plus) == sum(minus) == Fraction(1, 2)


def test_single_block_under_cap_is_zero():
    psi = one_sided_dual_witness(make_basic("OR", 2), 2)
    plus, minus = layer_split(psi)
    assert mass_outside(amplifier_Psi(1), plus, minus, 2) == 0


@pytest.mark.parametrize("R,m", [(1, 2), (2, 2), (2, 3), (3, 2), (3, 3), (4, 3), (2, 4)])
def test_dp_equals_brute(R, m):
    rng = random.Random(R * 10 + m)
    psi = random_witness(m, rng)
    Phi = random_witness(R, rng)
    plus, minus = layer_split(psi)
    for cap in range(R * m + 1):
        assert mass_outside(Phi, plus, minus, cap) == mass_outside_brute(Phi, psi, cap)


def test_uniform_two_block_example():
    eta = [Fraction(1, 2), Fraction(1, 2)]
    assert product_tail_dp([eta, eta], 1) == product_tail_enum([eta, eta], 1) == Fraction(1, 4)


def test_combinatorial_trivial_cases():
    eta = [Fraction(1, 2), Fraction(0)]
    out = combinatorial_bound_check(1, 2, [eta, eta], 1)
    assert out["lhs"] == 0 and out["holds"]
    eta3 = [Fraction(1, 4), Fraction(1, 8), Fraction(1, 8)]
    assert combinatorial_bound_check(2, 2, [eta3, eta3], 4)["lhs"] == 0


def test_combinatorial_dp_vs_enum():
    caps = [Fraction(5, (r + 1) ** 2) for r in range(3)]
    eta = [min(c, Fraction(1, 6)) for c in caps]
    out = combinatorial_bound_check(2, 3, [eta] * 3, 2)
    assert out["lhs"] == product_tail_enum([eta] * 3, 2)


def test_combinatorial_preconditions():
    with pytest.raises(ValueError):
        combinatorial_bound_check(1, 1, [[Fraction(1), Fraction(0)]], 1)  # mass > 1/2
    with pytest.raises(ValueError):
        combinatorial_bound_check(1, 2, [[Fraction(1, 4), Fraction(0)]], 1)


def test_helper_bounds():
    assert binomial_bound_check(30)[0]
    assert inverse_square_tail_check(100)[0]
    assert check_helper_bounds().all_certified
    assert Fraction(1644, 1000) < basel_upper() < Fraction(1646, 1000)


def test_binomial_bound_fails_with_small_e():
    ok, bad = binomial_bound_check(10, e_upper=Fraction(1))
    assert not ok and (3, 2) in bad


def test_composed_mass_matches_on_amplified_instance():
    psi = one_sided_dual_witness(make_basic("OR", 2), 2)
    Phi = amplifier_Psi(3)
    plus, minus = layer_split(psi)
    comp = dual_block_compose(Phi, psi)
    for cap in range(7):
        assert mass_outside(Phi, plus, minus, cap) == mass_outside_brute(Phi, psi, cap)
    assert mass_outside(Phi, plus, minus, 6) == 0 and comp.l1 == 1


def test_exhaustive_small_grid():
    # every (R, m) with R * m <= 12 on one seeded witness pair
    rng = random.Random(11)
    for R, m in itertools.product(range(1, 7), range(1, 7)):
        if R * m > 12:
            continue
        psi, Phi = random_witness(m, rng), random_witness(R, rng)
        plus, minus = layer_split(psi)
        cap = (R * m) // 2
        assert mass_outside(Phi, plus, minus, cap) == mass_outside_brute(Phi, psi, cap)
