import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dualdeg.dualcraft.compose import (
    balanced,
    check_laws,
    compose_many,
    composed_function_value,
    correlation_loss_bound,
    dual_block_compose,
    sign,
)
from dualdeg.exactlp import dual_witness, one_sided_dual_witness
from dualdeg.fncore import block_compose, make_basic
from dualdeg.hypercube import DualWitness, character, cube

from conftest import random_witness


def chi(n, S, scale):
    return DualWitness(n, {x: Fraction(character(S, x)) * scale for x in cube(n)})


def test_sign_of_zero_is_minus_one():
    assert sign(Fraction(0)) == -1 and sign(Fraction(1, 5)) == 1


def test_identity_outer():
    Psi = chi(1, [0], Fraction(1, 2))
    psi = chi(2, [0, 1], Fraction(1, 4))
    comp = dual_block_compose(Psi, psi)
    assert comp == psi
    assert comp.pure_high_degree == 2


def test_composed_correlation_for_known_pair():
    AND2, OR2 = make_basic("AND", 2), make_basic("OR", 2)
    Psi, psi = dual_witness(AND2, 2), dual_witness(OR2, 2)
    comp = dual_block_compose(Psi, psi)
    G = block_compose(AND2, OR2)
    assert comp.correlation(G) == comp.correlation(composed_function_value(AND2, OR2))
    assert comp.l1 == 1


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 3), st.integers(1, 3), st.integers(0, 10**6))
def test_norm_and_degree_laws(M, m, seed):
    rng = random.Random(seed)
    Psi, psi = random_witness(M, rng), random_witness(m, rng)
    laws = check_laws(Psi, psi)
    assert laws["norm_preserved"] is True
    assert laws["phd_composed_at_least_product"]


@settings(max_examples=20, deadline=None)
@given(st.integers(0, 10**6))
def test_associativity(seed):
    rng = random.Random(seed)
    a, b, c = (random_witness(rng.randint(1, 2), rng) for _ in range(3))
    assert dual_block_compose(dual_block_compose(a, b), c) == dual_block_compose(a, dual_block_compose(b, c))
    assert compose_many(a, b, c) == dual_block_compose(a, dual_block_compose(b, c))


def test_unbalanced_inner_flags_norm_law():
    rng = random.Random(3)
    Psi, psi = random_witness(2, rng), random_witness(2, rng, balanced=False)
    if not balanced(psi):
        assert check_laws(Psi, psi)["norm_preserved"] is None


@pytest.mark.parametrize("M,m", [(1, 2), (2, 2), (2, 3), (3, 2)])
def test_correlation_loss(M, m):
    F, f = make_basic("AND", M), make_basic("OR", m)
    Psi = dual_witness(F, 1) if M == 1 else dual_witness(F, 2)
    psi = one_sided_dual_witness(f, 2)
    out = correlation_loss_bound(Psi, psi, F, f)
    assert out["lhs"] >= out["rhs"]
