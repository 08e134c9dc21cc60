import random
from fractions import Fraction

import pytest

from dualdeg.exactlp import dual_witness, eps_opt
from dualdeg.fncore import make_basic
from dualdeg.hypercube import DualWitness, character, cube
from dualdeg.shareapp import (
    Scheme,
    SchemeError,
    ShareBundle,
    advantage,
    check_scheme,
    marginal,
    monte_carlo,
    near_miss_witness,
    reconstruct,
    scheme_from_witness,
    secrecy_audit,
    split,
)

from conftest import random_function

OR2 = make_basic("OR", 2)
PSI = DualWitness(2, {x: Fraction(character([0, 1], x), 4) for x in cube(2)})


def test_or2_distributions():
    s = scheme_from_witness(OR2, PSI)
    assert s.plus == {(1, 1): Fraction(1, 2), (-1, -1): Fraction(1, 2)}
    assert s.minus == {(1, -1): Fraction(1, 2), (-1, 1): Fraction(1, 2)}
    assert advantage(s) == Fraction(1, 2)


def test_character_scheme_is_uniform_on_halves():
    psi = DualWitness(3, {x: Fraction(character([0, 2], x), 8) for x in cube(3)})
    s = scheme_from_witness(make_basic("PARITY", 3), psi)
    assert set(s.plus.values()) == {Fraction(1, 4)} and len(s.plus) == 4


def test_rejects_bad_witness():
    with pytest.raises(SchemeError):
        scheme_from_witness(OR2, DualWitness(2, {(1, 1): Fraction(1)}))
    with pytest.raises(SchemeError):
        scheme_from_witness(OR2, PSI.scaled(2))


def test_split_and_reconstruct():
    s = scheme_from_witness(OR2, PSI)
    for seed in range(30):
        b = split(-1, s, seed)
        assert b.shares in {(1, -1), (-1, 1)}
        assert reconstruct(b, OR2) == -1
    assert split(1, s, 4) == split(1, s, 4)
    err = ShareBundle(1, (-1, -1), s.scheme_id, 0)
    assert reconstruct(err, OR2) == -1


def test_audit():
    s = scheme_from_witness(OR2, PSI)
    rep = secrecy_audit(s, 2)
    assert rep.passed and rep.checked == [(), (0,), (1,)]
    assert secrecy_audit(s, 0).passed and secrecy_audit(s, 0).checked == []


@pytest.mark.parametrize("n,d", [(3, 2), (4, 3), (4, 2), (3, 3)])
def test_near_miss_fails(n, d):
    psi = near_miss_witness(n, d)
    assert psi.pure_high_degree == d - 1
    s = scheme_from_witness(make_basic("PARITY", n), psi)
    rep = secrecy_audit(s, d)
    assert not rep.passed
    assert rep.worst == tuple(range(d - 1))
    assert secrecy_audit(s, d - 1).passed


def test_duality_chain():
    rng = random.Random(17)
    for n in range(1, 5):
        for _ in range(4):
            f = random_function(n, rng)
            for d in range(1, n + 1):
                psi = dual_witness(f, d)
                s = scheme_from_witness(f, psi)
                assert advantage(s) == eps_opt(f, d - 1)[0] == psi.correlation(f)
                assert check_scheme(s, d).all_certified


def test_marginal():
    m = marginal({(1, -1): Fraction(1, 2), (-1, -1): Fraction(1, 2)}, [1])
    assert m == {(-1,): 1}


def test_json_round_trip_and_tamper():
    s = scheme_from_witness(OR2, PSI)
    data = s.to_json()
    assert Scheme.from_json(data).scheme_id == s.scheme_id
    data["plus"][0]["p"] = "1/3"
    with pytest.raises(SchemeError):
        Scheme.from_json(data)


def test_monte_carlo_small():
    s = scheme_from_witness(OR2, PSI)
    out = monte_carlo(s, 20000, 3)
    assert out["within_3_sigma"] and out["expected_rate"] == Fraction(3, 4)
