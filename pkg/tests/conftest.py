import random
from fractions import Fraction

import pytest

from dualdeg.fncore import BooleanFunction
from dualdeg.hypercube import DualWitness, cube


def random_function(n, rng):
    return BooleanFunction(n, table={x: rng.choice((1, -1)) for x in cube(n)})


def random_witness(n, rng, balanced=True, den=7):
    """Unit-norm witness with small integer numerators; balanced means <psi, 1> = 0."""
    while True:
        vals = {x: Fraction(rng.randint(-den, den)) for x in cube(n)}
        if balanced:
            s = sum(vals.values())
            x0 = next(iter(vals))
            vals[x0] -= s
        psi = DualWitness(n, vals)
        if not psi.is_zero():
            return psi.to_unit_norm()


@pytest.fixture
def rng():
    return random.Random(20240611)


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "LINES", None)
    if not lines:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(lines):
        terminalreporter.write_line(lines[k])
