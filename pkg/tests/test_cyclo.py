"""Cyclotomic arithmetic: reduction modulo Phi_n, field axioms, text form."""

import random

import pytest

from fermatpow import cyclotomic_polynomial
from fermatpow.cyclo import CycloField, ConductorMismatch, cyclo_inv, promote_pair, zeta
from fermatpow.fields import rat
from fermatpow.textio import parse_cyclo, render_cyclo


def test_cyclotomic_polynomial_small():
    assert str(cyclotomic_polynomial(1)) == "z - 1"
    assert str(cyclotomic_polynomial(3)) == "z^2 + z + 1"
    assert str(cyclotomic_polynomial(4)) == "z^2 + 1"
    assert str(cyclotomic_polynomial(6)) == "z^2 - z + 1"
    assert str(cyclotomic_polynomial(12)) == "z^4 - z^2 + 1"


def test_zeta_products_reduce():
    z3 = zeta(3)
    assert z3 * z3 == CycloField(3).from_coeffs([-1, -1])  # zeta^2 = -zeta - 1
    z4 = zeta(4)
    assert z4 * z4 == CycloField(4).from_rational(rat(-1))


def test_inverse_of_zeta3():
    # Independent check: multiply back and reduce.
    z3 = zeta(3)
    inv = cyclo_inv(z3)
    assert inv == CycloField(3).from_coeffs([-1, -1])
    assert z3 * inv == CycloField(3).one


def test_inverse_of_zero_raises():
    with pytest.raises(ZeroDivisionError):
        cyclo_inv(CycloField(5).zero)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6, 8, 12])
def test_zeta_has_exact_order(n):
    z = zeta(n)
    assert z**n == CycloField(n).one
    for k in range(1, n):
        assert z**k != CycloField(n).one


def test_field_axioms_randomized():
    rng = random.Random(0xFE)
    field = CycloField(5)

    def rand_elem():
        return field.from_coeffs([rat(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(4)])

    for _ in range(50):
        a, b, c = rand_elem(), rand_elem(), rand_elem()
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        if not a.is_zero():
            assert a * cyclo_inv(a) == field.one


def test_conductor_mismatch_raises():
    with pytest.raises(ConductorMismatch):
        zeta(3) + zeta(4)


def test_promotion_to_common_conductor():
    a, b = promote_pair(zeta(3), zeta(4))
    assert a.conductor == b.conductor == 12
    assert a == zeta(12) ** 4
    assert b == zeta(12) ** 3
    # Conductor 1 embeds the rationals.
    one = CycloField(1).one
    assert one.as_rational() == rat(1)
    assert one.promote(6) == CycloField(6).one


def test_text_round_trip():
    field = CycloField(3)
    value = field.from_coeffs([rat(-1), rat(1, 2)])
    text = render_cyclo(value)
    assert text == "1/2*z_3 - 1"
    assert parse_cyclo(text, 3) == value
    assert parse_cyclo("z_3^2", 3) == field.from_coeffs([-1, -1])
    assert render_cyclo(CycloField(2).zeta) == "-1"
