"""Randomized property suites (seeded), runnable standalone:

    pytest tests/test_properties.py

Groebner determinism, S-polynomial reduction to zero, the Euler relation,
the evaluation homomorphism, symbolic-power nesting, and cyclic-symmetry
invariance of the least degree.
"""

import random

from fermatpow.cyclo import CycloField
from fermatpow.fermat import RING, fermat_ideal, symbolic_power
from fermatpow.fields import rat
from fermatpow.groebner import Ideal, buchberger, ideal_equal, normal_form, spolynomial
from fermatpow.poly import monomials_of_degree

SEED = 0xF3A7

X, Y, Z = RING.gens()


def _random_homogeneous(rng, degree, density=0.5):
    terms = {}
    for exps in monomials_of_degree(3, degree):
        if rng.random() < density:
            c = rng.randint(-3, 3)
            if c:
                terms[exps] = rat(c)
    return RING.from_terms(terms.items())


def _random_ideal(rng):
    gens = []
    while len(gens) < rng.randint(2, 3):
        p = _random_homogeneous(rng, rng.randint(1, 3))
        if not p.is_zero():
            gens.append(p)
    return gens


def test_groebner_determinism_under_shuffle():
    rng = random.Random(SEED)
    for _ in range(8):
        gens = _random_ideal(rng)
        reference = buchberger(gens)
        for _ in range(3):
            shuffled = gens[:]
            rng.shuffle(shuffled)
            assert buchberger(shuffled) == reference


def test_all_spolynomials_reduce_to_zero():
    rng = random.Random(SEED + 1)
    bases = [buchberger(_random_ideal(rng)) for _ in range(5)]
    bases.append(fermat_ideal(2).ideal.groebner_basis())
    bases.append(symbolic_power(2, 2).groebner_basis())
    for basis in bases:
        for i in range(len(basis)):
            for j in range(i + 1, len(basis)):
                s = spolynomial(basis[i], basis[j])
                if not s.is_zero():
                    assert normal_form(s, basis).is_zero()


def test_euler_relation():
    rng = random.Random(SEED + 2)
    for _ in range(40):
        d = rng.randint(1, 6)
        p = _random_homogeneous(rng, d)
        if p.is_zero():
            continue
        euler = (
            X * p.partial_derivative((1, 0, 0))
            + Y * p.partial_derivative((0, 1, 0))
            + Z * p.partial_derivative((0, 0, 1))
        )
        assert euler == d * p


def test_evaluation_homomorphism():
    rng = random.Random(SEED + 3)
    field = CycloField(5)
    for _ in range(25):
        p = _random_homogeneous(rng, rng.randint(1, 3))
        q = _random_homogeneous(rng, rng.randint(1, 3))
        point = [field.zeta ** rng.randint(0, 4) for _ in range(3)]
        assert (p * q).evaluate(point) == p.evaluate(point) * q.evaluate(point)
        assert (p - q).evaluate(point) == p.evaluate(point) - q.evaluate(point)


def test_symbolic_power_nesting():
    for n, top in ((2, 4), (3, 3)):
        for m in range(1, top):
            basis = symbolic_power(n, m).groebner_basis()
            for g in symbolic_power(n, m + 1).generators:
                assert normal_form(g, basis).is_zero()


def test_cyclic_symmetry_preserves_alpha():
    rotation = (2, 0, 1)  # x -> y -> z -> x
    for n, m in ((2, 1), (2, 3), (3, 1), (3, 2), (4, 2)):
        ideal = symbolic_power(n, m)
        rotated = Ideal(RING, [g.map_variables(rotation) for g in ideal.generators])
        assert ideal_equal(rotated, ideal)
        assert rotated.min_degree() == ideal.min_degree()
