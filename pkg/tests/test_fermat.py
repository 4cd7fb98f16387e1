"""Fermat configurations: ideals, points, symbolic powers, witnesses."""

import pytest

from fermatpow.fermat import (
    RING,
    coordinate_intersection,
    fermat_ideal,
    fermat_points,
    parse_point_file,
    predicted_alpha,
    symbolic_power,
    verify_witness,
    witness,
    witness_component_report,
    PointFileError,
)
from fermatpow.groebner import Ideal, ideal_equal, ideal_intersect, hilbert_dim, normal_form
from fermatpow.textio import render_poly

X, Y, Z = RING.gens()


def test_fermat_generators_n2():
    gens = fermat_ideal(2).ideal.generators
    assert [render_poly(g) for g in gens] == [
        "x*y^2 - x*z^2",
        "-x^2*y + y*z^2",
        "x^2*z - y^2*z",
    ]


def test_fermat_generator_degrees():
    for n in (2, 3, 4, 5):
        data = fermat_ideal(n)
        assert all(g.homogeneous_degree() == n + 1 for g in data.ideal.generators)
        assert (data.f + data.g + data.h).is_zero()


def test_generators_vanish_at_all_ones():
    for n in (2, 3, 4):
        for g in fermat_ideal(n).ideal.generators:
            assert g.evaluate([1, 1, 1]).is_zero()


def test_rejects_n_below_two():
    with pytest.raises(ValueError):
        fermat_ideal(1)


def test_fermat_point_counts():
    assert len(fermat_points(2)) == 7
    assert len(fermat_points(3)) == 12
    assert len(fermat_points(4)) == 19  # n^2 + 3


def test_fermat_points_n2_explicit():
    reps = {
        tuple(c.as_rational() for c in rep)
        for rep in fermat_points(2).affine_representatives()
    }
    expected = {
        (1, 0, 0), (0, 1, 0), (0, 0, 1),
        (1, 1, -1), (1, -1, 1), (1, -1, -1), (1, 1, 1),
    }
    assert reps == expected


def test_symbolic_power_m1_is_the_ideal():
    for n in (2, 3):
        assert symbolic_power(n, 1) is fermat_ideal(n).ideal


def test_decomposition_consistency():
    for n in (2, 3, 4):
        data = fermat_ideal(n)
        inter = ideal_intersect(data.K, coordinate_intersection(1))
        assert ideal_equal(data.ideal, inter)


def test_symbolic_power_alphas():
    assert symbolic_power(3, 2).min_degree() == 8
    assert symbolic_power(2, 2).min_degree() == 6


def test_symbolic_power_validation():
    with pytest.raises(ValueError):
        symbolic_power(2, 0)
    with pytest.raises(ValueError):
        symbolic_power(1, 2)


def test_symbolic_powers_nest():
    for n, m in ((2, 1), (2, 2), (2, 3), (3, 1), (3, 2)):
        outer = symbolic_power(n, m)
        inner = symbolic_power(n, m + 1)
        basis = outer.groebner_basis()
        assert all(normal_form(g, basis).is_zero() for g in inner.generators)


def test_cyclic_symmetry():
    # x -> y -> z -> x maps I_n to itself and preserves alpha.
    for n, m in ((2, 2), (3, 2)):
        ideal = symbolic_power(n, m)
        rotated = Ideal(RING, [g.map_variables((2, 0, 1)) for g in ideal.generators])
        assert ideal_equal(ideal, rotated)
        assert rotated.min_degree() == ideal.min_degree()
        for t in range(ideal.min_degree(), ideal.min_degree() + 2):
            assert hilbert_dim(rotated, t) == hilbert_dim(ideal, t)


def test_point_ideal_consistency():
    from fermatpow.fermat import FatPointScheme
    from fermatpow.interpolation import fatpoint_dim

    for n, m in ((2, 1), (2, 2), (3, 1)):
        scheme = FatPointScheme(fermat_points(n), m)
        ideal = symbolic_power(n, m)
        a = ideal.min_degree()
        for t in (a - 1, a, a + 1):
            assert fatpoint_dim(scheme, t) == hilbert_dim(ideal, t)


def test_predicted_alpha_closed_forms():
    assert [predicted_alpha(2, m) for m in range(1, 9)] == [3, 6, 8, 10, 13, 15, 18, 20]
    assert [predicted_alpha(3, m) for m in range(1, 8)] == [4, 8, 9, 13, 17, 18, 22]
    assert [predicted_alpha(4, m) for m in range(2, 6)] == [10, 12, 16, 21]
    assert predicted_alpha(5, 3) == 15
    assert predicted_alpha(6, 1) == 7


def test_witness_examples():
    data5 = fermat_ideal(5)
    w = witness(5, 3)
    assert w == data5.f * data5.g * data5.h
    assert w.homogeneous_degree() == 15

    data4 = fermat_ideal(4)
    w45 = witness(4, 5)
    assert w45 == Z * data4.f**2 * data4.g * data4.h**2
    assert w45.homogeneous_degree() == 21

    w24 = witness(2, 4)
    expected = (X**2 - Y**2) ** 2 * (Y**2 - Z**2) * (Z**2 - X**2) * Z**2
    assert w24 == expected
    assert w24.homogeneous_degree() == 10

    data3 = fermat_ideal(3)
    w37 = witness(3, 7)
    assert w37 == data3.f**2 * data3.g**2 * data3.h**3 * Z
    assert w37.homogeneous_degree() == 22


def test_witness_uncovered_cases_return_none():
    assert witness(3, 3) is None
    assert witness(3, 5) is None
    assert witness(3, 4) is not None


def test_verify_witness_examples():
    assert verify_witness(3, 4)
    assert witness(3, 4).homogeneous_degree() == 13
    assert verify_witness(2, 5)
    assert witness(2, 5).homogeneous_degree() == 13
    assert verify_witness(4, 3)
    assert witness(4, 3).homogeneous_degree() == 12


def test_witness_component_report_uncovered_raises():
    with pytest.raises(ValueError):
        witness_component_report(3, 3)


def test_symbolic_eighth_power_is_square_of_fourth():
    # A computed case of the open question whether I_2^((4k)) = (I_2^((4)))^k;
    # only this instance is asserted, nothing beyond it.
    from fermatpow.groebner import ideal_power

    assert ideal_equal(symbolic_power(2, 8), ideal_power(symbolic_power(2, 4), 2))


def test_intersection_seeds_the_true_reduced_basis():
    # The w-free slice of the elimination basis must equal the basis the
    # engine recomputes from scratch on the intersection's generators.
    from fermatpow.groebner import buchberger

    ideal = symbolic_power(2, 3)
    assert buchberger(list(ideal.generators)) == ideal.groebner_basis()


def test_point_file_round_trip():
    text = """
# three collinear points on z = 0
conductor: 1
1, 0, 0
1, 1, 0
1, 2, 0
"""
    config = parse_point_file(text)
    assert len(config) == 3
    assert config.conductor == 1


def test_point_file_cyclotomic():
    text = "conductor: 3\n1, z_3, z_3^2\n0, 0, 1\n"
    config = parse_point_file(text)
    assert len(config) == 2


def test_point_file_errors_carry_line_numbers():
    with pytest.raises(PointFileError) as err:
        parse_point_file("conductor: 3\n1, z_3\n")
    assert "line 2" in str(err.value)
    with pytest.raises(PointFileError) as err:
        parse_point_file("points: 3\n1, 0, 0\n")
    assert "line 1" in str(err.value)
    with pytest.raises(PointFileError) as err:
        parse_point_file("conductor: 3\n1, z_5&, 0\n")
    assert "line 2" in str(err.value)
    with pytest.raises(PointFileError):
        parse_point_file("conductor: 2\n1, 1, 1\n2, 2, 2\n")  # same point twice
