"""Acceptance suite: one test per criterion, one printed pass/fail line each.

Run it alone with ``pytest tests/test_acceptance.py -v -s``.
"""

import time

from fermatpow.fermat import (
    RING,
    fermat_ideal,
    fermat_points,
    FatPointScheme,
    symbolic_power,
    witness,
    verify_witness,
    predicted_alpha,
)
from fermatpow.fields import rat
from fermatpow.groebner import ideal_equal, ideal_power, normal_form
from fermatpow.interpolation import alpha_interp
from fermatpow.invariants import (
    alpha,
    beta,
    containment_check,
    omega,
    resurgence_scan,
)

X, Y, Z = RING.gens()

TABLE_CELLS = (
    [(2, m, a) for m, a in zip(range(1, 9), (3, 6, 8, 10, 13, 15, 18, 20))]
    + [(3, m, a) for m, a in zip(range(1, 8), (4, 8, 9, 13, 17, 18, 22))]
    + [(4, m, a) for m, a in zip(range(2, 6), (10, 12, 16, 21))]
    + [(5, 3, 15)]
)


def _report(num: int, label: str, ok: bool) -> None:
    print(f"ACCEPTANCE {num} ({label}): {'PASS' if ok else 'FAIL'}")


def test_criterion_1_table_reproduction():
    started = time.monotonic()
    computed = {(n, m): alpha(symbolic_power(n, m)) for n, m, _ in TABLE_CELLS}
    elapsed = time.monotonic() - started
    ok = all(computed[(n, m)] == a for n, m, a in TABLE_CELLS) and elapsed <= 1800
    _report(1, "Table 1 reproduction, Groebner route", ok)
    assert elapsed <= 1800, f"table took {elapsed:.0f}s"
    for n, m, expected in TABLE_CELLS:
        assert computed[(n, m)] == expected, (n, m, computed[(n, m)], expected)
    for n, m, expected in TABLE_CELLS:
        assert predicted_alpha(n, m) == expected


def test_criterion_2_oracle_cross_validation():
    started = time.monotonic()
    cells = [(n, m) for n, m, _ in TABLE_CELLS if n in (2, 3) and m <= 5]
    mismatches = []
    for n, m in cells:
        a_g = alpha(symbolic_power(n, m))
        a_i = alpha_interp(FatPointScheme(fermat_points(n), m))
        if a_g != a_i:
            mismatches.append((n, m, a_g, a_i))
    elapsed = time.monotonic() - started
    ok = not mismatches and elapsed <= 600
    _report(2, "interpolation oracle agreement", ok)
    assert not mismatches, mismatches
    assert elapsed <= 600, f"oracle cross-validation took {elapsed:.0f}s"


def test_criterion_3_witness_verification():
    cases = [(5, 3), (5, 7), (4, 3), (4, 5), (3, 4), (3, 7)]
    cases += [(2, 2 * k) for k in (1, 2, 3)]
    cases += [(2, 2 * k + 1) for k in (0, 1, 2, 3)]
    failures = []
    for n, m in cases:
        w = witness(n, m)
        if w is None or not verify_witness(n, m):
            failures.append((n, m))
            continue
        if w.homogeneous_degree() != predicted_alpha(n, m):
            failures.append((n, m))
    _report(3, "witness verification at Table-1 degrees", not failures)
    assert not failures, failures


def test_criterion_4_containment_certificates():
    verdicts = []
    # (a) non-containments of the third symbolic power in the square
    for n in (3, 4):
        verdicts.append(containment_check(n, 3, 2, 0).holds is False)
    # (b) I_n^(2r) in m^r I_n^r
    for n in (2, 3):
        for r in (1, 2):
            verdicts.append(containment_check(n, 2 * r, r, r).holds is True)
    # (c) I_2^(2r-1) in m^(r-1) I_2^r
    for r in (1, 2, 3):
        verdicts.append(containment_check(2, 2 * r - 1, r, r - 1).holds is True)
    # (d) the two failures
    verdicts.append(containment_check(2, 4, 3, 3).holds is False)
    verdicts.append(containment_check(2, 6, 4, 4).holds is False)
    ok = all(verdicts)
    _report(4, "containment certificates", ok)
    assert ok, verdicts


def test_criterion_5_beta_and_omega():
    checks = []
    computed = []
    for m in (1, 2, 3):
        ideal = symbolic_power(3, m)
        computed.append(ideal)
        checks.append(beta(ideal) == 4 * m)
    for m in (1, 2, 3, 4):
        ideal = symbolic_power(2, m)
        computed.append(ideal)
        checks.append(beta(ideal) == 3 * m)
    checks.append(omega(fermat_ideal(3).ideal) == 4)
    for r in (1, 2, 3):
        power = ideal_power(fermat_ideal(2).ideal, r)
        computed.append(power)
        checks.append(omega(power) == 3 * r)
    for ideal in computed:
        a, b, w = alpha(ideal), beta(ideal), omega(ideal)
        checks.append(a <= b <= w)
    ok = all(checks)
    _report(5, "beta and omega values with alpha <= beta <= omega", ok)
    assert ok, checks


def test_criterion_6_symbolic_vs_ordinary_square():
    I24 = symbolic_power(2, 4)
    I22sq = ideal_power(symbolic_power(2, 2), 2)
    I26 = symbolic_power(2, 6)
    I23sq = ideal_power(symbolic_power(2, 3), 2)
    F = (X**2 - Y**2) ** 2 * (Y**2 - Z**2) * (Z**2 - X**2) * Z**2
    G = (X**2 - Y**2) ** 2 * (Y**2 - Z**2) ** 2 * (Z**2 - X**2) ** 2 * X * Y * Z
    results = [
        not ideal_equal(I24, I22sq),
        not ideal_equal(I26, I23sq),
        normal_form(F, I24.groebner_basis()).is_zero(),
        not normal_form(F, I22sq.groebner_basis()).is_zero(),
        normal_form(G, I26.groebner_basis()).is_zero(),
        not normal_form(G, I23sq.groebner_basis()).is_zero(),
    ]
    ok = all(results)
    _report(6, "symbolic fourth/sixth powers differ from ordinary squares", ok)
    assert ok, results


def test_criterion_7_scan_consistency():
    scan2 = resurgence_scan(2, 8, 6)
    bound2 = rat(6, 5)
    over2 = [(m, r) for m, r in scan2.non_containments if rat(m, r) > bound2]
    scan3 = resurgence_scan(3, 6, 4)
    els3 = [(m, r) for m, r in scan3.non_containments if m >= 2 * r]
    els2 = [(m, r) for m, r in scan2.non_containments if m >= 2 * r]
    ok = (
        not over2
        and not els2
        and not els3
        and (3, 2) in scan3.non_containments
    )
    _report(7, "resurgence scans respect 6/5 and the m >= 2r bound", ok)
    assert not over2, over2
    assert not els2 and not els3
    assert (3, 2) in scan3.non_containments


def test_criterion_8_property_suites():
    import test_properties as props

    started = time.monotonic()
    props.test_groebner_determinism_under_shuffle()
    props.test_all_spolynomials_reduce_to_zero()
    props.test_euler_relation()
    props.test_evaluation_homomorphism()
    props.test_symbolic_power_nesting()
    props.test_cyclic_symmetry_preserves_alpha()
    elapsed = time.monotonic() - started
    ok = elapsed <= 300
    _report(8, "randomized property suites", ok)
    assert ok, f"property suites took {elapsed:.0f}s"
