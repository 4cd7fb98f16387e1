"""Generating-degree invariants, containment certificates and scans.

alpha is the least degree of a nonzero form in an ideal, omega the largest
degree in a minimal generating set, and beta the least degree whose graded
piece has a zero-dimensional common zero locus (equivalently contains a
length-two regular sequence).  Containment certificates reduce every
generator of a symbolic power against the Groebner basis of the target
ideal; finite Waldschmidt/resurgence scans report bounds annotated with the
known closed forms, never exact limits.
"""

from __future__ import annotations

from dataclasses import dataclass

from .fermat import (
    FatPointScheme,
    fermat_ideal,
    fermat_points,
    maximal_ideal,
    predicted_resurgence,
    predicted_waldschmidt,
    symbolic_power,
)
from .fields import rat
from .groebner import (
    Ideal,
    hilbert_dim,
    ideal_power,
    ideal_product,
    monomial_ideal_dimension,
    normal_form,
)
from .interpolation import alpha_interp
from .poly import GREVLEX, Poly, graded_component_basis
from .textio import render_poly, render_rational


class OracleDisagreement(RuntimeError):
    """The Groebner and interpolation routes disagree on alpha."""

    def __init__(self, n, m, groebner_value, interpolation_value):
        super().__init__(
            f"alpha oracle disagreement at (n={n}, m={m}): "
            f"groebner={groebner_value}, interpolation={interpolation_value}"
        )
        self.groebner_value = groebner_value
        self.interpolation_value = interpolation_value


def alpha(ideal: Ideal, *, deadline: float | None = None) -> int:
    """Least degree of a nonzero homogeneous element: the minimum degree in
    the reduced grevlex basis."""
    return ideal.min_degree(deadline=deadline)


def alpha_of(n: int, m: int, method: str = "groebner", *, deadline: float | None = None) -> int:
    if method == "groebner":
        return alpha(symbolic_power(n, m, deadline=deadline))
    if method == "interpolation":
        return alpha_interp(FatPointScheme(fermat_points(n), m))
    if method == "both":
        a_g = alpha(symbolic_power(n, m, deadline=deadline))
        a_i = alpha_interp(FatPointScheme(fermat_points(n), m))
        if a_g != a_i:
            raise OracleDisagreement(n, m, a_g, a_i)
        return a_g
    raise ValueError(f"unknown method {method!r}")


def minimal_generator_degrees(ideal: Ideal) -> list[int]:
    """Degrees of a minimal homogeneous generating set (with multiplicity),
    via mu_t = dim [I]_t - dim [m*I]_t for t up to the reduced-basis degree."""
    low = ideal.min_degree()
    high = ideal.max_basis_degree()
    ambient_max = Ideal(ideal.ring, ideal.ring.gens())
    shifted = ideal_product(ambient_max, ideal)
    degrees = []
    for t in range(low, high + 1):
        mu = hilbert_dim(ideal, t) - hilbert_dim(shifted, t)
        if mu < 0:
            raise AssertionError("negative minimal-generator count")
        degrees.extend([t] * mu)
    return degrees


def omega(ideal: Ideal) -> int:
    """Maximum degree in a minimal generating set."""
    return max(minimal_generator_degrees(ideal))


def beta(ideal: Ideal) -> int:
    """Least t such that the degree-t graded piece cuts out a
    zero-dimensional projective locus; terminates by beta <= omega."""
    low = ideal.min_degree()
    high = omega(ideal)
    for t in range(low, high + 1):
        component = graded_component_basis(ideal.groebner_basis(), t)
        if not component:
            continue
        truncation = Ideal(ideal.ring, component)
        lts = truncation.leading_exponents()
        if monomial_ideal_dimension(lts) <= 1:
            return t
    raise AssertionError("no zero-dimensional graded piece up to omega")


@dataclass
class InvariantReport:
    n: int
    m: int
    alpha: int
    alpha_method: str
    omega: int | None = None
    beta: int | None = None
    minimal_generator_degrees: list[int] | None = None

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "m": self.m,
            "alpha": self.alpha,
            "alpha_method": self.alpha_method,
            "omega": self.omega,
            "beta": self.beta,
            "minimal_generator_degrees": self.minimal_generator_degrees,
        }


def invariant_report(
    n: int,
    m: int,
    method: str = "groebner",
    *,
    with_omega: bool = False,
    with_beta: bool = False,
    deadline: float | None = None,
) -> InvariantReport:
    a = alpha_of(n, m, method, deadline=deadline)
    report = InvariantReport(n, m, a, method)
    if with_omega or with_beta:
        ideal = symbolic_power(n, m, deadline=deadline)
        degrees = minimal_generator_degrees(ideal)
        report.minimal_generator_degrees = degrees
        report.omega = max(degrees)
        if with_beta:
            report.beta = beta(ideal)
            if not (report.alpha <= report.beta <= report.omega):
                raise AssertionError("alpha <= beta <= omega violated")
    return report


# -- containment ------------------------------------------------------------


@dataclass
class ContainmentCertificate:
    n: int
    m: int
    r: int
    a: int
    holds: bool
    failing_generator: Poly | None
    degree_criterion_used: bool

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "m": self.m,
            "r": self.r,
            "a": self.a,
            "holds": self.holds,
            "failing_generator": (
                render_poly(self.failing_generator) if self.failing_generator is not None else None
            ),
            "degree_criterion_used": self.degree_criterion_used,
        }


def _canonical_generators(ideal: Ideal):
    return sorted(
        ideal.generators,
        key=lambda p: (p.homogeneous_degree(), GREVLEX.key(p.leading_term(GREVLEX)[0])),
    )


def containment_check(
    n: int, m: int, r: int, a: int = 0, *, deadline: float | None = None
) -> ContainmentCertificate:
    """Does I_n^(m) lie inside m^a * I_n^r?  Every generator of the symbolic
    power is reduced against the target's basis; the first failing generator
    (degree-then-order enumeration) certifies a non-containment."""
    if m < 1 or r < 1:
        raise ValueError("need m >= 1 and r >= 1")
    if a < 0:
        raise ValueError("need a >= 0")
    data = fermat_ideal(n)
    power = ideal_power(data.ideal, r)
    target = power if a == 0 else ideal_product(ideal_power(maximal_ideal(), a), power)
    basis = target.groebner_basis(deadline=deadline)
    sym = symbolic_power(n, m, deadline=deadline)
    failing = None
    for gen in _canonical_generators(sym):
        if not normal_form(gen, basis).is_zero():
            failing = gen
            break
    holds = failing is None
    criterion = False
    if holds and a > 0:
        criterion = sym.min_degree() >= a + omega(power)
    return ContainmentCertificate(n, m, r, a, holds, failing, criterion)


def chudnovsky_check(n: int, sample_max_m: int) -> bool:
    """alpha(I^(m))/m >= (alpha(I)+1)/2 on all sampled m (N = 2)."""
    if sample_max_m < 1:
        raise ValueError("sample bound must be >= 1")
    bound = rat(alpha(symbolic_power(n, 1)) + 1, 2)
    return all(
        rat(alpha(symbolic_power(n, m)), m) >= bound for m in range(1, sample_max_m + 1)
    )


def demailly_check(n: int, m: int, sample_max_k: int) -> bool:
    """alpha(I^(k))/k >= (alpha(I^(m))+1)/(m+1) on all sampled k."""
    if m < 1:
        raise ValueError("m must be >= 1")
    bound = rat(alpha(symbolic_power(n, m)) + 1, m + 1)
    return all(
        rat(alpha(symbolic_power(n, k)), k) >= bound for k in range(1, sample_max_k + 1)
    )


@dataclass
class WaldschmidtSample:
    n: int
    samples: list  # (m, alpha, ratio)
    inf_so_far: object
    expected: object

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "samples": [
                {"m": m, "alpha": a, "ratio": render_rational(q)} for m, a, q in self.samples
            ],
            "inf_so_far": render_rational(self.inf_so_far),
            "expected": render_rational(self.expected),
        }


def waldschmidt_table(n: int, max_m: int) -> WaldschmidtSample:
    """Finite samples of alpha(I^(m))/m with the running infimum; the known
    closed-form value is attached for consistency checking, never asserted."""
    if max_m < 1:
        raise ValueError("max_m must be >= 1")
    samples = []
    inf_so_far = None
    for m in range(1, max_m + 1):
        a = alpha(symbolic_power(n, m))
        ratio = rat(a, m)
        samples.append((m, a, ratio))
        if inf_so_far is None or ratio < inf_so_far:
            inf_so_far = ratio
    return WaldschmidtSample(n, samples, inf_so_far, predicted_waldschmidt(n))


@dataclass
class ResurgenceScan:
    n: int
    max_m: int
    max_r: int
    results: list  # (m, r, holds)
    non_containments: list  # (m, r)
    max_ratio: object  # rational or None
    expected: object

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "max_m": self.max_m,
            "max_r": self.max_r,
            "results": [
                {"m": m, "r": r, "holds": holds} for m, r, holds in self.results
            ],
            "non_containments": [{"m": m, "r": r} for m, r in self.non_containments],
            "max_ratio": render_rational(self.max_ratio) if self.max_ratio is not None else None,
            "expected_resurgence": render_rational(self.expected),
        }


def resurgence_scan(
    n: int, max_m: int, max_r: int, *, deadline: float | None = None
) -> ResurgenceScan:
    """Ordinary-power containment over the whole grid (a = 0); the maximal
    failing ratio m/r is a finite lower bound for the resurgence."""
    if max_m < 1 or max_r < 1:
        raise ValueError("scan bounds must be >= 1")
    data = fermat_ideal(n)
    sym_gens = {
        m: _canonical_generators(symbolic_power(n, m, deadline=deadline))
        for m in range(1, max_m + 1)
    }
    results = []
    non_containments = []
    for r in range(1, max_r + 1):
        basis = ideal_power(data.ideal, r).groebner_basis(deadline=deadline)
        for m in range(1, max_m + 1):
            holds = all(normal_form(g, basis).is_zero() for g in sym_gens[m])
            results.append((m, r, holds))
            if not holds:
                non_containments.append((m, r))
    max_ratio = None
    for m, r in non_containments:
        q = rat(m, r)
        if max_ratio is None or q > max_ratio:
            max_ratio = q
    return ResurgenceScan(
        n, max_m, max_r, results, non_containments, max_ratio, predicted_resurgence(n)
    )
