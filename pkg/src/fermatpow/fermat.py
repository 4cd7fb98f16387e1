"""Fermat point-configuration ideals, their symbolic powers and witnesses.

The degree-(n+1) ideal I_n = (x(y^n-z^n), y(z^n-x^n), z(x^n-y^n)) cuts out
n^2 + 3 points in P^2: the n^2 points with n-th root of unity coordinates
plus the three coordinate points.  Symbolic powers are built from the
complete-intersection decomposition

    I_n^(m) = K^m  cap  (x,y)^m  cap  (y,z)^m  cap  (z,x)^m

where K = (f, g) for n >= 3 and K = (x^2-y^2, y^2-z^2) for n = 2.  The
coordinate-ideal factors are monomial and intersect termwise; one
w-elimination against K^m finishes the job.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cyclo import CycloField
from .fields import QQ
from .groebner import (
    Ideal,
    ideal_equal,
    ideal_intersect,
    ideal_power,
    normal_form,
)
from .poly import Poly, PolyRing
from .textio import ParseError, parse_cyclo

RING = PolyRing(("x", "y", "z"), QQ)

_X, _Y, _Z = RING.gens()


@dataclass(frozen=True)
class FermatData:
    """The defining data of one Fermat configuration ideal."""

    n: int
    ideal: Ideal
    f: Poly
    g: Poly
    h: Poly
    K: Ideal
    coordinate_ideals: tuple[Ideal, Ideal, Ideal]


_fermat_cache: dict[int, FermatData] = {}


def maximal_ideal() -> Ideal:
    return Ideal(RING, [_X, _Y, _Z])


def coordinate_ideal(pair: tuple[int, int], m: int = 1) -> Ideal:
    """The m-th power of the coordinate ideal on the given variable pair,
    given directly by its monomial generators."""
    i, j = pair
    gens = []
    for k in range(m + 1):
        exps = [0, 0, 0]
        exps[i] = k
        exps[j] = m - k
        gens.append(RING.monomial(tuple(exps)))
    return Ideal(RING, gens)


def fermat_ideal(n: int) -> FermatData:
    """Generators, the pencil ideal K and the coordinate ideals for I_n."""
    if n < 2:
        raise ValueError("Fermat ideals need n >= 2")
    data = _fermat_cache.get(n)
    if data is not None:
        return data
    x, y, z = _X, _Y, _Z
    f = y**n - z**n
    g = z**n - x**n
    h = x**n - y**n
    ideal = Ideal(RING, [x * f, y * g, z * h])
    if n == 2:
        K = Ideal(RING, [x**2 - y**2, y**2 - z**2])
    else:
        K = Ideal(RING, [f, g])
    coords = (coordinate_ideal((0, 1)), coordinate_ideal((1, 2)), coordinate_ideal((2, 0)))
    data = FermatData(n, ideal, f, g, h, K, coords)
    _fermat_cache[n] = data
    return data


class PointConfigurationError(ValueError):
    pass


class PointConfiguration:
    """Projective points with cyclotomic coordinates (uniform conductor)."""

    def __init__(self, points, conductor: int):
        field = CycloField(conductor)
        normalized = []
        seen: dict = {}
        for idx, coords in enumerate(points):
            coords = tuple(field.coerce(c) for c in coords)
            if len(coords) != 3:
                raise PointConfigurationError(f"point {idx} is not a 3-tuple")
            if all(c.is_zero() for c in coords):
                raise PointConfigurationError(f"point {idx} is the zero vector")
            rep = _affine_representative(coords)
            if rep in seen:
                raise PointConfigurationError(
                    f"points {seen[rep]} and {idx} coincide up to scalar"
                )
            seen[rep] = idx
            normalized.append(coords)
        self.points = tuple(normalized)
        self.conductor = conductor

    def __len__(self):
        return len(self.points)

    def affine_representatives(self):
        return [_affine_representative(p) for p in self.points]

    def __repr__(self):
        return f"PointConfiguration({len(self.points)} points, conductor {self.conductor})"


def _affine_representative(coords) -> tuple:
    for c in coords:
        if not c.is_zero():
            inv = c.inverse()
            return tuple(inv * v for v in coords)
    raise PointConfigurationError("zero vector has no representative")


@dataclass(frozen=True)
class FatPointScheme:
    """A point configuration with a uniform vanishing multiplicity."""

    configuration: PointConfiguration
    multiplicity: int

    def __post_init__(self):
        if self.multiplicity < 1:
            raise ValueError("multiplicity must be >= 1")


_points_cache: dict[int, PointConfiguration] = {}


def fermat_points(n: int) -> PointConfiguration:
    """The n^2 + 3 points cut out by I_n, with conductor-n coordinates."""
    if n < 2:
        raise ValueError("Fermat configurations need n >= 2")
    config = _points_cache.get(n)
    if config is not None:
        return config
    field = CycloField(n)
    one, zero = field.one, field.zero
    zpowers = [field.zeta**k for k in range(n)]
    pts = [(one, zpowers[a], zpowers[b]) for a in range(n) for b in range(n)]
    pts += [(zero, zero, one), (zero, one, zero), (one, zero, zero)]
    config = PointConfiguration(pts, n)
    data = fermat_ideal(n)
    for gen in data.ideal.generators:
        for p in config.points:
            if not gen.evaluate(p).is_zero():
                raise AssertionError("Fermat generator fails to vanish on its configuration")
    _points_cache[n] = config
    return config


# -- symbolic powers ------------------------------------------------------

_symbolic_cache: dict[tuple[int, int], Ideal] = {}
_decomposition_checked: set[int] = set()


def coordinate_intersection(m: int) -> Ideal:
    """(x,y)^m cap (y,z)^m cap (z,x)^m, a termwise monomial intersection."""
    a = ideal_intersect(coordinate_ideal((0, 1), m), coordinate_ideal((1, 2), m))
    return ideal_intersect(a, coordinate_ideal((2, 0), m))


def symbolic_power(n: int, m: int, *, deadline: float | None = None) -> Ideal:
    """The m-th symbolic power of I_n via the intersection decomposition."""
    if n < 2:
        raise ValueError("n >= 2 required")
    if m < 1:
        raise ValueError("m >= 1 required")
    cached = _symbolic_cache.get((n, m))
    if cached is not None:
        return cached
    data = fermat_ideal(n)
    if m == 1:
        # Radical-ideal sanity anchor, run once per n.
        if n not in _decomposition_checked:
            inter = ideal_intersect(data.K, coordinate_intersection(1), deadline=deadline)
            if not ideal_equal(data.ideal, inter):
                raise AssertionError(f"I_{n} does not match its decomposition")
            _decomposition_checked.add(n)
        _symbolic_cache[(n, m)] = data.ideal
        return data.ideal
    Km = ideal_power(data.K, m)
    result = ideal_intersect(Km, coordinate_intersection(m), deadline=deadline)
    _symbolic_cache[(n, m)] = result
    return result


# -- closed forms ----------------------------------------------------------


def predicted_alpha(n: int, m: int) -> int:
    """Known closed-form least generating degree of I_n^(m)."""
    if n < 2 or m < 1:
        raise ValueError("need n >= 2, m >= 1")
    if n == 2:
        if m == 2:
            return 6
        k, r = divmod(m, 2)
        return 5 * k + (3 if r else 0)
    if n == 3:
        k, r = divmod(m, 3)
        return 9 * k + (0, 4, 8)[r]
    if m == 1:
        return n + 1
    if m == 2:
        return 2 * (n + 1)
    if n == 4:
        return 21 if m == 5 else 4 * m
    return n * m


def predicted_waldschmidt(n: int):
    from .fields import rat

    return rat(5, 2) if n == 2 else rat(n)


def predicted_resurgence(n: int):
    from .fields import rat

    return rat(6, 5) if n == 2 else rat(3, 2)


def predicted_beta(n: int, m: int) -> int:
    return m * (n + 1) if n >= 3 else 3 * m


# -- witnesses -------------------------------------------------------------


def witness(n: int, m: int) -> Poly | None:
    """An explicit degree-alpha member of I_n^(m) when a closed-form
    construction covers (n, m); None otherwise."""
    if n < 2 or m < 1:
        raise ValueError("need n >= 2, m >= 1")
    data = fermat_ideal(n)
    x, y, z = _X, _Y, _Z
    f, g, h = data.f, data.g, data.h
    if n == 2:
        A, B, C = x**2 - y**2, y**2 - z**2, z**2 - x**2
        r = m % 4
        k = m // 4
        if r == 0:
            return A ** (2 * k) * B**k * C**k * z ** (2 * k)
        if r == 1:
            return A ** (2 * k + 1) * B**k * C**k * z ** (2 * k + 1)
        if r == 2:
            if k == 0:
                return (x * B) ** 2
            return A ** (2 * k) * B ** (k + 1) * C ** (k + 1) * x * y * z ** (2 * k - 1)
        return A ** (2 * k + 1) * B ** (k + 1) * C ** (k + 1) * x * y * z ** (2 * k)
    if m == 1:
        return z * h
    if m == 2:
        return (x * f) ** 2
    if n == 3:
        if m % 3 == 1:
            t = (m - 1) // 3
            return f**t * g**t * h ** (t + 1) * z
        return None
    if n == 4 and m == 5:
        return z * f**2 * g * h**2
    if 3 <= m <= n:
        return f * g * h * f ** (m - 3)
    # m > n: unique k >= 2, 0 <= a <= n-1 with m = k*n - a.
    k = -(-m // n)
    a = k * n - m
    e = k * (n - 3) - a
    if e < 0:
        return None
    return (f * g * h) ** k * f**e


def witness_component_report(n: int, m: int) -> dict:
    """Membership of the witness in each intersection factor, its degree,
    and the expected degree; raises if no witness covers (n, m)."""
    w = witness(n, m)
    if w is None:
        raise ValueError(f"no closed-form witness covers (n={n}, m={m})")
    data = fermat_ideal(n)
    Km = ideal_power(data.K, m) if m > 1 else data.K
    in_K = normal_form(w, Km.groebner_basis()).is_zero()
    pairs = {"xy": (0, 1), "yz": (1, 2), "zx": (2, 0)}
    coords = {}
    for name, (i, j) in pairs.items():
        coords[name] = all(e[i] + e[j] >= m for e in w.terms)
    degree = w.homogeneous_degree()
    return {
        "witness": w,
        "degree": degree,
        "expected_degree": predicted_alpha(n, m),
        "in_pencil_power": in_K,
        "in_coordinate_powers": coords,
    }


def verify_witness(n: int, m: int) -> bool:
    """True iff the witness lies in every factor of the decomposition and
    has the predicted least degree."""
    report = witness_component_report(n, m)
    return (
        report["in_pencil_power"]
        and all(report["in_coordinate_powers"].values())
        and report["degree"] == report["expected_degree"]
    )


# -- point-configuration files ---------------------------------------------


class PointFileError(ValueError):
    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


def parse_point_file(text: str) -> PointConfiguration:
    """Point-configuration ingestion format: a ``conductor: n`` header line,
    then one point per line with comma-separated cyclotomic coordinates;
    ``#`` starts a comment."""
    conductor = None
    points = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if conductor is None:
            name, _, value = line.partition(":")
            if name.strip() != "conductor":
                raise PointFileError(line_no, "expected 'conductor: n' header line")
            try:
                conductor = int(value.strip())
            except ValueError:
                raise PointFileError(line_no, f"bad conductor {value.strip()!r}") from None
            if conductor < 1:
                raise PointFileError(line_no, "conductor must be >= 1")
            continue
        fields = [f.strip() for f in line.split(",")]
        if len(fields) != 3:
            raise PointFileError(line_no, f"expected 3 coordinates, got {len(fields)}")
        coords = []
        for field_text in fields:
            try:
                coords.append(parse_cyclo(field_text, conductor))
            except ParseError as exc:
                raise PointFileError(line_no, f"bad coordinate {field_text!r}: {exc}") from None
        points.append(tuple(coords))
    if conductor is None:
        raise PointFileError(0, "missing 'conductor: n' header line")
    if not points:
        raise PointFileError(0, "no points in file")
    try:
        return PointConfiguration(points, conductor)
    except PointConfigurationError as exc:
        raise PointFileError(0, str(exc)) from None


def load_point_file(path: str) -> PointConfiguration:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_point_file(fh.read())
