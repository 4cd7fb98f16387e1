"""Exact cyclotomic-field arithmetic.

Elements of Q(zeta_n) are residues modulo the n-th cyclotomic polynomial
Phi_n, stored as coefficient vectors of length phi(n) over the rationals.
Reduction modulo Phi_n (not zeta^n - 1) keeps representations unique and
makes the arithmetic honest field arithmetic.
"""

from __future__ import annotations

from math import gcd

from .fields import QQ, RAT_ONE, RAT_ZERO, rat


class ConductorMismatch(ValueError):
    """Arithmetic between cyclotomic numbers of different conductors."""


def euler_phi(n: int) -> int:
    if n < 1:
        raise ValueError("conductor must be >= 1")
    result, m, p = n, n, 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


def _poly_div_exact(num: list[int], den: list[int]) -> list[int]:
    # Exact division of dense integer polynomials, constant term first.
    num = list(num)
    dn, dd = len(num) - 1, len(den) - 1
    quot = [0] * (dn - dd + 1)
    for k in range(dn - dd, -1, -1):
        c = num[dd + k]
        if c % den[dd]:
            raise ArithmeticError("non-exact polynomial division")
        q = c // den[dd]
        quot[k] = q
        if q:
            for i, d in enumerate(den):
                num[i + k] -= q * d
    if any(num):
        raise ArithmeticError("non-exact polynomial division")
    return quot


_cyclo_coeff_cache: dict[int, list[int]] = {}


def cyclotomic_coeffs(n: int) -> list[int]:
    """Dense integer coefficients of Phi_n, constant term first."""
    if n < 1:
        raise ValueError("conductor must be >= 1")
    cached = _cyclo_coeff_cache.get(n)
    if cached is not None:
        return cached
    poly = [-1] + [0] * (n - 1) + [1]  # t^n - 1
    for d in range(1, n):
        if n % d == 0:
            poly = _poly_div_exact(poly, cyclotomic_coeffs(d))
    _cyclo_coeff_cache[n] = poly
    return poly


class CycloField:
    """Descriptor for Q(zeta_n); conductor 1 embeds the rationals."""

    _registry: dict[int, "CycloField"] = {}

    def __new__(cls, conductor: int):
        inst = cls._registry.get(conductor)
        if inst is None:
            inst = super().__new__(cls)
            inst._init(conductor)
            cls._registry[conductor] = inst
        return inst

    def _init(self, conductor: int) -> None:
        self.conductor = conductor
        self.modulus = cyclotomic_coeffs(conductor)
        self.degree = len(self.modulus) - 1
        phi = self.degree
        # t^k mod Phi for k = phi .. 2*phi-2, as integer rows.
        rows = []
        row = [-c for c in self.modulus[:phi]]
        rows.append(list(row))
        for _ in range(phi - 2):
            top = row[phi - 1]
            row = [0] + row[: phi - 1]
            if top:
                row = [a + top * b for a, b in zip(row, rows[0])]
            rows.append(list(row))
        self._reduction_rows = rows

    @property
    def zero(self) -> "CycloNumber":
        return CycloNumber(self.conductor, (RAT_ZERO,) * self.degree)

    @property
    def one(self) -> "CycloNumber":
        coeffs = [RAT_ZERO] * self.degree
        coeffs[0] = RAT_ONE
        return CycloNumber(self.conductor, tuple(coeffs))

    @property
    def zeta(self) -> "CycloNumber":
        if self.degree == 1:
            # Residue of t modulo Phi_1 = t - 1 or Phi_2 = t + 1.
            return CycloNumber(self.conductor, (RAT_ONE if self.conductor == 1 else -RAT_ONE,))
        coeffs = [RAT_ZERO] * self.degree
        coeffs[1] = RAT_ONE
        return CycloNumber(self.conductor, tuple(coeffs))

    def coerce(self, value) -> "CycloNumber":
        if isinstance(value, CycloNumber):
            if value.conductor == self.conductor:
                return value
            if self.conductor % value.conductor == 0:
                return value.promote(self.conductor)
            q = value.as_rational()
            if q is not None:
                return self.from_rational(q)
            raise ConductorMismatch(
                f"cannot coerce conductor {value.conductor} into conductor {self.conductor}"
            )
        if isinstance(value, int) or isinstance(value, type(RAT_ZERO)):
            return self.from_rational(rat(value))
        raise TypeError(f"cannot coerce {value!r} into Q(zeta_{self.conductor})")

    def from_rational(self, q) -> "CycloNumber":
        coeffs = [RAT_ZERO] * self.degree
        coeffs[0] = rat(q)
        return CycloNumber(self.conductor, tuple(coeffs))

    def from_coeffs(self, coeffs) -> "CycloNumber":
        coeffs = [rat(c) for c in coeffs]
        if len(coeffs) != self.degree:
            raise ValueError(f"expected {self.degree} coefficients, got {len(coeffs)}")
        return CycloNumber(self.conductor, tuple(coeffs))

    def reduce_vector(self, conv) -> "CycloNumber":
        """Reduce a length <= 2*phi-1 coefficient vector modulo Phi_n."""
        phi = self.degree
        out = list(conv[:phi])
        if len(out) < phi:
            out += [RAT_ZERO] * (phi - len(out))
        rows = self._reduction_rows
        for k in range(phi, len(conv)):
            c = conv[k]
            if c:
                row = rows[k - phi]
                out = [a + c * b for a, b in zip(out, row)]
        return CycloNumber(self.conductor, tuple(rat(c) for c in out))

    def __repr__(self):
        return f"QQ(zeta_{self.conductor})"

    def __eq__(self, other):
        return isinstance(other, CycloField) and other.conductor == self.conductor

    def __hash__(self):
        return hash(("cyclo", self.conductor))


class CycloNumber:
    """Immutable element of Q(zeta_n)."""

    __slots__ = ("conductor", "coeffs")

    def __init__(self, conductor: int, coeffs: tuple):
        self.conductor = conductor
        self.coeffs = coeffs

    @property
    def field(self) -> CycloField:
        return CycloField(self.conductor)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __bool__(self) -> bool:
        return any(self.coeffs)

    def as_rational(self):
        """The value as a rational, or None when it is not rational."""
        if any(self.coeffs[1:]):
            return None
        return self.coeffs[0]

    def promote(self, conductor: int) -> "CycloNumber":
        """Image in Q(zeta_m) for a multiple m of the conductor."""
        if conductor == self.conductor:
            return self
        if conductor % self.conductor:
            raise ConductorMismatch(
                f"{conductor} is not a multiple of conductor {self.conductor}"
            )
        target = CycloField(conductor)
        step = conductor // self.conductor
        z = target.zeta
        acc = target.zero
        for i, c in enumerate(self.coeffs):
            if c:
                acc = acc + z ** (i * step) * c
        return acc

    def _match(self, other) -> tuple["CycloNumber", "CycloNumber"]:
        if isinstance(other, CycloNumber):
            if other.conductor != self.conductor:
                raise ConductorMismatch(
                    f"conductor {self.conductor} vs {other.conductor}"
                )
            return self, other
        if isinstance(other, int) or isinstance(other, type(RAT_ZERO)):
            return self, self.field.from_rational(rat(other))
        return self, NotImplemented  # type: ignore[return-value]

    def __add__(self, other):
        a, b = self._match(other)
        if b is NotImplemented:
            return NotImplemented
        return CycloNumber(a.conductor, tuple(x + y for x, y in zip(a.coeffs, b.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return CycloNumber(self.conductor, tuple(-x for x in self.coeffs))

    def __sub__(self, other):
        a, b = self._match(other)
        if b is NotImplemented:
            return NotImplemented
        return CycloNumber(a.conductor, tuple(x - y for x, y in zip(a.coeffs, b.coeffs)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, CycloNumber):
            if other.conductor != self.conductor:
                raise ConductorMismatch(
                    f"conductor {self.conductor} vs {other.conductor}"
                )
            xs, ys = self.coeffs, other.coeffs
            phi = len(xs)
            conv = [RAT_ZERO] * (2 * phi - 1)
            for i, x in enumerate(xs):
                if x:
                    for j, y in enumerate(ys):
                        if y:
                            conv[i + j] += x * y
            return self.field.reduce_vector(conv)
        if isinstance(other, int) or isinstance(other, type(RAT_ZERO)):
            q = rat(other)
            return CycloNumber(self.conductor, tuple(x * q for x in self.coeffs))
        return NotImplemented

    __rmul__ = __mul__

    def inverse(self) -> "CycloNumber":
        """Multiplicative inverse; raises ZeroDivisionError on zero."""
        if self.is_zero():
            raise ZeroDivisionError("inversion of zero cyclotomic number")
        # Extended Euclid over QQ[t] for (self mod Phi, Phi).
        phi_poly = [rat(c) for c in self.field.modulus]
        a = list(self.coeffs)
        r0, r1 = phi_poly, _trim(a)
        s0, s1 = [RAT_ZERO], [RAT_ONE]
        while _deg(r1) > 0:
            q, r = _divmod_q(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _sub_q(s0, _mul_q(q, s1))
        if _deg(r1) != 0:
            raise ArithmeticError("Phi_n not coprime to nonzero residue")
        inv_lead = 1 / r1[0]
        coeffs = [c * inv_lead for c in s1]
        coeffs += [RAT_ZERO] * (self.field.degree - len(coeffs))
        return CycloNumber(self.conductor, tuple(coeffs[: self.field.degree]))

    def __truediv__(self, other):
        a, b = self._match(other)
        if b is NotImplemented:
            return NotImplemented
        return a * b.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result = self.field.one
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, CycloNumber):
            if other.conductor == self.conductor:
                return self.coeffs == other.coeffs
            m = self.conductor * other.conductor // gcd(self.conductor, other.conductor)
            return self.promote(m).coeffs == other.promote(m).coeffs
        if isinstance(other, int) or isinstance(other, type(RAT_ZERO)):
            q = self.as_rational()
            return q is not None and q == other
        return NotImplemented

    def __hash__(self):
        q = self.as_rational()
        if q is not None:
            return hash(q)
        return hash((self.conductor, self.coeffs))

    def __repr__(self):
        from .textio import render_cyclo

        return render_cyclo(self)


def _trim(coeffs):
    while coeffs and not coeffs[-1]:
        coeffs = coeffs[:-1]
    return list(coeffs)


def _deg(coeffs):
    return len(coeffs) - 1


def _divmod_q(num, den):
    num = list(num)
    dd = _deg(den)
    quot = [RAT_ZERO] * max(_deg(num) - dd + 1, 0)
    for k in range(_deg(num) - dd, -1, -1):
        q = num[dd + k] / den[dd]
        quot[k] = q
        if q:
            for i, d in enumerate(den):
                num[i + k] -= q * d
    return _trim(quot), _trim(num)


def _mul_q(a, b):
    out = [RAT_ZERO] * (len(a) + len(b) - 1) if a and b else []
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim(out)


def _sub_q(a, b):
    n = max(len(a), len(b))
    a = list(a) + [RAT_ZERO] * (n - len(a))
    b = list(b) + [RAT_ZERO] * (n - len(b))
    return _trim([x - y for x, y in zip(a, b)])


def zeta(conductor: int) -> CycloNumber:
    """Primitive conductor-th root of unity as a cyclotomic number."""
    return CycloField(conductor).zeta


def cyclo_add(a: CycloNumber, b: CycloNumber) -> CycloNumber:
    return a + b


def cyclo_mul(a: CycloNumber, b: CycloNumber) -> CycloNumber:
    return a * b


def cyclo_inv(a: CycloNumber) -> CycloNumber:
    return a.inverse()


def promote_pair(a: CycloNumber, b: CycloNumber) -> tuple[CycloNumber, CycloNumber]:
    """Promote both arguments to their least common conductor."""
    m = a.conductor * b.conductor // gcd(a.conductor, b.conductor)
    return a.promote(m), b.promote(m)
