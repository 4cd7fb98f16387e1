"""Exact rational arithmetic and the coefficient-field descriptors.

Every coefficient in this package is either a rational number or a
cyclotomic-field element.  Rationals are gmpy2.mpq when gmpy2 is importable
(about an order of magnitude faster) and fractions.Fraction otherwise; both
keep the canonical reduced form (positive denominator, gcd 1, 0 == 0/1).
"""

from __future__ import annotations

try:
    from gmpy2 import mpq as _mpq, mpz as _mpz  # type: ignore

    HAVE_GMPY2 = True
except ImportError:  # pragma: no cover - exercised only without gmpy2
    from fractions import Fraction as _mpq

    _mpz = int
    HAVE_GMPY2 = False


def rat(numerator=0, denominator=1):
    """Exact rational in canonical form."""
    return _mpq(numerator, denominator)


def big(n=0):
    """Arbitrary-precision integer (gmpy2.mpz when available)."""
    return _mpz(n)


RAT_ZERO = rat(0)
RAT_ONE = rat(1)


def rat_parts(q):
    """(numerator, denominator) of a rational, denominator > 0."""
    return q.numerator, q.denominator


def is_rational(value) -> bool:
    return isinstance(value, (int, type(RAT_ZERO)))


class RationalField:
    """Descriptor for the rational coefficient field."""

    conductor = 1
    degree = 1

    def coerce(self, value):
        if isinstance(value, type(RAT_ZERO)):
            return value
        if isinstance(value, int):
            return rat(value)
        # CycloNumber of any conductor that happens to be rational.
        as_rat = getattr(value, "as_rational", None)
        if as_rat is not None:
            q = as_rat()
            if q is not None:
                return q
        raise TypeError(f"cannot coerce {value!r} into QQ")

    @property
    def zero(self):
        return RAT_ZERO

    @property
    def one(self):
        return RAT_ONE

    def __repr__(self):
        return "QQ"

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")


QQ = RationalField()
