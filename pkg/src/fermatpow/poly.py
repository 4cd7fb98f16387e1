"""Sparse multivariate polynomials over an exact coefficient field.

Monomials are exponent tuples, terms live in a dict, and every operation is
pure: polynomials are immutable values.  The coefficient field is a ring-level
tag (QQ or a cyclotomic field); mixing fields or rings is a hard error, with
explicit promotion instead of silent coercion.
"""

from __future__ import annotations

from itertools import product

from .cyclo import CycloField, CycloNumber, ConductorMismatch
from .fields import QQ, rat
from .linalg import rref


class RingMismatch(ValueError):
    """Operands live in different polynomial rings."""


class MonomialOrder:
    """A monomial order: graded reverse lexicographic, lexicographic, or a
    block elimination order on the first ``block`` variables."""

    __slots__ = ("kind", "block")

    def __init__(self, kind: str, block: int = 0):
        if kind not in ("grevlex", "lex", "elim"):
            raise ValueError(f"unknown monomial order {kind!r}")
        self.kind = kind
        self.block = block

    def key(self, exps):
        """Sort key; larger key = larger monomial."""
        if self.kind == "grevlex":
            return _grevlex_key(exps)
        if self.kind == "lex":
            return tuple(exps)
        return _grevlex_key(exps[: self.block]) + _grevlex_key(exps[self.block :])

    @property
    def degree_compatible(self) -> bool:
        return self.kind == "grevlex"

    @property
    def name(self) -> str:
        return self.kind if self.kind != "elim" else f"elim{self.block}"

    def __repr__(self):
        return f"MonomialOrder({self.name})"

    def __eq__(self, other):
        return (
            isinstance(other, MonomialOrder)
            and other.kind == self.kind
            and other.block == self.block
        )

    def __hash__(self):
        return hash((self.kind, self.block))


def _grevlex_key(exps):
    out = []
    s = 0
    for e in exps:
        s += e
        out.append(s)
    out.reverse()
    return tuple(out)


GREVLEX = MonomialOrder("grevlex")
LEX = MonomialOrder("lex")


def elimination_order(block: int = 1) -> MonomialOrder:
    return MonomialOrder("elim", block)


def order_from_name(name: str) -> MonomialOrder:
    if name == "grevlex":
        return GREVLEX
    if name == "lex":
        return LEX
    if name.startswith("elim"):
        return elimination_order(int(name[4:]))
    raise ValueError(f"unknown monomial order {name!r}")


class PolyRing:
    """Variable list plus coefficient-field descriptor."""

    __slots__ = ("variables", "field", "nvars")

    def __init__(self, variables, field=QQ):
        self.variables = tuple(variables)
        if len(set(self.variables)) != len(self.variables):
            raise ValueError("duplicate variable names")
        self.field = field
        self.nvars = len(self.variables)

    def __eq__(self, other):
        return (
            isinstance(other, PolyRing)
            and other.variables == self.variables
            and other.field == self.field
        )

    def __hash__(self):
        return hash((self.variables, self.field))

    def __repr__(self):
        return f"PolyRing({','.join(self.variables)}; {self.field!r})"

    @property
    def zero(self) -> "Poly":
        return Poly(self, {})

    @property
    def one(self) -> "Poly":
        return Poly(self, {(0,) * self.nvars: self.field.one})

    def var(self, name: str) -> "Poly":
        idx = self.variables.index(name)
        exps = [0] * self.nvars
        exps[idx] = 1
        return Poly(self, {tuple(exps): self.field.one})

    def gens(self) -> tuple["Poly", ...]:
        return tuple(self.var(v) for v in self.variables)

    def monomial(self, exps, coeff=1) -> "Poly":
        return Poly(self, {tuple(exps): self.field.coerce(coeff)})

    def from_terms(self, terms) -> "Poly":
        acc: dict = {}
        for exps, coeff in terms:
            exps = tuple(exps)
            c = self.field.coerce(coeff)
            prev = acc.get(exps)
            c = c + prev if prev is not None else c
            if c:
                acc[exps] = c
            elif prev is not None:
                del acc[exps]
        return Poly(self, acc)


class Poly:
    """Immutable sparse polynomial; ``terms`` maps exponent tuples to nonzero
    coefficients."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: PolyRing, terms: dict):
        self.ring = ring
        self.terms = terms

    # -- queries ------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def total_degree(self) -> int:
        """Maximal term degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def is_homogeneous(self) -> bool:
        degrees = {sum(e) for e in self.terms}
        return len(degrees) <= 1

    def homogeneous_degree(self) -> int:
        degrees = {sum(e) for e in self.terms}
        if len(degrees) != 1:
            raise ValueError("polynomial is not homogeneous")
        return degrees.pop()

    def sorted_terms(self, order: MonomialOrder = GREVLEX):
        key = order.key
        return sorted(self.terms.items(), key=lambda t: key(t[0]), reverse=True)

    def leading_term(self, order: MonomialOrder = GREVLEX):
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        key = order.key
        exps = max(self.terms, key=key)
        return exps, self.terms[exps]

    # -- arithmetic ---------------------------------------------------

    def _check(self, other) -> "Poly":
        if isinstance(other, Poly):
            if other.ring != self.ring:
                raise RingMismatch(f"{self.ring!r} vs {other.ring!r}")
            return other
        # scalars
        return Poly(
            self.ring,
            {(0,) * self.ring.nvars: c} if (c := self.ring.field.coerce(other)) else {},
        )

    def __add__(self, other):
        other = self._check(other)
        big, small = (self.terms, other.terms)
        out = dict(big)
        for exps, c in small.items():
            prev = out.get(exps)
            v = c + prev if prev is not None else c
            if v:
                out[exps] = v
            elif prev is not None:
                del out[exps]
        return Poly(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.ring, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._check(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Poly):
            c = self.ring.field.coerce(other)
            if not c:
                return self.ring.zero
            return Poly(self.ring, {e: v * c for e, v in self.terms.items()})
        other = self._check(other)
        if len(self.terms) < len(other.terms):
            a, b = self.terms, other.terms
        else:
            a, b = other.terms, self.terms
        out: dict = {}
        for e1, c1 in a.items():
            for e2, c2 in b.items():
                exps = tuple(x + y for x, y in zip(e1, e2))
                c = c1 * c2
                prev = out.get(exps)
                v = c + prev if prev is not None else c
                if v:
                    out[exps] = v
                elif prev is not None:
                    del out[exps]
        return Poly(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative polynomial power")
        result = self.ring.one
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, Poly):
            return other.ring == self.ring and other.terms == self.terms
        try:
            other = self._check(other)
        except (TypeError, RingMismatch):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash((self.ring, frozenset(self.terms.items())))

    # -- calculus and evaluation ---------------------------------------

    def partial_derivative(self, multi_index) -> "Poly":
        """Iterated formal partial derivative by the given multi-index."""
        multi_index = tuple(multi_index)
        if len(multi_index) != self.ring.nvars:
            raise ValueError("multi-index length must match variable count")
        out: dict = {}
        for exps, c in self.terms.items():
            if any(d > e for d, e in zip(multi_index, exps)):
                continue
            factor = 1
            new_exps = []
            for e, d in zip(exps, multi_index):
                for j in range(d):
                    factor *= e - j
                new_exps.append(e - d)
            v = c * factor
            if v:
                out[tuple(new_exps)] = v
        return Poly(self.ring, out)

    def evaluate(self, point):
        """Exact evaluation at a projective/affine point of cyclotomic
        (or rational) coordinates; returns a CycloNumber."""
        if len(point) != self.ring.nvars:
            raise ValueError("point length must match variable count")
        coords = []
        conductor = 1
        for c in point:
            if isinstance(c, CycloNumber):
                coords.append(c)
                if conductor == 1:
                    conductor = c.conductor
                elif c.conductor != 1 and c.conductor != conductor:
                    raise ConductorMismatch(
                        f"point mixes conductors {conductor} and {c.conductor}"
                    )
            else:
                coords.append(CycloField(1).from_rational(rat(c)))
        if isinstance(self.ring.field, CycloField):
            fc = self.ring.field.conductor
            if fc != 1 and conductor != 1 and fc != conductor:
                raise ConductorMismatch(
                    f"coefficients in conductor {fc}, point in {conductor}"
                )
            conductor = max(conductor, fc)
        field = CycloField(conductor)
        coords = [field.coerce(c) for c in coords]
        powers: list[dict[int, CycloNumber]] = [{0: field.one} for _ in coords]
        acc = field.zero
        for exps, c in self.terms.items():
            val = field.coerce(c)
            for i, e in enumerate(exps):
                if e:
                    p = powers[i].get(e)
                    if p is None:
                        p = coords[i] ** e
                        powers[i][e] = p
                    val = val * p
            acc = acc + val
        return acc

    def promote(self, field) -> "Poly":
        """Same polynomial over a larger coefficient field."""
        ring = PolyRing(self.ring.variables, field)
        return Poly(ring, {e: field.coerce(c) for e, c in self.terms.items()})

    def map_variables(self, permutation) -> "Poly":
        """Relabel variables: position i receives old exponent of
        ``permutation[i]``."""
        out = {}
        for exps, c in self.terms.items():
            out[tuple(exps[p] for p in permutation)] = c
        return Poly(self.ring, out)

    def __repr__(self):
        from .textio import render_poly

        return render_poly(self)


def monomials_of_degree(nvars: int, t: int):
    """All exponent tuples of total degree t (no particular order)."""
    if t < 0:
        return []
    if nvars == 1:
        return [(t,)]
    out = []
    for head in range(t, -1, -1):
        for tail in monomials_of_degree(nvars - 1, t - head):
            out.append((head,) + tail)
    return out


def graded_component_basis(gens, t: int, order: MonomialOrder = GREVLEX):
    """Canonical basis of the degree-t graded piece of the ideal generated by
    the homogeneous ``gens``: all monomial multiples of matching degree, row
    reduced exactly over the coefficient field."""
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        return []
    ring = gens[0].ring
    for g in gens:
        if g.ring != ring:
            raise RingMismatch("generators live in different rings")
        if not g.is_homogeneous():
            raise ValueError("graded component of a non-homogeneous generator")
    cols = sorted(monomials_of_degree(ring.nvars, t), key=order.key, reverse=True)
    col_index = {e: i for i, e in enumerate(cols)}
    zero = ring.field.zero
    rows = []
    for g in gens:
        d = g.homogeneous_degree()
        if d > t:
            continue
        for mu in monomials_of_degree(ring.nvars, t - d):
            row = [zero] * len(cols)
            for exps, c in g.terms.items():
                row[col_index[tuple(a + b for a, b in zip(exps, mu))]] = c
            rows.append(row)
    reduced, _ = rref(rows)
    out = []
    for row in reduced:
        terms = {cols[i]: v for i, v in enumerate(row) if v}
        out.append(Poly(ring, terms))
    return out
