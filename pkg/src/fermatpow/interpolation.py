"""Fat-point interpolation oracle: graded dimensions from vanishing
conditions alone, with no Groebner machinery.

A degree-t form vanishes to order >= m at a point exactly when its
order-(m-1) partial derivatives all vanish there (Euler's relation makes the
lower orders automatic for homogeneous forms once t >= m-1, a fact the
property suite checks empirically).  The resulting condition matrix has one
row per (point, derivative multi-index) and one column per degree-t
monomial; its exact kernel dimension is the graded dimension of the
fat-point ideal.
"""

from __future__ import annotations

from .fermat import FatPointScheme
from .fields import rat
from .linalg import row_rank
from .poly import monomials_of_degree


class InterpolationCapError(RuntimeError):
    """The ascending least-degree scan exceeded its cap."""


class ConditionMatrix:
    """Vanishing-condition matrix for a fat-point scheme in one degree."""

    def __init__(self, rows, row_labels, columns, t, scheme):
        self.rows = rows
        self.row_labels = row_labels
        self.columns = columns
        self.t = t
        self.scheme = scheme

    @property
    def shape(self):
        return len(self.rows), len(self.columns)

    def rank(self) -> int:
        return row_rank([list(r) for r in self.rows])

    def kernel_dimension(self) -> int:
        return len(self.columns) - self.rank()


def _falling(e: int, d: int) -> int:
    out = 1
    for j in range(d):
        out *= e - j
    return out


def _derivative_orders(m: int, strict: bool):
    if strict:
        orders = []
        for total in range(m):
            orders.extend(monomials_of_degree(3, total))
        return orders
    return monomials_of_degree(3, m - 1)


def build_condition_matrix(scheme: FatPointScheme, t: int, strict: bool = False) -> ConditionMatrix:
    """Rows: order-exactly-(m-1) partials (all orders < m in strict mode)
    evaluated at each point's affine representative; columns: degree-t
    monomials."""
    if t < 0:
        raise ValueError("degree must be >= 0")
    m = scheme.multiplicity
    columns = monomials_of_degree(3, t)
    deltas = _derivative_orders(m, strict)
    reps = scheme.configuration.affine_representatives()
    rational = all(
        all(c.as_rational() is not None for c in rep) for rep in reps
    )
    rows = []
    labels = []
    for p_idx, rep in enumerate(reps):
        if rational:
            coords = [c.as_rational() for c in rep]
            one = rat(1)
        else:
            coords = list(rep)
            one = rep[0].field.one
        # Power tables, exactly as far as needed.
        pows = []
        for c in coords:
            table = [one]
            for _ in range(t):
                table.append(table[-1] * c)
            pows.append(table)
        for delta in deltas:
            row = []
            for e in columns:
                if any(d > ei for d, ei in zip(delta, e)):
                    row.append(0 * one)
                    continue
                c = 1
                for ei, d in zip(e, delta):
                    c *= _falling(ei, d)
                val = pows[0][e[0] - delta[0]]
                val = val * pows[1][e[1] - delta[1]]
                val = val * pows[2][e[2] - delta[2]]
                row.append(val * c)
            rows.append(row)
            labels.append((p_idx, delta))
    return ConditionMatrix(rows, labels, columns, t, scheme)


def fatpoint_dim(scheme: FatPointScheme, t: int, strict: bool = False) -> int:
    """dim of the degree-t piece of the fat-point ideal: the kernel dimension
    of the condition matrix over the coordinate field."""
    if t < 0:
        return 0
    m = scheme.multiplicity
    if not strict and t < m - 1:
        # A nonzero form's vanishing order at a point never exceeds its
        # degree, and below t = m-1 the exact-order matrix is identically
        # zero, so answer directly.
        return 0
    return build_condition_matrix(scheme, t, strict).kernel_dimension()


def alpha_interp(
    scheme: FatPointScheme,
    cap: int | None = None,
    trace=None,
    strict: bool = False,
) -> int:
    """Least t with a nonzero degree-t form in the fat-point ideal, by an
    ascending scan; capped (a product of lines through the points shows the
    scan terminates by m * #points)."""
    if cap is None:
        cap = scheme.multiplicity * len(scheme.configuration)
    for t in range(cap + 1):
        if not strict and t < scheme.multiplicity - 1:
            dim = 0
            if trace is not None:
                trace.append((t, 0, len(monomials_of_degree(3, t)), 0, 0))
        else:
            matrix = build_condition_matrix(scheme, t, strict)
            nrows, ncols = matrix.shape
            rank = matrix.rank()
            dim = ncols - rank
            if trace is not None:
                trace.append((t, nrows, ncols, rank, dim))
        if dim > 0:
            return t
    raise InterpolationCapError(
        f"no form of degree <= {cap} found (multiplicity {scheme.multiplicity}, "
        f"{len(scheme.configuration)} points)"
    )
