"""Exact counts of uniform hypertree forests, hypertrees, and hypercycles.

Every function works in exact integer and rational arithmetic (Python int
and fractions.Fraction); no floating point is used anywhere in this module.
Counts are computed as reduced rationals and converted to integers with an
integrality assertion.

With n = s*(b-1) + k + 1:

* forests of k+1 rooted hypertrees, s edges:  (n!/k!) * n^(s-1) / (s! * (b-1)!^s)
* rooted hypertrees, s edges (n = s*(b-1)+1): (n-1)! * n^s / (s! * (b-1)!^s)

With n = s*(b-1), for connected hypergraphs of excess 0 (hypercycles):

* closed form:  ((b-1) * n! * n^(s-1) / (2 * (b-1)!^s)) * 1 / (s * (s-2)!)
* sum form:     same prefactor times sum over j in 2..s of j / (s^j * (s-j)!)
* by cycle length j:
    C(n, j*(b-1)) * j*(b-1) * ((s-j)*(b-1))! / ((s-j)! * (b-1)!^(s-j))
      * (1/2) * (j*(b-1))! / (b-2)!^j

The closed and sum hypercycle forms agree for every s (their equality is
the identity checked by :func:`cycle_sum_identity`), while the by-length
counts do not sum to either of them in general; see the oracle module's
audit, which reports all three families side by side without reconciling
them.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial
from typing import Literal, NamedTuple

from .errors import InvariantViolation, ParameterRangeError

HypercycleForm = Literal["closed", "sum"]


def _as_count(value: Fraction, what: str) -> int:
    """Convert an exact rational to a non-negative integer count."""
    if value.denominator != 1:
        raise InvariantViolation(f"{what} is not an integer: {value}")
    if value < 0:
        raise InvariantViolation(f"{what} is negative: {value}")
    return int(value)


def count_forests(b: int, s: int, k: int) -> int:
    """Number of forests of k+1 labelled rooted b-uniform hypertrees with s edges.

    Evaluates (n!/k!) * n^(s-1) / (s! * (b-1)!^s) on n = s*(b-1) + k + 1
    vertices.  For s = 0 the only forest is the one whose k+1 vertices are
    all isolated roots, and the formula reduces to 1 as well.
    """
    if b < 2:
        raise ParameterRangeError(f"edge size b={b} must be at least 2")
    if s < 0:
        raise ParameterRangeError(f"edge count s={s} must be at least 0")
    if k < 0:
        raise ParameterRangeError(f"tree parameter k={k} must be at least 0")
    if s == 0:
        return 1
    n = s * (b - 1) + k + 1
    value = Fraction(factorial(n), factorial(k)) * Fraction(
        n ** (s - 1), factorial(s) * factorial(b - 1) ** s
    )
    return _as_count(value, f"forest count for b={b}, s={s}, k={k}")


def count_rooted_hypertrees(b: int, s: int) -> int:
    """Number of labelled rooted b-uniform hypertrees with s edges.

    Evaluates (n-1)! * n^s / (s! * (b-1)!^s) on n = s*(b-1) + 1 vertices.
    At b = 2 this is Cayley's n^(n-1) count of rooted labelled trees.
    """
    if b < 2:
        raise ParameterRangeError(f"edge size b={b} must be at least 2")
    if s < 1:
        raise ParameterRangeError(f"edge count s={s} must be at least 1")
    n = s * (b - 1) + 1
    value = Fraction(factorial(n - 1) * n ** s, factorial(s) * factorial(b - 1) ** s)
    return _as_count(value, f"hypertree count for b={b}, s={s}")


def count_hypercycles(b: int, s: int, form: HypercycleForm = "closed") -> int:
    """Number of labelled b-uniform hypercycles with s edges, two ways.

    A hypercycle is a connected b-uniform hypergraph of excess 0 on
    n = s*(b-1) vertices.  The two forms share only their statement: the
    closed form multiplies the prefactor by 1/(s*(s-2)!), the sum form by
    sum(j / (s^j * (s-j)!) for j in 2..s).  They are computed independently
    so their agreement stays a meaningful check.
    """
    if b < 2:
        raise ParameterRangeError(f"edge size b={b} must be at least 2")
    if s < 2:
        raise ParameterRangeError(f"edge count s={s} must be at least 2")
    n = s * (b - 1)
    if form == "closed":
        value = Fraction(
            (b - 1) * factorial(n) * n ** (s - 1), 2 * factorial(b - 1) ** s
        ) * Fraction(1, s * factorial(s - 2))
    elif form == "sum":
        total = Fraction(0)
        for j in range(2, s + 1):
            total += Fraction(j, s ** j * factorial(s - j))
        value = Fraction(
            (b - 1) * factorial(n) * n ** (s - 1), 2 * factorial(b - 1) ** s
        ) * total
    else:
        raise ParameterRangeError(f"unknown hypercycle form {form!r}")
    return _as_count(value, f"hypercycle count for b={b}, s={s}, form={form}")


def hypercycle_class_count(b: int, s: int, j: int) -> int:
    """Number of labelled b-uniform hypercycles with s edges and cycle length j.

    Evaluates, on n = s*(b-1) vertices,
    C(n, j*(b-1)) * j*(b-1) * ((s-j)*(b-1))! / ((s-j)! * (b-1)!^(s-j))
    times (1/2) * (j*(b-1))! / (b-2)!^j, for 2 <= j <= s.
    """
    if b < 2:
        raise ParameterRangeError(f"edge size b={b} must be at least 2")
    if s < 2:
        raise ParameterRangeError(f"edge count s={s} must be at least 2")
    if j < 2 or j > s:
        raise ParameterRangeError(f"cycle length j={j} must lie in 2..{s}")
    n = s * (b - 1)
    cycle_part = Fraction(factorial(j * (b - 1)), 2 * factorial(b - 2) ** j)
    forest_part = Fraction(
        comb(n, j * (b - 1)) * j * (b - 1) * factorial((s - j) * (b - 1)),
        factorial(s - j) * factorial(b - 1) ** (s - j),
    )
    return _as_count(
        forest_part * cycle_part,
        f"hypercycle class count for b={b}, s={s}, j={j}",
    )


class CycleSumIdentity(NamedTuple):
    """Both sides of the hypercycle sum identity, as exact rationals."""

    lhs: Fraction
    rhs: Fraction
    equal: bool


def cycle_sum_identity(s: int) -> CycleSumIdentity:
    """Evaluate sum(j / (s^j * (s-j)!) for j in 2..s) against 1 / (s * (s-2)!).

    The two sides are equal for every s >= 2; the result carries both exact
    rationals so callers can verify rather than trust.
    """
    if s < 2:
        raise ParameterRangeError(f"identity requires s >= 2, got s={s}")
    lhs = Fraction(0)
    for j in range(2, s + 1):
        lhs += Fraction(j, s ** j * factorial(s - j))
    rhs = Fraction(1, s * factorial(s - 2))
    return CycleSumIdentity(lhs, rhs, lhs == rhs)
