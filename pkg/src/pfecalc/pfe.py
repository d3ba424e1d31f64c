"""Partition-frequency enumeration engine.

A sparse upper-triangular matrix, given implicitly by per-row specifications,
determines a coefficient sequence P(n) and a frequency table F_k(n) through
the two equations

    F_k(n) = sum_j a_k(j) P(n-j)          (row evaluation)
    V_n P(n) = sum_k U_k F_k(n)           (weighted column sums)

with P(0) = 1.  The default weights are U_k = k (k the row's step index) and
V_n = n.  Rows come in two flavours: product rows, whose entries b*z^r sit at
the multiples of a step k and encode a factor (1 - z q^k)^(-b); and explicit
rows holding an arbitrary finite sparse set of entries.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Tuple

from .arith import divisors, mobius_inversion
from .report import IdentityReport, check_all

FORM1 = "form1"
FORM2 = "form2"


class EnumerationError(ValueError):
    pass


@dataclass(frozen=True)
class ProductRow:
    """Row of the factor (1 - z q^step)^(-b): entry b*z^r at column r*step."""

    step: int
    b: Fraction
    z: Fraction

    def __post_init__(self):
        if self.step < 1:
            raise ValueError("step must be a positive integer")
        if self.z == 0:
            raise ValueError("z must be nonzero")

    def entry(self, j):
        if j < 1 or j % self.step:
            return Fraction(0)
        return self.b * self.z ** (j // self.step)


@dataclass(frozen=True)
class CombinedRow:
    """Step-collapsed sum of product rows sharing one step index."""

    step: int
    parts: Tuple[Tuple[Fraction, Fraction], ...]  # (b, z) pairs

    def entry(self, j):
        if j < 1 or j % self.step:
            return Fraction(0)
        r = j // self.step
        return sum((b * z ** r for b, z in self.parts), Fraction(0))


@dataclass(frozen=True)
class ExplicitRow:
    """Row with a finite sparse set of entries, keyed by column index >= 1."""

    step: int
    entries: Mapping[int, Fraction]

    def __post_init__(self):
        if any(j < 1 for j in self.entries):
            raise ValueError("explicit row entries must have column index >= 1")

    def entry(self, j):
        return self.entries.get(j, Fraction(0))


@dataclass(frozen=True)
class PfeMatrix:
    rows: tuple
    layout: str = FORM2

    def __post_init__(self):
        if self.layout == FORM1:
            steps = [row.step for row in self.rows]
            if len(steps) != len(set(steps)):
                raise ValueError("form-1 layout requires distinct step indices")


@dataclass
class EnumerationResult:
    P: tuple
    F: tuple  # F[i] is the table for rows[i], indexed 0..N; None if not kept
    rows: tuple

    def _by_step(self):
        index = getattr(self, "_step_index", None)
        if index is None:
            index = {}
            for i, row in enumerate(self.rows):
                index.setdefault(row.step, []).append(i)
            self._step_index = index
        return index

    def freq(self, k, n):
        """Total frequency at step k, summed over all rows with that step."""
        return sum(
            (self.F[i][n] for i in self._by_step().get(k, ())), Fraction(0)
        )


def _bval(b, k):
    return Fraction(b(k)) if callable(b) else Fraction(b[k])


def build_product_matrix(factors, N):
    """Interleaved (form-2) matrix for a product of factor lists.

    Each factor is a pair (z, b) with z a nonzero rational and b the exponent
    sequence, given either as a callable k -> b_k or as a list indexed so that
    b[k] is valid for 1 <= k <= N.
    """
    rows = []
    for k in range(1, N + 1):
        for z, b in factors:
            if Fraction(z) == 0:
                raise ValueError("z must be nonzero")
            rows.append(ProductRow(step=k, b=_bval(b, k), z=Fraction(z)))
    return PfeMatrix(rows=tuple(rows), layout=FORM2)


def collapse_form1(m):
    """Collapse a form-2 matrix to one row per step index.

    Product rows sharing a step become a combined row summing the factors'
    contributions; explicit rows sharing a step are merged entrywise.
    Enumeration results are identical under either layout.
    """
    by_step = {}
    order = []
    for row in m.rows:
        if row.step not in by_step:
            by_step[row.step] = []
            order.append(row.step)
        by_step[row.step].append(row)
    rows = []
    for k in order:
        group = by_step[k]
        if len(group) == 1:
            rows.append(group[0])
            continue
        if all(isinstance(r, (ProductRow, CombinedRow)) for r in group):
            parts = []
            for r in group:
                if isinstance(r, ProductRow):
                    parts.append((r.b, r.z))
                else:
                    parts.extend(r.parts)
            rows.append(CombinedRow(step=k, parts=tuple(parts)))
        elif all(isinstance(r, ExplicitRow) for r in group):
            merged = {}
            for r in group:
                for j, v in r.entries.items():
                    merged[j] = merged.get(j, Fraction(0)) + v
            rows.append(ExplicitRow(step=k, entries=merged))
        else:
            raise ValueError(
                f"cannot collapse mixed product/explicit rows at step {k}"
            )
    return PfeMatrix(rows=tuple(rows), layout=FORM1)


def _row_apply(row, n, P):
    """sum_j a(j) P(n-j) for one row, using only the nonzero columns."""
    if isinstance(row, (ProductRow, CombinedRow)):
        total = Fraction(0)
        for j in range(row.step, n + 1, row.step):
            total += row.entry(j) * P[n - j]
        return total
    total = Fraction(0)
    for j, v in row.entries.items():
        if j <= n:
            total += v * P[n - j]
    return total


def enumerate_pfe(m, N, U=None, V=None, with_freq=True):
    """Run the enumeration: P(0) = 1, then alternate the two defining equations.

    U maps a row to its weight (default: the row's step index); V maps n to a
    nonzero weight (default: n).  Raises EnumerationError naming n if V(n) = 0.
    """
    if U is None:
        U = lambda row: row.step
    if V is None:
        V = lambda n: n
    rows = tuple(r for r in m.rows if not isinstance(r, ProductRow) or r.step <= N)
    P = [Fraction(1)] + [Fraction(0)] * N
    F = [[Fraction(0)] * (N + 1) for _ in rows] if with_freq else None
    weights = [Fraction(U(row)) for row in rows]
    for n in range(1, N + 1):
        Vn = Fraction(V(n))
        if Vn == 0:
            raise EnumerationError(f"V({n}) = 0: cannot solve for P({n})")
        total = Fraction(0)
        for i, row in enumerate(rows):
            fk = _row_apply(row, n, P)
            if with_freq:
                F[i][n] = fk
            if weights[i]:
                total += weights[i] * fk
        P[n] = total / Vn
    return EnumerationResult(
        P=tuple(P),
        F=tuple(tuple(f) for f in F) if with_freq else None,
        rows=rows,
    )


def _fval(f, k):
    return Fraction(f(k)) if callable(f) else Fraction(f[k])


def column_weight_sums(m, f, N):
    """g(1..N) with g(n) = sum_k f(k) a_k(n), the f-weighted column sums.

    For a single product row per step this is g(n) = sum_{d|n} b_d f(d) z^{n/d}.
    Returned as a list indexed by n with g[0] = 0.
    """
    g = [Fraction(0)] * (N + 1)
    for row in m.rows:
        fk = _fval(f, row.step)
        if fk == 0:
            continue
        if isinstance(row, (ProductRow, CombinedRow)):
            for j in range(row.step, N + 1, row.step):
                g[j] += fk * row.entry(j)
        else:
            for j, v in row.entries.items():
                if j <= N:
                    g[j] += fk * v
    return g


def series_to_pfe(P, z=1, with_freq=True):
    """Invert a coefficient sequence into its product exponents b.

    P is a list with P[0] = 1; z is the (known, nonzero) product parameter,
    1 for the plain series-to-product conversion.  Proceeds inductively: with
    b_1..b_{n-1} known, the weighted rows give F_1(n)..F_{n-1}(n), the
    column-sum equation fixes F_n(n), and F_n(n) = b_n z closes the step.
    Returns (b, F) where F[k][n] is the frequency table of the recovered
    matrix (None when with_freq=False).
    """
    if Fraction(P[0]) != 1:
        raise ValueError("series_to_pfe requires P(0) = 1")
    z = Fraction(z)
    if z == 0:
        raise ValueError("z must be nonzero")
    N = len(P) - 1
    P = [Fraction(x) for x in P]
    b = [Fraction(0)] * (N + 1)
    F = [[Fraction(0)] * (N + 1) for _ in range(N + 1)] if with_freq else None
    for n in range(1, N + 1):
        # S_k = sum_{r>=1} z^r P(n - rk); F_k(n) = b_k * S_k for k < n
        weighted_sum = Fraction(0)
        for k in range(1, n):
            if b[k] == 0:
                continue
            S = sum(z ** r * P[n - r * k] for r in range(1, n // k + 1))
            if with_freq:
                F[k][n] = b[k] * S
            weighted_sum += k * b[k] * S
        b[n] = (n * P[n] - weighted_sum) / (n * z)
        if with_freq:
            F[n][n] = b[n] * z
    return b, F


def g_to_pfe(g, with_freq=True):
    """Matrix, sequence, and frequency table realizing given column sums g.

    g is a list indexed 1..N.  The exponents come from Mobius inversion of
    g(n) = sum_{d|n} d b_d; P satisfies n P(n) = sum_k g(k) P(n-k); F is the
    frequency table of the resulting z = 1 product matrix.
    Returns (b, P, F).
    """
    N = len(g) - 1
    g = [Fraction(x) for x in g]
    b = mobius_inversion(g)
    P = [Fraction(1)] + [Fraction(0)] * N
    for n in range(1, N + 1):
        P[n] = sum(g[k] * P[n - k] for k in range(1, n + 1)) / n
    F = None
    if with_freq:
        F = [[Fraction(0)] * (N + 1) for _ in range(N + 1)]
        for k in range(1, N + 1):
            if b[k] == 0:
                continue
            for n in range(k, N + 1):
                F[k][n] = b[k] * sum(P[n - r * k] for r in range(1, n // k + 1))
    return b, P, F


def verify_divisor_sum(m, f, result, N):
    """Check sum_k g(k) P(n-k) = sum_k f(k) F_k(n) for n <= N, exactly."""
    g = column_weight_sums(m, f, N)
    P = result.P

    def pairs():
        for n in range(1, N + 1):
            lhs = sum(g[k] * P[n - k] for k in range(1, n + 1))
            rhs = Fraction(0)
            for i, row in enumerate(result.rows):
                fk = _fval(f, row.step)
                if fk:
                    rhs += fk * result.F[i][n]
            yield n, lhs, rhs

    return check_all("divisor_sum", N, pairs())


def frequency_row_check(m, k, result, N):
    """Check the row recurrence F_k(n) = z F_k(n-k) + b_k z P(n-k) for n <= N.

    Requires a matrix of product rows with a single row at step k.
    """
    rows_k = [r for r in result.rows if r.step == k]
    if not rows_k:
        return IdentityReport(f"frequency_row[{k}]", N, True)
    if len(rows_k) > 1 or not isinstance(rows_k[0], ProductRow):
        raise ValueError("frequency_row_check needs a single product row per step")
    row = rows_k[0]
    i = result.rows.index(row)
    Fk = result.F[i]
    P = result.P

    def pairs():
        for n in range(1, N + 1):
            prev = Fk[n - k] if n >= k else Fraction(0)
            pn = P[n - k] if n >= k else Fraction(0)
            yield n, Fk[n], row.z * prev + row.b * row.z * pn

    return check_all(f"frequency_row[{k}]", N, pairs())
