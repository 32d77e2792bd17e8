"""Smith normal form and the finite group Q_n = Pi / phi_n(Lambda).

``phi_n`` sends the simple coroot K_{alpha_j} to n d_j alpha_j, so in the
fixed bases its matrix has entry (i, j) = n d_j C_ji.  The group algebra
Q[Q_n] is R(T)_Q modulo the ideal generated by theta_{alpha_i}^{n d_i} - 1,
and the Weyl group acts on it by (signed) permutations of Q_n.
"""
from __future__ import annotations

import itertools
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from math import prod

from . import _linalg as la
from .char_ring import LaurentPolynomial
from .errors import TooLarge, ZeroLevel
from .root_system import RootSystem
from .weyl_group import WeylElement, WeylGroup, simple_reflection


@dataclass(frozen=True)
class SmithDecomposition:
    U: tuple[tuple[int, ...], ...]
    D: tuple[tuple[int, ...], ...]
    V: tuple[tuple[int, ...], ...]

    @property
    def diagonal(self) -> tuple[int, ...]:
        return tuple(row[i] for i, row in enumerate(self.D) if i < len(row))


def _pivot(a, t, rows, cols):
    """Position of the minimal nonzero |entry| in a[t:, t:]; ties -> lowest row, then column."""
    best = None
    for i in range(t, rows):
        for j in range(t, cols):
            x = a[i][j]
            if x and (best is None or abs(x) < best[0]):
                best = (abs(x), i, j)
    return best


def _snf(m, track: bool):
    a = [list(row) for row in m]
    rows = len(a)
    cols = len(a[0]) if rows else 0
    U = la.identity(rows) if track else None
    V = la.identity(cols) if track else None

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        if track:
            U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        if track:
            for row in V:
                row[i], row[j] = row[j], row[i]

    def add_row(dst, src, q):  # row_dst -= q * row_src
        a[dst] = [x - q * y for x, y in zip(a[dst], a[src])]
        if track:
            U[dst] = [x - q * y for x, y in zip(U[dst], U[src])]

    def add_col(dst, src, q):  # col_dst -= q * col_src
        for row in a:
            row[dst] -= q * row[src]
        if track:
            for row in V:
                row[dst] -= q * row[src]

    for t in range(min(rows, cols)):
        best = _pivot(a, t, rows, cols)
        if best is None:
            break
        _, pi, pj = best
        swap_rows(t, pi)
        swap_cols(t, pj)
        while True:
            p = a[t][t]
            for i in range(t + 1, rows):
                if a[i][t]:
                    add_row(i, t, a[i][t] // p)
            for j in range(t + 1, cols):
                if a[t][j]:
                    add_col(j, t, a[t][j] // p)
            # a smaller remainder left in row/column t becomes the new pivot
            rest = [(abs(a[i][t]), i, t) for i in range(t + 1, rows) if a[i][t]]
            rest += [(abs(a[t][j]), t, j) for j in range(t + 1, cols) if a[t][j]]
            if rest:
                _, i, j = min(rest)
                if i != t:
                    swap_rows(t, i)
                else:
                    swap_cols(t, j)
                continue
            bad = next(
                (i for i in range(t + 1, rows) for j in range(t + 1, cols) if a[i][j] % p),
                None,
            )
            if bad is None:
                break
            add_row(t, bad, -1)
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            if track:
                U[t] = [-x for x in U[t]]
    return a, U, V


def smith_normal_form(m) -> SmithDecomposition:
    """U M V = D with U, V unimodular and d_1 | d_2 | ... on the diagonal."""
    a, U, V = _snf(m, track=True)
    as_t = lambda x: tuple(tuple(row) for row in x)
    return SmithDecomposition(as_t(U), as_t(a), as_t(V))


def invariant_factors(m) -> tuple[int, ...]:
    a, _, _ = _snf(m, track=False)
    return tuple(a[i][i] for i in range(min(len(a), len(a[0]) if a else 0)))


def lattice_index(m) -> int:
    """[Z^rows : column span of m], or 0 when the span has lower rank."""
    return prod(invariant_factors(m))


@dataclass(frozen=True)
class TwistingMap:
    n: int
    matrix: tuple[tuple[int, ...], ...]


def twisting_map(rs: RootSystem, n: int) -> TwistingMap:
    if n == 0:
        raise ZeroLevel("level n must be nonzero")
    r = rs.rank
    c, d = rs.cartan, rs.d
    m = tuple(tuple(n * d[j] * c[j][i] for j in range(r)) for i in range(r))
    return TwistingMap(n, m)


@dataclass(frozen=True)
class FiniteQuotient:
    root_system: RootSystem
    twisting: TwistingMap
    invariant_factors: tuple[int, ...]
    to_canonical: tuple[tuple[int, ...], ...]
    from_canonical: tuple[tuple[int, ...], ...]
    _cache: dict = field(default_factory=dict, repr=False, compare=False, hash=False)

    @property
    def n(self) -> int:
        return self.twisting.n

    @property
    def order(self) -> int:
        return prod(self.invariant_factors)

    def reduce(self, v) -> tuple[int, ...]:
        """Canonical residue of a weight-basis vector."""
        return tuple(
            sum(a * b for a, b in zip(row, v)) % d
            for row, d in zip(self.to_canonical, self.invariant_factors)
        )

    def lift(self, y) -> tuple[int, ...]:
        """A weight-basis representative of a canonical residue."""
        r = self.root_system.rank
        return tuple(
            sum(col[i] * yk for col, yk in zip(self.from_canonical, y)) for i in range(r)
        )

    def action_matrix(self, w: WeylElement) -> tuple[tuple[int, ...], ...]:
        """Matrix of the automorphism of Q_n induced by w, rows reduced mod d_i."""
        wl = la.matmul(w.matrix, la.transpose(self.from_canonical))  # r x k
        a = la.matmul(self.to_canonical, wl)
        return tuple(
            tuple(x % d for x in row) for row, d in zip(a, self.invariant_factors)
        )

    def weyl_action(self, W: WeylGroup) -> list[tuple[tuple[int, ...], ...]]:
        key = ("action", str(W.root_system.lie_type))
        if key not in self._cache:
            self._cache[key] = [self.action_matrix(w) for w in W]
        return self._cache[key]


def build_quotient(rs: RootSystem, n: int) -> FiniteQuotient:
    """Q_n with Smith-normal-form coordinates.

    phi_{-n} and phi_n have the same image, so everything but the stored
    ``twisting.n`` depends on |n| only.
    """
    tw = twisting_map(rs, n)
    snf = smith_normal_form(tw.matrix)
    diag = snf.diagonal
    keep = [i for i, d in enumerate(diag) if d != 1]
    u_inv = la.inverse(snf.U)
    to_can = tuple(snf.U[i] for i in keep)
    from_can = tuple(tuple(int(u_inv[j][i]) for j in range(rs.rank)) for i in keep)
    return FiniteQuotient(rs, tw, tuple(diag[i] for i in keep), to_can, from_can)


def count_fixed(q: FiniteQuotient, w: WeylElement) -> int:
    """|{x in Q_n : w x = x}| as the index of im(w - I) + im(phi_n) in Z^r."""
    r = q.root_system.rank
    m = [
        [w.matrix[i][j] - int(i == j) for j in range(r)] + list(q.twisting.matrix[i])
        for i in range(r)
    ]
    return lattice_index(m)


def fixed_point_counts(q: FiniteQuotient, W: WeylGroup, workers: int | None = None) -> tuple[int, ...]:
    """count_fixed for every element of W, in W's order.  Cached on ``q``."""
    key = ("fixed", str(W.root_system.lie_type))
    if key not in q._cache:
        if workers and workers > 1:
            with ThreadPoolExecutor(workers) as pool:
                counts = tuple(pool.map(lambda w: count_fixed(q, w), W.elements))
        else:
            counts = tuple(count_fixed(q, w) for w in W)
        q._cache[key] = counts
    return q._cache[key]


def enumerate_quotient(q: FiniteQuotient, limit: int) -> list[tuple[int, ...]]:
    """All residues in mixed radix over the invariant factors."""
    if q.order > limit:
        raise TooLarge(f"|Q_n| = {q.order} exceeds enumeration limit {limit}")
    return list(itertools.product(*(range(d) for d in q.invariant_factors)))


def project(q: FiniteQuotient, p: LaurentPolynomial) -> dict[tuple[int, ...], Fraction]:
    """Image of p in Q[Q_n]; zero coefficients dropped."""
    out: dict[tuple[int, ...], Fraction] = {}
    for e, c in p.terms.items():
        y = q.reduce(e)
        out[y] = out.get(y, Fraction(0)) + c
    return {y: c for y, c in sorted(out.items()) if c != 0}


def is_equivariant(q: FiniteQuotient) -> bool:
    """Each simple reflection maps im(phi_n) into itself (integer solve)."""
    rs = q.root_system
    t = q.twisting.matrix
    cols = la.transpose(t)
    for i in range(1, rs.rank + 1):
        s = simple_reflection(rs, i)
        for v in cols:
            x = la.solve(t, s.act(v))
            if any(c.denominator != 1 for c in x):
                return False
    return True
