"""Verlinde-side computations: alcove weights, special points, twisted dimensions."""
from __future__ import annotations

import cmath
import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

import numpy as np

from . import _linalg as la
from .abelian_quotient import FiniteQuotient, build_quotient, fixed_point_counts, project
from .char_ring import LaurentPolynomial, antisymmetrize
from .errors import MismatchReport, NonIntegral, PreconditionViolated, TooLarge
from .root_system import RootSystem
from .weyl_group import WeylGroup

GRAM_TOL = 1e-9
GRAM_MAX = 512


@dataclass(frozen=True)
class AlcoveWeight:
    m: tuple[int, ...]
    level: int

    @property
    def shifted(self) -> tuple[int, ...]:
        """m + rho, the weight whose anti-symmetrization is the basis element."""
        return tuple(x + 1 for x in self.m)


@dataclass(frozen=True)
class SpecialPoint:
    b: tuple[int, ...]
    n: int
    phase_matrix: tuple[tuple[Fraction, ...], ...]

    def phase(self, f) -> Fraction:
        """theta_f(exp t) = exp(2 pi i * phase), phase reduced into [0, 1)."""
        fb = sum(
            fi * sum(row[j] * self.b[j] for j in range(len(self.b)))
            for fi, row in zip(f, self.phase_matrix)
        )
        return (Fraction(fb) / self.n) % 1


@dataclass(frozen=True)
class RankRow:
    label: str
    dim: int
    degree: int | None = None
    degree_mod_2: int | None = None

    def to_dict(self) -> dict:
        key = "degree" if self.degree is not None else "degree_mod_2"
        return {key: getattr(self, key), "dim": self.dim, "label": self.label}

    @classmethod
    def from_dict(cls, d: dict) -> "RankRow":
        return cls(d["label"], d["dim"], d.get("degree"), d.get("degree_mod_2"))


@dataclass
class RankTable:
    rows: list[RankRow]
    lie_type: str = ""
    n: int = 0
    space: str = ""
    meta: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "type": self.lie_type,
            "n": self.n,
            "space": self.space,
            "rows": [r.to_dict() for r in self.rows],
            "meta": dict(self.meta),
        }

    @classmethod
    def from_dict(cls, d: dict) -> "RankTable":
        rows = [RankRow.from_dict(r) for r in d["rows"]]
        return cls(rows, d["type"], d["n"], d["space"], dict(d["meta"]))

    def dims(self) -> dict:
        """{parity or degree: dim}."""
        return {r.degree if r.degree is not None else r.degree_mod_2: r.dim for r in self.rows}


def level_weights(rs: RootSystem, k: int) -> list[AlcoveWeight]:
    """M_k: nonnegative m with sum m_i * comark_i <= k, in lexicographic order."""
    if k < 0:
        raise PreconditionViolated(f"level k must be >= 0, got {k}")
    return [AlcoveWeight(m, k) for m in _bounded(rs.comarks, k)]


@lru_cache(maxsize=None)
def _bounded(weights: tuple[int, ...], budget: int) -> tuple[tuple[int, ...], ...]:
    if not weights:
        return ((),)
    head, rest = weights[0], weights[1:]
    out = []
    for x in range(budget // head + 1):
        out.extend((x,) + tail for tail in _bounded(rest, budget - x * head))
    return tuple(out)


def verlinde_dimension(rs: RootSystem, k: int) -> int:
    return len(level_weights(rs, k))


def phase_matrix(rs: RootSystem) -> tuple[tuple[Fraction, ...], ...]:
    """F_ij = (C^-1)_ij / d_j: omega_i evaluated on omega_j^*, over 2 pi i."""
    inv = la.inverse(rs.cartan)
    r = rs.rank
    return tuple(tuple(inv[i][j] / rs.d[j] for j in range(r)) for i in range(r))


def special_points(rs: RootSystem, n: int) -> list[SpecialPoint]:
    """S_k for k = n - h^vee, one point per element of M_k."""
    k = n - rs.dual_coxeter
    F = phase_matrix(rs)
    return [SpecialPoint(a.shifted, n, F) for a in level_weights(rs, k)]


def eval_at_special_point(rs: RootSystem, p: LaurentPolynomial, s: SpecialPoint) -> complex:
    total = 0j
    for f, c in p.terms.items():
        total += float(c) * cmath.exp(2j * cmath.pi * float(s.phase(f)))
    return total


def _character_sum(W: WeylGroup, q: FiniteQuotient, weights, workers=None) -> int:
    counts = fixed_point_counts(q, W, workers)
    total = sum(x * c for x, c in zip(weights, counts))
    if total % len(W):
        raise NonIntegral(f"character sum {total} not divisible by |W| = {len(W)}")
    return total // len(W)


def dim_sgn_quotient(rs: RootSystem, W: WeylGroup, q: FiniteQuotient, workers=None) -> int:
    """dim (R(T)^sgn_Q / J_n)^W by averaging sign(w) |Fix(w)| over W."""
    return _character_sum(W, q, [w.sign for w in W], workers)


def dim_perm_quotient(rs: RootSystem, W: WeylGroup, q: FiniteQuotient, workers=None) -> int:
    """dim (R(T)_Q / K_n)^W, the number of W-orbits on Q_n."""
    return _character_sum(W, q, [1] * len(W), workers)


@dataclass(frozen=True)
class VerlindeReport:
    lie_type: str
    n: int
    k: int
    twisted_dim: int
    verlinde_dim: int
    basis: tuple[tuple[int, ...], ...]

    @property
    def ok(self) -> bool:
        return self.twisted_dim == self.verlinde_dim


def verlinde_check(rs: RootSystem, W: WeylGroup, n: int, q: FiniteQuotient | None = None) -> VerlindeReport:
    if n < rs.dual_coxeter:
        raise PreconditionViolated(f"need n >= h^vee = {rs.dual_coxeter}, got {n}")
    q = q or build_quotient(rs, n)
    k = n - rs.dual_coxeter
    basis = tuple(a.m for a in level_weights(rs, k))
    report = VerlindeReport(
        str(rs.lie_type), n, k, dim_sgn_quotient(rs, W, q), len(basis), basis
    )
    if not report.ok:
        raise MismatchReport(
            f"{rs.lie_type} n={n}: twisted dim {report.twisted_dim} != |M_{k}| = {report.verlinde_dim}",
            report,
        )
    return report


def wall_vanishing(rs: RootSystem, W: WeylGroup, q: FiniteQuotient, f) -> bool:
    """Whether A(theta_f) maps to 0 in Q[Q_n] for f on the far alcove wall."""
    f = tuple(f)
    if rs.pair_highest_coroot(f) != q.n:
        raise PreconditionViolated(
            f"weight {f} pairs to {rs.pair_highest_coroot(f)} with K_alpha0, not n = {q.n}"
        )
    image = project(q, antisymmetrize(W, LaurentPolynomial.monomial(f)))
    return not image


def wall_weights(rs: RootSystem, n: int, bound: int | None = None) -> list[tuple[int, ...]]:
    """Weights in [-bound, bound]^r pairing to n with K_alpha0 (bound defaults to |n|)."""
    bound = abs(n) if bound is None else bound
    rng = range(-bound, bound + 1)
    return [
        f for f in itertools.product(rng, repeat=rs.rank) if rs.pair_highest_coroot(f) == n
    ]


def gram_matrix(rs: RootSystem, W: WeylGroup, n: int) -> np.ndarray:
    """Values of A(theta_{m + rho}) (rows) at the points of S_k (columns)."""
    k = n - rs.dual_coxeter
    if k < 0:
        raise PreconditionViolated(f"need n >= h^vee = {rs.dual_coxeter}, got {n}")
    labels = level_weights(rs, k)
    if len(labels) > GRAM_MAX:
        raise TooLarge(f"|M_{k}| = {len(labels)} exceeds {GRAM_MAX}")
    points = special_points(rs, n)
    g = np.zeros((len(labels), len(points)), dtype=complex)
    for a, lab in enumerate(labels):
        orbit = [(w.sign, w.act(lab.shifted)) for w in W]
        for b, s in enumerate(points):
            g[a, b] = sum(sg * cmath.exp(2j * cmath.pi * float(s.phase(f))) for sg, f in orbit)
    return g


def gram_nonsingular(rs: RootSystem, W: WeylGroup, n: int) -> bool:
    g = gram_matrix(rs, W, n)
    sv = np.linalg.svd(g, compute_uv=False)
    return bool(sv.min() > GRAM_TOL * np.abs(g).max())
