"""Property harness behind ``fusionkit check``.

Every invariant listed for the library is run over a roster of types and
levels; each yields one PASS/FAIL line.  Enumeration oracles are skipped for
quotients larger than ``oracle_limit`` (0 disables them).
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable, Iterator

from .abelian_quotient import build_quotient, count_fixed, fixed_point_counts, is_equivariant
from .char_ring import LaurentPolynomial, act, antisymmetrize, ideal_generators, weyl_denominator
from .fusion import (
    dim_perm_quotient,
    dim_sgn_quotient,
    eval_at_special_point,
    gram_nonsingular,
    special_points,
    verlinde_dimension,
    wall_vanishing,
    wall_weights,
)
from .ktwist import SPACES, WCharacter, builtin_profile, e2_dimension, e2_table, ktable
from .oracles import fixed_counts_by_enumeration, projector_rank
from .root_system import RootSystem, root_system
from .weyl_group import WeylGroup, classical_order, generate, length_by_inversions

DEFAULT_ROSTER = ("A1", "A2", "A3", "B2", "C2", "C3", "G2")
RING_MAX_W = 1152  # ring-level (polynomial) checks up to |W(F4)|


@dataclass
class CheckConfig:
    types: tuple[str, ...] = DEFAULT_ROSTER
    max_offset: int = 4
    oracle_limit: int = 5000
    weyl_cap: int | None = None
    workers: int | None = None
    seed: int = 0


@dataclass
class CheckResult:
    name: str
    where: str
    ok: bool
    detail: str = ""

    def line(self) -> str:
        tag = "PASS" if self.ok else "FAIL"
        extra = f"  ({self.detail})" if self.detail else ""
        return f"{tag}  {self.name:<34} {self.where}{extra}"


@dataclass
class _Ctx:
    rs: RootSystem
    W: WeylGroup
    cfg: CheckConfig
    rng: random.Random = field(default_factory=random.Random)

    @property
    def levels(self) -> range:
        return range(1, self.rs.dual_coxeter + self.cfg.max_offset + 1)


Check = Callable[[_Ctx], Iterator[tuple[str, bool, str]]]
_CHECKS: list[tuple[str, Check]] = []


def _check(name: str):
    def deco(fn: Check) -> Check:
        _CHECKS.append((name, fn))
        return fn
    return deco


def _root_coords_set(rs):
    pos = set(rs.positive_roots_s)
    return pos | {tuple(-x for x in v) for v in pos}


@_check("cartan axioms")
def _cartan(ctx):
    c = ctx.rs.cartan
    r = len(c)
    ok = all(c[i][i] == 2 for i in range(r)) and all(
        c[i][j] <= 0 and (c[i][j] == 0) == (c[j][i] == 0)
        for i in range(r) for j in range(r) if i != j
    )
    yield "", ok, ""


@_check("marks = d * comarks")
def _marks(ctx):
    rs = ctx.rs
    yield "", all(n == d * nv for n, d, nv in zip(rs.marks, rs.d, rs.comarks)), f"d={rs.d}"


@_check("positive roots = r*h/2")
def _count(ctx):
    rs = ctx.rs
    yield "", 2 * len(rs.positive_roots_w) == rs.rank * rs.coxeter, str(len(rs.positive_roots_w))


@_check("positive roots nonnegative")
def _nonneg(ctx):
    yield "", all(min(v) >= 0 for v in ctx.rs.positive_roots_s), ""


@_check("d in {1,2,3}; simply-laced <=> d=1")
def _d_range(ctx):
    rs = ctx.rs
    laced = rs.lie_type.family in "ADE"
    yield "", set(rs.d) <= {1, 2, 3} and ((max(rs.d) == 1) == laced), ""


@_check("sum comarks = h_dual - 1")
def _comark_sum(ctx):
    rs = ctx.rs
    yield "", sum(rs.comarks) == rs.dual_coxeter - 1, f"h_dual={rs.dual_coxeter}"


@_check("highest root is maximal")
def _highest(ctx):
    rs = ctx.rs
    roots = _root_coords_set(rs)
    top = max(rs.positive_roots_s, key=sum)
    unique = all(all(a >= b for a, b in zip(top, v)) for v in rs.positive_roots_s)
    no_up = all(
        tuple(x + int(i == j) for j, x in enumerate(top)) not in roots for i in range(rs.rank)
    )
    yield "", unique and no_up, ""


@_check("cartan re-derived from root strings")
def _strings(ctx):
    rs = ctx.rs
    roots = _root_coords_set(rs)
    r = rs.rank
    e = [tuple(int(i == j) for j in range(r)) for i in range(r)]
    ok = True
    for i in range(r):
        for j in range(r):
            if i == j:
                continue
            q = 0
            while tuple(a + (q + 1) * b for a, b in zip(e[i], e[j])) in roots:
                q += 1
            ok &= rs.cartan[i][j] == -q
    yield "", ok, ""


@_check("|W| = classical order")
def _order(ctx):
    yield "", len(ctx.W) == classical_order(ctx.rs), str(len(ctx.W))


@_check("length: inversions = BFS")
def _lengths(ctx):
    ok = all(length_by_inversions(ctx.rs, w) == w.length for w in ctx.W)
    yield "", ok, ""


@_check("det(w) = (-1)^length")
def _det(ctx):
    import numpy as np

    ok = all(round(np.linalg.det(w.array)) == w.sign == (-1) ** w.length for w in ctx.W)
    yield "", ok, ""


@_check("group closes under products")
def _closure(ctx):
    W, rng = ctx.W, ctx.rng
    ok = True
    for _ in range(100):
        try:
            W.multiply(rng.randrange(len(W)), rng.randrange(len(W)))
        except KeyError:
            ok = False
    yield "", ok, ""


@_check("sum of signs = 0")
def _signsum(ctx):
    yield "", sum(w.sign for w in ctx.W) == 0, ""


def _random_poly(ctx, terms=3, spread=3):
    r = ctx.rs.rank
    rng = ctx.rng
    return LaurentPolynomial(
        r, [(tuple(rng.randint(-spread, spread) for _ in range(r)), rng.randint(-3, 3)) for _ in range(terms)]
    )


@_check("action axiom (signs multiply)")
def _action(ctx):
    W, rng = ctx.W, ctx.rng
    ok = True
    for _ in range(20):
        i, j = rng.randrange(len(W)), rng.randrange(len(W))
        p = _random_poly(ctx)
        for signed in (False, True):
            lhs = act(W[i], act(W[j], p, signed), signed)
            ok &= lhs == act(W[W.multiply(i, j)], p, signed)
    yield "", ok, ""


@_check("A(w.p) = sign(w) A(p)")
def _antisym_equiv(ctx):
    if len(ctx.W) > RING_MAX_W:
        return
    W, rng = ctx.W, ctx.rng
    ok = True
    for _ in range(5):
        w = W[rng.randrange(len(W))]
        p = _random_poly(ctx)
        ok &= antisymmetrize(W, act(w, p)) == antisymmetrize(W, p) * w.sign
    yield "", ok, ""


@_check("A(theta_f) = 0 on simple walls")
def _stabilized(ctx):
    if len(ctx.W) > RING_MAX_W:
        return
    rs, W, rng = ctx.rs, ctx.W, ctx.rng
    ok = True
    for i in range(rs.rank):
        f = [rng.randint(-3, 3) for _ in range(rs.rank)]
        f[i] = 0  # s_i fixes f exactly when f pairs to 0 with alpha_i^vee
        ok &= antisymmetrize(W, LaurentPolynomial.monomial(f)).is_zero()
    yield "", ok, ""


@_check("weyl denominator signed-invariant")
def _delta_inv(ctx):
    if ctx.rs.rank > 4 or len(ctx.W) > RING_MAX_W:
        return
    delta = weyl_denominator(ctx.rs)
    yield "", all(act(w, delta, signed=True) == delta for w in ctx.W), f"{len(delta)} terms"


@_check("weyl denominator = A(theta_rho)")
def _delta_formula(ctx):
    if ctx.rs.rank > 3:
        return
    rs = ctx.rs
    yield "", weyl_denominator(rs) == antisymmetrize(ctx.W, LaurentPolynomial.monomial(rs.rho)), ""


def _quotients(ctx):
    for n in ctx.levels:
        yield n, build_quotient(ctx.rs, n)


@_check("|Q_n| = n^r prod(d) det C")
def _qorder(ctx):
    rs = ctx.rs
    for n, q in _quotients(ctx):
        expect = n**rs.rank
        for d in rs.d:
            expect *= d
        expect *= rs.cartan_det
        yield f"n={n}", q.order == expect, str(q.order)


@_check("phi_n is W-equivariant")
def _equiv(ctx):
    for n, q in _quotients(ctx):
        yield f"n={n}", is_equivariant(q), ""


@_check("fixed points: SNF = enumeration")
def _fixed(ctx):
    lim = ctx.cfg.oracle_limit
    for n, q in _quotients(ctx):
        if q.order > lim:
            continue
        yield f"n={n}", list(fixed_point_counts(q, ctx.W, ctx.cfg.workers)) == fixed_counts_by_enumeration(q, ctx.W, lim), ""


@_check("fixed points: class function")
def _fixed_class(ctx):
    W, rng = ctx.W, ctx.rng
    for n, q in _quotients(ctx):
        ok = True
        for _ in range(10):
            u, w = rng.randrange(len(W)), rng.randrange(len(W))
            ok &= count_fixed(q, W[w]) == count_fixed(q, W[W.conjugate(u, w)])
        yield f"n={n}", ok, ""


@_check("Burnside orbit count integral")
def _burnside(ctx):
    for n, q in _quotients(ctx):
        total = sum(fixed_point_counts(q, ctx.W, ctx.cfg.workers))
        yield f"n={n}", total % len(ctx.W) == 0 and total > 0, ""


@_check("dims = projector ranks")
def _projector(ctx):
    lim = ctx.cfg.oracle_limit
    for n, q in _quotients(ctx):
        if q.order > lim:
            continue
        s, p = dim_sgn_quotient(ctx.rs, ctx.W, q), dim_perm_quotient(ctx.rs, ctx.W, q)
        ok = s == projector_rank(q, ctx.W, True, lim) and p == projector_rank(q, ctx.W, False, lim)
        yield f"n={n}", ok, f"sgn={s} perm={p}"


@_check("twisted dim = |M_(n-h_dual)|")
def _verlinde(ctx):
    rs = ctx.rs
    for n, q in _quotients(ctx):
        s = dim_sgn_quotient(rs, ctx.W, q, ctx.cfg.workers)
        expect = verlinde_dimension(rs, n - rs.dual_coxeter) if n >= rs.dual_coxeter else 0
        yield f"n={n}", s == expect, f"{s} vs {expect}"


@_check("dim_perm >= dim_sgn")
def _dominate(ctx):
    for n, q in _quotients(ctx):
        yield f"n={n}", dim_perm_quotient(ctx.rs, ctx.W, q) >= dim_sgn_quotient(ctx.rs, ctx.W, q), ""


@_check("far-wall anti-symmetrizations vanish")
def _wall(ctx):
    rs = ctx.rs
    if rs.rank > 2 or len(ctx.W) > RING_MAX_W:
        return
    for n, q in _quotients(ctx):
        if n < rs.dual_coxeter:
            continue
        pts = wall_weights(rs, n)
        yield f"n={n}", all(wall_vanishing(rs, ctx.W, q, f) for f in pts), f"{len(pts)} weights"


@_check("generators vanish on S_k")
def _special(ctx):
    rs = ctx.rs
    for n in ctx.levels:
        if n < rs.dual_coxeter:
            continue
        worst = max(
            abs(eval_at_special_point(rs, g, s))
            for g in ideal_generators(rs, n) for s in special_points(rs, n)
        )
        yield f"n={n}", worst < 1e-9, f"max |value| {worst:.1e}"


@_check("Gram matrix nonsingular")
def _gram(ctx):
    rs = ctx.rs
    if len(ctx.W) > RING_MAX_W:
        return
    for n in ctx.levels:
        if n < rs.dual_coxeter or verlinde_dimension(rs, n - rs.dual_coxeter) > 64:
            continue
        yield f"n={n}", gram_nonsingular(rs, ctx.W, n), ""


@_check("point table = Verlinde dimension")
def _point(ctx):
    rs = ctx.rs
    for n, q in _quotients(ctx):
        if n < rs.dual_coxeter:
            continue
        t = ktable("point", rs, ctx.W, q, n).dims()
        yield f"n={n}", t[rs.rank % 2] == verlinde_dimension(rs, n - rs.dual_coxeter) and t[(rs.rank + 1) % 2] == 0, ""


@_check("E2 twist identities")
def _twist(ctx):
    rs, W = ctx.rs, ctx.W
    triv, sign = WCharacter.trivial(W), WCharacter.sign(W)
    for n, q in _quotients(ctx):
        ok = e2_dimension(rs, W, q, triv) == dim_sgn_quotient(rs, W, q)
        ok &= e2_dimension(rs, W, q, sign) == dim_perm_quotient(rs, W, q)
        yield f"n={n}", ok, ""


@_check("E2 totals = K-theory totals")
def _collapse(ctx):
    rs, W = ctx.rs, ctx.W
    for n, q in _quotients(ctx):
        for space in SPACES:
            if space == "su2-pairs" and str(rs.lie_type) != "A1":
                continue
            if space == "commuting" and rs.lie_type.family not in "AC":
                continue
            for m in ((2, 3) if space == "commuting" else (None,)):
                k = ktable(space, rs, W, q, n, m)
                e2 = e2_table(rs, W, q, builtin_profile(space, rs, W, m), n)
                tag = f"n={n} {space}" + (f" m={m}" if m else "")
                yield tag, sum(k.dims().values()) == sum(e2.dims().values()), ""


def run_checks(cfg: CheckConfig) -> Iterator[CheckResult]:
    """Yield one result per (property, type, level).  May raise CapExceeded."""
    for t in cfg.types:
        rs = root_system(t)
        W = generate(rs, cfg.weyl_cap)
        ctx = _Ctx(rs, W, cfg, random.Random(cfg.seed))
        for name, fn in _CHECKS:
            for where, ok, detail in fn(ctx):
                yield CheckResult(name, f"{t} {where}".strip(), bool(ok), detail)
