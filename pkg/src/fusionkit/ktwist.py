"""Rank tables for twisted equivariant K-theory of inertia spaces.

The E_2 page for X is [H^p(X^T; Q) (x) (R(T)^sgn_Q / J_n)]^W in total degree
p + r.  Its dimension is an average over W of chi(w) sign(w) |Fix(w)|, where
chi is the character of W on H^p(X^T; Q).  Four example spaces have proven
collapse and get K-theory labels; custom profiles only get E_2 labels.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .abelian_quotient import FiniteQuotient, build_quotient, fixed_point_counts
from .errors import InvalidInput, NonIntegral, UnsupportedType, ZeroLevel
from .fusion import RankRow, RankTable, dim_perm_quotient, dim_sgn_quotient
from .root_system import LieType, RootSystem, build_root_system
from .weyl_group import WeylGroup, generate

SPACES = ("point", "sphere", "commuting", "su2-pairs")


@dataclass(frozen=True)
class WCharacter:
    """A class function on W, stored per element index."""

    values: tuple[Fraction, ...]
    name: str = ""

    def __call__(self, i: int) -> Fraction:
        return self.values[i]

    @classmethod
    def trivial(cls, W: WeylGroup) -> "WCharacter":
        return cls(tuple(Fraction(1) for _ in W), "trivial")

    @classmethod
    def sign(cls, W: WeylGroup) -> "WCharacter":
        return cls(tuple(Fraction(w.sign) for w in W), "sign")

    @classmethod
    def sign_pow(cls, W: WeylGroup, m: int) -> "WCharacter":
        """sign^{(x) m}, which is trivial for even m and sign for odd m."""
        return cls.sign(W) if m % 2 else cls.trivial(W)

    @classmethod
    def named(cls, W: WeylGroup, name: str) -> "WCharacter":
        key = name.strip().lower()
        if key == "trivial":
            return cls.trivial(W)
        if key == "sign":
            return cls.sign(W)
        if key.startswith("sign^"):
            return cls.sign_pow(W, int(key[5:]))
        raise InvalidInput(f"unknown character {name!r}")

    def is_class_function(self, W: WeylGroup, samples: int = 50, seed: int = 0) -> bool:
        rng = random.Random(seed)
        for _ in range(samples):
            u = rng.randrange(len(W))
            w = rng.randrange(len(W))
            if self.values[w] != self.values[W.conjugate(u, w)]:
                return False
        return True


@dataclass(frozen=True)
class CohomologyProfile:
    """H^*(X^T; Q) as a list of (degree, W-character)."""

    entries: tuple[tuple[int, WCharacter], ...]

    def __post_init__(self):
        degrees = [p for p, _ in self.entries]
        if len(set(degrees)) != len(degrees) or any(p < 0 for p in degrees):
            raise InvalidInput(f"profile degrees must be distinct and >= 0: {degrees}")

    @classmethod
    def parse(cls, W: WeylGroup, text: str) -> "CohomologyProfile":
        """``"0:trivial,2:sign"`` -> profile."""
        entries = []
        for part in text.split(","):
            try:
                deg, name = part.split(":")
                entries.append((int(deg), WCharacter.named(W, name)))
            except ValueError as exc:
                raise InvalidInput(f"bad profile entry {part!r}") from exc
        return cls(tuple(entries))


def builtin_profile(space: str, rs: RootSystem, W: WeylGroup, m: int | None = None) -> CohomologyProfile:
    triv = WCharacter.trivial(W)
    r = rs.rank
    if space == "point":
        return CohomologyProfile(((0, triv),))
    if space == "sphere":
        return CohomologyProfile(((0, triv), (r, WCharacter.sign(W))))
    if space == "commuting":
        m = _check_m(m)
        return CohomologyProfile(((0, triv), (m * r, WCharacter.sign_pow(W, m))))
    if space == "su2-pairs":
        return CohomologyProfile(((0, triv), (1, WCharacter.sign(W))))
    raise InvalidInput(f"unknown space {space!r}; expected one of {SPACES}")


def _check_m(m):
    if m is None or m < 2:
        raise InvalidInput(f"commuting variety needs m >= 2, got {m}")
    return m


def e2_dimension(rs: RootSystem, W: WeylGroup, q: FiniteQuotient, chi: WCharacter, workers=None) -> int:
    counts = fixed_point_counts(q, W, workers)
    total = sum(chi.values[i] * w.sign * c for i, (w, c) in enumerate(zip(W, counts)))
    avg = Fraction(total) / len(W)
    if avg.denominator != 1 or avg < 0:
        raise NonIntegral(f"E2 dimension {avg} is not a nonnegative integer")
    return int(avg)


def _meta(rs: RootSystem, W: WeylGroup) -> dict:
    return {"rank": rs.rank, "h_dual": rs.dual_coxeter, "weyl_order": len(W)}


def _parity_table(rs, W, n, space, even: int, odd: int) -> RankTable:
    rows = [
        RankRow("K-theory rank, even degree", even, degree_mod_2=0),
        RankRow("K-theory rank, odd degree", odd, degree_mod_2=1),
    ]
    return RankTable(rows, str(rs.lie_type), n, space, _meta(rs, W))


def _dims(rs, W, q, workers=None):
    return dim_sgn_quotient(rs, W, q, workers), dim_perm_quotient(rs, W, q, workers)


def table_point(rs: RootSystem, W: WeylGroup, q: FiniteQuotient, n: int, workers=None) -> RankTable:
    """G acting on itself: R(G)_Q/L_n in degrees = r mod 2, zero otherwise."""
    sgn = dim_sgn_quotient(rs, W, q, workers)
    by_parity = {rs.rank % 2: sgn, (rs.rank + 1) % 2: 0}
    return _parity_table(rs, W, n, "point", by_parity[0], by_parity[1])


def table_inertia_sphere(rs: RootSystem, W: WeylGroup, q: FiniteQuotient, n: int, workers=None) -> RankTable:
    sgn, perm = _dims(rs, W, q, workers)
    if rs.rank % 2:
        return _parity_table(rs, W, n, "sphere", perm, sgn)
    return _parity_table(rs, W, n, "sphere", perm + sgn, 0)


def table_commuting_variety(rs: RootSystem, W: WeylGroup, q: FiniteQuotient, n: int, m: int, workers=None) -> RankTable:
    if rs.lie_type.family not in "AC":
        raise UnsupportedType(f"commuting variety table needs type A or C, got {rs.lie_type}")
    m = _check_m(m)
    sgn, perm = _dims(rs, W, q, workers)
    r = rs.rank
    if m % 2 == 0:
        by_parity = {r % 2: 2 * sgn, (r + 1) % 2: 0}
        table = _parity_table(rs, W, n, "commuting", by_parity[0], by_parity[1])
    elif r % 2:
        table = _parity_table(rs, W, n, "commuting", perm, sgn)
    else:
        table = _parity_table(rs, W, n, "commuting", perm + sgn, 0)
    table.meta["m"] = m
    return table


def table_su2_pairs(n: int, workers=None) -> RankTable:
    """Commuting pairs in SU(2); always type A1, |n| used."""
    if n == 0:
        raise ZeroLevel("level n must be nonzero")
    rs = build_root_system(LieType("A", 1))
    W = generate(rs)
    q = build_quotient(rs, abs(n))
    sgn, perm = _dims(rs, W, q, workers)
    return _parity_table(rs, W, n, "su2-pairs", perm, sgn)


def e2_table(rs: RootSystem, W: WeylGroup, q: FiniteQuotient, profile: CohomologyProfile, n: int,
             space: str = "custom", workers=None) -> RankTable:
    rows = []
    for p, chi in sorted(profile.entries, key=lambda e: e[0]):
        dim = e2_dimension(rs, W, q, chi, workers)
        rows.append(RankRow(f"E2 rank, H^{p} ({chi.name or 'custom'})", dim, degree=p + rs.rank))
    return RankTable(rows, str(rs.lie_type), n, space, _meta(rs, W))


def ktable(space: str, rs: RootSystem, W: WeylGroup, q: FiniteQuotient, n: int,
           m: int | None = None, workers=None) -> RankTable:
    """Dispatch to the table for one of the built-in spaces."""
    if space == "point":
        return table_point(rs, W, q, n, workers)
    if space == "sphere":
        return table_inertia_sphere(rs, W, q, n, workers)
    if space == "commuting":
        return table_commuting_variety(rs, W, q, n, m, workers)
    if space == "su2-pairs":
        if str(rs.lie_type) != "A1":
            raise UnsupportedType(f"su2-pairs is defined for A1 only, got {rs.lie_type}")
        return table_su2_pairs(n, workers)
    raise InvalidInput(f"unknown space {space!r}; expected one of {SPACES}")
