"""Root data of simple, simply connected compact Lie groups.

Coordinates are fixed once and used everywhere:

* weights live in Z^r in the basis of fundamental weights;
* coroots live in Z^r in the basis of simple coroots;
* ``cartan[i][j]`` is the pairing of the simple root ``alpha_i`` with the
  simple coroot of ``alpha_j``, so row ``i`` of the Cartan matrix is
  ``alpha_i`` written in the weight basis.

Numbering follows Bourbaki.
"""
from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from . import _linalg as la
from .errors import InvalidType

Vector = tuple[int, ...]

_MIN_RANK = {"A": 1, "B": 2, "C": 2, "D": 4}
_FIXED_RANKS = {"E": (6, 7, 8), "F": (4,), "G": (2,)}


@dataclass(frozen=True)
class LieType:
    family: str
    rank: int

    def __post_init__(self):
        fam, r = self.family, self.rank
        if fam in _MIN_RANK:
            ok = isinstance(r, int) and r >= _MIN_RANK[fam]
        elif fam in _FIXED_RANKS:
            ok = r in _FIXED_RANKS[fam]
        else:
            ok = False
        if not ok:
            raise InvalidType(f"no simple type {fam}{r}")

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"

    @classmethod
    def parse(cls, text: str) -> "LieType":
        """Parse strings like ``"A3"``, ``"e8"``, ``" C2 "``."""
        m = re.fullmatch(r"\s*([A-Ga-g])\s*(\d+)\s*", text)
        if not m:
            raise InvalidType(f"cannot parse Lie type {text!r}")
        return cls(m.group(1).upper(), int(m.group(2)))


def _chain(r: int) -> list[list[int]]:
    c = [[0] * r for _ in range(r)]
    for i in range(r):
        c[i][i] = 2
        if i + 1 < r:
            c[i][i + 1] = c[i + 1][i] = -1
    return c


def _from_edges(r: int, edges) -> list[list[int]]:
    c = [[2 if i == j else 0 for j in range(r)] for i in range(r)]
    for i, j in edges:
        c[i - 1][j - 1] = c[j - 1][i - 1] = -1
    return c


def cartan_matrix(t: LieType) -> list[list[int]]:
    """The single table of Cartan matrices (Bourbaki numbering)."""
    fam, r = t.family, t.rank
    if fam == "A":
        return _chain(r)
    if fam == "B":
        c = _chain(r)
        c[r - 2][r - 1] = -2
        return c
    if fam == "C":
        c = _chain(r)
        c[r - 1][r - 2] = -2
        return c
    if fam == "D":
        edges = [(i, i + 1) for i in range(1, r - 1)] + [(r - 2, r)]
        return _from_edges(r, edges)
    if fam == "E":
        edges = [(1, 3), (3, 4), (4, 5), (2, 4)] + [(i, i + 1) for i in range(5, r)]
        return _from_edges(r, edges)
    if fam == "F":
        c = _chain(4)
        c[1][2] = -2
        return c
    if fam == "G":
        return [[2, -1], [-3, 2]]
    raise InvalidType(str(t))  # unreachable: LieType validates


@dataclass(frozen=True)
class RootSystem:
    lie_type: LieType
    cartan: tuple[Vector, ...]
    simple_roots_w: tuple[Vector, ...]
    positive_roots_w: tuple[Vector, ...]
    positive_roots_s: tuple[Vector, ...]
    highest_root_w: Vector
    marks: Vector
    comarks: Vector
    d: Vector
    coxeter: int
    dual_coxeter: int

    @property
    def rank(self) -> int:
        return self.lie_type.rank

    @property
    def rho(self) -> Vector:
        return (1,) * self.rank

    @property
    def cartan_det(self) -> int:
        return la.det(self.cartan)

    def pair_highest_coroot(self, f) -> int:
        """f(K_{alpha_0}) / 2 pi i for a weight ``f`` in the weight basis."""
        return sum(a * b for a, b in zip(f, self.comarks))

    def to_root_coords(self, f) -> tuple[Fraction, ...]:
        """Express a weight-basis vector in the simple-root basis."""
        inv = la.inverse(self.cartan)
        return tuple(la.matvec(la.transpose(inv), f))


def root_lengths(rs_or_cartan) -> tuple[Fraction, ...]:
    """Relative squared lengths of the simple roots, long roots normalised to 1.

    Uses ``len(alpha_i) / len(alpha_j) = C_ij / C_ji`` along Dynkin edges.
    """
    c = rs_or_cartan.cartan if isinstance(rs_or_cartan, RootSystem) else rs_or_cartan
    r = len(c)
    lengths: list[Fraction | None] = [None] * r
    lengths[0] = Fraction(1)
    queue = deque([0])
    while queue:
        i = queue.popleft()
        for j in range(r):
            if j != i and c[i][j] != 0 and lengths[j] is None:
                lengths[j] = lengths[i] * Fraction(c[j][i], c[i][j])
                queue.append(j)
    if any(x is None for x in lengths):
        raise InvalidType("Dynkin diagram is not connected")
    top = max(lengths)
    return tuple(x / top for x in lengths)


def _positive_roots(cartan) -> list[Vector]:
    """Positive roots in simple-root coordinates, by reflection closure."""
    r = len(cartan)
    simple = [tuple(int(i == j) for j in range(r)) for i in range(r)]
    seen = set(simple)
    order = list(simple)
    queue = deque(simple)
    while queue:
        beta = queue.popleft()
        for j in range(r):
            pairing = sum(beta[i] * cartan[i][j] for i in range(r))
            if pairing == 0:
                continue
            gamma = tuple(b - pairing * int(i == j) for i, b in enumerate(beta))
            if min(gamma) < 0 or gamma in seen:
                continue
            seen.add(gamma)
            order.append(gamma)
            queue.append(gamma)
        # E8 has the most positive roots of any simple type: 120
        if len(order) > 120:
            raise AssertionError("positive root enumeration did not terminate")
    order.sort(key=lambda v: (sum(v), v))
    return order


@lru_cache(maxsize=None)
def build_root_system(t: LieType) -> RootSystem:
    c = cartan_matrix(t)
    pos_s = _positive_roots(c)
    pos_w = [tuple(la.matvec(la.transpose(c), v)) for v in pos_s]

    highest_s = max(pos_s, key=sum)
    highest_w = tuple(la.matvec(la.transpose(c), highest_s))
    marks_q = la.solve(la.transpose(c), highest_w)
    if any(x.denominator != 1 for x in marks_q):
        raise AssertionError(f"non-integral marks for {t}")
    marks = tuple(int(x) for x in marks_q)

    lengths = root_lengths(c)
    d_q = [1 / x for x in lengths]
    if any(x.denominator != 1 for x in d_q):
        raise AssertionError(f"non-integral length ratios for {t}")
    d = tuple(int(x) for x in d_q)

    comarks = []
    for n_i, d_i in zip(marks, d):
        if n_i % d_i:
            raise AssertionError(f"mark {n_i} not divisible by {d_i} for {t}")
        comarks.append(n_i // d_i)

    return RootSystem(
        lie_type=t,
        cartan=tuple(tuple(row) for row in c),
        simple_roots_w=tuple(tuple(row) for row in c),
        positive_roots_w=tuple(pos_w),
        positive_roots_s=tuple(pos_s),
        highest_root_w=highest_w,
        marks=marks,
        comarks=tuple(comarks),
        d=d,
        coxeter=1 + sum(marks),
        dual_coxeter=1 + sum(comarks),
    )


def root_system(name: str | LieType) -> RootSystem:
    """Convenience wrapper accepting ``"C3"`` style strings."""
    t = name if isinstance(name, LieType) else LieType.parse(name)
    return build_root_system(t)
