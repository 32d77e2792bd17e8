"""The Weyl group as integer matrices on weight-basis coordinates."""
from __future__ import annotations

import os
from collections import deque
from dataclasses import dataclass, field
from math import factorial

import numpy as np

from . import _linalg as la
from .errors import CapExceeded, InvalidInput
from .root_system import RootSystem

Mat = tuple[tuple[int, ...], ...]

DEFAULT_CAP = 1_200_000
CAP_ENV = "FUSIONKIT_WEYL_CAP"

_EXCEPTIONAL_ORDERS = {
    ("E", 6): 51_840,
    ("E", 7): 2_903_040,
    ("E", 8): 696_729_600,
    ("F", 4): 1_152,
    ("G", 2): 12,
}


def default_cap() -> int:
    env = os.environ.get(CAP_ENV)
    if not env:
        return DEFAULT_CAP
    try:
        cap = int(env)
    except ValueError:
        raise InvalidInput(f"{CAP_ENV}={env!r} is not an integer") from None
    if cap < 1:
        raise InvalidInput(f"{CAP_ENV} must be positive, got {cap}")
    return cap


def classical_order(rs: RootSystem) -> int:
    """|W| from the closed-form product formulas."""
    fam, r = rs.lie_type.family, rs.rank
    if fam == "A":
        return factorial(r + 1)
    if fam in "BC":
        return 2**r * factorial(r)
    if fam == "D":
        return 2 ** (r - 1) * factorial(r)
    return _EXCEPTIONAL_ORDERS[(fam, r)]


@dataclass(frozen=True)
class WeylElement:
    matrix: Mat
    length: int
    sign: int

    def act(self, v) -> tuple[int, ...]:
        return tuple(sum(a * b for a, b in zip(row, v)) for row in self.matrix)

    @property
    def array(self) -> np.ndarray:
        return np.array(self.matrix, dtype=np.int64)


def _key(m: Mat) -> bytes:
    return np.array(m, dtype=np.int64).tobytes()


def _identity(r: int) -> Mat:
    return tuple(tuple(int(i == j) for j in range(r)) for i in range(r))


def _matmul(a: Mat, b: Mat) -> Mat:
    bt = list(zip(*b))
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in bt) for row in a)


def simple_reflection(rs: RootSystem, i: int) -> WeylElement:
    """s_i on weight coordinates: c -> c - c_i * alpha_i.  ``i`` is 1-based."""
    r = rs.rank
    if not 1 <= i <= r:
        raise IndexError(f"simple reflection index {i} out of range 1..{r}")
    k = i - 1
    alpha = rs.cartan[k]
    m = tuple(
        tuple(int(a == b) - (alpha[a] if b == k else 0) for b in range(r))
        for a in range(r)
    )
    return WeylElement(m, 1, -1)


@dataclass
class WeylGroup:
    root_system: RootSystem
    elements: list[WeylElement]
    generators: list[WeylElement]
    _index: dict[bytes, int] = field(repr=False, default_factory=dict)

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __getitem__(self, i: int) -> WeylElement:
        return self.elements[i]

    def index(self, matrix: Mat) -> int:
        return self._index[_key(matrix)]

    def multiply(self, i: int, j: int) -> int:
        """Index of elements[i] * elements[j] (apply j first)."""
        return self.index(_matmul(self.elements[i].matrix, self.elements[j].matrix))

    def inverse(self, i: int) -> int:
        m = la.inverse(self.elements[i].matrix)
        return self.index(tuple(tuple(int(x) for x in row) for row in m))

    def conjugate(self, u: int, w: int) -> int:
        """Index of u w u^{-1}."""
        return self.multiply(self.multiply(u, w), self.inverse(u))


def generate(rs: RootSystem, cap: int | None = None) -> WeylGroup:
    """Breadth-first closure of the simple reflections.

    Element 0 is the identity; BFS depth is the word length.  Raises
    CapExceeded before doing any work when the known order is above ``cap``.
    """
    cap = default_cap() if cap is None else cap
    expected = classical_order(rs)
    if expected > cap:
        raise CapExceeded(cap, f"|W({rs.lie_type})| = {expected} exceeds cap {cap}")

    r = rs.rank
    gens = [simple_reflection(rs, i) for i in range(1, r + 1)]
    alphas = rs.cartan
    ident = _identity(r)
    elements = [WeylElement(ident, 0, 1)]
    index = {_key(ident): 0}
    queue = deque([0])
    while queue:
        g = elements[queue.popleft()]
        m = g.matrix
        for k in range(r):
            # s_k * m = m - alpha_k (outer) row_k(m)
            rowk = m[k]
            ak = alphas[k]
            h = tuple(
                tuple(x - ak[a] * y for x, y in zip(m[a], rowk)) for a in range(r)
            )
            key = _key(h)
            if key in index:
                continue
            if len(elements) >= cap:
                raise CapExceeded(cap)
            index[key] = len(elements)
            elements.append(WeylElement(h, g.length + 1, -g.sign))
            queue.append(len(elements) - 1)
    return WeylGroup(rs, elements, gens, index)


def length_by_inversions(rs: RootSystem, w: WeylElement) -> int:
    """Number of positive roots sent to negative roots."""
    positive = set(rs.positive_roots_w)
    return sum(1 for beta in rs.positive_roots_w if w.act(beta) not in positive)
