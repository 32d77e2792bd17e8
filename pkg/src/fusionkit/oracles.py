"""Brute-force cross-checks that enumerate Q_n instead of using Smith normal form.

Nothing here calls ``count_fixed``; the only shared machinery is the
canonical coordinate system of the quotient.
"""
from __future__ import annotations

import numpy as np

from . import _linalg as la
from .abelian_quotient import FiniteQuotient, enumerate_quotient
from .weyl_group import WeylGroup


def _residue_table(q: FiniteQuotient, W: WeylGroup, limit: int):
    """(elements, images) where images[w][x] is the flat index of w.x."""
    elements = np.array(enumerate_quotient(q, limit), dtype=np.int64)
    d = np.array(q.invariant_factors, dtype=np.int64)
    elements = elements.reshape(q.order, len(d))
    radix = np.ones(len(d), dtype=np.int64)
    for i in range(len(d) - 2, -1, -1):
        radix[i] = radix[i + 1] * d[i + 1]
    images = np.empty((len(W), q.order), dtype=np.int64)
    for i, a in enumerate(q.weyl_action(W)):
        a = np.array(a, dtype=np.int64).reshape(len(d), len(d))
        img = (elements @ a.T) % d
        images[i] = img @ radix
    return elements, images


def fixed_counts_by_enumeration(q: FiniteQuotient, W: WeylGroup, limit: int = 5000) -> list[int]:
    _, images = _residue_table(q, W, limit)
    ident = np.arange(q.order)
    return [int((row == ident).sum()) for row in images]


def orbits(q: FiniteQuotient, W: WeylGroup, limit: int = 5000) -> list[list[int]]:
    _, images = _residue_table(q, W, limit)
    seen = np.zeros(q.order, dtype=bool)
    out = []
    for x in range(q.order):
        if seen[x]:
            continue
        orb = sorted(set(images[:, x].tolist()))
        seen[orb] = True
        out.append(orb)
    return out


def projector_rank(q: FiniteQuotient, W: WeylGroup, signed: bool, limit: int = 5000) -> int:
    """Exact rank of sum_w eps(w) P_w on Q[Q_n] (eps = sign or 1).

    The operator preserves the span of each orbit, so the full matrix is
    block diagonal and its rank is the sum of the blocks' ranks.
    """
    _, images = _residue_table(q, W, limit)
    signs = [w.sign if signed else 1 for w in W]
    total = 0
    seen = np.zeros(q.order, dtype=bool)
    for x in range(q.order):
        if seen[x]:
            continue
        orb = sorted(set(images[:, x].tolist()))
        seen[orb] = True
        pos = {y: i for i, y in enumerate(orb)}
        block = [[0] * len(orb) for _ in orb]
        for src in orb:
            for k, eps in enumerate(signs):
                block[pos[int(images[k, src])]][pos[src]] += eps
        total += la.rank(block)
    return total
