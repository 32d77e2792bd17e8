"""Sparse Laurent polynomials over Q with exponents in the weight lattice."""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping

from .errors import ZeroLevel
from .root_system import RootSystem
from .weyl_group import WeylElement, WeylGroup

Exponent = tuple[int, ...]

_SUB = str.maketrans("0123456789-", "₀₁₂₃₄₅₆₇₈₉₋")


class LaurentPolynomial:
    """Element of Q[Pi] = R(T) (x) Q.  ``terms`` maps exponent -> coefficient.

    Values are treated as immutable once built; zero coefficients are never
    stored.
    """

    __slots__ = ("rank", "terms")

    def __init__(self, rank: int, terms: Mapping[Exponent, object] | Iterable = ()):
        self.rank = rank
        acc: dict[Exponent, Fraction] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for e, c in items:
            e = tuple(int(x) for x in e)
            if len(e) != rank:
                raise ValueError(f"exponent {e} has wrong length for rank {rank}")
            acc[e] = acc.get(e, Fraction(0)) + Fraction(c)
        self.terms = {e: c for e, c in sorted(acc.items()) if c != 0}

    @classmethod
    def _clean(cls, rank: int, terms: dict) -> "LaurentPolynomial":
        """Trusted constructor: nonzero Fraction coefficients, exact-length keys."""
        out = cls.__new__(cls)
        out.rank = rank
        out.terms = dict(sorted(terms.items()))
        return out

    @classmethod
    def monomial(cls, f, coeff=1) -> "LaurentPolynomial":
        f = tuple(f)
        return cls(len(f), {f: coeff})

    @classmethod
    def one(cls, rank: int) -> "LaurentPolynomial":
        return cls(rank, {(0,) * rank: 1})

    @classmethod
    def zero(cls, rank: int) -> "LaurentPolynomial":
        return cls(rank)

    def is_zero(self) -> bool:
        return not self.terms

    def __len__(self):
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms.items())

    def _coerce(self, other) -> "LaurentPolynomial":
        if isinstance(other, LaurentPolynomial):
            if other.rank != self.rank:
                raise ValueError("rank mismatch")
            return other
        return LaurentPolynomial(self.rank, {(0,) * self.rank: other})

    def __add__(self, other):
        other = self._coerce(other)
        return LaurentPolynomial(self.rank, list(self.terms.items()) + list(other.terms.items()))

    __radd__ = __add__

    def __neg__(self):
        return LaurentPolynomial(self.rank, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, LaurentPolynomial):
            c = Fraction(other)
            return LaurentPolynomial(self.rank, {e: c * v for e, v in self.terms.items()})
        other = self._coerce(other)
        out: dict[Exponent, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, Fraction(0)) + c1 * c2
        return LaurentPolynomial(self.rank, out)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, LaurentPolynomial):
            return self.rank == other.rank and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == self._coerce(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.rank, tuple(self.terms.items())))

    def __repr__(self):
        return f"LaurentPolynomial({self.rank}, {self.terms!r})"

    def render(self, family: str | None = None) -> str:
        """Human-readable form.

        Type A uses x_1 .. x_{r+1} with x_1 x_2 ... x_{r+1} = 1, where the
        fundamental weight w_i is x_1 ... x_i.  Other types print theta^(c).
        """
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.terms.items():
            mono = _render_monomial(e, family)
            if mono == "1":
                body = _fmt_coeff(abs(c))
            else:
                body = mono if abs(c) == 1 else f"{_fmt_coeff(abs(c))}·{mono}"
            parts.append(("-" if c < 0 else "+", body))
        text = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for s, body in parts[1:]:
            text += f" {s} {body}"
        return text


def _fmt_coeff(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _render_monomial(e: Exponent, family: str | None) -> str:
    if not any(e):
        return "1"
    if family == "A":
        # x_j exponent is c_j + ... + c_r
        powers = [sum(e[j:]) for j in range(len(e))]
        factors = []
        for j, p in enumerate(powers, start=1):
            if p == 0:
                continue
            name = "x" + str(j).translate(_SUB)
            factors.append(name if p == 1 else f"{name}^{p}")
        return "·".join(factors) if factors else "1"
    return "θ^(" + ",".join(str(x) for x in e) + ")"


def act(w: WeylElement, p: LaurentPolynomial, signed: bool = False) -> LaurentPolynomial:
    """w . p, or w • p = (-1)^l(w) w . p when ``signed``."""
    scale = w.sign if signed else 1
    # w permutes exponents, so no two terms collide and nothing cancels
    return LaurentPolynomial._clean(p.rank, {w.act(e): scale * c for e, c in p.terms.items()})


def antisymmetrize(W: WeylGroup, p: LaurentPolynomial) -> LaurentPolynomial:
    """Sum over W of the signed action.  Naive |W|-term sum."""
    acc: dict[Exponent, Fraction] = {}
    for w in W:
        for e, c in p.terms.items():
            we = w.act(e)
            acc[we] = acc.get(we, Fraction(0)) + w.sign * c
    return LaurentPolynomial(p.rank, acc)


def weyl_denominator(rs: RootSystem) -> LaurentPolynomial:
    """theta_rho^{-1} * prod over positive roots of (theta_alpha - 1)."""
    out = LaurentPolynomial.monomial(tuple(-x for x in rs.rho))
    for alpha in rs.positive_roots_w:
        out = out * (LaurentPolynomial.monomial(alpha) - 1)
    return out


def ideal_generators(rs: RootSystem, n: int) -> list[LaurentPolynomial]:
    """theta_{alpha_i}^{n d_i} - 1, i = 1..r.  Generates both J_n and K_n."""
    if n == 0:
        raise ZeroLevel("level n must be nonzero")
    gens = []
    for alpha, d in zip(rs.simple_roots_w, rs.d):
        gens.append(LaurentPolynomial.monomial(tuple(n * d * a for a in alpha)) - 1)
    return gens
