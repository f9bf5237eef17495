"""Exact integer Laurent polynomial arithmetic in one and two variables.

All coefficients are Python ints, so arithmetic is exact at any size.
One-variable polynomials carry a variable tag (purely informational);
two-variable polynomials are fixed in the pair (a, z).
"""

from __future__ import annotations

import enum
from typing import Iterable, Mapping


class InexactDivisionError(ArithmeticError):
    """Raised when a Laurent polynomial quotient does not exist exactly."""


def is_odd_prime(p: int) -> bool:
    if p < 3 or p % 2 == 0:
        return False
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


def is_prime(p: int) -> bool:
    return p == 2 or is_odd_prime(p)


class LaurentPoly:
    """A Laurent polynomial with integer coefficients, stored sparsely.

    The coefficient map never contains zeros; the zero polynomial has an
    empty map.  Instances are immutable and hashable.  The variable tag
    is ignored by equality and arithmetic.
    """

    __slots__ = ("_c", "var")

    def __init__(self, coeffs: Mapping[int, int] | None = None, var: str = "q"):
        c = {}
        if coeffs:
            for e, v in coeffs.items():
                if v != 0:
                    c[int(e)] = int(v)
        object.__setattr__(self, "_c", c)
        object.__setattr__(self, "var", var)

    def __setattr__(self, name, value):
        raise AttributeError("LaurentPoly is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, var: str = "q") -> "LaurentPoly":
        return cls({}, var)

    @classmethod
    def one(cls, var: str = "q") -> "LaurentPoly":
        return cls({0: 1}, var)

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1, var: str = "q") -> "LaurentPoly":
        return cls({exponent: coeff}, var)

    # -- basic queries -----------------------------------------------------

    def is_zero(self) -> bool:
        return not self._c

    def coeff(self, exponent: int) -> int:
        return self._c.get(exponent, 0)

    def terms(self) -> list[tuple[int, int]]:
        """Sorted (exponent, coefficient) pairs, ascending exponent."""
        return sorted(self._c.items())

    def exponents(self) -> list[int]:
        return sorted(self._c)

    def max_abs_exponent(self) -> int:
        """Largest |exponent| in the support; 0 for the zero polynomial."""
        if not self._c:
            return 0
        return max(abs(e) for e in self._c)

    def min_exponent(self) -> int:
        return min(self._c)

    def max_exponent(self) -> int:
        return max(self._c)

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        c = dict(self._c)
        for e, v in other._c.items():
            c[e] = c.get(e, 0) + v
        return LaurentPoly(c, self.var)

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        c = dict(self._c)
        for e, v in other._c.items():
            c[e] = c.get(e, 0) - v
        return LaurentPoly(c, self.var)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({e: -v for e, v in self._c.items()}, self.var)

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        c: dict[int, int] = {}
        for e1, v1 in self._c.items():
            for e2, v2 in other._c.items():
                e = e1 + e2
                c[e] = c.get(e, 0) + v1 * v2
        return LaurentPoly(c, self.var)

    def scale(self, k: int) -> "LaurentPoly":
        return LaurentPoly({e: k * v for e, v in self._c.items()}, self.var)

    def shift(self, d: int) -> "LaurentPoly":
        """Multiply by var**d."""
        return LaurentPoly({e + d: v for e, v in self._c.items()}, self.var)

    def __pow__(self, n: int) -> "LaurentPoly":
        if n < 0:
            raise ValueError("negative power of a Laurent polynomial")
        out = LaurentPoly.one(self.var)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def compose_power(self, k: int) -> "LaurentPoly":
        """Substitute var -> var**k (k may be negative or zero)."""
        c: dict[int, int] = {}
        for e, v in self._c.items():
            c[e * k] = c.get(e * k, 0) + v
        return LaurentPoly(c, self.var)

    def evaluate_one(self) -> int:
        """Value at var = 1, i.e. the coefficient sum."""
        return sum(self._c.values())

    # -- comparisons / hashing --------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._c == other._c

    def __hash__(self) -> int:
        return hash(frozenset(self._c.items()))

    def __repr__(self) -> str:
        return f"LaurentPoly({format_poly(self)!r})"

    # -- serialization -----------------------------------------------------

    def serialize(self) -> list[list[int]]:
        return [[e, v] for e, v in self.terms()]

    @classmethod
    def deserialize(cls, pairs: Iterable[Iterable[int]], var: str = "q") -> "LaurentPoly":
        return cls({e: v for e, v in pairs}, var)


class BiLaurent:
    """A Laurent polynomial in two variables (a, z), integer coefficients."""

    __slots__ = ("_c",)

    def __init__(self, coeffs: Mapping[tuple[int, int], int] | None = None):
        c = {}
        if coeffs:
            for k, v in coeffs.items():
                if v != 0:
                    c[(int(k[0]), int(k[1]))] = int(v)
        object.__setattr__(self, "_c", c)

    def __setattr__(self, name, value):
        raise AttributeError("BiLaurent is immutable")

    @classmethod
    def zero(cls) -> "BiLaurent":
        return cls({})

    @classmethod
    def one(cls) -> "BiLaurent":
        return cls({(0, 0): 1})

    @classmethod
    def monomial(cls, a_exp: int, z_exp: int, coeff: int = 1) -> "BiLaurent":
        return cls({(a_exp, z_exp): coeff})

    def is_zero(self) -> bool:
        return not self._c

    def terms(self) -> list[tuple[tuple[int, int], int]]:
        return sorted(self._c.items())

    def z_min(self) -> int:
        if not self._c:
            return 0
        return min(s for (_, s) in self._c)

    def __add__(self, other: "BiLaurent") -> "BiLaurent":
        c = dict(self._c)
        for k, v in other._c.items():
            c[k] = c.get(k, 0) + v
        return BiLaurent(c)

    def __sub__(self, other: "BiLaurent") -> "BiLaurent":
        c = dict(self._c)
        for k, v in other._c.items():
            c[k] = c.get(k, 0) - v
        return BiLaurent(c)

    def __neg__(self) -> "BiLaurent":
        return BiLaurent({k: -v for k, v in self._c.items()})

    def __mul__(self, other: "BiLaurent") -> "BiLaurent":
        c: dict[tuple[int, int], int] = {}
        for (r1, s1), v1 in self._c.items():
            for (r2, s2), v2 in other._c.items():
                k = (r1 + r2, s1 + s2)
                c[k] = c.get(k, 0) + v1 * v2
        return BiLaurent(c)

    def __pow__(self, n: int) -> "BiLaurent":
        if n < 0:
            raise ValueError("negative power of a BiLaurent")
        out = BiLaurent.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, BiLaurent):
            return NotImplemented
        return self._c == other._c

    def __hash__(self) -> int:
        return hash(frozenset(self._c.items()))

    def __repr__(self) -> str:
        return f"BiLaurent({self.serialize()!r})"

    def serialize(self) -> list[list]:
        return [[[r, s], v] for (r, s), v in self.terms()]

    @classmethod
    def deserialize(cls, triples) -> "BiLaurent":
        return cls({(k[0], k[1]): v for k, v in triples})


class IdealVariant(enum.Enum):
    """The three congruence ideals: (p, q^p - 1), (p, q^p + 1), (p, q^2p - 1)."""

    QP_MINUS = "qp-minus"
    QP_PLUS = "qp-plus"
    Q2P_MINUS = "q2p-minus"


class ResidueClassForm:
    """Canonical representative of a Laurent polynomial modulo an ideal.

    Coefficients lie in {0, ..., p-1}; exponent windows are
    (-p/2, p/2) for QP_MINUS and QP_PLUS, (-p, p] for Q2P_MINUS.
    Equal inputs always reduce to identical forms.
    """

    __slots__ = ("p", "variant", "_c")

    def __init__(self, p: int, variant: IdealVariant, coeffs: Mapping[int, int]):
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "variant", variant)
        object.__setattr__(self, "_c", {e: v for e, v in coeffs.items() if v != 0})

    def __setattr__(self, name, value):
        raise AttributeError("ResidueClassForm is immutable")

    def is_zero(self) -> bool:
        return not self._c

    def terms(self) -> list[tuple[int, int]]:
        return sorted(self._c.items())

    def as_poly(self) -> LaurentPoly:
        return LaurentPoly(self._c)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ResidueClassForm):
            return NotImplemented
        return (self.p, self.variant, self._c) == (other.p, other.variant, other._c)

    def __hash__(self) -> int:
        return hash((self.p, self.variant, frozenset(self._c.items())))

    def __repr__(self) -> str:
        return f"ResidueClassForm(p={self.p}, {self.variant.value}, {self.terms()})"


def _fold_exponent_centered(i: int, p: int) -> int:
    """Representative of i mod p in the window (-p/2, p/2), p odd."""
    half = (p - 1) // 2
    return ((i + half) % p) - half


def reduce(f: LaurentPoly, p: int, variant: IdealVariant) -> ResidueClassForm:
    """Normal form of f modulo the chosen ideal.

    QP_MINUS folds exponents mod p into (-p/2, p/2).  QP_PLUS folds mod 2p
    into the same window, negating the coefficient for each fold across an
    odd multiple of p (q^p = -1).  Q2P_MINUS folds mod 2p into (-p, p].
    Coefficients are reduced to {0, ..., p-1}; p = 2 is accepted for
    QP_MINUS only.
    """
    if variant is IdealVariant.QP_MINUS:
        if not (p == 2 or is_odd_prime(p)):
            raise ValueError(f"modulus must be prime (p=2 allowed here): {p}")
    else:
        if not is_odd_prime(p):
            raise ValueError(f"modulus must be an odd prime: {p}")

    c: dict[int, int] = {}
    if variant is IdealVariant.QP_MINUS:
        half = (p - 1) // 2
        for i, v in f._c.items():
            j = ((i + half) % p) - half if p > 2 else i % p
            c[j] = c.get(j, 0) + v
    elif variant is IdealVariant.QP_PLUS:
        for i, v in f._c.items():
            j = _fold_exponent_centered(i, p)
            t = (i - j) // p
            c[j] = c.get(j, 0) + (v if t % 2 == 0 else -v)
    else:  # Q2P_MINUS
        for i, v in f._c.items():
            j = ((i + p - 1) % (2 * p)) - p + 1
            c[j] = c.get(j, 0) + v
    return ResidueClassForm(p, variant, {e: v % p for e, v in c.items()})


def congruent(f: LaurentPoly, g: LaurentPoly, p: int, variant: IdealVariant) -> bool:
    """True iff f and g have the same normal form modulo the ideal."""
    return reduce(f, p, variant) == reduce(g, p, variant)


def parity_split(f: LaurentPoly) -> tuple[LaurentPoly, LaurentPoly]:
    """Split f into its even-exponent and odd-exponent parts."""
    even = {e: v for e, v in f._c.items() if e % 2 == 0}
    odd = {e: v for e, v in f._c.items() if e % 2 != 0}
    return LaurentPoly(even, f.var), LaurentPoly(odd, f.var)


def exact_divide(f: LaurentPoly, g: LaurentPoly) -> LaurentPoly:
    """Return h with h * g == f, or raise if no Laurent polynomial works.

    Division by zero raises ZeroDivisionError; an inexact quotient raises
    InexactDivisionError.
    """
    if g.is_zero():
        raise ZeroDivisionError("division of Laurent polynomial by zero")
    if f.is_zero():
        return LaurentPoly.zero(f.var)

    # Long division from the top degree; exactness forces leading-term
    # divisibility at every step.
    rem = dict(f._c)
    g_top = g.max_exponent()
    g_lead = g._c[g_top]
    g_items = list(g._c.items())
    # An exact quotient h has min exponent f_min - g_min; going below
    # that means the division cannot terminate.
    qe_floor = f.min_exponent() - g.min_exponent()
    quot: dict[int, int] = {}
    while rem:
        top = max(rem)
        lead = rem[top]
        if lead % g_lead != 0:
            raise InexactDivisionError("quotient is not a Laurent polynomial")
        qc = lead // g_lead
        qe = top - g_top
        if qe < qe_floor:
            raise InexactDivisionError("quotient is not a Laurent polynomial")
        quot[qe] = qc
        for e, v in g_items:
            k = e + qe
            nv = rem.get(k, 0) - qc * v
            if nv:
                rem[k] = nv
            else:
                rem.pop(k, None)
        if top in rem:
            raise InexactDivisionError("quotient is not a Laurent polynomial")
    return LaurentPoly(quot, f.var)


def quantum_integer(N: int, var: str = "q") -> LaurentPoly:
    """q^(N-1) + q^(N-3) + ... + q^(-N+1), for N >= 1."""
    if N < 1:
        raise ValueError(f"N must be >= 1: {N}")
    return LaurentPoly({e: 1 for e in range(-N + 1, N, 2)}, var)


def format_poly(f: LaurentPoly) -> str:
    """Render in ascending exponent order with explicit signs."""
    if f.is_zero():
        return "0"
    parts = []
    for e, v in f.terms():
        sign = "-" if v < 0 else "+"
        mag = abs(v)
        if e == 0:
            body = str(mag)
        else:
            x = f.var if e == 1 else f"{f.var}^{e}"
            body = x if mag == 1 else f"{mag}{x}"
        parts.append((sign, body))
    first_sign, first_body = parts[0]
    out = (("-" if first_sign == "-" else "") + first_body)
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


def format_bilaurent(f: BiLaurent) -> str:
    """Render a polynomial in (a, z), sorted by (a-exp, z-exp)."""
    if f.is_zero():
        return "0"
    parts = []
    for (r, s), v in f.terms():
        sign = "-" if v < 0 else "+"
        mag = abs(v)
        factors = []
        if mag != 1 or (r == 0 and s == 0):
            factors.append(str(mag))
        if r != 0:
            factors.append("a" if r == 1 else f"a^{r}")
        if s != 0:
            factors.append("z" if s == 1 else f"z^{s}")
        parts.append((sign, "".join(factors)))
    first_sign, first_body = parts[0]
    out = (("-" if first_sign == "-" else "") + first_body)
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out
