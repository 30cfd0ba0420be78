"""Exact multivariate polynomials over the rationals.

Coefficients are `fractions.Fraction` (arbitrary precision, always in lowest
terms with positive denominator).  A polynomial lives on a chart of fixed
dimension `dim`; terms map exponent multi-indices (tuples of length `dim`) to
nonzero coefficients.  Zero coefficients are never stored, so structural
equality of the term tables is polynomial equality.
"""

from __future__ import annotations

from fractions import Fraction

Q = Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


def as_fraction(x) -> Fraction:
    """Coerce ints, Fractions or 'num/den' strings to Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"not an exact rational: {x!r}")


def frac_str(x: Fraction) -> str:
    """Canonical 'num/den' encoding (denominator always printed)."""
    return f"{x.numerator}/{x.denominator}"


class Polynomial:
    __slots__ = ("dim", "terms")

    def __init__(self, dim: int, terms: dict | None = None, *, _trusted: bool = False):
        self.dim = dim
        if terms is None:
            self.terms = {}
        elif _trusted:
            self.terms = terms
        else:
            clean = {}
            for exps, c in terms.items():
                c = as_fraction(c)
                if c == 0:
                    continue
                exps = tuple(exps)
                if len(exps) != dim or any(e < 0 for e in exps):
                    raise ValueError(f"bad exponent tuple {exps} for dim {dim}")
                clean[exps] = c
            self.terms = clean

    @classmethod
    def zero(cls, dim: int) -> "Polynomial":
        return cls(dim, None)

    @classmethod
    def constant(cls, dim: int, c) -> "Polynomial":
        c = as_fraction(c)
        if c == 0:
            return cls(dim)
        return cls(dim, {(0,) * dim: c}, _trusted=True)

    @classmethod
    def variable(cls, dim: int, i: int) -> "Polynomial":
        """The coordinate function x^i, i in 1..dim."""
        if not 1 <= i <= dim:
            raise ValueError(f"variable index {i} out of range 1..{dim}")
        exps = tuple(1 if k == i - 1 else 0 for k in range(dim))
        return cls(dim, {exps: ONE}, _trusted=True)

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Polynomial)
            and self.dim == other.dim
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.dim, frozenset(self.terms.items())))

    def __add__(self, other: "Polynomial") -> "Polynomial":
        if self.dim != other.dim:
            raise ValueError("dimension mismatch")
        if not self.terms:
            return other
        if not other.terms:
            return self
        terms = dict(self.terms)
        for exps, c in other.terms.items():
            s = terms.get(exps, ZERO) + c
            if s:
                terms[exps] = s
            elif exps in terms:
                del terms[exps]
        return Polynomial(self.dim, terms, _trusted=True)

    def __neg__(self) -> "Polynomial":
        return Polynomial(self.dim, {e: -c for e, c in self.terms.items()}, _trusted=True)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        if self.dim != other.dim:
            raise ValueError("dimension mismatch")
        if not self.terms or not other.terms:
            return Polynomial(self.dim)
        terms: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                key = tuple(a + b for a, b in zip(e1, e2))
                s = terms.get(key, ZERO) + c1 * c2
                if s:
                    terms[key] = s
                elif key in terms:
                    del terms[key]
        return Polynomial(self.dim, terms, _trusted=True)

    def scale(self, c) -> "Polynomial":
        c = as_fraction(c)
        if c == 0 or not self.terms:
            return Polynomial(self.dim)
        if c == 1:
            return self
        return Polynomial(self.dim, {e: c * v for e, v in self.terms.items()}, _trusted=True)

    def partial(self, i: int) -> "Polynomial":
        """Partial derivative with respect to x^i (1-based)."""
        k = i - 1
        terms = {}
        for exps, c in self.terms.items():
            e = exps[k]
            if e == 0:
                continue
            nexps = exps[:k] + (e - 1,) + exps[k + 1 :]
            terms[nexps] = terms.get(nexps, ZERO) + c * e
        return Polynomial(self.dim, {e: c for e, c in terms.items() if c}, _trusted=True)

    def integrate_cube(self) -> Fraction:
        """Exact integral over the unit cube [0,1]^dim."""
        total = ZERO
        for exps, c in self.terms.items():
            w = c
            for e in exps:
                w /= e + 1
            total += w
        return total

    def eval(self, point) -> Fraction:
        """Evaluate at a rational point (sequence of length dim)."""
        total = ZERO
        for exps, c in self.terms.items():
            v = c
            for x, e in zip(point, exps):
                if e:
                    v *= as_fraction(x) ** e
            total += v
        return total

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        bits = []
        for exps in sorted(self.terms):
            c = self.terms[exps]
            mono = "*".join(
                f"x{i+1}" + (f"^{e}" if e > 1 else "")
                for i, e in enumerate(exps)
                if e
            )
            bits.append(f"({c})" + (f"*{mono}" if mono else ""))
        return " + ".join(bits)
