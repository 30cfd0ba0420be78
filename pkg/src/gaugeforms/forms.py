"""Exact exterior calculus on one coordinate chart of R^n.

An `OrdinaryForm` of degree p stores one `Polynomial` coefficient per strictly
increasing index tuple I of length p with entries in 1..n.  Forms whose degree
is negative or exceeds the chart dimension are canonically zero (constructing
them succeeds and yields the zero form).  The Hodge star uses the Euclidean
metric and standard orientation, and integration is over the unit cube, so
inner products of forms are exact rationals.
"""

from __future__ import annotations

from fractions import Fraction

from .poly import Polynomial, as_fraction, ZERO


def merge_indices(I: tuple, J: tuple):
    """Interleave two strictly increasing tuples.

    Returns (sign, merged) where sign is the parity of the shuffle moving
    (I, J) concatenated into sorted order, or (0, None) if they share an
    index (the wedge vanishes).
    """
    res = []
    i = j = 0
    li, lj = len(I), len(J)
    crossings = 0
    while i < li and j < lj:
        a, b = I[i], J[j]
        if a == b:
            return 0, None
        if a < b:
            res.append(a)
            i += 1
        else:
            # b jumps over the remaining entries of I
            res.append(b)
            j += 1
            crossings += li - i
    res.extend(I[i:])
    res.extend(J[j:])
    return (-1 if crossings & 1 else 1), tuple(res)


class OrdinaryForm:
    __slots__ = ("dim", "degree", "comps")

    def __init__(self, dim: int, degree: int, comps: dict | None = None, *, _trusted: bool = False):
        self.dim = dim
        self.degree = degree
        if comps is None or degree < 0 or degree > dim:
            self.comps = {}
            return
        if _trusted:
            self.comps = comps
            return
        clean = {}
        for I, poly in comps.items():
            I = tuple(I)
            if len(I) != degree or any(not 1 <= k <= dim for k in I) or list(I) != sorted(set(I)):
                raise ValueError(f"bad index tuple {I} for degree {degree}, dim {dim}")
            if not isinstance(poly, Polynomial):
                poly = Polynomial.constant(dim, poly)
            if poly.dim != dim:
                raise ValueError("polynomial dimension mismatch")
            if poly:
                clean[I] = poly
        self.comps = clean

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, dim: int, degree: int) -> "OrdinaryForm":
        return cls(dim, degree)

    @classmethod
    def constant(cls, dim: int, c) -> "OrdinaryForm":
        """The constant 0-form c."""
        p = Polynomial.constant(dim, c)
        return cls(dim, 0, {(): p} if p else None, _trusted=True)

    @classmethod
    def from_poly(cls, poly: Polynomial) -> "OrdinaryForm":
        return cls(poly.dim, 0, {(): poly} if poly else None, _trusted=True)

    @classmethod
    def dx(cls, dim: int, *indices: int) -> "OrdinaryForm":
        """Basis monomial dx^{i1} ^ ... ^ dx^{ip} (indices strictly increasing)."""
        return cls(dim, len(indices), {tuple(indices): Polynomial.constant(dim, 1)})

    # -- predicates --------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.comps

    def __bool__(self) -> bool:
        return bool(self.comps)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, OrdinaryForm)
            and self.dim == other.dim
            and self.degree == other.degree
            and self.comps == other.comps
        )

    def __hash__(self):
        return hash((self.dim, self.degree, frozenset(self.comps.items())))

    # -- linear structure --------------------------------------------------

    def __add__(self, other: "OrdinaryForm") -> "OrdinaryForm":
        if self.dim != other.dim or self.degree != other.degree:
            raise ValueError("form dimension/degree mismatch")
        if not self.comps:
            return other
        if not other.comps:
            return self
        comps = dict(self.comps)
        for I, p in other.comps.items():
            s = comps.get(I)
            s = p if s is None else s + p
            if s:
                comps[I] = s
            elif I in comps:
                del comps[I]
        return OrdinaryForm(self.dim, self.degree, comps, _trusted=True)

    def __neg__(self) -> "OrdinaryForm":
        return OrdinaryForm(
            self.dim, self.degree, {I: -p for I, p in self.comps.items()}, _trusted=True
        )

    def __sub__(self, other: "OrdinaryForm") -> "OrdinaryForm":
        return self + (-other)

    def scale(self, c) -> "OrdinaryForm":
        c = as_fraction(c)
        if c == 0:
            return OrdinaryForm(self.dim, self.degree)
        if c == 1:
            return self
        return OrdinaryForm(
            self.dim, self.degree, {I: p.scale(c) for I, p in self.comps.items()}, _trusted=True
        )

    def scale_poly(self, poly: Polynomial) -> "OrdinaryForm":
        if not poly:
            return OrdinaryForm(self.dim, self.degree)
        comps = {}
        for I, p in self.comps.items():
            q = poly * p
            if q:
                comps[I] = q
        return OrdinaryForm(self.dim, self.degree, comps, _trusted=True)

    # -- exterior algebra ----------------------------------------------------

    def wedge(self, other: "OrdinaryForm") -> "OrdinaryForm":
        if self.dim != other.dim:
            raise ValueError("chart dimension mismatch")
        deg = self.degree + other.degree
        if deg > self.dim or not self.comps or not other.comps:
            return OrdinaryForm(self.dim, deg)
        comps: dict = {}
        for I, p in self.comps.items():
            for J, q in other.comps.items():
                sign, K = merge_indices(I, J)
                if sign == 0:
                    continue
                r = p * q
                if not r:
                    continue
                if sign < 0:
                    r = -r
                s = comps.get(K)
                s = r if s is None else s + r
                if s:
                    comps[K] = s
                elif K in comps:
                    del comps[K]
        return OrdinaryForm(self.dim, deg, comps, _trusted=True)

    def d(self) -> "OrdinaryForm":
        """Exterior derivative (degree p+1; zero beyond top degree)."""
        deg = self.degree + 1
        if deg > self.dim:
            return OrdinaryForm(self.dim, deg)
        comps: dict = {}
        for I, poly in self.comps.items():
            for v in range(1, self.dim + 1):
                if v in I:
                    continue
                dp = poly.partial(v)
                if not dp:
                    continue
                sign, K = merge_indices((v,), I)
                if sign < 0:
                    dp = -dp
                s = comps.get(K)
                s = dp if s is None else s + dp
                if s:
                    comps[K] = s
                elif K in comps:
                    del comps[K]
        return OrdinaryForm(self.dim, deg, comps, _trusted=True)

    def hodge(self) -> "OrdinaryForm":
        """Euclidean Hodge star: *(dx^I) = sign(I, I^c) dx^{I^c}."""
        n = self.dim
        deg = n - self.degree
        if self.degree < 0 or self.degree > n:
            return OrdinaryForm(n, deg)
        full = range(1, n + 1)
        comps = {}
        for I, poly in self.comps.items():
            Ic = tuple(k for k in full if k not in I)
            sign, _ = merge_indices(I, Ic)
            comps[Ic] = poly if sign > 0 else -poly
        return OrdinaryForm(n, deg, comps, _trusted=True)

    def integrate_cube(self) -> Fraction:
        """Exact integral over [0,1]^n; requires a top-degree form."""
        if self.degree != self.dim:
            raise ValueError(f"cannot integrate a {self.degree}-form over a {self.dim}-cube")
        total = ZERO
        for _, poly in self.comps.items():
            total += poly.integrate_cube()
        return total

    def inner(self, other: "OrdinaryForm") -> Fraction:
        """Euclidean symmetric inner product ((a,b)) = integral of a ^ *b."""
        if self.dim != other.dim or self.degree != other.degree:
            raise ValueError("inner product needs equal dimension and degree")
        return self.wedge(other.hodge()).integrate_cube()

    def __repr__(self) -> str:
        if not self.comps:
            return f"0[{self.degree}-form]"
        bits = []
        for I in sorted(self.comps):
            dx = "^".join(f"dx{k}" for k in I) or "1"
            bits.append(f"({self.comps[I]}) {dx}")
        return " + ".join(bits)


# -- module-level operation surface ---------------------------------------

def wedge(a: OrdinaryForm, b: OrdinaryForm) -> OrdinaryForm:
    return a.wedge(b)


def ext_d(a: OrdinaryForm) -> OrdinaryForm:
    return a.d()


def hodge(a: OrdinaryForm) -> OrdinaryForm:
    return a.hodge()


def integrate_cube(a: OrdinaryForm) -> Fraction:
    return a.integrate_cube()


def inner(a: OrdinaryForm, b: OrdinaryForm) -> Fraction:
    return a.inner(b)


def linear_combine(coeffs, forms) -> OrdinaryForm:
    """Componentwise linear combination of same-shape forms."""
    forms = list(forms)
    coeffs = [as_fraction(c) for c in coeffs]
    if len(coeffs) != len(forms) or not forms:
        raise ValueError("need matching nonempty coefficient/form lists")
    dim, degree = forms[0].dim, forms[0].degree
    out = OrdinaryForm(dim, degree)
    for c, f in zip(coeffs, forms):
        if f.dim != dim or f.degree != degree:
            raise ValueError("form dimension/degree mismatch")
        out = out + f.scale(c)
    return out
