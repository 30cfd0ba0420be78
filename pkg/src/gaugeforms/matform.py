"""Square matrices of forms and unipotent polynomial matrix functions.

`MatrixForm` is an r x r matrix whose entries are `OrdinaryForm`s of one
common degree; multiplication is entrywise wedge (non-commutative for odd
degrees).  `UnipotentMatrixFunction` is a degree-0 matrix with unit diagonal
and vanishing below-diagonal part, so its inverse is the finite Neumann
series (I + N)^{-1} = sum_{j<r} (-N)^j -- everything stays exact rational
polynomial arithmetic.
"""

from __future__ import annotations

from .poly import Polynomial
from .forms import OrdinaryForm


class MatrixForm:
    __slots__ = ("size", "dim", "degree", "entries")

    def __init__(self, size: int, dim: int, degree: int, entries):
        self.size = size
        self.dim = dim
        self.degree = degree
        entries = tuple(tuple(row) for row in entries)
        if len(entries) != size or any(len(r) != size for r in entries):
            raise ValueError("matrix shape mismatch")
        for row in entries:
            for e in row:
                if e.dim != dim or e.degree != degree:
                    raise ValueError("entry dimension/degree mismatch")
        self.entries = entries

    @classmethod
    def zero(cls, size: int, dim: int, degree: int) -> "MatrixForm":
        z = OrdinaryForm(dim, degree)
        return cls(size, dim, degree, [[z] * size for _ in range(size)])

    @classmethod
    def identity(cls, size: int, dim: int) -> "MatrixForm":
        one = OrdinaryForm.constant(dim, 1)
        z = OrdinaryForm(dim, 0)
        return cls(size, dim, 0,
                   [[one if i == j else z for j in range(size)] for i in range(size)])

    @classmethod
    def from_polys(cls, polys, dim: int) -> "MatrixForm":
        """Degree-0 matrix from a square table of polynomials/rationals."""
        size = len(polys)
        rows = []
        for r in polys:
            row = []
            for x in r:
                if isinstance(x, Polynomial):
                    row.append(OrdinaryForm.from_poly(x))
                elif isinstance(x, OrdinaryForm):
                    row.append(x)
                else:
                    row.append(OrdinaryForm.constant(dim, x))
            rows.append(row)
        return cls(size, dim, 0, rows)

    def is_zero(self) -> bool:
        return all(e.is_zero() for row in self.entries for e in row)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, MatrixForm)
            and self.size == other.size
            and self.degree == other.degree
            and self.entries == other.entries
        )

    def __add__(self, other: "MatrixForm") -> "MatrixForm":
        if self.size != other.size or self.degree != other.degree:
            raise ValueError("matrix shape/degree mismatch")
        return MatrixForm(self.size, self.dim, self.degree,
                          [[a + b for a, b in zip(r1, r2)]
                           for r1, r2 in zip(self.entries, other.entries)])

    def __neg__(self) -> "MatrixForm":
        return MatrixForm(self.size, self.dim, self.degree,
                          [[-e for e in row] for row in self.entries])

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "MatrixForm":
        return MatrixForm(self.size, self.dim, self.degree,
                          [[e.scale(c) for e in row] for row in self.entries])

    def scale_form_left(self, form: OrdinaryForm) -> "MatrixForm":
        return MatrixForm(self.size, self.dim, self.degree + form.degree,
                          [[form.wedge(e) for e in row] for row in self.entries])

    def scale_form_right(self, form: OrdinaryForm) -> "MatrixForm":
        return MatrixForm(self.size, self.dim, self.degree + form.degree,
                          [[e.wedge(form) for e in row] for row in self.entries])

    def matmul(self, other: "MatrixForm") -> "MatrixForm":
        if self.size != other.size or self.dim != other.dim:
            raise ValueError("matrix shape mismatch")
        n = self.size
        deg = self.degree + other.degree
        out = [[OrdinaryForm(self.dim, deg) for _ in range(n)] for _ in range(n)]
        for i in range(n):
            row = self.entries[i]
            for k in range(n):
                a = row[k]
                if a.is_zero():
                    continue
                other_row = other.entries[k]
                for j in range(n):
                    b = other_row[j]
                    if not b.is_zero():
                        out[i][j] = out[i][j] + a.wedge(b)
        return MatrixForm(n, self.dim, deg, out)

    def commutator(self, other: "MatrixForm") -> "MatrixForm":
        """[P, Q] = P^Q - (-1)^{pq} Q^P."""
        s = -1 if (self.degree * other.degree) & 1 else 1
        return self.matmul(other) - other.matmul(self).scale(s)

    def d(self) -> "MatrixForm":
        return MatrixForm(self.size, self.dim, self.degree + 1,
                          [[e.d() for e in row] for row in self.entries])

    def transpose(self) -> "MatrixForm":
        n = self.size
        return MatrixForm(n, self.dim, self.degree,
                          [[self.entries[j][i] for j in range(n)] for i in range(n)])

    def is_strictly_upper(self) -> bool:
        return all(
            self.entries[i][j].is_zero()
            for i in range(self.size)
            for j in range(self.size)
            if j <= i
        )

    def __repr__(self):
        return f"MatrixForm({self.size}x{self.size}, deg={self.degree})"


class UnipotentMatrixFunction:
    """Identity plus a strictly upper-triangular polynomial matrix."""

    __slots__ = ("mat",)

    def __init__(self, mat: MatrixForm):
        if mat.degree != 0:
            raise ValueError("group elements are 0-form matrices")
        n = mat.size
        one = OrdinaryForm.constant(mat.dim, 1)
        for i in range(n):
            if mat.entries[i][i] != one:
                raise ValueError("diagonal must be identically 1")
            for j in range(i):
                if not mat.entries[i][j].is_zero():
                    raise ValueError("below-diagonal entries must vanish")
        self.mat = mat

    @classmethod
    def identity(cls, size: int, dim: int) -> "UnipotentMatrixFunction":
        return cls(MatrixForm.identity(size, dim))

    @classmethod
    def from_nilpotent(cls, nil: MatrixForm) -> "UnipotentMatrixFunction":
        """exp of a strictly upper-triangular 0-form matrix (finite series)."""
        if not nil.is_strictly_upper():
            raise ValueError("exp needs a strictly upper-triangular argument")
        acc = MatrixForm.identity(nil.size, nil.dim)
        term = MatrixForm.identity(nil.size, nil.dim)
        fact = 1
        for j in range(1, nil.size):
            term = term.matmul(nil)
            if term.is_zero():
                break
            fact *= j
            acc = acc + term.scale(f"1/{fact}")
        return cls(acc)

    @property
    def size(self):
        return self.mat.size

    @property
    def dim(self):
        return self.mat.dim

    def __eq__(self, other):
        return isinstance(other, UnipotentMatrixFunction) and self.mat == other.mat

    def is_identity(self) -> bool:
        return self.mat == MatrixForm.identity(self.size, self.dim)

    def mul(self, other: "UnipotentMatrixFunction") -> "UnipotentMatrixFunction":
        return UnipotentMatrixFunction(self.mat.matmul(other.mat))

    def inverse(self) -> "UnipotentMatrixFunction":
        """(I + N)^{-1} = sum_{j < size} (-N)^j, exact."""
        ident = MatrixForm.identity(self.size, self.dim)
        nil = self.mat - ident
        acc = ident
        power = ident
        sign = 1
        for _ in range(1, self.size):
            power = power.matmul(nil)
            sign = -sign
            if power.is_zero():
                break
            acc = acc + power.scale(sign)
        return UnipotentMatrixFunction(acc)

    def d(self) -> MatrixForm:
        return self.mat.d()

    def __repr__(self):
        return f"Unipotent({self.size}x{self.size})"
