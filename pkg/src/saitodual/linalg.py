"""Exact integer and rational linear algebra.

Everything here works on arbitrary-precision Python integers; there is no
floating point anywhere.  The module provides fraction-free determinants,
a column-style Hermite normal form, the Smith normal form with transform
accumulation, and the small set of lattice primitives the group layer is
built on.

HNF convention used throughout the package: for a matrix of full column
rank, H = M*U is column-echelon with the pivot of each column strictly
below the pivot of the previous one, pivots positive, and every entry to
the right of a pivot reduced into [0, pivot).  For square nonsingular
input this makes H upper triangular.  Two generating sets spanning the
same column lattice produce the identical H.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from .errors import DimensionError, RankError, SingularMatrixError


class IntMatrix:
    """Immutable matrix of exact integers, stored row-major."""

    __slots__ = ("_rows", "_hash", "_tri")

    def __init__(self, rows):
        data = []
        width = None
        for row in rows:
            tup = tuple(int(x) for x in row)
            if width is None:
                width = len(tup)
            elif len(tup) != width:
                raise DimensionError("rows have unequal lengths")
            data.append(tup)
        if not data or width == 0:
            raise DimensionError("matrix must have at least one row and column")
        self._rows = tuple(data)
        self._hash = None
        self._tri = None

    @classmethod
    def _wrap(cls, rows):
        """Trusted constructor: ``rows`` must already be a tuple of equal
        length tuples of ints."""
        m = object.__new__(cls)
        m._rows = rows
        m._hash = None
        m._tri = None
        return m

    @classmethod
    def identity(cls, n):
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def diagonal(cls, entries):
        entries = list(entries)
        n = len(entries)
        return cls([[entries[i] if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def from_columns(cls, columns):
        cols = [list(c) for c in columns]
        return cls([[c[i] for c in cols] for i in range(len(cols[0]))])

    @property
    def rows(self):
        return self._rows

    @property
    def nrows(self):
        return len(self._rows)

    @property
    def ncols(self):
        return len(self._rows[0])

    def is_square(self):
        return self.nrows == self.ncols

    def entry(self, i, j):
        return self._rows[i][j]

    def row(self, i):
        return self._rows[i]

    def column(self, j):
        return tuple(r[j] for r in self._rows)

    def columns(self):
        return [self.column(j) for j in range(self.ncols)]

    def to_lists(self):
        return [list(r) for r in self._rows]

    def flat(self):
        """Row-major flat tuple of all entries."""
        return tuple(x for r in self._rows for x in r)

    def transpose(self):
        return IntMatrix._wrap(tuple(
            tuple(self._rows[i][j] for i in range(self.nrows))
            for j in range(self.ncols)))

    def submatrix(self, row_indices, col_indices):
        return IntMatrix([[self._rows[i][j] for j in col_indices]
                          for i in row_indices])

    def hstack(self, other):
        if other.nrows != self.nrows:
            raise DimensionError("row counts differ")
        return IntMatrix([list(a) + list(b)
                          for a, b in zip(self._rows, other._rows)])

    def __mul__(self, other):
        if not isinstance(other, IntMatrix):
            return NotImplemented
        if self.ncols != other.nrows:
            raise DimensionError("inner dimensions do not match")
        cols = list(zip(*other._rows))
        return IntMatrix([[sum(a * b for a, b in zip(row, col)) for col in cols]
                          for row in self._rows])

    def scale(self, k):
        return IntMatrix([[k * x for x in row] for row in self._rows])

    def apply_to_vector(self, vec):
        """Matrix-vector product with an integer sequence."""
        return tuple(sum(a * b for a, b in zip(row, vec)) for row in self._rows)

    def _triangularity(self):
        if self._tri is None:
            upper = all(self._rows[i][j] == 0
                        for i in range(self.nrows)
                        for j in range(min(i, self.ncols)))
            lower = all(self._rows[i][j] == 0
                        for i in range(self.nrows)
                        for j in range(i + 1, self.ncols))
            self._tri = (upper, lower)
        return self._tri

    def is_upper_triangular(self):
        return self._triangularity()[0]

    def is_lower_triangular(self):
        return self._triangularity()[1]

    def __eq__(self, other):
        return isinstance(other, IntMatrix) and self._rows == other._rows

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self._rows)
        return self._hash

    def __repr__(self):
        return f"IntMatrix({[list(r) for r in self._rows]})"


def extended_gcd(a, b):
    """Return (g, x, y) with g = gcd(a, b) >= 0 and a*x + b*y = g."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r != 0:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        return -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def determinant(m):
    """Exact determinant by fraction-free (Bareiss) elimination."""
    if not isinstance(m, IntMatrix):
        m = IntMatrix(m)
    if not m.is_square():
        raise DimensionError("determinant requires a square matrix")
    n = m.nrows
    a = m.to_lists()
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i = a[i]
            row_k = a[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pivot - aik * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * a[n - 1][n - 1]


def _column_combine(h, u, j_keep, j_kill, i):
    """Unimodular column operation zeroing h[i][j_kill] into h[i][j_keep]."""
    a = h[i][j_keep]
    b = h[i][j_kill]
    if b == 0:
        return
    if a != 0 and b % a == 0:
        # Elementary operation; leaves the kept column untouched.
        q = b // a
        for mats in (h, u) if u is not None else (h,):
            for row in mats:
                row[j_kill] -= q * row[j_keep]
        return
    g, x, y = extended_gcd(a, b)
    ag = a // g
    bg = b // g
    for mats in (h, u) if u is not None else (h,):
        for row in mats:
            ck, cl = row[j_keep], row[j_kill]
            row[j_keep] = x * ck + y * cl
            row[j_kill] = ag * cl - bg * ck


def _negate_column(h, u, j):
    for mats in (h, u) if u is not None else (h,):
        for row in mats:
            row[j] = -row[j]


def _add_column_multiple(h, u, j_target, j_source, q):
    if q == 0:
        return
    for mats in (h, u) if u is not None else (h,):
        for row in mats:
            row[j_target] -= q * row[j_source]


def _hnf_core(m, accumulate):
    """Column-style HNF on a list-of-lists copy.

    Returns (h, u, pivots) where pivots is a list of (row, col) pairs from
    bottom to top and u is None unless transform accumulation was requested.
    """
    nrows = len(m)
    ncols = len(m[0])
    h = [list(r) for r in m]
    u = [[1 if i == j else 0 for j in range(ncols)] for i in range(ncols)] \
        if accumulate else None
    pivots = []
    boundary = ncols
    for i in range(nrows - 1, -1, -1):
        if boundary == 0:
            break
        target = boundary - 1
        for j in range(target):
            _column_combine(h, u, target, j, i)
        if h[i][target] < 0:
            _negate_column(h, u, target)
        if h[i][target] != 0:
            pivots.append((i, target))
            boundary -= 1
    # Reduce entries right of each pivot, bottom pivot first.
    for i, j in pivots:
        p = h[i][j]
        for j2 in range(j + 1, ncols):
            _add_column_multiple(h, u, j2, j, h[i][j2] // p)
    return h, u, pivots


def hermite_normal_form(m):
    """Column-style Hermite normal form.

    Returns (H, U) with H = M*U, U unimodular, following the convention
    documented in the module docstring.  Raises RankError when the columns
    of M are linearly dependent.
    """
    if not isinstance(m, IntMatrix):
        m = IntMatrix(m)
    h, u, pivots = _hnf_core(m.rows, accumulate=True)
    if len(pivots) < m.ncols:
        raise RankError("matrix does not have full column rank")
    return (IntMatrix._wrap(tuple(tuple(r) for r in h)),
            IntMatrix._wrap(tuple(tuple(r) for r in u)))


def lattice_basis(columns, dim):
    """Canonical HNF basis of the full-rank lattice spanned by ``columns``.

    ``columns`` is an iterable of integer vectors of length ``dim``.
    Redundant generators are allowed; the result is the unique dim x dim
    canonical basis.  Raises RankError if the span has rank < dim.
    """
    cols = [tuple(c) for c in columns]
    if not cols:
        raise RankError("no generators supplied")
    m = [[c[i] for c in cols] for i in range(dim)]
    h, _, pivots = _hnf_core(m, accumulate=False)
    rank = len(pivots)
    if rank < dim:
        raise RankError("generators do not span a full-rank lattice")
    drop = len(cols) - dim
    return IntMatrix._wrap(tuple(tuple(row[drop:]) for row in h))


def smith_normal_form(m):
    """Smith normal form with transforms.

    Returns (S, U, V) with S = U*M*V diagonal, d_1 | d_2 | ... | d_n all
    positive, and U, V unimodular.  Requires square nonsingular input.
    """
    if not isinstance(m, IntMatrix):
        m = IntMatrix(m)
    if not m.is_square():
        raise DimensionError("Smith normal form requires a square matrix")
    n = m.nrows
    s = m.to_lists()
    u = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    v = [[1 if i == j else 0 for j in range(n)] for i in range(n)]

    def row_combine(k, i):
        # Zero s[i][k] against the pivot s[k][k]; left transform.  The
        # elementary fast path keeps the pivot row untouched, which makes
        # the clearing loop terminate once the pivot divides everything.
        a, b = s[k][k], s[i][k]
        if b == 0:
            return
        if a != 0 and b % a == 0:
            q = b // a
            for mat in (s, u):
                rk, ri = mat[k], mat[i]
                for j in range(len(rk)):
                    ri[j] -= q * rk[j]
            return
        g, x, y = extended_gcd(a, b)
        ag, bg = a // g, b // g
        for mat in (s, u):
            rk, ri = mat[k], mat[i]
            for j in range(len(rk)):
                rk[j], ri[j] = x * rk[j] + y * ri[j], ag * ri[j] - bg * rk[j]

    def col_combine(k, j):
        # Zero s[k][j] against the pivot s[k][k]; right transform.
        a, b = s[k][k], s[k][j]
        if b == 0:
            return
        if a != 0 and b % a == 0:
            q = b // a
            for mat in (s, v):
                for row in mat:
                    row[j] -= q * row[k]
            return
        g, x, y = extended_gcd(a, b)
        ag, bg = a // g, b // g
        for mat in (s, v):
            for row in mat:
                ck, cj = row[k], row[j]
                row[k] = x * ck + y * cj
                row[j] = ag * cj - bg * ck

    def clear_at(k):
        while True:
            for i in range(k + 1, n):
                row_combine(k, i)
            dirty = False
            for j in range(k + 1, n):
                if s[k][j] != 0:
                    col_combine(k, j)
                    dirty = True
            if not dirty:
                return

    for k in range(n):
        if s[k][k] == 0:
            found = False
            for i in range(k, n):
                for j in range(k, n):
                    if s[i][j] != 0:
                        if i != k:
                            s[k], s[i] = s[i], s[k]
                            u[k], u[i] = u[i], u[k]
                        if j != k:
                            for mat in (s, v):
                                for row in mat:
                                    row[k], row[j] = row[j], row[k]
                        found = True
                        break
                if found:
                    break
            if not found:
                raise SingularMatrixError("matrix is singular")
        clear_at(k)

    # Enforce the divisibility chain d_1 | d_2 | ... | d_n.
    changed = True
    while changed:
        changed = False
        for k in range(n - 1):
            a, b = s[k][k], s[k + 1][k + 1]
            if b % a != 0:
                # Pull column k+1 into column k, then re-diagonalize.
                for mat in (s, v):
                    for row in mat:
                        row[k] += row[k + 1]
                clear_at(k)
                clear_at(k + 1)
                changed = True

    for k in range(n):
        if s[k][k] < 0:
            for j in range(n):
                s[k][j] = -s[k][j]
                u[k][j] = -u[k][j]
        if s[k][k] == 0:
            raise SingularMatrixError("matrix is singular")
    return IntMatrix(s), IntMatrix(u), IntMatrix(v)


def invariant_factors(m):
    """Diagonal of the Smith normal form as a tuple d_1 | ... | d_n."""
    s, _, _ = smith_normal_form(m)
    return tuple(s.entry(i, i) for i in range(s.nrows))


def _solve_upper_triangular(rows, col, n):
    """Solve R*x = col for upper-triangular R with exact integer result."""
    x = [0] * n
    for i in range(n - 1, -1, -1):
        acc = col[i]
        row = rows[i]
        for j in range(i + 1, n):
            acc -= row[j] * x[j]
        q, r = divmod(acc, row[i])
        if r != 0:
            return None
        x[i] = q
    return x


def _solve_lower_triangular(rows, col, n):
    x = [0] * n
    for i in range(n):
        acc = col[i]
        row = rows[i]
        for j in range(i):
            acc -= row[j] * x[j]
        q, r = divmod(acc, row[i])
        if r != 0:
            return None
        x[i] = q
    return x


def scaled_inverse(m, scalar):
    """Return scalar * M^{-1} as an IntMatrix.

    Raises SingularMatrixError on singular input and ValueError when the
    scaled inverse is not integral.  Triangular inputs take an exact
    integer fast path; the general case runs rational Gauss-Jordan.
    """
    if not isinstance(m, IntMatrix):
        m = IntMatrix(m)
    if not m.is_square():
        raise DimensionError("inverse requires a square matrix")
    n = m.nrows
    rows = m.rows
    if m.is_upper_triangular() or m.is_lower_triangular():
        if any(rows[i][i] == 0 for i in range(n)):
            raise SingularMatrixError("matrix is singular")
        solve = (_solve_upper_triangular if m.is_upper_triangular()
                 else _solve_lower_triangular)
        cols = []
        for j in range(n):
            e = [scalar if i == j else 0 for i in range(n)]
            x = solve(rows, e, n)
            if x is None:
                raise ValueError("scaled inverse is not integral")
            cols.append(x)
        return IntMatrix._wrap(tuple(tuple(c[i] for c in cols)
                                     for i in range(n)))

    a = [[Fraction(x) for x in row] + [Fraction(scalar) if i == j else Fraction(0)
                                       for j in range(n)]
         for i, row in enumerate(rows)]
    for k in range(n):
        pivot_row = next((i for i in range(k, n) if a[i][k] != 0), None)
        if pivot_row is None:
            raise SingularMatrixError("matrix is singular")
        if pivot_row != k:
            a[k], a[pivot_row] = a[pivot_row], a[k]
        pk = a[k][k]
        a[k] = [x / pk for x in a[k]]
        for i in range(n):
            if i != k and a[i][k] != 0:
                f = a[i][k]
                a[i] = [x - f * y for x, y in zip(a[i], a[k])]
    out = []
    for i in range(n):
        row = []
        for j in range(n, 2 * n):
            val = a[i][j]
            if val.denominator != 1:
                raise ValueError("scaled inverse is not integral")
            row.append(val.numerator)
        out.append(tuple(row))
    return IntMatrix._wrap(tuple(out))


def lattice_solve(basis, vector):
    """Integer coordinates x with basis*x = vector, or None.

    ``basis`` must be square nonsingular; triangular bases (the canonical
    HNF case) avoid rational arithmetic entirely.
    """
    n = basis.nrows
    if basis.is_upper_triangular():
        return _solve_upper_triangular(basis.rows, list(vector), n)
    if basis.is_lower_triangular():
        return _solve_lower_triangular(basis.rows, list(vector), n)
    a = [[Fraction(x) for x in row] for row in basis.rows]
    b = [Fraction(x) for x in vector]
    for k in range(n):
        pivot_row = next((i for i in range(k, n) if a[i][k] != 0), None)
        if pivot_row is None:
            raise SingularMatrixError("basis is singular")
        if pivot_row != k:
            a[k], a[pivot_row] = a[pivot_row], a[k]
            b[k], b[pivot_row] = b[pivot_row], b[k]
        for i in range(k + 1, n):
            if a[i][k] != 0:
                f = a[i][k] / a[k][k]
                a[i] = [x - f * y for x, y in zip(a[i], a[k])]
                b[i] -= f * b[k]
    x = [Fraction(0)] * n
    for i in range(n - 1, -1, -1):
        acc = b[i]
        for j in range(i + 1, n):
            acc -= a[i][j] * x[j]
        x[i] = acc / a[i][i]
    if any(val.denominator != 1 for val in x):
        return None
    return [val.numerator for val in x]


def lattice_member(basis, vector):
    """True when ``vector`` lies in the column lattice of ``basis``."""
    return lattice_solve(basis, vector) is not None


class RationalVector:
    """Vector of rationals with a shared positive denominator.

    Stored in lowest shared terms: the gcd of all numerators and the
    denominator is 1, so equal vectors are syntactically equal.
    """

    __slots__ = ("_nums", "_den")

    def __init__(self, numerators, denominator=1):
        den = int(denominator)
        if den == 0:
            raise ZeroDivisionError("denominator must be nonzero")
        nums = [int(x) for x in numerators]
        if not nums:
            raise DimensionError("vector must have at least one coordinate")
        if den < 0:
            den = -den
            nums = [-x for x in nums]
        g = den
        for x in nums:
            g = gcd(g, x)
            if g == 1:
                break
        if g > 1:
            nums = [x // g for x in nums]
            den //= g
        self._nums = tuple(nums)
        self._den = den

    @classmethod
    def from_fractions(cls, fracs):
        fracs = [Fraction(f) for f in fracs]
        den = 1
        for f in fracs:
            den = den * f.denominator // gcd(den, f.denominator)
        return cls([f.numerator * (den // f.denominator) for f in fracs], den)

    @property
    def numerators(self):
        return self._nums

    @property
    def denominator(self):
        return self._den

    @property
    def dim(self):
        return len(self._nums)

    def fractions(self):
        return tuple(Fraction(x, self._den) for x in self._nums)

    def scaled(self, k):
        """Integer vector k * self; k must clear the denominator."""
        q, r = divmod(int(k), self._den)
        if r != 0:
            raise ValueError(f"{k} does not clear denominator {self._den}")
        return tuple(x * q for x in self._nums)

    def mod1(self):
        return RationalVector([x % self._den for x in self._nums], self._den)

    def __add__(self, other):
        if not isinstance(other, RationalVector):
            return NotImplemented
        d1, d2 = self._den, other._den
        g = gcd(d1, d2)
        lcm = d1 // g * d2
        m1, m2 = lcm // d1, lcm // d2
        return RationalVector(
            [a * m1 + b * m2 for a, b in zip(self._nums, other._nums)], lcm)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return RationalVector([-x for x in self._nums], self._den)

    def __mul__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        return RationalVector([k * x for x in self._nums], self._den)

    __rmul__ = __mul__

    def __eq__(self, other):
        return (isinstance(other, RationalVector)
                and self._nums == other._nums and self._den == other._den)

    def __hash__(self):
        return hash((self._nums, self._den))

    def sort_key(self):
        return tuple(Fraction(x, self._den) for x in self._nums)

    def __repr__(self):
        return f"RationalVector({list(self._nums)}, {self._den})"

    def __str__(self):
        parts = []
        for x in self._nums:
            g = gcd(x, self._den)
            num, den = x // g, self._den // g
            parts.append(str(num) if den == 1 else f"{num}/{den}")
        return "(" + ", ".join(parts) + ")"
