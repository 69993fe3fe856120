"""Exact arithmetic for finitely generated abelian groups.

Every computation in this package bottoms out here: integer matrices with
arbitrary-precision entries, Smith normal form with recorded unimodular
transforms, and finitely generated abelian groups in invariant-factor
canonical form.

Conventions
-----------

* A finitely generated abelian group is stored as ``Z^rank + Z/d1 + ... + Z/dk``
  with ``d1 | d2 | ... | dk`` and every ``di >= 2``.  This decomposition is
  unique, so equality of `FGAbelianGroup` instances is isomorphism.
* Generators of a group are ordered free first, torsion after (torsion in
  invariant-factor order).  An element is a coefficient tuple over these
  generators; torsion coordinates are reduced mod their factor.
* A boundary matrix from degree ``n`` to degree ``n-1`` acts on column
  vectors: shape = (cells in degree n-1) x (cells in degree n).
* `smith_normal_form(M)` returns ``S, U, V`` with ``U @ M @ V == S``,
  ``U`` and ``V`` unimodular, ``S`` diagonal with non-negative entries in a
  divisibility chain.  Inverses of both transforms are recorded as well, so
  kernels and lattice membership tests stay exact.

No floating point enters this module, and no fixed-width integer type is
ever used: all arithmetic is Python `int`.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from math import gcd
from typing import Iterable, Optional, Sequence


class AbelianError(ValueError):
    """Raised for malformed groups, matrices or homomorphisms."""


# ---------------------------------------------------------------------------
# Integer matrices
# ---------------------------------------------------------------------------


def _as_rows(rows: Iterable[Iterable[int]]) -> tuple[tuple[int, ...], ...]:
    out = tuple(tuple(int(x) for x in row) for row in rows)
    if out and any(len(r) != len(out[0]) for r in out):
        raise AbelianError("ragged matrix rows")
    return out


@dataclass(frozen=True)
class IntegerMatrix:
    """Immutable integer matrix with exact arithmetic.

    >>> m = IntegerMatrix.from_rows([[2, 4], [6, 8]])
    >>> m.shape
    (2, 2)
    >>> (m @ IntegerMatrix.identity(2)) == m
    True
    """

    rows: tuple[tuple[int, ...], ...]
    cols: int  # kept explicitly so 0-row matrices know their width

    def __init__(self, rows: Iterable[Iterable[int]], cols: Optional[int] = None):
        r = _as_rows(rows)
        if cols is None:
            if not r:
                raise AbelianError("column count required for matrices with no rows")
            cols = len(r[0])
        if r and len(r[0]) != cols:
            raise AbelianError("declared column count disagrees with rows")
        object.__setattr__(self, "rows", r)
        object.__setattr__(self, "cols", cols)

    # -- constructors ------------------------------------------------------

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: Optional[int] = None) -> "IntegerMatrix":
        return cls(rows, cols)

    @classmethod
    def zero(cls, n_rows: int, n_cols: int) -> "IntegerMatrix":
        return cls(tuple((0,) * n_cols for _ in range(n_rows)), n_cols)

    @classmethod
    def identity(cls, n: int) -> "IntegerMatrix":
        return cls(tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n)), n)

    @classmethod
    def diagonal(cls, entries: Sequence[int], n_rows: int, n_cols: int) -> "IntegerMatrix":
        rows = [[0] * n_cols for _ in range(n_rows)]
        for i, e in enumerate(entries):
            rows[i][i] = int(e)
        return cls(rows, n_cols)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[int]], n_rows: Optional[int] = None) -> "IntegerMatrix":
        if not columns:
            if n_rows is None:
                raise AbelianError("row count required for matrices with no columns")
            return cls(tuple(() for _ in range(n_rows)), 0)
        n = len(columns[0])
        return cls(tuple(tuple(col[i] for col in columns) for i in range(n)), len(columns))

    # -- basic queries -----------------------------------------------------

    @property
    def n_rows(self) -> int:
        return len(self.rows)

    @property
    def shape(self) -> tuple[int, int]:
        return (len(self.rows), self.cols)

    def is_zero(self) -> bool:
        return all(x == 0 for row in self.rows for x in row)

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(row[j] for row in self.rows)

    def columns(self) -> list[tuple[int, ...]]:
        return [self.column(j) for j in range(self.cols)]

    def transpose(self) -> "IntegerMatrix":
        if self.cols == 0:
            return IntegerMatrix((), len(self.rows))
        return IntegerMatrix(tuple(self.column(j) for j in range(self.cols)), len(self.rows))

    def __matmul__(self, other: "IntegerMatrix") -> "IntegerMatrix":
        if self.cols != other.n_rows:
            raise AbelianError(f"shape mismatch {self.shape} @ {other.shape}")
        ocols = other.cols
        orows = other.rows
        out = []
        for row in self.rows:
            new = [0] * ocols
            for k, a in enumerate(row):
                if a:
                    orow = orows[k]
                    for j in range(ocols):
                        b = orow[j]
                        if b:
                            new[j] += a * b
            out.append(tuple(new))
        return IntegerMatrix(tuple(out), ocols)

    def apply(self, vector: Sequence[int]) -> tuple[int, ...]:
        if len(vector) != self.cols:
            raise AbelianError("vector length disagrees with column count")
        return tuple(sum(a * v for a, v in zip(row, vector)) for row in self.rows)

    def hstack(self, other: "IntegerMatrix") -> "IntegerMatrix":
        if self.n_rows != other.n_rows:
            raise AbelianError("row mismatch in hstack")
        return IntegerMatrix(tuple(r1 + r2 for r1, r2 in zip(self.rows, other.rows)),
                             self.cols + other.cols)

    def to_lists(self) -> list[list[int]]:
        return [list(r) for r in self.rows]

    def __str__(self) -> str:
        return "[" + "; ".join(" ".join(str(x) for x in row) for row in self.rows) + "]"


# ---------------------------------------------------------------------------
# Smith normal form
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SmithNormalForm:
    """Result of a Smith decomposition ``U @ M @ V == S``.

    `U`, `V` are unimodular; `U_inv`, `V_inv` are their exact inverses.
    `diagonal` lists the non-negative diagonal of `S` (length = min(shape)),
    forming a divisibility chain; `rank` counts its nonzero entries.
    """

    S: IntegerMatrix
    U: IntegerMatrix
    V: IntegerMatrix
    U_inv: IntegerMatrix
    V_inv: IntegerMatrix

    @property
    def diagonal(self) -> tuple[int, ...]:
        n = min(self.S.shape)
        return tuple(self.S.rows[i][i] for i in range(n))

    @property
    def rank(self) -> int:
        return sum(1 for d in self.diagonal if d != 0)

    @property
    def invariant_factors(self) -> tuple[int, ...]:
        """Diagonal entries > 1, i.e. the torsion invariants of the cokernel."""
        return tuple(d for d in self.diagonal if d > 1)


def _snf_work(m: list[list[int]], n_rows: int, n_cols: int):
    """Bring `m` to Smith form in place, returning the four transforms."""
    U = [[1 if i == j else 0 for j in range(n_rows)] for i in range(n_rows)]
    Ui = [[1 if i == j else 0 for j in range(n_rows)] for i in range(n_rows)]
    V = [[1 if i == j else 0 for j in range(n_cols)] for i in range(n_cols)]
    Vi = [[1 if i == j else 0 for j in range(n_cols)] for i in range(n_cols)]

    def row_swap(i, j):
        m[i], m[j] = m[j], m[i]
        U[i], U[j] = U[j], U[i]
        # inverse: swap columns i,j of Ui
        for r in Ui:
            r[i], r[j] = r[j], r[i]

    def row_add(i, j, c):
        # row_i += c * row_j ; inverse records column op col_j -= c * col_i
        mi, mj = m[i], m[j]
        for k in range(n_cols):
            mi[k] += c * mj[k]
        ui, uj = U[i], U[j]
        for k in range(n_rows):
            ui[k] += c * uj[k]
        for r in Ui:
            r[j] -= c * r[i]

    def row_negate(i):
        m[i] = [-x for x in m[i]]
        U[i] = [-x for x in U[i]]
        for r in Ui:
            r[i] = -r[i]

    def col_swap(i, j):
        for r in m:
            r[i], r[j] = r[j], r[i]
        for r in V:
            r[i], r[j] = r[j], r[i]
        Vi[i], Vi[j] = Vi[j], Vi[i]

    def col_add(i, j, c):
        # col_i += c * col_j ; inverse records row op row_j -= c * row_i
        for r in m:
            r[i] += c * r[j]
        for r in V:
            r[i] += c * r[j]
        vi, vj = Vi[i], Vi[j]
        for k in range(n_cols):
            vj[k] -= c * vi[k]

    def col_negate(i):
        for r in m:
            r[i] = -r[i]
        for r in V:
            r[i] = -r[i]
        Vi[i] = [-x for x in Vi[i]]

    t = 0
    limit = min(n_rows, n_cols)
    while t < limit:
        # locate pivot: entry of minimal absolute value in the working block
        pivot = None
        best = None
        for i in range(t, n_rows):
            row = m[i]
            for j in range(t, n_cols):
                x = row[j]
                if x != 0 and (best is None or abs(x) < best):
                    best = abs(x)
                    pivot = (i, j)
                    if best == 1:
                        break
            if best == 1:
                break
        if pivot is None:
            break  # block is zero
        pi, pj = pivot
        if pi != t:
            row_swap(t, pi)
        if pj != t:
            col_swap(t, pj)
        if m[t][t] < 0:
            row_negate(t)

        # clear row and column t; restart if a remainder shrinks the pivot
        dirty = True
        while dirty:
            dirty = False
            p = m[t][t]
            for i in range(t + 1, n_rows):
                x = m[i][t]
                if x:
                    q = x // p
                    row_add(i, t, -q)
                    if m[i][t]:
                        row_swap(t, i)
                        if m[t][t] < 0:
                            row_negate(t)
                        dirty = True
                        break
            if dirty:
                continue
            for j in range(t + 1, n_cols):
                x = m[t][j]
                if x:
                    q = x // p
                    col_add(j, t, -q)
                    if m[t][j]:
                        col_swap(t, j)
                        if m[t][t] < 0:
                            col_negate(t)
                        dirty = True
                        break
        t += 1

    # enforce the divisibility chain d_i | d_{i+1}
    changed = True
    while changed:
        changed = False
        for i in range(limit - 1):
            a, b = m[i][i], m[i + 1][i + 1]
            if a == 0 and b != 0:
                row_swap(i, i + 1)
                col_swap(i, i + 1)
                changed = True
                continue
            if a != 0 and b % a != 0:
                # fold entry (i+1,i+1) into column i and rediagonalize 2x2 block
                col_add(i, i + 1, 1)
                g = _rediagonalize_block(m, U, Ui, V, Vi, i, n_rows, n_cols,
                                         row_add, col_add, row_swap, col_swap,
                                         row_negate, col_negate)
                del g
                changed = True
    for i in range(limit):
        if m[i][i] < 0:
            row_negate(i)
    return U, Ui, V, Vi


def _rediagonalize_block(m, U, Ui, V, Vi, t, n_rows, n_cols,
                         row_add, col_add, row_swap, col_swap, row_negate, col_negate):
    """Re-clear row/column t after a divisibility fix (local euclidean sweep)."""
    while True:
        if m[t][t] == 0:
            # pull any nonzero into the pivot from the 2x2 block
            if m[t + 1][t] != 0:
                row_swap(t, t + 1)
            elif m[t][t + 1] != 0:
                col_swap(t, t + 1)
            else:
                return 0
        if m[t][t] < 0:
            row_negate(t)
        p = m[t][t]
        moved = False
        for i in range(t + 1, n_rows):
            x = m[i][t]
            if x:
                q = x // p
                row_add(i, t, -q)
                if m[i][t]:
                    row_swap(t, i)
                    if m[t][t] < 0:
                        row_negate(t)
                    moved = True
                    break
        if moved:
            continue
        for j in range(t + 1, n_cols):
            x = m[t][j]
            if x:
                q = x // p
                col_add(j, t, -q)
                if m[t][j]:
                    col_swap(t, j)
                    if m[t][t] < 0:
                        col_negate(t)
                    moved = True
                    break
        if not moved:
            return m[t][t]


@lru_cache(maxsize=65536)
def _snf_cached(rows: tuple[tuple[int, ...], ...], n_cols: int) -> SmithNormalForm:
    work = [list(r) for r in rows]
    U, Ui, V, Vi = _snf_work(work, len(rows), n_cols)
    S = IntegerMatrix(tuple(tuple(r) for r in work), n_cols)
    return SmithNormalForm(
        S=S,
        U=IntegerMatrix(U, len(rows)),
        V=IntegerMatrix(V, n_cols),
        U_inv=IntegerMatrix(Ui, len(rows)),
        V_inv=IntegerMatrix(Vi, n_cols),
    )


def smith_normal_form(matrix: IntegerMatrix) -> SmithNormalForm:
    """Smith normal form with unimodular transforms.

    >>> snf = smith_normal_form(IntegerMatrix.from_rows([[2, 4], [6, 8]]))
    >>> snf.diagonal
    (2, 4)
    >>> (snf.U @ IntegerMatrix.from_rows([[2, 4], [6, 8]]) @ snf.V) == snf.S
    True
    """
    return _snf_cached(matrix.rows, matrix.cols)


def kernel_basis(matrix: IntegerMatrix) -> list[tuple[int, ...]]:
    """Basis of the integer kernel {x : M x = 0}; columns of V past the rank.

    The returned vectors extend to a basis of Z^cols, so the kernel lattice is
    automatically saturated (Z^n / kernel is torsion-free).
    """
    snf = smith_normal_form(matrix)
    return [snf.V.column(j) for j in range(snf.rank, matrix.cols)]


def column_space_basis(matrix: IntegerMatrix) -> list[tuple[int, ...]]:
    """Basis of the lattice spanned by the columns of `matrix`."""
    snf = smith_normal_form(matrix)
    basis = []
    for i, d in enumerate(snf.diagonal):
        if d != 0:
            col = snf.U_inv.column(i)
            basis.append(tuple(d * x for x in col))
    return basis


def solve_integer(matrix: IntegerMatrix, target: Sequence[int]) -> Optional[tuple[int, ...]]:
    """One integer solution y of ``matrix @ y == target``, or None."""
    if len(target) != matrix.n_rows:
        raise AbelianError("target length disagrees with row count")
    snf = smith_normal_form(matrix)
    rhs = snf.U.apply(target)
    z = [0] * matrix.cols
    diag = snf.diagonal
    for i, val in enumerate(rhs):
        d = diag[i] if i < len(diag) else 0
        if d == 0:
            if val != 0:
                return None
        else:
            if val % d != 0:
                return None
            if i < matrix.cols:
                z[i] = val // d
    return snf.V.apply(z)


def lattice_contains(generators: IntegerMatrix, vector: Sequence[int]) -> bool:
    """Is `vector` in the lattice spanned by the columns of `generators`?"""
    return solve_integer(generators, vector) is not None


def lattices_equal(a: IntegerMatrix, b: IntegerMatrix) -> bool:
    """Do the column lattices of `a` and `b` coincide?"""
    if a.n_rows != b.n_rows:
        raise AbelianError("ambient rank mismatch")
    return (all(lattice_contains(a, b.column(j)) for j in range(b.cols))
            and all(lattice_contains(b, a.column(j)) for j in range(a.cols)))


# ---------------------------------------------------------------------------
# Finitely generated abelian groups
# ---------------------------------------------------------------------------


def _normalize_invariant_factors(orders: Iterable[int]) -> tuple[int, ...]:
    """Fold a multiset of cyclic orders into an invariant-factor chain.

    Uses the gcd/lcm exchange (Z/a + Z/b = Z/gcd + Z/lcm), which needs no
    prime factorization and terminates because the multiset of prime
    multiplicities is rearranged towards sortedness at every exchange.
    """
    factors = [int(o) for o in orders if int(o) != 1]
    if any(o <= 0 for o in factors):
        raise AbelianError("cyclic orders must be positive")
    changed = True
    while changed:
        changed = False
        for i in range(len(factors)):
            for j in range(i + 1, len(factors)):
                a, b = factors[i], factors[j]
                if b % a != 0 and a % b != 0:
                    g = gcd(a, b)
                    factors[i], factors[j] = g, a * b // g
                    changed = True
                elif a % b == 0 and a != b:
                    factors[i], factors[j] = b, a
                    changed = True
    factors = [f for f in factors if f != 1]
    factors.sort()
    return tuple(factors)


@dataclass(frozen=True)
class FGAbelianGroup:
    """A finitely generated abelian group in invariant-factor form.

    >>> G = FGAbelianGroup(1, (2, 4))
    >>> str(G)
    'Z + Z/2 + Z/4'
    >>> G.order is None
    True
    >>> FGAbelianGroup(0, (2, 4)).order
    8
    """

    rank: int
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        if self.rank < 0:
            raise AbelianError("negative rank")
        tors = tuple(int(t) for t in self.torsion)
        object.__setattr__(self, "torsion", tors)
        for t in tors:
            if t < 2:
                raise AbelianError(f"invariant factor {t} < 2")
        for a, b in zip(tors, tors[1:]):
            if b % a != 0:
                raise AbelianError(f"invariant factors {tors} violate divisibility")

    # -- constructors ------------------------------------------------------

    @classmethod
    def trivial(cls) -> "FGAbelianGroup":
        return cls(0, ())

    @classmethod
    def free(cls, rank: int) -> "FGAbelianGroup":
        return cls(rank, ())

    @classmethod
    def cyclic(cls, order: int) -> "FGAbelianGroup":
        if order == 0:
            return cls(1, ())
        if order == 1:
            return cls(0, ())
        return cls(0, (order,))

    @classmethod
    def from_cyclic_orders(cls, orders: Iterable[int]) -> "FGAbelianGroup":
        """Group ``+ Z/o`` over `orders`; order 0 means a free Z summand."""
        orders = list(orders)
        rank = sum(1 for o in orders if o == 0)
        return cls(rank, _normalize_invariant_factors(o for o in orders if o != 0))

    # -- structure ---------------------------------------------------------

    @property
    def n_generators(self) -> int:
        return self.rank + len(self.torsion)

    @property
    def generator_orders(self) -> tuple[int, ...]:
        """Order of each canonical generator; 0 encodes infinite order."""
        return (0,) * self.rank + self.torsion

    @property
    def order(self) -> Optional[int]:
        """Group order, or None when infinite."""
        if self.rank:
            return None
        n = 1
        for t in self.torsion:
            n *= t
        return n

    @property
    def torsion_order(self) -> int:
        n = 1
        for t in self.torsion:
            n *= t
        return n

    @property
    def exponent(self) -> int:
        """lcm of element orders of the torsion part (1 if torsion-free)."""
        return self.torsion[-1] if self.torsion else 1

    def is_trivial(self) -> bool:
        return self.rank == 0 and not self.torsion

    def is_finite(self) -> bool:
        return self.rank == 0

    def is_free(self) -> bool:
        return not self.torsion

    def is_cyclic(self) -> bool:
        return self.n_generators <= 1

    def dim_mod(self, p: int) -> int:
        """Dimension of G/pG over F_p (rank plus factors divisible by p)."""
        return self.rank + sum(1 for t in self.torsion if t % p == 0)

    def torsion_part(self) -> "FGAbelianGroup":
        return FGAbelianGroup(0, self.torsion)

    def free_part(self) -> "FGAbelianGroup":
        return FGAbelianGroup(self.rank, ())

    # -- arithmetic --------------------------------------------------------

    def direct_sum(self, other: "FGAbelianGroup") -> "FGAbelianGroup":
        return FGAbelianGroup(self.rank + other.rank,
                              _normalize_invariant_factors(self.torsion + other.torsion))

    def __add__(self, other: "FGAbelianGroup") -> "FGAbelianGroup":
        return self.direct_sum(other)

    def tensor(self, other: "FGAbelianGroup") -> "FGAbelianGroup":
        """G (x) H for f.g. abelian groups."""
        orders: list[int] = []
        orders += [0] * (self.rank * other.rank)
        orders += list(other.torsion) * self.rank
        orders += list(self.torsion) * other.rank
        orders += [gcd(a, b) for a in self.torsion for b in other.torsion]
        return FGAbelianGroup.from_cyclic_orders(orders)

    def tor(self, other: "FGAbelianGroup") -> "FGAbelianGroup":
        """Tor_1(G, H); only torsion-torsion pairs contribute."""
        return FGAbelianGroup.from_cyclic_orders(
            gcd(a, b) for a in self.torsion for b in other.torsion)

    def hom_group(self, other: "FGAbelianGroup") -> "FGAbelianGroup":
        """Hom(G, H) as an abstract group."""
        orders: list[int] = []
        orders += [0] * (self.rank * other.rank)          # Hom(Z, Z)
        orders += list(other.torsion) * self.rank          # Hom(Z, Z/e)
        orders += [gcd(a, b) for a in self.torsion for b in other.torsion]
        return FGAbelianGroup.from_cyclic_orders(orders)

    def ext(self, other: "FGAbelianGroup") -> "FGAbelianGroup":
        """Ext^1(G, H)."""
        orders: list[int] = []
        orders += [a for a in self.torsion] * other.rank   # Ext(Z/a, Z)
        orders += [gcd(a, b) for a in self.torsion for b in other.torsion]
        return FGAbelianGroup.from_cyclic_orders(orders)

    # -- serialization and display ------------------------------------------

    def to_dict(self) -> dict:
        return {"rank": self.rank, "torsion": list(self.torsion)}

    @classmethod
    def from_dict(cls, data: dict) -> "FGAbelianGroup":
        return cls(int(data.get("rank", 0)), tuple(data.get("torsion", ())))

    def __str__(self) -> str:
        parts = []
        if self.rank == 1:
            parts.append("Z")
        elif self.rank > 1:
            parts.append(f"Z^{self.rank}")
        parts += [f"Z/{t}" for t in self.torsion]
        return " + ".join(parts) if parts else "0"

    __repr__ = __str__


Z = FGAbelianGroup.free(1)
Z2 = FGAbelianGroup.cyclic(2)
TRIVIAL = FGAbelianGroup.trivial()


def group_from_snf_diagonal(diagonal: Sequence[int], ambient_rank: int) -> FGAbelianGroup:
    """Cokernel Z^ambient_rank / image, image having the given SNF diagonal."""
    free = ambient_rank - sum(1 for d in diagonal if d != 0)
    torsion = [d for d in diagonal if d > 1]
    return FGAbelianGroup(free, _normalize_invariant_factors(torsion))


def cokernel(matrix: IntegerMatrix) -> FGAbelianGroup:
    """Z^rows / column-span(matrix)."""
    snf = smith_normal_form(matrix)
    return group_from_snf_diagonal(snf.diagonal, matrix.n_rows)


# ---------------------------------------------------------------------------
# Homology of free chain complexes at one spot
# ---------------------------------------------------------------------------


def homology_at(d_in: IntegerMatrix, d_out: IntegerMatrix) -> FGAbelianGroup:
    """ker(d_out) / im(d_in) for integer matrices with d_out @ d_in == 0.

    `d_in` maps into the middle free module Z^n (n = d_in.n_rows = d_out.cols);
    `d_out` maps out of it.

    >>> d_in = IntegerMatrix.from_rows([[2, 0], [0, 4]])
    >>> d_out = IntegerMatrix.zero(1, 2)
    >>> str(homology_at(d_in, d_out))
    'Z/2 + Z/4'
    """
    n = d_out.cols
    if d_in.n_rows != n:
        raise AbelianError("middle dimension mismatch between d_in and d_out")
    if not (d_out @ d_in).is_zero():
        raise AbelianError("composite d_out @ d_in is nonzero; not a chain complex")
    snf_out = smith_normal_form(d_out)
    r = snf_out.rank
    # kernel coordinates: x in ker(d_out) iff (V^-1 x) vanishes on the first r slots
    kernel_dim = n - r
    if kernel_dim == 0:
        return FGAbelianGroup.trivial()
    coords = snf_out.V_inv @ d_in  # coordinates of the image inside V-basis
    reduced = IntegerMatrix(tuple(coords.rows[r:]), d_in.cols)
    for i in range(r):
        if any(coords.rows[i][j] != 0 for j in range(d_in.cols)):
            raise AbelianError("image of d_in escapes the kernel of d_out")
    snf_q = smith_normal_form(reduced)
    return group_from_snf_diagonal(snf_q.diagonal, kernel_dim)


# ---------------------------------------------------------------------------
# Homomorphisms between f.g. abelian groups
# ---------------------------------------------------------------------------


def _normalize_hom_matrix(domain: FGAbelianGroup, codomain: FGAbelianGroup,
                          rows: Sequence[Sequence[int]]) -> tuple[tuple[int, ...], ...]:
    if len(rows) != codomain.n_generators:
        raise AbelianError("hom matrix has wrong number of rows")
    out = []
    cod_orders = codomain.generator_orders
    for i, row in enumerate(rows):
        if len(row) != domain.n_generators:
            raise AbelianError("hom matrix has wrong number of columns")
        d = cod_orders[i]
        out.append(tuple(int(x) % d if d else int(x) for x in row))
    return tuple(out)


@dataclass(frozen=True)
class GroupHom:
    """Homomorphism between f.g. abelian groups, as a matrix on canonical generators.

    Column j is the image of the j-th generator of the domain.  Torsion rows are
    stored reduced mod their invariant factor.  Construction validates
    well-definedness: a domain generator of order d must land on an element
    killed by d.
    """

    domain: FGAbelianGroup
    codomain: FGAbelianGroup
    matrix: tuple[tuple[int, ...], ...]

    def __init__(self, domain: FGAbelianGroup, codomain: FGAbelianGroup,
                 matrix: Sequence[Sequence[int]]):
        norm = _normalize_hom_matrix(domain, codomain, matrix)
        dom_orders = domain.generator_orders
        cod_orders = codomain.generator_orders
        for j, od in enumerate(dom_orders):
            if od == 0:
                continue
            for i, oc in enumerate(cod_orders):
                x = od * norm[i][j]
                if (oc == 0 and x != 0) or (oc != 0 and x % oc != 0):
                    raise AbelianError(
                        f"not a homomorphism: generator {j} of order {od} maps to an "
                        f"element not killed by {od}")
        object.__setattr__(self, "domain", domain)
        object.__setattr__(self, "codomain", codomain)
        object.__setattr__(self, "matrix", norm)

    @classmethod
    def zero(cls, domain: FGAbelianGroup, codomain: FGAbelianGroup) -> "GroupHom":
        return cls(domain, codomain,
                   [[0] * domain.n_generators for _ in range(codomain.n_generators)])

    def is_zero(self) -> bool:
        return all(x == 0 for row in self.matrix for x in row)

    def compose(self, first: "GroupHom") -> "GroupHom":
        """self o first (apply `first`, then `self`)."""
        if first.codomain != self.domain:
            raise AbelianError("non-composable homomorphisms")
        a = IntegerMatrix(self.matrix, self.domain.n_generators)
        b = IntegerMatrix(first.matrix, first.domain.n_generators)
        prod = a @ b if self.domain.n_generators else IntegerMatrix.zero(
            self.codomain.n_generators, first.domain.n_generators)
        return GroupHom(first.domain, self.codomain, prod.rows)

    def apply(self, element: Sequence[int]) -> tuple[int, ...]:
        m = IntegerMatrix(self.matrix, self.domain.n_generators)
        img = m.apply(element)
        orders = self.codomain.generator_orders
        return tuple(x % d if d else x for x, d in zip(img, orders))

    def __str__(self) -> str:
        return f"hom {self.domain} -> {self.codomain} {IntegerMatrix(self.matrix, self.domain.n_generators)}"


def _relation_matrix(group: FGAbelianGroup) -> IntegerMatrix:
    """Relations of the canonical presentation: one column d_i * e_i per torsion gen."""
    n = group.n_generators
    cols = []
    for idx, t in enumerate(group.torsion):
        col = [0] * n
        col[group.rank + idx] = t
        cols.append(col)
    return IntegerMatrix.from_columns(cols, n)


def _kernel_preimage_lattice(f: GroupHom) -> IntegerMatrix:
    """Lattice K = {x in Z^n : f(x) = 0 in codomain}, as basis columns.

    Computed as the projection of ker[F | R_cod] to the first block; contains
    the domain relations automatically.
    """
    n = f.domain.n_generators
    F = IntegerMatrix(f.matrix, n)
    R = _relation_matrix(f.codomain)
    block = F.hstack(R) if R.cols else F
    if f.codomain.n_generators == 0:
        return IntegerMatrix.identity(n)
    basis = kernel_basis(block)
    proj = [vec[:n] for vec in basis]
    reduced = column_space_basis(IntegerMatrix.from_columns(proj, n)) if proj else []
    return IntegerMatrix.from_columns(reduced, n)


def hom_homology(f_in: Optional[GroupHom], f_out: Optional[GroupHom],
                 middle: Optional[FGAbelianGroup] = None) -> FGAbelianGroup:
    """Homology ker(f_out)/im(f_in) at the shared middle group.

    Either hom may be None (treated as zero).  Used by the spectral-sequence
    page turner, where entries are abstract groups rather than free modules.
    """
    if f_in is None and f_out is None:
        if middle is None:
            raise AbelianError("middle group required when both maps are zero")
        B = middle
    else:
        B = f_out.domain if f_out is not None else f_in.codomain  # type: ignore[union-attr]
        if middle is not None and middle != B:
            raise AbelianError("middle group disagrees with the maps")
    if f_in is not None and f_in.codomain != B:
        raise AbelianError("f_in does not land in the middle group")
    if f_out is not None and f_in is not None:
        if not f_out.compose(f_in).is_zero():
            raise AbelianError("composite is nonzero; not a complex")
    n = B.n_generators
    if n == 0:
        return FGAbelianGroup.trivial()
    rel = _relation_matrix(B)
    if f_out is None:
        kernel_lat = IntegerMatrix.identity(n)
    else:
        kernel_lat = _kernel_preimage_lattice(f_out)
    img_cols = []
    if f_in is not None:
        Fin = IntegerMatrix(f_in.matrix, f_in.domain.n_generators)
        img_cols = Fin.columns()
    sub = IntegerMatrix.from_columns(list(img_cols) + rel.columns(), n)
    # write the subgroup generators in the kernel-lattice basis
    t = kernel_lat.cols
    if t == 0:
        return FGAbelianGroup.trivial()
    coords = []
    for j in range(sub.cols):
        y = solve_integer(kernel_lat, sub.column(j))
        if y is None:
            raise AbelianError("image does not lie in the kernel; maps are inconsistent")
        coords.append(y)
    quot = IntegerMatrix.from_columns(coords, t)
    snf = smith_normal_form(quot)
    return group_from_snf_diagonal(snf.diagonal, t)


def hom_image(f: GroupHom) -> FGAbelianGroup:
    """Image of f as an abstract subgroup of the codomain."""
    n = f.codomain.n_generators
    if n == 0 or f.domain.n_generators == 0:
        return FGAbelianGroup.trivial()
    # image = span(columns + relations) / relations
    rel = _relation_matrix(f.codomain)
    F = IntegerMatrix(f.matrix, f.domain.n_generators)
    span = IntegerMatrix.from_columns(F.columns() + rel.columns(), n)
    basis = column_space_basis(span)
    t = len(basis)
    if t == 0:
        return FGAbelianGroup.trivial()
    lat = IntegerMatrix.from_columns(basis, n)
    coords = []
    for j in range(rel.cols):
        y = solve_integer(lat, rel.column(j))
        if y is None:
            raise AbelianError("internal: relations escape their own span")
        coords.append(y)
    quot = IntegerMatrix.from_columns(coords, t)
    return group_from_snf_diagonal(smith_normal_form(quot).diagonal, t)


def hom_kernel(f: GroupHom) -> FGAbelianGroup:
    """Kernel of f as an abstract group."""
    n = f.domain.n_generators
    if n == 0:
        return FGAbelianGroup.trivial()
    lat = _kernel_preimage_lattice(f)
    rel = _relation_matrix(f.domain)
    t = lat.cols
    if t == 0:
        return FGAbelianGroup.trivial()
    coords = []
    for j in range(rel.cols):
        y = solve_integer(lat, rel.column(j))
        if y is None:
            raise AbelianError("internal: relations escape the kernel lattice")
        coords.append(y)
    quot = IntegerMatrix.from_columns(coords, t)
    return group_from_snf_diagonal(smith_normal_form(quot).diagonal, t)


# ---------------------------------------------------------------------------
# Universal coefficients, duality, exactness
# ---------------------------------------------------------------------------


def uct_cohomology(homology: Sequence[FGAbelianGroup]) -> list[FGAbelianGroup]:
    """Integral cohomology from integral homology of a finite free complex.

    H^n = free(H_n) + torsion(H_{n-1}).

    >>> H = [FGAbelianGroup(1), FGAbelianGroup(0, (2,))]
    >>> [str(g) for g in uct_cohomology(H)]
    ['Z', '0', 'Z/2']
    """
    out = []
    for n in range(len(homology) + 1):
        free = homology[n].free_part() if n < len(homology) else TRIVIAL
        tors = homology[n - 1].torsion_part() if 1 <= n <= len(homology) else TRIVIAL
        out.append(free + tors)
    while len(out) > len(homology):
        if out[-1].is_trivial():
            out.pop()
        else:
            break
    return out


def poincare_duality_check(homology: Sequence[FGAbelianGroup], dimension: int
                           ) -> tuple[bool, Optional[int]]:
    """Check H_k = H^{n-k} for a closed orientable n-manifold's table.

    Returns (ok, first failing degree).
    """
    cohomology = uct_cohomology(homology)

    def h(k: int) -> FGAbelianGroup:
        return homology[k] if 0 <= k < len(homology) else TRIVIAL

    def hc(k: int) -> FGAbelianGroup:
        return cohomology[k] if 0 <= k < len(cohomology) else TRIVIAL

    for k in range(dimension + 1):
        if h(k) != hc(dimension - k):
            return False, k
    return True, None


def exact_sequence_check(groups: Sequence[FGAbelianGroup], maps: Sequence[GroupHom]
                         ) -> tuple[bool, Optional[int]]:
    """Exactness at every interior node of G_0 -> G_1 -> ... -> G_k.

    `maps[i]` must be a hom G_i -> G_{i+1}.  Returns (ok, first bad node index).
    Exactness at node i means im(maps[i-1]) == ker(maps[i]) as subgroups of G_i,
    tested by comparing the corresponding lattices in the presentation of G_i.
    """
    if len(maps) != len(groups) - 1:
        raise AbelianError("need exactly one map per arrow")
    for i, f in enumerate(maps):
        if f.domain != groups[i] or f.codomain != groups[i + 1]:
            raise AbelianError(f"map {i} does not match its endpoints")
    for i in range(1, len(groups) - 1):
        G = groups[i]
        n = G.n_generators
        rel = _relation_matrix(G)
        prev = IntegerMatrix(maps[i - 1].matrix, maps[i - 1].domain.n_generators)
        im_lat = IntegerMatrix.from_columns(prev.columns() + rel.columns(), n)
        ker_lat_basis = _kernel_preimage_lattice(maps[i])
        ker_lat = IntegerMatrix.from_columns(
            ker_lat_basis.columns() + rel.columns(), n)
        if n == 0:
            continue
        if not lattices_equal(im_lat, ker_lat):
            return False, i
    return True, None


# ---------------------------------------------------------------------------
# Hom enumeration
# ---------------------------------------------------------------------------


def hom_count(domain: FGAbelianGroup, codomain: FGAbelianGroup) -> Optional[int]:
    """|Hom(domain, codomain)| when finite, else None."""
    if domain.rank and codomain.rank:
        return None
    count = 1
    for _ in range(domain.rank):
        count *= codomain.torsion_order
    for a in domain.torsion:
        for b in codomain.torsion:
            count *= gcd(a, b)
    return count


def _torsion_image_choices(order: int, codomain: FGAbelianGroup) -> list[tuple[int, ...]]:
    """Elements x of the codomain with order * x == 0, in lexicographic order."""
    per_coord: list[list[int]] = []
    for _ in range(codomain.rank):
        per_coord.append([0])
    for d in codomain.torsion:
        g = gcd(order, d)
        step = d // g
        per_coord.append([j * step for j in range(g)])
    return [tuple(x) for x in itertools.product(*per_coord)]


def enumerate_homs(domain: FGAbelianGroup, codomain: FGAbelianGroup,
                   free_bound: Optional[int] = None) -> list[GroupHom]:
    """All homomorphisms domain -> codomain, in a deterministic order.

    When the domain has free rank and the codomain is infinite, the set is
    infinite; `free_bound` then bounds the coefficients of the images of free
    generators (coefficients range over [-free_bound, free_bound] for free
    codomain coordinates).  Torsion coordinates are always enumerated fully.

    >>> len(enumerate_homs(FGAbelianGroup.cyclic(4), FGAbelianGroup(0, (2, 2))))
    4
    """
    per_generator: list[list[tuple[int, ...]]] = []
    for order in domain.generator_orders:
        if order == 0:
            if codomain.rank and free_bound is None:
                raise AbelianError(
                    "free_bound required: Hom(Z, infinite codomain) is infinite")
            free_range = (list(range(-free_bound, free_bound + 1))
                          if codomain.rank else [0])
            per_coord = [free_range] * codomain.rank + \
                        [list(range(d)) for d in codomain.torsion]
            per_generator.append([tuple(x) for x in itertools.product(*per_coord)])
        else:
            per_generator.append(_torsion_image_choices(order, codomain))
    homs = []
    for combo in itertools.product(*per_generator):
        rows = tuple(tuple(combo[j][i] for j in range(domain.n_generators))
                     for i in range(codomain.n_generators))
        homs.append(GroupHom(domain, codomain, rows))
    if not homs:
        homs = [GroupHom.zero(domain, codomain)]
    return homs


# ---------------------------------------------------------------------------
# Extensions
# ---------------------------------------------------------------------------


class ExtensionBudgetExceeded(AbelianError):
    """The exact extension enumeration was abandoned for size reasons."""


def extension_middles(sub: FGAbelianGroup, quotient: FGAbelianGroup,
                      exact_torsion_bound: int = 64) -> frozenset[FGAbelianGroup]:
    """All isomorphism types G fitting 0 -> sub -> G -> quotient -> 0.

    Extensions of a fixed quotient by a fixed subgroup are classified by
    Ext^1(quotient, sub); the free part of the quotient always splits off.
    For each class we realize the middle by an explicit presentation
    (generators of `sub` plus one generator per torsion factor d of the
    quotient, with d * gen landing on a representative of sub / d*sub) and
    normalize with Smith reduction.  This is exact for every f.g. input; the
    bound only guards against combinatorial blowup and raises when exceeded.
    """
    if sub.torsion_order > exact_torsion_bound or quotient.torsion_order > exact_torsion_bound:
        raise ExtensionBudgetExceeded(
            f"torsion beyond the exact-enumeration bound {exact_torsion_bound}")
    work = 1
    for d in quotient.torsion:
        work *= d ** sub.rank
        for t in sub.torsion:
            work *= gcd(d, t)
    if work > 200_000:
        raise ExtensionBudgetExceeded(f"{work} extension classes to scan")
    return _extension_middles_cached(sub, quotient)


@lru_cache(maxsize=16384)
def _extension_middles_cached(sub: FGAbelianGroup, quotient: FGAbelianGroup
                              ) -> frozenset[FGAbelianGroup]:
    n_sub = sub.n_generators
    q_tors = quotient.torsion
    n = n_sub + len(q_tors)
    rel_sub = _relation_matrix(sub)

    # representatives of sub / d*sub, coordinatewise
    def class_reps(d: int) -> list[tuple[int, ...]]:
        per = [list(range(d))] * sub.rank + \
              [[v for v in range(gcd(d, t))] for t in sub.torsion]
        return [tuple(x) for x in itertools.product(*per)]

    middles = set()
    for choices in itertools.product(*(class_reps(d) for d in q_tors)):
        cols = []
        for col in rel_sub.columns():
            cols.append(tuple(col) + (0,) * len(q_tors))
        for idx, (d, rep) in enumerate(zip(q_tors, choices)):
            col = [-x for x in rep] + [0] * len(q_tors)
            col[n_sub + idx] = d
            cols.append(tuple(col))
        pres = IntegerMatrix.from_columns(cols, n)
        middle = group_from_snf_diagonal(smith_normal_form(pres).diagonal, n)
        middles.add(middle + FGAbelianGroup.free(quotient.rank))
    return frozenset(middles)


def iterated_extension_set(layers: Sequence[FGAbelianGroup],
                           exact_torsion_bound: int = 64
                           ) -> tuple[frozenset[FGAbelianGroup], bool]:
    """Possible total groups of a filtration with the given successive quotients.

    `layers` are ordered from the bottom of the filtration upward: the result
    collects every G admitting a chain 0 = F_{-1} <= F_0 <= ... <= F_k = G
    with F_i / F_{i-1} isomorphic to layers[i].

    Returns (set, exact_flag).  When the exact enumeration bound is exceeded
    the set comes back empty with exact_flag False; callers then fall back to
    `extension_necessary_conditions` ("necessary-only" mode).
    """
    acc: frozenset[FGAbelianGroup] = frozenset([TRIVIAL])
    try:
        for layer in layers:
            nxt = set()
            for partial in acc:
                nxt |= extension_middles(partial, layer, exact_torsion_bound)
            acc = frozenset(nxt)
    except ExtensionBudgetExceeded:
        return frozenset(), False
    return acc, True


def extension_necessary_conditions(layers: Sequence[FGAbelianGroup],
                                   total: FGAbelianGroup) -> bool:
    """Rank additivity and torsion-cardinality divisibility (necessary only)."""
    if total.rank != sum(l.rank for l in layers):
        return False
    prod = 1
    for l in layers:
        prod *= l.torsion_order
    if all(l.rank == 0 for l in layers):
        return total.torsion_order == prod
    return prod % total.torsion_order == 0


if __name__ == "__main__":  # pragma: no cover
    import doctest

    doctest.testmod()
