"""Finite CW chain complexes: Grassmannians, Stiefel manifolds, spheres.

Cell structures
---------------

* Real Grassmannian Gr(k, n): one cell per Schubert symbol, a weakly
  increasing k-tuple (a_1 <= ... <= a_k) with entries in [0, n-k]; the cell
  dimension is a_1 + ... + a_k.  The boundary coefficient towards the symbol
  with a_i lowered by one (legal when the result is still weakly increasing)
  has magnitude 0 or 2: it is 2 exactly when a_i + i + k is even, and carries
  the sign (-1)^(a_1 + ... + a_{i-1}).  Lowering a_j (j != i) never changes
  the parity governing slot i, which is what makes the square of the boundary
  vanish.
* The same cells with the orientation local system: identical sign rule,
  complementary magnitude rule (2 exactly when a_i + i + k is odd).
* Oriented Grassmannian Gr+(k, n): the double cover, two cells per symbol.
  With c the plain and c' the twisted coefficient of a face (one of them is
  always 0), the lifted boundary uses d1 = (c + c')/2 on the like-signed
  sheet and d2 = (c - c')/2 on the opposite sheet, equivariantly.
* Stiefel manifold V_k(R^n): one cell per subset of {n-k, ..., n-1}; the
  degree of a subset is its sum.  A singleton {m} has boundary
  (1 + (-1)^m) {m-1} when m-1 >= n-k, zero otherwise; products follow the
  Leibniz rule with sign (-1)^(sum of smaller atoms), and a face whose
  lowered atom collides with another atom of the cell is absent.

These rules are fixed by requiring a chain complex together with the known
answers for projective spaces, spheres, quadrics and low Grassmannians; the
test suite pins all of those.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable, Hashable, Mapping, Optional, Sequence

from .abelian import (
    AbelianError,
    FGAbelianGroup,
    IntegerMatrix,
    homology_at,
    smith_normal_form,
)

Cell = Hashable


@dataclass(frozen=True)
class ChainComplex:
    """A finite chain complex of free Z-modules with labelled basis cells.

    `cells[d]` is the ordered cell basis in degree d; `boundary(d)` maps
    C_d -> C_{d-1}.  Degrees without cells are simply absent.
    """

    cells: dict[int, tuple[Cell, ...]]
    boundaries: dict[int, IntegerMatrix] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "cells",
                           {d: tuple(cs) for d, cs in self.cells.items() if cs})
        for d, m in self.boundaries.items():
            if m.shape != (self.n_cells(d - 1), self.n_cells(d)):
                raise AbelianError(
                    f"boundary in degree {d} has shape {m.shape}, expected "
                    f"({self.n_cells(d - 1)}, {self.n_cells(d)})")

    @classmethod
    def from_boundary_map(cls, cells: Mapping[int, Sequence[Cell]],
                          face_coefficients: Callable[[int, Cell], Mapping[Cell, int]]
                          ) -> "ChainComplex":
        """Assemble boundary matrices from a per-cell face-coefficient function."""
        cells = {d: tuple(cs) for d, cs in cells.items() if cs}
        boundaries = {}
        for d, basis in cells.items():
            below = cells.get(d - 1, ())
            if not below or not basis:
                continue
            index = {c: i for i, c in enumerate(below)}
            rows = [[0] * len(basis) for _ in below]
            for j, cell in enumerate(basis):
                for face, coeff in face_coefficients(d, cell).items():
                    if coeff:
                        rows[index[face]][j] += coeff
            boundaries[d] = IntegerMatrix(rows, len(basis))
        return cls(cells, boundaries)

    # -- structure -----------------------------------------------------------

    def n_cells(self, degree: int) -> int:
        return len(self.cells.get(degree, ()))

    @property
    def top_degree(self) -> int:
        return max(self.cells, default=0)

    def boundary(self, degree: int) -> IntegerMatrix:
        m = self.boundaries.get(degree)
        if m is not None:
            return m
        return IntegerMatrix.zero(self.n_cells(degree - 1), self.n_cells(degree))

    def validate(self) -> None:
        """Raise unless every composite of successive boundaries vanishes."""
        for d in range(self.top_degree + 1):
            if not (self.boundary(d) @ self.boundary(d + 1)).is_zero():
                raise AbelianError(f"boundary squared is nonzero at degree {d + 1}")

    # -- homology --------------------------------------------------------------

    def homology(self) -> list[FGAbelianGroup]:
        """Integral homology in degrees 0..top_degree."""
        out = []
        for d in range(self.top_degree + 1):
            if self.n_cells(d) == 0:
                out.append(FGAbelianGroup.trivial())
                continue
            out.append(homology_at(self.boundary(d + 1), self.boundary(d)))
        return out

    def homology_mod(self, p: int) -> list[int]:
        """Dimensions of H_*(-, F_p), via ranks of the integral boundaries."""
        out = []
        for d in range(self.top_degree + 1):
            n = self.n_cells(d)
            if n == 0:
                out.append(0)
                continue
            out.append(n - rank_mod(self.boundary(d), p)
                       - rank_mod(self.boundary(d + 1), p))
        return out

    def betti(self) -> list[int]:
        return [h.rank for h in self.homology()]

    def euler_characteristic(self) -> int:
        return sum((-1) ** d * self.n_cells(d) for d in self.cells)


def rank_mod(matrix: IntegerMatrix, p: int) -> int:
    """Rank of an integer matrix over F_p, read off the Smith diagonal."""
    if matrix.cols == 0 or matrix.n_rows == 0:
        return 0
    reduced = IntegerMatrix(tuple(tuple(x % p for x in row) for row in matrix.rows),
                            matrix.cols)
    return sum(1 for d in smith_normal_form(reduced).diagonal if d % p != 0)


# ---------------------------------------------------------------------------
# Grassmannians
# ---------------------------------------------------------------------------


def schubert_symbols(k: int, n: int) -> list[tuple[int, ...]]:
    """All weakly increasing k-tuples with entries in [0, n-k]."""
    if not (0 < k < n):
        raise AbelianError("need 0 < k < n")
    return list(itertools.combinations_with_replacement(range(n - k + 1), k))


def _schubert_faces(symbol: tuple[int, ...], k: int, twisted: bool) -> dict[tuple[int, ...], int]:
    faces: dict[tuple[int, ...], int] = {}
    for i, a in enumerate(symbol):
        floor = symbol[i - 1] if i else 0
        if a - 1 < floor:
            continue                    # lowering slot i leaves the symbol range
        parity_even = (a + (i + 1) + k) % 2 == 0
        magnitude = 2 if (parity_even != twisted) else 0
        if magnitude == 0:
            continue
        sign = -1 if sum(symbol[:i]) % 2 else 1
        face = symbol[:i] + (a - 1,) + symbol[i + 1:]
        faces[face] = faces.get(face, 0) + sign * magnitude
    return faces


def grassmannian_complex(k: int, n: int, twisted: bool = False) -> ChainComplex:
    """Schubert chain complex of the unoriented real Grassmannian Gr(k, n).

    With `twisted` the differentials carry the orientation local system
    (coefficients twisted by the first Stiefel-Whitney class).
    """
    symbols = schubert_symbols(k, n)
    cells: dict[int, list[Cell]] = {}
    for s in symbols:
        cells.setdefault(sum(s), []).append(s)
    for d in cells:
        cells[d].sort()
    return ChainComplex.from_boundary_map(
        cells, lambda d, cell: _schubert_faces(cell, k, twisted))


def oriented_grassmannian_complex(k: int, n: int) -> ChainComplex:
    """Chain complex of the oriented Grassmannian Gr+(k, n) (double cover)."""
    symbols = schubert_symbols(k, n)
    cells: dict[int, list[Cell]] = {}
    for s in symbols:
        for sheet in (1, -1):
            cells.setdefault(sum(s), []).append((s, sheet))
    for d in cells:
        cells[d].sort()

    def faces(d: int, cell: Cell) -> dict[Cell, int]:
        symbol, sheet = cell
        plain = _schubert_faces(symbol, k, twisted=False)
        swapped = _schubert_faces(symbol, k, twisted=True)
        out: dict[Cell, int] = {}
        for face in set(plain) | set(swapped):
            c = plain.get(face, 0)
            cp = swapped.get(face, 0)
            like, cross = (c + cp) // 2, (c - cp) // 2
            if like:
                out[(face, sheet)] = out.get((face, sheet), 0) + like
            if cross:
                out[(face, -sheet)] = out.get((face, -sheet), 0) + cross
        return out

    return ChainComplex.from_boundary_map(cells, faces)


def real_projective_complex(n: int) -> ChainComplex:
    """RP^n with its single cell in each degree 0..n."""
    return grassmannian_complex(1, n + 1)


def sphere_complex(n: int) -> ChainComplex:
    """S^n with one 0-cell and one n-cell (two 0-cells joined when n = 0)."""
    if n == 0:
        return ChainComplex({0: ("n", "s")})
    return ChainComplex({0: ("pt",), n: ("top",)})


# ---------------------------------------------------------------------------
# Stiefel manifolds
# ---------------------------------------------------------------------------


def stiefel_complex(k: int, n: int) -> ChainComplex:
    """Chain complex of the Stiefel manifold V_k(R^n) of orthonormal k-frames.

    Cells are subsets of {n-k, ..., n-1}, graded by their sum.
    """
    if not (0 < k <= n):
        raise AbelianError("need 0 < k <= n")
    atoms = range(n - k, n)
    cells: dict[int, list[Cell]] = {}
    for r in range(k + 1):
        for combo in itertools.combinations(atoms, r):
            cells.setdefault(sum(combo), []).append(combo)
    for d in cells:
        cells[d].sort()

    low = n - k

    def faces(d: int, cell: Cell) -> dict[Cell, int]:
        out: dict[Cell, int] = {}
        for idx, m in enumerate(cell):
            if m % 2 != 0:
                continue                       # atom boundary (1 + (-1)^m) vanishes
            if m - 1 < low or (m - 1) in cell:
                continue                       # no such face in the complex
            sign = -1 if sum(cell[:idx]) % 2 else 1
            face = tuple(sorted(cell[:idx] + (m - 1,) + cell[idx + 1:]))
            out[face] = out.get(face, 0) + sign * 2
        return out

    return ChainComplex.from_boundary_map(cells, faces)
