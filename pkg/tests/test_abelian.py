"""Tests for exact integer linear algebra and f.g. abelian groups."""

import random

import pytest

from g2top.abelian import (
    AbelianError,
    FGAbelianGroup,
    GroupHom,
    IntegerMatrix,
    cokernel,
    column_space_basis,
    enumerate_homs,
    exact_sequence_check,
    extension_middles,
    extension_necessary_conditions,
    hom_count,
    hom_homology,
    hom_image,
    hom_kernel,
    homology_at,
    iterated_extension_set,
    kernel_basis,
    lattice_contains,
    lattices_equal,
    poincare_duality_check,
    smith_normal_form,
    solve_integer,
    uct_cohomology,
)

G = FGAbelianGroup
Z = G.free(1)
Z2 = G.cyclic(2)
T = G.trivial()


# ---------------------------------------------------------------------------
# Smith normal form
# ---------------------------------------------------------------------------


def test_snf_small_example():
    M = IntegerMatrix.from_rows([[2, 4], [6, 8]])
    snf = smith_normal_form(M)
    assert snf.diagonal == (2, 4)
    assert (snf.U @ M @ snf.V) == snf.S


def test_snf_identity_and_zero():
    assert smith_normal_form(IntegerMatrix.identity(3)).diagonal == (1, 1, 1)
    assert smith_normal_form(IntegerMatrix.zero(2, 5)).diagonal == (0, 0)


@pytest.mark.parametrize("rows,expected", [
    ([[1]], (1,)),
    ([[0]], (0,)),
    ([[6]], (6,)),
    ([[-6]], (6,)),
    ([[2, 0], [0, 3]], (1, 6)),
    ([[1, 2, 3], [4, 5, 6], [7, 8, 9]], (1, 3, 0)),
    ([[2, 4, 4], [-6, 6, 12], [10, 4, 16]], (2, 2, 156)),
])
def test_snf_known_diagonals(rows, expected):
    assert smith_normal_form(IntegerMatrix.from_rows(rows)).diagonal == expected


def test_snf_random_round_trip():
    # determinantal divisors stay invariant; transforms stay unimodular
    rng = random.Random(20240817)
    for _ in range(500):
        n_rows = rng.randint(1, 8)
        n_cols = rng.randint(1, 8)
        M = IntegerMatrix.from_rows(
            [[rng.randint(-50, 50) for _ in range(n_cols)] for _ in range(n_rows)])
        snf = smith_normal_form(M)
        assert (snf.U @ M @ snf.V) == snf.S
        assert (snf.U @ snf.U_inv) == IntegerMatrix.identity(n_rows)
        assert (snf.V @ snf.V_inv) == IntegerMatrix.identity(n_cols)
        d = snf.diagonal
        assert all(x >= 0 for x in d)
        for a, b in zip(d, d[1:]):
            assert b == 0 or (a != 0 and b % a == 0)
        for i, row in enumerate(snf.S.rows):
            for j, x in enumerate(row):
                if i != j:
                    assert x == 0


def test_snf_determinant_preserved_up_to_sign():
    # for square M, product of diagonal = |det M|
    M = IntegerMatrix.from_rows([[3, 1, -4], [2, 0, 5], [-1, 7, 2]])
    snf = smith_normal_form(M)
    det = (3 * (0 * 2 - 5 * 7) - 1 * (2 * 2 - 5 * -1) + -4 * (2 * 7 - 0 * -1))
    prod = 1
    for x in snf.diagonal:
        prod *= x
    assert prod == abs(det)


def test_kernel_basis():
    M = IntegerMatrix.from_rows([[1, 2, 3]])
    basis = kernel_basis(M)
    assert len(basis) == 2
    for v in basis:
        assert M.apply(v) == (0,)
    # kernel of an injective map is empty
    assert kernel_basis(IntegerMatrix.from_rows([[2, 0], [0, 3]])) == []


def test_solve_and_membership():
    M = IntegerMatrix.from_rows([[2, 0], [0, 3]])
    assert solve_integer(M, (4, 9)) is not None
    assert solve_integer(M, (1, 0)) is None
    assert lattice_contains(M, (4, 9))
    assert not lattice_contains(M, (1, 0))


def test_lattices_equal():
    a = IntegerMatrix.from_rows([[2, 0], [0, 3]])
    b = IntegerMatrix.from_rows([[2, 2], [3, 0]])  # same span: cols (2,3),(2,0)... check
    # build b so that span matches: columns (2,3) and (0,3)? use explicit generators
    b = IntegerMatrix.from_columns([(2, 0), (2, 3)], 2)
    assert lattices_equal(a, b)
    c = IntegerMatrix.from_columns([(2, 0), (0, 6)], 2)
    assert not lattices_equal(a, c)


def test_column_space_basis_spans_same_lattice():
    M = IntegerMatrix.from_rows([[2, 4, 6], [0, 0, 0], [3, 3, 3]])
    basis = column_space_basis(M)
    L = IntegerMatrix.from_columns(basis, 3)
    assert lattices_equal(M, L)


# ---------------------------------------------------------------------------
# Groups
# ---------------------------------------------------------------------------


def test_invariant_factor_normalization():
    assert G.from_cyclic_orders([2, 3]) == G.cyclic(6)
    assert G.from_cyclic_orders([4, 6]) == G(0, (2, 12))
    assert G.from_cyclic_orders([2, 2, 4]) == G(0, (2, 2, 4))
    assert G.from_cyclic_orders([12, 18, 0]) == G(1, (6, 36))
    assert G.from_cyclic_orders([1, 1, 1]) == T


def test_invalid_invariant_factors_rejected():
    with pytest.raises(AbelianError):
        G(0, (4, 2))
    with pytest.raises(AbelianError):
        G(0, (1,))
    with pytest.raises(AbelianError):
        G(-1)


def test_group_str_and_dict_round_trip():
    g = G(2, (2, 4))
    assert str(g) == "Z^2 + Z/2 + Z/4"
    assert str(T) == "0"
    assert G.from_dict(g.to_dict()) == g
    assert g.to_dict() == {"rank": 2, "torsion": [2, 4]}


def test_group_invariants():
    g = G(1, (2, 6))
    assert g.order is None
    assert g.torsion_order == 12
    assert g.exponent == 6
    assert G(0, (2, 6)).order == 12
    assert g.dim_mod(2) == 3
    assert g.dim_mod(3) == 2
    assert g.dim_mod(5) == 1


def test_tensor_and_tor():
    assert G.cyclic(4).tensor(G.cyclic(6)) == G.cyclic(2)
    assert Z.tensor(G.cyclic(5)) == G.cyclic(5)
    assert G(2).tensor(G(3)) == G(6)
    assert G.cyclic(4).tor(G.cyclic(6)) == G.cyclic(2)
    assert Z.tor(G.cyclic(5)) == T
    assert G(1, (2,)).tensor(G(1, (4,))) == G(1, (2, 2, 4))


def test_hom_and_ext_groups():
    assert G.cyclic(4).hom_group(G.cyclic(6)) == G.cyclic(2)
    assert Z.hom_group(G.cyclic(7)) == G.cyclic(7)
    assert G.cyclic(7).hom_group(Z) == T
    assert G.cyclic(4).ext(Z) == G.cyclic(4)
    assert Z.ext(G.cyclic(9)) == T
    assert G.cyclic(4).ext(G.cyclic(6)) == G.cyclic(2)


def test_cokernel():
    assert cokernel(IntegerMatrix.from_rows([[2, 4], [6, 8]])) == G(0, (2, 4))
    assert cokernel(IntegerMatrix.zero(2, 1)) == G(2)


# ---------------------------------------------------------------------------
# Homology of free complexes
# ---------------------------------------------------------------------------


def test_homology_at_basic():
    d_in = IntegerMatrix.from_rows([[2, 0], [0, 4]])
    d_out = IntegerMatrix.zero(1, 2)
    assert homology_at(d_in, d_out) == G(0, (2, 4))


def test_homology_at_circle():
    # one 0-cell, one 1-cell, boundary zero
    d1 = IntegerMatrix.zero(1, 1)
    assert homology_at(IntegerMatrix.zero(1, 0), d1) == Z       # H_0
    assert homology_at(IntegerMatrix.zero(1, 0), IntegerMatrix.zero(0, 1)) == Z


def test_homology_at_rejects_non_complex():
    d_in = IntegerMatrix.from_rows([[1], [0]])
    d_out = IntegerMatrix.from_rows([[1, 0]])
    with pytest.raises(AbelianError):
        homology_at(d_in, d_out)


def test_homology_at_mixed_kernel_image():
    # Z^3, image generated by (2,0,0) and (0,3,0), kernel of projection to last coord
    d_in = IntegerMatrix.from_columns([(2, 0, 0), (0, 3, 0)], 3)
    d_out = IntegerMatrix.from_rows([[0, 0, 1]])
    assert homology_at(d_in, d_out) == G.cyclic(6)


# ---------------------------------------------------------------------------
# Homomorphisms
# ---------------------------------------------------------------------------


def test_hom_well_definedness():
    # Z/2 -> Z has only the zero map
    with pytest.raises(AbelianError):
        GroupHom(Z2, Z, [[1]])
    GroupHom(Z2, Z, [[0]])
    # Z/2 -> Z/4 must land in 2Z/4
    with pytest.raises(AbelianError):
        GroupHom(Z2, G.cyclic(4), [[1]])
    GroupHom(Z2, G.cyclic(4), [[2]])


def test_hom_matrix_normalization_mod_torsion():
    f = GroupHom(Z, G.cyclic(4), [[7]])
    assert f.matrix == ((3,),)


def test_hom_compose_and_apply():
    f = GroupHom(Z, Z, [[3]])
    g = GroupHom(Z, G.cyclic(12), [[2]])
    gf = g.compose(f)
    assert gf.matrix == ((6,),)
    assert gf.apply((3,)) == (6,)


def test_enumerate_homs_counts():
    cases = [
        (G.cyclic(4), G(0, (2, 2)), 4),
        (G.cyclic(2), G.cyclic(4), 2),
        (G.cyclic(6), G.cyclic(4), 2),
        (G(0, (2, 4)), G.cyclic(8), 8),
        (Z, G.cyclic(5), 5),
        (G.cyclic(3), G.cyclic(4), 1),
    ]
    for dom, cod, n in cases:
        homs = enumerate_homs(dom, cod)
        assert len(homs) == n == hom_count(dom, cod)
        assert len({h.matrix for h in homs}) == n


def test_enumerate_homs_deterministic():
    a = enumerate_homs(G.cyclic(4), G(0, (2, 4)))
    b = enumerate_homs(G.cyclic(4), G(0, (2, 4)))
    assert [h.matrix for h in a] == [h.matrix for h in b]


def test_enumerate_homs_free_bound():
    with pytest.raises(AbelianError):
        enumerate_homs(Z, Z)
    homs = enumerate_homs(Z, Z, free_bound=2)
    assert sorted(h.matrix[0][0] for h in homs) == [-2, -1, 0, 1, 2]
    assert hom_count(Z, Z) is None


def test_hom_kernel_image():
    f = GroupHom(G.cyclic(4), Z2, [[1]])
    assert hom_kernel(f) == Z2
    assert hom_image(f) == Z2
    g = GroupHom(G.cyclic(4), G.cyclic(8), [[2]])
    assert hom_kernel(g) == T
    assert hom_image(g) == G.cyclic(4)
    h = GroupHom(G(2), G(1), [[1, 0]])
    assert hom_kernel(h) == Z
    assert hom_image(h) == Z


def test_hom_homology_subquotient():
    mid = G(1, (4,))
    f_in = GroupHom(Z2, mid, [[0], [2]])
    f_out = GroupHom(mid, Z, [[1, 0]])
    assert hom_homology(f_in, f_out) == Z2
    # zero maps give back the middle group
    assert hom_homology(None, None, middle=mid) == mid
    # full image kills everything
    f_cover = GroupHom(G(1, (4,)), mid, [[1, 0], [0, 1]])
    assert hom_homology(f_cover, f_out.compose(GroupHom.zero(mid, mid)), middle=mid) == T


def test_hom_homology_rejects_nonzero_composite():
    f = GroupHom(Z, Z, [[1]])
    with pytest.raises(AbelianError):
        hom_homology(f, f)


# ---------------------------------------------------------------------------
# Universal coefficients and duality
# ---------------------------------------------------------------------------


def test_uct_projective_plane():
    assert uct_cohomology([Z, Z2]) == [Z, T, Z2]


def test_uct_orientable_12_manifold_table():
    H = [G(1), T, Z2, T, G(2), Z2, Z2, T, G(2), Z2, T, T, G(1)]
    expected = [G(1), T, T, Z2, G(2), T, Z2, Z2, G(2), T, Z2, T, G(1)]
    assert uct_cohomology(H) == expected
    ok, bad = poincare_duality_check(H, 12)
    assert ok and bad is None


def test_duality_detects_violation():
    H = [G(1), T, G(0, (4,)), T, G(2), Z2, Z2, T, G(2), Z2, T, T, G(1)]
    ok, bad = poincare_duality_check(H, 12)
    assert not ok
    assert bad == 2


# ---------------------------------------------------------------------------
# Exact sequences
# ---------------------------------------------------------------------------


def test_short_exact_sequence():
    f0 = GroupHom.zero(T, Z)
    f1 = GroupHom(Z, Z, [[2]])
    f2 = GroupHom(Z, Z2, [[1]])
    f3 = GroupHom.zero(Z2, T)
    ok, bad = exact_sequence_check([T, Z, Z, Z2, T], [f0, f1, f2, f3])
    assert ok and bad is None


def test_exactness_failure_located():
    f0 = GroupHom.zero(T, Z)
    f1 = GroupHom(Z, Z, [[4]])       # image 4Z, kernel of projection is 2Z
    f2 = GroupHom(Z, Z2, [[1]])
    f3 = GroupHom.zero(Z2, T)
    ok, bad = exact_sequence_check([T, Z, Z, Z2, T], [f0, f1, f2, f3])
    assert not ok
    assert bad == 2


def test_exact_sequence_shape_validation():
    with pytest.raises(AbelianError):
        exact_sequence_check([T, Z], [])


# ---------------------------------------------------------------------------
# Extensions
# ---------------------------------------------------------------------------


def test_extension_middles_z2_z2():
    assert extension_middles(Z2, Z2) == frozenset({G.cyclic(4), G(0, (2, 2))})


def test_extension_middles_split_free_quotient():
    # free quotients always split
    assert extension_middles(Z2, Z) == frozenset({G(1, (2,))})
    assert extension_middles(G(2), Z) == frozenset({G(3)})


def test_extension_middles_z3_z2_only_z6():
    # coprime orders force the split extension
    assert extension_middles(G.cyclic(3), Z2) == frozenset({G.cyclic(6)})


def test_extension_middles_z_by_z2():
    # 0 -> Z -> G -> Z/2 -> 0 : G = Z + Z/2 (split) or Z (index-2 embedding)
    assert extension_middles(Z, Z2) == frozenset({G(1, (2,)), G(1)})


def test_extension_middles_z4_z2():
    # Ext(Z/2, Z/4) = Z/2: split and the Z/8 class
    assert extension_middles(G.cyclic(4), Z2) == frozenset({G(0, (2, 4)), G.cyclic(8)})


def test_iterated_extension_exact():
    total, exact = iterated_extension_set([Z2, Z2])
    assert exact
    assert total == frozenset({G.cyclic(4), G(0, (2, 2))})
    total3, exact3 = iterated_extension_set([Z2, Z2, Z2])
    assert exact3
    assert total3 == frozenset({G(0, (2, 2, 2)), G(0, (2, 4)), G.cyclic(8)})


def test_iterated_extension_order_preserved():
    # extensions are not symmetric in general, but orders multiply
    total, exact = iterated_extension_set([G.cyclic(4), Z2])
    assert exact
    for g in total:
        assert g.order == 8


def test_extension_budget_degrades():
    big = G(0, (128,))
    total, exact = iterated_extension_set([big, big])
    assert not exact
    assert total == frozenset()
    assert extension_necessary_conditions([big, big], G(0, (128, 128)))
    assert not extension_necessary_conditions([big, big], G(0, (2,)))
    assert not extension_necessary_conditions([big, big], G(1, (128, 128)))


def test_extension_necessary_conditions_rank():
    assert extension_necessary_conditions([Z, Z2], G(1, (2,)))
    assert extension_necessary_conditions([Z, Z2], G(1,))
    assert not extension_necessary_conditions([Z, Z2], G(2,))
