"""Tests for CW chain complexes of Grassmannians, Stiefel manifolds, spheres."""

import pytest

from g2top.abelian import FGAbelianGroup, uct_cohomology
from g2top.cells import (
    ChainComplex,
    grassmannian_complex,
    oriented_grassmannian_complex,
    rank_mod,
    real_projective_complex,
    schubert_symbols,
    sphere_complex,
    stiefel_complex,
)
from g2top.abelian import IntegerMatrix

G = FGAbelianGroup
Z = G.free(1)
Z2 = G.cyclic(2)
T = G.trivial()


def sphere_table(m):
    if m == 0:
        return [G(2)]
    return [Z] + [T] * (m - 1) + [Z]


# ---------------------------------------------------------------------------
# generic complex machinery
# ---------------------------------------------------------------------------


def test_schubert_symbol_count():
    # one symbol per k-subset of {1..n}
    assert len(schubert_symbols(3, 7)) == 35
    assert len(schubert_symbols(2, 5)) == 10
    assert len(schubert_symbols(1, 4)) == 4


def test_sphere_complex():
    assert sphere_complex(6).homology() == sphere_table(6)
    assert sphere_complex(0).homology() == [G(2)]
    assert sphere_complex(1).homology() == [Z, Z]


def test_boundary_squared_vanishes_everywhere():
    for n in range(2, 8):
        for k in range(1, n):
            grassmannian_complex(k, n).validate()
            grassmannian_complex(k, n, twisted=True).validate()
            oriented_grassmannian_complex(k, n).validate()
    for n in range(2, 8):
        for k in range(1, n + 1):
            stiefel_complex(k, n).validate()


def test_rank_mod():
    m = IntegerMatrix.from_rows([[2, 0], [0, 3]])
    assert rank_mod(m, 2) == 1
    assert rank_mod(m, 3) == 1
    assert rank_mod(m, 5) == 2
    assert rank_mod(IntegerMatrix.zero(2, 2), 2) == 0


def test_mod_p_dims_agree_with_universal_coefficients():
    # dim H_k(F_p) = dim(H_k (x) F_p) + dim Tor(H_{k-1}, F_p)
    for cx in (grassmannian_complex(2, 5), stiefel_complex(3, 7),
               oriented_grassmannian_complex(2, 4)):
        H = cx.homology()
        for p in (2, 3):
            dims = cx.homology_mod(p)
            for k, d in enumerate(dims):
                expected = H[k].dim_mod(p)
                if k:
                    expected += sum(1 for t in H[k - 1].torsion if t % p == 0)
                assert d == expected


# ---------------------------------------------------------------------------
# projective spaces
# ---------------------------------------------------------------------------


def rp_table(n):
    out = [Z]
    for i in range(1, n + 1):
        out.append((Z if i == n else Z2) if i % 2 else T)
    return out


@pytest.mark.parametrize("n", range(1, 8))
def test_projective_space(n):
    cx = real_projective_complex(n)
    assert cx.homology() == rp_table(n)
    assert cx.homology_mod(2) == [1] * (n + 1)


def test_projective_space_twisted():
    # local system of the double cover: complementary degree-2 pattern
    assert grassmannian_complex(1, 2, twisted=True).homology() == [Z2, T]
    assert grassmannian_complex(1, 3, twisted=True).homology() == [Z2, T, Z]
    assert grassmannian_complex(1, 4, twisted=True).homology() == [Z2, T, Z2, T]


# ---------------------------------------------------------------------------
# Grassmannians
# ---------------------------------------------------------------------------


@pytest.mark.parametrize("n", range(2, 9))
def test_oriented_line_grassmannian_is_sphere(n):
    assert oriented_grassmannian_complex(1, n).homology() == sphere_table(n - 1)


def test_oriented_gr24_is_product_of_spheres():
    assert oriented_grassmannian_complex(2, 4).homology() == [Z, T, G(2), T, Z]


def test_oriented_gr25_is_quadric():
    assert oriented_grassmannian_complex(2, 5).homology() == [Z, T, Z, T, Z, T, Z]


def test_oriented_gr27_is_quadric():
    assert oriented_grassmannian_complex(2, 7).homology() == \
        [Z, T, Z, T, Z, T, Z, T, Z, T, Z]


def test_unoriented_gr24():
    assert grassmannian_complex(2, 4).homology() == [Z, Z2, Z2, T, Z]


def test_oriented_gr37_integral_table():
    # twelve-dimensional oriented Grassmannian of 3-planes in R^7
    assert oriented_grassmannian_complex(3, 7).homology() == [
        Z, T, Z2, T, G(2), Z2, Z2, T, G(2), Z2, T, T, Z]


def test_oriented_gr37_mod2_dims():
    assert oriented_grassmannian_complex(3, 7).homology_mod(2) == \
        [1, 0, 1, 1, 2, 1, 2, 1, 2, 1, 1, 0, 1]


def test_oriented_gr37_duality_and_chi():
    from g2top.abelian import poincare_duality_check
    H = oriented_grassmannian_complex(3, 7).homology()
    ok, bad = poincare_duality_check(H, 12)
    assert ok, f"duality fails at degree {bad}"
    assert oriented_grassmannian_complex(3, 7).euler_characteristic() == 6
    assert oriented_grassmannian_complex(2, 7).euler_characteristic() == 6
    assert grassmannian_complex(3, 7).euler_characteristic() == 3


def test_oriented_gr37_cohomology():
    H = oriented_grassmannian_complex(3, 7).homology()
    assert uct_cohomology(H) == [
        Z, T, T, Z2, G(2), T, Z2, Z2, G(2), T, Z2, T, Z]


# ---------------------------------------------------------------------------
# Stiefel manifolds
# ---------------------------------------------------------------------------


@pytest.mark.parametrize("n", range(2, 9))
def test_unit_sphere_bundle(n):
    assert stiefel_complex(1, n).homology() == sphere_table(n - 1)


def test_orthogonal_group_small():
    assert stiefel_complex(2, 2).homology() == [G(2), G(2)]
    assert stiefel_complex(2, 3).homology() == [Z, Z2, T, Z]


def test_two_frames_r5():
    assert stiefel_complex(2, 5).homology() == [Z, T, T, Z2, T, T, T, Z]


def test_two_frames_r7():
    assert stiefel_complex(2, 7).homology() == \
        [Z, T, T, T, T, Z2, T, T, T, T, T, Z]


def test_three_frames_r7():
    assert stiefel_complex(3, 7).homology() == \
        [Z, T, T, T, Z, Z2, T, T, T, Z2, T, Z, T, T, T, Z]
