import numpy as np
import pytest

from cydeform.bundles import SplitBundle, trivial
from cydeform.moduli import (
    CubicForm,
    aut_dim,
    cubic_form_on_X,
    lattice_isometries,
    moduli_report,
    nef_discriminator,
)
from cydeform.projbundle import P1, P2, special_bundle

N_RANGE = range(3, 13)


class TestAut:
    @pytest.mark.parametrize("n", N_RANGE)
    def test_special_bundle(self, n):
        br = aut_dim(special_bundle(n))
        assert br.constant_entries == (n - 1) ** 2 + 2
        assert br.linear_entries == 2 * (n - 1)
        assert br.quadratic_entries == 1
        assert br.matrix_dim == (n + 1) ** 2 + 1
        assert br.matrix_dim == br.constant_entries + 2 * br.linear_entries + 3 * br.quadratic_entries
        assert br.aut_dim == (n + 1) ** 2 + 3

    @pytest.mark.parametrize("n", N_RANGE)
    def test_trivial_bundle(self, n):
        br = aut_dim(trivial(n + 1))
        assert br.matrix_dim == (n + 1) ** 2
        assert br.aut_dim == (n + 1) ** 2 + 2
        assert aut_dim(special_bundle(n)).aut_dim - br.aut_dim == 1

    def test_hirzebruch_f2(self):
        br = aut_dim(SplitBundle({-1: 1, 1: 1}))
        assert br.matrix_dim == 5
        assert br.aut_dim == 7

    def test_general_degrees(self):
        # entries of degree 3 contribute 4 parameters each
        br = aut_dim(SplitBundle([0, 3]))
        assert br.matrix_dim == 1 + 1 + 4


class TestModuliReport:
    def test_n3(self):
        r = moduli_report(3)
        assert (r.h0_antiK_P1, r.h0_antiK_P2) == (105, 106)
        assert r.h0_difference == 1
        assert (r.aut_P1, r.aut_P2) == (18, 19)
        assert r.dim_M1 == 86 == 105 - 1 - 18
        assert r.dim_M2_lower == 86
        assert not r.gap_strict

    def test_n4(self):
        r = moduli_report(4)
        assert (r.h0_antiK_P1, r.h0_antiK_P2) == (378, 383)
        assert (r.aut_P1, r.aut_P2) == (27, 28)
        assert (r.dim_M1, r.dim_M2_lower) == (350, 354)
        assert r.gap_strict

    @pytest.mark.parametrize("n", N_RANGE)
    def test_gap(self, n):
        r = moduli_report(n)
        assert r.dim_M1 == r.h0_antiK_P1 - 1 - r.aut_P1
        assert r.dim_M2_lower == r.h0_antiK_P2 - 1 - r.aut_P2
        assert r.h0_difference >= 1
        assert (r.h0_difference == 1) == (n == 3)
        assert r.gap_strict == (n > 3)

    def test_small_n(self):
        with pytest.raises(ValueError):
            moduli_report(2)


class TestCubicForm:
    def test_forms(self):
        assert cubic_form_on_X(P1(3)).as_tuple() == (2, 4, 0, 0)
        assert cubic_form_on_X(P2(3)).as_tuple() == (2, 4, 0, 0)

    def test_wrong_dimension(self):
        with pytest.raises(ValueError):
            cubic_form_on_X(P2(4))


class TestIsometries:
    @pytest.mark.parametrize("bound", [5, 10, 20])
    def test_only_identity(self, bound):
        for P in (P1(3), P2(3)):
            isos = lattice_isometries(cubic_form_on_X(P), bound)
            assert len(isos) == 1
            assert np.array_equal(isos[0], np.eye(2, dtype=int))

    def test_symmetric_form_has_swap(self):
        # x^3 + y^3 is preserved by the identity and the coordinate swap
        isos = lattice_isometries(CubicForm(1, 0, 0, 1), 3)
        found = sorted(tuple(m.ravel().tolist()) for m in isos)
        assert found == [(0, 1, 1, 0), (1, 0, 0, 1)]

    def test_brute_force_agrees_on_small_grid(self):
        form = CubicForm(2, 4, 0, 0)

        def value(x, y):
            return 2 * x**3 + 12 * x**2 * y

        expected = []
        rng = range(-3, 4)
        for a in rng:
            for b in rng:
                for c in rng:
                    for d in rng:
                        if abs(a * d - b * c) != 1:
                            continue
                        if all(
                            value(a * x + b * y, c * x + d * y) == value(x, y)
                            for x in range(-2, 3)
                            for y in range(-2, 3)
                        ):
                            expected.append((a, b, c, d))
        got = [tuple(m.ravel().tolist()) for m in lattice_isometries(form, 3)]
        assert got == expected == [(1, 0, 0, 1)]

    def test_bad_bound(self):
        with pytest.raises(ValueError):
            lattice_isometries(CubicForm(2, 4, 0, 0), 0)


@pytest.mark.parametrize("n", N_RANGE)
def test_nef_discriminator(n):
    nd = nef_discriminator(n)
    assert nd.t_nef_on_X1
    assert not nd.t_nef_on_X2
