import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cydeform.bundles import SplitBundle, sym_pow, twist
from cydeform.projbundle import (
    F,
    P1,
    P2,
    T,
    BlowupClass,
    CurveClassOnP,
    DivisorClass,
    PBundle,
    base_locus_of_t_system,
    blowup_check,
    canonical_class,
    codim_of_fiber_restriction,
    cohomology_pbundle,
    intersection_number,
    special_bundle,
    pushforward,
    section_curve_from_quotient,
)

from oracles import finite_difference

small_bundles = st.lists(st.integers(-3, 3), min_size=2, max_size=5).map(SplitBundle)


def euler_char(P, D):
    return sum((-1) ** i * cohomology_pbundle(P, D, i) for i in range(P.n + 2))


class TestCanonicalClass:
    def test_special_bundles(self):
        assert canonical_class(P1(3)) == DivisorClass(-4, -2)
        assert canonical_class(P2(3)) == DivisorClass(-4, -2)
        for n in range(3, 13):
            assert canonical_class(P2(n)) == DivisorClass(-(n + 1), -2)

    def test_quadric_surface(self):
        # P(O(1)+O(1)) = P^1 x P^1 with t = (1,1); K = -2t and K^2 = 8
        P = PBundle(SplitBundle({1: 2}))
        K = canonical_class(P)
        assert K == DivisorClass(-2, 0)
        assert intersection_number(P, [K, K]) == 8

    @pytest.mark.parametrize("e", [0, 1, 2, 3])
    def test_hirzebruch_K_squared(self, e):
        P = PBundle(SplitBundle([0, -e]))
        K = canonical_class(P)
        assert intersection_number(P, [K, K]) == 8


class TestPushforward:
    def test_examples(self):
        for n in (3, 4, 7):
            P = P2(n)
            assert pushforward(P, DivisorClass(n + 1, 2)) == twist(sym_pow(special_bundle(n), n + 1), 2)
            assert pushforward(P, DivisorClass(1, -1)) == twist(special_bundle(n), -1)
            assert pushforward(P, DivisorClass(0, 5)) == SplitBundle({5: 1})

    def test_negative_a_rejected(self):
        with pytest.raises(ValueError):
            pushforward(P2(3), DivisorClass(-1, 0))


class TestCohomology:
    def test_examples(self):
        for n in range(3, 13):
            P = P2(n)
            K = P.canonical
            assert cohomology_pbundle(P, K, 2) == 0
            assert cohomology_pbundle(P, K, n + 1) == 1
            assert cohomology_pbundle(P, DivisorClass(1, -1), 1) == 1
            assert cohomology_pbundle(P, DivisorClass(1, 0), 1) == 0

    def test_degree_out_of_range(self):
        with pytest.raises(ValueError):
            cohomology_pbundle(P2(3), DivisorClass(0, 0), 5)
        with pytest.raises(ValueError):
            cohomology_pbundle(P2(3), DivisorClass(0, 0), -1)

    @pytest.mark.parametrize("n", [3, 4])
    @pytest.mark.parametrize("which", ["P1", "P2"])
    def test_serre_duality_sweep(self, n, which):
        P = P1(n) if which == "P1" else P2(n)
        K = P.canonical
        for a in range(-(n + 3), n + 4):
            for b in range(-4, 5):
                D = DivisorClass(a, b)
                for i in range(n + 2):
                    assert cohomology_pbundle(P, D, i) == cohomology_pbundle(P, K - D, n + 1 - i)

    @settings(max_examples=60, deadline=None)
    @given(small_bundles, st.integers(-8, 8), st.integers(-6, 6))
    def test_serre_duality_random(self, E, a, b):
        P = PBundle(E)
        D = DivisorClass(a, b)
        for i in range(P.n + 2):
            assert cohomology_pbundle(P, D, i) == cohomology_pbundle(P, P.canonical - D, P.n + 1 - i)

    @settings(max_examples=60, deadline=None)
    @given(small_bundles, st.integers(-6, 6), st.data())
    def test_vanishing_band(self, E, b, data):
        P = PBundle(E)
        a = data.draw(st.integers(-P.n, -1))
        assert all(cohomology_pbundle(P, DivisorClass(a, b), i) == 0 for i in range(P.n + 2))


class TestIntersection:
    def test_examples(self):
        assert intersection_number(P1(3), [T, T, T, DivisorClass(4, 2)]) == 2
        assert intersection_number(P2(3), [T, T, F, DivisorClass(4, 2)]) == 4
        assert intersection_number(P2(5), [F, F, T, T, T, DivisorClass(3, 7)]) == 0

    def test_arity(self):
        with pytest.raises(ValueError):
            intersection_number(P2(3), [T, T, T])

    @pytest.mark.parametrize("n", range(3, 13))
    def test_degree_zero_normalisation(self, n):
        for P in (P1(n), P2(n)):
            assert intersection_number(P, [T] * (n + 1)) == 0
            assert intersection_number(P, [T] * n + [F]) == 1

    @pytest.mark.parametrize("a, r", [(1, 2), (2, 3), (-1, 4), (3, 3)])
    def test_twisted_trivial_bundle(self, a, r):
        # P(O(a)^r) = P^1 x P^(r-1) with t = H + a f, so t^r = r * a
        P = PBundle(SplitBundle({a: r}))
        assert intersection_number(P, [T] * r) == r * a

    @settings(max_examples=40, deadline=None)
    @given(small_bundles, st.integers(1, 3), st.integers(-3, 6))
    def test_top_self_intersection_by_finite_differences(self, E, a, b):
        # chi(O(kD)) is a polynomial in k of degree n+1 with leading term
        # D^(n+1) k^(n+1) / (n+1)!, so its (n+1)-th difference is D^(n+1)
        P = PBundle(E)
        D = DivisorClass(a, b)
        d = P.n + 1
        values = [euler_char(P, DivisorClass(k * a, k * b)) for k in range(-d, d + 2)]
        diffs = finite_difference(values, d)
        assert len(set(diffs)) == 1
        assert diffs[0] == intersection_number(P, [D] * d)

    @settings(max_examples=60, deadline=None)
    @given(
        small_bundles,
        st.lists(st.tuples(st.integers(-4, 4), st.integers(-4, 4)), min_size=6, max_size=6),
        st.integers(-3, 3),
        st.randoms(use_true_random=False),
    )
    def test_multilinear_symmetric(self, E, pairs, k, rnd):
        P = PBundle(E)
        d = P.n + 1
        classes = [DivisorClass(*p) for p in pairs[:d]]
        extra = DivisorClass(*pairs[-1])
        base = intersection_number(P, classes)
        shuffled = classes[:]
        rnd.shuffle(shuffled)
        assert intersection_number(P, shuffled) == base
        lin = intersection_number(P, [classes[0] + k * extra] + classes[1:])
        assert lin == base + k * intersection_number(P, [extra] + classes[1:])


class TestBaseLocus:
    def test_examples(self):
        for n in range(3, 13):
            assert base_locus_of_t_system(P2(n), 0) == SplitBundle({-1: 1})
            assert base_locus_of_t_system(P2(n), 1).is_empty()
            assert base_locus_of_t_system(P1(n), 0).is_empty()

    def test_deeper_negative(self):
        P = PBundle(SplitBundle([-3, -1, 0, 2]))
        assert base_locus_of_t_system(P, 0) == SplitBundle([-3, -1])
        assert base_locus_of_t_system(P, 2) == SplitBundle([-3])


class TestSectionCurve:
    def test_examples(self):
        assert section_curve_from_quotient(P2(3), -1) == CurveClassOnP(-1, 1)
        assert section_curve_from_quotient(P2(3), 1) == CurveClassOnP(1, 1)
        assert section_curve_from_quotient(P1(3), 0) == CurveClassOnP(0, 1)

    def test_missing_summand(self):
        with pytest.raises(ValueError):
            section_curve_from_quotient(P1(3), -1)

    def test_curve_degree_matches_chow_ring(self):
        # the section for quotient O(q) is the complete intersection of the
        # hyperplanes {x_j = 0}, j != q, of classes t - a_j f
        E = [-2, 0, 1, 3]
        P = PBundle(SplitBundle(E))
        for idx, q in enumerate(E):
            others = [DivisorClass(1, -a) for j, a in enumerate(E) if j != idx]
            C = section_curve_from_quotient(P, q)
            assert intersection_number(P, others + [T]) == C.t_deg
            assert intersection_number(P, others + [F]) == C.f_deg


class TestBlowup:
    def test_n3(self):
        bc = blowup_check(P2(3))
        assert bc.K_blowup == BlowupClass(-4, -2, 2)
        assert bc.proper_transform == BlowupClass(4, 2, -2)
        assert bc.K_resolution_sum == BlowupClass(0, 0, 0)
        assert bc.decomposition_ok

    def test_n4_decomposition(self):
        bc = blowup_check(P2(4))
        assert bc.proper_transform == BlowupClass(5, 2, -3)
        assert bc.decomposition_ok

    @pytest.mark.parametrize("n", range(3, 13))
    def test_all_n(self, n):
        bc = blowup_check(P2(n))
        assert bc.K_resolution_sum == BlowupClass(0, 0, 0)
        assert bc.decomposition_ok

    def test_precondition(self):
        with pytest.raises(ValueError):
            blowup_check(P1(3))
        with pytest.raises(ValueError):
            blowup_check(P2(2))


class TestCodim:
    def test_examples(self):
        for n in range(3, 13):
            assert codim_of_fiber_restriction(P2(n)) == 1
            assert codim_of_fiber_restriction(P1(n)) == 0
            assert codim_of_fiber_restriction(PBundle(SplitBundle({-1: 2, 0: n - 1}))) == 2


@pytest.mark.parametrize(
    "cls, text", [(DivisorClass(4, 2), "4*t+2*f"), (DivisorClass(-4, -2), "-4*t-2*f"), (DivisorClass(1, 0), "1*t+0*f")]
)
def test_divisor_text(cls, text):
    assert str(cls) == text
    assert DivisorClass.parse(text) == cls


def test_blowup_text():
    c = BlowupClass(-4, -2, 2)
    assert str(c) == "-4*bt-2*bf+2*E"
    assert BlowupClass.parse(str(c)) == c


def test_rank_one_rejected():
    with pytest.raises(ValueError):
        PBundle(SplitBundle([3]))
