import pytest
from hypothesis import given, settings, strategies as st

from z2z4.additive import Code, GeneratorMatrix, MixedVector
from z2z4.cycliccode import (
    code_type,
    enumerate_all_cyclic,
    enumerate_code,
    separable_cyclic,
)
from z2z4.cyclofield import factor_xn_minus_1_z4
from z2z4.errors import DomainError, PreconditionError
from z2z4.linimage import (
    BinaryBlockCode,
    DoubleCyclicGenerators,
    all_cyclic_solutions,
    cy_linear_implication_check,
    double_cyclic_span,
    ext_gray_image,
    ext_psi_image,
    family_g_subgroup,
    gray_linear_criterion,
    is_double_cyclic,
    psi_image_generators,
    search_by_type,
    solve_cyclic_z4,
    solve_cyclic_z4_lexmin,
    wolfmann_linear,
    z4_gray_linear_oracle,
)
from z2z4.polyring import BinPoly, QuatPoly, cyclic_reduce


class TestWolfmann:
    def test_f_one_always_linear(self):
        f1, f3a, f3b = factor_xn_minus_1_z4(7)
        assert wolfmann_linear(QuatPoly.one(), f1 * f3a, f3b, 7)

    def test_opposite_degree3_factors_nonlinear(self):
        f1, f3a, f3b = factor_xn_minus_1_z4(7)
        assert not wolfmann_linear(f3b, f1, f3a, 7)
        assert not wolfmann_linear(f3a, f1, f3b, 7)
        # and with the unit factor folded into f instead
        assert not wolfmann_linear(f3b * f1, QuatPoly.one(), f3a, 7)

    def test_g_full_always_linear(self):
        assert wolfmann_linear(QuatPoly.one(), QuatPoly.one(), QuatPoly.xn_minus_1(7), 7)

    def test_bad_factorization_rejected(self):
        with pytest.raises(DomainError):
            wolfmann_linear(QuatPoly.one(), QuatPoly.one(), QuatPoly.one(), 3)

    @pytest.mark.parametrize("n", [1, 3, 5, 7])
    def test_matches_enumeration_oracle(self, n):
        from z2z4.reproduce import z4_candidates

        for _, f, h, g in z4_candidates([n]):
            assert wolfmann_linear(f, h, g, n) == z4_gray_linear_oracle(f, h, g, n, "enumerate")

    @pytest.mark.parametrize("n", [7, 9])
    def test_oracle_modes_agree(self, n):
        from z2z4.reproduce import z4_candidates

        for _, f, h, g in z4_candidates([n]):
            assert z4_gray_linear_oracle(f, h, g, n, "enumerate") == z4_gray_linear_oracle(
                f, h, g, n, "algebraic"
            )


class TestCriterion:
    def test_length9_report(self, length9_code):
        rep = gray_linear_criterion(length9_code, with_oracle=True)
        assert rep.criterion_poly_a == BinPoly.parse("x^2+x+1")
        assert rep.tensor_poly == BinPoly.parse("x+1")
        assert rep.gcd_value == BinPoly.one()
        assert rep.verdict and rep.oracle_verdict

    def test_g_one_always_linear(self):
        for G in enumerate_all_cyclic(3, 3):
            if G.g == QuatPoly.one():
                assert gray_linear_criterion(G).verdict

    def test_no_linear_code_of_type_2_7_2_3(self):
        for G in enumerate_all_cyclic(2, 7):
            ct = code_type(G)
            if (ct.gamma, ct.delta) == (2, 3):
                assert not gray_linear_criterion(G).verdict

    def test_verdict_depends_only_on_invariants(self):
        # same (b, gcd(b, ell*g~), f~, g~) => identical reports
        from z2z4.polyring import gcd2, reduce_mod2

        seen = {}
        for G in enumerate_all_cyclic(3, 3):
            key = (
                G.b.coeffs,
                gcd2(G.b, G.ell * reduce_mod2(G.g)).coeffs,
                reduce_mod2(G.f).coeffs,
                reduce_mod2(G.g).coeffs,
            )
            rep = gray_linear_criterion(G)
            summary = (rep.criterion_poly_a, rep.tensor_poly, rep.gcd_value, rep.verdict)
            if key in seen:
                assert seen[key] == summary
            else:
                seen[key] = summary


class TestFamily:
    def test_members(self, length9_code):
        assert family_g_subgroup(length9_code)  # g~ = x+1 = x^1 - 1, 1 | 3

    def test_non_member(self):
        gens = separable_cyclic(
            BinPoly.one(), QuatPoly.parse("x+3"), QuatPoly.one(),
            QuatPoly.parse("x^2+x+1"), 1, 3,
        )
        assert not family_g_subgroup(gens)

    def test_full_g_member(self):
        gens = separable_cyclic(
            BinPoly.one(), QuatPoly.one(), QuatPoly.one(), QuatPoly.xn_minus_1(3), 1, 3
        )
        assert family_g_subgroup(gens)

    @pytest.mark.parametrize("alpha,beta", [(2, 3), (1, 7)])
    def test_members_always_linear(self, alpha, beta):
        for G in enumerate_all_cyclic(alpha, beta):
            if family_g_subgroup(G):
                assert gray_linear_criterion(G).verdict


class TestImplicationCheck:
    def test_image_separation(self, nonlinear_image_matrix):
        code = Code.from_matrix(nonlinear_image_matrix)
        whole, quat = cy_linear_implication_check(code)
        assert (whole, quat) == (False, True)

    def test_separable_equivalence(self):
        gens = separable_cyclic(
            BinPoly.parse("x+1"), QuatPoly.one(), QuatPoly.parse("x^2+x+1"),
            QuatPoly.parse("x+3"), 2, 3,
        )
        whole, quat = cy_linear_implication_check(enumerate_code(gens))
        assert (whole, quat) == (True, True)

    def test_zero_code(self):
        code = Code.from_matrix(GeneratorMatrix(1, 1, ()))
        assert cy_linear_implication_check(code) == (True, True)

    @settings(max_examples=30, deadline=None)
    @given(st.lists(
        st.tuples(st.lists(st.integers(0, 1), min_size=2, max_size=2),
                  st.lists(st.integers(0, 3), min_size=3, max_size=3)),
        min_size=1, max_size=3,
    ))
    def test_implication_direction(self, raw_rows):
        rows = tuple(MixedVector(tuple(b), tuple(q)) for b, q in raw_rows)
        code = Code.from_matrix(GeneratorMatrix(2, 3, rows))
        whole, quat = cy_linear_implication_check(code)
        if whole:
            assert quat


class TestSolver:
    def test_known_solution(self, length9_code):
        # p = x + 2x^2 is the smallest solution sending fh+2f to (3,1,3)
        target = QuatPoly((3, 1, 3))
        p = solve_cyclic_z4_lexmin(length9_code.fh_plus_2f, target, 3)
        assert p == QuatPoly((0, 1, 2))
        assert cyclic_reduce(p * length9_code.fh_plus_2f, 3) == target

    def test_unsolvable_returns_none(self):
        assert solve_cyclic_z4(QuatPoly((2,)), QuatPoly.one(), 3) is None

    @settings(max_examples=60, deadline=None)
    @given(
        st.integers(0, 1).map(lambda k: 2 * k + 1),
        st.data(),
    )
    def test_matches_exhaustive(self, n, data):
        gen = QuatPoly(data.draw(st.lists(st.integers(0, 3), min_size=n, max_size=n)))
        target = QuatPoly(data.draw(st.lists(st.integers(0, 3), min_size=n, max_size=n)))
        sols = all_cyclic_solutions(gen, target, n)
        got = solve_cyclic_z4_lexmin(gen, target, n)
        if not sols:
            assert got is None
        else:
            pad = lambda p: p.coeffs + (0,) * (n - len(p.coeffs))
            assert pad(got) == min(pad(s) for s in sols)


class TestPsiImage:
    def test_length9_generators_exact(self, length9_code):
        dcg = psi_image_generators(length9_code)
        assert (dcg.r, dcg.s) == (3, 6)
        assert dcg.b == BinPoly.parse("x^2+x+1")
        assert dcg.ellp == BinPoly.parse("x")
        assert dcg.a == BinPoly.parse("x^2+x+1")

    def test_length9_span_equals_image(self, length9_code):
        code = enumerate_code(length9_code)
        img = ext_psi_image(code)
        assert len(img) == 32 and img.r + img.s == 9
        span = double_cyclic_span(psi_image_generators(length9_code))
        assert span.words == img.words

    def test_image_double_cyclic_but_gray_image_not(self, length9_code):
        code = enumerate_code(length9_code)
        assert is_double_cyclic(ext_psi_image(code))
        # frozen regression: the plain Gray image fails the double-shift test
        assert not is_double_cyclic(ext_gray_image(code))

    def test_separable_gives_zero_ellp(self):
        gens = separable_cyclic(
            BinPoly.parse("x+1"), QuatPoly.one(), QuatPoly.parse("x^2+x+1"),
            QuatPoly.parse("x+3"), 2, 3,
        )
        dcg = psi_image_generators(gens)
        assert dcg.ellp.is_zero

    def test_precondition_enforced(self):
        f1, f3a, f3b = factor_xn_minus_1_z4(7)
        gens = separable_cyclic(BinPoly.one(), f3b, f1, f3a, 1, 7)
        assert not gray_linear_criterion(gens).verdict
        with pytest.raises(PreconditionError):
            psi_image_generators(gens)

    @pytest.mark.parametrize("alpha,beta", [(1, 1), (2, 3), (4, 3)])
    def test_span_equality_across_range(self, alpha, beta):
        for G in enumerate_all_cyclic(alpha, beta):
            if not gray_linear_criterion(G).verdict:
                continue
            code = enumerate_code(G)
            img = ext_psi_image(code)
            assert is_double_cyclic(img)
            span = double_cyclic_span(psi_image_generators(G))
            assert span.words == img.words

    def test_every_solution_gives_the_same_image_span(self, length9_code):
        # the defining equation does not pin p down; all solutions must
        # produce generators spanning the same image
        from z2z4.zmaps import nechaev_gray_inv
        from z2z4.polyring import reduce_mod2

        G = length9_code
        ft, ht = reduce_mod2(G.f), reduce_mod2(G.h)
        a = cyclic_reduce(ft * ft * ht, 6)
        bits = list(a.coeffs) + [0] * (6 - len(a.coeffs))
        target = QuatPoly(nechaev_gray_inv(bits))
        img = ext_psi_image(enumerate_code(G)).words
        sols = all_cyclic_solutions(G.fh_plus_2f, target, 3)
        assert sols
        for p in sols:
            ellp = (reduce_mod2(p) * G.ell) % G.b
            span = double_cyclic_span(DoubleCyclicGenerators(3, 6, G.b, ellp, a))
            assert span.words == img

    def test_psi_inverse_of_a_lands_in_quaternary_code(self, length9_code):
        from z2z4.zmaps import nechaev_gray_inv

        code = enumerate_code(length9_code)
        word = nechaev_gray_inv((1, 1, 1, 0, 0, 0))
        assert MixedVector((), word) in code.puncture_y()


class TestDoubleCyclic:
    def test_zero_code(self):
        assert is_double_cyclic(BinaryBlockCode(2, 3, frozenset({0})))

    def test_shift_structure(self):
        bc = BinaryBlockCode(2, 2, frozenset())
        # word 0b0101 = (1,0 | 1,0): both blocks rotate to (0,1 | 0,1)
        assert bc.double_shift(0b0101) == 0b1010

    def test_generator_validation(self):
        with pytest.raises(DomainError):
            DoubleCyclicGenerators(3, 6, BinPoly.parse("x^2+1"), BinPoly.zero(), BinPoly.one())


class TestSearch:
    def test_blocked_type_has_no_linear_member(self):
        assert search_by_type(2, 7, 2, 3, linear_only=True) == []
        assert len(search_by_type(2, 7, 2, 3)) >= 1

    def test_contains_length9_code(self, length9_code):
        results = search_by_type(3, 3, 3, 1, 3)
        assert any(G == length9_code for G, _ in results)
        rep = next(rep for G, rep in results if G == length9_code)
        assert rep.verdict

    def test_impossible_type_empty(self):
        assert search_by_type(2, 3, 9, 0) == []

    def test_wildcards(self):
        total = len(search_by_type(2, 3))
        assert total == sum(1 for _ in enumerate_all_cyclic(2, 3))

    def test_deterministic_order(self):
        a = [(G.to_json(), rep.verdict) for G, rep in search_by_type(2, 3)]
        b = [(G.to_json(), rep.verdict) for G, rep in search_by_type(2, 3)]
        assert a == b
