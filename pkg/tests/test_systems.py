import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import system_four_defects, system_two_defects
from sosq.sampling import UniformSampler
from sosq.systems import (
    CaseFour,
    CaseTwo,
    NonFiniteInputError,
    ResidualExceededError,
    solve_two,
    solve_four,
)

finite_100 = st.floats(min_value=-100, max_value=100, allow_nan=False)
# exact zeros plus magnitudes in [1e-30, 100]: heterogeneity far beyond the
# solver's stated sweep ranges but inside its documented precision envelope
coord = st.one_of(
    st.just(0.0),
    st.floats(min_value=1e-30, max_value=100, allow_nan=False),
    st.floats(min_value=-100, max_value=-1e-30, allow_nan=False),
)


class TestSolveTwo:
    def test_u_zero_v_positive(self):
        report = solve_two(0.0, 4.0)
        assert report.solution == (2.0, 0.0)
        assert report.case_label is CaseTwo.U0_VPOS

    def test_u_zero_v_negative(self):
        report = solve_two(0.0, -9.0)
        assert report.solution == (0.0, 3.0)
        assert report.case_label is CaseTwo.U0_VNEG

    def test_u_nonzero(self):
        # oracle: 2*1*1 = 2 and 1 - 1 = 0
        report = solve_two(2.0, 0.0)
        assert report.solution == (1.0, 1.0)
        assert report.case_label is CaseTwo.UNZ
        assert system_two_defects(2.0, 0.0, *report.solution) == (0.0, 0.0)

    def test_origin(self):
        report = solve_two(0.0, 0.0)
        assert report.solution == (0.0, 0.0)
        assert report.case_label is CaseTwo.U0_VPOS

    @given(finite_100, finite_100)
    def test_round_trip(self, u, v):
        report = solve_two(u, v)
        assert report.residual <= 1e-9
        assert report.norm_residual <= 1e-9

    @given(st.floats(min_value=-1, max_value=1, allow_nan=False),
           st.floats(min_value=10, max_value=1e6, allow_nan=False))
    def test_cancellation_stress(self, u, scale):
        # v far below -10|u|, where the textbook formula for x cancels
        v = -scale * (10.0 * abs(u) + 1.0)
        report = solve_two(u, v)
        assert report.residual <= 1e-9
        assert report.norm_residual <= 1e-9

    def test_seeded_sweep(self):
        for u, v in UniformSampler(17, 5000, -100, 100).tuples(2):
            report = solve_two(u, v)
            assert report.residual <= 1e-9
            assert report.norm_residual <= 1e-9

    def test_sign_variants(self):
        variants = solve_two(0.0, 4.0, enumerate_signs=True).variants
        assert variants == ((-2.0, 0.0), (2.0, 0.0))
        variants = solve_two(2.0, 0.0, enumerate_signs=True).variants
        assert variants == ((-1.0, -1.0), (1.0, 1.0))

    def test_zero_eps_knob(self):
        assert solve_two(1e-40, 4.0).case_label is CaseTwo.UNZ
        report = solve_two(1e-40, 4.0, zero_eps=1e-30)
        assert report.case_label is CaseTwo.U0_VPOS
        assert report.solution == (2.0, 0.0)

    @pytest.mark.parametrize("u,v", [(math.nan, 0.0), (0.0, math.inf), (-math.inf, 1.0)])
    def test_rejects_non_finite(self, u, v):
        with pytest.raises(NonFiniteInputError):
            solve_two(u, v)

    def test_canonical_branch_signs(self):
        # + branch: x >= 0 always, y carries the sign of u
        for u, v in [(3.0, 5.0), (-3.0, 5.0), (3.0, -5.0), (-3.0, -5.0)]:
            x, y = solve_two(u, v).solution
            assert x >= 0.0
            assert (y > 0) == (u > 0)


class TestSolveFour:
    def test_case_a(self):
        report = solve_four(0.0, -2.0, 0.0, 0.0)
        assert report.solution == (0.0, 1.0, 0.0, 1.0)
        assert report.case_label is CaseFour.A

    def test_zero_system(self):
        report = solve_four(0.0, 0.0, 0.0, 0.0)
        assert report.solution == (0.0, 0.0, 0.0, 0.0)
        assert report.case_label is CaseFour.A

    def test_case_b(self):
        report = solve_four(0.0, 2.0, 0.0, 0.0)
        assert report.case_label is CaseFour.B
        assert max(map(abs, system_four_defects(0, 2, 0, 0, *report.solution))) < 1e-12
        x, y, z, w = report.solution
        assert x == z == report.alpha == 1.0 and y == w == 0.0

    def test_case_c(self):
        # alpha = sqrt(0 + sqrt(16)) / 2 = 1, then y = w = 1
        report = solve_four(4.0, 0.0, 0.0, 0.0)
        assert report.solution == (1.0, 1.0, 1.0, 1.0)
        assert report.case_label is CaseFour.C
        assert system_four_defects(4, 0, 0, 0, *report.solution) == (0, 0, 0, 0)

    def test_case_d(self):
        # quadratic 16 t^2 + 16 t has larger root 0
        report = solve_four(0.0, 0.0, 0.0, 1.0)
        assert report.solution == (1.0, 0.0, 0.0, 0.0)
        assert report.case_label is CaseFour.D
        assert report.alpha == 0.0

    def test_case_d_opposite_orientation(self):
        # b < 0 with a = c = 0 forces x and z to take opposite signs
        report = solve_four(0.0, -5.0, 0.0, 2.0)
        x, y, z, w = report.solution
        assert report.case_label is CaseFour.D
        assert x * z < 0
        assert max(map(abs, system_four_defects(0, -5, 0, 2, x, y, z, w))) < 1e-9

    def test_every_case_label_reachable(self):
        hits = {
            solve_four(*args).case_label
            for args in [
                (0.0, -2.0, 0.0, 0.0),
                (1.0, 2.0, 1.0, 0.0),
                (4.0, 0.0, 0.0, 0.0),
                (1.0, 2.0, 3.0, 4.0),
            ]
        }
        assert hits == {CaseFour.A, CaseFour.B, CaseFour.C, CaseFour.D}

    @given(coord, coord, coord, coord)
    def test_round_trip(self, a, b, c, d):
        report = solve_four(a, b, c, d)
        assert report.residual <= 1e-6
        assert report.norm_residual <= 1e-6

    def test_seeded_sweep(self):
        for a, b, c, d in UniformSampler(23, 5000, -100, 100).tuples(4):
            report = solve_four(a, b, c, d)
            assert report.residual <= 1e-6
            assert report.norm_residual <= 1e-6

    @given(finite_100, finite_100, finite_100,
           st.floats(min_value=0.001, max_value=100, allow_nan=False),
           st.booleans())
    def test_case_d_alpha_admissible(self, a, b, c, mag, neg):
        d = -mag if neg else mag
        report = solve_four(a, b, c, d)
        assert report.case_label is CaseFour.D
        assert report.alpha >= 0.0
        assert report.alpha >= -d

    def test_sign_variants_include_global_flip(self):
        report = solve_four(1.0, 2.0, 3.0, 4.0, enumerate_signs=True)
        x, y, z, w = report.solution
        flipped = tuple(-t if t != 0.0 else 0.0 for t in (x, y, z, w))
        assert report.solution in report.variants
        assert flipped in report.variants

    def test_zero_eps_knob(self):
        assert solve_four(4.0, 0.0, 0.0, 1e-40).case_label is CaseFour.D
        report = solve_four(4.0, 0.0, 0.0, 1e-40, zero_eps=1e-30)
        assert report.case_label is CaseFour.C

    def test_rejects_non_finite(self):
        with pytest.raises(NonFiniteInputError):
            solve_four(1.0, math.nan, 0.0, 0.0)

    def test_residual_error_carries_value(self):
        exc = ResidualExceededError("boom", 0.25)
        assert exc.residual == 0.25
