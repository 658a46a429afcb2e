from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from whirlknight import (
    Cell,
    CycleCover,
    FractionalAssignment,
    NoCycleCoverError,
    WhirlDigraph,
    build_t1,
    build_t2,
    check_reduction,
    coil_interval,
    coil_of_cover,
    cover_from_json,
    cover_to_json,
    enumerate_cycle_covers,
    lp_decision_to_json,
    lp_feasible,
    search_tour,
    validate_assignment,
    verify_certificate,
)

from oracles import interval_oracle, weight_oracle

# Interval endpoints frozen from the independent scipy matching oracle
# before the solver was written.
FROZEN_INTERVALS = {
    3: (3, 3),
    4: (4, 4),
    6: (5, 5),
    12: (8, 12),
    14: (9, 13),
    16: (8, 16),
    18: (9, 17),
    20: (12, 20),
    22: (13, 21),
}


class TestCoilInterval:
    def test_n3_point_interval(self, dg):
        iv = coil_interval(dg(3))
        assert (iv.min_coil, iv.max_coil) == (3, 3)

    @pytest.mark.parametrize("n", [3, 4, 6, 12, 14, 16, 18])
    def test_frozen_values(self, n, dg):
        iv = coil_interval(dg(n))
        assert (iv.min_coil, iv.max_coil) == FROZEN_INTERVALS[n]

    @pytest.mark.parametrize("n", [6, 12, 16])
    def test_against_scipy_oracle(self, n, dg):
        iv = coil_interval(dg(n))
        assert (iv.min_coil, iv.max_coil) == interval_oracle(n)

    @pytest.mark.parametrize("n", [4, 6, 8, 10, 12, 14])
    def test_witness_covers_attain_endpoints(self, n, dg):
        g = dg(n)
        iv = coil_interval(g)
        assert coil_of_cover(g, iv.argmin) == iv.min_coil
        assert coil_of_cover(g, iv.argmax) == iv.max_coil

    def test_deterministic(self, dg):
        a = coil_interval(dg(12))
        b = coil_interval(dg(12))
        assert a.argmin.succ == b.argmin.succ
        assert a.argmax.succ == b.argmax.succ

    def test_no_cover_raises(self, dg):
        g = dg(3)
        dropped = len(g.arcs) - 1
        crippled = WhirlDigraph(
            n=3,
            vertices=g.vertices,
            arcs=g.arcs[:dropped],
            out_adj=tuple(tuple(a for a in row if a != dropped) for row in g.out_adj),
            in_adj=tuple(tuple(a for a in row if a != dropped) for row in g.in_adj),
            vertex_index=g.vertex_index,
        )
        with pytest.raises(NoCycleCoverError):
            coil_interval(crippled)


class TestLpFeasible:
    @pytest.mark.parametrize("n,c", [(3, 2), (4, 2), (6, 3), (12, 6), (14, 7)])
    def test_known_infeasible_cases(self, n, c, dg):
        assert not lp_feasible(dg(n), c).feasible

    @pytest.mark.parametrize("n,c", [(3, 3), (16, 8), (18, 9)])
    def test_feasible_cases(self, n, c, dg):
        decision = lp_feasible(dg(n), c)
        assert decision.feasible and decision.witness is not None

    def test_point_interval_witness(self, dg):
        decision = lp_feasible(dg(3), 3)
        assert all(v == 1 for v in decision.witness.x.values())
        validate_assignment(dg(3), decision.witness, 3)

    @settings(max_examples=6, deadline=None)
    @given(st.integers(min_value=8, max_value=12))
    def test_witness_exact_for_any_feasible_c(self, c):
        from whirlknight import build_digraph

        g = build_digraph(12)
        decision = lp_feasible(g, c)
        assert decision.feasible
        validate_assignment(g, decision.witness, c)  # zero residual or it raises

    def test_witness_lambda_exact_fraction(self, dg):
        g = dg(12)
        decision = lp_feasible(g, 9)  # interval [8, 12], lam = 3/4
        values = set(decision.witness.x.values())
        assert values <= {Fraction(3, 4), Fraction(1, 4), Fraction(1)}

    def test_infeasible_has_no_witness(self, dg):
        assert lp_feasible(dg(6), 3).witness is None

    def test_decision_json(self, dg):
        text = lp_decision_to_json(lp_feasible(dg(6), 3))
        assert text == '{"n":6,"c":3,"feasible":false,"min_coil":5,"max_coil":5}\n'

    @pytest.mark.parametrize("n", [4, 6, 12, 14])
    def test_dual_bound_from_certificate(self, n, dg):
        cert = build_t1(n) if n % 8 == 6 else build_t2(n)
        assert verify_certificate(dg(n), cert).valid
        bound = cert.sum_alpha() + cert.sum_beta()
        iv = coil_interval(dg(n))
        assert iv.min_coil >= bound == n // 2 + 1


class TestCoilOfCover:
    def test_n3_unique_cover(self, dg):
        g = dg(3)
        succ = {a.tail: a.head for a in g.arcs}
        assert coil_of_cover(g, CycleCover(succ=succ)) == 3

    def test_rotated_cover_matches_recount_oracle(self, dg):
        g = dg(6)
        base = coil_interval(g).argmin
        rot = CycleCover(
            succ={
                Cell(t.j, 5 - t.i): Cell(h.j, 5 - h.i) for t, h in base.succ.items()
            }
        )
        recount = sum(weight_oracle(6, t, h) for t, h in rot.succ.items())
        assert coil_of_cover(g, rot) == recount

    def test_rejects_partial_cover(self, dg):
        g = dg(3)
        succ = {a.tail: a.head for a in g.arcs}
        succ.pop(Cell(0, 0))
        with pytest.raises(ValueError):
            coil_of_cover(g, CycleCover(succ=succ))

    def test_rejects_non_permutation(self, dg):
        g = dg(3)
        succ = {a.tail: a.head for a in g.arcs}
        succ[Cell(0, 0)] = succ[Cell(0, 1)]
        with pytest.raises(ValueError):
            coil_of_cover(g, CycleCover(succ=succ))

    def test_rejects_non_arc_step(self, dg):
        g = dg(4)
        succ = {v: v for v in g.vertices}
        with pytest.raises(ValueError):
            coil_of_cover(g, CycleCover(succ=succ))


class TestCheckReduction:
    def test_n3_tour_satisfies_all_rows(self, dg):
        g = dg(3)
        tour = search_tour(g, budget=100)
        assert tour.coil == 3
        assert check_reduction(g, tour)

    def test_two_cycle_cover_rejected(self, dg):
        g = dg(4)
        cover = enumerate_cycle_covers(g, cap=10)[0]
        assert len(cover.cycles()) > 1
        cyc = cover.cycles()[0]

        class FakeTour:
            cells = tuple(cyc)
            coil = 0

        with pytest.raises(ValueError):
            check_reduction(g, FakeTour())

    def test_wrong_coil_field_fails(self, dg):
        g = dg(3)
        tour = search_tour(g, budget=100)

        class Mislabeled:
            cells = tour.cells
            coil = tour.coil + 1

        assert not check_reduction(g, Mislabeled())


class TestIntervalConsistency:
    @pytest.mark.parametrize("n", [3, 4])
    def test_enumerated_covers_within_interval(self, n, dg):
        g = dg(n)
        iv = coil_interval(g)
        coils = {coil_of_cover(g, cov) for cov in enumerate_cycle_covers(g, cap=10_000)}
        assert min(coils) == iv.min_coil
        assert max(coils) == iv.max_coil

    @pytest.mark.parametrize("n", [n for n in range(4, 31, 2) if n % 8 in (4, 6)])
    def test_certificate_interval_agreement(self, n, dg):
        # both certificate families force the coil functional past n/2
        assert n // 2 < coil_interval(dg(n)).min_coil

    @pytest.mark.parametrize("n,c", [(16, 8), (18, 9)])
    def test_tour_carrying_boards_are_lp_feasible(self, n, c, dg):
        assert coil_interval(dg(n)).min_coil <= c


class TestAssignmentValidation:
    def test_box_violation(self, dg):
        bad = FractionalAssignment(x={0: Fraction(3, 2)})
        with pytest.raises(ValueError):
            validate_assignment(dg(3), bad, 3)

    def test_degree_violation(self, dg):
        g = dg(3)
        bad = FractionalAssignment(x={a.id: Fraction(1, 2) for a in g.arcs})
        with pytest.raises(ValueError):
            validate_assignment(g, bad, 3)

    def test_coil_row_violation(self, dg):
        g = dg(3)
        full = FractionalAssignment(x={a.id: Fraction(1) for a in g.arcs})
        with pytest.raises(ValueError):
            validate_assignment(g, full, 2)
        validate_assignment(g, full, 3)


class TestMatchingSolver:
    """Fuzz the in-package Hungarian against scipy on general instances."""

    @settings(max_examples=40, deadline=None)
    @given(st.integers(min_value=0, max_value=10_000))
    def test_agrees_with_scipy(self, trial_seed):
        import numpy as np
        from scipy.optimize import linear_sum_assignment

        from whirlknight.polytope import _FORBIDDEN, NoCycleCoverError, _min_assignment

        rng = np.random.default_rng(trial_seed)
        n = int(rng.integers(1, 25))
        cost = rng.integers(0, 7, size=(n, n)).astype(np.int64)
        mask = rng.random((n, n)) < rng.uniform(0.15, 1.0)
        big = 1 << 30
        sci = np.where(mask, cost, big)
        rows, cols = linear_sum_assignment(sci)
        feasible = sci[rows, cols].max() < big
        try:
            got = _min_assignment(np.where(mask, cost, int(_FORBIDDEN)).astype(np.int64))
        except NoCycleCoverError:
            assert not feasible
            return
        assert feasible
        assert sorted(got.tolist()) == list(range(n))
        assert int(sci[np.arange(n), got].sum()) == int(sci[rows, cols].sum())


class TestCoverSerialization:
    @pytest.mark.parametrize("n", [3, 6])
    def test_round_trip(self, n, dg):
        g = dg(n)
        cover = coil_interval(g).argmin
        text = cover_to_json(n, cover)
        n2, back = cover_from_json(text)
        assert n2 == n and back == cover
        assert cover_to_json(n2, back) == text

    def test_rejects_malformed(self):
        with pytest.raises(ValueError):
            cover_from_json('{"n": 3}')
