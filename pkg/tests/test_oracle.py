import itertools
import math

import pytest

from fermatrl.environment import LayeredMedium, path_time
from fermatrl.oracle import (
    NotConverged,
    OracleRefused,
    brute_force_optimum,
    fermat_continuous,
    rounding_box_optimum,
    snell_residual,
)


def scan(medium):
    """Plain loop over every state; independent of the vectorized scan."""
    best = None
    for s in itertools.product(range(medium.height + 1), repeat=medium.n_interfaces):
        t = path_time(medium, s)
        if best is None or t < best[1]:
            best = (s, t)
    return best


class TestBruteForce:
    def test_paper_medium(self, paper_medium):
        res = brute_force_optimum(paper_medium)
        assert res.best_state == (21, 37)
        assert res.best_time == path_time(paper_medium, (21, 37))

    def test_uniform(self, flat_medium):
        res = brute_force_optimum(flat_medium)
        assert res.best_state == (0, 0) and res.best_time == 150

    def test_alt_medium(self, alt_medium):
        # frozen from the plain loop scan
        res = brute_force_optimum(alt_medium)
        assert res.best_state == (8, 37)
        assert res.best_time == pytest.approx(313.03398170525554, rel=1e-13)

    @pytest.mark.parametrize(
        "indices, start, end, height",
        [
            ((1.0, 1.3, 1.6), (0, 0), (150, 50), 50),
            ((3.0, 1.0, 2.0), (0, 0), (150, 50), 50),
            ((2.0, 1.0), (0, 3), (100, 17), 20),
            ((1.0, 2.5, 1.2, 1.7), (0, 12), (200, 2), 14),
        ],
    )
    def test_matches_loop_scan(self, indices, start, end, height):
        m = LayeredMedium(indices, 50, height, start, end)
        state, t = scan(m)
        res = brute_force_optimum(m)
        assert res.best_state == state
        assert res.best_time == pytest.approx(t, rel=1e-14)

    def test_lexicographic_ties(self):
        # endpoints halfway between grid rows make neighbouring rows tie exactly
        m = LayeredMedium((1.0, 1.0), 50, 10, (0, 4.5), (100, 4.5))
        assert path_time(m, (4,)) == path_time(m, (5,))
        assert brute_force_optimum(m).best_state == (4,)
        m = LayeredMedium((1.0, 1.0, 1.0), 50, 10, (0, 4.5), (150, 4.5))
        assert path_time(m, (4, 4)) == path_time(m, (5, 5))
        assert brute_force_optimum(m).best_state == (4, 4)

    def test_refuses_large_space(self):
        m = LayeredMedium((1.0,) * 5, 50, 10**6, (0, 0), (250, 0))
        with pytest.raises(OracleRefused):
            brute_force_optimum(m)

    def test_custom_cap(self, paper_medium):
        with pytest.raises(OracleRefused):
            brute_force_optimum(paper_medium, max_states=100)


class TestSnellResidual:
    def test_collinear(self, flat_medium):
        m = LayeredMedium((1.0, 1.0, 1.0), 50, 50, (0, 0), (150, 50))
        assert snell_residual(m, (50 / 3, 100 / 3)) < 1e-15

    def test_grid_optimum(self, paper_medium):
        r = snell_residual(paper_medium, (21, 37))
        assert 0 < r <= 0.02

    def test_far_state(self, paper_medium):
        # only the last slab rises: 1.6 * 50 / sqrt(5000)
        assert snell_residual(paper_medium, (0, 0)) == pytest.approx(1.6 / math.sqrt(2))
        assert snell_residual(paper_medium, (0, 0)) > 0.1

    def test_matches_finite_difference_gradient(self, paper_medium):
        ys = [13.7, 29.2]
        h = 1e-5
        grads = []
        for i in range(2):
            up = list(ys); up[i] += h
            dn = list(ys); dn[i] -= h
            grads.append((path_time(paper_medium, up) - path_time(paper_medium, dn)) / (2 * h))
        assert snell_residual(paper_medium, ys) == pytest.approx(max(map(abs, grads)), rel=1e-6)


class TestFermatContinuous:
    def test_uniform_collinear(self):
        m = LayeredMedium((1.7, 1.7, 1.7, 1.7), 50, 80, (0, 10), (200, 70))
        res = fermat_continuous(m)
        assert res.best_state == pytest.approx((25, 40, 55), abs=1e-8)
        assert res.snell_residual < 1e-9

    def test_paper_medium(self, paper_medium):
        res = fermat_continuous(paper_medium)
        # the solver output rounds to the grid optimum
        assert tuple(round(y) for y in res.best_state) == (21, 37)
        assert res.best_state == pytest.approx((21.416, 37.306), abs=1e-3)
        assert res.snell_residual < 1e-9

    def test_relaxation_bound(self, paper_medium, alt_medium):
        for m in (paper_medium, alt_medium):
            assert fermat_continuous(m).best_time <= brute_force_optimum(m).best_time

    def test_rounding_box_contains_grid_optimum(self, paper_medium, alt_medium, flat_medium):
        for m in (paper_medium, alt_medium, flat_medium):
            cont = fermat_continuous(m)
            assert rounding_box_optimum(m, cont.best_state).best_state == brute_force_optimum(m).best_state

    def test_tighter_tol_no_worse(self, alt_medium):
        loose = fermat_continuous(alt_medium, tol=1e-4)
        tight = fermat_continuous(alt_medium, tol=1e-12)
        assert tight.best_time <= loose.best_time + 1e-12

    def test_iteration_cap(self, alt_medium):
        with pytest.raises(NotConverged) as info:
            fermat_continuous(alt_medium, tol=1e-300, max_sweeps=3)
        assert len(info.value.best_ys) == 2
        assert info.value.best_time == pytest.approx(path_time(alt_medium, info.value.best_ys))

    def test_bad_tol(self, paper_medium):
        with pytest.raises(ValueError):
            fermat_continuous(paper_medium, tol=0)
