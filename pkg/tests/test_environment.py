import math

import pytest

from fermatrl.environment import (
    DOWN,
    UP,
    LayeredMedium,
    MoveAction,
    apply_action,
    check_state,
    path_time,
    r_score,
    reward,
    segment_lengths,
)


class TestLayeredMedium:
    def test_counts(self, paper_medium):
        assert paper_medium.n_interfaces == 2
        assert paper_medium.n_actions == 4
        assert paper_medium.width == 150

    @pytest.mark.parametrize(
        "kwargs, field",
        [
            (dict(indices=(1.0, -1.0, 1.0)), "indices"),
            (dict(indices=(1.0,), end=(50, 50)), "indices"),
            (dict(slab_width=0), "slab_width"),
            (dict(end=(149, 50)), "end"),
            (dict(start=(1, 0)), "start"),
            (dict(end=(150, 51)), "end"),
        ],
    )
    def test_invalid(self, kwargs, field):
        base = dict(indices=(1.0, 1.3, 1.6), slab_width=50, height=50, start=(0, 0), end=(150, 50))
        base.update(kwargs)
        with pytest.raises(ValueError, match=field):
            LayeredMedium(**base)

    def test_mirror(self, paper_medium):
        m = paper_medium.mirrored()
        assert m.start == (0, 50) and m.end == (150, 0)


def test_check_state(paper_medium):
    assert check_state(paper_medium, [3, 4]) == (3, 4)
    with pytest.raises(ValueError):
        check_state(paper_medium, (1, 2, 3))
    with pytest.raises(ValueError):
        check_state(paper_medium, (51, 0))


class TestSegmentLengths:
    def test_horizontal(self, flat_medium):
        assert segment_lengths(flat_medium, (0, 0)) == [50, 50, 50]

    def test_corner_to_corner(self, paper_medium):
        assert segment_lengths(paper_medium, (0, 0)) == pytest.approx([50, 50, math.sqrt(5000)])

    def test_theory_state(self, paper_medium):
        expected = [math.sqrt(50**2 + 21**2), math.sqrt(50**2 + 16**2), math.sqrt(50**2 + 13**2)]
        got = segment_lengths(paper_medium, (21, 37))
        assert got == pytest.approx(expected)
        assert got == pytest.approx([54.231, 52.498, 51.662], abs=1e-3)

    def test_dimension_mismatch(self, paper_medium):
        with pytest.raises(ValueError):
            segment_lengths(paper_medium, (1,))


class TestPathTime:
    def test_uniform(self, flat_medium):
        assert path_time(flat_medium, (0, 0)) == 150

    def test_initial_state(self, paper_medium):
        assert path_time(paper_medium, (0, 0)) == pytest.approx(50 + 65 + 1.6 * math.sqrt(5000))
        assert path_time(paper_medium, (0, 0)) == pytest.approx(228.137, abs=1e-3)

    def test_theory_state(self, paper_medium):
        assert path_time(paper_medium, (21, 37)) == pytest.approx(205.14, abs=5e-3)


class TestApplyAction:
    def test_clamp_low(self, paper_medium):
        assert apply_action(paper_medium, (0, 0), MoveAction(0, DOWN)) == (0, 0)

    def test_step(self, paper_medium):
        assert apply_action(paper_medium, (21, 37), MoveAction(1, UP)) == (21, 38)

    def test_clamp_high(self, paper_medium):
        assert apply_action(paper_medium, (50, 50), MoveAction(0, UP)) == (50, 50)

    def test_bad_interface(self, paper_medium):
        with pytest.raises(ValueError):
            apply_action(paper_medium, (0, 0), MoveAction(2, UP))


def test_action_index_roundtrip():
    labels = [MoveAction.from_index(i).label for i in range(4)]
    assert labels == ["y1+", "y1-", "y2+", "y2-"]
    for i in range(6):
        a = MoveAction.from_index(i)
        assert a.index == i
        assert MoveAction.from_label(a.label) == a


class TestScore:
    def test_unit(self):
        assert r_score(0.0, 1.0) == 1.0

    def test_normalized(self):
        t = 228.137
        assert r_score(t, math.exp(t)) == pytest.approx(1.0, rel=1e-12)
        assert r_score(t, log_scale=t) == 1.0

    def test_monotone(self):
        assert r_score(10.0, 2.0) > r_score(11.0, 2.0)

    def test_bad_scale(self):
        with pytest.raises(ValueError):
            r_score(1.0, 0.0)

    @pytest.mark.parametrize("cur, best, expected", [(0.5, 0.5, 0.0), (0.7, 0.5, 0.2), (0.3, 0.5, -0.2)])
    def test_reward(self, cur, best, expected):
        assert reward(cur, best) == pytest.approx(expected)
