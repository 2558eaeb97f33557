from fractions import Fraction

from parbelos.fuzz import (
    _case_rng,
    height_scale,
    rand_cusps,
    rand_rotation,
    run_all,
    run_converse_lambert_fuzz,
    run_invariance_fuzz,
    run_lambert_fuzz,
    run_proof_replay_fuzz,
    run_sondow_fuzz,
    run_tangency_fuzz,
)

F = Fraction


def test_cusp_generator_height_bound():
    """Every cusp coordinate has height <= 10^4 at the default scale."""
    scale = height_scale(10_000)
    for i in range(300):
        rng = _case_rng(99, i)
        c1, c2, c3, side = rand_cusps(rng, scale)
        for p in (c1, c2, c3):
            for coord in (p.x, p.y):
                assert abs(coord.numerator) <= 10_000
                assert coord.denominator <= 10_000
        assert side in ("left", "right")


def test_rotation_generator_is_always_valid():
    from parbelos.figure import rational_sqrt

    for i in range(200):
        rng = _case_rng(7, i)
        p, q = rand_rotation(rng)
        assert rational_sqrt(p * p + q * q) is not None


def test_suites_run_clean():
    assert run_sondow_fuzz(40, seed=1).passed
    assert run_tangency_fuzz(40, seed=2).passed
    assert run_lambert_fuzz(25, seed=3).passed
    assert run_converse_lambert_fuzz(3, seed=4).passed
    assert run_proof_replay_fuzz(25, seed=5).passed
    assert run_invariance_fuzz(10, seed=6).passed


def test_deterministic_across_runs():
    first = run_sondow_fuzz(20, seed=123)
    second = run_sondow_fuzz(20, seed=123)
    assert first.failures == second.failures == []
    assert first.cases == second.cases


def test_run_all_shape():
    results = run_all(cases=10, seed=0)
    assert len(results) == 8
    assert all(r.passed for r in results)
    names = [r.name for r in results]
    assert "sondow+corollaries" in names and "FT = HT" in names
