import pytest

from qcconv import (ConvCode, WeightCapExceeded, bch_bound, dual_code,
                    free_distance, rank, row_modules_equal)
from qcconv.polymatrix import hstack, row_module_contains
from conftest import (F2, F3, P, brute_force_min_weight, cm,
                      dual_generator_three, fig_table_code, pm,
                      random_small_code, rate_two_thirds_code,
                      random_self_orthogonal_row)


def test_self_orthogonality_examples():
    assert fig_table_code(3).is_self_orthogonal()
    assert not ConvCode(pm(F2, [["1", "0", "0", "0"]])).is_self_orthogonal()
    assert ConvCode(pm(F2, [["1", "1"]])).is_self_orthogonal()


def test_catastrophic_examples():
    assert ConvCode(pm(F2, [["11", "11"]])).is_catastrophic()
    assert not ConvCode(dual_generator_three()).is_catastrophic()
    eye_pad = cm(F2, [[1, 0, 0], [0, 1, 0]])
    assert not ConvCode(eye_pad).is_catastrophic()


def test_generator_must_be_full_rank():
    with pytest.raises(ValueError, match="full row rank"):
        ConvCode(pm(F2, [["1", "1"], ["1", "1"]]))


def test_dual_of_repetition_is_itself():
    d = dual_code(ConvCode(pm(F2, [["1", "1"]])))
    assert d.generator == pm(F2, [["1", "1"]])


def test_dual_of_table_code():
    c = fig_table_code(3)
    d = dual_code(c)
    assert d.generator.shape == (3, 4)
    assert (d.generator * c.generator.adjoint_transpose()).is_zero
    assert rank(d.generator) + rank(c.generator) == 4


def test_dual_of_worked_rate_two_thirds():
    c = rate_two_thirds_code()
    d = dual_code(c)
    assert row_modules_equal(d.generator, dual_generator_three())


def test_dual_requires_non_catastrophic():
    with pytest.raises(ValueError, match="non-catastrophic"):
        dual_code(ConvCode(pm(F2, [["11", "11"]])))


def test_free_distance_examples():
    rep = free_distance(ConvCode(pm(F2, [["1", "1"]])))
    assert rep.d_free == 2 and rep.count == 1

    # the worked rate-2/3 generator: exhaustive detour search and an
    # independent truncated enumeration agree on 5
    c = rate_two_thirds_code()
    rep = free_distance(c)
    oracle_d, oracle_n = brute_force_min_weight(c, frames=4)
    assert rep.d_free == oracle_d == 5

    dual = dual_code(fig_table_code(3))
    rep = free_distance(dual)
    assert (rep.d_free, rep.count) == (3, 2)


def test_free_distance_preconditions():
    with pytest.raises(ValueError, match="non-catastrophic"):
        free_distance(ConvCode(pm(F2, [["11", "11"]])))
    # a non-catastrophic full-rank generator is automatically delay-free
    # (unit invariant factors force a full-rank constant term), so the
    # delay-free guard can only fire together with the catastrophic one
    with pytest.raises(ValueError):
        free_distance(ConvCode(pm(F2, [["01", "01"]])))


def test_weight_cap_exceeded():
    c = ConvCode(pm(F2, [["1", "1"]]))
    with pytest.raises(WeightCapExceeded):
        free_distance(c, weight_cap=1)


def test_free_distance_matches_oracle(rng):
    exact = 0
    for _ in range(40):
        c = random_small_code(rng)
        rep = free_distance(c)
        od, oc = brute_force_min_weight(c, frames=4)
        assert od >= rep.d_free
        if rep.min_detour_frames <= 4:
            assert rep.d_free == od
            exact += 1
        if rep.max_detour_frames <= 4:
            assert rep.count == oc
    assert exact >= 35


def test_self_orthogonal_implies_contained_in_dual(rng):
    for field, n in ((F2, 4), (F2, 3), (F3, 3)):
        g = random_self_orthogonal_row(rng, field, n, 2)
        if g is None:
            continue
        c = ConvCode(g)
        d = dual_code(c)
        for i in range(c.k):
            row = c.generator.submatrix([i], range(c.n))
            assert row_module_contains(d.generator, row, rational=True)


def test_dual_orthogonal_by_construction(rng):
    for _ in range(15):
        c = random_small_code(rng, max_n=5, max_deg=4)
        if c.is_catastrophic():
            continue
        d = dual_code(c)
        assert (d.generator * c.generator.adjoint_transpose()).is_zero
        assert d.k + c.k == c.n
        assert not d.is_catastrophic()
        assert d.is_delay_free()


def test_bch_bound_examples():
    assert bch_bound({1, 2}, 7) == 3
    assert bch_bound(set(), 7) == 1
    for d in range(2, 6):
        assert bch_bound(set(range(1, d)), 7) == d
    assert bch_bound({6, 0, 1}, 7) == 4       # wrap-around run
    assert bch_bound(set(range(5)), 5) == 6   # all residues
