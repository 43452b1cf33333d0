import pytest

from inoue.errors import ConfigError, Rejection
from inoue.linalg import IntMatrix, IntPoly
from inoue.search import SearchConfig, make_nondiagonalizable, search_type_I, trial_rng
from inoue.spectral import check_type_I, is_diagonalizable

from conftest import F, G


@pytest.mark.parametrize("mode, dim", [("companion", 3), ("conjugated-companion", 5), ("block-nondiag", 7)])
def test_search_deterministic(mode, dim):
    cfg = SearchConfig(dim=dim, count=3, rng_seed=42, mode=mode)
    a, b = search_type_I(cfg), search_type_I(cfg)
    assert a.matrices == b.matrices
    assert [h.trial for h in a] == [h.trial for h in b]
    assert len(a) == 3
    for M in a.matrices:
        assert M.dim == dim
        check_type_I(M, 32)
    if mode == "block-nondiag":
        assert not any(is_diagonalizable(M).diagonalizable for M in a.matrices)


def test_trials_are_independent_of_order():
    cfg = SearchConfig(dim=5, count=4, rng_seed=9)
    res = search_type_I(cfg)
    last = res.hits[-1]
    rng = trial_rng(9, last.trial)
    again = trial_rng(9, last.trial)
    assert list(rng.integers(0, 100, 5)) == list(again.integers(0, 100, 5))
    assert search_type_I(SearchConfig(dim=5, count=4, rng_seed=10)).matrices != res.matrices


@pytest.mark.parametrize("kwargs", [
    {"dim": 4}, {"dim": 1}, {"dim": 3, "entry_bound": 0}, {"dim": 3, "count": -1},
    {"dim": 3, "mode": "nope"}, {"dim": 5, "mode": "block-nondiag"},
])
def test_config_errors(kwargs):
    with pytest.raises(ConfigError):
        SearchConfig(**kwargs)


def test_make_nondiagonalizable_twenty_outputs():
    seen = set()
    for seed in range(20):
        M = make_nondiagonalizable(F, G, seed=seed)
        assert M.dim == 7
        assert M.char_poly() == F * G * G
        assert not is_diagonalizable(M).diagonalizable
        check_type_I(M, 32)
        seen.add(M)
    assert len(seen) > 1


def test_make_nondiagonalizable_other_blocks():
    g = IntPoly((1, 0, 1))  # x^2 + 1
    M = make_nondiagonalizable(F, g, conjugator=IntMatrix.identity(7))
    assert M == IntMatrix.block_diag(IntMatrix.companion(F), IntMatrix.companion(g * g))
    M = make_nondiagonalizable(IntPoly((-1, 1, -1, -1, -1, 1)), G, seed=3)
    assert M.dim == 9 and not is_diagonalizable(M).diagonalizable


@pytest.mark.parametrize("f, g, reason", [
    (IntPoly((-1, 0, -1, 2)), G, "not-monic"),
    (IntPoly((-1, 0, 1)), G, "f-degree-even"),
    (IntPoly((-1, -3, 0, 1)), G, "f-real-root-count!=1"),
    (IntPoly((1, 0, -1, 1)), G, "f(0)!=-1"),
    (F, IntPoly((1, -3, 1)), "extra-real-roots"),
    (F, IntPoly((2, 0, 1)), "det!=1"),
])
def test_make_nondiagonalizable_rejections(f, g, reason):
    with pytest.raises(Rejection) as exc:
        make_nondiagonalizable(f, g)
    assert exc.value.reason == reason


def test_bad_conjugator():
    with pytest.raises(Rejection) as exc:
        make_nondiagonalizable(F, G, conjugator=IntMatrix.diag(2, 1, 1, 1, 1, 1, 1))
    assert exc.value.reason == "conjugator-not-unimodular"
