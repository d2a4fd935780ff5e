import pytest
from hypothesis import given, settings, strategies as st

from powersum.errors import StrategyDisagreement
from powersum.evaluate import STRATEGIES, Counter, bench, by_faulhaber, naive_limit, power_sum


@pytest.mark.parametrize("strategy", STRATEGIES)
def test_examples(strategy):
    assert power_sum(9, 3, strategy) == 513
    assert power_sum(3, 10, strategy) == 2025
    assert power_sum(0, 5, strategy) == 5
    assert power_sum(2, 0, strategy) == 0


@settings(max_examples=60)
@given(st.integers(0, 40), st.integers(0, 300))
def test_strategies_agree_with_brute_force(n, m):
    expected = sum(nu**n for nu in range(m))
    for s in STRATEGIES:
        assert power_sum(n, m, s) == expected


def test_naive_limit(monkeypatch):
    assert naive_limit() == 10**7
    monkeypatch.setenv("FAULHABER_NAIVE_LIMIT", "50")
    with pytest.raises(ValueError):
        power_sum(2, 51, "naive")
    assert power_sum(2, 50, "naive") == power_sum(2, 50, "bernoulli")
    # "all" skips the refused strategy instead of failing
    assert power_sum(2, 1000, "all") == power_sum(2, 1000, "faulhaber")


def test_unknown_strategy():
    with pytest.raises(ValueError):
        power_sum(2, 3, "magic")


def test_bench_counts_and_agreement():
    results = bench(101, 10**4, reps=1, strategies=["bernoulli", "faulhaber", "omega"])
    assert len({r.value for r in results}) == 1
    mults = {r.strategy: r.mults for r in results}
    assert mults["faulhaber"] < mults["bernoulli"]


def test_bench_detects_disagreement(monkeypatch):
    from powersum import evaluate

    monkeypatch.setitem(evaluate._DISPATCH, "omega", lambda n, m, c: 1)
    with pytest.raises(StrategyDisagreement):
        bench(5, 10, 1, strategies=["bernoulli", "omega"])


def test_faulhaber_counts_degree_in_y():
    c = Counter()
    by_faulhaber(101, 10**6, c)
    assert c.mults <= 55
