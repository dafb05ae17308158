"""Small statistics used by the harness and the sampler tests."""

from __future__ import annotations

# 99.9th percentile of the chi-square distribution, by degrees of freedom.
# Only the values the test suite needs; extend as required.
CHI_SQUARE_CRITICAL_999 = {
    1: 10.8276,
    2: 13.8155,
    3: 16.2662,
    4: 18.4668,
    5: 20.5150,
}


def ks_uniformity(samples) -> float:
    """Kolmogorov-Smirnov distance between the empirical CDF of samples
    (values in [0,1]) and the uniform CDF."""
    xs = sorted(samples)
    m = len(xs)
    if m == 0:
        raise ValueError("need at least one sample")
    d = 0.0
    for i, x in enumerate(xs):
        hi = (i + 1) / m - x
        lo = x - i / m
        if hi > d:
            d = hi
        if lo > d:
            d = lo
    return d


def chi_square_statistic(counts, expected) -> float:
    """Sum of (observed - expected)^2 / expected."""
    counts = list(counts)
    expected = list(expected)
    if len(counts) != len(expected) or not counts:
        raise ValueError("counts and expected must be equal-length and nonempty")
    stat = 0.0
    for o, e in zip(counts, expected):
        if e <= 0:
            raise ValueError("expected counts must be positive")
        diff = o - e
        stat += diff * diff / e
    return stat
