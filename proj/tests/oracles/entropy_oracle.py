#!/usr/bin/env python3
"""Independent high-precision oracle for the entropy estimator fixtures.

Evaluates the normalized plugin entropy and the Chao-Shen estimator with
mpmath at 60 decimal digits, straight from the defining formulas. The
printed values are frozen into the C++ tests; this script is the reference
the tests cite and must stay independent of the C++ implementation.

Run:  python3 tests/oracles/entropy_oracle.py
"""

from mpmath import mp, mpf, log

mp.dps = 60


def log2(x):
    return log(x) / log(2)


def plugin_entropy(probs, n_attributes):
    """H = -K * sum p log2 p, K = 1/log2(N_a), 0*log(0) = 0."""
    total = mpf(0)
    for p in probs:
        if p > 0:
            total -= mpf(p) * log2(mpf(p))
    return total / log2(n_attributes)


def chao_shen_entropy(counts, n_attributes):
    """Coverage-adjusted estimator on integer counts.

    m = singleton count; if m == N the degenerate case falls back to
    m = N - 1. p_hat = (1 - m/N) * count/N, each term divided by the
    inclusion probability 1 - (1 - p_hat)^N.
    """
    counts = [c for c in counts if c > 0]
    n_total = sum(counts)
    m = sum(1 for c in counts if c == 1)
    fallback = m == n_total
    if fallback:
        m = n_total - 1
    coverage = 1 - mpf(m) / n_total
    total = mpf(0)
    for c in counts:
        p_hat = coverage * mpf(c) / n_total
        if p_hat > 0:
            total += (-p_hat * log2(p_hat)) / (1 - (1 - p_hat) ** n_total)
    return total / log2(n_attributes), fallback


def show(label, value):
    print(f"{label} = {mp.nstr(value, 25)}")


if __name__ == "__main__":
    show("plugin (0.75, 0.25), Na=8", plugin_entropy([mpf(3) / 4, mpf(1) / 4], 8))

    h, fb = chao_shen_entropy([3, 1], 8)
    show("chao-shen {3,1}, Na=8", h)
    print(f"  singleton fallback: {fb}")

    h, fb = chao_shen_entropy([1, 1], 8)
    show("chao-shen {1,1}, Na=8", h)
    print(f"  singleton fallback: {fb}")

    h, fb = chao_shen_entropy([4], 8)
    show("chao-shen {4}, Na=8", h)
    print(f"  singleton fallback: {fb}")

    # Bias-ordering reference distribution and its true normalized entropy.
    bias_dist = [mpf(s) / 100 for s in (40, 20, 15, 10, 6, 4, 3, 2)]
    assert abs(sum(bias_dist) - 1) < mpf(10) ** -50
    show("true H of bias distribution, Na=8", plugin_entropy(bias_dist, 8))

    # Default simulator phase weights (entropy of each phase, Na=8).
    phases = {
        "early": [8, 1, 1, 0, 0, 0, 0, 0],
        "middle": [1, 1, 1, 1, 1, 1, 1, 1],
        "late": [1, 1, 0, 5, 1, 3, 1, 0],
    }
    for name, weights in phases.items():
        total = sum(weights)
        probs = [mpf(w) / total for w in weights]
        show(f"plugin of default '{name}' phase weights, Na=8", plugin_entropy(probs, 8))
