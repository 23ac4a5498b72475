"""Shared test helpers."""


def ks_distance(samples, cdf):
    """Kolmogorov-Smirnov sup distance between an empirical sample and a cdf.

    samples need not be sorted; cdf is a callable evaluated pointwise.
    """
    xs = sorted(samples)
    n = len(xs)
    d = 0.0
    for i, x in enumerate(xs):
        f = cdf(x)
        d = max(d, f - i / n, (i + 1) / n - f)
    return d
