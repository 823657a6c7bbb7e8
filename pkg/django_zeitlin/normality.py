"""
Gaussianity tests with mean and variance estimated from the sample.
"""
from collections import namedtuple

import numpy as np
from scipy import stats

from .errors import DegenerateInput, InsufficientData

KsResult = namedtuple('KsResult', 'statistic passed')
AdResult = namedtuple('AdResult', 'statistic passed')

# 5% critical values of the modified statistics for the composite normal hypothesis
KS_CRITICAL = 0.895
AD_CRITICAL = 0.752

KS_MIN_SAMPLES = 20
AD_MIN_SAMPLES = 8


def _standardize(samples, minimum):
    x = np.asarray(samples, dtype=float).ravel()
    if x.size < minimum:
        raise InsufficientData('Need at least %d samples, got %d' % (minimum, x.size))
    deviation = x.std(ddof=1)
    if not deviation > 0:
        raise DegenerateInput('Samples have zero variance')
    return (x - x.mean()) / deviation


def ks_normality(samples):
    """Kolmogorov-Smirnov with the finite-sample factor sqrt(n) - 0.01 + 0.85 / sqrt(n)."""
    z = _standardize(samples, KS_MIN_SAMPLES)
    root = np.sqrt(z.size)
    statistic = stats.kstest(z, 'norm').statistic * (root - 0.01 + 0.85 / root)
    return KsResult(float(statistic), bool(statistic <= KS_CRITICAL))


def ad_normality(samples):
    z = _standardize(samples, AD_MIN_SAMPLES)
    n = float(z.size)
    statistic = stats.anderson(z, dist='norm').statistic * (1 + 4 / n - 25 / n ** 2)
    return AdResult(float(statistic), bool(statistic < AD_CRITICAL))


def _run_test(test, column):
    try:
        return test(column)
    except (DegenerateInput, InsufficientData):
        return None


def _pass_fraction(results):
    ran = [r for r in results if r is not None]
    return sum(r.passed for r in ran) / float(len(ran)) if ran else 0.0


def normality_survey(series, l_bar):
    """
    Runs both tests on the increments of every mode l > l_bar. Each test is
    skipped on its own when the increments are too few for it or have no
    variance; a mode neither test could run on counts as skipped.
    """
    increments = np.diff(series.values, axis=0)
    per_mode = []
    ks_results, ad_results = [], []
    skipped = 0
    for l in range(l_bar + 1, series.n):
        for m in range(-l, l + 1):
            column = increments[:, l * l + l + m - 1]
            ks, ad = _run_test(ks_normality, column), _run_test(ad_normality, column)
            if ks is None and ad is None:
                skipped += 1
                continue
            ks_results.append(ks)
            ad_results.append(ad)
            per_mode.append({
                'l': l, 'm': m,
                'ks': None if ks is None else ks.statistic, 'ks_pass': None if ks is None else ks.passed,
                'ad': None if ad is None else ad.statistic, 'ad_pass': None if ad is None else ad.passed,
            })
    return {
        'tested': len(per_mode),
        'skipped': skipped,
        'ks_tested': sum(r is not None for r in ks_results),
        'ad_tested': sum(r is not None for r in ad_results),
        'ks_pass_fraction': _pass_fraction(ks_results),
        'ad_pass_fraction': _pass_fraction(ad_results),
        'modes': per_mode,
    }
