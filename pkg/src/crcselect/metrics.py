"""Scalar figures of merit for error-detection performance.

Over a binary symmetric channel with crossover probability eps, the
undetected-error probability of a length-n code is

    P_ue = sum_i A_i eps^i (1-eps)^(n-i)
         = 2^-p [1 + sum_i B_i (1-2 eps)^i] - (1-eps)^n

in terms of the primal (A) or dual (B) weight counts.  The dual form is
cheap but cancels catastrophically when eps is tiny (the result can be
forty orders of magnitude below the operands), so below
``SMALL_EPS_THRESHOLD`` the leading primal terms are recovered exactly via
MacWilliams and summed in log space instead.

The first-addend approximation P_ue' = A_d eps^d (1-eps)^(n-d) is a lower
bound on P_ue and dominates it as eps -> 0.

Cumulative interval scores: S_d sums the minimum distance over a length
interval and S_Ad sums the minimum-weight counts; codes are ranked by
maximum S_d, ties broken by minimum S_Ad.
"""

import math
from dataclasses import dataclass

from .errors import DomainError
from .spectrum import _first_positive, _kraw_sums

#: Below this crossover probability the dual form is numerically unusable.
SMALL_EPS_THRESHOLD = 1e-4

#: How many weights past the minimum distance the small-eps path keeps.
_LEADING_TERMS_PAST_D = 8


def _check_eps(eps):
    if not 0.0 <= eps <= 0.5:
        raise DomainError(f"crossover probability {eps} outside [0, 1/2]")


def _log_term(count, w, n, eps):
    return math.exp(math.log(count) + w * math.log(eps) + (n - w) * math.log1p(-eps))


def _pue_from_primal_counts(counts, n, eps):
    if eps == 0.0:
        return 0.0
    return math.fsum(
        _log_term(c, w, n, eps) for w, c in counts.items() if w >= 1 and c
    )


def p_ue(dist, eps):
    """Undetected-error probability from a weight distribution.

    Accepts either side.  The primal side sums its terms in log space
    (stable for all eps).  The dual side uses the closed dual form for
    moderate eps and switches to exact MacWilliams-recovered leading
    terms below ``SMALL_EPS_THRESHOLD``.
    """
    _check_eps(eps)
    n = dist.n
    if dist.side == "primal":
        return _pue_from_primal_counts(dist.counts, n, eps)
    if eps == 0.0:
        return 0.0
    p = dist.log2_total()
    weights = sorted(dist.counts)
    counts = [dist.counts[w] for w in weights]
    if eps < SMALL_EPS_THRESHOLD:
        d, a_d = _first_positive(n, p, weights, counts)
        leading = {d: a_d}
        jmax = min(n, d + _LEADING_TERMS_PAST_D)
        for j, s in _kraw_sums(n, weights, counts):
            if d < j <= jmax and s:
                leading[j] = s >> p
            if j >= jmax:
                break
        return _pue_from_primal_counts(leading, n, eps)
    base = 1.0 - 2.0 * eps
    total = math.fsum(c * base**w for w, c in zip(weights, counts))
    return math.ldexp(total, -p) - math.exp(n * math.log1p(-eps))


def p_ue_first_term(d, a_d, n, eps):
    """First nonzero addend A_d eps^d (1-eps)^(n-d) of P_ue."""
    if d < 1 or a_d < 1:
        raise DomainError("need d >= 1 and a_d >= 1")
    _check_eps(eps)
    if eps == 0.0:
        return 0.0
    return _log_term(a_d, d, n, eps)


@dataclass(frozen=True)
class Scorecard:
    """Cumulative interval scores of one generator: S_d and S_Ad."""

    g: int
    min_len: int
    max_len: int
    s_d: int
    s_ad: int
    profile: object  # DistanceProfile


def cumulative_scores(profile):
    """Exact S_d and S_Ad sums over the profile's interval."""
    s_d = sum(d * (end - start + 1) for start, end, d in profile.runs)
    s_ad = sum(profile.a_d)
    return Scorecard(
        profile.g, profile.min_len, profile.max_len, s_d, s_ad, profile
    )


def improvement(p_ref, p_new):
    """Percent improvement of p_new over the reference: (ref-new)/ref * 100."""
    if p_ref <= 0.0:
        raise DomainError("reference probability must be positive")
    return (p_ref - p_new) / p_ref * 100.0
